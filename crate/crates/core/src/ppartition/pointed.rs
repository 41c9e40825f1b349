use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::poset::{bit, bits, LabeledPoset};
use crate::qsym::{Basis, QSymElement, Rational};
use crate::Guards;

/// Mask of indices strictly below `i`.
fn below(i: usize) -> u64 {
    bit(i) - 1
}

/// The `I`/`J` analysis of a convex set `s` of elements, with the induced
/// labeling. Every cover of the induced subposet is a cover of `p`.
#[derive(Clone, Copy, Debug)]
struct MaskDiagnosis {
    gbs: bool,
    i: u64,
    j: u64,
    rooted: bool,
}

impl MaskDiagnosis {
    fn sign(&self) -> i64 {
        if !self.rooted {
            0
        } else if self.i.count_ones() % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

fn diagnose(p: &LabeledPoset, s: u64) -> MaskDiagnosis {
    let mut gbs = true;
    let mut natural_below = 0u64;
    let mut strict_above = 0u64;
    for b in bits(s) {
        let lo = below(b);
        if p.down(b) & s & lo != 0 && p.up(b) & s & lo != 0 {
            gbs = false;
        }
        if p.cover_down(b) & s & lo != 0 {
            natural_below |= bit(b);
        }
        if p.cover_up(b) & s & lo != 0 {
            strict_above |= bit(b);
        }
    }
    let mut i = 0u64;
    let mut j = 0u64;
    for x in bits(s) {
        if (p.down(x) | bit(x)) & natural_below == 0 {
            i |= bit(x);
            if (p.up(x) | bit(x)) & strict_above == 0 {
                j |= bit(x);
            }
        }
    }
    let rooted = gbs && s != 0 && j == s & s.wrapping_neg();
    MaskDiagnosis { gbs, i, j, rooted }
}

/// Whether a labeled poset is a rooted generalized border strip, with the sets
/// used to evaluate `Min1` of its generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedDiagnosis {
    /// No chain `a ≺ b ≺ c` with `ω(a) < ω(b) > ω(c)`.
    pub is_gbs: bool,
    /// Elements whose principal order ideal has only strict covers.
    pub i: BTreeSet<usize>,
    /// Elements of `I` whose principal filter has only natural covers.
    pub j: BTreeSet<usize>,
    /// `is_gbs` and `J = {1}`.
    pub rooted: bool,
    /// `Min1(K_(P,ω))`: `(-1)^{|I|-1}` when rooted, else 0.
    pub min1_value: Rational,
}

pub fn rooted_diagnosis(p: &LabeledPoset) -> RootedDiagnosis {
    let d = diagnose(p, p.full_mask());
    let labels = |m: u64| bits(m).map(|i| i + 1).collect::<BTreeSet<_>>();
    RootedDiagnosis {
        is_gbs: d.gbs,
        i: labels(d.i),
        j: labels(d.j),
        rooted: d.rooted,
        min1_value: Rational::from_integer(BigInt::from(d.sign())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Minus,
    Star,
    Plus,
}

impl Mark {
    fn symbol(self) -> char {
        match self {
            Mark::Minus => '-',
            Mark::Star => '*',
            Mark::Plus => '+',
        }
    }
}

/// A starred `(P, ω)`-partition: each label gets a level `1..=k` and a mark.
///
/// Within a level, an element is `-` when it lies below a strict edge of that
/// level, `+` when it lies above a natural edge, and `*` (ambiguous) otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StarredPartition {
    levels: Vec<usize>,
    marks: Vec<Mark>,
}

impl StarredPartition {
    /// Builds the starred partition with the given level of each label, for a
    /// level assignment whose prefixes are order ideals.
    pub fn from_levels(p: &LabeledPoset, levels: Vec<usize>) -> Result<Self> {
        if levels.len() != p.size() {
            return Err(Error::Parse(format!(
                "{} levels for a poset on {} elements",
                levels.len(),
                p.size()
            )));
        }
        let k = levels.iter().copied().max().unwrap_or(0);
        let used: BTreeSet<usize> = levels.iter().copied().collect();
        if used.len() != k || used.contains(&0) {
            return Err(Error::Parse(format!(
                "levels {levels:?} are not onto 1..={k}"
            )));
        }
        for &(a, b) in p.covers() {
            if levels[a - 1] > levels[b - 1] {
                return Err(Error::Parse(format!(
                    "levels {levels:?} decrease along {a} ⋖ {b}"
                )));
            }
        }
        let marks = (0..p.size())
            .map(|x| {
                let same = (0..p.size())
                    .filter(|&y| levels[y] == levels[x])
                    .fold(0u64, |m, y| m | bit(y));
                let lo = below(x);
                if p.cover_up(x) & same & lo != 0 {
                    Mark::Minus
                } else if p.cover_down(x) & same & lo != 0 {
                    Mark::Plus
                } else {
                    Mark::Star
                }
            })
            .collect();
        Ok(StarredPartition { levels, marks })
    }

    pub fn level(&self, label: usize) -> usize {
        self.levels[label - 1]
    }

    pub fn mark(&self, label: usize) -> Mark {
        self.marks[label - 1]
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn num_levels(&self) -> usize {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// Labels at each level, bottom level first.
    pub fn level_sets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_levels()];
        for (i, &l) in self.levels.iter().enumerate() {
            out[l - 1].push(i + 1);
        }
        out
    }

    /// Sizes of the levels.
    pub fn weight(&self) -> Composition {
        Composition::new(self.level_sets().iter().map(Vec::len).collect()).expect("levels are onto")
    }

    /// Number of starred elements at each level.
    pub fn ambiguity(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_levels()];
        for (i, &l) in self.levels.iter().enumerate() {
            if self.marks[i] == Mark::Star {
                out[l - 1] += 1;
            }
        }
        out
    }

    /// `(-1)^{#minus}`.
    pub fn sign(&self) -> i32 {
        if self.marks.iter().filter(|&&m| m == Mark::Minus).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_pointed(&self) -> bool {
        self.ambiguity().iter().all(|&a| a == 1)
    }
}

impl fmt::Display for StarredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (l, m)) in self.levels.iter().zip(&self.marks).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}{}", i + 1, l, m.symbol())?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for StarredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_guard(p: &LabeledPoset, guards: &Guards, what: &'static str) -> Result<()> {
    if p.size() > guards.linear_extensions {
        return Err(Error::GuardExceeded {
            what,
            size: p.size(),
            limit: guards.linear_extensions,
        });
    }
    Ok(())
}

/// Memoized level signs: `±1` for rooted convex sets, 0 otherwise.
struct Levels<'a> {
    p: &'a LabeledPoset,
    memo: HashMap<u64, i64>,
}

impl<'a> Levels<'a> {
    fn new(p: &'a LabeledPoset) -> Self {
        Levels {
            p,
            memo: HashMap::new(),
        }
    }

    fn sign(&mut self, s: u64) -> i64 {
        let p = self.p;
        *self.memo.entry(s).or_insert_with(|| diagnose(p, s).sign())
    }

    /// Nonempty `s` outside `ideal` with `ideal ∪ s` an order ideal and `s` rooted.
    fn successors(&mut self, ideal: u64) -> Vec<(u64, i64)> {
        let free = self.p.full_mask() & !ideal;
        let mut out = Vec::new();
        let mut s = free;
        while s != 0 {
            let top = ideal | s;
            if bits(s).all(|x| self.p.down(x) & !top == 0) {
                let sign = self.sign(s);
                if sign != 0 {
                    out.push((s, sign));
                }
            }
            s = (s - 1) & free;
        }
        out.sort_unstable();
        out
    }
}

/// `K_(P,ω) = Σ sign(f*) ψ_comp(f*)` over pointed `(P, ω)`-partitions,
/// computed by dynamic programming over order ideals.
pub fn psi_expansion_pointed(p: &LabeledPoset, guards: &Guards) -> Result<QSymElement> {
    check_guard(p, guards, "psi_expansion_pointed")?;
    let full = p.full_mask();
    let mut levels = Levels::new(p);
    let mut dp: BTreeMap<u32, HashMap<u64, HashMap<Vec<usize>, i64>>> = BTreeMap::new();
    dp.entry(0)
        .or_default()
        .insert(0, HashMap::from([(Vec::new(), 1)]));
    let mut out = QSymElement::zero(Basis::Psi);
    while let Some((_, layer)) = dp.pop_first() {
        for (ideal, weights) in layer {
            if ideal == full {
                for (w, c) in weights {
                    out.add_term(
                        Composition::new(w).expect("levels are nonempty"),
                        Rational::from_integer(BigInt::from(c)),
                    );
                }
                continue;
            }
            for (s, sign) in levels.successors(ideal) {
                let next = ideal | s;
                let target = dp
                    .entry(next.count_ones())
                    .or_default()
                    .entry(next)
                    .or_default();
                for (w, c) in &weights {
                    let mut w2 = w.clone();
                    w2.push(s.count_ones() as usize);
                    *target.entry(w2).or_insert(0) += c * sign;
                }
            }
        }
    }
    if full == 0 {
        return Ok(QSymElement::one(Basis::Psi));
    }
    Ok(out)
}

/// Every pointed `(P, ω)`-partition: ordered splittings into levels whose
/// prefixes are order ideals and whose levels are rooted.
pub fn enumerate_pointed_partitions(
    p: &LabeledPoset,
    guards: &Guards,
) -> Result<Vec<StarredPartition>> {
    check_guard(p, guards, "enumerate_pointed_partitions")?;
    fn rec(
        levels_memo: &mut Levels<'_>,
        ideal: u64,
        assignment: &mut Vec<usize>,
        depth: usize,
        out: &mut Vec<StarredPartition>,
    ) {
        let p = levels_memo.p;
        if ideal == p.full_mask() {
            out.push(StarredPartition::from_levels(p, assignment.clone()).expect("valid levels"));
            return;
        }
        for (s, _) in levels_memo.successors(ideal) {
            for x in bits(s) {
                assignment[x] = depth + 1;
            }
            rec(levels_memo, ideal | s, assignment, depth + 1, out);
        }
    }
    let mut out = Vec::new();
    let mut levels = Levels::new(p);
    rec(&mut levels, 0, &mut vec![0; p.size()], 0, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{all_labeled_posets, naturally_labeled_posets};
    use crate::ppartition::k_generating_function;
    use crate::qsym::{convert, min1};
    use num_traits::{One, Zero};

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn v_poset() -> LabeledPoset {
        LabeledPoset::new(3, &[(3, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn v_poset_pointed_partitions() {
        let g = Guards::DEFAULT;
        let parts = enumerate_pointed_partitions(&v_poset(), &g).unwrap();
        assert_eq!(parts.len(), 5);
        let mut summary: Vec<(Composition, i32)> =
            parts.iter().map(|f| (f.weight(), f.sign())).collect();
        summary.sort();
        assert_eq!(
            summary,
            vec![
                (c(&[3]), -1),
                (c(&[1, 2]), -1),
                (c(&[1, 2]), 1),
                (c(&[1, 1, 1]), 1),
                (c(&[1, 1, 1]), 1),
            ]
        );
        assert!(parts.iter().all(StarredPartition::is_pointed));
        let k = psi_expansion_pointed(&v_poset(), &g).unwrap();
        assert_eq!(k.to_string(), "-1*psi[3] + 2*psi[1,1,1]");
    }

    #[test]
    fn seven_element_gbs_poset() {
        let p = LabeledPoset::new(
            7,
            &[
                (7, 6),
                (7, 2),
                (3, 2),
                (6, 5),
                (1, 2),
                (1, 4),
                (2, 5),
                (4, 5),
            ],
        )
        .unwrap();
        let d = rooted_diagnosis(&p);
        assert!(d.is_gbs);
        assert_eq!(d.j, BTreeSet::from([1]));
        assert_eq!(d.i, BTreeSet::from([1, 3, 6, 7]));
        let i_poset_max: BTreeSet<usize> =
            d.i.iter()
                .copied()
                .filter(|&x| !d.i.iter().any(|&y| p.lt(x, y)))
                .collect();
        assert_eq!(i_poset_max, BTreeSet::from([1, 3, 6]));
    }

    #[test]
    fn diagnosis_small_cases() {
        let d = rooted_diagnosis(&LabeledPoset::antichain(2));
        assert!(!d.rooted);
        assert!(d.min1_value.is_zero());
        let d = rooted_diagnosis(&LabeledPoset::new(3, &[(1, 2), (1, 3)]).unwrap());
        assert!(d.rooted);
        assert!(d.min1_value.is_one());
    }

    #[test]
    fn pointed_route_matches_conversion_on_all_small_posets() {
        let g = Guards::DEFAULT;
        for n in 0..=4 {
            for p in all_labeled_posets(n, &g).unwrap() {
                let k = k_generating_function(&p, &g).unwrap();
                let pointed = psi_expansion_pointed(&p, &g).unwrap();
                assert!(convert(&k, Basis::Psi).same_representation(&pointed), "{p}");
                let listed = enumerate_pointed_partitions(&p, &g).unwrap();
                let mut sum = QSymElement::zero(Basis::Psi);
                for f in &listed {
                    assert!(f.is_pointed(), "{p} {f}");
                    sum.add_term(f.weight(), Rational::from_integer(f.sign().into()));
                }
                assert!(sum.same_representation(&pointed), "{p}");
                if n > 0 {
                    assert_eq!(rooted_diagnosis(&p).min1_value, min1(&k).unwrap(), "{p}");
                }
            }
        }
    }

    #[test]
    fn natural_posets_have_nonnegative_counts() {
        let g = Guards::DEFAULT;
        for p in naturally_labeled_posets(5, &g).unwrap() {
            let k = psi_expansion_pointed(&p, &g).unwrap();
            assert!(k
                .terms()
                .values()
                .all(|v| v.is_integer() && *v > Rational::zero()));
            let listed = enumerate_pointed_partitions(&p, &g).unwrap();
            assert!(listed.iter().all(|f| f.sign() == 1));
        }
    }
}
