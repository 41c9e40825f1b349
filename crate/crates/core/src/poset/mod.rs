//! Finite posets on the labels `1..=n`.
//!
//! An element is identified with its label, so a labeled poset is just a set of
//! cover relations. A cover `a ⋖ b` is strict when `a > b` and natural when
//! `a < b`.

mod format;
mod generate;
mod series_parallel;
mod skew;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::composition::{check_permutation, next_permutation};
use crate::error::{Error, Result};
use crate::Guards;

pub use format::PosetFile;
pub use generate::{all_labeled_posets, naturally_labeled_posets};
pub use series_parallel::{
    enumerate_series_parallel, series_parallel_trees, sp_decomposition, SpTree,
};
pub use skew::{enumerate_skew_shapes, skew_cell_labels, skew_shape_poset, Cell, SkewShape};

/// Largest supported poset; element sets are stored as 64-bit masks.
pub const MAX_ELEMENTS: usize = 64;

pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledPoset {
    n: usize,
    covers: Vec<(usize, usize)>,
    up: Vec<u64>,
    down: Vec<u64>,
    cover_up: Vec<u64>,
    cover_down: Vec<u64>,
}

impl LabeledPoset {
    /// Builds the poset generated by `relations` (pairs `a ≺ b` of labels).
    /// Redundant relations are dropped; cycles are rejected.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut succ = vec![0u64; n];
        for &(a, b) in relations {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::LabelOutOfRange { label: x, n });
                }
            }
            if a == b {
                return Err(Error::Cyclic(a));
            }
            succ[a - 1] |= bit(b - 1);
        }
        // Kahn's algorithm for a topological order.
        let mut indeg = vec![0usize; n];
        for s in &succ {
            for j in bits(*s) {
                indeg[j] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(i) = ready.pop() {
            order.push(i);
            for j in bits(succ[i]) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push(j);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::Cyclic(stuck + 1));
        }
        let mut up = vec![0u64; n];
        for &i in order.iter().rev() {
            let mut acc = 0;
            for j in bits(succ[i]) {
                acc |= bit(j) | up[j];
            }
            up[i] = acc;
        }
        Ok(Self::from_up_sets(up))
    }

    /// Builds from transitively closed strict up-sets.
    pub(crate) fn from_up_sets(up: Vec<u64>) -> Self {
        let n = up.len();
        let mut down = vec![0u64; n];
        for (i, &u) in up.iter().enumerate() {
            for j in bits(u) {
                down[j] |= bit(i);
            }
        }
        let mut cover_up = vec![0u64; n];
        let mut cover_down = vec![0u64; n];
        let mut covers = Vec::new();
        for i in 0..n {
            for j in bits(up[i]) {
                if up[i] & down[j] == 0 {
                    cover_up[i] |= bit(j);
                    cover_down[j] |= bit(i);
                    covers.push((i + 1, j + 1));
                }
            }
        }
        covers.sort_unstable();
        LabeledPoset {
            n,
            covers,
            up,
            down,
            cover_up,
            cover_down,
        }
    }

    pub fn empty() -> Self {
        Self::from_up_sets(Vec::new())
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_up_sets(vec![0; n])
    }

    /// The chain `1 ⋖ 2 ⋖ ⋯ ⋖ n`.
    pub fn chain(n: usize) -> Self {
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Self::from_up_sets((0..n).map(|i| full & !(u64::MAX >> (63 - i))).collect())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cover relations `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn strict_covers(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .copied()
            .filter(|&(a, b)| a > b)
            .collect()
    }

    pub fn natural_covers(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .copied()
            .filter(|&(a, b)| a < b)
            .collect()
    }

    pub fn is_naturally_labeled(&self) -> bool {
        self.covers.iter().all(|&(a, b)| a < b)
    }

    /// Fails with the first strict cover when the labeling is not natural.
    pub fn require_natural(&self) -> Result<()> {
        match self.covers.iter().find(|&&(a, b)| a > b) {
            Some(&(a, b)) => Err(Error::NotNaturallyLabeled(a, b)),
            None => Ok(()),
        }
    }

    fn check_label(&self, a: usize) -> Result<usize> {
        if a == 0 || a > self.n {
            Err(Error::LabelOutOfRange {
                label: a,
                n: self.n,
            })
        } else {
            Ok(a - 1)
        }
    }

    /// `a ⪯ b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    /// `a ≺ b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.n && b <= self.n && self.up[a - 1] & bit(b - 1) != 0
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.n && b <= self.n && self.cover_up[a - 1] & bit(b - 1) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    pub(crate) fn up(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub(crate) fn down(&self, i: usize) -> u64 {
        self.down[i]
    }

    pub(crate) fn cover_up(&self, i: usize) -> u64 {
        self.cover_up[i]
    }

    pub(crate) fn cover_down(&self, i: usize) -> u64 {
        self.cover_down[i]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    pub(crate) fn minimal_mask(&self) -> u64 {
        (0..self.n)
            .filter(|&i| self.down[i] == 0)
            .fold(0, |m, i| m | bit(i))
    }

    /// Minimal elements in increasing label order; `z_i` is the `i`-th of them.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.down[i] == 0)
            .map(|i| i + 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.up[i] == 0)
            .map(|i| i + 1)
            .collect()
    }

    /// `V(S)`: every element above some element of `S`, where `S` consists of
    /// minimal elements.
    pub fn principal_filter(&self, minimal: &[usize]) -> Result<BTreeSet<usize>> {
        let mut mask = 0;
        for &z in minimal {
            let i = self.check_label(z)?;
            if self.down[i] != 0 {
                return Err(Error::NotMinimal(z));
            }
            mask |= bit(i) | self.up[i];
        }
        Ok(bits(mask).map(|i| i + 1).collect())
    }

    /// True when `mask` is a down-closed set of indices.
    pub(crate) fn is_ideal_mask(&self, mask: u64) -> bool {
        bits(mask).all(|i| self.down[i] & !mask == 0)
    }

    /// Connected components of the comparability graph restricted to `mask`.
    pub(crate) fn component_masks_within(&self, mask: u64) -> Vec<u64> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for i in bits(frontier) {
                    next |= (self.cover_up[i] | self.cover_down[i]) & mask;
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// The connected components, each relabeled by `1..=k` preserving the
    /// relative order of the original labels, ordered by smallest label.
    pub fn components(&self) -> Vec<LabeledPoset> {
        self.component_masks_within(self.full_mask())
            .into_iter()
            .map(|m| self.restrict_mask(m))
            .collect()
    }

    /// Original labels of each component, matching [`LabeledPoset::components`].
    pub fn component_labels(&self) -> Vec<Vec<usize>> {
        self.component_masks_within(self.full_mask())
            .into_iter()
            .map(|m| bits(m).map(|i| i + 1).collect())
            .collect()
    }

    /// The empty poset is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_masks_within(self.full_mask()).len() == 1
    }

    /// The induced subposet on `mask`, relabeled order-preservingly.
    pub(crate) fn restrict_mask(&self, mask: u64) -> LabeledPoset {
        let idx: Vec<usize> = bits(mask).collect();
        let up = idx
            .iter()
            .map(|&i| {
                let u = self.up[i] & mask;
                idx.iter()
                    .enumerate()
                    .filter(|(_, &j)| u & bit(j) != 0)
                    .fold(0u64, |m, (k, _)| m | bit(k))
            })
            .collect();
        LabeledPoset::from_up_sets(up)
    }

    /// The induced subposet on `labels`, relabeled by `1..=k` preserving relative order.
    pub fn restrict(&self, labels: &[usize]) -> Result<LabeledPoset> {
        let mut mask = 0;
        for &a in labels {
            mask |= bit(self.check_label(a)?);
        }
        Ok(self.restrict_mask(mask))
    }

    /// Moves label `a` to `perm[a - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<LabeledPoset> {
        check_permutation(perm, self.n)?;
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(a, b)| (perm[a - 1], perm[b - 1]))
            .collect();
        LabeledPoset::new(self.n, &covers)
    }

    /// `P ⊔ Q`, with the labels of `Q` shifted by `|P|`.
    pub fn disjoint_union(&self, other: &LabeledPoset) -> LabeledPoset {
        let k = self.n;
        let mut up = self.up.clone();
        up.extend(other.up.iter().map(|&u| u << k));
        LabeledPoset::from_up_sets(up)
    }

    /// `P ⊕ Q`: every element of `Q` (labels shifted by `|P|`) lies above every element of `P`.
    pub fn ordinal_sum(&self, other: &LabeledPoset) -> LabeledPoset {
        let k = self.n;
        let top = other.full_mask() << k;
        let mut up: Vec<u64> = self.up.iter().map(|&u| u | top).collect();
        up.extend(other.up.iter().map(|&u| u << k));
        LabeledPoset::from_up_sets(up)
    }

    /// All linear extensions as label words in lexicographic order.
    pub fn linear_extensions(&self, guards: &Guards) -> Result<Vec<Vec<usize>>> {
        if self.n > guards.linear_extensions {
            return Err(Error::GuardExceeded {
                what: "linear_extensions",
                size: self.n,
                limit: guards.linear_extensions,
            });
        }
        fn rec(p: &LabeledPoset, placed: u64, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if word.len() == p.n {
                out.push(word.clone());
                return;
            }
            for i in 0..p.n {
                if placed & bit(i) == 0 && p.down[i] & !placed == 0 {
                    word.push(i + 1);
                    rec(p, placed | bit(i), word, out);
                    word.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(self, 0, &mut Vec::with_capacity(self.n), &mut out);
        Ok(out)
    }

    /// Number of linear extensions, by dynamic programming over order ideals.
    pub fn count_linear_extensions(&self) -> BigUint {
        let mut ways: std::collections::HashMap<u64, BigUint> = std::collections::HashMap::new();
        ways.insert(0, BigUint::one());
        let mut layer = vec![0u64];
        for _ in 0..self.n {
            let mut next: std::collections::HashMap<u64, BigUint> =
                std::collections::HashMap::new();
            for ideal in layer {
                let w = ways[&ideal].clone();
                for i in 0..self.n {
                    if ideal & bit(i) == 0 && self.down[i] & !ideal == 0 {
                        *next.entry(ideal | bit(i)).or_insert_with(BigUint::zero) += &w;
                    }
                }
            }
            layer = next.keys().copied().collect();
            ways = next;
        }
        ways.into_values().next().unwrap_or_else(BigUint::one)
    }

    /// True when no four elements induce the `N` poset `a ≺ b ≻ c ≺ d`.
    pub fn is_n_free(&self) -> bool {
        let incomparable = |x: usize, y: usize| (self.up[x] | self.down[x] | bit(x)) & bit(y) == 0;
        for b in 0..self.n {
            for c in bits(self.down[b]) {
                for a in bits(self.down[b] & !self.down[c] & !self.up[c] & !bit(c)) {
                    for d in bits(self.up[c] & !bit(b)) {
                        if incomparable(a, d) && incomparable(b, d) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The lexicographically least sorted cover list over all relabelings,
    /// a complete isomorphism invariant of the unlabeled poset.
    pub fn canonical_form(&self, guards: &Guards) -> Result<Vec<(usize, usize)>> {
        if self.n > guards.labelings {
            return Err(Error::GuardExceeded {
                what: "canonical_form",
                size: self.n,
                limit: guards.labelings,
            });
        }
        let mut perm: Vec<usize> = (1..=self.n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let mut cs: Vec<_> = self
                .covers
                .iter()
                .map(|&(a, b)| (perm[a - 1], perm[b - 1]))
                .collect();
            cs.sort_unstable();
            if best.as_ref().is_none_or(|b| cs < *b) {
                best = Some(cs);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(best.unwrap_or_default())
    }

    pub fn is_isomorphic(&self, other: &LabeledPoset, guards: &Guards) -> Result<bool> {
        if self.n != other.n || self.covers.len() != other.covers.len() {
            return Ok(false);
        }
        Ok(self.canonical_form(guards)? == other.canonical_form(guards)?)
    }
}

impl fmt::Display for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} covers=[", self.n)?;
        for (k, (a, b)) in self.covers.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, covers: &[(usize, usize)]) -> LabeledPoset {
        LabeledPoset::new(n, covers).unwrap()
    }

    fn v_poset() -> LabeledPoset {
        p(3, &[(3, 2), (1, 2)])
    }

    #[test]
    fn construction_reduces_and_rejects_cycles() {
        let q = p(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(q.covers(), &[(1, 2), (2, 3)]);
        assert!(q.lt(1, 3));
        assert!(matches!(
            LabeledPoset::new(2, &[(1, 2), (2, 1)]),
            Err(Error::Cyclic(_))
        ));
        assert!(matches!(
            LabeledPoset::new(2, &[(1, 3)]),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert_eq!(LabeledPoset::chain(3).covers(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn linear_extension_examples() {
        let g = Guards::DEFAULT;
        assert_eq!(
            LabeledPoset::antichain(2).linear_extensions(&g).unwrap(),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(
            LabeledPoset::chain(3).linear_extensions(&g).unwrap(),
            vec![vec![1, 2, 3]]
        );
        assert_eq!(
            v_poset().linear_extensions(&g).unwrap(),
            vec![vec![1, 3, 2], vec![3, 1, 2]]
        );
        assert!(LabeledPoset::antichain(13).linear_extensions(&g).is_err());
        assert_eq!(
            LabeledPoset::antichain(5).count_linear_extensions(),
            BigUint::from(120u32)
        );
    }

    #[test]
    fn components_and_filters() {
        assert_eq!(LabeledPoset::antichain(2).components().len(), 2);
        assert!(v_poset().is_connected());
        let u = LabeledPoset::chain(2).disjoint_union(&LabeledPoset::chain(3));
        let sizes: Vec<_> = u.components().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![2, 3]);
        let c = LabeledPoset::chain(3);
        assert_eq!(c.minimal_elements(), vec![1]);
        assert_eq!(c.maximal_elements(), vec![3]);
        assert_eq!(
            v_poset().principal_filter(&[1]).unwrap(),
            [1, 2].into_iter().collect()
        );
        assert!(matches!(
            v_poset().principal_filter(&[2]),
            Err(Error::NotMinimal(2))
        ));
    }

    #[test]
    fn sums() {
        let one = LabeledPoset::chain(1);
        assert_eq!(one.disjoint_union(&one), LabeledPoset::antichain(2));
        assert_eq!(one.ordinal_sum(&one), LabeledPoset::chain(2));
        let v = one.disjoint_union(&one).ordinal_sum(&one);
        assert_eq!(v.minimal_elements().len(), 2);
        assert_eq!(v.maximal_elements().len(), 1);
        assert!(v.is_naturally_labeled());
    }

    #[test]
    fn n_free() {
        assert!(!p(4, &[(1, 2), (3, 2), (3, 4)]).is_n_free());
        assert!(LabeledPoset::chain(5).is_n_free());
        assert!(v_poset().is_n_free());
        assert!(p(5, &[(1, 2), (3, 2), (3, 4), (2, 5), (4, 5), (1, 4)]).is_n_free());
    }

    #[test]
    fn restriction_preserves_relative_order() {
        let q = p(4, &[(4, 1), (1, 3), (2, 3)]);
        let r = q.restrict(&[1, 3, 4]).unwrap();
        assert_eq!(r.covers(), &[(1, 2), (3, 1)]);
    }

    #[test]
    fn canonical_forms_detect_isomorphism() {
        let g = Guards::DEFAULT;
        let a = p(3, &[(1, 3), (2, 3)]);
        let b = p(3, &[(2, 1), (3, 1)]);
        assert!(a.is_isomorphic(&b, &g).unwrap());
        assert!(!a.is_isomorphic(&p(3, &[(1, 2), (1, 3)]), &g).unwrap());
    }
}
