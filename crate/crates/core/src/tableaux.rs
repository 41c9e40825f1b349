//! Border-strip tableaux and the Murnaghan-Nakayama expansion of skew Schur functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{z_partition, Composition, Partition};
use crate::error::{Error, Result};
use crate::poset::{Cell, SkewShape};
use crate::qsym::{Basis, QSymElement, Rational};
use crate::Guards;

/// A filling of `λ/μ` where each value `i` occupies a border strip and the
/// cells holding values `≤ i` form a skew shape over `μ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BorderStripTableau {
    shape: SkewShape,
    fill: BTreeMap<Cell, usize>,
}

impl BorderStripTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn fill(&self) -> &BTreeMap<Cell, usize> {
        &self.fill
    }

    pub fn value(&self, cell: Cell) -> Option<usize> {
        self.fill.get(&cell).copied()
    }

    /// `α_i` = number of cells holding `i`.
    pub fn type_composition(&self) -> Composition {
        let k = self.fill.values().copied().max().unwrap_or(0);
        let mut parts = vec![0; k];
        for &v in self.fill.values() {
            parts[v - 1] += 1;
        }
        Composition::new(parts).expect("every value occurs")
    }

    /// Cells holding `value`, row-major.
    pub fn strip(&self, value: usize) -> Vec<Cell> {
        self.fill
            .iter()
            .filter(|&(_, &v)| v == value)
            .map(|(&c, _)| c)
            .collect()
    }

    /// Rows spanned by each strip, minus one.
    pub fn strip_heights(&self) -> Vec<usize> {
        (1..=self.type_composition().len())
            .map(|v| {
                let mut rows: Vec<usize> = self.strip(v).iter().map(|c| c.0).collect();
                rows.dedup();
                rows.len() - 1
            })
            .collect()
    }

    pub fn height(&self) -> usize {
        self.strip_heights().iter().sum()
    }

    /// `(-1)^height`.
    pub fn sign(&self) -> i64 {
        if self.height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for BorderStripTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda = self.shape.lambda();
        for r in 1..=lambda.len() {
            if r > 1 {
                f.write_str("\n")?;
            }
            for c in 1..=lambda.part(r - 1) {
                if c > 1 {
                    f.write_str(" ")?;
                }
                match self.value((r, c)) {
                    Some(v) => write!(f, "{v}")?,
                    None => f.write_str(".")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BorderStripTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?}", self.shape, self.fill)
    }
}

/// Whether `outer/inner` (row lengths, same length) is a border strip, and its height.
fn strip_height(outer: &[usize], inner: &[usize]) -> Option<usize> {
    let rows: Vec<usize> = (0..outer.len()).filter(|&i| outer[i] > inner[i]).collect();
    let (&first, &last) = (rows.first()?, rows.last()?);
    if last + 1 - first != rows.len() {
        return None;
    }
    for i in first..last {
        // Consecutive rows must overlap in exactly one column.
        if outer[i + 1] != inner[i] + 1 {
            return None;
        }
    }
    Some(rows.len() - 1)
}

/// Every `ν'` with `μ ⊆ ν' ⊊ ν` and `ν/ν'` a border strip, with the strip height.
/// With `size = Some(k)` only strips of `k` cells are returned.
fn removable_strips(nu: &[usize], mu: &[usize], size: Option<usize>) -> Vec<(Vec<usize>, usize)> {
    fn rec(
        i: usize,
        nu: &[usize],
        mu: &[usize],
        cur: &mut Vec<usize>,
        removed: usize,
        size: Option<usize>,
        out: &mut Vec<(Vec<usize>, usize)>,
    ) {
        if size.is_some_and(|s| removed > s) {
            return;
        }
        if i == nu.len() {
            if removed > 0 && size.is_none_or(|s| s == removed) {
                if let Some(h) = strip_height(nu, cur) {
                    out.push((cur.clone(), h));
                }
            }
            return;
        }
        let hi = if i == 0 { nu[0] } else { nu[i].min(cur[i - 1]) };
        for v in (mu[i]..=hi).rev() {
            cur.push(v);
            rec(i + 1, nu, mu, cur, removed + nu[i] - v, size, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, nu, mu, &mut Vec::new(), 0, size, &mut out);
    out
}

fn padded(shape: &SkewShape) -> (Vec<usize>, Vec<usize>) {
    let rows = shape.lambda().len();
    let lambda = (0..rows).map(|i| shape.lambda().part(i)).collect();
    let mu = (0..rows).map(|i| shape.mu().part(i)).collect();
    (lambda, mu)
}

fn check_size(shape: &SkewShape, alpha: &Composition) -> Result<()> {
    if shape.size() != alpha.size() {
        return Err(Error::SizeMismatch {
            cells: shape.size(),
            weight: alpha.size(),
        });
    }
    Ok(())
}

/// Every border-strip tableau of shape `λ/μ` and type `α`. The largest value
/// is placed first, as a strip on the outer rim.
pub fn enumerate_bst(shape: &SkewShape, alpha: &Composition) -> Result<Vec<BorderStripTableau>> {
    check_size(shape, alpha)?;
    fn rec(
        nu: &[usize],
        mu: &[usize],
        parts: &[usize],
        fill: &mut BTreeMap<Cell, usize>,
        shape: &SkewShape,
        out: &mut Vec<BorderStripTableau>,
    ) {
        let Some((&last, rest)) = parts.split_last() else {
            out.push(BorderStripTableau {
                shape: shape.clone(),
                fill: fill.clone(),
            });
            return;
        };
        for (inner, _) in removable_strips(nu, mu, Some(last)) {
            let cells: Vec<Cell> = (0..nu.len())
                .flat_map(|i| (inner[i] + 1..=nu[i]).map(move |c| (i + 1, c)))
                .collect();
            for &c in &cells {
                fill.insert(c, parts.len());
            }
            rec(&inner, mu, rest, fill, shape, out);
            for c in &cells {
                fill.remove(c);
            }
        }
    }
    let (lambda, mu) = padded(shape);
    let mut out = Vec::new();
    rec(
        &lambda,
        &mu,
        alpha.parts(),
        &mut BTreeMap::new(),
        shape,
        &mut out,
    );
    Ok(out)
}

/// `χ^(λ/μ)(α) = Σ_T (-1)^height(T)` over border-strip tableaux of type `α`.
pub fn chi(shape: &SkewShape, alpha: &Composition) -> Result<BigInt> {
    check_size(shape, alpha)?;
    fn rec(
        nu: Vec<usize>,
        mu: &[usize],
        parts: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
    ) -> BigInt {
        let Some((&last, rest)) = parts.split_last() else {
            return BigInt::one();
        };
        if let Some(v) = memo.get(&(nu.clone(), parts.len())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (inner, h) in removable_strips(&nu, mu, Some(last)) {
            let sub = rec(inner, mu, rest, memo);
            if h % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        memo.insert((nu, parts.len()), total.clone());
        total
    }
    let (lambda, mu) = padded(shape);
    Ok(rec(lambda, &mu, alpha.parts(), &mut HashMap::new()))
}

/// `χ^(λ/μ)(α)` for every composition `α` of the shape size, zeros omitted.
fn chi_table(shape: &SkewShape) -> BTreeMap<Composition, BigInt> {
    fn rec(
        nu: &[usize],
        mu: &[usize],
        memo: &mut HashMap<Vec<usize>, BTreeMap<Vec<usize>, BigInt>>,
    ) -> BTreeMap<Vec<usize>, BigInt> {
        if nu == mu {
            return BTreeMap::from([(Vec::new(), BigInt::one())]);
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (inner, h) in removable_strips(nu, mu, None) {
            let k: usize = nu.iter().sum::<usize>() - inner.iter().sum::<usize>();
            for (mut beta, c) in rec(&inner, mu, memo) {
                beta.push(k);
                let e = out.entry(beta).or_default();
                if h % 2 == 0 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        memo.insert(nu.to_vec(), out.clone());
        out
    }
    let (lambda, mu) = padded(shape);
    rec(&lambda, &mu, &mut HashMap::new())
        .into_iter()
        .map(|(a, c)| (Composition::new(a).expect("strips are nonempty"), c))
        .collect()
}

fn shape_guard(shape: &SkewShape, guards: &Guards, what: &'static str) -> Result<()> {
    if shape.size() > guards.linear_extensions {
        return Err(Error::GuardExceeded {
            what,
            size: shape.size(),
            limit: guards.linear_extensions,
        });
    }
    Ok(())
}

/// `s_(λ/μ) = Σ_α χ^(λ/μ)(α) ψ_α`.
pub fn skew_schur_psi(shape: &SkewShape, guards: &Guards) -> Result<QSymElement> {
    shape_guard(shape, guards, "skew_schur_psi")?;
    Ok(QSymElement::from_terms(
        Basis::Psi,
        chi_table(shape)
            .into_iter()
            .map(|(a, c)| (a, Rational::from_integer(c))),
    ))
}

/// `s_(λ/μ) = Σ_ν χ^(λ/μ)(ν) p_ν / z_ν`, as the map `ν ↦ χ(ν)/z_ν`.
pub fn skew_schur_power_sums(
    shape: &SkewShape,
    guards: &Guards,
) -> Result<BTreeMap<Partition, Rational>> {
    shape_guard(shape, guards, "skew_schur_power_sums")?;
    let mut out = BTreeMap::new();
    for nu in Partition::all_of(shape.size()) {
        let c = chi(shape, &nu.as_composition())?;
        if !c.is_zero() {
            let z = BigInt::from(z_partition(&nu));
            out.insert(nu, Rational::new(c, z));
        }
    }
    Ok(out)
}

/// `Min1(s_(λ/μ))`: `(-1)^height` for a border strip, else 0.
pub fn min1_skew(shape: &SkewShape) -> Rational {
    if !shape.is_border_strip() {
        return Rational::zero();
    }
    let sign = if shape.height().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Rational::from_integer(BigInt::from(sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{enumerate_skew_shapes, skew_shape_poset};
    use crate::ppartition::k_generating_function;
    use crate::qsym::{convert, min1, power_sum};

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn shape(l: &[usize], m: &[usize]) -> SkewShape {
        SkewShape::from_parts(l, m).unwrap()
    }

    #[test]
    fn hook_tableaux() {
        let s = shape(&[2, 1], &[]);
        let t = enumerate_bst(&s, &c(&[3])).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].height(), 1);
        let t = enumerate_bst(&s, &c(&[2, 1])).unwrap();
        let mut heights: Vec<usize> = t.iter().map(BorderStripTableau::height).collect();
        heights.sort();
        assert_eq!(heights, vec![0, 1]);
        let t = enumerate_bst(&shape(&[1], &[]), &c(&[1])).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].height(), 0);
        assert_eq!(t[0].to_string(), "1");
        assert!(enumerate_bst(&s, &c(&[2])).is_err());
    }

    #[test]
    fn hook_characters() {
        let s = shape(&[2, 1], &[]);
        assert_eq!(chi(&s, &c(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(chi(&s, &c(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(chi(&s, &c(&[2, 1])).unwrap(), BigInt::from(0));
        let g = Guards::DEFAULT;
        assert_eq!(
            skew_schur_psi(&s, &g).unwrap().to_string(),
            "-1*psi[3] + 2*psi[1,1,1]"
        );
        assert_eq!(
            skew_schur_psi(&shape(&[1, 1], &[]), &g)
                .unwrap()
                .to_string(),
            "-1*psi[2] + 1*psi[1,1]"
        );
        assert_eq!(
            skew_schur_psi(&shape(&[1], &[]), &g).unwrap().to_string(),
            "1*psi[1]"
        );
    }

    #[test]
    fn tableau_invariants() {
        for s in enumerate_skew_shapes(5) {
            for alpha in Composition::all_of(5) {
                let list = enumerate_bst(&s, &alpha).unwrap();
                let signed: i64 = list.iter().map(BorderStripTableau::sign).sum();
                assert_eq!(BigInt::from(signed), chi(&s, &alpha).unwrap());
                for t in &list {
                    assert_eq!(t.type_composition(), alpha);
                    for (&(r, col), &v) in t.fill() {
                        if let Some(w) = t.value((r, col + 1)) {
                            assert!(v <= w);
                        }
                        if let Some(w) = t.value((r + 1, col)) {
                            assert!(v <= w);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_row_has_unit_coefficient() {
        let g = Guards::DEFAULT;
        for n in 1..=6 {
            let s =
                skew_schur_psi(&SkewShape::straight(Partition::new(vec![n]).unwrap()), &g).unwrap();
            assert!(s.coefficient(&c(&[n])).is_one());
        }
    }

    #[test]
    fn min1_examples() {
        assert_eq!(
            min1_skew(&shape(&[6, 3, 3, 2], &[2, 2, 1])),
            Rational::from_integer((-1).into())
        );
        assert!(min1_skew(&shape(&[2, 2], &[])).is_zero());
        assert!(min1_skew(&shape(&[1], &[])).is_one());
    }

    #[test]
    fn routes_agree_on_small_shapes() {
        let g = Guards::DEFAULT;
        for n in 1..=5 {
            for s in enumerate_skew_shapes(n) {
                let psi = skew_schur_psi(&s, &g).unwrap();
                let k = k_generating_function(&skew_shape_poset(&s), &g).unwrap();
                assert!(convert(&k, Basis::Psi).same_representation(&psi), "{s}");
                assert_eq!(min1_skew(&s), min1(&k).unwrap(), "{s}");
                assert_eq!(
                    min1_skew(&s),
                    Rational::from_integer(chi(&s, &c(&[n])).unwrap())
                );
                let mut via_p = QSymElement::zero(Basis::Psi);
                for (nu, coef) in skew_schur_power_sums(&s, &g).unwrap() {
                    via_p = &via_p + &power_sum(&nu).scaled(&coef);
                }
                assert!(via_p.same_representation(&psi), "{s}");
            }
        }
    }
}
