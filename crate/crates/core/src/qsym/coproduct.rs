use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};

use super::element::{Basis, QSymElement, Rational};

/// An element of `QSym^{⊗k}`, with every tensor leg in the same basis.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    basis: Basis,
    arity: usize,
    terms: BTreeMap<Vec<Composition>, Rational>,
}

impl TensorElement {
    pub fn zero(basis: Basis, arity: usize) -> Self {
        TensorElement {
            basis,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Composition>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, legs: &[Composition]) -> Rational {
        self.terms.get(legs).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, legs: Vec<Composition>, coef: Rational) {
        assert_eq!(legs.len(), self.arity, "tensor arity mismatch");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Applies the coproduct to leg `i`, raising the arity by one.
    pub fn coproduct_at(&self, i: usize) -> TensorElement {
        assert!(i < self.arity, "leg index out of range");
        let mut out = TensorElement::zero(self.basis, self.arity + 1);
        for (legs, c) in &self.terms {
            for ((x, y), v) in split_basis(self.basis, &legs[i]) {
                let mut new_legs = Vec::with_capacity(self.arity + 1);
                new_legs.extend_from_slice(&legs[..i]);
                new_legs.push(x);
                new_legs.push(y);
                new_legs.extend_from_slice(&legs[i + 1..]);
                out.add_term(new_legs, c * v);
            }
        }
        out
    }

    /// `Σ c · ∏ᵢ F(legᵢ)` for a scalar functional `F` on basis elements.
    pub fn evaluate<F>(&self, mut functional: F) -> Rational
    where
        F: FnMut(Basis, &Composition) -> Rational,
    {
        let mut total = Rational::zero();
        for (legs, c) in &self.terms {
            let mut prod = c.clone();
            for leg in legs {
                if prod.is_zero() {
                    break;
                }
                prod *= functional(self.basis, leg);
            }
            total += prod;
        }
        total
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All cuts of a single basis element into two tensor legs.
fn split_basis(basis: Basis, alpha: &Composition) -> Vec<((Composition, Composition), Rational)> {
    let parts = alpha.parts();
    match basis {
        Basis::Psi | Basis::Monomial => (0..=parts.len())
            .map(|k| {
                let left = Composition::from_vec_unchecked(parts[..k].to_vec());
                let right = Composition::from_vec_unchecked(parts[k..].to_vec());
                ((left, right), Rational::one())
            })
            .collect(),
        Basis::Fundamental => {
            let n = alpha.size();
            let mask = alpha.descent_mask();
            (0..=n)
                .map(|k| {
                    (
                        cut_fundamental(mask, n, 0, k),
                        cut_fundamental(mask, n, k, n),
                    )
                })
                .map(|pair| (pair, Rational::one()))
                .collect()
        }
    }
}

/// The composition of `[hi - lo]` whose descents are the descents of the
/// composition of `n` with mask `mask` lying strictly inside `(lo, hi)`.
fn cut_fundamental(mask: u64, n: usize, lo: usize, hi: usize) -> Composition {
    debug_assert!(lo <= hi && hi <= n);
    let width = hi - lo;
    if width == 0 {
        return Composition::empty();
    }
    let mut local = 0u64;
    for s in lo + 1..hi {
        if mask & (1 << (s - 1)) != 0 {
            local |= 1 << (s - lo - 1);
        }
    }
    Composition::from_mask(local, width)
}

/// `Δ f ∈ QSym ⊗ QSym`, in the basis of `f`.
///
/// `psi` and `M` deconcatenate; `L_α` is cut at every position `k = 0..=|α|`.
pub fn coproduct(f: &QSymElement) -> TensorElement {
    let mut out = TensorElement::zero(f.basis(), 2);
    for (alpha, c) in f.terms() {
        for ((x, y), v) in split_basis(f.basis(), alpha) {
            out.add_term(vec![x, y], c * v);
        }
    }
    out
}

/// The graded piece `Δ_α f ∈ QSym_{α₁} ⊗ ⋯ ⊗ QSym_{αₗ}` of the iterated coproduct.
///
/// `f` must be homogeneous of degree `|α|`; the zero element maps to zero.
pub fn graded_coproduct(f: &QSymElement, alpha: &Composition) -> Result<TensorElement> {
    let mut out = TensorElement::zero(f.basis(), alpha.len());
    let Some(n) = f.homogeneous_degree("graded_coproduct")? else {
        return Ok(out);
    };
    if n != alpha.size() {
        return Err(Error::DegreeMismatch {
            expected: alpha.size(),
            found: n,
        });
    }
    for (beta, c) in f.terms() {
        match f.basis() {
            Basis::Psi | Basis::Monomial => {
                if let Some(pieces) = beta.split_by_sums(alpha.parts()) {
                    out.add_term(pieces, c.clone());
                }
            }
            Basis::Fundamental => {
                let mask = beta.descent_mask();
                let mut lo = 0;
                let mut legs = Vec::with_capacity(alpha.len());
                for &a in alpha.parts() {
                    legs.push(cut_fundamental(mask, n, lo, lo + a));
                    lo += a;
                }
                out.add_term(legs, c.clone());
            }
        }
    }
    Ok(out)
}

impl From<QSymElement> for TensorElement {
    fn from(f: QSymElement) -> Self {
        let mut out = TensorElement::zero(f.basis(), 1);
        for (a, c) in f.into_terms() {
            out.add_term(vec![a], c);
        }
        out
    }
}
