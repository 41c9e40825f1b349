use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{z, z_partition, Composition, Partition};
use crate::error::{Error, Result};

use super::convert::convert;

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "M")]
    Monomial,
    #[serde(rename = "L")]
    Fundamental,
    #[serde(rename = "psi")]
    Psi,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "M",
            Basis::Fundamental => "L",
            Basis::Psi => "psi",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" | "m" => Ok(Basis::Monomial),
            "L" | "l" | "F" => Ok(Basis::Fundamental),
            "psi" | "PSI" | "Psi" => Ok(Basis::Psi),
            _ => Err(Error::Parse(format!("unknown basis `{s}`"))),
        }
    }
}

/// A finite linear combination of basis elements of one basis.
///
/// Stored coefficients are never zero. Equality compares the underlying
/// functions: the right-hand side is converted when the bases differ.
#[derive(Clone)]
pub struct QSymElement {
    basis: Basis,
    terms: BTreeMap<Composition, Rational>,
}

impl QSymElement {
    pub fn zero(basis: Basis) -> Self {
        QSymElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn basis_element(basis: Basis, alpha: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(alpha, Rational::one());
        QSymElement { basis, terms }
    }

    pub fn monomial(alpha: Composition) -> Self {
        Self::basis_element(Basis::Monomial, alpha)
    }

    pub fn fundamental(alpha: Composition) -> Self {
        Self::basis_element(Basis::Fundamental, alpha)
    }

    pub fn psi(alpha: Composition) -> Self {
        Self::basis_element(Basis::Psi, alpha)
    }

    /// The normalized power sum `Ψ_α = z_α ψ_α`.
    pub fn big_psi(alpha: Composition) -> Self {
        let scale = Rational::from_integer(BigInt::from(z(&alpha)));
        Self::psi(alpha).scaled(&scale)
    }

    /// Collects terms, merging repeated compositions and dropping zeros.
    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, Rational)>,
    {
        let mut out = Self::zero(basis);
        for (alpha, coef) in terms {
            out.add_term(alpha, coef);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Composition, Rational> {
        self.terms
    }

    pub fn coefficient(&self, alpha: &Composition) -> Rational {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Composition> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, alpha: Composition, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        QSymElement {
            basis: self.basis,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    /// The set of degrees `|α|` present.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Composition::size).collect()
    }

    /// The common degree of all terms; `Ok(None)` for the zero element.
    pub fn homogeneous_degree(&self, what: &'static str) -> Result<Option<usize>> {
        let degrees = self.degrees();
        match degrees.len() {
            0 => Ok(None),
            1 => Ok(degrees.into_iter().next()),
            _ => Err(Error::NotHomogeneous(what, degrees.into_iter().collect())),
        }
    }

    /// The terms whose index has the smallest length. In the `psi` basis this
    /// is the projection onto the lowest length grade.
    pub fn min_length_part(&self) -> Self {
        let Some(min) = self.terms.keys().map(Composition::len).min() else {
            return self.clone();
        };
        QSymElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.len() == min)
                .map(|(a, v)| (a.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn to_basis(&self, basis: Basis) -> Self {
        convert(self, basis)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Exact equality of the stored representation (same basis, same terms).
    pub fn same_representation(&self, other: &Self) -> bool {
        self.basis == other.basis && self.terms == other.terms
    }
}

impl PartialEq for QSymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.terms == convert(other, self.basis).terms
        }
    }
}

impl Eq for QSymElement {}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&QSymElement> for &QSymElement {
    type Output = QSymElement;
    fn add(self, rhs: &QSymElement) -> QSymElement {
        let rhs = convert(rhs, self.basis);
        let mut out = self.clone();
        for (a, v) in rhs.terms {
            out.add_term(a, v);
        }
        out
    }
}

impl Sub<&QSymElement> for &QSymElement {
    type Output = QSymElement;
    fn sub(self, rhs: &QSymElement) -> QSymElement {
        self + &(-rhs)
    }
}

impl Neg for &QSymElement {
    type Output = QSymElement;
    fn neg(self) -> QSymElement {
        QSymElement {
            basis: self.basis,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), -v)).collect(),
        }
    }
}

impl Mul<&QSymElement> for &QSymElement {
    type Output = QSymElement;
    fn mul(self, rhs: &QSymElement) -> QSymElement {
        super::product::multiply(self, rhs)
    }
}

/// `p_λ = z_λ Σ_{α∼λ} ψ_α`, in the `psi` basis.
pub fn power_sum(lambda: &Partition) -> QSymElement {
    let scale = Rational::from_integer(BigInt::from(z_partition(lambda)));
    power_sum_over_z(lambda).scaled(&scale)
}

/// `p_λ / z_λ = Σ_{α∼λ} ψ_α`.
pub fn power_sum_over_z(lambda: &Partition) -> QSymElement {
    QSymElement::from_terms(
        Basis::Psi,
        lambda
            .rearrangements()
            .into_iter()
            .map(|a| (a, Rational::one())),
    )
}
