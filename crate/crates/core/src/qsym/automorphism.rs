use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::Error;

use super::convert::convert;
use super::element::{Basis, QSymElement, Rational};
use super::functional::max1_basis;

/// The involutions `ω`, `ρ` and their composite `ωρ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Automorphism {
    Omega,
    Rho,
    OmegaRho,
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Automorphism::Omega => "omega",
            Automorphism::Rho => "rho",
            Automorphism::OmegaRho => "omegarho",
        })
    }
}

impl FromStr for Automorphism {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "omega" | "w" => Ok(Automorphism::Omega),
            "rho" => Ok(Automorphism::Rho),
            "omegarho" | "omega-rho" | "omega_rho" | "wr" => Ok(Automorphism::OmegaRho),
            _ => Err(Error::Parse(format!("unknown automorphism `{s}`"))),
        }
    }
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn on_fundamental(map: Automorphism, alpha: &Composition) -> Composition {
    match map {
        Automorphism::Omega => alpha.complement().reversed(),
        Automorphism::Rho => alpha.reversed(),
        Automorphism::OmegaRho => alpha.complement(),
    }
}

/// `∏ᵢ Max1(ψ_{α⁽ⁱ⁾})` over the blocks of `alpha` merging into the parts of `beta`.
fn block_max1(alpha: &Composition, beta: &Composition) -> Rational {
    alpha
        .blocks(beta)
        .expect("beta coarsens alpha")
        .iter()
        .map(|b| max1_basis(Basis::Psi, b))
        .product()
}

fn on_psi(map: Automorphism, alpha: &Composition, coef: &Rational, out: &mut QSymElement) {
    match map {
        Automorphism::Omega => {
            let s = sign(alpha.size() - alpha.len());
            out.add_term(alpha.reversed(), s * coef);
        }
        Automorphism::Rho => {
            for gamma in alpha.coarsenings() {
                let v = block_max1(alpha, &gamma);
                out.add_term(gamma.reversed(), v * coef);
            }
        }
        Automorphism::OmegaRho => {
            for beta in alpha.coarsenings() {
                let v = sign(beta.size() - beta.len()) * block_max1(alpha, &beta);
                out.add_term(beta, v * coef);
            }
        }
    }
}

/// Applies an automorphism, returning the result in the basis of `f`.
///
/// On `L` these permute basis elements. On `psi`, `ω` is a signed reversal and
/// `ρ`, `ωρ` are computed from `Max1` applied to the graded coproduct pieces.
/// The `M` basis goes through `L`.
pub fn automorphism(map: Automorphism, f: &QSymElement) -> QSymElement {
    match f.basis() {
        Basis::Fundamental => QSymElement::from_terms(
            Basis::Fundamental,
            f.terms()
                .iter()
                .map(|(a, c)| (on_fundamental(map, a), c.clone())),
        ),
        Basis::Psi => {
            let mut out = QSymElement::zero(Basis::Psi);
            for (a, c) in f.terms() {
                on_psi(map, a, c, &mut out);
            }
            out
        }
        Basis::Monomial => {
            let l = convert(f, Basis::Fundamental);
            convert(&automorphism(map, &l), Basis::Monomial)
        }
    }
}
