use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{pi, Composition};
use crate::error::{Error, Result};

use super::coproduct::graded_coproduct;
use super::element::{Basis, QSymElement, Rational};

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn pi_rational(alpha: &Composition) -> Rational {
    Rational::from_integer(BigInt::from(pi(alpha)))
}

/// `Min1` on a single basis element. Degree-0 elements evaluate to 0.
pub fn min1_basis(basis: Basis, alpha: &Composition) -> Rational {
    let parts = alpha.parts();
    let l = parts.len();
    if l == 0 {
        return Rational::zero();
    }
    match basis {
        Basis::Psi => {
            if l == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
        Basis::Monomial => sign(l - 1) * Rational::from_integer(BigInt::from(parts[l - 1])),
        // L_α with α = (1^k, n - k).
        Basis::Fundamental => {
            if parts[..l - 1].iter().all(|&p| p == 1) {
                sign(l - 1)
            } else {
                Rational::zero()
            }
        }
    }
}

/// `Max1` on a single basis element. Degree-0 elements evaluate to 0.
pub fn max1_basis(basis: Basis, alpha: &Composition) -> Rational {
    let parts = alpha.parts();
    let l = parts.len();
    if l == 0 {
        return Rational::zero();
    }
    match basis {
        Basis::Psi => {
            let mut total = Rational::zero();
            for i in 0..l {
                let head = Composition::from_vec_unchecked(parts[..i].to_vec());
                let mut tail = parts[i + 1..].to_vec();
                tail.reverse();
                let tail = Composition::from_vec_unchecked(tail);
                total += sign(l - 1 - i) / (pi_rational(&head) * pi_rational(&tail));
            }
            total
        }
        Basis::Monomial => sign(l - 1) * Rational::from_integer(BigInt::from(parts[0])),
        // L_α with α = (n - k, 1^k).
        Basis::Fundamental => {
            if parts[1..].iter().all(|&p| p == 1) {
                sign(l - 1)
            } else {
                Rational::zero()
            }
        }
    }
}

fn apply<F>(f: &QSymElement, what: &'static str, on_basis: F) -> Result<Rational>
where
    F: Fn(Basis, &Composition) -> Rational,
{
    match f.homogeneous_degree(what)? {
        None => Ok(Rational::zero()),
        Some(0) => Err(Error::ConstantInput(what)),
        Some(_) => Ok(f
            .terms()
            .iter()
            .map(|(a, c)| c * on_basis(f.basis(), a))
            .sum()),
    }
}

/// The linear functional `Min1`, evaluated in the native basis of `f`.
///
/// `f` must be homogeneous of positive degree (the zero element gives 0).
pub fn min1(f: &QSymElement) -> Result<Rational> {
    apply(f, "min1", min1_basis)
}

/// The linear functional `Max1`, evaluated in the native basis of `f`.
pub fn max1(f: &QSymElement) -> Result<Rational> {
    apply(f, "max1", max1_basis)
}

/// The `psi` coefficients of `f`, via `c_α = Min1^{⊗ l(α)}(Δ_α f)`.
///
/// Works in the native basis of `f` with no conversion; zero coefficients are
/// omitted. A constant `c` gives `{[]: c}`.
pub fn psi_coefficients(f: &QSymElement) -> Result<BTreeMap<Composition, Rational>> {
    let mut out = BTreeMap::new();
    let Some(n) = f.homogeneous_degree("psi_coefficients")? else {
        return Ok(out);
    };
    if n == 0 {
        out.insert(Composition::empty(), f.coefficient(&Composition::empty()));
        return Ok(out);
    }
    for alpha in Composition::all_of(n) {
        let c = graded_coproduct(f, &alpha)?.evaluate(min1_basis);
        if !c.is_zero() {
            out.insert(alpha, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::convert;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn max1_of_psi_3421() {
        assert_eq!(max1_basis(Basis::Psi, &c(&[3, 4, 2, 1])), q(4, 189));
    }

    #[test]
    fn functionals_agree_across_bases() {
        for n in 1..=6 {
            for alpha in Composition::all_of(n) {
                for basis in [Basis::Monomial, Basis::Fundamental, Basis::Psi] {
                    let f = QSymElement::basis_element(basis, alpha.clone());
                    let a = min1(&f).unwrap();
                    let b = max1(&f).unwrap();
                    for other in [Basis::Monomial, Basis::Fundamental, Basis::Psi] {
                        let g = convert(&f, other);
                        assert_eq!(min1(&g).unwrap(), a, "min1 {f} in {other}");
                        assert_eq!(max1(&g).unwrap(), b, "max1 {f} in {other}");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_coefficients_recover_psi_expansion() {
        for n in 1..=6 {
            for alpha in Composition::all_of(n) {
                let f = QSymElement::fundamental(alpha.clone());
                let expected = convert(&f, Basis::Psi).into_terms();
                assert_eq!(psi_coefficients(&f).unwrap(), expected);
                let m = convert(&f, Basis::Monomial);
                assert_eq!(psi_coefficients(&m).unwrap(), expected);
            }
        }
    }

    #[test]
    fn monomial_two() {
        let f = QSymElement::monomial(c(&[2]));
        let coeffs = psi_coefficients(&f).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(coeffs[&c(&[2])], q(2, 1));
    }

    #[test]
    fn rejects_bad_input() {
        let mixed = &QSymElement::psi(c(&[1])) + &QSymElement::psi(c(&[2]));
        assert!(matches!(min1(&mixed), Err(Error::NotHomogeneous(..))));
        assert!(matches!(
            max1(&QSymElement::one(Basis::Psi)),
            Err(Error::ConstantInput(_))
        ));
        assert_eq!(min1(&QSymElement::zero(Basis::Psi)).unwrap(), q(0, 1));
    }
}
