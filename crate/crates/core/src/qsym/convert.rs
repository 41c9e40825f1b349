use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::{pi_rel, Composition};

use super::element::{Basis, QSymElement, Rational};

type Expansion = Arc<BTreeMap<Composition, Rational>>;

fn m_to_psi_cache() -> &'static Mutex<HashMap<Composition, Expansion>> {
    static CACHE: OnceLock<Mutex<HashMap<Composition, Expansion>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn pi_rel_rational(alpha: &Composition, beta: &Composition) -> Rational {
    Rational::from_integer(BigInt::from(
        pi_rel(alpha, beta).expect("beta is a coarsening of alpha"),
    ))
}

/// `ψ_α = Σ_{β ⪰ α} M_β / π(α, β)`.
pub fn psi_to_m_expansion(alpha: &Composition) -> BTreeMap<Composition, Rational> {
    alpha
        .coarsenings()
        .into_iter()
        .map(|beta| {
            let c = Rational::one() / pi_rel_rational(alpha, &beta);
            (beta, c)
        })
        .collect()
}

/// `M_α` in the `psi` basis, by back-substitution along the refinement order.
///
/// Since `ψ_α = M_α / π(α, α) + Σ_{β ≻ α} M_β / π(α, β)`, the expansion of
/// `M_α` only needs the expansions of strict coarsenings. Results are memoized.
pub fn m_to_psi_expansion(alpha: &Composition) -> Expansion {
    if let Some(hit) = m_to_psi_cache().lock().unwrap().get(alpha) {
        return Arc::clone(hit);
    }
    let diag = pi_rel_rational(alpha, alpha);
    let mut acc: BTreeMap<Composition, Rational> = BTreeMap::new();
    acc.insert(alpha.clone(), Rational::one());
    for beta in alpha.coarsenings() {
        if &beta == alpha {
            continue;
        }
        let c = Rational::one() / pi_rel_rational(alpha, &beta);
        for (gamma, v) in m_to_psi_expansion(&beta).iter() {
            let e = acc.entry(gamma.clone()).or_insert_with(Rational::zero);
            *e -= &c * v;
        }
    }
    let out: BTreeMap<_, _> = acc
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(g, v)| (g, v * &diag))
        .collect();
    let out = Arc::new(out);
    m_to_psi_cache()
        .lock()
        .unwrap()
        .insert(alpha.clone(), Arc::clone(&out));
    out
}

fn to_monomial(f: &QSymElement) -> QSymElement {
    let mut out = QSymElement::zero(Basis::Monomial);
    match f.basis() {
        Basis::Monomial => return f.clone(),
        Basis::Fundamental => {
            for (alpha, c) in f.terms() {
                for beta in alpha.refinements() {
                    out.add_term(beta, c.clone());
                }
            }
        }
        Basis::Psi => {
            for (alpha, c) in f.terms() {
                for (beta, v) in psi_to_m_expansion(alpha) {
                    out.add_term(beta, c * v);
                }
            }
        }
    }
    out
}

fn from_monomial(f: &QSymElement, target: Basis) -> QSymElement {
    debug_assert_eq!(f.basis(), Basis::Monomial);
    let mut out = QSymElement::zero(target);
    match target {
        Basis::Monomial => return f.clone(),
        Basis::Fundamental => {
            for (alpha, c) in f.terms() {
                let l = alpha.len();
                for beta in alpha.refinements() {
                    let v = if (beta.len() - l) % 2 == 0 {
                        c.clone()
                    } else {
                        -c
                    };
                    out.add_term(beta, v);
                }
            }
        }
        Basis::Psi => {
            for (alpha, c) in f.terms() {
                for (beta, v) in m_to_psi_expansion(alpha).iter() {
                    out.add_term(beta.clone(), c * v);
                }
            }
        }
    }
    out
}

/// Re-expresses `f` in `target`. Exact; the underlying function is unchanged.
pub fn convert(f: &QSymElement, target: Basis) -> QSymElement {
    if f.basis() == target {
        return f.clone();
    }
    from_monomial(&to_monomial(f), target)
}
