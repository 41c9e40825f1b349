use num_bigint::BigInt;

use crate::composition::{check_permutation, next_permutation, Composition};
use crate::error::{Error, Result};
use crate::poset::{bit, bits, LabeledPoset};
use crate::qsym::{Basis, QSymElement, Rational};
use crate::Guards;

/// `θ_σ(x)` for every element (0-based index), 1-based levels.
pub(crate) fn sigma_levels(p: &LabeledPoset, sigma: &[usize]) -> Result<Vec<usize>> {
    let z: Vec<usize> = bits(p.minimal_mask()).collect();
    check_permutation(sigma, z.len())?;
    Ok((0..p.size())
        .map(|x| {
            let above = p.down(x) | bit(x);
            (1..=sigma.len())
                .rev()
                .find(|&j| above & bit(z[sigma[j - 1] - 1]) != 0)
                .expect("every element lies above a minimal element")
        })
        .collect())
}

/// The weight `α(σ)` of the `σ`-partition: `α_i` counts the elements whose
/// largest `j` with `z_(σ_j) ⪯ x` is `i`, where `z_1 < z_2 < ...` are the
/// minimal elements in label order.
pub fn sigma_weight(p: &LabeledPoset, sigma: &[usize]) -> Result<Composition> {
    let levels = sigma_levels(p, sigma)?;
    let mut parts = vec![0; sigma.len()];
    for l in levels {
        parts[l - 1] += 1;
    }
    Composition::new(parts)
}

/// `K̃_P = Σ_(σ ∈ S_m) ψ_α(σ)`, the minimum-length part of `K_P`.
pub fn k_tilde(p: &LabeledPoset, guards: &Guards) -> Result<QSymElement> {
    p.require_natural()?;
    let m = p.minimal_mask().count_ones() as usize;
    if m > guards.labelings {
        return Err(Error::GuardExceeded {
            what: "k_tilde",
            size: m,
            limit: guards.labelings,
        });
    }
    if p.is_empty() {
        return Ok(QSymElement::one(Basis::Psi));
    }
    let mut out = QSymElement::zero(Basis::Psi);
    let mut sigma: Vec<usize> = (1..=m).collect();
    loop {
        out.add_term(
            sigma_weight(p, &sigma)?,
            Rational::from_integer(BigInt::from(1)),
        );
        if !next_permutation(&mut sigma) {
            break;
        }
    }
    Ok(out)
}
