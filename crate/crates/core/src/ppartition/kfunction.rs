use std::collections::HashMap;

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::poset::{bit, LabeledPoset};
use crate::qsym::{Basis, QSymElement, Rational};
use crate::Guards;

fn check_guard(p: &LabeledPoset, guards: &Guards) -> Result<()> {
    if p.size() > guards.linear_extensions {
        return Err(Error::GuardExceeded {
            what: "k_generating_function",
            size: p.size(),
            limit: guards.linear_extensions,
        });
    }
    Ok(())
}

/// `K_(P,ω) = Σ_π L_co(π)` over linear extensions, in the `L` basis.
///
/// Linear extensions are counted by descent set with a dynamic program over
/// (order ideal, last element), never listed. The empty poset gives `1`.
pub fn k_generating_function(p: &LabeledPoset, guards: &Guards) -> Result<QSymElement> {
    check_guard(p, guards)?;
    let n = p.size();
    if n == 0 {
        return Ok(QSymElement::one(Basis::Fundamental));
    }
    // layer: ideal -> (last, descent mask) -> count
    type Layer = HashMap<u64, HashMap<(usize, u64), u128>>;
    let mut layer: Layer = HashMap::new();
    for i in 0..n {
        if p.down(i) == 0 {
            layer.entry(bit(i)).or_default().insert((i, 0), 1);
        }
    }
    for k in 1..n {
        let mut next: Layer = HashMap::new();
        for (ideal, states) in &layer {
            for j in 0..n {
                if ideal & bit(j) != 0 || p.down(j) & !ideal != 0 {
                    continue;
                }
                let target = next.entry(ideal | bit(j)).or_default();
                for (&(last, des), &count) in states {
                    let des = if last > j { des | bit(k - 1) } else { des };
                    *target.entry((j, des)).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    let mut out = QSymElement::zero(Basis::Fundamental);
    for states in layer.into_values() {
        for ((_, des), count) in states {
            out.add_term(
                Composition::from_mask(des, n),
                Rational::from_integer(BigInt::from(count)),
            );
        }
    }
    Ok(out)
}

/// The same sum computed by listing every linear extension. Test oracle.
pub fn k_generating_function_by_extensions(
    p: &LabeledPoset,
    guards: &Guards,
) -> Result<QSymElement> {
    let n = p.size();
    let mut out = QSymElement::zero(Basis::Fundamental);
    for word in p.linear_extensions(guards)? {
        let mut des = 0u64;
        for k in 1..n {
            if word[k - 1] > word[k] {
                des |= bit(k - 1);
            }
        }
        out.add_term(
            Composition::from_mask(des, n),
            Rational::from_integer(1.into()),
        );
    }
    Ok(out)
}
