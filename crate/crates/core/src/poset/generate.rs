use std::collections::BTreeSet;

use crate::composition::permutations;
use crate::error::{Error, Result};
use crate::Guards;

use super::{bit, LabeledPoset};

/// Every poset on `[n]` whose relations all increase in label, i.e. every
/// naturally labeled poset. Built by adding `n` on top of an order ideal of a
/// poset on `[n - 1]`; counts run 1, 1, 2, 7, 40, 357, 4824, 96428.
pub fn naturally_labeled_posets(n: usize, guards: &Guards) -> Result<Vec<LabeledPoset>> {
    if n > guards.labelings {
        return Err(Error::GuardExceeded {
            what: "naturally_labeled_posets",
            size: n,
            limit: guards.labelings,
        });
    }
    let mut layer = vec![LabeledPoset::empty()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &layer {
            for ideal in 0..bit(k) {
                if !p.is_ideal_mask(ideal) {
                    continue;
                }
                let mut up: Vec<u64> = (0..k)
                    .map(|i| {
                        if ideal & bit(i) != 0 {
                            p.up(i) | bit(k)
                        } else {
                            p.up(i)
                        }
                    })
                    .collect();
                up.push(0);
                next.push(LabeledPoset::from_up_sets(up));
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// Every labeled poset on `[n]`, as distinct cover sets (1, 1, 3, 19, 219, ...).
pub fn all_labeled_posets(n: usize, guards: &Guards) -> Result<Vec<LabeledPoset>> {
    let natural = naturally_labeled_posets(n, guards)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in &natural {
        for perm in permutations(n) {
            let q = p.relabel(&perm)?;
            if seen.insert(q.covers().to_vec()) {
                out.push(q);
            }
        }
    }
    Ok(out)
}
