use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::composition::check_permutation;
use crate::error::{Error, Result};
use crate::poset::{bit, bits, LabeledPoset};
use crate::qsym::{max1, Rational};
use crate::Guards;

use super::ktilde::{k_tilde, sigma_levels};

fn guard(p: &LabeledPoset, limit: usize, what: &'static str) -> Result<()> {
    if p.size() > limit {
        return Err(Error::GuardExceeded {
            what,
            size: p.size(),
            limit,
        });
    }
    Ok(())
}

/// Number of ways to hand out the values `1..=n` in increasing order, where
/// `allowed(x, assigned)` says whether `x` may take the next value after the
/// elements in `assigned`. Subset dynamic program.
fn count_orders(n: usize, allowed: impl Fn(usize, u64) -> bool) -> BigUint {
    let full = (1usize << n) - 1;
    let mut ways = vec![0u128; full + 1];
    ways[0] = 1;
    for a in 0..full {
        if ways[a] == 0 {
            continue;
        }
        for x in 0..n {
            if a & (1 << x) == 0 && allowed(x, a as u64) {
                ways[a | (1 << x)] += ways[a];
            }
        }
    }
    BigUint::from(ways[full])
}

/// Every such assignment, as `phi[label - 1] = value`, in lexicographic order
/// of the element sequence.
fn list_orders(n: usize, allowed: impl Fn(usize, u64) -> bool) -> Vec<Vec<usize>> {
    fn rec(
        n: usize,
        allowed: &dyn Fn(usize, u64) -> bool,
        assigned: u64,
        phi: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = assigned.count_ones() as usize;
        if v == n {
            out.push(phi.clone());
            return;
        }
        for x in 0..n {
            if assigned & bit(x) == 0 && allowed(x, assigned) {
                phi[x] = v + 1;
                rec(n, allowed, assigned | bit(x), phi, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &allowed, 0, &mut vec![0; n], &mut out);
    out
}

fn check_labeling(p: &LabeledPoset, phi: &[usize]) -> Result<()> {
    check_permutation(phi, p.size())
}

fn zigzag_allowed(p: &LabeledPoset) -> impl Fn(usize, u64) -> bool + '_ {
    let minimal = p.minimal_mask();
    move |x, assigned| {
        if minimal & bit(x) != 0 {
            assigned == 0 || p.up(x) & assigned != 0
        } else {
            p.down(x) & minimal & assigned != 0
        }
    }
}

/// A bijection `φ: P → [n]` (given as `phi[label - 1]`) is a zigzag labeling
/// when every minimal `x` with `φ(x) ≠ 1` lies below some `y` with
/// `φ(y) < φ(x)`, and every non-minimal `x` lies above some minimal `y` with
/// `φ(y) < φ(x)`.
pub fn is_zigzag_labeling(p: &LabeledPoset, phi: &[usize]) -> Result<bool> {
    check_labeling(p, phi)?;
    let minimal = p.minimal_mask();
    let smaller = |x: usize, candidates: u64| bits(candidates).any(|y| phi[y] < phi[x]);
    Ok((0..p.size()).all(|x| {
        if minimal & bit(x) != 0 {
            phi[x] == 1 || smaller(x, p.up(x))
        } else {
            smaller(x, p.down(x) & minimal)
        }
    }))
}

pub fn enumerate_zigzag_labelings(p: &LabeledPoset, guards: &Guards) -> Result<Vec<Vec<usize>>> {
    p.require_natural()?;
    guard(p, guards.labelings, "enumerate_zigzag_labelings")?;
    if p.is_empty() {
        return Ok(Vec::new());
    }
    Ok(list_orders(p.size(), zigzag_allowed(p)))
}

pub fn count_zigzag_labelings(p: &LabeledPoset, guards: &Guards) -> Result<BigUint> {
    p.require_natural()?;
    guard(p, guards.linear_extensions, "count_zigzag_labelings")?;
    if p.is_empty() {
        return Ok(BigUint::zero());
    }
    Ok(count_orders(p.size(), zigzag_allowed(p)))
}

/// `(n-1)! Max1(K̃_P)`. The empty poset gives 0.
pub fn zigzag_count_formula(p: &LabeledPoset, guards: &Guards) -> Result<Rational> {
    if p.is_empty() {
        p.require_natural()?;
        return Ok(Rational::zero());
    }
    let kt = k_tilde(p, guards)?;
    let fact: BigUint = (1..p.size()).map(BigUint::from).product();
    Ok(max1(&kt)? * Rational::from_integer(BigInt::from(fact)))
}

/// The type `π` of a labeling: `φ(z_π1) > φ(z_π2) > ... > φ(z_πm)`, with the
/// minimal elements `z_1, ..., z_m` in label order.
pub fn zigzag_type(p: &LabeledPoset, phi: &[usize]) -> Result<Vec<usize>> {
    check_labeling(p, phi)?;
    let z: Vec<usize> = bits(p.minimal_mask()).collect();
    let mut pi: Vec<usize> = (1..=z.len()).collect();
    pi.sort_by_key(|&i| std::cmp::Reverse(phi[z[i - 1]]));
    Ok(pi)
}

/// For each element, the element that must carry a smaller value in a
/// `(π, σ)`-labeling, as predecessor masks.
fn pi_sigma_predecessors(p: &LabeledPoset, pi: &[usize], sigma: &[usize]) -> Result<Vec<u64>> {
    let z: Vec<usize> = bits(p.minimal_mask()).collect();
    check_permutation(pi, z.len())?;
    let levels = sigma_levels(p, sigma)?;
    let mut pred = vec![0u64; p.size()];
    for w in pi.windows(2) {
        pred[z[w[0] - 1]] |= bit(z[w[1] - 1]);
    }
    for (y, &l) in levels.iter().enumerate() {
        let root = z[sigma[l - 1] - 1];
        if root != y {
            pred[y] |= bit(root);
        }
    }
    Ok(pred)
}

/// Whether `φ` is a `(π, σ)`-labeling: the minimal elements decrease along `π`,
/// and each `y` has `φ(y) ≥ φ(z)` for the minimal `z` at the same level of the
/// `σ`-partition.
pub fn is_pi_sigma_labeling(
    p: &LabeledPoset,
    pi: &[usize],
    sigma: &[usize],
    phi: &[usize],
) -> Result<bool> {
    check_labeling(p, phi)?;
    let pred = pi_sigma_predecessors(p, pi, sigma)?;
    Ok((0..p.size()).all(|y| bits(pred[y]).all(|x| phi[x] < phi[y])))
}

/// `T_P(π, σ)`.
pub fn enumerate_t(
    p: &LabeledPoset,
    pi: &[usize],
    sigma: &[usize],
    guards: &Guards,
) -> Result<Vec<Vec<usize>>> {
    guard(p, guards.labelings, "enumerate_t")?;
    let pred = pi_sigma_predecessors(p, pi, sigma)?;
    Ok(list_orders(p.size(), |x, a| pred[x] & !a == 0))
}

/// `|T_P(π, σ)|`.
pub fn count_t(
    p: &LabeledPoset,
    pi: &[usize],
    sigma: &[usize],
    guards: &Guards,
) -> Result<BigUint> {
    guard(p, guards.linear_extensions, "count_t")?;
    let pred = pi_sigma_predecessors(p, pi, sigma)?;
    if p.is_empty() {
        return Ok(BigUint::one());
    }
    Ok(count_orders(p.size(), |x, a| pred[x] & !a == 0))
}

fn check_positions(s: &BTreeSet<usize>, m: usize) -> Result<()> {
    match s.iter().find(|&&i| i == 0 || i >= m) {
        Some(&value) => Err(Error::SetElementOutOfRange {
            value,
            max: m.saturating_sub(1),
        }),
        None => Ok(()),
    }
}

/// `f_S(π)`: deletes `π_s` for `s ∈ S` and appends them in decreasing order of `s`.
pub fn apply_f_s(pi: &[usize], s: &BTreeSet<usize>) -> Result<Vec<usize>> {
    check_permutation(pi, pi.len())?;
    check_positions(s, pi.len())?;
    let mut out: Vec<usize> = (1..=pi.len())
        .filter(|i| !s.contains(i))
        .map(|i| pi[i - 1])
        .collect();
    out.extend(s.iter().rev().map(|&i| pi[i - 1]));
    Ok(out)
}

/// `g_S`, the inverse of `f_S`.
pub fn apply_g_s(pi: &[usize], s: &BTreeSet<usize>) -> Result<Vec<usize>> {
    check_permutation(pi, pi.len())?;
    check_positions(s, pi.len())?;
    let m = pi.len();
    let keep = m - s.len();
    let mut out = vec![0; m];
    for (k, &i) in s.iter().enumerate() {
        out[i - 1] = pi[m - 1 - k];
    }
    let mut rest = pi[..keep].iter();
    for slot in out.iter_mut().filter(|v| **v == 0) {
        *slot = *rest.next().expect("sizes agree");
    }
    Ok(out)
}

/// Irreducibility verdict for a naturally labeled poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// Sizes of the connected components, whose `K` factor `K_P`.
    pub component_sizes: Vec<usize>,
    /// `Max1(K̃_P)`, positive exactly for connected `P`.
    pub certificate: Rational,
}

/// `K_P` is irreducible over QSym exactly when `P` is connected.
/// Labeled posets with strict edges are rejected.
pub fn is_irreducible_natural(p: &LabeledPoset, guards: &Guards) -> Result<Irreducibility> {
    p.require_natural()?;
    let component_sizes: Vec<usize> = p.component_labels().iter().map(Vec::len).collect();
    let certificate = if p.is_empty() {
        Rational::zero()
    } else {
        max1(&k_tilde(p, guards)?)?
    };
    Ok(Irreducibility {
        irreducible: p.is_connected(),
        component_sizes,
        certificate,
    })
}
