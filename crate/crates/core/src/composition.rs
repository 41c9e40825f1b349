//! Compositions, partitions, and the refinement machinery built on them.
//!
//! A composition of `n` corresponds to a subset of `[n-1]` through its
//! partial sums. Internally that subset is kept as a bitmask with bit `s-1`
//! standing for `s`, which caps degrees at 64.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Guards;

/// Largest degree representable by the bitmask encoding of descent sets.
pub const MAX_DEGREE: usize = 64;

/// A finite sequence of positive integers. The empty composition is the
/// unique composition of 0.
///
/// Ordered by length first, then lexicographically, so that maps keyed by
/// compositions iterate in a stable, readable order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `(n)`; the empty composition when `n == 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `1^k`.
    pub fn ones(k: usize) -> Self {
        Composition(vec![1; k])
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `l(α)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The composition whose descent set is the complement of `D(α)` in `[n-1]`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        if n == 0 {
            return Self::empty();
        }
        let full = full_mask(n);
        Self::from_mask(!self.descent_mask() & full, n)
    }

    /// `D(α)`: the partial sums `α₁, α₁+α₂, …`, excluding `n` itself.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    pub(crate) fn descent_mask(&self) -> u64 {
        let mut acc = 0;
        let mut mask = 0u64;
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::descent_mask`] for compositions of `n >= 1`.
    pub(crate) fn from_mask(mask: u64, n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
        let mut last = 0;
        for s in 1..n {
            if mask & (1 << (s - 1)) != 0 {
                parts.push(s - last);
                last = s;
            }
        }
        parts.push(n - last);
        Composition(parts)
    }

    /// `α · β`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `α ⊙ β`: the last part of `α` merges with the first part of `β`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyNearConcat);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// `self ⪯ coarse`: `coarse` is obtained by summing consecutive blocks of `self`.
    pub fn refines(&self, coarse: &Composition) -> bool {
        if self.size() != coarse.size() {
            return false;
        }
        let fine = self.descent_mask();
        coarse.descent_mask() & !fine == 0
    }

    /// All `β ⪰ α`, in canonical order. There are `2^(l(α)-1)` of them.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let mut out: Vec<_> = submasks(self.descent_mask())
            .map(|m| Self::from_mask(m, n))
            .collect();
        out.sort();
        out
    }

    /// All `β ⪯ α`, in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        if n == 0 {
            return vec![Self::empty()];
        }
        let base = self.descent_mask();
        let free = full_mask(n) & !base;
        let mut out: Vec<_> = submasks(free)
            .map(|m| Self::from_mask(base | m, n))
            .collect();
        out.sort();
        out
    }

    /// Splits `self ⪯ coarse` into the blocks `α⁽¹⁾, …, α⁽ᵏ⁾` with `α⁽ⁱ⁾ ⊨ coarse_i`.
    pub fn blocks(&self, coarse: &Composition) -> Result<Vec<Composition>> {
        if !self.refines(coarse) {
            return Err(Error::NotRefinement {
                fine: self.to_string(),
                coarse: coarse.to_string(),
            });
        }
        let mut out = Vec::with_capacity(coarse.len());
        let mut it = self.0.iter().copied();
        for &target in &coarse.0 {
            let mut block = Vec::new();
            let mut acc = 0;
            while acc < target {
                let p = it.next().expect("refinement checked");
                acc += p;
                block.push(p);
            }
            out.push(Composition(block));
        }
        Ok(out)
    }

    /// Cuts `self` into consecutive pieces with sums `degrees`, if possible.
    pub fn split_by_sums(&self, degrees: &[usize]) -> Option<Vec<Composition>> {
        let mut out = Vec::with_capacity(degrees.len());
        let mut idx = 0;
        for &d in degrees {
            let mut acc = 0;
            let start = idx;
            while acc < d && idx < self.0.len() {
                acc += self.0[idx];
                idx += 1;
            }
            if acc != d {
                return None;
            }
            out.push(Composition(self.0[start..idx].to_vec()));
        }
        (idx == self.0.len()).then_some(out)
    }

    /// The partition obtained by sorting the parts in decreasing order.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All compositions of `n` in canonical order.
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Self::empty()];
        }
        let mut out: Vec<_> = (0..1u64 << (n - 1))
            .map(|m| Self::from_mask(m, n))
            .collect();
        out.sort();
        out
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        (1u64 << (n - 1)) - 1
    }
}

/// Every submask of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `[1,1,4,2,1]`; `[]` is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_bracketed(s)?)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

pub(crate) fn parse_bracketed(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[..]`, got `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad part `{}`: {e}", p.trim())))
        })
        .collect()
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Like [`Partition::new`] but drops trailing zeros first, so `[3,1,0]` is accepted.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Multiplicities `m_i` as `(part, count)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All distinct rearrangements `α ∼ λ`, in canonical order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = vec![Composition(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Composition(parts.clone()));
        }
        out.sort();
        out
    }

    /// All partitions of `n`, largest parts first.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&Composition(self.0.clone()), f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_bracketed(s)?)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns `false` (leaving `v` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    let ok = perm.len() == n
        && perm
            .iter()
            .all(|&v| (1..=n).contains(&v) && !std::mem::replace(&mut seen[v], true));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation {
            n,
            perm: perm.to_vec(),
        })
    }
}

/// `co(S)` for `S ⊆ [n-1]`.
pub fn composition_of_set(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    let mut mask = 0u64;
    for &s in set {
        if s == 0 || s >= n {
            return Err(Error::SetElementOutOfRange {
                value: s,
                max: n.saturating_sub(1),
            });
        }
        mask |= 1 << (s - 1);
    }
    Ok(Composition::from_mask(mask, n))
}

/// `π(α) = ∏ᵢ (α₁ + ⋯ + αᵢ)`.
pub fn pi(alpha: &Composition) -> BigUint {
    let mut acc = 0usize;
    alpha.parts().iter().fold(BigUint::one(), |prod, &p| {
        acc += p;
        prod * BigUint::from(acc)
    })
}

/// `π(α, β) = ∏ᵢ π(α⁽ⁱ⁾)` over the blocks of `α` that merge into each part of `β`.
pub fn pi_rel(alpha: &Composition, beta: &Composition) -> Result<BigUint> {
    Ok(alpha
        .blocks(beta)?
        .iter()
        .fold(BigUint::one(), |prod, block| prod * pi(block)))
}

/// `z_α = ∏ᵢ i^{mᵢ} mᵢ!`, depending only on the multiset of parts.
pub fn z(alpha: &Composition) -> BigUint {
    z_partition(&alpha.sorted())
}

pub fn z_partition(lambda: &Partition) -> BigUint {
    let mut out = BigUint::one();
    for (part, mult) in lambda.multiplicities() {
        for k in 1..=mult {
            out *= BigUint::from(part) * BigUint::from(k);
        }
    }
    out
}

/// Membership in `Π(α, β)`: inside each `β`-block, every `α`-subblock ends at
/// the running maximum of the block so far.
pub fn is_in_pi(sigma: &[usize], alpha: &Composition, beta: &Composition) -> Result<bool> {
    let n = alpha.size();
    check_permutation(sigma, n)?;
    let blocks = alpha.blocks(beta)?;
    let mut pos = 0;
    for block in &blocks {
        let mut block_max = 0;
        for &sub in block.parts() {
            let seg = &sigma[pos..pos + sub];
            let seg_max = *seg.iter().max().unwrap();
            if seg[sub - 1] != seg_max || seg_max < block_max {
                return Ok(false);
            }
            block_max = seg_max;
            pos += sub;
        }
    }
    Ok(true)
}

/// `Π(α, β)` by filtering all of `S_n`. Test oracle; guarded by `guards.pi`.
pub fn enumerate_pi(
    alpha: &Composition,
    beta: &Composition,
    guards: &Guards,
) -> Result<Vec<Vec<usize>>> {
    let n = alpha.size();
    if n > guards.pi {
        return Err(Error::GuardExceeded {
            what: "enumerate_pi",
            size: n,
            limit: guards.pi,
        });
    }
    alpha.blocks(beta)?;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        if is_in_pi(&cur, alpha, beta)? {
            out.push(cur.clone());
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

/// The multiset `α ⧢ β` of all `C(k+l, k)` interleavings, with multiplicity.
pub fn shuffles(alpha: &Composition, beta: &Composition) -> Vec<Composition> {
    fn rec(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if a.is_empty() && b.is_empty() {
            out.push(Composition(cur.clone()));
            return;
        }
        if let Some((&h, rest)) = a.split_first() {
            cur.push(h);
            rec(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&h, rest)) = b.split_first() {
            cur.push(h);
            rec(a, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(alpha.parts(), beta.parts(), &mut Vec::new(), &mut out);
    out
}

/// The overlapping shuffles (quasi-shuffles) that index the monomial product
/// `M_α M_β`: interleavings where a part of `α` may also merge with a part of `β`.
pub fn quasi_shuffles(alpha: &Composition, beta: &Composition) -> Vec<Composition> {
    fn rec(a: &[usize], b: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        match (a.split_first(), b.split_first()) {
            (None, None) => out.push(Composition(cur.clone())),
            (ha, hb) => {
                if let Some((&x, ra)) = ha {
                    cur.push(x);
                    rec(ra, b, cur, out);
                    cur.pop();
                }
                if let Some((&y, rb)) = hb {
                    cur.push(y);
                    rec(a, rb, cur, out);
                    cur.pop();
                }
                if let (Some((&x, ra)), Some((&y, rb))) = (ha, hb) {
                    cur.push(x + y);
                    rec(ra, rb, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(alpha.parts(), beta.parts(), &mut Vec::new(), &mut out);
    out
}
