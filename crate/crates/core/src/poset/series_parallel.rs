use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::Guards;

use super::{bit, bits, LabeledPoset};

/// Canonical decomposition tree of a series-parallel poset.
///
/// Series children are listed bottom to top and are never series nodes.
/// Parallel children are sorted and are never parallel nodes. Two SP posets are
/// isomorphic exactly when their trees are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpTree {
    Leaf,
    Series(Vec<SpTree>),
    Parallel(Vec<SpTree>),
}

impl SpTree {
    pub fn size(&self) -> usize {
        match self {
            SpTree::Leaf => 1,
            SpTree::Series(c) | SpTree::Parallel(c) => c.iter().map(SpTree::size).sum(),
        }
    }

    /// The naturally labeled poset built by ordinal sums and disjoint unions.
    pub fn to_poset(&self) -> LabeledPoset {
        match self {
            SpTree::Leaf => LabeledPoset::chain(1),
            SpTree::Series(c) => c
                .iter()
                .map(SpTree::to_poset)
                .reduce(|a, b| a.ordinal_sum(&b))
                .unwrap_or_else(LabeledPoset::empty),
            SpTree::Parallel(c) => c
                .iter()
                .map(SpTree::to_poset)
                .reduce(|a, b| a.disjoint_union(&b))
                .unwrap_or_else(LabeledPoset::empty),
        }
    }
}

impl fmt::Display for SpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sep, c) = match self {
            SpTree::Leaf => return f.write_str("1"),
            SpTree::Series(c) => (" ⊕ ", c),
            SpTree::Parallel(c) => (" ⊔ ", c),
        };
        f.write_str("(")?;
        for (i, t) in c.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for SpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct TreeTable {
    /// `all[k]`: every canonical tree of size `k`.
    all: Vec<Vec<SpTree>>,
}

impl TreeTable {
    fn build(n: usize) -> Self {
        let mut all: Vec<Vec<SpTree>> = vec![Vec::new(); n + 1];
        for k in 1..=n {
            if k == 1 {
                all[1].push(SpTree::Leaf);
                continue;
            }
            let mut trees = Vec::new();
            // Series: ordered sequences of at least two non-series trees.
            let non_series = |all: &Vec<Vec<SpTree>>, s: usize| -> Vec<SpTree> {
                all[s]
                    .iter()
                    .filter(|t| !matches!(t, SpTree::Series(_)))
                    .cloned()
                    .collect()
            };
            let mut seqs: Vec<(usize, Vec<SpTree>)> = vec![(0, Vec::new())];
            while let Some((used, seq)) = seqs.pop() {
                for s in 1..=k - used {
                    if seq.is_empty() && s == k {
                        continue;
                    }
                    for t in non_series(&all, s) {
                        let mut next = seq.clone();
                        next.push(t);
                        if used + s == k {
                            trees.push(SpTree::Series(next));
                        } else {
                            seqs.push((used + s, next));
                        }
                    }
                }
            }
            // Parallel: multisets of at least two non-parallel trees, as sorted lists.
            let pool: Vec<SpTree> = (1..k)
                .flat_map(|s| all[s].iter().cloned())
                .filter(|t| !matches!(t, SpTree::Parallel(_)))
                .collect();
            fn multisets(
                pool: &[SpTree],
                start: usize,
                remaining: usize,
                cur: &mut Vec<SpTree>,
                out: &mut Vec<SpTree>,
            ) {
                if remaining == 0 {
                    if cur.len() >= 2 {
                        out.push(SpTree::Parallel(cur.clone()));
                    }
                    return;
                }
                for i in start..pool.len() {
                    let s = pool[i].size();
                    if s <= remaining {
                        cur.push(pool[i].clone());
                        multisets(pool, i, remaining - s, cur, out);
                        cur.pop();
                    }
                }
            }
            let mut pool_sorted = pool;
            pool_sorted.sort();
            multisets(&pool_sorted, 0, k, &mut Vec::new(), &mut trees);
            trees.sort();
            all[k] = trees;
        }
        TreeTable { all }
    }
}

/// Every canonical SP tree with `n` leaves (1, 2, 5, 15, 48, 167, 602, 2256, ...).
pub fn series_parallel_trees(n: usize, guards: &Guards) -> Result<Vec<SpTree>> {
    if n > guards.series_parallel {
        return Err(Error::GuardExceeded {
            what: "enumerate_series_parallel",
            size: n,
            limit: guards.series_parallel,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(TreeTable::build(n).all.swap_remove(n))
}

/// One naturally labeled representative per isomorphism class of SP posets on `n` elements.
pub fn enumerate_series_parallel(n: usize, guards: &Guards) -> Result<Vec<LabeledPoset>> {
    Ok(series_parallel_trees(n, guards)?
        .iter()
        .map(SpTree::to_poset)
        .collect())
}

fn decompose(p: &LabeledPoset, mask: u64) -> Option<SpTree> {
    let idx: Vec<usize> = bits(mask).collect();
    if idx.len() == 1 {
        return Some(SpTree::Leaf);
    }
    let comps = p.component_masks_within(mask);
    if comps.len() > 1 {
        let mut children = comps
            .into_iter()
            .map(|m| decompose(p, m))
            .collect::<Option<Vec<_>>>()?;
        children.sort();
        return Some(SpTree::Parallel(children));
    }
    // Components of the incomparability graph are the series blocks.
    let mut left = mask;
    let mut blocks = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut block = bit(start);
        let mut frontier = block;
        while frontier != 0 {
            let mut next = 0;
            for i in bits(frontier) {
                next |= mask & !(p.up(i) | p.down(i) | bit(i));
            }
            frontier = next & !block;
            block |= next;
        }
        blocks.push(block);
        left &= !block;
    }
    if blocks.len() == 1 {
        return None;
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &b in &blocks {
        let i = b.trailing_zeros() as usize;
        counts.insert((p.down(i) & mask).count_ones() as usize, b);
    }
    let children = counts
        .into_values()
        .map(|m| decompose(p, m))
        .collect::<Option<Vec<_>>>()?;
    Some(SpTree::Series(children))
}

/// The canonical SP tree of `p`, or `None` when `p` is not series-parallel.
/// The empty poset has no tree.
pub fn sp_decomposition(p: &LabeledPoset) -> Option<SpTree> {
    if p.is_empty() {
        return None;
    }
    decompose(p, p.full_mask())
}

impl LabeledPoset {
    pub fn is_series_parallel(&self) -> bool {
        sp_decomposition(self).is_some()
    }
}
