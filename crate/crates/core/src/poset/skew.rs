use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::Partition;
use crate::error::{Error, Result};

use super::LabeledPoset;

/// A cell `(row, col)`, 1-based, row 1 on top (English convention).
pub type Cell = (usize, usize);

/// The skew shape `λ/μ`. `{"lambda": [6,5,2], "mu": [2,1]}` as JSON.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShapeFile", into = "ShapeFile")]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

#[derive(Clone, Serialize, Deserialize)]
struct ShapeFile {
    lambda: Vec<usize>,
    #[serde(default)]
    mu: Vec<usize>,
}

impl TryFrom<ShapeFile> for SkewShape {
    type Error = Error;
    fn try_from(f: ShapeFile) -> Result<Self> {
        SkewShape::new(
            Partition::from_padded(f.lambda)?,
            Partition::from_padded(f.mu)?,
        )
    }
}

impl From<SkewShape> for ShapeFile {
    fn from(s: SkewShape) -> Self {
        ShapeFile {
            lambda: s.lambda.parts().to_vec(),
            mu: s.mu.parts().to_vec(),
        }
    }
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if !lambda.contains(&mu) {
            return Err(Error::ShapeNotContained {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
            });
        }
        Ok(SkewShape { lambda, mu })
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        Self::new(
            Partition::from_padded(lambda.to_vec())?,
            Partition::from_padded(mu.to_vec())?,
        )
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            lambda,
            mu: Partition::empty(),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn size(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.lambda.len())
            .flat_map(|i| (self.mu.part(i) + 1..=self.lambda.part(i)).map(move |c| (i + 1, c)))
            .collect()
    }

    pub fn contains_2x2(&self) -> bool {
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        cells.iter().any(|&(r, c)| {
            cells.contains(&(r + 1, c))
                && cells.contains(&(r, c + 1))
                && cells.contains(&(r + 1, c + 1))
        })
    }

    /// Edge-connectedness of the cells; the empty shape is not connected.
    pub fn is_connected(&self) -> bool {
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        let Some(&start) = cells.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some((r, c)) = stack.pop() {
            let nbrs = [
                (r + 1, c),
                (r, c + 1),
                (r.wrapping_sub(1), c),
                (r, c.wrapping_sub(1)),
            ];
            for nb in nbrs {
                if cells.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Connected and free of 2×2 squares.
    pub fn is_border_strip(&self) -> bool {
        self.is_connected() && !self.contains_2x2()
    }

    /// Number of occupied rows minus one.
    pub fn height(&self) -> usize {
        let rows = (0..self.lambda.len())
            .filter(|&i| self.lambda.part(i) > self.mu.part(i))
            .count();
        rows.saturating_sub(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda, self.mu)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The label of each cell: columns left to right, each read from its lowest
/// cell upward.
pub fn skew_cell_labels(shape: &SkewShape) -> BTreeMap<Cell, usize> {
    let mut cells = shape.cells();
    cells.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    cells.into_iter().zip(1..).collect()
}

/// The labeled poset of `λ/μ`: cells ordered componentwise, so `(r, c)` is
/// covered by `(r, c + 1)` (a natural edge) and by `(r + 1, c)` (a strict edge).
/// Its `(P, ω)`-partitions are the semistandard fillings of the shape.
pub fn skew_shape_poset(shape: &SkewShape) -> LabeledPoset {
    let labels = skew_cell_labels(shape);
    let mut covers = Vec::new();
    for (&(r, c), &a) in &labels {
        for nb in [(r, c + 1), (r + 1, c)] {
            if let Some(&b) = labels.get(&nb) {
                covers.push((a, b));
            }
        }
    }
    LabeledPoset::new(labels.len(), &covers).expect("cell order is acyclic")
}

/// Every skew shape with exactly `cells` cells and no empty row or column,
/// so that distinct results are distinct diagrams up to translation.
pub fn enumerate_skew_shapes(cells: usize) -> Vec<SkewShape> {
    fn rec(
        remaining: usize,
        prev: (usize, usize),
        lam: &mut Vec<usize>,
        mu: &mut Vec<usize>,
        out: &mut Vec<SkewShape>,
    ) {
        if remaining == 0 {
            if mu.last() != Some(&0) {
                return;
            }
            let shape = SkewShape {
                lambda: Partition::from_padded(lam.clone()).unwrap(),
                mu: Partition::from_padded(mu.clone()).unwrap(),
            };
            let covered: BTreeSet<usize> = shape.cells().into_iter().map(|(_, c)| c).collect();
            if covered.len() == lam[0] {
                out.push(shape);
            }
            return;
        }
        let (lmax, mmax) = prev;
        for m in 0..=mmax {
            for l in m + 1..=lmax.min(m + remaining) {
                lam.push(l);
                mu.push(m);
                rec(remaining - (l - m), (l, m), lam, mu, out);
                lam.pop();
                mu.pop();
            }
        }
    }
    let mut out = Vec::new();
    if cells > 0 {
        // Without empty columns the diagram is at most `2 * cells - 1` wide.
        rec(
            cells,
            (2 * cells - 1, cells - 1),
            &mut Vec::new(),
            &mut Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_of_652_over_21() {
        let s = SkewShape::from_parts(&[6, 5, 2], &[2, 1]).unwrap();
        let labels = skew_cell_labels(&s);
        let row = |r: usize| -> Vec<usize> {
            labels
                .iter()
                .filter(|((rr, _), _)| *rr == r)
                .map(|(_, &l)| l)
                .collect()
        };
        assert_eq!(row(3), vec![1, 2]);
        assert_eq!(row(2), vec![3, 4, 6, 8]);
        assert_eq!(row(1), vec![5, 7, 9, 10]);
        let p = skew_shape_poset(&s);
        assert_eq!(p.size(), 10);
    }

    #[test]
    fn hook_poset() {
        let s = SkewShape::from_parts(&[2, 1], &[]).unwrap();
        let p = skew_shape_poset(&s);
        // (1,1) has label 2; (1,2) label 3; (2,1) label 1.
        assert_eq!(p.covers(), &[(2, 1), (2, 3)]);
        assert_eq!(p.strict_covers(), vec![(2, 1)]);
        assert_eq!(p.natural_covers(), vec![(2, 3)]);
        assert_eq!(
            skew_shape_poset(&SkewShape::from_parts(&[1], &[]).unwrap()).size(),
            1
        );
    }

    #[test]
    fn shape_predicates() {
        let s = SkewShape::from_parts(&[6, 3, 3, 2], &[2, 2, 1]).unwrap();
        assert!(s.is_border_strip());
        assert_eq!(s.height(), 3);
        assert!(SkewShape::from_parts(&[2, 2], &[]).unwrap().contains_2x2());
        assert!(!SkewShape::from_parts(&[2, 1], &[1]).unwrap().is_connected());
        assert!(SkewShape::from_parts(&[1], &[2]).is_err());
        let j = s.to_json();
        assert_eq!(SkewShape::from_json(&j).unwrap(), s);
        assert_eq!(
            SkewShape::from_json(r#"{"lambda":[6,5,2],"mu":[2,1]}"#)
                .unwrap()
                .size(),
            10
        );
    }

    #[test]
    fn normalized_shape_counts() {
        // One cell; two cells: row, column, two disconnected cells.
        assert_eq!(enumerate_skew_shapes(1).len(), 1);
        let two = enumerate_skew_shapes(2);
        assert_eq!(two.len(), 3, "{two:?}");
        for n in 1..=6 {
            let shapes = enumerate_skew_shapes(n);
            let diagrams: BTreeSet<Vec<Cell>> = shapes.iter().map(|s| s.cells()).collect();
            assert_eq!(diagrams.len(), shapes.len());
            assert!(shapes.iter().all(|s| s.size() == n));
        }
    }
}
