//! P-partition generating functions in the quasisymmetric power sum basis.
//!
//! The crate covers compositions and their combinatorics, the Hopf algebra
//! `QSym` in the `M`, `L` and `psi` bases, labeled posets, the `psi`
//! expansion of `K_(P,ω)` via pointed partitions, the leading term `K̃`,
//! and border strip expansions of skew Schur functions.

pub mod composition;
pub mod error;
pub mod poset;
pub mod ppartition;
pub mod qsym;
pub mod tableaux;

pub use composition::{Composition, Partition};
pub use error::{Error, Result};
pub use poset::{LabeledPoset, SkewShape};
pub use ppartition::{RootedDiagnosis, StarredPartition};
pub use qsym::{Basis, QSymElement, Rational, TensorElement};
pub use tableaux::BorderStripTableau;

/// Size limits for exhaustive enumerations. Exceeding one is an error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest `n` for filtering `S_n` in `enumerate_pi`.
    pub pi: usize,
    /// Largest poset listed element by element (linear extensions, pointed partitions).
    pub linear_extensions: usize,
    /// Largest poset whose labelings are enumerated.
    pub labelings: usize,
    /// Largest size for series-parallel enumeration.
    pub series_parallel: usize,
}

impl Guards {
    pub const DEFAULT: Guards = Guards {
        pi: 10,
        linear_extensions: 12,
        labelings: 9,
        series_parallel: 8,
    };

    /// Every limit set to `n`.
    pub fn uniform(n: usize) -> Guards {
        Guards {
            pi: n,
            linear_extensions: n,
            labelings: n,
            series_parallel: n,
        }
    }
}

impl Default for Guards {
    fn default() -> Self {
        Guards::DEFAULT
    }
}
