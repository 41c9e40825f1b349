use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive: {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("parts are not weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),

    #[error("set element {value} lies outside [1, {max}]")]
    SetElementOutOfRange { value: usize, max: usize },

    #[error("near-concatenation requires two nonempty compositions")]
    EmptyNearConcat,

    #[error("{fine} does not refine {coarse}")]
    NotRefinement { fine: String, coarse: String },

    #[error("{what}: size {size} exceeds enumeration guard {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("not a permutation of [{n}]: {perm:?}")]
    InvalidPermutation { n: usize, perm: Vec<usize> },

    #[error("{0} must be homogeneous; found degrees {1:?}")]
    NotHomogeneous(&'static str, Vec<usize>),

    #[error("{0} is undefined on constants (degree 0)")]
    ConstantInput(&'static str),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("relations contain a cycle through label {0}")]
    Cyclic(usize),

    #[error("posets are limited to {max} elements, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("not naturally labeled: cover {0} < {1} is strict")]
    NotNaturallyLabeled(usize, usize),

    #[error("label {0} is not a minimal element")]
    NotMinimal(usize),

    #[error("mu {mu:?} is not contained in lambda {lambda:?}")]
    ShapeNotContained { lambda: Vec<usize>, mu: Vec<usize> },

    #[error("size mismatch: shape has {cells} cells, type sums to {weight}")]
    SizeMismatch { cells: usize, weight: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
