use thiserror::Error;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a frame needs at least 2 labels, got {0}")]
    TooFewLabels(usize),

    #[error("frames are limited to 64 labels, got {0}")]
    FrameTooLarge(usize),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("label {0:?} does not belong to the frame")]
    UnknownLabel(String),

    #[error("singleton index {index} out of range for a frame of {cardinality}")]
    IndexOutOfRange { index: usize, cardinality: usize },

    #[error("operands belong to different frames")]
    FrameMismatch,

    #[error("the empty subset is not allowed here")]
    EmptySubset,

    #[error("partition cells overlap")]
    OverlappingCells,

    #[error("partition cells do not cover the frame")]
    IncompleteCover,

    #[error("a partition needs at least 2 cells")]
    TooFewCells,

    #[error("every target cell must be a union of source cells")]
    NotACoarsening,

    #[error("belief masses sum to {sum}, expected 1")]
    MassSum { sum: f64 },

    #[error("belief mass {0} lies outside [0, 1]")]
    MassOutOfRange(f64),

    #[error("the empty set cannot be a focal element")]
    EmptyFocalElement,

    #[error("weight must be positive and finite, got {0}")]
    InvalidWeight(f64),

    #[error("prior constant must be positive and finite, got {0}")]
    InvalidPriorConstant(f64),

    #[error("prior constants differ: {left} vs {right}")]
    PriorConstantMismatch { left: f64, right: f64 },

    #[error("per-cell values must be non-negative and finite, got {0}")]
    NegativeCount(f64),

    #[error("expected {expected} per-cell values, got {got}")]
    CountLength { expected: usize, got: usize },

    #[error("relative-infinity profile sums to {sum}, expected 1")]
    EtaSum { sum: f64 },

    #[error("operation undefined for dogmatic evidence")]
    DogmaticEvidence,

    #[error("focal elements below the whole frame must be pairwise disjoint")]
    NotDirichlet,

    #[error("focal element {0} is not a cell of the partition")]
    FocalElementNotCell(String),

    #[error("operands use different partitions")]
    PartitionMismatch,

    #[error("expected a point with {expected} coordinates, got {got}")]
    SimplexLength { expected: usize, got: usize },

    #[error("simplex coordinates must sum to 1, got {sum}")]
    SimplexSum { sum: f64 },

    #[error("simplex coordinate {0} lies outside [0, 1]")]
    SimplexCoordinate(f64),

    #[error("density diverges on the simplex boundary when a shape parameter is below 1")]
    DensityDiverges,

    #[error("density grids cover 2 or 3 cells, got {0}")]
    GridArity(usize),

    #[error("resolution {0} is too coarse to produce interior grid points")]
    InvalidResolution(usize),

    #[error("beliefs are totally conflicting: the normalised combination is undefined")]
    TotalConflict,

    #[error("{label}: computed {computed}, expected {expected}")]
    ReproductionMismatch {
        label: String,
        computed: f64,
        expected: f64,
    },

    #[error("subset must be a list of labels or \"*\"")]
    InvalidSubsetSpec,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
