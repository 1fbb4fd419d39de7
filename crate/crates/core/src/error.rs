use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("duplicate label {label:?} in dimension {dim}")]
    DuplicateLabel { dim: usize, label: String },

    #[error("dimension {0} has no cells")]
    EmptyDimension(usize),

    #[error("invalid boundary entry: {0}")]
    InvalidEntry(String),

    #[error("B_{}·B_{k} is nonzero at row {row}, column {col}", .k - 1)]
    ExactnessViolated { k: usize, row: usize, col: usize },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("polygon {polygon:?} uses missing edge {from}-{to}")]
    MissingEdge { polygon: Vec<String>, from: String, to: String },

    #[error("polygon {0:?} repeats a vertex")]
    RepeatedVertexInPolygon(Vec<String>),

    #[error("polygon {0:?} has fewer than three vertices")]
    DegeneratePolygon(Vec<String>),

    #[error("parallel edges between {0:?} and {1:?}")]
    ParallelEdge(String, String),

    #[error("0-cells have no boundary")]
    DimZeroHasNoBoundary,

    #[error("cell index {index} out of range for dimension {dim}")]
    CellOutOfRange { dim: usize, index: usize },

    #[error("bad dimension {0}")]
    BadDimension(usize),

    #[error("complex is not simple")]
    NotSimple,

    #[error("operation supports complexes of dimension at most {max}, got {dim}")]
    DimensionTooHigh { dim: usize, max: usize },

    #[error("{dim}-cell {index} does not bound a simple oriented cycle")]
    NotSimpleCycle { dim: usize, index: usize },

    #[error("integer overflow in exact arithmetic")]
    IntegerOverflow,

    #[error("chain is not a cycle (‖Bx‖ = {0:e})")]
    NotACycle(f64),

    #[error("non-positive weight {value} at dimension {dim}, index {index}")]
    NonPositiveWeight { dim: usize, index: usize, value: f64 },

    #[error("{cells} cells in dimension {dim} exceed the dense solver limit of {limit}")]
    TooLarge { dim: usize, cells: usize, limit: usize },

    #[error("unknown filter {0:?}")]
    UnknownFilter(String),

    #[error("simplex set is not closed under faces: {0:?} is missing")]
    NotDownwardClosed(Vec<usize>),

    #[error("vertex {0} belongs to no simplex")]
    UncoveredVertex(usize),

    #[error("more than {0} simplices")]
    TooManySimplices(usize),

    #[error("invalid point cloud: {0}")]
    InvalidPointCloud(String),

    #[error("edges {0} and {1} cross")]
    EdgesCross(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("face through vertices {0:?} is not a simple cycle")]
    NonSimpleFace(Vec<usize>),

    #[error("more than {0} chordless cycles")]
    CapExceeded(usize),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("parse error: {0}")]
    Parse(String),
}
