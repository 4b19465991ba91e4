use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("vertex {label} is outside 1..={order}")]
    InvalidVertex { label: usize, order: usize },
    #[error("loop edge at vertex {label}")]
    LoopEdge { label: usize },
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("edge probability must lie in (0, 1], got {num}/{den}")]
    InvalidProbability { num: u32, den: u32 },
    #[error("no connected sample after {attempts} attempts")]
    RetryCapExhausted { attempts: usize },
    #[error("order {order} exceeds the cap {cap} for this exact computation")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("vertex set is for order {found}, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix has {found} entries, expected {expected}")]
    EntryCount { expected: usize, found: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("control set must be nonempty")]
    EmptyControlSet,
    #[error("the Lie closure needs at least one generator")]
    NoGenerators,
    #[error("unknown matrix kind `{0}` (expected adjacency, laplacian or random:SEED)")]
    UnknownMatrixKind(alloc::string::String),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(&'static str),
}
