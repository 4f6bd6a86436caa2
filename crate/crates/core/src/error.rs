use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NonSquare { rows: usize, row: usize, len: usize },

    #[error("entry ({row}, {col}) = {value} is outside [0, 1]")]
    OutOfRange { row: usize, col: usize, value: f64 },

    #[error("asymmetry {delta:e} at ({row}, {col}) exceeds 1e-12")]
    AsymmetryTooLarge { row: usize, col: usize, delta: f64 },

    #[error("block boundary {boundary} does not fall on a cell boundary of a {m}-cell grid")]
    BlockBoundaryMisaligned { boundary: f64, m: usize },

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("function has zero norm")]
    ZeroFunction,

    #[error("graphon or graph is not connected")]
    NotConnected,

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("matrix size {size} exceeds the dense limit {limit}")]
    SizeTooLarge { size: usize, limit: usize },

    #[error("exhaustive search over {size} cells exceeds the limit {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("partition is empty or its sides overlap")]
    EmptyPartition,

    #[error("cell index {index} out of range for {m} cells")]
    CellOutOfRange { index: usize, m: usize },

    #[error("fractional bipartition has zero mass or violates alpha + gamma <= 1")]
    ZeroFractionalMass,

    #[error("graph has a positive diagonal weight")]
    NotLoopless,

    #[error("grid of {m} cells is not divisible by 2^{levels}")]
    GridMisaligned { m: usize, levels: u32 },

    #[error("minimum degree {min_degree:e} is below the floor {floor:e}")]
    DegreeFloorViolated { min_degree: f64, floor: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
