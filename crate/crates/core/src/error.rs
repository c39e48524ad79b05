use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic field mismatch: Q(ζ_{left}) vs Q(ζ_{right})")]
    FieldMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("map is not degree-preserving: entry ({row}, {col}) links degree {row_degree} to degree {col_degree}")]
    NotDegreePreserving {
        row: usize,
        col: usize,
        row_degree: usize,
        col_degree: usize,
    },

    #[error("object is not in the anyonic category: {0}")]
    NotDiagonalizable(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("size cap exceeded: {needed} entries needed, cap is {cap}")]
    SizeCap { needed: usize, cap: usize },

    #[error("level bound exceeded: requested {requested}, available {available}")]
    LevelBound { requested: usize, available: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
