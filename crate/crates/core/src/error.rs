use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("automorphism is not inner")]
    NotInner,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("matrix is not in GL(2,Z): determinant {0}")]
    NotInvertible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
