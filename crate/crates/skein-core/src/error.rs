//! Error types shared across the kernel.

use alloc::string::String;
use thiserror::Error;

/// Failures of scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value not representable in this backend: {0}")]
    NotRepresentable(String),
    #[error("operands live in different scalar modes or fields")]
    ModeMismatch,
    #[error("evaluation hits a pole")]
    Pole,
}

/// Failures of the higher level constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid root data: {0}")]
    InvalidRoot(String),
    #[error("index or parameter out of range: {0}")]
    OutOfRange(String),
    #[error("inadmissible colors: {0}")]
    Inadmissible(String),
    #[error("degenerate data: {0}")]
    Degenerate(String),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("invalid graph or curve data: {0}")]
    InvalidGraph(String),
    #[error("unsupported request: {0}")]
    Unsupported(String),
}

pub type Result<T, E = KernelError> = core::result::Result<T, E>;
