use thiserror::Error;

use crate::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero deformation parameter q_{index}")]
    ZeroParameter { index: usize },

    #[error("expected {expected} deformation parameters, got {found}")]
    ParameterCount { expected: usize, found: usize },

    #[error("the quiver needs at least one vertex")]
    NoVertices,

    #[error("non-generic regime: zeta = {zeta} is a root of unity")]
    NonGeneric { zeta: Scalar },

    #[error("degree mismatch: cannot compose a map out of P^{left} with a map into P^{right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("term of the image of {generator} is not vertex compatible: {detail}")]
    VertexMismatch { generator: String, detail: String },

    #[error("inconsistent lifting system at level {level} for {generator}")]
    InconsistentLifting { level: usize, generator: String },

    #[error("cochain of degree {degree} is not a cocycle")]
    NotCocycle { degree: usize },

    #[error("presentation check failed: {}", .0.join("; "))]
    PresentationCheckFailed(Vec<String>),

    #[error("degree cap exceeded: {detail}")]
    DegreeCapExceeded { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
