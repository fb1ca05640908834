use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error: {0}")]
    Parse(String),

    #[error("order {0} exceeds the 64-vertex cap")]
    OrderOverflow(usize),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("edge {0}-{1} is already present")]
    EdgePresent(usize, usize),

    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),

    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeNotThree { vertex: usize, degree: usize },

    #[error("precondition of {lemma} violated: {reason}")]
    Precondition { lemma: String, reason: String },

    #[error("identification of {name} is ambiguous: {detail}")]
    IdentificationAmbiguous { name: String, detail: String },

    #[error("construction invariant failed: {0}")]
    ConstructionInvariant(String),

    #[error("named graph {name} failed validation: {reason}")]
    Validation { name: String, reason: String },

    #[error("unknown graph name {0:?}")]
    UnknownName(String),

    #[error("no maxnik graph of size {0} exists")]
    Unrepresentable(usize),

    #[error("{0}")]
    OutOfRange(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
