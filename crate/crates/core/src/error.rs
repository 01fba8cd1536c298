use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidGroupSpec(String),
    #[error("Cartan matrix is not of finite type: leading principal minor of size {size} is {value}")]
    NotFiniteType { size: usize, value: String },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unsupported root system: {0}")]
    Unsupported(String),
    #[error("vector {vector:?} does not lie in the rank-{rank} lattice")]
    NotInLattice { vector: Vec<i64>, rank: usize },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid sigma: {0}")]
    InvalidSigma(String),
    #[error("invalid parahoric level: {0}")]
    InvalidLevel(String),
    #[error("cannot parse element `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("kappa mismatch: {lambda:?} and {mu:?} have different images in the fundamental group")]
    KappaMismatch { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("{lambda:?} is not below {mu:?} in the dominance order")]
    NotDominated { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("{0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("{0:?} is not minuscule")]
    NotMinuscule(Vec<i64>),
    #[error("{0:?} is not in the Weyl orbit of the minuscule cocharacter")]
    NotInOrbit(Vec<i64>),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("wrong group: {0}")]
    WrongGroup(String),
    #[error("Newton point {0} is not in B(G, mu)")]
    NotInNewtonSet(String),
    #[error("config field `{field}`: {reason}")]
    Config { field: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
