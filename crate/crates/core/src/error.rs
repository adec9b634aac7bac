use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the cap of {cap} elements")]
    SizeLimit { cap: usize },

    #[error("lattice cap exceeded: order {order} is above {cap}")]
    LatticeCap { order: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("element index {index} out of range for a group of order {order}")]
    OutOfRange { index: usize, order: usize },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("the action does not extend to a homomorphism")]
    NotHomomorphism,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group of order {0} is not a p-group")]
    NotPGroup(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("no catalog entry for {0}")]
    NoCatalogEntry(String),

    #[error("{0} has no built-in presentation")]
    NoPresentation(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("undeclared generator `{name}` at position {pos}")]
    UndeclaredGenerator { name: String, pos: usize },

    #[error("coset enumeration capped after {0} cosets")]
    CosetLimit(usize),

    #[error("corpus: {0}")]
    Corpus(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}
