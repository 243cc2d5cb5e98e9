use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("{what} cap exceeded (limit {limit}, reached {reached})")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        reached: usize,
    },
    #[error("generator {0} is not a bijection")]
    NotBijection(usize),
    #[error("action of generator {0} is not an automorphism of the normal part")]
    NotAutomorphism(usize),
    #[error("action does not extend to a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
