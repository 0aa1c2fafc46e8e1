use thiserror::Error;

/// Errors raised by the order-theoretic constructions.
///
/// Structural falsity (a poset that is not a lattice, an involution that is
/// not antitone) is never an error; predicates report it through witnesses.
/// These variants cover malformed input and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset belongs to a different poset")]
    ForeignSubset,
    #[error("element index {index} out of range for a poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("label count {labels} does not match size {size}")]
    LabelCount { labels: usize, size: usize },
    #[error("relation is not antisymmetric: `{0}` and `{1}` are mutually below each other")]
    NotAntisymmetric(String, String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("unary map is not total: expected {expected} images, got {got}")]
    MapNotTotal { expected: usize, got: usize },
    #[error("not an antitone involution: {0}")]
    InvalidInvolution(String),
    #[error("poset is not downward directed: `{0}` and `{1}` have no common lower bound")]
    NotDownwardDirected(String, String),
    #[error("{0} requires a bounded poset")]
    Unbounded(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("assignment space has {count} members, over the cap of {cap}")]
    TooManyAssignments { count: u128, cap: u128 },
    #[error("operation needs a unary map but the directoid has none")]
    MissingInvolution,
    #[error("table is not a commutative meet-directoid: {0}")]
    NotADirectoid(String),
    #[error("designated bounds are not the bounds of the induced order")]
    BoundsMismatch,
    #[error("enumeration bound exceeded: n = {n}, maximum is {max}")]
    BoundExceeded { n: usize, max: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
