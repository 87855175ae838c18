use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group: {0}")]
    MalformedGroup(String),

    #[error("group closure exceeded the size cap of {cap} elements")]
    SizeLimit { cap: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("element {0} does not belong to the group")]
    NotInGroup(String),

    #[error("generating set contains the identity")]
    IdentityInSet,

    #[error(
        "generating set is not closed under inverses: {element} is present but {inverse} is not"
    )]
    NotSymmetric { element: String, inverse: String },

    #[error("set generates a subgroup of order {subgroup_order}, not the whole group of order {group_order}")]
    NotGenerating {
        subgroup_order: usize,
        group_order: usize,
    },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("vertex pair ({0}, {0}) is degenerate")]
    DegeneratePair(usize),

    #[error("vertices {x} and {y} are not connected")]
    UnreachablePair { x: usize, y: usize },

    #[error("distance {ell} is outside [1, {diameter}]")]
    EllOutOfRange { ell: usize, diameter: usize },

    #[error("s = {s} falls in the near-reflection case {case} for n = {n}, r = {r}")]
    OutOfCase {
        n: usize,
        r: usize,
        s: usize,
        case: u8,
    },

    #[error("serialization failed: {0}")]
    Serialize(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Serialize(e.to_string())
    }
}
