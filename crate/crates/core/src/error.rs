use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("invalid edge ({0}, {1}): self-loops are not allowed")]
    InvalidEdge(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("label {label} out of range [1, {}]", .n - 1)]
    InvalidLabel { n: usize, label: usize },
    #[error("labeling does not match the graph: {0}")]
    LabelingMismatch(String),
    #[error("ordering is not a bijection onto 0..{0}")]
    InvalidOrdering(usize),
    #[error("not a chordal sense of direction: {0}")]
    NotACsd(String),
    #[error("not a minimal chordal sense of direction: {0}")]
    NotAnMcsd(String),

    #[error("invalid label set: {0}")]
    InvalidLabelSet(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("label {0} is not used by the labeling")]
    UnknownLabel(usize),
    #[error("label {0} equals n/2 and labels a perfect matching, not a 2-factor")]
    NotATwoFactor(usize),
    #[error("degree is even, there is no n/2 matching label")]
    NoMatchingLabel,

    #[error("gcd({gamma}, {n}) > 1")]
    NotCoprime { n: usize, gamma: usize },
    #[error("invalid stitching pair: {0}")]
    InvalidPair(String),
    #[error("no sign assignment closes the stitched cycle for n={n}, labels ({gi}, {gj})")]
    StitchInfeasible { n: usize, gi: usize, gj: usize },
    #[error("graph is not connected")]
    NotConnected,

    #[error("invalid multiplier {alpha} for modulus {n}")]
    InvalidMultiplier { n: usize, alpha: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),

    #[error("no label set exists: {0}")]
    Infeasible(String),
    #[error("brute-force oracle is limited to n <= {max}, got n = {n}")]
    DomainExceeded { n: usize, max: usize },
}
