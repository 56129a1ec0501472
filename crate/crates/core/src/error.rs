use thiserror::Error;

/// Errors raised while building or evaluating a network.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XagError {
    #[error("signal refers to node {node}, but the network has only {nodes} nodes")]
    DanglingSignal { node: usize, nodes: usize },
    #[error("expected {expected} input values, got {got}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("network has {0} inputs; exhaustive truth tables are limited to 16")]
    TooManyInputs(usize),
}

/// A parse failure, tagged with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut size {0} is outside the supported range 2..=16")]
    CutSize(usize),
    #[error("cut limit must be at least 1")]
    CutLimit,
    #[error("node {0} is not a node of the network")]
    UnknownRoot(usize),
    #[error("leaf set does not cut node {root}: reached node {escaped} outside the cut")]
    InvalidCut { root: usize, escaped: usize },
    #[error("leaf {leaf} is not reachable from node {root}")]
    UnusedLeaf { root: usize, leaf: usize },
    #[error("cut has {0} leaves; truth tables are limited to 16 variables")]
    TooManyLeaves(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BalanceError {
    #[error("cannot balance a constant product term")]
    ConstantTerm,
    #[error("literal refers to leaf {index}, but only {leaves} leaves were supplied")]
    MissingLeaf { index: usize, leaves: usize },
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error("max rounds must be at least 1")]
    MaxRounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("AND gate at node {0} has a complemented fanin; run propagate_inverters first")]
    NotNormalized(usize),
}

/// A fault raised by the reversible-circuit simulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("expected {expected} input bits, got {got}")]
    InputLength { expected: usize, got: usize },
    #[error("gate {index}: AND target q{target} is not zero")]
    DirtyTarget { index: usize, target: usize },
    #[error("gate {index}: UNAND target q{target} does not hold the AND of its controls")]
    UncomputeMismatch { index: usize, target: usize },
    #[error("gate {index}: qubit q{qubit} out of range")]
    QubitRange { index: usize, qubit: usize },
}
