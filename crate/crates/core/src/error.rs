use thiserror::Error;

use crate::election::VoterId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElectionError {
    #[error("candidate index {0} is out of range")]
    UnknownCandidate(usize),
    #[error("unknown candidate name `{0}`")]
    UnknownName(String),
    #[error("candidate {0} appears twice in a ballot")]
    DuplicateInBallot(usize),
    #[error("candidate name `{0}` is declared twice")]
    DuplicateCandidate(String),
    #[error("invalid candidate name `{0}`")]
    InvalidName(String),
    #[error("voter {0} appears twice")]
    DuplicateVoter(VoterId),
    #[error("{voters} voters but {ballots} ballots")]
    VoterCountMismatch { voters: usize, ballots: usize },
    #[error("ballot ranks {found} candidates, expected {expected}")]
    BallotLength { expected: usize, found: usize },
}

/// Failure to read a preference profile, tagged with the 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ProfileError {
    pub line: usize,
    pub kind: ProfileErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileErrorKind {
    #[error("missing candidate count")]
    MissingHeader,
    #[error("invalid candidate count `{0}`")]
    BadCandidateCount(String),
    #[error("expected {expected} candidate names, found {found}")]
    RosterLength { expected: usize, found: usize },
    #[error("ballot line must look like `count: a > b > c`")]
    MalformedBallot,
    #[error("invalid voter count `{0}`")]
    BadCount(String),
    #[error("voter count must be positive")]
    ZeroCount,
    #[error("unknown candidate `{0}`")]
    UnknownCandidate(String),
    #[error("candidate `{0}` ranked twice")]
    DuplicateCandidate(String),
    #[error("candidate `{0}` missing from ballot")]
    MissingCandidate(String),
    #[error(transparent)]
    Election(#[from] ElectionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("instance is not restricted: {0}")]
    NotRestricted(String),
    #[error("budget {0} is below 2")]
    BudgetTooSmall(usize),
}
