use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("judgment id {id} out of range for universe of size {universe_size}")]
    JudgmentOutOfRange { id: usize, universe_size: usize },
    #[error("duplicate judgment label `{0}`")]
    DuplicateLabel(String),
    #[error("label table has {labels} entries but the universe has {universe_size} judgments")]
    LabelCount { labels: usize, universe_size: usize },
    #[error("lasso loop must be nonempty")]
    EmptyLoop,
    #[error("candidate set is empty")]
    EmptyCandidates,
    #[error("candidate set is missing list element {0}")]
    MissingCandidate(u64),
    #[error("unknown element predicate `{0}`")]
    UnknownPredicate(String),
}

/// Structural defects of a proof witness, as opposed to a well-formed but invalid derivation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("rule index {index} out of range ({len} rules)")]
    RuleOutOfRange { index: usize, len: usize },
    #[error("corule index {index} out of range ({len} corules)")]
    CoruleOutOfRange { index: usize, len: usize },
    #[error("judgment id {id} out of range for universe of size {universe_size}")]
    JudgmentOutOfRange { id: usize, universe_size: usize },
    #[error("node index {index} out of range ({len} nodes)")]
    NodeOutOfRange { index: usize, len: usize },
    #[error("node {0} is not reachable from the root")]
    Unreachable(usize),
}
