use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} cap exceeded: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    #[error("operation requires a local ring, got {0}")]
    LocalityRequired(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid ring generator index {index} (ring has {count})")]
    InvalidGenerator { index: usize, count: usize },

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("cannot parse module spec `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("eigensolver did not converge after {0} sweeps")]
    NonConvergence(usize),

    #[error("search budget exhausted: {0}")]
    SearchBudget(String),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    /// Solver and oracle disagree, or a computed object violates its own
    /// invariants. Always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, value: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::CapExceeded {
            what,
            value: value.into(),
            cap: cap.into(),
        }
    }

    /// True for errors caused by configured resource limits rather than bad
    /// input or bugs.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. }
                | Error::SearchBudget(_)
                | Error::Overflow(_)
                | Error::NonConvergence(_)
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
