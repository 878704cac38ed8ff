use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structurally invalid input: unknown endpoints, duplicate ids, bad names.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// A line-numbered failure while reading a graph document.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A search exceeded one of its caps.
    #[error("budget exceeded: {what} (cap {cap}){}", hint.as_ref().map(|h| format!("; {h}")).unwrap_or_default())]
    BudgetExceeded {
        what: String,
        cap: u64,
        hint: Option<String>,
    },

    /// The operation was called outside of its domain.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An independent checker rejected a certificate.
    #[error("certificate rejected: {0}")]
    Certificate(String),

    /// An invariant that should hold by construction did not.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, cap: u64) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            cap,
            hint: None,
        }
    }

    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedInput(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
