//! Error type shared by every module of the library.

/// Errors surfaced by graph construction, searches, and certificate
/// extraction.
///
/// `InternalContract` is special: it is returned when a quantity that the
/// underlying mathematics guarantees (for example "a crossing pair exists on
/// a maximal path in a Dirac graph") fails to materialise.  Seeing it means a
/// bug in this library, never bad user input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A structure is too small for the requested operation.
    #[error("{context}: need order at least {needed}, have {have}")]
    TooSmall {
        context: &'static str,
        needed: usize,
        have: usize,
    },

    /// Exact computation refused because the instance exceeds its size limit.
    #[error("order {order} exceeds the limit {limit} for exact computation")]
    SizeLimit { order: usize, limit: usize },

    /// A minimum-degree requirement does not hold.
    #[error("degree condition violated: order {order} requires minimum degree {required}, found {found}")]
    DegreeCondition {
        order: usize,
        required: usize,
        found: usize,
    },

    /// An exhaustive search was asked to exceed its configured budget.
    #[error("search budget exceeded: {context} ({detail})")]
    BudgetExceeded {
        context: &'static str,
        detail: String,
    },

    /// A bracketing search ran out of range before finding its answer.
    #[error("range exhausted: {0}")]
    RangeExhausted(String),

    /// A mathematically guaranteed invariant failed to hold; this is a bug.
    #[error("internal contract violated in {context}: {detail}")]
    InternalContract {
        context: &'static str,
        detail: String,
    },
}

impl Error {
    pub(crate) fn contract(context: &'static str, detail: impl Into<String>) -> Self {
        Error::InternalContract {
            context,
            detail: detail.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
