use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),

    /// A configurable resource limit was hit before the computation finished.
    #[error("budget exhausted: {what} (limit {limit}{})", required.map(|r| format!(", {r} required")).unwrap_or_default())]
    BudgetExhausted {
        what: &'static str,
        limit: u64,
        required: Option<u64>,
    },

    /// The ideal contains 1, so its zero set is empty.
    #[error("empty variety: the ideal is the whole ring")]
    EmptyVariety,

    /// A computation that needs `char k > level` was requested over F_p with p <= level.
    #[error("characteristic {characteristic} too small for level {level}")]
    Characteristic { characteristic: u32, level: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A point-count estimate could not be made from any of the supplied primes.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted { .. })
    }
}
