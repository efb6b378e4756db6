use thiserror::Error;

/// Errors reported by the library.
///
/// Precondition violations that can only arise from a caller bug (for
/// example asking for `[0]_q`) panic instead; the variants here cover
/// everything reachable from user input or explicit resource budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The rational is outside the supported domain `r > s >= 1`.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed `R/S` input text.
    #[error("parse error: {0}")]
    Parse(String),

    /// A partition containment or box-fit precondition failed.
    #[error("containment error: {0}")]
    Containment(String),

    /// An enumeration exceeds its stated budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// Field characteristic outside the supported set.
    #[error("unsupported field F_{0} (supported primes: 2, 3, 5, 7)")]
    UnsupportedField(u64),

    /// Internal consistency failure; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
