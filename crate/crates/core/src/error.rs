use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes:
/// input problems (2), hypothesis failures (3), and internal invariant
/// violations (4), the last of which must never occur.
#[derive(Debug, Error)]
pub enum Error {
    /// Surface signature with omega(S) <= 0 or chi(S) >= 0.
    #[error("sporadic surface signature g={genus} n={punctures}: omega = {omega} must be positive")]
    Sporadic {
        genus: u32,
        punctures: u32,
        omega: i64,
    },

    /// A numeric argument outside the domain of a formula.
    #[error("domain error in {what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// Malformed word, curve file, or cover file.
    #[error("input error: {0}")]
    Input(String),

    /// A word that reduces to the identity; it names no essential curve.
    #[error("word '{0}' is nullhomotopic")]
    Nullhomotopic(String),

    /// A word conjugate to a power of a puncture loop.
    #[error("word '{0}' is peripheral")]
    Peripheral(String),

    /// An operation that requires an embedded curve received one with
    /// essential self-crossings.
    #[error("curve '{0}' is not simple")]
    NotSimple(String),

    /// Curves from different cellulations were mixed in one operation.
    #[error("curves do not live on the same cellulation")]
    SurfaceMismatch,

    /// A stated hypothesis of a construction failed on the given input.
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),

    /// An invariant that must hold by theorem was falsified. Carries a
    /// serialized witness so the instance can be archived and examined.
    #[error("internal invariant violated: {what}; witness: {witness}")]
    Counterexample { what: &'static str, witness: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
