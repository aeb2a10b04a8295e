use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid X-state parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid density operator: {0}")]
    InvalidDensity(String),

    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("negative probability {0} exceeds clamping tolerance")]
    NegativeProbability(f64),

    #[error("entropic bound requires an even dimension >= 2, got {0}")]
    InvalidDimension(u32),

    #[error("invalid decay rate g/gamma = {0}: amplitude damping requires 0 < g/gamma < 2")]
    InvalidRate(f64),

    #[error("Kraus operators violate completeness by {0}")]
    IncompleteChannel(f64),

    #[error("Bell outcome has probability {0}, below the post-selection threshold")]
    ZeroProbabilityOutcome(f64),

    #[error("steering functional paths disagree: closed form {closed_form}, entropic {entropic}")]
    PathDisagreement { closed_form: f64, entropic: f64 },
}
