use edet_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Input(String),

    #[error("order {n} exceeds the bench cap {max}; pass --force to run it anyway")]
    BenchCap { n: usize, max: usize },
}

impl CliError {
    /// 2 malformed input, 3 method or claim not meaningful for the ring,
    /// 4 division by an integer the ring cannot divide by, 5 bench cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Input(_) => 2,
            CliError::BenchCap { .. } => 5,
            CliError::Core(e) => match e {
                CoreError::DivisionUnavailable { .. } => 4,
                CoreError::RingNotCommutative(_)
                | CoreError::RingNotAssociative(_)
                | CoreError::RingNotPowerAssociative(_)
                | CoreError::InvalidPairing { .. }
                | CoreError::GammaMode(_)
                | CoreError::ExponentOutOfRange { .. }
                | CoreError::OrderTooLarge { .. }
                | CoreError::NoUnit => 3,
                CoreError::Sampling(_) => 1,
                CoreError::RingMismatch(_)
                | CoreError::PayloadLength { .. }
                | CoreError::MalformedTable(_)
                | CoreError::DimensionMismatch(_)
                | CoreError::InvalidDescriptor(_)
                | CoreError::Parse(_) => 2,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
