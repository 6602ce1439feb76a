use thiserror::Error;

/// Failures of a CLI command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input file or invalid argument value.
    #[error("{0}")]
    Input(String),
    /// Profile, coalition or degree does not fit the game.
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Io(String),
    /// The verification report (printed to stdout) has failing identities.
    #[error("{failed} identities failed verification")]
    Verification { report: String, failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Io(_) => 4,
            CliError::Verification { .. } => 5,
        }
    }
}

impl From<wbanzhaf::Error> for CliError {
    fn from(err: wbanzhaf::Error) -> Self {
        use wbanzhaf::Error as E;
        match err {
            E::DimensionMismatch { .. }
            | E::PlayerOutOfRange { .. }
            | E::CoalitionOutOfRange { .. }
            | E::ProbabilityOutOfRange { .. }
            | E::BoundaryProbability { .. }
            | E::ProfileMismatch
            | E::InvalidDegree { .. } => CliError::Mismatch(err.to_string()),
            _ => CliError::Input(err.to_string()),
        }
    }
}
