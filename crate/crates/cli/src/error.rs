use ssvis_core::Error;

/// Errors surfaced by the command line, each with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}")]
    Budget(Error),
    #[error("{0}")]
    Infeasible(Error),
    #[error("{0}")]
    Core(Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Infeasible(_) => 4,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => CliError::Budget(e),
            Error::NotFound(_) | Error::ViewpointTooClose { .. } | Error::NeverEquidistributes { .. } => {
                CliError::Infeasible(e)
            }
            Error::InvalidWord { .. }
            | Error::InvalidIfs(_)
            | Error::Precondition(_)
            | Error::DepthTooShallow { .. }
            | Error::UnsupportedMeasure
            | Error::UnsupportedForm
            | Error::InfiniteSemigroup
            | Error::FiniteSemigroup => CliError::Config(e.to_string()),
            _ => CliError::Core(e),
        }
    }
}
