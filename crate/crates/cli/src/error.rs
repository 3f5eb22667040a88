use krull::Error as EngineError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown module {0:?}")]
    InvalidName(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::InvalidName(_) => 2,
            CliError::Engine(EngineError::ModulusTooSmall { .. }) => 3,
            CliError::Engine(EngineError::RetryExhausted(_)) => 4,
            CliError::Engine(_) => 1,
        }
    }
}
