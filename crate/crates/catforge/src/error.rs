use catforge_core::engine::EngineError;
use catforge_core::enumerate::EnumerateError;
use catforge_core::bimodule::EnumerateBimodulesError;
use catforge_core::BudgetExceeded;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Mismatch = 1,
    ResourceLimit = 2,
    InputError = 3,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Input(_) | CliError::Io { .. } => ExitStatus::InputError,
            CliError::Resource(_) => ExitStatus::ResourceLimit,
            CliError::Mismatch(_) => ExitStatus::Mismatch,
        }
    }
}

impl From<BudgetExceeded> for CliError {
    fn from(e: BudgetExceeded) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Budget(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::OrderZero => CliError::Input(e.to_string()),
            EnumerateError::OrderTooLarge { .. } | EnumerateError::Budget(_) => CliError::Resource(e.to_string()),
        }
    }
}

impl From<EnumerateBimodulesError> for CliError {
    fn from(e: EnumerateBimodulesError) -> Self {
        match e {
            EnumerateBimodulesError::Budget(b) => b.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}
