use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad or missing input; names the flag responsible.
    #[error("{flag}: {msg}")]
    Usage { flag: String, msg: String },

    /// A check ran to completion and failed.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{0}")]
    Core(#[from] frechet_core::Error),
}

impl CliError {
    pub fn usage(flag: &str, msg: impl ToString) -> Self {
        CliError::Usage { flag: flag.to_string(), msg: msg.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage { .. } | CliError::Core(_) => 2,
        }
    }
}
