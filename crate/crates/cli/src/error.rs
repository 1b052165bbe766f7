use std::process::ExitCode;

/// Failure classes mapped to process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad or inconsistent configuration (exit 2).
    Config(String),
    /// A required upstream artifact is missing, malformed or stale (exit 3).
    Upstream(String),
    /// Anything that went wrong while doing the work (exit 4).
    Exec(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Config(_) => 2,
            CliError::Upstream(_) => 3,
            CliError::Exec(_) => 4,
        })
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Upstream(m) => write!(f, "upstream artifact error: {m}"),
            CliError::Exec(e) => write!(f, "execution failed: {e:#}"),
        }
    }
}

pub fn exec<E: Into<anyhow::Error>>(e: E) -> CliError {
    CliError::Exec(e.into())
}
