use thiserror::Error;

/// Failures of a CLI run. Input problems exit with status 1, exceeded
/// resource caps with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("invalid document at `{path}`: {message}")]
    Semantic { path: String, message: String },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid job: {0}")]
    Job(String),

    #[error(transparent)]
    Analysis(nkoszul::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Analysis(e) if e.is_resource() => 2,
            _ => 1,
        }
    }
}

impl From<nkoszul::Error> for CliError {
    fn from(e: nkoszul::Error) -> Self {
        CliError::Analysis(e)
    }
}
