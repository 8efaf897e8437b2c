use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),

    #[error("override `{0}`: expected key=value with a dotted key")]
    Override(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("ephemeris row {row}: {reason}")]
    Row { row: usize, reason: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Theory(#[from] brouwer::Error),
}

impl CliError {
    /// 2 for a critical-inclination rejection, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Theory(e) if e.is_guard_rejection() => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
