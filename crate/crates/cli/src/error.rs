use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] ratgrowth_core::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    /// 2 when a configured cap was exceeded, 1 for every other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Core(ratgrowth_core::Error::CapExceeded(_)) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
