use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("denominator vanished: |den| = {value:e} at (x, y, t) = ({x}, {y}, {t})")]
    DenominatorVanished { x: f64, y: f64, t: f64, value: f64 },
    #[error("no regularity certificate; pass --allow-unverified to evaluate anyway")]
    Unverified,
    #[error("empty grid: {0}")]
    EmptyGrid(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Core(#[from] cusplump::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
