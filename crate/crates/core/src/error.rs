use thiserror::Error;

/// Errors raised by the model, the generators and the command layer.
#[derive(Debug, Error)]
pub enum HecError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HecError>;

pub(crate) fn invalid(msg: impl Into<String>) -> HecError {
    HecError::InvalidParameter(msg.into())
}

/// Rejects NaN, infinities and negative values.
pub(crate) fn check_non_negative(name: &str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(invalid(format!("{name} must be finite, got {value}")));
    }
    if value < 0.0 {
        return Err(invalid(format!("{name} must be >= 0, got {value}")));
    }
    Ok(())
}
