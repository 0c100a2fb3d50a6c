use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is non-finite or outside its validity range.
    #[error("invalid {name}: {value} ({reason})")]
    InvalidInput {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    /// The inputs are valid but the model has no physical solution.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// A numerical guard tripped (degenerate resonance, broken identity).
    #[error("numerical guard: {0}")]
    NumericalGuard(String),
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidInput {
            name,
            value,
            reason: "must be finite",
        })
    }
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    finite(name, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidInput {
            name,
            value,
            reason: "must be > 0",
        })
    }
}

pub(crate) fn non_negative(name: &'static str, value: f64) -> Result<f64> {
    finite(name, value)?;
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidInput {
            name,
            value,
            reason: "must be >= 0",
        })
    }
}

pub(crate) fn at_least_one(name: &'static str, value: f64) -> Result<f64> {
    finite(name, value)?;
    if value >= 1.0 {
        Ok(value)
    } else {
        Err(Error::InvalidInput {
            name,
            value,
            reason: "must be >= 1",
        })
    }
}
