use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("row {row}: {source}")]
    Physics {
        row: usize,
        source: photomom_core::Error,
    },
    #[error("{0}")]
    Numerical(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Io(_) => 2,
            Self::Physics { .. } => 3,
            Self::Numerical(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Config(_) => "config",
            Self::Io(_) => "io",
            Self::Physics { .. } => "physics",
            Self::Numerical(_) => "numerical",
        }
    }

    /// Attaches a row index to a core error.
    pub fn at_row(row: usize, err: photomom_core::Error) -> Self {
        match err {
            photomom_core::Error::InvalidInput { .. } => Self::Config(format!("row {row}: {err}")),
            photomom_core::Error::Infeasible(_) => Self::Physics { row, source: err },
            photomom_core::Error::NumericalGuard(_) => Self::Numerical(format!("row {row}: {err}")),
        }
    }
}

impl From<photomom_core::Error> for CliError {
    fn from(err: photomom_core::Error) -> Self {
        match err {
            photomom_core::Error::InvalidInput { .. } => Self::Config(err.to_string()),
            photomom_core::Error::Infeasible(_) => Self::Physics { row: 0, source: err },
            photomom_core::Error::NumericalGuard(_) => Self::Numerical(err.to_string()),
        }
    }
}
