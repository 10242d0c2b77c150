use serde::Serialize;
use singular_riemann::Error;

/// Everything the front end can fail with. Each variant maps to one exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error("invalid `{field}`: {constraint}")]
    Validation { field: String, constraint: String },

    #[error(transparent)]
    Solver(#[from] Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn validation(field: impl Into<String>, constraint: impl Into<String>) -> Self {
        Self::Validation {
            field: field.into(),
            constraint: constraint.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse { .. } | Self::Validation { .. } => 2,
            Self::Solver(e) => solver_exit_code(e),
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Parse { .. } => "ParseError",
            Self::Validation { .. } => "ValidationError",
            Self::Solver(e) => error_tag(e),
            Self::Io(_) => "IoError",
            Self::Csv(_) | Self::Json(_) => "OutputError",
        }
    }

    /// Machine-readable error object written on failure.
    pub fn report(&self) -> ErrorReport {
        ErrorReport {
            error: ErrorBody {
                kind: self.kind(),
                message: self.to_string(),
                exit_code: self.exit_code(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

pub fn solver_exit_code(e: &Error) -> i32 {
    match e {
        Error::NonPhysical { .. } | Error::InvalidGamma(_) | Error::InvalidCoefficient { .. } => 2,
        Error::Vacuum { .. } => 3,
        Error::Convergence { .. } => 4,
        Error::ClassificationConflict { .. } => 5,
        Error::NoAdmissibleStructure { .. } => 6,
        _ => 1,
    }
}

/// Short variant name, used in error objects and sweep rows.
pub fn error_tag(e: &Error) -> &'static str {
    match e {
        Error::NonPhysical { .. } => "NonPhysical",
        Error::InvalidGamma(_) => "InvalidGamma",
        Error::InvalidCoefficient { .. } => "InvalidCoefficient",
        Error::Domain(_) => "Domain",
        Error::InconsistentStates { .. } => "InconsistentStates",
        Error::Vacuum { .. } => "Vacuum",
        Error::Convergence { .. } => "Convergence",
        Error::NoSolution { .. } => "NoSolution",
        Error::BranchUndefined { .. } => "BranchUndefined",
        Error::NegativeVelocity(_) => "NegativeVelocity",
        Error::OutsideAdmissible { .. } => "OutsideAdmissible",
        Error::NoAdmissibleStructure { .. } => "NoAdmissibleStructure",
        Error::ClassificationConflict { .. } => "ClassificationConflict",
    }
}
