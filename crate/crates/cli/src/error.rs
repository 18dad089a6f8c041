use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Validation { path: String, message: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn validation(path: impl Into<String>, message: impl ToString) -> Self {
        CliError::Validation {
            path: path.into(),
            message: message.to_string(),
        }
    }

    /// Attaches a field path to a core error, keeping invariant violations
    /// distinct.
    pub fn from_core(path: impl Into<String>, e: arthur_core::Error) -> Self {
        if e.is_invariant_violation() {
            CliError::Invariant(e.to_string())
        } else {
            CliError::validation(path, e)
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => 2,
            CliError::Validation { .. } | CliError::Io { .. } => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_violations_exit_with_two() {
        let e = CliError::from_core("x", arthur_core::Error::InvariantViolation("disagree".into()));
        assert_eq!(e.exit_code(), 2);
        let e = CliError::from_core("x", arthur_core::Error::NoWitness);
        assert_eq!(e.exit_code(), 1);
    }
}
