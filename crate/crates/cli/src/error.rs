use std::fmt;

use serde_json::json;

/// A parse failure with its position in the input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Validation(String),
    Io(String),
    Core(segre_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Validation(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<segre_core::Error> for CliError {
    fn from(e: segre_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    /// Exit code contract: 2 parse/validation, 3 resource caps,
    /// 4 inconsistent or degenerate runs, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        use segre_core::Error as E;
        match self {
            CliError::Parse(_) | CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                E::ResourceExceeded { .. } => 3,
                E::InconsistentRuns { .. } | E::DegenerateSample(_) => 4,
                E::NotPrime(_)
                | E::ModulusOutOfRange(_)
                | E::NonHomogeneous(_)
                | E::UnitIdeal
                | E::ZeroGenerator(_)
                | E::EmptyGeneratorList
                | E::DuplicateVariable(_)
                | E::DegreeTooSmall { .. }
                | E::InvalidConfig(_)
                | E::ExponentOverflow(_) => 2,
                _ => 1,
            },
        }
    }

    fn kind(&self) -> &'static str {
        use segre_core::Error as E;
        match self {
            CliError::Parse(_) => "parse",
            CliError::Validation(_) => "validation",
            CliError::Io(_) => "io",
            CliError::Core(e) => match e {
                E::ResourceExceeded { .. } => "resource",
                E::InconsistentRuns { .. } => "inconsistent-runs",
                E::DegenerateSample(_) => "degenerate-sample",
                _ if self.exit_code() == 2 => "validation",
                _ => "internal",
            },
        }
    }

    /// The structured error object printed on stderr.
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = json!({
            "kind": self.kind(),
            "message": self.to_string(),
        });
        match self {
            CliError::Parse(e) => {
                obj["line"] = json!(e.line);
                obj["column"] = json!(e.column);
            }
            CliError::Core(segre_core::Error::InconsistentRuns { runs }) => {
                obj["runs"] = json!(runs
                    .iter()
                    .map(|(segre, residuals)| json!({
                        "segre": segre,
                        "residual_degrees": residuals,
                    }))
                    .collect::<Vec<_>>());
            }
            _ => {}
        }
        json!({ "error": obj })
    }
}
