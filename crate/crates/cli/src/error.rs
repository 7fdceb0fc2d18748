use std::fmt;

use newtonpoly::Error;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable input or malformed document.
    Parse(String),
    Lib(Error),
    /// The face and multiplicity routes gave different NND verdicts.
    RouteDisagreement(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Lib(Error::NotPrimaryOrBudget { .. } | Error::BudgetExceeded { .. }) => 4,
            CliError::Lib(_) => 3,
            CliError::RouteDisagreement(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Lib(e) => {
                write!(f, "{e}")?;
                match e {
                    Error::NotCoFinite { .. } | Error::NotPrimary { .. } => {
                        write!(f, "\n  hint: the ideal is not m-primary, so co-volume and multiplicity are undefined")
                    }
                    Error::NotPrimaryOrBudget { .. } => {
                        write!(f, "\n  hint: raise --max-degree if the ideal is m-primary")
                    }
                    Error::BudgetExceeded { .. } => write!(f, "\n  hint: raise --max-power"),
                    Error::UnsupportedDimension { operation, .. } if operation.contains("face") => {
                        write!(f, "\n  hint: the face route needs d = 2; use --route mult")
                    }
                    _ => Ok(()),
                }
            }
            CliError::RouteDisagreement(m) => write!(f, "route disagreement: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}
