use thiserror::Error;

/// Errors raised by the polyhedral, algebraic and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no nonzero generator or point was supplied")]
    EmptyGenerator,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("unsupported dimension {dim} for {operation}")]
    UnsupportedDimension { dim: usize, operation: &'static str },
    #[error("complement of the polyhedron is unbounded (missing a point on axis {axis})")]
    NotCoFinite { axis: usize },
    #[error("monomial ideal is not m-primary (no pure power of variable {axis})")]
    NotPrimary { axis: usize },
    #[error("colength did not stabilize up to truncation degree {max_degree}: ideal is not m-primary or the budget is too small")]
    NotPrimaryOrBudget { max_degree: usize },
    #[error("finite differences did not stabilize up to power {max_power}")]
    BudgetExceeded { max_power: usize },
    #[error("face is not an edge (it has {vertices} vertices)")]
    FaceKind { vertices: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
