use crate::error::{PgaError, Result};
use crate::kernel::Multivector;

/// Result of a meet or join. Dependent arguments (a line with itself, a point
/// with itself) give the zero element, which is a valid outcome of the
/// algebra rather than an error.
#[derive(Debug, Clone, PartialEq)]
pub enum Construction<T> {
    Proper(T),
    Dependent,
}

impl<T> Construction<T> {
    pub(crate) fn from_product(mv: Multivector, zero_tol: f64, wrap: impl FnOnce(Multivector) -> T) -> Self {
        if mv.is_zero(zero_tol) {
            Construction::Dependent
        } else {
            Construction::Proper(wrap(mv))
        }
    }

    pub fn proper(self) -> Option<T> {
        match self {
            Construction::Proper(t) => Some(t),
            Construction::Dependent => None,
        }
    }

    pub fn is_dependent(&self) -> bool {
        matches!(self, Construction::Dependent)
    }

    /// Turn a dependent outcome into [`PgaError::DependentArguments`].
    pub fn require(self, what: &'static str) -> Result<T> {
        self.proper().ok_or(PgaError::DependentArguments(what))
    }
}
