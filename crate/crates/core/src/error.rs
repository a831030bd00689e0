use thiserror::Error;

/// Errors raised while building or evaluating algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown basis label '{0}'")]
    UnknownLabel(String),
    #[error("duplicate basis label '{0}'")]
    DuplicateLabel(String),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vector is not homogeneous")]
    NonHomogeneous,
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bracket of arity {expected} applied to {found} arguments")]
    ArityMismatch { expected: usize, found: usize },
    #[error("output of {entry} has degree {found}, expected {expected}")]
    DegreeRule { entry: String, expected: i32, found: i32 },
    #[error("entry {0} must vanish by graded symmetry")]
    ForcedZero(String),
    #[error("bracket is not antisymmetric on ({0}, {1})")]
    NotAntisymmetric(String, String),
    #[error("bracket input must live in degree 0, '{0}' does not")]
    NotDegreeZero(String),
    #[error("vector is not in the image of the map")]
    NotInImage,
    #[error("Jacobiator of {0} is not in the image of D")]
    JacobiatorNotInImage(String),
    #[error("closure condition fails: [D({alpha}), {v}] is not in the image of D")]
    ClosureViolated { alpha: String, v: String },
    #[error("supplied section value at {0} does not satisfy D f = Jac")]
    InvalidSection(String),
    #[error("supplied action value at {0} does not satisfy [D alpha, v] = D(v(alpha))")]
    InvalidAction(String),
    #[error("{0} does not lie in the kernel of D")]
    KernelAssertionFailed(String),
    #[error("structure constant of {0} has a negative power of mu")]
    DivergentContraction(String),
    #[error("scaling weight for '{0}' must be a nonzero monomial")]
    InvalidWeight(String),
    #[error("{0}")]
    Unsupported(String),
}
