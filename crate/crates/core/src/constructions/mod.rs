//! Constructive extensions: doubling a non-Lie bracket into a 2-term
//! L-infinity algebra, the 3-term extension along a map `D: U -> V`, and the
//! A-infinity doubling of a non-associative product.

mod ainfty;
mod theorem1;
mod theorem2;

pub use ainfty::ainfty_double;
pub use theorem1::{extend_theorem1, star_label};
pub use theorem2::{
    compute_g, compute_h, extend_theorem2, ideal_inclusion, solve_action, solve_f, ActionOverrides, ActionTable,
    SectionOverrides, TheoremTwoData,
};

use crate::brackets::MultiBracket;
use crate::error::AlgebraError;
use crate::graded::GradedBasis;
use crate::scalar::Ring;

/// Checks that `bracket` is a 2-bracket on an all-degree-0 basis and, if it
/// was stored without symmetry, that it is antisymmetric.
pub(crate) fn check_lie_type<S: Ring>(basis: &GradedBasis, bracket: &MultiBracket<S>) -> Result<(), AlgebraError> {
    if bracket.arity() != 2 {
        return Err(AlgebraError::ArityMismatch { expected: 2, found: bracket.arity() });
    }
    if bracket.degrees().len() != basis.len() {
        return Err(AlgebraError::DimensionMismatch { expected: basis.len(), found: bracket.degrees().len() });
    }
    if let Some((_, label, _)) = basis.iter().find(|(_, _, d)| *d != 0) {
        return Err(AlgebraError::NotDegreeZero(label.to_string()));
    }
    if !bracket.is_graded_symmetric() {
        for a in 0..basis.len() {
            for b in a..basis.len() {
                if bracket.eval_basis(&[a, b]) != bracket.eval_basis(&[b, a]).neg() {
                    return Err(AlgebraError::NotAntisymmetric(basis.label(a).into(), basis.label(b).into()));
                }
            }
        }
    }
    Ok(())
}
