use crate::brackets::{jacobiator, AlgebraKind, HomotopyAlgebra, MultiBracket};
use crate::error::AlgebraError;
use crate::graded::{GradedBasis, Vector};
use crate::scalar::Ring;

use super::check_lie_type;

pub fn star_label(label: &str) -> String {
    format!("{label}*")
}

/// Doubles `(V, [.,.])` into the 2-term algebra on `V* (+) V`.
///
/// The output basis lists `V` (degree 0) followed by the starred copy `V*`
/// (degree 1), with
/// `l1(v*) = v`, `l2(v, w) = [v, w]`, `l2(v*, w) = [v, w]*`, `l3(u, v, w) = -Jac(u, v, w)*`.
pub fn extend_theorem1<S: Ring>(
    basis: &GradedBasis,
    bracket: &MultiBracket<S>,
) -> Result<HomotopyAlgebra<S>, AlgebraError> {
    check_lie_type(basis, bracket)?;
    let n = basis.len();
    let mut out_basis = basis.clone();
    for (_, label, _) in basis.iter() {
        out_basis.push(star_label(label), 1)?;
    }
    let star = |v: &Vector<S>| v.reindex(|i| i + n);
    let mut alg = HomotopyAlgebra::new("doubled", out_basis, AlgebraKind::Linfty);

    for a in 0..n {
        alg.set(&[a + n], Vector::basis(a))?;
    }
    for a in 0..n {
        for b in 0..n {
            let ab = bracket.eval_basis(&[a, b]);
            if a < b {
                alg.set(&[a, b], ab.clone())?;
            }
            alg.set(&[a + n, b], star(&ab))?;
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let jac = jacobiator(bracket, &Vector::basis(a), &Vector::basis(b), &Vector::basis(c))?;
                alg.set(&[a, b, c], star(&jac).neg())?;
            }
        }
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check_linfty;
    use crate::scalar::Rational;
    use crate::zoo;

    #[test]
    fn octonion_doubling_has_theta_l3() {
        let (basis, bracket) = zoo::imaginary_octonions();
        let alg = extend_theorem1(&basis, &bracket).unwrap();
        assert_eq!(alg.dim(), 14);
        let theta = zoo::octonion_theta();
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    let want = Vector::from_terms(
                        (0..7).map(|d| (d + 7, Rational::from_int(12 * theta.get(a + 1, b + 1, c + 1, d + 1) as i64))),
                    );
                    assert_eq!(alg.eval_basis(&[a, b, c]), want);
                }
            }
        }
        assert_eq!(alg.basis().label(7), "e1*");
        assert_eq!(alg.eval_basis(&[7]), Vector::basis(0));
    }

    #[test]
    fn abelian_input_gives_only_l1() {
        let basis = GradedBasis::uniform(["a", "b", "c"], 0).unwrap();
        let bracket = MultiBracket::<Rational>::graded(2, &basis);
        let alg = extend_theorem1(&basis, &bracket).unwrap();
        assert!(alg.bracket(2).is_none());
        assert!(alg.bracket(3).is_none());
        assert!(check_linfty(&alg, 8).iter().all(|r| r.holds()));
    }

    #[test]
    fn rejects_asymmetric_tables() {
        let basis = GradedBasis::uniform(["a", "b"], 0).unwrap();
        let mut bracket = MultiBracket::<Rational>::ordered(2, &basis);
        bracket.set(&[0, 1], Vector::basis(0)).unwrap();
        bracket.set(&[1, 0], Vector::basis(0)).unwrap();
        assert_eq!(
            extend_theorem1(&basis, &bracket).unwrap_err(),
            AlgebraError::NotAntisymmetric("a".into(), "b".into())
        );
    }
}
