use crate::brackets::{associator, AlgebraKind, HomotopyAlgebra, StarProduct};
use crate::graded::Vector;
use crate::scalar::Ring;

use super::star_label;

/// Doubles a (possibly non-associative) product into a 2-term A-infinity algebra
/// on `V (+) V*`:
/// `m1(a*) = a`, `m2(a, b) = a b`, `m2(a*, b) = m2(a, b*) = (a b)*`, `m3 = -Ass*`, `m4 = 0`.
pub fn ainfty_double<S: Ring>(p: &StarProduct<S>) -> HomotopyAlgebra<S> {
    let basis = p.basis();
    let n = basis.len();
    let mut out_basis = basis.clone();
    for (_, label, _) in basis.iter() {
        out_basis.push(star_label(label), 1).expect("starred labels are fresh when the input labels are");
    }
    let star = |v: &Vector<S>| v.reindex(|i| i + n);
    let mut alg = HomotopyAlgebra::new("ainfty-doubled", out_basis, AlgebraKind::Ainfty);
    let ok = "degrees follow the doubling rule";
    for a in 0..n {
        alg.set(&[a + n], Vector::basis(a)).expect(ok);
        for b in 0..n {
            let ab = p.product_basis(a, b);
            alg.set(&[a, b], ab.clone()).expect(ok);
            alg.set(&[a + n, b], star(&ab)).expect(ok);
            alg.set(&[a, b + n], star(&ab)).expect(ok);
            for c in 0..n {
                let ass = associator(p, &Vector::basis(a), &Vector::basis(b), &Vector::basis(c));
                alg.set(&[a, b, c], star(&ass).neg()).expect(ok);
            }
        }
    }
    alg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check_ainfty;
    use crate::scalar::Rational;
    use crate::zoo;

    #[test]
    fn matrix_double_is_dga() {
        let alg = ainfty_double(&zoo::matrix_algebra(2));
        assert_eq!(alg.dim(), 8);
        assert!(alg.bracket(3).is_none());
        assert!(check_ainfty(&alg, 4).iter().all(|r| r.holds()));
    }

    #[test]
    fn octonion_m3() {
        let alg = ainfty_double(&zoo::octonion_star());
        assert_eq!(alg.dim(), 16);
        let idx = |l: &str| alg.basis().index_of(l).unwrap();
        assert_eq!(alg.eval_basis(&[idx("e1"), idx("e2"), idx("e4")]), Vector::term(idx("e5*"), Rational::from_int(2)));
        assert!(alg.bracket(4).is_none());
    }
}
