//! The low-order relations written out term by term.
//!
//! These are independent of the unshuffle machinery in the parent module and
//! serve as a cross-check on its sign conventions. Each function returns the
//! same quantity as the generic residual: for L-infinity, `n = 1, 3` agree
//! with the displayed relation and `n = 2, 4` are written with all terms on
//! the left. The A-infinity versions follow the displayed equations, which
//! differ from the generic formula by `(-1)^(n+1)`.

use std::collections::HashMap;

use crate::brackets::HomotopyAlgebra;
use crate::error::AlgebraError;
use crate::graded::Vector;
use crate::scalar::{Rational, Ring};

use super::{all_permutations, perm_parity};

struct Ctx<'a, S> {
    alg: &'a HomotopyAlgebra<S>,
    x: Vec<Vector<S>>,
    d: Vec<i32>,
}

impl<'a, S: Ring> Ctx<'a, S> {
    fn new(alg: &'a HomotopyAlgebra<S>, t: &[usize]) -> Self {
        Ctx {
            alg,
            x: t.iter().map(|&i| Vector::basis(i)).collect(),
            d: t.iter().map(|&i| alg.basis().degree(i)).collect(),
        }
    }

    fn l(&self, args: &[&Vector<S>]) -> Vector<S> {
        self.alg.eval(args).expect("basis arguments are homogeneous")
    }

    /// `(-1)^e` as a scalar.
    fn sgn(e: i32) -> S {
        if e.rem_euclid(2) == 0 {
            S::one()
        } else {
            S::one().neg()
        }
    }

    fn deg(&self, i: usize) -> i32 {
        self.d[i]
    }
}

fn expect_len(t: &[usize], n: usize) -> Result<(), AlgebraError> {
    if t.len() != n {
        return Err(AlgebraError::ArityMismatch { expected: n, found: t.len() });
    }
    Ok(())
}

/// `l1(l1(x))`.
pub fn linfty_relation_1<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    expect_len(t, 1)?;
    let c = Ctx::new(alg, t);
    Ok(c.l(&[&c.l(&[&c.x[0]])]))
}

/// `l1(l2(x1,x2)) - l2(l1(x1),x2) - (-1)^x1 l2(x1,l1(x2))`.
pub fn linfty_relation_2<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    expect_len(t, 2)?;
    let c = Ctx::new(alg, t);
    let (x1, x2) = (&c.x[0], &c.x[1]);
    let mut out = c.l(&[&c.l(&[x1, x2])]);
    out = out.sub(&c.l(&[&c.l(&[x1]), x2]));
    out = out.sub(&c.l(&[x1, &c.l(&[x2])]).scale(&Ctx::<S>::sgn(c.deg(0))));
    Ok(out)
}

/// The n = 3 relation: l1 l3 terms, l3 l1 terms and the graded Jacobiator.
pub fn linfty_relation_3<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    expect_len(t, 3)?;
    let c = Ctx::new(alg, t);
    let (x1, x2, x3) = (&c.x[0], &c.x[1], &c.x[2]);
    let (d1, d2, d3) = (c.deg(0), c.deg(1), c.deg(2));
    let sg = Ctx::<S>::sgn;
    let mut out = c.l(&[&c.l(&[x1, x2, x3])]);
    out = out.add(&c.l(&[&c.l(&[x1]), x2, x3]));
    out = out.add(&c.l(&[x1, &c.l(&[x2]), x3]).scale(&sg(d1)));
    out = out.add(&c.l(&[x1, x2, &c.l(&[x3])]).scale(&sg(d1 + d2)));
    out = out.add(&c.l(&[&c.l(&[x1, x2]), x3]));
    out = out.add(&c.l(&[&c.l(&[x3, x1]), x2]).scale(&sg((d1 + d2) * d3)));
    out = out.add(&c.l(&[&c.l(&[x2, x3]), x1]).scale(&sg((d2 + d3) * d1)));
    Ok(out)
}

/// The n = 4 relation as `O(x1..x4) - R(x1..x4)`, where `O` collects the
/// `l2 l3` and `l3 l2` terms and `R` the `l1 l4` and `l4 l1` terms.
pub fn linfty_relation_4<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    expect_len(t, 4)?;
    let c = Ctx::new(alg, t);
    let (x1, x2, x3, x4) = (&c.x[0], &c.x[1], &c.x[2], &c.x[3]);
    let (d1, d2, d3, d4) = (c.deg(0), c.deg(1), c.deg(2), c.deg(3));
    let sg = Ctx::<S>::sgn;
    let l = |a: &[&Vector<S>]| c.l(a);

    let mut o = l(&[&l(&[x1, x2, x3]), x4]).neg();
    o = o.add(&l(&[&l(&[x1, x2, x4]), x3]).scale(&sg(d3 * d4)));
    o = o.add(&l(&[x2, &l(&[x1, x3, x4])]).scale(&sg((1 + d1) * d2)));
    o = o.sub(&l(&[x1, &l(&[x2, x3, x4])]).scale(&sg(d1)));
    o = o.add(&l(&[&l(&[x1, x2]), x3, x4]));
    o = o.add(&l(&[&l(&[x1, x3]), x2, x4]).scale(&sg(1 + d2 * d3)));
    o = o.add(&l(&[&l(&[x1, x4]), x2, x3]).scale(&sg(d4 * (d2 + d3))));
    o = o.sub(&l(&[x1, &l(&[x2, x3]), x4]));
    o = o.add(&l(&[x1, &l(&[x2, x4]), x3]).scale(&sg(d3 * d4)));
    o = o.add(&l(&[x1, x2, &l(&[x3, x4])]));

    let mut r = l(&[&l(&[x1, x2, x3, x4])]).neg();
    r = r.add(&l(&[&l(&[x1]), x2, x3, x4]));
    r = r.add(&l(&[x1, &l(&[x2]), x3, x4]).scale(&sg(d1)));
    r = r.add(&l(&[x1, x2, &l(&[x3]), x4]).scale(&sg(d1 + d2)));
    r = r.add(&l(&[x1, x2, x3, &l(&[x4])]).scale(&sg(d1 + d2 + d3)));
    Ok(o.sub(&r))
}

fn frac<S: Ring>(num: i64, den: i64) -> S {
    S::from_rational(&Rational::new(num.into(), den.into()))
}

/// For degree-0 arguments with trivial `l1` on degree 0:
/// `sum_anti(-4 l2(l3(v1,v2,v3),v4) + 6 l3(l2(v1,v2),v3,v4))`, with the
/// antisymmetrized sum normalized by `1/4!`.
pub fn linfty_relation_4_degree0<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    expect_len(t, 4)?;
    let c = Ctx::new(alg, t);
    let mut out = Vector::zero();
    for sigma in all_permutations(4) {
        let v: Vec<&Vector<S>> = sigma.iter().map(|&p| &c.x[p]).collect();
        let mut term = c.l(&[&c.l(&[v[0], v[1], v[2]]), v[3]]).scale(&S::from_int(-4));
        term = term.add(&c.l(&[&c.l(&[v[0], v[1]]), v[2], v[3]]).scale(&S::from_int(6)));
        out.add_scaled(&term, &S::from_int(perm_parity(&sigma) as i64));
    }
    Ok(out.scale(&frac(1, 24)))
}

/// For degree-0 arguments with `l5` absent:
/// `sum_anti(10 l4(l2(v1,v2),v3,v4,v5) + 5 l2(l4(v1,..,v4),v5) + 10 l3(l3(v1,v2,v3),v4,v5))`
/// over all 120 permutations with prefactor `1/5!`.
pub fn linfty_relation_5_degree0<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    expect_len(t, 5)?;
    let c = Ctx::new(alg, t);
    // Inner brackets only depend on the leading positions, so cache them.
    let mut inner: HashMap<Vec<usize>, Vector<S>> = HashMap::new();
    let mut l_inner = |pos: &[usize]| {
        inner.entry(pos.to_vec()).or_insert_with(|| c.l(&pos.iter().map(|&p| &c.x[p]).collect::<Vec<_>>())).clone()
    };
    let mut out = Vector::zero();
    for sigma in all_permutations(5) {
        let v: Vec<&Vector<S>> = sigma.iter().map(|&p| &c.x[p]).collect();
        let mut term = c.l(&[&l_inner(&sigma[..2]), v[2], v[3], v[4]]).scale(&S::from_int(10));
        term = term.add(&c.l(&[&l_inner(&sigma[..4]), v[4]]).scale(&S::from_int(5)));
        term = term.add(&c.l(&[&l_inner(&sigma[..3]), v[3], v[4]]).scale(&S::from_int(10)));
        out.add_scaled(&term, &S::from_int(perm_parity(&sigma) as i64));
    }
    Ok(out.scale(&frac(1, 120)))
}

/// Generic L-infinity residual from the written-out relations, `n <= 4`.
pub fn linfty_relation<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    match t.len() {
        1 => linfty_relation_1(alg, t),
        2 => linfty_relation_2(alg, t),
        3 => linfty_relation_3(alg, t),
        4 => linfty_relation_4(alg, t),
        n => Err(AlgebraError::Unsupported(format!("no written-out relation for n = {n}"))),
    }
}

/// The displayed A-infinity equations for `n = 1..=4`.
pub fn ainfty_relation<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Result<Vector<S>, AlgebraError> {
    let c = Ctx::new(alg, t);
    let m = |a: &[&Vector<S>]| c.l(a);
    let sg = Ctx::<S>::sgn;
    let x = &c.x;
    match t.len() {
        1 => Ok(m(&[&m(&[&x[0]])])),
        2 => {
            let mut o = m(&[&m(&[&x[0], &x[1]])]).neg();
            o = o.add(&m(&[&m(&[&x[0]]), &x[1]]));
            Ok(o.add(&m(&[&x[0], &m(&[&x[1]])]).scale(&sg(c.deg(0)))))
        }
        3 => {
            let (d1, d2) = (c.deg(0), c.deg(1));
            let mut o = m(&[&m(&[&x[0], &x[1], &x[2]])]);
            o = o.add(&m(&[&m(&[&x[0]]), &x[1], &x[2]]));
            o = o.add(&m(&[&x[0], &m(&[&x[1]]), &x[2]]).scale(&sg(d1)));
            o = o.add(&m(&[&x[0], &x[1], &m(&[&x[2]])]).scale(&sg(d1 + d2)));
            o = o.add(&m(&[&m(&[&x[0], &x[1]]), &x[2]]));
            Ok(o.sub(&m(&[&x[0], &m(&[&x[1], &x[2]])])))
        }
        4 => {
            let (d1, d2, d3) = (c.deg(0), c.deg(1), c.deg(2));
            let mut o = m(&[&m(&[&x[0], &x[1], &x[2], &x[3]])]).neg();
            o = o.add(&m(&[&m(&[&x[0]]), &x[1], &x[2], &x[3]]));
            o = o.add(&m(&[&x[0], &m(&[&x[1]]), &x[2], &x[3]]).scale(&sg(d1)));
            o = o.add(&m(&[&x[0], &x[1], &m(&[&x[2]]), &x[3]]).scale(&sg(d1 + d2)));
            o = o.add(&m(&[&x[0], &x[1], &x[2], &m(&[&x[3]])]).scale(&sg(d1 + d2 + d3)));
            o = o.sub(&m(&[&m(&[&x[0], &x[1]]), &x[2], &x[3]]));
            o = o.add(&m(&[&x[0], &m(&[&x[1], &x[2]]), &x[3]]));
            o = o.sub(&m(&[&x[0], &x[1], &m(&[&x[2], &x[3]])]));
            o = o.add(&m(&[&m(&[&x[0], &x[1], &x[2]]), &x[3]]));
            Ok(o.add(&m(&[&x[0], &m(&[&x[1], &x[2], &x[3]])]).scale(&sg(d1))))
        }
        n => Err(AlgebraError::Unsupported(format!("no written-out relation for n = {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{ainfty_residual, canonical_tuples, linfty_residual, ordered_tuples};
    use crate::constructions::{ainfty_double, extend_theorem1};
    use crate::scalar::Rational;
    use crate::zoo;

    /// A deliberately non-homotopy algebra with every low bracket populated,
    /// mixed degrees -1..1, so that sign errors in any term show up.
    fn scrambled() -> HomotopyAlgebra<Rational> {
        use crate::brackets::AlgebraKind;
        use crate::graded::GradedBasis;
        let basis = GradedBasis::new([("a", 1), ("b", 1), ("u", 0), ("v", 0), ("w", 0), ("z", -1)]).unwrap();
        let mut alg = HomotopyAlgebra::new("scrambled", basis.clone(), AlgebraKind::Linfty);
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 5) as i64 - 2
        };
        for k in 1..=4 {
            for t in canonical_tuples(&basis, k) {
                let deg = k as i32 - 2 + t.iter().map(|&i| basis.degree(i)).sum::<i32>();
                let targets = basis.indices_in_degree(deg);
                let v = Vector::from_terms(targets.into_iter().map(|i| (i, Rational::from_int(next()))));
                alg.set(&t, v).unwrap();
            }
        }
        alg
    }

    #[test]
    fn written_out_relations_match_generic_formula() {
        let alg = scrambled();
        for n in 1..=4 {
            for t in ordered_tuples(alg.basis(), n) {
                assert_eq!(linfty_relation(&alg, &t).unwrap(), linfty_residual(&alg, &t), "n = {n}, tuple {t:?}");
            }
        }
    }

    #[test]
    fn degree0_shortcuts_match_on_octonions() {
        let (basis, bracket) = zoo::imaginary_octonions();
        let mut alg = extend_theorem1(&basis, &bracket).unwrap();
        let t = [0, 1, 3, 5];
        assert_eq!(linfty_relation_4_degree0(&alg, &t).unwrap(), linfty_residual(&alg, &t));
        // Break the n = 4 relation by doubling l2 on mixed degrees, so the
        // comparison is not between two zeros. (Rescaling l3 alone would not
        // do: every degree-0 term is linear in l3.)
        let l2 = alg.remove_bracket(2).unwrap();
        for (tuple, v) in l2.entries() {
            let scale = if tuple.iter().any(|&i| i >= 7) { 2 } else { 1 };
            alg.set(tuple, v.scale(&Rational::from_int(scale))).unwrap();
        }
        let mut broken = 0;
        for t in canonical_tuples(&basis, 4) {
            let r = linfty_residual(&alg, &t);
            broken += usize::from(!r.is_zero());
            assert_eq!(linfty_relation_4_degree0(&alg, &t).unwrap(), r);
        }
        assert!(broken > 0);
    }

    #[test]
    fn ainfty_written_out_equations_match_generic_formula() {
        let mut alg = ainfty_double(&zoo::octonion_star());
        // Remove m3 so the residuals are nonzero.
        alg.remove_bracket(3);
        for n in 1..=4 {
            let sign = if n % 2 == 1 { Rational::from_int(1) } else { Rational::from_int(-1) };
            for t in ordered_tuples(alg.basis(), n).into_iter().step_by(7) {
                assert_eq!(ainfty_relation(&alg, &t).unwrap().scale(&sign), ainfty_residual(&alg, &t), "n = {n}");
            }
        }
    }
}
