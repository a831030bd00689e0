//! The 3-term extension `Ker D -> U -> V` of a bracket whose Jacobiator
//! factors through `D`.

use std::collections::{BTreeMap, HashSet};

use crate::brackets::{jacobiator, AlgebraKind, HomotopyAlgebra, MultiBracket};
use crate::checker::{all_permutations, perm_parity};
use crate::error::AlgebraError;
use crate::graded::{GradedBasis, LinearMap, Vector};
use crate::linalg::{nullspace, solve_preimage};
use crate::scalar::{Field, Ring};

use super::check_lie_type;

/// `(v, alpha) -> v(alpha)` on basis indices of `V` and `U`.
pub type ActionTable<S> = BTreeMap<(usize, usize), Vector<S>>;

/// Caller-chosen values `f(v1, v2, v3)` on basis triples of `V`, given in any order.
pub type SectionOverrides<S> = Vec<([usize; 3], Vector<S>)>;

/// Caller-chosen values `v(alpha)` on basis pairs `(v, alpha)`.
pub type ActionOverrides<S> = Vec<((usize, usize), Vector<S>)>;

#[derive(Debug, Clone)]
pub struct TheoremTwoData<S> {
    basis: GradedBasis,
    bracket: MultiBracket<S>,
    d: LinearMap<S>,
    f: MultiBracket<S>,
    action: ActionTable<S>,
    kernel: Vec<Vector<S>>,
    inclusion: LinearMap<S>,
}

fn basis_triple<S: Ring>(a: usize, b: usize, c: usize) -> [Vector<S>; 3] {
    [Vector::basis(a), Vector::basis(b), Vector::basis(c)]
}

fn triple_labels(basis: &GradedBasis, t: &[usize]) -> String {
    t.iter().map(|&i| basis.label(i)).collect::<Vec<_>>().join(", ")
}

fn check_map<S: Ring>(basis: &GradedBasis, d: &LinearMap<S>) -> Result<(), AlgebraError> {
    if d.target.len() != basis.len() {
        return Err(AlgebraError::DimensionMismatch { expected: basis.len(), found: d.target.len() });
    }
    if d.shift != -1 {
        return Err(AlgebraError::InvalidWeight(format!("D must lower degree by one, found shift {}", d.shift)));
    }
    Ok(())
}

/// `f(v1, v2, v3)` as the pivot-rule preimage of `Jac(v1, v2, v3)` on every canonical triple.
pub fn solve_f<S: Field>(
    basis: &GradedBasis,
    bracket: &MultiBracket<S>,
    d: &LinearMap<S>,
) -> Result<MultiBracket<S>, AlgebraError> {
    check_lie_type(basis, bracket)?;
    check_map(basis, d)?;
    let n = basis.len();
    let mut f = MultiBracket::graded(3, basis);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let [u, v, w] = basis_triple(a, b, c);
                let jac = jacobiator(bracket, &u, &v, &w)?;
                let value = solve_preimage(d, &jac)
                    .map_err(|_| AlgebraError::JacobiatorNotInImage(triple_labels(basis, &[a, b, c])))?;
                f.set(&[a, b, c], value)?;
            }
        }
    }
    Ok(f)
}

/// `v(alpha)` as the pivot-rule preimage of `[D alpha, v]` on every basis pair.
pub fn solve_action<S: Field>(
    basis: &GradedBasis,
    bracket: &MultiBracket<S>,
    d: &LinearMap<S>,
) -> Result<ActionTable<S>, AlgebraError> {
    check_lie_type(basis, bracket)?;
    check_map(basis, d)?;
    let mut table = ActionTable::new();
    for alpha in 0..d.source.len() {
        for v in 0..basis.len() {
            let target = bracket.eval(&[d.column(alpha), &Vector::basis(v)])?;
            let value = solve_preimage(d, &target).map_err(|_| AlgebraError::ClosureViolated {
                alpha: d.source.label(alpha).to_string(),
                v: basis.label(v).to_string(),
            })?;
            if !value.is_zero() {
                table.insert((v, alpha), value);
            }
        }
    }
    Ok(table)
}

fn fresh_label(base: String, taken: &HashSet<String>) -> String {
    let mut label = base;
    while taken.contains(&label) {
        label.push('\'');
    }
    label
}

impl<S: Field> TheoremTwoData<S> {
    /// Collects the data of the extension, solving for `f` and the action and
    /// then applying any overrides. Overrides must satisfy `D f = Jac` and
    /// `D v(alpha) = [D alpha, v]` respectively.
    pub fn new(
        basis: &GradedBasis,
        bracket: &MultiBracket<S>,
        d: &LinearMap<S>,
        f_overrides: Option<&SectionOverrides<S>>,
        action_overrides: Option<&ActionOverrides<S>>,
    ) -> Result<Self, AlgebraError> {
        let mut f = solve_f(basis, bracket, d)?;
        let mut action = solve_action(basis, bracket, d)?;
        for (t, value) in f_overrides.into_iter().flatten() {
            let [u, v, w] = basis_triple(t[0], t[1], t[2]);
            if t.iter().any(|&i| i >= basis.len()) || value.support().any(|i| i >= d.source.len()) {
                return Err(AlgebraError::InvalidSection(format!("index out of range in f({t:?})")));
            }
            if d.apply(value) != jacobiator(bracket, &u, &v, &w)? {
                return Err(AlgebraError::InvalidSection(format!(
                    "D f({}) differs from the Jacobiator",
                    triple_labels(basis, t)
                )));
            }
            f.set(t, value.clone())
                .map_err(|_| AlgebraError::InvalidSection(format!("f({}) must vanish", triple_labels(basis, t))))?;
        }
        for &((v, alpha), ref value) in action_overrides.into_iter().flatten() {
            if v >= basis.len() || alpha >= d.source.len() || value.support().any(|i| i >= d.source.len()) {
                return Err(AlgebraError::InvalidAction(format!("index out of range in action ({v}, {alpha})")));
            }
            let target = bracket.eval(&[d.column(alpha), &Vector::basis(v)])?;
            if d.apply(value) != target {
                return Err(AlgebraError::InvalidAction(format!(
                    "D {}({}) differs from [D {}, {}]",
                    basis.label(v),
                    d.source.label(alpha),
                    d.source.label(alpha),
                    basis.label(v)
                )));
            }
            if value.is_zero() {
                action.remove(&(v, alpha));
            } else {
                action.insert((v, alpha), value.clone());
            }
        }

        let kernel = nullspace(d);
        let taken: HashSet<String> = basis.labels().chain(d.source.labels()).map(String::from).collect();
        let kernel_basis = GradedBasis::uniform((1..=kernel.len()).map(|i| fresh_label(format!("c{i}"), &taken)), 2)?;
        let inclusion = LinearMap::new(kernel_basis, d.source.clone(), -1, kernel.clone())?;
        Ok(TheoremTwoData {
            basis: basis.clone(),
            bracket: bracket.clone(),
            d: d.clone(),
            f,
            action,
            kernel,
            inclusion,
        })
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn bracket(&self) -> &MultiBracket<S> {
        &self.bracket
    }

    pub fn d(&self) -> &LinearMap<S> {
        &self.d
    }

    /// The section `f`, stored on canonical triples of `V` with values in `U`.
    pub fn f(&self) -> &MultiBracket<S> {
        &self.f
    }

    pub fn action(&self) -> &ActionTable<S> {
        &self.action
    }

    /// Kernel basis of `D`, as vectors in `U`.
    pub fn kernel(&self) -> &[Vector<S>] {
        &self.kernel
    }

    /// The inclusion `Ker D -> U`, whose source carries the labels of `X_2`.
    pub fn inclusion(&self) -> &LinearMap<S> {
        &self.inclusion
    }

    pub fn f_eval(&self, v1: &Vector<S>, v2: &Vector<S>, v3: &Vector<S>) -> Result<Vector<S>, AlgebraError> {
        self.f.eval(&[v1, v2, v3])
    }

    /// `v(alpha)` extended bilinearly.
    pub fn act(&self, v: &Vector<S>, alpha: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zero();
        for (i, cv) in v.iter() {
            for (j, ca) in alpha.iter() {
                if let Some(w) = self.action.get(&(i, j)) {
                    out.add_scaled(w, &cv.mul(ca));
                }
            }
        }
        out
    }

    /// Coordinates of `u` in the kernel basis, after checking `D u = 0`.
    pub fn to_kernel(&self, u: &Vector<S>, what: impl FnOnce() -> String) -> Result<Vector<S>, AlgebraError> {
        if !self.d.apply(u).is_zero() {
            return Err(AlgebraError::KernelAssertionFailed(what()));
        }
        solve_preimage(&self.inclusion, u).map_err(|_| AlgebraError::KernelAssertionFailed(what()))
    }

    /// The 3-term algebra on `V (+) U (+) Ker D`, in that basis order.
    pub fn to_algebra(&self) -> Result<HomotopyAlgebra<S>, AlgebraError> {
        let nv = self.basis.len();
        let nu = self.d.source.len();
        let nk = self.kernel.len();
        let mut out_basis = self.basis.clone();
        for (_, label, _) in self.d.source.iter() {
            out_basis.push(label.to_string(), 1)?;
        }
        for (_, label, _) in self.inclusion.source.iter() {
            out_basis.push(label.to_string(), 2)?;
        }
        let in_u = |x: &Vector<S>| x.reindex(|i| i + nv);
        let in_k = |x: &Vector<S>| x.reindex(|i| i + nv + nu);
        let e = |i: usize| Vector::<S>::basis(i);
        let mut alg = HomotopyAlgebra::new("extended", out_basis, AlgebraKind::Linfty);

        for c in 0..nk {
            alg.set(&[nv + nu + c], in_u(&self.kernel[c]))?;
        }
        for a in 0..nu {
            alg.set(&[nv + a], self.d.column(a).clone())?;
        }
        for a in 0..nv {
            for b in a + 1..nv {
                alg.set(&[a, b], self.bracket.eval_basis(&[a, b]))?;
            }
        }
        for v in 0..nv {
            for a in 0..nu {
                alg.set(&[nv + a, v], in_u(&self.act(&e(v), &e(a))))?;
            }
            for c in 0..nk {
                let value = self.act(&e(v), &self.kernel[c]);
                let coords = self.to_kernel(&value, || format!("v(c) for v = {}", self.basis.label(v)))?;
                alg.set(&[nv + nu + c, v], in_k(&coords))?;
            }
        }
        for a in 0..nu {
            for b in a..nu {
                let ab = compute_l2_odd(self, &e(a), &e(b))?;
                alg.set(&[nv + a, nv + b], in_k(&ab))?;
            }
        }
        for a in 0..nv {
            for b in a + 1..nv {
                for c in b + 1..nv {
                    alg.set(&[a, b, c], self.f.eval_basis(&[a, b, c]).neg().reindex(|i| i + nv))?;
                }
            }
        }
        for alpha in 0..nu {
            for a in 0..nv {
                for b in a + 1..nv {
                    let g = compute_g(self, &e(alpha), &e(a), &e(b))?;
                    alg.set(&[nv + alpha, a, b], in_k(&g))?;
                }
            }
        }
        for a in 0..nv {
            for b in a + 1..nv {
                for c in b + 1..nv {
                    for d in c + 1..nv {
                        let h = compute_h(self, &e(a), &e(b), &e(c), &e(d))?;
                        alg.set(&[a, b, c, d], in_k(&h))?;
                    }
                }
            }
        }
        Ok(alg)
    }
}

/// `l2(alpha, beta) = -(D alpha)(beta) - (D beta)(alpha)` in kernel coordinates.
fn compute_l2_odd<S: Field>(
    data: &TheoremTwoData<S>,
    alpha: &Vector<S>,
    beta: &Vector<S>,
) -> Result<Vector<S>, AlgebraError> {
    let value = data.act(&data.d.apply(alpha), beta).add(&data.act(&data.d.apply(beta), alpha)).neg();
    data.to_kernel(&value, || "l2 on two elements of U".to_string())
}

/// `g(alpha, v1, v2) = f(D alpha, v1, v2) + [v1, v2](alpha) + v1(v2(alpha)) - v2(v1(alpha))`,
/// returned in kernel coordinates.
pub fn compute_g<S: Field>(
    data: &TheoremTwoData<S>,
    alpha: &Vector<S>,
    v1: &Vector<S>,
    v2: &Vector<S>,
) -> Result<Vector<S>, AlgebraError> {
    let bracket = data.bracket.eval(&[v1, v2])?;
    let mut value = data.f_eval(&data.d.apply(alpha), v1, v2)?;
    value = value.add(&data.act(&bracket, alpha));
    value = value.add(&data.act(v1, &data.act(v2, alpha)));
    value = value.sub(&data.act(v2, &data.act(v1, alpha)));
    data.to_kernel(&value, || "g".to_string())
}

/// `h(v1, .., v4)`: the antisymmetrization, with weight 1/24, of
/// `4 v1(f(v2, v3, v4)) + 6 f([v1, v2], v3, v4)`, in kernel coordinates.
pub fn compute_h<S: Field>(
    data: &TheoremTwoData<S>,
    v1: &Vector<S>,
    v2: &Vector<S>,
    v3: &Vector<S>,
    v4: &Vector<S>,
) -> Result<Vector<S>, AlgebraError> {
    let args = [v1, v2, v3, v4];
    let four = S::from_int(4);
    let six = S::from_int(6);
    let mut sum = Vector::zero();
    for sigma in all_permutations(4) {
        let [a, b, c, d] = [args[sigma[0]], args[sigma[1]], args[sigma[2]], args[sigma[3]]];
        let mut term = data.act(a, &data.f_eval(b, c, d)?).scale(&four);
        term = term.add(&data.f_eval(&data.bracket.eval(&[a, b])?, c, d)?.scale(&six));
        let sign = S::from_int(perm_parity(&sigma) as i64);
        sum.add_scaled(&term, &sign);
    }
    let value = sum.scale(&S::from_frac(1, 24));
    data.to_kernel(&value, || "h".to_string())
}

/// Extends `(V, [.,.])` along `D: U -> V`. Missing `f` and action values come
/// from the pivot rule.
pub fn extend_theorem2<S: Field>(
    basis: &GradedBasis,
    bracket: &MultiBracket<S>,
    d: &LinearMap<S>,
    f: Option<&SectionOverrides<S>>,
    action: Option<&ActionOverrides<S>>,
) -> Result<HomotopyAlgebra<S>, AlgebraError> {
    TheoremTwoData::new(basis, bracket, d, f, action)?.to_algebra()
}

/// The inclusion of the span of `generators` into `V`, with the given labels in degree 1.
pub fn ideal_inclusion<S: Ring>(
    basis: &GradedBasis,
    generators: Vec<Vector<S>>,
    labels: impl IntoIterator<Item = String>,
) -> Result<LinearMap<S>, AlgebraError> {
    let source = GradedBasis::uniform(labels, 1)?;
    LinearMap::new(source, basis.clone(), -1, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::check_linfty;
    use crate::constructions::{extend_theorem1, star_label};
    use crate::scalar::{Gaussian, Rational};
    use crate::zoo;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn lie_input_has_zero_section() {
        let b = GradedBasis::uniform(["h", "x", "y"], 0).unwrap();
        let mut l2 = MultiBracket::<Rational>::graded(2, &b);
        l2.set(&[0, 1], Vector::term(1, q(2))).unwrap();
        l2.set(&[0, 2], Vector::term(2, q(-2))).unwrap();
        l2.set(&[1, 2], Vector::basis(0)).unwrap();
        let d = ideal_inclusion(&b, vec![Vector::basis(0)], ["h*".to_string()]).ok();
        // span{h} is not an ideal, so closure fails.
        assert!(matches!(solve_action(&b, &l2, &d.unwrap()), Err(AlgebraError::ClosureViolated { .. })));
        let id = ideal_inclusion(&b, (0..3).map(Vector::basis).collect(), b.labels().map(star_label)).unwrap();
        assert!(solve_f(&b, &l2, &id).unwrap().is_zero());
    }

    #[test]
    fn ideal_specialization_is_theorem1() {
        let (b, l2) = zoo::imaginary_octonions();
        let d = ideal_inclusion(&b, (0..7).map(Vector::basis).collect(), b.labels().map(star_label)).unwrap();
        let data = TheoremTwoData::new(&b, &l2, &d, None, None).unwrap();
        assert!(data.kernel().is_empty());
        // f is the Jacobiator and v(u) = -[v, u].
        let e = Vector::<Rational>::basis;
        assert_eq!(data.f_eval(&e(0), &e(1), &e(3)).unwrap(), Vector::term(4, q(-12)));
        for v in 0..7 {
            for u in 0..7 {
                assert_eq!(data.act(&e(v), &e(u)), l2.eval_basis(&[v, u]).neg());
            }
        }
        let mut alg = data.to_algebra().unwrap();
        alg.name = "doubled".into();
        assert_eq!(alg, extend_theorem1(&b, &l2).unwrap());
    }

    #[test]
    fn jacobiator_outside_image() {
        let (b, l2) = zoo::imaginary_octonions();
        let d = ideal_inclusion(&b, vec![Vector::basis(6)], ["e7*".to_string()]).unwrap();
        assert!(matches!(solve_f(&b, &l2, &d), Err(AlgebraError::JacobiatorNotInImage(_))));
    }

    #[test]
    fn rflux_section_under_pivot_rule() {
        let data = zoo::rflux_theorem2_pivot_data();
        let (b, _) = zoo::rflux_algebra();
        let x = |i: usize| Vector::<Gaussian>::basis(b.index_of(&format!("x{i}")).unwrap());
        // U = span{I*, k}: f(x1, x2, x3) = 3 I* with zero k-component.
        assert_eq!(data.f_eval(&x(1), &x(2), &x(3)).unwrap(), Vector::term(0, Gaussian::from_int(3)));
        assert_eq!(data.kernel(), &[Vector::basis(1)]);
        assert!(data.action().is_empty());
    }

    #[test]
    fn bad_overrides_are_rejected() {
        let (b, l2) = zoo::rflux_algebra();
        let d = zoo::rflux_theorem2_map();
        let x1 = b.index_of("x1").unwrap();
        let f = vec![([x1, x1 + 1, x1 + 2], Vector::term(1, Gaussian::one()))];
        assert!(matches!(TheoremTwoData::new(&b, &l2, &d, Some(&f), None), Err(AlgebraError::InvalidSection(_))));
        let act = vec![((x1, 0), Vector::term(0, Gaussian::one()))];
        assert!(matches!(TheoremTwoData::new(&b, &l2, &d, None, Some(&act)), Err(AlgebraError::InvalidAction(_))));
        // A pure kernel-valued action is allowed.
        let act = vec![((x1, 0), Vector::term(1, Gaussian::one()))];
        assert!(TheoremTwoData::new(&b, &l2, &d, None, Some(&act)).is_ok());
    }

    #[test]
    fn minimal_rflux_choice_has_trivial_l4() {
        let alg = zoo::rflux_theorem2_minimal();
        assert!(alg.bracket(4).is_none());
    }

    #[test]
    fn augmented_rflux_has_nonzero_g_and_h() {
        let alg = zoo::rflux_theorem2();
        assert_eq!(alg.dim(), 10);
        assert!(alg.bracket(4).is_some_and(|b| !b.is_zero()));
        let idx = |l: &str| alg.basis().index_of(l).unwrap();
        let k = idx("k");
        let c1 = idx("c1");
        assert_eq!(alg.eval_basis(&[c1]), Vector::basis(k));
        assert_eq!(alg.eval_basis(&[idx("x1"), idx("x2"), idx("p1"), idx("p2")]), Vector::term(c1, Gaussian::i()));
        assert_eq!(alg.eval_basis(&[idx("I*"), idx("x1"), idx("x2")]), Vector::basis(c1));
        let reports = check_linfty(&alg, 7);
        assert!(reports.iter().all(|r| r.holds()), "{:?}", reports.iter().find(|r| !r.holds()));
    }

    #[test]
    fn g_and_h_land_in_kernel() {
        let data = zoo::rflux_theorem2_data();
        let n = data.basis().len();
        let e = Vector::<Gaussian>::basis;
        for alpha in 0..data.d().source.len() {
            for a in 0..n {
                for b in 0..n {
                    compute_g(&data, &e(alpha), &e(a), &e(b)).unwrap();
                }
            }
        }
        for t in crate::checker::canonical_tuples(data.basis(), 4) {
            compute_h(&data, &e(t[0]), &e(t[1]), &e(t[2]), &e(t[3])).unwrap();
        }
    }
}
