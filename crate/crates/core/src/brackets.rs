//! Multilinear brackets stored as structure constants.
//!
//! An L-infinity bracket is graded antisymmetric, so only its values on
//! canonical (nondecreasing) basis tuples are stored and every other tuple is
//! reached through [`canonical_tuple`]. A-infinity products carry no symmetry
//! and are stored on ordered tuples.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::graded::{GradedBasis, Vector};
use crate::scalar::Ring;

/// Which family of relations an algebra is meant to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Linfty,
    Ainfty,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Linfty => "linfty",
            AlgebraKind::Ainfty => "ainfty",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "linfty" => Some(AlgebraKind::Linfty),
            "ainfty" => Some(AlgebraKind::Ainfty),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn sign_scalar<S: Ring>(sign: i8) -> S {
    match sign {
        1 => S::one(),
        -1 => S::one().neg(),
        _ => S::zero(),
    }
}

/// Sorts `tuple` by basis index and returns the sign relating the two orders.
///
/// With `c` the sorted tuple, `l(tuple) = sign * l(c)` for every graded
/// antisymmetric `l`. Each inverted pair contributes `(-1)^(1 + |x||y|)`.
/// The sign is 0 when an even element repeats, since swapping the two copies
/// forces the value to equal its own negative.
pub fn canonical_tuple(tuple: &[usize], degrees: &[i32]) -> (Vec<usize>, i8) {
    let mut sign = 1i8;
    for p in 0..tuple.len() {
        for q in p + 1..tuple.len() {
            let (a, b) = (tuple[p], tuple[q]);
            let odd_pair = degrees[a].rem_euclid(2) == 1 && degrees[b].rem_euclid(2) == 1;
            if a == b && !odd_pair {
                return (sorted(tuple), 0);
            }
            if a > b && !odd_pair {
                sign = -sign;
            }
        }
    }
    (sorted(tuple), sign)
}

fn sorted(tuple: &[usize]) -> Vec<usize> {
    let mut t = tuple.to_vec();
    t.sort_unstable();
    t
}

/// Label-level form of [`canonical_tuple`].
pub fn canonical_form(basis: &GradedBasis, labels: &[&str]) -> Result<(Vec<String>, i8), AlgebraError> {
    let idx = labels.iter().map(|l| basis.index_of(l)).collect::<Result<Vec<_>, _>>()?;
    let (canon, sign) = canonical_tuple(&idx, basis.degrees());
    Ok((canon.into_iter().map(|i| basis.label(i).to_string()).collect(), sign))
}

/// An arity-`k` multilinear map on a graded basis, given by its structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiBracket<S> {
    arity: usize,
    graded_symmetric: bool,
    degrees: Arc<[i32]>,
    values: BTreeMap<Vec<usize>, Vector<S>>,
}

impl<S: Ring> MultiBracket<S> {
    /// A graded antisymmetric bracket (L-infinity convention).
    pub fn graded(arity: usize, basis: &GradedBasis) -> Self {
        Self::with_symmetry(arity, basis, true)
    }

    /// A product with no symmetry (A-infinity convention).
    pub fn ordered(arity: usize, basis: &GradedBasis) -> Self {
        Self::with_symmetry(arity, basis, false)
    }

    fn with_symmetry(arity: usize, basis: &GradedBasis, graded_symmetric: bool) -> Self {
        assert!(arity >= 1, "brackets have at least one input");
        MultiBracket { arity, graded_symmetric, degrees: basis.degrees().into(), values: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_graded_symmetric(&self) -> bool {
        self.graded_symmetric
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    /// Storage key and sign for a basis tuple.
    pub fn key(&self, tuple: &[usize]) -> (Vec<usize>, i8) {
        if self.graded_symmetric {
            canonical_tuple(tuple, &self.degrees)
        } else {
            (tuple.to_vec(), 1)
        }
    }

    /// Sets the value on a basis tuple given in any order.
    ///
    /// The stored value is adjusted by the graded sign so that evaluation on
    /// `tuple` returns `value`. Zero values remove the entry.
    pub fn set(&mut self, tuple: &[usize], value: Vector<S>) -> Result<(), AlgebraError> {
        if tuple.len() != self.arity {
            return Err(AlgebraError::ArityMismatch { expected: self.arity, found: tuple.len() });
        }
        if let Some(&i) = tuple.iter().find(|&&i| i >= self.degrees.len()) {
            return Err(AlgebraError::IndexOutOfRange(i));
        }
        let (key, sign) = self.key(tuple);
        if sign == 0 {
            if value.is_zero() {
                return Ok(());
            }
            return Err(AlgebraError::ForcedZero(format!("{tuple:?}")));
        }
        if value.is_zero() {
            self.values.remove(&key);
        } else {
            let stored = if sign == 1 { value } else { value.neg() };
            self.values.insert(key, stored);
        }
        Ok(())
    }

    /// Value on a basis tuple as `(sign, stored value)`; `None` means zero.
    pub fn lookup(&self, tuple: &[usize]) -> Option<(i8, &Vector<S>)> {
        let (key, sign) = self.key(tuple);
        if sign == 0 {
            return None;
        }
        self.values.get(&key).map(|v| (sign, v))
    }

    pub fn eval_basis(&self, tuple: &[usize]) -> Vector<S> {
        match self.lookup(tuple) {
            Some((1, v)) => v.clone(),
            Some((_, v)) => v.neg(),
            None => Vector::zero(),
        }
    }

    /// Multilinear evaluation on homogeneous arguments.
    pub fn eval(&self, args: &[&Vector<S>]) -> Result<Vector<S>, AlgebraError> {
        if args.len() != self.arity {
            return Err(AlgebraError::ArityMismatch { expected: self.arity, found: args.len() });
        }
        for a in args {
            if let Some(i) = a.support().find(|&i| i >= self.degrees.len()) {
                return Err(AlgebraError::IndexOutOfRange(i));
            }
            let mut degs = a.support().map(|i| self.degrees[i]);
            if let Some(d) = degs.next() {
                if degs.any(|e| e != d) {
                    return Err(AlgebraError::NonHomogeneous);
                }
            }
        }
        let mut out = Vector::zero();
        let mut tuple = Vec::with_capacity(self.arity);
        self.expand(args, &mut tuple, S::one(), &mut out);
        Ok(out)
    }

    fn expand(&self, args: &[&Vector<S>], tuple: &mut Vec<usize>, coeff: S, out: &mut Vector<S>) {
        let Some((first, rest)) = args.split_first() else {
            if let Some((sign, v)) = self.lookup(tuple) {
                out.add_scaled(v, &coeff.mul(&sign_scalar(sign)));
            }
            return;
        };
        for (i, c) in first.iter() {
            tuple.push(i);
            self.expand(rest, tuple, coeff.mul(c), out);
            tuple.pop();
        }
    }

    /// Stored entries keyed by canonical (or, for ordered products, literal) tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Vector<S>)> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Same structure constants with coefficients mapped through `f`.
    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> MultiBracket<T> {
        let values =
            self.values.iter().map(|(k, v)| (k.clone(), v.map_coeffs(&f))).filter(|(_, v)| !v.is_zero()).collect();
        MultiBracket {
            arity: self.arity,
            graded_symmetric: self.graded_symmetric,
            degrees: self.degrees.clone(),
            values,
        }
    }
}

/// Builds an antisymmetric 2-bracket on a degree-0 basis from a full table
/// `(a, b) -> [a, b]`, checking `[a, b] = -[b, a]` and `[a, a] = 0`.
pub fn bracket_from_table<S: Ring>(
    basis: &GradedBasis,
    table: impl Fn(usize, usize) -> Vector<S>,
) -> Result<MultiBracket<S>, AlgebraError> {
    let mut bracket = MultiBracket::graded(2, basis);
    for a in 0..basis.len() {
        if basis.degree(a) != 0 {
            return Err(AlgebraError::NotDegreeZero(basis.label(a).to_string()));
        }
        for b in a..basis.len() {
            let ab = table(a, b);
            let ba = table(b, a);
            if ab != ba.neg() {
                return Err(AlgebraError::NotAntisymmetric(basis.label(a).into(), basis.label(b).into()));
            }
            if a < b {
                bracket.set(&[a, b], ab)?;
            }
        }
    }
    Ok(bracket)
}

/// `[[u,v],w] + [[v,w],u] + [[w,u],v]` for a 2-bracket on degree-0 arguments.
pub fn jacobiator<S: Ring>(
    bracket: &MultiBracket<S>,
    u: &Vector<S>,
    v: &Vector<S>,
    w: &Vector<S>,
) -> Result<Vector<S>, AlgebraError> {
    if bracket.arity() != 2 {
        return Err(AlgebraError::ArityMismatch { expected: 2, found: bracket.arity() });
    }
    for x in [u, v, w] {
        if let Some(i) = x.support().find(|&i| bracket.degrees()[i] != 0) {
            return Err(AlgebraError::NotDegreeZero(format!("basis index {i}")));
        }
    }
    let mut out = bracket.eval(&[&bracket.eval(&[u, v])?, w])?;
    out = out.add(&bracket.eval(&[&bracket.eval(&[v, w])?, u])?);
    out = out.add(&bracket.eval(&[&bracket.eval(&[w, u])?, v])?);
    Ok(out)
}

/// A bilinear product on a degree-0 basis, no symmetry assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarProduct<S> {
    basis: GradedBasis,
    table: BTreeMap<(usize, usize), Vector<S>>,
}

impl<S: Ring> StarProduct<S> {
    pub fn new(basis: GradedBasis) -> Result<Self, AlgebraError> {
        if let Some((_, label, _)) = basis.iter().find(|(_, _, d)| *d != 0) {
            return Err(AlgebraError::NotDegreeZero(label.to_string()));
        }
        Ok(StarProduct { basis, table: BTreeMap::new() })
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn set(&mut self, a: usize, b: usize, value: Vector<S>) -> Result<(), AlgebraError> {
        let n = self.basis.len();
        if let Some(i) = [a, b].into_iter().chain(value.support()).find(|&i| i >= n) {
            return Err(AlgebraError::IndexOutOfRange(i));
        }
        if value.is_zero() {
            self.table.remove(&(a, b));
        } else {
            self.table.insert((a, b), value);
        }
        Ok(())
    }

    pub fn product_basis(&self, a: usize, b: usize) -> Vector<S> {
        self.table.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Vector<S>)> {
        self.table.iter().map(|(k, v)| (*k, v))
    }

    pub fn product(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                if let Some(v) = self.table.get(&(a, b)) {
                    out.add_scaled(v, &ca.mul(cb));
                }
            }
        }
        out
    }

    /// The commutator `[x, y] = x y - y x` as an antisymmetric 2-bracket.
    pub fn commutator(&self) -> MultiBracket<S> {
        bracket_from_table(&self.basis, |a, b| self.product_basis(a, b).sub(&self.product_basis(b, a)))
            .expect("commutators are antisymmetric")
    }
}

/// `(a b) c - a (b c)`.
pub fn associator<S: Ring>(p: &StarProduct<S>, a: &Vector<S>, b: &Vector<S>, c: &Vector<S>) -> Vector<S> {
    p.product(&p.product(a, b), c).sub(&p.product(a, &p.product(b, c)))
}

/// A graded basis together with its brackets `l_k` (or products `m_k`).
///
/// Arities without an entry are zero maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyAlgebra<S> {
    pub name: String,
    basis: GradedBasis,
    kind: AlgebraKind,
    brackets: BTreeMap<usize, MultiBracket<S>>,
}

/// The collection `{l_k}` or `{m_k}` on a shared basis.
pub type BracketSet<S> = HomotopyAlgebra<S>;

impl<S: Ring> HomotopyAlgebra<S> {
    pub fn new(name: impl Into<String>, basis: GradedBasis, kind: AlgebraKind) -> Self {
        HomotopyAlgebra { name: name.into(), basis, kind, brackets: BTreeMap::new() }
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn bracket(&self, arity: usize) -> Option<&MultiBracket<S>> {
        self.brackets.get(&arity)
    }

    pub fn brackets(&self) -> impl Iterator<Item = (usize, &MultiBracket<S>)> {
        self.brackets.iter().map(|(k, b)| (*k, b))
    }

    pub fn max_arity(&self) -> usize {
        self.brackets.keys().next_back().copied().unwrap_or(0)
    }

    fn empty_bracket(&self, arity: usize) -> MultiBracket<S> {
        match self.kind {
            AlgebraKind::Linfty => MultiBracket::graded(arity, &self.basis),
            AlgebraKind::Ainfty => MultiBracket::ordered(arity, &self.basis),
        }
    }

    /// Sets `l_k(tuple) = value`, enforcing the degree rule `k - 2 + sum of input degrees`.
    pub fn set(&mut self, tuple: &[usize], value: Vector<S>) -> Result<(), AlgebraError> {
        let arity = tuple.len();
        if let Some(&i) = tuple.iter().chain(value.support().collect::<Vec<_>>().iter()).find(|&&i| i >= self.dim()) {
            return Err(AlgebraError::IndexOutOfRange(i));
        }
        let expected = arity as i32 - 2 + tuple.iter().map(|&i| self.basis.degree(i)).sum::<i32>();
        if let Some(found) = value.degree(&self.basis)? {
            if found != expected {
                return Err(AlgebraError::DegreeRule { entry: self.describe_tuple(tuple), expected, found });
            }
        }
        if !self.brackets.contains_key(&arity) {
            if value.is_zero() {
                return Ok(());
            }
            let b = self.empty_bracket(arity);
            self.brackets.insert(arity, b);
        }
        let res = self.brackets.get_mut(&arity).expect("inserted above").set(tuple, value);
        if let Err(AlgebraError::ForcedZero(_)) = res {
            return Err(AlgebraError::ForcedZero(self.describe_tuple(tuple)));
        }
        res
    }

    /// Label-based form of [`HomotopyAlgebra::set`].
    pub fn set_labels(&mut self, labels: &[&str], value: &[(&str, S)]) -> Result<(), AlgebraError> {
        let tuple = labels.iter().map(|l| self.basis.index_of(l)).collect::<Result<Vec<_>, _>>()?;
        let mut v = Vector::zero();
        for (l, c) in value {
            v.add_term(self.basis.index_of(l)?, c);
        }
        self.set(&tuple, v)
    }

    /// Installs a whole bracket, checking it against the basis and the degree rule.
    pub fn insert_bracket(&mut self, bracket: MultiBracket<S>) -> Result<(), AlgebraError> {
        let arity = bracket.arity();
        self.brackets.remove(&arity);
        for (tuple, v) in bracket.entries() {
            self.set(tuple, v.clone())?;
        }
        Ok(())
    }

    /// Drops `l_k` entirely.
    pub fn remove_bracket(&mut self, arity: usize) -> Option<MultiBracket<S>> {
        self.brackets.remove(&arity)
    }

    pub fn eval_basis(&self, tuple: &[usize]) -> Vector<S> {
        self.brackets.get(&tuple.len()).map(|b| b.eval_basis(tuple)).unwrap_or_default()
    }

    pub fn eval(&self, args: &[&Vector<S>]) -> Result<Vector<S>, AlgebraError> {
        match self.brackets.get(&args.len()) {
            Some(b) => b.eval(args),
            None => Ok(Vector::zero()),
        }
    }

    /// Re-checks the degree rule on every stored structure constant.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        for (&k, b) in &self.brackets {
            for (tuple, v) in b.entries() {
                let expected = k as i32 - 2 + tuple.iter().map(|&i| self.basis.degree(i)).sum::<i32>();
                match v.degree(&self.basis)? {
                    Some(found) if found != expected => {
                        return Err(AlgebraError::DegreeRule { entry: self.describe_tuple(tuple), expected, found })
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn describe_tuple(&self, tuple: &[usize]) -> String {
        let labels: Vec<&str> = tuple.iter().map(|&i| self.basis.label(i)).collect();
        format!("{}{}({})", if self.kind == AlgebraKind::Linfty { "l" } else { "m" }, tuple.len(), labels.join(", "))
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> HomotopyAlgebra<T> {
        HomotopyAlgebra {
            name: self.name.clone(),
            basis: self.basis.clone(),
            kind: self.kind,
            brackets: self.brackets.iter().map(|(k, b)| (*k, b.map_coeffs(&f))).filter(|(_, b)| !b.is_zero()).collect(),
        }
    }

    /// The 2-bracket restricted to the degree-0 basis, when that is the whole basis.
    pub fn jacobiator(&self, u: &Vector<S>, v: &Vector<S>, w: &Vector<S>) -> Result<Vector<S>, AlgebraError> {
        match self.bracket(2) {
            Some(b) => jacobiator(b, u, v, w),
            None => Ok(Vector::zero()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use crate::zoo::octonions::{imaginary_octonions, octonion_star};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn canonical_form_examples() {
        let even = GradedBasis::uniform(["e1", "e2"], 0).unwrap();
        assert_eq!(canonical_form(&even, &["e2", "e1"]).unwrap(), (vec!["e1".into(), "e2".into()], -1));
        assert_eq!(canonical_form(&even, &["e1", "e1"]).unwrap().1, 0);
        let odd = GradedBasis::uniform(["a"], 1).unwrap();
        assert_eq!(canonical_form(&odd, &["a", "a"]).unwrap(), (vec!["a".into(), "a".into()], 1));
        assert_eq!(canonical_form(&odd, &["b"]), Err(AlgebraError::UnknownLabel("b".into())));
    }

    #[test]
    fn forced_zero_is_rejected() {
        let basis = GradedBasis::uniform(["v", "w"], 0).unwrap();
        let mut alg = HomotopyAlgebra::<Rational>::new("t", basis, AlgebraKind::Linfty);
        let err = alg.set(&[0, 0], Vector::basis(1)).unwrap_err();
        assert!(matches!(err, AlgebraError::ForcedZero(_)));
    }

    #[test]
    fn degree_rule_is_enforced() {
        let basis = GradedBasis::new([("v", 0), ("v*", 1)]).unwrap();
        let mut alg = HomotopyAlgebra::<Rational>::new("t", basis, AlgebraKind::Linfty);
        assert!(alg.set(&[1], Vector::basis(0)).is_ok());
        assert!(matches!(alg.set(&[0], Vector::basis(1)), Err(AlgebraError::DegreeRule { .. })));
        assert!(matches!(alg.set(&[0, 0, 0], Vector::basis(0)), Err(AlgebraError::DegreeRule { .. })));
    }

    #[test]
    fn eval_octonion_bracket() {
        let (basis, l2) = imaginary_octonions();
        let e = |i: usize| Vector::<Rational>::basis(basis.index_of(&format!("e{i}")).unwrap());
        assert_eq!(l2.eval(&[&e(1), &e(2)]).unwrap(), e(3).scale(&q(2)));
        assert_eq!(l2.eval(&[&e(4), &e(5)]).unwrap(), e(3).scale(&q(-2)));
        assert!(l2.eval(&[&e(3), &e(3)]).unwrap().is_zero());
        let v = e(1).add(&e(4).scale(&q(3)));
        assert!(l2.eval(&[&v, &v]).unwrap().is_zero());
        assert!(matches!(l2.eval(&[&v]), Err(AlgebraError::ArityMismatch { .. })));
    }

    #[test]
    fn octonion_jacobiators_and_associators() {
        let (basis, l2) = imaginary_octonions();
        let e = |i: usize| Vector::<Rational>::basis(basis.index_of(&format!("e{i}")).unwrap());
        assert!(jacobiator(&l2, &e(1), &e(2), &e(3)).unwrap().is_zero());
        assert_eq!(jacobiator(&l2, &e(1), &e(2), &e(4)).unwrap(), e(5).scale(&q(-12)));

        let star = octonion_star();
        let s = |i: usize| Vector::<Rational>::basis(star.basis().index_of(&format!("e{i}")).unwrap());
        assert_eq!(associator(&star, &s(1), &s(2), &s(4)), s(5).scale(&q(-2)));
        assert!(associator(&star, &s(1), &s(1), &s(2)).is_zero());
    }

    #[test]
    fn associator_vanishes_for_matrices() {
        let star = crate::zoo::matrix_algebra(2);
        let n = star.basis().len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (a, b, c) = (Vector::<Rational>::basis(a), Vector::basis(b), Vector::basis(c));
                    assert!(associator(&star, &a, &b, &c).is_zero());
                }
            }
        }
    }

    #[test]
    fn table_must_be_antisymmetric() {
        let basis = GradedBasis::uniform(["a", "b"], 0).unwrap();
        let err = bracket_from_table::<Rational>(&basis, |_, _| Vector::basis(0)).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAntisymmetric(..)));
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        crate::checker::all_permutations(n)
    }

    proptest! {
        #[test]
        fn permuted_lookup_matches_graded_sign(
            degrees in proptest::collection::vec(-1i32..3, 4),
            tuple in proptest::collection::vec(0usize..4, 1..5),
            coeff in 1i64..5,
        ) {
            let basis = GradedBasis::new(degrees.iter().enumerate().map(|(i, d)| (format!("b{i}"), *d))).unwrap();
            let mut b = MultiBracket::<Rational>::graded(tuple.len(), &basis);
            let (canon, sign) = canonical_tuple(&tuple, basis.degrees());
            prop_assume!(sign != 0);
            b.set(&canon, Vector::term(0, q(coeff))).unwrap();
            let degs: Vec<i32> = canon.iter().map(|&i| basis.degree(i)).collect();
            for sigma in permutations(canon.len()) {
                let permuted: Vec<usize> = sigma.iter().map(|&p| canon[p]).collect();
                let expected = crate::checker::perm_parity(&sigma) * crate::checker::koszul_sign(&sigma, &degs);
                prop_assert_eq!(b.eval_basis(&permuted), b.eval_basis(&canon).scale(&Rational::from_int(expected as i64)));
            }
        }
    }
}
