//! Graded bases, sparse vectors and linear maps.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::Ring;

/// An ordered list of labeled basis elements, each with an integer degree.
///
/// The declared order is the fixed basis order used for canonical tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    labels: Vec<String>,
    degrees: Vec<i32>,
    index: HashMap<String, usize>,
}

impl GradedBasis {
    pub fn new<L: Into<String>>(elements: impl IntoIterator<Item = (L, i32)>) -> Result<Self, AlgebraError> {
        let mut basis = GradedBasis { labels: Vec::new(), degrees: Vec::new(), index: HashMap::new() };
        for (label, degree) in elements {
            basis.push(label.into(), degree)?;
        }
        Ok(basis)
    }

    /// A basis with every element in degree `degree`.
    pub fn uniform<L: Into<String>>(labels: impl IntoIterator<Item = L>, degree: i32) -> Result<Self, AlgebraError> {
        Self::new(labels.into_iter().map(|l| (l, degree)))
    }

    pub fn push(&mut self, label: String, degree: i32) -> Result<usize, AlgebraError> {
        if self.index.contains_key(&label) {
            return Err(AlgebraError::DuplicateLabel(label));
        }
        let idx = self.labels.len();
        self.index.insert(label.clone(), idx);
        self.labels.push(label);
        self.degrees.push(degree);
        Ok(idx)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn degree(&self, idx: usize) -> i32 {
        self.degrees[idx]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Result<usize, AlgebraError> {
        self.index.get(label).copied().ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// The set of degrees that carry at least one basis element.
    pub fn occupied_degrees(&self) -> BTreeSet<i32> {
        self.degrees.iter().copied().collect()
    }

    pub fn has_degree(&self, degree: i32) -> bool {
        self.degrees.contains(&degree)
    }

    /// Indices of basis elements in the given degree, in basis order.
    pub fn indices_in_degree(&self, degree: i32) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degrees[i] == degree).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str, i32)> {
        self.labels.iter().zip(&self.degrees).enumerate().map(|(i, (l, d))| (i, l.as_str(), *d))
    }
}

/// A finitely supported combination of basis elements.
///
/// Vectors carry indices only; the basis they refer to is supplied by the
/// surrounding algebra. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector<S> {
    coeffs: BTreeMap<usize, S>,
}

impl<S: Ring> Default for Vector<S> {
    fn default() -> Self {
        Vector { coeffs: BTreeMap::new() }
    }
}

impl<S: Ring> Vector<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: usize) -> Self {
        Self::term(idx, S::one())
    }

    pub fn term(idx: usize, coeff: S) -> Self {
        let mut v = Self::zero();
        v.add_term(idx, &coeff);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, S)>) -> Self {
        let mut v = Self::zero();
        for (i, c) in terms {
            v.add_term(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: usize) -> S {
        self.coeffs.get(&idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, idx: usize, coeff: &S) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&idx) {
            Some(c) => {
                let sum = c.add(coeff);
                if sum.is_zero() {
                    self.coeffs.remove(&idx);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.coeffs.insert(idx, coeff.clone());
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &Vector<S>, scale: &S) {
        if scale.is_zero() {
            return;
        }
        for (i, c) in &other.coeffs {
            self.add_term(*i, &c.mul(scale));
        }
    }

    pub fn add(&self, other: &Vector<S>) -> Vector<S> {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &Vector<S>) -> Vector<S> {
        let mut out = self.clone();
        out.add_scaled(other, &S::one().neg());
        out
    }

    pub fn scale(&self, s: &S) -> Vector<S> {
        if s.is_zero() {
            return Self::zero();
        }
        Vector { coeffs: self.coeffs.iter().map(|(i, c)| (*i, c.mul(s))).collect() }
    }

    pub fn neg(&self) -> Vector<S> {
        Vector { coeffs: self.coeffs.iter().map(|(i, c)| (*i, c.neg())).collect() }
    }

    /// Reindexes the support through `map`; coefficients landing on the same index add.
    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> Vector<S> {
        Vector::from_terms(self.coeffs.iter().map(|(i, c)| (map(*i), c.clone())))
    }

    /// The common degree of the support, `Ok(None)` for the zero vector.
    pub fn degree(&self, basis: &GradedBasis) -> Result<Option<i32>, AlgebraError> {
        let mut degree = None;
        for i in self.support() {
            let d = basis.degree(i);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(AlgebraError::NonHomogeneous),
                _ => {}
            }
        }
        Ok(degree)
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> Vector<T> {
        Vector::from_terms(self.coeffs.iter().map(|(i, c)| (*i, f(c))))
    }

    pub fn display<'a>(&'a self, basis: &'a GradedBasis) -> VectorDisplay<'a, S> {
        VectorDisplay { vector: self, basis }
    }
}

pub struct VectorDisplay<'a, S> {
    vector: &'a Vector<S>,
    basis: &'a GradedBasis,
}

impl<S: Ring> fmt::Display for VectorDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vector.is_zero() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.vector.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", self.basis.label(i))?;
            } else {
                write!(f, "({c})*{}", self.basis.label(i))?;
            }
        }
        Ok(())
    }
}

/// A linear map between two graded bases, stored by the images of source basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap<S> {
    pub source: GradedBasis,
    pub target: GradedBasis,
    pub shift: i32,
    columns: Vec<Vector<S>>,
}

impl<S: Ring> LinearMap<S> {
    /// Builds the map from one image per source basis element, checking the degree shift.
    pub fn new(
        source: GradedBasis,
        target: GradedBasis,
        shift: i32,
        columns: Vec<Vector<S>>,
    ) -> Result<Self, AlgebraError> {
        if columns.len() != source.len() {
            return Err(AlgebraError::DimensionMismatch { expected: source.len(), found: columns.len() });
        }
        for (j, col) in columns.iter().enumerate() {
            if let Some(i) = col.support().find(|&i| i >= target.len()) {
                return Err(AlgebraError::IndexOutOfRange(i));
            }
            if let Some(d) = col.degree(&target)? {
                let want = source.degree(j) + shift;
                if d != want {
                    return Err(AlgebraError::DegreeRule {
                        entry: source.label(j).to_string(),
                        expected: want,
                        found: d,
                    });
                }
            }
        }
        Ok(LinearMap { source, target, shift, columns })
    }

    pub fn zero(source: GradedBasis, target: GradedBasis, shift: i32) -> Self {
        let columns = vec![Vector::zero(); source.len()];
        LinearMap { source, target, shift, columns }
    }

    pub fn column(&self, j: usize) -> &Vector<S> {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vector<S>] {
        &self.columns
    }

    pub fn apply(&self, x: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zero();
        for (j, c) in x.iter() {
            out.add_scaled(&self.columns[j], c);
        }
        out
    }

    /// Dense row-major matrix of the map, rows indexed by target basis.
    pub(crate) fn dense(&self) -> Vec<Vec<S>> {
        let mut m = vec![vec![S::zero(); self.source.len()]; self.target.len()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                m[i][j] = c.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Ring};

    #[test]
    fn labels_are_unique() {
        let err = GradedBasis::uniform(["a", "b", "a"], 0).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateLabel("a".into()));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut v = Vector::<Rational>::basis(2);
        v.add_term(2, &Rational::from_int(-1));
        assert!(v.is_zero());
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn homogeneity() {
        let basis = GradedBasis::new([("a", 0), ("b", 1)]).unwrap();
        let v = Vector::<Rational>::from_terms([(0, Rational::one()), (1, Rational::one())]);
        assert_eq!(v.degree(&basis), Err(AlgebraError::NonHomogeneous));
        assert_eq!(Vector::<Rational>::basis(1).degree(&basis), Ok(Some(1)));
    }

    #[test]
    fn linear_map_checks_shift() {
        let src = GradedBasis::uniform(["a*"], 1).unwrap();
        let dst = GradedBasis::uniform(["a"], 0).unwrap();
        assert!(LinearMap::<Rational>::new(src.clone(), dst.clone(), -1, vec![Vector::basis(0)]).is_ok());
        assert!(matches!(
            LinearMap::<Rational>::new(src, dst, 0, vec![Vector::basis(0)]),
            Err(AlgebraError::DegreeRule { .. })
        ));
    }
}
