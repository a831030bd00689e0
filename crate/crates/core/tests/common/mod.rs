//! Random fixtures shared by the integration tests.

#![allow(dead_code)]

use linfty::brackets::{MultiBracket, StarProduct};
use linfty::graded::{GradedBasis, LinearMap, Vector};
use linfty::scalar::{Rational, Ring};
use rand::Rng;

pub fn small(rng: &mut impl Rng) -> Rational {
    // Mostly zero so that brackets are sparse but not trivial.
    if rng.gen_bool(0.4) {
        Rational::from_int(0)
    } else {
        Rational::from_frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))
    }
}

pub fn random_vector(rng: &mut impl Rng, indices: impl IntoIterator<Item = usize>) -> Vector<Rational> {
    Vector::from_terms(indices.into_iter().map(|i| (i, small(rng))))
}

pub fn degree0_basis(dim: usize) -> GradedBasis {
    GradedBasis::uniform((1..=dim).map(|i| format!("v{i}")), 0).unwrap()
}

/// A random antisymmetric 2-bracket, generally not Lie.
pub fn random_bracket(rng: &mut impl Rng, dim: usize) -> (GradedBasis, MultiBracket<Rational>) {
    let basis = degree0_basis(dim);
    let mut b = MultiBracket::graded(2, &basis);
    for i in 0..dim {
        for j in i + 1..dim {
            b.set(&[i, j], random_vector(rng, 0..dim)).unwrap();
        }
    }
    (basis, b)
}

pub fn random_star(rng: &mut impl Rng, dim: usize) -> StarProduct<Rational> {
    let mut p = StarProduct::new(degree0_basis(dim)).unwrap();
    for i in 0..dim {
        for j in 0..dim {
            p.set(i, j, random_vector(rng, 0..dim)).unwrap();
        }
    }
    p
}

/// `D: V* + K -> V`, the identity on `V*` and zero on `extra` kernel directions.
pub fn projection_with_kernel(v: &GradedBasis, extra: usize) -> LinearMap<Rational> {
    let labels = v.labels().map(|l| format!("{l}*")).chain((1..=extra).map(|i| format!("k{i}")));
    let u = GradedBasis::uniform(labels.collect::<Vec<_>>(), 1).unwrap();
    let cols = (0..v.len()).map(Vector::basis).chain((0..extra).map(|_| Vector::zero())).collect();
    LinearMap::new(u, v.clone(), -1, cols).unwrap()
}
