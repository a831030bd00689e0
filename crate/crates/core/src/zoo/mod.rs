//! Built-in example algebras.

pub mod contraction;
pub mod octonions;
pub mod rflux;

pub use contraction::{contract, ScalingWeights, Weight};
pub use octonions::{
    imaginary_octonions, levi_civita, octonion_eta, octonion_star, octonion_theta, EtaTensor, ThetaTensor,
};
pub use rflux::{
    monopole, rflux, rflux_algebra, rflux_augmented_section, rflux_linfty, rflux_minimal_section, rflux_no_l3,
    rflux_theorem2, rflux_theorem2_data, rflux_theorem2_map, rflux_theorem2_minimal, rflux_theorem2_minimal_data,
    rflux_theorem2_pivot_data, rflux_weights,
};

use crate::brackets::{jacobiator, AlgebraKind, HomotopyAlgebra, MultiBracket, StarProduct};
use crate::constructions::extend_theorem1;
use crate::graded::{GradedBasis, Vector};
use crate::linalg::rank_of;
use crate::scalar::{Field, Rational};

/// The imaginary octonions as an algebra with only `l2`.
pub fn octonions() -> HomotopyAlgebra<Rational> {
    let (basis, l2) = imaginary_octonions();
    let mut alg = HomotopyAlgebra::new("octonions", basis, AlgebraKind::Linfty);
    alg.insert_bracket(l2).expect("degree-0 bracket");
    alg
}

/// The 14-dimensional doubling of the imaginary octonions.
pub fn octonions_theorem1() -> HomotopyAlgebra<Rational> {
    let (basis, l2) = imaginary_octonions();
    let mut alg = extend_theorem1(&basis, &l2).expect("antisymmetric bracket");
    alg.name = "octonions-theorem1".into();
    alg
}

/// `n x n` matrices with basis `E11, E12, ..` and the matrix product.
pub fn matrix_algebra(n: usize) -> StarProduct<Rational> {
    let idx = |i: usize, j: usize| i * n + j;
    let basis = GradedBasis::uniform((0..n).flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1))), 0)
        .expect("distinct");
    let mut p = StarProduct::new(basis).expect("degree 0");
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                p.set(idx(i, j), idx(j, l), Vector::basis(idx(i, l))).expect("in range");
            }
        }
    }
    p
}

/// Dimension of the span of all Jacobiators of basis triples.
pub fn jacobiator_image_rank<S: Field>(basis: &GradedBasis, bracket: &MultiBracket<S>) -> usize {
    let n = basis.len();
    let mut images = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = |i| Vector::<S>::basis(i);
                images.push(jacobiator(bracket, &e(a), &e(b), &e(c)).expect("degree-0 2-bracket"));
            }
        }
    }
    rank_of(&images, n)
}

/// Names accepted by [`crate::cli`] in place of a file path.
pub const BUILTIN_NAMES: [&str; 13] = [
    "octonions",
    "octonions-star",
    "octonions-theorem1",
    "matrix2",
    "rflux",
    "rflux-weights",
    "rflux-linfty",
    "rflux-no-l3",
    "monopole",
    "rflux-theorem2",
    "rflux-theorem2-minimal",
    "rflux-theorem2-map",
    "rflux-theorem2-section",
];
