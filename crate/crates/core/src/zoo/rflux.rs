//! The R-flux algebra, its magnetic monopole twin and their extensions.

use crate::brackets::{AlgebraKind, HomotopyAlgebra, MultiBracket};
use crate::constructions::{extend_theorem2, ideal_inclusion, SectionOverrides, TheoremTwoData};
use crate::graded::{GradedBasis, LinearMap, Vector};
use crate::scalar::{Gaussian, Ring};

use super::contraction::ScalingWeights;
use super::octonions::levi_civita;

const LABELS: [&str; 7] = ["x1", "x2", "x3", "p1", "p2", "p3", "I"];

fn x(i: usize) -> usize {
    i - 1
}

fn p(i: usize) -> usize {
    i + 2
}

const I: usize = 6;

/// `[x^i, p_j] = i delta^i_j I`, `[x^i, x^j] = i eps^ijk p_k`, `[p_i, p_j] = 0` over Q(i).
pub fn rflux_algebra() -> (GradedBasis, MultiBracket<Gaussian>) {
    let basis = GradedBasis::uniform(LABELS, 0).expect("distinct labels");
    let mut l2 = MultiBracket::graded(2, &basis);
    for i in 1..=3 {
        l2.set(&[x(i), p(i)], Vector::term(I, Gaussian::i())).expect("distinct");
        for j in i + 1..=3 {
            let value = Vector::from_terms(
                (1..=3).map(|k| (p(k), Gaussian::from_int(levi_civita(&[i, j, k]) as i64).mul(&Gaussian::i()))),
            );
            l2.set(&[x(i), x(j)], value).expect("distinct");
        }
    }
    (basis, l2)
}

fn algebra_from(name: &str, basis: GradedBasis, l2: MultiBracket<Gaussian>) -> HomotopyAlgebra<Gaussian> {
    let mut alg = HomotopyAlgebra::new(name, basis, AlgebraKind::Linfty);
    alg.insert_bracket(l2).expect("degree-0 bracket");
    alg
}

pub fn rflux() -> HomotopyAlgebra<Gaussian> {
    let (basis, l2) = rflux_algebra();
    algebra_from("rflux", basis, l2)
}

/// `p_i = -(i/2) mu^2 e_i`, `x^i = (i/2) mu e_(i+3)`, `I = (i/2) mu^3 e7`.
pub fn rflux_weights() -> ScalingWeights {
    let half_i = Gaussian::from_parts((0, 1), (1, 2));
    let mut w = ScalingWeights::new();
    w.name = Some("rflux".into());
    for i in 1..=3 {
        w = w.with(&format!("e{}", i + 3), &format!("x{i}"), half_i.clone(), 1);
    }
    for i in 1..=3 {
        w = w.with(&format!("e{i}"), &format!("p{i}"), half_i.neg(), 2);
    }
    w.with("e7", "I", half_i, 3)
}

/// The R-flux bracket with positions and momenta exchanged.
pub fn monopole() -> HomotopyAlgebra<Gaussian> {
    let (basis, l2) = rflux_algebra();
    let swap = |i: usize| match i {
        0..=2 => i + 3,
        3..=5 => i - 3,
        _ => i,
    };
    let mut out = MultiBracket::graded(2, &basis);
    for (t, v) in l2.entries() {
        out.set(&[swap(t[0]), swap(t[1])], v.reindex(swap)).expect("distinct");
    }
    algebra_from("monopole", basis, out)
}

/// The 8-dimensional 2-term algebra: `l1(I*) = I`, `l3(x^i, x^j, x^k) = -3 eps^ijk I*`.
pub fn rflux_linfty() -> HomotopyAlgebra<Gaussian> {
    let (basis, l2) = rflux_algebra();
    let d = ideal_inclusion(&basis, vec![Vector::basis(I)], ["I*".to_string()]).expect("degree shift -1");
    let mut alg =
        extend_theorem2(&basis, &l2, &d, None, None).expect("span{I} is a central ideal containing every Jacobiator");
    alg.name = "rflux-linfty".into();
    alg
}

pub fn rflux_no_l3() -> HomotopyAlgebra<Gaussian> {
    let mut alg = rflux_linfty();
    alg.remove_bracket(3);
    alg.name = "rflux-no-l3".into();
    alg
}

/// `D: span{I*, k} -> V` with `D(I*) = I` and `D(k) = 0`.
pub fn rflux_theorem2_map() -> LinearMap<Gaussian> {
    let (basis, _) = rflux_algebra();
    let u = GradedBasis::uniform(["I*", "k"], 1).expect("distinct labels");
    LinearMap::new(u, basis, -1, vec![Vector::basis(I), Vector::zero()]).expect("degree shift -1")
}

const I_STAR: usize = 0;
const K: usize = 1;

/// The kernel components `f(x1, x2, x3) = 3 I* + k` and `f(p3, x1, x2) = k`.
pub fn rflux_minimal_section() -> SectionOverrides<Gaussian> {
    let one = Gaussian::one();
    vec![
        ([x(1), x(2), x(3)], Vector::from_terms([(I_STAR, Gaussian::from_int(3)), (K, one.clone())])),
        ([p(3), x(1), x(2)], Vector::term(K, one)),
    ]
}

/// The minimal section plus `f(p1, p2, p3) = k` and `f(I, x1, x2) = k`, which
/// make both `l4` and `l3(I*, ., .)` nonzero.
pub fn rflux_augmented_section() -> SectionOverrides<Gaussian> {
    let mut f = rflux_minimal_section();
    f.push(([p(1), p(2), p(3)], Vector::basis(K)));
    f.push(([I, x(1), x(2)], Vector::basis(K)));
    f
}

fn theorem2_data(f: Option<&SectionOverrides<Gaussian>>) -> TheoremTwoData<Gaussian> {
    let (basis, l2) = rflux_algebra();
    TheoremTwoData::new(&basis, &l2, &rflux_theorem2_map(), f, Some(&Vec::new())).expect("valid fixture")
}

/// Pivot-rule section and action, no overrides.
pub fn rflux_theorem2_pivot_data() -> TheoremTwoData<Gaussian> {
    theorem2_data(None)
}

pub fn rflux_theorem2_minimal_data() -> TheoremTwoData<Gaussian> {
    theorem2_data(Some(&rflux_minimal_section()))
}

pub fn rflux_theorem2_data() -> TheoremTwoData<Gaussian> {
    theorem2_data(Some(&rflux_augmented_section()))
}

pub fn rflux_theorem2_minimal() -> HomotopyAlgebra<Gaussian> {
    let mut alg = rflux_theorem2_minimal_data().to_algebra().expect("valid fixture");
    alg.name = "rflux-theorem2-minimal".into();
    alg
}

/// The augmented 3-term fixture with nonzero `l4`.
pub fn rflux_theorem2() -> HomotopyAlgebra<Gaussian> {
    let mut alg = rflux_theorem2_data().to_algebra().expect("valid fixture");
    alg.name = "rflux-theorem2".into();
    alg
}
