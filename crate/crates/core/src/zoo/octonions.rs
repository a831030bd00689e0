//! Octonion structure constants.
//!
//! Indices run over 1..=7 with the split `a = (i, i+3, 7)` for `i = 1, 2, 3`,
//! so the barred indices occupy 4, 5, 6 and `e7` comes last.

use crate::brackets::{MultiBracket, StarProduct};
use crate::checker::perm_parity;
use crate::graded::{GradedBasis, Vector};
use crate::scalar::{Rational, Ring};

/// Totally antisymmetric rank-3 table `eta_abc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaTensor {
    values: [[[i32; 7]; 7]; 7],
}

/// Totally antisymmetric rank-4 table `Theta_abcd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTensor {
    values: [[[[i32; 7]; 7]; 7]; 7],
}

impl EtaTensor {
    /// 1-based lookup.
    pub fn get(&self, a: usize, b: usize, c: usize) -> i32 {
        self.values[a - 1][b - 1][c - 1]
    }

    fn set_antisymmetric(&mut self, t: [usize; 3], value: i32) {
        for sigma in crate::checker::all_permutations(3) {
            let p = [t[sigma[0]], t[sigma[1]], t[sigma[2]]];
            self.values[p[0] - 1][p[1] - 1][p[2] - 1] = value * perm_parity(&sigma) as i32;
        }
    }
}

impl ThetaTensor {
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> i32 {
        self.values[a - 1][b - 1][c - 1][d - 1]
    }
}

/// Sign of the permutation taking `1..=n` to `indices`, or 0 on repeats.
pub fn levi_civita(indices: &[usize]) -> i32 {
    let mut seen = vec![false; indices.len() + 1];
    for &i in indices {
        if i == 0 || i > indices.len() || seen[i] {
            return 0;
        }
        seen[i] = true;
    }
    let zero_based: Vec<usize> = indices.iter().map(|i| i - 1).collect();
    perm_parity(&zero_based) as i32
}

pub fn octonion_eta() -> EtaTensor {
    let mut eta = EtaTensor { values: [[[0; 7]; 7]; 7] };
    eta.set_antisymmetric([1, 2, 3], 1);
    // eta_{i jbar kbar} = -eps_ijk, one representative per orbit
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        eta.set_antisymmetric([i, j + 3, k + 3], -1);
    }
    for i in 1..=3 {
        eta.set_antisymmetric([7, i, i + 3], 1);
    }
    eta
}

/// `Theta_abcd = (1/3!) eps_abcdefg eta_efg`.
pub fn octonion_theta() -> ThetaTensor {
    let eta = octonion_eta();
    let mut theta = ThetaTensor { values: [[[[0; 7]; 7]; 7]; 7] };
    for a in 1..=7 {
        for b in 1..=7 {
            for c in 1..=7 {
                for d in 1..=7 {
                    let head = [a, b, c, d];
                    let mut rest: Vec<usize> = (1..=7).filter(|x| !head.contains(x)).collect();
                    if rest.len() != 3 {
                        continue;
                    }
                    rest.sort();
                    // The six orderings of the complement each contribute the same term.
                    let full = [a, b, c, d, rest[0], rest[1], rest[2]];
                    theta.values[a - 1][b - 1][c - 1][d - 1] = levi_civita(&full) * eta.get(rest[0], rest[1], rest[2]);
                }
            }
        }
    }
    theta
}

/// The imaginary octonions `e1..e7` with `[e_a, e_b] = 2 eta_abc e_c`.
pub fn imaginary_octonions() -> (GradedBasis, MultiBracket<Rational>) {
    let basis = GradedBasis::uniform((1..=7).map(|i| format!("e{i}")), 0).expect("distinct labels");
    let eta = octonion_eta();
    let mut bracket = MultiBracket::graded(2, &basis);
    for a in 1..=7 {
        for b in a + 1..=7 {
            let value = Vector::from_terms((1..=7).map(|c| (c - 1, Rational::from_int(2 * eta.get(a, b, c) as i64))));
            bracket.set(&[a - 1, b - 1], value).expect("a < b");
        }
    }
    (basis, bracket)
}

/// The full octonions on `1, e1..e7` with `e_a e_b = -delta_ab 1 + eta_abc e_c`.
pub fn octonion_star() -> StarProduct<Rational> {
    let basis = GradedBasis::uniform(std::iter::once("1".to_string()).chain((1..=7).map(|i| format!("e{i}"))), 0)
        .expect("distinct labels");
    let eta = octonion_eta();
    let mut p = StarProduct::new(basis).expect("degree 0");
    for a in 0..8 {
        p.set(0, a, Vector::basis(a)).expect("in range");
        p.set(a, 0, Vector::basis(a)).expect("in range");
    }
    for a in 1..=7 {
        for b in 1..=7 {
            let mut value = Vector::from_terms((1..=7).map(|c| (c, Rational::from_int(eta.get(a, b, c) as i64))));
            if a == b {
                value.add_term(0, &Rational::from_int(-1));
            }
            p.set(a, b, value).expect("in range");
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::{associator, jacobiator};
    use crate::checker::all_permutations;
    use crate::linalg::rank_of;

    #[test]
    fn eta_values() {
        let eta = octonion_eta();
        assert_eq!(eta.get(1, 2, 3), 1);
        assert_eq!(eta.get(7, 1, 4), 1);
        assert_eq!(eta.get(4, 5, 6), 0);
        assert_eq!(eta.get(1, 5, 6), -1);
        let nonzero = (1..=7)
            .flat_map(|a| (a + 1..=7).flat_map(move |b| (b + 1..=7).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| eta.get(a, b, c) != 0)
            .count();
        assert_eq!(nonzero, 7);
    }

    #[test]
    fn theta_values() {
        let theta = octonion_theta();
        assert_eq!(theta.get(1, 2, 3, 7), 0);
        assert_eq!(theta.get(1, 2, 4, 5), 1);
    }

    #[test]
    fn tensors_are_totally_antisymmetric() {
        let eta = octonion_eta();
        let theta = octonion_theta();
        let perms3 = all_permutations(3);
        let perms4 = all_permutations(4);
        for a in 1..=7 {
            for b in 1..=7 {
                for c in 1..=7 {
                    let t = [a, b, c];
                    for s in &perms3 {
                        let sign = perm_parity(s) as i32;
                        assert_eq!(eta.get(t[s[0]], t[s[1]], t[s[2]]), sign * eta.get(a, b, c));
                    }
                    for d in 1..=7 {
                        let t = [a, b, c, d];
                        for s in &perms4 {
                            let sign = perm_parity(s) as i32;
                            assert_eq!(theta.get(t[s[0]], t[s[1]], t[s[2]], t[s[3]]), sign * theta.get(a, b, c, d));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eta_contraction_identity() {
        let eta = octonion_eta();
        let theta = octonion_theta();
        let delta = |x: usize, y: usize| (x == y) as i32;
        for a in 1..=7 {
            for b in 1..=7 {
                for c in 1..=7 {
                    for d in 1..=7 {
                        let lhs: i32 = (1..=7).map(|e| eta.get(a, b, e) * eta.get(c, d, e)).sum();
                        let rhs = delta(c, a) * delta(b, d) - delta(c, b) * delta(a, d) - theta.get(a, b, c, d);
                        assert_eq!(lhs, rhs, "({a},{b},{c},{d})");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobiator_is_theta_and_six_associators() {
        let (_, l2) = imaginary_octonions();
        let star = octonion_star();
        let theta = octonion_theta();
        let mut images = Vec::new();
        for a in 1..=7 {
            for b in 1..=7 {
                for c in 1..=7 {
                    let e = |i: usize| Vector::<Rational>::basis(i - 1);
                    let jac = jacobiator(&l2, &e(a), &e(b), &e(c)).unwrap();
                    let want = Vector::from_terms(
                        (1..=7).map(|d| (d - 1, Rational::from_int(-12 * theta.get(a, b, c, d) as i64))),
                    );
                    assert_eq!(jac, want);
                    let s = |i: usize| Vector::<Rational>::basis(i);
                    let ass = associator(&star, &s(a), &s(b), &s(c)).reindex(|i| i - 1);
                    assert_eq!(jac, ass.scale(&Rational::from_int(6)));
                    images.push(jac);
                }
            }
        }
        // Every generator shows up in some Jacobiator.
        assert_eq!(rank_of(&images, 7), 7);
    }

    #[test]
    fn star_product_basics() {
        let star = octonion_star();
        let (_, l2) = imaginary_octonions();
        assert_eq!(star.product_basis(1, 1), Vector::term(0, Rational::from_int(-1)));
        for a in 0..8 {
            assert_eq!(star.product_basis(0, a), Vector::basis(a));
        }
        for a in 1..=7 {
            for b in 1..=7 {
                let comm = star.product_basis(a, b).sub(&star.product_basis(b, a));
                assert_eq!(comm.reindex(|i| i - 1), l2.eval_basis(&[a - 1, b - 1]));
            }
        }
        assert_eq!(star.product_basis(1, 2), Vector::basis(3));
        assert_eq!(star.product_basis(3, 4), Vector::term(5, Rational::from_int(-1)));
    }
}
