//! Exact Gaussian elimination: kernels and particular preimages.
//!
//! Pivot rule: columns are processed left to right, and the pivot for a
//! column is the lowest-index remaining row with a nonzero entry. Free
//! variables are set to zero, so results are deterministic.

use crate::error::AlgebraError;
use crate::graded::{LinearMap, Vector};
use crate::scalar::Field;

/// Reduced row echelon form of a dense matrix together with its pivot columns.
struct Echelon<S> {
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

fn reduce<S: Field>(mut rows: Vec<Vec<S>>, ncols: usize) -> Echelon<S> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in 0..rows[i].len() {
                let delta = rows[r][j].mul(&factor);
                rows[i][j] = rows[i][j].sub(&delta);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, pivots }
}

/// A basis of the kernel of `map`, one vector per free column in column order.
pub fn nullspace<S: Field>(map: &LinearMap<S>) -> Vec<Vector<S>> {
    let ncols = map.source.len();
    let ech = reduce(map.dense(), ncols);
    let free = (0..ncols).filter(|c| !ech.pivots.contains(c));
    free.map(|fcol| {
        let mut v = Vector::basis(fcol);
        for (row, &pcol) in ech.pivots.iter().enumerate() {
            v.add_term(pcol, &ech.rows[row][fcol].neg());
        }
        v
    })
    .collect()
}

/// Rank of the map.
pub fn rank<S: Field>(map: &LinearMap<S>) -> usize {
    reduce(map.dense(), map.source.len()).pivots.len()
}

/// Rank of a list of vectors living in a space of dimension `dim`.
pub fn rank_of<S: Field>(vectors: &[Vector<S>], dim: usize) -> usize {
    let rows = vectors.iter().map(|v| (0..dim).map(|i| v.coeff(i)).collect::<Vec<_>>()).collect::<Vec<_>>();
    reduce(rows, dim).pivots.len()
}

/// Some `x` with `map(x) = y`: the solution that vanishes on every free column.
pub fn solve_preimage<S: Field>(map: &LinearMap<S>, y: &Vector<S>) -> Result<Vector<S>, AlgebraError> {
    let ncols = map.source.len();
    if let Some(i) = y.support().find(|&i| i >= map.target.len()) {
        return Err(AlgebraError::IndexOutOfRange(i));
    }
    let mut rows = map.dense();
    for (i, row) in rows.iter_mut().enumerate() {
        row.push(y.coeff(i));
    }
    let ech = reduce(rows, ncols);
    let nonzero_rhs = ech.rows.iter().skip(ech.pivots.len()).any(|row| !row[ncols].is_zero());
    if nonzero_rhs {
        return Err(AlgebraError::NotInImage);
    }
    let mut x = Vector::zero();
    for (row, &pcol) in ech.pivots.iter().enumerate() {
        x.add_term(pcol, &ech.rows[row][ncols]);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedBasis;
    use crate::scalar::{Rational, Ring};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn square(dim: usize, cols: Vec<Vector<Rational>>) -> LinearMap<Rational> {
        let b = GradedBasis::uniform((0..dim).map(|i| format!("b{i}")), 0).unwrap();
        LinearMap::new(b.clone(), b, 0, cols).unwrap()
    }

    /// D on span{I*, k} into span{x, I} with D(I*) = I and D(k) = 0.
    fn d_map() -> LinearMap<Rational> {
        let u = GradedBasis::uniform(["I*", "k"], 1).unwrap();
        let v = GradedBasis::uniform(["x", "I"], 0).unwrap();
        LinearMap::new(u, v, -1, vec![Vector::basis(1), Vector::zero()]).unwrap()
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = square(2, vec![Vector::zero(), Vector::zero()]);
        assert_eq!(nullspace(&m), vec![Vector::basis(0), Vector::basis(1)]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = square(3, (0..3).map(Vector::basis).collect());
        assert!(nullspace(&m).is_empty());
    }

    #[test]
    fn kernel_of_d_is_k() {
        assert_eq!(nullspace(&d_map()), vec![Vector::basis(1)]);
    }

    #[test]
    fn preimage_examples() {
        let id = square(3, (0..3).map(Vector::basis).collect());
        assert_eq!(solve_preimage(&id, &Vector::basis(0)), Ok(Vector::basis(0)));
        let zero = square(2, vec![Vector::zero(), Vector::zero()]);
        assert_eq!(solve_preimage(&zero, &Vector::basis(1)), Err(AlgebraError::NotInImage));
        let y = Vector::term(1, q(3));
        assert_eq!(solve_preimage(&d_map(), &y), Ok(Vector::term(0, q(3))));
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            // Sparse-ish entries so that singular maps are common.
            let entry = prop_oneof![3 => Just(0i64), 2 => -3i64..4];
            (Just(r), Just(c), proptest::collection::vec(proptest::collection::vec(entry, c), r))
        })
    }

    fn build(r: usize, c: usize, m: &[Vec<i64>]) -> LinearMap<Rational> {
        let src = GradedBasis::uniform((0..c).map(|i| format!("s{i}")), 0).unwrap();
        let dst = GradedBasis::uniform((0..r).map(|i| format!("t{i}")), 0).unwrap();
        let cols = (0..c).map(|j| Vector::from_terms((0..r).map(|i| (i, q(m[i][j]))))).collect();
        LinearMap::new(src, dst, 0, cols).unwrap()
    }

    proptest! {
        #[test]
        fn preimage_solves(((r, c, m), x) in small_matrix().prop_flat_map(|(r, c, m)| {
            (Just((r, c, m)), proptest::collection::vec(-4i64..5, c))
        })) {
            let map = build(r, c, &m);
            let x = Vector::from_terms(x.into_iter().enumerate().map(|(i, v)| (i, q(v))));
            let y = map.apply(&x);
            let sol = solve_preimage(&map, &y).unwrap();
            prop_assert_eq!(map.apply(&sol), y);
        }

        #[test]
        fn kernel_is_a_basis((r, c, m) in small_matrix()) {
            let map = build(r, c, &m);
            let ker = nullspace(&map);
            for v in &ker {
                prop_assert!(map.apply(v).is_zero());
            }
            prop_assert_eq!(rank_of(&ker, c), ker.len());
            prop_assert_eq!(ker.len() + rank(&map), c);
            // Running twice spans the same space: stacking does not raise the rank.
            let mut both = ker.clone();
            both.extend(nullspace(&map));
            prop_assert_eq!(rank_of(&both, c), ker.len());
        }
    }
}
