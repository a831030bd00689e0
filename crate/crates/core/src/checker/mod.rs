//! Koszul signs, unshuffles, and the homotopy relations.
//!
//! The n-th L-infinity relation is
//!
//! ```text
//! sum_{i+j=n+1} (-1)^{i(j-1)} sum_{unshuffles s} (-1)^s e(s; x) l_j(l_i(x_s1, .., x_si), x_s(i+1), .., x_sn) = 0
//! ```
//!
//! and the n-th A-infinity relation is
//!
//! ```text
//! sum_{r=0}^{n-1} sum_{j=1}^{n-r} (-1)^{j + r + jr + nj + j(|a_1| + .. + |a_r|)}
//!     m_{n-j+1}(a_1, .., a_r, m_j(a_{r+1}, .., a_{r+j}), .., a_n) = 0.
//! ```
//!
//! Both left-hand sides have degree `n - 3 + sum of input degrees`. When
//! that degree carries no basis element the relation holds trivially, and the
//! exhaustive drivers skip such tuples unless asked not to.

pub mod expanded;

use rayon::prelude::*;
use serde::Serialize;

use crate::brackets::{canonical_tuple, sign_scalar, AlgebraKind, HomotopyAlgebra};
use crate::graded::{GradedBasis, Vector};
use crate::scalar::Ring;

/// Permutations are 0-based lists `s` with `s[p]` the index placed at position `p`.
pub type Permutation = Vec<usize>;

/// `+1` for even permutations, `-1` for odd ones.
pub fn perm_parity(sigma: &[usize]) -> i8 {
    let mut sign = 1;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The Koszul sign `e(s; x)` defined by `x_1 ^ .. ^ x_k = e(s; x) x_s1 ^ .. ^ x_sk`
/// in the graded commutative algebra with `x ^ y = (-1)^{|x||y|} y ^ x`.
///
/// `degrees[i]` is the degree of `x_(i+1)`; only parities matter.
pub fn koszul_sign(sigma: &[usize], degrees: &[i32]) -> i8 {
    assert_eq!(sigma.len(), degrees.len(), "one degree per permuted element");
    let odd = |i: usize| degrees[sigma[i]].rem_euclid(2) == 1;
    let mut sign = 1;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] && odd(a) && odd(b) {
                sign = -sign;
            }
        }
    }
    sign
}

/// The `(i, n - i)` unshuffles in lexicographic order: permutations strictly
/// increasing on the first `i` and on the last `n - i` positions.
pub fn unshuffles(i: usize, n: usize) -> Vec<Permutation> {
    assert!(i <= n);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    fn rec(start: usize, i: usize, n: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if chosen.len() == i {
            let mut sigma = chosen.clone();
            sigma.extend((0..n).filter(|x| !chosen.contains(x)));
            out.push(sigma);
            return;
        }
        for x in start..n {
            chosen.push(x);
            rec(x + 1, i, n, chosen, out);
            chosen.pop();
        }
    }
    rec(0, i, n, &mut chosen, &mut out);
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(n, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Unshuffle tables for one relation order `n`, with their parities.
struct UnshuffleTable {
    blocks: Vec<(usize, Vec<(Permutation, i8)>)>,
}

impl UnshuffleTable {
    fn new(n: usize) -> Self {
        let blocks = (1..=n)
            .map(|i| {
                (
                    i,
                    unshuffles(i, n)
                        .into_iter()
                        .map(|s| {
                            let p = perm_parity(&s);
                            (s, p)
                        })
                        .collect(),
                )
            })
            .collect();
        UnshuffleTable { blocks }
    }
}

fn linfty_residual_with<S: Ring>(alg: &HomotopyAlgebra<S>, table: &UnshuffleTable, t: &[usize]) -> Vector<S> {
    let n = t.len();
    let degrees: Vec<i32> = t.iter().map(|&x| alg.basis().degree(x)).collect();
    let mut out = Vector::zero();
    let mut outer = Vec::with_capacity(n);
    let mut inner = Vec::with_capacity(n);
    for (i, perms) in &table.blocks {
        let (i, j) = (*i, n + 1 - *i);
        let (Some(li), Some(lj)) = (alg.bracket(i), alg.bracket(j)) else {
            continue;
        };
        let block_sign: i8 = if (i * (j - 1)) % 2 == 0 { 1 } else { -1 };
        for (sigma, parity) in perms {
            inner.clear();
            inner.extend(sigma[..i].iter().map(|&p| t[p]));
            let Some((inner_sign, inner_val)) = li.lookup(&inner) else {
                continue;
            };
            let sign = block_sign * parity * koszul_sign(sigma, &degrees) * inner_sign;
            for (k, c) in inner_val.iter() {
                outer.clear();
                outer.push(k);
                outer.extend(sigma[i..].iter().map(|&p| t[p]));
                if let Some((outer_sign, v)) = lj.lookup(&outer) {
                    out.add_scaled(v, &c.mul(&sign_scalar(sign * outer_sign)));
                }
            }
        }
    }
    out
}

/// Left-hand side of the n-th L-infinity relation on the basis tuple `t` (`n = t.len()`).
pub fn linfty_residual<S: Ring>(alg: &HomotopyAlgebra<S>, t: &[usize]) -> Vector<S> {
    linfty_residual_with(alg, &UnshuffleTable::new(t.len()), t)
}

/// Left-hand side of the n-th A-infinity relation on the basis tuple `a` (`n = a.len()`).
pub fn ainfty_residual<S: Ring>(alg: &HomotopyAlgebra<S>, a: &[usize]) -> Vector<S> {
    let n = a.len();
    let basis = alg.basis();
    let mut out = Vector::zero();
    let mut outer = Vec::with_capacity(n);
    for r in 0..n {
        let prefix_degree: i64 = a[..r].iter().map(|&x| basis.degree(x) as i64).sum();
        for j in 1..=n - r {
            let (Some(mj), Some(mo)) = (alg.bracket(j), alg.bracket(n - j + 1)) else {
                continue;
            };
            let inner = mj.eval_basis(&a[r..r + j]);
            if inner.is_zero() {
                continue;
            }
            let (jj, rr, nn) = (j as i64, r as i64, n as i64);
            let exponent = jj + rr + jj * rr + nn * jj + jj * prefix_degree;
            let sign: i8 = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
            for (k, c) in inner.iter() {
                outer.clear();
                outer.extend_from_slice(&a[..r]);
                outer.push(k);
                outer.extend_from_slice(&a[r + j..]);
                if let Some((s, v)) = mo.lookup(&outer) {
                    out.add_scaled(v, &c.mul(&sign_scalar(sign * s)));
                }
            }
        }
    }
    out
}

/// A basis tuple on which a relation fails, with the nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<S> {
    pub tuple: Vec<usize>,
    pub residual: Vector<S>,
}

/// Outcome of checking the n-th relation over a whole basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport<S> {
    pub family: AlgebraKind,
    pub n: usize,
    /// Tuples on which the residual was evaluated.
    pub evaluated: usize,
    /// Tuples whose residual degree is unoccupied, hence zero without evaluation.
    pub vacuous: usize,
    pub violations: Vec<Violation<S>>,
}

impl<S: Ring> RelationReport<S> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Machine-readable summary with up to `max_witnesses` witnesses.
    pub fn to_json(&self, basis: &GradedBasis, max_witnesses: usize) -> ReportJson {
        let shown = self.violations.iter().take(max_witnesses);
        ReportJson {
            kind: self.family.name().to_string(),
            n: self.n,
            status: if self.holds() { "pass" } else { "fail" }.to_string(),
            witnesses: shown.clone().map(|v| v.tuple.iter().map(|&i| basis.label(i).to_string()).collect()).collect(),
            residuals: shown.map(|v| v.residual.display(basis).to_string()).collect(),
        }
    }
}

/// Stable JSON schema of a relation report.
#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    pub status: String,
    pub witnesses: Vec<Vec<String>>,
    pub residuals: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Skip tuples whose residual would land in an unoccupied degree.
    pub skip_vacuous: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { skip_vacuous: true }
    }
}

fn residual_degree(basis: &GradedBasis, t: &[usize]) -> i32 {
    t.len() as i32 - 3 + t.iter().map(|&i| basis.degree(i)).sum::<i32>()
}

/// Largest `n` whose relation can be non-vacuous on this basis.
///
/// The n-th residual has degree `n - 3 + sum of input degrees`; once that
/// exceeds every occupied degree for all tuples, the relation holds
/// trivially. `None` when negative degrees make the bound unavailable.
pub fn sufficient_max_n(basis: &GradedBasis) -> Option<usize> {
    let lo = *basis.degrees().iter().min()?;
    let hi = *basis.degrees().iter().max()?;
    if lo < 0 {
        return None;
    }
    Some(((hi + 3) / (1 + lo)).max(1) as usize)
}

/// Canonical n-tuples: nondecreasing, with repeats only of odd-degree elements.
pub fn canonical_tuples(basis: &GradedBasis, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(basis: &GradedBasis, n: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for x in start..basis.len() {
            if current.last() == Some(&x) && basis.degree(x).rem_euclid(2) == 0 {
                continue;
            }
            current.push(x);
            rec(basis, n, x, current, out);
            current.pop();
        }
    }
    rec(basis, n, 0, &mut current, &mut out);
    debug_assert!(out.iter().all(|t| canonical_tuple(t, basis.degrees()).1 != 0));
    out
}

/// All ordered n-tuples in lexicographic order.
pub fn ordered_tuples(basis: &GradedBasis, n: usize) -> Vec<Vec<usize>> {
    let dim = basis.len();
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    if dim == 0 {
        return if n == 0 { vec![vec![]] } else { out };
    }
    loop {
        out.push(current.clone());
        let mut p = n;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            current[p] += 1;
            if current[p] < dim {
                break;
            }
            current[p] = 0;
        }
    }
}

fn run_check<S: Ring>(
    alg: &HomotopyAlgebra<S>,
    family: AlgebraKind,
    n: usize,
    tuples: Vec<Vec<usize>>,
    options: &CheckOptions,
    eval: impl Fn(&[usize]) -> Vector<S> + Sync,
) -> RelationReport<S> {
    let basis = alg.basis();
    let (live, dead): (Vec<_>, Vec<_>) = if options.skip_vacuous {
        tuples.into_iter().partition(|t| basis.has_degree(residual_degree(basis, t)))
    } else {
        (tuples, Vec::new())
    };
    // par_iter + collect keeps the lexicographic tuple order.
    let residuals: Vec<Option<Violation<S>>> = live
        .par_iter()
        .map(|t| {
            let r = eval(t);
            (!r.is_zero()).then(|| Violation { tuple: t.clone(), residual: r })
        })
        .collect();
    RelationReport {
        family,
        n,
        evaluated: live.len(),
        vacuous: dead.len(),
        violations: residuals.into_iter().flatten().collect(),
    }
}

/// Checks the L-infinity relations `1..=n_max` on every canonical basis tuple.
pub fn check_linfty<S: Ring>(alg: &HomotopyAlgebra<S>, n_max: usize) -> Vec<RelationReport<S>> {
    check_linfty_with(alg, n_max, &CheckOptions::default())
}

pub fn check_linfty_with<S: Ring>(
    alg: &HomotopyAlgebra<S>,
    n_max: usize,
    options: &CheckOptions,
) -> Vec<RelationReport<S>> {
    (1..=n_max)
        .map(|n| {
            let table = UnshuffleTable::new(n);
            let tuples = canonical_tuples(alg.basis(), n);
            run_check(alg, AlgebraKind::Linfty, n, tuples, options, |t| linfty_residual_with(alg, &table, t))
        })
        .collect()
}

/// Checks the A-infinity relations `1..=n_max` on every ordered basis tuple.
pub fn check_ainfty<S: Ring>(alg: &HomotopyAlgebra<S>, n_max: usize) -> Vec<RelationReport<S>> {
    check_ainfty_with(alg, n_max, &CheckOptions::default())
}

pub fn check_ainfty_with<S: Ring>(
    alg: &HomotopyAlgebra<S>,
    n_max: usize,
    options: &CheckOptions,
) -> Vec<RelationReport<S>> {
    (1..=n_max)
        .map(|n| {
            if !options.skip_vacuous {
                let tuples = ordered_tuples(alg.basis(), n);
                return run_check(alg, AlgebraKind::Ainfty, n, tuples, options, |t| ainfty_residual(alg, t));
            }
            let tuples = ordered_tuples_in_live_degrees(alg.basis(), n);
            let mut report = run_check(alg, AlgebraKind::Ainfty, n, tuples, options, |t| ainfty_residual(alg, t));
            report.vacuous = alg.dim().pow(n as u32) - report.evaluated;
            report
        })
        .collect()
}

/// Ordered tuples whose residual degree is occupied, generated without
/// materializing the (possibly huge) full tuple set.
fn ordered_tuples_in_live_degrees(basis: &GradedBasis, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(basis: &GradedBasis, n: usize, sum: i32, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            if basis.has_degree(n as i32 - 3 + sum) {
                out.push(current.clone());
            }
            return;
        }
        for x in 0..basis.len() {
            current.push(x);
            rec(basis, n, sum + basis.degree(x), current, out);
            current.pop();
        }
    }
    // Degree sums are bounded by the extreme degrees, so whole subtrees can be cut.
    let min_d = basis.degrees().iter().copied().min().unwrap_or(0);
    let max_d = basis.degrees().iter().copied().max().unwrap_or(0);
    let reachable = (n as i32 * min_d..=n as i32 * max_d).any(|s| basis.has_degree(n as i32 - 3 + s));
    if reachable {
        rec(basis, n, 0, &mut current, &mut out);
    }
    out
}

/// True when every report is empty.
pub fn all_hold<S: Ring>(reports: &[RelationReport<S>]) -> bool {
    reports.iter().all(RelationReport::holds)
}
