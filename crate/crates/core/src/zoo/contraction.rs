//! Rescaling a basis by powers of `mu` and keeping the `mu^0` part.

use crate::brackets::HomotopyAlgebra;
use crate::error::AlgebraError;
use crate::graded::{GradedBasis, Vector};
use crate::scalar::{Field, Gaussian, Laurent, Ring};

/// `new = prefactor * mu^exponent * old`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub old: String,
    pub new: String,
    pub exponent: i64,
    pub prefactor: Gaussian,
}

impl Weight {
    pub fn factor(&self) -> Laurent {
        Laurent::monomial(self.prefactor.clone(), self.exponent)
    }
}

/// An ordered list of weights. The output basis follows this order, and
/// labels without a weight keep their name and scale after the weighted ones.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScalingWeights {
    pub name: Option<String>,
    weights: Vec<Weight>,
}

impl ScalingWeights {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, old: &str, new: &str, prefactor: Gaussian, exponent: i64) -> Self {
        self.weights.push(Weight { old: old.into(), new: new.into(), exponent, prefactor });
        self
    }

    pub fn push(&mut self, weight: Weight) {
        self.weights.push(weight);
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// For every old basis index: its new index, and the factor relating new to old.
    fn resolve(&self, basis: &GradedBasis) -> Result<(GradedBasis, Vec<(usize, Laurent)>), AlgebraError> {
        let mut plan: Vec<Option<(usize, Laurent)>> = vec![None; basis.len()];
        let mut out = GradedBasis::new(std::iter::empty::<(String, i32)>())?;
        for w in &self.weights {
            let old = basis.index_of(&w.old)?;
            if w.prefactor.is_zero() {
                return Err(AlgebraError::InvalidWeight(format!("zero prefactor for {}", w.old)));
            }
            if plan[old].is_some() {
                return Err(AlgebraError::InvalidWeight(format!("{} is weighted twice", w.old)));
            }
            let new = out.push(w.new.clone(), basis.degree(old))?;
            plan[old] = Some((new, w.factor()));
        }
        for (i, label, degree) in basis.iter() {
            if plan[i].is_none() {
                plan[i] = Some((out.push(label.to_string(), degree)?, Laurent::one()));
            }
        }
        Ok((out, plan.into_iter().map(|p| p.expect("filled above")).collect()))
    }
}

/// Rescales every basis element and takes the `mu -> 0` limit of each structure constant.
pub fn contract(
    alg: &HomotopyAlgebra<Laurent>,
    weights: &ScalingWeights,
) -> Result<HomotopyAlgebra<Gaussian>, AlgebraError> {
    let (basis, plan) = weights.resolve(alg.basis())?;
    let inverse: Vec<Laurent> = plan
        .iter()
        .map(|(_, w)| {
            let (c, k) = w.as_monomial().expect("weights are monomials");
            Laurent::monomial(c.inv().expect("nonzero prefactor"), -k)
        })
        .collect();
    let name = weights.name.clone().unwrap_or_else(|| format!("{}-contracted", alg.name));
    let mut out = HomotopyAlgebra::new(name, basis, alg.kind());
    for (_, bracket) in alg.brackets() {
        for (tuple, value) in bracket.entries() {
            let input = tuple.iter().fold(Laurent::one(), |acc, &i| acc.mul(&plan[i].1));
            let mut limit = Vector::zero();
            for (d, c) in value.iter() {
                let scaled = input.mul(c).mul(&inverse[d]);
                if scaled.min_exponent().is_some_and(|k| k < 0) {
                    return Err(AlgebraError::DivergentContraction(format!(
                        "{} has a component along {} of order mu^{}",
                        alg.describe_tuple(tuple),
                        alg.basis().label(d),
                        scaled.min_exponent().unwrap_or(0)
                    )));
                }
                limit.add_term(plan[d].0, &scaled.constant_term());
            }
            let new_tuple: Vec<usize> = tuple.iter().map(|&i| plan[i].0).collect();
            out.set(&new_tuple, limit)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn identity_weights_change_nothing() {
        let oct = zoo::octonions().map_coeffs(|c| c.to_laurent());
        let out = contract(&oct, &ScalingWeights::new()).unwrap();
        assert_eq!(
            out.map_coeffs(|c| c.to_laurent()).brackets().collect::<Vec<_>>(),
            oct.brackets().collect::<Vec<_>>()
        );
        assert_eq!(out.basis(), oct.basis());
    }

    #[test]
    fn wrong_direction_diverges() {
        let oct = zoo::octonions().map_coeffs(|c| c.to_laurent());
        let w = ScalingWeights::new().with("e3", "p3", Gaussian::one(), 2);
        assert!(matches!(contract(&oct, &w), Err(AlgebraError::DivergentContraction(_))));
    }

    #[test]
    fn bad_weights() {
        let oct = zoo::octonions().map_coeffs(|c| c.to_laurent());
        let w = ScalingWeights::new().with("e9", "x", Gaussian::one(), 0);
        assert_eq!(contract(&oct, &w).unwrap_err(), AlgebraError::UnknownLabel("e9".into()));
        let w = ScalingWeights::new().with("e1", "x", Gaussian::zero(), 0);
        assert!(matches!(contract(&oct, &w), Err(AlgebraError::InvalidWeight(_))));
    }

    #[test]
    fn octonions_contract_to_rflux() {
        let oct = zoo::octonions().map_coeffs(|c| c.to_laurent());
        let out = contract(&oct, &zoo::rflux_weights()).unwrap();
        assert_eq!(out, zoo::rflux());
    }
}
