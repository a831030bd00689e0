mod common;

use linfty::checker::{all_hold, check_ainfty, check_linfty, linfty_residual, ordered_tuples};
use linfty::constructions::{ainfty_double, extend_theorem1, TheoremTwoData};
use linfty::graded::Vector;
use linfty::scalar::{Gaussian, Ring};
use linfty::zoo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{projection_with_kernel, random_bracket, random_star, random_vector};

#[test]
fn doubling_any_bracket_gives_linfty() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut non_lie = 0;
    for round in 0..120 {
        let dim = 2 + round % 4;
        let (basis, bracket) = random_bracket(&mut rng, dim);
        non_lie += usize::from(zoo::jacobiator_image_rank(&basis, &bracket) > 0);
        let alg = extend_theorem1(&basis, &bracket).unwrap();
        assert!(all_hold(&check_linfty(&alg, 8)), "round {round}, dim {dim}");
    }
    // Dimension 2 is always Lie; most of the rest should not be.
    assert!(non_lie >= 60, "only {non_lie} non-Lie samples");
}

#[test]
fn ainfty_doubling_of_any_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for round in 0..100 {
        let dim = 1 + round % 4;
        let p = random_star(&mut rng, dim);
        let alg = ainfty_double(&p);
        assert!(all_hold(&check_ainfty(&alg, 4)), "round {round}, dim {dim}");
    }
}

// `U = V* + K` with `D` the projection, so every Jacobiator is in the image and
// closure holds. The kernel components of `f` and of the action are free.
#[test]
fn theorem2_with_random_kernel_choices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut with_l4 = 0;
    for round in 0..100 {
        let dim = 3 + round % 2;
        let extra = 1 + round % 2;
        let (basis, bracket) = random_bracket(&mut rng, dim);
        let d = projection_with_kernel(&basis, extra);
        let kernel_dirs = dim..dim + extra;

        let base = TheoremTwoData::new(&basis, &bracket, &d, None, None).unwrap();
        let mut sections = Vec::new();
        for (t, v) in base.f().entries() {
            let shift = random_vector(&mut rng, kernel_dirs.clone());
            sections.push(([t[0], t[1], t[2]], v.add(&shift)));
        }
        let mut actions = Vec::new();
        for v in 0..dim {
            for alpha in 0..dim + extra {
                if rng.gen_bool(0.5) {
                    let value = base.act(&Vector::basis(v), &Vector::basis(alpha));
                    actions.push(((v, alpha), value.add(&random_vector(&mut rng, kernel_dirs.clone()))));
                }
            }
        }
        let data = TheoremTwoData::new(&basis, &bracket, &d, Some(&sections), Some(&actions)).unwrap();
        let alg = data.to_algebra().unwrap();
        with_l4 += usize::from(alg.bracket(4).is_some_and(|b| !b.is_zero()));
        assert!(all_hold(&check_linfty(&alg, 6)), "round {round}");
    }
    assert!(with_l4 > 0);
}

#[test]
fn rflux_section_choices_agree_on_validity() {
    for data in [zoo::rflux_theorem2_pivot_data(), zoo::rflux_theorem2_minimal_data(), zoo::rflux_theorem2_data()] {
        assert!(all_hold(&check_linfty(&data.to_algebra().unwrap(), 7)));
    }
}

#[test]
fn residuals_transform_by_koszul_sign() {
    use linfty::checker::koszul_sign;
    use linfty::checker::perm_parity;
    let alg = zoo::rflux_theorem2();
    let degrees = alg.basis().degrees().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    // Drop l3 on degree 0 so the residuals are not all zero.
    let mut broken = alg.clone();
    let l3 = broken.remove_bracket(3).unwrap();
    for (t, v) in l3.entries() {
        if t.iter().any(|&i| degrees[i] > 0) {
            broken.set(t, v.clone()).unwrap();
        }
    }
    let mut nonzero = 0;
    for n in 2..=4 {
        // Half of the samples come from tuples with a nonzero residual.
        let all = ordered_tuples(broken.basis(), n);
        let hits: Vec<_> = all.iter().filter(|t| !linfty_residual(&broken, t).is_zero()).cloned().collect();
        for _ in 0..200 {
            let pool = if hits.is_empty() || rng.gen_bool(0.5) { &all } else { &hits };
            let t = &pool[rng.gen_range(0..pool.len())];
            let mut sigma: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                sigma.swap(i, rng.gen_range(0..=i));
            }
            let permuted: Vec<usize> = sigma.iter().map(|&s| t[s]).collect();
            let tdeg: Vec<i32> = t.iter().map(|&i| degrees[i]).collect();
            let sign = perm_parity(&sigma) * koszul_sign(&sigma, &tdeg);
            let expected = linfty_residual(&broken, t).scale(&Gaussian::from_int(sign as i64));
            nonzero += usize::from(!expected.is_zero());
            assert_eq!(linfty_residual(&broken, &permuted), expected, "{t:?} under {sigma:?}");
        }
    }
    assert!(nonzero > 0);
}
