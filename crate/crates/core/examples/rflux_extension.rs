//! Extending the R-flux algebra along D: span{I*, k} -> V to a 3-term algebra with l4.

use linfty::check_linfty;
use linfty::checker::all_hold;
use linfty::zoo;

fn main() {
    let rflux = zoo::rflux();
    println!("R-flux has {} basis elements", rflux.dim());

    let two_term = zoo::rflux_linfty();
    println!("2-term extension: {} dims, holds to n = 6: {}", two_term.dim(), all_hold(&check_linfty(&two_term, 6)));

    let broken = zoo::rflux_no_l3();
    for r in check_linfty(&broken, 3).iter().filter(|r| !r.holds()) {
        let w = &r.violations[0];
        println!(
            "without l3, n={} fails on {} with {}",
            r.n,
            broken.describe_tuple(&w.tuple),
            w.residual.display(broken.basis())
        );
    }

    let data = zoo::rflux_theorem2_data();
    println!("kernel of D: {} direction(s)", data.kernel().len());
    let alg = data.to_algebra().unwrap();
    let basis = alg.basis();
    println!("3-term algebra: {}", basis.iter().map(|(_, l, d)| format!("{l}:{d}")).collect::<Vec<_>>().join(" "));
    for (t, v) in alg.bracket(4).unwrap().entries() {
        println!("{} = {}", alg.describe_tuple(t), v.display(basis));
    }
    let reports = check_linfty(&alg, 7);
    for r in &reports {
        println!("n={}: holds {} ({} evaluated)", r.n, r.holds(), r.evaluated);
    }
    assert!(all_hold(&reports));
}
