//! Doubling a non-Lie bracket to a 2-term L-infinity algebra and checking it.

use linfty::checker::all_hold;
use linfty::constructions::extend_theorem1;
use linfty::{check_linfty, GradedBasis, MultiBracket, Rational, Ring, Vector};

fn main() {
    // [x, y] = x, [y, z] = y + z, [x, z] = 0: not Lie.
    let basis = GradedBasis::uniform(["x", "y", "z"], 0).unwrap();
    let mut l2 = MultiBracket::<Rational>::graded(2, &basis);
    l2.set(&[0, 1], Vector::basis(0)).unwrap();
    l2.set(&[1, 2], Vector::from_terms([(1, Rational::one()), (2, Rational::one())])).unwrap();
    let jac = linfty::jacobiator(&l2, &Vector::basis(0), &Vector::basis(1), &Vector::basis(2)).unwrap();
    println!("Jac(x, y, z) = {}", jac.display(&basis));

    let alg = extend_theorem1(&basis, &l2).unwrap();
    println!("doubled basis: {}", alg.basis().labels().collect::<Vec<_>>().join(" "));
    println!("l3(x, y, z) = {}", alg.eval_basis(&[0, 1, 2]).display(alg.basis()));
    let reports = check_linfty(&alg, 6);
    for r in &reports {
        println!("n={}: {} evaluated, {} vacuous, holds: {}", r.n, r.evaluated, r.vacuous, r.holds());
    }
    assert!(all_hold(&reports));

    let oct = linfty::zoo::octonions_theorem1();
    println!("doubled octonions ({} dims) pass up to n = 8: {}", oct.dim(), all_hold(&check_linfty(&oct, 8)));
}
