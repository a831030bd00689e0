//! A-infinity doubling of non-associative products: octonions and 2x2 matrices.

use linfty::checker::all_hold;
use linfty::constructions::ainfty_double;
use linfty::{check_ainfty, Vector};

fn main() {
    let star = linfty::zoo::octonion_star();
    let alg = ainfty_double(&star);
    let basis = alg.basis();
    let (e1, e2, e4) = (Vector::basis(1), Vector::basis(2), Vector::basis(4));
    println!("m3(e1, e2, e4) = {}", alg.eval(&[&e1, &e2, &e4]).unwrap().display(basis));
    for r in check_ainfty(&alg, 5) {
        println!("n={}: {} evaluated, holds {}", r.n, r.evaluated, r.holds());
    }

    // Associative input: m3 vanishes and the double is a dg algebra.
    let matrices = ainfty_double(&linfty::zoo::matrix_algebra(2));
    println!(
        "doubled 2x2 matrices: {} dims, m3 present: {}, holds to n = 4: {}",
        matrices.dim(),
        matrices.bracket(3).is_some_and(|m| !m.is_zero()),
        all_hold(&check_ainfty(&matrices, 4))
    );
}
