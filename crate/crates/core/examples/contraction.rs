//! Contracting the octonions to the R-flux algebra by rescaling with powers of mu.

use linfty::zoo::{contract, octonions, rflux_weights};
use linfty::{Rational, Ring};

fn main() {
    let weights = rflux_weights();
    for w in weights.iter() {
        println!("{} -> {} with factor {}", w.old, w.new, w.factor());
    }
    let family = octonions().map_coeffs(|c: &Rational| c.to_laurent());
    let rflux = contract(&family, &weights).unwrap();
    let basis = rflux.basis();
    for (t, v) in rflux.bracket(2).unwrap().entries() {
        println!("[{}, {}] = {}", basis.label(t[0]), basis.label(t[1]), v.display(basis));
    }
    let x = |i| linfty::Vector::basis(i);
    let jac = rflux.jacobiator(&x(0), &x(1), &x(2)).unwrap();
    println!("Jac(x1, x2, x3) = {}", jac.display(basis));
}
