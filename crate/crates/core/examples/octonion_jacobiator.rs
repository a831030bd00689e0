//! The imaginary octonions as a non-Lie algebra: brackets, Jacobiators, associators.

use linfty::brackets::associator;
use linfty::{jacobiator, Vector};

fn main() {
    let (basis, l2) = linfty::zoo::imaginary_octonions();
    let e = |i: usize| Vector::basis(i - 1);
    println!("[e1, e2] = {}", l2.eval(&[&e(1), &e(2)]).unwrap().display(&basis));
    println!("[e4, e5] = {}", l2.eval(&[&e(4), &e(5)]).unwrap().display(&basis));

    let mut nonzero = 0;
    for a in 1..=7 {
        for b in a + 1..=7 {
            for c in b + 1..=7 {
                let jac = jacobiator(&l2, &e(a), &e(b), &e(c)).unwrap();
                if !jac.is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    println!("{nonzero} of 35 canonical triples have a nonzero Jacobiator");
    println!("Jac(e1, e2, e4) = {}", jacobiator(&l2, &e(1), &e(2), &e(4)).unwrap().display(&basis));

    let star = linfty::zoo::octonion_star();
    let s = Vector::basis;
    println!("Ass(e1, e2, e4) = {}", associator(&star, &s(1), &s(2), &s(4)).display(star.basis()));
    println!("rank of the Jacobiator image: {}", linfty::zoo::jacobiator_image_rank(&basis, &l2));
}
