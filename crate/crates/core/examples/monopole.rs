//! The monopole algebra: the R-flux bracket with positions and momenta exchanged.

use linfty::zoo;

fn main() {
    let alg = zoo::monopole();
    let basis = alg.basis();
    for (t, v) in alg.bracket(2).unwrap().entries() {
        println!("[{}, {}] = {}", basis.label(t[0]), basis.label(t[1]), v.display(basis));
    }
    let p = |i| linfty::Vector::basis(basis.index_of(&format!("p{i}")).unwrap());
    println!("Jac(p1, p2, p3) = {}", alg.jacobiator(&p(1), &p(2), &p(3)).unwrap().display(basis));
}
