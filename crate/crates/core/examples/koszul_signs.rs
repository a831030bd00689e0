//! Permutation parity, Koszul signs and unshuffles on a small mixed-degree tuple.

use linfty::brackets::canonical_form;
use linfty::checker::{koszul_sign, perm_parity, unshuffles};
use linfty::GradedBasis;

fn main() {
    let degrees = [0, 1, 1];
    println!("(2,1) unshuffles of three elements with degrees {degrees:?}:");
    for sigma in unshuffles(2, 3) {
        println!("  {sigma:?}  parity {:+}  koszul {:+}", perm_parity(&sigma), koszul_sign(&sigma, &degrees));
    }

    let basis = GradedBasis::new([("v", 0), ("w", 0), ("a", 1)]).unwrap();
    for labels in [["w", "v"], ["v", "v"], ["a", "a"], ["a", "v"]] {
        let (canon, sign) = canonical_form(&basis, &labels).unwrap();
        println!("l2({}) = {sign:+} * l2({})", labels.join(", "), canon.join(", "));
    }
}
