//! Writing an algebra to the text format, reading it back, and using it from the CLI.

use linfty::document::{parse_spec, serialize, AlgebraDocument};
use linfty::{Rational, RingTag};

fn main() {
    let text = "\
name tiny
ring Q
type linfty
basis x:0 y:0 z:0
# [x, y] = z and the rest vanish
l2 (y x) -> {z: -1}
";
    let doc = parse_spec(text).unwrap();
    let alg = doc.to_algebra::<Rational>().unwrap();
    println!("parsed {} with {} basis elements", alg.name, alg.dim());
    print!("{}", serialize(&AlgebraDocument::from_algebra(&alg, RingTag::Rational)));

    let bad = "basis x:0 y:0\nl2 (x x) -> {y: 1}\n";
    println!("rejected: {}", AlgebraDocument::parse(bad).unwrap_err());

    let dir = std::env::temp_dir().join("linfty-documents-example.txt");
    std::fs::write(&dir, doc.serialize()).unwrap();
    let mut out = Vec::new();
    let code = linfty::cli::run(["linfty", "check", dir.to_str().unwrap()], &mut out, &mut std::io::sink());
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit code {code}");
}
