//! The `linfty` command-line front end.
//!
//! Exit codes: 0 success or all relations hold, 1 a relation is violated,
//! 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::brackets::{AlgebraKind, MultiBracket};
use crate::checker::{check_ainfty, check_linfty, sufficient_max_n, RelationReport};
use crate::constructions::{ainfty_double, extend_theorem1, extend_theorem2};
use crate::document::{map_document, AlgebraDocument, Context, Entry};
use crate::graded::{GradedBasis, Vector};
use crate::scalar::{Field, Gaussian, Laurent, Rational, Ring, RingTag};
use crate::zoo;

/// Relations above this are checked when the degrees give no bound.
const FALLBACK_MAX_N: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "linfty", version, about = "Build and exactly verify L-infinity and A-infinity algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the homotopy relations up to a given n.
    Check {
        /// Algebra file or built-in name.
        source: String,
        /// Highest relation to check; defaults to the largest non-vacuous n.
        #[arg(long)]
        max_n: Option<usize>,
        /// Relation family; must agree with the document's `type`.
        #[arg(long = "type")]
        kind: Option<String>,
        /// Emit a JSON array of reports.
        #[arg(long)]
        json: bool,
        /// Witness tuples printed per failing relation.
        #[arg(long, default_value_t = 5)]
        witnesses: usize,
    },
    /// Print the Jacobiator of the 2-bracket on three basis elements.
    Jacobiator { source: String, a: String, b: String, c: String },
    /// Double a non-Lie bracket into a 2-term algebra.
    Extend1 {
        source: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extend along a map D: U -> V into a 3-term algebra.
    Extend2 {
        source: String,
        /// Document with `domain` and `map` lines.
        #[arg(long)]
        map: String,
        /// Document with `f` lines overriding the section.
        #[arg(long)]
        f: Option<String>,
        /// Document with `act` lines overriding the action.
        #[arg(long)]
        action: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rescale by powers of mu and keep the mu^0 part.
    Contract {
        source: String,
        /// Document with `weight` lines.
        #[arg(long)]
        weights: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Double a product table into a 2-term A-infinity algebra.
    AinftyDouble {
        source: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List or print the built-in examples.
    Builtin {
        #[arg(long)]
        list: bool,
        name: Option<String>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Violation,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Built-in documents by name; see [`zoo::BUILTIN_NAMES`].
pub fn builtin_document(name: &str) -> Option<AlgebraDocument> {
    use RingTag::{Gaussian as Qi, Rational as Q};
    let doc = match name {
        "octonions" => AlgebraDocument::from_algebra(&zoo::octonions(), Q),
        "octonions-star" => AlgebraDocument::from_star_product("octonions-star", &zoo::octonion_star(), Q),
        "octonions-theorem1" => AlgebraDocument::from_algebra(&zoo::octonions_theorem1(), Q),
        "matrix2" => AlgebraDocument::from_star_product("matrix2", &zoo::matrix_algebra(2), Q),
        "rflux" => AlgebraDocument::from_algebra(&zoo::rflux(), Qi),
        "rflux-weights" => AlgebraDocument::from_weights(&zoo::rflux_weights()),
        "rflux-linfty" => AlgebraDocument::from_algebra(&zoo::rflux_linfty(), Qi),
        "rflux-no-l3" => AlgebraDocument::from_algebra(&zoo::rflux_no_l3(), Qi),
        "monopole" => AlgebraDocument::from_algebra(&zoo::monopole(), Qi),
        "rflux-theorem2" => AlgebraDocument::from_algebra(&zoo::rflux_theorem2(), Qi),
        "rflux-theorem2-minimal" => AlgebraDocument::from_algebra(&zoo::rflux_theorem2_minimal(), Qi),
        "rflux-theorem2-map" => map_document(&zoo::rflux_theorem2_map(), Qi),
        "rflux-theorem2-section" => {
            let (v, _) = zoo::rflux_algebra();
            let d = zoo::rflux_theorem2_map();
            let mut doc = map_document(&d, Qi);
            doc.map.clear();
            let mut f = MultiBracket::<Gaussian>::graded(3, &v);
            for (t, value) in zoo::rflux_augmented_section() {
                f.set(&t, value).expect("distinct inputs");
            }
            doc.sections = f
                .entries()
                .map(|(t, value)| Entry {
                    inputs: t.iter().map(|&i| v.label(i).to_string()).collect(),
                    output: value.iter().map(|(i, c)| (d.source.label(i).to_string(), c.to_laurent())).collect(),
                })
                .collect();
            doc
        }
        _ => return None,
    };
    Some(doc)
}

fn load(source: &str, context: &Context) -> Result<AlgebraDocument, Failure> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{source}: {e}")))?;
        return AlgebraDocument::parse_with(&text, context).map_err(|e| Failure::Input(format!("{source}: {e}")));
    }
    builtin_document(source).ok_or_else(|| Failure::Input(format!("{source}: no such file or built-in")))
}

fn emit(text: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn doc_name(doc: &AlgebraDocument) -> &str {
    doc.name.as_deref().filter(|n| !n.is_empty()).unwrap_or("algebra")
}

/// Runs `body` with the scalar type matching the document's ring.
macro_rules! with_ring {
    ($ring:expr, $S:ident => $body:expr) => {
        match $ring {
            RingTag::Rational => {
                type $S = Rational;
                $body
            }
            RingTag::Gaussian => {
                type $S = Gaussian;
                $body
            }
            RingTag::Laurent => {
                type $S = Laurent;
                $body
            }
        }
    };
}

/// Same, for commands that solve linear systems and therefore need a field.
macro_rules! with_field {
    ($ring:expr, $S:ident => $body:expr) => {
        match $ring {
            RingTag::Rational => {
                type $S = Rational;
                $body
            }
            RingTag::Gaussian => {
                type $S = Gaussian;
                $body
            }
            RingTag::Laurent => Err(Failure::Input("this command needs scalars in Q or Q(i), not Laurent".into())),
        }
    };
}

fn print_reports<S: Ring>(
    reports: &[RelationReport<S>],
    basis: &GradedBasis,
    json: bool,
    witnesses: usize,
    out: &mut dyn Write,
) -> Result<bool, Failure> {
    if json {
        let items: Vec<_> = reports.iter().map(|r| r.to_json(basis, witnesses)).collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&items)?)?;
    } else {
        for r in reports {
            let status = if r.holds() { "pass" } else { "FAIL" };
            writeln!(
                out,
                "{} n={}: {status} ({} tuples evaluated, {} vacuous, {} violations)",
                r.family,
                r.n,
                r.evaluated,
                r.vacuous,
                r.violations.len()
            )?;
            for v in r.violations.iter().take(witnesses) {
                let labels: Vec<&str> = v.tuple.iter().map(|&i| basis.label(i)).collect();
                writeln!(out, "  witness ({}) residual {}", labels.join(", "), v.residual.display(basis))?;
            }
        }
    }
    Ok(reports.iter().all(RelationReport::holds))
}

fn check<S: Ring>(
    doc: &AlgebraDocument,
    max_n: Option<usize>,
    json: bool,
    witnesses: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let alg = doc.to_algebra::<S>()?;
    let n_max = max_n.or_else(|| sufficient_max_n(alg.basis())).unwrap_or(FALLBACK_MAX_N);
    let reports = match alg.kind() {
        AlgebraKind::Linfty => check_linfty(&alg, n_max),
        AlgebraKind::Ainfty => check_ainfty(&alg, n_max),
    };
    if print_reports(&reports, alg.basis(), json, witnesses, out)? {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn jacobiator_cmd<S: Ring>(doc: &AlgebraDocument, labels: [&str; 3], out: &mut dyn Write) -> Result<(), Failure> {
    let alg = doc.to_algebra::<S>()?;
    let basis = alg.basis();
    let mut args = Vec::new();
    for l in labels {
        let i = basis.index_of(l)?;
        if basis.degree(i) != 0 {
            return Err(Failure::Input(format!("{l} has degree {}, the Jacobiator needs degree 0", basis.degree(i))));
        }
        args.push(Vector::<S>::basis(i));
    }
    let jac = alg.jacobiator(&args[0], &args[1], &args[2])?;
    writeln!(out, "Jac({}, {}, {}) = {}", labels[0], labels[1], labels[2], jac.display(basis))?;
    Ok(())
}

/// The degree-0 basis and 2-bracket of a document that holds a plain bracket.
fn plain_bracket<S: Ring>(doc: &AlgebraDocument) -> Result<(GradedBasis, MultiBracket<S>), Failure> {
    let alg = doc.to_algebra::<S>()?;
    if alg.kind() != AlgebraKind::Linfty {
        return Err(Failure::Input("expected an `l2` bracket, found an A-infinity document".into()));
    }
    if let Some((k, _)) = alg.brackets().find(|(k, _)| *k != 2) {
        return Err(Failure::Input(format!("expected only an `l2` bracket, found `l{k}` entries")));
    }
    let bracket = alg.bracket(2).cloned().unwrap_or_else(|| MultiBracket::graded(2, alg.basis()));
    Ok((alg.basis().clone(), bracket))
}

fn extend1<S: Ring>(doc: &AlgebraDocument, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    let (basis, bracket) = plain_bracket::<S>(doc)?;
    let mut alg = extend_theorem1(&basis, &bracket)?;
    alg.name = format!("{}-theorem1", doc_name(doc));
    emit(&AlgebraDocument::from_algebra(&alg, doc.ring).serialize(), output, out)
}

fn extend2<S: Field>(
    doc: &AlgebraDocument,
    map: &str,
    f: Option<&str>,
    action: Option<&str>,
    output: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (basis, bracket) = plain_bracket::<S>(doc)?;
    let map_doc = load(map, &Context { basis: Some(basis.clone()), domain: None })?;
    let d = map_doc.to_linear_map::<S>(&basis)?;
    let ctx = Context { basis: Some(basis.clone()), domain: Some(d.source.clone()) };
    let f = f.map(|src| load(src, &ctx)?.to_section::<S>(&basis, &d.source).map_err(Failure::from)).transpose()?;
    let action =
        action.map(|src| load(src, &ctx)?.to_action::<S>(&basis, &d.source).map_err(Failure::from)).transpose()?;
    let mut alg = extend_theorem2(&basis, &bracket, &d, f.as_ref(), action.as_ref())?;
    alg.name = format!("{}-theorem2", doc_name(doc));
    emit(&AlgebraDocument::from_algebra(&alg, doc.ring).serialize(), output, out)
}

fn contract(
    doc: &AlgebraDocument,
    weights: &str,
    output: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let alg = doc.to_algebra::<Laurent>()?;
    let w = load(weights, &Context::default())?.to_weights()?;
    let contracted = zoo::contract(&alg, &w)?;
    emit(&AlgebraDocument::from_algebra(&contracted, RingTag::Gaussian).serialize(), output, out)
}

fn double<S: Ring>(doc: &AlgebraDocument, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    let p = doc.to_star_product::<S>()?;
    let mut alg = ainfty_double(&p);
    alg.name = format!("{}-ainfty", doc_name(doc));
    emit(&AlgebraDocument::from_algebra(&alg, doc.ring).serialize(), output, out)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let none = Context::default();
    match cli.command {
        Command::Check { source, max_n, kind, json, witnesses } => {
            let doc = load(&source, &none)?;
            if let Some(kind) = kind {
                let wanted =
                    AlgebraKind::parse(&kind).ok_or_else(|| Failure::Input(format!("unknown type `{kind}`")))?;
                if wanted != doc.kind {
                    return Err(Failure::Input(format!("{source} is declared `type {}`", doc.kind)));
                }
            }
            with_ring!(doc.ring, S => check::<S>(&doc, max_n, json, witnesses, out))
        }
        Command::Jacobiator { source, a, b, c } => {
            let doc = load(&source, &none)?;
            with_ring!(doc.ring, S => jacobiator_cmd::<S>(&doc, [&a, &b, &c], out))
        }
        Command::Extend1 { source, output } => {
            let doc = load(&source, &none)?;
            with_ring!(doc.ring, S => extend1::<S>(&doc, &output, out))
        }
        Command::Extend2 { source, map, f, action, output } => {
            let doc = load(&source, &none)?;
            with_field!(doc.ring, S => extend2::<S>(&doc, &map, f.as_deref(), action.as_deref(), &output, out))
        }
        Command::Contract { source, weights, output } => contract(&load(&source, &none)?, &weights, &output, out),
        Command::AinftyDouble { source, output } => {
            let doc = load(&source, &none)?;
            with_ring!(doc.ring, S => double::<S>(&doc, &output, out))
        }
        Command::Builtin { list, name } => match (list, name) {
            (_, Some(name)) => {
                let doc = builtin_document(&name).ok_or_else(|| Failure::Input(format!("no built-in named {name}")))?;
                emit(&doc.serialize(), &None, out)
            }
            (true, None) => {
                for name in zoo::BUILTIN_NAMES {
                    writeln!(out, "{name}")?;
                }
                Ok(())
            }
            (false, None) => Err(Failure::Input("pass --list or a built-in name".into())),
        },
    }
}

/// Parses `args` (including the program name) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(Failure::Violation) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
