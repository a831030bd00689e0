//! A line-oriented text format for algebras, maps, sections and weights.
//!
//! ```text
//! # comments run to the end of the line
//! name octonions
//! ring Q                      # Q | Q(i) | Laurent
//! type linfty                 # linfty | ainfty
//! basis e1:0 e2:0 e3:0
//! l2 (e1 e2) -> {e3: 2}
//! domain I*:1 k:1             # the space U of a map D: U -> V
//! map (I*) -> {I: 1}
//! f (x1 x2 x3) -> {I*: 3, k: 1}
//! act (x1 I*) -> {k: 1}
//! weight e4 as x1 = 1/2*i*mu
//! ```
//!
//! Parsing normalizes: bracket inputs are put in basis order (with the graded
//! sign absorbed into the output), outputs are sorted by basis order and zero
//! terms dropped. Serialization writes entries in (arity, tuple) order, so
//! `parse(serialize(doc)) == doc`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::brackets::{canonical_tuple, AlgebraKind, HomotopyAlgebra, StarProduct};
use crate::constructions::{ActionOverrides, SectionOverrides};
use crate::error::AlgebraError;
use crate::graded::{GradedBasis, LinearMap, Vector};
use crate::scalar::{Laurent, LiteralError, Ring, RingTag};
use crate::zoo::{ScalingWeights, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}: unknown label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("line {line}: `{literal}` is not an element of {ring}")]
    RingMismatch { line: usize, literal: String, ring: RingTag },
    #[error("line {line}: {entry} must land in degree {expected}, found {found}")]
    DegreeRuleViolation { line: usize, entry: String, expected: i32, found: i32 },
    #[error("line {line}: {entry} vanishes by graded symmetry but was given a nonzero value")]
    ForcedZeroViolated { line: usize, entry: String },
    #[error("{0}")]
    Missing(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One `key (inputs) -> {label: value, ..}` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub inputs: Vec<String>,
    pub output: Vec<(String, Laurent)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEntry {
    pub old: String,
    pub new: String,
    pub value: Laurent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: Option<String>,
    pub ring: RingTag,
    pub kind: AlgebraKind,
    pub basis: Vec<(String, i32)>,
    /// Bracket (or product) entries; the arity is the number of inputs.
    pub entries: Vec<Entry>,
    pub domain: Vec<(String, i32)>,
    pub map: Vec<Entry>,
    pub sections: Vec<Entry>,
    pub actions: Vec<Entry>,
    pub weights: Vec<WeightEntry>,
}

impl Default for AlgebraDocument {
    fn default() -> Self {
        AlgebraDocument {
            name: None,
            ring: RingTag::Rational,
            kind: AlgebraKind::Linfty,
            basis: Vec::new(),
            entries: Vec::new(),
            domain: Vec::new(),
            map: Vec::new(),
            sections: Vec::new(),
            actions: Vec::new(),
            weights: Vec::new(),
        }
    }
}

/// Bases taken from elsewhere when a document has no `basis` / `domain` line,
/// e.g. a map file read alongside the algebra it maps into.
#[derive(Debug, Clone, Default)]
pub struct Context {
    pub basis: Option<GradedBasis>,
    pub domain: Option<GradedBasis>,
}

const SPECIAL: &[char] = &['(', ')', '{', '}', ':', ',', '=', '#'];

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        let text = match text.find('#') {
            Some(i) => &text[..i],
            None => text,
        };
        Cursor { text, pos: 0, line }
    }

    fn col(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn error(&self, message: impl Into<String>) -> DocumentError {
        DocumentError::Syntax { line: self.line, col: self.col(), message: message.into() }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), DocumentError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), DocumentError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    fn word(&mut self) -> Result<String, DocumentError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| c.is_whitespace() || SPECIAL.contains(&c)).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a label"));
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    fn rest(&mut self) -> &'a str {
        self.skip_ws();
        let r = self.text[self.pos..].trim_end();
        self.pos = self.text.len();
        r
    }

    fn finish(&mut self) -> Result<(), DocumentError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing text"))
        }
    }

    /// `label:degree` pairs to the end of the line.
    fn graded_labels(&mut self) -> Result<Vec<(String, i32)>, DocumentError> {
        let mut out = Vec::new();
        while !self.at_end() {
            let label = self.word()?;
            self.expect(':')?;
            self.skip_ws();
            let start = self.pos;
            let rest = &self.text[self.pos..];
            let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
            self.pos += len;
            let degree = rest[..len].parse::<i32>().map_err(|_| DocumentError::Syntax {
                line: self.line,
                col: self.text[..start].chars().count() + 1,
                message: format!("bad degree `{}`", &rest[..len]),
            })?;
            out.push((label, degree));
        }
        Ok(out)
    }

    /// `(a b c)`.
    fn tuple(&mut self) -> Result<Vec<String>, DocumentError> {
        self.expect('(')?;
        let mut out = Vec::new();
        while self.peek() != Some(')') {
            if self.peek().is_none() {
                return Err(self.error("unterminated tuple"));
            }
            out.push(self.word()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn literal(&mut self, stop: &[char]) -> Result<Laurent, DocumentError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[self.pos..];
        let len = rest.find(|c| stop.contains(&c)).unwrap_or(rest.len());
        self.pos += len;
        let text = rest[..len].trim();
        Laurent::parse(text).map_err(|e| {
            let offset = match e {
                LiteralError::UnexpectedChar { offset, .. }
                | LiteralError::UnexpectedToken { offset }
                | LiteralError::DivisionByZero { offset }
                | LiteralError::BadExponent { offset } => offset,
                LiteralError::UnexpectedEnd => text.len(),
            };
            let lead = rest.len() - rest.trim_start().len();
            DocumentError::Syntax {
                line: self.line,
                col: self.text[..start].chars().count() + lead + offset + 1,
                message: e.to_string(),
            }
        })
    }

    /// `{label: literal, ..}`.
    fn value_map(&mut self) -> Result<Vec<(String, Laurent)>, DocumentError> {
        self.expect('{')?;
        let mut out = Vec::new();
        if self.peek() == Some('}') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            let label = self.word()?;
            self.expect(':')?;
            out.push((label, self.literal(&[',', '}'])?));
            match self.peek() {
                Some(',') => self.pos += 1,
                Some('}') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.error("expected `,` or `}`")),
            }
        }
    }

    fn entry(&mut self) -> Result<Entry, DocumentError> {
        let inputs = self.tuple()?;
        self.expect_str("->")?;
        let output = self.value_map()?;
        self.finish()?;
        Ok(Entry { inputs, output })
    }
}

fn build_basis(labels: &[(String, i32)], line: usize) -> Result<GradedBasis, DocumentError> {
    GradedBasis::new(labels.iter().cloned()).map_err(|e| match e {
        AlgebraError::DuplicateLabel(l) => {
            DocumentError::Syntax { line, col: 1, message: format!("duplicate label `{l}`") }
        }
        other => other.into(),
    })
}

fn representable(ring: RingTag, value: &Laurent) -> bool {
    match ring {
        RingTag::Rational => value.as_constant().is_some_and(|c| Ring::is_zero(&c.im)),
        RingTag::Gaussian => value.as_constant().is_some(),
        RingTag::Laurent => true,
    }
}

struct Parser {
    ring: RingTag,
}

impl Parser {
    /// Resolves, merges and sorts an output map against `basis`.
    fn output(
        &self,
        line: usize,
        basis: Option<&GradedBasis>,
        output: Vec<(String, Laurent)>,
    ) -> Result<Vec<(String, Laurent)>, DocumentError> {
        let mut merged: BTreeMap<(usize, String), Laurent> = BTreeMap::new();
        for (label, value) in output {
            if !representable(self.ring, &value) {
                return Err(DocumentError::RingMismatch { line, literal: value.to_string(), ring: self.ring });
            }
            let key = match basis {
                Some(b) => {
                    let idx =
                        b.index_of(&label).map_err(|_| DocumentError::UnknownLabel { line, label: label.clone() })?;
                    (idx, label)
                }
                None => (0, label),
            };
            let slot = merged.entry(key).or_insert_with(Laurent::zero);
            *slot = slot.add(&value);
        }
        Ok(merged.into_iter().filter(|(_, v)| !v.is_zero()).map(|((_, l), v)| (l, v)).collect())
    }

    fn indices(&self, line: usize, basis: &GradedBasis, labels: &[String]) -> Result<Vec<usize>, DocumentError> {
        labels
            .iter()
            .map(|l| basis.index_of(l).map_err(|_| DocumentError::UnknownLabel { line, label: l.clone() }))
            .collect()
    }
}

fn format_entry(out: &mut String, key: &str, e: &Entry, ring: RingTag) {
    let values: Vec<String> = e.output.iter().map(|(l, v)| format!("{l}: {}", ring.format(v))).collect();
    let _ = writeln!(out, "{key} ({}) -> {{{}}}", e.inputs.join(" "), values.join(", "));
}

fn graded_line(key: &str, labels: &[(String, i32)]) -> String {
    let items: Vec<String> = labels.iter().map(|(l, d)| format!("{l}:{d}")).collect();
    format!("{key} {}\n", items.join(" "))
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Self::parse_with(text, &Context::default())
    }

    pub fn parse_with(text: &str, context: &Context) -> Result<Self, DocumentError> {
        let mut doc = AlgebraDocument::default();
        let mut body = Vec::new();
        let mut basis_line = 0;
        let mut domain_line = 0;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let mut cur = Cursor::new(raw, line);
            if cur.at_end() {
                continue;
            }
            let key = cur.word()?;
            match key.as_str() {
                "name" => doc.name = Some(cur.rest().to_string()),
                "ring" => {
                    let tag = cur.rest();
                    doc.ring = RingTag::parse(tag).ok_or_else(|| DocumentError::Syntax {
                        line,
                        col: raw.find(tag).unwrap_or(0) + 1,
                        message: format!("unknown ring `{tag}`"),
                    })?;
                }
                "type" => {
                    let word = cur.word()?;
                    doc.kind = AlgebraKind::parse(&word).ok_or_else(|| cur.error(format!("unknown type `{word}`")))?;
                    cur.finish()?;
                }
                "basis" => {
                    doc.basis.extend(cur.graded_labels()?);
                    basis_line = line;
                }
                "domain" => {
                    doc.domain.extend(cur.graded_labels()?);
                    domain_line = line;
                }
                _ => body.push((line, key, cur.pos, raw)),
            }
        }

        let own_basis = (!doc.basis.is_empty()).then(|| build_basis(&doc.basis, basis_line)).transpose()?;
        let own_domain = (!doc.domain.is_empty()).then(|| build_basis(&doc.domain, domain_line)).transpose()?;
        let basis = own_basis.or_else(|| context.basis.clone());
        let domain = own_domain.or_else(|| context.domain.clone());
        let p = Parser { ring: doc.ring };

        let mut entries: BTreeMap<(usize, Vec<usize>), Entry> = BTreeMap::new();
        let mut sections: BTreeMap<Vec<usize>, Entry> = BTreeMap::new();
        let mut maps: BTreeMap<usize, Entry> = BTreeMap::new();
        let mut actions: BTreeMap<(usize, usize), Entry> = BTreeMap::new();
        let mut unordered: Vec<(&str, Entry)> = Vec::new();
        for (line, key, pos, raw) in body {
            let mut cur = Cursor::new(raw, line);
            cur.pos = pos;
            let arity =
                |prefix: char| key.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok()).filter(|&k| k >= 1);
            if let Some(k) = arity('l').or_else(|| arity('m')) {
                let wanted = if key.starts_with('l') { AlgebraKind::Linfty } else { AlgebraKind::Ainfty };
                if wanted != doc.kind {
                    return Err(DocumentError::Syntax {
                        line,
                        col: 1,
                        message: format!("`{key}` entries need `type {}`", wanted.name()),
                    });
                }
                let entry = cur.entry()?;
                let basis =
                    basis.as_ref().ok_or_else(|| DocumentError::Missing(format!("line {line}: no basis declared")))?;
                if entry.inputs.len() != k {
                    return Err(DocumentError::Syntax {
                        line,
                        col: 1,
                        message: format!("`{key}` takes {k} inputs, found {}", entry.inputs.len()),
                    });
                }
                let tuple = p.indices(line, basis, &entry.inputs)?;
                let output = p.output(line, Some(basis), entry.output)?;
                let describe = || format!("{key}({})", entry.inputs.join(", "));
                let expected = k as i32 - 2 + tuple.iter().map(|&i| basis.degree(i)).sum::<i32>();
                if let Some((label, _)) =
                    output.iter().find(|(l, _)| basis.degree(basis.index_of(l).unwrap()) != expected)
                {
                    let found = basis.degree(basis.index_of(label).unwrap());
                    return Err(DocumentError::DegreeRuleViolation { line, entry: describe(), expected, found });
                }
                let (canon, sign) = match doc.kind {
                    AlgebraKind::Linfty => canonical_tuple(&tuple, basis.degrees()),
                    AlgebraKind::Ainfty => (tuple.clone(), 1),
                };
                if sign == 0 {
                    if output.is_empty() {
                        continue;
                    }
                    return Err(DocumentError::ForcedZeroViolated { line, entry: describe() });
                }
                let output = if sign == 1 { output } else { output.into_iter().map(|(l, v)| (l, v.neg())).collect() };
                let inputs = canon.iter().map(|&i| basis.label(i).to_string()).collect();
                if entries.insert((k, canon), Entry { inputs, output }).is_some() {
                    return Err(DocumentError::Syntax {
                        line,
                        col: 1,
                        message: format!("duplicate entry {}", describe()),
                    });
                }
                continue;
            }
            match key.as_str() {
                "map" | "f" | "act" => {
                    let entry = cur.entry()?;
                    let need = match key.as_str() {
                        "map" => 1,
                        "f" => 3,
                        _ => 2,
                    };
                    if entry.inputs.len() != need {
                        return Err(DocumentError::Syntax {
                            line,
                            col: 1,
                            message: format!("`{key}` takes {need} inputs, found {}", entry.inputs.len()),
                        });
                    }
                    let (out_space, in_spaces) = match key.as_str() {
                        "map" => (basis.as_ref(), vec![domain.as_ref()]),
                        "f" => (domain.as_ref(), vec![basis.as_ref(); 3]),
                        _ => (domain.as_ref(), vec![basis.as_ref(), domain.as_ref()]),
                    };
                    let output = p.output(line, out_space, entry.output)?;
                    if in_spaces.iter().all(Option::is_some) {
                        let idx: Vec<usize> = entry
                            .inputs
                            .iter()
                            .zip(&in_spaces)
                            .map(|(l, s)| {
                                s.unwrap()
                                    .index_of(l)
                                    .map_err(|_| DocumentError::UnknownLabel { line, label: l.clone() })
                            })
                            .collect::<Result<_, _>>()?;
                        let dup = match key.as_str() {
                            "map" => maps.insert(idx[0], Entry { inputs: entry.inputs, output }).is_some(),
                            "f" => {
                                // f is totally antisymmetric: store on the sorted triple.
                                let basis = basis.as_ref().expect("checked above");
                                let (canon, sign) = canonical_tuple(&idx, basis.degrees());
                                if sign == 0 {
                                    if output.is_empty() {
                                        continue;
                                    }
                                    return Err(DocumentError::ForcedZeroViolated {
                                        line,
                                        entry: format!("f({})", entry.inputs.join(", ")),
                                    });
                                }
                                let output = if sign == 1 {
                                    output
                                } else {
                                    output.into_iter().map(|(l, v)| (l, v.neg())).collect()
                                };
                                let inputs = canon.iter().map(|&i| basis.label(i).to_string()).collect();
                                sections.insert(canon, Entry { inputs, output }).is_some()
                            }
                            _ => actions.insert((idx[0], idx[1]), Entry { inputs: entry.inputs, output }).is_some(),
                        };
                        if dup {
                            return Err(DocumentError::Syntax {
                                line,
                                col: 1,
                                message: format!("duplicate `{key}` entry"),
                            });
                        }
                    } else {
                        unordered.push((key_name(&key), Entry { inputs: entry.inputs, output }));
                    }
                }
                "weight" => {
                    let old = cur.word()?;
                    let r#as = cur.word()?;
                    if r#as != "as" {
                        return Err(cur.error("expected `as`"));
                    }
                    let new = cur.word()?;
                    cur.expect('=')?;
                    let value = cur.literal(&[])?;
                    if value.as_monomial().is_none() {
                        return Err(cur.error("a weight must be a single term c*mu^k"));
                    }
                    doc.weights.push(WeightEntry { old, new, value });
                }
                _ => {
                    return Err(DocumentError::Syntax { line, col: 1, message: format!("unknown keyword `{key}`") });
                }
            }
        }
        doc.entries = entries.into_values().collect();
        doc.map = maps.into_values().collect();
        doc.sections = sections.into_values().collect();
        doc.actions = actions.into_values().collect();
        for (key, e) in unordered {
            match key {
                "map" => doc.map.push(e),
                "f" => doc.sections.push(e),
                _ => doc.actions.push(e),
            }
        }
        Ok(doc)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "name {name}");
        }
        let _ = writeln!(out, "ring {}", self.ring.name());
        let _ = writeln!(out, "type {}", self.kind.name());
        if !self.basis.is_empty() {
            out.push_str(&graded_line("basis", &self.basis));
        }
        if !self.domain.is_empty() {
            out.push_str(&graded_line("domain", &self.domain));
        }
        let prefix = if self.kind == AlgebraKind::Linfty { "l" } else { "m" };
        for e in &self.entries {
            format_entry(&mut out, &format!("{prefix}{}", e.inputs.len()), e, self.ring);
        }
        for e in &self.map {
            format_entry(&mut out, "map", e, self.ring);
        }
        for e in &self.sections {
            format_entry(&mut out, "f", e, self.ring);
        }
        for e in &self.actions {
            format_entry(&mut out, "act", e, self.ring);
        }
        for w in &self.weights {
            let _ = writeln!(out, "weight {} as {} = {}", w.old, w.new, RingTag::Laurent.format(&w.value));
        }
        out
    }

    pub fn basis(&self) -> Result<GradedBasis, DocumentError> {
        Ok(GradedBasis::new(self.basis.iter().cloned())?)
    }

    pub fn domain(&self) -> Result<GradedBasis, DocumentError> {
        Ok(GradedBasis::new(self.domain.iter().cloned())?)
    }

    pub fn from_algebra<S: Ring>(alg: &HomotopyAlgebra<S>, ring: RingTag) -> Self {
        let basis = alg.basis();
        let entries = alg
            .brackets()
            .flat_map(|(_, b)| b.entries().map(|(t, v)| to_entry(basis, basis, t, v)).collect::<Vec<_>>())
            .collect();
        AlgebraDocument {
            name: Some(alg.name.clone()),
            ring,
            kind: alg.kind(),
            basis: basis.iter().map(|(_, l, d)| (l.to_string(), d)).collect(),
            entries,
            ..Default::default()
        }
    }

    pub fn to_algebra<S: Ring>(&self) -> Result<HomotopyAlgebra<S>, DocumentError> {
        let basis = self.basis()?;
        let mut alg = HomotopyAlgebra::new(self.name.clone().unwrap_or_default(), basis.clone(), self.kind);
        for e in &self.entries {
            let tuple = e.inputs.iter().map(|l| basis.index_of(l)).collect::<Result<Vec<_>, _>>()?;
            alg.set(&tuple, vector_from(&basis, &e.output)?)?;
        }
        Ok(alg)
    }

    pub fn from_star_product<S: Ring>(name: &str, p: &StarProduct<S>, ring: RingTag) -> Self {
        let basis = p.basis();
        let entries = p.entries().map(|((a, b), v)| to_entry(basis, basis, &[a, b], v)).collect();
        AlgebraDocument {
            name: Some(name.to_string()),
            ring,
            kind: AlgebraKind::Ainfty,
            basis: basis.iter().map(|(_, l, d)| (l.to_string(), d)).collect(),
            entries,
            ..Default::default()
        }
    }

    /// Reads the arity-2 entries as a product table; any other arity is an error.
    pub fn to_star_product<S: Ring>(&self) -> Result<StarProduct<S>, DocumentError> {
        let basis = self.basis()?;
        let mut p = StarProduct::new(basis.clone())?;
        let alg = self.to_algebra::<S>()?;
        if let Some((k, _)) = alg.brackets().find(|(k, _)| *k != 2) {
            return Err(
                AlgebraError::Unsupported(format!("a product table has only 2-ary entries, found arity {k}")).into()
            );
        }
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                p.set(a, b, alg.eval_basis(&[a, b]))?;
            }
        }
        Ok(p)
    }

    /// `D: U -> V` from the `domain` and `map` lines.
    pub fn to_linear_map<S: Ring>(&self, target: &GradedBasis) -> Result<LinearMap<S>, DocumentError> {
        if self.domain.is_empty() {
            return Err(DocumentError::Missing("the map document has no `domain` line".into()));
        }
        let domain = self.domain()?;
        let mut columns = vec![Vector::zero(); domain.len()];
        for e in &self.map {
            columns[domain.index_of(&e.inputs[0])?] = vector_from(target, &e.output)?;
        }
        Ok(LinearMap::new(domain, target.clone(), -1, columns)?)
    }

    pub fn to_section<S: Ring>(&self, v: &GradedBasis, u: &GradedBasis) -> Result<SectionOverrides<S>, DocumentError> {
        self.sections
            .iter()
            .map(|e| {
                let t = [v.index_of(&e.inputs[0])?, v.index_of(&e.inputs[1])?, v.index_of(&e.inputs[2])?];
                Ok((t, vector_from(u, &e.output)?))
            })
            .collect()
    }

    pub fn to_action<S: Ring>(&self, v: &GradedBasis, u: &GradedBasis) -> Result<ActionOverrides<S>, DocumentError> {
        self.actions
            .iter()
            .map(|e| Ok(((v.index_of(&e.inputs[0])?, u.index_of(&e.inputs[1])?), vector_from(u, &e.output)?)))
            .collect()
    }

    pub fn to_weights(&self) -> Result<ScalingWeights, DocumentError> {
        let mut w = ScalingWeights::new();
        w.name = self.name.clone();
        for e in &self.weights {
            let (prefactor, exponent) = e
                .value
                .as_monomial()
                .ok_or_else(|| AlgebraError::InvalidWeight(format!("{} is not a single term", e.value)))?;
            w.push(Weight { old: e.old.clone(), new: e.new.clone(), exponent, prefactor });
        }
        Ok(w)
    }

    pub fn from_weights(w: &ScalingWeights) -> Self {
        AlgebraDocument {
            name: w.name.clone(),
            ring: RingTag::Laurent,
            weights: w
                .iter()
                .map(|w| WeightEntry { old: w.old.clone(), new: w.new.clone(), value: w.factor() })
                .collect(),
            ..Default::default()
        }
    }

    /// Whether every coefficient lies in `Q` (resp. `Q(i)`); used to pick the narrowest ring.
    pub fn narrowest_ring(&self) -> RingTag {
        let values = self
            .entries
            .iter()
            .chain(&self.map)
            .chain(&self.sections)
            .chain(&self.actions)
            .flat_map(|e| e.output.iter().map(|(_, v)| v));
        let mut ring = RingTag::Rational;
        for v in values {
            if !representable(RingTag::Gaussian, v) {
                return RingTag::Laurent;
            }
            if !representable(RingTag::Rational, v) {
                ring = RingTag::Gaussian;
            }
        }
        ring
    }
}

fn key_name(key: &str) -> &'static str {
    match key {
        "map" => "map",
        "f" => "f",
        _ => "act",
    }
}

fn to_entry<S: Ring>(in_basis: &GradedBasis, out_basis: &GradedBasis, tuple: &[usize], v: &Vector<S>) -> Entry {
    Entry {
        inputs: tuple.iter().map(|&i| in_basis.label(i).to_string()).collect(),
        output: v.iter().map(|(i, c)| (out_basis.label(i).to_string(), c.to_laurent())).collect(),
    }
}

fn vector_from<S: Ring>(basis: &GradedBasis, output: &[(String, Laurent)]) -> Result<Vector<S>, DocumentError> {
    let mut v = Vector::zero();
    for (label, value) in output {
        let c = S::from_laurent(value).ok_or_else(|| DocumentError::RingMismatch {
            line: 0,
            literal: value.to_string(),
            ring: S::TAG,
        })?;
        v.add_term(basis.index_of(label)?, &c);
    }
    Ok(v)
}

pub fn parse_spec(text: &str) -> Result<AlgebraDocument, DocumentError> {
    AlgebraDocument::parse(text)
}

pub fn serialize(doc: &AlgebraDocument) -> String {
    doc.serialize()
}

/// Documents for `D`, `f` and the action used by a 3-term extension.
pub fn map_document<S: Ring>(d: &LinearMap<S>, ring: RingTag) -> AlgebraDocument {
    AlgebraDocument {
        ring,
        domain: d.source.iter().map(|(_, l, deg)| (l.to_string(), deg)).collect(),
        map: (0..d.source.len())
            .filter(|&j| !d.column(j).is_zero())
            .map(|j| to_entry(&d.source, &d.target, &[j], d.column(j)))
            .collect(),
        ..Default::default()
    }
}
