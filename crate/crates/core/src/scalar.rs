//! Exact scalar rings.
//!
//! Three rings are provided, each embedded in the next:
//!
//! * [`Rational`]: arbitrary precision fractions (`Q`).
//! * [`Gaussian`]: Gaussian rationals `a + b i` (`Q(i)`).
//! * [`Laurent`]: Laurent polynomials in `mu` with Gaussian rational
//!   coefficients. `mu` plays the role of the square root of a scaling
//!   parameter, so half-integer powers of the parameter stay integral.
//!
//! All values are kept normalized, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Which ring a document or algebra is written over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    Rational,
    Gaussian,
    Laurent,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Rational => "Q",
            RingTag::Gaussian => "Q(i)",
            RingTag::Laurent => "Laurent",
        }
    }

    pub fn parse(s: &str) -> Option<RingTag> {
        match s {
            "Q" => Some(RingTag::Rational),
            "Q(i)" => Some(RingTag::Gaussian),
            "Laurent" | "Q(i)[mu]" => Some(RingTag::Laurent),
            _ => None,
        }
    }

    /// Renders a literal the way a document over this ring writes it.
    pub fn format(self, value: &Laurent) -> String {
        match self {
            RingTag::Laurent => value.to_string(),
            _ => value.constant_term().to_string(),
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A commutative ring with exact, normalized arithmetic that contains `Q`.
pub trait Ring: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(&Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Embeds the value in the Laurent ring, the most general one here.
    fn to_laurent(&self) -> Laurent;

    /// Inverse of [`Ring::to_laurent`]; `None` when the value does not lie in this ring.
    fn from_laurent(value: &Laurent) -> Option<Self>;
}

/// A ring in which every nonzero element has an inverse.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rational {
    const TAG: RingTag = RingTag::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn to_laurent(&self) -> Laurent {
        Laurent::constant(Gaussian::real(self.clone()))
    }
    fn from_laurent(value: &Laurent) -> Option<Self> {
        let c = value.as_constant()?;
        Zero::is_zero(&c.im).then_some(c.re)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// A Gaussian rational `re + im * i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Gaussian { re, im: Zero::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: Zero::zero(), im: One::one() }
    }

    /// `re + im i` from integer fractions, a convenience for fixtures.
    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Gaussian { re: Rational::new(re.0.into(), re.1.into()), im: Rational::new(im.0.into(), im.1.into()) }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Ring for Gaussian {
    const TAG: RingTag = RingTag::Gaussian;

    fn zero() -> Self {
        Gaussian::real(Zero::zero())
    }
    fn one() -> Self {
        Gaussian::real(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, other: &Self) -> Self {
        Gaussian { re: &self.re + &other.re, im: &self.im + &other.im }
    }
    fn mul(&self, other: &Self) -> Self {
        Gaussian { re: &self.re * &other.re - &self.im * &other.im, im: &self.re * &other.im + &self.im * &other.re }
    }
    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn from_rational(q: &Rational) -> Self {
        Gaussian::real(q.clone())
    }
    fn to_laurent(&self) -> Laurent {
        Laurent::constant(self.clone())
    }
    fn from_laurent(value: &Laurent) -> Option<Self> {
        value.as_constant()
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm_sqr();
        let c = self.conj();
        Some(Gaussian { re: &c.re / &n, im: &c.im / &n })
    }
}

impl From<Rational> for Gaussian {
    fn from(q: Rational) -> Self {
        Gaussian::real(q)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if One::is_one(q) {
        f.write_str("i")
    } else if One::is_one(&(-q)) {
        f.write_str("-i")
    } else {
        write_rational(f, q)?;
        f.write_str("*i")
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write_rational(f, &self.re),
            (true, false) => write_imag(f, &self.im),
            (false, false) => {
                write_rational(f, &self.re)?;
                if self.im.is_positive() {
                    f.write_str("+")?;
                }
                write_imag(f, &self.im)
            }
        }
    }
}

/// A Laurent polynomial in `mu` over the Gaussian rationals.
///
/// Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Gaussian>,
}

impl Laurent {
    pub fn constant(c: Gaussian) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(coeff: Gaussian, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&coeff) {
            terms.insert(exponent, coeff);
        }
        Laurent { terms }
    }

    pub fn mu_pow(exponent: i64) -> Self {
        Self::monomial(Gaussian::one(), exponent)
    }

    pub fn coefficient(&self, exponent: i64) -> Gaussian {
        self.terms.get(&exponent).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn constant_term(&self) -> Gaussian {
        self.coefficient(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Gaussian)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// The value as a Gaussian rational if it has no `mu` dependence.
    pub fn as_constant(&self) -> Option<Gaussian> {
        match self.terms.len() {
            0 => Some(Gaussian::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(coefficient, exponent)` if the value is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(Gaussian, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(k, c)| (c.clone(), *k))
    }

    pub fn parse(text: &str) -> Result<Laurent, LiteralError> {
        LiteralParser::new(text)?.parse_all()
    }
}

impl Ring for Laurent {
    const TAG: RingTag = RingTag::Laurent;

    fn zero() -> Self {
        Laurent::default()
    }
    fn one() -> Self {
        Laurent::constant(Gaussian::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let sum = match terms.get(k) {
                Some(existing) => existing.add(c),
                None => c.clone(),
            };
            if Ring::is_zero(&sum) {
                terms.remove(k);
            } else {
                terms.insert(*k, sum);
            }
        }
        Laurent { terms }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out = out.add(&Laurent::monomial(x.mul(y), a + b));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Laurent::constant(Gaussian::real(q.clone()))
    }
    fn to_laurent(&self) -> Laurent {
        self.clone()
    }
    fn from_laurent(value: &Laurent) -> Option<Self> {
        Some(value.clone())
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match *k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*mu")?,
                k => write!(f, "({c})*mu^{k}")?,
            }
        }
        Ok(())
    }
}

/// Failure to read a scalar literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("unexpected character '{ch}' at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("unexpected end of literal")]
    UnexpectedEnd,
    #[error("unexpected token at offset {offset}")]
    UnexpectedToken { offset: usize },
    #[error("division by zero at offset {offset}")]
    DivisionByZero { offset: usize },
    #[error("exponent out of range at offset {offset}")]
    BadExponent { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    I,
    Mu,
}

/// Recursive descent over `sum := ['-'] product (('+'|'-') product)*`,
/// `product := power (['*'] power)*`, `power := atom ['^' ['-'] int]`,
/// `atom := int ['/' int] | 'i' | 'mu' | '(' sum ')'`.
struct LiteralParser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl LiteralParser {
    fn new(text: &str) -> Result<Self, LiteralError> {
        let mut toks = Vec::new();
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (off, ch) = chars[i];
            let tok = match ch {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
                    toks.push((Tok::Int(digits.parse().expect("ascii digits")), off));
                    continue;
                }
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                'i' => Tok::I,
                'm' if chars.get(i + 1).map(|c| c.1) == Some('u') => {
                    i += 2;
                    toks.push((Tok::Mu, off));
                    continue;
                }
                ch => return Err(LiteralError::UnexpectedChar { ch, offset: off }),
            };
            toks.push((tok, off));
            i += 1;
        }
        Ok(LiteralParser { toks, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, o)| *o).unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn parse_all(mut self) -> Result<Laurent, LiteralError> {
        if self.toks.is_empty() {
            return Err(LiteralError::UnexpectedEnd);
        }
        let v = self.sum()?;
        if self.pos < self.toks.len() {
            return Err(LiteralError::UnexpectedToken { offset: self.offset() });
        }
        Ok(v)
    }

    fn sum(&mut self) -> Result<Laurent, LiteralError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.product()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.product()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Laurent, LiteralError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.power()?);
                }
                Some(Tok::Int(_)) | Some(Tok::I) | Some(Tok::Mu) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Laurent, LiteralError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let offset = self.offset();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let exp = match self.bump() {
            Some(Tok::Int(n)) => n.to_i64().ok_or(LiteralError::BadExponent { offset })?,
            Some(_) => return Err(LiteralError::UnexpectedToken { offset }),
            None => return Err(LiteralError::UnexpectedEnd),
        };
        let exp = if negative { -exp } else { exp };
        // Only monomials may be raised to a power, which covers mu^k and i^k.
        let (c, k) = if base.is_zero() {
            return Ok(base);
        } else {
            base.as_monomial().ok_or(LiteralError::UnexpectedToken { offset })?
        };
        let c = if exp >= 0 {
            (0..exp).fold(Gaussian::one(), |acc, _| acc.mul(&c))
        } else {
            let inv = c.inv().expect("nonzero monomial");
            (0..-exp).fold(Gaussian::one(), |acc, _| acc.mul(&inv))
        };
        let k = k.checked_mul(exp).ok_or(LiteralError::BadExponent { offset })?;
        Ok(Laurent::monomial(c, k))
    }

    fn atom(&mut self) -> Result<Laurent, LiteralError> {
        let offset = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let off = self.offset();
                    match self.bump() {
                        Some(Tok::Int(d)) if d.is_zero() => Err(LiteralError::DivisionByZero { offset: off }),
                        Some(Tok::Int(d)) => Ok(Laurent::from_rational(&Rational::new(n, d))),
                        Some(_) => Err(LiteralError::UnexpectedToken { offset: off }),
                        None => Err(LiteralError::UnexpectedEnd),
                    }
                } else {
                    Ok(Laurent::from_rational(&Rational::from_integer(n)))
                }
            }
            Some(Tok::I) => Ok(Laurent::constant(Gaussian::i())),
            Some(Tok::Mu) => Ok(Laurent::mu_pow(1)),
            Some(Tok::LParen) => {
                let v = self.sum()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(v),
                    Some(_) => Err(LiteralError::UnexpectedToken { offset: self.toks[self.pos - 1].1 }),
                    None => Err(LiteralError::UnexpectedEnd),
                }
            }
            Some(_) => Err(LiteralError::UnexpectedToken { offset }),
            None => Err(LiteralError::UnexpectedEnd),
        }
    }
}

/// Parses a literal and checks it lies in the ring `S`.
pub fn parse_scalar<S: Ring>(text: &str) -> Result<Option<S>, LiteralError> {
    Ok(S::from_laurent(&Laurent::parse(text)?))
}
