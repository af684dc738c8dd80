//! Sparse exact polynomial arithmetic.
//!
//! Two coefficient domains live here:
//!
//! * [`MultiPoly`] — multivariate polynomials in `x1..xN` over the integers,
//!   stored as a map from exponent vectors to nonzero coefficients.
//! * [`QPoly`] — univariate polynomials in the formal parameter `q` over the
//!   integers, stored densely.
//!
//! Invariants, maintained by every constructor and operation:
//!
//! * every exponent key in a `MultiPoly` has length exactly `nvars`;
//! * no stored coefficient is zero;
//! * a `QPoly` coefficient vector has no trailing zeros, so the zero
//!   polynomial is the empty vector.
//!
//! The exponent map is ordered lexicographically (all keys have equal
//! length), so iterating it backwards walks terms in the canonical
//! lex-descending order used by the text and JSON forms. `nvars == 0` is
//! legal: such a polynomial is a plain integer keyed by the empty exponent
//! vector.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A sparse multivariate polynomial in `x1..xN` with `BigInt` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.insert_term(vec![0; nvars], c.into());
        p
    }

    /// The variable `x_k`, with `k` counted from 1 as in the printed names.
    ///
    /// Panics unless `1 <= k <= nvars`.
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= nvars, "variable index {k} out of range 1..={nvars}");
        let mut exp = vec![0; nvars];
        exp[k - 1] = 1;
        Self::monomial(nvars, exp, BigInt::one())
    }

    /// A single term `coeff * x^exp`.
    ///
    /// Panics if `exp.len() != nvars`.
    pub fn monomial(nvars: usize, exp: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.insert_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates. Panics on an exponent of the wrong length.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            p.insert_term(exp, c);
        }
        p
    }

    /// Adds `coeff * x^exp` into the polynomial, dropping the entry if the
    /// accumulated coefficient becomes zero.
    pub fn insert_term(&mut self, exp: Vec<u32>, coeff: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent length != nvars");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical lex-descending exponent order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (e.as_slice(), c))
    }

    /// The coefficient of `x^exp`, zero if the term is absent.
    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The lex-greatest term, if any.
    pub fn leading_term(&self) -> Option<(&[u32], &BigInt)> {
        self.terms.last_key_value().map(|(e, c)| (e.as_slice(), c))
    }

    /// Maximum total degree over all terms, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True if every term has the same total degree. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|d2| d2 == d),
        }
    }

    /// Partial derivative with respect to `x_k`, `k` counted from 1.
    ///
    /// Panics unless `1 <= k <= nvars`.
    pub fn partial(&self, k: usize) -> MultiPoly {
        assert!(k >= 1 && k <= self.nvars, "variable index {k} out of range 1..={}", self.nvars);
        let mut out = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let e = exp[k - 1];
            if e == 0 {
                continue;
            }
            let mut nexp = exp.clone();
            nexp[k - 1] = e - 1;
            out.insert_term(nexp, c * BigInt::from(e));
        }
        out
    }

    /// The polynomial with `x_i` and `x_j` exchanged, indices from 1.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        assert!(i >= 1 && i <= self.nvars && j >= 1 && j <= self.nvars);
        let mut out = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut nexp = exp.clone();
            nexp.swap(i - 1, j - 1);
            out.insert_term(nexp, c.clone());
        }
        out
    }

    /// Exact division: returns `self / divisor` when the division leaves no
    /// remainder.
    ///
    /// Panics if `divisor` is zero or does not divide `self` exactly. The
    /// fraction-free determinant relies on divisions that are exact by
    /// construction, so a failure here signals an implementation bug, not a
    /// data error.
    pub fn div_exact(&self, divisor: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, divisor.nvars, "nvars mismatch in div_exact");
        let (dexp, dcoeff) = divisor.leading_term().expect("division by zero polynomial");
        let dexp = dexp.to_vec();
        let dcoeff = dcoeff.clone();
        let mut rem = self.clone();
        let mut quo = Self::zero(self.nvars);
        // Lex order on fixed-length exponent vectors is a well-order and is
        // compatible with addition, so cancelling the leading term each pass
        // strictly decreases it and the loop terminates.
        while let Some((rexp, rcoeff)) = rem.leading_term() {
            let mut qexp = Vec::with_capacity(self.nvars);
            for (re, de) in rexp.iter().zip(&dexp) {
                match re.checked_sub(*de) {
                    Some(d) => qexp.push(d),
                    None => panic!("inexact division: leading monomial not divisible"),
                }
            }
            let (q, r) = num_integer_div_rem(rcoeff, &dcoeff);
            assert!(r.is_zero(), "inexact division: leading coefficient not divisible");
            let t = Self::monomial(self.nvars, qexp, q);
            rem -= &(&t * divisor);
            quo += &t;
        }
        quo
    }

    /// Canonical single-line text form, terms lex-descending.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, c)) in self.iter_desc().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mono = monomial_text(exp);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Parses the text form produced by [`MultiPoly::to_text`]. Accepts any
    /// whitespace between tokens and repeated variables within a term.
    pub fn parse_text(input: &str, nvars: usize) -> Result<MultiPoly, Error> {
        let mut p = TextParser::new(input);
        let poly = p.parse_poly(nvars)?;
        p.expect_end()?;
        Ok(poly)
    }

    /// Serializes to the canonical JSON document
    /// `{"nvars": N, "terms": [{"exp": [...], "coeff": "decimal"}, ...]}`
    /// with terms lex-descending.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PolyDoc::from_poly(self))
            .expect("polynomial JSON serialization cannot fail")
    }

    /// Parses the JSON document form. Duplicate exponents are summed, so any
    /// well-formed document denotes a unique polynomial.
    pub fn from_json_str(s: &str) -> Result<MultiPoly, Error> {
        let doc: PolyDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        doc.try_into_poly()
    }
}

fn monomial_text(exp: &[u32]) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in exp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("x{}", idx + 1));
        } else {
            parts.push(format!("x{}^{}", idx + 1, e));
        }
    }
    parts.join("*")
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// Serde mirror of the polynomial JSON document. Field order here defines
/// the emitted key order, which golden outputs depend on.
#[derive(Serialize, Deserialize)]
pub(crate) struct PolyDoc {
    nvars: usize,
    terms: Vec<PolyTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct PolyTermDoc {
    exp: Vec<u32>,
    coeff: String,
}

impl PolyDoc {
    pub(crate) fn from_poly(p: &MultiPoly) -> PolyDoc {
        PolyDoc {
            nvars: p.nvars,
            terms: p
                .iter_desc()
                .map(|(e, c)| PolyTermDoc { exp: e.to_vec(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub(crate) fn try_into_poly(self) -> Result<MultiPoly, Error> {
        let mut p = MultiPoly::zero(self.nvars);
        for t in self.terms {
            if t.exp.len() != self.nvars {
                return Err(Error::Parse(format!(
                    "exponent {:?} has length {}, expected nvars = {}",
                    t.exp,
                    t.exp.len(),
                    self.nvars
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            p.insert_term(t.exp, c);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in +");
        for (e, c) in &rhs.terms {
            self.insert_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in -");
        for (e, c) in &rhs.terms {
            self.insert_term(e.clone(), -c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in *");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u32> = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }
}

impl Mul<&BigInt> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }
}

impl Mul<i64> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, c: i64) -> MultiPoly {
        self * &BigInt::from(c)
    }
}

/// A dense univariate polynomial in the formal parameter `q` over the
/// integers. `coeffs[i]` multiplies `q^i`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The generator `q` itself.
    pub fn q() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds from `coeffs[i] * q^i`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `q`, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms as `(power, coefficient)` pairs, ascending in power.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Evaluates at the integer `q = n` by Horner's rule.
    pub fn eval_int(&self, n: i64) -> BigInt {
        let n = BigInt::from(n);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &n + c;
        }
        acc
    }

    /// Canonical text form, powers descending: `q^2 + 3*q - 1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let var = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&var);
            }
        }
        out
    }

    /// Parses an integer expression in `q` built from `+ - * ^`, integer
    /// literals, and parentheses, e.g. `q - 1` or `2*q^2 + 3`.
    pub fn parse_text(input: &str) -> Result<QPoly, Error> {
        let mut p = TextParser::new(input);
        let q = p.parse_qexpr()?;
        p.expect_end()?;
        Ok(q)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(out)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul<i64> for &QPoly {
    type Output = QPoly;
    fn mul(self, c: i64) -> QPoly {
        let c = BigInt::from(c);
        QPoly::from_coeffs(self.coeffs.iter().map(|k| k * &c).collect())
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

/// Shared recursive-descent parser for the two text syntaxes. Both grammars
/// are sums of products; only the atoms differ (`xK^e` versus `q^e`).
struct TextParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> TextParser<'a> {
    fn new(s: &'a str) -> Self {
        TextParser { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), Error> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(Error::Parse(format!(
                "unexpected character {:?} at byte {}",
                b as char, self.pos
            ))),
        }
    }

    fn parse_uint(&mut self) -> Result<String, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!("expected a number at byte {}", self.pos)));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().to_string())
    }

    fn parse_exponent(&mut self) -> Result<u32, Error> {
        let digits = self.parse_uint()?;
        digits.parse().map_err(|_| Error::Parse(format!("exponent {digits} out of range")))
    }

    // MultiPoly grammar: poly := ['-'] term (('+'|'-') term)*
    //                    term := atom ('*' atom)*
    //                    atom := INT | 'x' INT ['^' INT]
    fn parse_poly(&mut self, nvars: usize) -> Result<MultiPoly, Error> {
        let mut out = MultiPoly::zero(nvars);
        let mut sign = if self.eat(b'-') { -1i64 } else { 1 };
        loop {
            let (exp, coeff) = self.parse_poly_term(nvars)?;
            out.insert_term(exp, coeff * BigInt::from(sign));
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    sign = 1;
                }
                Some(b'-') => {
                    self.bump();
                    sign = -1;
                }
                _ => return Ok(out),
            }
        }
    }

    fn parse_poly_term(&mut self, nvars: usize) -> Result<(Vec<u32>, BigInt), Error> {
        let mut exp = vec![0u32; nvars];
        let mut coeff = BigInt::one();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.bump();
                    let idx: usize = self
                        .parse_uint()?
                        .parse()
                        .map_err(|_| Error::Parse("variable index out of range".into()))?;
                    if idx < 1 || idx > nvars {
                        return Err(Error::Parse(format!(
                            "variable x{idx} out of range for nvars = {nvars}"
                        )));
                    }
                    let e = if self.eat(b'^') { self.parse_exponent()? } else { 1 };
                    exp[idx - 1] = exp[idx - 1]
                        .checked_add(e)
                        .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
                }
                Some(b) if b.is_ascii_digit() => {
                    let digits = self.parse_uint()?;
                    let c: BigInt = digits.parse().unwrap();
                    coeff *= c;
                }
                _ => return Err(Error::Parse(format!("expected a term at byte {}", self.pos))),
            }
            if !self.eat(b'*') {
                return Ok((exp, coeff));
            }
        }
    }

    // QPoly grammar: expr := ['-'] prod (('+'|'-') prod)*
    //                prod := factor ('*' factor)*
    //                factor := INT | 'q' ['^' INT] | '(' expr ')'
    fn parse_qexpr(&mut self) -> Result<QPoly, Error> {
        let mut acc = QPoly::zero();
        let mut sign = if self.eat(b'-') { -1i64 } else { 1 };
        loop {
            let prod = self.parse_qprod()?;
            acc = &acc + &(&prod * sign);
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    sign = 1;
                }
                Some(b'-') => {
                    self.bump();
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_qprod(&mut self) -> Result<QPoly, Error> {
        let mut acc = self.parse_qfactor()?;
        while self.eat(b'*') {
            acc = &acc * &self.parse_qfactor()?;
        }
        Ok(acc)
    }

    fn parse_qfactor(&mut self) -> Result<QPoly, Error> {
        let base = match self.peek() {
            Some(b'q') => {
                self.bump();
                QPoly::q()
            }
            Some(b'(') => {
                self.bump();
                let inner = self.parse_qexpr()?;
                if !self.eat(b')') {
                    return Err(Error::Parse(format!("expected ')' at byte {}", self.pos)));
                }
                inner
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.parse_uint()?;
                QPoly::constant(digits.parse::<BigInt>().unwrap())
            }
            _ => {
                return Err(Error::Parse(format!(
                    "expected 'q', a number, or '(' at byte {}",
                    self.pos
                )))
            }
        };
        if self.eat(b'^') {
            let e = self.parse_exponent()?;
            let mut acc = QPoly::one();
            for _ in 0..e {
                acc = &acc * &base;
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }
}
