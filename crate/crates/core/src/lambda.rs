//! The ring of symmetric functions over `Z[q]`, in the h-basis.
//!
//! The complete homogeneous functions `h_1, h_2, h_3, ...` freely generate
//! the ring of symmetric functions in infinitely many variables, so an
//! element is canonically a `Z[q]`-linear combination of monomials
//! `h_{p_1} h_{p_2} ... h_{p_k}` with `p_1 >= ... >= p_k >= 1`. Equality of
//! such maps is ring equality; no change of basis is ever needed.
//!
//! [`nabla_q`] is the unique derivation with
//! `nabla_q(h_n) = (n + q - 1) h_{n-1}`. Specializing `q` to the integer `N`
//! and evaluating in `N` variables intertwines it with the diagonal
//! derivative: `specialize(nabla_q(u), N) = nabla(specialize(u, N))`. That
//! makes the corner expansion available here with symbolic `q` in place of
//! `N`, which is what [`check_theorem3`] verifies; the weight constraint
//! becomes `a + b = q - 1` in `Z[q]`.
//!
//! Skew Schur elements are produced by [`lambda_skew_schur`] as a signed
//! permutation expansion of the Jacobi–Trudi determinant, one size above the
//! partition lengths; the result does not depend on that size and the tests
//! pin this down.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::ring::{MultiPoly, QPoly};
use crate::shapes::Partition;
use crate::symfunc::h;

/// An element of the symmetric-function ring over `Z[q]`: a finite map from
/// h-index multisets (weakly decreasing, all parts >= 1) to nonzero `Z[q]`
/// coefficients. The empty index is the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaElement {
    terms: BTreeMap<Vec<u32>, QPoly>,
}

impl LambdaElement {
    pub fn zero() -> Self {
        LambdaElement { terms: BTreeMap::new() }
    }

    /// The multiplicative unit, the empty h-monomial with coefficient 1.
    pub fn unit() -> Self {
        Self::scalar(QPoly::one())
    }

    /// A scalar multiple of the unit monomial.
    pub fn scalar(c: QPoly) -> Self {
        let mut out = Self::zero();
        out.insert_term(Vec::new(), c);
        out
    }

    /// The generator `h_n`. `h_0` is the unit; there is no generator for
    /// negative subscripts, callers handle those as zero.
    pub fn h_gen(n: u32) -> Self {
        if n == 0 {
            return Self::unit();
        }
        let mut out = Self::zero();
        out.insert_term(vec![n], QPoly::one());
        out
    }

    /// A single monomial `coeff * h_parts`. Parts are sorted and zero parts
    /// dropped, so any multiset spelling is accepted.
    pub fn monomial(parts: &[u32], coeff: QPoly) -> Self {
        let mut out = Self::zero();
        out.insert_term(canonical_index(parts), coeff);
        out
    }

    fn insert_term(&mut self, index: Vec<u32>, coeff: QPoly) {
        debug_assert!(index.windows(2).all(|w| w[0] >= w[1]) && !index.contains(&0));
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lex-descending index order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&[u32], &QPoly)> {
        self.terms.iter().rev().map(|(i, c)| (i.as_slice(), c))
    }

    /// The coefficient of the h-monomial with the given parts, zero if
    /// absent.
    pub fn coeff(&self, parts: &[u32]) -> QPoly {
        self.terms.get(&canonical_index(parts)).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Canonical text form, lex-descending, e.g.
    /// `q*h[2] + (q + 1)*h[1,1]`. Multi-term coefficients are parenthesized.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (parts, c)) in self.iter_desc().enumerate() {
            let (neg, body) = format_lambda_term(parts, c);
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn canonical_index(parts: &[u32]) -> Vec<u32> {
    let mut index: Vec<u32> = parts.iter().copied().filter(|&p| p != 0).collect();
    index.sort_unstable_by(|a, b| b.cmp(a));
    index
}

fn h_monomial_text(parts: &[u32]) -> String {
    format!("h[{}]", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
}

/// Splits a term into a sign to absorb into the join and the unsigned body.
/// Single-term coefficients donate their sign; multi-term ones are printed
/// in parentheses verbatim.
fn format_lambda_term(parts: &[u32], c: &QPoly) -> (bool, String) {
    let terms: Vec<(usize, BigInt)> = c.iter_terms().map(|(i, k)| (i, k.clone())).collect();
    if terms.len() == 1 {
        let (power, coeff) = &terms[0];
        let neg = coeff.is_negative();
        let mag = coeff.abs();
        let qpart = match power {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{power}"),
        };
        let mut factors = Vec::new();
        if !mag.is_one() || (qpart.is_empty() && parts.is_empty()) {
            factors.push(mag.to_string());
        }
        if !qpart.is_empty() {
            factors.push(qpart);
        }
        if !parts.is_empty() {
            factors.push(h_monomial_text(parts));
        }
        (neg, factors.join("*"))
    } else {
        let wrapped = format!("({})", c.to_text());
        if parts.is_empty() {
            (false, wrapped)
        } else {
            (false, format!("{wrapped}*{}", h_monomial_text(parts)))
        }
    }
}

impl fmt::Display for LambdaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&LambdaElement> for LambdaElement {
    fn add_assign(&mut self, rhs: &LambdaElement) {
        for (i, c) in &rhs.terms {
            self.insert_term(i.clone(), c.clone());
        }
    }
}

impl Add for &LambdaElement {
    type Output = LambdaElement;
    fn add(self, rhs: &LambdaElement) -> LambdaElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LambdaElement {
    type Output = LambdaElement;
    fn sub(self, rhs: &LambdaElement) -> LambdaElement {
        let mut out = self.clone();
        for (i, c) in &rhs.terms {
            out.insert_term(i.clone(), -c);
        }
        out
    }
}

impl Neg for &LambdaElement {
    type Output = LambdaElement;
    fn neg(self) -> LambdaElement {
        LambdaElement { terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect() }
    }
}

impl Mul for &LambdaElement {
    type Output = LambdaElement;
    fn mul(self, rhs: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for (ia, ca) in &self.terms {
            for (ib, cb) in &rhs.terms {
                let mut index = Vec::with_capacity(ia.len() + ib.len());
                index.extend_from_slice(ia);
                index.extend_from_slice(ib);
                index.sort_unstable_by(|a, b| b.cmp(a));
                out.insert_term(index, ca * cb);
            }
        }
        out
    }
}

impl Mul<&QPoly> for &LambdaElement {
    type Output = LambdaElement;
    fn mul(self, c: &QPoly) -> LambdaElement {
        let mut out = LambdaElement::zero();
        for (i, k) in &self.terms {
            out.insert_term(i.clone(), k * c);
        }
        out
    }
}

/// The q-weighted lowering derivation: on a generator,
/// `nabla_q(h_n) = (n + q - 1) h_{n-1}`; on products, the Leibniz rule; on
/// scalars, zero. A part lowered to zero disappears into the coefficient
/// since `h_0 = 1`.
pub fn nabla_q(u: &LambdaElement) -> LambdaElement {
    let mut out = LambdaElement::zero();
    for (parts, c) in &u.terms {
        for pos in 0..parts.len() {
            // Skip repeated parts after the first occurrence; their
            // contributions are identical and handled by the multiplicity.
            if pos > 0 && parts[pos] == parts[pos - 1] {
                continue;
            }
            let p = parts[pos];
            let mult = parts.iter().filter(|&&v| v == p).count() as i64;
            // weight = mult * (p + q - 1)
            let weight = QPoly::from_coeffs(vec![
                BigInt::from(mult) * BigInt::from(p as i64 - 1),
                BigInt::from(mult),
            ]);
            let mut index: Vec<u32> = parts.clone();
            index.remove(pos);
            if p > 1 {
                index.push(p - 1);
                index.sort_unstable_by(|a, b| b.cmp(a));
            }
            out.insert_term(index, c * &weight);
        }
    }
    out
}

/// The evaluation homomorphism into `N` variables: each generator `h_n`
/// becomes the complete homogeneous polynomial, each coefficient is
/// evaluated at `q = N`.
pub fn specialize(u: &LambdaElement, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (parts, c) in &u.terms {
        let mut prod = MultiPoly::constant(nvars, c.eval_int(nvars as i64));
        for &p in parts {
            prod = &prod * &h(p as i64, nvars);
        }
        out += &prod;
    }
    out
}

/// Removes a box from row `i` (1-based) of a partition given by its nonzero
/// parts. `None` when the result is not a partition, including every
/// `i > len`.
fn remove_box_trimmed(parts: &[u32], i: usize) -> Option<Vec<u32>> {
    if i == 0 || i > parts.len() {
        return None;
    }
    let idx = i - 1;
    let lowered = parts[idx] - 1;
    if idx + 1 < parts.len() && lowered < parts[idx + 1] {
        return None;
    }
    let mut out = parts.to_vec();
    if lowered == 0 {
        out.pop();
    } else {
        out[idx] = lowered;
    }
    Some(out)
}

/// Adds a box to row `i` (1-based). Row `len + 1` starts a new part of size
/// one; beyond that no partition can result.
fn add_box_trimmed(parts: &[u32], i: usize) -> Option<Vec<u32>> {
    if i == 0 || i > parts.len() + 1 {
        return None;
    }
    let mut out = parts.to_vec();
    if i == parts.len() + 1 {
        out.push(1);
        return Some(out);
    }
    let idx = i - 1;
    if idx > 0 && out[idx] + 1 > out[idx - 1] {
        return None;
    }
    out[idx] += 1;
    Some(out)
}

/// Content entry `parts[i] - i` at 1-based `i`, with zero parts beyond the
/// stored length.
fn content_at(parts: &[u32], i: usize) -> i64 {
    let part = if i <= parts.len() { parts[i - 1] as i64 } else { 0 };
    part - i as i64
}

fn skew_schur_parts(lam: &[u32], mu: &[u32], n0: usize) -> LambdaElement {
    assert!(
        n0 > lam.len().max(mu.len()),
        "determinant size {n0} must exceed both partition lengths"
    );
    assert!(n0 <= 8, "determinant size {n0} beyond the supported cap of 8");
    let subscripts: Vec<Vec<i64>> = (1..=n0)
        .map(|i| (1..=n0).map(|j| content_at(lam, i) - content_at(mu, j)).collect())
        .collect();
    let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let mut used = vec![false; n0];
    let mut factors: Vec<u32> = Vec::new();
    expand_permutations(&subscripts, 0, &mut used, &mut factors, 1, &mut acc);
    let mut out = LambdaElement::zero();
    for (mut index, c) in acc {
        index.sort_unstable_by(|a, b| b.cmp(a));
        out.insert_term(index, QPoly::from_coeffs(vec![c]));
    }
    out
}

fn expand_permutations(
    subscripts: &[Vec<i64>],
    row: usize,
    used: &mut Vec<bool>,
    factors: &mut Vec<u32>,
    sign: i64,
    acc: &mut BTreeMap<Vec<u32>, BigInt>,
) {
    let n = subscripts.len();
    if row == n {
        let entry = acc.entry(factors.clone()).or_insert_with(BigInt::zero);
        *entry += BigInt::from(sign);
        if entry.is_zero() {
            acc.remove(&factors.clone());
        }
        return;
    }
    let mut skipped = 0u32;
    for col in 0..n {
        if used[col] {
            continue;
        }
        let here_sign = if skipped.is_multiple_of(2) { sign } else { -sign };
        skipped += 1;
        let sub = subscripts[row][col];
        // Negative subscript means the factor h_sub is zero: dead branch.
        if sub < 0 {
            continue;
        }
        used[col] = true;
        if sub > 0 {
            factors.push(sub as u32);
        }
        expand_permutations(subscripts, row + 1, used, factors, here_sign, acc);
        if sub > 0 {
            factors.pop();
        }
        used[col] = false;
    }
}

/// The skew Schur element of the symmetric-function ring, from the
/// Jacobi–Trudi determinant at size `max(lengths) + 1`, expanded directly in
/// the h-basis. Trailing zero parts of the inputs are ignored; shapes with
/// the inner partition sticking out come out as zero through cancellation,
/// not by a shortcut.
pub fn lambda_skew_schur(outer: &Partition, inner: &Partition) -> LambdaElement {
    let lam = outer.trimmed_parts();
    let mu = inner.trimmed_parts();
    skew_schur_parts(lam, mu, lam.len().max(mu.len()) + 1)
}

/// Same as [`lambda_skew_schur`] with an explicit determinant size, which
/// must exceed both partition lengths (and the cap of 8). Exists so tests
/// can pin down that the result does not depend on the size.
pub fn lambda_skew_schur_sized(outer: &Partition, inner: &Partition, n0: usize) -> LambdaElement {
    skew_schur_parts(outer.trimmed_parts(), inner.trimmed_parts(), n0)
}

/// One corner move in the symbolic corner expansion: row, diagonal, `Z[q]`
/// weight, and the partition (nonzero parts) after the move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaCornerTerm {
    pub index: usize,
    pub diagonal: i64,
    pub coeff: QPoly,
    pub partition: Vec<u32>,
}

/// Two-sided evaluation of the corner expansion with symbolic `q`.
/// `verdict` is true iff both sides agree as h-basis maps with `Z[q]`
/// coefficients.
#[derive(Debug, Clone)]
pub struct Theorem3Report {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
    pub a: QPoly,
    pub b: QPoly,
    pub lhs: LambdaElement,
    pub rhs: LambdaElement,
    pub outer_terms: Vec<LambdaCornerTerm>,
    pub inner_terms: Vec<LambdaCornerTerm>,
    pub verdict: bool,
}

/// Verifies the corner expansion for `nabla_q` on a skew shape:
/// `nabla_q(s) = sum (l_i + a) s_{(outer - e_i)/inner} + sum (b - m_i)
/// s_{outer/(inner + e_i)}` with weights in `Z[q]` constrained by
/// `a + b = q - 1`. The sums run over `i` up to the partition length plus
/// one; no box can move at higher rows.
pub fn check_theorem3(
    outer: &Partition,
    inner: &Partition,
    a: &QPoly,
    b: &QPoly,
) -> Result<Theorem3Report, Error> {
    let want = &QPoly::q() - &QPoly::one();
    let got = a + b;
    if got != want {
        return Err(Error::ParameterConstraint(format!(
            "a + b must equal q - 1, got ({}) + ({}) = {}",
            a.to_text(),
            b.to_text(),
            got.to_text()
        )));
    }
    let lam = outer.trimmed_parts().to_vec();
    let mu = inner.trimmed_parts().to_vec();
    let lhs = nabla_q(&skew_schur_parts(&lam, &mu, lam.len().max(mu.len()) + 1));

    let mut rhs = LambdaElement::zero();
    let mut outer_terms = Vec::new();
    let mut inner_terms = Vec::new();
    for i in 1..=lam.len() {
        if let Some(shrunk) = remove_box_trimmed(&lam, i) {
            let coeff = &QPoly::constant(content_at(&lam, i)) + a;
            let factor = skew_schur_parts(&shrunk, &mu, shrunk.len().max(mu.len()) + 1);
            rhs += &(&factor * &coeff);
            outer_terms.push(LambdaCornerTerm {
                index: i,
                diagonal: content_at(&lam, i),
                coeff,
                partition: shrunk,
            });
        }
    }
    for i in 1..=mu.len() + 1 {
        if let Some(grown) = add_box_trimmed(&mu, i) {
            let coeff = b - &QPoly::constant(content_at(&mu, i));
            let factor = skew_schur_parts(&lam, &grown, lam.len().max(grown.len()) + 1);
            rhs += &(&factor * &coeff);
            inner_terms.push(LambdaCornerTerm {
                index: i,
                diagonal: content_at(&mu, i),
                coeff,
                partition: grown,
            });
        }
    }
    let verdict = lhs == rhs;
    Ok(Theorem3Report {
        outer: lam,
        inner: mu,
        a: a.clone(),
        b: b.clone(),
        lhs,
        rhs,
        outer_terms,
        inner_terms,
        verdict,
    })
}

#[derive(Serialize)]
struct LambdaTermDoc {
    h: Vec<u32>,
    coeff: String,
}

#[derive(Serialize)]
struct LambdaCornerDoc {
    index: usize,
    diagonal: i64,
    coeff: String,
    partition: Vec<u32>,
}

#[derive(Serialize)]
struct Theorem3Doc {
    outer: Vec<u32>,
    inner: Vec<u32>,
    a: String,
    b: String,
    lhs: Vec<LambdaTermDoc>,
    rhs: Vec<LambdaTermDoc>,
    outer_terms: Vec<LambdaCornerDoc>,
    inner_terms: Vec<LambdaCornerDoc>,
    verdict: bool,
}

fn lambda_terms_doc(u: &LambdaElement) -> Vec<LambdaTermDoc> {
    u.iter_desc()
        .map(|(parts, c)| LambdaTermDoc { h: parts.to_vec(), coeff: c.to_text() })
        .collect()
}

impl Theorem3Report {
    /// Multi-line human-readable form.
    pub fn to_text(&self) -> String {
        let fmt_parts = |p: &[u32]| {
            format!("({})", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        };
        let mut out = String::new();
        out.push_str(&format!(
            "shape: {}/{}\n",
            fmt_parts(&self.outer),
            fmt_parts(&self.inner)
        ));
        out.push_str(&format!("a: {}  b: {}\n", self.a.to_text(), self.b.to_text()));
        out.push_str(&format!("lhs: {}\n", self.lhs));
        out.push_str(&format!("rhs: {}\n", self.rhs));
        for t in &self.outer_terms {
            out.push_str(&format!(
                "outer corner i={} diagonal={} coeff={} -> {}\n",
                t.index,
                t.diagonal,
                t.coeff.to_text(),
                fmt_parts(&t.partition)
            ));
        }
        for t in &self.inner_terms {
            out.push_str(&format!(
                "inner corner i={} diagonal={} coeff={} -> {}\n",
                t.index,
                t.diagonal,
                t.coeff.to_text(),
                fmt_parts(&t.partition)
            ));
        }
        out.push_str(&format!("verdict: {}", self.verdict));
        out
    }

    /// Single JSON document; `Z[q]` values appear in their canonical text
    /// form.
    pub fn to_json_string(&self) -> String {
        let doc = Theorem3Doc {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
            a: self.a.to_text(),
            b: self.b.to_text(),
            lhs: lambda_terms_doc(&self.lhs),
            rhs: lambda_terms_doc(&self.rhs),
            outer_terms: self
                .outer_terms
                .iter()
                .map(|t| LambdaCornerDoc {
                    index: t.index,
                    diagonal: t.diagonal,
                    coeff: t.coeff.to_text(),
                    partition: t.partition.clone(),
                })
                .collect(),
            inner_terms: self
                .inner_terms
                .iter()
                .map(|t| LambdaCornerDoc {
                    index: t.index,
                    diagonal: t.diagonal,
                    coeff: t.coeff.to_text(),
                    partition: t.partition.clone(),
                })
                .collect(),
            verdict: self.verdict,
        };
        serde_json::to_string(&doc).expect("report JSON serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nabla::nabla;
    use crate::shapes::{partitions_bounded, SkewShape};
    use crate::symfunc::skew_schur;
    use proptest::prelude::*;

    fn pt(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn h_monomials_multiply_by_multiset_merge() {
        let h2h1 = &LambdaElement::h_gen(2) * &LambdaElement::h_gen(1);
        assert_eq!(h2h1, LambdaElement::monomial(&[2, 1], QPoly::one()));
        let u = &LambdaElement::h_gen(1) + &LambdaElement::h_gen(2);
        assert_eq!(&u * &LambdaElement::unit(), u);
        let prod = &u * &LambdaElement::h_gen(1);
        assert_eq!(prod.coeff(&[1, 1]), QPoly::one());
        assert_eq!(prod.coeff(&[2, 1]), QPoly::one());
        assert_eq!(prod.num_terms(), 2);
    }

    #[test]
    fn text_form_golden_strings() {
        assert_eq!(LambdaElement::zero().to_text(), "0");
        assert_eq!(LambdaElement::unit().to_text(), "1");
        assert_eq!(LambdaElement::scalar(QPoly::q()).to_text(), "q");
        assert_eq!(LambdaElement::monomial(&[2, 1], QPoly::constant(-3)).to_text(), "-3*h[2,1]");
        let mixed = &LambdaElement::monomial(&[2], QPoly::q())
            + &LambdaElement::monomial(&[1, 1], &QPoly::q() + &QPoly::one());
        assert_eq!(mixed.to_text(), "q*h[2] + (q + 1)*h[1,1]");
    }

    #[test]
    fn skew_schur_element_golden_values() {
        let s21 = lambda_skew_schur(&pt(&[2, 1]), &Partition::zero(2));
        assert_eq!(s21.to_text(), "-h[3] + h[2,1]");
        assert_eq!(lambda_skew_schur(&pt(&[1]), &pt(&[1])), LambdaElement::unit());
        assert!(lambda_skew_schur(&pt(&[1]), &pt(&[2])).is_zero());
        assert_eq!(lambda_skew_schur(&Partition::zero(0), &Partition::zero(0)), LambdaElement::unit());
        for n in 1..=4 {
            assert_eq!(
                lambda_skew_schur(&pt(&[n]), &Partition::zero(1)),
                LambdaElement::h_gen(n as u32)
            );
        }
    }

    #[test]
    fn skew_schur_element_ignores_determinant_size() {
        for outer in partitions_bounded(3, 5, None) {
            for inner in partitions_bounded(3, 5, Some(outer.parts().first().copied().unwrap_or(0))) {
                let base = lambda_skew_schur(&outer, &inner);
                let min_n0 = outer.trimmed_parts().len().max(inner.trimmed_parts().len()) + 1;
                assert_eq!(lambda_skew_schur_sized(&outer, &inner, min_n0 + 1), base);
                assert_eq!(lambda_skew_schur_sized(&outer, &inner, min_n0 + 2), base);
            }
        }
    }

    #[test]
    fn specialization_golden_values() {
        assert_eq!(specialize(&LambdaElement::h_gen(1), 2).to_text(), "x1 + x2");
        assert_eq!(specialize(&LambdaElement::scalar(QPoly::q()), 3), MultiPoly::constant(3, 3));
        let s21 = lambda_skew_schur(&pt(&[2, 1]), &Partition::zero(2));
        assert_eq!(specialize(&s21, 2).to_text(), "x1^2*x2 + x1*x2^2");
    }

    #[test]
    fn specialization_matches_the_finite_skew_schur() {
        for outer in partitions_bounded(2, 4, None) {
            for inner in partitions_bounded(2, 4, Some(outer.parts()[0])) {
                let element = lambda_skew_schur(&outer, &inner);
                for nvars in 2..=3usize {
                    let mut opad: Vec<i64> = outer.parts().iter().map(|&v| v as i64).collect();
                    let mut ipad: Vec<i64> = inner.parts().iter().map(|&v| v as i64).collect();
                    opad.resize(nvars, 0);
                    ipad.resize(nvars, 0);
                    let sh = SkewShape::new(pt(&opad), pt(&ipad));
                    assert_eq!(specialize(&element, nvars), skew_schur(&sh), "shape {sh}");
                }
            }
        }
    }

    #[test]
    fn lowering_derivation_golden_values() {
        assert_eq!(nabla_q(&LambdaElement::h_gen(1)).to_text(), "q");
        assert!(nabla_q(&LambdaElement::unit()).is_zero());
        assert!(nabla_q(&LambdaElement::scalar(QPoly::q())).is_zero());
        assert_eq!(
            nabla_q(&LambdaElement::monomial(&[2, 1], QPoly::one())).to_text(),
            "q*h[2] + (q + 1)*h[1,1]"
        );
        // nabla_q(h_n) = (n + q - 1) h_{n-1} read off directly.
        for n in 2..=5u32 {
            let d = nabla_q(&LambdaElement::h_gen(n));
            assert_eq!(d.num_terms(), 1);
            assert_eq!(
                d.coeff(&[n - 1]),
                QPoly::from_coeffs(vec![BigInt::from(n as i64 - 1), BigInt::from(1)])
            );
        }
    }

    #[test]
    fn repeated_parts_pick_up_their_multiplicity() {
        // nabla_q(h_1^3) = 3q h_1^2.
        let cube = LambdaElement::monomial(&[1, 1, 1], QPoly::one());
        let d = nabla_q(&cube);
        assert_eq!(d.num_terms(), 1);
        assert_eq!(d.coeff(&[1, 1]), &QPoly::q() * 3);
    }

    #[test]
    fn theorem3_hand_checked_cases() {
        let qm1 = &QPoly::q() - &QPoly::one();
        // outer (1), inner empty, a = 0, b = q - 1.
        let r = check_theorem3(&pt(&[1]), &Partition::zero(0), &QPoly::zero(), &qm1).unwrap();
        assert!(r.verdict);
        assert_eq!(r.lhs, LambdaElement::scalar(QPoly::q()));
        // outer (2), inner empty, a = q - 1, b = 0: both sides (q + 1) h_1.
        let r = check_theorem3(&pt(&[2]), &Partition::zero(0), &qm1, &QPoly::zero()).unwrap();
        assert!(r.verdict);
        assert_eq!(
            r.lhs,
            LambdaElement::monomial(&[1], QPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(1)]))
        );
        // Empty shape: both sides zero.
        let r = check_theorem3(&Partition::zero(0), &Partition::zero(0), &QPoly::q(), &QPoly::constant(-1))
            .unwrap();
        assert!(r.verdict);
        assert!(r.lhs.is_zero());
        assert!(r.rhs.is_zero());
    }

    #[test]
    fn theorem3_weight_validation_is_strict() {
        let bad = check_theorem3(&pt(&[1]), &Partition::zero(0), &QPoly::zero(), &QPoly::zero());
        assert!(matches!(bad, Err(Error::ParameterConstraint(_))));
    }

    #[test]
    fn theorem3_report_serializations() {
        let qm1 = &QPoly::q() - &QPoly::one();
        let r = check_theorem3(&pt(&[2, 1]), &pt(&[1]), &QPoly::zero(), &qm1).unwrap();
        assert!(r.verdict);
        let text = r.to_text();
        assert!(text.starts_with("shape: (2,1)/(1)\n"));
        assert!(text.contains("verdict: true"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert_eq!(json["outer"], serde_json::json!([2, 1]));
        assert_eq!(json["verdict"], serde_json::json!(true));
    }

    fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-4i64..=4, 0..3)
            .prop_map(|cs| QPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
    }

    fn arb_lambda() -> impl Strategy<Value = LambdaElement> {
        let term = (proptest::collection::vec(1u32..=4, 0..3), arb_qpoly());
        proptest::collection::vec(term, 0..3).prop_map(|ts| {
            let mut out = LambdaElement::zero();
            for (parts, c) in ts {
                out += &LambdaElement::monomial(&parts, c);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_hold(u in arb_lambda(), v in arb_lambda(), w in arb_lambda()) {
            prop_assert_eq!(&u * &v, &v * &u);
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        }

        #[test]
        fn lowering_is_a_derivation(u in arb_lambda(), v in arb_lambda()) {
            let lhs = nabla_q(&(&u * &v));
            let rhs = &(&nabla_q(&u) * &v) + &(&u * &nabla_q(&v));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn specialization_commutes_with_the_lowering(u in arb_lambda(), nvars in 1usize..=3) {
            let left = specialize(&nabla_q(&u), nvars);
            let right = nabla(&specialize(&u, nvars));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn specialization_is_a_ring_map(u in arb_lambda(), v in arb_lambda(), nvars in 1usize..=2) {
            let lhs = specialize(&(&u * &v), nvars);
            let rhs = &specialize(&u, nvars) * &specialize(&v, nvars);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
