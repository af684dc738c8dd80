//! Symmetric polynomials in `N` variables.
//!
//! The central object is the skew Schur polynomial, computed two independent
//! ways:
//!
//! * [`skew_schur`] — a determinant of complete homogeneous polynomials,
//!   with indices given by the content vectors of the two partitions;
//! * [`ssyt_skew_schur`] — a sum of monomial weights over semistandard
//!   tableaux of the shape, enumerated by backtracking.
//!
//! The two routes share no code beyond the base ring, which is the point:
//! they cross-check each other. Determinants likewise come in two backends,
//! fraction-free elimination ([`det_poly`], the default) and the signed
//! permutation sum ([`det_poly_leibniz`], for cross-checks at small sizes).
//!
//! [`expand_schur_basis`] inverts the picture, rewriting any symmetric
//! polynomial as an integer combination of Schur polynomials by repeatedly
//! cancelling the lex-leading term. Lex order on fixed-length exponent
//! vectors is a well-order, so the greedy loop terminates even on
//! inhomogeneous input.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ring::MultiPoly;
use crate::shapes::{ContentVector, Partition, SkewShape};

/// The complete homogeneous symmetric polynomial `h_n` in `nvars` variables:
/// the sum of all monomials of total degree `n`. By convention `h_0 = 1` and
/// `h_n = 0` for `n < 0`; with zero variables `h_n = 0` for every `n >= 1`.
pub fn h(n: i64, nvars: usize) -> MultiPoly {
    if n < 0 {
        return MultiPoly::zero(nvars);
    }
    let mut out = MultiPoly::zero(nvars);
    let mut exp = vec![0u32; nvars];
    fill_compositions(n as u32, 0, &mut exp, &mut out);
    out
}

fn fill_compositions(budget: u32, idx: usize, exp: &mut Vec<u32>, out: &mut MultiPoly) {
    if idx == exp.len() {
        if budget == 0 {
            out.insert_term(exp.clone(), BigInt::one());
        }
        return;
    }
    if idx + 1 == exp.len() {
        // Last slot takes the remainder; avoids a deep tail of zero budgets.
        exp[idx] = budget;
        out.insert_term(exp.clone(), BigInt::one());
        exp[idx] = 0;
        return;
    }
    for v in 0..=budget {
        exp[idx] = v;
        fill_compositions(budget - v, idx + 1, exp, out);
        exp[idx] = 0;
    }
}

/// A square matrix of `h` subscripts. Entry `(i, j)` is the difference
/// `l_i - m_j` of two content vectors; the corresponding polynomial matrix
/// has `h_{l_i - m_j}` in that slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HIndexMatrix {
    rows: Vec<Vec<i64>>,
}

impl HIndexMatrix {
    /// Builds the matrix `(l_i - m_j)` from two content vectors of equal
    /// length. Panics on a length mismatch.
    pub fn from_contents(l: &ContentVector, m: &ContentVector) -> HIndexMatrix {
        assert_eq!(l.len(), m.len(), "content length mismatch");
        let rows = l
            .values()
            .iter()
            .map(|&li| m.values().iter().map(|&mj| li - mj).collect())
            .collect();
        HIndexMatrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Subscript at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Realizes the matrix over `nvars` variables, mapping each subscript
    /// `n` to the polynomial `h_n`.
    pub fn to_poly_matrix(&self, nvars: usize) -> Vec<Vec<MultiPoly>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&n| h(n, nvars)).collect())
            .collect()
    }
}

/// The Jacobi–Trudi matrix of a skew shape: subscripts
/// `outer_i - inner_j - i + j`, equivalently the content difference matrix
/// of the two partitions.
pub fn jt_matrix(shape: &SkewShape) -> HIndexMatrix {
    HIndexMatrix::from_contents(&shape.outer().content(), &shape.inner().content())
}

fn validate_square(mat: &[Vec<MultiPoly>]) -> (usize, usize) {
    let n = mat.len();
    assert!(n > 0, "determinant of an empty matrix");
    let nvars = mat[0][0].nvars();
    for row in mat {
        assert_eq!(row.len(), n, "matrix is not square");
        for entry in row {
            assert_eq!(entry.nvars(), nvars, "nvars mismatch inside matrix");
        }
    }
    (n, nvars)
}

/// Determinant by fraction-free (Bareiss) elimination. Every division along
/// the way is exact by construction, so the whole computation stays in the
/// polynomial ring. Zero pivots are repaired by row swaps; if no swap helps,
/// the determinant is zero.
pub fn det_poly(mat: &[Vec<MultiPoly>]) -> MultiPoly {
    let (n, nvars) = validate_square(mat);
    let mut m = mat.to_vec();
    let mut sign = 1i64;
    let one = MultiPoly::one(nvars);
    let mut prev = one.clone();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return MultiPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if prev == one { num } else { num.div_exact(&prev) };
            }
            m[i][k] = MultiPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// Determinant as the signed sum over all permutations, organized as a
/// depth-first search that skips zero entries. Exponential in the size;
/// meant for cross-checking [`det_poly`] on small matrices, not for use in
/// the main pipeline.
pub fn det_poly_leibniz(mat: &[Vec<MultiPoly>]) -> MultiPoly {
    let (n, nvars) = validate_square(mat);
    let mut used = vec![false; n];
    let mut acc = MultiPoly::zero(nvars);
    let start = MultiPoly::one(nvars);
    leibniz_rows(mat, 0, &mut used, &start, 1, &mut acc);
    acc
}

fn leibniz_rows(
    mat: &[Vec<MultiPoly>],
    row: usize,
    used: &mut Vec<bool>,
    partial: &MultiPoly,
    sign: i64,
    acc: &mut MultiPoly,
) {
    let n = mat.len();
    if row == n {
        *acc += &(partial * sign);
        return;
    }
    let mut skipped = 0u32;
    for col in 0..n {
        if used[col] {
            continue;
        }
        // Each unused smaller column left behind becomes an inversion with a
        // later row, flipping the sign once.
        let here_sign = if skipped.is_multiple_of(2) { sign } else { -sign };
        skipped += 1;
        if mat[row][col].is_zero() {
            continue;
        }
        used[col] = true;
        let next = partial * &mat[row][col];
        leibniz_rows(mat, row + 1, used, &next, here_sign, acc);
        used[col] = false;
    }
}

/// The skew Schur polynomial of `shape` in its ambient variable count, via
/// the Jacobi–Trudi determinant. Shapes whose inner partition is not
/// contained in the outer one give zero. With zero variables the only shape
/// is the empty one and the result is the constant `1`.
pub fn skew_schur(shape: &SkewShape) -> MultiPoly {
    let nvars = shape.nvars();
    if !shape.contains() {
        return MultiPoly::zero(nvars);
    }
    if nvars == 0 {
        return MultiPoly::one(0);
    }
    det_poly(&jt_matrix(shape).to_poly_matrix(nvars))
}

/// The straight Schur polynomial `s_lambda`.
pub fn schur(lambda: &Partition) -> MultiPoly {
    skew_schur(&SkewShape::straight(lambda.clone()))
}

/// The skew Schur polynomial summed over semistandard tableaux: fillings of
/// the shape with values in `1..=N`, weakly increasing along rows and
/// strictly increasing down columns, each contributing the product of
/// `x_value` over its cells.
///
/// Independent of the determinant route by design.
pub fn ssyt_skew_schur(shape: &SkewShape) -> MultiPoly {
    let nvars = shape.nvars();
    if !shape.contains() {
        return MultiPoly::zero(nvars);
    }
    if nvars == 0 {
        return MultiPoly::one(0);
    }
    let outer = shape.outer().parts();
    let inner = shape.inner().parts();
    let width = outer[0] as usize;
    // Cells in column-major order; within a column the rows are contiguous
    // because both boundary partitions are weakly decreasing.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for j in 1..=width {
        for i in 1..=nvars {
            if (inner[i - 1] as usize) < j && j <= outer[i - 1] as usize {
                cells.push((i, j));
            }
        }
    }
    let mut values = vec![vec![0u32; width]; nvars];
    let mut weight = vec![0u32; nvars];
    let mut out = MultiPoly::zero(nvars);
    fill_tableau(&cells, 0, inner, &mut values, &mut weight, &mut out);
    out
}

fn fill_tableau(
    cells: &[(usize, usize)],
    pos: usize,
    inner: &[u32],
    values: &mut Vec<Vec<u32>>,
    weight: &mut Vec<u32>,
    out: &mut MultiPoly,
) {
    if pos == cells.len() {
        out.insert_term(weight.clone(), BigInt::one());
        return;
    }
    let (i, j) = cells[pos];
    let nvars = values.len() as u32;
    // Strict increase below the cell above, weak increase after the cell to
    // the left; absent neighbours impose nothing.
    let mut lo = 1u32;
    if i >= 2 && j > inner[i - 2] as usize {
        lo = lo.max(values[i - 2][j - 1] + 1);
    }
    if j >= 2 && j - 1 > inner[i - 1] as usize {
        lo = lo.max(values[i - 1][j - 2]);
    }
    for v in lo..=nvars {
        values[i - 1][j - 1] = v;
        weight[(v - 1) as usize] += 1;
        fill_tableau(cells, pos + 1, inner, values, weight, out);
        weight[(v - 1) as usize] -= 1;
    }
    values[i - 1][j - 1] = 0;
}

/// An integer combination of Schur polynomials over a fixed variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    nvars: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `s_lambda`, zero if absent.
    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lex-descending partition order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Sums `coeff * s_lambda` back into a polynomial.
    pub fn reconstruct(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (lam, c) in &self.terms {
            out += &(&schur(lam) * c);
        }
        out
    }

    /// Canonical text form, e.g. `2*s[2,2,2] - s[3,1,0]`, lex-descending.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (lam, c)) in self.iter_desc().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let name = format!(
                "s[{}]",
                lam.parts().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            );
            if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&name);
            }
        }
        out
    }

    /// Serializes to `{"terms": [{"partition": [...], "coeff": "decimal"}]}`
    /// with terms lex-descending.
    pub fn to_json_string(&self) -> String {
        let doc = ExpansionDoc {
            terms: self
                .iter_desc()
                .map(|(lam, c)| ExpansionTermDoc {
                    partition: lam.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("expansion JSON serialization cannot fail")
    }

    /// Parses the JSON document form. All partitions must share one length,
    /// which becomes the variable count; duplicates are summed.
    pub fn from_json_str(s: &str) -> Result<SchurExpansion, Error> {
        let doc: ExpansionDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut nvars: Option<usize> = None;
        let mut terms = BTreeMap::new();
        for t in doc.terms {
            let nv = *nvars.get_or_insert(t.partition.len());
            if t.partition.len() != nv {
                return Err(Error::Parse(format!(
                    "partition {:?} has {} parts, expected {}",
                    t.partition,
                    t.partition.len(),
                    nv
                )));
            }
            let as_i64: Vec<i64> = t.partition.iter().map(|&v| v as i64).collect();
            let lam = Partition::new(&as_i64)?;
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if !c.is_zero() {
                let entry = terms.entry(lam).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        terms.retain(|_, c: &mut BigInt| !c.is_zero());
        Ok(SchurExpansion { nvars: nvars.unwrap_or(0), terms })
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionDoc {
    terms: Vec<ExpansionTermDoc>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionTermDoc {
    partition: Vec<u32>,
    coeff: String,
}

/// Rewrites a symmetric polynomial as an integer combination of Schur
/// polynomials by greedy cancellation of the lex-leading term.
///
/// The leading exponent of `s_lambda` is `lambda` itself with coefficient 1,
/// so each pass removes the current leading term outright and replaces it
/// with lex-smaller ones; termination follows because lex order on
/// fixed-length exponent vectors is a well-order. Works on inhomogeneous
/// input. Fails with [`Error::NotSymmetric`] when a leading exponent is not
/// weakly decreasing, which cannot happen for symmetric input.
pub fn expand_schur_basis(p: &MultiPoly) -> Result<SchurExpansion, Error> {
    let nvars = p.nvars();
    let mut rem = p.clone();
    let mut terms = BTreeMap::new();
    while let Some((exp, c)) = rem.leading_term() {
        if exp.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric { exp: exp.to_vec() });
        }
        let lam = Partition::from_valid(exp.to_vec());
        let c = c.clone();
        rem -= &(&schur(&lam) * &c);
        terms.insert(lam, c);
    }
    Ok(SchurExpansion { nvars, terms })
}
