//! Integer partitions with a fixed number of parts.
//!
//! A [`Partition`] here always carries exactly `nvars` parts, padding with
//! zeros, because the surrounding algebra works in a fixed ambient variable
//! count: `(2, 1)` and `(2, 1, 0)` are different values living over two and
//! three variables. Box indices and content indices are 1-based to match the
//! usual row numbering of diagrams.

use std::fmt;

use crate::error::Error;

/// A weakly decreasing vector of nonnegative parts, zero-padded to a fixed
/// length. The derived ordering is lexicographic on the part vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates and builds a partition. The error pinpoints the first
    /// violated constraint.
    pub fn new(parts: &[i64]) -> Result<Partition, Error> {
        for (pos, &v) in parts.iter().enumerate() {
            if v < 0 {
                return Err(Error::NegativePart { pos, value: v });
            }
        }
        for pos in 0..parts.len().saturating_sub(1) {
            if parts[pos] < parts[pos + 1] {
                return Err(Error::NotWeaklyDecreasing {
                    pos,
                    prev: parts[pos],
                    next: parts[pos + 1],
                });
            }
        }
        Ok(Partition { parts: parts.iter().map(|&v| v as u32).collect() })
    }

    /// Wraps parts already known to be weakly decreasing and nonnegative.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Partition {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The zero partition `(0, ..., 0)` with `nvars` parts.
    pub fn zero(nvars: usize) -> Partition {
        Partition { parts: vec![0; nvars] }
    }

    /// Parses a comma-separated part list, zero-padding to `nvars`. The
    /// empty string denotes the zero partition.
    pub fn parse(input: &str, nvars: usize) -> Result<Partition, Error> {
        let input = input.trim();
        if input.is_empty() {
            return Ok(Partition::zero(nvars));
        }
        let mut parts = Vec::new();
        for tok in input.split(',') {
            let v: i64 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition entry {:?}", tok.trim())))?;
            parts.push(v);
        }
        if parts.len() > nvars {
            return Err(Error::Parse(format!(
                "partition has {} parts but only {} variables",
                parts.len(),
                nvars
            )));
        }
        parts.resize(nvars, 0);
        Partition::new(&parts)
    }

    pub fn nvars(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&v| v as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&v| v == 0)
    }

    /// The parts with trailing zeros dropped.
    pub fn trimmed_parts(&self) -> &[u32] {
        let len = self.parts.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1);
        &self.parts[..len]
    }

    /// Removes one box from row `i` (1-based). `None` when the result is not
    /// a partition. Panics if `i` is out of range.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        assert!(i >= 1 && i <= self.parts.len(), "row {i} out of range");
        let idx = i - 1;
        if self.parts[idx] == 0 {
            return None;
        }
        if idx + 1 < self.parts.len() && self.parts[idx] - 1 < self.parts[idx + 1] {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[idx] -= 1;
        Some(Partition { parts })
    }

    /// Adds one box to row `i` (1-based). `None` when the result is not a
    /// partition. Panics if `i` is out of range.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        assert!(i >= 1 && i <= self.parts.len(), "row {i} out of range");
        let idx = i - 1;
        if idx > 0 && self.parts[idx] + 1 > self.parts[idx - 1] {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[idx] += 1;
        Some(Partition { parts })
    }

    /// The content vector with entries `parts[i] - i` at 1-based `i`.
    /// Its entries are strictly decreasing, and the map back to the
    /// partition is injective.
    pub fn content(&self) -> ContentVector {
        ContentVector(
            self.parts
                .iter()
                .enumerate()
                .map(|(idx, &v)| v as i64 - (idx as i64 + 1))
                .collect(),
        )
    }

    /// True when `inner` fits inside `self` row by row. Panics on a variable
    /// count mismatch.
    pub fn contains(&self, inner: &Partition) -> bool {
        assert_eq!(self.parts.len(), inner.parts.len(), "nvars mismatch in contains");
        self.parts.iter().zip(&inner.parts).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// An outer and inner partition over the same variable count. The inner
/// partition need not be contained in the outer one; shapes with `inner`
/// sticking out denote the zero skew Schur polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Panics when the two partitions disagree on the variable count.
    pub fn new(outer: Partition, inner: Partition) -> SkewShape {
        assert_eq!(outer.nvars(), inner.nvars(), "nvars mismatch in skew shape");
        SkewShape { outer, inner }
    }

    /// The straight shape `outer / 0`.
    pub fn straight(outer: Partition) -> SkewShape {
        let inner = Partition::zero(outer.nvars());
        SkewShape { outer, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn nvars(&self) -> usize {
        self.outer.nvars()
    }

    /// True when the inner partition is contained in the outer one.
    pub fn contains(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    /// `|outer| - |inner|`; negative for badly non-contained shapes.
    pub fn size(&self) -> i64 {
        self.outer.size() as i64 - self.inner.size() as i64
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// The strictly decreasing integer vector `(p_i - i)` attached to a
/// partition. Index access is 1-based like the rows it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentVector(Vec<i64>);

impl ContentVector {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based index `i`.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// The vector with entry `k` (1-based) decreased by one.
    pub fn minus_unit(&self, k: usize) -> ContentVector {
        let mut v = self.0.clone();
        v[k - 1] -= 1;
        ContentVector(v)
    }

    /// The vector with entry `k` (1-based) increased by one.
    pub fn plus_unit(&self, k: usize) -> ContentVector {
        let mut v = self.0.clone();
        v[k - 1] += 1;
        ContentVector(v)
    }
}

/// All partitions with `nvars` parts and size at most `max_size`, first part
/// at most `max_part` when given, in lex-descending order.
pub fn partitions_bounded(nvars: usize, max_size: u64, max_part: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let cap = max_part.map_or(max_size, |p| (p as u64).min(max_size));
    let mut prefix = Vec::with_capacity(nvars);
    fill_descending(nvars, max_size, cap, &mut prefix, &mut out);
    out
}

fn fill_descending(
    nvars: usize,
    budget: u64,
    cap: u64,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if prefix.len() == nvars {
        out.push(Partition::from_valid(prefix.clone()));
        return;
    }
    let hi = cap.min(budget);
    for v in (0..=hi).rev() {
        prefix.push(v as u32);
        fill_descending(nvars, budget - v, v, prefix, out);
        prefix.pop();
    }
}
