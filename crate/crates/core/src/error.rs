//! Error type shared across the crate.
//!
//! Errors cover data that callers can get wrong: malformed partitions, text
//! that fails to parse, operator parameters that violate a stated constraint,
//! and expansion requests on non-symmetric input. Violations of internal
//! contracts (mismatched variable counts, out-of-range indices, inexact
//! division inside the fraction-free determinant) are bugs, not user errors,
//! and panic instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A part list is not weakly decreasing. `pos` is the first offending
    /// index (zero-based): `parts[pos] < parts[pos + 1]`.
    #[error("not a partition: parts[{pos}] = {prev} < {next} = parts[{pos_next}]", pos_next = pos + 1)]
    NotWeaklyDecreasing { pos: usize, prev: i64, next: i64 },

    /// A part list contains a negative entry at `pos` (zero-based).
    #[error("not a partition: parts[{pos}] = {value} is negative")]
    NegativePart { pos: usize, value: i64 },

    /// An operator parameter violates its constraint, e.g. weights with
    /// `a + b != N - 1`.
    #[error("parameter constraint violated: {0}")]
    ParameterConstraint(String),

    /// Schur-basis expansion was asked for a polynomial that is not
    /// symmetric: the exponent of a lex-leading term is not weakly
    /// decreasing, so no Schur polynomial can cancel it.
    #[error("not symmetric: leading exponent {exp:?} is not weakly decreasing")]
    NotSymmetric { exp: Vec<u32> },

    /// Text or JSON input failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// A sweep configuration is unusable, e.g. an empty weight list for an
    /// identity that needs one.
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
}
