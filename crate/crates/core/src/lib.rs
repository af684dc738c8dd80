//! Exact symbolic computation with skew Schur polynomials in finitely many
//! variables, the diagonal derivative that acts on them, and the lift of that
//! derivative to the ring of symmetric functions.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers
//! (or integer polynomials in the formal parameter `q`), and every identity
//! check compares canonical forms for literal equality. There is no floating
//! point anywhere in this crate.
//!
//! Module layout, bottom up:
//!
//! * [`ring`] — sparse multivariate polynomials over the integers, plus
//!   univariate polynomials in `q`.
//! * [`shapes`] — integer partitions with a fixed number of parts, skew
//!   shapes, and content vectors.
//! * [`symfunc`] — complete homogeneous symmetric polynomials, Jacobi–Trudi
//!   determinants, a tableau-based oracle, and Schur-basis expansion.
//! * [`nabla`] — the diagonal derivative, the diagonal Laplacian, and the
//!   corner-box expansion identities they satisfy.
//! * [`lambda`] — the symmetric-function ring over `Z[q]` in the h-basis and
//!   the q-weighted lowering operator that specializes to the diagonal
//!   derivative.
//! * [`verify`] — exhaustive desk-scale sweeps over all of the above.

pub mod error;
pub mod lambda;
pub mod nabla;
pub mod ring;
pub mod shapes;
pub mod symfunc;
pub mod verify;

pub use error::Error;
