//! The diagonal derivative and the identities it satisfies.
//!
//! [`nabla`] is the sum of all first partial derivatives; it is the unique
//! derivation sending every variable to 1. Applied to a skew Schur
//! polynomial it expands as a weighted sum over corner boxes of the shape:
//! removing an outer corner in row `i` contributes weight `l_i + a`, adding
//! an inner corner in row `i` contributes `b - m_i`, where `l` and `m` are
//! the content vectors and `a + b = N - 1` is the one free choice. All of
//! that is captured by [`check_theorem1`]. Setting `a = N, b = -1` with an
//! empty inner partition kills the inner sum entirely, which is the
//! specialization the sweep suite calls `weigandt`.
//!
//! [`corollary2_sides`] drops the weights: the plain sums over removable
//! outer corners and addable inner corners agree. [`laplacian`] is the
//! second-order analogue of [`nabla`]; no corner formula is known for it,
//! and the one documented Schur expansion is pinned in the acceptance suite.

use serde::Serialize;

use crate::error::Error;
use crate::ring::{MultiPoly, PolyDoc};
use crate::shapes::SkewShape;
use crate::symfunc::{h, skew_schur};

/// The diagonal derivative: the sum of `d/dx_k` over all variables. With
/// zero variables this is the zero map.
pub fn nabla(p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for k in 1..=p.nvars() {
        out += &p.partial(k);
    }
    out
}

/// The diagonal Laplacian: the sum of `d²/dx_k²` over all variables.
pub fn laplacian(p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for k in 1..=p.nvars() {
        out += &p.partial(k).partial(k);
    }
    out
}

/// Both sides of the lowering identity for complete homogeneous
/// polynomials: `nabla(h_n)` on the left, `(n + N - 1) h_{n-1}` on the
/// right. Valid for every integer `n`, including `n <= 0` where both sides
/// vanish or are constants.
pub fn nabla_h_sides(n: i64, nvars: usize) -> (MultiPoly, MultiPoly) {
    let lhs = nabla(&h(n, nvars));
    let factor = n + nvars as i64 - 1;
    let rhs = &h(n - 1, nvars) * factor;
    (lhs, rhs)
}

/// True iff `nabla(h_n) = (n + N - 1) h_{n-1}` holds exactly.
pub fn nabla_h_check(n: i64, nvars: usize) -> bool {
    let (lhs, rhs) = nabla_h_sides(n, nvars);
    lhs == rhs
}

/// One corner box in the expansion of `nabla` on a skew shape: the row it
/// sits in, the diagonal it lies on (the content entry), its integer weight,
/// and the partition left after the move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerTerm {
    /// Row index, 1-based.
    pub index: usize,
    /// Content entry of that row: `part - index`.
    pub diagonal: i64,
    /// `diagonal + a` for outer corners, `b - diagonal` for inner corners.
    pub coeff: i64,
    /// The outer partition minus the box, or the inner partition plus it.
    pub partition: crate::shapes::Partition,
}

/// The right-hand side of the corner expansion, with the per-corner terms
/// that built it.
#[derive(Debug, Clone)]
pub struct Theorem1Rhs {
    pub rhs: MultiPoly,
    pub outer_terms: Vec<CornerTerm>,
    pub inner_terms: Vec<CornerTerm>,
}

/// A full two-sided evaluation of the corner expansion for one shape and one
/// weight choice. `verdict` is true iff `lhs == rhs` exactly; `a + b` always
/// equals `N - 1`.
#[derive(Debug, Clone)]
pub struct Theorem1Report {
    pub shape: SkewShape,
    pub a: i64,
    pub b: i64,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub outer_terms: Vec<CornerTerm>,
    pub inner_terms: Vec<CornerTerm>,
    pub verdict: bool,
}

fn validate_weights(nvars: usize, a: i64, b: i64) -> Result<(), Error> {
    let want = nvars as i64 - 1;
    if a + b != want {
        return Err(Error::ParameterConstraint(format!(
            "a + b must equal N - 1 = {want}, got {a} + {b} = {}",
            a + b
        )));
    }
    Ok(())
}

fn corner_terms(shape: &SkewShape, a: i64, b: i64) -> (Vec<CornerTerm>, Vec<CornerTerm>) {
    let n = shape.nvars();
    let lcont = shape.outer().content();
    let mcont = shape.inner().content();
    let mut outer_terms = Vec::new();
    let mut inner_terms = Vec::new();
    for i in 1..=n {
        if let Some(shrunk) = shape.outer().remove_box(i) {
            outer_terms.push(CornerTerm {
                index: i,
                diagonal: lcont.at(i),
                coeff: lcont.at(i) + a,
                partition: shrunk,
            });
        }
        if let Some(grown) = shape.inner().add_box(i) {
            inner_terms.push(CornerTerm {
                index: i,
                diagonal: mcont.at(i),
                coeff: b - mcont.at(i),
                partition: grown,
            });
        }
    }
    (outer_terms, inner_terms)
}

/// Evaluates the corner-expansion right-hand side
/// `sum (l_i + a) s_{(outer - e_i)/inner} + sum (b - m_i) s_{outer/(inner + e_i)}`
/// over the box moves that stay inside the partition lattice. Terms are
/// listed even when their weight or Schur factor is zero; they simply
/// contribute nothing to the sum.
///
/// Fails unless `a + b = N - 1`; the identity is false for other weights.
pub fn theorem1_rhs(shape: &SkewShape, a: i64, b: i64) -> Result<Theorem1Rhs, Error> {
    validate_weights(shape.nvars(), a, b)?;
    let (outer_terms, inner_terms) = corner_terms(shape, a, b);
    let mut rhs = MultiPoly::zero(shape.nvars());
    for t in &outer_terms {
        let factor = skew_schur(&SkewShape::new(t.partition.clone(), shape.inner().clone()));
        rhs += &(&factor * t.coeff);
    }
    for t in &inner_terms {
        let factor = skew_schur(&SkewShape::new(shape.outer().clone(), t.partition.clone()));
        rhs += &(&factor * t.coeff);
    }
    Ok(Theorem1Rhs { rhs, outer_terms, inner_terms })
}

/// Computes both sides of the corner expansion: `nabla` of the skew Schur
/// polynomial on the left, [`theorem1_rhs`] on the right.
pub fn check_theorem1(shape: &SkewShape, a: i64, b: i64) -> Result<Theorem1Report, Error> {
    let lhs = nabla(&skew_schur(shape));
    let Theorem1Rhs { rhs, outer_terms, inner_terms } = theorem1_rhs(shape, a, b)?;
    let verdict = lhs == rhs;
    Ok(Theorem1Report {
        shape: shape.clone(),
        a,
        b,
        lhs,
        rhs,
        outer_terms,
        inner_terms,
        verdict,
    })
}

/// The two unweighted corner sums: over removable outer boxes on the left,
/// addable inner boxes on the right. They are equal for every shape.
pub fn corollary2_sides(shape: &SkewShape) -> (MultiPoly, MultiPoly) {
    let n = shape.nvars();
    let mut left = MultiPoly::zero(n);
    let mut right = MultiPoly::zero(n);
    for i in 1..=n {
        if let Some(shrunk) = shape.outer().remove_box(i) {
            left += &skew_schur(&SkewShape::new(shrunk, shape.inner().clone()));
        }
        if let Some(grown) = shape.inner().add_box(i) {
            right += &skew_schur(&SkewShape::new(shape.outer().clone(), grown));
        }
    }
    (left, right)
}

#[derive(Serialize)]
struct CornerDoc {
    index: usize,
    diagonal: i64,
    coeff: i64,
    partition: Vec<u32>,
}

impl CornerDoc {
    fn from_term(t: &CornerTerm) -> CornerDoc {
        CornerDoc {
            index: t.index,
            diagonal: t.diagonal,
            coeff: t.coeff,
            partition: t.partition.parts().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct Theorem1Doc {
    outer: Vec<u32>,
    inner: Vec<u32>,
    nvars: usize,
    a: i64,
    b: i64,
    lhs: PolyDoc,
    rhs: PolyDoc,
    outer_terms: Vec<CornerDoc>,
    inner_terms: Vec<CornerDoc>,
    verdict: bool,
}

impl Theorem1Report {
    /// Multi-line human-readable form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("shape: {}  nvars: {}\n", self.shape, self.shape.nvars()));
        out.push_str(&format!("a: {}  b: {}\n", self.a, self.b));
        out.push_str(&format!("lhs: {}\n", self.lhs));
        out.push_str(&format!("rhs: {}\n", self.rhs));
        for t in &self.outer_terms {
            out.push_str(&format!(
                "outer corner i={} diagonal={} coeff={} -> {}\n",
                t.index, t.diagonal, t.coeff, t.partition
            ));
        }
        for t in &self.inner_terms {
            out.push_str(&format!(
                "inner corner i={} diagonal={} coeff={} -> {}\n",
                t.index, t.diagonal, t.coeff, t.partition
            ));
        }
        out.push_str(&format!("verdict: {}", self.verdict));
        out
    }

    /// Single JSON document with both sides, the corner terms, and the
    /// verdict.
    pub fn to_json_string(&self) -> String {
        let doc = Theorem1Doc {
            outer: self.shape.outer().parts().to_vec(),
            inner: self.shape.inner().parts().to_vec(),
            nvars: self.shape.nvars(),
            a: self.a,
            b: self.b,
            lhs: PolyDoc::from_poly(&self.lhs),
            rhs: PolyDoc::from_poly(&self.rhs),
            outer_terms: self.outer_terms.iter().map(CornerDoc::from_term).collect(),
            inner_terms: self.inner_terms.iter().map(CornerDoc::from_term).collect(),
            verdict: self.verdict,
        };
        serde_json::to_string(&doc).expect("report JSON serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partitions_bounded, Partition};
    use crate::symfunc::schur;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn pt(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn shape(outer: &[i64], inner: &[i64]) -> SkewShape {
        SkewShape::new(pt(outer), pt(inner))
    }

    #[test]
    fn nabla_small_cases() {
        // nabla(x1*x2) = x1 + x2
        let p = MultiPoly::monomial(2, vec![1, 1], BigInt::from(1));
        assert_eq!(nabla(&p).to_text(), "x1 + x2");
        // nabla(h_1) = N
        for n in 1..=4usize {
            assert_eq!(nabla(&h(1, n)), MultiPoly::constant(n, n as i64));
        }
        // nabla(s_(2,1)) at N = 2
        assert_eq!(nabla(&schur(&pt(&[2, 1]))).to_text(), "x1^2 + 4*x1*x2 + x2^2");
        // Zero variables: nabla is the zero map.
        assert_eq!(nabla(&MultiPoly::constant(0, 7)), MultiPoly::zero(0));
    }

    #[test]
    fn laplacian_small_cases() {
        let x1sq = MultiPoly::monomial(2, vec![2, 0], BigInt::from(1));
        assert_eq!(laplacian(&x1sq), MultiPoly::constant(2, 2));
        let x1x2 = MultiPoly::monomial(2, vec![1, 1], BigInt::from(1));
        assert!(laplacian(&x1x2).is_zero());
        assert_eq!(laplacian(&schur(&pt(&[2, 0]))), MultiPoly::constant(2, 4));
    }

    #[test]
    fn h_lowering_identity_holds_for_small_parameters() {
        for nvars in 0..=3usize {
            for n in -2..=6i64 {
                assert!(nabla_h_check(n, nvars), "failed at n={n}, nvars={nvars}");
            }
        }
    }

    #[test]
    fn corner_expansion_matches_the_worked_example() {
        // N=3, outer (3,2,1), inner (1,1,0): contents l=(2,0,-2), m=(0,-1,-3).
        let sh = shape(&[3, 2, 1], &[1, 1, 0]);
        for (a, b) in [(2i64, 0i64), (3, -1), (0, 2)] {
            let rep = check_theorem1(&sh, a, b).unwrap();
            assert!(rep.verdict, "verdict false at a={a}, b={b}");
            let outer: Vec<(usize, i64, i64, &[u32])> = rep
                .outer_terms
                .iter()
                .map(|t| (t.index, t.diagonal, t.coeff, t.partition.parts()))
                .collect();
            assert_eq!(
                outer,
                vec![
                    (1, 2, 2 + a, &[2, 2, 1][..]),
                    (2, 0, a, &[3, 1, 1][..]),
                    (3, -2, -2 + a, &[3, 2, 0][..]),
                ]
            );
            let inner: Vec<(usize, i64, i64, &[u32])> = rep
                .inner_terms
                .iter()
                .map(|t| (t.index, t.diagonal, t.coeff, t.partition.parts()))
                .collect();
            assert_eq!(
                inner,
                vec![(1, 0, b, &[2, 1, 0][..]), (3, -3, b + 3, &[1, 1, 1][..])]
            );
            assert!(rep.inner_terms.iter().all(|t| t.index != 2), "i=2 has no addable box");
        }
    }

    #[test]
    fn weight_validation_is_strict() {
        let sh = shape(&[2, 1], &[0, 0]);
        assert!(matches!(check_theorem1(&sh, 1, 1), Err(Error::ParameterConstraint(_))));
        assert!(matches!(theorem1_rhs(&sh, 0, 0), Err(Error::ParameterConstraint(_))));
        assert!(check_theorem1(&sh, 3, -2).is_ok());
    }

    #[test]
    fn rhs_of_a_straight_shape_matches_the_hand_expansion() {
        // outer (2,1), inner 0, N=2, a=2, b=-1: rhs = 3 s_(1,1) + s_(2,0),
        // and the lone inner weight b - m_1 vanishes.
        let sh = shape(&[2, 1], &[0, 0]);
        let r = theorem1_rhs(&sh, 2, -1).unwrap();
        assert_eq!(r.rhs.to_text(), "x1^2 + 4*x1*x2 + x2^2");
        assert_eq!(r.inner_terms.len(), 1);
        assert_eq!(r.inner_terms[0].coeff, 0);
        let rep = check_theorem1(&sh, 2, -1).unwrap();
        assert!(rep.verdict);
    }

    #[test]
    fn zero_shape_rhs_vanishes() {
        let sh = SkewShape::new(Partition::zero(3), Partition::zero(3));
        let r = theorem1_rhs(&sh, 3, -1).unwrap();
        assert!(r.rhs.is_zero());
        assert!(r.outer_terms.is_empty());
        assert_eq!(r.inner_terms.len(), 1);
        assert_eq!(r.inner_terms[0].coeff, 0);
    }

    #[test]
    fn non_contained_shapes_check_out_with_both_sides_zero() {
        let sh = shape(&[1, 0], &[2, 0]);
        let rep = check_theorem1(&sh, 1, 0).unwrap();
        assert!(rep.lhs.is_zero());
        assert!(rep.rhs.is_zero());
        assert!(rep.verdict);
    }

    #[test]
    fn rhs_is_independent_of_the_weight_split() {
        for nvars in 1..=3usize {
            for outer in partitions_bounded(nvars, 4, None) {
                for inner in partitions_bounded(nvars, outer.size(), Some(4)) {
                    let sh = SkewShape::new(outer.clone(), inner);
                    let base = theorem1_rhs(&sh, 0, nvars as i64 - 1).unwrap().rhs;
                    for a in -2..=(nvars as i64 + 2) {
                        let r = theorem1_rhs(&sh, a, nvars as i64 - 1 - a).unwrap();
                        assert_eq!(r.rhs, base, "weight split a={a} changes rhs on {sh}");
                    }
                }
            }
        }
    }

    #[test]
    fn weigandt_specialization_kills_the_inner_sum() {
        for nvars in 1..=3usize {
            for outer in partitions_bounded(nvars, 5, None) {
                let sh = SkewShape::straight(outer);
                let rep = check_theorem1(&sh, nvars as i64, -1).unwrap();
                assert!(rep.verdict);
                assert!(rep.inner_terms.iter().all(|t| t.coeff == 0));
            }
        }
    }

    #[test]
    fn corollary_sides_agree_on_a_hand_case_and_a_small_sweep() {
        let (l, r) = corollary2_sides(&shape(&[2, 1], &[1, 0]));
        assert_eq!(l.to_text(), "2*x1 + 2*x2");
        assert_eq!(l, r);
        for outer in partitions_bounded(2, 4, None) {
            for inner in partitions_bounded(2, 4, None) {
                let sh = SkewShape::new(outer.clone(), inner);
                let (l, r) = corollary2_sides(&sh);
                assert_eq!(l, r, "sides differ on {sh}");
            }
        }
    }

    #[test]
    fn report_serializations_contain_both_sides() {
        let rep = check_theorem1(&shape(&[2, 1], &[0, 0]), 2, -1).unwrap();
        let text = rep.to_text();
        assert!(text.contains("lhs: x1^2 + 4*x1*x2 + x2^2"));
        assert!(text.contains("verdict: true"));
        let json = rep.to_json_string();
        assert!(json.starts_with(r#"{"outer":[2,1],"inner":[0,0],"nvars":2,"a":2,"b":-1,"#));
        assert!(json.contains(r#""verdict":true"#));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["outer_terms"][0]["coeff"], 3);
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
        let term = (proptest::collection::vec(0u32..3, nvars), -5i64..=5);
        proptest::collection::vec(term, 0..4).prop_map(move |ts| {
            MultiPoly::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn nabla_is_a_derivation(f in arb_poly(3), g in arb_poly(3)) {
            let lhs = nabla(&(&f * &g));
            let rhs = &(&nabla(&f) * &g) + &(&f * &nabla(&g));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn nabla_lowers_homogeneous_degree_by_one(exp in proptest::collection::vec(0u32..4, 3)) {
            let deg: u32 = exp.iter().sum();
            let p = MultiPoly::monomial(3, exp, BigInt::from(1));
            let d = nabla(&p);
            prop_assert!(d.is_homogeneous());
            if !d.is_zero() {
                prop_assert_eq!(d.total_degree(), Some(deg - 1));
            }
        }
    }
}
