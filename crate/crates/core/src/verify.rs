//! Exhaustive verification sweeps over desk-scale shape families.
//!
//! Each identity the library implements comes with a sweep that enumerates
//! every instance inside configurable bounds, evaluates both sides exactly,
//! and reports the instances where they differ. A passing sweep is a
//! machine check of the identity on the whole family, not a sample of it;
//! the one place randomness enters (extra non-contained shape pairs for the
//! oracle comparison) is seeded and therefore reproducible.
//!
//! Sweeps run their cases through [`rayon`] when failures are being
//! collected. The fail-fast mode trades that parallelism for a
//! deterministic stop at the first failing case.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::lambda::check_theorem3;
use crate::nabla::{check_theorem1, corollary2_sides, nabla, nabla_h_sides};
use crate::ring::{MultiPoly, QPoly};
use crate::shapes::{partitions_bounded, Partition, SkewShape};
use crate::symfunc::{det_poly, jt_matrix, skew_schur, ssyt_skew_schur, HIndexMatrix};

/// The statements the sweep engine knows how to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// Corner expansion of the diagonal derivative on skew Schur
    /// polynomials, all weight splits `a + b = N - 1`.
    Theorem1,
    /// Equality of the unweighted corner sums.
    Corollary2,
    /// `nabla(h_n) = (n + N - 1) h_{n-1}`.
    LemmaNablaH,
    /// The Jacobi–Trudi determinant and its row- and column-shifted
    /// variants against the tableau sum, including the vanishing cases.
    DetLemmas,
    /// Corner expansion for `nabla_q` with symbolic `q` coefficients.
    Theorem3,
    /// Determinant route against the tableau route for skew Schur
    /// polynomials.
    OracleEquiv,
    /// The weight split `(a, b) = (N, -1)` kills every inner corner term,
    /// leaving a pure outer-corner expansion.
    Weigandt,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Theorem1 => "theorem1",
            Identity::Corollary2 => "corollary2",
            Identity::LemmaNablaH => "lemma_nabla_h",
            Identity::DetLemmas => "det_lemmas",
            Identity::Theorem3 => "theorem3",
            Identity::OracleEquiv => "oracle_equiv",
            Identity::Weigandt => "weigandt",
        }
    }

    /// Every identity, in the order the names are documented.
    pub fn all() -> [Identity; 7] {
        [
            Identity::Theorem1,
            Identity::Corollary2,
            Identity::LemmaNablaH,
            Identity::DetLemmas,
            Identity::Theorem3,
            Identity::OracleEquiv,
            Identity::Weigandt,
        ]
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity, Error> {
        Identity::all()
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let known = Identity::all().map(Identity::name).join(", ");
                Error::Parse(format!("unknown identity '{s}', expected one of: {known}"))
            })
    }
}

/// Bounds and options for one sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub identity: Identity,
    /// Largest variable count to sweep. For [`Identity::Theorem3`] this
    /// bounds the partition lengths instead; the identity has no variable
    /// count.
    pub max_nvars: usize,
    /// Largest outer partition size. Also bounds the generator subscript
    /// for [`Identity::LemmaNablaH`].
    pub max_outer_size: u64,
    /// Values of `a` to sweep for [`Identity::Theorem1`]; `b` is forced by
    /// `a + b = N - 1`. Other identities ignore this list.
    pub a_values: Vec<i64>,
    /// Seed for the sampled non-contained pairs in
    /// [`Identity::OracleEquiv`]. Everything else is exhaustive.
    pub seed: u64,
    /// Stop at the first failing case instead of collecting all failures.
    pub fail_fast: bool,
}

impl SweepConfig {
    pub fn new(identity: Identity, max_nvars: usize, max_outer_size: u64) -> SweepConfig {
        SweepConfig {
            identity,
            max_nvars,
            max_outer_size,
            a_values: Vec::new(),
            seed: 0,
            fail_fast: false,
        }
    }

    /// Rejects bounds outside the supported desk scale and option
    /// combinations that cannot run.
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_nvars == 0 || self.max_nvars > 6 {
            return Err(Error::InvalidConfig(format!(
                "max_nvars must be between 1 and 6, got {}",
                self.max_nvars
            )));
        }
        if self.max_outer_size == 0 || self.max_outer_size > 12 {
            return Err(Error::InvalidConfig(format!(
                "max_outer_size must be between 1 and 12, got {}",
                self.max_outer_size
            )));
        }
        if self.identity == Identity::Theorem1 && self.a_values.is_empty() {
            return Err(Error::InvalidConfig(
                "the theorem1 sweep needs at least one value of a".to_string(),
            ));
        }
        Ok(())
    }
}

/// One case whose two sides disagreed, with both sides in canonical text
/// form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of a sweep: the configuration it ran under, how many cases
/// it checked, and every disagreement it found.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub cases_run: u64,
    pub failures: Vec<FailureRecord>,
    pub wall_time_s: f64,
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    identity: &'a str,
    max_nvars: usize,
    max_outer_size: u64,
    a_values: &'a [i64],
    seed: u64,
    cases_run: u64,
    failures: &'a [FailureRecord],
    wall_time_s: f64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Multi-line human-readable form. Failure listings are capped; the
    /// JSON form always carries all of them.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("identity: {}\n", self.config.identity));
        out.push_str(&format!("max nvars: {}\n", self.config.max_nvars));
        out.push_str(&format!("max outer size: {}\n", self.config.max_outer_size));
        if !self.config.a_values.is_empty() {
            let vals: Vec<String> = self.config.a_values.iter().map(|a| a.to_string()).collect();
            out.push_str(&format!("a values: {}\n", vals.join(",")));
        }
        out.push_str(&format!("seed: {}\n", self.config.seed));
        out.push_str(&format!("cases run: {}\n", self.cases_run));
        out.push_str(&format!("failures: {}\n", self.failures.len()));
        for f in self.failures.iter().take(20) {
            out.push_str(&format!("  case: {}\n    lhs: {}\n    rhs: {}\n", f.case, f.lhs, f.rhs));
        }
        if self.failures.len() > 20 {
            out.push_str(&format!("  ({} further failures omitted)\n", self.failures.len() - 20));
        }
        out.push_str(&format!("wall time: {:.3}s", self.wall_time_s));
        out
    }

    pub fn to_json_string(&self) -> String {
        let doc = SweepDoc {
            identity: self.config.identity.name(),
            max_nvars: self.config.max_nvars,
            max_outer_size: self.config.max_outer_size,
            a_values: &self.config.a_values,
            seed: self.config.seed,
            cases_run: self.cases_run,
            failures: &self.failures,
            wall_time_s: self.wall_time_s,
        };
        serde_json::to_string(&doc).expect("report JSON serialization cannot fail")
    }
}

/// One unit of sweep work. A case may verify several instances at once
/// (the theorem1 case reuses its determinants across all values of `a`),
/// so evaluation reports how many instances it covered.
#[derive(Debug, Clone)]
enum SweepCase {
    Theorem1 { outer: Partition, inner: Partition, a_values: Vec<i64> },
    Corollary2 { outer: Partition, inner: Partition },
    NablaH { nvars: usize, n: i64 },
    JtDet { outer: Partition, inner: Partition },
    JtDetRowShift { outer: Partition, inner: Partition, k: usize },
    JtDetColShift { outer: Partition, inner: Partition, k: usize },
    Theorem3 { outer: Partition, inner: Partition, a: QPoly, b: QPoly },
    Oracle { outer: Partition, inner: Partition },
    Weigandt { outer: Partition },
}

/// Runs the configured sweep to completion and reports every disagreement.
///
/// The case list is enumerated deterministically from the configuration, so
/// two runs with equal configurations check the same cases in the same
/// order and differ at most in wall time.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, Error> {
    config.validate()?;
    let start = Instant::now();
    let cases = enumerate_cases(config);
    let mut cases_run = 0u64;
    let mut failures = Vec::new();
    if config.fail_fast {
        for case in &cases {
            let (count, mut found) = run_case(case);
            cases_run += count;
            if !found.is_empty() {
                found.truncate(1);
                failures = found;
                break;
            }
        }
    } else {
        let results: Vec<(u64, Vec<FailureRecord>)> = cases.par_iter().map(run_case).collect();
        for (count, mut found) in results {
            cases_run += count;
            failures.append(&mut found);
        }
    }
    Ok(SweepReport {
        config: config.clone(),
        cases_run,
        failures,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// All `(outer, inner)` pairs with the given variable count: outer bounded
/// by size, inner bounded by the outer size and first part. Containment is
/// deliberately not required; the identities hold for non-contained pairs
/// too and the sweeps must witness that.
fn shape_pairs(nvars: usize, max_outer_size: u64) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for outer in partitions_bounded(nvars, max_outer_size, None) {
        let cap = outer.parts().first().copied().unwrap_or(0);
        for inner in partitions_bounded(nvars, outer.size(), Some(cap)) {
            out.push((outer.clone(), inner));
        }
    }
    out
}

fn enumerate_cases(config: &SweepConfig) -> Vec<SweepCase> {
    let mut cases = Vec::new();
    match config.identity {
        Identity::Theorem1 => {
            for n in 1..=config.max_nvars {
                for (outer, inner) in shape_pairs(n, config.max_outer_size) {
                    cases.push(SweepCase::Theorem1 {
                        outer,
                        inner,
                        a_values: config.a_values.clone(),
                    });
                }
            }
        }
        Identity::Corollary2 => {
            for n in 1..=config.max_nvars {
                for (outer, inner) in shape_pairs(n, config.max_outer_size) {
                    cases.push(SweepCase::Corollary2 { outer, inner });
                }
            }
        }
        Identity::LemmaNablaH => {
            for nvars in 0..=config.max_nvars {
                for n in -2..=(config.max_outer_size as i64) {
                    cases.push(SweepCase::NablaH { nvars, n });
                }
            }
        }
        Identity::DetLemmas => {
            for n in 1..=config.max_nvars {
                for (outer, inner) in shape_pairs(n, config.max_outer_size) {
                    cases.push(SweepCase::JtDet { outer: outer.clone(), inner: inner.clone() });
                    for k in 1..=n {
                        cases.push(SweepCase::JtDetRowShift {
                            outer: outer.clone(),
                            inner: inner.clone(),
                            k,
                        });
                        cases.push(SweepCase::JtDetColShift {
                            outer: outer.clone(),
                            inner: inner.clone(),
                            k,
                        });
                    }
                }
            }
        }
        Identity::Theorem3 => {
            let q = QPoly::q();
            let qm1 = &q - &QPoly::one();
            let splits = [
                (QPoly::zero(), qm1.clone()),
                (qm1, QPoly::zero()),
                (q, QPoly::constant(-1)),
            ];
            for outer in partitions_bounded(config.max_nvars, config.max_outer_size, None) {
                let cap = outer.parts().first().copied().unwrap_or(0);
                for inner in partitions_bounded(config.max_nvars, outer.size(), Some(cap)) {
                    if !outer.contains(&inner) {
                        continue;
                    }
                    for (a, b) in &splits {
                        cases.push(SweepCase::Theorem3 {
                            outer: outer.clone(),
                            inner: inner.clone(),
                            a: a.clone(),
                            b: b.clone(),
                        });
                    }
                }
            }
        }
        Identity::OracleEquiv => {
            let mut skipped = Vec::new();
            for n in 1..=config.max_nvars {
                for (outer, inner) in shape_pairs(n, config.max_outer_size) {
                    if outer.contains(&inner) {
                        cases.push(SweepCase::Oracle { outer, inner });
                    } else {
                        skipped.push(SweepCase::Oracle { outer, inner });
                    }
                }
            }
            // Both routes agree on non-contained shapes too (both give
            // zero); a seeded sample keeps that covered without doubling
            // the sweep.
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            skipped.shuffle(&mut rng);
            skipped.truncate(30);
            cases.extend(skipped);
        }
        Identity::Weigandt => {
            for n in 1..=config.max_nvars {
                for outer in partitions_bounded(n, config.max_outer_size, None) {
                    cases.push(SweepCase::Weigandt { outer });
                }
            }
        }
    }
    cases
}

/// Evaluates one case. Returns how many instances it covered and the
/// disagreements among them.
fn run_case(case: &SweepCase) -> (u64, Vec<FailureRecord>) {
    match case {
        SweepCase::Theorem1 { outer, inner, a_values } => theorem1_case(outer, inner, a_values),
        SweepCase::Corollary2 { outer, inner } => {
            let shape = SkewShape::new(outer.clone(), inner.clone());
            let (lhs, rhs) = corollary2_sides(&shape);
            (1, disagreement(format!("corollary2 shape={shape}"), &lhs, &rhs))
        }
        SweepCase::NablaH { nvars, n } => {
            let (lhs, rhs) = nabla_h_sides(*n, *nvars);
            (1, disagreement(format!("lemma_nabla_h nvars={nvars} n={n}"), &lhs, &rhs))
        }
        SweepCase::JtDet { outer, inner } => {
            let shape = SkewShape::new(outer.clone(), inner.clone());
            let det = det_poly(&jt_matrix(&shape).to_poly_matrix(shape.nvars()));
            let want = ssyt_skew_schur(&shape);
            (1, disagreement(format!("jt_det shape={shape}"), &det, &want))
        }
        SweepCase::JtDetRowShift { outer, inner, k } => {
            let nvars = outer.nvars();
            let shifted = outer.content().minus_unit(*k);
            let mat = HIndexMatrix::from_contents(&shifted, &inner.content());
            let det = det_poly(&mat.to_poly_matrix(nvars));
            let (want, target) = match outer.remove_box(*k) {
                Some(shrunk) => {
                    let shape = SkewShape::new(shrunk, inner.clone());
                    (ssyt_skew_schur(&shape), format!("{shape}"))
                }
                None => (MultiPoly::zero(nvars), "zero".to_string()),
            };
            let label =
                format!("jt_det_row_shift outer={outer} inner={inner} k={k} target={target}");
            (1, disagreement(label, &det, &want))
        }
        SweepCase::JtDetColShift { outer, inner, k } => {
            let nvars = outer.nvars();
            let shifted = inner.content().plus_unit(*k);
            let mat = HIndexMatrix::from_contents(&outer.content(), &shifted);
            let det = det_poly(&mat.to_poly_matrix(nvars));
            let (want, target) = match inner.add_box(*k) {
                Some(grown) => {
                    let shape = SkewShape::new(outer.clone(), grown);
                    (ssyt_skew_schur(&shape), format!("{shape}"))
                }
                None => (MultiPoly::zero(nvars), "zero".to_string()),
            };
            let label =
                format!("jt_det_col_shift outer={outer} inner={inner} k={k} target={target}");
            (1, disagreement(label, &det, &want))
        }
        SweepCase::Theorem3 { outer, inner, a, b } => {
            let report = check_theorem3(outer, inner, a, b)
                .expect("enumerated weights satisfy a + b = q - 1");
            let mut failures = Vec::new();
            if !report.verdict {
                failures.push(FailureRecord {
                    case: format!(
                        "theorem3 outer={outer} inner={inner} a={} b={}",
                        a.to_text(),
                        b.to_text()
                    ),
                    lhs: report.lhs.to_text(),
                    rhs: report.rhs.to_text(),
                });
            }
            (1, failures)
        }
        SweepCase::Oracle { outer, inner } => {
            let shape = SkewShape::new(outer.clone(), inner.clone());
            let det = det_poly(&jt_matrix(&shape).to_poly_matrix(shape.nvars()));
            let tab = ssyt_skew_schur(&shape);
            (1, disagreement(format!("oracle_equiv shape={shape}"), &det, &tab))
        }
        SweepCase::Weigandt { outer } => weigandt_case(outer),
    }
}

/// Checks the corner expansion for every listed `a` on one shape. The skew
/// Schur determinants do not depend on `a`, so they are computed once and
/// reweighted per instance.
fn theorem1_case(outer: &Partition, inner: &Partition, a_values: &[i64]) -> (u64, Vec<FailureRecord>) {
    let shape = SkewShape::new(outer.clone(), inner.clone());
    let nvars = shape.nvars();
    let lhs = nabla(&skew_schur(&shape));
    let lcont = outer.content();
    let mcont = inner.content();
    let mut outer_moves: Vec<(i64, MultiPoly)> = Vec::new();
    let mut inner_moves: Vec<(i64, MultiPoly)> = Vec::new();
    for i in 1..=nvars {
        if let Some(shrunk) = outer.remove_box(i) {
            let factor = skew_schur(&SkewShape::new(shrunk, inner.clone()));
            outer_moves.push((lcont.at(i), factor));
        }
        if let Some(grown) = inner.add_box(i) {
            let factor = skew_schur(&SkewShape::new(outer.clone(), grown));
            inner_moves.push((mcont.at(i), factor));
        }
    }
    let mut failures = Vec::new();
    for &a in a_values {
        let b = nvars as i64 - 1 - a;
        let mut rhs = MultiPoly::zero(nvars);
        for (diag, factor) in &outer_moves {
            rhs += &(factor * (diag + a));
        }
        for (diag, factor) in &inner_moves {
            rhs += &(factor * (b - diag));
        }
        if lhs != rhs {
            failures.push(FailureRecord {
                case: format!("theorem1 shape={shape} a={a} b={b}"),
                lhs: lhs.to_text(),
                rhs: rhs.to_text(),
            });
        }
    }
    (a_values.len() as u64, failures)
}

/// At `(a, b) = (N, -1)` every inner corner weight is `b - m_i = -1 + i -
/// inner_i`, which vanishes on the one addable row of the zero inner
/// partition. The case checks the two-sided verdict, that each inner term
/// dies through a zero weight or a zero Schur factor, and that the inner
/// sum as a whole is the zero polynomial.
fn weigandt_case(outer: &Partition) -> (u64, Vec<FailureRecord>) {
    let nvars = outer.nvars();
    let shape = SkewShape::straight(outer.clone());
    let report = check_theorem1(&shape, nvars as i64, -1)
        .expect("the split (N, -1) satisfies a + b = N - 1");
    let mut failures = Vec::new();
    if !report.verdict {
        failures.push(FailureRecord {
            case: format!("weigandt outer={outer}"),
            lhs: report.lhs.to_text(),
            rhs: report.rhs.to_text(),
        });
    }
    let mut inner_sum = MultiPoly::zero(nvars);
    for t in &report.inner_terms {
        let factor = skew_schur(&SkewShape::new(outer.clone(), t.partition.clone()));
        if t.coeff != 0 && !factor.is_zero() {
            failures.push(FailureRecord {
                case: format!("weigandt outer={outer} inner corner i={} survives", t.index),
                lhs: format!("coeff {}", t.coeff),
                rhs: "0".to_string(),
            });
        }
        inner_sum += &(&factor * t.coeff);
    }
    if !inner_sum.is_zero() {
        failures.push(FailureRecord {
            case: format!("weigandt outer={outer} inner sum"),
            lhs: inner_sum.to_text(),
            rhs: "0".to_string(),
        });
    }
    (1, failures)
}

fn disagreement(case: String, lhs: &MultiPoly, rhs: &MultiPoly) -> Vec<FailureRecord> {
    if lhs == rhs {
        Vec::new()
    } else {
        vec![FailureRecord { case, lhs: lhs.to_text(), rhs: rhs.to_text() }]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::all() {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        let err = "theorem9".parse::<Identity>();
        assert!(matches!(err, Err(Error::Parse(_))));
    }

    #[test]
    fn config_bounds_are_enforced() {
        let mut config = SweepConfig::new(Identity::Corollary2, 0, 4);
        assert!(matches!(config.validate(), Err(Error::InvalidConfig(_))));
        config.max_nvars = 7;
        assert!(matches!(config.validate(), Err(Error::InvalidConfig(_))));
        config.max_nvars = 2;
        config.max_outer_size = 0;
        assert!(matches!(config.validate(), Err(Error::InvalidConfig(_))));
        config.max_outer_size = 13;
        assert!(matches!(config.validate(), Err(Error::InvalidConfig(_))));
        config.max_outer_size = 4;
        assert!(config.validate().is_ok());
        let bare = SweepConfig::new(Identity::Theorem1, 2, 3);
        assert!(matches!(bare.validate(), Err(Error::InvalidConfig(_))));
        assert!(matches!(run_sweep(&bare), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn small_sweeps_pass_for_every_identity() {
        for identity in Identity::all() {
            let mut config = SweepConfig::new(identity, 2, 3);
            if identity == Identity::Theorem1 {
                config.a_values = vec![-1, 0, 2];
            }
            let report = run_sweep(&config).unwrap();
            assert!(report.passed(), "{identity} failed: {:#?}", report.failures);
            assert!(report.cases_run > 0, "{identity} ran no cases");
        }
    }

    #[test]
    fn theorem1_counts_one_case_per_weight_choice() {
        let mut config = SweepConfig::new(Identity::Theorem1, 2, 2);
        config.a_values = vec![0, 1, 5];
        let triple = run_sweep(&config).unwrap();
        config.a_values = vec![0];
        let single = run_sweep(&config).unwrap();
        assert_eq!(triple.cases_run, 3 * single.cases_run);
    }

    #[test]
    fn oracle_sweep_covers_the_documented_family() {
        let config = SweepConfig::new(Identity::OracleEquiv, 2, 4);
        let report = run_sweep(&config).unwrap();
        assert!(report.passed());
        // 15 contained pairs in one variable, 36 in two, plus the sampled
        // non-contained ones.
        assert!(report.cases_run >= 51, "only {} cases", report.cases_run);
    }

    #[test]
    fn sweeps_are_deterministic_modulo_wall_time() {
        let config = SweepConfig::new(Identity::DetLemmas, 2, 3);
        let first = run_sweep(&config).unwrap();
        let second = run_sweep(&config).unwrap();
        assert_eq!(first.cases_run, second.cases_run);
        assert_eq!(first.failures, second.failures);
    }

    #[test]
    fn fail_fast_changes_nothing_on_a_passing_sweep() {
        let mut config = SweepConfig::new(Identity::LemmaNablaH, 2, 4);
        let full = run_sweep(&config).unwrap();
        config.fail_fast = true;
        let fast = run_sweep(&config).unwrap();
        assert_eq!(full.cases_run, fast.cases_run);
        assert!(fast.passed());
    }

    #[test]
    fn report_serializations_expose_the_schema() {
        let mut config = SweepConfig::new(Identity::Theorem1, 1, 2);
        config.a_values = vec![0, 3];
        let report = run_sweep(&config).unwrap();
        let text = report.to_text();
        assert!(text.starts_with("identity: theorem1\n"));
        assert!(text.contains("a values: 0,3\n"));
        assert!(text.contains("failures: 0\n"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json_string()).unwrap();
        assert_eq!(json["identity"], "theorem1");
        assert_eq!(json["max_nvars"], 1);
        assert_eq!(json["max_outer_size"], 2);
        assert_eq!(json["a_values"], serde_json::json!([0, 3]));
        assert_eq!(json["seed"], 0);
        assert_eq!(json["failures"], serde_json::json!([]));
        assert!(json["cases_run"].as_u64().unwrap() > 0);
        assert!(json["wall_time_s"].is_number());
    }

    #[test]
    fn failure_records_serialize_their_three_fields() {
        let record = FailureRecord {
            case: "example case".to_string(),
            lhs: "x1".to_string(),
            rhs: "x2".to_string(),
        };
        let json = serde_json::to_string(&record).unwrap();
        assert_eq!(json, r#"{"case":"example case","lhs":"x1","rhs":"x2"}"#);
    }
}
