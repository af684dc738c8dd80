//! Acceptance gate: every identity the library ships is checked at its
//! documented desk-scale bounds, one line of output per criterion. The
//! binary exits nonzero if any criterion fails, so `cargo test` treats the
//! whole gate as one test.

use std::time::Instant;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nablaschur::lambda::{nabla_q, specialize, LambdaElement};
use nablaschur::nabla::{check_theorem1, laplacian, nabla};
use nablaschur::ring::{MultiPoly, QPoly};
use nablaschur::shapes::{Partition, SkewShape};
use nablaschur::symfunc::{det_poly, det_poly_leibniz, expand_schur_basis, schur};
use nablaschur::verify::{run_sweep, Identity, SweepConfig};

fn main() {
    let mut ok = true;
    ok &= criterion(1, "lowering rule on the h generators, n in -2..=10, N in 0..=5", || {
        sweep(Identity::LemmaNablaH, 5, 10, &[], Some(5.0))
    });
    ok &= criterion(2, "corner expansion, N <= 4, |outer| <= 8, a in {-2,0,..,6}", || {
        sweep(Identity::Theorem1, 4, 8, &[-2, 0, 1, 2, 3, 4, 5, 6], Some(300.0))
    });
    ok &= criterion(3, "unweighted corner sums, N <= 4, |outer| <= 8", || {
        sweep(Identity::Corollary2, 4, 8, &[], Some(120.0))
    });
    ok &= criterion(4, "pure outer-corner expansion at (a,b) = (N,-1), N <= 4, |outer| <= 8", || {
        sweep(Identity::Weigandt, 4, 8, &[], None)
    });
    ok &= criterion(5, "frozen corner data for (3,2,1)/(1,1,0) at N = 3", worked_example);
    ok &= criterion(6, "determinant lemmas with shifted rows and columns, N <= 3, |outer| <= 6", || {
        sweep(Identity::DetLemmas, 3, 6, &[], None)
    });
    ok &= criterion(7, "determinant route equals tableau route, N <= 4, |outer| <= 8", || {
        sweep(Identity::OracleEquiv, 4, 8, &[], Some(300.0))
    });
    ok &= criterion(8, "laplacian of s_(5,3,0) at N = 3 contains 2*s_(2,2,2)", laplacian_coefficient);
    ok &= criterion(9, "symbolic-q corner expansion, |outer| <= 6, length <= 3", || {
        sweep(Identity::Theorem3, 3, 6, &[], Some(120.0))
    });
    ok &= criterion(10, "evaluation commutes with the q-lowering derivation", commutation_samples);
    ok &= criterion(11, "fraction-free and permutation determinants agree", determinant_backends);
    ok &= criterion(12, "diagonal derivative satisfies the multi-factor product rule", product_rule_samples);
    if ok {
        println!("acceptance: all 12 criteria passed");
        std::process::exit(0);
    }
    println!("acceptance: at least one criterion failed");
    std::process::exit(1);
}

fn criterion(number: u32, label: &str, check: impl FnOnce() -> Result<String, String>) -> bool {
    let start = Instant::now();
    let result = check();
    let secs = start.elapsed().as_secs_f64();
    match result {
        Ok(detail) => {
            println!("PASS criterion {number}: {label} ({detail}, {secs:.2}s)");
            true
        }
        Err(detail) => {
            println!("FAIL criterion {number}: {label} ({detail}, {secs:.2}s)");
            false
        }
    }
}

/// Runs one sweep and folds its outcome, including the runtime budget when
/// one is documented, into the criterion result.
fn sweep(
    identity: Identity,
    max_nvars: usize,
    max_outer_size: u64,
    a_values: &[i64],
    budget_s: Option<f64>,
) -> Result<String, String> {
    let mut config = SweepConfig::new(identity, max_nvars, max_outer_size);
    config.a_values = a_values.to_vec();
    let report = run_sweep(&config).map_err(|e| e.to_string())?;
    if !report.passed() {
        let first = &report.failures[0];
        return Err(format!(
            "{} of {} cases failed, first: {} lhs={} rhs={}",
            report.failures.len(),
            report.cases_run,
            first.case,
            first.lhs,
            first.rhs
        ));
    }
    if let Some(budget) = budget_s {
        if report.wall_time_s > budget {
            return Err(format!(
                "{} cases passed but took {:.2}s, budget {budget}s",
                report.cases_run, report.wall_time_s
            ));
        }
    }
    Ok(format!("{} cases", report.cases_run))
}

/// The shape (3,2,1)/(1,1,0) in three variables has outer corners in rows
/// 1, 2, 3 on diagonals 2, 0, -2 and inner corners in rows 1 and 3 only,
/// on diagonals 0 and -3. The expansion must reproduce those term lists
/// exactly, with weights `diagonal + a` and `b - diagonal`, for several
/// splits of a + b = 2.
fn worked_example() -> Result<String, String> {
    let outer = Partition::new(&[3, 2, 1]).expect("valid partition");
    let inner = Partition::new(&[1, 1, 0]).expect("valid partition");
    let shape = SkewShape::new(outer, inner);
    for (a, b) in [(2i64, 0i64), (3, -1), (0, 2)] {
        let report = check_theorem1(&shape, a, b).map_err(|e| e.to_string())?;
        if !report.verdict {
            return Err(format!("verdict false at a={a} b={b}"));
        }
        let got_outer: Vec<(usize, i64, i64, Vec<u32>)> = report
            .outer_terms
            .iter()
            .map(|t| (t.index, t.diagonal, t.coeff, t.partition.parts().to_vec()))
            .collect();
        let want_outer = vec![
            (1, 2, 2 + a, vec![2, 2, 1]),
            (2, 0, a, vec![3, 1, 1]),
            (3, -2, -2 + a, vec![3, 2, 0]),
        ];
        if got_outer != want_outer {
            return Err(format!("outer terms at a={a}: {got_outer:?}, want {want_outer:?}"));
        }
        let got_inner: Vec<(usize, i64, i64, Vec<u32>)> = report
            .inner_terms
            .iter()
            .map(|t| (t.index, t.diagonal, t.coeff, t.partition.parts().to_vec()))
            .collect();
        let want_inner = vec![(1, 0, b, vec![2, 1, 0]), (3, -3, b + 3, vec![1, 1, 1])];
        if got_inner != want_inner {
            return Err(format!("inner terms at b={b}: {got_inner:?}, want {want_inner:?}"));
        }
        if report.inner_terms.iter().any(|t| t.index == 2) {
            return Err("unexpected row-2 inner term".to_string());
        }
    }
    Ok("3 weight splits, term lists exact".to_string())
}

fn laplacian_coefficient() -> Result<String, String> {
    let lam = Partition::new(&[5, 3, 0]).expect("valid partition");
    let expansion = expand_schur_basis(&laplacian(&schur(&lam))).map_err(|e| e.to_string())?;
    let target = Partition::new(&[2, 2, 2]).expect("valid partition");
    let coeff = expansion.coeff(&target);
    if coeff == BigInt::from(2) {
        Ok("coefficient of s_(2,2,2) is 2".to_string())
    } else {
        Err(format!("coefficient of s_(2,2,2) is {coeff}, want 2"))
    }
}

/// An element with up to 3 monomials of up to 3 generator factors with
/// subscripts at most 5, coefficients of q-degree at most 2.
fn random_lambda(rng: &mut ChaCha8Rng) -> LambdaElement {
    let mut out = LambdaElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let parts: Vec<u32> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(1..=5)).collect();
        let coeffs: Vec<BigInt> =
            (0..=rng.gen_range(0..=2)).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect();
        out += &LambdaElement::monomial(&parts, QPoly::from_coeffs(coeffs));
    }
    out
}

fn commutation_samples() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checks = 0u64;
    for i in 0..200 {
        let u = random_lambda(&mut rng);
        let lowered = nabla_q(&u);
        for nvars in 1..=4 {
            let left = specialize(&lowered, nvars);
            let right = nabla(&specialize(&u, nvars));
            if left != right {
                return Err(format!(
                    "sample {i} at N={nvars}: {} vs {}",
                    left.to_text(),
                    right.to_text()
                ));
            }
            checks += 1;
        }
    }
    Ok(format!("200 samples, {checks} checks"))
}

/// A sparse polynomial with up to 4 monomials of total degree at most 2.
fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for _ in 0..rng.gen_range(0..=4) {
        let mut exp = vec![0u32; nvars];
        let mut budget = 2u32;
        for e in exp.iter_mut() {
            let v = rng.gen_range(0..=budget);
            *e = v;
            budget -= v;
        }
        p.insert_term(exp, BigInt::from(rng.gen_range(-4i64..=4)));
    }
    p
}

fn determinant_backends() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let nvars = rng.gen_range(1..=3);
        let size = rng.gen_range(1..=4);
        let mat: Vec<Vec<MultiPoly>> =
            (0..size).map(|_| (0..size).map(|_| random_poly(&mut rng, nvars)).collect()).collect();
        if det_poly(&mat) != det_poly_leibniz(&mat) {
            return Err(format!("matrix sample {i} of size {size} disagrees"));
        }
    }
    Ok("100 matrices up to size 4".to_string())
}

fn product_rule_samples() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..200 {
        let nvars = rng.gen_range(1..=3);
        let count = rng.gen_range(2..=5);
        let factors: Vec<MultiPoly> = (0..count).map(|_| random_poly(&mut rng, nvars)).collect();
        let mut product = MultiPoly::one(nvars);
        for f in &factors {
            product = &product * f;
        }
        let lhs = nabla(&product);
        let mut rhs = MultiPoly::zero(nvars);
        for which in 0..count {
            let mut term = MultiPoly::one(nvars);
            for (j, f) in factors.iter().enumerate() {
                let piece = if which == j { nabla(f) } else { f.clone() };
                term = &term * &piece;
            }
            rhs += &term;
        }
        if lhs != rhs {
            return Err(format!("tuple sample {i} with {count} factors disagrees"));
        }
    }
    Ok("200 tuples of 2 to 5 factors".to_string())
}
