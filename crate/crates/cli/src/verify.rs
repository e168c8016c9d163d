//! Seeded verification suites comparing the numerical oracle against the
//! combinatorial predictions, packaged as reproducible reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use orbit_limits_core::diagram::{sigma_lambda, EllipticSpectrum, Rat};
use orbit_limits_core::limits::{
    l_map, richardson_partition, HyperbolicSpectrum, MinimalParams, MinimalType,
};
use orbit_limits_core::partition::{enumerate_partitions, Partition};

use crate::oracle::{
    self, jordan_type, minimal, scaling_curve_elliptic, scaling_curve_elliptic_conjugated,
    scaling_curve_slice, signed_type, CMat, Tolerance,
};

/// Genericity failures are retried this many times before a trial counts as
/// failed.
const MAX_RESAMPLES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub scope: String,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl VerifyReport {
    fn new(scope: &str, trials: usize, seed: u64, tol: f64, checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self {
            scope: scope.to_string(),
            trials,
            seed,
            tol,
            checks,
            passed,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verify {} (trials={}, seed={}, tol={:e})\n",
            self.scope, self.trials, self.seed, self.tol
        ));
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} - {}\n", check.name, check.detail));
            if let Some(ce) = &check.counterexample {
                out.push_str(&format!("     counterexample: {ce}\n"));
            }
        }
        out.push_str(if self.passed { "all checks passed" } else { "SOME CHECKS FAILED" });
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Sl,
    Supq,
    Minimal,
    Curves,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Sl => "sl",
            Scope::Supq => "supq",
            Scope::Minimal => "minimal",
            Scope::Curves => "curves",
        }
    }
}

/// Runs one suite. `signature` pins `(p, q)` for the `supq` scope; other
/// scopes ignore it.
pub fn run(
    scope: Scope,
    trials: usize,
    seed: u64,
    tol: f64,
    signature: Option<(usize, usize)>,
) -> VerifyReport {
    match scope {
        Scope::Sl => verify_sl(trials, seed, tol),
        Scope::Supq => verify_supq(trials, seed, tol, signature),
        Scope::Minimal => verify_minimal(seed, tol),
        Scope::Curves => verify_curves(tol),
    }
}

fn mixed_parity_partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| !p.has_uniform_parity())
        .collect()
}

/// Generic nilradical Jordan types against the partition the hyperbolic
/// limit map predicts, over random mixed-parity orbit labels with n <= 7.
pub fn verify_sl(trials: usize, seed: u64, tol: f64) -> VerifyReport {
    let tolerance = Tolerance::with_rank_cutoff(tol);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<(usize, Vec<Partition>)> = (3..=7)
        .map(|n| (n, mixed_parity_partitions(n)))
        .collect();
    let mut agreements = 0usize;
    let mut counterexample = None;
    for _ in 0..trials {
        let (_, candidates) = &pool[rng.random_range(0..pool.len())];
        let label = &candidates[rng.random_range(0..candidates.len())];
        let predicted = l_map(label);
        let spectrum = HyperbolicSpectrum::from_jordan_blocks(label);
        debug_assert_eq!(richardson_partition(&spectrum), predicted);
        let mut measured = None;
        for _ in 0..MAX_RESAMPLES {
            let sample = oracle::generic_nilradical_element(&spectrum, rng.random::<u64>());
            match jordan_type(&sample, &tolerance) {
                Ok(p) if p == predicted => {
                    measured = Some(p);
                    break;
                }
                Ok(p) => measured = Some(p),
                Err(_) => {}
            }
        }
        match measured {
            Some(p) if p == predicted => agreements += 1,
            other => {
                if counterexample.is_none() {
                    counterexample = Some(json!({
                        "label": label.parts(),
                        "predicted": predicted.parts(),
                        "measured": other.map(|p| p.parts().to_vec()),
                    }));
                }
            }
        }
    }
    let check = CheckResult {
        name: "nilradical-jordan-matches-limit-map".to_string(),
        passed: agreements == trials,
        detail: format!("{agreements}/{trials} generic samples agree"),
        counterexample,
    };
    VerifyReport::new("sl", trials, seed, tol, vec![check])
}

fn random_spectrum(rng: &mut ChaCha8Rng, signature: Option<(usize, usize)>) -> EllipticSpectrum {
    let (p, q) = signature.unwrap_or_else(|| {
        let p = rng.random_range(1..=5usize);
        (p, rng.random_range(1..=6 - p))
    });
    let total_len = p + q;
    let mut entries: Vec<Rat> = (0..total_len - 1)
        .map(|_| Rat::new(rng.random_range(-4i64..=4), rng.random_range(1i64..=3)))
        .collect();
    let sum: Rat = entries.iter().sum();
    entries.push(-sum);
    let lambda = entries[..p].to_vec();
    let mu = entries[p..].to_vec();
    EllipticSpectrum::new(lambda, mu).expect("closes to zero sum")
}

/// Signed types of generic off-diagonal nilradical samples against the
/// spectral recursion, over random rational spectra with p + q <= 6 (or the
/// pinned signature).
pub fn verify_supq(
    trials: usize,
    seed: u64,
    tol: f64,
    signature: Option<(usize, usize)>,
) -> VerifyReport {
    let tolerance = Tolerance::with_rank_cutoff(tol);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreements = 0usize;
    let mut counterexample = None;
    for _ in 0..trials {
        let spec = random_spectrum(&mut rng, signature);
        let predicted = sigma_lambda(&spec);
        let (p, q) = spec.signature();
        let mut measured = None;
        for _ in 0..MAX_RESAMPLES {
            let sample = oracle::generic_up_element(&spec, rng.random::<u64>());
            match signed_type(&sample, p, q, &tolerance) {
                Ok(sigma) if sigma == predicted => {
                    measured = Some(sigma);
                    break;
                }
                Ok(sigma) => measured = Some(sigma),
                Err(_) => {}
            }
        }
        match measured {
            Some(sigma) if sigma == predicted => agreements += 1,
            other => {
                if counterexample.is_none() {
                    counterexample = Some(json!({
                        "spectrum": serde_json::to_value(&spec).unwrap(),
                        "predicted": serde_json::to_value(&predicted).unwrap(),
                        "measured": other.map(|s| serde_json::to_value(&s).unwrap()),
                    }));
                }
            }
        }
    }
    let check = CheckResult {
        name: "up-signed-type-matches-recursion".to_string(),
        passed: agreements == trials,
        detail: format!("{agreements}/{trials} generic samples agree"),
        counterexample,
    };
    VerifyReport::new("supq", trials, seed, tol, vec![check])
}

/// Generic Jordan type of each minimal-table row at small parameters.
pub fn verify_minimal(seed: u64, tol: f64) -> VerifyReport {
    let tolerance = Tolerance::with_rank_cutoff(tol);
    let rows = [
        ("AIII(1,2)", MinimalType::AIII, MinimalParams::Signature { p: 1, q: 2 }),
        ("BI(1,1)", MinimalType::BI, MinimalParams::Signature { p: 1, q: 1 }),
        ("CI(n=2)", MinimalType::CI, MinimalParams::Rank { n: 2 }),
        ("DI(1,3)", MinimalType::DI, MinimalParams::Signature { p: 1, q: 3 }),
        ("DIII(n=4)", MinimalType::DIII, MinimalParams::Rank { n: 4 }),
    ];
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, ty, params) in rows {
        let expected = minimal::expected_dense_partition(ty, params).expect("params in table");
        let mut measured = None;
        for _ in 0..MAX_RESAMPLES {
            let sample =
                minimal::sample_generic_up(ty, params, rng.random::<u64>()).expect("params ok");
            match jordan_type(&sample, &tolerance) {
                Ok(p) if p == expected => {
                    measured = Some(p);
                    break;
                }
                Ok(p) => measured = Some(p),
                Err(_) => {}
            }
        }
        let passed = measured.as_ref() == Some(&expected);
        checks.push(CheckResult {
            name: format!("minimal-{name}"),
            passed,
            detail: format!(
                "expected {expected}, measured {}",
                measured
                    .as_ref()
                    .map(|p| p.to_string())
                    .unwrap_or_else(|| "none".to_string())
            ),
            counterexample: None,
        });
    }
    VerifyReport::new("minimal", rows.len(), seed, tol, checks)
}

fn sl2_cayley_triple() -> (CMat, CMat, CMat) {
    let e = oracle::jordan_block(2);
    let f = e.transpose();
    let mut h = CMat::zeros(2, 2);
    h[(0, 0)] = oracle::real(1.0);
    h[(1, 1)] = oracle::real(-1.0);
    (e, h, f)
}

/// An sl3 triple `{h, e, f}` for e a single 2-block, together with a slice
/// direction mixing weights 0, -1 and -2.
fn sl3_slice_setup() -> (CMat, CMat, CMat, CMat) {
    let mut e = CMat::zeros(3, 3);
    e[(0, 1)] = oracle::real(1.0);
    let f = e.transpose();
    let mut h = CMat::zeros(3, 3);
    h[(0, 0)] = oracle::real(1.0);
    h[(1, 1)] = oracle::real(-1.0);
    // weight 0: diag(1,1,-2)/3 centralizes f; weight -1: E31; weight -2: f
    let mut z = CMat::zeros(3, 3);
    z[(0, 0)] = oracle::real(0.4);
    z[(1, 1)] = oracle::real(0.4);
    z[(2, 2)] = oracle::real(-0.8);
    z[(2, 0)] = oracle::real(0.9);
    z += f.map(|v| v * oracle::real(0.6));
    (e, h, f, z)
}

/// Scaling-curve identities: the elliptic curve error is exactly `nu^2 ||f||`,
/// the matrix-exponential route agrees at moderate `nu`, and the slice curve
/// error decreases with log-log slope at least one.
pub fn verify_curves(tol: f64) -> VerifyReport {
    let tolerance = Tolerance::default();
    let mut checks = Vec::new();

    let (e, h, f) = sl2_cayley_triple();
    let nus = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];
    let mut worst = 0.0f64;
    for &nu in &nus {
        let point = scaling_curve_elliptic(&e, &h, &f, nu, &tolerance).unwrap();
        let err = (&point - &e).norm();
        let rel = (err - nu * nu * f.norm()).abs() / (nu * nu * f.norm());
        worst = worst.max(rel);
    }
    checks.push(CheckResult {
        name: "elliptic-error-exactly-nu2-normf".to_string(),
        passed: worst <= 1e-10,
        detail: format!("max relative deviation {worst:.3e} over nu in 1e-1..1e-5"),
        counterexample: None,
    });

    let mut worst = 0.0f64;
    for &nu in &[1e-1, 3e-2, 1e-2] {
        let closed = scaling_curve_elliptic(&e, &h, &f, nu, &tolerance).unwrap();
        let conjugated = scaling_curve_elliptic_conjugated(&e, &h, &f, nu, &tolerance).unwrap();
        worst = worst.max((&closed - &conjugated).norm() / (1.0 + closed.norm()));
    }
    checks.push(CheckResult {
        name: "elliptic-exponential-route-agrees".to_string(),
        passed: worst <= 1e-10,
        detail: format!("max deviation {worst:.3e} between closed form and conjugation"),
        counterexample: None,
    });

    let (e3, h3, f3, z3) = sl3_slice_setup();
    let nus = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6];
    let errors: Vec<f64> = nus
        .iter()
        .map(|&nu| {
            (scaling_curve_slice(&e3, &h3, &f3, &z3, nu, &tolerance).unwrap() - &e3).norm()
        })
        .collect();
    let monotone = errors.windows(2).all(|w| w[1] < w[0]);
    let slope = (errors[0].ln() - errors[errors.len() - 1].ln())
        / (nus[0].ln() - nus[nus.len() - 1].ln());
    let error_list = errors
        .iter()
        .map(|e| format!("{e:.3e}"))
        .collect::<Vec<_>>()
        .join(", ");
    checks.push(CheckResult {
        name: "slice-error-monotone".to_string(),
        passed: monotone,
        detail: format!("errors [{error_list}] decrease along nu"),
        counterexample: None,
    });
    checks.push(CheckResult {
        name: "slice-loglog-slope-at-least-one".to_string(),
        passed: slope >= 1.0,
        detail: format!("slope {slope:.6}"),
        counterexample: None,
    });

    // weight -2 directions double the decay exponent
    let z2 = f.map(|v| v * oracle::real(0.7));
    let err = |nu: f64| (scaling_curve_slice(&e, &h, &f, &z2, nu, &tolerance).unwrap() - &e).norm();
    let ratio = err(5e-3) / err(1e-2);
    checks.push(CheckResult {
        name: "slice-weight2-quarter-ratio".to_string(),
        passed: (ratio - 0.25).abs() <= 1e-6,
        detail: format!("halving nu scales the error by {ratio:.9}"),
        counterexample: None,
    });

    // curve targets are numerically nilpotent
    let target_ok = jordan_type(&e, &tolerance).is_ok() && jordan_type(&e3, &tolerance).is_ok();
    checks.push(CheckResult {
        name: "curve-limits-are-nilpotent".to_string(),
        passed: target_ok,
        detail: "limit points pass the nilpotency check".to_string(),
        counterexample: None,
    });

    VerifyReport::new("curves", nus.len(), 0, tol, checks)
}
