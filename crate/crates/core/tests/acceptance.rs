//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Criteria known to be unattainable as stated are reported as FAIL with the
//! reason and do not fail the run; any other FAIL does.

mod common;

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use mlv::complexfn::gamma;
use mlv::mittag::{mellin_ml_neg, ml, MLParams};
use mlv::quad::{integrate_double, integrate_semiinf, Decay, Domain, QuadConfig, SingularityHint};
use mlv::registry::Sym::*;
use mlv::registry::*;
use mlv::zetafam::*;
use mlv::ComplexScalar as C;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

/// Criteria that cannot pass as stated, with the reason.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[
    (5, "the printed errata point lies outside the convergence region; both the integral and the series diverge"),
    (9, "the zeta table row is encoded as printed and misses a factor of -i"),
];

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

fn pa() -> ParamAssignment {
    ParamAssignment::new()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let p = pa().with(M, 0.5).with(B, 0.5).with(C, 1.0);
    let q = lookup("DI-DEGEN").unwrap().lhs_value(&p, &cfg()).map_err(|e| e.to_string())?;
    let r = rel(q.value, c(PI));
    check(r <= 1e-4, || format!("relative error {r:.3e}"))?;
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!("degenerate integral = pi to {r:.1e} in {t:.2?}"))
}

fn criterion_2() -> Outcome {
    let vals = [c(0.3), c(0.5), c(0.8)];
    let s = sweep_invariance("DI-PI24", B, &vals, &pa(), Some(1e-4), &cfg()).map_err(|e| e.to_string())?;
    for r in &s.results {
        let lhs = r.lhs.ok_or_else(|| format!("{}: {:?}", r.params, r.message))?;
        let e = rel(lhs, c(-PI / 24.0));
        check(e <= 1e-4, || format!("{}: relative error {e:.3e}", r.params))?;
    }
    check(s.max_deviation < 1e-4, || format!("b-deviation {:.3e}", s.max_deviation))?;
    Ok(format!("-pi/24 for b in {{0.3, 0.5, 0.8}}, max b-deviation {:.1e}", s.max_deviation))
}

fn criterion_3() -> Outcome {
    let k = polylog(c(2.0), C::new(0.0, 1.0)).map_err(|e| e.to_string())?.im;
    let want = -C::from_polar(1.0, PI / 4.0) * (c(PI * PI) - C::new(0.0, 48.0 * k)) / (96.0 * PI);
    let mut worst = 0.0f64;
    for b in [0.3, 0.5] {
        let q = lookup("DI-CATALAN").unwrap().lhs_value(&pa().with(B, b), &cfg()).map_err(|e| e.to_string())?;
        for (got, w) in [(q.value.re, want.re), (q.value.im, want.im)] {
            let e = ((got - w) / w).abs();
            worst = worst.max(e);
            check(e <= 1e-4, || format!("b = {b}: component {got} vs {w}"))?;
        }
    }
    Ok(format!("Catalan form with K = Im Li2(i) = {k:.15}, worst component error {worst:.1e}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let spec = lookup("GM-C414").unwrap();
    let mut checked = 0;
    let mut skipped = 0;
    let mut worst = 0.0f64;
    for alpha in [0.5, 0.8] {
        for beta in [1.0, 1.5] {
            for a in [-1.0, 0.3] {
                for s in [1.0, 2.0] {
                    let p = pa().with(Alpha, alpha).with(Beta, beta).with(A, a).with(S, s);
                    if spec.check_domain(&p).is_err() {
                        skipped += 1;
                        continue;
                    }
                    let r = verify_spec(spec, &p, 1e-8, &cfg());
                    let e = r.rel_err.ok_or_else(|| format!("{p}: {:?}", r.message))?;
                    worst = worst.max(e);
                    check(r.status == Status::Pass, || format!("{p}: relative error {e:.3e}"))?;
                    checked += 1;
                }
            }
        }
    }
    let t = within(Duration::from_secs(5), start)?;
    Ok(format!("{checked} grid points ({skipped} outside the domain), worst {worst:.1e}, {t:.2?}"))
}

fn criterion_5() -> Outcome {
    let spec = lookup("GM-C416-ERRATA").unwrap();
    let p = pa().with(P, 1.2).with(Gamma, 1.7).with(Alpha, 0.5).with(Beta, 1.0).with(A, 0.3).with(S, 2.0);
    if let Err(e) = spec.check_domain(&p) {
        // Report what the integral and the series actually do there.
        let lhs = (spec.lhs)(&p).and_then(|f| f.integrate(&cfg()));
        let rhs = (spec.rhs)(&p);
        return Err(format!(
            "{e}; quadrature: {}; series: {}",
            lhs.map(|q| format!("{} (converged = {})", q.value, q.converged)).unwrap_or_else(|e| e.to_string()),
            rhs.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()),
        ));
    }
    let r = verify_spec(spec, &p, 1e-6, &cfg());
    check(r.status == Status::Pass, || format!("{:?}: {:?}", r.status, r.message))?;
    Ok(format!("first form matches, contrast at {:.1e}", r.contrast_rel_err.unwrap_or(f64::NAN)))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let spec = lookup("GM-MAIN").unwrap();
    let p = &spec.default_samples[0];
    let series = triple_series(p, 1e-12).map_err(|e| e.to_string())?;
    let q = spec
        .lhs_value(p, &QuadConfig { rel_tol: 1e-10, ..cfg() })
        .map_err(|e| e.to_string())?;
    let e = rel(series, q.value);
    check(e <= 1e-6, || format!("series {series} vs quadrature {}", q.value))?;
    let t = within(Duration::from_secs(30), start)?;
    Ok(format!("triple series vs quadrature {e:.1e} in {t:.2?}"))
}

fn criterion_7() -> Outcome {
    let qc = QuadConfig { rel_tol: 1e-10, ..cfg() };
    let mut worst = 0.0f64;
    for s in [0.3, 0.5, 0.7] {
        for b in [0.25, 0.5, 0.75] {
            let params = MLParams::one_param(b).map_err(|e| e.to_string())?;
            let f = |u: f64| Ok(ml(params, c(-u))? * u.powf(s - 1.0));
            let hint = SingularityHint::left(s - 1.0).with_decay(Decay::Algebraic { power: s - 2.0 });
            let q = integrate_semiinf(f, 0.0, hint, &qc).map_err(|e| e.to_string())?;
            let want = mellin_ml_neg(c(s), b).map_err(|e| e.to_string())?;
            let e = rel(q.value, want);
            worst = worst.max(e);
            check(e < 1e-6, || format!("s = {s}, b = {b}: {} vs {want}", q.value))?;
        }
    }
    Ok(format!("3x3 Mellin grid, worst {worst:.1e}"))
}

fn criterion_8() -> Outcome {
    let p = pa().with(K, 1.0);
    let spec = lookup("DI-HURWITZ").unwrap();
    let q = spec.lhs_value(&p, &cfg()).map_err(|e| e.to_string())?;
    // i^k 2^{2k+1} pi^{k+1} (zeta(-k, 3/8) - zeta(-k, 7/8)) at k = 1.
    let z = hurwitz_zeta(c(-1.0), c(0.375)).map_err(|e| e.to_string())?
        - hurwitz_zeta(c(-1.0), c(0.875)).map_err(|e| e.to_string())?;
    let want = C::new(0.0, 1.0) * 8.0 * PI * PI * z;
    let rhs = spec.rhs_value(&p).map_err(|e| e.to_string())?;
    check(rel(rhs, want) < 1e-12, || format!("registry RHS {rhs} vs {want}"))?;
    let mut worst = 0.0f64;
    for (got, w) in [(q.value.re, want.re), (q.value.im, want.im)] {
        // A component that vanishes in the closed form is held to the modulus.
        let scale = if w == 0.0 { want.norm() } else { w.abs() };
        let e = (got - w).abs() / scale;
        worst = worst.max(e);
        check(e <= 1e-3, || format!("component {got} vs {w}"))?;
    }
    Ok(format!("Hurwitz zeta double integral at k = 1, worst component {worst:.1e}"))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let all: Vec<_> = catalog().iter().collect();
    let results = verify_samples(&all, None, &cfg());
    let t = within(Duration::from_secs(30 * 60), start)?;
    check(all.len() >= 30, || format!("only {} identities", all.len()))?;
    let failed: Vec<String> = results
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{} [{}] {}", r.id, r.params, r.status))
        .collect();
    check(failed.is_empty(), || {
        format!("{} of {} samples not passing: {}", failed.len(), results.len(), failed.join("; "))
    })?;
    Ok(format!("{} identities, {} samples, all pass in {t:.2?}", all.len(), results.len()))
}

fn suite<S: Strategy>(name: &str, cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), String>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner
        .run(&strategy, |v| test(v).map_err(TestCaseError::fail))
        .map_err(|e| format!("{name}: {e}"))
}

fn criterion_10() -> Outcome {
    let off_pole = (-8.0f64..8.0, -8.0f64..8.0)
        .prop_filter("off the poles", |(re, im)| re.round() > 0.0 || (re - re.round()).abs().max(im.abs()) > 1e-3)
        .prop_map(|(re, im)| C::new(re, im));
    suite("gamma reflection and recurrence", 200, off_pole, |z| {
        let g = gamma(z).map_err(|e| e.to_string())?;
        let w = g * gamma(1.0 - z).map_err(|e| e.to_string())? * (PI * z).sin() / PI;
        check((w - 1.0).norm() < 1e-10, || format!("reflection at {z}: {w}"))?;
        let g1 = gamma(z + 1.0).map_err(|e| e.to_string())?;
        check(rel(g1, z * g) < 1e-10, || format!("recurrence at {z}"))
    })?;

    let lerch = (0.2f64..0.8, -PI..PI, 1.0f64..4.0, -1.0f64..1.0, 0.5f64..3.0, -1.0f64..1.0)
        .prop_map(|(r, t, sr, si, vr, vi)| (C::from_polar(r, t), C::new(sr, si), C::new(vr, vi)));
    suite("Lerch series vs integral", 60, lerch.clone(), |(z, s, v)| {
        let args = LerchArgs::new(z, s, v);
        let a = lerch_phi_series(args).map_err(|e| e.to_string())?;
        let b = lerch_phi_integral(args).map_err(|e| e.to_string())?;
        check(rel(a, b) < 1e-9, || format!("({z}, {s}, {v}): {a} vs {b}"))
    })?;
    suite("Lerch contiguous relation", 60, lerch, |(z, s, v)| {
        let phi = |v: C| lerch_phi(LerchArgs::new(z, s, v)).map_err(|e| e.to_string());
        let lhs = phi(v)?;
        let rhs = z * phi(v + 1.0)? + (-s * v.ln()).exp();
        check(rel(lhs, rhs) < 1e-10, || format!("({z}, {s}, {v})"))
    })?;

    let ml_args = (0.2f64..1.8, 0.3f64..2.5, 0.0f64..5.0, -PI..PI);
    suite("Mittag-Leffler beta recurrence", 100, ml_args, |(alpha, beta, r, t)| {
        let z = C::from_polar(r, t);
        let e = |b: f64| ml(MLParams::new(alpha, c(b)).unwrap(), z).map_err(|e| e.to_string());
        let lhs = e(beta)?;
        let rhs = z * e(alpha + beta)? + 1.0 / gamma(c(beta)).map_err(|e| e.to_string())?;
        check((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()), || format!("{alpha} {beta} {z}"))
    })?;

    // Bit-identical reruns, with one and with several worker threads.
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let outer = Domain::SemiInfinite {
                a: 0.0,
                hint: SingularityHint::left(-0.25).with_decay(Decay::Exponential { rate: 1.0 }),
            };
            let inner = Domain::SemiInfinite {
                a: 0.0,
                hint: SingularityHint::left(-0.5).with_decay(Decay::Algebraic { power: -1.5 }),
            };
            let e = MLParams::one_param(0.5).unwrap();
            let f = |x: f64, u: f64| Ok(ml(e, c(-u))? * ((-x).exp() * x.powf(-0.25) / u.sqrt()));
            integrate_double(f, outer, inner, &cfg())
        })
    };
    let runs: Vec<_> = [1, 4, 4].into_iter().map(run).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    for r in &runs[1..] {
        check(
            r.value.re.to_bits() == runs[0].value.re.to_bits() && r.value.im.to_bits() == runs[0].value.im.to_bits(),
            || format!("quadrature reruns differ: {} vs {}", r.value, runs[0].value),
        )?;
    }

    for a in [0.25, 0.5, 1.0, 2.5] {
        let cauchy = hurwitz_zeta_sderiv(c(0.5), c(a), 1).map_err(|e| e.to_string())?;
        let fd = derivative_fd(|s| hurwitz_zeta(c(s), c(a)).unwrap(), 0.5, 0.01);
        check(rel(cauchy, fd) < 1e-8, || format!("zeta'(1/2, {a}): {cauchy} vs {fd}"))?;
    }
    Ok("gamma, Lerch (two suites), Mittag-Leffler, determinism, zeta' all green".into())
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail}"),
            Err(why) => {
                let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == n);
                match known {
                    Some((_, reason)) => println!("criterion {n:>2}: FAIL  {why} (known: {reason})"),
                    None => {
                        println!("criterion {n:>2}: FAIL  {why}");
                        unexpected.push(n);
                    }
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance failures: {unexpected:?}");
        std::process::exit(1);
    }
}
