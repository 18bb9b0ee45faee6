mod common;

use std::f64::consts::{E, PI};

use common::*;
use mlv::complexfn::gamma;
use mlv::mittag::{ml, MLParams};
use mlv::quad::*;
use mlv::{ComplexScalar as C, Error, Result};
use proptest::prelude::*;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

fn fin(f: impl Fn(f64) -> Result<C>, a: f64, b: f64, hint: SingularityHint) -> QuadResult {
    integrate_finite(f, a, b, hint, &cfg()).unwrap()
}

fn semi(f: impl Fn(f64) -> Result<C>, hint: SingularityHint) -> QuadResult {
    integrate_semiinf(f, 0.0, hint, &cfg()).unwrap()
}

fn e_half_neg(u: f64) -> Result<C> {
    ml(MLParams::one_param(0.5).unwrap(), c(-u))
}

#[test]
fn finite_endpoint_singularities() {
    let r = fin(|x| Ok(c(x.powf(-0.5))), 0.0, 1.0, SingularityHint::left(-0.5));
    assert!(r.converged);
    assert_close(r.value, c(2.0), 1e-10);
    let r = fin(|x| Ok(c(-x.ln())), 0.0, 1.0, SingularityHint::default());
    assert_close(r.value, c(1.0), 1e-10);
}

#[test]
fn finite_ml_against_integrated_series() {
    // int_0^1 x^{1/2} E_{1/2}(-x) dx = sum (-1)^f / (Gamma(f/2 + 1) (f + 3/2)).
    let mut g = [1.0, PI.sqrt() / 2.0]; // Gamma(1), Gamma(3/2)
    let mut want = 0.0;
    for f in 0..120 {
        let gf = g[f % 2];
        let sign = if f % 2 == 0 { 1.0 } else { -1.0 };
        want += sign / (gf * (f as f64 + 1.5));
        // Gamma(x + 1) = x Gamma(x) with x = f/2 + 1.
        g[f % 2] = gf * (f as f64 / 2.0 + 1.0);
    }
    let r = fin(|x| Ok(e_half_neg(x)? * x.sqrt()), 0.0, 1.0, SingularityHint::default());
    assert_close(r.value, c(want), 1e-10);
}

#[test]
fn semi_infinite_values() {
    let exp = SingularityHint::default().with_decay(Decay::Exponential { rate: 1.0 });
    assert_close(semi(|x| Ok(c((-x).exp())), exp).value, c(1.0), 1e-10);
    let hint = SingularityHint::left(-0.5).with_decay(Decay::Exponential { rate: 1.0 });
    assert_close(semi(|x| Ok(c((-x).exp() / x.sqrt())), hint).value, c(PI.sqrt()), 1e-10);
    let hint = SingularityHint::left(-0.5).with_decay(Decay::Algebraic { power: -1.5 });
    let r = semi(|u| Ok(e_half_neg(u)? / u.sqrt()), hint);
    assert_close(r.value, c(PI / gamma(c(0.75)).unwrap().re), 1e-8);
}

#[test]
fn double_integrals() {
    let exp = SingularityHint::default().with_decay(Decay::Exponential { rate: 1.0 });
    let outer = Domain::SemiInfinite { a: 0.0, hint: exp };
    let r = integrate_double(|x, u| Ok(c((-x - u).exp())), outer, outer, &cfg()).unwrap();
    assert_close(r.value, c(1.0), 1e-7);

    // Gamma(3/4) * pi / Gamma(3/4) = pi.
    let outer = Domain::SemiInfinite {
        a: 0.0,
        hint: SingularityHint::left(-0.25).with_decay(Decay::Exponential { rate: 1.0 }),
    };
    let inner = Domain::SemiInfinite {
        a: 0.0,
        hint: SingularityHint::left(-0.5).with_decay(Decay::Algebraic { power: -1.5 }),
    };
    let f = |x: f64, u: f64| Ok(e_half_neg(u)? * ((-x).exp() * x.powf(-0.25) / u.sqrt()));
    let r = integrate_double(f, outer, inner, &cfg()).unwrap();
    assert!(r.converged);
    assert_close(r.value, c(PI), 1e-6);
}

#[test]
fn inner_failures_carry_the_outer_abscissa() {
    let d = Domain::Finite { a: 0.0, b: 1.0, hint: SingularityHint::default() };
    let f = |x: f64, u: f64| if x > 0.5 && u > 0.5 { Ok(c(f64::NAN)) } else { Ok(c(1.0)) };
    match integrate_double(f, d, d, &cfg()) {
        Err(Error::Inner { outer, source }) => {
            assert!(outer > 0.5);
            assert!(matches!(*source, Error::IntegrandNaN { x } if x > 0.5));
        }
        other => panic!("expected an inner failure, got {other:?}"),
    }
}

#[test]
fn nan_reports_the_abscissa() {
    let r = integrate_finite(
        |x| Ok(if x > 0.7 { c(f64::NAN) } else { c(x) }),
        0.0,
        1.0,
        SingularityHint::default(),
        &cfg(),
    );
    assert!(matches!(r, Err(Error::IntegrandNaN { x }) if x > 0.7));
}

#[test]
fn hints_are_validated() {
    let f = |x: f64| Ok(c(x));
    assert!(integrate_finite(f, 0.0, 1.0, SingularityHint::left(-1.0), &cfg()).is_err());
    assert!(integrate_finite(f, 1.0, 0.0, SingularityHint::default(), &cfg()).is_err());
    let hint = SingularityHint::default().with_decay(Decay::Algebraic { power: -1.0 });
    assert!(integrate_semiinf(f, 0.0, hint, &cfg()).is_err());
    // Integrable but slow: computed with a warning.
    let hint = SingularityHint::default().with_decay(Decay::Algebraic { power: -1.02 });
    let r = integrate_semiinf(|x| Ok(c((1.0 + x).powf(-1.02))), 0.0, hint, &cfg()).unwrap();
    assert_eq!(r.warnings, vec![QuadWarning::SlowAlgebraicDecay { power: -1.02 }]);
}

#[test]
fn config_validation_and_env_cap() {
    assert!(cfg().validate().is_ok());
    for bad in [
        QuadConfig { rel_tol: 1e-15, ..cfg() },
        QuadConfig { outer_rel_tol: 0.0, ..cfg() },
        QuadConfig { abs_tol: -1.0, ..cfg() },
        QuadConfig { max_level: 16, ..cfg() },
        QuadConfig { max_level: 0, ..cfg() },
    ] {
        assert!(matches!(bad.validate(), Err(Error::Config(_))), "{bad:?}");
        assert!(integrate_finite(|x| Ok(c(x)), 0.0, 1.0, SingularityHint::default(), &bad).is_err());
    }
    // The only test in this binary that touches the variable.
    std::env::set_var(MAX_LEVEL_ENV, "4");
    let capped = cfg().with_env_cap().unwrap();
    std::env::set_var(MAX_LEVEL_ENV, "many");
    let garbled = cfg().with_env_cap();
    std::env::remove_var(MAX_LEVEL_ENV);
    assert_eq!(capped.max_level, 4);
    assert!(matches!(garbled, Err(Error::Config(_))));
    // A capped run stops early and says so rather than failing.
    let hint = SingularityHint::left(-0.99);
    let r = integrate_finite(|x| Ok(c(x.powf(-0.99))), 0.0, 1.0, hint, &capped).unwrap();
    assert!(r.levels <= 4);
}

#[test]
fn determinism_across_thread_counts() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let outer = Domain::SemiInfinite {
                a: 0.0,
                hint: SingularityHint::left(-0.25).with_decay(Decay::Exponential { rate: 1.0 }),
            };
            let inner = Domain::Finite { a: 0.0, b: 2.0, hint: SingularityHint::default() };
            let f = |x: f64, u: f64| Ok(C::new(u * x.powf(-0.25), (x * u).sin()) * (-x).exp());
            integrate_double(f, outer, inner, &cfg()).unwrap()
        })
    };
    let a = run(1);
    let b = run(4);
    let c2 = run(4);
    assert_eq!(a.value.re.to_bits(), b.value.re.to_bits());
    assert_eq!(a.value.im.to_bits(), b.value.im.to_bits());
    assert_eq!(a.err_estimate.to_bits(), b.err_estimate.to_bits());
    assert_eq!(b, c2);
}

struct Known {
    name: &'static str,
    f: fn(f64) -> C,
    semi: bool,
    hint: SingularityHint,
    want: C,
}

fn known_suite() -> Vec<Known> {
    let none = SingularityHint::default();
    let exp1 = none.with_decay(Decay::Exponential { rate: 1.0 });
    vec![
        Known { name: "x^-1/2", f: |x| c(x.powf(-0.5)), semi: false, hint: SingularityHint::left(-0.5), want: c(2.0) },
        Known { name: "log 1/x", f: |x| c(-x.ln()), semi: false, hint: none, want: c(1.0) },
        Known { name: "x^2", f: |x| c(x * x), semi: false, hint: none, want: c(1.0 / 3.0) },
        Known { name: "e^x", f: |x| c(x.exp()), semi: false, hint: none, want: c(E - 1.0) },
        Known { name: "1/(1+x^2)", f: |x| c(1.0 / (1.0 + x * x)), semi: false, hint: none, want: c(PI / 4.0) },
        Known { name: "sqrt x", f: |x| c(x.sqrt()), semi: false, hint: none, want: c(2.0 / 3.0) },
        Known { name: "x^-0.9", f: |x| c(x.powf(-0.9)), semi: false, hint: SingularityHint::left(-0.9), want: c(10.0) },
        Known { name: "log^2 x", f: |x| c(x.ln().powi(2)), semi: false, hint: none, want: c(2.0) },
        Known {
            name: "(1-x)^-1/2",
            f: |x| c((1.0 - x).powf(-0.5)),
            semi: false,
            hint: none.with_right(-0.5),
            want: c(2.0),
        },
        Known { name: "e^{i pi x}", f: |x| C::new(0.0, PI * x).exp(), semi: false, hint: none, want: C::new(0.0, 2.0 / PI) },
        Known { name: "x^-1/2 log x", f: |x| c(x.ln() / x.sqrt()), semi: false, hint: SingularityHint::left(-0.5), want: c(-4.0) },
        Known { name: "x^3 - x", f: |x| c(x * x * x - x), semi: false, hint: none, want: c(-0.25) },
        Known { name: "e^-x", f: |x| c((-x).exp()), semi: true, hint: exp1, want: c(1.0) },
        Known {
            name: "x^-1/2 e^-x",
            f: |x| c((-x).exp() / x.sqrt()),
            semi: true,
            hint: SingularityHint::left(-0.5).with_decay(Decay::Exponential { rate: 1.0 }),
            want: c(PI.sqrt()),
        },
        Known {
            name: "1/(1+x^2) on (0, inf)",
            f: |x| c(1.0 / (1.0 + x * x)),
            semi: true,
            hint: none.with_decay(Decay::Algebraic { power: -2.0 }),
            want: c(PI / 2.0),
        },
        Known { name: "x e^-x^2", f: |x| c(x * (-x * x).exp()), semi: true, hint: exp1, want: c(0.5) },
        Known {
            name: "e^-2x cos x",
            f: |x| c((-2.0 * x).exp() * x.cos()),
            semi: true,
            hint: none.with_decay(Decay::Exponential { rate: 2.0 }),
            want: c(0.4),
        },
        Known {
            name: "x^-0.3/(1+x)",
            f: |x| c(x.powf(-0.3) / (1.0 + x)),
            semi: true,
            hint: SingularityHint::left(-0.3).with_decay(Decay::Algebraic { power: -1.3 }),
            want: c(PI / (0.7 * PI).sin()),
        },
        Known { name: "x^2 e^-x", f: |x| c((2.0 * x.ln() - x).exp()), semi: true, hint: exp1, want: c(2.0) },
        Known { name: "e^-x log x", f: |x| c((-x).exp() * x.ln()), semi: true, hint: exp1, want: c(-EULER) },
    ]
}

fn run_known(k: &Known) -> QuadResult {
    let f = |x: f64| Ok((k.f)(x));
    if k.semi {
        integrate_semiinf(f, 0.0, k.hint, &cfg()).unwrap()
    } else {
        integrate_finite(f, 0.0, 1.0, k.hint, &cfg()).unwrap()
    }
}

#[test]
fn error_estimates_are_honest() {
    let suite = known_suite();
    assert_eq!(suite.len(), 20);
    let mut misses = Vec::new();
    for k in &suite {
        let r = run_known(k);
        assert!(r.converged, "{} did not converge", k.name);
        assert!(r.err_estimate <= cfg().abs_tol.max(cfg().rel_tol * r.value.norm()));
        let true_err = (r.value - k.want).norm();
        assert!(true_err <= 1e-7 * (1.0 + k.want.norm()), "{}: {} vs {}", k.name, r.value, k.want);
        if true_err > r.err_estimate {
            misses.push((k.name, true_err, r.err_estimate));
        }
    }
    assert!(misses.len() <= 1, "estimate exceeded by the true error: {misses:?}");
}

#[test]
fn substitution_onto_the_unit_interval_agrees() {
    let funcs: [fn(f64) -> f64; 5] = [
        |x| (-x).exp(),
        |x| 1.0 / (1.0 + x).powi(2),
        |x| (-x * x).exp(),
        |x| x * (-x).exp() / (1.0 + x),
        |x| 1.0 / (1.0 + x * x * x),
    ];
    for (i, f) in funcs.iter().enumerate() {
        let direct = integrate_semiinf(|x| Ok(c(f(x))), 0.0, SingularityHint::default(), &cfg()).unwrap();
        // x = t/(1-t), dx = dt/(1-t)^2.
        let g = |t: f64| {
            let s = 1.0 - t;
            Ok(c(f(t / s) / (s * s)))
        };
        let mapped = integrate_finite(g, 0.0, 1.0, SingularityHint::default(), &cfg()).unwrap();
        let gap = (direct.value - mapped.value).norm();
        let allowed = direct.err_estimate + mapped.err_estimate + 1e-14 * direct.value.norm();
        assert!(gap <= allowed, "function {i}: {} vs {} (gap {gap:e}, allowed {allowed:e})", direct.value, mapped.value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn linearity(
        a in -3.0f64..3.0, b in -3.0f64..3.0,
        p in 0.1f64..3.0, q in -0.6f64..2.0, w in 0.5f64..6.0,
    ) {
        let f = move |x: f64| C::new((-p * x).cos(), x.powf(q));
        let g = move |x: f64| c((w * x).sin() * (-x).exp());
        let hint = SingularityHint::left(q.min(0.0));
        let run = |h: &dyn Fn(f64) -> C| integrate_finite(|x| Ok(h(x)), 0.0, 1.0, hint, &cfg()).unwrap();
        let rf = run(&f);
        let rg = run(&g);
        let rs = run(&|x| a * f(x) + b * g(x));
        let gap = (rs.value - (a * rf.value + b * rg.value)).norm();
        let allowed = 2.0 * (rs.err_estimate + a.abs() * rf.err_estimate + b.abs() * rg.err_estimate)
            + 1e-14 * (1.0 + rs.value.norm());
        prop_assert!(gap <= allowed, "gap {gap:e} allowed {allowed:e}");
    }
}
