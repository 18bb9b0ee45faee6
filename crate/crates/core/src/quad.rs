//! Double-exponential quadrature for complex-valued integrands.
//!
//! Finite intervals use the tanh-sinh map, `[a, inf)` uses exp-sinh. Each
//! level halves the step and reuses every previous node; the error estimate
//! is the difference between successive levels. Iterated double integrals
//! evaluate the inner integrals of one outer level in parallel, in fixed-size
//! batches, so the result does not depend on the thread count.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ComplexScalar;

/// Environment variable that caps `max_level` for every configuration built
/// through [`QuadConfig::with_env_cap`].
pub const MAX_LEVEL_ENV: &str = "MLV_QUAD_MAX_LEVEL";

const MIN_LEVEL: u32 = 3;
const BATCH: usize = 8;
const TAIL_RUN: u32 = 3;
const ROUNDING: f64 = 8.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Relative tolerance for one-dimensional integrals and inner integrals.
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_level: u32,
    /// Relative tolerance of the outer integral of a double integral.
    pub outer_rel_tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_level: 12,
            outer_rel_tol: 1e-6,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol >= 1e-14) || !(self.outer_rel_tol >= 1e-14) {
            return Err(Error::Config(format!(
                "relative tolerances must be >= 1e-14 (rel_tol = {}, outer_rel_tol = {})",
                self.rel_tol, self.outer_rel_tol
            )));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::Config("abs_tol must be non-negative".into()));
        }
        if self.max_level == 0 || self.max_level > 15 {
            return Err(Error::Config(format!(
                "max_level must be in 1..=15, got {}",
                self.max_level
            )));
        }
        Ok(())
    }

    /// Applies the `MLV_QUAD_MAX_LEVEL` cap, if set.
    pub fn with_env_cap(mut self) -> Result<Self> {
        if let Ok(raw) = std::env::var(MAX_LEVEL_ENV) {
            let cap: u32 = raw.trim().parse().map_err(|_| {
                Error::Config(format!("{MAX_LEVEL_ENV} must be a positive integer, got {raw:?}"))
            })?;
            self.max_level = self.max_level.min(cap);
        }
        self.validate()?;
        Ok(self)
    }

    /// A configuration for internal high-accuracy integrals.
    pub(crate) fn internal(rel_tol: f64) -> Self {
        QuadConfig {
            rel_tol,
            abs_tol: 1e-300,
            max_level: 10,
            outer_rel_tol: rel_tol,
        }
    }
}

/// Behaviour at infinity of a semi-infinite integrand.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Decay {
    /// `|f(x)| ~ exp(-rate x)`.
    Exponential { rate: f64 },
    /// `|f(x)| ~ x^power`.
    Algebraic { power: f64 },
    Unknown,
}

/// Endpoint behaviour of an integrand, used for validation and scaling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularityHint {
    /// `f(x) ~ (x - a)^left_exponent` near the left endpoint.
    pub left_exponent: f64,
    /// `f(x) ~ (b - x)^right_exponent` near a finite right endpoint.
    pub right_exponent: f64,
    pub decay: Decay,
}

impl Default for SingularityHint {
    fn default() -> Self {
        SingularityHint {
            left_exponent: 0.0,
            right_exponent: 0.0,
            decay: Decay::Unknown,
        }
    }
}

impl SingularityHint {
    pub fn left(exponent: f64) -> Self {
        SingularityHint {
            left_exponent: exponent,
            ..Default::default()
        }
    }

    pub fn with_right(mut self, exponent: f64) -> Self {
        self.right_exponent = exponent;
        self
    }

    pub fn with_decay(mut self, decay: Decay) -> Self {
        self.decay = decay;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum QuadWarning {
    /// Algebraic decay slower than `x^-1.05`; the tail may be truncated.
    SlowAlgebraicDecay { power: f64 },
    /// Some inner integrals of a double integral hit the level cap.
    InnerNotConverged { count: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: ComplexScalar,
    pub err_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
    pub levels: u32,
    pub warnings: Vec<QuadWarning>,
}

/// Integration domain of one axis of a double integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite { a: f64, b: f64, hint: SingularityHint },
    SemiInfinite { a: f64, hint: SingularityHint },
}

impl Domain {
    fn map(&self) -> Result<Map> {
        match *self {
            Domain::Finite { a, b, hint } => {
                check_hint(&hint, false)?;
                if !(a < b) || !a.is_finite() || !b.is_finite() {
                    return Err(Error::domain(format!("need finite a < b, got [{a}, {b}]")));
                }
                Ok(Map::Finite { a, b })
            }
            Domain::SemiInfinite { a, hint } => {
                check_hint(&hint, true)?;
                if !a.is_finite() {
                    return Err(Error::domain("left endpoint must be finite"));
                }
                let scale = match hint.decay {
                    Decay::Exponential { rate } if rate > 0.0 => (1.0 / rate).clamp(1e-3, 1e3),
                    _ => 1.0,
                };
                Ok(Map::SemiInf { a, scale })
            }
        }
    }

    fn warnings(&self) -> Vec<QuadWarning> {
        match self {
            Domain::SemiInfinite {
                hint:
                    SingularityHint {
                        decay: Decay::Algebraic { power },
                        ..
                    },
                ..
            } if *power > -1.05 => vec![QuadWarning::SlowAlgebraicDecay { power: *power }],
            _ => Vec::new(),
        }
    }
}

fn check_hint(hint: &SingularityHint, semi_infinite: bool) -> Result<()> {
    if hint.left_exponent <= -1.0 {
        return Err(Error::domain(format!(
            "left endpoint exponent {} is not integrable",
            hint.left_exponent
        )));
    }
    if !semi_infinite && hint.right_exponent <= -1.0 {
        return Err(Error::domain(format!(
            "right endpoint exponent {} is not integrable",
            hint.right_exponent
        )));
    }
    if semi_infinite {
        if let Decay::Algebraic { power } = hint.decay {
            if power >= -1.0 {
                return Err(Error::domain(format!(
                    "algebraic decay x^{power} is not integrable at infinity"
                )));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
enum Map {
    Finite { a: f64, b: f64 },
    SemiInf { a: f64, scale: f64 },
}

impl Map {
    /// Abscissa and Jacobian at `t`, or `None` once the node has collapsed
    /// onto an endpoint or left the representable range.
    fn node(&self, t: f64) -> Option<(f64, f64)> {
        match *self {
            Map::Finite { a, b } => {
                let d = 0.5 * (b - a);
                let u = FRAC_PI_2 * t.sinh();
                let e = (-2.0 * u.abs()).exp();
                let delta = 2.0 * e / (1.0 + e);
                let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
                let w = d * FRAC_PI_2 * t.cosh() * sech2;
                let x = if t >= 0.0 { b - d * delta } else { a + d * delta };
                (d * delta > 1e-290 && x > a && x < b && w > 0.0 && w.is_finite()).then_some((x, w))
            }
            Map::SemiInf { a, scale } => {
                let arg = FRAC_PI_2 * t.sinh();
                if arg > 690.0 {
                    return None;
                }
                let off = scale * arg.exp();
                let x = a + off;
                let w = off * FRAC_PI_2 * t.cosh();
                (off > 1e-290 && x > a && w > 0.0 && w.is_finite()).then_some((x, w))
            }
        }
    }
}

/// One integrand sample: value and an absolute error attached to it
/// (non-zero only when the sample is itself an inner integral).
type Sample = (ComplexScalar, f64);

struct Tol {
    rel: f64,
    abs: f64,
    max_level: u32,
}

struct Scan {
    sum: ComplexScalar,
    /// `sum |w f|`, the scale of the rounding error in `sum`.
    abs: f64,
    err: f64,
    extent: f64,
    evals: u64,
}

fn scan<E>(
    map: &Map,
    eval: &E,
    dir: f64,
    first: f64,
    step: f64,
    min_extent: f64,
    tol: &Tol,
    max_contrib: &mut f64,
) -> Result<Scan>
where
    E: Fn(&[f64]) -> Result<Vec<Sample>>,
{
    let mut out = Scan {
        sum: Complex64::new(0.0, 0.0),
        abs: 0.0,
        err: 0.0,
        extent: 0.0,
        evals: 0,
    };
    let mut quiet = 0u32;
    let mut i = 0usize;
    loop {
        let mut ts = Vec::with_capacity(BATCH);
        let mut nodes = Vec::with_capacity(BATCH);
        let mut ended = false;
        for _ in 0..BATCH {
            let t = dir * (first + i as f64 * step);
            i += 1;
            match map.node(t) {
                Some(n) => {
                    ts.push(t);
                    nodes.push(n);
                }
                None => {
                    ended = true;
                    break;
                }
            }
        }
        let xs: Vec<f64> = nodes.iter().map(|n| n.0).collect();
        let values = if xs.is_empty() { Vec::new() } else { eval(&xs)? };
        out.evals += xs.len() as u64;
        for ((t, (x, w)), (f, ferr)) in ts.iter().zip(&nodes).zip(values) {
            let c = f * *w;
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::IntegrandNaN { x: *x });
            }
            out.sum += c;
            out.err += ferr * w;
            out.extent = t.abs();
            let mag = c.norm();
            out.abs += mag;
            if mag > *max_contrib {
                *max_contrib = mag;
            }
            let tail_eps = (0.1 * tol.abs).max(1e-3 * tol.rel * *max_contrib);
            if t.abs() >= min_extent && mag <= tail_eps {
                quiet += 1;
                if quiet >= TAIL_RUN {
                    return Ok(out);
                }
            } else {
                quiet = 0;
            }
        }
        if ended {
            return Ok(out);
        }
    }
}

fn de_integrate<E>(map: Map, tol: Tol, eval: &E) -> Result<QuadResult>
where
    E: Fn(&[f64]) -> Result<Vec<Sample>>,
{
    let mut max_contrib = 0.0f64;
    let mut evals = 0u64;

    // level 0: t = 0, +-1, +-2, ...
    let (x0, w0) = map.node(0.0).expect("t = 0 is always a valid node");
    let v0 = eval(&[x0])?;
    evals += 1;
    let c0 = v0[0].0 * w0;
    if !(c0.re.is_finite() && c0.im.is_finite()) {
        return Err(Error::IntegrandNaN { x: x0 });
    }
    max_contrib = max_contrib.max(c0.norm());
    let mut raw = c0;
    let mut raw_err = v0[0].1 * w0;
    let mut raw_abs = c0.norm();
    let mut extent = [0.0f64; 2];
    for (k, dir) in [1.0, -1.0].into_iter().enumerate() {
        let s = scan(&map, eval, dir, 1.0, 1.0, 2.0, &tol, &mut max_contrib)?;
        raw += s.sum;
        raw_err += s.err;
        raw_abs += s.abs;
        extent[k] = s.extent;
        evals += s.evals;
    }
    let mut h = 1.0;
    let mut prev = raw * h;

    for level in 1..=tol.max_level {
        h *= 0.5;
        for (k, dir) in [1.0, -1.0].into_iter().enumerate() {
            let s = scan(&map, eval, dir, h, 2.0 * h, extent[k], &tol, &mut max_contrib)?;
            raw += s.sum;
            raw_err += s.err;
            raw_abs += s.abs;
            extent[k] = extent[k].max(s.extent);
            evals += s.evals;
        }
        let cur = raw * h;
        // The level difference can vanish below rounding; floor it there.
        let est = (cur - prev).norm() + (raw_err + ROUNDING * raw_abs) * h;
        let converged = level >= MIN_LEVEL && est <= tol.abs.max(tol.rel * cur.norm());
        if converged || level == tol.max_level {
            return Ok(QuadResult {
                value: cur,
                err_estimate: est,
                evaluations: evals,
                converged,
                levels: level,
                warnings: Vec::new(),
            });
        }
        prev = cur;
    }
    unreachable!("the level loop always returns")
}

fn pointwise<F>(f: &F) -> impl Fn(&[f64]) -> Result<Vec<Sample>> + '_
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    move |xs: &[f64]| {
        xs.iter()
            .map(|&x| f(x).map(|v| (v, 0.0)))
            .collect::<Result<Vec<_>>>()
    }
}

/// `int_a^b f(x) dx` by tanh-sinh.
pub fn integrate_finite<F>(
    f: F,
    a: f64,
    b: f64,
    hint: SingularityHint,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    cfg.validate()?;
    let domain = Domain::Finite { a, b, hint };
    let tol = Tol {
        rel: cfg.rel_tol,
        abs: cfg.abs_tol,
        max_level: cfg.max_level,
    };
    let mut r = de_integrate(domain.map()?, tol, &pointwise(&f))?;
    r.warnings = domain.warnings();
    Ok(r)
}

/// `int_a^inf f(x) dx` by exp-sinh.
pub fn integrate_semiinf<F>(
    f: F,
    a: f64,
    hint: SingularityHint,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<ComplexScalar>,
{
    cfg.validate()?;
    let domain = Domain::SemiInfinite { a, hint };
    let tol = Tol {
        rel: cfg.rel_tol,
        abs: cfg.abs_tol,
        max_level: cfg.max_level,
    };
    let mut r = de_integrate(domain.map()?, tol, &pointwise(&f))?;
    r.warnings = domain.warnings();
    Ok(r)
}

/// Iterated integral `int_outer int_inner f(x, u) du dx`.
///
/// The inner tolerance is `min(rel_tol, outer_rel_tol / 10)`. Inner errors
/// are reported with the outer abscissa attached.
pub fn integrate_double<F>(
    f: F,
    outer: Domain,
    inner: Domain,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> Result<ComplexScalar> + Sync,
{
    cfg.validate()?;
    let outer_map = outer.map()?;
    let inner_map = inner.map()?;
    let inner_rel = cfg.rel_tol.min(cfg.outer_rel_tol / 10.0).max(1e-14);
    let inner_not_converged = std::sync::atomic::AtomicUsize::new(0);
    let inner_evals = std::sync::atomic::AtomicU64::new(0);

    let inner_at = |x: f64| -> Result<Sample> {
        let g = |u: f64| f(x, u);
        let tol = Tol {
            rel: inner_rel,
            abs: cfg.abs_tol * 1e-3,
            max_level: cfg.max_level,
        };
        let r = de_integrate(inner_map, tol, &pointwise(&g)).map_err(|e| Error::Inner {
            outer: x,
            source: Box::new(e),
        })?;
        inner_evals.fetch_add(r.evaluations, std::sync::atomic::Ordering::Relaxed);
        if !r.converged {
            inner_not_converged.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        Ok((r.value, r.err_estimate))
    };
    let eval = |xs: &[f64]| -> Result<Vec<Sample>> {
        xs.par_iter()
            .map(|&x| inner_at(x))
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    };
    let tol = Tol {
        rel: cfg.outer_rel_tol,
        abs: cfg.abs_tol,
        max_level: cfg.max_level,
    };
    let mut r = de_integrate(outer_map, tol, &eval)?;
    r.evaluations = inner_evals.load(std::sync::atomic::Ordering::Relaxed);
    let mut warnings = outer.warnings();
    warnings.extend(inner.warnings());
    let failed = inner_not_converged.load(std::sync::atomic::Ordering::Relaxed);
    if failed > 0 {
        warnings.push(QuadWarning::InnerNotConverged { count: failed });
    }
    r.warnings = warnings;
    Ok(r)
}
