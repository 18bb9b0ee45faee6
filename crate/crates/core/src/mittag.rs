//! Two-parameter Mittag-Leffler function
//! `E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta)`.
//!
//! Small arguments use the Taylor series with compensated summation. Large
//! arguments use a Hankel-type contour: the residues of
//! `e^s s^{alpha-beta} / (s^alpha - z)` inside the sector `|arg s| < phi`
//! plus the integral along the two rays `arg s = +-phi`. On the negative
//! real axis with `alpha < 1` the algebraic asymptotic expansion is used
//! whenever its optimal truncation error is below double precision.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complexfn::{log_gamma, principal_log, rgamma};
use crate::error::{Error, Result};
use crate::quad::{integrate_semiinf, Decay, QuadConfig, SingularityHint};
use crate::ComplexScalar;

const C0: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLParams {
    alpha: f64,
    beta: ComplexScalar,
}

impl MLParams {
    pub fn new(alpha: f64, beta: ComplexScalar) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain(format!(
                "Mittag-Leffler index alpha must be positive, got {alpha}"
            )));
        }
        if !(beta.re.is_finite() && beta.im.is_finite()) {
            return Err(Error::domain("beta must be finite"));
        }
        Ok(MLParams { alpha, beta })
    }

    /// `E_alpha = E_{alpha,1}`.
    pub fn one_param(alpha: f64) -> Result<Self> {
        Self::new(alpha, Complex64::new(1.0, 0.0))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> ComplexScalar {
        self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MlRoute {
    Exponential,
    Series,
    Asymptotic,
    Contour { phi: f64 },
}

/// A Mittag-Leffler value with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MlEval {
    pub value: ComplexScalar,
    pub route: MlRoute,
    /// `sum |term| / |sum|` for the series route, 1 otherwise.
    pub condition: f64,
    /// Set when the series route lost more than six digits to cancellation.
    pub accuracy_warning: bool,
}

/// Radius below which the Taylor series is used. Cancellation in the series
/// grows like `exp(|z|^{1/alpha})`, so the radius shrinks for small `alpha`.
pub fn series_radius(alpha: f64) -> f64 {
    5.0f64.min(8f64.powf(alpha))
}

pub fn ml(params: MLParams, z: ComplexScalar) -> Result<ComplexScalar> {
    ml_eval(params, z).map(|e| e.value)
}

pub fn ml_eval(params: MLParams, z: ComplexScalar) -> Result<MlEval> {
    let mut e = ml_route(params, z)?;
    // Real indices and argument give a real value; drop the rounding noise.
    if z.im == 0.0 && params.beta.im == 0.0 {
        e.value.im = 0.0;
    }
    Ok(e)
}

fn ml_route(params: MLParams, z: ComplexScalar) -> Result<MlEval> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("non-finite Mittag-Leffler argument {z}")));
    }
    let MLParams { alpha, beta } = params;
    if alpha == 1.0 && beta == Complex64::new(1.0, 0.0) {
        return Ok(plain(z.exp(), MlRoute::Exponential));
    }
    if z.norm() <= series_radius(alpha) {
        return ml_series(params, z);
    }
    if z.im == 0.0 && z.re < -20.0 && alpha < 1.0 {
        if let Some((value, _)) = asymptotic_negative(alpha, beta, -z.re, 1e-16) {
            return Ok(plain(value, MlRoute::Asymptotic));
        }
    }
    ml_contour(params, z)
}

fn plain(value: ComplexScalar, route: MlRoute) -> MlEval {
    MlEval {
        value,
        route,
        condition: 1.0,
        accuracy_warning: false,
    }
}

/// Taylor series with Kahan-compensated summation.
pub fn ml_series(params: MLParams, z: ComplexScalar) -> Result<MlEval> {
    let MLParams { alpha, beta } = params;
    if z.norm() == 0.0 {
        return Ok(plain(rgamma(beta), MlRoute::Series));
    }
    let lz = principal_log(z);
    let mut sum = C0;
    let mut comp = C0;
    let mut abs_sum = 0.0;
    let mut prev = f64::INFINITY;
    let mut quiet = 0;
    for k in 0..5000u32 {
        let kf = k as f64;
        let arg = beta + alpha * kf;
        let term = if arg.re > 5.0 {
            (kf * lz - log_gamma(arg)?).exp()
        } else {
            z.powu(k) * rgamma(arg)
        };
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        let mag = term.norm();
        abs_sum += mag;
        if arg.re > 1.0 && mag <= prev && mag <= 1e-17 * sum.norm() {
            quiet += 1;
            if quiet >= 3 {
                let condition = if sum.norm() > 0.0 { abs_sum / sum.norm() } else { f64::INFINITY };
                return Ok(MlEval {
                    value: sum,
                    route: MlRoute::Series,
                    condition,
                    accuracy_warning: condition > 1e6,
                });
            }
        } else {
            quiet = 0;
        }
        prev = mag;
    }
    Err(Error::no_conv("Mittag-Leffler series", format!("alpha = {alpha}, beta = {beta}, z = {z}")))
}

/// `-sum_{n>=1} z^{-n} / Gamma(beta - alpha n)` at `z = -u`, truncated at its
/// smallest term. Returns the value and the first omitted term, or `None`
/// if that term exceeds `rel` times the value.
fn asymptotic_negative(alpha: f64, beta: ComplexScalar, u: f64, rel: f64) -> Option<(ComplexScalar, f64)> {
    let mut sum = C0;
    let mut best = f64::INFINITY;
    let mut upow = 1.0;
    for n in 1..=80 {
        upow /= -u;
        if upow == 0.0 {
            // later terms have underflowed
            return (sum.norm() > 0.0).then_some((sum, 0.0));
        }
        let term = -upow * rgamma(beta - alpha * n as f64);
        let mag = term.norm();
        if mag == 0.0 {
            continue;
        }
        if mag > best {
            break;
        }
        if mag <= rel * sum.norm() {
            return Some((sum, mag));
        }
        best = mag;
        sum += term;
    }
    None
}

/// Estimate of `E_alpha(-u)`, `0 < alpha <= 1`, from the algebraic
/// asymptotic expansion, with the first omitted term as error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailEstimate {
    pub value: f64,
    pub bound: f64,
}

pub fn ml_deriv_free_tail(alpha: f64, u: f64, tol: f64) -> Result<TailEstimate> {
    if !(alpha > 0.0 && alpha <= 1.0) || !(u > 0.0) {
        return Err(Error::domain(format!(
            "tail expansion needs 0 < alpha <= 1 and u > 0 (alpha = {alpha}, u = {u})"
        )));
    }
    if alpha == 1.0 {
        return Ok(TailEstimate { value: (-u).exp(), bound: 0.0 });
    }
    let mut sum = 0.0f64;
    let mut best = f64::INFINITY;
    let mut upow = 1.0;
    for n in 1..=200 {
        upow /= -u;
        if upow == 0.0 {
            // later terms have underflowed
            return Ok(TailEstimate { value: sum, bound: 0.0 });
        }
        let term = -upow * rgamma(Complex64::new(1.0 - alpha * n as f64, 0.0)).re;
        let mag = term.abs();
        if mag == 0.0 {
            continue;
        }
        if mag <= tol * sum.abs() {
            return Ok(TailEstimate { value: sum, bound: mag });
        }
        if mag > best {
            break;
        }
        best = mag;
        sum += term;
    }
    Err(Error::no_conv(
        "Mittag-Leffler tail expansion",
        format!("smallest term {best:e} exceeds tolerance {tol:e} at u = {u}"),
    ))
}

/// Contour route: residues inside `|arg s| < phi` plus the two ray integrals.
pub fn ml_contour(params: MLParams, z: ComplexScalar) -> Result<MlEval> {
    let MLParams { alpha, beta } = params;
    if z.norm() == 0.0 {
        return Ok(plain(rgamma(beta), MlRoute::Series));
    }
    // The ray integrand is integrable at 0 only for Re beta < 1 + alpha;
    // lower beta with E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z.
    if beta.re >= 1.0 + alpha {
        let lower = MLParams { alpha, beta: beta - alpha };
        let e = ml_contour(lower, z)?;
        return Ok(MlEval {
            value: (e.value - rgamma(beta - alpha)) / z,
            ..e
        });
    }
    let rho = z.norm().powf(1.0 / alpha);
    let zarg = z.arg();
    let pole_angles: Vec<f64> = {
        let jmin = ((-(PI + 1.0) * alpha - zarg) / (2.0 * PI)).floor() as i64;
        let jmax = (((PI + 1.0) * alpha - zarg) / (2.0 * PI)).ceil() as i64;
        (jmin..=jmax).map(|j| (zarg + 2.0 * PI * j as f64) / alpha).collect()
    };
    let phi = choose_ray_angle(&pole_angles);

    let mut residues = C0;
    for &theta in &pole_angles {
        if theta.abs() < phi {
            let ls = Complex64::new(rho.ln(), theta);
            residues += ((1.0 - beta) * ls + rho * Complex64::from_polar(1.0, theta)).exp() / alpha;
        }
    }

    let amb = alpha - beta;
    let ray = |r: f64, psi: f64| -> ComplexScalar {
        if r * psi.cos() < -745.0 {
            return C0;
        }
        let lr = r.ln();
        let e = Complex64::from_polar(1.0, psi);
        let s_pow = (amb * Complex64::new(lr, psi)).exp();
        let s_alpha = Complex64::from_polar(r.powf(alpha), alpha * psi);
        (r * e).exp() * s_pow * e / (s_alpha - z)
    };
    let f = |r: f64| -> Result<ComplexScalar> {
        Ok((ray(r, phi) - ray(r, -phi)) / Complex64::new(0.0, 2.0 * PI))
    };
    let hint = SingularityHint::left(amb.re).with_decay(Decay::Exponential { rate: -phi.cos() });
    let integral = integrate_semiinf(f, 0.0, hint, &QuadConfig::internal(1e-13))?;
    Ok(MlEval {
        value: residues + integral.value,
        route: MlRoute::Contour { phi },
        condition: 1.0,
        accuracy_warning: false,
    })
}

/// Keeps the rays away from the poles: `pi` unless a pole is within 0.1 rad
/// of it, otherwise the candidate angle farthest from every pole.
fn choose_ray_angle(pole_angles: &[f64]) -> f64 {
    let dist = |phi: f64| {
        pole_angles
            .iter()
            .map(|&t| (t - phi).abs().min((t + phi).abs()))
            .fold(f64::INFINITY, f64::min)
    };
    if dist(PI) >= 0.1 {
        return PI;
    }
    [7.0 * PI / 8.0, 3.0 * PI / 4.0, 5.0 * PI / 8.0]
        .into_iter()
        .max_by(|a, b| dist(*a).total_cmp(&dist(*b)))
        .unwrap_or(PI)
}

/// `E_alpha(-u)` from the real spectral representation
/// `int_0^inf e^{-r t} K_alpha(r) dr`, `t = u^{1/alpha}`, with
/// `K_alpha(r) = r^{alpha-1} sin(pi alpha) / (pi (r^{2 alpha} + 2 r^alpha cos(pi alpha) + 1))`.
///
/// For `1 < alpha < 2` the two poles inside the sector add
/// `(2/alpha) e^{t cos(pi/alpha)} cos(t sin(pi/alpha))`.
pub fn ml_neg_spectral(alpha: f64, u: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 2.0 && alpha != 1.0) || !(u > 0.0) {
        return Err(Error::domain(format!(
            "spectral form needs 0 < alpha < 2, alpha != 1, u > 0 (alpha = {alpha}, u = {u})"
        )));
    }
    let t = u.powf(1.0 / alpha);
    let (sa, ca) = (PI * alpha).sin_cos();
    let f = |r: f64| -> Result<ComplexScalar> {
        if r * t > 745.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let ra = r.powf(alpha);
        let k = r.powf(alpha - 1.0) * sa / (PI * (ra * ra + 2.0 * ra * ca + 1.0));
        Ok(Complex64::new((-r * t).exp() * k, 0.0))
    };
    let hint = SingularityHint::left(alpha - 1.0).with_decay(Decay::Exponential { rate: t });
    let mut value = integrate_semiinf(f, 0.0, hint, &QuadConfig::internal(1e-13))?.value.re;
    if alpha > 1.0 {
        let (sb, cb) = (PI / alpha).sin_cos();
        value += 2.0 / alpha * (t * cb).exp() * (t * sb).cos();
    }
    Ok(value)
}

/// Mellin transform `int_0^inf u^{s-1} E_b(-u) du = Gamma(s) Gamma(1-s) / Gamma(1 - b s)`.
pub fn mellin_ml_neg(s: ComplexScalar, b: f64) -> Result<ComplexScalar> {
    if !(s.re > 0.0 && s.re < 1.0) || !(b > 0.0) {
        return Err(Error::domain(format!(
            "Mellin transform of E_b(-u) needs 0 < Re s < 1 and b > 0 (s = {s}, b = {b})"
        )));
    }
    Ok(PI / (PI * s).sin() * rgamma(1.0 - b * s))
}
