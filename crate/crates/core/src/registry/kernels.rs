//! Integrand building blocks shared by the catalog entries.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::RwLock;

use num_complex::Complex64;

use crate::complexfn::{gamma, log_gamma, principal_log, rgamma};
use crate::error::{Error, Result};
use crate::mittag::{ml, MLParams};
use crate::quad::{Decay, Domain, SingularityHint};
use crate::ComplexScalar;

use super::params::{ParamAssignment, Sym};
use super::Integrand;

pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub(crate) const C0: Complex64 = Complex64::new(0.0, 0.0);

pub(crate) fn c(re: f64) -> ComplexScalar {
    Complex64::new(re, 0.0)
}

/// `(e^{p l} - e^{q l}) / l`, with the Taylor form
/// `p - q + (p^2 - q^2) l / 2 + (p^3 - q^3) l^2 / 6` for `|l| < 1e-4`.
pub fn exp_diff_quotient(p: ComplexScalar, q: ComplexScalar, l: ComplexScalar) -> ComplexScalar {
    if l.norm() < 1e-4 {
        (p - q) + (p * p - q * q) * l / 2.0 + (p * p * p - q * q * q) * l * l / 6.0
    } else {
        ((p * l).exp() - (q * l).exp()) / l
    }
}

/// `(e^{p l} - 1) / l`.
pub(crate) fn expm1_quotient(p: ComplexScalar, l: f64) -> ComplexScalar {
    exp_diff_quotient(p, C0, c(l))
}

/// `Gamma(x) / Gamma(y)` without intermediate overflow.
pub(crate) fn gamma_ratio(x: ComplexScalar, y: ComplexScalar) -> Result<ComplexScalar> {
    if x.re > 0.0 && y.re > 0.0 {
        return Ok((log_gamma(x)? - log_gamma(y)?).exp());
    }
    Ok(gamma(x)? * rgamma(y))
}

/// Principal logarithm of `exp(w)`: the imaginary part reduced to `(-pi, pi]`.
pub(crate) fn wrap_log(w: ComplexScalar) -> ComplexScalar {
    let mut im = w.im.rem_euclid(2.0 * PI);
    if im > PI {
        im -= 2.0 * PI;
    }
    Complex64::new(w.re, im)
}

/// `z^k` on the principal branch; integer `k` by repeated multiplication,
/// `k = 0` as exactly one.
pub(crate) fn pow_c(z: ComplexScalar, k: ComplexScalar) -> ComplexScalar {
    if k.im == 0.0 && k.re.fract() == 0.0 && k.re.abs() <= 64.0 {
        return z.powi(k.re as i32);
    }
    (k * principal_log(z)).exp()
}

/// `E_b(-u)` for real `b`, memoized on the bit pattern of `u`.
///
/// The inner nodes of a double integral are the same for every outer
/// abscissa, so each distinct `u` is evaluated once.
pub(crate) struct MlNegCache {
    params: MLParams,
    values: RwLock<HashMap<u64, f64>>,
}

impl MlNegCache {
    pub(crate) fn new(b: f64) -> Result<Self> {
        Ok(MlNegCache {
            params: MLParams::one_param(b)?,
            values: RwLock::new(HashMap::new()),
        })
    }

    pub(crate) fn get(&self, u: f64) -> Result<f64> {
        let key = u.to_bits();
        if let Some(&v) = self.values.read().expect("cache lock").get(&key) {
            return Ok(v);
        }
        let v = ml(self.params, c(-u))?.re;
        self.values.write().expect("cache lock").insert(key, v);
        Ok(v)
    }
}

/// Function of `L = log(a u x^{-b})` multiplying the double-integral kernel.
#[derive(Debug, Clone, Copy)]
pub(crate) enum LogFactor {
    /// `L^k`; `k = 0` gives exactly one.
    Pow(ComplexScalar),
    /// `log(L) / L^p`.
    LogLogOver(i32),
}

impl LogFactor {
    fn eval(self, l: ComplexScalar) -> ComplexScalar {
        match self {
            LogFactor::Pow(k) if k == C0 => ONE,
            LogFactor::Pow(k) => pow_c(l, k),
            LogFactor::LogLogOver(0) => principal_log(l),
            LogFactor::LogLogOver(p) => principal_log(l) / l.powi(p),
        }
    }
}

/// The double-integral kernel
/// `e^{-c x} u^{m-1} x^{-b m} E_b(-u) g(log a + ln u - b ln x)`
/// with `x` outer and `u` inner.
pub(crate) struct DiKernel {
    pub m: ComplexScalar,
    pub b: f64,
    pub c: ComplexScalar,
    pub log_a: ComplexScalar,
    pub g: LogFactor,
}

impl DiKernel {
    pub(crate) fn integrand(self) -> Result<Integrand> {
        let DiKernel { m, b, c: cc, log_a, g } = self;
        if !(b > 0.0 && b < 2.0) {
            return Err(Error::domain(format!("Mittag-Leffler index b = {b} outside (0, 2)")));
        }
        let cache = MlNegCache::new(b)?;
        let bm = b * m;
        let m1 = m - 1.0;
        let f = move |x: f64, u: f64| -> Result<ComplexScalar> {
            let lx = x.ln();
            let lu = u.ln();
            let e = -cc * x - bm * lx + m1 * lu;
            // Past this the weighted value x^{1-bm} u^m e^{-cx} is below 1e-300.
            if e.re > 700.0 || e.re < -745.0 {
                return Ok(C0);
            }
            let v = cache.get(u)?;
            if v == 0.0 {
                return Ok(C0);
            }
            Ok(e.exp() * v * g.eval(log_a + lu - b * lx))
        };
        let u_decay = if b == 1.0 {
            Decay::Exponential { rate: 1.0 }
        } else {
            Decay::Algebraic { power: m.re - 2.0 }
        };
        Ok(Integrand::Double {
            outer: Domain::SemiInfinite {
                a: 0.0,
                hint: SingularityHint::left(-bm.re)
                    .with_decay(Decay::Exponential { rate: cc.re }),
            },
            inner: Domain::SemiInfinite {
                a: 0.0,
                hint: SingularityHint::left(m.re - 1.0).with_decay(u_decay),
            },
            f: Box::new(f),
        })
    }
}

/// `E_{alpha,beta}` with the indices read from `alpha` and `beta`.
pub(crate) fn ml_params(p: &ParamAssignment) -> Result<MLParams> {
    MLParams::new(p.real(Sym::Alpha)?, p.req(Sym::Beta)?)
}

/// `w E(delta x^gamma)` given `ln x`, skipping the Mittag-Leffler evaluation
/// where the weight has underflowed.
pub(crate) fn weighted_ml(
    w: ComplexScalar,
    params: MLParams,
    delta: ComplexScalar,
    gamma_: ComplexScalar,
    ln_x: f64,
) -> Result<ComplexScalar> {
    if w == C0 {
        return Ok(C0);
    }
    let z = if ln_x == f64::NEG_INFINITY { C0 } else { delta * (gamma_ * ln_x).exp() };
    Ok(w * ml(params, z)?)
}

/// Euler's constant as a complex value.
pub(crate) fn euler() -> ComplexScalar {
    c(crate::complexfn::EULER_GAMMA)
}

pub(crate) fn is_real(z: ComplexScalar) -> bool {
    z.im == 0.0
}
