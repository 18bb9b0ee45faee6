//! Hurwitz zeta, the Hurwitz-Lerch transcendent `Phi(z, s, v)`, the
//! polylogarithm, and derivatives in `s` by Cauchy-circle sums.
//!
//! `Phi` is evaluated by one of several routes chosen from the arguments:
//! the defining series inside the unit disc, the Laplace-type integral
//! `Gamma(s)^{-1} int_0^inf t^{s-1} e^{-vt} / (1 - z e^{-t}) dt` near and on
//! the unit circle, a Hurwitz reduction at `z = -1`, and a finite
//! Eulerian-number formula for non-positive integer `s`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complexfn::{
    as_nonpositive_integer, bernoulli, binom, digamma, principal_log, rgamma,
};
use crate::error::{Error, Result};
use crate::quad::{integrate_semiinf, Decay, QuadConfig, SingularityHint};
use crate::ComplexScalar;

const C0: Complex64 = Complex64::new(0.0, 0.0);

/// Bernoulli polynomial `B_n(x)` for `n <= 40`.
pub fn bernoulli_poly(n: usize, x: ComplexScalar) -> ComplexScalar {
    assert!(n <= 40, "Bernoulli polynomials are tabulated up to degree 40");
    let mut acc = C0;
    let mut c = 1.0;
    for k in 0..=n {
        acc += c * bernoulli(k) * x.powu((n - k) as u32);
        c = c * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

/// Hurwitz zeta function `zeta(s, a) = sum_{n>=0} (n + a)^{-s}`.
///
/// Euler-Maclaurin summation; non-positive integer `s` uses the Bernoulli
/// polynomial closed form.
pub fn hurwitz_zeta(s: ComplexScalar, a: ComplexScalar) -> Result<ComplexScalar> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("hurwitz_zeta has a pole at s = 1".into()));
    }
    if let Some(n) = as_nonpositive_integer(a) {
        return Err(Error::Pole(format!("hurwitz_zeta with a = {n}")));
    }
    if let Some(n) = as_nonpositive_integer(s).filter(|&n| n >= -39) {
        let m = (1 - n) as usize;
        return Ok(-bernoulli_poly(m, a) / m as f64);
    }
    let target = s.norm() + 12.0;
    let mut n_direct = 10usize;
    while (a + n_direct as f64).norm() < target || (a + n_direct as f64).re <= 1.0 {
        n_direct += 1;
    }
    let mut sum = C0;
    for k in 0..n_direct {
        sum += (-s * principal_log(a + k as f64)).exp();
    }
    let w = a + n_direct as f64;
    let lw = w.ln();
    let w_ms = (-s * lw).exp();
    let mut tail = w_ms * w / (s - 1.0) + 0.5 * w_ms;
    // sum_j B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}
    let inv_w2 = 1.0 / (w * w);
    let mut poch = s;
    let mut wpow = w_ms / w;
    let mut fact = 2.0;
    for j in 1..=20usize {
        let term = bernoulli(2 * j) / fact * poch * wpow;
        tail += term;
        if term.norm() <= 1e-17 * (sum + tail).norm() {
            break;
        }
        let jj = (2 * j) as f64;
        poch *= (s + jj - 1.0) * (s + jj);
        wpow *= inv_w2;
        fact *= (jj + 1.0) * (jj + 2.0);
    }
    Ok(sum + tail)
}

/// Arguments of `Phi(z, s, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LerchArgs {
    pub z: ComplexScalar,
    pub s: ComplexScalar,
    pub v: ComplexScalar,
}

/// Evaluation route selected for a set of [`LerchArgs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LerchRoute {
    /// `z = 0`: the single term `v^{-s}`.
    Origin,
    /// `z = 1`, `Re s > 1`: Hurwitz zeta.
    Hurwitz,
    /// `z = -1`: difference of two Hurwitz zeta values.
    AlternatingHurwitz,
    /// `s = -n`: finite sum of negative-order polylogarithms.
    FiniteNegativeOrder,
    Series,
    Integral,
}

const CIRCLE_EPS: f64 = 1e-12;

impl LerchArgs {
    pub fn new(z: ComplexScalar, s: ComplexScalar, v: ComplexScalar) -> Self {
        LerchArgs { z, s, v }
    }

    /// The route [`lerch_phi`] will take, or the reason no route applies.
    pub fn route(&self) -> Result<LerchRoute> {
        let LerchArgs { z, s, v } = *self;
        let r = z.norm();
        if r > 1.0 + CIRCLE_EPS {
            return Err(Error::region(format!("Phi needs |z| <= 1, got |z| = {r}")));
        }
        if r == 0.0 {
            return Ok(LerchRoute::Origin);
        }
        if (z - 1.0).norm() < 1e-14 {
            if s.re > 1.0 {
                return Ok(LerchRoute::Hurwitz);
            }
            return Err(Error::region(format!(
                "Phi(1, s, v) needs Re s > 1, got s = {s}"
            )));
        }
        if as_nonpositive_integer(s).is_some_and(|n| n >= -30) {
            return Ok(LerchRoute::FiniteNegativeOrder);
        }
        if (z + 1.0).norm() < 1e-14 {
            return Ok(LerchRoute::AlternatingHurwitz);
        }
        if r <= 0.95 {
            return Ok(LerchRoute::Series);
        }
        if s.re > 0.0 && v.re > 0.0 {
            return Ok(LerchRoute::Integral);
        }
        if r < 1.0 - 1e-9 {
            return Ok(LerchRoute::Series);
        }
        Err(Error::region(format!(
            "Phi on the unit circle needs Re s > 0 and Re v > 0, z = -1, or s a \
             non-positive integer (z = {z}, s = {s}, v = {v})"
        )))
    }
}

fn check_v(v: ComplexScalar) -> Result<()> {
    if let Some(n) = as_nonpositive_integer(v) {
        return Err(Error::Pole(format!("Phi with v = {n}")));
    }
    Ok(())
}

/// Hurwitz-Lerch transcendent `Phi(z, s, v) = sum_{n>=0} z^n (n + v)^{-s}`
/// and its continuation to the unit circle.
pub fn lerch_phi(args: LerchArgs) -> Result<ComplexScalar> {
    check_v(args.v)?;
    let LerchArgs { z, s, v } = args;
    match args.route()? {
        LerchRoute::Origin => Ok((-s * principal_log(v)).exp()),
        LerchRoute::Hurwitz => hurwitz_zeta(s, v),
        LerchRoute::AlternatingHurwitz => {
            if s == Complex64::new(1.0, 0.0) {
                return Ok(0.5 * (digamma((v + 1.0) / 2.0)? - digamma(v / 2.0)?));
            }
            let scale = (-s * 2f64.ln()).exp();
            Ok(scale * (hurwitz_zeta(s, v / 2.0)? - hurwitz_zeta(s, (v + 1.0) / 2.0)?))
        }
        LerchRoute::FiniteNegativeOrder => {
            let n = -as_nonpositive_integer(s).expect("route checked s") as usize;
            Ok(lerch_negative_order(z, n, v))
        }
        LerchRoute::Series => lerch_phi_series(args),
        LerchRoute::Integral => lerch_phi_integral(args),
    }
}

/// `Phi(z, -n, v) = sum_j C(n, j) v^{n-j} sum_{k>=0} k^j z^k`, the inner
/// sums being rational functions of `z` with Eulerian-number numerators.
fn lerch_negative_order(z: ComplexScalar, n: usize, v: ComplexScalar) -> ComplexScalar {
    let one_mz = 1.0 - z;
    let mut eulerian = vec![1.0f64];
    let mut total = C0;
    for j in 0..=n {
        let moment = if j == 0 {
            1.0 / one_mz
        } else {
            if j > 1 {
                let prev = eulerian.clone();
                eulerian = vec![0.0; j];
                for i in 0..j {
                    let keep = if i < prev.len() { (i + 1) as f64 * prev[i] } else { 0.0 };
                    let lift = if i >= 1 && i - 1 < prev.len() {
                        (j - i) as f64 * prev[i - 1]
                    } else {
                        0.0
                    };
                    eulerian[i] = keep + lift;
                }
            }
            let mut poly = C0;
            for &c in eulerian.iter().rev() {
                poly = poly * z + c;
            }
            z * poly / one_mz.powu(j as u32 + 1)
        };
        let vpow = if n == j { Complex64::new(1.0, 0.0) } else { v.powu((n - j) as u32) };
        total += binom(Complex64::new(n as f64, 0.0), j as u64) * vpow * moment;
    }
    total
}

/// The defining series of `Phi`, valid for `|z| < 1`.
pub fn lerch_phi_series(args: LerchArgs) -> Result<ComplexScalar> {
    check_v(args.v)?;
    let LerchArgs { z, s, v } = args;
    if z.norm() >= 1.0 {
        return Err(Error::region(format!(
            "the Phi series needs |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    let mut sum = C0;
    let mut zpow = Complex64::new(1.0, 0.0);
    let mut quiet = 0;
    for n in 0..2_000_000usize {
        let term = zpow * (-s * principal_log(v + n as f64)).exp();
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            quiet += 1;
            if quiet >= 5 && n > 10 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
        zpow *= z;
        if zpow.norm() == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::no_conv("Phi series", format!("z = {z}, s = {s}, v = {v}")))
}

/// Integral representation of `Phi`, valid for `|z| <= 1`, `z != 1`,
/// `Re s > 0`, `Re v > 0`.
pub fn lerch_phi_integral(args: LerchArgs) -> Result<ComplexScalar> {
    let LerchArgs { z, s, v } = args;
    if z.norm() > 1.0 + CIRCLE_EPS || (z - 1.0).norm() < 1e-14 || s.re <= 0.0 || v.re <= 0.0 {
        return Err(Error::region(format!(
            "the Phi integral needs |z| <= 1, z != 1, Re s > 0, Re v > 0 \
             (z = {z}, s = {s}, v = {v})"
        )));
    }
    let sm1 = s - 1.0;
    let f = |t: f64| -> Result<ComplexScalar> {
        let num = (sm1 * t.ln() - v * t).exp();
        let den = (1.0 - z) - z * (-t).exp_m1();
        Ok(num / den)
    };
    let hint = SingularityHint::left(s.re - 1.0).with_decay(Decay::Exponential { rate: v.re });
    let r = integrate_semiinf(f, 0.0, hint, &QuadConfig::internal(1e-13))?;
    Ok(r.value * rgamma(s))
}

/// Polylogarithm `Li_s(z) = z Phi(z, s, 1)`.
pub fn polylog(s: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    if z.norm() == 0.0 {
        return Ok(C0);
    }
    Ok(z * lerch_phi(LerchArgs::new(z, s, Complex64::new(1.0, 0.0)))?)
}

const CAUCHY_NODES: usize = 64;

/// `d^order/ds^order f` at `s0` by the trapezoidal rule on a circle.
///
/// Uses 64 nodes, then 128; fails if the two disagree beyond `1e-9`
/// relative.
pub fn s_derivative<F>(f: F, s0: ComplexScalar, order: u32, radius: f64) -> Result<ComplexScalar>
where
    F: Fn(ComplexScalar) -> Result<ComplexScalar>,
{
    if !(radius > 0.0) {
        return Err(Error::domain("Cauchy radius must be positive"));
    }
    let n2 = 2 * CAUCHY_NODES;
    let mut even = C0;
    let mut odd = C0;
    for k in 0..n2 {
        let theta = 2.0 * PI * k as f64 / n2 as f64;
        let e = Complex64::from_polar(1.0, theta);
        let val = f(s0 + radius * e)? * Complex64::from_polar(1.0, -(order as f64) * theta);
        if k % 2 == 0 {
            even += val;
        } else {
            odd += val;
        }
    }
    let fact: f64 = (1..=order).map(|j| j as f64).product();
    let scale = fact / radius.powi(order as i32);
    let d64 = even * scale / CAUCHY_NODES as f64;
    let d128 = (even + odd) * scale / n2 as f64;
    if (d128 - d64).norm() > 1e-9 * d128.norm().max(1.0) {
        return Err(Error::no_conv(
            "Cauchy-circle derivative",
            format!("64 and 128 nodes differ by {:e} at s0 = {s0}", (d128 - d64).norm()),
        ));
    }
    Ok(d128)
}

/// `d^order/ds^order zeta(s, a)`; the circle radius is 0.05, shrunk to half
/// the distance to the pole at `s = 1`.
pub fn hurwitz_zeta_sderiv(s: ComplexScalar, a: ComplexScalar, order: u32) -> Result<ComplexScalar> {
    let dist = (s - 1.0).norm();
    if dist == 0.0 {
        return Err(Error::Pole("zeta(s, a) derivative at s = 1".into()));
    }
    let radius = 0.05f64.min(0.5 * dist);
    s_derivative(|w| hurwitz_zeta(w, a), s, order, radius)
}

/// `d/ds Phi(z, s, v)`.
pub fn lerch_phi_sderiv(args: LerchArgs) -> Result<ComplexScalar> {
    let LerchArgs { z, s, v } = args;
    s_derivative(|w| lerch_phi(LerchArgs::new(z, w, v)), s, 1, 0.05)
}

/// Generalized Stieltjes constant `gamma_1(a)`, from
/// `zeta(s, a) = 1/(s-1) + sum_n (-1)^n gamma_n(a) (s-1)^n / n!`.
pub fn stieltjes_gamma1(a: ComplexScalar) -> Result<ComplexScalar> {
    let one = Complex64::new(1.0, 0.0);
    let regular = |s: ComplexScalar| Ok(hurwitz_zeta(s, a)? - 1.0 / (s - 1.0));
    Ok(-s_derivative(regular, one, 1, 0.5)?)
}
