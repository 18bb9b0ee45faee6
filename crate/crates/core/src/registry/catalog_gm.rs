//! Single integrals of the two-parameter Mittag-Leffler function.
//!
//! Integrals over `[0, 1]` whose integrand carries `log(1/x)` are evaluated
//! after the substitution `x = e^{-y}`, which turns `log(1/x)` into `y`
//! exactly and moves the `x -> 1` behaviour to `y -> 0`, where no
//! cancellation occurs.

use std::f64::consts::PI;

use crate::complexfn::{
    binom, digamma, gamma, hyp2f1, log_gamma, principal_log, rgamma,
    upper_incomplete_gamma_scaled,
};
use crate::error::{Error, Result};
use crate::mittag::MLParams;
use crate::quad::{Decay, Domain, SingularityHint};
use crate::zetafam::{
    hurwitz_zeta, hurwitz_zeta_sderiv, lerch_phi, lerch_phi_sderiv, stieltjes_gamma1, LerchArgs,
};
use crate::ComplexScalar;

use super::kernels::{
    c, euler, exp_diff_quotient, expm1_quotient, gamma_ratio, is_real, ml_params, pow_c,
    weighted_ml, wrap_log, C0, ONE,
};
use super::params::{ParamAssignment, Sym};
use super::series::{sum_axis, sum_outer_asymptotic_inner, sum_weighted_2d};
use super::{IdentitySpec, Integrand, RhsKind};

use Sym::{Alpha, Beta, Delta, Gamma, Lambda, Mu, Nu, Tau, Theta, A, B, K, M, N, P, S};

/// Relative truncation tolerance of the right-hand-side series.
const SERIES_TOL: f64 = 1e-13;

/// `z^n / Gamma(g)`, through logarithms once `Gamma(g)` is large.
fn pow_over_gamma(z: ComplexScalar, n: usize, g: ComplexScalar) -> ComplexScalar {
    if n == 0 {
        return rgamma(g);
    }
    if z == C0 {
        return C0;
    }
    if g.re > 20.0 {
        if let Ok(lg) = log_gamma(g) {
            return (n as f64 * principal_log(z) - lg).exp();
        }
    }
    z.powi(n as i32) * rgamma(g)
}

fn nf(n: usize) -> f64 {
    n as f64
}

/// `Some(n)` if `z` is the non-negative integer `n`.
fn nonneg_integer(z: ComplexScalar) -> Option<usize> {
    (z.im == 0.0 && z.re >= 0.0 && z.re.fract() == 0.0 && z.re <= 1e6).then_some(z.re as usize)
}

/// `sum_{i=0}^{n}` if the axis is known to stop at `n`, else [`sum_axis`].
fn axis<F>(what: &str, tol: f64, last: Option<usize>, mut term: F) -> Result<ComplexScalar>
where
    F: FnMut(usize) -> Result<ComplexScalar>,
{
    match last {
        Some(n) => (0..=n).try_fold(C0, |acc, i| Ok(acc + term(i)?)),
        None => sum_axis(what, tol, term),
    }
}

/// `e^{-theta x^tau} E_{alpha,beta}(delta x^gamma)`; `theta = 0` when absent.
#[derive(Clone, Copy)]
struct MlWeight {
    theta: ComplexScalar,
    tau: ComplexScalar,
    delta: ComplexScalar,
    gamma: ComplexScalar,
    params: MLParams,
}

impl MlWeight {
    fn read(p: &ParamAssignment) -> Result<Self> {
        Ok(MlWeight {
            theta: p.get(Theta).unwrap_or(C0),
            tau: p.get(Tau).unwrap_or(ONE),
            delta: p.req(Delta)?,
            gamma: p.req(Gamma)?,
            params: ml_params(p)?,
        })
    }

    /// The weight read with `s` in place of `theta` and `a` in place of `delta`.
    fn laplace(p: &ParamAssignment, theta: Sym, delta: Sym) -> Result<Self> {
        Ok(MlWeight {
            theta: p.req(theta)?,
            tau: p.get(Tau).unwrap_or(ONE),
            delta: p.req(delta)?,
            gamma: p.req(Gamma)?,
            params: ml_params(p)?,
        })
    }

    /// `g()` times the weight at `x = e^{ln_x}`; `g` is not called where
    /// the exponential factor has underflowed, so it may overflow there.
    fn eval(&self, g: impl FnOnce() -> ComplexScalar, ln_x: f64) -> Result<ComplexScalar> {
        let w = if self.theta == C0 {
            g()
        } else {
            let xt = (self.tau * ln_x).exp();
            if !xt.is_finite() {
                return Ok(C0);
            }
            let e = (-self.theta * xt).exp();
            if e == C0 {
                return Ok(C0);
            }
            g() * e
        };
        if w == C0 {
            return Ok(C0);
        }
        weighted_ml(w, self.params, self.delta, self.gamma, ln_x)
    }
}

fn exp_decay(left: f64, rate: f64) -> SingularityHint {
    SingularityHint::left(left).with_decay(Decay::Exponential { rate })
}

/// `int_0^1 W(x) F(x) dx` as `int_0^inf W(e^{-y}) g(y) dy`; `g` includes
/// the Jacobian `e^{-y}`.
fn unit_interval<G>(w: MlWeight, left: f64, rate: f64, g: G) -> Integrand
where
    G: Fn(f64) -> ComplexScalar + Send + Sync + 'static,
{
    Integrand::Single {
        domain: Domain::SemiInfinite {
            a: 0.0,
            hint: exp_decay(left, rate),
        },
        f: Box::new(move |y| {
            // past e^{-745} the integrand is below the f64 range; complex
            // division by the vanishing factors would give 0/0 there
            if rate * y > 745.0 {
                return Ok(C0);
            }
            w.eval(|| g(y), -y)
        }),
    }
}

/// `int_0^inf W(t) g(t) dt`.
fn half_line<G>(w: MlWeight, left: f64, rate: f64, g: G) -> Integrand
where
    G: Fn(f64) -> ComplexScalar + Send + Sync + 'static,
{
    Integrand::Single {
        domain: Domain::SemiInfinite {
            a: 0.0,
            hint: exp_decay(left, rate),
        },
        f: Box::new(move |t| w.eval(|| g(t), t.ln())),
    }
}

/// `int_0^b W(x) g(x) dx`.
fn up_to(w: MlWeight, b: f64, left: f64, g: impl Fn(f64) -> ComplexScalar + Send + Sync + 'static) -> Integrand {
    Integrand::Single {
        domain: Domain::Finite {
            a: 0.0,
            b,
            hint: SingularityHint::left(left),
        },
        f: Box::new(move |x| w.eval(|| g(x), x.ln())),
    }
}

// Conditions.

fn ml_index(p: &ParamAssignment) -> Result<bool> {
    Ok(p.real(Alpha)? > 0.0)
}

fn gamma_positive(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(Gamma)?.re > 0.0)
}

fn tau_positive(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(Tau)?.re > 0.0)
}

fn mu_positive(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(Mu)?.re > 0.0)
}

fn m_integrable(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(M)?.re > -1.0)
}

fn nu_in_disk(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(Nu)?.norm() < 1.0)
}

fn k_integrable(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(K)?.re > -1.0)
}

fn n_natural(p: &ParamAssignment) -> Result<bool> {
    Ok(nonneg_integer(p.req(N)?).is_some())
}

// The finite-interval theorem and its triple series.

fn main_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (b, a, k, m) = (p.real(B)?, p.req(A)?, p.req(K)?, p.req(M)?);
    let (mu, nu, lambda) = (p.req(Mu)?, p.req(Nu)?, p.req(Lambda)?);
    let ln_a = principal_log(a);
    Ok(up_to(w, b, m.re, move |x| {
        let lx = x.ln();
        let base = (m * lx).exp() * pow_c(1.0 + nu * (mu * lx).exp(), lambda);
        if k == C0 {
            base
        } else {
            base * pow_c(-ln_a - lx, k)
        }
    }))
}

/// The triple series over `f` (Mittag-Leffler), `h` (binomial) and `j`
/// (exponential) for the integral over `[0, b]`.
///
/// Each axis is summed adaptively: 40 terms, then doubling blocks until a
/// block adds less than `tol / 10` of the running total, at most `2^14`
/// terms. `theta = 0` reduces the `j` axis to its first term and a
/// non-negative integer `lambda` ends the `h` axis at `lambda`.
pub fn triple_series(p: &ParamAssignment, tol: f64) -> Result<ComplexScalar> {
    let (b, a, k, m) = (p.real(B)?, p.req(A)?, p.req(K)?, p.req(M)?);
    let (gam, delta, mu, nu) = (p.req(Gamma)?, p.req(Delta)?, p.req(Mu)?, p.req(Nu)?);
    let (lambda, tau, theta) = (p.req(Lambda)?, p.req(Tau)?, p.req(Theta)?);
    let (alpha, beta) = (c(p.real(Alpha)?), p.req(Beta)?);
    if !(b > 0.0) {
        return Err(Error::domain(format!("upper limit b = {b} must be positive")));
    }
    let ratio = (nu * pow_c(c(b), mu)).norm();
    if ratio >= 1.0 {
        return Err(Error::domain(format!(
            "binomial axis needs |nu b^mu| < 1, got {ratio}"
        )));
    }
    let ln_b = b.ln();
    // log(1/(a b)), on the branch the integrand's log(1/(a x)) uses
    let ell = -principal_log(a) - ln_b;
    let k1 = k + 1.0;
    let j_last = (theta == C0).then_some(0);
    let h_last = nonneg_integer(lambda);
    let what = "triple series";
    axis(what, tol, None, |f| {
        let cf = pow_over_gamma(delta, f, nf(f) * alpha + beta);
        if cf == C0 {
            return Ok(C0);
        }
        let sum_h = axis(what, tol / 10.0, h_last, |h| {
            let ch = nu.powi(h as i32) * binom(lambda, h as u64);
            if ch == C0 {
                return Ok(C0);
            }
            let sum_j = axis(what, tol / 100.0, j_last, |j| {
                let cj = pow_over_gamma(-theta, j, c(nf(j) + 1.0));
                if cj == C0 {
                    return Ok(C0);
                }
                let big_m = 1.0 + m + nf(f) * gam + nf(h) * mu + nf(j) * tau;
                // a^{-M} Gamma(1+k, M l) = b^M e^{M l} Gamma(1+k, M l)
                let g = upper_incomplete_gamma_scaled(k1, big_m * ell)?;
                Ok(cj * (big_m * ln_b).exp() * g / pow_c(big_m, k1))
            })?;
            Ok(ch * sum_j)
        })?;
        Ok(cf * sum_h)
    })
}

fn main_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    triple_series(p, SERIES_TOL)
}

fn main_conditions(p: &ParamAssignment) -> Result<bool> {
    let (b, a, k, m) = (p.real(B)?, p.req(A)?, p.req(K)?, p.req(M)?);
    let (mu, nu, tau) = (p.req(Mu)?, p.req(Nu)?, p.req(Tau)?);
    let ab_below_one = is_real(a) && a.re > 0.0 && a.re * b < 1.0;
    Ok(b > 0.0
        && m.re > -1.0
        && tau.re > 0.0
        && mu.re > 0.0
        && (nu * pow_c(c(b), mu)).norm() < 1.0
        && (ab_below_one || nonneg_integer(k).is_some()))
}

// Laplace-type integrals over [0, inf).

fn laplace_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, lambda, nu, mu) = (p.req(M)?, p.req(Lambda)?, p.req(Nu)?, p.req(Mu)?);
    Ok(half_line(w, m.re, w.theta.re, move |t| {
        let lt = t.ln();
        (m * lt).exp() * pow_c(1.0 + nu * (mu * lt).exp(), lambda)
    }))
}

/// `1/(tau theta^{(m+1)/tau}) sum_j sum_k delta^j nu^k C(lambda, k)
///   theta^{-(j gamma + k mu)/tau} Gamma((1+m+j gamma+k mu)/tau) / Gamma(j alpha + beta)`.
fn laplace_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, lambda, nu, mu, tau, theta) =
        (p.req(M)?, p.req(Lambda)?, p.req(Nu)?, p.req(Mu)?, p.req(Tau)?, p.req(Theta)?);
    let (delta, gam, alpha, beta) = (p.req(Delta)?, p.req(Gamma)?, c(p.real(Alpha)?), p.req(Beta)?);
    let lt = principal_log(theta);
    let zj = delta * (-gam / tau * lt).exp();
    let zk = nu * (-mu / tau * lt).exp();
    let k_last = nonneg_integer(lambda);
    let what = "Laplace double series";
    let total = axis(what, SERIES_TOL, None, |j| {
        axis(what, SERIES_TOL / 10.0, k_last, |k| {
            let ck = binom(lambda, k as u64);
            if ck == C0 {
                return Ok(C0);
            }
            let g = gamma_ratio((1.0 + m + nf(j) * gam + nf(k) * mu) / tau, nf(j) * alpha + beta)?;
            Ok(zj.powi(j as i32) * zk.powi(k as i32) * ck * g)
        })
    })?;
    Ok(total / (tau * ((m + 1.0) / tau * lt).exp()))
}

fn laplace_conditions(p: &ParamAssignment) -> Result<bool> {
    let (theta, tau, gam, alpha, mu) =
        (p.req(Theta)?, p.req(Tau)?, p.req(Gamma)?, p.real(Alpha)?, p.req(Mu)?);
    // growth of E(delta x^gamma) is exp(x^{gamma/alpha}); it must lose to x^tau
    Ok(theta.re > 0.0 && tau.re > 0.0 && (gam / alpha).re < tau.re && mu.re >= 0.0 && p.req(M)?.re > -1.0)
}

/// Shared `(s, m, mu, nu, tau, delta, gamma)` reading for the logarithm
/// family `e^{-s t^tau} t^{m-1} g(t) E(delta t^gamma)`.
struct LogFamily {
    s: ComplexScalar,
    m: ComplexScalar,
    mu: ComplexScalar,
    nu: ComplexScalar,
    tau: ComplexScalar,
    gam: ComplexScalar,
    alpha: ComplexScalar,
    beta: ComplexScalar,
    delta: ComplexScalar,
}

impl LogFamily {
    fn read(p: &ParamAssignment) -> Result<Self> {
        Ok(LogFamily {
            s: p.req(S)?,
            m: p.req(M)?,
            mu: p.req(Mu)?,
            nu: p.req(Nu)?,
            tau: p.req(Tau)?,
            gam: p.req(Gamma)?,
            alpha: c(p.real(Alpha)?),
            beta: p.req(Beta)?,
            delta: p.req(Delta)?,
        })
    }

    fn lhs(p: &ParamAssignment, order: f64, g: fn(ComplexScalar) -> ComplexScalar) -> Result<Integrand> {
        let w = MlWeight::laplace(p, S, Delta)?;
        let LogFamily { m, mu, nu, .. } = LogFamily::read(p)?;
        let left = (m + order * mu).re - 1.0;
        Ok(half_line(w, left, w.theta.re, move |t| {
            let lt = t.ln();
            ((m - 1.0) * lt).exp() * g(nu * (mu * lt).exp())
        }))
    }

    /// `s^{-(m+mu)/tau} (s^{-gamma/tau} delta)^j (s^{-mu/tau} nu)^h
    ///   Gamma((m + j gamma + mu + h mu)/tau) / ((1+h) tau Gamma(j alpha + beta))`.
    fn term(&self, j: usize, h: usize, nu_sign: f64) -> Result<ComplexScalar> {
        let ls = principal_log(self.s);
        let zj = self.delta * (-self.gam / self.tau * ls).exp();
        let zh = nu_sign * self.nu * (-self.mu / self.tau * ls).exp();
        let pre = (-(self.m + self.mu) / self.tau * ls).exp() / self.tau;
        let g = gamma_ratio(
            (self.m + nf(j) * self.gam + self.mu + nf(h) * self.mu) / self.tau,
            nf(j) * self.alpha + self.beta,
        )?;
        Ok(pre * zj.powi(j as i32) * zh.powi(h as i32) * g / (1.0 + nf(h)))
    }
}

fn log_lhs(p: &ParamAssignment) -> Result<Integrand> {
    LogFamily::lhs(p, 1.0, |z| principal_log(1.0 + z))
}

/// `nu / (tau s^{(m+mu)/tau}) sum_j sum_h Gamma((m + j gamma + mu + h mu)/tau)
///   / ((1+h) Gamma(j alpha + beta)) (s^{-gamma/tau} delta)^j (-s^{-mu/tau} nu)^h`;
/// the `h` series is asymptotic.
fn log_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LogFamily::read(p)?;
    let nu = fam.nu;
    Ok(nu * sum_outer_asymptotic_inner("logarithm double series", 1e-10, |j, h| fam.term(j, h, -1.0))?)
}

fn logdiff_lhs(p: &ParamAssignment) -> Result<Integrand> {
    LogFamily::lhs(p, 2.0, |z| principal_log(1.0 - z * z))
}

/// Odd `h = 2q + 1` only: `nu ((-1)^h - 1) = -2 nu`.
fn logdiff_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LogFamily::read(p)?;
    let nu = fam.nu;
    Ok(-2.0
        * nu
        * sum_outer_asymptotic_inner("log-difference double series", 1e-10, |j, q| {
            fam.term(j, 2 * q + 1, 1.0)
        })?)
}

fn arctanh_lhs(p: &ParamAssignment) -> Result<Integrand> {
    LogFamily::lhs(p, 1.0, |z| z.atanh())
}

/// Even `h = 2q` only: `(1 + (-1)^h) / 2 = 1`.
fn arctanh_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LogFamily::read(p)?;
    let nu = fam.nu;
    Ok(nu
        * sum_outer_asymptotic_inner("arctanh double series", 1e-10, |j, q| fam.term(j, 2 * q, 1.0))?)
}

fn log_family_conditions(p: &ParamAssignment) -> Result<bool> {
    let (s, m, mu, tau, gam, alpha) =
        (p.req(S)?, p.req(M)?, p.req(Mu)?, p.req(Tau)?, p.req(Gamma)?, p.real(Alpha)?);
    Ok(s.re > 0.0 && m.re > 0.0 && mu.re > 0.0 && tau.re > 0.0 && (gam / alpha).re < tau.re)
}

fn stretched_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::laplace(p, S, Delta)?;
    let m = p.req(M)?;
    Ok(half_line(w, m.re - 1.0, w.theta.re, move |t| ((m - 1.0) * t.ln()).exp()))
}

/// `1/(tau s^{m/tau}) sum_j Gamma((m + j gamma)/tau) / Gamma(j alpha + beta) (delta / s^{gamma/tau})^j`.
fn stretched_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (s, m, tau, delta, gam) = (p.req(S)?, p.req(M)?, p.req(Tau)?, p.req(Delta)?, p.req(Gamma)?);
    let (alpha, beta) = (c(p.real(Alpha)?), p.req(Beta)?);
    let ls = principal_log(s);
    let z = delta * (-gam / tau * ls).exp();
    let total = sum_axis("stretched Laplace series", SERIES_TOL, |j| {
        Ok(z.powi(j as i32) * gamma_ratio((m + nf(j) * gam) / tau, nf(j) * alpha + beta)?)
    })?;
    Ok(total / (tau * (m / tau * ls).exp()))
}

fn stretched_conditions(p: &ParamAssignment) -> Result<bool> {
    let (s, m, tau, gam, alpha) = (p.req(S)?, p.req(M)?, p.req(Tau)?, p.req(Gamma)?, p.real(Alpha)?);
    Ok(s.re > 0.0 && m.re > 0.0 && tau.re > 0.0 && (gam / alpha).re < tau.re)
}

fn laplace_t1_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::laplace(p, S, Delta)?;
    let m = p.req(M)?;
    Ok(half_line(w, m.re - 1.0, w.theta.re, move |t| ((m - 1.0) * t.ln()).exp()))
}

/// `s^{-m} sum_j (delta / s^gamma)^j Gamma(m + j gamma) / Gamma(beta + j alpha)`.
fn laplace_t1_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (s, m, delta, gam) = (p.req(S)?, p.req(M)?, p.req(Delta)?, p.req(Gamma)?);
    let (alpha, beta) = (c(p.real(Alpha)?), p.req(Beta)?);
    let ls = principal_log(s);
    let z = delta * (-gam * ls).exp();
    let total = sum_axis("Laplace series", SERIES_TOL, |j| {
        Ok(z.powi(j as i32) * gamma_ratio(m + nf(j) * gam, nf(j) * alpha + beta)?)
    })?;
    Ok(total * (-m * ls).exp())
}

fn laplace_t1_conditions(p: &ParamAssignment) -> Result<bool> {
    let (s, m, gam, alpha) = (p.req(S)?, p.req(M)?, p.req(Gamma)?, p.real(Alpha)?);
    Ok(s.re > 0.0 && m.re > 0.0 && (gam / alpha).re < 1.0)
}

// The errata example and the classical Laplace transform.

fn errata_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::laplace(p, S, A)?;
    let pp = p.req(P)?;
    Ok(half_line(w, pp.re - 1.0, w.theta.re, move |t| ((pp - 1.0) * t.ln()).exp()))
}

/// `sum_n a^n s^{-p - n gamma} Gamma(p + n gamma) / Gamma(n alpha + beta)`.
fn errata_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (pp, gam, a, s) = (p.req(P)?, p.req(Gamma)?, p.req(A)?, p.req(S)?);
    let (alpha, beta) = (c(p.real(Alpha)?), p.req(Beta)?);
    let ls = principal_log(s);
    let z = a * (-gam * ls).exp();
    let total = sum_axis("Laplace series", SERIES_TOL, |n| {
        Ok(z.powi(n as i32) * gamma_ratio(pp + nf(n) * gam, nf(n) * alpha + beta)?)
    })?;
    Ok(total * (-pp * ls).exp())
}

/// The misprinted form `s^{-p} sum_n Gamma(p + gamma n) (a / s^alpha)^n / Gamma(beta + alpha n)`.
fn errata_contrast(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (pp, gam, a, s) = (p.req(P)?, p.req(Gamma)?, p.req(A)?, p.req(S)?);
    let (alpha, beta) = (c(p.real(Alpha)?), p.req(Beta)?);
    let ls = principal_log(s);
    let z = a * (-alpha * ls).exp();
    let total = sum_axis("misprinted Laplace series", SERIES_TOL, |n| {
        Ok(z.powi(n as i32) * gamma_ratio(pp + nf(n) * gam, nf(n) * alpha + beta)?)
    })?;
    Ok(total * (-pp * ls).exp())
}

fn errata_conditions(p: &ParamAssignment) -> Result<bool> {
    let (pp, gam, a, s, alpha) = (p.req(P)?, p.real(Gamma)?, p.req(A)?, p.req(S)?, p.real(Alpha)?);
    let converges = gam < alpha || (gam == alpha && a.norm() < s.norm().powf(alpha));
    Ok(pp.re > 0.0 && s.re > 0.0 && gam > 0.0 && converges)
}

fn c414_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let alpha = p.real(Alpha)?;
    let w = MlWeight {
        theta: p.req(S)?,
        tau: ONE,
        delta: p.req(A)?,
        gamma: c(alpha),
        params: ml_params(p)?,
    };
    let beta = p.req(Beta)?;
    Ok(half_line(w, beta.re - 1.0, w.theta.re, move |t| ((beta - 1.0) * t.ln()).exp()))
}

/// `s^{alpha - beta} / (s^alpha - a)`.
fn c414_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (alpha, beta, a, s) = (p.req(Alpha)?, p.req(Beta)?, p.req(A)?, p.req(S)?);
    Ok(pow_c(s, alpha - beta) / (pow_c(s, alpha) - a))
}

fn c414_conditions(p: &ParamAssignment) -> Result<bool> {
    let (alpha, beta, a, s) = (p.real(Alpha)?, p.req(Beta)?, p.real(A)?, p.real(S)?);
    // E_alpha(a t^alpha) grows like exp(a^{1/alpha} t) for a > 0
    Ok(alpha > 0.0 && beta.re > 0.0 && s > 0.0 && (a <= 0.0 || s > a.powf(1.0 / alpha)))
}

// Integrals over [0, 1] with the Hurwitz-Lerch, zeta and digamma functions.

/// `(theta, tau, m, s, delta, gamma, alpha, beta)` and the double sum
/// `sum_j sum_l delta^l (-theta)^j / (j! Gamma(l alpha + beta)) F(A, B)`,
/// `A = 1 + m + l gamma + j tau`, `B = 1 + s + l gamma + j tau`.
struct LerchFamily {
    theta: ComplexScalar,
    tau: ComplexScalar,
    m: ComplexScalar,
    s: ComplexScalar,
    delta: ComplexScalar,
    gam: ComplexScalar,
    alpha: ComplexScalar,
    beta: ComplexScalar,
}

impl LerchFamily {
    fn read(p: &ParamAssignment) -> Result<Self> {
        let m = p.req(M)?;
        Ok(LerchFamily {
            theta: p.req(Theta)?,
            tau: p.req(Tau)?,
            m,
            s: p.get(S).unwrap_or(m),
            delta: p.req(Delta)?,
            gam: p.req(Gamma)?,
            alpha: c(p.real(Alpha)?),
            beta: p.req(Beta)?,
        })
    }

    fn sum<F>(&self, what: &str, f: F) -> Result<ComplexScalar>
    where
        F: Fn(ComplexScalar, ComplexScalar) -> Result<ComplexScalar>,
    {
        sum_weighted_2d(
            what,
            SERIES_TOL,
            |j, l| {
                pow_over_gamma(-self.theta, j, c(nf(j) + 1.0))
                    * pow_over_gamma(self.delta, l, nf(l) * self.alpha + self.beta)
            },
            |j, l| {
                let shift = nf(l) * self.gam + nf(j) * self.tau;
                f(1.0 + self.m + shift, 1.0 + self.s + shift)
            },
        )
    }
}

fn lerch_family_conditions(p: &ParamAssignment) -> Result<bool> {
    let ok = tau_positive(p)? && mu_positive(p)? && m_integrable(p)? && gamma_positive(p)? && ml_index(p)?;
    let s_ok = p.get(S).map_or(true, |s| s.re > -1.0);
    Ok(ok && s_ok)
}

fn lerch_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, k, mu, nu) = (p.req(M)?, p.req(K)?, p.req(Mu)?, p.req(Nu)?);
    Ok(unit_interval(w, k.re, 1.0 + m.re, move |y| {
        (-(m + 1.0) * y).exp() * pow_c(c(y), k) / (1.0 + nu * (-mu * y).exp())
    }))
}

/// `Gamma(1+k) / mu^{k+1} S[Phi(-nu, 1+k, A/mu)]`.
fn lerch_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let (k, mu, nu) = (p.req(K)?, p.req(Mu)?, p.req(Nu)?);
    let total = fam.sum("Hurwitz-Lerch double series", |a, _| {
        lerch_phi(LerchArgs::new(-nu, 1.0 + k, a / mu))
    })?;
    Ok(gamma(1.0 + k)? / pow_c(mu, k + 1.0) * total)
}

fn loggamma_diff_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, s, mu) = (p.req(M)?, p.req(S)?, p.req(Mu)?);
    Ok(unit_interval(w, 0.0, 1.0 + m.re.min(s.re), move |y| {
        (-y).exp() * exp_diff_quotient(-m, -s, c(y)) / (1.0 + (-2.0 * mu * y).exp())
    }))
}

/// `S[log(Gamma(A/4mu) Gamma((B+2mu)/4mu) / (Gamma(B/4mu) Gamma((A+2mu)/4mu)))]`.
fn loggamma_diff_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let mu = p.req(Mu)?;
    let q = 4.0 * mu;
    fam.sum("log-gamma double series", |a, b| {
        Ok(wrap_log(
            log_gamma(a / q)? + log_gamma((b + 2.0 * mu) / q)?
                - log_gamma(b / q)?
                - log_gamma((a + 2.0 * mu) / q)?,
        ))
    })
}

fn malmsten_stieltjes_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, mu) = (p.req(M)?, p.req(Mu)?);
    Ok(unit_interval(w, 0.0, 1.0 + m.re, move |y| {
        (-(m + 1.0) * y).exp() * y.ln() / (1.0 + (-mu * y).exp())
    }))
}

/// `S[((gamma_E + log 2mu)(psi(A/2mu) - psi((A+mu)/2mu)) - gamma_1(A/2mu)
///   + gamma_1((A+mu)/2mu)) / (2mu)]`.
fn malmsten_stieltjes_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let mu = p.req(Mu)?;
    let q = 2.0 * mu;
    let lead = euler() + principal_log(q);
    fam.sum("Stieltjes double series", |a, _| {
        let (u, v) = (a / q, (a + mu) / q);
        Ok((lead * (digamma(u)? - digamma(v)?) - stieltjes_gamma1(u)? + stieltjes_gamma1(v)?) / q)
    })
}

fn hurwitz_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, k, mu) = (p.req(M)?, p.req(K)?, p.req(Mu)?);
    Ok(unit_interval(w, k.re - 1.0, 1.0 + m.re, move |y| {
        // 1/(1 - x^mu) = 1/(y (-expm1_quotient(-mu, y)))
        (-(m + 1.0) * y).exp() * pow_c(c(y), k - 1.0) / -expm1_quotient(-mu, y)
    }))
}

/// `S[mu^{-1-k} Gamma(1+k) zeta(1+k, A/mu)]`.
fn hurwitz_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let (k, mu) = (p.req(K)?, p.req(Mu)?);
    let pre = pow_c(mu, -1.0 - k) * gamma(1.0 + k)?;
    Ok(pre * fam.sum("Hurwitz zeta double series", |a, _| hurwitz_zeta(1.0 + k, a / mu))?)
}

fn hurwitz_conditions(p: &ParamAssignment) -> Result<bool> {
    Ok(lerch_family_conditions(p)? && p.req(K)?.re > 0.0)
}

/// `e^{-y} (x^m - x^s) / (x^mu - 1)` at `x = e^{-y}`, times `extra(y)`.
fn digamma_ratio(p: &ParamAssignment, left: f64, extra: fn(f64) -> f64) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, s, mu) = (p.req(M)?, p.req(S)?, p.req(Mu)?);
    Ok(unit_interval(w, left, 1.0 + m.re.min(s.re), move |y| {
        (-y).exp() * exp_diff_quotient(-m, -s, c(y)) / expm1_quotient(-mu, y) * extra(y)
    }))
}

fn digamma_diff_lhs(p: &ParamAssignment) -> Result<Integrand> {
    digamma_ratio(p, 0.0, |_| 1.0)
}

/// `S[(psi(A/mu) - psi(B/mu)) / mu]`.
fn digamma_diff_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let mu = p.req(Mu)?;
    fam.sum("digamma double series", |a, b| Ok((digamma(a / mu)? - digamma(b / mu)?) / mu))
}

fn zeta_half_lhs(p: &ParamAssignment) -> Result<Integrand> {
    digamma_ratio(p, -0.5, |y| y.ln() / y.sqrt())
}

/// `S[sqrt(pi/mu) ((zeta(1/2, A/mu) - zeta(1/2, B/mu))(gamma_E + log 4 + log mu)
///   - zeta'(1/2, A/mu) + zeta'(1/2, B/mu))]`.
fn zeta_half_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let mu = p.req(Mu)?;
    let half = c(0.5);
    let lead = euler() + 4f64.ln() + principal_log(mu);
    let total = fam.sum("zeta(1/2) double series", |a, b| {
        let (u, v) = (a / mu, b / mu);
        Ok((hurwitz_zeta(half, u)? - hurwitz_zeta(half, v)?) * lead
            - hurwitz_zeta_sderiv(half, u, 1)?
            + hurwitz_zeta_sderiv(half, v, 1)?)
    })?;
    Ok((PI / mu).sqrt() * total)
}

fn malmsten_zeta2_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, s, mu) = (p.req(M)?, p.req(S)?, p.req(Mu)?);
    Ok(unit_interval(w, 0.0, 1.0 + m.re.min(s.re), move |y| {
        (-y).exp() * exp_diff_quotient(-m, -s, c(y)) * y.ln() / (1.0 + (-mu * y).exp())
    }))
}

/// `S[(2 log(2 mu e^{gamma_E}) log(G(B/2mu) G((A+mu)/2mu) / (G(A/2mu) G((B+mu)/2mu)))
///   + zeta''(0, A/2mu) - zeta''(0, B/2mu) - zeta''(0, (A+mu)/2mu) + zeta''(0, (B+mu)/2mu)) / 2]`.
fn malmsten_zeta2_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let fam = LerchFamily::read(p)?;
    let mu = p.req(Mu)?;
    let q = 2.0 * mu;
    let lead = 2.0 * (principal_log(q) + euler());
    let z2 = |x: ComplexScalar| hurwitz_zeta_sderiv(C0, x, 2);
    fam.sum("zeta''(0) double series", |a, b| {
        let lg = wrap_log(
            log_gamma(b / q)? + log_gamma((a + mu) / q)? - log_gamma(a / q)? - log_gamma((b + mu) / q)?,
        );
        Ok((lead * lg + z2(a / q)? - z2(b / q)? - z2((a + mu) / q)? + z2((b + mu) / q)?) / 2.0)
    })
}

fn lerch_family_ms(p: &ParamAssignment) -> Result<bool> {
    Ok(lerch_family_conditions(p)? && p.req(S)?.re > -1.0)
}

// Sums over the Mittag-Leffler index only.

fn log2_denom_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, a, nu) = (p.req(M)?, p.req(A)?, p.req(Nu)?);
    let la2 = principal_log(a).powi(2);
    Ok(unit_interval(w, 0.0, 1.0 + m.re, move |y| {
        (-(m + 1.0) * y).exp() / ((1.0 + nu * (-2.0 * y).exp()).sqrt() * (la2 - y * y))
    }))
}

/// `sum_f sum_h delta^f nu^h C(-1/2, h) / (2 a Gamma(f alpha + beta) log a)
///   (-a^{-2h-m-f gamma} E1(N log(1/a)) + a^{2+2h+m+f gamma} E1(N log a))`,
/// `N = 1 + 2h + m + f gamma`, evaluated with `e^z E1(z)` so the powers of
/// `a` cancel analytically.
fn log2_denom_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, a, nu, delta, gam) = (p.req(M)?, p.req(A)?, p.req(Nu)?, p.req(Delta)?, p.req(Gamma)?);
    let (alpha, beta) = (c(p.real(Alpha)?), p.req(Beta)?);
    let la = principal_log(a);
    let e1s = |z: ComplexScalar| upper_incomplete_gamma_scaled(C0, z);
    let total = sum_weighted_2d(
        "log-squared double series",
        SERIES_TOL,
        |f, h| pow_over_gamma(delta, f, nf(f) * alpha + beta) * nu.powi(h as i32) * binom(c(-0.5), h as u64),
        |f, h| {
            let n = 1.0 + 2.0 * nf(h) + m + nf(f) * gam;
            Ok(e1s(n * la)? - e1s(-n * la)?)
        },
    )?;
    Ok(total / (2.0 * la))
}

fn log2_denom_conditions(p: &ParamAssignment) -> Result<bool> {
    // log a off the real axis keeps log^2 a - log^2 x away from zero
    Ok(principal_log(p.req(A)?).im != 0.0
        && nu_in_disk(p)?
        && m_integrable(p)?
        && gamma_positive(p)?
        && ml_index(p)?)
}

fn hyp2f1_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (b, m, mu, nu, lambda) = (p.real(B)?, p.req(M)?, p.req(Mu)?, p.req(Nu)?, p.req(Lambda)?);
    Ok(up_to(w, b, m.re - 1.0, move |x| {
        let lx = x.ln();
        ((m - 1.0) * lx).exp() * pow_c(1.0 - nu * (mu * lx).exp(), lambda)
    }))
}

/// `sum_f b^{m + f gamma} delta^f / ((m + f gamma) Gamma(f alpha + beta))
///   2F1(-lambda, (m + f gamma)/mu; (m + f gamma + mu)/mu; b^mu nu)`.
fn hyp2f1_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (b, m, mu, nu, lambda) = (p.real(B)?, p.req(M)?, p.req(Mu)?, p.req(Nu)?, p.req(Lambda)?);
    let (delta, gam, alpha, beta) = (p.req(Delta)?, p.req(Gamma)?, c(p.real(Alpha)?), p.req(Beta)?);
    let lb = b.ln();
    let z = nu * (mu * lb).exp();
    sum_axis("2F1 series", SERIES_TOL, |f| {
        let cf = pow_over_gamma(delta, f, nf(f) * alpha + beta);
        if cf == C0 {
            return Ok(C0);
        }
        let e = m + nf(f) * gam;
        Ok(cf * (e * lb).exp() / e * hyp2f1(-lambda, e / mu, (e + mu) / mu, z)?)
    })
}

fn hyp2f1_conditions(p: &ParamAssignment) -> Result<bool> {
    let (b, m, mu, nu) = (p.real(B)?, p.req(M)?, p.req(Mu)?, p.req(Nu)?);
    let z = nu * pow_c(c(b), mu);
    // x^mu nu = 1 inside [0, b] is a branch point of the integrand
    let reaches_one = is_real(z) && z.re >= 1.0;
    Ok(b > 0.0 && m.re > 0.0 && mu.re > 0.0 && z.norm() < 1.0 && !reaches_one && gamma_positive(p)? && ml_index(p)?)
}

/// `sum_f delta^f / Gamma(f alpha + beta) F(1 + m + f gamma)`.
fn index_sum<F>(p: &ParamAssignment, what: &str, f: F) -> Result<ComplexScalar>
where
    F: Fn(ComplexScalar) -> Result<ComplexScalar>,
{
    let (m, delta, gam, alpha, beta) = (p.req(M)?, p.req(Delta)?, p.req(Gamma)?, c(p.real(Alpha)?), p.req(Beta)?);
    sum_axis(what, SERIES_TOL, |i| {
        let cf = pow_over_gamma(delta, i, nf(i) * alpha + beta);
        if cf == C0 {
            return Ok(C0);
        }
        Ok(cf * f(1.0 + m + nf(i) * gam)?)
    })
}

fn lerchsum_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, k, mu, nu) = (p.req(M)?, p.req(K)?, p.req(Mu)?, p.req(Nu)?);
    let n = nonneg_integer(p.req(N)?).unwrap_or(0) as i32;
    Ok(unit_interval(w, k.re + n as f64, 1.0 + m.re, move |y| {
        (-(m + 1.0) * y).exp() * pow_c(c(y), k) * (-y).powi(n) / (1.0 + nu * (-mu * y).exp())
    }))
}

/// `-sum_f pi delta^f mu^{-1-k-n} csc(k pi) Phi(-nu, 1+k+n, (1+m+f gamma)/mu)
///   / (Gamma(-k-n) Gamma(f alpha + beta))`.
fn lerchsum_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (k, n, mu, nu) = (p.req(K)?, p.req(N)?, p.req(Mu)?, p.req(Nu)?);
    let pre = -PI * pow_c(mu, -1.0 - k - n) / (PI * k).sin() * rgamma(-k - n);
    Ok(pre * index_sum(p, "Hurwitz-Lerch series", |a| lerch_phi(LerchArgs::new(-nu, 1.0 + k + n, a / mu)))?)
}

fn lerchsum_conditions(p: &ParamAssignment) -> Result<bool> {
    let k = p.req(K)?;
    let k_ok = k.re > -1.0 && !(is_real(k) && k.re.fract() == 0.0);
    Ok(k_ok && n_natural(p)? && nu_in_disk(p)? && mu_positive(p)? && m_integrable(p)? && gamma_positive(p)? && ml_index(p)?)
}

fn lerchsum_k_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, mu, nu) = (p.req(M)?, p.req(Mu)?, p.req(Nu)?);
    let n = nonneg_integer(p.req(N)?).unwrap_or(0) as i32;
    Ok(unit_interval(w, n as f64 - 0.5, 1.0 + m.re, move |y| {
        (-(m + 1.0) * y).exp() * (-y).powi(n) * y.ln() / ((1.0 + nu * (-mu * y).exp()) * y.sqrt())
    }))
}

/// `sum_f -pi delta^f mu^{-1/2-n} / (Gamma(1/2-n) Gamma(f alpha + beta))
///   (Phi(-nu, 1/2+n, A/mu)(log mu - psi(1/2-n)) - Phi'(-nu, 1/2+n, A/mu))`.
fn lerchsum_k_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (n, mu, nu) = (p.req(N)?, p.req(Mu)?, p.req(Nu)?);
    let order = 0.5 + n;
    let pre = -PI * pow_c(mu, -order) * rgamma(0.5 - n);
    let lead = principal_log(mu) - digamma(0.5 - n)?;
    Ok(pre
        * index_sum(p, "Hurwitz-Lerch derivative series", |a| {
            let args = LerchArgs::new(-nu, order, a / mu);
            Ok(lerch_phi(args)? * lead - lerch_phi_sderiv(args)?)
        })?)
}

fn lerchsum_k_conditions(p: &ParamAssignment) -> Result<bool> {
    Ok(n_natural(p)? && nu_in_disk(p)? && mu_positive(p)? && m_integrable(p)? && gamma_positive(p)? && ml_index(p)?)
}

fn lerchsum_diff_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let w = MlWeight::read(p)?;
    let (m, s, k, mu, nu) = (p.req(M)?, p.req(S)?, p.req(K)?, p.req(Mu)?, p.req(Nu)?);
    Ok(unit_interval(w, k.re, 1.0 + m.re.min(s.re), move |y| {
        // (x^s - x^m) / log x = (e^{-m y} - e^{-s y}) / y
        (-y).exp() * exp_diff_quotient(-m, -s, c(y)) * pow_c(c(y), k) / (1.0 + nu * (-mu * y).exp())
    }))
}

/// `sum_f pi delta^f mu^{-k} csc(k pi) (Phi(-nu, k, A/mu) - Phi(-nu, k, B/mu))
///   / (Gamma(1-k) Gamma(f alpha + beta))`.
fn lerchsum_diff_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, s, k, mu, nu) = (p.req(M)?, p.req(S)?, p.req(K)?, p.req(Mu)?, p.req(Nu)?);
    let pre = PI * pow_c(mu, -k) / (PI * k).sin() * rgamma(1.0 - k);
    let shift = s - m;
    Ok(pre
        * index_sum(p, "Hurwitz-Lerch difference series", |a| {
            Ok(lerch_phi(LerchArgs::new(-nu, k, a / mu))? - lerch_phi(LerchArgs::new(-nu, k, (a + shift) / mu))?)
        })?)
}

fn lerchsum_diff_conditions(p: &ParamAssignment) -> Result<bool> {
    let k = p.req(K)?;
    let k_ok = k.re > -1.0 && !(is_real(k) && k.re.fract() == 0.0);
    Ok(k_ok && p.req(S)?.re > -1.0 && nu_in_disk(p)? && mu_positive(p)? && m_integrable(p)? && gamma_positive(p)? && ml_index(p)?)
}

// Samples.

/// The parameter point shared by the [0, 1] entries.
fn unit_point(syms: &[Sym]) -> ParamAssignment {
    let full = ParamAssignment::new()
        .with(Theta, 0.4)
        .with(Tau, 1.5)
        .with(M, 0.5)
        .with(S, 1.3)
        .with(Delta, 0.5)
        .with(Gamma, 1.5)
        .with(Alpha, 0.8)
        .with(Beta, 1.1)
        .with(Mu, 1.5)
        .with(Nu, 0.4)
        .with(K, 0.7);
    let mut out = ParamAssignment::new();
    for &s in syms {
        if let Some(v) = full.get(s) {
            out.set(s, v);
        }
    }
    out
}

const LERCH_FAMILY: &[Sym] = &[Theta, Tau, M, S, Delta, Gamma, Alpha, Beta, Mu];
const LOG_FAMILY: &[Sym] = &[S, M, Mu, Nu, Tau, Delta, Gamma, Alpha, Beta];

fn log_sample() -> ParamAssignment {
    ParamAssignment::new()
        .with(S, 1.2)
        .with(M, 0.8)
        .with(Mu, 0.9)
        .with(Nu, 0.1)
        .with(Tau, 1.5)
        .with(Delta, 0.4)
        .with(Gamma, 0.6)
        .with(Alpha, 0.7)
        .with(Beta, 1.0)
}

/// The finite-interval theorem's sample point.
pub(crate) fn main_sample() -> ParamAssignment {
    ParamAssignment::new()
        .with(B, 0.5)
        .with(A, 0.5)
        .with(K, 1.0)
        .with(M, 1.0)
        .with(Gamma, 2.0)
        .with(Delta, 0.3)
        .with(Alpha, 0.7)
        .with(Beta, 1.1)
        .with(Mu, 1.5)
        .with(Nu, 0.2)
        .with(Lambda, -1.0)
        .with(Tau, 1.0)
        .with(Theta, 0.5)
}

const TAU_MU: &[&str] = &["Re(tau) > 1", "Re(mu) > 0"];

pub(crate) fn entries() -> Vec<IdentitySpec> {
    let mut c414 = IdentitySpec::new(
        "GM-C414",
        "Laplace transform s^(alpha-beta) / (s^alpha - a) of t^(beta-1) E_{alpha,beta}(a t^alpha)",
        1,
        &[Alpha, Beta, A, S],
        &[Alpha, Beta, A, S],
        c414_lhs,
        c414_rhs,
    )
    .printed(&["Re(s) > 1", "Re(alpha) > 0"])
    .constraint(
        "alpha > 0, Re beta > 0, s > 0, and s > a^(1/alpha) when a > 0 (the transform converges)",
        c414_conditions,
    )
    .tol(1e-8);
    for alpha in [0.5, 0.8] {
        for beta in [1.0, 1.5] {
            for a in [-1.0, 0.3] {
                for s in [1.0, 2.0] {
                    c414 = c414.sample(
                        ParamAssignment::new().with(Alpha, alpha).with(Beta, beta).with(A, a).with(S, s),
                    );
                }
            }
        }
    }

    vec![
        IdentitySpec::new(
            "GM-MAIN",
            "Generalized Mittag-Leffler integral over [0, b] as a triple series with the incomplete gamma function",
            1,
            &[B, A, K, M, Gamma, Delta, Alpha, Beta, Mu, Nu, Lambda, Tau, Theta],
            &[B, A, K, M, Gamma, Delta, Alpha, Beta, Mu, Nu, Lambda, Tau, Theta],
            main_lhs,
            main_rhs,
        )
        .printed(&["Re(tau) > 0", "Re(mu) > 1"])
        .constraint(
            "b > 0, Re m > -1, Re tau > 0, Re mu > 0, |nu b^mu| < 1 (binomial axis), \
             and a b < 1 with a > 0 unless k is a non-negative integer",
            main_conditions,
        )
        .constraint("alpha > 0 (Mittag-Leffler index)", ml_index)
        .kind(RhsKind::Series)
        .sample(main_sample()),
        IdentitySpec::new(
            "GM-LAPLACE",
            "Integral over [0, inf) with exp(-theta x^tau) and (1 + nu x^mu)^lambda as a double series",
            1,
            &[M, Lambda, Nu, Mu, Tau, Theta, Delta, Gamma, Alpha, Beta],
            &[M, Lambda, Nu, Mu, Tau, Theta, Delta, Gamma, Alpha, Beta],
            laplace_lhs,
            laplace_rhs,
        )
        .printed(&["Re(theta) > 0"])
        .constraint("Re theta > 0, Re tau > 0, Re(gamma/alpha) < Re tau, Re m > -1", laplace_conditions)
        .constraint("alpha > 0 (Mittag-Leffler index)", ml_index)
        .kind(RhsKind::Series)
        .sample(
            ParamAssignment::new()
                .with(M, 0.5)
                .with(Lambda, 2.0)
                .with(Nu, 0.5)
                .with(Mu, 1.5)
                .with(Tau, 2.0)
                .with(Theta, 1.0)
                .with(Delta, 0.5)
                .with(Gamma, 1.2)
                .with(Alpha, 0.8)
                .with(Beta, 1.0),
        ),
        IdentitySpec::new(
            "GM-LOG",
            "Integral with log(1 + nu t^mu) as a double series",
            1,
            LOG_FAMILY,
            LOG_FAMILY,
            log_lhs,
            log_rhs,
        )
        .printed(&["Re(tau) > 1", "0 < Re(mu) < 1"])
        .constraint("Re s > 0, Re m > 0, Re mu > 0, Re tau > 0, Re(gamma/alpha) < Re tau", log_family_conditions)
        .kind(RhsKind::SeriesWithTruncation)
        .notes("the nu-series is asymptotic; summed to its smallest term")
        .sample(log_sample()),
        IdentitySpec::new(
            "GM-LOGDIFF",
            "Integral with log(1 - t^(2 mu) nu^2): odd terms of the logarithm series",
            1,
            LOG_FAMILY,
            LOG_FAMILY,
            logdiff_lhs,
            logdiff_rhs,
        )
        .printed(&["Re(tau) > 1", "0 < Re(mu) < 1"])
        .constraint("Re s > 0, Re m > 0, Re mu > 0, Re tau > 0, Re(gamma/alpha) < Re tau", log_family_conditions)
        .kind(RhsKind::SeriesWithTruncation)
        .sample(log_sample()),
        IdentitySpec::new(
            "GM-ARCTANH",
            "Integral with artanh(t^mu nu): even terms of the logarithm series",
            1,
            LOG_FAMILY,
            LOG_FAMILY,
            arctanh_lhs,
            arctanh_rhs,
        )
        .printed(&["Re(tau) > 1", "0 < Re(mu) < 1"])
        .constraint("Re s > 0, Re m > 0, Re mu > 0, Re tau > 0, Re(gamma/alpha) < Re tau", log_family_conditions)
        .kind(RhsKind::SeriesWithTruncation)
        .sample(log_sample()),
        IdentitySpec::new(
            "GM-STRETCHED",
            "Stretched-exponential Laplace integral as a single series",
            1,
            &[S, M, Tau, Delta, Gamma, Alpha, Beta],
            &[S, M, Tau, Delta, Gamma, Alpha, Beta],
            stretched_lhs,
            stretched_rhs,
        )
        .printed(&["Re(tau) > 1"])
        .constraint("Re s > 0, Re m > 0, Re tau > 0, Re(gamma/alpha) < Re tau", stretched_conditions)
        .kind(RhsKind::Series)
        .sample(
            ParamAssignment::new()
                .with(S, 1.3)
                .with(M, 0.7)
                .with(Tau, 1.5)
                .with(Delta, 0.6)
                .with(Gamma, 0.8)
                .with(Alpha, 0.75)
                .with(Beta, 1.2),
        ),
        IdentitySpec::new(
            "GM-LAPLACE-T1",
            "Laplace transform of t^(m-1) E_{alpha,beta}(delta t^gamma) as a single series",
            1,
            &[S, M, Delta, Gamma, Alpha, Beta],
            &[S, M, Delta, Gamma, Alpha, Beta],
            laplace_t1_lhs,
            laplace_t1_rhs,
        )
        .printed(&["Re(s) > 0"])
        .constraint("Re s > 0, Re m > 0, Re(gamma/alpha) < 1", laplace_t1_conditions)
        .kind(RhsKind::Series)
        .sample(
            ParamAssignment::new()
                .with(S, 1.5)
                .with(M, 1.5)
                .with(Delta, 0.7)
                .with(Gamma, 0.5)
                .with(Alpha, 0.8)
                .with(Beta, 1.2),
        ),
        IdentitySpec::new(
            "GM-C416-ERRATA",
            "Errata: Laplace transform of t^(p-1) E_{alpha,beta}(a t^gamma); the s^(-n gamma) form \
             holds and the (a/s^alpha)^n form does not",
            1,
            &[P, Gamma, Alpha, Beta, A, S],
            &[P, Gamma, Alpha, Beta, A, S],
            errata_lhs,
            errata_rhs,
        )
        .printed(&["Re(s) > 0", "Re(gamma) > 1"])
        .constraint(
            "Re p > 0, Re s > 0, gamma > 0, and gamma < alpha, or gamma = alpha with |a| < |s|^alpha \
             (otherwise the series and the integral diverge)",
            errata_conditions,
        )
        .kind(RhsKind::Series)
        .contrast(errata_contrast)
        .sample(
            ParamAssignment::new()
                .with(P, 1.2)
                .with(Gamma, 1.5)
                .with(Alpha, 1.8)
                .with(Beta, 1.0)
                .with(A, 0.3)
                .with(S, 2.0),
        ),
        c414,
        IdentitySpec::new(
            "GM-LERCH",
            "Integral over [0, 1] in terms of the Hurwitz-Lerch transcendent",
            1,
            &[Theta, Tau, M, Delta, Gamma, Alpha, Beta, Mu, Nu, K],
            &[Theta, Tau, M, Delta, Gamma, Alpha, Beta, Mu, Nu, K],
            lerch_lhs,
            lerch_rhs,
        )
        .printed(&["Re(tau) > 0", "Re(mu) > 1"])
        .constraint("Re tau > 0, Re mu > 0, Re m > -1, Re gamma > 0, alpha > 0", lerch_family_conditions)
        .constraint("|nu| < 1", nu_in_disk)
        .constraint("Re k > -1", k_integrable)
        .kind(RhsKind::Series)
        .sample(unit_point(&[Theta, Tau, M, Delta, Gamma, Alpha, Beta, Mu, Nu, K])),
        IdentitySpec::new(
            "GM-LOGGAMMA-DIFF",
            "Difference of two Hurwitz-Lerch integrals as logarithms of gamma ratios",
            1,
            LERCH_FAMILY,
            LERCH_FAMILY,
            loggamma_diff_lhs,
            loggamma_diff_rhs,
        )
        .printed(TAU_MU)
        .constraint("Re tau > 0, Re mu > 0, Re m, Re s > -1, Re gamma > 0, alpha > 0", lerch_family_ms)
        .kind(RhsKind::Series)
        .sample(unit_point(LERCH_FAMILY)),
        IdentitySpec::new(
            "GM-MALMSTEN-STIELTJES",
            "Malmsten-type integral with log log(1/x) in terms of digamma and Stieltjes constants",
            1,
            &[Theta, Tau, M, Delta, Gamma, Alpha, Beta, Mu],
            &[Theta, Tau, M, Delta, Gamma, Alpha, Beta, Mu],
            malmsten_stieltjes_lhs,
            malmsten_stieltjes_rhs,
        )
        .printed(TAU_MU)
        .constraint("Re tau > 0, Re mu > 0, Re m > -1, Re gamma > 0, alpha > 0", lerch_family_conditions)
        .kind(RhsKind::Series)
        .notes("gamma in the prefactor is Euler's constant, not the Mittag-Leffler exponent")
        .sample(unit_point(&[Theta, Tau, M, Delta, Gamma, Alpha, Beta, Mu])),
        IdentitySpec::new(
            "GM-HURWITZ",
            "Integral over [0, 1] with 1/(1 - x^mu) in terms of the Hurwitz zeta function",
            1,
            &[Theta, Tau, M, K, Delta, Gamma, Alpha, Beta, Mu],
            &[Theta, Tau, M, K, Delta, Gamma, Alpha, Beta, Mu],
            hurwitz_lhs,
            hurwitz_rhs,
        )
        .printed(TAU_MU)
        .constraint("Re tau > 0, Re mu > 0, Re m > -1, Re gamma > 0, alpha > 0, Re k > 0", hurwitz_conditions)
        .kind(RhsKind::Series)
        .sample(unit_point(&[Theta, Tau, M, K, Delta, Gamma, Alpha, Beta, Mu])),
        IdentitySpec::new(
            "GM-DIGAMMA-DIFF",
            "Difference of two Hurwitz zeta integrals at k = 0 as a digamma difference",
            1,
            LERCH_FAMILY,
            LERCH_FAMILY,
            digamma_diff_lhs,
            digamma_diff_rhs,
        )
        .printed(TAU_MU)
        .constraint("Re tau > 0, Re mu > 0, Re m, Re s > -1, Re gamma > 0, alpha > 0", lerch_family_ms)
        .kind(RhsKind::Series)
        .notes("fused integrand (x^m - x^s)/(x^mu - 1); each half diverges on its own")
        .sample(unit_point(LERCH_FAMILY)),
        IdentitySpec::new(
            "GM-ZETA-HALF",
            "Integral with log log(1/x) / sqrt(log(1/x)) in terms of zeta(1/2, .) and its derivative",
            1,
            LERCH_FAMILY,
            LERCH_FAMILY,
            zeta_half_lhs,
            zeta_half_rhs,
        )
        .printed(TAU_MU)
        .constraint("Re tau > 0, Re mu > 0, Re m, Re s > -1, Re gamma > 0, alpha > 0", lerch_family_ms)
        .kind(RhsKind::Series)
        .sample(unit_point(LERCH_FAMILY)),
        IdentitySpec::new(
            "GM-MALMSTEN-ZETA2",
            "Malmsten-type integral in terms of log-gamma ratios and zeta''(0, .)",
            1,
            LERCH_FAMILY,
            LERCH_FAMILY,
            malmsten_zeta2_lhs,
            malmsten_zeta2_rhs,
        )
        .printed(TAU_MU)
        .constraint("Re tau > 0, Re mu > 0, Re m, Re s > -1, Re gamma > 0, alpha > 0", lerch_family_ms)
        .kind(RhsKind::Series)
        .notes("gamma in exp(gamma) is Euler's constant")
        .sample(unit_point(LERCH_FAMILY)),
        IdentitySpec::new(
            "GM-LOG2-DENOM",
            "Integral over [0, 1] with 1/(log^2 a - log^2 x) in terms of the exponential integral",
            1,
            &[M, A, Nu, Delta, Gamma, Alpha, Beta],
            &[M, A, Nu, Delta, Gamma, Alpha, Beta],
            log2_denom_lhs,
            log2_denom_rhs,
        )
        .printed(&["Re(delta) > 0", "Re(gamma) > 1"])
        .constraint("log a not real, |nu| < 1, Re m > -1, Re gamma > 0, alpha > 0", log2_denom_conditions)
        .kind(RhsKind::Series)
        .sample(
            ParamAssignment::new()
                .with(M, 0.5)
                .with(A, num_complex::Complex64::from_polar(1.2, 0.5))
                .with(Nu, 0.3)
                .with(Delta, 0.5)
                .with(Gamma, 1.5)
                .with(Alpha, 0.8)
                .with(Beta, 1.1),
        ),
        IdentitySpec::new(
            "GM-2F1",
            "Integral over [0, b] with (1 - x^mu nu)^lambda in terms of the Gauss hypergeometric function",
            1,
            &[B, M, Mu, Nu, Lambda, Delta, Gamma, Alpha, Beta],
            &[B, M, Mu, Nu, Lambda, Delta, Gamma, Alpha, Beta],
            hyp2f1_lhs,
            hyp2f1_rhs,
        )
        .printed(&["Re(gamma) > 1", "Re(mu) > 0"])
        .constraint("b > 0, Re m > 0, Re mu > 0, |b^mu nu| < 1, Re gamma > 0, alpha > 0", hyp2f1_conditions)
        .kind(RhsKind::Series)
        .sample(
            ParamAssignment::new()
                .with(B, 0.9)
                .with(M, 0.6)
                .with(Mu, 1.5)
                .with(Nu, 0.4)
                .with(Lambda, -0.7)
                .with(Delta, 0.5)
                .with(Gamma, 1.5)
                .with(Alpha, 0.8)
                .with(Beta, 1.1),
        ),
        IdentitySpec::new(
            "GM-LERCHSUM",
            "Integral with log^k(1/x) log^n(x) as a single Hurwitz-Lerch series",
            1,
            &[M, K, N, Delta, Gamma, Alpha, Beta, Mu, Nu],
            &[M, K, N, Delta, Gamma, Alpha, Beta, Mu, Nu],
            lerchsum_lhs,
            lerchsum_rhs,
        )
        .printed(&["Re(gamma) > 1", "Re(mu) > 0", "n = 0, 1, 2, ..."])
        .constraint(
            "Re k > -1 with k not an integer, n a non-negative integer, |nu| < 1, Re mu > 0, \
             Re m > -1, Re gamma > 0, alpha > 0",
            lerchsum_conditions,
        )
        .kind(RhsKind::Series)
        .sample(unit_point(&[M, Delta, Gamma, Alpha, Beta, Mu, Nu]).with(K, 0.5).with(N, 1.0))
        .sample(unit_point(&[M, Delta, Gamma, Alpha, Beta, Mu, Nu]).with(K, 0.5).with(N, 0.0)),
        IdentitySpec::new(
            "GM-LERCHSUM-K",
            "k-derivative at k = -1/2 of the Hurwitz-Lerch series, with log log(1/x)",
            1,
            &[M, N, Delta, Gamma, Alpha, Beta, Mu, Nu],
            &[M, N, Delta, Gamma, Alpha, Beta, Mu, Nu],
            lerchsum_k_lhs,
            lerchsum_k_rhs,
        )
        .printed(&["Re(gamma) > 1", "Re(mu) > 0", "n = 0, 1, 2, ..."])
        .constraint(
            "n a non-negative integer, |nu| < 1, Re mu > 0, Re m > -1, Re gamma > 0, alpha > 0",
            lerchsum_k_conditions,
        )
        .kind(RhsKind::Series)
        .sample(unit_point(&[M, Delta, Gamma, Alpha, Beta, Mu, Nu]).with(N, 1.0)),
        IdentitySpec::new(
            "GM-LERCHSUM-DIFF",
            "Difference in m of the Hurwitz-Lerch series divided by log x",
            1,
            &[M, S, K, Delta, Gamma, Alpha, Beta, Mu, Nu],
            &[M, S, K, Delta, Gamma, Alpha, Beta, Mu, Nu],
            lerchsum_diff_lhs,
            lerchsum_diff_rhs,
        )
        .printed(&["Re(gamma) > 1", "Re(mu) > 0"])
        .constraint(
            "Re k > -1 with k not an integer, Re s > -1, |nu| < 1, Re mu > 0, Re m > -1, \
             Re gamma > 0, alpha > 0",
            lerchsum_diff_conditions,
        )
        .kind(RhsKind::Series)
        .sample(unit_point(&[M, S, K, Delta, Gamma, Alpha, Beta, Mu, Nu])),
    ]
}
