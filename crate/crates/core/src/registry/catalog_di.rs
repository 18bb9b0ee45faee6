//! Double integrals of `E_b(-u)`, their special cases and the summary table.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use num_complex::Complex64;

use crate::complexfn::{digamma, gamma, log_gamma, principal_log, rgamma};
use crate::error::Result;
use crate::quad::{Decay, Domain, SingularityHint};
use crate::zetafam::{hurwitz_zeta, lerch_phi, lerch_phi_series, polylog, LerchArgs};
use crate::ComplexScalar;

use super::kernels::{c, pow_c, wrap_log, DiKernel, LogFactor, MlNegCache, C0, I, ONE};
use super::params::{ParamAssignment, Sym};
use super::{IdentitySpec, Integrand, RhsKind};

use Sym::{Beta, A, B, C, K, M, N, S, V, Z};

/// Catalan's constant.
pub(crate) const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;
/// `log A`, with `A` Glaisher's constant.
const LOG_GLAISHER: f64 = 0.248_754_477_033_784_262_049_333_675_375_6;

/// Summary-table entries in table order.
pub(crate) const TABLE_ORDER: [&str; 12] = [
    "DI-DIGAMMA",
    "DI-LOGDIFF",
    "DI-PHI-INV",
    "DI-POLY",
    "DI-PI24",
    "DI-CATALAN",
    "DI-LG2",
    "DI-LG2-NEG1",
    "TB-ZETA",
    "TB-LOGLOG",
    "TB-LOGLOG-LOG",
    "TB-LOGLOG-LOG2",
];

fn pa() -> ParamAssignment {
    ParamAssignment::new()
}

fn re(p: &ParamAssignment, s: Sym) -> Result<f64> {
    p.real(s)
}

const TWO_PI_I: Complex64 = Complex64::new(0.0, 2.0 * PI);

/// Principal `log(Gamma(x) / Gamma(y))`.
fn log_gamma_ratio(x: ComplexScalar, y: ComplexScalar) -> Result<ComplexScalar> {
    if x.re > 0.0 && y.re > 0.0 {
        return Ok(wrap_log(log_gamma(x)? - log_gamma(y)?));
    }
    Ok(principal_log(gamma(x)? * rgamma(y)))
}

// Conditions shared by the double-integral entries.

fn m_strip(p: &ParamAssignment) -> Result<bool> {
    let m = p.req(M)?;
    Ok(m.re > 0.0 && m.re < 1.0)
}

fn b_index(p: &ParamAssignment) -> Result<bool> {
    let b = re(p, B)?;
    Ok(b > 0.0 && b < 2.0)
}

fn bm_below_one(p: &ParamAssignment) -> Result<bool> {
    Ok((p.req(B)? * p.req(M)?).re < 1.0)
}

fn c_right_half(p: &ParamAssignment) -> Result<bool> {
    Ok(p.req(C)?.re > 0.0)
}

fn log_zero_integrable(p: &ParamAssignment) -> Result<bool> {
    let a = p.req(A)?;
    if a == C0 {
        return Ok(false);
    }
    // For a > 0 the logarithm vanishes inside the domain; L^k is then
    // integrable only for Re k > -1.
    Ok(!(a.im == 0.0 && a.re > 0.0) || p.req(K)?.re > -1.0)
}

const DI_PRINTED: &[&str] = &["Re(m) <= 1/2", "Re(b) > 0", "Re(c) > 0"];

fn di_common(spec: IdentitySpec) -> IdentitySpec {
    spec.printed(DI_PRINTED)
        .constraint("0 < Re m < 1 (u-axis convergence)", m_strip)
        .constraint("0 < b < 2, b real (Mittag-Leffler index)", b_index)
        .constraint("Re(b m) < 1 (x-axis convergence)", bm_below_one)
}

// The main double integral and its direct special cases.

fn di_main_lhs(p: &ParamAssignment) -> Result<Integrand> {
    DiKernel {
        m: p.req(M)?,
        b: re(p, B)?,
        c: p.req(C)?,
        log_a: principal_log(p.req(A)?),
        g: LogFactor::Pow(p.req(K)?),
    }
    .integrand()
}

/// `(2 i pi)^{k+1} e^{i pi m} (-c^{bm-1}) Phi(e^{2 i m pi}, -k, -i(log a + b log c + i pi)/(2 pi))`.
fn di_main_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, b, cc, a, k) = (p.req(M)?, p.req(B)?, p.req(C)?, p.req(A)?, p.req(K)?);
    let v = -I * (principal_log(a) + b * principal_log(cc) + I * PI) / (2.0 * PI);
    let phi = lerch_phi(LerchArgs::new((TWO_PI_I * m).exp(), -k, v))?;
    Ok(pow_c(TWO_PI_I, k + 1.0) * (I * PI * m).exp() * -pow_c(cc, b * m - 1.0) * phi)
}

fn di_degen_lhs(p: &ParamAssignment) -> Result<Integrand> {
    DiKernel {
        m: p.req(M)?,
        b: re(p, B)?,
        c: p.req(C)?,
        log_a: C0,
        g: LogFactor::Pow(C0),
    }
    .integrand()
}

fn di_degen_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, b, cc) = (p.req(M)?, p.req(B)?, p.req(C)?);
    Ok(PI / (PI * m).sin() * pow_c(cc, b * m - 1.0))
}

fn di_hurwitz_lhs(p: &ParamAssignment) -> Result<Integrand> {
    DiKernel {
        m: c(0.5),
        b: 0.25,
        c: ONE,
        log_a: I * FRAC_PI_2,
        g: LogFactor::Pow(p.req(K)?),
    }
    .integrand()
}

/// `i^k 2^{2k+1} pi^{k+1} (zeta(-k, 3/8) - zeta(-k, 7/8))`.
fn di_hurwitz_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let k = p.req(K)?;
    let z = hurwitz_zeta(-k, c(0.375))? - hurwitz_zeta(-k, c(0.875))?;
    Ok((I * FRAC_PI_2 * k).exp() * pow_c(c(2.0), 2.0 * k + 1.0) * pow_c(c(PI), k + 1.0) * z)
}

fn di_digamma_lhs(_: &ParamAssignment) -> Result<Integrand> {
    DiKernel {
        m: c(0.5),
        b: 0.25,
        c: ONE,
        log_a: I * FRAC_PI_2,
        g: LogFactor::Pow(c(-1.0)),
    }
    .integrand()
}

fn di_digamma_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    Ok(0.5 * I * (digamma(c(0.375))? - digamma(c(0.875))?))
}

/// `e^{-x} E_beta(-u) (e^{n l} - e^{m l}) / (u l)` with `l = ln u - beta ln x`,
/// the removable singularity on `l = 0` handled by the Taylor form.
fn di_logdiff_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let (m, n, beta) = (p.req(M)?, p.req(N)?, re(p, Beta)?);
    let cache = MlNegCache::new(beta)?;
    let f = move |x: f64, u: f64| -> Result<ComplexScalar> {
        let ex = (-x).exp();
        if ex == 0.0 {
            return Ok(C0);
        }
        let pre = ex * cache.get(u)? / u;
        if pre == 0.0 {
            return Ok(C0);
        }
        let l = u.ln() - beta * x.ln();
        Ok(pre * super::kernels::exp_diff_quotient(n, m, c(l)))
    };
    let lo = m.re.min(n.re);
    let hi = m.re.max(n.re);
    Ok(Integrand::Double {
        outer: Domain::SemiInfinite {
            a: 0.0,
            hint: SingularityHint::left(-beta * hi).with_decay(Decay::Exponential { rate: 1.0 }),
        },
        inner: Domain::SemiInfinite {
            a: 0.0,
            hint: SingularityHint::left(lo - 1.0).with_decay(if beta == 1.0 {
                Decay::Exponential { rate: 1.0 }
            } else {
                Decay::Algebraic { power: hi - 2.0 }
            }),
        },
        f: Box::new(f),
    })
}

fn di_logdiff_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, n) = (p.req(M)?, p.req(N)?);
    let cot = (PI * m / 2.0).cos() / (PI * m / 2.0).sin();
    let tan = (PI * n / 2.0).sin() / (PI * n / 2.0).cos();
    Ok(principal_log(cot * tan))
}

fn mn_strip(p: &ParamAssignment) -> Result<bool> {
    let (m, n, beta) = (p.req(M)?, p.req(N)?, re(p, Beta)?);
    Ok(m.re > 0.0 && m.re < 1.0 && n.re > 0.0 && n.re < 1.0 && beta > 0.0 && beta < 2.0
        && (beta * m).re < 1.0 && (beta * n).re < 1.0)
}

fn di_phi_inv_lhs(p: &ParamAssignment) -> Result<Integrand> {
    DiKernel {
        m: p.req(M)?,
        b: re(p, B)?,
        c: ONE,
        log_a: principal_log(p.req(A)?),
        g: LogFactor::Pow(p.req(K)?),
    }
    .integrand()
}

/// `(2 i pi)^{k+1} (-e^{i pi m}) Phi(e^{2 i m pi}, -k, -i(log a + i pi)/(2 pi))`; no `b`.
fn di_phi_inv_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, a, k) = (p.req(M)?, p.req(A)?, p.req(K)?);
    let v = -I * (principal_log(a) + I * PI) / (2.0 * PI);
    let phi = lerch_phi(LerchArgs::new((TWO_PI_I * m).exp(), -k, v))?;
    Ok(pow_c(TWO_PI_I, k + 1.0) * -(I * PI * m).exp() * phi)
}

/// The `a = -1`, `c = 1` kernel with `u^{m-1}`.
fn minus_one_kernel(m: ComplexScalar, b: f64, g: LogFactor) -> Result<Integrand> {
    DiKernel {
        m,
        b,
        c: ONE,
        log_a: I * PI,
        g,
    }
    .integrand()
}

fn di_poly_lhs(p: &ParamAssignment) -> Result<Integrand> {
    minus_one_kernel(p.req(M)?, re(p, B)?, LogFactor::Pow(p.req(K)?))
}

/// `(2 i pi)^{k+1} (-e^{-i pi m}) Li_{-k}(e^{2 i m pi})`.
fn di_poly_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (m, k) = (p.req(M)?, p.req(K)?);
    let li = polylog(-k, (TWO_PI_I * m).exp())?;
    Ok(pow_c(TWO_PI_I, k + 1.0) * -(-I * PI * m).exp() * li)
}

fn di_pi24_lhs(p: &ParamAssignment) -> Result<Integrand> {
    minus_one_kernel(c(0.5), re(p, B)?, LogFactor::Pow(c(-2.0)))
}

fn di_pi24_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    Ok(c(-PI / 24.0))
}

fn di_catalan_lhs(p: &ParamAssignment) -> Result<Integrand> {
    minus_one_kernel(c(0.25), re(p, B)?, LogFactor::Pow(c(-2.0)))
}

/// `-(-1)^{1/4} (pi^2 - 48 i K) / (96 pi)`.
fn di_catalan_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    Ok(-(I * PI / 4.0).exp() * (c(PI * PI) - 48.0 * I * CATALAN) / (96.0 * PI))
}

fn b_only(p: &ParamAssignment) -> Result<bool> {
    let b = re(p, B)?;
    Ok(b > 0.0 && b < 2.0)
}

// Log-gamma representations.

fn di_lg_lhs(p: &ParamAssignment) -> Result<Integrand> {
    DiKernel {
        m: c(0.25),
        b: re(p, B)?,
        c: p.req(C)?,
        log_a: principal_log(p.req(A)?),
        g: LogFactor::LogLogOver(0),
    }
    .integrand()
}

const LOG_SUM: fn() -> ComplexScalar = || I * PI + 2.0 * PI.ln() + 64f64.ln();

fn di_lg_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (a, b, cc) = (p.req(A)?, p.req(B)?, p.req(C)?);
    let big_a = principal_log(a) + b * principal_log(cc);
    let arg = |n: f64| -I * (big_a + n * I * PI) / (8.0 * PI);
    let t1 = log_gamma_ratio(arg(1.0), arg(5.0))?;
    let t2 = log_gamma_ratio(arg(3.0), arg(7.0))?;
    let pre = PI * pow_c(cc, b / 4.0 - 1.0) / SQRT_2;
    Ok(pre * (Complex64::new(-2.0, 2.0) * t1 - Complex64::new(2.0, 2.0) * t2 + LOG_SUM()))
}

fn lg_conditions(p: &ParamAssignment) -> Result<bool> {
    let b = re(p, B)?;
    Ok(b > 0.0 && b < 2.0 && b / 4.0 < 1.0 && p.req(C)?.re > 0.0 && p.req(A)? != C0)
}

/// LG1 kernel: `c = e^{i a}`, index `b - 1`, `m = 1/4`, `log a -> i a`.
fn lg1_kernel(angle: f64, b: f64) -> Result<Integrand> {
    DiKernel {
        m: c(0.25),
        b: b - 1.0,
        c: Complex64::from_polar(1.0, angle),
        log_a: I * angle,
        g: LogFactor::LogLogOver(0),
    }
    .integrand()
}

fn di_lg1_lhs(p: &ParamAssignment) -> Result<Integrand> {
    lg1_kernel(re(p, A)?, re(p, B)?)
}

fn lg1_closed(a: f64, b: f64) -> Result<ComplexScalar> {
    let ab = a * b / PI;
    let t1 = log_gamma_ratio(c((ab + 3.0) / 8.0), c((ab + 7.0) / 8.0))?;
    let t2 = log_gamma_ratio(c((a * b + PI) / (8.0 * PI)), c((ab + 5.0) / 8.0))?;
    let pre = PI * (I * a * (b - 5.0) / 4.0).exp() / SQRT_2;
    Ok(pre * (Complex64::new(-2.0, -2.0) * t1 - Complex64::new(2.0, -2.0) * t2 + LOG_SUM()))
}

fn di_lg1_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    lg1_closed(re(p, A)?, re(p, B)?)
}

fn lg1_conditions(p: &ParamAssignment) -> Result<bool> {
    let (a, b) = (re(p, A)?, re(p, B)?);
    Ok(a.abs() < FRAC_PI_2 && b > 1.0 && b < 3.0)
}

/// `(-1)^{phase} pi / sqrt 2 (pi - i log 64 - 2 i log pi
///   + (2+2i) log(G(n1)/G(d1)) - (2-2i) log(G(n2)/G(d2)))`, arguments over `den`.
fn lg1_instance(phase: f64, den: f64, n1: f64, d1: f64, n2: f64, d2: f64) -> Result<ComplexScalar> {
    let t1 = log_gamma_ratio(c(n1 / den), c(d1 / den))?;
    let t2 = log_gamma_ratio(c(n2 / den), c(d2 / den))?;
    let body = c(PI) - I * 64f64.ln() - 2.0 * I * PI.ln() + Complex64::new(2.0, 2.0) * t1
        - Complex64::new(2.0, -2.0) * t2;
    Ok((I * PI * phase).exp() * PI / SQRT_2 * body)
}

fn lg1_pi5_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg1_kernel(PI / 5.0, 4.0 / 3.0)
}
fn lg1_pi5_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    lg1_instance(19.0 / 60.0, 120.0, 19.0, 79.0, 49.0, 109.0)
}
fn lg1_pi3_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg1_kernel(PI / 3.0, 4.0 / 3.0)
}
fn lg1_pi3_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    lg1_instance(7.0 / 36.0, 72.0, 13.0, 49.0, 31.0, 67.0)
}
fn lg1_pi4_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg1_kernel(PI / 4.0, 5.0 / 4.0)
}
fn lg1_pi4_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    lg1_instance(17.0 / 64.0, 128.0, 21.0, 85.0, 53.0, 117.0)
}
fn lg1_3pi7_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg1_kernel(3.0 * PI / 7.0, 6.0 / 5.0)
}
fn lg1_3pi7_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    lg1_instance(13.0 / 140.0, 280.0, 53.0, 193.0, 123.0, 263.0)
}

fn lg2_kernel(a: ComplexScalar, b: f64, cc: ComplexScalar) -> Result<Integrand> {
    DiKernel {
        m: c(0.5),
        b,
        c: cc,
        log_a: principal_log(a),
        g: LogFactor::LogLogOver(0),
    }
    .integrand()
}

fn di_lg2_lhs(p: &ParamAssignment) -> Result<Integrand> {
    lg2_kernel(p.req(A)?, re(p, B)?, p.req(C)?)
}

/// Principal `log(16 pi^2 Gamma(num)^4 / Gamma(den)^4)`.
fn log_16pi2_ratio(num: ComplexScalar, den: ComplexScalar) -> Result<ComplexScalar> {
    let w = if num.re > 0.0 && den.re > 0.0 {
        4.0 * (log_gamma(num)? - log_gamma(den)?)
    } else {
        4.0 * principal_log(gamma(num)? * rgamma(den))
    };
    Ok(wrap_log(c((16.0 * PI * PI).ln()) + w))
}

fn lg2_closed(a: ComplexScalar, b: ComplexScalar, cc: ComplexScalar) -> Result<ComplexScalar> {
    let big_a = principal_log(a) + b * principal_log(cc);
    let arg = |n: f64| -I * (big_a + n * I * PI) / (4.0 * PI);
    let l = log_16pi2_ratio(arg(3.0), arg(1.0))?;
    Ok(0.5 * PI * pow_c(cc, b / 2.0 - 1.0) * (l + I * PI))
}

fn di_lg2_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    lg2_closed(p.req(A)?, p.req(B)?, p.req(C)?)
}

fn lg2_conditions(p: &ParamAssignment) -> Result<bool> {
    let b = re(p, B)?;
    Ok(b > 0.0 && b < 2.0 && p.req(C)?.re > 0.0 && p.req(A)? != C0)
}

fn lg2_neg1_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg2_kernel(c(-1.0), 4.0 / 3.0, c(PI / 4.0))
}
/// `pi^{2/3} / 2^{1/3} (i pi + log(16 pi^2 G(1 + i log(4/pi)/(3 pi))^4 / G(1/2 + ...)^4))`.
fn lg2_neg1_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    let t = I * (4.0 / PI).ln() / (3.0 * PI);
    let l = log_16pi2_ratio(1.0 + t, 0.5 + t)?;
    Ok(PI.powf(2.0 / 3.0) / 2f64.powf(1.0 / 3.0) * (I * PI + l))
}
fn lg2_i_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg2_kernel(I, 5.0 / 4.0, c(PI / 5.0))
}
/// `5^{3/8} pi^{5/8} / 2 (i pi + log(16 pi^2 G(7/8 + t)^4 / G(3/8 + t)^4))`, `t = 5 i log(5/pi)/(16 pi)`.
fn lg2_i_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    let t = 5.0 * I * (5.0 / PI).ln() / (16.0 * PI);
    let l = log_16pi2_ratio(0.875 + t, 0.375 + t)?;
    Ok(0.5 * 5f64.powf(3.0 / 8.0) * PI.powf(5.0 / 8.0) * (I * PI + l))
}
fn lg2_1pi_c() -> ComplexScalar {
    Complex64::new(PI, 7.0) / 7.0
}
fn lg2_1pi_lhs(_: &ParamAssignment) -> Result<Integrand> {
    lg2_kernel(Complex64::new(1.0, 1.0), 6.0 / 5.0, lg2_1pi_c())
}
/// `pi / (2 c^{2/5}) (i pi + log(16 pi^2 G(3/4 - i T/(20 pi))^4 / G(1/4 - i T/(20 pi))^4))`,
/// `T = 5 log(1+i) + 6 log c`.
fn lg2_1pi_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    let cc = lg2_1pi_c();
    let t = 5.0 * principal_log(Complex64::new(1.0, 1.0)) + 6.0 * principal_log(cc);
    let s = -I * t / (20.0 * PI);
    let l = log_16pi2_ratio(0.75 + s, 0.25 + s)?;
    Ok(PI / (2.0 * pow_c(cc, c(0.4))) * (I * PI + l))
}

// Building blocks: the Mellin transform and the Lerch integral.

fn mellin_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let (s, b) = (p.req(S)?, re(p, B)?);
    let cache = MlNegCache::new(b)?;
    let sm1 = s - 1.0;
    Ok(Integrand::Single {
        domain: Domain::SemiInfinite {
            a: 0.0,
            hint: SingularityHint::left(s.re - 1.0).with_decay(if b == 1.0 {
                Decay::Exponential { rate: 1.0 }
            } else {
                Decay::Algebraic { power: s.re - 2.0 }
            }),
        },
        f: Box::new(move |u| Ok((sm1 * u.ln()).exp() * cache.get(u)?)),
    })
}

/// `Gamma(s) Gamma(1-s) / Gamma(1 - b s)`.
fn mellin_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let (s, b) = (p.req(S)?, p.req(B)?);
    Ok(PI / (PI * s).sin() * rgamma(1.0 - b * s))
}

fn mellin_conditions(p: &ParamAssignment) -> Result<bool> {
    let (s, b) = (p.req(S)?, re(p, B)?);
    Ok(s.re > 0.0 && s.re < 1.0 && b > 0.0 && b < 2.0)
}

fn lerch_int_lhs(p: &ParamAssignment) -> Result<Integrand> {
    let (z, s, v) = (p.req(Z)?, p.req(S)?, p.req(V)?);
    let scale = rgamma(s);
    let sm1 = s - 1.0;
    Ok(Integrand::Single {
        domain: Domain::SemiInfinite {
            a: 0.0,
            hint: SingularityHint::left(s.re - 1.0).with_decay(Decay::Exponential { rate: v.re }),
        },
        f: Box::new(move |t| {
            let num = (sm1 * t.ln() - v * t).exp();
            Ok(scale * num / ((1.0 - z) - z * (-t).exp_m1()))
        }),
    })
}

fn lerch_int_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    lerch_phi_series(LerchArgs::new(p.req(Z)?, p.req(S)?, p.req(V)?))
}

fn lerch_int_conditions(p: &ParamAssignment) -> Result<bool> {
    let (z, s, v) = (p.req(Z)?, p.req(S)?, p.req(V)?);
    Ok(z.norm() < 1.0 && s.re > 0.0 && v.re > 0.0)
}

// Table-only rows.

fn tb_lhs(p: &ParamAssignment, g: LogFactor) -> Result<Integrand> {
    minus_one_kernel(c(0.5), re(p, B)?, g)
}

fn tb_zeta_lhs(p: &ParamAssignment) -> Result<Integrand> {
    tb_lhs(p, LogFactor::Pow(p.req(K)?))
}

/// As printed: `(1 - 2^{k+1}) (2 i pi)^{k+1} zeta(-k)`.
fn tb_zeta_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    let k = p.req(K)?;
    Ok((1.0 - pow_c(c(2.0), k + 1.0)) * pow_c(TWO_PI_I, k + 1.0) * hurwitz_zeta(-k, ONE)?)
}

/// The printed row times `-i`, which is what the theorem gives at
/// `m = 1/2`, `a = -1`, `c = 1`.
fn tb_zeta_corrected_rhs(p: &ParamAssignment) -> Result<ComplexScalar> {
    Ok(-I * tb_zeta_rhs(p)?)
}

fn tb_loglog_lhs(p: &ParamAssignment) -> Result<Integrand> {
    tb_lhs(p, LogFactor::LogLogOver(0))
}

fn tb_loglog_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    Ok(PI * (c(4f64.ln()) + I * FRAC_PI_2))
}

fn tb_loglog_log_lhs(p: &ParamAssignment) -> Result<Integrand> {
    tb_lhs(p, LogFactor::LogLogOver(1))
}

/// `log(2)/2 (2 i gamma + pi - i log(8 pi^2))`.
fn tb_loglog_log_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    let g = crate::complexfn::EULER_GAMMA;
    Ok(0.5 * 2f64.ln() * (2.0 * I * g + PI - I * (8.0 * PI * PI).ln()))
}

fn tb_loglog_log2_lhs(p: &ParamAssignment) -> Result<Integrand> {
    tb_lhs(p, LogFactor::LogLogOver(2))
}

/// `pi/24 (-12 log A + gamma - i pi/2 + log 2)`.
fn tb_loglog_log2_rhs(_: &ParamAssignment) -> Result<ComplexScalar> {
    let g = crate::complexfn::EULER_GAMMA;
    Ok(PI / 24.0 * (c(-12.0 * LOG_GLAISHER + g + 2f64.ln()) - I * FRAC_PI_2))
}

pub(crate) fn entries() -> Vec<IdentitySpec> {
    let mut main = di_common(IdentitySpec::new(
        "DI-MAIN",
        "Double integral of E_b(-u) in terms of the Hurwitz-Lerch transcendent; \
         for all Re(m)<=1/2, Re(b)>0, Re(c)>0",
        2,
        &[M, B, C, A, K],
        &[M, B, C, A, K],
        di_main_lhs,
        di_main_rhs,
    ))
    .constraint("Re c > 0 (x-axis decay)", c_right_half)
    .constraint(
        "a != 0, and Re k > -1 when a > 0 (the logarithm vanishes inside the domain)",
        log_zero_integrable,
    );
    for b in [0.25, 0.5] {
        for cc in [1.0, 2.0] {
            for a in [I, c(-1.0), c(2.0)] {
                for k in [0.0, 1.0, -2.0] {
                    if a == c(2.0) && k == -2.0 {
                        continue;
                    }
                    main = main.sample(pa().with(M, 0.5).with(B, b).with(C, cc).with(A, a).with(K, k));
                }
            }
        }
    }

    let lerch_int = IdentitySpec::new(
        "LERCH-INT",
        "Hurwitz-Lerch transcendent: defining series against its Laplace-type integral",
        1,
        &[Z, S, V],
        &[Z, S, V],
        lerch_int_lhs,
        lerch_int_rhs,
    )
    .printed(&["|z| < 1, v != 0, -1, ... (series)", "Re(v) > 0 and |z| <= 1, z != 1, Re(s) > 0 (integral)"])
    .constraint("|z| < 1, Re s > 0, Re v > 0", lerch_int_conditions)
    .kind(RhsKind::Series)
    .sample(pa().with(Z, 0.5).with(S, 2.0).with(V, 0.7))
    .sample(pa().with(Z, Complex64::new(-0.6, 0.3)).with(S, 1.5).with(V, 1.25))
    .sample(pa().with(Z, Complex64::new(0.0, 0.3)).with(S, Complex64::new(1.5, 0.5)).with(V, Complex64::new(2.0, 1.0)));

    let mut mellin = IdentitySpec::new(
        "DI-MELLIN",
        "Mellin transform of E_b(-u) underlying the double integral",
        1,
        &[S, B],
        &[S, B],
        mellin_lhs,
        mellin_rhs,
    )
    .printed(&["0 < Re(s) < 1", "Re(b) > 0"])
    .constraint("0 < Re s < 1, 0 < b < 2", mellin_conditions);
    for s in [0.25, 0.5, 0.75] {
        for b in [0.25, 0.5, 0.75] {
            mellin = mellin.sample(pa().with(S, s).with(B, b));
        }
    }

    vec![
        mellin,
        lerch_int,
        main,
        di_common(IdentitySpec::new(
            "DI-DEGEN",
            "The degenerate case k = 0: pi csc(pi m) c^(bm-1)",
            2,
            &[M, B, C],
            &[M, B, C],
            di_degen_lhs,
            di_degen_rhs,
        ))
        .constraint("Re c > 0 (x-axis decay)", c_right_half)
        .sample(pa().with(M, 0.5).with(B, 0.5).with(C, 1.0))
        .sample(pa().with(M, 0.3).with(B, 0.5).with(C, 2.0))
        .sample(pa().with(M, 0.5).with(B, 0.25).with(C, Complex64::new(1.0, 0.5))),
        IdentitySpec::new(
            "DI-HURWITZ",
            "Double integral giving the Hurwitz zeta function at 3/8 and 7/8",
            2,
            &[K],
            &[K],
            di_hurwitz_lhs,
            di_hurwitz_rhs,
        )
        .tol(1e-3)
        .notes("slowly converging complex integrand; looser tolerance")
        .sample(pa().with(K, 1.0))
        .sample(pa().with(K, 2.0))
        .sample(pa().with(K, 0.5)),
        IdentitySpec::new(
            "DI-DIGAMMA",
            "Double integral giving the digamma function at 3/8 and 7/8",
            2,
            &[],
            &[],
            di_digamma_lhs,
            di_digamma_rhs,
        )
        .table("i/2 (psi(3/8) - psi(7/8))")
        .sample(pa()),
        IdentitySpec::new(
            "DI-LOGDIFF",
            "Difference of two double integrals: log(cot(pi m/2) tan(pi n/2))",
            2,
            &[M, N, Beta],
            &[M, N],
            di_logdiff_lhs,
            di_logdiff_rhs,
        )
        .printed(DI_PRINTED)
        .constraint("0 < Re m, Re n < 1; 0 < beta < 2; Re(beta m), Re(beta n) < 1", mn_strip)
        .table("log(cot(pi m/2) tan(pi n/2))")
        .notes("fused integrand (e^{n l} - e^{m l}) / l with l = ln u - beta ln x")
        .sample(pa().with(M, 0.3).with(N, 0.6).with(Beta, 0.5))
        .sample(pa().with(M, 0.25).with(N, 0.75).with(Beta, 1.0)),
        di_common(IdentitySpec::new(
            "DI-PHI-INV",
            "Invariance of the index b: Hurwitz-Lerch form with c = 1",
            2,
            &[M, B, A, K],
            &[M, A, K],
            di_phi_inv_lhs,
            di_phi_inv_rhs,
        ))
        .constraint(
            "a != 0, and Re k > -1 when a > 0 (the logarithm vanishes inside the domain)",
            log_zero_integrable,
        )
        .table("(2 i pi)^(k+1) (-e^(i pi m)) Phi(e^(2 i m pi), -k, -i(log(a) + i pi)/(2 pi))")
        .sample(pa().with(M, 1.0 / 3.0).with(B, 0.4).with(A, I).with(K, 1.0))
        .sample(pa().with(M, 1.0 / 3.0).with(B, 0.6).with(A, I).with(K, 1.0))
        .sample(pa().with(M, 1.0 / 3.0).with(B, 0.9).with(A, I).with(K, 1.0)),
        di_common(IdentitySpec::new(
            "DI-POLY",
            "Invariance of the index b: polylogarithm form with a = -1, c = 1",
            2,
            &[M, B, K],
            &[M, K],
            di_poly_lhs,
            di_poly_rhs,
        ))
        .table("(2 i pi)^(k+1) (-e^(-i pi m)) Li_(-k)(e^(2 i m pi))")
        .sample(pa().with(M, 1.0 / 3.0).with(B, 0.4).with(K, 1.0))
        .sample(pa().with(M, 1.0 / 3.0).with(B, 0.4).with(K, 2.0))
        .sample(pa().with(M, 1.0 / 3.0).with(B, 0.4).with(K, -2.0)),
        IdentitySpec::new(
            "DI-PI24",
            "The constant pi: -pi/24 for every b",
            2,
            &[B],
            &[],
            di_pi24_lhs,
            di_pi24_rhs,
        )
        .printed(DI_PRINTED)
        .constraint("0 < b < 2 (Mittag-Leffler index, and b/2 < 1)", b_only)
        .table("-pi/24")
        .sample(pa().with(B, 0.5))
        .sample(pa().with(B, 0.3))
        .sample(pa().with(B, 0.8)),
        IdentitySpec::new(
            "DI-CATALAN",
            "Catalan's constant: -(-1)^(1/4) (pi^2 - 48 i K) / (96 pi) for every b",
            2,
            &[B],
            &[],
            di_catalan_lhs,
            di_catalan_rhs,
        )
        .printed(DI_PRINTED)
        .constraint("0 < b < 2 (Mittag-Leffler index, and b/4 < 1)", b_only)
        .table("-(-1)^(1/4) (pi^2 - 48 i K) / (96 pi)")
        .sample(pa().with(B, 0.5))
        .sample(pa().with(B, 0.3)),
        IdentitySpec::new(
            "DI-LG",
            "Log-gamma representation with m = 1/4",
            2,
            &[A, B, C],
            &[A, B, C],
            di_lg_lhs,
            di_lg_rhs,
        )
        .constraint("0 < b < 2, Re c > 0, a != 0", lg_conditions)
        .sample(pa().with(A, I).with(B, 0.5).with(C, 1.0))
        .sample(pa().with(A, -1.0).with(B, 0.5).with(C, 2.0))
        .sample(pa().with(A, Complex64::new(1.0, 1.0)).with(B, 0.3).with(C, 1.5)),
        IdentitySpec::new(
            "DI-LG1",
            "Log-gamma representation with c = e^(ia) and index b - 1",
            2,
            &[A, B],
            &[A, B],
            di_lg1_lhs,
            di_lg1_rhs,
        )
        .constraint("a real with |a| < pi/2 (Re c > 0), 1 < b < 3", lg1_conditions)
        .notes("a is an angle here: the kernel has c = e^(ia) and log a -> i a")
        .sample(pa().with(A, 0.7).with(B, 1.5))
        .sample(pa().with(A, PI / 5.0).with(B, 4.0 / 3.0)),
        IdentitySpec::new(
            "DI-LG1-PI5",
            "Log-gamma instance a = pi/5, b = 4/3",
            2,
            &[],
            &[],
            lg1_pi5_lhs,
            lg1_pi5_rhs,
        )
        .sample(pa()),
        IdentitySpec::new(
            "DI-LG1-PI3",
            "Log-gamma instance a = pi/3, b = 4/3",
            2,
            &[],
            &[],
            lg1_pi3_lhs,
            lg1_pi3_rhs,
        )
        .sample(pa()),
        IdentitySpec::new(
            "DI-LG1-PI4",
            "Log-gamma instance a = pi/4, b = 5/4",
            2,
            &[],
            &[],
            lg1_pi4_lhs,
            lg1_pi4_rhs,
        )
        .sample(pa()),
        IdentitySpec::new(
            "DI-LG1-3PI7",
            "Log-gamma instance a = 3 pi/7, b = 6/5",
            2,
            &[],
            &[],
            lg1_3pi7_lhs,
            lg1_3pi7_rhs,
        )
        .sample(pa()),
        IdentitySpec::new(
            "DI-LG2",
            "Log-gamma representation with m = 1/2",
            2,
            &[A, B, C],
            &[A, B, C],
            di_lg2_lhs,
            di_lg2_rhs,
        )
        .constraint("0 < b < 2, Re c > 0, a != 0", lg2_conditions)
        .table(
            "pi/2 c^(b/2-1) (log(16 pi^2 Gamma(-i(log a + b log c + 3 i pi)/(4 pi))^4 \
             / Gamma(-i(log a + b log c + i pi)/(4 pi))^4) + i pi)",
        )
        .sample(pa().with(A, I).with(B, 0.5).with(C, 1.0))
        .sample(pa().with(A, Complex64::from_polar(1.0, 0.3)).with(B, 0.5).with(C, 2.0)),
        IdentitySpec::new(
            "DI-LG2-NEG1",
            "Log-gamma instance a = -1, b = 4/3, c = pi/4",
            2,
            &[],
            &[],
            lg2_neg1_lhs,
            lg2_neg1_rhs,
        )
        .table(
            "pi^(2/3) / 2^(1/3) (i pi + log(16 pi^2 Gamma(1 + i log(4/pi)/(3 pi))^4 \
             / Gamma(1/2 + i log(4/pi)/(3 pi))^4))",
        )
        .sample(pa()),
        IdentitySpec::new(
            "DI-LG2-I",
            "Log-gamma instance a = i, b = 5/4, c = pi/5",
            2,
            &[],
            &[],
            lg2_i_lhs,
            lg2_i_rhs,
        )
        .sample(pa()),
        IdentitySpec::new(
            "DI-LG2-1PI",
            "Log-gamma instance a = 1 + i, b = 6/5, c = pi/7 + i",
            2,
            &[],
            &[],
            lg2_1pi_lhs,
            lg2_1pi_rhs,
        )
        .sample(pa()),
    ]
}

pub(crate) fn table_entries() -> Vec<IdentitySpec> {
    let tb = |id, anchor, rhs_params: &'static [Sym], lhs, rhs| {
        IdentitySpec::new(id, anchor, 2, if rhs_params.is_empty() { &[B] } else { &[B, K] }, rhs_params, lhs, rhs)
            .printed(DI_PRINTED)
            .constraint("0 < b < 2 (Mittag-Leffler index, and b/2 < 1)", b_only)
    };
    vec![
        tb(
            "TB-ZETA",
            "Summary table: Riemann zeta row, as printed",
            &[K],
            tb_zeta_lhs,
            tb_zeta_rhs,
        )
        .table("(1 - 2^(k+1)) (2 i pi)^(k+1) zeta(-k)")
        .notes("printed row lacks a factor -i; see TB-ZETA-CORRECTED")
        .sample(pa().with(B, 0.5).with(K, 1.0))
        .sample(pa().with(B, 0.5).with(K, 0.5))
        .sample(pa().with(B, 0.5).with(K, -2.0)),
        tb(
            "TB-ZETA-CORRECTED",
            "Summary table: Riemann zeta row, with the factor -i the main theorem gives",
            &[K],
            tb_zeta_lhs,
            tb_zeta_corrected_rhs,
        )
        .sample(pa().with(B, 0.5).with(K, 1.0))
        .sample(pa().with(B, 0.5).with(K, 0.5))
        .sample(pa().with(B, 0.5).with(K, -2.0)),
        tb(
            "TB-LOGLOG",
            "Summary table: log-log row, pi (log 4 + i pi/2)",
            &[],
            tb_loglog_lhs,
            tb_loglog_rhs,
        )
        .table("pi (log(4) + i pi/2)")
        .sample(pa().with(B, 0.5))
        .sample(pa().with(B, 0.8)),
        tb(
            "TB-LOGLOG-LOG",
            "Summary table: log-log over log row, with Euler's constant",
            &[],
            tb_loglog_log_lhs,
            tb_loglog_log_rhs,
        )
        .table("log(2)/2 (2 i gamma + pi - i log(8 pi^2))")
        .sample(pa().with(B, 0.5)),
        tb(
            "TB-LOGLOG-LOG2",
            "Summary table: log-log over log squared row, with Glaisher's constant",
            &[],
            tb_loglog_log2_lhs,
            tb_loglog_log2_rhs,
        )
        .table("pi/24 (-12 log(A) + gamma - i pi/2 + log(2))")
        .sample(pa().with(B, 0.5)),
    ]
}
