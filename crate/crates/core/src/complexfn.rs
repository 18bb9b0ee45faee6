//! Complex special functions on the principal branch: the gamma family,
//! the upper incomplete gamma function, generalized binomial coefficients,
//! principal powers and the Gauss hypergeometric function.
//!
//! Every function is total on its documented domain and returns an
//! [`Error`] outside it, never a silent NaN.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ComplexScalar;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Even-index Bernoulli numbers `B_2, B_4, ..., B_40`.
pub(crate) const BERNOULLI_EVEN: [f64; 20] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174_611.0 / 330.0,
    854_513.0 / 138.0,
    -236_364_091.0 / 2730.0,
    8_553_103.0 / 6.0,
    -23_749_461_029.0 / 870.0,
    8_615_841_276_005.0 / 14322.0,
    -7_709_321_041_217.0 / 510.0,
    2_577_687_858_367.0 / 6.0,
    -26_315_271_553_053_477_373.0 / 1_919_190.0,
    2_929_993_913_841_559.0 / 6.0,
    -261_082_718_496_449_122_051.0 / 13530.0,
];

/// Bernoulli number `B_n` (with `B_1 = -1/2`), for `n <= 40`.
pub(crate) fn bernoulli(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => -0.5,
        n if n % 2 == 1 => 0.0,
        n => BERNOULLI_EVEN[n / 2 - 1],
    }
}

/// Returns `Some(n)` when `z` is exactly the non-positive integer `n`.
pub(crate) fn as_nonpositive_integer(z: ComplexScalar) -> Option<i64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -1e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

/// Returns `Some(n)` when `z` is exactly the positive integer `n`.
pub(crate) fn as_positive_integer(z: ComplexScalar) -> Option<u64> {
    if z.im == 0.0 && z.re >= 1.0 && z.re == z.re.round() && z.re < 1e15 {
        Some(z.re as u64)
    } else {
        None
    }
}

fn gamma_lanczos(z: ComplexScalar) -> ComplexScalar {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    ((z + 0.5) * t.ln() - t + LN_SQRT_2PI).exp() * acc
}

/// Gamma function. Lanczos approximation for `Re z >= 1/2`, reflection otherwise.
pub fn gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if let Some(n) = as_nonpositive_integer(z) {
        return Err(Error::Pole(format!("gamma has a pole at z = {n}")));
    }
    if z.re < 0.5 {
        let s = (PI * z).sin();
        return Ok(PI / (s * gamma_lanczos(1.0 - z)));
    }
    Ok(gamma_lanczos(z))
}

/// Reciprocal gamma function, entire: zero at the poles of `gamma`.
pub fn rgamma(z: ComplexScalar) -> ComplexScalar {
    if as_nonpositive_integer(z).is_some() {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        // 1/Gamma(z) = Gamma(1 - z) sin(pi z) / pi
        let w = 1.0 - z;
        return (log_gamma_unchecked(w) + ((PI * z).sin() / PI).ln()).exp();
    }
    (-log_gamma_unchecked(z)).exp()
}

/// Stirling series with upward shift; valid for `Re z > 0`.
fn log_gamma_unchecked(z: ComplexScalar) -> ComplexScalar {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    let w2 = w * w;
    let mut wpow = w;
    let mut corr = Complex64::new(0.0, 0.0);
    for k in 1..=8 {
        let kk = (2 * k) as f64;
        corr += BERNOULLI_EVEN[k - 1] / (kk * (kk - 1.0) * wpow);
        wpow *= w2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + corr - shift
}

/// Log-gamma on the branch continuous from the positive real axis.
///
/// Defined for `Re z > 0`; `exp(log_gamma(z)) == gamma(z)`.
pub fn log_gamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if z.re <= 0.0 {
        return Err(Error::domain(format!(
            "log_gamma requires Re z > 0, got z = {z}"
        )));
    }
    Ok(log_gamma_unchecked(z))
}

/// Digamma function `psi(z) = Gamma'(z)/Gamma(z)`.
pub fn digamma(z: ComplexScalar) -> Result<ComplexScalar> {
    if let Some(n) = as_nonpositive_integer(z) {
        return Err(Error::Pole(format!("digamma has a pole at z = {n}")));
    }
    if z.re < 0.5 {
        let reflected = digamma(1.0 - z)?;
        // cot as cos/sin: the complex tan divides by zero at half-integers
        let w = PI * z;
        return Ok(reflected - PI * w.cos() / w.sin());
    }
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < 15.0 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    let inv2 = 1.0 / (w * w);
    let mut p = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=8 {
        series += BERNOULLI_EVEN[k - 1] / (2.0 * k as f64) * p;
        p *= inv2;
    }
    Ok(acc + w.ln() - 0.5 / w - series)
}

/// Exponential integral `E1(z) = Gamma(0, z)`, principal branch.
pub fn expint_e1(z: ComplexScalar) -> Result<ComplexScalar> {
    if z.norm() == 0.0 {
        return Err(Error::Singularity("E1 is singular at z = 0".into()));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::BranchCut(format!(
            "E1 is evaluated on its cut (negative real axis), z = {z}"
        )));
    }
    if z.norm() <= 2.0 {
        // E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k k!)
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 1..200 {
            term *= -z / k as f64;
            let add = term / k as f64;
            sum += add;
            if add.norm() <= 1e-17 * sum.norm() {
                break;
            }
        }
        return Ok(-EULER_GAMMA - z.ln() - sum);
    }
    incomplete_gamma_cf(Complex64::new(0.0, 0.0), z)
}

/// Legendre continued fraction for `Gamma(s, z)`.
fn incomplete_gamma_cf(s: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    Ok(incomplete_gamma_cf_scaled(s, z)? * (-z).exp())
}

/// `e^z Gamma(s, z)` by the Legendre continued fraction, modified Lentz evaluation.
fn incomplete_gamma_cf_scaled(s: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0 - s;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..20_000 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = Complex64::new(TINY, 0.0);
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = Complex64::new(TINY, 0.0);
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            return Ok((s * z.ln()).exp() * h);
        }
    }
    Err(Error::no_conv(
        "incomplete gamma continued fraction",
        format!("s = {s}, z = {z}"),
    ))
}

/// Upper incomplete gamma function `Gamma(s, z)` on the principal branch.
///
/// Positive integer `s` is entire in `z`; otherwise `z` must be off the
/// negative real axis.
pub fn upper_incomplete_gamma(s: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    if z.norm() == 0.0 {
        if s.re > 0.0 {
            return gamma(s);
        }
        return Err(Error::Singularity(format!(
            "Gamma(s, 0) requires Re s > 0, got s = {s}"
        )));
    }
    let pos_int = as_positive_integer(s).filter(|&n| n <= 60);
    if let Some(n) = pos_int {
        // Gamma(n, z) = (n-1)! e^{-z} sum_{j<n} z^j / j!, summed by Horner
        let mut acc = Complex64::new(1.0, 0.0);
        for j in (1..n).rev() {
            acc = acc * z / (j as f64) + 1.0;
        }
        let fact: f64 = (1..n).map(|j| j as f64).product();
        return Ok((-z).exp() * acc * fact);
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::BranchCut(format!(
            "Gamma(s, z) with non-integer s = {s} on the negative real axis z = {z}"
        )));
    }
    if let Some(n) = as_nonpositive_integer(s).filter(|&n| n >= -60) {
        // Gamma(s, z) = (Gamma(s+1, z) - z^s e^{-z}) / s, starting from E1.
        let mut g = expint_e1(z)?;
        let emz = (-z).exp();
        let lz = z.ln();
        for k in 1..=(-n) {
            let sk = -(k as f64);
            g = (g - (sk * lz).exp() * emz) / sk;
        }
        return Ok(g);
    }
    if z.norm() < s.norm() + 1.0 {
        // Gamma(s) - gamma(s, z), lower function by its power series
        let mut term = 1.0 / s;
        let mut sum = term;
        let mut converged = false;
        for n in 1..20_000 {
            term *= z / (s + n as f64);
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::no_conv(
                "incomplete gamma series",
                format!("s = {s}, z = {z}"),
            ));
        }
        let lower = (s * z.ln() - z).exp() * sum;
        return Ok(gamma(s)? - lower);
    }
    incomplete_gamma_cf(s, z)
}

/// `e^z Gamma(s, z)`, which stays finite where `Gamma(s, z)` underflows.
pub fn upper_incomplete_gamma_scaled(s: ComplexScalar, z: ComplexScalar) -> Result<ComplexScalar> {
    if let Some(n) = as_positive_integer(s).filter(|&n| n <= 60) {
        let mut acc = Complex64::new(1.0, 0.0);
        for j in (1..n).rev() {
            acc = acc * z / (j as f64) + 1.0;
        }
        let fact: f64 = (1..n).map(|j| j as f64).product();
        return Ok(acc * fact);
    }
    if z.norm() >= s.norm() + 1.0
        && (s.norm() == 0.0 || as_nonpositive_integer(s).is_none())
        && !(z.im == 0.0 && z.re < 0.0)
    {
        return incomplete_gamma_cf_scaled(s, z);
    }
    Ok(upper_incomplete_gamma(s, z)? * z.exp())
}

/// Generalized binomial coefficient `C(lambda, h)`.
pub fn binom(lambda: ComplexScalar, h: u64) -> ComplexScalar {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..h {
        acc *= (lambda - j as f64) / (j + 1) as f64;
    }
    acc
}

/// Principal power `z^k = exp(k Log z)`.
///
/// `0^k` is zero for `Re k > 0` and a singularity otherwise.
pub fn complex_pow(z: ComplexScalar, k: ComplexScalar) -> Result<ComplexScalar> {
    if z.norm() == 0.0 {
        if k.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Singularity(format!(
            "0^k with Re k <= 0 (k = {k})"
        )));
    }
    Ok((k * principal_log(z)).exp())
}

/// Principal logarithm with `arg` in `(-pi, pi]`, also for a negative zero imaginary part.
pub(crate) fn principal_log(z: ComplexScalar) -> ComplexScalar {
    let mut arg = z.im.atan2(z.re);
    if arg == -PI {
        arg = PI;
    }
    Complex64::new(z.norm().ln(), arg)
}

/// A logarithm value pinned to the principal sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchLog {
    value: ComplexScalar,
}

impl BranchLog {
    /// Principal logarithm of a nonzero `z`.
    pub fn principal(z: ComplexScalar) -> Result<Self> {
        if z.norm() == 0.0 {
            return Err(Error::Singularity("log of zero".into()));
        }
        Ok(BranchLog {
            value: principal_log(z),
        })
    }

    pub fn value(&self) -> ComplexScalar {
        self.value
    }

    /// Argument in `(-pi, pi]`.
    pub fn arg(&self) -> f64 {
        self.value.im
    }

    /// `z^k` on this sheet.
    pub fn pow(&self, k: ComplexScalar) -> ComplexScalar {
        (k * self.value).exp()
    }
}

/// Gauss hypergeometric function `2F1(a, b; c; z)`.
///
/// Direct series for `|z| < 1`, Pfaff transformation when `|z/(z-1)|` is
/// smaller. Anything else is outside the supported region.
pub fn hyp2f1(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    if let Some(n) = as_nonpositive_integer(c) {
        return Err(Error::Pole(format!("2F1 with c = {n}")));
    }
    if z.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let w = z / (z - 1.0);
    if z.norm() < 1.0 && z.norm() <= w.norm() {
        return gauss_series(a, b, c, z);
    }
    if w.norm() < 1.0 {
        return Ok((1.0 - z).powc(-a) * gauss_series(a, c - b, c, w)?);
    }
    Err(Error::region(format!(
        "2F1 needs |z| < 1 or |z/(z-1)| < 1, got z = {z}"
    )))
}

fn gauss_series(
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
    z: ComplexScalar,
) -> Result<ComplexScalar> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..100_000u32 {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() == 0.0 || term.norm() <= 1e-16 * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::no_conv("2F1 series", format!("a = {a}, b = {b}, c = {c}, z = {z}")))
}
