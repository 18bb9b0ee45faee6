//! Independent reference computations shared by the integration tests.
//!
//! Each oracle uses a different algorithm from the library routine it checks.

#![allow(dead_code)]

use mlv::ComplexScalar as C;

pub fn c(re: f64) -> C {
    C::new(re, 0.0)
}

pub fn rel(a: C, b: C) -> f64 {
    let d = (a - b).norm();
    if b.norm() == 0.0 {
        d
    } else {
        d / b.norm()
    }
}

#[track_caller]
pub fn assert_close(got: C, want: C, tol: f64) {
    let r = rel(got, want);
    assert!(r <= tol, "got {got}, want {want}, relative error {r:e} > {tol:e}");
}

#[track_caller]
pub fn assert_close_f(got: f64, want: f64, tol: f64) {
    assert_close(c(got), c(want), tol);
}

pub const EULER: f64 = 0.577_215_664_901_532_9;

/// `log Gamma(z)` by the Stirling series after shifting `z` up by 40,
/// with 12 Bernoulli terms. Independent of the Lanczos route.
pub fn log_gamma_stirling(z: C) -> C {
    const B: [f64; 12] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
        854513.0 / 138.0,
        -236364091.0 / 2730.0,
    ];
    let mut w = z;
    let mut shift = C::new(0.0, 0.0);
    for _ in 0..40 {
        shift += w.ln();
        w += 1.0;
    }
    let mut s = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut p = w;
    for (k, b) in B.iter().enumerate() {
        let n = 2.0 * (k + 1) as f64;
        s += b / (n * (n - 1.0) * p);
        p *= w * w;
    }
    s - shift
}

/// `Gamma(z)` for `Re z > 0` from [`log_gamma_stirling`].
pub fn gamma_oracle(z: C) -> C {
    log_gamma_stirling(z).exp()
}

/// `psi(z)` by the asymptotic series after 50 upward steps.
pub fn digamma_oracle(z: C) -> C {
    let mut w = z;
    let mut acc = C::new(0.0, 0.0);
    for _ in 0..50 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    let w2 = w * w;
    acc + w.ln() - 0.5 / w - 1.0 / (12.0 * w2) + 1.0 / (120.0 * w2 * w2) - 1.0 / (252.0 * w2 * w2 * w2)
        + 1.0 / (240.0 * w2 * w2 * w2 * w2)
}

/// `E1(x)` for real `x > 0` by the continued fraction, 5000 levels deep
/// `e^{-x} / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...)))))`.
pub fn e1_continued_fraction(x: f64) -> f64 {
    let mut t = 0.0;
    for n in (1..=5000).rev() {
        let n = n as f64;
        t = n / (1.0 + n / (x + t));
    }
    (-x).exp() / (x + t)
}

/// `erfc(x)` for `x > 0` by its Laplace continued fraction, evaluated
/// bottom-up over 200 levels.
pub fn erfc_continued_fraction(x: f64) -> f64 {
    let mut t = x;
    for n in (1..=200).rev() {
        t = x + (n as f64 / 2.0) / t;
    }
    (-x * x).exp() / (std::f64::consts::PI.sqrt() * t)
}

/// `erfc(x)` for small `x` from the Maclaurin series of `erf`.
pub fn erfc_series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = x;
    for n in 1..200 {
        term *= -x * x / n as f64;
        sum += term / (2 * n + 1) as f64;
    }
    1.0 - 2.0 / std::f64::consts::PI.sqrt() * sum
}

/// `E_{1/2}(-x) = e^{x^2} erfc(x)`.
pub fn ml_half_neg(x: f64) -> f64 {
    if x < 2.0 {
        (x * x).exp() * erfc_series(x)
    } else {
        let mut t = x;
        for n in (1..=200).rev() {
            t = x + (n as f64 / 2.0) / t;
        }
        1.0 / (std::f64::consts::PI.sqrt() * t)
    }
}

/// Catalan's constant from `sum (-1)^n / (2n+1)^2` over 10^6 terms; the
/// mean of the last two partial sums cancels the leading tail.
pub fn catalan_direct() -> f64 {
    let mut s = 0.0;
    let mut prev = 0.0;
    for n in 0..1_000_000u64 {
        prev = s;
        let d = (2 * n + 1) as f64;
        let t = 1.0 / (d * d);
        s += if n % 2 == 0 { t } else { -t };
    }
    0.5 * (s + prev)
}

/// First Stieltjes constant from `sum_{k<=n} ln k / k - (ln n)^2 / 2` with
/// Euler-Maclaurin corrections at `n`.
pub fn stieltjes1_direct() -> f64 {
    let n = 10_000u32;
    let mut s = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        s += kf.ln() / kf;
    }
    let nf = n as f64;
    let l = nf.ln();
    // f(x) = ln x / x; subtract f(n)/2 and the Bernoulli terms.
    let f = l / nf;
    let f1 = (1.0 - l) / (nf * nf);
    let f3 = (11.0 - 6.0 * l) / nf.powi(4);
    s - l * l / 2.0 - f / 2.0 - f1 / 12.0 + f3 / 720.0
}

/// 6th-order central difference of `f` at `x` with step `h`, refined once
/// by Richardson extrapolation with `h/2`.
pub fn derivative_fd<F: Fn(f64) -> C>(f: F, x: f64, h: f64) -> C {
    let d = |h: f64| {
        (-f(x - 3.0 * h) + 9.0 * f(x - 2.0 * h) - 45.0 * f(x - h) + 45.0 * f(x + h) - 9.0 * f(x + 2.0 * h)
            + f(x + 3.0 * h))
            / (60.0 * h)
    };
    let (a, b) = (d(h), d(h / 2.0));
    b + (b - a) / 63.0
}

/// `sum_{n<N} z^n / (n + v)^s` until the terms fall below `1e-18`.
pub fn lerch_direct(z: C, s: C, v: C) -> C {
    let mut sum = C::new(0.0, 0.0);
    let mut zn = C::new(1.0, 0.0);
    for n in 0..100_000 {
        let t = zn * (-s * (v + n as f64).ln()).exp();
        sum += t;
        if t.norm() < 1e-18 * sum.norm() && n > 10 {
            break;
        }
        zn *= z;
    }
    sum
}

/// Bernoulli polynomial `B_n(x)` from the explicit sums for `n <= 4`.
pub fn bernoulli_poly_explicit(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => x - 0.5,
        2 => x * x - x + 1.0 / 6.0,
        3 => x * x * x - 1.5 * x * x + 0.5 * x,
        4 => x.powi(4) - 2.0 * x.powi(3) + x * x - 1.0 / 30.0,
        _ => panic!("n <= 4 only"),
    }
}

pub fn mlv_bin() -> &'static str {
    env!("CARGO_BIN_EXE_mlv")
}
