//! Truncation control for the infinite sums on the right-hand sides.

use std::cell::Cell;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ComplexScalar;

/// Terms summed before the first convergence check.
pub const START_TERMS: usize = 40;
/// Hard cap on the number of terms along one axis.
pub const MAX_TERMS: usize = 1 << 14;

const C0: Complex64 = Complex64::new(0.0, 0.0);

/// `sum_{i>=0} term(i)` by block doubling: blocks `[40, 80)`, `[80, 160)`, ...
/// are added until the last block contributes less than `tol / 10` of the
/// running total.
pub fn sum_axis<F>(what: &str, tol: f64, mut term: F) -> Result<ComplexScalar>
where
    F: FnMut(usize) -> Result<ComplexScalar>,
{
    let mut total = C0;
    for i in 0..START_TERMS {
        total += term(i)?;
    }
    let mut n = START_TERMS;
    loop {
        let mut block = C0;
        for i in n..2 * n {
            block += term(i)?;
        }
        total += block;
        n *= 2;
        if !total.is_finite() {
            return Err(Error::no_conv(
                what,
                format!("partial sum is not finite after {n} terms"),
            ));
        }
        if block.norm() <= 0.1 * tol * total.norm() || block.norm() == 0.0 {
            return Ok(total);
        }
        if n >= MAX_TERMS {
            return Err(Error::no_conv(
                what,
                format!(
                    "tail block still {:.3e} of the total after {n} terms",
                    block.norm() / total.norm()
                ),
            ));
        }
    }
}

/// Sum of an asymptotic (ultimately divergent) series, truncated at its
/// smallest term, together with that term's size as an error bound.
///
/// Stops once a term drops below `tol / 10` of the running total (bound 0),
/// or just before the terms start to grow.
pub fn sum_asymptotic<F>(what: &str, tol: f64, mut term: F) -> Result<(ComplexScalar, f64)>
where
    F: FnMut(usize) -> Result<ComplexScalar>,
{
    let mut total = C0;
    let mut prev = f64::INFINITY;
    for i in 0..MAX_TERMS {
        let t = term(i)?;
        let size = t.norm();
        if i >= 4 && size > prev {
            return Ok((total, prev));
        }
        total += t;
        if i >= 4 && (size <= 0.1 * tol * total.norm() || size == 0.0) {
            return Ok((total, 0.0));
        }
        prev = size;
    }
    Err(Error::no_conv(what, "term cap reached".to_string()))
}

/// `sum_j sum_l coef(j, l) f(j, l)`, both axes by [`sum_axis`].
///
/// `f` is skipped where `|coef|` is below `1e-30` times the largest
/// coefficient met so far; `f` is at most of moderate growth in every use,
/// so such terms cannot matter.
pub fn sum_weighted_2d<C, F>(what: &str, tol: f64, coef: C, f: F) -> Result<ComplexScalar>
where
    C: Fn(usize, usize) -> ComplexScalar,
    F: Fn(usize, usize) -> Result<ComplexScalar>,
{
    let largest = Cell::new(0.0f64);
    let inner_tol = tol / 10.0;
    sum_axis(what, tol, |j| {
        sum_axis(what, inner_tol, |l| {
            let c = coef(j, l);
            let size = c.norm();
            largest.set(largest.get().max(size));
            if size == 0.0 || size < 1e-30 * largest.get() {
                return Ok(C0);
            }
            Ok(c * f(j, l)?)
        })
    })
}

/// `sum_j sum_h term(j, h)` where the `h` series is asymptotic.
///
/// Fails if the accumulated truncation bounds of the inner series exceed
/// `tol` relative to the result.
pub fn sum_outer_asymptotic_inner<F>(what: &str, tol: f64, term: F) -> Result<ComplexScalar>
where
    F: Fn(usize, usize) -> Result<ComplexScalar>,
{
    let bound = Cell::new(0.0f64);
    let total = sum_axis(what, tol, |j| {
        let (v, err) = sum_asymptotic(what, tol / 10.0, |h| term(j, h))?;
        bound.set(bound.get() + err);
        Ok(v)
    })?;
    if bound.get() > tol * total.norm() {
        return Err(Error::no_conv(
            what,
            format!(
                "asymptotic truncation error {:.3e} exceeds the tolerance",
                bound.get() / total.norm()
            ),
        ));
    }
    Ok(total)
}
