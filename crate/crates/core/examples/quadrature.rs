//! Double-exponential quadrature on finite and semi-infinite intervals, with
//! endpoint singularities and an iterated double integral.

use mlv::quad::{integrate_double, integrate_finite, integrate_semiinf, Decay, Domain, QuadConfig, SingularityHint};
use mlv::ComplexScalar as C;

fn main() -> mlv::Result<()> {
    let cfg = QuadConfig::default();

    // int_0^1 x^{-1/2} dx = 2, with the singularity declared.
    let r = integrate_finite(|x| Ok(C::new(x.powf(-0.5), 0.0)), 0.0, 1.0, SingularityHint::left(-0.5), &cfg)?;
    println!("int_0^1 x^-1/2     = {:.15}  ({} evaluations, {} levels)", r.value.re, r.evaluations, r.levels);

    // int_0^inf e^{-x} x^{i} dx = Gamma(1 + i).
    let hint = SingularityHint::default().with_decay(Decay::Exponential { rate: 1.0 });
    let r = integrate_semiinf(|x| Ok(C::new(0.0, x.ln()).exp() * (-x).exp()), 0.0, hint, &cfg)?;
    println!("int_0^inf e^-x x^i = {:.15} {:+.15}i", r.value.re, r.value.im);

    // int_0^inf int_0^inf e^{-x - 2u} du dx = 1/2.
    let decay = SingularityHint::default().with_decay(Decay::Exponential { rate: 1.0 });
    let d = Domain::SemiInfinite { a: 0.0, hint: decay };
    let r = integrate_double(|x, u| Ok(C::new((-x - 2.0 * u).exp(), 0.0)), d, d, &cfg)?;
    println!("double integral    = {:.15}  converged: {}", r.value.re, r.converged);

    // Tighter outer tolerance for the 2-D case.
    let tight = QuadConfig { outer_rel_tol: 1e-10, rel_tol: 1e-12, ..cfg };
    let r = integrate_double(|x, u| Ok(C::new((-x - 2.0 * u).exp(), 0.0)), d, d, &tight)?;
    println!("tight              = {:.15}  err estimate {:.1e}", r.value.re, r.err_estimate);
    Ok(())
}
