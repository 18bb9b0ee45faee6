//! The Hurwitz-Lerch family: Lerch's transcendent, Hurwitz zeta, the
//! polylogarithm and derivatives in `s`.

use mlv::registry::format_complex;
use mlv::zetafam::{hurwitz_zeta, hurwitz_zeta_sderiv, lerch_phi, polylog, stieltjes_gamma1, LerchArgs};
use mlv::ComplexScalar as C;

fn main() -> mlv::Result<()> {
    let zeta2 = hurwitz_zeta(C::new(2.0, 0.0), C::new(1.0, 0.0))?;
    println!("zeta(2)            = {}  (pi^2/6 = {:.16})", format_complex(zeta2, 16), std::f64::consts::PI.powi(2) / 6.0);

    // The same function reached by different routes.
    for (z, s, v) in [
        (C::new(0.5, 0.0), C::new(2.0, 0.0), C::new(0.7, 0.0)),
        (C::new(-0.6, 0.3), C::new(1.5, 0.0), C::new(1.2, 0.0)),
        (C::new(0.0, 1.0), C::new(2.0, 0.0), C::new(0.5, 0.0)),
    ] {
        let args = LerchArgs::new(z, s, v);
        println!("Phi({z}, {s}, {v}) = {}  via {:?}", format_complex(lerch_phi(args)?, 16), args.route()?);
    }

    // Catalan's constant as Im Li_2(i).
    let li2 = polylog(C::new(2.0, 0.0), C::new(0.0, 1.0))?;
    println!("Im Li_2(i)         = {:.16}", li2.im);

    let dz = hurwitz_zeta_sderiv(C::new(0.5, 0.0), C::new(0.25, 0.0), 1)?;
    println!("zeta'(1/2, 1/4)    = {}", format_complex(dz, 16));
    println!("gamma_1(1)         = {}", format_complex(stieltjes_gamma1(C::new(1.0, 0.0))?, 16));
    Ok(())
}
