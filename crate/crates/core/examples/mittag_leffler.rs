//! The Mittag-Leffler function: evaluation routes, the real-line oracle and
//! the Mellin transform of `E_b(-u)`.

use mlv::mittag::{mellin_ml_neg, ml, ml_eval, ml_neg_spectral, MLParams};
use mlv::registry::format_complex;
use mlv::ComplexScalar as C;

fn main() -> mlv::Result<()> {
    let half = MLParams::one_param(0.5)?;
    for u in [0.5, 5.0, 50.0, 1e4] {
        let e = ml_eval(half, C::new(-u, 0.0))?;
        let oracle = ml_neg_spectral(0.5, u)?;
        println!("E_1/2(-{u:<7}) = {:.16e}  route {:?}, spectral {:.16e}", e.value.re, e.route, oracle);
    }

    // E_{1/2}(-x) = exp(x^2) erfc(x): at x = 1 about 0.4275835761558070.
    println!("E_1/2(-1)       = {:.16}", ml(half, C::new(-1.0, 0.0))?.re);

    let two = MLParams::new(0.8, C::new(1.1, 0.3))?;
    let z = C::new(2.0, 1.0);
    println!("E_0.8,1.1+0.3i({z}) = {}", format_complex(ml(two, z)?, 16));

    // int_0^inf u^{s-1} E_b(-u) du = Gamma(s) Gamma(1-s) / Gamma(1 - b s).
    let m = mellin_ml_neg(C::new(0.5, 0.0), 0.5)?;
    println!("Mellin at s = b = 1/2: {}", format_complex(m, 16));
    Ok(())
}
