//! Gamma, digamma, incomplete gamma and the Gauss hypergeometric function
//! at complex arguments.

use mlv::complexfn::{digamma, gamma, hyp2f1, log_gamma, upper_incomplete_gamma};
use mlv::registry::format_complex;
use mlv::ComplexScalar as C;

fn main() -> mlv::Result<()> {
    let z = C::new(0.5, 2.0);
    println!("Gamma({z})        = {}", format_complex(gamma(z)?, 16));
    println!("log Gamma({z})    = {}", format_complex(log_gamma(z)?, 16));
    println!("psi(-1/2)         = {}", format_complex(digamma(C::new(-0.5, 0.0))?, 16));
    println!("Gamma(0, 1)       = {}", format_complex(upper_incomplete_gamma(C::new(0.0, 0.0), C::new(1.0, 0.0))?, 16));
    println!("2F1(1,1;2;1/2)    = {}  (2 log 2 = {:.16})", format_complex(hyp2f1(C::new(1.0, 0.0), C::new(1.0, 0.0), C::new(2.0, 0.0), C::new(0.5, 0.0))?, 16), 2.0 * 2f64.ln());

    // Poles are reported, not returned as infinities.
    match gamma(C::new(-2.0, 0.0)) {
        Ok(v) => println!("Gamma(-2) = {v}"),
        Err(e) => println!("Gamma(-2): {e}"),
    }
    Ok(())
}
