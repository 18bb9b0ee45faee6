//! Left-hand sides that do not depend on a parameter: sweeping the
//! Mittag-Leffler index of the pi/24 integral.

use mlv::quad::QuadConfig;
use mlv::registry::{lookup, sweep_invariance, Sym};
use mlv::ComplexScalar as C;

fn main() -> mlv::Result<()> {
    let spec = lookup("DI-PI24")?;
    let values: Vec<C> = [0.3, 0.5, 0.8, 1.2].iter().map(|&b| C::new(b, 0.0)).collect();
    let sweep = sweep_invariance(spec.id, Sym::B, &values, &spec.default_samples[0], None, &QuadConfig::default())?;
    for r in &sweep.results {
        println!("b = {}  lhs = {:?}  {}", r.params.get(Sym::B).unwrap().re, r.lhs, r.status);
    }
    println!("max pairwise deviation {:.2e}", sweep.max_deviation);

    // The right-hand side depends on m, so m cannot be swept.
    if let Err(e) = sweep_invariance(spec.id, Sym::M, &values, &spec.default_samples[0], None, &QuadConfig::default()) {
        println!("sweeping m: {e}");
    }
    Ok(())
}
