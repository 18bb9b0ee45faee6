//! Verifying catalog identities at their default samples and at a
//! user-chosen point.

use mlv::quad::QuadConfig;
use mlv::registry::{lookup, verify, ParamAssignment, Sym};
use mlv::ComplexScalar as C;

fn main() -> mlv::Result<()> {
    let cfg = QuadConfig::default();
    for id in ["DI-DEGEN", "GM-C414", "DI-CATALAN"] {
        let spec = lookup(id)?;
        let r = verify(id, &spec.default_samples[0], spec.tolerance, &cfg)?;
        println!("{id:<12} {} rel err {:.2e}  {}", r.status, r.rel_err.unwrap_or(f64::NAN), spec.anchor);
    }

    // A point of our own: the degenerate case at m = 0.4, b = 0.7, c = 1.5 + 0.5i.
    let p = ParamAssignment::new()
        .with(Sym::M, 0.4)
        .with(Sym::B, 0.7)
        .with(Sym::C, C::new(1.5, 0.5));
    let r = verify("DI-DEGEN", &p, 1e-8, &cfg)?;
    println!("DI-DEGEN at {p}: {} (lhs {:?})", r.status, r.lhs);

    // Outside the admissible region the status says so.
    let bad = p.clone().with(Sym::M, 1.2);
    let r = verify("DI-DEGEN", &bad, 1e-8, &cfg)?;
    println!("DI-DEGEN at m = 1.2: {} ({})", r.status, r.message.unwrap_or_default());
    Ok(())
}
