//! The general single integral against its triple-series closed form.

use mlv::quad::QuadConfig;
use mlv::registry::{lookup, triple_series, Sym};

fn main() -> mlv::Result<()> {
    let spec = lookup("GM-MAIN")?;
    let p = &spec.default_samples[0];
    println!("parameters: {p}");
    let series = triple_series(p, 1e-12)?;
    let quad = spec.lhs_value(p, &QuadConfig { rel_tol: 1e-12, ..QuadConfig::default() })?;
    println!("triple series {series:.15}");
    println!("quadrature    {:.15}", quad.value);
    println!("relative gap  {:.2e}", (series - quad.value).norm() / series.norm());

    // theta = 0 collapses one axis of the sum.
    let flat = p.clone().with(Sym::Theta, 0.0);
    println!("theta = 0:    {:.15}", triple_series(&flat, 1e-12)?);
    Ok(())
}
