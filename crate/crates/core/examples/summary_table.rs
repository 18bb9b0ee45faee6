//! The summary table of double integrals, recomputed.

use mlv::quad::QuadConfig;
use mlv::registry::table_rows;

fn main() {
    for row in table_rows(&QuadConfig::default()) {
        let r = &row.result;
        println!(
            "{:<15} {:<19} {:>9.2e}  {}",
            row.id,
            r.status.to_string(),
            r.rel_err.unwrap_or(f64::NAN),
            row.label
        );
    }
}
