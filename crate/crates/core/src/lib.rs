pub mod cli;
pub mod complexfn;
pub mod error;
pub mod mittag;
pub mod quad;
pub mod registry;
pub mod zetafam;

pub use error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type ComplexScalar = num_complex::Complex64;
