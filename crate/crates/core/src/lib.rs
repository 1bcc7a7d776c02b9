//! Exact rational cohomology of moduli spaces of rank-2 Higgs bundles, computed two
//! independent ways:
//!
//! * from the ring presentation by universal classes and relations
//!   ([`relation_ideal`], built on [`graded`] and [`primitive`]), and
//! * from the perfect Morse function of the circle action ([`morse`]), whose minimum
//!   is handled by the Harder–Narasimhan recursion of [`shatz`].
//!
//! Everything is exact: Poincaré series carry arbitrary-precision integer coefficients
//! ([`series`]) and linear algebra runs over `Q` ([`linalg`]).

pub mod error;
pub mod graded;
pub mod linalg;
pub mod morse;
pub mod primitive;
pub mod relation_ideal;
pub mod series;
pub mod shatz;

pub use error::{Error, Result};
pub use morse::ModuliParams;
pub use series::PoincareSeries;

/// Bumped whenever any computation can change its output; part of cache keys.
pub const ENGINE_VERSION: &str = concat!("higgs-core/", env!("CARGO_PKG_VERSION"), "/1");
