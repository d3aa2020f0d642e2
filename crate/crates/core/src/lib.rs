//! Kauffman bracket skein computations for lassos, braid closures and their
//! satellites, with Jones and Alexander polynomials.
//!
//! ```
//! use satknot_core::{lasso::Lasso, braid::BraidWord, satellite::{Pattern, SatelliteSpec, satellite_jones}};
//!
//! let trefoil: BraidWord = "B2: -1 -1 -1".parse().unwrap();
//! let double = SatelliteSpec::new(Pattern::Lasso("L(2)".parse().unwrap()), trefoil).unwrap();
//! let jones = satellite_jones(&double, true).unwrap();
//! assert_eq!(jones.to_string(), "-t^-13 + 2t^-12 - t^-11 + t^-10 - t^-9 - t^-6 + t^-5 - t^-4 + t^-3 + t^-1");
//! # let _ = Lasso::core();
//! ```

pub mod alexander;
pub mod braid;
pub mod catalog;
pub mod error;
pub mod lasso;
pub mod poly;
pub mod satellite;
pub mod skein;

pub use braid::BraidWord;
pub use error::{Error, Result};
pub use lasso::Lasso;
pub use poly::{LaurentPolynomial, Variable};
pub use skein::SkeinElement;
