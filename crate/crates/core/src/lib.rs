//! Multi-component lifted MRD codes.
//!
//! Constant dimension codes built as unions of lifted Gabidulin codes with
//! shifted identity blocks, together with their exact cardinalities, brute
//! force verification at small parameters and the resulting lower bounds
//! on `A_q(n, d, k)`.
//!
//! ```
//! use multilift::construct::{size_formula, CodeParams, MultiComponentCode};
//! use multilift::linalg::DEFAULT_VERIFY_CAP;
//!
//! let params = CodeParams::new(2, 6, 2, 2).unwrap();
//! assert_eq!(size_formula(&params).unwrap().to_string(), "21");
//!
//! let code = MultiComponentCode::build(params).unwrap();
//! let report = code.verify(DEFAULT_VERIFY_CAP).unwrap();
//! assert_eq!(report.min_distance, 2);
//! ```

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod export;
pub mod galois;
pub mod linalg;
pub mod mrd;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
