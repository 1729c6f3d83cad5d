//! Exact arithmetic in the dually paired Hopf algebras NSym and QSym, with the
//! shin / extended Schur bases and their row-strict, flipped and backward
//! variants.
//!
//! ```
//! use shinsym::algebra::{convert, Basis, Element};
//!
//! let x: Element = "sh[3,2]".parse().unwrap();
//! assert_eq!(convert(&x, Basis::H).unwrap().to_string(), "H[3,2] - H[4,1]");
//! ```

pub mod algebra;
pub mod cli;
pub mod composition;
pub mod error;
pub mod schur;
pub mod tableau;

pub use error::{Error, Result};
