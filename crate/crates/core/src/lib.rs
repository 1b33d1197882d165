//! Exact computations around Kostka–Foulkes polynomials for `SL2`/`SL3`,
//! IC stalks of real spherical orbit closures, and the graded and
//! centralizer identities attached to the Lorentz and octonionic real forms.

pub mod centralizer;
pub mod cli;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod poly;
pub mod qanalog;
pub mod realform;
pub mod rootdata;
pub mod stalks;

pub use error::{Error, Result};
pub use poly::QPolynomial;
pub use realform::{RealFormFamily, RealWeight};
pub use rootdata::{CartanType, RootSystem, Weight};
