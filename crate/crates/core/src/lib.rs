//! Exact braided Hopf cyclic cohomology in the category of Z_n-graded
//! (anyonic) vector spaces over the cyclotomic field Q(ζ_n).

pub mod builtin;
pub mod cocyclic;
pub mod cohomology;
pub mod error;
pub mod exec;
pub mod graded;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod pipeline;
pub mod report;
pub mod scalar;
pub mod sparse;
pub mod transmute;
pub mod triple;

pub use error::{Error, Result};
