//! Symmetry groups of Julia sets of polynomial skew products
//! `f(z, w) = (p(z), q(z, w))` on `C²`.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod numerics;
pub mod skew;
pub mod symmetry;

pub use error::{Error, Result};
