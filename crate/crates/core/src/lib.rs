//! Fractional calculus with Caputo derivatives: power rules, fractional power
//! series, fractional vector operators in spherical and polar coordinates,
//! and the fractional Legendre, Bessel and hypergeometric equations.

// `!(x > 0.0)` guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod bessel;
pub mod cli;
pub mod error;
pub mod frac_ops;
pub mod gamma;
pub mod hypergeom;
pub mod legendre;
pub mod quadrature;
pub mod roots;
pub mod series;
pub mod vector_calc;

pub use error::{Error, Result};
