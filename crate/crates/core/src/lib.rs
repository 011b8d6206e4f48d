// NaN must fail the `!(x > 0.0)` style guards; the Lanczos table is quoted at full precision
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod acceptance;
pub mod cli;
pub mod differint;
pub mod error;
pub mod field;
pub mod figures;
pub mod ftmult;
pub mod grid;
pub mod numeric;
pub mod spectral;
pub mod wave_uv;
pub mod wave_xt;

pub use error::{Checked, Error, Result, Warning};
pub use grid::GridFunction;
pub use numeric::Order;
