//! Spectral numerics and polyhomogeneous index-set calculus for model
//! simple-edge spaces: truncated cones `C(F)` over flat fibres and products
//! `B × C(F)` with closed flat bases.
//!
//! The crate is `no_std` (with `alloc`). Everything here is a pure function of
//! its inputs; file formats, the command line and thread pools live in the
//! `torsionlab` crate.
//!
//! Module map:
//!
//! * [`phg`]: exact index sets, extended unions, pushforward and composition
//!   arithmetic, heat-trace templates and zeta pole structure.
//! * [`fiber`]: Hodge spectra of flat circles and tori, the fibre operator
//!   `A` and its `ν`-spectrum.
//! * [`bessel`], [`kernel`], [`trace`], [`fit`]: special functions, the
//!   Friedrichs model heat kernel, certified heat traces and least-squares
//!   extraction of expansion coefficients.
//! * [`zeta`]: zeta values near `s = 0`, kernel dimensions and torsion.
#![no_std]
// NaN must fail every domain check, hence `!(x > 0.0)` rather than `x <= 0.0`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bessel;
pub mod error;
pub mod fiber;
pub mod fit;
pub mod kernel;
pub mod linalg;
pub mod math;
pub mod phg;
pub mod quad;
pub mod trace;
pub mod zeta;

pub use error::{Error, Result};
