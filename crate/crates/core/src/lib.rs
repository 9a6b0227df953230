//! Determinantal point process sampling and random-matrix statistics.

pub mod error;
pub mod numlin;

pub use error::{Error, Result};
pub mod specfun;
pub mod kernels;
pub mod fredholm;
pub mod samplers;
pub mod rmtstats;
pub mod aztec;
pub mod airyproc;
pub mod cli;
