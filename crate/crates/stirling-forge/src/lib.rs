//! Exact-arithmetic toolkit for Stirling numbers of both kinds and the
//! polynomial families built from them: exponential (single-variable Bell),
//! geometric, Eulerian, and Euler polynomials, Bernoulli numbers, and power
//! sums. Every closed form has at least one independent route (recurrence,
//! explicit sum, enumeration, or truncated generating series), and the
//! `verify` module cross-checks them over configurable ranges.
//!
//! All arithmetic is over arbitrary-precision integers and rationals; there
//! is no floating point anywhere.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod exec;
pub mod families;
pub mod findiff;
pub mod polybasis;
pub mod report;
pub mod series;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
