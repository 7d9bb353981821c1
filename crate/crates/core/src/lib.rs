//! Exact computer algebra for noncommutative harmonics.
//!
//! The crate is `no_std` (it needs `alloc`) and uses arbitrary-precision
//! rationals throughout; there is no floating point anywhere.
//!
//! - [`qseries`]: truncated power series in the grading variable `q`.
//! - [`partition`] and [`symfunc`]: partitions and symmetric functions with
//!   q-series coefficients in the `p`, `h`, `e`, `m` and `s` bases.
//! - [`frobenius`]: closed formulas for graded Frobenius characteristics.
//! - [`freealg`]: noncommutative polynomials, Lyndon words and the bracket,
//!   shuffle and hybrid bases.
//! - [`harmonics`]: brute-force kernels of invariant differential operators,
//!   used as an oracle for the closed formulas.
//! - [`linalg`]: exact sparse elimination backing the kernels and basis solves.
//! - [`verify`]: sweeps that check the identities relating all of the above.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod freealg;
pub mod frobenius;
pub mod harmonics;
pub mod linalg;
pub mod partition;
pub mod qseries;
pub mod rational;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use freealg::{LyndonFactorization, NCPoly, Word};
pub use frobenius::{FrobSeries, Module};
pub use harmonics::{Flavor, GradedSubspace, SetPartition};
pub use partition::Partition;
pub use qseries::QSeries;
pub use rational::Rational;
pub use symfunc::{Basis, SymFunc};
