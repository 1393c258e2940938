//! Exact verification of finite-type crossed Hopf group algebras.
//!
//! Every structure map is a [`Mat`] over a cyclotomic field, so each axiom of
//! the theory becomes a decidable matrix identity. Verifiers return a
//! [`Report`] of named checks with witnesses.

#![no_std]
// elimination loops read best with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod center;
pub mod comod;
pub mod exactla;
pub mod fixtures;
pub mod quasi;
pub mod report;
pub mod structure;
pub mod tannaka;
pub mod trace;

pub use exactla::{CycScalar, ExactError, Mat};
pub use report::{Check, Report, Status};
pub use structure::{CrossedHopf, FiniteGroup};
