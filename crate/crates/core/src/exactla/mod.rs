//! Exact scalar and matrix arithmetic over cyclotomic fields.
//!
//! Every structure map elsewhere in the crate is a [`Mat`] in fixed bases, so
//! each axiom reduces to an exact matrix identity built here.

mod linalg;
mod matrix;
mod scalar;

use alloc::string::String;
use core::fmt;

pub use linalg::{block_solution_space, solution_space, Quotient, Solution};
pub use matrix::{permute_factors, Mat};
pub use scalar::{cyclotomic_polynomial, euler_phi, CycScalar, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    DivisionByZero,
    InvalidConductor(u32),
    ConductorMismatch(u32, u32),
    NotAMultiple { from: u32, to: u32 },
    TooManyCoefficients { conductor: u32, given: usize },
    Parse(String),
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    Inconsistent,
    Singular,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DivisionByZero => f.write_str("division by zero"),
            ExactError::InvalidConductor(n) => write!(f, "invalid conductor {n}"),
            ExactError::ConductorMismatch(a, b) => {
                write!(f, "scalars in Q(zeta_{a}) and Q(zeta_{b}) need an explicit embedding")
            }
            ExactError::NotAMultiple { from, to } => {
                write!(f, "cannot embed conductor {from} into conductor {to}")
            }
            ExactError::TooManyCoefficients { conductor, given } => {
                write!(f, "{given} coordinates given for conductor {conductor}")
            }
            ExactError::Parse(s) => write!(f, "malformed scalar literal `{s}`"),
            ExactError::Shape { op, left, right } => {
                write!(f, "shape mismatch in {op}: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)
            }
            ExactError::Inconsistent => f.write_str("linear system has no solution"),
            ExactError::Singular => f.write_str("matrix is singular"),
        }
    }
}
