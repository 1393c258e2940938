//! Finite-type crossed Hopf G-algebras: data model, axiom verifier, packed
//! form, dual and cosemisimplicity.

mod algebra;
mod cosemisimple;
mod dual;
mod group;
mod packed;
mod verify;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use algebra::{Component, CrossedHopf};
pub use cosemisimple::{dual_trace_form, is_cosemisimple, ComponentVerdict, CosemisimpleVerdict};
pub use dual::{dualize, verify_dual, DualComponent, DualGCoalgebra};
pub use group::FiniteGroup;
pub use packed::{
    grading_violations, pack, pack_unchecked, unpack, verify_packed, GradingViolation, PackedHopfAlgebra,
};
pub(crate) use verify::middle_swap;
pub use verify::{verify_crossed_hopf, VerifyOptions};

use crate::ExactError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureError {
    Group(String),
    Shape { what: String, expected: (usize, usize), found: (usize, usize) },
    Count { what: &'static str, expected: usize, found: usize },
    AxiomFailure { check: String, witness: String },
    Grading(Vec<GradingViolation>),
    Exact(ExactError),
}

impl From<ExactError> for StructureError {
    fn from(e: ExactError) -> Self {
        StructureError::Exact(e)
    }
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::Group(s) => write!(f, "invalid group: {s}"),
            StructureError::Shape { what, expected, found } => {
                write!(f, "{what} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)
            }
            StructureError::Count { what, expected, found } => {
                write!(f, "{found} {what} given, expected {expected}")
            }
            StructureError::AxiomFailure { check, witness } => {
                write!(f, "check {check} failed: {witness}")
            }
            StructureError::Grading(v) => {
                f.write_str("grading conditions violated:")?;
                for g in v {
                    write!(f, " [{}: {}]", g.condition, g.detail)?;
                }
                Ok(())
            }
            StructureError::Exact(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests;
