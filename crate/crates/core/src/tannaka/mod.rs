//! Ends and coends over finite diagrams of vector spaces, and reconstruction
//! of a crossed Hopf G-algebra from a finite tensor-closed presentation.

mod coend;
mod diagram;
mod reconstruct;

use alloc::string::String;
use core::fmt;

pub use coend::{
    coend_coalgebra, coend_product, pairing_check, verify_coend, CoendPresentation, CoendProduct, PairingVerdict,
};
pub use diagram::{end_hom, product_diagram, Arrow, FiniteDiagram};
pub use reconstruct::{
    grouplike_matching, reconstruct, regular_presentation, verify_isomorphism, ConjWitness, DualWitness,
    PresentedObject, Reconstruction, TannakianPresentation,
};

use crate::comod::ComodError;
use crate::ExactError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TannakaError {
    Shape {
        what: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A presentation invariant fails; `witness` names the offending tuple.
    Presentation {
        condition: &'static str,
        witness: String,
    },
    /// A structure map does not descend to the quotient.
    NotWellDefined {
        map: &'static str,
        witness: String,
    },
    /// The relation span is not a coideal, which valid input cannot cause.
    Internal(String),
    Exact(ExactError),
    Comod(ComodError),
}

impl From<ExactError> for TannakaError {
    fn from(e: ExactError) -> Self {
        TannakaError::Exact(e)
    }
}

impl From<ComodError> for TannakaError {
    fn from(e: ComodError) -> Self {
        TannakaError::Comod(e)
    }
}

impl fmt::Display for TannakaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TannakaError::Shape { what, expected, found } => {
                write!(f, "{what} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)
            }
            TannakaError::Presentation { condition, witness } => {
                write!(f, "presentation violates {condition}: {witness}")
            }
            TannakaError::NotWellDefined { map, witness } => {
                write!(f, "{map} does not descend to the coend: {witness}")
            }
            TannakaError::Internal(s) => write!(f, "internal error: {s}"),
            TannakaError::Exact(e) => write!(f, "{e}"),
            TannakaError::Comod(e) => write!(f, "{e}"),
        }
    }
}
