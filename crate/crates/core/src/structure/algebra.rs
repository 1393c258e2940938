use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FiniteGroup, StructureError};
use crate::Mat;

/// A coalgebra `(H_a, Delta_a, eps_a)` of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub dim: usize,
    /// `dim^2 x dim`.
    pub delta: Mat,
    /// `1 x dim`.
    pub counit: Mat,
}

impl Component {
    pub fn new(dim: usize, delta: Mat, counit: Mat) -> Component {
        Component { dim, delta, counit }
    }

    /// The coalgebra spanned by `dim` group-like basis vectors.
    pub fn grouplike(dim: usize) -> Component {
        let mut delta = Mat::zeros(dim * dim, dim);
        for i in 0..dim {
            delta.set(i * dim + i, i, crate::CycScalar::one());
        }
        let counit = Mat::row(alloc::vec![crate::CycScalar::one(); dim]);
        Component { dim, delta, counit }
    }
}

/// A crossed Hopf G-algebra of finite type in fixed bases.
///
/// Families indexed by pairs use `index = first * |G| + second`:
/// `mult[a*m+b]` is `mu_{a,b}: H_a (x) H_b -> H_{ab}` and
/// `conj[b*m+a]` is `phi_b` restricted to `H_a`, landing in `H_{b a b^-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedHopf {
    pub group: FiniteGroup,
    pub components: Vec<Component>,
    pub mult: Vec<Mat>,
    /// `d_1 x 1`.
    pub unit: Mat,
    pub conj: Vec<Mat>,
    /// `antipode[a]: H_a -> H_{a^-1}`.
    pub antipode: Vec<Mat>,
}

impl CrossedHopf {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn dim(&self, a: usize) -> usize {
        self.components[a].dim
    }

    pub fn delta(&self, a: usize) -> &Mat {
        &self.components[a].delta
    }

    pub fn counit(&self, a: usize) -> &Mat {
        &self.components[a].counit
    }

    pub fn mu(&self, a: usize, b: usize) -> &Mat {
        &self.mult[a * self.order() + b]
    }

    pub fn phi(&self, b: usize, a: usize) -> &Mat {
        &self.conj[b * self.order() + a]
    }

    pub fn s(&self, a: usize) -> &Mat {
        &self.antipode[a]
    }

    pub fn label(&self, a: usize) -> &str {
        self.group.label(a)
    }

    /// Total dimension of all components.
    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim).sum()
    }

    /// Checks every declared shape; failures are input errors.
    pub fn check_shapes(&self) -> Result<(), StructureError> {
        let m = self.order();
        let g = &self.group;
        let expect = |what: String, found: &Mat, want: (usize, usize)| {
            if found.shape() == want {
                Ok(())
            } else {
                Err(StructureError::Shape { what, expected: want, found: found.shape() })
            }
        };
        if self.components.len() != m {
            return Err(StructureError::Count { what: "components", expected: m, found: self.components.len() });
        }
        if self.mult.len() != m * m {
            return Err(StructureError::Count {
                what: "multiplication blocks",
                expected: m * m,
                found: self.mult.len(),
            });
        }
        if self.conj.len() != m * m {
            return Err(StructureError::Count { what: "conjugation blocks", expected: m * m, found: self.conj.len() });
        }
        if self.antipode.len() != m {
            return Err(StructureError::Count { what: "antipode blocks", expected: m, found: self.antipode.len() });
        }
        for a in g.elements() {
            let d = self.dim(a);
            expect(format!("comultiplication of component {}", g.label(a)), self.delta(a), (d * d, d))?;
            expect(format!("counit of component {}", g.label(a)), self.counit(a), (1, d))?;
            expect(format!("antipode of component {}", g.label(a)), self.s(a), (self.dim(g.inv(a)), d))?;
            for b in g.elements() {
                expect(
                    format!("multiplication {} x {}", g.label(a), g.label(b)),
                    self.mu(a, b),
                    (self.dim(g.mul(a, b)), d * self.dim(b)),
                )?;
                expect(
                    format!("conjugation by {} on component {}", g.label(b), g.label(a)),
                    self.phi(b, a),
                    (self.dim(g.conj(b, a)), d),
                )?;
            }
        }
        expect(String::from("unit"), &self.unit, (self.dim(g.identity()), 1))
    }
}
