use alloc::vec::Vec;

use super::{verify_crossed_hopf, Component, CrossedHopf, FiniteGroup, StructureError, VerifyOptions};
use crate::report::Report;
use crate::Mat;

/// Per-component algebra `(H_a^*, Delta_a^T, eps_a^T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualComponent {
    pub dim: usize,
    /// `dim x dim^2`.
    pub mult: Mat,
    /// `dim x 1`.
    pub unit: Mat,
}

/// The crossed Hopf G-coalgebra of linear duals.
///
/// `comult[a*m+b] = mu_{a,b}^T: H_{ab}^* -> H_a^* (x) H_b^*`;
/// `conj[b*m+a]: H_a^* -> H_{b a b^-1}^*` is `(phi_{b^-1} on H_{b a b^-1})^T`;
/// `antipode[a]: H_a^* -> H_{a^-1}^*` is `S_{a^-1}^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGCoalgebra {
    pub group: FiniteGroup,
    pub components: Vec<DualComponent>,
    pub comult: Vec<Mat>,
    /// `1 x d_1`.
    pub counit: Mat,
    pub conj: Vec<Mat>,
    pub antipode: Vec<Mat>,
}

/// Transposes every structure tensor with the component relabeling above.
pub fn dualize(h: &CrossedHopf) -> Result<DualGCoalgebra, StructureError> {
    h.check_shapes()?;
    let g = &h.group;
    let components = h
        .components
        .iter()
        .map(|c| DualComponent { dim: c.dim, mult: c.delta.transpose(), unit: c.counit.transpose() })
        .collect();
    let comult = h.mult.iter().map(Mat::transpose).collect();
    let mut conj = Vec::with_capacity(h.conj.len());
    for b in g.elements() {
        for a in g.elements() {
            conj.push(h.phi(g.inv(b), g.conj(b, a)).transpose());
        }
    }
    let antipode = g.elements().map(|a| h.s(g.inv(a)).transpose()).collect();
    Ok(DualGCoalgebra { group: g.clone(), components, comult, counit: h.unit.transpose(), conj, antipode })
}

impl DualGCoalgebra {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn comult(&self, a: usize, b: usize) -> &Mat {
        &self.comult[a * self.order() + b]
    }

    pub fn conj(&self, b: usize, a: usize) -> &Mat {
        &self.conj[b * self.order() + a]
    }

    /// The crossed Hopf G-algebra of duals; inverse of [`dualize`].
    pub fn dualize(&self) -> CrossedHopf {
        let g = &self.group;
        let components =
            self.components.iter().map(|c| Component::new(c.dim, c.mult.transpose(), c.unit.transpose())).collect();
        let mult = self.comult.iter().map(Mat::transpose).collect();
        let mut conj = Vec::with_capacity(self.conj.len());
        for b in g.elements() {
            for a in g.elements() {
                conj.push(self.conj(g.inv(b), g.conj(b, a)).transpose());
            }
        }
        let antipode = g.elements().map(|a| self.antipode[g.inv(a)].transpose()).collect();
        CrossedHopf { group: g.clone(), components, mult, unit: self.counit.transpose(), conj, antipode }
    }
}

/// Verifies the dual axioms; each is the transpose of a primal axiom, so the
/// check runs on the transposed-back data.
pub fn verify_dual(d: &DualGCoalgebra, opts: &VerifyOptions) -> Result<Report, StructureError> {
    verify_crossed_hopf(&d.dualize(), opts)
}
