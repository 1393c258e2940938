use alloc::vec::Vec;

use super::CrossedHopf;
use crate::{CycScalar, Mat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub component: usize,
    /// Determinant of the trace form of the dual algebra's regular representation.
    pub gram_det: CycScalar,
    pub cosemisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosemisimpleVerdict {
    pub components: Vec<ComponentVerdict>,
    pub overall: bool,
    /// Verdict from component 1 alone.
    pub unit_component: bool,
    pub criteria_agree: bool,
}

/// Gram matrix `G_ij = Tr(L_i L_j)` of the dual algebra `(H_a^*, Delta_a^T)`.
pub fn dual_trace_form(h: &CrossedHopf, a: usize) -> Mat {
    let d = h.dim(a);
    let delta = h.delta(a);
    // L_i[p][q] = coefficient of e^p in e^i * e^q = Delta[(i*d+q), p]
    let left: Vec<Mat> = (0..d)
        .map(|i| {
            let mut l = Mat::zeros(d, d);
            for p in 0..d {
                for q in 0..d {
                    l.set(p, q, delta.get(i * d + q, p).clone());
                }
            }
            l
        })
        .collect();
    let mut gram = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            gram.set(i, j, (&left[i] * &left[j]).trace());
        }
    }
    gram
}

/// Semisimplicity of each dual component via nondegeneracy of its trace form
/// (characteristic zero).
pub fn is_cosemisimple(h: &CrossedHopf) -> CosemisimpleVerdict {
    let components: Vec<ComponentVerdict> = h
        .group
        .elements()
        .map(|a| {
            let gram_det = dual_trace_form(h, a).det().expect("square");
            let cosemisimple = !gram_det.is_zero();
            ComponentVerdict { component: a, gram_det, cosemisimple }
        })
        .collect();
    let overall = components.iter().all(|c| c.cosemisimple);
    let unit_component = components[h.group.identity()].cosemisimple;
    CosemisimpleVerdict { components, overall, unit_component, criteria_agree: overall == unit_component }
}
