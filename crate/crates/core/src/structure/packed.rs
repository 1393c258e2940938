use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{verify_crossed_hopf, Component, CrossedHopf, FiniteGroup, StructureError, VerifyOptions};
use crate::report::Report;
use crate::Mat;

/// One Hopf algebra `H_pk = (+)_a H_a` with its grading and G-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedHopfAlgebra {
    pub group: FiniteGroup,
    /// Group element labelling the block of each basis vector.
    pub blocks: Vec<usize>,
    /// `D x D^2`.
    pub mult: Mat,
    /// `D x 1`.
    pub unit: Mat,
    /// `D^2 x D`.
    pub delta: Mat,
    /// `1 x D`.
    pub counit: Mat,
    pub antipode: Mat,
    /// `phi[b]`, the automorphism `phi_pk,b`.
    pub phi: Vec<Mat>,
}

impl PackedHopfAlgebra {
    pub fn dim(&self) -> usize {
        self.blocks.len()
    }

    /// Basis indices of block `a`, ascending.
    pub fn block(&self, a: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.blocks[i] == a).collect()
    }

    fn check_shapes(&self) -> Result<(), StructureError> {
        let n = self.dim();
        let m = self.group.order();
        let pairs: [(&str, &Mat, (usize, usize)); 5] = [
            ("packed multiplication", &self.mult, (n, n * n)),
            ("packed unit", &self.unit, (n, 1)),
            ("packed comultiplication", &self.delta, (n * n, n)),
            ("packed counit", &self.counit, (1, n)),
            ("packed antipode", &self.antipode, (n, n)),
        ];
        for (what, found, want) in pairs {
            if found.shape() != want {
                return Err(StructureError::Shape { what: what.into(), expected: want, found: found.shape() });
            }
        }
        if self.phi.len() != m {
            return Err(StructureError::Count { what: "packed automorphisms", expected: m, found: self.phi.len() });
        }
        if let Some(p) = self.phi.iter().find(|p| p.shape() != (n, n)) {
            return Err(StructureError::Shape {
                what: "packed automorphism".into(),
                expected: (n, n),
                found: p.shape(),
            });
        }
        if let Some(&b) = self.blocks.iter().find(|&&b| b >= m) {
            return Err(StructureError::Group(format!("block label {b} out of range")));
        }
        Ok(())
    }
}

fn offsets(h: &CrossedHopf) -> Vec<usize> {
    let mut off = Vec::with_capacity(h.order() + 1);
    let mut acc = 0;
    for c in &h.components {
        off.push(acc);
        acc += c.dim;
    }
    off.push(acc);
    off
}

/// Assembles the packed form; blocks are contiguous in group order.
pub fn pack(h: &CrossedHopf) -> Result<PackedHopfAlgebra, StructureError> {
    let rep = verify_crossed_hopf(h, &VerifyOptions::default())?;
    if let Some(c) = rep.failures().first() {
        return Err(StructureError::AxiomFailure {
            check: c.name.clone(),
            witness: c.witness.clone().unwrap_or_default(),
        });
    }
    Ok(pack_unchecked(h))
}

/// Assembles the packed form without verifying the input.
pub fn pack_unchecked(h: &CrossedHopf) -> PackedHopfAlgebra {
    let g = &h.group;
    let off = offsets(h);
    let n = off[h.order()];
    let blocks: Vec<usize> = g.elements().flat_map(|a| core::iter::repeat_n(a, h.dim(a))).collect();
    let mut mult = Mat::zeros(n, n * n);
    let mut delta = Mat::zeros(n * n, n);
    let mut counit = Mat::zeros(1, n);
    let mut antipode = Mat::zeros(n, n);
    let mut unit = Mat::zeros(n, 1);
    let mut phi: Vec<Mat> = (0..h.order()).map(|_| Mat::zeros(n, n)).collect();
    for a in g.elements() {
        let da = h.dim(a);
        for i in 0..da {
            counit.set(0, off[a] + i, h.counit(a).get(0, i).clone());
            for p in 0..da {
                for q in 0..da {
                    let v = h.delta(a).get(p * da + q, i);
                    if !v.is_zero() {
                        delta.set((off[a] + p) * n + off[a] + q, off[a] + i, v.clone());
                    }
                }
            }
            let ai = g.inv(a);
            for p in 0..h.dim(ai) {
                antipode.set(off[ai] + p, off[a] + i, h.s(a).get(p, i).clone());
            }
            for b in g.elements() {
                let c = g.conj(b, a);
                for p in 0..h.dim(c) {
                    phi[b].set(off[c] + p, off[a] + i, h.phi(b, a).get(p, i).clone());
                }
                let ab = g.mul(a, b);
                let db = h.dim(b);
                for j in 0..db {
                    for p in 0..h.dim(ab) {
                        let v = h.mu(a, b).get(p, i * db + j);
                        if !v.is_zero() {
                            mult.set(off[ab] + p, (off[a] + i) * n + off[b] + j, v.clone());
                        }
                    }
                }
            }
        }
    }
    let one = g.identity();
    for p in 0..h.dim(one) {
        unit.set(off[one] + p, 0, h.unit.get(p, 0).clone());
    }
    PackedHopfAlgebra { group: g.clone(), blocks, mult, unit, delta, counit, antipode, phi }
}

/// Grading violations found while unpacking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub condition: &'static str,
    pub detail: String,
}

/// Checks the ordinary Hopf axioms of `H_pk`, that each `phi_pk,b` is a Hopf
/// automorphism forming a group action, and the five grading conditions.
pub fn verify_packed(p: &PackedHopfAlgebra) -> Result<Report, StructureError> {
    p.check_shapes()?;
    let n = p.dim();
    let eye = Mat::identity(n);
    let mut r = Report::new();
    let at = || String::from("packed algebra");
    let (mu, eta, delta, eps, s) = (&p.mult, &p.unit, &p.delta, &p.counit, &p.antipode);
    r.compare("hopf.associativity", &(mu * &mu.kron(&eye)), &(mu * &eye.kron(mu)), at);
    r.compare("hopf.unit_left", &(mu * &eta.kron(&eye)), &eye, at);
    r.compare("hopf.unit_right", &(mu * &eye.kron(eta)), &eye, at);
    r.compare("hopf.coassociativity", &(&delta.kron(&eye) * delta), &(&eye.kron(delta) * delta), at);
    r.compare("hopf.counit_left", &(&eps.kron(&eye) * delta), &eye, at);
    r.compare("hopf.counit_right", &(&eye.kron(eps) * delta), &eye, at);
    let bialg = &(&mu.kron(mu) * &super::verify::middle_swap(n, n)) * &delta.kron(delta);
    r.compare("hopf.comultiplicative", &(delta * mu), &bialg, at);
    r.compare("hopf.counital", &(eps * mu), &eps.kron(eps), at);
    r.compare("hopf.unit_comultiplicative", &(delta * eta), &eta.kron(eta), at);
    r.compare("hopf.unit_counit", &(eps * eta), &Mat::identity(1), at);
    let target = eta * eps;
    r.compare("hopf.antipode_left", &(&(mu * &s.kron(&eye)) * delta), &target, at);
    r.compare("hopf.antipode_right", &(&(mu * &eye.kron(s)) * delta), &target, at);
    let g = &p.group;
    for b in g.elements() {
        let f = &p.phi[b];
        let atb = || format!("automorphism {}", g.label(b));
        r.record("action.invertible", f.is_invertible(), atb);
        r.compare("action.multiplicative", &(f * mu), &(mu * &f.kron(f)), atb);
        r.compare("action.unit", &(f * eta), eta, atb);
        r.compare("action.comultiplicative", &(delta * f), &(&f.kron(f) * delta), atb);
        r.compare("action.counital", &(eps * f), eps, atb);
        for c in g.elements() {
            r.compare("action.homomorphism", &p.phi[g.mul(b, c)], &(f * &p.phi[c]), || {
                format!("automorphisms ({}, {})", g.label(b), g.label(c))
            });
        }
    }
    for v in grading_violations(p) {
        r.fail(&format!("grading.{}", v.condition), v.detail);
    }
    for cond in ["subcoalgebras", "product", "unit", "conjugation", "antipode"] {
        r.pass(&format!("grading.{cond}"));
    }
    Ok(r)
}

/// Every violated grading condition, with the offending blocks.
pub fn grading_violations(p: &PackedHopfAlgebra) -> Vec<GradingViolation> {
    let n = p.dim();
    let g = &p.group;
    let bl = &p.blocks;
    let mut out = Vec::new();
    let mut push = |condition: &'static str, detail: String| {
        if !out.iter().any(|v: &GradingViolation| v.condition == condition && v.detail == detail) {
            out.push(GradingViolation { condition, detail });
        }
    };
    for i in 0..n {
        for x in 0..n {
            for y in 0..n {
                if !p.delta.get(x * n + y, i).is_zero() && (bl[x] != bl[i] || bl[y] != bl[i]) {
                    push("subcoalgebras", format!("block {} not a subcoalgebra", g.label(bl[i])));
                }
            }
        }
        for j in 0..n {
            let target = g.mul(bl[i], bl[j]);
            for x in 0..n {
                if !p.mult.get(x, i * n + j).is_zero() && bl[x] != target {
                    push(
                        "product",
                        format!("blocks ({}, {}) reach block {}", g.label(bl[i]), g.label(bl[j]), g.label(bl[x])),
                    );
                }
            }
        }
        if !p.unit.get(i, 0).is_zero() && bl[i] != g.identity() {
            push("unit", format!("unit has a component in block {}", g.label(bl[i])));
        }
        for x in 0..n {
            if !p.antipode.get(x, i).is_zero() && bl[x] != g.inv(bl[i]) {
                push("antipode", format!("block {} sent into block {}", g.label(bl[i]), g.label(bl[x])));
            }
            for b in g.elements() {
                if !p.phi[b].get(x, i).is_zero() && bl[x] != g.conj(b, bl[i]) {
                    push(
                        "conjugation",
                        format!(
                            "automorphism {} sends block {} into block {}",
                            g.label(b),
                            g.label(bl[i]),
                            g.label(bl[x])
                        ),
                    );
                }
            }
        }
    }
    out
}

/// Splits a packed algebra back into components.
pub fn unpack(p: &PackedHopfAlgebra) -> Result<CrossedHopf, StructureError> {
    p.check_shapes()?;
    let violations = grading_violations(p);
    if !violations.is_empty() {
        return Err(StructureError::Grading(violations));
    }
    let g = &p.group;
    let n = p.dim();
    let idx: Vec<Vec<usize>> = g.elements().map(|a| p.block(a)).collect();
    let components = g
        .elements()
        .map(|a| {
            let ix = &idx[a];
            let pairs: Vec<usize> = ix.iter().flat_map(|&x| ix.iter().map(move |&y| x * n + y)).collect();
            Component::new(ix.len(), p.delta.select(&pairs, ix), p.counit.select(&[0], ix))
        })
        .collect();
    let mut mult = Vec::new();
    let mut conj = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let pairs: Vec<usize> = idx[a].iter().flat_map(|&x| idx[b].iter().map(move |&y| x * n + y)).collect();
            mult.push(p.mult.select(&idx[g.mul(a, b)], &pairs));
        }
    }
    for b in g.elements() {
        for a in g.elements() {
            conj.push(p.phi[b].select(&idx[g.conj(b, a)], &idx[a]));
        }
    }
    let antipode = g.elements().map(|a| p.antipode.select(&idx[g.inv(a)], &idx[a])).collect();
    let unit = p.unit.select(&idx[g.identity()], &[0]);
    let h = CrossedHopf { group: g.clone(), components, mult, unit, conj, antipode };
    h.check_shapes()?;
    Ok(h)
}
