use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::coend::{coend_coalgebra, CoendPresentation};
use super::diagram::{Arrow, FiniteDiagram};
use super::TannakaError;
use crate::comod::{
    braiding_matrix, dual, extract_cobraiding, hom_space, is_colinear, regular, regular_braidings, tensor,
    twist_matrix, unit_object, verify_comodule, Comodule,
};
use crate::quasi::{solve_gamma_inv, solve_tau_inv, verify_cobraiding, verify_cotwist, Cobraiding, Cotwist};
use crate::report::Report;
use crate::structure::{verify_crossed_hopf, Component, CrossedHopf, FiniteGroup, VerifyOptions};
use crate::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PresentedObject {
    pub grade: usize,
    pub dim: usize,
}

/// `U* = objects[object]` with `eval: X(U*) (x) X(U) -> k` (`1 x n^2`) and
/// `coeval: k -> X(U) (x) X(U*)` (`n^2 x 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    pub object: usize,
    pub eval: Mat,
    pub coeval: Mat,
}

/// `Phi_b(U) = objects[object]` with `iso: X(U) -> X(Phi_b(U))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjWitness {
    pub object: usize,
    pub iso: Mat,
}

/// Graded objects and arrows with a strict tensor table, duals and
/// conjugation witnesses, and optionally braiding and twist maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannakianPresentation {
    pub group: FiniteGroup,
    pub objects: Vec<PresentedObject>,
    /// Arrows join objects of one grade.
    pub arrows: Vec<Arrow>,
    /// `tensor[u * n + v]` is `U (x) V`, with `X(U (x) V) = X(U) (x) X(V)`.
    pub tensor: Vec<usize>,
    pub unit: usize,
    pub duals: Vec<DualWitness>,
    /// `conj[b * n + u]`.
    pub conj: Vec<ConjWitness>,
    /// `braiding[u * n + v]: X(U) (x) X(V) -> X(Phi_|U|(V)) (x) X(U)`.
    pub braiding: Option<Vec<Mat>>,
    /// `twist[u]: X(U) -> X(Phi_|U|(U))`.
    pub twist: Option<Vec<Mat>>,
}

fn violation(condition: &'static str, witness: String) -> TannakaError {
    TannakaError::Presentation { condition, witness }
}

impl TannakianPresentation {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn conj_of(&self, b: usize, u: usize) -> &ConjWitness {
        &self.conj[b * self.objects.len() + u]
    }

    pub fn tensor_of(&self, u: usize, v: usize) -> usize {
        self.tensor[u * self.objects.len() + v]
    }

    /// Checks every presentation invariant, naming the first failing tuple.
    pub fn validate(&self) -> Result<(), TannakaError> {
        let g = &self.group;
        let n = self.objects.len();
        let m = g.order();
        let dim = |u: usize| self.objects[u].dim;
        let grade = |u: usize| self.objects[u].grade;
        if let Some((u, o)) = self.objects.iter().enumerate().find(|(_, o)| o.grade >= m) {
            return Err(violation("gradings are group elements", format!("object {u} has grade index {}", o.grade)));
        }
        for (k, f) in self.arrows.iter().enumerate() {
            if f.source >= n || f.target >= n {
                return Err(violation("arrow endpoints exist", format!("arrow {k}")));
            }
            if grade(f.source) != grade(f.target) {
                return Err(violation("arrows preserve the grading", format!("arrow {k}")));
            }
            let want = (dim(f.target), dim(f.source));
            if f.value.shape() != want {
                return Err(TannakaError::Shape { what: format!("arrow {k}"), expected: want, found: f.value.shape() });
            }
        }
        if self.tensor.len() != n * n {
            return Err(violation(
                "tensor table is complete",
                format!("{} entries for {n} objects", self.tensor.len()),
            ));
        }
        for u in 0..n {
            for v in 0..n {
                let w = self.tensor_of(u, v);
                let at = || format!("({u}, {v}) -> {w}");
                if w >= n {
                    return Err(violation("tensor products exist", at()));
                }
                if grade(w) != g.mul(grade(u), grade(v)) {
                    return Err(violation("gradings multiply under tensor products", at()));
                }
                if dim(w) != dim(u) * dim(v) {
                    return Err(violation("tensor values are tensor products", at()));
                }
            }
        }
        let e = g.identity();
        if self.unit >= n || grade(self.unit) != e || dim(self.unit) != 1 {
            return Err(violation("unit object is one-dimensional of trivial grade", format!("object {}", self.unit)));
        }
        for u in 0..n {
            if self.tensor_of(self.unit, u) != u || self.tensor_of(u, self.unit) != u {
                return Err(violation("unit object is a strict unit", format!("object {u}")));
            }
        }
        if self.duals.len() != n {
            return Err(violation("every object has a dual", format!("{} duals for {n} objects", self.duals.len())));
        }
        for (u, d) in self.duals.iter().enumerate() {
            let at = || format!("object {u}");
            if d.object >= n || grade(d.object) != g.inv(grade(u)) || dim(d.object) != dim(u) {
                return Err(violation("duals have inverse grade and equal dimension", at()));
            }
            let k = dim(u);
            if d.eval.shape() != (1, k * k) || d.coeval.shape() != (k * k, 1) {
                return Err(violation("duality maps have the right shapes", at()));
            }
            let id = Mat::identity(k);
            let zig = &id.kron(&d.eval) * &d.coeval.kron(&id);
            let zag = &d.eval.kron(&id) * &id.kron(&d.coeval);
            if !zig.is_identity() || !zag.is_identity() {
                return Err(violation("evaluation and coevaluation satisfy the zigzag identities", at()));
            }
        }
        let mut seen = alloc::vec![false; n];
        for d in &self.duals {
            if core::mem::replace(&mut seen[d.object], true) {
                return Err(violation(
                    "taking duals is a bijection on objects",
                    format!("object {} is a dual twice", d.object),
                ));
            }
        }
        if self.conj.len() != m * n {
            return Err(violation("conjugation witnesses are complete", format!("{} witnesses", self.conj.len())));
        }
        for b in g.elements() {
            for u in 0..n {
                let w = self.conj_of(b, u);
                let at = || format!("object {u} conjugated by {}", g.label(b));
                if w.object >= n || grade(w.object) != g.conj(b, grade(u)) || dim(w.object) != dim(u) {
                    return Err(violation("conjugation respects gradings", at()));
                }
                if w.iso.shape() != (dim(u), dim(u)) || !w.iso.is_invertible() {
                    return Err(violation("conjugation witnesses are invertible", at()));
                }
                if b == e && (w.object != u || !w.iso.is_identity()) {
                    return Err(violation("conjugation by the identity is trivial", at()));
                }
            }
        }
        for b in g.elements() {
            for u in 0..n {
                for b2 in g.elements() {
                    let inner = self.conj_of(b2, u);
                    let outer = self.conj_of(b, inner.object);
                    let whole = self.conj_of(g.mul(b, b2), u);
                    if outer.object != whole.object || &outer.iso * &inner.iso != whole.iso {
                        return Err(violation(
                            "conjugation witnesses compose",
                            format!("object {u} under {} then {}", g.label(b2), g.label(b)),
                        ));
                    }
                }
            }
        }
        if let Some(c) = &self.braiding {
            if c.len() != n * n {
                return Err(violation("braiding maps are complete", format!("{} maps", c.len())));
            }
            for (k, cm) in c.iter().enumerate() {
                let s = dim(k / n) * dim(k % n);
                if cm.shape() != (s, s) {
                    return Err(TannakaError::Shape {
                        what: format!("braiding ({}, {})", k / n, k % n),
                        expected: (s, s),
                        found: cm.shape(),
                    });
                }
            }
        }
        if let Some(t) = &self.twist {
            if t.len() != n {
                return Err(violation("twist maps are complete", format!("{} maps", t.len())));
            }
            for (u, tm) in t.iter().enumerate() {
                if tm.shape() != (dim(u), dim(u)) {
                    return Err(TannakaError::Shape {
                        what: format!("twist {u}"),
                        expected: (dim(u), dim(u)),
                        found: tm.shape(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Objects of grade `a` (as a diagram) and their global indices.
    pub fn graded_diagram(&self, a: usize) -> (FiniteDiagram, Vec<usize>) {
        let global: Vec<usize> = (0..self.objects.len()).filter(|&u| self.objects[u].grade == a).collect();
        let local = |u: usize| global.iter().position(|&x| x == u).expect("grade-preserving arrow");
        let dims = global.iter().map(|&u| self.objects[u].dim).collect();
        let arrows = self
            .arrows
            .iter()
            .filter(|f| self.objects[f.source].grade == a)
            .map(|f| Arrow { source: local(f.source), target: local(f.target), value: f.value.clone() })
            .collect();
        (FiniteDiagram { dims, arrows }, global)
    }
}

/// The reconstructed structure, the coends it was built from, and the
/// asserted postconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub hopf: CrossedHopf,
    pub cobraiding: Option<Cobraiding>,
    pub cotwist: Option<Cotwist>,
    pub coends: Vec<CoendPresentation>,
    /// Index of each object inside the coend of its grade.
    pub local: Vec<usize>,
    pub report: Report,
}

impl Reconstruction {
    /// `u_j -> sum_i [E_ij] (x) u_i`.
    pub fn canonical_comodule(&self, tp: &TannakianPresentation, u: usize) -> Comodule {
        let a = tp.objects[u].grade;
        let p = &self.coends[a];
        let n = tp.objects[u].dim;
        let mut coaction = Mat::zeros(p.dim() * n, n);
        for i in 0..n {
            for j in 0..n {
                let col = p.unit_class(self.local[u], i, j);
                for q in 0..p.dim() {
                    coaction.set(q * n + i, j, col.get(q, 0).clone());
                }
            }
        }
        Comodule { grade: a, coaction }
    }
}

/// Matrix of the map between quotients induced by `image` on ambient units,
/// after checking that it kills the relations.
fn induce_unary(
    src: &CoendPresentation,
    rows: usize,
    name: &'static str,
    image: impl Fn(usize, usize, usize) -> Mat,
) -> Result<Mat, TannakaError> {
    let cols: Vec<Mat> = (0..src.ambient())
        .map(|t| {
            let (c, i, j) = src.symbol(t);
            image(c, i, j)
        })
        .collect();
    let amb = if cols.is_empty() { Mat::zeros(rows, 0) } else { Mat::hstack(&cols)? };
    let q = &amb * &src.quotient.section();
    if let Some((_, t)) = (&q * src.quotient.projection()).first_difference(&amb) {
        return Err(TannakaError::NotWellDefined { map: name, witness: format!("symbol {:?}", src.symbol(t)) });
    }
    Ok(q)
}

/// As [`induce_unary`] for a bilinear map; columns are indexed `s * dim(right) + t`.
fn induce_binary(
    left: &CoendPresentation,
    right: &CoendPresentation,
    rows: usize,
    name: &'static str,
    image: impl Fn((usize, usize, usize), (usize, usize, usize)) -> Mat,
) -> Result<Mat, TannakaError> {
    let mut cols = Vec::with_capacity(left.ambient() * right.ambient());
    for s in 0..left.ambient() {
        for t in 0..right.ambient() {
            cols.push(image(left.symbol(s), right.symbol(t)));
        }
    }
    let amb = if cols.is_empty() { Mat::zeros(rows, 0) } else { Mat::hstack(&cols)? };
    let q = &amb * &left.quotient.section().kron(&right.quotient.section());
    let back = &q * &left.quotient.projection().kron(right.quotient.projection());
    if let Some((_, k)) = back.first_difference(&amb) {
        let (s, t) = (k / right.ambient(), k % right.ambient());
        return Err(TannakaError::NotWellDefined {
            map: name,
            witness: format!("symbols {:?} and {:?}", left.symbol(s), right.symbol(t)),
        });
    }
    Ok(q)
}

/// Rebuilds `H_a` as the coend of the grade-`a` objects with product
/// `[h][k] = [h (x) k]`, unit `[1]`, antipode `[h]_{U*} -> [E^T h^T E^-T]_U`
/// (`E` the evaluation matrix) and conjugation `[h] -> [phi h phi^-1]`.
pub fn reconstruct(tp: &TannakianPresentation) -> Result<Reconstruction, TannakaError> {
    tp.validate()?;
    let g = &tp.group;
    let n = tp.object_count();
    let mut coends = Vec::with_capacity(g.order());
    let mut local = alloc::vec![0; n];
    for a in g.elements() {
        let (diagram, global) = tp.graded_diagram(a);
        for (l, &u) in global.iter().enumerate() {
            local[u] = l;
        }
        coends.push(coend_coalgebra(&diagram)?);
    }
    let objects_of: Vec<Vec<usize>> =
        g.elements().map(|a| (0..n).filter(|&u| tp.objects[u].grade == a).collect()).collect();
    let global = |a: usize, c: usize| objects_of[a][c];
    let dim = |u: usize| tp.objects[u].dim;

    let components: Vec<Component> =
        coends.iter().map(|p| Component::new(p.dim(), p.delta.clone(), p.counit.clone())).collect();

    let mut mult = Vec::with_capacity(g.order() * g.order());
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            let target = &coends[ab];
            let mu = induce_binary(&coends[a], &coends[b], target.dim(), "multiplication", |(c, i, j), (d, k, l)| {
                let (u, v) = (global(a, c), global(b, d));
                let w = tp.tensor_of(u, v);
                let nv = dim(v);
                target.unit_class(local[w], i * nv + k, j * nv + l)
            })?;
            mult.push(mu);
        }
    }
    let e = g.identity();
    let unit = coends[e].unit_class(local[tp.unit], 0, 0);

    let mut predual = alloc::vec![0; n];
    for (u, d) in tp.duals.iter().enumerate() {
        predual[d.object] = u;
    }
    let mut antipode = Vec::with_capacity(g.order());
    for a in g.elements() {
        let ai = g.inv(a);
        let target = &coends[ai];
        let s = induce_unary(&coends[a], target.dim(), "antipode", |c, i, j| {
            let w = global(a, c);
            let v = predual[w];
            let k = dim(v);
            let ev = Mat::unvectorize(&tp.duals[v].eval.transpose(), k, k);
            let ev_inv = ev.inverse().expect("zigzag identities force a nondegenerate evaluation");
            let h = Mat::unit(k, k, i, j);
            target.class_of(local[v], &(&(&ev.transpose() * &h.transpose()) * &ev_inv.transpose()))
        })?;
        antipode.push(s);
    }

    let mut conj = Vec::with_capacity(g.order() * g.order());
    for b in g.elements() {
        for a in g.elements() {
            let target = &coends[g.conj(b, a)];
            let phi = induce_unary(&coends[a], target.dim(), "conjugation", |c, i, j| {
                let u = global(a, c);
                let w = tp.conj_of(b, u);
                let k = dim(u);
                let inv = w.iso.inverse().expect("validated invertible");
                target.class_of(local[w.object], &(&(&w.iso * &Mat::unit(k, k, i, j)) * &inv))
            })?;
            conj.push(phi);
        }
    }

    let hopf = CrossedHopf { group: g.clone(), components, mult, unit, conj, antipode };
    let mut report =
        verify_crossed_hopf(&hopf, &VerifyOptions::default()).map_err(|e| TannakaError::Internal(format!("{e}")))?;
    let mut rec = Reconstruction { hopf, cobraiding: None, cotwist: None, coends, local, report: Report::new() };

    let canon: Vec<Comodule> = (0..n).map(|u| rec.canonical_comodule(tp, u)).collect();
    for (u, cm) in canon.iter().enumerate() {
        let ok = verify_comodule(&rec.hopf, cm).all_pass();
        report.record("reconstruct.canonical_comodule", ok, || format!("object {u}"));
    }
    for (k, f) in tp.arrows.iter().enumerate() {
        let ok = is_colinear(&rec.hopf, &canon[f.source], &canon[f.target], &f.value);
        report.record("reconstruct.arrows_colinear", ok, || format!("arrow {k}"));
    }

    if let Some(braid) = &tp.braiding {
        let h = &rec.hopf;
        let mut gamma = Vec::with_capacity(g.order() * g.order());
        // gamma_{b,a}([E_kl]_V (x) [E_ij]_U) = ((phi_{a,V}^-1 (x) I) c_{U,V})[(k,i), (j,l)]
        for b in g.elements() {
            for a in g.elements() {
                let row = induce_binary(&rec.coends[b], &rec.coends[a], 1, "cobraiding", |(d, k, l), (c, i, j)| {
                    let (v, u) = (global(b, d), global(a, c));
                    let (nu, nv) = (dim(u), dim(v));
                    let back = tp.conj_of(a, v).iso.inverse().expect("validated invertible");
                    let cm = &back.kron(&Mat::identity(nu)) * &braid[u * n + v];
                    Mat::scalar(cm.get(k * nu + i, j * nv + l).clone())
                })?;
                gamma.push(row);
            }
        }
        match solve_gamma_inv(h, &gamma) {
            Ok(gamma_inv) => {
                let c = Cobraiding { gamma, gamma_inv };
                let rep = verify_cobraiding(h, &c).map_err(|e| TannakaError::Internal(format!("{e}")))?;
                report.merge("", rep);
                for u in 0..n {
                    for v in 0..n {
                        let a = tp.objects[u].grade;
                        let phi = &tp.conj_of(a, v).iso;
                        let ours = &phi.kron(&Mat::identity(dim(u))) * &braiding_matrix(h, &c, &canon[u], &canon[v]);
                        report.compare("reconstruct.braiding_transported", &ours, &braid[u * n + v], || {
                            format!("objects ({u}, {v})")
                        });
                    }
                }
                match extract_cobraiding(h, &regular_braidings(h, &c)) {
                    Ok(back) => {
                        report.record("reconstruct.extraction_roundtrip", back == c, || "regular comodules".into())
                    }
                    Err(e) => report.fail("reconstruct.extraction_roundtrip", format!("{e}")),
                }
                rec.cobraiding = Some(c);
            }
            Err(err) => report.fail("cobraiding.convolution_inverse_left", format!("{err}")),
        }
    }
    if let Some(tw) = &tp.twist {
        let h = &rec.hopf;
        let mut tau = Vec::with_capacity(g.order());
        for a in g.elements() {
            let row = induce_unary(&rec.coends[a], 1, "cotwist", |c, i, j| {
                let u = global(a, c);
                let back = tp.conj_of(a, u).iso.inverse().expect("validated invertible");
                Mat::scalar((&back * &tw[u]).get(i, j).clone())
            })?;
            tau.push(row);
        }
        match solve_tau_inv(h, &tau) {
            Ok(tau_inv) => {
                let t = Cotwist { tau, tau_inv };
                match &rec.cobraiding {
                    Some(c) => {
                        let rep = verify_cotwist(h, c, &t).map_err(|e| TannakaError::Internal(format!("{e}")))?;
                        report.merge("", rep);
                    }
                    None => report.skip("cotwist.product", "no braiding in the presentation"),
                }
                for u in 0..n {
                    let phi = &tp.conj_of(tp.objects[u].grade, u).iso;
                    report.compare(
                        "reconstruct.twist_transported",
                        &(phi * &twist_matrix(&t, &canon[u])),
                        &tw[u],
                        || format!("object {u}"),
                    );
                }
                rec.cotwist = Some(t);
            }
            Err(err) => report.fail("cotwist.convolution_inverse_left", format!("{err}")),
        }
    }
    rec.report = report;
    Ok(rec)
}

/// The presentation whose objects are the regular comodules `H_a`, one per
/// grade, with all colinear endomorphisms as arrows and conjugation witnessed
/// by the conjugation maps. Requires the regular comodules to be closed under
/// tensor products and duals on the nose, as for one-dimensional components.
pub fn regular_presentation(
    h: &CrossedHopf,
    cobraiding: Option<&Cobraiding>,
    cotwist: Option<&Cotwist>,
) -> Result<TannakianPresentation, TannakaError> {
    let g = &h.group;
    let regs: Vec<Comodule> = g.elements().map(|a| regular(h, a)).collect();
    let objects = regs.iter().map(|r| PresentedObject { grade: r.grade, dim: r.dim() }).collect();
    let mut arrows = Vec::new();
    for (a, r) in regs.iter().enumerate() {
        for f in hom_space(h, r, r) {
            arrows.push(Arrow { source: a, target: a, value: f });
        }
    }
    let mut tensor_table = Vec::with_capacity(regs.len() * regs.len());
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            if tensor(h, &regs[a], &regs[b]) != regs[ab] {
                return Err(violation(
                    "regular comodules are closed under tensor products",
                    format!("({}, {})", g.label(a), g.label(b)),
                ));
            }
            tensor_table.push(ab);
        }
    }
    let e = g.identity();
    if unit_object(h) != regs[e] {
        return Err(violation("the unit object is the regular comodule of the identity component", String::new()));
    }
    let mut duals = Vec::with_capacity(regs.len());
    for a in g.elements() {
        let d = dual(h, &regs[a])?;
        let ai = g.inv(a);
        if d.dual != regs[ai] {
            return Err(violation("regular comodules are closed under duals", g.label(a).into()));
        }
        duals.push(DualWitness { object: ai, eval: d.eval, coeval: d.coeval });
    }
    let mut conj = Vec::with_capacity(regs.len() * regs.len());
    for b in g.elements() {
        for a in g.elements() {
            conj.push(ConjWitness { object: g.conj(b, a), iso: h.phi(b, a).clone() });
        }
    }
    let braiding = cobraiding.map(|c| {
        let mut out = Vec::with_capacity(regs.len() * regs.len());
        for a in g.elements() {
            for b in g.elements() {
                let raw = braiding_matrix(h, c, &regs[a], &regs[b]);
                out.push(&h.phi(a, b).kron(&Mat::identity(regs[a].dim())) * &raw);
            }
        }
        out
    });
    let twist = cotwist.map(|t| g.elements().map(|a| h.phi(a, a) * &twist_matrix(t, &regs[a])).collect());
    Ok(TannakianPresentation {
        group: g.clone(),
        objects,
        arrows,
        tensor: tensor_table,
        unit: e,
        duals,
        conj,
        braiding,
        twist,
    })
}

/// For one-dimensional components: the map sending the group-like element
/// of each source component to that of the target component.
pub fn grouplike_matching(src: &CrossedHopf, tgt: &CrossedHopf) -> Result<Vec<Mat>, TannakaError> {
    if src.group != tgt.group {
        return Err(violation("structures share a group", String::new()));
    }
    let mut psi = Vec::with_capacity(src.order());
    for a in src.group.elements() {
        if src.dim(a) != 1 || tgt.dim(a) != 1 {
            return Err(violation("components are one-dimensional", format!("grade {}", src.label(a))));
        }
        let (es, et) = (src.counit(a).get(0, 0), tgt.counit(a).get(0, 0));
        if es.is_zero() || et.is_zero() {
            return Err(violation("counits are nonzero", format!("grade {}", src.label(a))));
        }
        // psi(b_src / es) = b_tgt / et
        psi.push(Mat::scalar(es * &et.inv().expect("nonzero")));
    }
    Ok(psi)
}

/// Checks that `psi[a]: src_a -> tgt_a` is an isomorphism of crossed
/// structures: invertible and compatible with every structure map.
pub fn verify_isomorphism(src: &CrossedHopf, tgt: &CrossedHopf, psi: &[Mat]) -> Report {
    let mut r = Report::new();
    if src.group != tgt.group || psi.len() != src.order() {
        r.fail("iso.group", "structures over different groups");
        return r;
    }
    let g = &src.group;
    for a in g.elements() {
        let p = &psi[a];
        let at = || format!("grade {}", g.label(a));
        r.record("iso.invertible", p.is_invertible(), at);
        r.compare("iso.comultiplicative", &(tgt.delta(a) * p), &(&p.kron(p) * src.delta(a)), at);
        r.compare("iso.counital", &(tgt.counit(a) * p), src.counit(a), at);
        let ai = g.inv(a);
        r.compare("iso.antipode", &(&psi[ai] * src.s(a)), &(tgt.s(a) * p), at);
        for b in g.elements() {
            let at = || format!("grades ({}, {})", g.label(a), g.label(b));
            let ab = g.mul(a, b);
            r.compare("iso.multiplicative", &(&psi[ab] * src.mu(a, b)), &(tgt.mu(a, b) * &p.kron(&psi[b])), at);
            let ba = g.conj(b, a);
            r.compare("iso.conjugation", &(&psi[ba] * src.phi(b, a)), &(tgt.phi(b, a) * p), at);
        }
    }
    let e = g.identity();
    r.compare("iso.unit", &(&psi[e] * &src.unit), &tgt.unit, || "unit".into());
    r
}
