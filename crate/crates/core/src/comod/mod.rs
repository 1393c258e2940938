//! The crossed category of comodules: tensor products, conjugation functors,
//! duals, and the braiding and twist induced by a cobraiding and cotwist.

mod axioms;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use axioms::{
    verify_braiding_axioms, verify_tortility, verify_twist_axioms, BraidingFamily, Family, TabulatedBraiding,
    TabulatedTwist, TwistFamily,
};

use crate::exactla::permute_factors;
use crate::quasi::{solve_gamma_inv, solve_tau_inv, Cobraiding, Cotwist, QuasiError};
use crate::report::Report;
use crate::structure::CrossedHopf;
use crate::{ExactError, Mat};

/// A left `H_grade`-comodule; `coaction` is `d_grade * dim x dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub grade: usize,
    pub coaction: Mat,
}

/// A colinear map between comodules of the same grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleMorphism {
    pub source: Comodule,
    pub target: Comodule,
    pub map: Mat,
}

/// A left dual `M*` with evaluation `M* (x) M -> 1` and coevaluation `1 -> M (x) M*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duality {
    pub dual: Comodule,
    /// `1 x dim^2`.
    pub eval: Mat,
    /// `dim^2 x 1`.
    pub coeval: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComodError {
    Shape { what: String, expected: (usize, usize), found: (usize, usize) },
    GradeMismatch { source: usize, target: usize },
    NotColinear(String),
    NotInvertible(String),
    Quasi(QuasiError),
    Exact(ExactError),
}

impl From<QuasiError> for ComodError {
    fn from(e: QuasiError) -> Self {
        ComodError::Quasi(e)
    }
}

impl From<ExactError> for ComodError {
    fn from(e: ExactError) -> Self {
        ComodError::Exact(e)
    }
}

impl fmt::Display for ComodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComodError::Shape { what, expected, found } => {
                write!(f, "{what} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)
            }
            ComodError::GradeMismatch { source, target } => {
                write!(f, "morphism between grades {source} and {target}")
            }
            ComodError::NotColinear(s) => write!(f, "map is not colinear: {s}"),
            ComodError::NotInvertible(s) => write!(f, "map is not invertible: {s}"),
            ComodError::Quasi(e) => write!(f, "{e}"),
            ComodError::Exact(e) => write!(f, "{e}"),
        }
    }
}

impl Comodule {
    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }

    /// Shape-checked constructor.
    pub fn new(h: &CrossedHopf, grade: usize, coaction: Mat) -> Result<Comodule, ComodError> {
        let m = coaction.cols();
        let want = (h.dim(grade) * m, m);
        if coaction.shape() != want {
            return Err(ComodError::Shape {
                what: format!("coaction at grade {}", h.label(grade)),
                expected: want,
                found: coaction.shape(),
            });
        }
        Ok(Comodule { grade, coaction })
    }
}

/// Coassociativity and counitality of the coaction.
pub fn verify_comodule(h: &CrossedHopf, m: &Comodule) -> Report {
    let mut r = Report::new();
    let d = h.dim(m.grade);
    let n = m.dim();
    let rho = &m.coaction;
    let at = || format!("comodule at grade {}", h.label(m.grade));
    r.compare(
        "comodule.coassociative",
        &(&h.delta(m.grade).kron(&Mat::identity(n)) * rho),
        &(&Mat::identity(d).kron(rho) * rho),
        at,
    );
    r.compare("comodule.counital", &(&h.counit(m.grade).kron(&Mat::identity(n)) * rho), &Mat::identity(n), at);
    r
}

/// `rho_target f = (I (x) f) rho_source` and equal grades.
pub fn is_colinear(h: &CrossedHopf, source: &Comodule, target: &Comodule, f: &Mat) -> bool {
    source.grade == target.grade
        && f.shape() == (target.dim(), source.dim())
        && &target.coaction * f == &Mat::identity(h.dim(source.grade)).kron(f) * &source.coaction
}

impl ComoduleMorphism {
    /// Checked constructor: rejects non-colinear maps.
    pub fn new(h: &CrossedHopf, source: Comodule, target: Comodule, map: Mat) -> Result<ComoduleMorphism, ComodError> {
        if source.grade != target.grade {
            return Err(ComodError::GradeMismatch { source: source.grade, target: target.grade });
        }
        let want = (target.dim(), source.dim());
        if map.shape() != want {
            return Err(ComodError::Shape { what: "morphism".into(), expected: want, found: map.shape() });
        }
        if !is_colinear(h, &source, &target, &map) {
            return Err(ComodError::NotColinear(format!("at grade {}", h.label(source.grade))));
        }
        Ok(ComoduleMorphism { source, target, map })
    }

    pub fn identity(m: &Comodule) -> ComoduleMorphism {
        ComoduleMorphism { source: m.clone(), target: m.clone(), map: Mat::identity(m.dim()) }
    }

    pub fn is_invertible(&self) -> bool {
        self.map.is_invertible()
    }
}

/// `(a, d_a, Delta_a)`.
pub fn regular(h: &CrossedHopf, a: usize) -> Comodule {
    Comodule { grade: a, coaction: h.delta(a).clone() }
}

/// The tensor unit: the ground field with coaction `c -> c 1`.
pub fn unit_object(h: &CrossedHopf) -> Comodule {
    Comodule { grade: h.group.identity(), coaction: h.unit.clone() }
}

/// `rho(m (x) n) = m_a n_b (x) m_M (x) n_N` at grade `ab`.
pub fn tensor(h: &CrossedHopf, m: &Comodule, n: &Comodule) -> Comodule {
    let (a, b) = (m.grade, n.grade);
    let (da, db) = (h.dim(a), h.dim(b));
    let (dm, dn) = (m.dim(), n.dim());
    let shuffle = Mat::identity(da).kron(&Mat::swap(dm, db)).kron(&Mat::identity(dn));
    let coaction = &(&h.mu(a, b).kron(&Mat::identity(dm * dn)) * &shuffle) * &m.coaction.kron(&n.coaction);
    Comodule { grade: h.group.mul(a, b), coaction }
}

/// Tensor product of a list; the empty product is the unit object.
pub fn tensor_all(h: &CrossedHopf, factors: &[&Comodule]) -> Comodule {
    factors.iter().fold(unit_object(h), |acc, m| tensor(h, &acc, m))
}

/// `Phi_b(M)`: same space, coaction `(phi_b (x) I) rho`, grade `b a b^-1`.
pub fn conjugate(h: &CrossedHopf, m: &Comodule, b: usize) -> Comodule {
    let a = m.grade;
    let coaction = &h.phi(b, a).kron(&Mat::identity(m.dim())) * &m.coaction;
    Comodule { grade: h.group.conj(b, a), coaction }
}

/// The isomorphism `Phi_b(H_a) -> H_{b a b^-1}`, `h -> phi_b(h)`.
pub fn hat_phi(h: &CrossedHopf, a: usize, b: usize) -> Result<ComoduleMorphism, ComodError> {
    let src = conjugate(h, &regular(h, a), b);
    let tgt = regular(h, h.group.conj(b, a));
    let f = ComoduleMorphism::new(h, src, tgt, h.phi(b, a).clone())?;
    if !f.is_invertible() {
        return Err(ComodError::NotInvertible(format!("conjugation by {} on {}", h.label(b), h.label(a))));
    }
    Ok(f)
}

/// Direct sum of two comodules of one grade (basis of `M` first).
pub fn direct_sum(h: &CrossedHopf, m: &Comodule, n: &Comodule) -> Result<Comodule, ComodError> {
    if m.grade != n.grade {
        return Err(ComodError::GradeMismatch { source: m.grade, target: n.grade });
    }
    let d = h.dim(m.grade);
    let (dm, dn) = (m.dim(), n.dim());
    let s = dm + dn;
    let mut coaction = Mat::zeros(d * s, s);
    for p in 0..d {
        for i in 0..dm {
            for k in 0..dm {
                coaction.set(p * s + i, k, m.coaction.get(p * dm + i, k).clone());
            }
        }
        for i in 0..dn {
            for k in 0..dn {
                coaction.set(p * s + dm + i, dm + k, n.coaction.get(p * dn + i, k).clone());
            }
        }
    }
    Ok(Comodule { grade: m.grade, coaction })
}

/// Left dual at grade `a^-1`: `rho*(e^i) = sum_k S_{a^-1}^{-1}(rho_ik) (x) e^k`,
/// where `rho(e_k) = sum_i rho_ik (x) e_i`. Evaluation and coevaluation are
/// asserted colinear.
pub fn dual(h: &CrossedHopf, m: &Comodule) -> Result<Duality, ComodError> {
    let a = m.grade;
    let ai = h.group.inv(a);
    let n = m.dim();
    let sinv = h.s(ai).inverse().map_err(|_| ComodError::NotInvertible(format!("antipode at {}", h.label(ai))))?;
    let d = h.dim(a);
    let dd = h.dim(ai);
    let mut coaction = Mat::zeros(dd * n, n);
    for q in 0..dd {
        for k in 0..n {
            for i in 0..n {
                let mut acc = crate::CycScalar::zero();
                for p in 0..d {
                    let s = sinv.get(q, p);
                    if !s.is_zero() {
                        acc = acc + &(s * m.coaction.get(p * n + i, k));
                    }
                }
                coaction.set(q * n + k, i, acc);
            }
        }
    }
    let dual = Comodule { grade: ai, coaction };
    let eval = Mat::identity(n).vectorize().transpose();
    let coeval = Mat::identity(n).vectorize();
    let unit = unit_object(h);
    if !is_colinear(h, &tensor(h, &dual, m), &unit, &eval) {
        return Err(ComodError::NotColinear("evaluation".into()));
    }
    if !is_colinear(h, &unit, &tensor(h, m, &dual), &coeval) {
        return Err(ComodError::NotColinear("coevaluation".into()));
    }
    Ok(Duality { dual, eval, coeval })
}

/// `c(m (x) n) = gamma_{b,a}(n_b (x) m_a) (^a n) (x) m` from `M (x) N` to `Phi_a(N) (x) M`.
pub fn braiding_matrix(h: &CrossedHopf, g: &Cobraiding, m: &Comodule, n: &Comodule) -> Mat {
    let (a, b) = (m.grade, n.grade);
    let (da, db, dm, dn) = (h.dim(a), h.dim(b), m.dim(), n.dim());
    // (H_a, M, H_b, N) -> (H_b, H_a, N, M)
    let p = permute_factors(&[da, dm, db, dn], &[2, 0, 3, 1]);
    let head = g.gamma(h, b, a).kron(&Mat::identity(dn * dm));
    &(&head * &p) * &m.coaction.kron(&n.coaction)
}

/// The braiding as a checked, invertible comodule morphism.
pub fn braiding_map(
    h: &CrossedHopf,
    g: &Cobraiding,
    m: &Comodule,
    n: &Comodule,
) -> Result<ComoduleMorphism, ComodError> {
    let c = braiding_matrix(h, g, m, n);
    let src = tensor(h, m, n);
    let tgt = tensor(h, &conjugate(h, n, m.grade), m);
    let f = ComoduleMorphism::new(h, src, tgt, c)?;
    if !f.is_invertible() {
        return Err(ComodError::NotInvertible("braiding".into()));
    }
    Ok(f)
}

/// Braidings `c_{H_a,H_b}` of all pairs of regular comodules, indexed `a*m+b`.
pub fn regular_braidings(h: &CrossedHopf, g: &Cobraiding) -> Vec<Mat> {
    let e = h.group.elements();
    e.clone()
        .flat_map(|a| e.clone().map(move |b| (a, b)))
        .map(|(a, b)| braiding_matrix(h, g, &regular(h, a), &regular(h, b)))
        .collect()
}

/// Recovers `gamma_{a,b}(x (x) y)` as `(eps (x) eps)(phi_b (x) I) c_{H_b,H_a}(y (x) x)`.
///
/// The composite read without the argument swap yields `gamma_{b,a}` with its
/// slots exchanged; the swap makes the roundtrip with [`braiding_map`] exact.
pub fn extract_cobraiding(h: &CrossedHopf, braidings: &[Mat]) -> Result<Cobraiding, ComodError> {
    let g = &h.group;
    let m = h.order();
    let mut gamma = Vec::with_capacity(m * m);
    for a in g.elements() {
        for b in g.elements() {
            let c = &braidings[b * m + a];
            let (hb, ha) = (regular(h, b), regular(h, a));
            let src = tensor(h, &hb, &ha);
            let tgt = tensor(h, &conjugate(h, &ha, b), &hb);
            if c.shape() != (tgt.dim(), src.dim()) {
                return Err(ComodError::Shape {
                    what: format!("braiding ({}, {})", g.label(b), g.label(a)),
                    expected: (tgt.dim(), src.dim()),
                    found: c.shape(),
                });
            }
            if !is_colinear(h, &src, &tgt, c) {
                return Err(ComodError::NotColinear(format!("braiding ({}, {})", g.label(b), g.label(a))));
            }
            let ca = g.conj(b, a);
            let close = h.counit(ca).kron(h.counit(b));
            let row = &(&(&close * &h.phi(b, a).kron(&Mat::identity(h.dim(b)))) * c) * &Mat::swap(h.dim(a), h.dim(b));
            gamma.push(row);
        }
    }
    let gamma_inv = solve_gamma_inv(h, &gamma)?;
    Ok(Cobraiding { gamma, gamma_inv })
}

/// `theta(m) = tau_a(m_a) (^a m)` from `M` to `Phi_a(M)`.
pub fn twist_matrix(t: &Cotwist, m: &Comodule) -> Mat {
    &t.tau[m.grade].kron(&Mat::identity(m.dim())) * &m.coaction
}

pub fn twist_map(h: &CrossedHopf, t: &Cotwist, m: &Comodule) -> Result<ComoduleMorphism, ComodError> {
    let th = twist_matrix(t, m);
    let f = ComoduleMorphism::new(h, m.clone(), conjugate(h, m, m.grade), th)?;
    if !f.is_invertible() {
        return Err(ComodError::NotInvertible("twist".into()));
    }
    Ok(f)
}

/// Twists `theta_{H_a}` of all regular comodules.
pub fn regular_twists(h: &CrossedHopf, t: &Cotwist) -> Vec<Mat> {
    h.group.elements().map(|a| twist_matrix(t, &regular(h, a))).collect()
}

/// Recovers `tau_a = eps_a o phi_a o theta_{H_a}`.
pub fn extract_cotwist(h: &CrossedHopf, twists: &[Mat]) -> Result<Cotwist, ComodError> {
    let g = &h.group;
    let mut tau = Vec::with_capacity(h.order());
    for a in g.elements() {
        let src = regular(h, a);
        let tgt = conjugate(h, &src, a);
        let th = &twists[a];
        if th.shape() != (tgt.dim(), src.dim()) {
            return Err(ComodError::Shape {
                what: format!("twist at {}", g.label(a)),
                expected: (tgt.dim(), src.dim()),
                found: th.shape(),
            });
        }
        if !is_colinear(h, &src, &tgt, th) {
            return Err(ComodError::NotColinear(format!("twist at {}", g.label(a))));
        }
        tau.push(&(h.counit(a) * h.phi(a, a)) * th);
    }
    let tau_inv = solve_tau_inv(h, &tau)?;
    Ok(Cotwist { tau, tau_inv })
}

/// All colinear maps `source -> target`, as a basis of matrices.
pub fn hom_space(h: &CrossedHopf, source: &Comodule, target: &Comodule) -> Vec<Mat> {
    if source.grade != target.grade {
        return Vec::new();
    }
    let eye = Mat::identity(h.dim(source.grade));
    crate::exactla::solution_space((target.dim(), source.dim()), |f| {
        &(&target.coaction * f) - &(&eye.kron(f) * &source.coaction)
    })
}

#[cfg(test)]
mod tests;
