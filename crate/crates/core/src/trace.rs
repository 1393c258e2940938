//! Quantum traces, negligibility, the S-matrix and modularity over the
//! identity component.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::comod::{
    braiding_matrix, dual, hom_space, is_colinear, tensor, twist_matrix, unit_object, ComodError, Comodule,
    ComoduleMorphism,
};
use crate::quasi::{Cobraiding, Cotwist};
use crate::report::Report;
use crate::structure::CrossedHopf;
use crate::{CycScalar, Mat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceError {
    NotEndomorphism,
    /// The comodule lives over a component other than the identity one.
    WrongGrade {
        object: String,
    },
    MissingDual(usize),
    BadWitness {
        index: usize,
        reason: String,
    },
    Comod(ComodError),
}

impl From<ComodError> for TraceError {
    fn from(e: ComodError) -> Self {
        TraceError::Comod(e)
    }
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::NotEndomorphism => f.write_str("map is not an endomorphism"),
            TraceError::WrongGrade { object } => {
                write!(f, "{object} is not a comodule over the identity component")
            }
            TraceError::MissingDual(i) => write!(f, "simple object {i} has no dual in the family"),
            TraceError::BadWitness { index, reason } => {
                write!(f, "dual witness for object {index}: {reason}")
            }
            TraceError::Comod(e) => write!(f, "{e}"),
        }
    }
}

/// Simple comodules over the identity component with `objects[0]` trivial,
/// an involution `i -> dual_index[i]` and witnesses `V_{i*} -> V_i*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFamily {
    pub objects: Vec<Comodule>,
    pub dual_index: Vec<usize>,
    pub witnesses: Vec<Mat>,
}

impl SimpleFamily {
    /// Checks gradings, the involution and witness shapes (not their colinearity,
    /// which [`is_modular`] reports).
    pub fn new(
        h: &CrossedHopf,
        objects: Vec<Comodule>,
        dual_index: Vec<usize>,
        witnesses: Vec<Mat>,
    ) -> Result<SimpleFamily, TraceError> {
        let n = objects.len();
        let e = h.group.identity();
        if let Some((i, _)) = objects.iter().enumerate().find(|(_, o)| o.grade != e) {
            return Err(TraceError::WrongGrade { object: format!("simple object {i}") });
        }
        if dual_index.len() != n {
            return Err(TraceError::MissingDual(dual_index.len().min(n)));
        }
        for (i, &j) in dual_index.iter().enumerate() {
            if j >= n || dual_index[j] != i {
                return Err(TraceError::MissingDual(i));
            }
        }
        if witnesses.len() != n {
            return Err(TraceError::MissingDual(witnesses.len().min(n)));
        }
        for (i, w) in witnesses.iter().enumerate() {
            let d = objects[i].dim();
            let want = (d, objects[dual_index[i]].dim());
            if w.shape() != want {
                return Err(TraceError::BadWitness {
                    index: i,
                    reason: format!("shape {:?}, expected {:?}", w.shape(), want),
                });
            }
        }
        Ok(SimpleFamily { objects, dual_index, witnesses })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }
}

fn check_identity_grade(h: &CrossedHopf, u: &Comodule) -> Result<(), TraceError> {
    if u.grade == h.group.identity() {
        Ok(())
    } else {
        Err(TraceError::WrongGrade { object: format!("comodule at grade {}", h.label(u.grade)) })
    }
}

/// `d_U o c_{U,U*} o ((theta_U f) (x) I) o b_U` for an endomorphism `f` of `u`.
pub fn qtrace_of(h: &CrossedHopf, g: &Cobraiding, t: &Cotwist, u: &Comodule, f: &Mat) -> Result<CycScalar, TraceError> {
    check_identity_grade(h, u)?;
    let m = u.dim();
    if f.shape() != (m, m) {
        return Err(TraceError::NotEndomorphism);
    }
    let d = dual(h, u)?;
    let body = (&twist_matrix(t, u) * f).kron(&Mat::identity(m));
    let closed = &(&(&d.eval * &braiding_matrix(h, g, u, &d.dual)) * &body) * &d.coeval;
    Ok(closed.to_scalar().cloned().expect("closing maps land in a 1x1 matrix"))
}

/// Quantum trace of a comodule endomorphism.
pub fn qtrace(h: &CrossedHopf, g: &Cobraiding, t: &Cotwist, f: &ComoduleMorphism) -> Result<CycScalar, TraceError> {
    if f.source != f.target {
        return Err(TraceError::NotEndomorphism);
    }
    qtrace_of(h, g, t, &f.source, &f.map)
}

/// Coordinate form `sum f_kj tau(c_ik) gamma~(c_jl (x) c_li)` with
/// `rho(e_j) = sum_i c_ij (x) e_i` and `gamma~` the convolution inverse.
///
/// Agrees with [`qtrace`] whenever the antipode of the identity component is
/// involutive, since then `gamma(S^-1 x (x) y) = gamma~(x (x) y)`.
pub fn qtrace_coordinates(
    h: &CrossedHopf,
    g: &Cobraiding,
    t: &Cotwist,
    u: &Comodule,
    f: &Mat,
) -> Result<CycScalar, TraceError> {
    check_identity_grade(h, u)?;
    let m = u.dim();
    if f.shape() != (m, m) {
        return Err(TraceError::NotEndomorphism);
    }
    let e = u.grade;
    let dh = h.dim(e);
    let rho = &u.coaction;
    let tau = &t.tau[e];
    let ginv = g.gamma_inv(h, e, e);
    let tau_of =
        |i: usize, k: usize| (0..dh).fold(CycScalar::zero(), |acc, p| acc + &(tau.get(0, p) * rho.get(p * m + i, k)));
    let ginv_of = |j: usize, l: usize, i: usize| {
        let mut acc = CycScalar::zero();
        for p in 0..dh {
            let x = rho.get(p * m + j, l);
            if x.is_zero() {
                continue;
            }
            for q in 0..dh {
                let y = rho.get(q * m + l, i);
                if !y.is_zero() {
                    acc = acc + &(&(ginv.get(0, p * dh + q) * x) * y);
                }
            }
        }
        acc
    };
    let mut total = CycScalar::zero();
    for j in 0..m {
        for k in 0..m {
            let fkj = f.get(k, j);
            if fkj.is_zero() {
                continue;
            }
            for i in 0..m {
                let ti = tau_of(i, k);
                if ti.is_zero() {
                    continue;
                }
                for l in 0..m {
                    total = total + &(&(fkj * &ti) * &ginv_of(j, l, i));
                }
            }
        }
    }
    Ok(total)
}

pub fn qdim(h: &CrossedHopf, g: &Cobraiding, t: &Cotwist, u: &Comodule) -> Result<CycScalar, TraceError> {
    qtrace_of(h, g, t, u, &Mat::identity(u.dim()))
}

/// `qtrace(Id_U) = 0`.
pub fn is_negligible(h: &CrossedHopf, g: &Cobraiding, t: &Cotwist, u: &Comodule) -> Result<bool, TraceError> {
    Ok(qdim(h, g, t, u)?.is_zero())
}

/// `s_ij = qtrace(c_{V_{j*},V_i} o c_{V_i,V_{j*}})`.
pub fn s_matrix(h: &CrossedHopf, g: &Cobraiding, t: &Cotwist, fam: &SimpleFamily) -> Result<Mat, TraceError> {
    let n = fam.len();
    let mut s = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let vi = &fam.objects[i];
            let vj = fam.objects.get(fam.dual_index[j]).ok_or(TraceError::MissingDual(j))?;
            let double = &braiding_matrix(h, g, vj, vi) * &braiding_matrix(h, g, vi, vj);
            s.set(i, j, qtrace_of(h, g, t, &tensor(h, vi, vj), &double)?);
        }
    }
    Ok(s)
}

/// The S-matrix, its determinant and the named modularity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularVerdict {
    pub s: Mat,
    pub det: CycScalar,
    pub qdims: Vec<CycScalar>,
    pub report: Report,
}

impl ModularVerdict {
    pub fn is_modular(&self) -> bool {
        self.report.all_pass()
    }
}

pub fn is_modular(
    h: &CrossedHopf,
    g: &Cobraiding,
    t: &Cotwist,
    fam: &SimpleFamily,
) -> Result<ModularVerdict, TraceError> {
    let mut r = Report::new();
    let n = fam.len();
    let one = unit_object(h);
    match fam.objects.first() {
        Some(v0) => r.record("modular.unit_object", *v0 == one, || "object 0 is not the trivial comodule".into()),
        None => r.fail("modular.unit_object", "empty family"),
    }
    for (i, v) in fam.objects.iter().enumerate() {
        let w = &fam.witnesses[i];
        let vd = dual(h, v)?.dual;
        let ok = is_colinear(h, &fam.objects[fam.dual_index[i]], &vd, w) && w.is_invertible();
        r.record("modular.dual_witness", ok, || format!("object {i}"));
        let ends = hom_space(h, v, v).len();
        r.record("modular.endomorphisms_scalar", ends == 1, || {
            format!("object {i} has {ends} independent endomorphisms")
        });
    }
    let qdims = fam.objects.iter().map(|v| qdim(h, g, t, v)).collect::<Result<Vec<_>, _>>()?;
    for j in 0..n {
        for k in 0..n {
            let prod = tensor(h, &fam.objects[j], &fam.objects[k]);
            let mut rhs = CycScalar::zero();
            for (i, vi) in fam.objects.iter().enumerate() {
                let mult = hom_space(h, vi, &prod).len() as i64;
                rhs = rhs + &(&qdims[i] * &CycScalar::from_int(mult));
            }
            let lhs = &qdims[j] * &qdims[k];
            r.record("modular.dimension_balance", lhs == rhs, || format!("pair ({j}, {k}): {lhs} vs {rhs}"));
        }
    }
    let s = s_matrix(h, g, t, fam)?;
    let det = s.det().map_err(ComodError::from)?;
    r.record("modular.s_invertible", !det.is_zero(), || "determinant is zero".into());
    Ok(ModularVerdict { s, det, qdims, report: r })
}

/// One-dimensional simples of a one-component group algebra `k[Z/n]` given
/// by the basis vectors, with `V_i* = V_{-i}` and identity witnesses.
pub fn grouplike_simples(h: &CrossedHopf) -> Result<SimpleFamily, TraceError> {
    let e = h.group.identity();
    let d = h.dim(e);
    let objects: Vec<Comodule> = (0..d).map(|i| Comodule { grade: e, coaction: Mat::unit_column(d, i) }).collect();
    let mut dual_index = Vec::with_capacity(d);
    for v in &objects {
        let vd = dual(h, v)?.dual;
        let j = objects.iter().position(|o| *o == vd).ok_or(TraceError::MissingDual(dual_index.len()))?;
        dual_index.push(j);
    }
    let witnesses = (0..d).map(|_| Mat::identity(1)).collect();
    SimpleFamily::new(h, objects, dual_index, witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    use crate::comod::{direct_sum, regular};
    use crate::fixtures::{cyclic_hopf, kz2_symmetric, kz3_pointed};

    fn trivial() -> (CrossedHopf, Cobraiding, Cotwist) {
        let h = cyclic_hopf(1);
        let c = Cobraiding::trivial(&h);
        let t = Cotwist::trivial(&h);
        (h, c, t)
    }

    #[test]
    fn trivial_structure_traces() {
        let (h, c, t) = trivial();
        let one = unit_object(&h);
        assert!(qtrace(&h, &c, &t, &ComoduleMorphism::identity(&one)).unwrap().is_one());
        assert!(qtrace_of(&h, &c, &t, &one, &Mat::zeros(1, 1)).unwrap().is_zero());
        assert!(!is_negligible(&h, &c, &t, &one).unwrap());
        let empty = Comodule { grade: 0, coaction: Mat::zeros(0, 0) };
        assert!(is_negligible(&h, &c, &t, &empty).unwrap());
        let fam = grouplike_simples(&h).unwrap();
        let v = is_modular(&h, &c, &t, &fam).unwrap();
        assert_eq!(v.s, Mat::identity(1));
        assert!(v.is_modular(), "{}", v.report);
    }

    #[test]
    fn pointed_z3_qdims_match_the_coordinate_formula() {
        let (h, c, t) = kz3_pointed();
        let fam = grouplike_simples(&h).unwrap();
        for v in &fam.objects {
            let id = Mat::identity(1);
            let a = qtrace_of(&h, &c, &t, v, &id).unwrap();
            assert_eq!(a, qtrace_coordinates(&h, &c, &t, v, &id).unwrap());
            assert!(a.is_one());
        }
        let reg = regular(&h, 0);
        let f = hom_space(&h, &reg, &reg)
            .into_iter()
            .fold(Mat::zeros(3, 3), |acc, b| &acc + &b.scale(&CycScalar::from_int(2)));
        assert_eq!(qtrace_of(&h, &c, &t, &reg, &f).unwrap(), qtrace_coordinates(&h, &c, &t, &reg, &f).unwrap());
    }

    #[test]
    fn pointed_z3_is_modular() {
        let (h, c, t) = kz3_pointed();
        let fam = grouplike_simples(&h).unwrap();
        assert_eq!(fam.dual_index, [0, 2, 1]);
        let v = is_modular(&h, &c, &t, &fam).unwrap();
        assert!(v.is_modular(), "{}", v.report);
        // independent oracle: s_ab = w^{-2ab} = w^{ab}
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(*v.s.get(a, b), CycScalar::zeta_pow(3, (a * b) as i64));
                assert_eq!(v.s.get(a, b), v.s.get(b, a));
                assert_eq!(v.s.get(fam.dual_index[a], b), v.s.get(a, fam.dual_index[b]));
            }
        }
        assert!(!v.det.is_zero());
    }

    #[test]
    fn symmetric_z2_is_not_modular() {
        let (h, c, t) = kz2_symmetric();
        let fam = grouplike_simples(&h).unwrap();
        let v = is_modular(&h, &c, &t, &fam).unwrap();
        assert_eq!(v.s, Mat::from_ints(&[&[1, -1], &[-1, 1]]));
        assert!(v.det.is_zero());
        assert_eq!(v.report.status("modular.s_invertible"), Some(crate::Status::Fail));
        assert_eq!(v.report.status("modular.dimension_balance"), Some(crate::Status::Pass));
        // V_0 + V_1 has qdim 1 + (-1)
        let sum = direct_sum(&h, &fam.objects[0], &fam.objects[1]).unwrap();
        assert!(is_negligible(&h, &c, &t, &sum).unwrap());
    }

    #[test]
    fn non_endomorphisms_and_wrong_families_are_rejected() {
        let (h, c, t) = kz3_pointed();
        let reg = regular(&h, 0);
        assert_eq!(qtrace_of(&h, &c, &t, &reg, &Mat::zeros(3, 2)), Err(TraceError::NotEndomorphism));
        let objs = grouplike_simples(&h).unwrap().objects;
        assert_eq!(SimpleFamily::new(&h, objs, vec![0, 1, 2], vec![Mat::identity(1); 3]).map(|_| ()), Ok(()));
        let objs = grouplike_simples(&h).unwrap().objects;
        assert!(matches!(SimpleFamily::new(&h, objs, vec![0, 2, 0], vec![]), Err(TraceError::MissingDual(_))));
    }

    #[test]
    fn wrong_involution_fails_the_witness_check() {
        let (h, c, t) = kz3_pointed();
        let objs = grouplike_simples(&h).unwrap().objects;
        let fam = SimpleFamily::new(&h, objs, vec![0, 1, 2], vec![Mat::identity(1); 3]).unwrap();
        let v = is_modular(&h, &c, &t, &fam).unwrap();
        assert_eq!(v.report.status("modular.dual_witness"), Some(crate::Status::Fail));
    }
}
