//! Cobraided and cotwisted structures: the linear functionals `gamma_{a,b}` and
//! `tau_a`, with exact verifiers for their axioms.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::exactla::permute_factors;
use crate::report::Report;
use crate::structure::{middle_swap, CrossedHopf, StructureError};
use crate::{CycScalar, ExactError, Mat};

/// `gamma[a*m+b]: H_a (x) H_b -> k` (a `1 x d_a d_b` row) and its declared
/// convolution inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobraiding {
    pub gamma: Vec<Mat>,
    pub gamma_inv: Vec<Mat>,
}

/// `tau[a]: H_a -> k` (a `1 x d_a` row) and its declared convolution inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotwist {
    pub tau: Vec<Mat>,
    pub tau_inv: Vec<Mat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiError {
    Structure(StructureError),
    Shape {
        what: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    Count {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// The linear system for a convolution inverse has no solution.
    NoInverse(String),
}

impl From<StructureError> for QuasiError {
    fn from(e: StructureError) -> Self {
        QuasiError::Structure(e)
    }
}

impl From<ExactError> for QuasiError {
    fn from(e: ExactError) -> Self {
        QuasiError::Structure(StructureError::Exact(e))
    }
}

impl fmt::Display for QuasiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuasiError::Structure(e) => write!(f, "{e}"),
            QuasiError::Shape { what, expected, found } => {
                write!(f, "{what} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)
            }
            QuasiError::Count { what, expected, found } => write!(f, "{found} {what} given, expected {expected}"),
            QuasiError::NoInverse(at) => write!(f, "no convolution inverse exists at {at}"),
        }
    }
}

fn check_rows(what: &str, rows: &[Mat], widths: impl Iterator<Item = usize>) -> Result<(), QuasiError> {
    for (k, (m, w)) in rows.iter().zip(widths).enumerate() {
        if m.shape() != (1, w) {
            return Err(QuasiError::Shape { what: format!("{what} block {k}"), expected: (1, w), found: m.shape() });
        }
    }
    Ok(())
}

impl Cobraiding {
    /// Builds `gamma_{a,b}(e_i (x) f_j) = value(a, b, i, j)` together with a
    /// solved convolution inverse.
    pub fn from_fn(
        h: &CrossedHopf,
        mut value: impl FnMut(usize, usize, usize, usize) -> CycScalar,
    ) -> Result<Cobraiding, QuasiError> {
        let g = &h.group;
        let mut gamma = Vec::new();
        for a in g.elements() {
            for b in g.elements() {
                let db = h.dim(b);
                let row = (0..h.dim(a) * db).map(|k| value(a, b, k / db, k % db)).collect();
                gamma.push(Mat::row(row));
            }
        }
        let gamma_inv = solve_gamma_inv(h, &gamma)?;
        Ok(Cobraiding { gamma, gamma_inv })
    }

    /// The cobraiding `eps_a (x) eps_b`.
    pub fn trivial(h: &CrossedHopf) -> Cobraiding {
        let g = &h.group;
        let gamma: Vec<Mat> = g
            .elements()
            .flat_map(|a| g.elements().map(move |b| (a, b)))
            .map(|(a, b)| h.counit(a).kron(h.counit(b)))
            .collect();
        Cobraiding { gamma_inv: gamma.clone(), gamma }
    }

    pub fn gamma(&self, h: &CrossedHopf, a: usize, b: usize) -> &Mat {
        &self.gamma[a * h.order() + b]
    }

    pub fn gamma_inv(&self, h: &CrossedHopf, a: usize, b: usize) -> &Mat {
        &self.gamma_inv[a * h.order() + b]
    }

    pub fn check_shapes(&self, h: &CrossedHopf) -> Result<(), QuasiError> {
        let m = h.order();
        for (what, rows) in [("cobraiding", &self.gamma), ("cobraiding inverse", &self.gamma_inv)] {
            if rows.len() != m * m {
                return Err(QuasiError::Count { what: "cobraiding blocks", expected: m * m, found: rows.len() });
            }
            check_rows(what, rows, (0..m * m).map(|k| h.dim(k / m) * h.dim(k % m)))?;
        }
        Ok(())
    }
}

impl Cotwist {
    /// Builds `tau_a(e_i) = value(a, i)` together with a solved inverse.
    pub fn from_fn(h: &CrossedHopf, mut value: impl FnMut(usize, usize) -> CycScalar) -> Result<Cotwist, QuasiError> {
        let tau: Vec<Mat> =
            h.group.elements().map(|a| Mat::row((0..h.dim(a)).map(|i| value(a, i)).collect())).collect();
        let tau_inv = solve_tau_inv(h, &tau)?;
        Ok(Cotwist { tau, tau_inv })
    }

    pub fn trivial(h: &CrossedHopf) -> Cotwist {
        let tau: Vec<Mat> = h.group.elements().map(|a| h.counit(a).clone()).collect();
        Cotwist { tau_inv: tau.clone(), tau }
    }

    pub fn check_shapes(&self, h: &CrossedHopf) -> Result<(), QuasiError> {
        let m = h.order();
        for (what, rows) in [("cotwist", &self.tau), ("cotwist inverse", &self.tau_inv)] {
            if rows.len() != m {
                return Err(QuasiError::Count { what: "cotwist blocks", expected: m, found: rows.len() });
            }
            check_rows(what, rows, (0..m).map(|a| h.dim(a)))?;
        }
        Ok(())
    }
}

/// `(f (x) g) o (H_a (x) swap (x) H_b) o (Delta_a (x) Delta_b)`.
fn convolve2(h: &CrossedHopf, a: usize, b: usize, f: &Mat, g: &Mat) -> Mat {
    &(&f.kron(g) * &middle_swap(h.dim(a), h.dim(b))) * &h.delta(a).kron(h.delta(b))
}

/// Solves for the two-sided convolution inverse of every `gamma_{a,b}`.
pub fn solve_gamma_inv(h: &CrossedHopf, gamma: &[Mat]) -> Result<Vec<Mat>, QuasiError> {
    let g = &h.group;
    let mut out = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let n = h.dim(a) * h.dim(b);
            let gm = &gamma[a * g.order() + b];
            let tail = &middle_swap(h.dim(a), h.dim(b)) * &h.delta(a).kron(h.delta(b));
            // x (I (x) gamma) tail = eps and x (gamma (x) I) tail = eps
            let left = &Mat::identity(n).kron(gm) * &tail;
            let right = &gm.kron(&Mat::identity(n)) * &tail;
            let eps = h.counit(a).kron(h.counit(b));
            out.push(solve_row(&[left, right], &eps, || format!("({}, {})", g.label(a), g.label(b)))?);
        }
    }
    Ok(out)
}

/// Solves for the two-sided convolution inverse of every `tau_a`.
pub fn solve_tau_inv(h: &CrossedHopf, tau: &[Mat]) -> Result<Vec<Mat>, QuasiError> {
    let g = &h.group;
    g.elements()
        .map(|a| {
            let d = h.dim(a);
            let left = &Mat::identity(d).kron(&tau[a]) * h.delta(a);
            let right = &tau[a].kron(&Mat::identity(d)) * h.delta(a);
            solve_row(&[left, right], h.counit(a), || g.label(a).to_string())
        })
        .collect()
}

/// Finds a row `x` with `x * A_k = target` for every `A_k`.
fn solve_row(systems: &[Mat], target: &Mat, at: impl FnOnce() -> String) -> Result<Mat, QuasiError> {
    let a = Mat::hstack(systems)?;
    let rhs = Mat::hstack(&alloc::vec![target.clone(); systems.len()])?;
    match a.transpose().solve(&rhs.transpose()) {
        Ok(sol) => Ok(sol.particular.transpose()),
        Err(ExactError::Inconsistent) => Err(QuasiError::NoInverse(at())),
        Err(e) => Err(e.into()),
    }
}

/// Checks convolution invertibility, quasi-commutativity, multiplicativity in
/// each slot and conjugation invariance.
pub fn verify_cobraiding(h: &CrossedHopf, c: &Cobraiding) -> Result<Report, QuasiError> {
    h.check_shapes()?;
    c.check_shapes(h)?;
    let g = &h.group;
    let mut r = Report::new();
    let eye = Mat::identity;
    for a in g.elements() {
        for b in g.elements() {
            let (da, db) = (h.dim(a), h.dim(b));
            let gm = c.gamma(h, a, b);
            let gi = c.gamma_inv(h, a, b);
            let at = || format!("({}, {})", g.label(a), g.label(b));
            let eps = h.counit(a).kron(h.counit(b));
            r.compare("cobraiding.convolution_inverse_left", &convolve2(h, a, b, gi, gm), &eps, at);
            r.compare("cobraiding.convolution_inverse_right", &convolve2(h, a, b, gm, gi), &eps, at);

            // k' h' gamma(h'' (x) k'') = gamma(h' (x) k') phi_b(h'') k''
            let dd = h.delta(a).kron(h.delta(b));
            let ql = permute_factors(&[da, da, db, db], &[2, 0, 1, 3]);
            let lhs = &(&h.mu(b, a).kron(gm) * &ql) * &dd;
            let ca = g.conj(b, a);
            let tail = h.mu(ca, b) * &h.phi(b, a).kron(&eye(db));
            let rhs = &(&gm.kron(&tail) * &middle_swap(da, db)) * &dd;
            r.compare("cobraiding.quasi_commutativity", &lhs, &rhs, at);

            for lam in g.elements() {
                let lhs = c.gamma(h, g.conj(lam, a), g.conj(lam, b)) * &h.phi(lam, a).kron(h.phi(lam, b));
                r.compare("cobraiding.conjugation_invariance", &lhs, gm, || {
                    format!("({}, {}) conjugated by {}", g.label(a), g.label(b), g.label(lam))
                });
            }

            for x in g.elements() {
                // first slot: a1 = a, a2 = b, beta = x
                let dx = h.dim(x);
                let lhs = c.gamma(h, g.mul(a, b), x) * &h.mu(a, b).kron(&eye(dx));
                let split = eye(da * db).kron(h.delta(x));
                let p = permute_factors(&[da, db, dx, dx], &[0, 2, 1, 3]);
                let rhs = &(&c.gamma(h, a, x).kron(c.gamma(h, b, x)) * &p) * &split;
                r.compare("cobraiding.multiplicative_first", &lhs, &rhs, || {
                    format!("({}, {}, {})", g.label(a), g.label(b), g.label(x))
                });

                // second slot: alpha = x, beta1 = a, beta2 = b
                let lhs = c.gamma(h, x, g.mul(a, b)) * &eye(dx).kron(h.mu(a, b));
                let split = h.delta(x).kron(&eye(da * db));
                let p = permute_factors(&[dx, dx, da, db], &[1, 2, 0, 3]);
                let cx = g.conj(b, x);
                let first = c.gamma(h, cx, a) * &h.phi(b, x).kron(&eye(da));
                let rhs = &(&first.kron(c.gamma(h, x, b)) * &p) * &split;
                r.compare("cobraiding.multiplicative_second", &lhs, &rhs, || {
                    format!("({}, {}, {})", g.label(x), g.label(a), g.label(b))
                });
            }
        }
    }
    Ok(r)
}

/// Checks the five cotwist identities against the given cobraiding.
pub fn verify_cotwist(h: &CrossedHopf, c: &Cobraiding, t: &Cotwist) -> Result<Report, QuasiError> {
    h.check_shapes()?;
    c.check_shapes(h)?;
    t.check_shapes(h)?;
    let g = &h.group;
    let mut r = Report::new();
    let eye = Mat::identity;
    for a in g.elements() {
        let d = h.dim(a);
        let at = || g.label(a).to_string();
        let delta = h.delta(a);
        let (tau, ti) = (&t.tau[a], &t.tau_inv[a]);
        r.compare("cotwist.convolution_inverse_left", &(&ti.kron(tau) * delta), h.counit(a), at);
        r.compare("cotwist.convolution_inverse_right", &(&tau.kron(ti) * delta), h.counit(a), at);
        // tau(h') phi_a(h'') = h' tau(h'')
        let lhs = &tau.kron(h.phi(a, a)) * delta;
        let rhs = &eye(d).kron(tau) * delta;
        r.compare("cotwist.conjugation_commutes", &lhs, &rhs, at);
        let ai = g.inv(a);
        r.compare("cotwist.antipode_invariance", &(&t.tau[ai] * h.s(a)), tau, at);
        for b in g.elements() {
            let cb = g.conj(b, a);
            r.compare("cotwist.conjugation_invariance", &(&t.tau[cb] * h.phi(b, a)), tau, || {
                format!("{} conjugated by {}", g.label(a), g.label(b))
            });
            r.compare("cotwist.product", &(&t.tau[g.mul(a, b)] * h.mu(a, b)), &product_rhs(h, c, t, a, b), || {
                format!("({}, {})", g.label(a), g.label(b))
            });
        }
    }
    Ok(r)
}

/// `gamma_{b,a}(k'(x)h') tau_a(h'') tau_{aba^-1}(phi_a k'')
///  gamma_{a,aba^-1}(phi_a h''' (x) phi_a phi_b k''')` as a row on `H_a (x) H_b`.
fn product_rhs(h: &CrossedHopf, c: &Cobraiding, t: &Cotwist, a: usize, b: usize) -> Mat {
    let g = &h.group;
    let (da, db) = (h.dim(a), h.dim(b));
    let d3a = &h.delta(a).kron(&Mat::identity(da)) * h.delta(a);
    let d3b = &h.delta(b).kron(&Mat::identity(db)) * h.delta(b);
    // (h1,h2,h3,k1,k2,k3) -> (k1,h1,h2,k2,h3,k3)
    let p = permute_factors(&[da, da, da, db, db, db], &[3, 0, 1, 4, 2, 5]);
    let cb = g.conj(a, b);
    let f1 = c.gamma(h, b, a);
    let f2 = &t.tau[a];
    let f3 = &t.tau[cb] * h.phi(a, b);
    let f4 = c.gamma(h, a, cb) * &h.phi(a, a).kron(&(h.phi(a, b) * h.phi(b, b)));
    let functional = Mat::kron_all([f1, f2, &f3, &f4]);
    &(&functional * &p) * &d3a.kron(&d3b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn kz4_bicharacter_passes() {
        let h = fixtures::group_algebra(crate::FiniteGroup::cyclic(4));
        let c = fixtures::kz4_cobraiding(&h);
        assert!(verify_cobraiding(&h, &c).unwrap().all_pass());
        let t = fixtures::kz4_cotwist(&h);
        let rep = verify_cotwist(&h, &c, &t).unwrap();
        assert!(rep.all_pass(), "{rep}");
        assert_eq!(rep.len(), 6);
    }

    #[test]
    fn solved_inverse_matches_declared() {
        let h = fixtures::group_algebra(crate::FiniteGroup::cyclic(4));
        let c = fixtures::kz4_cobraiding(&h);
        let solved = solve_gamma_inv(&h, &c.gamma).unwrap();
        for (a, b) in (0..4).flat_map(|a| (0..4).map(move |b| (a, b))) {
            let expect = CycScalar::zeta_pow(4, -((a * b) as i64));
            assert_eq!(solved[a * 4 + b].to_scalar().unwrap(), &expect);
        }
    }

    #[test]
    fn zero_cotwist_has_no_inverse() {
        let h = fixtures::group_algebra(crate::FiniteGroup::cyclic(4));
        let tau: Vec<Mat> =
            (0..4).map(|a| Mat::scalar(if a == 1 { CycScalar::zero() } else { CycScalar::one() })).collect();
        assert!(matches!(solve_tau_inv(&h, &tau), Err(QuasiError::NoInverse(_))));
    }

    #[test]
    fn trivial_structure_passes() {
        let h = fixtures::group_algebra(crate::FiniteGroup::symmetric3());
        let c = Cobraiding::trivial(&h);
        assert!(verify_cobraiding(&h, &c).unwrap().all_pass());
        assert!(verify_cotwist(&h, &c, &Cotwist::trivial(&h)).unwrap().all_pass());
    }

    #[test]
    fn sweedler_trivial_cobraiding_fails_quasi_commutativity() {
        // Sweedler's algebra is not commutative, so eps (x) eps is no cobraiding.
        let h = fixtures::sweedler();
        let rep = verify_cobraiding(&h, &Cobraiding::trivial(&h)).unwrap();
        assert_eq!(rep.status("cobraiding.quasi_commutativity"), Some(crate::Status::Fail));
        assert_eq!(rep.status("cobraiding.multiplicative_first"), Some(crate::Status::Pass));
    }
}
