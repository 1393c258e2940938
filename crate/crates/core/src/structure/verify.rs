use alloc::format;

use super::{CrossedHopf, StructureError};
use crate::report::Report;
use crate::Mat;

/// Verifier switches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also require `phi_b S_a = S_{b a b^-1} phi_b`.
    pub strict_phi_antipode: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { strict_phi_antipode: true }
    }
}

/// `(dA (x) dB)` middle swap: `A (x) A (x) B (x) B -> A (x) B (x) A (x) B`.
pub(crate) fn middle_swap(da: usize, db: usize) -> Mat {
    Mat::identity(da).kron(&Mat::swap(da, db)).kron(&Mat::identity(db))
}

/// Checks every axiom of a crossed Hopf G-algebra as a matrix identity.
pub fn verify_crossed_hopf(h: &CrossedHopf, opts: &VerifyOptions) -> Result<Report, StructureError> {
    h.check_shapes()?;
    let g = &h.group;
    let one = g.identity();
    let mut r = Report::new();
    let eye = |d: usize| Mat::identity(d);

    for a in g.elements() {
        let d = h.dim(a);
        let at = || format!("component {}", h.label(a));
        let delta = h.delta(a);
        let eps = h.counit(a);
        r.compare("coalgebra.coassociativity", &(&delta.kron(&eye(d)) * delta), &(&eye(d).kron(delta) * delta), at);
        r.compare("coalgebra.counit_left", &(&eps.kron(&eye(d)) * delta), &eye(d), at);
        r.compare("coalgebra.counit_right", &(&eye(d).kron(eps) * delta), &eye(d), at);

        // unit laws
        r.compare("unit.left", &(h.mu(one, a) * &h.unit.kron(&eye(d))), &eye(d), at);
        r.compare("unit.right", &(h.mu(a, one) * &eye(d).kron(&h.unit)), &eye(d), at);

        // antipode
        let ai = g.inv(a);
        let target = &h.unit * eps;
        r.compare("antipode.left", &(&(h.mu(ai, a) * &h.s(a).kron(&eye(d))) * delta), &target, at);
        r.compare("antipode.right", &(&(h.mu(a, ai) * &eye(d).kron(h.s(a))) * delta), &target, at);
        r.record("antipode.invertible", h.s(a).is_invertible(), || format!("S at component {}", h.label(a)));

        for b in g.elements() {
            let ab = g.mul(a, b);
            let (da, db) = (h.dim(a), h.dim(b));
            let at2 = || format!("components ({}, {})", h.label(a), h.label(b));
            let mu = h.mu(a, b);
            let lhs = h.delta(ab) * mu;
            let rhs = &(&mu.kron(mu) * &middle_swap(da, db)) * &h.delta(a).kron(h.delta(b));
            r.compare("multiplication.comultiplicative", &lhs, &rhs, at2);
            r.compare("multiplication.counital", &(h.counit(ab) * mu), &h.counit(a).kron(h.counit(b)), at2);
            for c in g.elements() {
                let lhs = h.mu(ab, c) * &mu.kron(&eye(h.dim(c)));
                let rhs = h.mu(a, g.mul(b, c)) * &eye(da).kron(h.mu(b, c));
                r.compare("multiplication.associativity", &lhs, &rhs, || {
                    format!("components ({}, {}, {})", h.label(a), h.label(b), h.label(c))
                });
            }

            // conjugation by b on component a
            let phi = h.phi(b, a);
            let ca = g.conj(b, a);
            let atc = || format!("conjugation by {} on component {}", h.label(b), h.label(a));
            r.record("conjugation.invertible", phi.is_invertible(), atc);
            r.compare("conjugation.comultiplicative", &(h.delta(ca) * phi), &(&phi.kron(phi) * h.delta(a)), atc);
            r.compare("conjugation.counital", &(h.counit(ca) * phi), h.counit(a), atc);
            if b == one {
                r.compare("conjugation.identity", phi, &eye(da), atc);
            }
            for c in g.elements() {
                // phi_b(h k) = phi_b(h) phi_b(k)
                let ac = g.mul(a, c);
                let lhs = h.phi(b, ac) * h.mu(a, c);
                let rhs = h.mu(ca, g.conj(b, c)) * &phi.kron(h.phi(b, c));
                r.compare("conjugation.multiplicative", &lhs, &rhs, || {
                    format!("conjugation by {} on components ({}, {})", h.label(b), h.label(a), h.label(c))
                });
                // phi_{b c} = phi_b phi_c
                let lhs = h.phi(g.mul(b, c), a);
                let rhs = h.phi(b, g.conj(c, a)) * h.phi(c, a);
                r.compare("conjugation.homomorphism", lhs, &rhs, || {
                    format!("conjugations ({}, {}) on component {}", h.label(b), h.label(c), h.label(a))
                });
            }
            if opts.strict_phi_antipode {
                let lhs = h.phi(b, ai) * h.s(a);
                let rhs = h.s(ca) * phi;
                r.compare("antipode.conjugation", &lhs, &rhs, atc);
            } else {
                r.skip("antipode.conjugation", "disabled by option");
            }
        }
    }
    r.compare("unit.comultiplicative", &(h.delta(one) * &h.unit), &h.unit.kron(&h.unit), || "unit".into());
    r.compare("unit.counit", &(h.counit(one) * &h.unit), &Mat::identity(1), || "unit".into());
    for b in g.elements() {
        r.compare("conjugation.unit", &(h.phi(b, one) * &h.unit), &h.unit, || format!("conjugation by {}", h.label(b)));
    }
    Ok(r)
}
