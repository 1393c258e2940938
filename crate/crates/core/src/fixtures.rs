//! Canonical structures used by examples, tests and the shipped fixture files.

use alloc::vec;
use alloc::vec::Vec;

use crate::quasi::{Cobraiding, Cotwist};
use crate::structure::{Component, CrossedHopf, FiniteGroup};
use crate::{CycScalar, Mat};

/// The canonical crossed structure on `k[G]`: `H_a = span{a}`, product is the
/// group law, `phi_b` is conjugation and `S_a(a) = a^-1`. In these bases every
/// structure map is the `1 x 1` matrix `[1]`.
pub fn group_algebra(group: FiniteGroup) -> CrossedHopf {
    let m = group.order();
    let one = || Mat::identity(1);
    CrossedHopf {
        components: (0..m).map(|_| Component::grouplike(1)).collect(),
        mult: (0..m * m).map(|_| one()).collect(),
        unit: one(),
        conj: (0..m * m).map(|_| one()).collect(),
        antipode: (0..m).map(|_| one()).collect(),
        group,
    }
}

/// Structure over the trivial group from one Hopf algebra.
pub fn one_component(component: Component, mult: Mat, unit: Mat, antipode: Mat) -> CrossedHopf {
    let d = component.dim;
    CrossedHopf {
        group: FiniteGroup::trivial(),
        components: vec![component],
        mult: vec![mult],
        unit,
        conj: vec![Mat::identity(d)],
        antipode: vec![antipode],
    }
}

/// `k[Z/n]` as a single component: basis `g^0..g^{n-1}`, all group-like.
pub fn cyclic_hopf(n: usize) -> CrossedHopf {
    let mut mult = Mat::zeros(n, n * n);
    let mut antipode = Mat::zeros(n, n);
    for a in 0..n {
        antipode.set((n - a) % n, a, CycScalar::one());
        for b in 0..n {
            mult.set((a + b) % n, a * n + b, CycScalar::one());
        }
    }
    one_component(Component::grouplike(n), mult, Mat::unit_column(n, 0), antipode)
}

/// Sweedler's 4-dimensional Hopf algebra on the basis `1, g, x, gx` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Delta x = x (x) 1 + g (x) x`.
pub fn sweedler() -> CrossedHopf {
    let n = 4;
    // products e_i e_j as (coefficient, basis index)
    let table: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (1, 0), (1, 3), (1, 2)],
        [(1, 2), (-1, 3), (0, 0), (0, 0)],
        [(1, 3), (-1, 2), (0, 0), (0, 0)],
    ];
    let mut mult = Mat::zeros(n, n * n);
    for (i, row) in table.iter().enumerate() {
        for (j, &(c, k)) in row.iter().enumerate() {
            if c != 0 {
                mult.set(k, i * n + j, CycScalar::from_int(c));
            }
        }
    }
    let mut delta = Mat::zeros(n * n, n);
    let one = CycScalar::one;
    delta.set(0, 0, one());
    delta.set(n + 1, 1, one());
    delta.set(2 * n, 2, one()); // x (x) 1
    delta.set(n + 2, 2, one()); // g (x) x
    delta.set(3 * n + 1, 3, one()); // gx (x) g
    delta.set(3, 3, one()); // 1 (x) gx
    let counit = Mat::from_ints(&[&[1, 1, 0, 0]]);
    let antipode = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    one_component(Component::new(n, delta, counit), mult, Mat::unit_column(n, 0), antipode)
}

/// Cobraiding `gamma(a (x) b) = zeta_n^{k a b}` on a structure whose basis
/// vectors are indexed by residues mod `n`: the group labels of a canonical
/// `k[Z/n]`, or the basis of the one-component `k[Z/n]`.
pub fn cyclic_bicharacter(h: &CrossedHopf, n: u32, k: i64) -> Cobraiding {
    let one_comp = h.order() == 1;
    Cobraiding::from_fn(h, |a, b, i, j| {
        let (x, y) = if one_comp { (i, j) } else { (a, b) };
        CycScalar::zeta_pow(n, k * (x * y) as i64)
    })
    .expect("bicharacters are convolution invertible")
}

/// Cotwist `tau(a) = zeta_n^{k a^2}` under the same indexing.
pub fn cyclic_quadratic(h: &CrossedHopf, n: u32, k: i64) -> Cotwist {
    let one_comp = h.order() == 1;
    Cotwist::from_fn(h, |a, i| {
        let x = if one_comp { i } else { a };
        CycScalar::zeta_pow(n, k * (x * x) as i64)
    })
    .expect("roots of unity are invertible")
}

/// `gamma = i^{ab}` on the canonical `k[Z/4]`.
pub fn kz4_cobraiding(h: &CrossedHopf) -> Cobraiding {
    cyclic_bicharacter(h, 4, 1)
}

/// `tau = i^{a^2}` on the canonical `k[Z/4]`.
pub fn kz4_cotwist(h: &CrossedHopf) -> Cotwist {
    cyclic_quadratic(h, 4, 1)
}

/// The one-component `k[Z/3]` with `gamma = w^{ab}`, `tau = w^{a^2}`.
pub fn kz3_pointed() -> (CrossedHopf, Cobraiding, Cotwist) {
    let h = cyclic_hopf(3);
    let c = cyclic_bicharacter(&h, 3, 1);
    let t = cyclic_quadratic(&h, 3, 1);
    (h, c, t)
}

/// The one-component `k[Z/2]` with `gamma = (-1)^{ab}` and trivial `tau`.
pub fn kz2_symmetric() -> (CrossedHopf, Cobraiding, Cotwist) {
    let h = cyclic_hopf(2);
    let c = cyclic_bicharacter(&h, 2, 1);
    let t = Cotwist::trivial(&h);
    (h, c, t)
}

/// Canonical `k[G]` fixtures under test in the axiom suite.
pub fn canonical_group_algebras() -> Vec<(&'static str, CrossedHopf)> {
    vec![
        ("trivial_z2", group_algebra(FiniteGroup::cyclic(2))),
        ("kz2", group_algebra(FiniteGroup::cyclic(2))),
        ("kz4", group_algebra(FiniteGroup::cyclic(4))),
        ("ks3", group_algebra(FiniteGroup::symmetric3())),
    ]
}
