#![allow(clippy::needless_range_loop)]

use crossed_hopf::comod::{direct_sum, hom_space, regular, tensor, Comodule};
use crossed_hopf::exactla::{CycScalar, Mat, Rational};
use crossed_hopf::fixtures::{group_algebra, kz3_pointed, kz4_cobraiding, kz4_cotwist};
use crossed_hopf::quasi::{verify_cobraiding, Cobraiding};
use crossed_hopf::tannaka::{coend_coalgebra, verify_coend, Arrow, FiniteDiagram};
use crossed_hopf::trace::qtrace_of;
use crossed_hopf::FiniteGroup;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int_mat(rows: usize, cols: usize, data: &[i64]) -> Mat {
    Mat::new(rows, cols, data.iter().map(|&v| CycScalar::from_int(v)).collect()).unwrap()
}

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |d| int_mat(rows, cols, &d))
}

fn any_mat() -> impl Strategy<Value = Mat> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| mat(r, c))
}

/// Elements of `Q(zeta_4)` with small integer coordinates.
fn gaussian() -> impl Strategy<Value = CycScalar> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| {
        CycScalar::from_power_coeffs(4, &[Rational::from_integer(a.into()), Rational::from_integer(b.into())]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nonzero_scalars_have_inverses(a in gaussian()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a.inv().unwrap() * &a).is_one());
    }

    #[test]
    fn embedding_is_a_ring_map(a in gaussian(), b in gaussian()) {
        let up = |x: &CycScalar| x.embed(12).unwrap();
        prop_assert_eq!(up(&(&a + &b)), &up(&a) + &up(&b));
        prop_assert_eq!(up(&(&a * &b)), &up(&a) * &up(&b));
    }

    #[test]
    fn kron_is_associative(a in any_mat(), b in any_mat(), c in any_mat()) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn kron_is_bilinear(
        (a, a2) in (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| (mat(r, c), mat(r, c))),
        b in any_mat(),
        k in -3i64..=3,
    ) {
        let s = CycScalar::from_int(k);
        prop_assert_eq!((&a + &a2).kron(&b), &a.kron(&b) + &a2.kron(&b));
        prop_assert_eq!(a.scale(&s).kron(&b), a.kron(&b).scale(&s));
        prop_assert_eq!(b.kron(&(&a + &a2)), &b.kron(&a) + &b.kron(&a2));
    }

    #[test]
    fn kron_mixed_product(
        (a, c) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(r, m, q)| (mat(r, m), mat(m, q))),
        (b, d) in (1usize..=2, 1usize..=3, 1usize..=2).prop_flat_map(|(r, m, q)| (mat(r, m), mat(m, q))),
    ) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn rank_nullity(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| mat(r, c))) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!((&m * v).is_zero());
        }
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..=4).prop_flat_map(|n| mat(n, n))) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert!((&m * &inv).is_identity());
                prop_assert!((&inv * &m).is_identity());
                prop_assert!(!m.det().unwrap().is_zero());
            }
            Err(_) => prop_assert!(m.det().unwrap().is_zero()),
        }
    }
}

/// `gamma(a, b) = zeta_n^{e[a][b]}`; a bicharacter exactly when `e` is
/// additive in each slot modulo `n`.
fn is_bicharacter(n: usize, e: &[Vec<usize>]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|a2| {
            (0..n).all(|b| {
                (e[(a + a2) % n][b] == (e[a][b] + e[a2][b]) % n) && (e[b][(a + a2) % n] == (e[b][a] + e[b][a2]) % n)
            })
        })
    })
}

fn exponent_table() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (2usize..=4).prop_flat_map(|n| {
        let bichar = (0..n).prop_map(move |k| (0..n).map(|a| (0..n).map(|b| (k * a * b) % n).collect()).collect());
        let free = proptest::collection::vec(proptest::collection::vec(0..n, n), n);
        let nearly = (0..n, 0..n, 0..n, 1..n).prop_map(move |(k, a, b, d)| {
            let mut e: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| (k * x * y) % n).collect()).collect();
            e[a][b] = (e[a][b] + d) % n;
            e
        });
        prop_oneof![bichar, free, nearly].prop_map(move |e| (n, e))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cobraiding_verdict_matches_bicharacter_check((n, e) in exponent_table()) {
        let h = group_algebra(FiniteGroup::cyclic(n));
        let c = Cobraiding::from_fn(&h, |a, b, _, _| CycScalar::zeta_pow(n as u32, e[a][b] as i64)).unwrap();
        let verdict = verify_cobraiding(&h, &c).unwrap().all_pass();
        prop_assert_eq!(verdict, is_bicharacter(n, &e));
    }
}

fn repeated(h: &crossed_hopf::CrossedHopf, m: &Comodule, k: usize) -> Comodule {
    let mut out = m.clone();
    for _ in 1..k {
        out = direct_sum(h, &out, m).unwrap();
    }
    out
}

fn combination(basis: &[Mat], coeffs: &[i64]) -> Mat {
    let (r, c) = basis[0].shape();
    basis.iter().zip(coeffs).fold(Mat::zeros(r, c), |acc, (b, &k)| &acc + &b.scale(&CycScalar::from_int(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quantum_trace_is_linear_and_multiplicative(
        us in proptest::collection::vec(0usize..3, 1..=3),
        vs in proptest::collection::vec(0usize..3, 1..=2),
        coeffs in proptest::collection::vec(-3i64..=3, 30),
        k in -3i64..=3,
    ) {
        let (h, c, t) = kz3_pointed();
        let simple = |i: usize| Comodule { grade: 0, coaction: Mat::unit_column(3, i) };
        let sum = |ks: &[usize]| ks[1..].iter().fold(simple(ks[0]), |acc, &i| direct_sum(&h, &acc, &simple(i)).unwrap());
        let (u, v) = (sum(&us), sum(&vs));
        let eu = hom_space(&h, &u, &u);
        let ev = hom_space(&h, &v, &v);
        let f = combination(&eu, &coeffs[..eu.len()]);
        let f2 = combination(&eu, &coeffs[10..10 + eu.len()]);
        let g = combination(&ev, &coeffs[20..20 + ev.len()]);
        let s = CycScalar::from_int(k);
        let q = |m: &Comodule, x: &Mat| qtrace_of(&h, &c, &t, m, x).unwrap();
        prop_assert_eq!(q(&u, &(&f.scale(&s) + &f2)), &(&s * &q(&u, &f)) + &q(&u, &f2));
        prop_assert_eq!(q(&tensor(&h, &u, &v), &f.kron(&g)), &q(&u, &f) * &q(&v, &g));
    }

    #[test]
    fn quantum_trace_on_identity_grade_of_z4(na in 1usize..=3, entries in proptest::collection::vec(-3i64..=3, 9)) {
        let h = group_algebra(FiniteGroup::cyclic(4));
        let (c, t) = (kz4_cobraiding(&h), kz4_cotwist(&h));
        let u = repeated(&h, &regular(&h, 0), na);
        let f = int_mat(na, na, &entries[..na * na]);
        prop_assert_eq!(qtrace_of(&h, &c, &t, &u, &f).unwrap(), f.trace());
    }
}

/// Rank over `Q` by plain Gaussian elimination on big rationals.
fn oracle_rank(rows: Vec<Vec<BigInt>>) -> usize {
    let mut m: Vec<Vec<Rational>> =
        rows.into_iter().map(|r| r.into_iter().map(Rational::from_integer).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for k in 0..cols {
                    let delta = &factor * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Relation rows `h X(f) - X(f) h` built directly from integer arrow data.
fn oracle_relations(dims: &[usize], arrows: &[(usize, usize, Vec<i64>)]) -> Vec<Vec<BigInt>> {
    let mut offsets = vec![0];
    for d in dims {
        offsets.push(offsets.last().unwrap() + d * d);
    }
    let amb = *offsets.last().unwrap();
    let mut rows = Vec::new();
    for (s, t, f) in arrows {
        let (ds, dt) = (dims[*s], dims[*t]);
        let fv = |i: usize, j: usize| f[i * ds + j];
        for p in 0..ds {
            for q in 0..dt {
                let mut row = vec![BigInt::zero(); amb];
                // (E_pq f)_{i j} = delta_ip f_qj on the source
                for j in 0..ds {
                    row[offsets[*s] + p * ds + j] += fv(q, j);
                }
                // (f E_pq)_{i j} = f_ip delta_jq on the target
                for i in 0..dt {
                    row[offsets[*t] + i * dt + q] -= fv(i, p);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![BigInt::zero(); amb]);
    }
    rows
}

/// Object dimensions and `(source, target, row-major entries)` arrows.
type RawDiagram = (Vec<usize>, Vec<(usize, usize, Vec<i64>)>);

fn diagram() -> impl Strategy<Value = RawDiagram> {
    proptest::collection::vec(1usize..=3, 1..=3).prop_flat_map(|dims| {
        let n = dims.len();
        let d2 = dims.clone();
        let arrow = (0..n, 0..n).prop_flat_map(move |(s, t)| {
            proptest::collection::vec(-2i64..=2, d2[s] * d2[t]).prop_map(move |v| (s, t, v))
        });
        (Just(dims), proptest::collection::vec(arrow, 0..=3))
    })
}

fn build(dims: &[usize], arrows: &[(usize, usize, Vec<i64>)]) -> FiniteDiagram {
    let arrows = arrows
        .iter()
        .map(|(s, t, v)| Arrow { source: *s, target: *t, value: int_mat(dims[*t], dims[*s], v) })
        .collect();
    FiniteDiagram::new(dims.to_vec(), arrows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coend_dimension_matches_independent_rank((dims, arrows) in diagram()) {
        let d = build(&dims, &arrows);
        let p = coend_coalgebra(&d).unwrap();
        let amb: usize = dims.iter().map(|x| x * x).sum();
        prop_assert_eq!(p.dim(), amb - oracle_rank(oracle_relations(&dims, &arrows)));
        prop_assert!(verify_coend(&p).all_pass());
    }

    #[test]
    fn composite_arrows_do_not_change_the_coend(
        (dims, arrows) in diagram(),
        pick in (0usize..3, 0usize..3),
    ) {
        prop_assume!(arrows.len() >= 2);
        let (f, g) = (&arrows[pick.0 % arrows.len()], &arrows[pick.1 % arrows.len()]);
        prop_assume!(f.1 == g.0);
        let d = build(&dims, &arrows);
        let gf = &d.arrows[pick.1 % arrows.len()].value * &d.arrows[pick.0 % arrows.len()].value;
        let mut with = d.clone();
        with.arrows.push(Arrow { source: f.0, target: g.1, value: gf });
        prop_assert_eq!(coend_coalgebra(&d).unwrap().dim(), coend_coalgebra(&with).unwrap().dim());
    }
}

#[test]
fn oracle_rank_sanity() {
    let one = BigInt::one();
    assert_eq!(oracle_rank(vec![vec![one.clone(), one.clone()], vec![one.clone(), one]]), 1);
}
