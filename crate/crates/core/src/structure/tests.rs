use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::fixtures::{cyclic_hopf, group_algebra, sweedler};
use crate::{CycScalar, Mat, Status};

fn all_fixtures() -> Vec<CrossedHopf> {
    vec![
        group_algebra(FiniteGroup::trivial()),
        group_algebra(FiniteGroup::cyclic(2)),
        group_algebra(FiniteGroup::cyclic(4)),
        group_algebra(FiniteGroup::symmetric3()),
        cyclic_hopf(3),
        sweedler(),
    ]
}

#[test]
fn every_fixture_verifies() {
    for h in all_fixtures() {
        let rep = verify_crossed_hopf(&h, &VerifyOptions::default()).unwrap();
        assert!(rep.all_pass(), "{rep}");
        assert_eq!(rep.status("antipode.conjugation"), Some(Status::Pass));
        let loose = verify_crossed_hopf(&h, &VerifyOptions { strict_phi_antipode: false }).unwrap();
        assert_eq!(loose.status("antipode.conjugation"), Some(Status::Skipped));
    }
}

#[test]
fn wrong_antipode_fails_on_order_three_element() {
    let mut h = group_algebra(FiniteGroup::symmetric3());
    let c = h.group.index_of("(123)").unwrap();
    h.antipode[c] = Mat::scalar(CycScalar::from_int(-1));
    let rep = verify_crossed_hopf(&h, &VerifyOptions::default()).unwrap();
    assert_eq!(rep.status("antipode.left"), Some(Status::Fail));
    assert!(rep.get("antipode.left").unwrap().witness.as_deref().unwrap().contains("(123)"));
}

#[test]
fn shape_errors_are_input_errors() {
    let mut h = sweedler();
    h.components[0].delta = Mat::zeros(2, 3);
    assert!(matches!(verify_crossed_hopf(&h, &VerifyOptions::default()), Err(StructureError::Shape { .. })));
}

#[test]
fn every_single_entry_mutation_is_caught() {
    for h in all_fixtures() {
        let mut mutants = Vec::new();
        let bump = |m: &Mat, k: usize| {
            let mut data = m.entries().to_vec();
            data[k] = &data[k] + &CycScalar::one();
            Mat::new(m.rows(), m.cols(), data).unwrap()
        };
        for a in 0..h.order() {
            for k in 0..h.delta(a).entries().len() {
                let mut x = h.clone();
                x.components[a].delta = bump(h.delta(a), k);
                mutants.push(x);
            }
            for k in 0..h.counit(a).entries().len() {
                let mut x = h.clone();
                x.components[a].counit = bump(h.counit(a), k);
                mutants.push(x);
            }
            for k in 0..h.s(a).entries().len() {
                let mut x = h.clone();
                x.antipode[a] = bump(h.s(a), k);
                mutants.push(x);
            }
        }
        for i in 0..h.mult.len() {
            for k in 0..h.mult[i].entries().len() {
                let mut x = h.clone();
                x.mult[i] = bump(&h.mult[i], k);
                mutants.push(x);
            }
            for k in 0..h.conj[i].entries().len() {
                let mut x = h.clone();
                x.conj[i] = bump(&h.conj[i], k);
                mutants.push(x);
            }
        }
        for k in 0..h.unit.rows() {
            let mut x = h.clone();
            x.unit = bump(&h.unit, k);
            mutants.push(x);
        }
        for x in mutants {
            let rep = verify_crossed_hopf(&x, &VerifyOptions::default()).unwrap();
            assert!(!rep.all_pass());
        }
    }
}

#[test]
fn group_algebra_antipode_is_involutive() {
    for name in ["kz4", "ks3"] {
        let h = if name == "kz4" {
            group_algebra(FiniteGroup::cyclic(4))
        } else {
            group_algebra(FiniteGroup::symmetric3())
        };
        for a in h.group.elements() {
            assert!((h.s(h.group.inv(a)) * h.s(a)).is_identity());
        }
    }
}

/// The group Hopf algebra `k[G]` built directly on the basis `G`.
fn direct_group_hopf(g: &FiniteGroup) -> PackedHopfAlgebra {
    let n = g.order();
    let mut mult = Mat::zeros(n, n * n);
    let mut delta = Mat::zeros(n * n, n);
    let mut antipode = Mat::zeros(n, n);
    let mut phi = vec![Mat::zeros(n, n); n];
    for a in 0..n {
        delta.set(a * n + a, a, CycScalar::one());
        antipode.set(g.inv(a), a, CycScalar::one());
        for b in 0..n {
            mult.set(g.mul(a, b), a * n + b, CycScalar::one());
            phi[b].set(g.conj(b, a), a, CycScalar::one());
        }
    }
    PackedHopfAlgebra {
        group: g.clone(),
        blocks: (0..n).collect(),
        mult,
        unit: Mat::unit_column(n, g.identity()),
        delta,
        counit: Mat::row(vec![CycScalar::one(); n]),
        antipode,
        phi,
    }
}

#[test]
fn packing_group_algebras_gives_group_hopf_algebras() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::symmetric3()] {
        let p = pack(&group_algebra(g.clone())).unwrap();
        assert_eq!(p, direct_group_hopf(&g));
        assert!(verify_packed(&p).unwrap().all_pass());
    }
}

#[test]
fn pack_unpack_roundtrip() {
    for h in all_fixtures() {
        let p = pack(&h).unwrap();
        assert!(verify_packed(&p).unwrap().all_pass());
        assert_eq!(unpack(&p).unwrap(), h);
        assert_eq!(pack(&unpack(&p).unwrap()).unwrap(), p);
    }
}

#[test]
fn unit_outside_identity_block_is_rejected() {
    let mut p = pack(&group_algebra(FiniteGroup::cyclic(2))).unwrap();
    p.unit = Mat::unit_column(2, 1);
    match unpack(&p) {
        Err(StructureError::Grading(v)) => assert!(v.iter().any(|x| x.condition == "unit")),
        other => panic!("expected grading error, got {other:?}"),
    }
    assert_eq!(verify_packed(&p).unwrap().status("grading.unit"), Some(Status::Fail));
}

#[test]
fn identity_antipode_in_packed_form() {
    let mut p = pack(&group_algebra(FiniteGroup::symmetric3())).unwrap();
    p.antipode = Mat::identity(6);
    let rep = verify_packed(&p).unwrap();
    assert_eq!(rep.status("hopf.antipode_left"), Some(Status::Fail));
    assert_eq!(rep.status("grading.antipode"), Some(Status::Fail));
    assert!(matches!(unpack(&p), Err(StructureError::Grading(_))));
}

#[test]
fn dualize_twice_is_identity() {
    for h in all_fixtures() {
        let d = dualize(&h).unwrap();
        assert_eq!(d.dualize(), h);
        let a = verify_crossed_hopf(&h, &VerifyOptions::default()).unwrap();
        assert_eq!(verify_dual(&d, &VerifyOptions::default()).unwrap(), a);
        for x in h.group.elements() {
            for y in h.group.elements() {
                assert_eq!(d.comult(x, y), &h.mu(x, y).transpose());
            }
        }
    }
}

#[test]
fn dual_conjugation_relabels_components() {
    let h = group_algebra(FiniteGroup::symmetric3());
    let d = dualize(&h).unwrap();
    let g = &h.group;
    for b in g.elements() {
        for a in g.elements() {
            let m = d.conj(b, a);
            assert_eq!(m.shape(), (h.dim(g.conj(b, a)), h.dim(a)));
        }
    }
}

#[test]
fn cosemisimplicity_verdicts() {
    let triv = is_cosemisimple(&group_algebra(FiniteGroup::cyclic(2)));
    assert!(triv.overall && triv.criteria_agree);
    let z3 = is_cosemisimple(&cyclic_hopf(3));
    assert!(z3.overall);
    // group-like basis: the dual algebra is k^3 with orthogonal idempotents
    assert_eq!(dual_trace_form(&cyclic_hopf(3), 0), Mat::identity(3));
    assert_eq!(z3.components[0].gram_det, CycScalar::one());
    let sw = is_cosemisimple(&sweedler());
    assert!(!sw.overall);
    assert!(sw.components[0].gram_det.is_zero());
    for h in all_fixtures() {
        assert!(is_cosemisimple(&h).criteria_agree);
    }
}
