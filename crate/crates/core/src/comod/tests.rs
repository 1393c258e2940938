use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::fixtures::{group_algebra, kz3_pointed, kz4_cobraiding, kz4_cotwist, sweedler};
use crate::report::Status;
use crate::structure::FiniteGroup;
use crate::CycScalar;

fn kz4() -> (CrossedHopf, Cobraiding, Cotwist) {
    let h = group_algebra(FiniteGroup::cyclic(4));
    let c = kz4_cobraiding(&h);
    let t = kz4_cotwist(&h);
    (h, c, t)
}

/// Regular comodules, their duals and the unit.
fn test_family(h: &CrossedHopf) -> Family {
    let mut objects: Vec<Comodule> = h.group.elements().map(|a| regular(h, a)).collect();
    let duals: Vec<Comodule> = objects.iter().map(|o| dual(h, o).unwrap().dual).collect();
    objects.extend(duals);
    objects.push(unit_object(h));
    Family::new(objects)
}

#[test]
fn regular_and_derived_comodules_are_comodules() {
    for h in [group_algebra(FiniteGroup::symmetric3()), sweedler(), kz3_pointed().0] {
        for a in h.group.elements() {
            let m = regular(&h, a);
            assert!(verify_comodule(&h, &m).all_pass());
            assert!(verify_comodule(&h, &dual(&h, &m).unwrap().dual).all_pass());
            for b in h.group.elements() {
                assert!(verify_comodule(&h, &conjugate(&h, &m, b)).all_pass());
                assert!(verify_comodule(&h, &tensor(&h, &m, &regular(&h, b))).all_pass());
                hat_phi(&h, a, b).unwrap();
            }
        }
        assert!(verify_comodule(&h, &unit_object(&h)).all_pass());
    }
}

#[test]
fn sweedler_regular_comodule_has_four_dimensional_endomorphisms() {
    let h = sweedler();
    let m = regular(&h, 0);
    assert_eq!(hom_space(&h, &m, &m).len(), 4);
    let d = dual(&h, &m).unwrap();
    assert_eq!(d.dual.dim(), 4);
    // the dual of the dual has the coaction twisted by S^2, which is not the identity
    let dd = dual(&h, &d.dual).unwrap().dual;
    assert_ne!(dd.coaction, m.coaction);
}

#[test]
fn hom_space_between_group_like_comodules() {
    let (h, _, _) = kz3_pointed();
    let reg = regular(&h, 0);
    assert_eq!(hom_space(&h, &reg, &reg).len(), 3);
    let one = unit_object(&h);
    assert_eq!(hom_space(&h, &one, &reg).len(), 1);
    let sum = direct_sum(&h, &reg, &one).unwrap();
    assert_eq!(hom_space(&h, &sum, &sum).len(), 3 + 1 + 1 + 1);
}

#[test]
fn morphism_constructor_rejects_non_colinear_maps() {
    let (h, _, _) = kz3_pointed();
    let reg = regular(&h, 0);
    let swap01 = Mat::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    assert!(matches!(ComoduleMorphism::new(&h, reg.clone(), reg.clone(), swap01), Err(ComodError::NotColinear(_))));
    let proj = Mat::from_ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    ComoduleMorphism::new(&h, reg.clone(), reg, proj).unwrap();
}

#[test]
fn cobraiding_and_cotwist_give_braided_twisted_family() {
    let (h, c, t) = kz4();
    let fam = test_family(&h);
    let br = verify_braiding_axioms(&h, &fam, &c);
    assert!(br.all_pass(), "{br}");
    assert_eq!(br.status("braiding.tensor_left"), Some(Status::Pass));
    let tw = verify_twist_axioms(&h, &fam, &c, &t);
    assert!(tw.all_pass(), "{tw}");
    let tor = verify_tortility(&h, &fam, &t);
    assert!(tor.all_pass(), "{tor}");
}

#[test]
fn pointed_cyclic_structure_with_morphisms() {
    let (h, c, t) = kz3_pointed();
    let reg = regular(&h, 0);
    let mut fam = Family::new(vec![reg.clone(), unit_object(&h), dual(&h, &reg).unwrap().dual]);
    for f in hom_space(&h, &reg, &reg) {
        fam.morphisms.push((0, 0, f));
    }
    for f in hom_space(&h, &fam.objects[1], &reg) {
        fam.morphisms.push((1, 0, f));
    }
    assert!(verify_braiding_axioms(&h, &fam, &c).all_pass());
    assert!(verify_twist_axioms(&h, &fam, &c, &t).all_pass());
    assert!(verify_tortility(&h, &fam, &t).all_pass());
}

#[test]
fn extraction_roundtrips() {
    let (h, c, t) = kz4();
    let back = extract_cobraiding(&h, &regular_braidings(&h, &c)).unwrap();
    assert_eq!(back, c);
    let back = extract_cotwist(&h, &regular_twists(&h, &t)).unwrap();
    assert_eq!(back, t);
    let (h, c, t) = kz3_pointed();
    assert_eq!(extract_cobraiding(&h, &regular_braidings(&h, &c)).unwrap(), c);
    assert_eq!(extract_cotwist(&h, &regular_twists(&h, &t)).unwrap(), t);
}

fn flip_tau(h: &CrossedHopf, t: &Cotwist, grades: &[usize]) -> Cotwist {
    Cotwist::from_fn(h, |a, i| {
        let v = t.tau[a].get(0, i).clone();
        if grades.contains(&a) {
            -v
        } else {
            v
        }
    })
    .unwrap()
}

#[test]
fn sign_flips_of_the_twist() {
    let (h, c, t) = kz4();
    let fam = test_family(&h);
    let even = flip_tau(&h, &t, &[2]);
    let r = verify_twist_axioms(&h, &fam, &c, &even);
    assert_eq!(r.status("twist.tensor"), Some(Status::Fail));
    assert_eq!(r.status("twist.colinear"), Some(Status::Pass));
    // multiplying by the sign character of Z/4 keeps every axiom
    let odd = flip_tau(&h, &t, &[1, 3]);
    assert!(verify_twist_axioms(&h, &fam, &c, &odd).all_pass());
}

#[test]
fn flip_is_not_colinear_for_a_noncommutative_algebra() {
    let h = sweedler();
    let c = Cobraiding::trivial(&h);
    let fam = Family::new(vec![regular(&h, 0)]);
    let r = verify_braiding_axioms(&h, &fam, &c);
    assert_eq!(r.status("braiding.colinear"), Some(Status::Fail));
}

#[test]
fn tabulated_families_skip_missing_pairs() {
    let (h, c, t) = kz4();
    let reg: Vec<Comodule> = h.group.elements().map(|a| regular(&h, a)).collect();
    let tab = TabulatedBraiding {
        entries: vec![(reg[1].clone(), reg[1].clone(), braiding_matrix(&h, &c, &reg[1], &reg[1]))],
    };
    let fam = Family::new(vec![reg[1].clone()]);
    let r = verify_braiding_axioms(&h, &fam, &tab);
    assert_eq!(r.status("braiding.colinear"), Some(Status::Pass));
    assert_eq!(r.status("braiding.tensor_left"), Some(Status::Skipped));
    let tw = TabulatedTwist { entries: vec![(reg[1].clone(), twist_matrix(&t, &reg[1]))] };
    let r = verify_twist_axioms(&h, &fam, &c, &tw);
    assert_eq!(r.status("twist.colinear"), Some(Status::Pass));
    assert_eq!(r.status("twist.unit"), Some(Status::Skipped));
    assert!(r.all_pass());
}

#[test]
fn braiding_is_scalar_on_group_algebra() {
    let (h, c, _) = kz4();
    let m = braiding_matrix(&h, &c, &regular(&h, 1), &regular(&h, 3));
    assert_eq!(m, Mat::scalar(CycScalar::zeta_pow(4, 3)));
}
