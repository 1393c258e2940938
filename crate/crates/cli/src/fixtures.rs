//! Builders for the structure files shipped under `fixtures/`. The files on
//! disk are the serialized builders, which a test keeps in sync.

use crossed_hopf::center::induced_half_braiding;
use crossed_hopf::comod::{
    braiding_matrix, dual, hom_space, regular, tensor, twist_matrix, unit_object, Comodule, Family,
};
use crossed_hopf::fixtures::{group_algebra, kz2_symmetric, kz3_pointed, kz4_cobraiding, kz4_cotwist, sweedler};
use crossed_hopf::quasi::{Cobraiding, Cotwist};
use crossed_hopf::structure::{CrossedHopf, FiniteGroup};
use crossed_hopf::tannaka::{
    regular_presentation, Arrow, ConjWitness, DualWitness, FiniteDiagram, PresentedObject, TannakianPresentation,
};
use crossed_hopf::{CycScalar, Mat};

use crate::format::{
    DiagramBlock, FamilyBlock, HalfBraidingBlock, MorphismBlock, NamedComodule, SimplesBlock, StructureFile,
    TwistedBlock,
};

fn named(items: Vec<(String, Comodule)>) -> Vec<NamedComodule> {
    items.into_iter().map(|(name, comodule)| NamedComodule { name, comodule }).collect()
}

/// A family over the given comodules with a basis of every Hom space.
fn closed_family(h: &CrossedHopf, name: &str, comodules: &[NamedComodule]) -> FamilyBlock {
    let mut morphisms = Vec::new();
    for s in comodules {
        for t in comodules {
            for f in hom_space(h, &s.comodule, &t.comodule) {
                if s.name == t.name && f.is_identity() {
                    continue;
                }
                morphisms.push(MorphismBlock { source: s.name.clone(), target: t.name.clone(), matrix: f });
            }
        }
    }
    FamilyBlock { name: name.into(), objects: comodules.iter().map(|c| c.name.clone()).collect(), morphisms }
}

fn regulars(h: &CrossedHopf) -> Vec<NamedComodule> {
    named(h.group.elements().map(|a| (format!("R_{}", h.label(a)), regular(h, a))).collect())
}

/// `V_i` spanned by the `i`-th group-like of the identity component.
fn pointed_simples(h: &CrossedHopf) -> Vec<NamedComodule> {
    let e = h.group.identity();
    let d = h.dim(e);
    named((0..d).map(|i| (format!("V{i}"), Comodule { grade: e, coaction: Mat::unit_column(d, i) })).collect())
}

fn simples_block(h: &CrossedHopf, simples: &[NamedComodule]) -> SimplesBlock {
    let duals = simples
        .iter()
        .map(|s| {
            let d = dual(h, &s.comodule).expect("group-like duals exist").dual;
            simples.iter().find(|x| x.comodule == d).expect("closed under duals").name.clone()
        })
        .collect();
    SimplesBlock {
        objects: simples.iter().map(|s| s.name.clone()).collect(),
        duals,
        witnesses: simples.iter().map(|s| Mat::identity(s.comodule.dim())).collect(),
    }
}

fn core_family(fam: &FamilyBlock, comodules: &[NamedComodule]) -> Family {
    let find = |n: &str| comodules.iter().position(|c| c.name == n).unwrap();
    let objects = fam.objects.iter().map(|n| comodules[find(n)].comodule.clone()).collect();
    let mut f = Family::new(objects);
    let at = |n: &str| fam.objects.iter().position(|o| o == n).unwrap();
    f.morphisms = fam.morphisms.iter().map(|m| (at(&m.source), at(&m.target), m.matrix.clone())).collect();
    f
}

fn induced(
    h: &CrossedHopf,
    c: &Cobraiding,
    name: &str,
    object: &NamedComodule,
    fam: &FamilyBlock,
    comodules: &[NamedComodule],
) -> HalfBraidingBlock {
    let hb = induced_half_braiding(h, c, &object.comodule, &core_family(fam, comodules));
    HalfBraidingBlock { name: name.into(), object: object.name.clone(), family: fam.name.clone(), maps: hb.maps }
}

/// The trivial structure, which also carries the small coend examples.
pub fn trivial() -> StructureFile {
    let h = group_algebra(FiniteGroup::trivial());
    let (c, t) = (Cobraiding::trivial(&h), Cotwist::trivial(&h));
    let mut f = StructureFile::bare(1, h.clone());
    f.comodules = named(vec![("one".into(), unit_object(&h))]);
    f.families = vec![closed_family(&h, "unit", &f.comodules)];
    f.simples = Some(simples_block(&h, &f.comodules));
    let arrow = |source, target, value| Arrow { source, target, value };
    f.diagrams = vec![
        DiagramBlock { name: "bare".into(), diagram: FiniteDiagram { dims: vec![2], arrows: vec![] } },
        DiagramBlock {
            name: "sign".into(),
            diagram: FiniteDiagram { dims: vec![2], arrows: vec![arrow(0, 0, Mat::from_ints(&[&[1, 0], &[0, -1]]))] },
        },
        DiagramBlock {
            name: "joined".into(),
            diagram: FiniteDiagram { dims: vec![1, 1], arrows: vec![arrow(0, 1, Mat::identity(1))] },
        },
        DiagramBlock {
            name: "chain".into(),
            diagram: FiniteDiagram {
                dims: vec![2, 3, 2],
                arrows: vec![
                    arrow(0, 1, Mat::from_ints(&[&[1, 2], &[0, 1], &[3, 0]])),
                    arrow(1, 2, Mat::from_ints(&[&[1, 1, 0], &[0, 1, 1]])),
                ],
            },
        },
    ];
    f.presentation = Some(regular_presentation(&h, Some(&c), Some(&t)).expect("regular presentation"));
    f.half_braidings = vec![induced(&h, &c, "flip", &f.comodules[0].clone(), &f.families[0].clone(), &f.comodules)];
    f.twisted = vec![TwistedBlock { name: "trivial".into(), object: "one".into(), t: Mat::identity(1), dual: None }];
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// The canonical `k[Z/2]` with trivial cobraiding and cotwist.
pub fn trivial_z2() -> StructureFile {
    let h = group_algebra(FiniteGroup::cyclic(2));
    let (c, t) = (Cobraiding::trivial(&h), Cotwist::trivial(&h));
    let mut f = StructureFile::bare(1, h.clone());
    f.comodules = regulars(&h);
    f.families = vec![closed_family(&h, "regulars", &f.comodules)];
    f.presentation = Some(regular_presentation(&h, Some(&c), Some(&t)).expect("regular presentation"));
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// `k[Z/4]` with `gamma = i^{ab}` and `tau = i^{a^2}`.
pub fn kz4_bicharacter() -> StructureFile {
    let h = group_algebra(FiniteGroup::cyclic(4));
    let (c, t) = (kz4_cobraiding(&h), kz4_cotwist(&h));
    let mut f = StructureFile::bare(4, h.clone());
    f.comodules = regulars(&h);
    f.families = vec![closed_family(&h, "regulars", &f.comodules)];
    f.simples = Some(simples_block(&h, &f.comodules[..1]));
    f.presentation = Some(regular_presentation(&h, Some(&c), Some(&t)).expect("regular presentation"));
    let fam = f.families[0].clone();
    f.half_braidings = vec![induced(&h, &c, "braiding_R_1", &f.comodules[1].clone(), &fam, &f.comodules)];
    f.twisted = vec![
        TwistedBlock { name: "member".into(), object: "R_1".into(), t: Mat::scalar(CycScalar::zeta(4)), dual: None },
        TwistedBlock { name: "non_member".into(), object: "R_1".into(), t: Mat::identity(1), dual: None },
    ];
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// `kz4_bicharacter` with `gamma(a (x) a) = 2` and inverse `1/2`.
pub fn kz4_corrupt_gamma() -> StructureFile {
    let h = group_algebra(FiniteGroup::cyclic(4));
    let (mut c, t) = (kz4_cobraiding(&h), kz4_cotwist(&h));
    let k = h.order() + 1;
    c.gamma[k] = Mat::scalar(CycScalar::from_int(2));
    c.gamma_inv[k] = Mat::scalar(CycScalar::from_frac(1, 2));
    let mut f = StructureFile::bare(4, h);
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// `kz4_bicharacter` with `tau(a) = 0`, which has no convolution inverse.
pub fn kz4_corrupt_tau() -> StructureFile {
    let h = group_algebra(FiniteGroup::cyclic(4));
    let (c, mut t) = (kz4_cobraiding(&h), kz4_cotwist(&h));
    t.tau[1] = Mat::zeros(1, 1);
    t.tau_inv[1] = Mat::zeros(1, 1);
    let mut f = StructureFile::bare(4, h);
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// The presentation by the three group-like simples with transported
/// braiding and twist.
fn simples_presentation(
    h: &CrossedHopf,
    c: &Cobraiding,
    t: &Cotwist,
    simples: &[NamedComodule],
) -> TannakianPresentation {
    let objs: Vec<&Comodule> = simples.iter().map(|s| &s.comodule).collect();
    let find = |m: &Comodule| objs.iter().position(|o| **o == *m).expect("closed family");
    let tensor_table = objs.iter().flat_map(|a| objs.iter().map(|b| find(&tensor(h, a, b)))).collect();
    let duals = objs
        .iter()
        .map(|o| {
            let d = dual(h, o).expect("dual");
            DualWitness { object: find(&d.dual), eval: d.eval, coeval: d.coeval }
        })
        .collect();
    let n = objs.len();
    let braiding = objs.iter().flat_map(|u| objs.iter().map(|v| braiding_matrix(h, c, u, v))).collect();
    TannakianPresentation {
        group: h.group.clone(),
        objects: objs.iter().map(|o| PresentedObject { grade: o.grade, dim: o.dim() }).collect(),
        arrows: Vec::new(),
        tensor: tensor_table,
        unit: find(&unit_object(h)),
        duals,
        conj: (0..n).map(|u| ConjWitness { object: u, iso: Mat::identity(objs[u].dim()) }).collect(),
        braiding: Some(braiding),
        twist: Some(objs.iter().map(|o| twist_matrix(t, o)).collect()),
    }
}

/// The one-component `k[Z/3]` with `gamma = w^{ab}` and `tau = w^{a^2}`.
pub fn kz3_pointed_file() -> StructureFile {
    let (h, c, t) = kz3_pointed();
    let mut f = StructureFile::bare(3, h.clone());
    f.comodules = pointed_simples(&h);
    f.families = vec![closed_family(&h, "simples", &f.comodules)];
    f.simples = Some(simples_block(&h, &f.comodules));
    f.presentation = Some(simples_presentation(&h, &c, &t, &f.comodules));
    let w = |k: i64| Mat::scalar(CycScalar::zeta_pow(3, k));
    f.half_braidings = vec![
        HalfBraidingBlock {
            name: "omega".into(),
            object: "V1".into(),
            family: "simples".into(),
            maps: vec![w(0), w(1), w(2)],
        },
        HalfBraidingBlock {
            name: "broken".into(),
            object: "V1".into(),
            family: "simples".into(),
            maps: vec![w(0), w(1), w(0)],
        },
    ];
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// The one-component `k[Z/2]` with `gamma = (-1)^{ab}`: symmetric, not modular.
pub fn kz2_symmetric_file() -> StructureFile {
    let (h, c, t) = kz2_symmetric();
    let mut f = StructureFile::bare(1, h.clone());
    f.comodules = pointed_simples(&h);
    f.families = vec![closed_family(&h, "simples", &f.comodules)];
    f.simples = Some(simples_block(&h, &f.comodules));
    f.presentation = Some(simples_presentation(&h, &c, &t, &f.comodules));
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// The canonical `k[S_3]` with trivial cobraiding and cotwist.
pub fn ks3() -> StructureFile {
    let h = group_algebra(FiniteGroup::symmetric3());
    let (c, t) = (Cobraiding::trivial(&h), Cotwist::trivial(&h));
    let mut f = StructureFile::bare(1, h.clone());
    f.comodules = regulars(&h);
    f.families = vec![closed_family(&h, "regulars", &f.comodules)];
    f.presentation = Some(regular_presentation(&h, Some(&c), Some(&t)).expect("regular presentation"));
    let fam = f.families[0].clone();
    f.half_braidings = vec![induced(&h, &c, "braiding_R_(12)", &f.comodules[1].clone(), &fam, &f.comodules)];
    f.cobraiding = Some(c);
    f.cotwist = Some(t);
    f
}

/// `k[S_3]` with `S_(123) = -1`, which breaks the antipode axiom.
pub fn ks3_mutated_antipode() -> StructureFile {
    let mut h = group_algebra(FiniteGroup::symmetric3());
    let a = h.group.index_of("(123)").expect("label");
    h.antipode[a] = Mat::scalar(CycScalar::from_int(-1));
    StructureFile::bare(1, h)
}

/// Sweedler's four-dimensional algebra over the trivial group.
pub fn sweedler_file() -> StructureFile {
    let h = sweedler();
    let mut f = StructureFile::bare(1, h.clone());
    f.comodules = named(vec![("regular".into(), regular(&h, 0)), ("one".into(), unit_object(&h))]);
    f.families = vec![closed_family(&h, "regular", &f.comodules)];
    f
}

/// Every shipped fixture by file stem.
pub fn shipped() -> Vec<(&'static str, StructureFile)> {
    vec![
        ("trivial", trivial()),
        ("trivial_z2", trivial_z2()),
        ("kz4_bicharacter", kz4_bicharacter()),
        ("kz4_corrupt_gamma", kz4_corrupt_gamma()),
        ("kz4_corrupt_tau", kz4_corrupt_tau()),
        ("kz3_pointed", kz3_pointed_file()),
        ("kz2_symmetric", kz2_symmetric_file()),
        ("ks3", ks3()),
        ("ks3_mutated_antipode", ks3_mutated_antipode()),
        ("sweedler", sweedler_file()),
    ]
}
