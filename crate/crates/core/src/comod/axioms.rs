use alloc::format;
use alloc::vec::Vec;

use super::{braiding_matrix, conjugate, dual, is_colinear, tensor, twist_matrix, unit_object, Comodule};
use crate::quasi::{Cobraiding, Cotwist};
use crate::report::Report;
use crate::structure::CrossedHopf;
use crate::Mat;

/// A family of maps `c_{U,V}: U (x) V -> Phi_|U|(V) (x) U`; `None` when the
/// pair is outside the family, which makes the affected checks skip.
pub trait BraidingFamily {
    fn braid(&self, h: &CrossedHopf, u: &Comodule, v: &Comodule) -> Option<Mat>;
}

/// A family of maps `theta_U: U -> Phi_|U|(U)`.
pub trait TwistFamily {
    fn twist(&self, h: &CrossedHopf, u: &Comodule) -> Option<Mat>;
}

impl BraidingFamily for Cobraiding {
    fn braid(&self, h: &CrossedHopf, u: &Comodule, v: &Comodule) -> Option<Mat> {
        Some(braiding_matrix(h, self, u, v))
    }
}

impl TwistFamily for Cotwist {
    fn twist(&self, _: &CrossedHopf, u: &Comodule) -> Option<Mat> {
        Some(twist_matrix(self, u))
    }
}

/// Braiding maps given pair by pair.
#[derive(Clone, Debug, Default)]
pub struct TabulatedBraiding {
    pub entries: Vec<(Comodule, Comodule, Mat)>,
}

impl BraidingFamily for TabulatedBraiding {
    fn braid(&self, _: &CrossedHopf, u: &Comodule, v: &Comodule) -> Option<Mat> {
        self.entries.iter().find(|(a, b, _)| a == u && b == v).map(|e| e.2.clone())
    }
}

/// Twist maps given object by object.
#[derive(Clone, Debug, Default)]
pub struct TabulatedTwist {
    pub entries: Vec<(Comodule, Mat)>,
}

impl TwistFamily for TabulatedTwist {
    fn twist(&self, _: &CrossedHopf, u: &Comodule) -> Option<Mat> {
        self.entries.iter().find(|(a, _)| a == u).map(|e| e.1.clone())
    }
}

/// Test objects and colinear maps `(source index, target index, matrix)`
/// between them, over which the axioms are quantified.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Family {
    pub objects: Vec<Comodule>,
    pub morphisms: Vec<(usize, usize, Mat)>,
}

impl Family {
    pub fn new(objects: Vec<Comodule>) -> Family {
        Family { objects, morphisms: Vec::new() }
    }

    /// Given morphisms followed by the identity of every object.
    fn morphisms_with_identities(&self) -> Vec<(usize, usize, Mat)> {
        let mut all = self.morphisms.clone();
        all.extend(self.objects.iter().enumerate().map(|(i, o)| (i, i, Mat::identity(o.dim()))));
        all
    }
}

fn skip_note(what: &str, i: usize, j: usize) -> alloc::string::String {
    format!("no {what} for objects ({i}, {j})")
}

/// Colinearity, invertibility, naturality, both tensor rules and invariance
/// under the conjugation functors.
pub fn verify_braiding_axioms(h: &CrossedHopf, fam: &Family, c: &dyn BraidingFamily) -> Report {
    let mut r = Report::new();
    let obj = &fam.objects;
    let n = obj.len();
    let braid = |u: &Comodule, v: &Comodule| c.braid(h, u, v);

    for i in 0..n {
        for j in 0..n {
            let (u, v) = (&obj[i], &obj[j]);
            let Some(cuv) = braid(u, v) else {
                r.skip("braiding.colinear", skip_note("braiding", i, j));
                r.skip("braiding.invertible", skip_note("braiding", i, j));
                continue;
            };
            let src = tensor(h, u, v);
            let tgt = tensor(h, &conjugate(h, v, u.grade), u);
            r.record("braiding.colinear", is_colinear(h, &src, &tgt, &cuv), || format!("objects ({i}, {j})"));
            r.record("braiding.invertible", cuv.is_invertible(), || format!("objects ({i}, {j})"));
            for b in h.group.elements() {
                match braid(&conjugate(h, u, b), &conjugate(h, v, b)) {
                    Some(cc) => r.compare("braiding.conjugation", &cc, &cuv, || {
                        format!("objects ({i}, {j}) conjugated by {}", h.label(b))
                    }),
                    None => r.skip("braiding.conjugation", skip_note("conjugated braiding", i, j)),
                }
            }
        }
    }

    let maps = fam.morphisms_with_identities();
    for (x, (us, ut, f)) in maps.iter().enumerate() {
        for (y, (vs, vt, g)) in maps.iter().enumerate() {
            let (Some(c_src), Some(c_tgt)) = (braid(&obj[*us], &obj[*vs]), braid(&obj[*ut], &obj[*vt])) else {
                r.skip("braiding.naturality", format!("no braiding for morphisms ({x}, {y})"));
                continue;
            };
            r.compare("braiding.naturality", &(&g.kron(f) * &c_src), &(&c_tgt * &f.kron(g)), || {
                format!("morphisms ({x}, {y})")
            });
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (u, v, w) = (&obj[i], &obj[j], &obj[k]);
                let at = || format!("objects ({i}, {j}, {k})");
                let left = (braid(&tensor(h, u, v), w), braid(u, &conjugate(h, w, v.grade)), braid(v, w));
                match left {
                    (Some(whole), Some(cu), Some(cv)) => {
                        let iu = Mat::identity(u.dim());
                        let iv = Mat::identity(v.dim());
                        r.compare("braiding.tensor_left", &whole, &(&cu.kron(&iv) * &iu.kron(&cv)), at);
                    }
                    _ => r.skip("braiding.tensor_left", at()),
                }
                let right = (braid(u, &tensor(h, v, w)), braid(u, w), braid(u, v));
                match right {
                    (Some(whole), Some(cw), Some(cv)) => {
                        let iv = Mat::identity(v.dim());
                        let iw = Mat::identity(w.dim());
                        r.compare("braiding.tensor_right", &whole, &(&iv.kron(&cw) * &cv.kron(&iw)), at);
                    }
                    _ => r.skip("braiding.tensor_right", at()),
                }
            }
        }
    }
    r
}

/// Colinearity, invertibility, naturality, the product rule against the
/// braiding, invariance under conjugation and triviality on the unit.
pub fn verify_twist_axioms(h: &CrossedHopf, fam: &Family, c: &dyn BraidingFamily, t: &dyn TwistFamily) -> Report {
    let mut r = Report::new();
    let obj = &fam.objects;
    let n = obj.len();
    let theta = |u: &Comodule| t.twist(h, u);

    match theta(&unit_object(h)) {
        Some(th) => r.record("twist.unit", th.is_identity(), || "twist of the unit object".into()),
        None => r.skip("twist.unit", "no twist for the unit object"),
    }

    for (i, u) in obj.iter().enumerate() {
        let Some(th) = theta(u) else {
            r.skip("twist.colinear", format!("no twist for object {i}"));
            continue;
        };
        let tgt = conjugate(h, u, u.grade);
        r.record("twist.colinear", is_colinear(h, u, &tgt, &th), || format!("object {i}"));
        r.record("twist.invertible", th.is_invertible(), || format!("object {i}"));
        for b in h.group.elements() {
            match theta(&conjugate(h, u, b)) {
                Some(tc) => {
                    r.compare("twist.conjugation", &tc, &th, || format!("object {i} conjugated by {}", h.label(b)))
                }
                None => r.skip("twist.conjugation", format!("no conjugated twist for object {i}")),
            }
        }
    }

    for (x, (s, tg, f)) in fam.morphisms.iter().enumerate() {
        match (theta(&obj[*s]), theta(&obj[*tg])) {
            (Some(ts), Some(tt)) => r.compare("twist.naturality", &(f * &ts), &(&tt * f), || format!("morphism {x}")),
            _ => r.skip("twist.naturality", format!("no twist for morphism {x}")),
        }
    }

    for i in 0..n {
        for j in 0..n {
            let (u, v) = (&obj[i], &obj[j]);
            let (a, b) = (u.grade, v.grade);
            let au = conjugate(h, u, a);
            let bv = conjugate(h, v, b);
            let x = conjugate(h, &bv, a);
            let parts = (theta(&tensor(h, u, v)), theta(u), theta(v), c.braid(h, &au, &bv), c.braid(h, &x, &au));
            let at = || format!("objects ({i}, {j})");
            match parts {
                (Some(whole), Some(tu), Some(tv), Some(c1), Some(c2)) => {
                    r.compare("twist.tensor", &whole, &(&(&c2 * &c1) * &tu.kron(&tv)), at)
                }
                _ => r.skip("twist.tensor", at()),
            }
        }
    }
    r
}

/// Tortility `(I (x) theta_{(^U U)*}) b_{^U U} = (theta_U (x) I) b_U` and
/// compatibility of duals with the conjugation functors.
pub fn verify_tortility(h: &CrossedHopf, fam: &Family, t: &dyn TwistFamily) -> Report {
    let mut r = Report::new();
    for (i, u) in fam.objects.iter().enumerate() {
        let at = || format!("object {i}");
        let (Ok(du), Ok(dcu)) = (dual(h, u), dual(h, &conjugate(h, u, u.grade))) else {
            r.fail("tortility", format!("object {i} has no dual"));
            continue;
        };
        for b in h.group.elements() {
            match dual(h, &conjugate(h, u, b)) {
                Ok(d) => {
                    r.compare("duality.conjugation", &d.dual.coaction, &conjugate(h, &du.dual, b).coaction, || {
                        format!("object {i} conjugated by {}", h.label(b))
                    })
                }
                Err(_) => r.fail("duality.conjugation", format!("object {i} conjugated by {}", h.label(b))),
            }
        }
        match (t.twist(h, u), t.twist(h, &dcu.dual)) {
            (Some(tu), Some(td)) => {
                let m = u.dim();
                let lhs = &Mat::identity(m).kron(&td) * &dcu.coeval;
                let rhs = &tu.kron(&Mat::identity(m)) * &du.coeval;
                r.compare("tortility", &lhs, &rhs, at);
            }
            _ => r.skip("tortility", at()),
        }
    }
    r
}
