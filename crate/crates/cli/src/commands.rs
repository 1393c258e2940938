//! One function per subcommand, each turning a structure file into an
//! [`Outcome`]. Missing inputs are usage errors; failing identities are
//! reported as failed checks.

use std::fmt;

use crossed_hopf::center::{
    in_solution_span, induced_half_braiding, natural_solution_space, ribbon_membership, standard_dual, tensor_pairs,
    verify_half_braiding, BalancedDual, BalancedObject, HalfBraidingCandidate,
};
use crossed_hopf::comod::{
    extract_cobraiding, extract_cotwist, regular, regular_braidings, regular_twists, unit_object,
    verify_braiding_axioms, verify_comodule, verify_tortility, verify_twist_axioms, Comodule, Family,
};
use crossed_hopf::quasi::{verify_cobraiding, verify_cotwist, Cobraiding, Cotwist};
use crossed_hopf::structure::{
    dualize, is_cosemisimple, pack_unchecked, unpack, verify_crossed_hopf, verify_dual, verify_packed, CrossedHopf,
    PackedHopfAlgebra, VerifyOptions,
};
use crossed_hopf::tannaka::{
    coend_coalgebra, grouplike_matching, pairing_check, reconstruct, regular_presentation, verify_coend,
    verify_isomorphism, TannakaError,
};
use crossed_hopf::trace::{is_modular, qdim, qtrace_coordinates, qtrace_of, s_matrix, SimpleFamily};
use crossed_hopf::{Mat, Status};
use serde_json::{json, Value};

use crate::format::{matrix_json, StructureFile};
use crate::output::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Verify,
    Pack,
    Unpack,
    Dual,
    Cosemisimple,
    BraidingCheck,
    TwistCheck,
    Qtrace,
    Smatrix,
    Modular,
    Coend,
    Reconstruct,
    Center,
    RibbonCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Pack => "pack",
            Command::Unpack => "unpack",
            Command::Dual => "dual",
            Command::Cosemisimple => "cosemisimple",
            Command::BraidingCheck => "braiding-check",
            Command::TwistCheck => "twist-check",
            Command::Qtrace => "qtrace",
            Command::Smatrix => "smatrix",
            Command::Modular => "modular",
            Command::Coend => "coend",
            Command::Reconstruct => "reconstruct",
            Command::Center => "center",
            Command::RibbonCheck => "ribbon-check",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub strict_phi_antipode: bool,
    pub family: Option<String>,
}

/// Input that cannot be evaluated; maps to exit code 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input(e: impl fmt::Display) -> InputError {
    InputError(e.to_string())
}

type Res<T> = Result<T, InputError>;

pub fn run_command(cmd: Command, file: &StructureFile, opts: &Options) -> Res<Outcome> {
    let mut out = Outcome::new(cmd.name());
    let vo = VerifyOptions { strict_phi_antipode: opts.strict_phi_antipode };
    match cmd {
        Command::Verify => verify(file, &vo, &mut out)?,
        Command::Pack => pack_cmd(file, &vo, &mut out)?,
        Command::Unpack => unpack_cmd(file, &vo, &mut out)?,
        Command::Dual => dual_cmd(file, &vo, &mut out)?,
        Command::Cosemisimple => cosemisimple(file, &mut out),
        Command::BraidingCheck => braiding_check(file, opts, &mut out)?,
        Command::TwistCheck => twist_check(file, opts, &mut out)?,
        Command::Qtrace => qtrace_cmd(file, opts, &mut out)?,
        Command::Smatrix => smatrix(file, &mut out)?,
        Command::Modular => modular(file, &mut out)?,
        Command::Coend => coend(file, &mut out)?,
        Command::Reconstruct => reconstruct_cmd(file, &mut out)?,
        Command::Center => center(file, opts, &mut out)?,
        Command::RibbonCheck => ribbon_check(file, &mut out)?,
    }
    Ok(out)
}

fn need_cobraiding<'a>(file: &'a StructureFile, cmd: &str) -> Res<&'a Cobraiding> {
    file.cobraiding.as_ref().ok_or_else(|| InputError(format!("`{cmd}` needs a `cobraiding` block")))
}

fn need_pair<'a>(file: &'a StructureFile, cmd: &str) -> Res<(&'a Cobraiding, &'a Cotwist)> {
    let c = need_cobraiding(file, cmd)?;
    let t = file.cotwist.as_ref().ok_or_else(|| InputError(format!("`{cmd}` needs a `cotwist` block")))?;
    Ok((c, t))
}

/// Named test objects: the requested or first declared family, else every
/// regular comodule followed by the unit.
fn select_family(file: &StructureFile, opts: &Options) -> Res<(Vec<String>, Family)> {
    let h = &file.hopf;
    let block = match &opts.family {
        Some(name) => Some(file.family(name).ok_or_else(|| InputError(format!("unknown family `{name}`")))?),
        None => file.families.first(),
    };
    match block {
        Some(b) => Ok((b.objects.clone(), core_family(file, &b.name)?)),
        None => {
            let mut names: Vec<String> = h.group.elements().map(|a| format!("R_{}", h.label(a))).collect();
            let mut objects: Vec<Comodule> = h.group.elements().map(|a| regular(h, a)).collect();
            names.push("unit".into());
            objects.push(unit_object(h));
            Ok((names, Family::new(objects)))
        }
    }
}

fn core_family(file: &StructureFile, name: &str) -> Res<Family> {
    let b = file.family(name).ok_or_else(|| InputError(format!("unknown family `{name}`")))?;
    let objects = b
        .objects
        .iter()
        .map(|n| file.comodule(n).cloned().ok_or_else(|| InputError(format!("unknown comodule `{n}`"))))
        .collect::<Res<Vec<_>>>()?;
    let at = |n: &str| {
        b.objects.iter().position(|o| o == n).ok_or_else(|| InputError(format!("`{n}` is not in family `{name}`")))
    };
    let mut fam = Family::new(objects);
    for m in &b.morphisms {
        fam.morphisms.push((at(&m.source)?, at(&m.target)?, m.matrix.clone()));
    }
    Ok(fam)
}

fn verify(file: &StructureFile, vo: &VerifyOptions, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    out.report.merge("", verify_crossed_hopf(h, vo).map_err(input)?);
    for c in &file.comodules {
        out.report.merge(&c.name, verify_comodule(h, &c.comodule));
    }
    if let Some(c) = &file.cobraiding {
        out.report.merge("", verify_cobraiding(h, c).map_err(input)?);
        if let Some(t) = &file.cotwist {
            out.report.merge("", verify_cotwist(h, c, t).map_err(input)?);
        }
    }
    out.result("group_order", json!(h.order()));
    out.result("component_dims", json!(h.group.elements().map(|a| h.dim(a)).collect::<Vec<_>>()));
    out.result("total_dim", json!(h.total_dim()));
    Ok(())
}

/// Packing is only meaningful for a valid structure; invalid input reports
/// its failed axioms instead.
fn verified_pack(file: &StructureFile, vo: &VerifyOptions, out: &mut Outcome) -> Res<Option<PackedHopfAlgebra>> {
    let r = verify_crossed_hopf(&file.hopf, vo).map_err(input)?;
    if !r.all_pass() {
        out.report.merge("", r);
        return Ok(None);
    }
    Ok(Some(pack_unchecked(&file.hopf)))
}

fn pack_cmd(file: &StructureFile, vo: &VerifyOptions, out: &mut Outcome) -> Res<()> {
    let Some(p) = verified_pack(file, vo, out)? else {
        return Ok(());
    };
    out.report.merge("", verify_packed(&p).map_err(input)?);
    out.result("dim", json!(p.dim()));
    let blocks: Vec<Value> = file.hopf.group.elements().map(|a| json!(p.block(a))).collect();
    out.result("blocks", Value::Array(blocks));
    Ok(())
}

fn unpack_cmd(file: &StructureFile, vo: &VerifyOptions, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let Some(p) = verified_pack(file, vo, out)? else {
        return Ok(());
    };
    let back = unpack(&p).map_err(input)?;
    out.report.record("unpack.roundtrip", back == *h, || "unpacked structure differs from the input".into());
    out.report.record("unpack.repack", pack_unchecked(&back) == p, || "repacked algebra differs".into());
    out.result("dim", json!(p.dim()));
    Ok(())
}

fn dual_cmd(file: &StructureFile, vo: &VerifyOptions, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let d = dualize(h).map_err(input)?;
    out.report.merge("", verify_dual(&d, vo).map_err(input)?);
    out.report.record("dual.involutive", d.dualize() == *h, || "dualizing twice changes the structure".into());
    Ok(())
}

fn cosemisimple(file: &StructureFile, out: &mut Outcome) {
    let h = &file.hopf;
    let v = is_cosemisimple(h);
    for c in &v.components {
        out.report.record("cosemisimple.component", c.cosemisimple, || {
            format!("component {}: trace form determinant {}", h.label(c.component), c.gram_det)
        });
        out.result(format!("gram_det.{}", h.label(c.component)), json!(c.gram_det.to_string()));
    }
    out.report.record("cosemisimple.criteria_agree", v.criteria_agree, || {
        "the unit-component test disagrees with the full test".into()
    });
    out.result("cosemisimple", json!(v.overall));
}

fn braiding_check(file: &StructureFile, opts: &Options, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let c = need_cobraiding(file, "braiding-check")?;
    let (names, fam) = select_family(file, opts)?;
    out.report.merge("", verify_braiding_axioms(h, &fam, c));
    let regs = regular_braidings(h, c);
    match extract_cobraiding(h, &regs) {
        Ok(back) => {
            out.report.record("braiding.extract_roundtrip", back == *c, || "extracted cobraiding differs".into());
            let rebuilt = regular_braidings(h, &back);
            out.report.record("braiding.rebuild_roundtrip", rebuilt == regs, || "rebuilt braidings differ".into());
        }
        Err(e) => out.report.fail("braiding.extract_roundtrip", e.to_string()),
    }
    out.result("family", json!(names));
    Ok(())
}

fn twist_check(file: &StructureFile, opts: &Options, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let (c, t) = need_pair(file, "twist-check")?;
    let (names, fam) = select_family(file, opts)?;
    out.report.merge("", verify_twist_axioms(h, &fam, c, t));
    out.report.merge("", verify_tortility(h, &fam, t));
    match extract_cotwist(h, &regular_twists(h, t)) {
        Ok(back) => out.report.record("twist.extract_roundtrip", back == *t, || "extracted cotwist differs".into()),
        Err(e) => out.report.fail("twist.extract_roundtrip", e.to_string()),
    }
    out.result("family", json!(names));
    Ok(())
}

fn squared_antipode_is_identity(h: &CrossedHopf) -> bool {
    let e = h.group.identity();
    (h.s(e) * h.s(e)).is_identity()
}

fn qtrace_cmd(file: &StructureFile, opts: &Options, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let (c, t) = need_pair(file, "qtrace")?;
    let (names, fam) = select_family(file, opts)?;
    let e = h.group.identity();
    let s2 = squared_antipode_is_identity(h);
    for (name, u) in names.iter().zip(&fam.objects) {
        if u.grade != e {
            out.report.skip("qtrace.defined", format!("`{name}` is not at the identity grade"));
            continue;
        }
        let d = qdim(h, c, t, u).map_err(input)?;
        out.report.pass("qtrace.defined");
        out.result(format!("qdim.{name}"), json!(d.to_string()));
        if !s2 {
            out.report.skip("qtrace.coordinates_agree", "the squared antipode is not the identity");
            continue;
        }
        let id = Mat::identity(u.dim());
        let direct = qtrace_of(h, c, t, u, &id).map_err(input)?;
        let coords = qtrace_coordinates(h, c, t, u, &id).map_err(input)?;
        out.report.record("qtrace.coordinates_agree", direct == coords, || format!("`{name}`: {direct} vs {coords}"));
    }
    Ok(())
}

fn simple_family(file: &StructureFile) -> Res<(Vec<String>, SimpleFamily)> {
    let s = file.simples.as_ref().ok_or_else(|| InputError("this command needs a `simples` block".into()))?;
    let objects = s
        .objects
        .iter()
        .map(|n| file.comodule(n).cloned().ok_or_else(|| InputError(format!("unknown comodule `{n}`"))))
        .collect::<Res<Vec<_>>>()?;
    let dual_index = s
        .duals
        .iter()
        .map(|n| {
            s.objects
                .iter()
                .position(|o| o == n)
                .ok_or_else(|| InputError(format!("dual `{n}` is not a listed simple")))
        })
        .collect::<Res<Vec<_>>>()?;
    let fam = SimpleFamily::new(&file.hopf, objects, dual_index, s.witnesses.clone()).map_err(input)?;
    Ok((s.objects.clone(), fam))
}

fn smatrix(file: &StructureFile, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let (c, t) = need_pair(file, "smatrix")?;
    let (names, fam) = simple_family(file)?;
    let s = s_matrix(h, c, t, &fam).map_err(input)?;
    let n = fam.len();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (fam.dual_index[j], fam.dual_index[i]);
            out.report.record("smatrix.symmetry", s.get(i, j) == s.get(a, b), || {
                format!("s({i},{j}) differs from s({a},{b})")
            });
        }
    }
    let det = s.det().map_err(input)?;
    out.result("simples", json!(names));
    out.result("s", matrix_json(&s));
    out.result("det", json!(det.to_string()));
    Ok(())
}

fn modular(file: &StructureFile, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let (c, t) = need_pair(file, "modular")?;
    let (names, fam) = simple_family(file)?;
    let v = is_modular(h, c, t, &fam).map_err(input)?;
    out.report.merge("", v.report);
    out.result("simples", json!(names));
    out.result("s", matrix_json(&v.s));
    out.result("det", json!(v.det.to_string()));
    out.result("qdims", json!(v.qdims.iter().map(|d| d.to_string()).collect::<Vec<_>>()));
    Ok(())
}

fn coend(file: &StructureFile, out: &mut Outcome) -> Res<()> {
    if file.diagrams.is_empty() {
        out.report.skip("coend.diagrams", "no diagrams declared");
    }
    for d in &file.diagrams {
        let p = coend_coalgebra(&d.diagram).map_err(input)?;
        out.report.merge(&d.name, verify_coend(&p));
        let pv = pairing_check(&d.diagram).map_err(input)?;
        out.report.merge(&d.name, pv.report);
        out.result(format!("{}.dim", d.name), json!(p.dim()));
        if let Some(det) = pv.det {
            out.result(format!("{}.pairing_det", d.name), json!(det.to_string()));
        }
    }
    Ok(())
}

fn reconstruct_cmd(file: &StructureFile, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let tp = match &file.presentation {
        Some(tp) => tp.clone(),
        None => regular_presentation(h, file.cobraiding.as_ref(), file.cotwist.as_ref())
            .map_err(|e| InputError(format!("no presentation given and the regular one is unavailable: {e}")))?,
    };
    let rec = match reconstruct(&tp) {
        Ok(rec) => rec,
        Err(e @ (TannakaError::Presentation { .. } | TannakaError::NotWellDefined { .. })) => {
            out.report.fail("reconstruct.presentation", e.to_string());
            return Ok(());
        }
        Err(e) => return Err(input(e)),
    };
    out.report.pass("reconstruct.presentation");
    out.report.merge("", rec.report);
    match grouplike_matching(&rec.hopf, h) {
        Ok(psi) => out.report.merge("", verify_isomorphism(&rec.hopf, h, &psi)),
        Err(e) => out.report.skip("iso.matching", e.to_string()),
    }
    out.result("component_dims", json!(rec.hopf.group.elements().map(|a| rec.hopf.dim(a)).collect::<Vec<_>>()));
    out.result("braided", json!(rec.cobraiding.is_some()));
    out.result("twisted", json!(rec.cotwist.is_some()));
    Ok(())
}

fn center(file: &StructureFile, opts: &Options, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let c = need_cobraiding(file, "center")?;
    let (names, fam) = select_family(file, opts)?;
    for (name, u) in names.iter().zip(&fam.objects) {
        let hb = induced_half_braiding(h, c, u, &fam);
        out.report.merge("induced", verify_half_braiding(h, &hb).map_err(input)?);
        let space = natural_solution_space(h, u, &fam);
        out.report.record("induced.in_natural_span", in_solution_span(&space, &hb.maps), || format!("object `{name}`"));
        out.result(format!("natural_dim.{name}"), json!(space.len()));
    }
    for b in &file.half_braidings {
        let family = core_family(file, &b.family)?;
        let object =
            file.comodule(&b.object).cloned().ok_or_else(|| InputError(format!("unknown comodule `{}`", b.object)))?;
        let hb = HalfBraidingCandidate { tensor_pairs: tensor_pairs(h, &family), object, family, maps: b.maps.clone() };
        out.report.merge(&b.name, verify_half_braiding(h, &hb).map_err(input)?);
    }
    Ok(())
}

fn ribbon_check(file: &StructureFile, out: &mut Outcome) -> Res<()> {
    let h = &file.hopf;
    let c = need_cobraiding(file, "ribbon-check")?;
    if file.twisted.is_empty() {
        out.report.skip("ribbon.objects", "no twisted objects declared");
    }
    for b in &file.twisted {
        let u =
            file.comodule(&b.object).cloned().ok_or_else(|| InputError(format!("unknown comodule `{}`", b.object)))?;
        let obj = match BalancedObject::new(h, u, b.t.clone()) {
            Ok(o) => o,
            Err(e) => {
                out.report.fail(&format!("{}.ribbon.balanced", b.name), e.to_string());
                continue;
            }
        };
        let w = match &b.dual {
            Some(d) => BalancedDual {
                dual: file
                    .comodule(&d.comodule)
                    .cloned()
                    .ok_or_else(|| InputError(format!("unknown comodule `{}`", d.comodule)))?,
                coeval: d.coeval.clone(),
                eval: d.eval.clone(),
                t_dual: d.t_dual.clone(),
            },
            None => standard_dual(h, &obj).map_err(input)?,
        };
        match ribbon_membership(h, c, &obj, &w) {
            Ok(r) => out.report.merge(&b.name, r),
            Err(e) => out.report.fail(&format!("{}.ribbon.composite", b.name), e.to_string()),
        }
        let prefix = format!("{}.", b.name);
        let member = out.report.checks().filter(|k| k.name.starts_with(&prefix)).all(|k| k.status != Status::Fail);
        out.result(format!("{}.member", b.name), json!(member));
    }
    Ok(())
}
