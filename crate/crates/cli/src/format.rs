//! The structure-file format: a JSON document whose matrices are arrays of
//! rows of scalar strings. Parsing is total and reports every problem it
//! finds with a line and column; serialization is canonical, so
//! `serialize(parse(serialize(x))) == serialize(x)`.

use std::fmt;
use std::str::FromStr;

use crossed_hopf::comod::Comodule;
use crossed_hopf::quasi::{Cobraiding, Cotwist};
use crossed_hopf::structure::{Component, CrossedHopf, FiniteGroup};
use crossed_hopf::tannaka::{Arrow, ConjWitness, DualWitness, FiniteDiagram, PresentedObject, TannakianPresentation};
use crossed_hopf::{CycScalar, Mat};
use json_spanned_value::spanned;
use serde_json::{json, Map, Value};

/// A problem in the input, positioned at 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedComodule {
    pub name: String,
    pub comodule: Comodule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismBlock {
    pub source: String,
    pub target: String,
    pub matrix: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyBlock {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismBlock>,
}

/// Simple objects for the S-matrix: `duals[i]` names `V_{i*}` and
/// `witnesses[i]: V_{i*} -> V_i*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplesBlock {
    pub objects: Vec<String>,
    pub duals: Vec<String>,
    pub witnesses: Vec<Mat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramBlock {
    pub name: String,
    pub diagram: FiniteDiagram,
}

/// `maps[k]: U (x) V_k -> Phi_|U|(V_k) (x) U` over the objects of `family`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfBraidingBlock {
    pub name: String,
    pub object: String,
    pub family: String,
    pub maps: Vec<Mat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDualBlock {
    pub comodule: String,
    pub coeval: Mat,
    pub eval: Mat,
    pub t_dual: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedBlock {
    pub name: String,
    pub object: String,
    pub t: Mat,
    /// Absent means the standard dual with the transposed twist.
    pub dual: Option<TwistedDualBlock>,
}

/// Every block a structure file can carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub conductor: u32,
    pub hopf: CrossedHopf,
    pub cobraiding: Option<Cobraiding>,
    pub cotwist: Option<Cotwist>,
    pub comodules: Vec<NamedComodule>,
    pub families: Vec<FamilyBlock>,
    pub simples: Option<SimplesBlock>,
    pub diagrams: Vec<DiagramBlock>,
    pub presentation: Option<TannakianPresentation>,
    pub half_braidings: Vec<HalfBraidingBlock>,
    pub twisted: Vec<TwistedBlock>,
}

impl StructureFile {
    /// A file carrying only the structure.
    pub fn bare(conductor: u32, hopf: CrossedHopf) -> StructureFile {
        StructureFile {
            conductor,
            hopf,
            cobraiding: None,
            cotwist: None,
            comodules: Vec::new(),
            families: Vec::new(),
            simples: None,
            diagrams: Vec::new(),
            presentation: None,
            half_braidings: Vec::new(),
            twisted: Vec::new(),
        }
    }

    pub fn comodule(&self, name: &str) -> Option<&Comodule> {
        self.comodules.iter().find(|c| c.name == name).map(|c| &c.comodule)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyBlock> {
        self.families.iter().find(|f| f.name == name)
    }
}

type SV = spanned::Value;

const TOP_KEYS: &[&str] = &[
    "conductor",
    "group",
    "components",
    "mult",
    "unit",
    "conj",
    "antipode",
    "cobraiding",
    "cotwist",
    "comodules",
    "families",
    "simples",
    "diagrams",
    "presentation",
    "half_braidings",
    "twisted_objects",
];

struct Ctx<'a> {
    text: &'a str,
    diags: Vec<Diagnostic>,
    conductor: u32,
}

struct Obj<'v> {
    value: &'v SV,
}

impl<'v> Obj<'v> {
    fn get(&self, key: &str) -> Option<&'v SV> {
        self.value.as_object().and_then(|m| m.get(key))
    }
}

impl<'a> Ctx<'a> {
    fn position(&self, offset: usize) -> (usize, usize) {
        let offset = offset.min(self.text.len());
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn report(&mut self, offset: usize, message: impl Into<String>) {
        let (line, column) = self.position(offset);
        self.diags.push(Diagnostic { line, column, message: message.into() });
    }

    fn fail<T>(&mut self, v: &SV, message: impl Into<String>) -> Option<T> {
        self.report(v.start(), message);
        None
    }

    /// An object with the given keys; unknown keys and missing required keys
    /// are diagnosed.
    fn object<'v>(&mut self, v: &'v SV, what: &str, required: &[&str], optional: &[&str]) -> Option<Obj<'v>> {
        let Some(map) = v.as_object() else {
            return self.fail(v, format!("{what} must be an object, found {}", v.type_str()));
        };
        let mut ok = true;
        for (k, _) in map.iter() {
            if !required.contains(&k.as_str()) && !optional.contains(&k.as_str()) {
                self.report(k.start(), format!("unknown key `{}` in {what}", k.get_ref()));
                ok = false;
            }
        }
        for r in required {
            if !map.contains_key(*r) {
                self.report(v.start(), format!("{what} is missing required key `{r}`"));
                ok = false;
            }
        }
        ok.then_some(Obj { value: v })
    }

    fn array<'v>(&mut self, v: &'v SV, what: &str) -> Option<&'v [SV]> {
        match v.as_array() {
            Some(a) => Some(a.as_slice()),
            None => self.fail(v, format!("{what} must be an array, found {}", v.type_str())),
        }
    }

    fn string<'v>(&mut self, v: &'v SV, what: &str) -> Option<&'v str> {
        match v.as_string() {
            Some(s) => Some(s),
            None => self.fail(v, format!("{what} must be a string, found {}", v.type_str())),
        }
    }

    fn count(&mut self, v: &SV, what: &str) -> Option<usize> {
        match v.as_number().and_then(|n| n.as_u64()) {
            Some(n) => usize::try_from(n).ok().or_else(|| self.fail(v, format!("{what} is too large"))),
            None => self.fail(v, format!("{what} must be a non-negative integer")),
        }
    }

    fn index(&mut self, v: &SV, what: &str, bound: usize) -> Option<usize> {
        let k = self.count(v, what)?;
        if k < bound {
            Some(k)
        } else {
            self.fail(v, format!("{what} {k} is out of range (there are {bound})"))
        }
    }

    fn label(&mut self, v: &SV, group: &FiniteGroup, what: &str) -> Option<usize> {
        let s = self.string(v, what)?;
        match group.index_of(s) {
            Some(a) => Some(a),
            None => self.fail(v, format!("{what} `{s}` is not a group element")),
        }
    }

    fn scalar(&mut self, v: &SV) -> Option<CycScalar> {
        let s = self.string(v, "matrix entry")?;
        let c = match CycScalar::from_str(s) {
            Ok(c) => c,
            Err(e) => return self.fail(v, format!("bad scalar `{s}`: {e}")),
        };
        if c.as_rational().is_some() {
            return Some(c);
        }
        match c.embed(self.conductor) {
            Ok(x) => Some(x),
            Err(_) => self.fail(
                v,
                format!(
                    "scalar `{s}` lies in Q(zeta_{}), which does not embed in the declared Q(zeta_{})",
                    c.conductor(),
                    self.conductor
                ),
            ),
        }
    }

    /// A `rows x cols` matrix given as an array of rows.
    fn matrix(&mut self, v: &SV, what: &str, shape: (usize, usize)) -> Option<Mat> {
        let rows = self.array(v, what)?;
        let cols_found = rows.first().and_then(|r| r.as_array()).map_or(0, Vec::len);
        if rows.len() != shape.0 || rows.iter().any(|r| r.as_array().is_some_and(|a| a.len() != shape.1)) {
            let found_cols = if rows.is_empty() { shape.1 } else { cols_found };
            return self.fail(
                v,
                format!("shape mismatch: {what} is {}x{}, expected {}x{}", rows.len(), found_cols, shape.0, shape.1),
            );
        }
        let mut data = Vec::with_capacity(shape.0 * shape.1);
        let mut ok = true;
        for r in rows {
            let Some(entries) = self.array(r, "matrix row") else {
                ok = false;
                continue;
            };
            for e in entries {
                match self.scalar(e) {
                    Some(c) => data.push(c),
                    None => ok = false,
                }
            }
        }
        if !ok {
            return None;
        }
        Mat::new(shape.0, shape.1, data).ok()
    }

    fn names(&mut self, v: &SV, what: &str) -> Option<Vec<String>> {
        let items = self.array(v, what)?;
        let mut out = Vec::new();
        for it in items {
            out.push(self.string(it, what)?.to_string());
        }
        Some(out)
    }
}

/// Parses and validates a structure file.
pub fn parse_structure_file(text: &str) -> Result<StructureFile, Vec<Diagnostic>> {
    let root: SV = match json_spanned_value::from_str(text) {
        Ok(v) => v,
        Err(e) => {
            return Err(vec![Diagnostic {
                line: e.line(),
                column: e.column(),
                message: format!("malformed JSON: {e}"),
            }]);
        }
    };
    let mut cx = Ctx { text, diags: Vec::new(), conductor: 1 };
    let out = parse_root(&mut cx, &root);
    match out {
        Some(f) if cx.diags.is_empty() => Ok(f),
        _ => {
            if cx.diags.is_empty() {
                cx.report(root.start(), "invalid structure file");
            }
            cx.diags.sort_by_key(|d| (d.line, d.column));
            Err(cx.diags)
        }
    }
}

fn parse_root(cx: &mut Ctx<'_>, root: &SV) -> Option<StructureFile> {
    let top = cx.object(root, "structure file", &TOP_KEYS[..7], &TOP_KEYS[7..])?;
    let n = top.get("conductor").unwrap();
    let conductor = cx.count(n, "conductor")?;
    if conductor == 0 || conductor > 1_000 {
        return cx.fail(n, "conductor must be between 1 and 1000");
    }
    cx.conductor = conductor as u32;
    let group = parse_group(cx, top.get("group").unwrap())?;
    let hopf = parse_hopf(cx, &top, group);
    let hopf = hopf?;
    let mut file = StructureFile::bare(cx.conductor, hopf);
    let h = &file.hopf;
    if let Some(v) = top.get("cobraiding") {
        file.cobraiding = parse_cobraiding(cx, v, h);
    }
    if let Some(v) = top.get("cotwist") {
        file.cotwist = parse_cotwist(cx, v, h);
    }
    if let Some(v) = top.get("comodules") {
        file.comodules = parse_comodules(cx, v, h).unwrap_or_default();
    }
    let comodules = file.comodules.clone();
    let lookup = |name: &str| comodules.iter().find(|c| c.name == name).map(|c| c.comodule.clone());
    if let Some(v) = top.get("families") {
        file.families = parse_families(cx, v, &lookup).unwrap_or_default();
    }
    if let Some(v) = top.get("simples") {
        file.simples = parse_simples(cx, v, &lookup);
    }
    if let Some(v) = top.get("diagrams") {
        file.diagrams = parse_diagrams(cx, v).unwrap_or_default();
    }
    if let Some(v) = top.get("presentation") {
        file.presentation = parse_presentation(cx, v, &h.group);
    }
    if let Some(v) = top.get("half_braidings") {
        let fams = file.families.clone();
        file.half_braidings = parse_half_braidings(cx, v, &lookup, &fams).unwrap_or_default();
    }
    if let Some(v) = top.get("twisted_objects") {
        file.twisted = parse_twisted(cx, v, &lookup).unwrap_or_default();
    }
    Some(file)
}

fn parse_group(cx: &mut Ctx<'_>, v: &SV) -> Option<FiniteGroup> {
    let o = cx.object(v, "group", &["labels", "table"], &[])?;
    let labels = cx.names(o.get("labels").unwrap(), "group label")?;
    let table_v = o.get("table").unwrap();
    let rows = cx.array(table_v, "group table")?;
    if rows.len() != labels.len() {
        return cx.fail(table_v, format!("group table has {} rows for {} labels", rows.len(), labels.len()));
    }
    let mut table = Vec::new();
    for r in rows {
        let entries = cx.array(r, "group table row")?;
        if entries.len() != labels.len() {
            return cx.fail(r, format!("group table row has {} entries for {} labels", entries.len(), labels.len()));
        }
        let mut row = Vec::new();
        for e in entries {
            let s = cx.string(e, "group table entry")?;
            match labels.iter().position(|l| l == s) {
                Some(k) => row.push(k),
                None => return cx.fail(e, format!("group table entry `{s}` is not a label")),
            }
        }
        table.push(row);
    }
    match FiniteGroup::new(labels, table) {
        Ok(g) => Some(g),
        Err(e) => cx.fail(v, format!("group table is not a group: {e}")),
    }
}

/// Indexes a family of blocks by its key field(s), diagnosing gaps and repeats.
fn keyed<T: Clone>(
    cx: &mut Ctx<'_>,
    v: &SV,
    what: &str,
    slots: usize,
    mut item: impl FnMut(&mut Ctx<'_>, &SV) -> Option<(usize, T)>,
) -> Option<Vec<T>> {
    let items = cx.array(v, what)?;
    let mut out: Vec<Option<T>> = vec![None; slots];
    let mut ok = true;
    for it in items {
        match item(cx, it) {
            Some((k, t)) => {
                if out[k].is_some() {
                    cx.report(it.start(), format!("duplicate entry in {what}"));
                    ok = false;
                }
                out[k] = Some(t);
            }
            None => ok = false,
        }
    }
    if !ok {
        return None;
    }
    if let Some(missing) = out.iter().position(Option::is_none) {
        return cx.fail(v, format!("{what} has no entry for index {missing}"));
    }
    Some(out.into_iter().map(Option::unwrap).collect())
}

fn parse_hopf(cx: &mut Ctx<'_>, top: &Obj<'_>, group: FiniteGroup) -> Option<CrossedHopf> {
    let m = group.order();
    let comps = keyed(cx, top.get("components").unwrap(), "components", m, |cx, it| {
        let o = cx.object(it, "component", &["grade", "dim", "delta", "counit"], &[])?;
        let a = cx.label(o.get("grade").unwrap(), &group, "component grade")?;
        let d = cx.count(o.get("dim").unwrap(), "component dimension")?;
        if d > 64 {
            return cx.fail(o.get("dim").unwrap(), "component dimension above 64 is out of scope");
        }
        let what = format!("delta of component `{}`", group.label(a));
        let delta = cx.matrix(o.get("delta").unwrap(), &what, (d * d, d));
        let what = format!("counit of component `{}`", group.label(a));
        let counit = cx.matrix(o.get("counit").unwrap(), &what, (1, d));
        Some((a, Component::new(d, delta?, counit?)))
    })?;
    let dim = |a: usize| comps[a].dim;
    let mult = keyed(cx, top.get("mult").unwrap(), "mult", m * m, |cx, it| {
        let o = cx.object(it, "multiplication block", &["left", "right", "matrix"], &[])?;
        let a = cx.label(o.get("left").unwrap(), &group, "left grade");
        let b = cx.label(o.get("right").unwrap(), &group, "right grade");
        let (a, b) = (a?, b?);
        let what = format!("multiplication ({}, {})", group.label(a), group.label(b));
        let mat = cx.matrix(o.get("matrix").unwrap(), &what, (dim(group.mul(a, b)), dim(a) * dim(b)))?;
        Some((a * m + b, mat))
    });
    let e = group.identity();
    let unit = cx.matrix(top.get("unit").unwrap(), "unit", (dim(e), 1));
    let conj = keyed(cx, top.get("conj").unwrap(), "conj", m * m, |cx, it| {
        let o = cx.object(it, "conjugation block", &["by", "on", "matrix"], &[])?;
        let b = cx.label(o.get("by").unwrap(), &group, "conjugating element");
        let a = cx.label(o.get("on").unwrap(), &group, "conjugated grade");
        let (b, a) = (b?, a?);
        let what = format!("conjugation by {} on {}", group.label(b), group.label(a));
        let mat = cx.matrix(o.get("matrix").unwrap(), &what, (dim(group.conj(b, a)), dim(a)))?;
        Some((b * m + a, mat))
    });
    let antipode = keyed(cx, top.get("antipode").unwrap(), "antipode", m, |cx, it| {
        let o = cx.object(it, "antipode block", &["grade", "matrix"], &[])?;
        let a = cx.label(o.get("grade").unwrap(), &group, "antipode grade")?;
        let what = format!("antipode on {}", group.label(a));
        let mat = cx.matrix(o.get("matrix").unwrap(), &what, (dim(group.inv(a)), dim(a)))?;
        Some((a, mat))
    });
    Some(CrossedHopf { group, components: comps, mult: mult?, unit: unit?, conj: conj?, antipode: antipode? })
}

fn pair_rows(cx: &mut Ctx<'_>, v: &SV, what: &str, h: &CrossedHopf) -> Option<Vec<Mat>> {
    let g = &h.group;
    let m = g.order();
    keyed(cx, v, what, m * m, |cx, it| {
        let o = cx.object(it, what, &["left", "right", "matrix"], &[])?;
        let a = cx.label(o.get("left").unwrap(), g, "left grade");
        let b = cx.label(o.get("right").unwrap(), g, "right grade");
        let (a, b) = (a?, b?);
        let label = format!("{what} ({}, {})", g.label(a), g.label(b));
        let mat = cx.matrix(o.get("matrix").unwrap(), &label, (1, h.dim(a) * h.dim(b)))?;
        Some((a * m + b, mat))
    })
}

fn grade_rows(cx: &mut Ctx<'_>, v: &SV, what: &str, h: &CrossedHopf) -> Option<Vec<Mat>> {
    let g = &h.group;
    keyed(cx, v, what, g.order(), |cx, it| {
        let o = cx.object(it, what, &["grade", "matrix"], &[])?;
        let a = cx.label(o.get("grade").unwrap(), g, "grade")?;
        let label = format!("{what} on {}", g.label(a));
        let mat = cx.matrix(o.get("matrix").unwrap(), &label, (1, h.dim(a)))?;
        Some((a, mat))
    })
}

fn parse_cobraiding(cx: &mut Ctx<'_>, v: &SV, h: &CrossedHopf) -> Option<Cobraiding> {
    let o = cx.object(v, "cobraiding", &["gamma", "gamma_inv"], &[])?;
    let gamma = pair_rows(cx, o.get("gamma").unwrap(), "gamma", h);
    let gamma_inv = pair_rows(cx, o.get("gamma_inv").unwrap(), "gamma_inv", h);
    Some(Cobraiding { gamma: gamma?, gamma_inv: gamma_inv? })
}

fn parse_cotwist(cx: &mut Ctx<'_>, v: &SV, h: &CrossedHopf) -> Option<Cotwist> {
    let o = cx.object(v, "cotwist", &["tau", "tau_inv"], &[])?;
    let tau = grade_rows(cx, o.get("tau").unwrap(), "tau", h);
    let tau_inv = grade_rows(cx, o.get("tau_inv").unwrap(), "tau_inv", h);
    Some(Cotwist { tau: tau?, tau_inv: tau_inv? })
}

fn parse_comodules(cx: &mut Ctx<'_>, v: &SV, h: &CrossedHopf) -> Option<Vec<NamedComodule>> {
    let items = cx.array(v, "comodules")?;
    let mut out: Vec<NamedComodule> = Vec::new();
    for it in items {
        let Some(o) = cx.object(it, "comodule", &["name", "grade", "dim", "coaction"], &[]) else {
            continue;
        };
        let name = cx.string(o.get("name").unwrap(), "comodule name");
        let a = cx.label(o.get("grade").unwrap(), &h.group, "comodule grade");
        let n = cx.count(o.get("dim").unwrap(), "comodule dimension");
        let (Some(name), Some(a), Some(n)) = (name, a, n) else {
            continue;
        };
        if out.iter().any(|c| c.name == name) {
            cx.report(it.start(), format!("duplicate comodule name `{name}`"));
            continue;
        }
        let what = format!("coaction of `{name}`");
        let Some(rho) = cx.matrix(o.get("coaction").unwrap(), &what, (h.dim(a) * n, n)) else {
            continue;
        };
        out.push(NamedComodule { name: name.to_string(), comodule: Comodule { grade: a, coaction: rho } });
    }
    Some(out)
}

fn resolve(cx: &mut Ctx<'_>, v: &SV, lookup: &dyn Fn(&str) -> Option<Comodule>) -> Option<(String, Comodule)> {
    let s = cx.string(v, "comodule reference")?;
    match lookup(s) {
        Some(c) => Some((s.to_string(), c)),
        None => cx.fail(v, format!("unknown comodule `{s}`")),
    }
}

fn parse_families(cx: &mut Ctx<'_>, v: &SV, lookup: &dyn Fn(&str) -> Option<Comodule>) -> Option<Vec<FamilyBlock>> {
    let items = cx.array(v, "families")?;
    let mut out: Vec<FamilyBlock> = Vec::new();
    for it in items {
        let Some(o) = cx.object(it, "family", &["name", "objects"], &["morphisms"]) else {
            continue;
        };
        let Some(name) = cx.string(o.get("name").unwrap(), "family name") else {
            continue;
        };
        if out.iter().any(|f| f.name == name) {
            cx.report(it.start(), format!("duplicate family name `{name}`"));
            continue;
        }
        let Some(objs) = cx.array(o.get("objects").unwrap(), "family objects") else {
            continue;
        };
        let mut objects = Vec::new();
        for ob in objs {
            if let Some((n, _)) = resolve(cx, ob, lookup) {
                objects.push(n);
            }
        }
        let mut morphisms = Vec::new();
        if let Some(mv) = o.get("morphisms") {
            for m in cx.array(mv, "family morphisms").unwrap_or_default() {
                let Some(mo) = cx.object(m, "morphism", &["source", "target", "matrix"], &[]) else {
                    continue;
                };
                let (Some((s, sc)), Some((t, tc))) =
                    (resolve(cx, mo.get("source").unwrap(), lookup), resolve(cx, mo.get("target").unwrap(), lookup))
                else {
                    continue;
                };
                if !objects.contains(&s) || !objects.contains(&t) {
                    cx.report(m.start(), format!("morphism {s} -> {t} leaves family `{name}`"));
                    continue;
                }
                let what = format!("morphism {s} -> {t}");
                if let Some(mat) = cx.matrix(mo.get("matrix").unwrap(), &what, (tc.dim(), sc.dim())) {
                    morphisms.push(MorphismBlock { source: s, target: t, matrix: mat });
                }
            }
        }
        out.push(FamilyBlock { name: name.to_string(), objects, morphisms });
    }
    Some(out)
}

fn parse_simples(cx: &mut Ctx<'_>, v: &SV, lookup: &dyn Fn(&str) -> Option<Comodule>) -> Option<SimplesBlock> {
    let o = cx.object(v, "simples", &["objects", "duals", "witnesses"], &[])?;
    let mut objects = Vec::new();
    for it in cx.array(o.get("objects").unwrap(), "simple objects")? {
        objects.push(resolve(cx, it, lookup)?);
    }
    let dv = o.get("duals").unwrap();
    let mut duals = Vec::new();
    for it in cx.array(dv, "simple duals")? {
        duals.push(resolve(cx, it, lookup)?);
    }
    let wv = o.get("witnesses").unwrap();
    let ws = cx.array(wv, "dual witnesses")?;
    if duals.len() != objects.len() || ws.len() != objects.len() {
        return cx.fail(v, format!("{} simples with {} duals and {} witnesses", objects.len(), duals.len(), ws.len()));
    }
    let mut witnesses = Vec::new();
    for (k, w) in ws.iter().enumerate() {
        let what = format!("dual witness {k}");
        witnesses.push(cx.matrix(w, &what, (objects[k].1.dim(), duals[k].1.dim()))?);
    }
    Some(SimplesBlock {
        objects: objects.into_iter().map(|x| x.0).collect(),
        duals: duals.into_iter().map(|x| x.0).collect(),
        witnesses,
    })
}

fn parse_arrows(cx: &mut Ctx<'_>, v: &SV, dims: &[usize]) -> Option<Vec<Arrow>> {
    let mut arrows = Vec::new();
    for a in cx.array(v, "arrows")? {
        let ao = cx.object(a, "arrow", &["source", "target", "matrix"], &[])?;
        let s = cx.index(ao.get("source").unwrap(), "arrow source", dims.len())?;
        let t = cx.index(ao.get("target").unwrap(), "arrow target", dims.len())?;
        let value = cx.matrix(ao.get("matrix").unwrap(), &format!("arrow {s} -> {t}"), (dims[t], dims[s]))?;
        arrows.push(Arrow { source: s, target: t, value });
    }
    Some(arrows)
}

fn parse_diagrams(cx: &mut Ctx<'_>, v: &SV) -> Option<Vec<DiagramBlock>> {
    let mut out = Vec::new();
    for it in cx.array(v, "diagrams")? {
        let Some(o) = cx.object(it, "diagram", &["name", "dims"], &["arrows"]) else {
            continue;
        };
        let Some(name) = cx.string(o.get("name").unwrap(), "diagram name") else {
            continue;
        };
        let Some(dv) = cx.array(o.get("dims").unwrap(), "diagram dimensions") else {
            continue;
        };
        let dims: Option<Vec<usize>> = dv.iter().map(|d| cx.count(d, "value dimension")).collect();
        let Some(dims) = dims else { continue };
        let arrows = match o.get("arrows") {
            Some(a) => match parse_arrows(cx, a, &dims) {
                Some(x) => x,
                None => continue,
            },
            None => Vec::new(),
        };
        out.push(DiagramBlock { name: name.to_string(), diagram: FiniteDiagram { dims, arrows } });
    }
    Some(out)
}

fn parse_presentation(cx: &mut Ctx<'_>, v: &SV, group: &FiniteGroup) -> Option<TannakianPresentation> {
    let o = cx.object(
        v,
        "presentation",
        &["objects", "tensor", "unit", "duals", "conjugations"],
        &["arrows", "braiding", "twist"],
    )?;
    let mut objects = Vec::new();
    for it in cx.array(o.get("objects").unwrap(), "presented objects")? {
        let po = cx.object(it, "presented object", &["grade", "dim"], &[])?;
        let grade = cx.label(po.get("grade").unwrap(), group, "object grade")?;
        let dim = cx.count(po.get("dim").unwrap(), "object dimension")?;
        objects.push(PresentedObject { grade, dim });
    }
    let n = objects.len();
    let dims: Vec<usize> = objects.iter().map(|p| p.dim).collect();
    let arrows = match o.get("arrows") {
        Some(a) => parse_arrows(cx, a, &dims)?,
        None => Vec::new(),
    };
    let tv = o.get("tensor").unwrap();
    let rows = cx.array(tv, "tensor table")?;
    if rows.len() != n {
        return cx.fail(tv, format!("tensor table has {} rows for {n} objects", rows.len()));
    }
    let mut tensor = Vec::with_capacity(n * n);
    for r in rows {
        let entries = cx.array(r, "tensor row")?;
        if entries.len() != n {
            return cx.fail(r, format!("tensor row has {} entries for {n} objects", entries.len()));
        }
        for e in entries {
            tensor.push(cx.index(e, "tensor entry", n)?);
        }
    }
    let unit = cx.index(o.get("unit").unwrap(), "unit object", n)?;
    let dv = o.get("duals").unwrap();
    let ds = cx.array(dv, "duals")?;
    if ds.len() != n {
        return cx.fail(dv, format!("{} dual witnesses for {n} objects", ds.len()));
    }
    let mut duals = Vec::new();
    for (u, d) in ds.iter().enumerate() {
        let dob = cx.object(d, "dual witness", &["object", "eval", "coeval"], &[])?;
        let k = cx.index(dob.get("object").unwrap(), "dual object", n)?;
        let nn = dims[u] * dims[k];
        let eval = cx.matrix(dob.get("eval").unwrap(), &format!("evaluation of object {u}"), (1, nn))?;
        let coeval = cx.matrix(dob.get("coeval").unwrap(), &format!("coevaluation of object {u}"), (nn, 1))?;
        duals.push(DualWitness { object: k, eval, coeval });
    }
    let m = group.order();
    let conj_items = keyed(cx, o.get("conjugations").unwrap(), "conjugations", m, |cx, it| {
        let co = cx.object(it, "conjugation witnesses", &["by", "witnesses"], &[])?;
        let b = cx.label(co.get("by").unwrap(), group, "conjugating element")?;
        let wv = co.get("witnesses").unwrap();
        let ws = cx.array(wv, "conjugation witnesses")?;
        if ws.len() != n {
            return cx.fail(wv, format!("{} conjugation witnesses for {n} objects", ws.len()));
        }
        let mut out = Vec::new();
        for (u, w) in ws.iter().enumerate() {
            let wo = cx.object(w, "conjugation witness", &["object", "iso"], &[])?;
            let k = cx.index(wo.get("object").unwrap(), "conjugate object", n)?;
            let iso = cx.matrix(wo.get("iso").unwrap(), &format!("conjugation of object {u}"), (dims[k], dims[u]))?;
            out.push(ConjWitness { object: k, iso });
        }
        Some((b, out))
    })?;
    let conj: Vec<ConjWitness> = conj_items.into_iter().flatten().collect();
    let braiding = match o.get("braiding") {
        Some(bv) => {
            let rows = cx.array(bv, "braiding table")?;
            if rows.len() != n {
                return cx.fail(bv, format!("braiding table has {} rows for {n} objects", rows.len()));
            }
            let mut out = Vec::new();
            for (u, r) in rows.iter().enumerate() {
                let entries = cx.array(r, "braiding row")?;
                if entries.len() != n {
                    return cx.fail(r, format!("braiding row has {} entries for {n} objects", entries.len()));
                }
                for (w, e) in entries.iter().enumerate() {
                    let cw = conj[objects[u].grade * n + w].object;
                    let shape = (dims[cw] * dims[u], dims[u] * dims[w]);
                    out.push(cx.matrix(e, &format!("braiding ({u}, {w})"), shape)?);
                }
            }
            Some(out)
        }
        None => None,
    };
    let twist = match o.get("twist") {
        Some(tv) => {
            let items = cx.array(tv, "twist list")?;
            if items.len() != n {
                return cx.fail(tv, format!("{} twists for {n} objects", items.len()));
            }
            let mut out = Vec::new();
            for (u, e) in items.iter().enumerate() {
                let cu = conj[objects[u].grade * n + u].object;
                out.push(cx.matrix(e, &format!("twist of object {u}"), (dims[cu], dims[u]))?);
            }
            Some(out)
        }
        None => None,
    };
    Some(TannakianPresentation { group: group.clone(), objects, arrows, tensor, unit, duals, conj, braiding, twist })
}

fn parse_half_braidings(
    cx: &mut Ctx<'_>,
    v: &SV,
    lookup: &dyn Fn(&str) -> Option<Comodule>,
    families: &[FamilyBlock],
) -> Option<Vec<HalfBraidingBlock>> {
    let mut out = Vec::new();
    for it in cx.array(v, "half_braidings")? {
        let Some(o) = cx.object(it, "half-braiding", &["name", "object", "family", "maps"], &[]) else {
            continue;
        };
        let Some(name) = cx.string(o.get("name").unwrap(), "half-braiding name") else {
            continue;
        };
        let Some((obj, u)) = resolve(cx, o.get("object").unwrap(), lookup) else {
            continue;
        };
        let fv = o.get("family").unwrap();
        let Some(fname) = cx.string(fv, "family name") else {
            continue;
        };
        let Some(fam) = families.iter().find(|f| f.name == fname) else {
            cx.report(fv.start(), format!("unknown family `{fname}`"));
            continue;
        };
        let mv = o.get("maps").unwrap();
        let Some(maps_v) = cx.array(mv, "half-braiding maps") else {
            continue;
        };
        if maps_v.len() != fam.objects.len() {
            cx.report(mv.start(), format!("{} maps for {} family objects", maps_v.len(), fam.objects.len()));
            continue;
        }
        let mut maps = Vec::new();
        for (k, mvk) in maps_v.iter().enumerate() {
            let vd = lookup(&fam.objects[k]).map_or(0, |c| c.dim());
            let shape = (vd * u.dim(), u.dim() * vd);
            if let Some(mat) = cx.matrix(mvk, &format!("half-braiding map at `{}`", fam.objects[k]), shape) {
                maps.push(mat);
            }
        }
        if maps.len() == fam.objects.len() {
            out.push(HalfBraidingBlock { name: name.to_string(), object: obj, family: fname.to_string(), maps });
        }
    }
    Some(out)
}

fn parse_twisted(cx: &mut Ctx<'_>, v: &SV, lookup: &dyn Fn(&str) -> Option<Comodule>) -> Option<Vec<TwistedBlock>> {
    let mut out = Vec::new();
    for it in cx.array(v, "twisted_objects")? {
        let Some(o) = cx.object(it, "twisted object", &["name", "object", "t"], &["dual"]) else {
            continue;
        };
        let Some(name) = cx.string(o.get("name").unwrap(), "twisted object name") else {
            continue;
        };
        let Some((obj, u)) = resolve(cx, o.get("object").unwrap(), lookup) else {
            continue;
        };
        let n = u.dim();
        let Some(t) = cx.matrix(o.get("t").unwrap(), &format!("twist of `{name}`"), (n, n)) else {
            continue;
        };
        let dual = match o.get("dual") {
            None => None,
            Some(dv) => {
                let Some(d) = cx.object(dv, "dual witness", &["comodule", "coeval", "eval", "t_dual"], &[]) else {
                    continue;
                };
                let Some((dn, dc)) = resolve(cx, d.get("comodule").unwrap(), lookup) else {
                    continue;
                };
                let k = dc.dim();
                let coeval = cx.matrix(d.get("coeval").unwrap(), "coevaluation", (n * k, 1));
                let eval = cx.matrix(d.get("eval").unwrap(), "evaluation", (1, k * n));
                let t_dual = cx.matrix(d.get("t_dual").unwrap(), "dual twist", (k, k));
                let (Some(coeval), Some(eval), Some(t_dual)) = (coeval, eval, t_dual) else {
                    continue;
                };
                Some(TwistedDualBlock { comodule: dn, coeval, eval, t_dual })
            }
        };
        out.push(TwistedBlock { name: name.to_string(), object: obj, t, dual });
    }
    Some(out)
}

/// A matrix as an array of rows of scalar strings.
pub fn matrix_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row_vec(i).iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

fn obj(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

fn morphism_json(mb: &MorphismBlock) -> Value {
    obj(vec![("source", json!(mb.source)), ("target", json!(mb.target)), ("matrix", matrix_json(&mb.matrix))])
}

fn arrows_json(arrows: &[Arrow]) -> Value {
    Value::Array(
        arrows
            .iter()
            .map(|a| {
                obj(vec![("source", json!(a.source)), ("target", json!(a.target)), ("matrix", matrix_json(&a.value))])
            })
            .collect(),
    )
}

/// The canonical document for a structure file.
pub fn to_json(f: &StructureFile) -> Value {
    let h = &f.hopf;
    let g = &h.group;
    let m = g.order();
    let lab = |a: usize| json!(g.label(a));
    let pairs = |rows: &[Mat], first: &str, second: &str| -> Value {
        let mut out = Vec::new();
        for a in g.elements() {
            for b in g.elements() {
                out.push(obj(vec![(first, lab(a)), (second, lab(b)), ("matrix", matrix_json(&rows[a * m + b]))]));
            }
        }
        Value::Array(out)
    };
    let graded = |rows: &[Mat]| {
        Value::Array(g.elements().map(|a| obj(vec![("grade", lab(a)), ("matrix", matrix_json(&rows[a]))])).collect())
    };
    let mut top = vec![
        ("conductor", json!(f.conductor)),
        (
            "group",
            obj(vec![
                ("labels", json!(g.labels())),
                (
                    "table",
                    Value::Array(
                        g.elements().map(|a| Value::Array(g.elements().map(|b| lab(g.mul(a, b))).collect())).collect(),
                    ),
                ),
            ]),
        ),
        (
            "components",
            Value::Array(
                g.elements()
                    .map(|a| {
                        obj(vec![
                            ("grade", lab(a)),
                            ("dim", json!(h.dim(a))),
                            ("delta", matrix_json(h.delta(a))),
                            ("counit", matrix_json(h.counit(a))),
                        ])
                    })
                    .collect(),
            ),
        ),
        ("mult", pairs(&h.mult, "left", "right")),
        ("unit", matrix_json(&h.unit)),
        ("conj", pairs(&h.conj, "by", "on")),
        ("antipode", graded(&h.antipode)),
    ];
    if let Some(c) = &f.cobraiding {
        top.push((
            "cobraiding",
            obj(vec![("gamma", pairs(&c.gamma, "left", "right")), ("gamma_inv", pairs(&c.gamma_inv, "left", "right"))]),
        ));
    }
    if let Some(t) = &f.cotwist {
        top.push(("cotwist", obj(vec![("tau", graded(&t.tau)), ("tau_inv", graded(&t.tau_inv))])));
    }
    if !f.comodules.is_empty() {
        let items = f
            .comodules
            .iter()
            .map(|c| {
                obj(vec![
                    ("name", json!(c.name)),
                    ("grade", lab(c.comodule.grade)),
                    ("dim", json!(c.comodule.dim())),
                    ("coaction", matrix_json(&c.comodule.coaction)),
                ])
            })
            .collect();
        top.push(("comodules", Value::Array(items)));
    }
    if !f.families.is_empty() {
        let items = f
            .families
            .iter()
            .map(|fam| {
                let mut p = vec![("name", json!(fam.name)), ("objects", json!(fam.objects))];
                if !fam.morphisms.is_empty() {
                    p.push(("morphisms", Value::Array(fam.morphisms.iter().map(morphism_json).collect())));
                }
                obj(p)
            })
            .collect();
        top.push(("families", Value::Array(items)));
    }
    if let Some(s) = &f.simples {
        top.push((
            "simples",
            obj(vec![
                ("objects", json!(s.objects)),
                ("duals", json!(s.duals)),
                ("witnesses", Value::Array(s.witnesses.iter().map(matrix_json).collect())),
            ]),
        ));
    }
    if !f.diagrams.is_empty() {
        let items = f
            .diagrams
            .iter()
            .map(|d| {
                let mut p = vec![("name", json!(d.name)), ("dims", json!(d.diagram.dims))];
                if !d.diagram.arrows.is_empty() {
                    p.push(("arrows", arrows_json(&d.diagram.arrows)));
                }
                obj(p)
            })
            .collect();
        top.push(("diagrams", Value::Array(items)));
    }
    if let Some(tp) = &f.presentation {
        top.push(("presentation", presentation_json(tp)));
    }
    if !f.half_braidings.is_empty() {
        let items = f
            .half_braidings
            .iter()
            .map(|hb| {
                obj(vec![
                    ("name", json!(hb.name)),
                    ("object", json!(hb.object)),
                    ("family", json!(hb.family)),
                    ("maps", Value::Array(hb.maps.iter().map(matrix_json).collect())),
                ])
            })
            .collect();
        top.push(("half_braidings", Value::Array(items)));
    }
    if !f.twisted.is_empty() {
        let items = f
            .twisted
            .iter()
            .map(|t| {
                let mut p = vec![("name", json!(t.name)), ("object", json!(t.object)), ("t", matrix_json(&t.t))];
                if let Some(d) = &t.dual {
                    p.push((
                        "dual",
                        obj(vec![
                            ("comodule", json!(d.comodule)),
                            ("coeval", matrix_json(&d.coeval)),
                            ("eval", matrix_json(&d.eval)),
                            ("t_dual", matrix_json(&d.t_dual)),
                        ]),
                    ));
                }
                obj(p)
            })
            .collect();
        top.push(("twisted_objects", Value::Array(items)));
    }
    obj(top)
}

fn presentation_json(tp: &TannakianPresentation) -> Value {
    let g = &tp.group;
    let n = tp.objects.len();
    let mut p = vec![
        (
            "objects",
            Value::Array(
                tp.objects
                    .iter()
                    .map(|o| obj(vec![("grade", json!(g.label(o.grade))), ("dim", json!(o.dim))]))
                    .collect(),
            ),
        ),
        ("tensor", Value::Array((0..n).map(|u| json!(tp.tensor[u * n..(u + 1) * n])).collect())),
        ("unit", json!(tp.unit)),
        (
            "duals",
            Value::Array(
                tp.duals
                    .iter()
                    .map(|d| {
                        obj(vec![
                            ("object", json!(d.object)),
                            ("eval", matrix_json(&d.eval)),
                            ("coeval", matrix_json(&d.coeval)),
                        ])
                    })
                    .collect(),
            ),
        ),
        (
            "conjugations",
            Value::Array(
                g.elements()
                    .map(|b| {
                        let ws = (0..n)
                            .map(|u| {
                                let w = tp.conj_of(b, u);
                                obj(vec![("object", json!(w.object)), ("iso", matrix_json(&w.iso))])
                            })
                            .collect();
                        obj(vec![("by", json!(g.label(b))), ("witnesses", Value::Array(ws))])
                    })
                    .collect(),
            ),
        ),
    ];
    if !tp.arrows.is_empty() {
        p.push(("arrows", arrows_json(&tp.arrows)));
    }
    if let Some(b) = &tp.braiding {
        p.push((
            "braiding",
            Value::Array(
                (0..n).map(|u| Value::Array(b[u * n..(u + 1) * n].iter().map(matrix_json).collect())).collect(),
            ),
        ));
    }
    if let Some(t) = &tp.twist {
        p.push(("twist", Value::Array(t.iter().map(matrix_json).collect())));
    }
    obj(p)
}

/// Pretty-prints with arrays of leaves kept on one line.
pub fn write_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_leaf(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_leaf) => {
            out.push('[');
            for (k, it) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                out.push_str(&it.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, it) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(it, indent + 1, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, it)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(it, indent + 1, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}

/// Canonical text of a structure file.
pub fn serialize(f: &StructureFile) -> String {
    write_pretty(&to_json(f))
}
