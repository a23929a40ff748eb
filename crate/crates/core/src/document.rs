//! JSON documents: a `{kind, version, payload}` envelope around categories,
//! simplicial sets, simplicial categories, presheaves and Reedy structures.
//!
//! Sources are file paths, `builtin:<name>` for the bundled fixtures, or a
//! bare name looked up as `<name>.json` in the directory named by
//! `HOKIT_FIXTURES`.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coherent::free_resolution;
use crate::error::{Error, Result};
use crate::fincat::{CategoryBuilder, FinCategory, WeakEquivalences};
use crate::fixtures::{self, Fixture};
use crate::scat::SCat;
use crate::sset::{SSet, SimplicialMap};
use crate::weighted::{Presheaf, ReedyStructure, Variance};

pub const FORMAT_VERSION: u32 = 1;
pub const FIXTURE_DIR_VAR: &str = "HOKIT_FIXTURES";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Category,
    Sset,
    Scat,
    Presheaf,
    Reedy,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Sset => "sset",
            Kind::Scat => "scat",
            Kind::Presheaf => "presheaf",
            Kind::Reedy => "reedy",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: Kind,
    #[serde(default = "default_version")]
    pub version: u32,
    pub payload: Value,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

// ---------------------------------------------------------------- payloads

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeEntry {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryPayload {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismEntry>,
    #[serde(default)]
    pub compose: Vec<ComposeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weq: Option<Vec<String>>,
}

/// A category given inline or by fixture name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Name(String),
    Inline(CategoryPayload),
}

/// One level of a simplicial set: simplex ids plus `d<i>` and `s<j>` tables
/// listing the image id of each simplex in order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelPayload {
    pub simplices: Vec<String>,
    #[serde(flatten)]
    pub operators: BTreeMap<String, Vec<String>>,
}

/// Per-level `{id: image id}`; levels not given are determined by faces.
pub type MapPayload = Vec<BTreeMap<String, String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanPayload {
    pub apex: SSetPayload,
    pub left: SSetPayload,
    pub right: SSetPayload,
    pub f: MapPayload,
    pub g: MapPayload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SSetPayload {
    Tables {
        levels: Vec<LevelPayload>,
    },
    Nerve {
        nerve: CategoryRef,
        #[serde(default)]
        dim: Option<usize>,
    },
    Simplex {
        simplex: usize,
        #[serde(default)]
        dim: Option<usize>,
    },
    Boundary {
        boundary: usize,
        #[serde(default)]
        dim: Option<usize>,
    },
    Horn {
        horn: [usize; 2],
        #[serde(default)]
        dim: Option<usize>,
    },
    Span {
        span: Box<SpanPayload>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomPayload {
    pub src: String,
    pub tgt: String,
    pub sset: SSetPayload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScatComposeEntry {
    pub x: String,
    pub y: String,
    pub z: String,
    pub level: usize,
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScatPayload {
    Discrete {
        category: CategoryRef,
        #[serde(default)]
        dim: Option<usize>,
    },
    Monoid {
        monoid: CategoryRef,
        #[serde(default)]
        dim: Option<usize>,
    },
    Suspension {
        suspension: SSetPayload,
    },
    Resolution {
        resolution: CategoryRef,
        #[serde(default)]
        dim: Option<usize>,
    },
    Tables {
        objects: Vec<String>,
        homs: Vec<HomPayload>,
        identities: BTreeMap<String, String>,
        #[serde(default)]
        compose: Vec<ScatComposeEntry>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseRef {
    Simplex { simplex: usize },
    Category(CategoryRef),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PresheafPayload {
    Explicit {
        base: BaseRef,
        variance: Variance,
        sets: BTreeMap<String, Vec<String>>,
        #[serde(default)]
        action: BTreeMap<String, Vec<String>>,
    },
    Representable {
        base: BaseRef,
        variance: Variance,
        representable: String,
    },
    Terminal {
        base: BaseRef,
        variance: Variance,
        terminal: bool,
    },
    Simplicial {
        simplicial: SSetPayload,
        #[serde(default)]
        dim: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReedyPayload {
    Simplex {
        simplex: usize,
    },
    Explicit {
        base: CategoryRef,
        degree: BTreeMap<String, usize>,
        #[serde(default)]
        increasing: Option<Vec<String>>,
        #[serde(default)]
        decreasing: Option<Vec<String>>,
    },
}

// ----------------------------------------------------------------- loading

/// A span `left ← apex → right` of simplicial sets.
#[derive(Clone, Debug)]
pub struct Span {
    pub apex: SSet,
    pub left: SSet,
    pub right: SSet,
    pub f: SimplicialMap,
    pub g: SimplicialMap,
}

/// A presheaf together with the Reedy structure its base came with, if any.
#[derive(Clone, Debug)]
pub struct LoadedPresheaf {
    pub presheaf: Presheaf,
    pub reedy: Option<ReedyStructure>,
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Category(Fixture),
    SSet(SSet),
    Span(Span),
    SCat(SCat),
    Presheaf(LoadedPresheaf),
    Reedy(ReedyStructure),
}

impl Loaded {
    pub fn kind(&self) -> Kind {
        match self {
            Loaded::Category(_) => Kind::Category,
            Loaded::SSet(_) | Loaded::Span(_) => Kind::Sset,
            Loaded::SCat(_) => Kind::Scat,
            Loaded::Presheaf(_) => Kind::Presheaf,
            Loaded::Reedy(_) => Kind::Reedy,
        }
    }
}

/// Resolves a source string to a document and loads it.
pub fn load(source: &str) -> Result<Loaded> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name);
    }
    let path = Path::new(source);
    let resolved = if path.exists() {
        path.to_path_buf()
    } else {
        match std::env::var_os(FIXTURE_DIR_VAR) {
            Some(dir) => {
                let p = Path::new(&dir).join(format!("{source}.json"));
                if !p.exists() {
                    return Err(Error::Input(format!("no document `{source}` (looked in {})", p.display())));
                }
                p
            }
            None => return Err(Error::Input(format!("no such file `{source}`"))),
        }
    };
    let text = std::fs::read_to_string(&resolved)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", resolved.display())))?;
    let name = resolved
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "document".into());
    parse_named(&text, &name)
}

pub fn parse(text: &str) -> Result<Loaded> {
    parse_named(text, "document")
}

pub fn parse_named(text: &str, name: &str) -> Result<Loaded> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed document: {e}")))?;
    from_document(&doc, name)
}

pub fn from_document(doc: &Document, name: &str) -> Result<Loaded> {
    if doc.version != FORMAT_VERSION {
        return Err(Error::Input(format!("unsupported document version {}", doc.version)));
    }
    let p = doc.payload.clone();
    match doc.kind {
        Kind::Category => {
            let c: CategoryPayload = payload(p, "category")?;
            Ok(Loaded::Category(category_from_payload(&c, name)?))
        }
        Kind::Sset => {
            let s: SSetPayload = payload(p, "sset")?;
            match s {
                SSetPayload::Span { span } => Ok(Loaded::Span(span_from_payload(&span)?)),
                other => Ok(Loaded::SSet(sset_from_payload(&other)?)),
            }
        }
        Kind::Scat => {
            let s: ScatPayload = payload(p, "scat")?;
            Ok(Loaded::SCat(scat_from_payload(&s)?))
        }
        Kind::Presheaf => {
            let s: PresheafPayload = payload(p, "presheaf")?;
            Ok(Loaded::Presheaf(presheaf_from_payload(&s)?))
        }
        Kind::Reedy => {
            let s: ReedyPayload = payload(p, "reedy")?;
            Ok(Loaded::Reedy(reedy_from_payload(&s)?))
        }
    }
}

fn payload<T: serde::de::DeserializeOwned>(v: Value, kind: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Input(format!("payload does not match kind `{kind}`: {e}")))
}

/// Bundled documents: every category fixture plus three spans.
pub fn builtin(name: &str) -> Result<Loaded> {
    if let Some(fx) = fixtures::by_name(name) {
        return Ok(Loaded::Category(fx));
    }
    let point = SSet::standard_simplex(0, 2);
    let two_points = SSet::boundary(1, 2);
    let to_point = SimplicialMap::to_point(&two_points);
    let span = match name {
        "circle-span" => Span {
            apex: two_points.clone(),
            left: point.clone(),
            right: point.clone(),
            f: to_point.clone(),
            g: to_point,
        },
        "point-span" => Span {
            apex: point.clone(),
            left: point.clone(),
            right: point.clone(),
            f: SimplicialMap::identity(&point),
            g: SimplicialMap::identity(&point),
        },
        "loop-span" => {
            let interval = SSet::standard_simplex(1, 2);
            let incl = crate::lifting::inclusion_by_name(&two_points, &interval)?;
            Span {
                apex: two_points,
                left: point,
                right: interval,
                f: to_point,
                g: incl,
            }
        }
        _ => {
            return Err(Error::Input(format!(
                "unknown builtin `{name}`; known: {}",
                builtin_names().join(", ")
            )))
        }
    };
    Ok(Loaded::Span(span))
}

pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = fixtures::all_fixtures().into_iter().map(|f| f.name).collect();
    names.extend(["circle-span", "point-span", "loop-span"].map(String::from));
    names
}

fn category_ref(r: &CategoryRef) -> Result<Fixture> {
    match r {
        CategoryRef::Name(n) => fixtures::by_name(n).ok_or_else(|| Error::UnknownId(n.clone())),
        CategoryRef::Inline(p) => category_from_payload(p, "inline"),
    }
}

pub fn category_from_payload(p: &CategoryPayload, name: &str) -> Result<Fixture> {
    let mut b = CategoryBuilder::new();
    for o in &p.objects {
        b.object(o.clone());
    }
    for m in &p.morphisms {
        b.morphism(m.id.clone(), m.src.clone(), m.tgt.clone());
    }
    for c in &p.compose {
        b.compose(c.g.clone(), c.f.clone(), c.gf.clone());
    }
    let category = b.build()?;
    let weq = match &p.weq {
        Some(ids) => WeakEquivalences::from_ids(&category, ids)?,
        None => WeakEquivalences::identities(&category),
    };
    Ok(Fixture {
        name: name.to_string(),
        category,
        weq,
    })
}

pub fn category_payload(c: &FinCategory, w: Option<&WeakEquivalences>) -> CategoryPayload {
    let mut compose = Vec::new();
    for f in c.non_identity_morphisms() {
        for &g in c.out_of(c.tgt(f)) {
            if c.is_identity(g) {
                continue;
            }
            if let Some(gf) = c.compose(g, f) {
                compose.push(ComposeEntry {
                    g: c.morphism_id(g).into(),
                    f: c.morphism_id(f).into(),
                    gf: c.morphism_id(gf).into(),
                });
            }
        }
    }
    CategoryPayload {
        objects: c.objects().to_vec(),
        morphisms: c
            .non_identity_morphisms()
            .map(|m| MorphismEntry {
                id: c.morphism_id(m).into(),
                src: c.object_id(c.src(m)).into(),
                tgt: c.object_id(c.tgt(m)).into(),
            })
            .collect(),
        compose,
        weq: w.map(|w| {
            w.members()
                .filter(|&m| !c.is_identity(m))
                .map(|m| c.morphism_id(m).to_string())
                .collect()
        }),
    }
}

pub fn category_document(c: &FinCategory, w: Option<&WeakEquivalences>) -> Document {
    Document {
        kind: Kind::Category,
        version: FORMAT_VERSION,
        payload: serde_json::to_value(category_payload(c, w)).expect("serializable"),
    }
}

pub fn sset_payload(x: &SSet) -> SSetPayload {
    let t = x.truncation();
    let levels = (0..=t)
        .map(|n| {
            let mut operators = BTreeMap::new();
            if n > 0 {
                for i in 0..=n {
                    let col = (0..x.len(n)).map(|s| x.name(n - 1, x.face(n, s, i)).to_string()).collect();
                    operators.insert(format!("d{i}"), col);
                }
            }
            if n < t {
                for j in 0..=n {
                    let col = (0..x.len(n)).map(|s| x.name(n + 1, x.degen(n, s, j)).to_string()).collect();
                    operators.insert(format!("s{j}"), col);
                }
            }
            LevelPayload {
                simplices: x.names(n).to_vec(),
                operators,
            }
        })
        .collect();
    SSetPayload::Tables { levels }
}

pub fn sset_document(x: &SSet) -> Document {
    Document {
        kind: Kind::Sset,
        version: FORMAT_VERSION,
        payload: serde_json::to_value(sset_payload(x)).expect("serializable"),
    }
}

fn index_of(ids: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut out = HashMap::new();
    for (i, id) in ids.iter().enumerate() {
        if out.insert(id.clone(), i).is_some() {
            return Err(Error::Input(format!("duplicate {what} id `{id}`")));
        }
    }
    Ok(out)
}

pub fn sset_from_payload(p: &SSetPayload) -> Result<SSet> {
    match p {
        SSetPayload::Tables { levels } => sset_from_tables(levels),
        SSetPayload::Nerve { nerve, dim } => Ok(SSet::nerve(&category_ref(nerve)?.category, dim.unwrap_or(3))),
        SSetPayload::Simplex { simplex, dim } => Ok(SSet::standard_simplex(*simplex, dim.unwrap_or(*simplex))),
        SSetPayload::Boundary { boundary, dim } => Ok(SSet::boundary(*boundary, dim.unwrap_or(*boundary))),
        SSetPayload::Horn { horn, dim } => SSet::horn(horn[0], horn[1], dim.unwrap_or(horn[0])),
        SSetPayload::Span { .. } => Err(Error::Input("a span is not a simplicial set; use ho-pushout".into())),
    }
}

fn sset_from_tables(levels: &[LevelPayload]) -> Result<SSet> {
    if levels.is_empty() {
        return Err(Error::Input("a simplicial set needs at least level 0".into()));
    }
    let t = levels.len() - 1;
    let index: Vec<HashMap<String, usize>> = levels
        .iter()
        .enumerate()
        .map(|(n, l)| index_of(&l.simplices, &format!("level-{n} simplex")))
        .collect::<Result<_>>()?;
    let mut faces = Vec::with_capacity(t + 1);
    let mut degens = Vec::with_capacity(t + 1);
    for (n, level) in levels.iter().enumerate() {
        let count = level.simplices.len();
        let column = |key: String, target: usize| -> Result<Vec<usize>> {
            let col = level
                .operators
                .get(&key)
                .ok_or_else(|| Error::Input(format!("level {n} is missing table `{key}`")))?;
            if col.len() != count {
                return Err(Error::Input(format!("table `{key}` at level {n} has the wrong length")));
            }
            col.iter()
                .map(|id| {
                    index[target]
                        .get(id)
                        .copied()
                        .ok_or_else(|| Error::UnknownId(format!("{id} (table `{key}`, level {n})")))
                })
                .collect()
        };
        for key in level.operators.keys() {
            let ok = match (key.as_bytes().first(), key[1..].parse::<usize>()) {
                (Some(b'd'), Ok(i)) => n > 0 && i <= n,
                (Some(b's'), Ok(j)) => n < t && j <= n,
                _ => false,
            };
            if !ok {
                return Err(Error::Input(format!("unexpected table `{key}` at level {n}")));
            }
        }
        let fcols: Vec<Vec<usize>> = if n == 0 {
            Vec::new()
        } else {
            (0..=n).map(|i| column(format!("d{i}"), n - 1)).collect::<Result<_>>()?
        };
        let scols: Vec<Vec<usize>> = if n == t {
            Vec::new()
        } else {
            (0..=n).map(|j| column(format!("s{j}"), n + 1)).collect::<Result<_>>()?
        };
        faces.push((0..count).map(|x| fcols.iter().map(|c| c[x]).collect()).collect());
        degens.push((0..count).map(|x| scols.iter().map(|c| c[x]).collect()).collect());
    }
    let names = levels.iter().map(|l| l.simplices.clone()).collect();
    let x = SSet::from_tables(t, names, faces, degens)?;
    if let Some(v) = x.validate().first() {
        return Err(Error::Input(v.clone()));
    }
    Ok(x)
}

/// Completes a partial map level by level: degenerate simplices follow
/// their sources, the rest go to the unique simplex with the right faces.
pub fn map_from_payload(src: &SSet, tgt: &SSet, p: &MapPayload) -> Result<SimplicialMap> {
    let t = src.truncation().min(tgt.truncation());
    if src.truncation() != tgt.truncation() {
        return Err(Error::Truncation("map ends have different truncations".into()));
    }
    let mut levels: Vec<Vec<usize>> = Vec::with_capacity(t + 1);
    for n in 0..=t {
        let mut level = Vec::with_capacity(src.len(n));
        for x in 0..src.len(n) {
            let image = if let Some(id) = p.get(n).and_then(|m| m.get(src.name(n, x))) {
                tgt.find(n, id)
                    .ok_or_else(|| Error::UnknownId(format!("{id} (map image at level {n})")))?
            } else if n == 0 {
                return Err(Error::Input(format!("vertex `{}` has no image", src.name(0, x))));
            } else if let Some((y, j)) = src.degeneracy_source(n, x) {
                tgt.degen(n - 1, levels[n - 1][y], j)
            } else {
                let want: Vec<usize> = src.faces_of(n, x).iter().map(|&y| levels[n - 1][y]).collect();
                let found: Vec<usize> = (0..tgt.len(n)).filter(|&y| tgt.faces_of(n, y) == want.as_slice()).collect();
                match found.as_slice() {
                    [y] => *y,
                    [] => {
                        return Err(Error::Input(format!(
                            "no image for `{}`: no simplex has the required faces",
                            src.name(n, x)
                        )))
                    }
                    _ => {
                        return Err(Error::Input(format!(
                            "image of `{}` is ambiguous; give it explicitly",
                            src.name(n, x)
                        )))
                    }
                }
            };
            level.push(image);
        }
        levels.push(level);
    }
    let f = SimplicialMap { levels };
    if let Some(v) = f.validate(src, tgt).first() {
        return Err(Error::Input(v.clone()));
    }
    Ok(f)
}

fn span_from_payload(p: &SpanPayload) -> Result<Span> {
    let apex = sset_from_payload(&p.apex)?;
    let left = sset_from_payload(&p.left)?;
    let right = sset_from_payload(&p.right)?;
    let f = map_from_payload(&apex, &left, &p.f)?;
    let g = map_from_payload(&apex, &right, &p.g)?;
    Ok(Span { apex, left, right, f, g })
}

pub fn scat_from_payload(p: &ScatPayload) -> Result<SCat> {
    match p {
        ScatPayload::Discrete { category, dim } => Ok(SCat::from_category(&category_ref(category)?.category, dim.unwrap_or(2))),
        ScatPayload::Monoid { monoid, dim } => SCat::from_commutative_monoid(&category_ref(monoid)?.category, dim.unwrap_or(2)),
        ScatPayload::Suspension { suspension } => Ok(SCat::suspension(&sset_from_payload(suspension)?)),
        ScatPayload::Resolution { resolution, dim } => {
            Ok(free_resolution(&category_ref(resolution)?.category, dim.unwrap_or(2))?.scat)
        }
        ScatPayload::Tables {
            objects,
            homs,
            identities,
            compose,
        } => scat_from_tables(objects, homs, identities, compose),
    }
}

fn scat_from_tables(
    objects: &[String],
    homs: &[HomPayload],
    identities: &BTreeMap<String, String>,
    compose: &[ScatComposeEntry],
) -> Result<SCat> {
    let obj = index_of(objects, "object")?;
    let no = objects.len();
    let find_obj = |id: &str| obj.get(id).copied().ok_or_else(|| Error::UnknownId(id.to_string()));
    let mut slots: Vec<Option<SSet>> = vec![None; no * no];
    for h in homs {
        let (x, y) = (find_obj(&h.src)?, find_obj(&h.tgt)?);
        if slots[x * no + y].replace(sset_from_payload(&h.sset)?).is_some() {
            return Err(Error::Input(format!("Map({}, {}) given twice", h.src, h.tgt)));
        }
    }
    let t = slots.iter().flatten().map(|s| s.truncation()).max().unwrap_or(0);
    let homs: Vec<SSet> = slots.into_iter().map(|s| s.unwrap_or_else(|| SSet::empty(t))).collect();
    let mut ids = Vec::with_capacity(no);
    for (x, o) in objects.iter().enumerate() {
        let v = identities.get(o).ok_or_else(|| Error::Input(format!("object `{o}` has no identity")))?;
        ids.push(
            homs[x * no + x]
                .find(0, v)
                .ok_or_else(|| Error::UnknownId(format!("{v} (identity of {o})")))?,
        );
    }
    let mut table: HashMap<(usize, usize, usize, usize, usize, usize), usize> = HashMap::new();
    for e in compose {
        let (x, y, z) = (find_obj(&e.x)?, find_obj(&e.y)?, find_obj(&e.z)?);
        let n = e.level;
        let lookup = |h: &SSet, id: &str| {
            if n > h.truncation() {
                return Err(Error::Input(format!("composition level {n} exceeds truncation")));
            }
            h.find(n, id).ok_or_else(|| Error::UnknownId(format!("{id} (level {n})")))
        };
        let g = lookup(&homs[y * no + z], &e.g)?;
        let f = lookup(&homs[x * no + y], &e.f)?;
        let gf = lookup(&homs[x * no + z], &e.gf)?;
        table.insert((x, y, z, n, g, f), gf);
    }
    let constant = |x: usize, n: usize| homs[x * no + x].constant(ids[x], n);
    let missing = std::cell::Cell::new(None);
    let s = SCat::new(objects.to_vec(), homs.clone(), ids.clone(), |x, y, z, n, g, f| {
        if let Some(&gf) = table.get(&(x, y, z, n, g, f)) {
            gf
        } else if x == y && f == constant(x, n) {
            g
        } else if y == z && g == constant(y, n) {
            f
        } else {
            if missing.get().is_none() {
                missing.set(Some((x, y, z, n, g, f)));
            }
            usize::MAX
        }
    });
    if let Some((x, y, z, n, g, f)) = missing.get() {
        return Err(Error::Input(format!(
            "composite of {} and {} (level {n}, {} -> {} -> {}) is missing",
            homs[y * no + z].name(n, g),
            homs[x * no + y].name(n, f),
            objects[x],
            objects[y],
            objects[z]
        )));
    }
    s
}

fn base_ref(b: &BaseRef) -> Result<(FinCategory, Option<ReedyStructure>)> {
    match b {
        BaseRef::Simplex { simplex } => {
            let r = ReedyStructure::simplex(*simplex);
            Ok((r.base.clone(), Some(r)))
        }
        BaseRef::Category(c) => Ok((category_ref(c)?.category, None)),
    }
}

pub fn presheaf_from_payload(p: &PresheafPayload) -> Result<LoadedPresheaf> {
    match p {
        PresheafPayload::Explicit {
            base,
            variance,
            sets,
            action,
        } => {
            let (c, reedy) = base_ref(base)?;
            for o in sets.keys() {
                c.object_index(o)?;
            }
            let elems: Vec<Vec<String>> = c
                .objects()
                .iter()
                .map(|o| sets.get(o).cloned().unwrap_or_default())
                .collect();
            let index: Vec<HashMap<String, usize>> = elems
                .iter()
                .map(|s| index_of(s, "element"))
                .collect::<Result<_>>()?;
            for m in action.keys() {
                c.morphism_index(m)?;
            }
            let mut table = Vec::with_capacity(c.num_morphisms());
            for m in 0..c.num_morphisms() {
                let (s, t) = match variance {
                    Variance::Covariant => (c.src(m), c.tgt(m)),
                    Variance::Contravariant => (c.tgt(m), c.src(m)),
                };
                let row = match action.get(c.morphism_id(m)) {
                    Some(images) => {
                        if images.len() != elems[s].len() {
                            return Err(Error::Input(format!(
                                "action of `{}` lists {} images for {} elements",
                                c.morphism_id(m),
                                images.len(),
                                elems[s].len()
                            )));
                        }
                        images
                            .iter()
                            .map(|e| {
                                index[t]
                                    .get(e)
                                    .copied()
                                    .ok_or_else(|| Error::UnknownId(format!("{e} (action of {})", c.morphism_id(m))))
                            })
                            .collect::<Result<Vec<_>>>()?
                    }
                    None if c.is_identity(m) => (0..elems[s].len()).collect(),
                    None => return Err(Error::Input(format!("no action given for `{}`", c.morphism_id(m)))),
                };
                table.push(row);
            }
            Ok(LoadedPresheaf {
                presheaf: Presheaf::new(c, *variance, elems, table)?,
                reedy,
            })
        }
        PresheafPayload::Representable {
            base,
            variance,
            representable,
        } => {
            let (c, reedy) = base_ref(base)?;
            let d = c.object_index(representable)?;
            Ok(LoadedPresheaf {
                presheaf: Presheaf::representable(&c, d, *variance),
                reedy,
            })
        }
        PresheafPayload::Terminal {
            base,
            variance,
            terminal,
        } => {
            let (c, reedy) = base_ref(base)?;
            let presheaf = if *terminal {
                Presheaf::terminal(&c, *variance)
            } else {
                Presheaf::empty(&c, *variance)
            };
            Ok(LoadedPresheaf { presheaf, reedy })
        }
        PresheafPayload::Simplicial { simplicial, dim } => {
            let x = sset_from_payload(simplicial)?;
            let n = dim.unwrap_or(x.truncation()).min(x.truncation());
            Ok(LoadedPresheaf {
                presheaf: Presheaf::from_sset(&x, n)?,
                reedy: Some(ReedyStructure::simplex(n)),
            })
        }
    }
}

pub fn reedy_from_payload(p: &ReedyPayload) -> Result<ReedyStructure> {
    match p {
        ReedyPayload::Simplex { simplex } => Ok(ReedyStructure::simplex(*simplex)),
        ReedyPayload::Explicit {
            base,
            degree,
            increasing,
            decreasing,
        } => {
            let c = category_ref(base)?.category;
            let mut deg = vec![None; c.num_objects()];
            for (o, &d) in degree {
                deg[c.object_index(o)?] = Some(d);
            }
            let deg: Vec<usize> = deg
                .into_iter()
                .enumerate()
                .map(|(o, d)| d.ok_or_else(|| Error::Input(format!("object `{}` has no degree", c.object_id(o)))))
                .collect::<Result<_>>()?;
            let mut r = ReedyStructure::from_degrees(&c, deg);
            let mark = |ids: &[String]| -> Result<Vec<bool>> {
                let mut out: Vec<bool> = (0..c.num_morphisms()).map(|m| c.is_identity(m)).collect();
                for id in ids {
                    out[c.morphism_index(id)?] = true;
                }
                Ok(out)
            };
            if let Some(ids) = increasing {
                r.increasing = mark(ids)?;
            }
            if let Some(ids) = decreasing {
                r.decreasing = mark(ids)?;
            }
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_round_trip() {
        for fx in fixtures::all_fixtures() {
            let doc = category_document(&fx.category, Some(&fx.weq));
            let text = doc.to_json();
            let Loaded::Category(back) = parse(&text).unwrap() else {
                panic!("kind")
            };
            assert!(back.category.same_up_to_order(&fx.category), "{}", fx.name);
            let a: Vec<usize> = fx.weq.members().collect();
            let b: Vec<usize> = back.weq.members().map(|m| fx.category.morphism_index(back.category.morphism_id(m)).unwrap()).collect();
            let (mut a, mut b) = (a, b);
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "{}", fx.name);
        }
    }

    #[test]
    fn sset_round_trip() {
        for x in [
            SSet::nerve(&fixtures::span().category, 2),
            SSet::boundary(2, 3),
            SSet::horn(2, 1, 2).unwrap(),
        ] {
            let Loaded::SSet(y) = parse(&sset_document(&x).to_json()).unwrap() else {
                panic!("kind")
            };
            assert!(y.same_tables(&x));
        }
    }

    #[test]
    fn shorthand_payloads() {
        let text = r#"{"kind":"sset","payload":{"nerve":"ordinal2","dim":3}}"#;
        let Loaded::SSet(x) = parse(text).unwrap() else { panic!() };
        assert!(x.same_tables(&SSet::nerve(&FinCategory::ordinal(2), 3)));
        let text = r#"{"kind":"presheaf","payload":{"base":{"simplex":2},"variance":"contravariant","representable":"[1]"}}"#;
        let Loaded::Presheaf(p) = parse(text).unwrap() else { panic!() };
        assert_eq!(p.presheaf.sets.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert!(p.reedy.is_some());
        let text = r#"{"kind":"scat","payload":{"suspension":{"simplex":1,"dim":2}}}"#;
        let Loaded::SCat(s) = parse(text).unwrap() else { panic!() };
        assert_eq!(s.num_objects(), 2);
    }

    #[test]
    fn explicit_presheaf_and_errors() {
        let text = r#"{"kind":"presheaf","payload":{
            "base":"walking-arrow","variance":"covariant",
            "sets":{"0":["p","q"],"1":["r"]},
            "action":{"0->1":["r","r"]}}}"#;
        let Loaded::Presheaf(p) = parse(text).unwrap() else { panic!() };
        assert_eq!(p.presheaf.sets, vec![vec!["p".to_string(), "q".into()], vec!["r".into()]]);
        let bad = r#"{"kind":"presheaf","payload":{
            "base":"walking-arrow","variance":"covariant",
            "sets":{"0":["p"],"1":["r"]},
            "action":{"0->1":["zz"]}}}"#;
        assert!(matches!(parse(bad), Err(Error::UnknownId(_))));
        assert!(matches!(parse("{\"kind\":\"bogus\",\"payload\":{}}"), Err(Error::Input(_))));
        assert!(matches!(load("builtin:nope"), Err(Error::Input(_))));
    }

    #[test]
    fn explicit_scat_fills_identity_composites() {
        // Σ(Δ⁰): objects a, b with a single point from a to b
        let pt = r#"{"levels":[{"simplices":["*"],"s0":["s*"]},{"simplices":["s*"],"d0":["*"],"d1":["*"]}]}"#;
        let text = format!(
            r#"{{"kind":"scat","payload":{{"objects":["a","b"],
               "homs":[{{"src":"a","tgt":"a","sset":{pt}}},{{"src":"b","tgt":"b","sset":{pt}}},{{"src":"a","tgt":"b","sset":{pt}}}],
               "identities":{{"a":"*","b":"*"}}}}}}"#
        );
        let Loaded::SCat(s) = parse(&text).unwrap() else { panic!() };
        assert_eq!(s.num_objects(), 2);
        assert_eq!(s.hom(0, 1).level_sizes(), vec![1, 1]);
        assert_eq!(s.hom(1, 0).level_sizes(), vec![0, 0]);
        assert!(s.validate().is_empty());
    }

    #[test]
    fn builtin_spans_load() {
        for name in ["circle-span", "point-span", "loop-span"] {
            assert!(matches!(load(&format!("builtin:{name}")).unwrap(), Loaded::Span(_)));
        }
    }

    #[test]
    fn partial_maps_extend_by_faces() {
        let a = SSet::boundary(1, 2);
        let x = SSet::standard_simplex(1, 2);
        let mut v = BTreeMap::new();
        v.insert(a.name(0, 0).to_string(), x.name(0, 0).to_string());
        v.insert(a.name(0, 1).to_string(), x.name(0, 1).to_string());
        let f = map_from_payload(&a, &x, &vec![v]).unwrap();
        assert!(f.validate(&a, &x).is_empty());
    }
}
