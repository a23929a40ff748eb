//! Command-line front end. Every subcommand loads documents, runs one
//! construction and renders a deterministic plain-text report.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 bad input,
//! 3 a resource bound was hit.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};

use crate::coherent::{augmentation, coherent_nerve_with_limit, free_resolution, is_simplicial_computad, DEFAULT_NERVE_LIMIT};
use crate::document::{self, Loaded, LoadedPresheaf};
use crate::error::Error;
use crate::fincat::FinCategory;
use crate::fixtures::Fixture;
use crate::fractions::{build_fractions_with_limit, Status, DEFAULT_WORD_LIMIT};
use crate::hammock::{class_of_row, enumerate_with_limit, DEFAULT_HAMMOCK_LIMIT};
use crate::lifting::{is_kan, is_quasi_category};
use crate::quasicat::{homotopy_category, mapping_space};
use crate::scat::SCat;
use crate::sset::SSet;
use crate::suite;
use crate::weighted::{
    latching, matching, reedy_factorize, validate_reedy, weighted_colimit, weighted_limit_with_budget, Presheaf,
    ReedyStructure, WeightedColimit, WeightedLimit, DEFAULT_LIMIT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_MAPSPACE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub exit_code: i32,
}

#[derive(Parser, Debug)]
#[command(name = "hokit", version, about = "Finite models of homotopy-theoretic constructions")]
struct Cli {
    /// Cap on the number of objects an enumeration may produce.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Doc {
    /// Document path, `builtin:<name>`, or a name under $HOKIT_FIXTURES.
    doc: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load a document and check its invariants.
    Validate(Doc),
    /// Nerve of a category.
    Nerve {
        #[command(flatten)]
        doc: Doc,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Print the nerve as an sset document instead of a summary.
        #[arg(long)]
        emit: bool,
    },
    /// Category of fractions by bounded zig-zag closure.
    Fractions {
        #[command(flatten)]
        doc: Doc,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Hammocks between two objects, with their components.
    Hammock {
        #[command(flatten)]
        doc: Doc,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 3)]
        len: usize,
        #[arg(long, default_value_t = 1)]
        width: usize,
        /// Zig-zag bound for labelling components by fraction classes.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Inner horn filling.
    Qc {
        #[command(flatten)]
        doc: Doc,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// All horn filling.
    Kan {
        #[command(flatten)]
        doc: Doc,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// Homotopy category of a quasi-category or simplicial category.
    Hocat(Doc),
    /// Mapping space between two vertices of a quasi-category.
    Mapspace {
        #[command(flatten)]
        doc: Doc,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 1)]
        dim: usize,
    },
    /// Strict and homotopy pushout of a span.
    HoPushout(Doc),
    /// Free simplicial resolution of a category.
    Resolve {
        #[command(flatten)]
        doc: Doc,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Homotopy coherent nerve of a simplicial category.
    Cnerve {
        #[command(flatten)]
        doc: Doc,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// Weighted limit of a diagram.
    Wlim { weight: String, diagram: String },
    /// Weighted colimit of a diagram.
    Wcolim { weight: String, diagram: String },
    /// Reedy structures.
    Reedy {
        #[command(subcommand)]
        action: ReedyAction,
    },
    /// Latching object of a presheaf at an object.
    Latching {
        #[command(flatten)]
        doc: Doc,
        #[arg(long)]
        at: String,
        /// Reedy document; defaults to the structure of a simplex-category base.
        #[arg(long)]
        reedy: Option<String>,
    },
    /// Matching object of a presheaf at an object.
    Matching {
        #[command(flatten)]
        doc: Doc,
        #[arg(long)]
        at: String,
        #[arg(long)]
        reedy: Option<String>,
    },
    /// Run the acceptance battery.
    Suite {
        /// Run only this criterion.
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum ReedyAction {
    Validate(Doc),
    Factor {
        #[command(flatten)]
        doc: Doc,
        /// Factor only this morphism.
        #[arg(long)]
        morphism: Option<String>,
    },
}

/// A command's report, or an error classified for the exit code.
type Run = std::result::Result<(String, i32), Error>;

pub fn run(args: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Outcome {
                report: e.render().to_string(),
                exit_code: code,
            };
        }
    };
    match dispatch(&cli) {
        Ok((report, exit_code)) => Outcome { report, exit_code },
        Err(e) => Outcome {
            report: format!("error: {e}\n"),
            exit_code: exit_code_for(&e),
        },
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn dispatch(cli: &Cli) -> Run {
    let budget = cli.budget;
    match &cli.command {
        Command::Validate(d) => validate(&d.doc),
        Command::Nerve { doc, dim, emit } => nerve(&doc.doc, *dim, *emit),
        Command::Fractions { doc, bound } => fractions(&doc.doc, *bound, budget),
        Command::Hammock {
            doc,
            from,
            to,
            len,
            width,
            bound,
        } => hammock(&doc.doc, from, to, *len, *width, *bound, budget),
        Command::Qc { doc, nmax } => horns(&doc.doc, *nmax, true),
        Command::Kan { doc, nmax } => horns(&doc.doc, *nmax, false),
        Command::Hocat(d) => hocat(&d.doc),
        Command::Mapspace { doc, from, to, dim } => mapspace(&doc.doc, from, to, *dim, budget),
        Command::HoPushout(d) => ho_pushout(&d.doc),
        Command::Resolve { doc, dim } => resolve(&doc.doc, *dim),
        Command::Cnerve { doc, nmax } => cnerve(&doc.doc, *nmax, budget),
        Command::Wlim { weight, diagram } => wlim(weight, diagram, budget),
        Command::Wcolim { weight, diagram } => wcolim(weight, diagram),
        Command::Reedy { action } => match action {
            ReedyAction::Validate(d) => reedy_validate(&d.doc),
            ReedyAction::Factor { doc, morphism } => reedy_factor(&doc.doc, morphism.as_deref()),
        },
        Command::Latching { doc, at, reedy } => boundary_object(&doc.doc, at, reedy.as_deref(), true),
        Command::Matching { doc, at, reedy } => boundary_object(&doc.doc, at, reedy.as_deref(), false),
        Command::Suite { only } => run_suite(*only),
    }
}

// ----------------------------------------------------------------- inputs

fn wrong_kind(source: &str, loaded: &Loaded, want: &str) -> Error {
    Error::Input(format!("`{source}` is a {} document; expected {want}", loaded.kind().as_str()))
}

fn load_category(source: &str) -> Result<Fixture, Error> {
    match document::load(source)? {
        Loaded::Category(fx) => Ok(fx),
        other => Err(wrong_kind(source, &other, "a category")),
    }
}

/// Simplicial sets load as themselves; categories load as their nerves.
fn load_sset(source: &str, dim: usize) -> Result<(String, SSet), Error> {
    match document::load(source)? {
        Loaded::SSet(x) => Ok((source.to_string(), x)),
        Loaded::Category(fx) => Ok((format!("N({})", fx.name), SSet::nerve(&fx.category, dim))),
        other => Err(wrong_kind(source, &other, "a simplicial set or category")),
    }
}

/// Simplicial categories load as themselves; categories as discrete ones.
fn load_scat(source: &str, dim: usize) -> Result<SCat, Error> {
    match document::load(source)? {
        Loaded::SCat(s) => Ok(s),
        Loaded::Category(fx) => Ok(SCat::from_category(&fx.category, dim)),
        other => Err(wrong_kind(source, &other, "a simplicial category or category")),
    }
}

fn load_presheaf(source: &str) -> Result<LoadedPresheaf, Error> {
    match document::load(source)? {
        Loaded::Presheaf(p) => Ok(p),
        other => Err(wrong_kind(source, &other, "a presheaf")),
    }
}

fn load_reedy(source: &str) -> Result<ReedyStructure, Error> {
    match document::load(source)? {
        Loaded::Reedy(r) => Ok(r),
        other => Err(wrong_kind(source, &other, "a Reedy structure")),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sorted<T: Clone + Ord>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn level_summary(out: &mut String, x: &SSet) {
    for n in 0..=x.truncation() {
        let _ = writeln!(out, "level {n}: {} simplices, {} non-degenerate", x.len(n), x.nondegenerate(n).len());
    }
}

fn category_summary(out: &mut String, c: &FinCategory) {
    let _ = writeln!(out, "objects: {}", sorted(c.objects()).join(" "));
    let mut arrows: Vec<String> = c
        .non_identity_morphisms()
        .map(|m| format!("{}: {} -> {}", c.morphism_id(m), c.object_id(c.src(m)), c.object_id(c.tgt(m))))
        .collect();
    arrows.sort();
    let _ = writeln!(out, "morphisms: {}", arrows.len());
    for a in arrows {
        let _ = writeln!(out, "  {a}");
    }
    let mut comps = Vec::new();
    for f in c.non_identity_morphisms() {
        for &g in c.out_of(c.tgt(f)) {
            if c.is_identity(g) {
                continue;
            }
            if let Some(gf) = c.compose(g, f) {
                comps.push(format!("{} o {} = {}", c.morphism_id(g), c.morphism_id(f), c.morphism_id(gf)));
            }
        }
    }
    comps.sort();
    let _ = writeln!(out, "composites: {}", comps.len());
    for l in comps {
        let _ = writeln!(out, "  {l}");
    }
}

// --------------------------------------------------------------- commands

fn validate(source: &str) -> Run {
    let loaded = document::load(source)?;
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", loaded.kind().as_str());
    let violations: Vec<String> = match &loaded {
        Loaded::Category(fx) => {
            let _ = writeln!(
                out,
                "objects: {}; morphisms: {}; weak equivalences: {}",
                fx.category.num_objects(),
                fx.category.num_morphisms(),
                fx.weq.len()
            );
            let mut v: Vec<String> = fx.category.validate().iter().map(|v| v.to_string()).collect();
            if !fx.weq.is_subcategory(&fx.category) {
                v.push("weak equivalences do not form a wide subcategory".into());
            }
            v
        }
        Loaded::SSet(x) => {
            let _ = writeln!(out, "truncation: {}; level sizes: {:?}", x.truncation(), x.level_sizes());
            x.validate()
        }
        Loaded::Span(s) => {
            let mut v = s.f.validate(&s.apex, &s.left);
            v.extend(s.g.validate(&s.apex, &s.right));
            let _ = writeln!(out, "span apex level sizes: {:?}", s.apex.level_sizes());
            v
        }
        Loaded::SCat(s) => {
            let _ = writeln!(out, "objects: {}; truncation: {}", s.num_objects(), s.truncation());
            s.validate()
        }
        Loaded::Presheaf(p) => {
            let sizes: Vec<usize> = p.presheaf.sets.iter().map(Vec::len).collect();
            let _ = writeln!(out, "variance: {:?}; set sizes: {sizes:?}", p.presheaf.variance);
            p.presheaf.validate()
        }
        Loaded::Reedy(r) => validate_reedy(r).violations,
    };
    if violations.is_empty() {
        out.push_str("violations: none\n");
        Ok((out, EXIT_OK))
    } else {
        let _ = writeln!(out, "violations: {}", violations.len());
        for v in &violations {
            let _ = writeln!(out, "  {v}");
        }
        Ok((out, EXIT_PROPERTY))
    }
}

fn nerve(source: &str, dim: usize, emit: bool) -> Run {
    let fx = load_category(source)?;
    let x = SSet::nerve(&fx.category, dim);
    if emit {
        return Ok((document::sset_document(&x).to_json() + "\n", EXIT_OK));
    }
    let mut out = format!("nerve of {} up to dimension {dim}\n", fx.name);
    level_summary(&mut out, &x);
    Ok((out, EXIT_OK))
}

fn fractions(source: &str, bound: usize, budget: Option<usize>) -> Run {
    let fx = load_category(source)?;
    let c = &fx.category;
    let f = build_fractions_with_limit(c, &fx.weq, bound, budget.unwrap_or(DEFAULT_WORD_LIMIT))?;
    let mut out = format!("fractions of {} (bound {bound})\n", fx.name);
    let complete = f.status() == Status::Complete;
    let _ = writeln!(
        out,
        "status: {}",
        if complete {
            "complete".to_string()
        } else {
            format!("truncated (bound `--bound` = {bound} hit)")
        }
    );
    let _ = writeln!(out, "zig-zags enumerated: {}", f.words_enumerated());
    let _ = writeln!(out, "classes: {}", f.classes().len());
    let mut objs: Vec<usize> = (0..c.num_objects()).collect();
    objs.sort_by_key(|&o| c.object_id(o));
    let names: Vec<&str> = objs.iter().map(|&o| c.object_id(o)).collect();
    let _ = writeln!(out, "objects: {}", names.join(" "));
    for &x in &objs {
        for &y in &objs {
            let mut reps: Vec<String> = f.hom(x, y).iter().map(|&k| f.class_name(k)).collect();
            reps.sort();
            let _ = writeln!(out, "hom({}, {}): {}", c.object_id(x), c.object_id(y), reps.join(", "));
        }
    }
    Ok((out, if complete { EXIT_OK } else { EXIT_BUDGET }))
}

fn hammock(source: &str, from: &str, to: &str, len: usize, width: usize, bound: usize, budget: Option<usize>) -> Run {
    let fx = load_category(source)?;
    let c = &fx.category;
    let (x, y) = (c.object_index(from)?, c.object_index(to)?);
    let mx = enumerate_with_limit(c, &fx.weq, x, y, len, width, budget.unwrap_or(DEFAULT_HAMMOCK_LIMIT))?;
    let f = build_fractions_with_limit(c, &fx.weq, bound, DEFAULT_WORD_LIMIT)?;
    let mut out = format!("hammocks of {} from {from} to {to} (length {len}, width {width})\n", fx.name);
    for (k, n) in mx.counts().iter().enumerate() {
        let _ = writeln!(out, "width {k}: {n}");
    }
    let comps = mx.components();
    let mut reps: Vec<(usize, String, String)> = Vec::new();
    for (i, &k) in comps.iter().enumerate() {
        if reps.iter().any(|r| r.0 == k) {
            continue;
        }
        let h = &mx.levels[0][i];
        let class = if f.is_complete() {
            class_of_row(&f, h, 0).map_or("?".into(), |k| f.class_name(k))
        } else {
            "?".into()
        };
        reps.push((k, h.display(c).to_string(), class));
    }
    reps.sort_by(|a, b| a.1.cmp(&b.1));
    let _ = writeln!(out, "components: {}", reps.len());
    for (_, h, class) in reps {
        let _ = writeln!(out, "  {h}  [fraction {class}]");
    }
    Ok((out, EXIT_OK))
}

fn horns(source: &str, nmax: usize, inner: bool) -> Run {
    let (name, x) = load_sset(source, nmax)?;
    if inner {
        let r = is_quasi_category(&x, nmax)?;
        let mut out = format!("{name}, horns up to dimension {nmax}: {} checked\n", r.horns_checked);
        match &r.witness {
            None => {
                let _ = writeln!(out, "quasi-category: yes; inner fillers unique: {}", yes(r.unique));
                Ok((out, EXIT_OK))
            }
            Some(w) => {
                let _ = writeln!(out, "quasi-category: no; unfillable horn {w}");
                Ok((out, EXIT_PROPERTY))
            }
        }
    } else {
        let r = is_kan(&x, nmax)?;
        let mut out = format!("{name}, horns up to dimension {nmax}: {} checked\n", r.horns_checked);
        match &r.witness {
            None => {
                out.push_str("kan complex: yes\n");
                Ok((out, EXIT_OK))
            }
            Some(w) => {
                let _ = writeln!(out, "kan complex: no; unfillable horn {w}");
                Ok((out, EXIT_PROPERTY))
            }
        }
    }
}

fn hocat(source: &str) -> Run {
    let loaded = document::load(source)?;
    let mut out = String::new();
    let c = match loaded {
        Loaded::SCat(s) => {
            out.push_str("homotopy category of a simplicial category\n");
            s.homotopy_category()?
        }
        Loaded::SSet(x) => {
            out.push_str("homotopy category of a quasi-category\n");
            homotopy_category(&x)?.category
        }
        Loaded::Category(fx) => {
            let _ = writeln!(out, "homotopy category of N({})", fx.name);
            homotopy_category(&SSet::nerve(&fx.category, 3))?.category
        }
        other => return Err(wrong_kind(source, &other, "a simplicial set, simplicial category or category")),
    };
    category_summary(&mut out, &c);
    Ok((out, EXIT_OK))
}

fn mapspace(source: &str, from: &str, to: &str, dim: usize, budget: Option<usize>) -> Run {
    let (name, x) = load_sset(source, 3)?;
    let vertex = |v: &str| x.find(0, v).ok_or_else(|| Error::UnknownId(format!("{v} (vertex)")));
    let (a, b) = (vertex(from)?, vertex(to)?);
    let m = mapping_space(&x, a, b, dim, budget.unwrap_or(DEFAULT_MAPSPACE_BUDGET))?;
    let mut out = format!("mapping space of {name} from {from} to {to}\n");
    level_summary(&mut out, &m);
    let _ = writeln!(out, "components: {}", m.num_components());
    Ok((out, EXIT_OK))
}

fn ho_pushout(source: &str) -> Run {
    let s = match document::load(source)? {
        Loaded::Span(s) => s,
        other => return Err(wrong_kind(source, &other, "a span")),
    };
    let strict = SSet::pushout(&s.apex, &s.left, &s.right, &s.f, &s.g)?;
    let ho = SSet::ho_pushout(&s.apex, &s.left, &s.right, &s.f, &s.g)?;
    let mut out = String::new();
    for (label, x) in [("strict pushout", &strict), ("homotopy pushout", &ho)] {
        let _ = writeln!(out, "{label}: level sizes {:?}", x.level_sizes());
        let _ = writeln!(out, "  components: {}", x.num_components());
        if x.len(0) > 0 {
            let _ = writeln!(out, "  edge-path group at {}: {}", x.name(0, 0), x.edge_path_group(0)?.recognize());
        }
    }
    Ok((out, EXIT_OK))
}

fn resolve(source: &str, dim: usize) -> Run {
    let fx = load_category(source)?;
    let c = &fx.category;
    let r = free_resolution(c, dim)?;
    let mut out = format!("free resolution of {} up to dimension {dim}\n", fx.name);
    let mut objs: Vec<usize> = (0..c.num_objects()).collect();
    objs.sort_by_key(|&o| c.object_id(o));
    for &x in &objs {
        for &y in &objs {
            let h = r.scat.hom(x, y);
            if h.len(0) > 0 {
                let _ = writeln!(out, "Map({}, {}): level sizes {:?}", c.object_id(x), c.object_id(y), h.level_sizes());
            }
        }
    }
    let computad = is_simplicial_computad(&r.scat.to_levelwise());
    let _ = writeln!(out, "simplicial computad: {}", yes(computad.holds));
    let aug = augmentation(c, dim)?;
    let _ = writeln!(out, "augmentation bijective on components: {}", yes(aug.bijective));
    let ok = computad.holds && aug.bijective;
    Ok((out, if ok { EXIT_OK } else { EXIT_PROPERTY }))
}

fn cnerve(source: &str, nmax: usize, budget: Option<usize>) -> Run {
    let s = load_scat(source, nmax.saturating_sub(1).max(1))?;
    let n = coherent_nerve_with_limit(&s, nmax, budget.unwrap_or(DEFAULT_NERVE_LIMIT))?;
    let mut out = format!("coherent nerve up to dimension {nmax}\n");
    level_summary(&mut out, &n.sset);
    let qc = is_quasi_category(&n.sset, nmax)?;
    let _ = writeln!(out, "quasi-category: {}", yes(qc.holds));
    if let Some(w) = qc.witness {
        let _ = writeln!(out, "  unfillable horn {w}");
    }
    Ok((out, EXIT_OK))
}

fn limit_report(out: &mut String, x: &Presheaf, w: &Presheaf, l: &WeightedLimit) {
    let c = &x.base;
    let _ = writeln!(out, "elements: {}", l.len());
    for (k, fam) in l.families.iter().enumerate() {
        let parts: Vec<String> = (0..c.num_objects())
            .filter(|&d| !fam[d].is_empty())
            .map(|d| {
                let maps: Vec<String> = fam[d]
                    .iter()
                    .enumerate()
                    .map(|(e, &v)| format!("{}->{}", w.sets[d][e], x.sets[d][v]))
                    .collect();
                format!("{}: {}", c.object_id(d), maps.join(" "))
            })
            .collect();
        let _ = writeln!(out, "  #{k} {}", parts.join("; "));
    }
}

fn colimit_report(out: &mut String, l: &WeightedColimit) {
    let _ = writeln!(out, "elements: {}", l.len());
    for n in sorted(&l.names) {
        let _ = writeln!(out, "  {n}");
    }
}

fn wlim(weight: &str, diagram: &str, budget: Option<usize>) -> Run {
    let w = load_presheaf(weight)?.presheaf;
    let x = load_presheaf(diagram)?.presheaf;
    let l = weighted_limit_with_budget(&w, &x, budget.unwrap_or(DEFAULT_LIMIT_BUDGET))?;
    let mut out = String::from("weighted limit\n");
    limit_report(&mut out, &x, &w, &l);
    Ok((out, EXIT_OK))
}

fn wcolim(weight: &str, diagram: &str) -> Run {
    let w = load_presheaf(weight)?.presheaf;
    let y = load_presheaf(diagram)?.presheaf;
    let l = weighted_colimit(&w, &y)?;
    let mut out = String::from("weighted colimit\n");
    colimit_report(&mut out, &l);
    Ok((out, EXIT_OK))
}

fn reedy_validate(source: &str) -> Run {
    let r = load_reedy(source)?;
    let rep = validate_reedy(&r);
    let mut out = format!("reedy structure: {}\n", if rep.holds { "valid" } else { "invalid" });
    for v in &rep.violations {
        let _ = writeln!(out, "  {v}");
    }
    Ok((out, if rep.holds { EXIT_OK } else { EXIT_PROPERTY }))
}

fn reedy_factor(source: &str, morphism: Option<&str>) -> Run {
    let r = load_reedy(source)?;
    let c = &r.base;
    let targets: Vec<usize> = match morphism {
        Some(id) => vec![c.morphism_index(id)?],
        None => {
            let mut all: Vec<usize> = (0..c.num_morphisms()).collect();
            all.sort_by_key(|&m| c.morphism_id(m));
            all
        }
    };
    let mut out = String::new();
    let mut ok = true;
    for m in targets {
        match reedy_factorize(&r, m) {
            Ok(f) => {
                let _ = writeln!(
                    out,
                    "{} = {} o {} via {}",
                    c.morphism_id(m),
                    c.morphism_id(f.increasing),
                    c.morphism_id(f.decreasing),
                    c.object_id(f.middle)
                );
            }
            Err(e) => {
                ok = false;
                let _ = writeln!(out, "{}: {e}", c.morphism_id(m));
            }
        }
    }
    Ok((out, if ok { EXIT_OK } else { EXIT_PROPERTY }))
}

fn boundary_object(source: &str, at: &str, reedy: Option<&str>, latch: bool) -> Run {
    let p = load_presheaf(source)?;
    let r = match (reedy, p.reedy) {
        (Some(doc), _) => load_reedy(doc)?,
        (None, Some(r)) => r,
        (None, None) => {
            return Err(Error::Input(
                "the presheaf base carries no Reedy structure; pass --reedy".into(),
            ))
        }
    };
    let x = &p.presheaf;
    let a = x.base.object_index(at)?;
    let mut out = String::new();
    if latch {
        let l = latching(x, &r, a)?;
        let _ = writeln!(out, "latching object at {at}");
        colimit_report(&mut out, &l);
    } else {
        let l = matching(x, &r, a)?;
        let _ = writeln!(out, "matching object at {at}");
        let _ = writeln!(out, "elements: {}", l.len());
    }
    Ok((out, EXIT_OK))
}

fn run_suite(only: Option<usize>) -> Run {
    let results = match only {
        Some(n) => vec![suite::run_criterion(n)?],
        None => suite::run_all(),
    };
    let mut out = String::new();
    for r in &results {
        let _ = writeln!(out, "{r}");
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} criteria passed", results.len());
    Ok((out, if passed == results.len() { EXIT_OK } else { EXIT_PROPERTY }))
}
