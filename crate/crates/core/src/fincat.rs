//! Finite categories, functors, natural transformations and classes of weak
//! equivalences.
//!
//! Objects and morphisms carry opaque string ids; internally both are
//! addressed by dense indices so that composition is a table lookup.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

const UNDEFINED: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category given by an explicit composition table.
///
/// The table may be partial or inconsistent; [`FinCategory::validate`]
/// reports every violated axiom. Constructions elsewhere in the crate assume
/// a valid category.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: Vec<u32>,
    obj_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
    homs: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FinCategory {}

/// Incremental construction of a [`FinCategory`] by ids.
///
/// Identities are synthesized as `id_<object>` unless a morphism of that id
/// is declared, and the unit laws are filled in for every pair the caller
/// leaves undefined.
#[derive(Clone, Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    compose: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, id: impl Into<String>) -> &mut Self {
        self.objects.push(id.into());
        self
    }

    pub fn morphism(
        &mut self,
        id: impl Into<String>,
        src: impl Into<String>,
        tgt: impl Into<String>,
    ) -> &mut Self {
        self.morphisms.push((id.into(), src.into(), tgt.into()));
        self
    }

    /// Declares `g ∘ f = gf`.
    pub fn compose(
        &mut self,
        g: impl Into<String>,
        f: impl Into<String>,
        gf: impl Into<String>,
    ) -> &mut Self {
        self.compose.push((g.into(), f.into(), gf.into()));
        self
    }

    pub fn build(&self) -> Result<FinCategory> {
        let mut obj_index = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(Error::Input(format!("duplicate object id `{o}`")));
            }
        }
        let mut morphisms = Vec::new();
        let mut mor_index = HashMap::new();
        for (id, s, t) in &self.morphisms {
            let src = *obj_index
                .get(s)
                .ok_or_else(|| Error::UnknownId(s.clone()))?;
            let tgt = *obj_index
                .get(t)
                .ok_or_else(|| Error::UnknownId(t.clone()))?;
            if mor_index.insert(id.clone(), morphisms.len()).is_some() {
                return Err(Error::Input(format!("duplicate morphism id `{id}`")));
            }
            morphisms.push(Morphism {
                id: id.clone(),
                src,
                tgt,
            });
        }
        let mut identities = Vec::with_capacity(self.objects.len());
        for (i, o) in self.objects.iter().enumerate() {
            let name = format!("id_{o}");
            match mor_index.get(&name) {
                Some(&m) => {
                    if morphisms[m].src != i || morphisms[m].tgt != i {
                        return Err(Error::Input(format!(
                            "`{name}` is reserved for the identity of `{o}`"
                        )));
                    }
                    identities.push(m);
                }
                None => {
                    mor_index.insert(name.clone(), morphisms.len());
                    identities.push(morphisms.len());
                    morphisms.push(Morphism {
                        id: name,
                        src: i,
                        tgt: i,
                    });
                }
            }
        }
        let n = morphisms.len();
        let mut compose = vec![UNDEFINED; n * n];
        for (g, f, gf) in &self.compose {
            let lookup = |id: &String| {
                mor_index
                    .get(id)
                    .copied()
                    .ok_or_else(|| Error::UnknownId(id.clone()))
            };
            let (g, f, gf) = (lookup(g)?, lookup(f)?, lookup(gf)?);
            let slot = &mut compose[g * n + f];
            if *slot != UNDEFINED && *slot != gf as u32 {
                return Err(Error::Input(format!(
                    "conflicting composites for ({}, {})",
                    morphisms[g].id, morphisms[f].id
                )));
            }
            *slot = gf as u32;
        }
        for m in 0..n {
            let (s, t) = (morphisms[m].src, morphisms[m].tgt);
            let (is, it) = (identities[s], identities[t]);
            if compose[m * n + is] == UNDEFINED {
                compose[m * n + is] = m as u32;
            }
            if compose[it * n + m] == UNDEFINED {
                compose[it * n + m] = m as u32;
            }
        }
        Ok(FinCategory::assemble(
            self.objects.clone(),
            morphisms,
            identities,
            compose,
        ))
    }
}

impl FinCategory {
    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<u32>,
    ) -> Self {
        let no = objects.len();
        let obj_index = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), i))
            .collect();
        let mor_index = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id.clone(), i))
            .collect();
        let mut homs = vec![Vec::new(); no * no];
        let mut out = vec![Vec::new(); no];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src * no + m.tgt].push(i);
            out[m.src].push(i);
        }
        FinCategory {
            objects,
            morphisms,
            identities,
            compose,
            obj_index,
            mor_index,
            homs,
            out,
        }
    }

    /// Builds a category from an already-total composition function.
    pub(crate) fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut compose_fn: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Self {
        let n = morphisms.len();
        let mut compose = vec![UNDEFINED; n * n];
        for g in 0..n {
            for f in 0..n {
                if morphisms[f].tgt == morphisms[g].src {
                    if let Some(gf) = compose_fn(g, f) {
                        compose[g * n + f] = gf as u32;
                    }
                }
            }
        }
        Self::assemble(objects, morphisms, identities, compose)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_id(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn morphism_id(&self, m: usize) -> &str {
        &self.morphisms[m].id
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.morphisms[m].tgt
    }

    pub fn object_index(&self, id: &str) -> Result<usize> {
        self.obj_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn morphism_index(&self, id: &str) -> Result<usize> {
        self.mor_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].src] == m
    }

    /// `g ∘ f`, when the table defines it.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        let n = self.morphisms.len();
        match self.compose[g * n + f] {
            UNDEFINED => None,
            v => Some(v as usize),
        }
    }

    /// Composite of a path given in diagrammatic order (first arrow first).
    pub fn compose_path(&self, path: &[usize]) -> Option<usize> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &m| self.compose(m, acc))
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x * self.objects.len() + y]
    }

    /// Morphisms with source `x`.
    pub fn out_of(&self, x: usize) -> &[usize] {
        &self.out[x]
    }

    pub fn non_identity_morphisms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.morphisms.len()).filter(move |&m| !self.is_identity(m))
    }

    /// Two-sided inverse found by exhaustive search.
    pub fn inverse(&self, m: usize) -> Option<usize> {
        let (s, t) = (self.src(m), self.tgt(m));
        self.hom(t, s).iter().copied().find(|&inv| {
            self.compose(inv, m) == Some(self.identity(s))
                && self.compose(m, inv) == Some(self.identity(t))
        })
    }

    pub fn is_isomorphism(&self, m: usize) -> bool {
        self.inverse(m).is_some()
    }

    pub fn is_groupoid(&self) -> bool {
        (0..self.num_morphisms()).all(|m| self.is_isomorphism(m))
    }

    /// Same objects, only the morphisms flagged in `keep` (identities are
    /// always kept). The caller guarantees closure under composition.
    pub fn wide_subcategory(&self, keep: &[bool]) -> FinCategory {
        let mut remap = vec![usize::MAX; self.num_morphisms()];
        let mut morphisms = Vec::new();
        for (m, mor) in self.morphisms.iter().enumerate() {
            if keep[m] || self.is_identity(m) {
                remap[m] = morphisms.len();
                morphisms.push(mor.clone());
            }
        }
        let back: Vec<usize> = (0..self.num_morphisms())
            .filter(|&m| remap[m] != usize::MAX)
            .collect();
        let identities = self.identities.iter().map(|&i| remap[i]).collect();
        FinCategory::from_parts(self.objects.clone(), morphisms, identities, |g, f| {
            self.compose(back[g], back[f])
                .map(|gf| remap[gf])
                .filter(|&gf| gf != usize::MAX)
        })
    }

    /// The opposite category; morphism and object ids are kept.
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                id: m.id.clone(),
                src: m.tgt,
                tgt: m.src,
            })
            .collect();
        FinCategory::from_parts(
            self.objects.clone(),
            morphisms,
            self.identities.clone(),
            |g, f| self.compose(f, g),
        )
    }

    /// Product category; ids are `(x,y)` and `(f,g)`.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let no = other.num_objects();
        let nm = other.num_morphisms();
        let mut objects = Vec::new();
        for a in &self.objects {
            for b in &other.objects {
                objects.push(format!("({a},{b})"));
            }
        }
        let mut morphisms = Vec::new();
        for f in &self.morphisms {
            for g in &other.morphisms {
                morphisms.push(Morphism {
                    id: format!("({},{})", f.id, g.id),
                    src: f.src * no + g.src,
                    tgt: f.tgt * no + g.tgt,
                });
            }
        }
        let identities = (0..self.num_objects())
            .flat_map(|a| (0..no).map(move |b| (a, b)))
            .map(|(a, b)| self.identity(a) * nm + other.identity(b))
            .collect();
        FinCategory::from_parts(objects, morphisms, identities, |g, f| {
            let a = self.compose(g / nm, f / nm)?;
            let b = other.compose(g % nm, f % nm)?;
            Some(a * nm + b)
        })
    }

    /// Reports every violated category axiom; empty iff `self` is a category.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.num_morphisms();
        let mut out = Vec::new();
        for (o, &i) in self.identities.iter().enumerate() {
            if self.src(i) != o || self.tgt(i) != o {
                out.push(Violation::IdentityEndpoints {
                    object: self.objects[o].clone(),
                });
            } else if self.compose(i, i) != Some(i) {
                out.push(Violation::IdentityNotIdempotent {
                    object: self.objects[o].clone(),
                });
            }
        }
        for g in 0..n {
            for f in 0..n {
                let composable = self.tgt(f) == self.src(g);
                match (composable, self.compose(g, f)) {
                    (false, Some(_)) => out.push(Violation::ComposedNonComposable {
                        g: self.morphism_id(g).into(),
                        f: self.morphism_id(f).into(),
                    }),
                    (true, None) => out.push(Violation::MissingComposite {
                        g: self.morphism_id(g).into(),
                        f: self.morphism_id(f).into(),
                    }),
                    (true, Some(gf)) => {
                        if self.src(gf) != self.src(f) || self.tgt(gf) != self.tgt(g) {
                            out.push(Violation::CompositeEndpoints {
                                g: self.morphism_id(g).into(),
                                f: self.morphism_id(f).into(),
                                gf: self.morphism_id(gf).into(),
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for m in 0..n {
            let is = self.identity(self.src(m));
            let it = self.identity(self.tgt(m));
            if self.compose(m, is).is_some_and(|r| r != m) {
                out.push(Violation::RightUnit {
                    f: self.morphism_id(m).into(),
                });
            }
            if self.compose(it, m).is_some_and(|r| r != m) {
                out.push(Violation::LeftUnit {
                    f: self.morphism_id(m).into(),
                });
            }
        }
        for f in 0..n {
            for &g in self.out_of(self.tgt(f)) {
                let Some(gf) = self.compose(g, f) else { continue };
                for &h in self.out_of(self.tgt(g)) {
                    let left = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                    let right = self.compose(h, gf);
                    if left.is_some() || right.is_some() {
                        if left != right {
                            out.push(Violation::Associativity {
                                h: self.morphism_id(h).into(),
                                g: self.morphism_id(g).into(),
                                f: self.morphism_id(f).into(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Equality after matching morphisms by id, so enumeration order is
    /// ignored.
    pub fn same_up_to_order(&self, other: &FinCategory) -> bool {
        if self.objects != other.objects || self.morphisms.len() != other.morphisms.len() {
            return false;
        }
        let mut map = Vec::with_capacity(self.morphisms.len());
        for m in &self.morphisms {
            match other.mor_index.get(&m.id) {
                Some(&k) if other.morphisms[k].src == m.src && other.morphisms[k].tgt == m.tgt => map.push(k),
                _ => return false,
            }
        }
        if (0..self.objects.len()).any(|o| map[self.identities[o]] != other.identities[o]) {
            return false;
        }
        let n = self.morphisms.len();
        (0..n).all(|g| (0..n).all(|f| self.compose(g, f).map(|h| map[h]) == other.compose(map[g], map[f])))
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The maximal subgroupoid: same objects, exactly the invertible
    /// morphisms.
    pub fn groupoid_core(&self) -> FinCategory {
        let keep: Vec<bool> = (0..self.num_morphisms())
            .map(|m| self.is_isomorphism(m))
            .collect();
        self.wide_subcategory(&keep)
    }

    // --- standard shapes -------------------------------------------------

    /// The category of a finite poset; morphism ids are `x->y` and
    /// `id_x`. `leq` need only generate the order.
    pub fn poset<S: AsRef<str>>(objects: &[S], leq: &[(S, S)]) -> Result<FinCategory> {
        let names: Vec<String> = objects.iter().map(|s| s.as_ref().to_string()).collect();
        let k = names.len();
        let idx: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut rel = vec![false; k * k];
        for i in 0..k {
            rel[i * k + i] = true;
        }
        for (a, b) in leq {
            let a = *idx
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownId(a.as_ref().into()))?;
            let b = *idx
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownId(b.as_ref().into()))?;
            rel[a * k + b] = true;
        }
        for m in 0..k {
            for i in 0..k {
                for j in 0..k {
                    if rel[i * k + m] && rel[m * k + j] {
                        rel[i * k + j] = true;
                    }
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                if i != j && rel[i * k + j] && rel[j * k + i] {
                    return Err(Error::Input("relation is not antisymmetric".into()));
                }
            }
        }
        let mut morphisms = Vec::new();
        let mut at = vec![usize::MAX; k * k];
        let mut identities = vec![0; k];
        for i in 0..k {
            for j in 0..k {
                if rel[i * k + j] {
                    at[i * k + j] = morphisms.len();
                    if i == j {
                        identities[i] = morphisms.len();
                    }
                    let id = if i == j {
                        format!("id_{}", names[i])
                    } else {
                        format!("{}->{}", names[i], names[j])
                    };
                    morphisms.push(Morphism {
                        id,
                        src: i,
                        tgt: j,
                    });
                }
            }
        }
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.src, m.tgt)).collect();
        Ok(FinCategory::from_parts(
            names,
            morphisms,
            identities,
            |g, f| Some(at[ends[f].0 * k + ends[g].1]),
        ))
    }

    /// The ordinal `[n] = {0 < 1 < … < n}`.
    pub fn ordinal(n: usize) -> FinCategory {
        let objs: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let leq: Vec<(String, String)> = (0..n)
            .map(|i| (i.to_string(), (i + 1).to_string()))
            .collect();
        FinCategory::poset(&objs, &leq).expect("ordinal is a poset")
    }

    pub fn discrete<S: AsRef<str>>(objects: &[S]) -> FinCategory {
        FinCategory::poset::<&str>(
            &objects.iter().map(|s| s.as_ref()).collect::<Vec<_>>(),
            &[],
        )
        .expect("discrete poset")
    }

    /// A concrete category of functions between finite sets `0..size`,
    /// closed under composition from the given generators.
    ///
    /// Morphisms that coincide as functions with the same endpoints are
    /// identified; derived composites are named `g.f` (apply `f` first).
    pub fn generated_by_functions<S: AsRef<str>>(
        objects: &[(S, usize)],
        generators: &[(S, S, S, Vec<usize>)],
    ) -> Result<FinCategory> {
        let names: Vec<String> = objects.iter().map(|(s, _)| s.as_ref().into()).collect();
        let sizes: Vec<usize> = objects.iter().map(|(_, n)| *n).collect();
        let idx: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut morphisms: Vec<Morphism> = Vec::new();
        let mut maps: Vec<Vec<usize>> = Vec::new();
        let mut seen: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
        let mut identities = Vec::new();
        for (i, n) in sizes.iter().enumerate() {
            let f: Vec<usize> = (0..*n).collect();
            seen.insert((i, i, f.clone()), morphisms.len());
            identities.push(morphisms.len());
            morphisms.push(Morphism {
                id: format!("id_{}", names[i]),
                src: i,
                tgt: i,
            });
            maps.push(f);
        }
        let mut queue = VecDeque::new();
        for (id, s, t, f) in generators {
            let s = *idx
                .get(s.as_ref())
                .ok_or_else(|| Error::UnknownId(s.as_ref().into()))?;
            let t = *idx
                .get(t.as_ref())
                .ok_or_else(|| Error::UnknownId(t.as_ref().into()))?;
            if f.len() != sizes[s] || f.iter().any(|&v| v >= sizes[t]) {
                return Err(Error::Input(format!(
                    "generator `{}` is not a function",
                    id.as_ref()
                )));
            }
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry((s, t, f.clone())) {
                e.insert(morphisms.len());
                queue.push_back(morphisms.len());
                morphisms.push(Morphism {
                    id: id.as_ref().into(),
                    src: s,
                    tgt: t,
                });
                maps.push(f.clone());
            }
        }
        let gens: Vec<usize> = queue.iter().copied().collect();
        while let Some(m) = queue.pop_front() {
            for &g in &gens {
                for (a, b) in [(g, m), (m, g)] {
                    if morphisms[b].tgt != morphisms[a].src {
                        continue;
                    }
                    let f: Vec<usize> = maps[b].iter().map(|&v| maps[a][v]).collect();
                    let key = (morphisms[b].src, morphisms[a].tgt, f.clone());
                    if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
                        e.insert(morphisms.len());
                        queue.push_back(morphisms.len());
                        morphisms.push(Morphism {
                            id: format!("{}.{}", morphisms[a].id, morphisms[b].id),
                            src: morphisms[b].src,
                            tgt: morphisms[a].tgt,
                        });
                        maps.push(f);
                    }
                }
            }
        }
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.src, m.tgt)).collect();
        Ok(FinCategory::from_parts(
            names,
            morphisms,
            identities,
            |g, f| {
                let h: Vec<usize> = maps[f].iter().map(|&v| maps[g][v]).collect();
                seen.get(&(ends[f].0, ends[g].1, h)).copied()
            },
        ))
    }

    /// The simplex category truncated to `[0], …, [n]`. Morphism ids list
    /// the values of the monotone map, e.g. `[1->2]0,2`.
    pub fn simplex_category(n: usize) -> FinCategory {
        let objects: Vec<String> = (0..=n).map(|i| format!("[{i}]")).collect();
        let mut morphisms = Vec::new();
        let mut maps: Vec<Vec<usize>> = Vec::new();
        let mut lookup: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut identities = vec![0; n + 1];
        for a in 0..=n {
            for b in 0..=n {
                for f in crate::sset::monotone_maps(a, b) {
                    if a == b && f.iter().enumerate().all(|(i, &v)| i == v) {
                        identities[a] = morphisms.len();
                    }
                    lookup.insert((b, f.clone()), morphisms.len());
                    morphisms.push(Morphism {
                        id: format!(
                            "[{a}->{b}]{}",
                            f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                        ),
                        src: a,
                        tgt: b,
                    });
                    maps.push(f);
                }
            }
        }
        let ends: Vec<usize> = morphisms.iter().map(|m: &Morphism| m.tgt).collect();
        FinCategory::from_parts(objects, morphisms, identities, |g, f| {
            let h: Vec<usize> = maps[f].iter().map(|&v| maps[g][v]).collect();
            lookup.get(&(ends[g], h)).copied()
        })
    }

    /// The monotone map underlying a morphism of [`FinCategory::simplex_category`].
    pub fn simplex_operator(&self, m: usize) -> Option<Vec<usize>> {
        let id = self.morphism_id(m);
        let rest = id.split(']').nth(1)?;
        rest.split(',').map(|v| v.parse().ok()).collect()
    }
}

/// One violated category axiom, naming the witnessing morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    IdentityEndpoints { object: String },
    IdentityNotIdempotent { object: String },
    ComposedNonComposable { g: String, f: String },
    MissingComposite { g: String, f: String },
    CompositeEndpoints { g: String, f: String, gf: String },
    LeftUnit { f: String },
    RightUnit { f: String },
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IdentityEndpoints { object } => {
                write!(f, "identity of {object} has wrong endpoints")
            }
            Violation::IdentityNotIdempotent { object } => {
                write!(f, "identity of {object} does not fix itself")
            }
            Violation::ComposedNonComposable { g, f: ff } => {
                write!(f, "composite defined for non-composable pair ({g}, {ff})")
            }
            Violation::MissingComposite { g, f: ff } => {
                write!(f, "composition not total: ({g}, {ff}) undefined")
            }
            Violation::CompositeEndpoints { g, f: ff, gf } => {
                write!(f, "composite {gf} of ({g}, {ff}) has wrong endpoints")
            }
            Violation::LeftUnit { f: ff } => write!(f, "left unit law fails at {ff}"),
            Violation::RightUnit { f: ff } => write!(f, "right unit law fails at {ff}"),
            Violation::Associativity { h, g, f: ff } => {
                write!(f, "associativity fails at ({h}, {g}, {ff})")
            }
        }
    }
}

/// A class of weak equivalences; always contains every identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakEquivalences {
    members: BTreeSet<usize>,
}

impl WeakEquivalences {
    pub fn new(c: &FinCategory, members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: BTreeSet<usize> = members.into_iter().collect();
        members.extend((0..c.num_objects()).map(|o| c.identity(o)));
        WeakEquivalences { members }
    }

    pub fn from_ids<S: AsRef<str>>(c: &FinCategory, ids: &[S]) -> Result<Self> {
        let ms = ids
            .iter()
            .map(|s| c.morphism_index(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(c, ms))
    }

    pub fn identities(c: &FinCategory) -> Self {
        Self::new(c, [])
    }

    pub fn all(c: &FinCategory) -> Self {
        Self::new(c, 0..c.num_morphisms())
    }

    pub fn isomorphisms(c: &FinCategory) -> Self {
        Self::new(c, (0..c.num_morphisms()).filter(|&m| c.is_isomorphism(m)))
    }

    pub fn contains(&self, m: usize) -> bool {
        self.members.contains(&m)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Closed under composition, i.e. a wide subcategory.
    pub fn is_subcategory(&self, c: &FinCategory) -> bool {
        self.members.iter().all(|&f| {
            self.members.iter().all(|&g| {
                c.tgt(f) != c.src(g) || c.compose(g, f).is_some_and(|gf| self.contains(gf))
            })
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub two_of_three: bool,
    pub two_of_six: bool,
    pub retract_closed: bool,
    pub wide: bool,
    pub contains_isos: bool,
    /// One human-readable witness per failed property.
    pub witnesses: Vec<String>,
}

/// Exhaustively checks the closure properties of `w` inside `c`.
///
/// Retract diagrams range over all of `c`.
pub fn check_closure_properties(c: &FinCategory, w: &WeakEquivalences) -> ClosureReport {
    let n = c.num_morphisms();
    let name = |m: usize| c.morphism_id(m).to_string();
    let mut r = ClosureReport {
        two_of_three: true,
        two_of_six: true,
        retract_closed: true,
        wide: true,
        contains_isos: true,
        witnesses: Vec::new(),
    };
    for o in 0..c.num_objects() {
        if !w.contains(c.identity(o)) {
            r.wide = false;
            r.witnesses
                .push(format!("wide: identity {} missing", name(c.identity(o))));
            break;
        }
    }
    if let Some(m) = (0..n).find(|&m| c.is_isomorphism(m) && !w.contains(m)) {
        r.contains_isos = false;
        r.witnesses
            .push(format!("contains_isos: {} invertible but not marked", name(m)));
    }
    'outer3: for f in 0..n {
        for &g in c.out_of(c.tgt(f)) {
            let Some(gf) = c.compose(g, f) else { continue };
            let count = [f, g, gf].iter().filter(|&&m| w.contains(m)).count();
            if count == 2 {
                r.two_of_three = false;
                r.witnesses.push(format!(
                    "two_of_three: f={}, g={}, gf={} has exactly two marked",
                    name(f),
                    name(g),
                    name(gf)
                ));
                break 'outer3;
            }
        }
    }
    'outer6: for f in 0..n {
        for &g in c.out_of(c.tgt(f)) {
            let Some(gf) = c.compose(g, f) else { continue };
            if !w.contains(gf) {
                continue;
            }
            for &h in c.out_of(c.tgt(g)) {
                let Some(hg) = c.compose(h, g) else { continue };
                if !w.contains(hg) {
                    continue;
                }
                let hgf = c.compose(hg, f);
                let ok = w.contains(f)
                    && w.contains(g)
                    && w.contains(h)
                    && hgf.is_some_and(|m| w.contains(m));
                if !ok {
                    r.two_of_six = false;
                    r.witnesses.push(format!(
                        "two_of_six: f={}, g={}, h={} with gf, hg marked",
                        name(f),
                        name(g),
                        name(h)
                    ));
                    break 'outer6;
                }
            }
        }
    }
    if let Some(wit) = find_unmarked_retract(c, w) {
        r.retract_closed = false;
        r.witnesses.push(wit);
    }
    r
}

fn find_unmarked_retract(c: &FinCategory, w: &WeakEquivalences) -> Option<String> {
    for f in 0..c.num_morphisms() {
        if w.contains(f) {
            continue;
        }
        let (a, b) = (c.src(f), c.tgt(f));
        for g in w.members() {
            let (x, y) = (c.src(g), c.tgt(g));
            for &i in c.hom(a, x) {
                for &rr in c.hom(x, a) {
                    if c.compose(rr, i) != Some(c.identity(a)) {
                        continue;
                    }
                    for &j in c.hom(b, y) {
                        if c.compose(g, i) != c.compose(j, f) {
                            continue;
                        }
                        for &s in c.hom(y, b) {
                            if c.compose(s, j) == Some(c.identity(b))
                                && c.compose(f, rr) == c.compose(s, g)
                            {
                                return Some(format!(
                                    "retract_closed: {} is a retract of marked {} but unmarked",
                                    c.morphism_id(f),
                                    c.morphism_id(g)
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// A functor between finite categories, stored as index maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functor {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &FinCategory) -> Functor {
        Functor {
            object_map: (0..c.num_objects()).collect(),
            morphism_map: (0..c.num_morphisms()).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            object_map: self.object_map.iter().map(|&o| other.object_map[o]).collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|&m| other.morphism_map[m])
                .collect(),
        }
    }

    pub fn validate(&self, src: &FinCategory, tgt: &FinCategory) -> Vec<String> {
        let mut out = Vec::new();
        if self.object_map.len() != src.num_objects()
            || self.morphism_map.len() != src.num_morphisms()
        {
            out.push("functor maps have the wrong size".to_string());
            return out;
        }
        for (m, &fm) in self.morphism_map.iter().enumerate() {
            if tgt.src(fm) != self.object_map[src.src(m)]
                || tgt.tgt(fm) != self.object_map[src.tgt(m)]
            {
                out.push(format!("{} is sent to a morphism with wrong endpoints", src.morphism_id(m)));
            }
        }
        for o in 0..src.num_objects() {
            if self.morphism_map[src.identity(o)] != tgt.identity(self.object_map[o]) {
                out.push(format!("identity of {} not preserved", src.object_id(o)));
            }
        }
        for f in 0..src.num_morphisms() {
            for &g in src.out_of(src.tgt(f)) {
                let Some(gf) = src.compose(g, f) else { continue };
                if tgt.compose(self.morphism_map[g], self.morphism_map[f])
                    != Some(self.morphism_map[gf])
                {
                    out.push(format!(
                        "composite ({}, {}) not preserved",
                        src.morphism_id(g),
                        src.morphism_id(f)
                    ));
                }
            }
        }
        out
    }

    /// Whether `self` sends every marked morphism to an isomorphism.
    pub fn inverts(&self, tgt: &FinCategory, w: &WeakEquivalences) -> Option<usize> {
        w.members()
            .find(|&m| !tgt.is_isomorphism(self.morphism_map[m]))
    }
}

/// Every functor `src → tgt`, in deterministic order. Errors once more than
/// `limit` functors have been found.
pub fn enumerate_functors(src: &FinCategory, tgt: &FinCategory, limit: usize) -> Result<Vec<Functor>> {
    let mut found = Vec::new();
    let no = src.num_objects();
    let mut object_map = vec![0usize; no];
    enumerate_object_maps(src, tgt, 0, &mut object_map, &mut found, limit)?;
    Ok(found)
}

fn enumerate_object_maps(
    src: &FinCategory,
    tgt: &FinCategory,
    i: usize,
    object_map: &mut Vec<usize>,
    found: &mut Vec<Functor>,
    limit: usize,
) -> Result<()> {
    if i == src.num_objects() {
        let order: Vec<usize> = src.non_identity_morphisms().collect();
        let mut mm = vec![usize::MAX; src.num_morphisms()];
        for o in 0..src.num_objects() {
            mm[src.identity(o)] = tgt.identity(object_map[o]);
        }
        return assign_morphisms(src, tgt, &order, 0, object_map, &mut mm, found, limit);
    }
    for o in 0..tgt.num_objects() {
        object_map[i] = o;
        enumerate_object_maps(src, tgt, i + 1, object_map, found, limit)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assign_morphisms(
    src: &FinCategory,
    tgt: &FinCategory,
    order: &[usize],
    k: usize,
    object_map: &[usize],
    mm: &mut Vec<usize>,
    found: &mut Vec<Functor>,
    limit: usize,
) -> Result<()> {
    if k == order.len() {
        if found.len() >= limit {
            return Err(Error::budget(
                "functor-limit",
                limit,
                format!("{} functors enumerated", found.len()),
            ));
        }
        found.push(Functor {
            object_map: object_map.to_vec(),
            morphism_map: mm.clone(),
        });
        return Ok(());
    }
    let m = order[k];
    let (s, t) = (object_map[src.src(m)], object_map[src.tgt(m)]);
    for &cand in tgt.hom(s, t) {
        mm[m] = cand;
        if consistent_so_far(src, tgt, m, mm) {
            assign_morphisms(src, tgt, order, k + 1, object_map, mm, found, limit)?;
        }
    }
    mm[m] = usize::MAX;
    Ok(())
}

fn consistent_so_far(src: &FinCategory, tgt: &FinCategory, m: usize, mm: &[usize]) -> bool {
    for f in 0..src.num_morphisms() {
        for &g in src.out_of(src.tgt(f)) {
            let Some(gf) = src.compose(g, f) else { continue };
            if g != m && f != m && gf != m {
                continue;
            }
            if mm[g] == usize::MAX || mm[f] == usize::MAX || mm[gf] == usize::MAX {
                continue;
            }
            if tgt.compose(mm[g], mm[f]) != Some(mm[gf]) {
                return false;
            }
        }
    }
    true
}

/// A natural transformation between two functors with common (co)domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransformation {
    pub components: Vec<usize>,
}

impl NatTransformation {
    pub fn validate(
        &self,
        src: &FinCategory,
        tgt: &FinCategory,
        from: &Functor,
        to: &Functor,
    ) -> Vec<String> {
        let mut out = Vec::new();
        for (o, &c) in self.components.iter().enumerate() {
            if tgt.src(c) != from.object_map[o] || tgt.tgt(c) != to.object_map[o] {
                out.push(format!("component at {} has wrong endpoints", src.object_id(o)));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for m in 0..src.num_morphisms() {
            let (a, b) = (src.src(m), src.tgt(m));
            let left = tgt.compose(to.morphism_map[m], self.components[a]);
            let right = tgt.compose(self.components[b], from.morphism_map[m]);
            if left != right {
                out.push(format!("naturality fails at {}", src.morphism_id(m)));
            }
        }
        out
    }
}

/// A reflexive directed graph: each vertex has one distinguished loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexiveGraph {
    pub vertices: Vec<String>,
    /// `(id, source, target)`.
    pub edges: Vec<(String, usize, usize)>,
    /// Index into `edges` of the distinguished loop of each vertex.
    pub loops: Vec<usize>,
}

impl ReflexiveGraph {
    /// Adds a distinguished loop `id_<v>` at every vertex.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| s.as_ref().into()).collect();
        let idx: HashMap<&str, usize> = vs.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut es = Vec::new();
        let mut loops = Vec::new();
        for (i, v) in vs.iter().enumerate() {
            loops.push(es.len());
            es.push((format!("id_{v}"), i, i));
        }
        for (id, s, t) in edges {
            let s = *idx
                .get(s.as_ref())
                .ok_or_else(|| Error::UnknownId(s.as_ref().into()))?;
            let t = *idx
                .get(t.as_ref())
                .ok_or_else(|| Error::UnknownId(t.as_ref().into()))?;
            es.push((id.as_ref().into(), s, t));
        }
        Ok(ReflexiveGraph {
            vertices: vs,
            edges: es,
            loops,
        })
    }

    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.loops.len() != self.vertices.len() {
            out.push("every vertex needs exactly one distinguished loop".into());
        }
        for (v, &l) in self.loops.iter().enumerate() {
            match self.edges.get(l) {
                Some((_, s, t)) if *s == v && *t == v => {}
                _ => out.push(format!("distinguished loop of {} is not a loop at it", self.vertices[v])),
            }
        }
        out
    }
}

/// Result of [`free_category`].
#[derive(Clone, Debug)]
pub struct FreeCategory {
    pub category: FinCategory,
    /// True iff no maximal-length word extends, so nothing was truncated.
    pub complete: bool,
}

/// The free category on a reflexive graph, truncated at `max_word_len`.
///
/// Morphisms are composable words of non-distinguished edges, named in
/// diagrammatic order (`e;f` means `e` then `f`). Composites longer than the
/// bound are left undefined, which [`FinCategory::validate`] reports.
pub fn free_category(
    g: &ReflexiveGraph,
    max_word_len: usize,
    require_complete: bool,
) -> Result<FreeCategory> {
    if max_word_len == 0 {
        return Err(Error::Parameter("max_word_len must be at least 1".into()));
    }
    let problems = g.validate();
    if !problems.is_empty() {
        return Err(Error::Input(problems.join("; ")));
    }
    let loops: BTreeSet<usize> = g.loops.iter().copied().collect();
    let letters: Vec<usize> = (0..g.edges.len()).filter(|e| !loops.contains(e)).collect();
    let mut words: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for v in 0..g.vertices.len() {
        words.push((Vec::new(), v, v));
    }
    let mut frontier: Vec<usize> = (0..g.vertices.len()).collect();
    let mut complete = true;
    for len in 1..=max_word_len + 1 {
        let mut next = Vec::new();
        for &w in &frontier {
            let (word, s, t) = words[w].clone();
            for &e in &letters {
                if g.edges[e].1 != t {
                    continue;
                }
                if len > max_word_len {
                    complete = false;
                    break;
                }
                let mut nw = word.clone();
                nw.push(e);
                next.push(words.len());
                words.push((nw, s, g.edges[e].2));
            }
        }
        frontier = next;
    }
    if require_complete && !complete {
        return Err(Error::Incomplete(format!(
            "free category has words longer than {max_word_len}"
        )));
    }
    let mut index: HashMap<(Vec<usize>, usize), usize> = HashMap::new();
    let mut morphisms = Vec::new();
    let mut identities = Vec::new();
    for (i, (word, s, t)) in words.iter().enumerate() {
        index.insert((word.clone(), *s), i);
        let id = if word.is_empty() {
            identities.push(i);
            format!("id_{}", g.vertices[*s])
        } else {
            word.iter()
                .map(|&e| g.edges[e].0.clone())
                .collect::<Vec<_>>()
                .join(";")
        };
        morphisms.push(Morphism {
            id,
            src: *s,
            tgt: *t,
        });
    }
    let category = FinCategory::from_parts(
        g.vertices.clone(),
        morphisms,
        identities,
        |gm, fm| {
            let mut w = words[fm].0.clone();
            w.extend_from_slice(&words[gm].0);
            index.get(&(w, words[fm].1)).copied()
        },
    );
    Ok(FreeCategory { category, complete })
}

/// Sorted summary of hom-set sizes, handy in reports and tests.
pub fn hom_sizes(c: &FinCategory) -> BTreeMap<(String, String), usize> {
    let mut out = BTreeMap::new();
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            out.insert(
                (c.object_id(x).to_string(), c.object_id(y).to_string()),
                c.hom(x, y).len(),
            );
        }
    }
    out
}

/// Every category with between 1 and `max_morphisms` morphisms (identities
/// included), one per isomorphism class.
pub fn small_categories(max_morphisms: usize) -> Vec<FinCategory> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=max_morphisms {
        for e in 0..=max_morphisms - k {
            let mut ends = vec![(0usize, 0usize); e];
            enumerate_ends(k, &mut ends, 0, &mut |ends| {
                enumerate_tables(k, ends, &mut |table| {
                    let key = canonical_key(k, ends, table);
                    if seen.insert(key) {
                        out.push(build_small(k, ends, table));
                    }
                });
            });
        }
    }
    out
}

fn enumerate_ends(k: usize, ends: &mut Vec<(usize, usize)>, i: usize, visit: &mut dyn FnMut(&[(usize, usize)])) {
    if i == ends.len() {
        visit(ends);
        return;
    }
    // non-decreasing pairs: permuting non-identities gives nothing new
    let start = if i == 0 { 0 } else { ends[i - 1].0 * k + ends[i - 1].1 };
    for code in start..k * k {
        ends[i] = (code / k, code % k);
        enumerate_ends(k, ends, i + 1, visit);
    }
}

/// Morphism `i < k` is the identity of object `i`; `k + j` is non-identity `j`.
/// `table[(g - k) * e + (f - k)]` is `g ∘ f` for composable non-identities.
fn enumerate_tables(k: usize, ends: &[(usize, usize)], visit: &mut dyn FnMut(&[Option<usize>])) {
    let e = ends.len();
    let end = |m: usize| if m < k { (m, m) } else { ends[m - k] };
    let pairs: Vec<(usize, usize)> = (0..e)
        .flat_map(|g| (0..e).map(move |f| (g, f)))
        .filter(|&(g, f)| ends[f].1 == ends[g].0)
        .collect();
    let options: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(g, f)| {
            let (s, t) = (ends[f].0, ends[g].1);
            (0..k + e).filter(|&m| end(m) == (s, t)).collect()
        })
        .collect();
    let mut table = vec![None; e * e];
    let mut choice = vec![0usize; pairs.len()];
    let compose = |table: &[Option<usize>], g: usize, f: usize| -> usize {
        if g < k {
            f
        } else if f < k {
            g
        } else {
            table[(g - k) * e + (f - k)].expect("composable")
        }
    };
    let mut i = 0usize;
    loop {
        if i == pairs.len() {
            let assoc = (k..k + e).all(|h| {
                (k..k + e).all(|g| {
                    (k..k + e).all(|f| {
                        end(f).1 != end(g).0
                            || end(g).1 != end(h).0
                            || compose(&table, compose(&table, h, g), f) == compose(&table, h, compose(&table, g, f))
                    })
                })
            });
            if assoc {
                visit(&table);
            }
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
            continue;
        }
        if choice[i] < options[i].len() {
            let (g, f) = pairs[i];
            table[g * e + f] = Some(options[i][choice[i]]);
            i += 1;
            if i < pairs.len() {
                choice[i] = 0;
            }
        } else {
            choice[i] = 0;
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

type SmallKey = (usize, Vec<(usize, usize)>, Vec<Option<usize>>);

fn canonical_key(k: usize, ends: &[(usize, usize)], table: &[Option<usize>]) -> SmallKey {
    let e = ends.len();
    let mut best: Option<SmallKey> = None;
    for po in permutations(k) {
        for pm in permutations(e) {
            let mut new_ends = vec![(0, 0); e];
            for j in 0..e {
                new_ends[pm[j]] = (po[ends[j].0], po[ends[j].1]);
            }
            let rename = |m: usize| if m < k { po[m] } else { k + pm[m - k] };
            let mut new_table = vec![None; e * e];
            for g in 0..e {
                for f in 0..e {
                    new_table[pm[g] * e + pm[f]] = table[g * e + f].map(rename);
                }
            }
            let key = (k, new_ends, new_table);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.expect("at least one permutation")
}

fn build_small(k: usize, ends: &[(usize, usize)], table: &[Option<usize>]) -> FinCategory {
    let e = ends.len();
    let name = |m: usize| if m < k { format!("id_o{m}") } else { format!("m{}", m - k) };
    let mut b = CategoryBuilder::new();
    for o in 0..k {
        b.object(format!("o{o}"));
    }
    for (j, &(s, t)) in ends.iter().enumerate() {
        b.morphism(format!("m{j}"), format!("o{s}"), format!("o{t}"));
    }
    for g in 0..e {
        for f in 0..e {
            if let Some(h) = table[g * e + f] {
                b.compose(name(k + g), name(k + f), name(h));
            }
        }
    }
    b.build().expect("enumerated tables are categories")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ordinal_two_is_valid_with_six_morphisms() {
        let c = FinCategory::ordinal(2);
        assert_eq!(c.num_objects(), 3);
        assert_eq!(c.num_morphisms(), 6);
        assert!(c.validate().is_empty());
    }

    #[test]
    fn redirected_composite_breaks_associativity() {
        let mut b = CategoryBuilder::new();
        b.object("0").object("1").object("2");
        b.morphism("d", "0", "1").morphism("s", "1", "2").morphism("t", "0", "2");
        b.compose("s", "d", "id_0");
        let c = b.build().unwrap();
        let v = c.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::Associativity { .. })));
    }

    #[test]
    fn two_cycle_truncated_free_category_is_not_total() {
        let g = ReflexiveGraph::new(&["a", "b"], &[("u", "a", "b"), ("v", "b", "a")]).unwrap();
        let fc = free_category(&g, 3, false).unwrap();
        assert!(!fc.complete);
        let v = fc.category.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::MissingComposite { .. })));
        assert!(free_category(&g, 3, true).is_err());
    }

    #[test]
    fn free_category_examples() {
        let g = ReflexiveGraph::new(&["0", "1"], &[("e", "0", "1")]).unwrap();
        let fc = free_category(&g, 1, true).unwrap();
        assert!(fc.complete);
        assert_eq!(fc.category.num_morphisms(), 3);

        let g = ReflexiveGraph::new(&["*"], &[("e", "*", "*")]).unwrap();
        let fc = free_category(&g, 3, false).unwrap();
        assert!(!fc.complete);
        let ids: Vec<&str> = fc.category.morphisms().iter().map(|m| m.id.as_str()).collect();
        assert_eq!(ids, vec!["id_*", "e", "e;e", "e;e;e"]);

        let g = ReflexiveGraph::new(&["0", "1", "2"], &[("d", "0", "1"), ("s", "1", "2")]).unwrap();
        let fc = free_category(&g, 2, false).unwrap();
        assert_eq!(fc.category.num_morphisms(), 6);
        assert!(fc.complete);
        assert!(fc.category.is_valid());
        let fc1 = free_category(&g, 1, false).unwrap();
        assert_eq!(fc1.category.num_morphisms(), 5);
        assert!(!fc1.complete);
    }

    #[test]
    fn groupoid_core_examples() {
        let iso = fixtures::free_iso().category;
        assert_eq!(iso.groupoid_core(), iso);
        let one = FinCategory::ordinal(1);
        let core = one.groupoid_core();
        assert_eq!(core.num_morphisms(), 2);
        assert_eq!(core.num_objects(), 2);

        let c = fixtures::iso_with_idempotent();
        assert!(c.is_valid());
        let core = c.groupoid_core();
        let mut ids: Vec<&str> = core.morphisms().iter().map(|m| m.id.as_str()).collect();
        ids.sort();
        assert_eq!(ids, vec!["id_a", "id_b", "u", "v"]);
        assert!(core.is_groupoid());
        assert_eq!(core.groupoid_core(), core);
    }

    #[test]
    fn closure_property_examples() {
        for fx in fixtures::all_fixtures() {
            let c = &fx.category;
            let iso = WeakEquivalences::isomorphisms(c);
            let r = check_closure_properties(c, &iso);
            assert!(
                r.two_of_three && r.two_of_six && r.retract_closed && r.wide && r.contains_isos,
                "{}: {:?}",
                fx.name,
                r
            );
            let all = check_closure_properties(c, &WeakEquivalences::all(c));
            assert!(all.two_of_three && all.two_of_six && all.retract_closed && all.wide);
        }
        let one = FinCategory::ordinal(1);
        let r = check_closure_properties(&one, &WeakEquivalences::identities(&one));
        assert!(r.wide && r.two_of_three && r.contains_isos);

        let sq = fixtures::commutative_square().category;
        let leg = WeakEquivalences::from_ids(&sq, &["b->d"]).unwrap();
        assert!(check_closure_properties(&sq, &leg).two_of_three);
        let two = WeakEquivalences::from_ids(&sq, &["a->b", "b->d"]).unwrap();
        let r = check_closure_properties(&sq, &two);
        assert!(!r.two_of_three);
        assert!(r.witnesses.iter().any(|w| w.contains("a->d")));
    }

    #[test]
    fn functor_enumeration_counts() {
        // functors [1] -> [1] are the monotone maps: 3 of them
        let one = FinCategory::ordinal(1);
        assert_eq!(enumerate_functors(&one, &one, 100).unwrap().len(), 3);
        // functors [2] -> [1]: monotone maps [2] -> [1], C(4,3) = 4
        let two = FinCategory::ordinal(2);
        assert_eq!(enumerate_functors(&two, &one, 100).unwrap().len(), 4);
        for f in enumerate_functors(&two, &two, 100).unwrap() {
            assert!(f.validate(&two, &two).is_empty());
        }
    }

    #[test]
    fn functor_composition_is_associative_and_unital() {
        let two = FinCategory::ordinal(2);
        let fs = enumerate_functors(&two, &two, 100).unwrap();
        let id = Functor::identity(&two);
        for f in &fs {
            assert_eq!(f.then(&id), *f);
            assert_eq!(id.then(f), *f);
            for g in &fs {
                for h in &fs {
                    assert_eq!(f.then(g).then(h), f.then(&g.then(h)));
                }
            }
        }
    }

    #[test]
    fn simplex_category_is_valid() {
        let d = FinCategory::simplex_category(2);
        // monotone maps [m] -> [n] for m, n <= 2
        // monotone maps [m] -> [n] number C(m+n+1, m+1): 6 + 10 + 15
        assert_eq!(d.num_morphisms(), 31);
        assert!(d.is_valid());
    }

    #[test]
    fn natural_transformation_check() {
        let one = FinCategory::ordinal(1);
        let fs = enumerate_functors(&one, &one, 10).unwrap();
        // constant at 0 => identity: component (id_0, 0->1)
        let c0 = fs.iter().find(|f| f.object_map == vec![0, 0]).unwrap();
        let id = Functor::identity(&one);
        let eta = NatTransformation {
            components: vec![one.identity(0), one.morphism_index("0->1").unwrap()],
        };
        assert!(eta.validate(&one, &one, c0, &id).is_empty());
        assert!(!eta.validate(&one, &one, &id, c0).is_empty());
    }

    #[test]
    fn small_category_counts() {
        // sizes 1..=4: [0], then two discrete/Z2/{1,e}, ...
        let cats = small_categories(4);
        let by_size = |n: usize| cats.iter().filter(|c| c.num_morphisms() == n).count();
        // size 1: the point; size 2: two points, Z/2, {1, e}
        assert_eq!(by_size(1), 1);
        assert_eq!(by_size(2), 3);
        // size 3 by brute count: 3 points; point + each one-object monoid of
        // order 2 (2); [1]; monoids of order 3 (7)
        assert_eq!(by_size(3), 11);
        // monoids of order 1..=4 up to isomorphism: 1, 2, 7, 35
        let monoids: Vec<usize> = (1..=4)
            .map(|n| cats.iter().filter(|c| c.num_objects() == 1 && c.num_morphisms() == n).count())
            .collect();
        assert_eq!(monoids, vec![1, 2, 7, 35]);
        assert!(cats.iter().all(|c| c.is_valid()));
        for (i, a) in cats.iter().enumerate() {
            for b in &cats[i + 1..] {
                if a.num_objects() == b.num_objects() && a.num_morphisms() == b.num_morphisms() {
                    // no functor pair that is an isomorphism
                    let iso = enumerate_functors(a, b, 10_000).unwrap().into_iter().any(|f| {
                        let mut m = f.morphism_map.clone();
                        m.sort_unstable();
                        m.dedup();
                        m.len() == b.num_morphisms()
                    });
                    assert!(!iso);
                }
            }
        }
    }
}
