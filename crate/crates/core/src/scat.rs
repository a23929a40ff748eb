//! Simplicially enriched categories with finite mapping complexes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Morphism};
use crate::lifting::{is_kan, HornWitness};
use crate::sset::{GroupRecognition, SSet, SimplicialMap, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCat {
    objects: Vec<String>,
    truncation: usize,
    /// `homs[x * n + y] = Map(x, y)`.
    homs: Vec<SSet>,
    /// Identity vertex of each `Map(x, x)`.
    identities: Vec<usize>,
    /// `compose[(x, y, z)][level][g * |Map(x,y)_level| + f] = g ∘ f`.
    compose: Vec<Vec<Vec<usize>>>,
}

impl SCat {
    /// Builds and validates. `compose(x, y, z, n, g, f)` returns the
    /// composite of `f ∈ Map(x,y)_n` and `g ∈ Map(y,z)_n`.
    pub fn new(
        objects: Vec<String>,
        homs: Vec<SSet>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize, usize, usize, usize, usize) -> usize,
    ) -> Result<SCat> {
        let no = objects.len();
        if homs.len() != no * no || identities.len() != no {
            return Err(Error::Input("hom or identity table has the wrong size".into()));
        }
        let truncation = homs.first().map_or(0, |h| h.truncation());
        if homs.iter().any(|h| h.truncation() != truncation) {
            return Err(Error::Truncation("mapping complexes need a common truncation".into()));
        }
        let mut table = Vec::with_capacity(no * no * no);
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    let (hxy, hyz, hxz) = (&homs[x * no + y], &homs[y * no + z], &homs[x * no + z]);
                    let mut levels = Vec::with_capacity(truncation + 1);
                    for n in 0..=truncation {
                        let mut level = Vec::with_capacity(hyz.len(n) * hxy.len(n));
                        for g in 0..hyz.len(n) {
                            for f in 0..hxy.len(n) {
                                let c = compose(x, y, z, n, g, f);
                                if c >= hxz.len(n) {
                                    return Err(Error::Input(format!(
                                        "composite out of range in Map({}, {})",
                                        objects[x], objects[z]
                                    )));
                                }
                                level.push(c);
                            }
                        }
                        levels.push(level);
                    }
                    table.push(levels);
                }
            }
        }
        let s = SCat {
            objects,
            truncation,
            homs,
            identities,
            compose: table,
        };
        if let Some(p) = s.validate().first() {
            return Err(Error::Input(p.clone()));
        }
        Ok(s)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    /// Equality of all structure, ignoring simplex names.
    pub fn same_up_to_names(&self, other: &SCat) -> bool {
        self.objects == other.objects
            && self.identities == other.identities
            && self.compose == other.compose
            && self.homs.len() == other.homs.len()
            && self.homs.iter().zip(&other.homs).all(|(a, b)| a.same_tables(b))
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn hom(&self, x: usize, y: usize) -> &SSet {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// The identity of `x` as an `n`-simplex.
    pub fn identity_at(&self, x: usize, n: usize) -> usize {
        self.hom(x, x).constant(self.identities[x], n)
    }

    pub fn compose(&self, x: usize, y: usize, z: usize, n: usize, g: usize, f: usize) -> usize {
        let no = self.objects.len();
        let w = self.hom(x, y).len(n);
        self.compose[(x * no + y) * no + z][n][g * w + f]
    }

    /// Every violated enrichment axiom.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let no = self.objects.len();
        for (k, h) in self.homs.iter().enumerate() {
            for p in h.validate().into_iter().take(1) {
                out.push(format!("Map({}, {}): {p}", self.objects[k / no], self.objects[k % no]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let t = self.truncation;
        for x in 0..no {
            if self.identities[x] >= self.hom(x, x).len(0) {
                out.push(format!("identity of {} is not a vertex", self.objects[x]));
                return out;
            }
        }
        for x in 0..no {
            for y in 0..no {
                let hxy = self.hom(x, y);
                for n in 0..=t {
                    for f in 0..hxy.len(n) {
                        let left = self.compose(x, y, y, n, self.identity_at(y, n), f);
                        let right = self.compose(x, x, y, n, f, self.identity_at(x, n));
                        if left != f || right != f {
                            out.push(format!("unit law fails at {} in Map({}, {})", hxy.name(n, f), self.objects[x], self.objects[y]));
                        }
                    }
                }
                for z in 0..no {
                    let (hyz, hxz) = (self.hom(y, z), self.hom(x, z));
                    for n in 0..=t {
                        for g in 0..hyz.len(n) {
                            for f in 0..hxy.len(n) {
                                let c = self.compose(x, y, z, n, g, f);
                                if n > 0 {
                                    for i in 0..=n {
                                        let lower = self.compose(x, y, z, n - 1, hyz.face(n, g, i), hxy.face(n, f, i));
                                        if hxz.face(n, c, i) != lower {
                                            out.push(format!("composition does not commute with d{i} at level {n}"));
                                            return out;
                                        }
                                    }
                                }
                                if n < t {
                                    for j in 0..=n {
                                        let upper = self.compose(x, y, z, n + 1, hyz.degen(n, g, j), hxy.degen(n, f, j));
                                        if hxz.degen(n, c, j) != upper {
                                            out.push(format!("composition does not commute with s{j} at level {n}"));
                                            return out;
                                        }
                                    }
                                }
                                for w in 0..no {
                                    let hzw = self.hom(z, w);
                                    for h in 0..hzw.len(n) {
                                        let a = self.compose(x, z, w, n, h, c);
                                        let b = self.compose(x, y, w, n, self.compose(y, z, w, n, h, g), f);
                                        if a != b {
                                            out.push(format!(
                                                "associativity fails on {}, {}, {}",
                                                hxy.name(n, f),
                                                hyz.name(n, g),
                                                hzw.name(n, h)
                                            ));
                                            return out;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// A category as a simplicial category with discrete mapping complexes.
    pub fn from_category(c: &FinCategory, d: usize) -> SCat {
        let no = c.num_objects();
        let homs: Vec<SSet> = (0..no * no)
            .map(|k| {
                let ids: Vec<&str> = c.hom(k / no, k % no).iter().map(|&m| c.morphism_id(m)).collect();
                SSet::discrete(&ids, d)
            })
            .collect();
        let position = |x: usize, y: usize, m: usize| c.hom(x, y).iter().position(|&k| k == m).unwrap();
        let identities = (0..no).map(|x| position(x, x, c.identity(x))).collect();
        SCat::new(c.objects().to_vec(), homs, identities, |x, y, z, _, g, f| {
            let gf = c.compose(c.hom(y, z)[g], c.hom(x, y)[f]).expect("valid category");
            position(x, z, gf)
        })
        .expect("discrete simplicial category")
    }

    /// One object whose endomorphisms are the nerve of a commutative
    /// one-object category, composed pointwise along chains.
    pub fn from_commutative_monoid(c: &FinCategory, d: usize) -> Result<SCat> {
        if c.num_objects() != 1 {
            return Err(Error::Parameter("expected a one-object category".into()));
        }
        let x = SSet::nerve(c, d);
        // chains at level n are indexed in the nerve's enumeration order;
        // recover them through names
        let chain_of = |n: usize, s: usize| -> Vec<usize> {
            if n == 0 {
                return Vec::new();
            }
            x.name(n, s)
                .split('|')
                .map(|id| c.morphism_index(id).expect("nerve names are morphism ids"))
                .collect()
        };
        let index: Vec<HashMap<Vec<usize>, usize>> = (0..=d)
            .map(|n| (0..x.len(n)).map(|s| (chain_of(n, s), s)).collect())
            .collect();
        let homs = vec![x.clone()];
        SCat::new(c.objects().to_vec(), homs, vec![0], |_, _, _, n, g, f| {
            let prod: Vec<usize> = chain_of(n, g)
                .iter()
                .zip(chain_of(n, f))
                .map(|(&a, b)| c.compose(a, b).expect("one object"))
                .collect();
            if n == 0 {
                0
            } else {
                index[n][&prod]
            }
        })
    }

    /// Objects `0`, `1` with `Map(0,1) = X`, point endomorphisms and
    /// nothing from `1` to `0`.
    pub fn suspension(x: &SSet) -> SCat {
        let d = x.truncation();
        let pt = SSet::discrete(&["id"], d);
        let homs = vec![pt.clone(), x.clone(), SSet::empty(d), pt];
        SCat::new(vec!["0".into(), "1".into()], homs, vec![0, 0], |a, b, c, _, g, f| {
            if a == b {
                g
            } else if b == c {
                f
            } else {
                unreachable!("no composable non-identity pairs")
            }
        })
        .expect("suspension")
    }

    pub fn to_levelwise(&self) -> LevelwisePresentation {
        let no = self.objects.len();
        let t = self.truncation;
        // morphism index at level n: offset of the hom plus simplex id
        let offsets: Vec<Vec<usize>> = (0..=t)
            .map(|n| {
                let mut acc = 0;
                self.homs
                    .iter()
                    .map(|h| {
                        let o = acc;
                        acc += h.len(n);
                        o
                    })
                    .collect()
            })
            .collect();
        let levels: Vec<FinCategory> = (0..=t)
            .map(|n| {
                let mut count: HashMap<&str, usize> = HashMap::new();
                for h in &self.homs {
                    for s in 0..h.len(n) {
                        *count.entry(h.name(n, s)).or_default() += 1;
                    }
                }
                let mut morphisms = Vec::new();
                for (k, h) in self.homs.iter().enumerate() {
                    for s in 0..h.len(n) {
                        let name = h.name(n, s);
                        let id = if count[name] == 1 {
                            name.to_string()
                        } else {
                            format!("{}:{}:{}", self.objects[k / no], self.objects[k % no], name)
                        };
                        morphisms.push(Morphism {
                            id,
                            src: k / no,
                            tgt: k % no,
                        });
                    }
                }
                let identities = (0..no).map(|x| offsets[n][x * no + x] + self.identity_at(x, n)).collect();
                let owner: Vec<(usize, usize)> = (0..morphisms.len())
                    .map(|m| {
                        let k = (0..no * no)
                            .find(|&k| offsets[n][k] <= m && m < offsets[n][k] + self.homs[k].len(n))
                            .expect("every morphism lies in some hom");
                        (k, m - offsets[n][k])
                    })
                    .collect();
                FinCategory::from_parts(self.objects.clone(), morphisms, identities, |g, f| {
                    let (kf, sf) = owner[f];
                    let (kg, sg) = owner[g];
                    let (x, y, z) = (kf / no, kf % no, kg % no);
                    debug_assert_eq!(kg / no, y);
                    Some(offsets[n][x * no + z] + self.compose(x, y, z, n, sg, sf))
                })
            })
            .collect();
        let op = |n: usize, m: usize, image: &dyn Fn(usize, usize) -> usize| -> Functor {
            let mut morphism_map = Vec::new();
            for k in 0..no * no {
                for s in 0..self.homs[k].len(n) {
                    morphism_map.push(offsets[m][k] + image(k, s));
                }
            }
            Functor {
                object_map: (0..no).collect(),
                morphism_map,
            }
        };
        let faces = (1..=t)
            .map(|n| (0..=n).map(|i| op(n, n - 1, &|k, s| self.homs[k].face(n, s, i))).collect())
            .collect();
        let degeneracies = (0..t)
            .map(|n| (0..=n).map(|j| op(n, n + 1, &|k, s| self.homs[k].degen(n, s, j))).collect())
            .collect();
        LevelwisePresentation {
            levels,
            faces,
            degeneracies,
        }
    }

    pub fn from_levelwise(l: &LevelwisePresentation) -> Result<SCat> {
        if let Some(p) = l.validate().first() {
            return Err(Error::Input(p.clone()));
        }
        let t = l.levels.len() - 1;
        let k0 = &l.levels[0];
        let no = k0.num_objects();
        let mut homs = Vec::with_capacity(no * no);
        for x in 0..no {
            for y in 0..no {
                let names: Vec<Vec<String>> = (0..=t)
                    .map(|n| l.levels[n].hom(x, y).iter().map(|&m| l.levels[n].morphism_id(m).to_string()).collect())
                    .collect();
                let pos = |n: usize, m: usize| l.levels[n].hom(x, y).iter().position(|&k| k == m).unwrap();
                let faces = (0..=t)
                    .map(|n| {
                        l.levels[n]
                            .hom(x, y)
                            .iter()
                            .map(|&m| {
                                if n == 0 {
                                    Vec::new()
                                } else {
                                    (0..=n).map(|i| pos(n - 1, l.faces[n - 1][i].morphism_map[m])).collect()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let degens = (0..=t)
                    .map(|n| {
                        l.levels[n]
                            .hom(x, y)
                            .iter()
                            .map(|&m| {
                                if n == t {
                                    Vec::new()
                                } else {
                                    (0..=n).map(|j| pos(n + 1, l.degeneracies[n][j].morphism_map[m])).collect()
                                }
                            })
                            .collect()
                    })
                    .collect();
                homs.push(SSet::from_tables(t, names, faces, degens)?);
            }
        }
        let identities = (0..no)
            .map(|x| k0.hom(x, x).iter().position(|&m| m == k0.identity(x)).unwrap())
            .collect();
        SCat::new(k0.objects().to_vec(), homs, identities, |x, y, z, n, g, f| {
            let c = &l.levels[n];
            let gf = c.compose(c.hom(y, z)[g], c.hom(x, y)[f]).expect("levels are categories");
            c.hom(x, z).iter().position(|&k| k == gf).unwrap()
        })
    }

    /// Objects with `π₀` of the mapping complexes; each class is named by
    /// its least vertex.
    pub fn homotopy_category(&self) -> Result<FinCategory> {
        let no = self.objects.len();
        let pi: Vec<Vec<usize>> = self.homs.iter().map(|h| h.pi0()).collect();
        let mut reps: Vec<Vec<usize>> = Vec::new();
        let mut offsets = Vec::new();
        let mut morphisms = Vec::new();
        for (k, h) in self.homs.iter().enumerate() {
            offsets.push(morphisms.len());
            let mut r: Vec<usize> = Vec::new();
            for v in 0..h.len(0) {
                if pi[k][v] == r.len() {
                    r.push(v);
                    morphisms.push(Morphism {
                        id: h.name(0, v).to_string(),
                        src: k / no,
                        tgt: k % no,
                    });
                }
            }
            reps.push(r);
        }
        let class = |x: usize, y: usize, v: usize| offsets[x * no + y] + pi[x * no + y][v];
        let mut table: HashMap<(usize, usize), usize> = HashMap::new();
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    for f in 0..self.hom(x, y).len(0) {
                        for g in 0..self.hom(y, z).len(0) {
                            let c = class(x, z, self.compose(x, y, z, 0, g, f));
                            let key = (class(y, z, g), class(x, y, f));
                            if let Some(&prev) = table.get(&key) {
                                if prev != c {
                                    return Err(Error::Input("composition is not well defined on components".into()));
                                }
                            }
                            table.insert(key, c);
                        }
                    }
                }
            }
        }
        let identities = (0..no).map(|x| class(x, x, self.identities[x])).collect();
        Ok(FinCategory::from_parts(self.objects.clone(), morphisms, identities, |g, f| {
            table.get(&(g, f)).copied()
        }))
    }

    /// The first mapping complex with an unfillable horn, if any.
    pub fn is_kan_enriched(&self, n_max: usize) -> Result<Option<(String, String, HornWitness)>> {
        let no = self.objects.len();
        for (k, h) in self.homs.iter().enumerate() {
            let r = is_kan(h, n_max)?;
            if let Some(w) = r.witness {
                return Ok(Some((self.objects[k / no].clone(), self.objects[k % no].clone(), w)));
            }
        }
        Ok(None)
    }
}

/// A simplicial object in categories with a fixed object set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelwisePresentation {
    pub levels: Vec<FinCategory>,
    /// `faces[n - 1][i]: K_n → K_{n-1}`.
    pub faces: Vec<Vec<Functor>>,
    /// `degeneracies[n][j]: K_n → K_{n+1}`.
    pub degeneracies: Vec<Vec<Functor>>,
}

impl LevelwisePresentation {
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let Some(k0) = self.levels.first() else {
            out.push("no levels".into());
            return out;
        };
        let t = self.levels.len() - 1;
        for (n, c) in self.levels.iter().enumerate() {
            if c.objects() != k0.objects() {
                out.push(format!("level {n} has different objects"));
            }
            for v in c.validate().into_iter().take(1) {
                out.push(format!("level {n}: {v}"));
            }
        }
        let check = |f: &Functor, s: usize, d: usize, what: String, out: &mut Vec<String>| {
            if f.object_map != (0..k0.num_objects()).collect::<Vec<_>>() {
                out.push(format!("{what} is not the identity on objects"));
            }
            if let Some(p) = f.validate(&self.levels[s], &self.levels[d]).first() {
                out.push(format!("{what}: {p}"));
            }
        };
        if self.faces.len() != t || self.degeneracies.len() != t {
            out.push("structure maps do not match the level count".into());
            return out;
        }
        for n in 1..=t {
            for (i, f) in self.faces[n - 1].iter().enumerate() {
                check(f, n, n - 1, format!("d{i} on level {n}"), &mut out);
            }
        }
        for n in 0..t {
            for (j, f) in self.degeneracies[n].iter().enumerate() {
                check(f, n, n + 1, format!("s{j} on level {n}"), &mut out);
            }
        }
        if !out.is_empty() {
            return out;
        }
        // simplicial identities on morphisms
        for n in 2..=t {
            for m in 0..self.levels[n].num_morphisms() {
                for j in 0..=n {
                    for i in 0..j {
                        let a = self.faces[n - 2][i].morphism_map[self.faces[n - 1][j].morphism_map[m]];
                        let b = self.faces[n - 2][j - 1].morphism_map[self.faces[n - 1][i].morphism_map[m]];
                        if a != b {
                            out.push(format!("d{i}d{j} identity fails on level {n}"));
                            return out;
                        }
                    }
                }
            }
        }
        for n in 0..t {
            for m in 0..self.levels[n].num_morphisms() {
                for j in 0..=n {
                    let s = self.degeneracies[n][j].morphism_map[m];
                    for i in [j, j + 1] {
                        if self.faces[n][i].morphism_map[s] != m {
                            out.push(format!("d{i}s{j} is not the identity on level {n}"));
                            return out;
                        }
                    }
                }
            }
        }
        out
    }
}

/// A simplicial functor: an object map and one simplicial map per hom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFunctor {
    pub object_map: Vec<usize>,
    /// `hom_maps[x * n + y]: Map(x, y) → Map(Fx, Fy)`.
    pub hom_maps: Vec<SimplicialMap>,
}

impl SimplicialFunctor {
    pub fn identity(s: &SCat) -> SimplicialFunctor {
        let no = s.num_objects();
        SimplicialFunctor {
            object_map: (0..no).collect(),
            hom_maps: (0..no * no).map(|k| SimplicialMap::identity(s.hom(k / no, k % no))).collect(),
        }
    }

    pub fn validate(&self, s: &SCat, t: &SCat) -> Vec<String> {
        let no = s.num_objects();
        let mut out = Vec::new();
        if self.object_map.len() != no || self.hom_maps.len() != no * no {
            out.push("functor tables have the wrong size".into());
            return out;
        }
        let fo = &self.object_map;
        for x in 0..no {
            for y in 0..no {
                let m = &self.hom_maps[x * no + y];
                if let Some(p) = m.validate(s.hom(x, y), t.hom(fo[x], fo[y])).first() {
                    out.push(format!("on Map({}, {}): {p}", s.objects()[x], s.objects()[y]));
                    return out;
                }
            }
            if self.hom_maps[x * no + x].at(0, s.identity(x)) != t.identity(fo[x]) {
                out.push(format!("identity of {} not preserved", s.objects()[x]));
            }
        }
        for x in 0..no {
            for y in 0..no {
                for z in 0..no {
                    for n in 0..=s.truncation() {
                        for g in 0..s.hom(y, z).len(n) {
                            for f in 0..s.hom(x, y).len(n) {
                                let l = self.hom_maps[x * no + z].at(n, s.compose(x, y, z, n, g, f));
                                let r = t.compose(
                                    fo[x],
                                    fo[y],
                                    fo[z],
                                    n,
                                    self.hom_maps[y * no + z].at(n, g),
                                    self.hom_maps[x * no + y].at(n, f),
                                );
                                if l != r {
                                    out.push("composition not preserved".into());
                                    return out;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Necessary conditions for a Dwyer–Kan equivalence. Only dimension ≤ 1
/// invariants are compared, so a `true` everywhere is not a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkReport {
    pub ho_equivalence: bool,
    pub local_pi0_bijective: bool,
    /// False whenever some comparison could not be decided.
    pub local_pi1_equivalence: bool,
    pub pi1_undecided: usize,
    pub witnesses: Vec<String>,
}

impl DkReport {
    pub const LABEL: &'static str = "PARTIAL";
}

pub fn dk_check(s: &SCat, t: &SCat, f: &SimplicialFunctor) -> Result<DkReport> {
    if let Some(p) = f.validate(s, t).first() {
        return Err(Error::Input(format!("not a simplicial functor: {p}")));
    }
    let no = s.num_objects();
    let fo = &f.object_map;
    let mut witnesses = Vec::new();
    let mut pi0 = true;
    let mut pi1 = true;
    let mut undecided = 0;
    for x in 0..no {
        for y in 0..no {
            let (a, b) = (s.hom(x, y), t.hom(fo[x], fo[y]));
            let m = &f.hom_maps[x * no + y];
            let (ca, cb) = (a.pi0(), b.pi0());
            let na = ca.iter().max().map_or(0, |m| m + 1);
            let nb = cb.iter().max().map_or(0, |m| m + 1);
            let mut image = vec![None; na];
            let mut injective = true;
            for v in 0..a.len(0) {
                let c = cb[m.at(0, v)];
                match image[ca[v]] {
                    Some(prev) if prev != c => injective = false,
                    _ => image[ca[v]] = Some(c),
                }
            }
            let mut hit: Vec<usize> = image.iter().flatten().copied().collect();
            hit.sort();
            hit.dedup();
            if !injective || hit.len() != na || hit.len() != nb {
                pi0 = false;
                witnesses.push(format!(
                    "π₀ Map({}, {}) has {na} classes, its image {} of {nb}",
                    s.objects()[x],
                    s.objects()[y],
                    hit.len()
                ));
                continue;
            }
            if s.truncation() < 2 || t.truncation() < 2 {
                undecided += 1;
                continue;
            }
            // one basepoint per component
            let mut seen = vec![false; na];
            for v in 0..a.len(0) {
                if std::mem::replace(&mut seen[ca[v]], true) {
                    continue;
                }
                let ga = a.edge_path_group(v)?.recognize();
                let gb = b.edge_path_group(m.at(0, v))?.recognize();
                match (&ga, &gb) {
                    (GroupRecognition::Free(r1), GroupRecognition::Free(r2)) if r1 == r2 => {}
                    (GroupRecognition::Free(_), GroupRecognition::Free(_)) => {
                        pi1 = false;
                        witnesses.push(format!(
                            "π₁ of Map({}, {}) at {}: {ga} vs {gb}",
                            s.objects()[x],
                            s.objects()[y],
                            a.name(0, v)
                        ));
                    }
                    _ => {
                        pi1 = false;
                        undecided += 1;
                    }
                }
            }
        }
    }
    // essential surjectivity in the homotopy category
    let ht = t.homotopy_category()?;
    let mut ess = true;
    for y in 0..t.num_objects() {
        let reached = fo.iter().any(|&fx| {
            fx == y || ht.hom(fx, y).iter().any(|&m| ht.is_isomorphism(m))
        });
        if !reached {
            ess = false;
            witnesses.push(format!("{} is not essentially in the image", t.objects()[y]));
        }
    }
    Ok(DkReport {
        ho_equivalence: ess && pi0,
        local_pi0_bijective: pi0,
        local_pi1_equivalence: pi1 && pi0,
        pi1_undecided: undecided,
        witnesses,
    })
}

/// Coequalizer of `d0, d1: K₁ ⇉ K₀` on each hom-set, as class counts.
pub fn coequalizer_hom_sizes(l: &LevelwisePresentation) -> Vec<usize> {
    let k0 = &l.levels[0];
    let mut uf = UnionFind::new(k0.num_morphisms());
    if l.levels.len() > 1 {
        for m in 0..l.levels[1].num_morphisms() {
            uf.union(l.faces[0][0].morphism_map[m], l.faces[0][1].morphism_map[m]);
        }
    }
    let no = k0.num_objects();
    (0..no * no)
        .map(|k| {
            let mut roots: Vec<usize> = k0.hom(k / no, k % no).iter().map(|&m| uf.find(m)).collect();
            roots.sort();
            roots.dedup();
            roots.len()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn discrete_scat_round_trips() {
        for fx in fixtures::all_fixtures() {
            let s = SCat::from_category(&fx.category, 2);
            let l = s.to_levelwise();
            assert!(l.validate().is_empty());
            for k in &l.levels {
                assert!(k.same_up_to_order(&fx.category), "{}", fx.name);
            }
            let back = SCat::from_levelwise(&l).unwrap();
            assert_eq!(back, s);
            assert!(s.homotopy_category().unwrap().same_up_to_order(&fx.category));
            assert!(s.is_kan_enriched(2).unwrap().is_none());
        }
    }

    #[test]
    fn interval_hom_has_one_component() {
        let s = SCat::suspension(&SSet::standard_simplex(1, 2));
        let h = s.homotopy_category().unwrap();
        assert_eq!(h.hom(0, 1).len(), 1);
        let back = SCat::from_levelwise(&s.to_levelwise()).unwrap();
        assert!(back.same_up_to_names(&s));
        // the edge 01 is not invertible, so Δ¹ is not Kan
        assert!(s.is_kan_enriched(2).unwrap().is_some());
    }

    #[test]
    fn kan_enrichment() {
        let horn = SCat::suspension(&SSet::horn(2, 1, 2).unwrap());
        let (x, y, w) = horn.is_kan_enriched(2).unwrap().unwrap();
        assert_eq!((x.as_str(), y.as_str()), ("0", "1"));
        assert_eq!(w.n, 2);
        let z2 = SCat::from_commutative_monoid(&fixtures::cyclic2().category, 3).unwrap();
        assert!(z2.is_kan_enriched(3).unwrap().is_none());
        let iso = SCat::suspension(&SSet::nerve(&fixtures::free_iso().category, 3));
        assert!(iso.is_kan_enriched(3).unwrap().is_none());
    }

    #[test]
    fn noncommutative_composition_is_rejected() {
        let c = FinCategory::generated_by_functions(
            &[("*", 3)],
            &[("a", "*", "*", vec![1, 0, 2]), ("b", "*", "*", vec![0, 2, 1])],
        )
        .unwrap();
        assert!(SCat::from_commutative_monoid(&c, 2).is_err());
    }

    #[test]
    fn pi0_matches_levelwise_coequalizer() {
        for s in [
            SCat::suspension(&SSet::standard_simplex(1, 2)),
            SCat::suspension(&SSet::boundary(2, 2)),
            SCat::from_commutative_monoid(&fixtures::cyclic2().category, 2).unwrap(),
        ] {
            let h = s.homotopy_category().unwrap();
            let no = s.num_objects();
            let sizes: Vec<usize> = (0..no * no).map(|k| h.hom(k / no, k % no).len()).collect();
            assert_eq!(coequalizer_hom_sizes(&s.to_levelwise()), sizes);
        }
    }

    #[test]
    fn dk_examples() {
        let s = SCat::suspension(&SSet::standard_simplex(1, 2));
        let r = dk_check(&s, &s, &SimplicialFunctor::identity(&s)).unwrap();
        assert!(r.ho_equivalence && r.local_pi0_bijective && r.local_pi1_equivalence);
        // collapse Δ¹ to a point
        let t = SCat::suspension(&SSet::standard_simplex(0, 2));
        let mut f = SimplicialFunctor::identity(&s);
        f.hom_maps[1] = SimplicialMap::to_point(s.hom(0, 1));
        let r = dk_check(&s, &t, &f).unwrap();
        assert!(r.local_pi0_bijective && r.ho_equivalence);
        assert!(r.local_pi1_equivalence);
        // inclusion missing a component
        let two = SCat::suspension(&SSet::discrete(&["p", "q"], 2));
        let one = SCat::suspension(&SSet::discrete(&["p"], 2));
        let mut g = SimplicialFunctor::identity(&one);
        g.hom_maps[1] = SimplicialMap {
            levels: vec![vec![0]; 3],
        };
        let r = dk_check(&one, &two, &g).unwrap();
        assert!(!r.local_pi0_bijective);
        assert!(!r.witnesses.is_empty());
        // circles are not recognized against points
        let circle = SCat::suspension(&SSet::boundary(2, 2));
        let mut h = SimplicialFunctor::identity(&circle);
        h.hom_maps[1] = SimplicialMap::to_point(circle.hom(0, 1));
        let r = dk_check(&circle, &t, &h).unwrap();
        assert!(r.local_pi0_bijective && !r.local_pi1_equivalence);
    }
}
