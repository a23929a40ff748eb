//! Set-valued weighted limits and colimits, Reedy structures, skeleta and
//! latching/matching objects.
//!
//! A weighted limit pairs a weight and a diagram of the same variance and is
//! the set of natural transformations between them; a weighted colimit pairs
//! opposite variances and is the coend, a quotient of a disjoint union.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::sset::{SSet, UnionFind};

pub const DEFAULT_LIMIT_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn flip(self) -> Variance {
        match self {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        }
    }
}

/// A functor from a finite category (or its opposite) to finite sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presheaf {
    pub base: FinCategory,
    pub variance: Variance,
    /// Element names per object.
    pub sets: Vec<Vec<String>>,
    /// `action[m][x]`: image of element `x` under morphism `m`.
    pub action: Vec<Vec<usize>>,
}

impl Presheaf {
    pub fn new(base: FinCategory, variance: Variance, sets: Vec<Vec<String>>, action: Vec<Vec<usize>>) -> Result<Presheaf> {
        let p = Presheaf {
            base,
            variance,
            sets,
            action,
        };
        if let Some(v) = p.validate().first() {
            return Err(Error::Input(v.clone()));
        }
        Ok(p)
    }

    /// Source and target object of the action of `m`.
    pub fn ends(&self, m: usize) -> (usize, usize) {
        let (s, t) = (self.base.src(m), self.base.tgt(m));
        match self.variance {
            Variance::Covariant => (s, t),
            Variance::Contravariant => (t, s),
        }
    }

    pub fn size(&self, d: usize) -> usize {
        self.sets[d].len()
    }

    pub fn act(&self, m: usize, x: usize) -> usize {
        self.action[m][x]
    }

    pub fn validate(&self) -> Vec<String> {
        let c = &self.base;
        let mut out = Vec::new();
        if self.sets.len() != c.num_objects() || self.action.len() != c.num_morphisms() {
            out.push("presheaf tables do not match the base category".into());
            return out;
        }
        for m in 0..c.num_morphisms() {
            let (s, t) = self.ends(m);
            if self.action[m].len() != self.size(s) || self.action[m].iter().any(|&v| v >= self.size(t)) {
                out.push(format!("action of {} has the wrong shape", c.morphism_id(m)));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for d in 0..c.num_objects() {
            let id = c.identity(d);
            if self.action[id].iter().enumerate().any(|(x, &v)| v != x) {
                out.push(format!("identity of {} acts non-trivially", c.object_id(d)));
            }
        }
        for f in 0..c.num_morphisms() {
            for &g in c.out_of(c.tgt(f)) {
                let gf = c.compose(g, f).expect("composable");
                let (first, second) = match self.variance {
                    Variance::Covariant => (f, g),
                    Variance::Contravariant => (g, f),
                };
                let (s, _) = self.ends(first);
                for x in 0..self.size(s) {
                    if self.act(second, self.act(first, x)) != self.act(gf, x) {
                        out.push(format!(
                            "action of {} is not the composite of {} and {}",
                            c.morphism_id(gf),
                            c.morphism_id(g),
                            c.morphism_id(f)
                        ));
                        break;
                    }
                }
            }
        }
        out
    }

    pub fn terminal(base: &FinCategory, variance: Variance) -> Presheaf {
        Presheaf {
            base: base.clone(),
            variance,
            sets: vec![vec!["*".to_string()]; base.num_objects()],
            action: vec![vec![0]; base.num_morphisms()],
        }
    }

    pub fn empty(base: &FinCategory, variance: Variance) -> Presheaf {
        Presheaf {
            base: base.clone(),
            variance,
            sets: vec![Vec::new(); base.num_objects()],
            action: vec![Vec::new(); base.num_morphisms()],
        }
    }

    /// `D(d, −)` when covariant, `D(−, d)` when contravariant.
    pub fn representable(base: &FinCategory, d: usize, variance: Variance) -> Presheaf {
        let c = base;
        let elems = |e: usize| -> &[usize] {
            match variance {
                Variance::Covariant => c.hom(d, e),
                Variance::Contravariant => c.hom(e, d),
            }
        };
        let sets = (0..c.num_objects())
            .map(|e| elems(e).iter().map(|&m| c.morphism_id(m).to_string()).collect())
            .collect();
        let action = (0..c.num_morphisms())
            .map(|m| {
                let (s, t) = match variance {
                    Variance::Covariant => (c.src(m), c.tgt(m)),
                    Variance::Contravariant => (c.tgt(m), c.src(m)),
                };
                elems(s)
                    .iter()
                    .map(|&g| {
                        let image = match variance {
                            Variance::Covariant => c.compose(m, g),
                            Variance::Contravariant => c.compose(g, m),
                        }
                        .expect("composable");
                        elems(t).iter().position(|&k| k == image).unwrap()
                    })
                    .collect()
            })
            .collect();
        Presheaf {
            base: base.clone(),
            variance,
            sets,
            action,
        }
    }

    /// A simplicial set as a contravariant functor on the simplex category
    /// truncated at `n`.
    pub fn from_sset(x: &SSet, n: usize) -> Result<Presheaf> {
        if x.truncation() < n {
            return Err(Error::Truncation(format!("simplicial set truncated below {n}")));
        }
        let base = FinCategory::simplex_category(n);
        let sets = (0..=n).map(|k| x.names(k).to_vec()).collect();
        let action = (0..base.num_morphisms())
            .map(|m| {
                let theta = base.simplex_operator(m).expect("simplex operator");
                let b = base.tgt(m);
                (0..x.len(b)).map(|s| x.act(&theta, b, s)).collect()
            })
            .collect();
        Presheaf::new(base, Variance::Contravariant, sets, action)
    }

    pub fn coproduct(&self, other: &Presheaf) -> Result<Presheaf> {
        if self.base != other.base || self.variance != other.variance {
            return Err(Error::Input("coproduct needs presheaves on the same base".into()));
        }
        let sets = (0..self.sets.len())
            .map(|d| {
                let left = self.sets[d].iter().map(|x| format!("L.{x}"));
                left.chain(other.sets[d].iter().map(|x| format!("R.{x}"))).collect()
            })
            .collect();
        let action = (0..self.action.len())
            .map(|m| {
                let shift = self.size(self.ends(m).1);
                let mut v = self.action[m].clone();
                v.extend(other.action[m].iter().map(|&y| y + shift));
                v
            })
            .collect();
        Presheaf::new(self.base.clone(), self.variance, sets, action)
    }

    /// Pushout of `a ← c → b` along natural maps given per object.
    pub fn pushout(c: &Presheaf, a: &Presheaf, b: &Presheaf, f: &[Vec<usize>], g: &[Vec<usize>]) -> Result<Presheaf> {
        let sum = a.coproduct(b)?;
        let objects = sum.base.num_objects();
        let mut label: Vec<Vec<usize>> = Vec::with_capacity(objects);
        let mut sets = Vec::with_capacity(objects);
        for d in 0..objects {
            let mut uf = UnionFind::new(sum.size(d));
            for x in 0..c.size(d) {
                uf.union(f[d][x], a.size(d) + g[d][x]);
            }
            let mut classes: HashMap<usize, usize> = HashMap::new();
            let mut names = Vec::new();
            let l = (0..sum.size(d))
                .map(|x| {
                    let r = uf.find(x);
                    *classes.entry(r).or_insert_with(|| {
                        names.push(sum.sets[d][x].clone());
                        names.len() - 1
                    })
                })
                .collect();
            label.push(l);
            sets.push(names);
        }
        let action = (0..sum.action.len())
            .map(|m| {
                let (s, t) = sum.ends(m);
                let mut v = vec![0; sets[s].len()];
                for x in 0..sum.size(s) {
                    v[label[s][x]] = label[t][sum.act(m, x)];
                }
                v
            })
            .collect();
        Presheaf::new(sum.base.clone(), sum.variance, sets, action)
    }

    /// Sub-presheaf on the given elements; fails if not closed under the action.
    pub fn restrict(&self, keep: &[Vec<bool>]) -> Result<Presheaf> {
        let pos: Vec<Vec<Option<usize>>> = keep
            .iter()
            .map(|k| {
                let mut i = 0;
                k.iter()
                    .map(|&b| {
                        b.then(|| {
                            i += 1;
                            i - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let sets = (0..self.sets.len())
            .map(|d| (0..self.size(d)).filter(|&x| keep[d][x]).map(|x| self.sets[d][x].clone()).collect())
            .collect();
        let mut action = Vec::with_capacity(self.action.len());
        for m in 0..self.action.len() {
            let (s, t) = self.ends(m);
            let mut v = Vec::new();
            for x in (0..self.size(s)).filter(|&x| keep[s][x]) {
                let y = pos[t][self.act(m, x)]
                    .ok_or_else(|| Error::Input("selection is not closed under the action".into()))?;
                v.push(y);
            }
            action.push(v);
        }
        Presheaf::new(self.base.clone(), self.variance, sets, action)
    }

    /// A seeded random presheaf: a coproduct of up to `max_copies`
    /// representables at each object, always functorial.
    pub fn random(base: &FinCategory, variance: Variance, max_copies: usize, seed: u64) -> Presheaf {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = Presheaf::empty(base, variance);
        for d in 0..base.num_objects() {
            for _ in 0..rng.gen_range(0..=max_copies) {
                p = p
                    .coproduct(&Presheaf::representable(base, d, variance))
                    .expect("same base");
            }
        }
        p
    }
}

/// A weighted limit: each element is a natural family of functions
/// `W(d) → X(d)`, stored as `families[k][d][w]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedLimit {
    pub families: Vec<Vec<Vec<usize>>>,
}

impl WeightedLimit {
    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }
}

pub fn weighted_limit(w: &Presheaf, x: &Presheaf) -> Result<WeightedLimit> {
    weighted_limit_with_budget(w, x, DEFAULT_LIMIT_BUDGET)
}

/// The end of `X(d)^{W(d)}`, by backtracking over the components.
pub fn weighted_limit_with_budget(w: &Presheaf, x: &Presheaf, budget: usize) -> Result<WeightedLimit> {
    if w.base != x.base {
        return Err(Error::Input("weight and diagram have different bases".into()));
    }
    if w.variance != x.variance {
        return Err(Error::Input("a weighted limit needs weight and diagram of the same variance".into()));
    }
    let c = &w.base;
    let vars: Vec<(usize, usize)> = (0..c.num_objects()).flat_map(|d| (0..w.size(d)).map(move |e| (d, e))).collect();
    let var_of: HashMap<(usize, usize), usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // constraint: value(to, W(m) e) = X(m)(value(from, e)); checked once both are set
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); vars.len()];
    for m in 0..c.num_morphisms() {
        let (s, t) = w.ends(m);
        for e in 0..w.size(s) {
            let a = var_of[&(s, e)];
            let b = var_of[&(t, w.act(m, e))];
            checks[a.max(b)].push((a, b, m));
        }
    }
    let mut value = vec![0usize; vars.len()];
    let mut families = Vec::new();
    let mut next = vec![0usize; vars.len() + 1];
    let mut k = 0usize;
    loop {
        if k == vars.len() {
            if families.len() >= budget {
                return Err(Error::budget("weighted limit", budget, format!("{} families", families.len())));
            }
            let mut fam: Vec<Vec<usize>> = (0..c.num_objects()).map(|d| vec![0; w.size(d)]).collect();
            for (i, &(d, e)) in vars.iter().enumerate() {
                fam[d][e] = value[i];
            }
            families.push(fam);
            if k == 0 {
                break;
            }
            k -= 1;
            continue;
        }
        let d = vars[k].0;
        if next[k] < x.size(d) {
            value[k] = next[k];
            next[k] += 1;
            let ok = checks[k].iter().all(|&(a, b, m)| value[b] == x.act(m, value[a]));
            if ok {
                k += 1;
                next[k] = 0;
            }
        } else {
            if k == 0 {
                break;
            }
            k -= 1;
        }
    }
    Ok(WeightedLimit { families })
}

/// A weighted colimit: classes of triples `(d, w, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedColimit {
    pub classes: Vec<Vec<(usize, usize, usize)>>,
    pub names: Vec<String>,
}

impl WeightedColimit {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, t: (usize, usize, usize)) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&t))
    }
}

/// The coend of `W(d) × Y(d)`, quotiented by union–find.
pub fn weighted_colimit(w: &Presheaf, y: &Presheaf) -> Result<WeightedColimit> {
    if w.base != y.base {
        return Err(Error::Input("weight and diagram have different bases".into()));
    }
    if w.variance == y.variance {
        return Err(Error::Input("a weighted colimit needs weight and diagram of opposite variance".into()));
    }
    let c = &w.base;
    let mut offset = Vec::with_capacity(c.num_objects());
    let mut triples = Vec::new();
    for d in 0..c.num_objects() {
        offset.push(triples.len());
        for a in 0..w.size(d) {
            for b in 0..y.size(d) {
                triples.push((d, a, b));
            }
        }
    }
    let at = |d: usize, a: usize, b: usize| offset[d] + a * y.size(d) + b;
    let mut uf = UnionFind::new(triples.len());
    for m in 0..c.num_morphisms() {
        let (s, t) = w.ends(m);
        for a in 0..w.size(s) {
            for b in 0..y.size(t) {
                uf.union(at(t, w.act(m, a), b), at(s, a, y.act(m, b)));
            }
        }
    }
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    for (i, &t) in triples.iter().enumerate() {
        let r = uf.find(i);
        let k = *index.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(t);
    }
    let names = classes
        .iter()
        .map(|cl| {
            let (d, a, b) = cl[0];
            format!("[{},{}]@{}", w.sets[d][a], y.sets[d][b], c.object_id(d))
        })
        .collect();
    Ok(WeightedColimit { classes, names })
}

/// Degrees and the two wide subcategories of a Reedy structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReedyStructure {
    pub base: FinCategory,
    pub degree: Vec<usize>,
    pub increasing: Vec<bool>,
    pub decreasing: Vec<bool>,
}

impl ReedyStructure {
    /// The simplex category up to `[n]`: faces increase, degeneracies decrease.
    pub fn simplex(n: usize) -> ReedyStructure {
        let base = FinCategory::simplex_category(n);
        let ops: Vec<Vec<usize>> = (0..base.num_morphisms())
            .map(|m| base.simplex_operator(m).expect("operator"))
            .collect();
        let increasing = ops.iter().map(|t| t.windows(2).all(|p| p[0] < p[1])).collect();
        let decreasing = (0..base.num_morphisms())
            .map(|m| {
                let t = &ops[m];
                (0..=base.tgt(m)).all(|v| t.contains(&v))
            })
            .collect();
        ReedyStructure {
            degree: (0..=n).collect(),
            base,
            increasing,
            decreasing,
        }
    }

    /// Every object in degree 0 with only identities in either class.
    pub fn discrete(base: &FinCategory) -> ReedyStructure {
        let ids: Vec<bool> = (0..base.num_morphisms()).map(|m| base.is_identity(m)).collect();
        ReedyStructure {
            base: base.clone(),
            degree: vec![0; base.num_objects()],
            increasing: ids.clone(),
            decreasing: ids,
        }
    }

    /// Degrees given; non-identity arrows are increasing or decreasing by
    /// how they move the degree.
    pub fn from_degrees(base: &FinCategory, degree: Vec<usize>) -> ReedyStructure {
        let c = base;
        let increasing = (0..c.num_morphisms())
            .map(|m| c.is_identity(m) || degree[c.src(m)] < degree[c.tgt(m)])
            .collect();
        let decreasing = (0..c.num_morphisms())
            .map(|m| c.is_identity(m) || degree[c.src(m)] > degree[c.tgt(m)])
            .collect();
        ReedyStructure {
            base: base.clone(),
            degree,
            increasing,
            decreasing,
        }
    }

    /// All `(decreasing, increasing)` pairs composing to `f`.
    pub fn factorizations(&self, f: usize) -> Vec<(usize, usize)> {
        let c = &self.base;
        let mut out = Vec::new();
        for &d in c.out_of(c.src(f)) {
            if !self.decreasing[d] {
                continue;
            }
            for &i in c.hom(c.tgt(d), c.tgt(f)) {
                if self.increasing[i] && c.compose(i, d) == Some(f) {
                    out.push((d, i));
                }
            }
        }
        out
    }

    /// Lowest degree of an object that `f` factors through.
    pub fn minimal_degree(&self, f: usize) -> usize {
        let c = &self.base;
        (0..c.num_objects())
            .filter(|&o| {
                c.hom(c.src(f), o)
                    .iter()
                    .any(|&g| c.hom(o, c.tgt(f)).iter().any(|&h| c.compose(h, g) == Some(f)))
            })
            .map(|o| self.degree[o])
            .min()
            .expect("f factors through its own ends")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReedyReport {
    pub holds: bool,
    pub violations: Vec<String>,
}

pub fn validate_reedy(r: &ReedyStructure) -> ReedyReport {
    let c = &r.base;
    let mut v = Vec::new();
    if r.degree.len() != c.num_objects() || r.increasing.len() != c.num_morphisms() || r.decreasing.len() != c.num_morphisms() {
        return ReedyReport {
            holds: false,
            violations: vec!["tables do not match the category".into()],
        };
    }
    for (name, class) in [("increasing", &r.increasing), ("decreasing", &r.decreasing)] {
        for o in 0..c.num_objects() {
            if !class[c.identity(o)] {
                v.push(format!("{name} class misses the identity of {}", c.object_id(o)));
            }
        }
        for f in 0..c.num_morphisms() {
            for &g in c.out_of(c.tgt(f)) {
                let gf = c.compose(g, f).expect("composable");
                if class[f] && class[g] && !class[gf] {
                    v.push(format!("{name} class is not closed: {} after {}", c.morphism_id(g), c.morphism_id(f)));
                }
            }
        }
    }
    for m in c.non_identity_morphisms() {
        let (s, t) = (r.degree[c.src(m)], r.degree[c.tgt(m)]);
        if r.increasing[m] && s >= t {
            v.push(format!("increasing {} does not raise degree", c.morphism_id(m)));
        }
        if r.decreasing[m] && s <= t {
            v.push(format!("decreasing {} does not lower degree", c.morphism_id(m)));
        }
        if c.is_isomorphism(m) {
            v.push(format!("{} is a non-identity isomorphism", c.morphism_id(m)));
        }
    }
    for f in 0..c.num_morphisms() {
        match r.factorizations(f).len() {
            1 => {}
            0 => v.push(format!("{} has no decreasing-then-increasing factorization", c.morphism_id(f))),
            n => v.push(format!("{} has {n} factorizations", c.morphism_id(f))),
        }
    }
    ReedyReport {
        holds: v.is_empty(),
        violations: v,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReedyFactorization {
    pub decreasing: usize,
    pub increasing: usize,
    pub middle: usize,
    /// The middle object has the lowest degree of any factorization.
    pub minimal: bool,
}

pub fn reedy_factorize(r: &ReedyStructure, f: usize) -> Result<ReedyFactorization> {
    let c = &r.base;
    let found = r.factorizations(f);
    match found.as_slice() {
        [(d, i)] => {
            let middle = c.tgt(*d);
            Ok(ReedyFactorization {
                decreasing: *d,
                increasing: *i,
                middle,
                minimal: r.degree[middle] == r.minimal_degree(f),
            })
        }
        [] => Err(Error::Input(format!("{} has no Reedy factorization", c.morphism_id(f)))),
        _ => Err(Error::Input(format!("{} has {} Reedy factorizations", c.morphism_id(f), found.len()))),
    }
}

/// `sk_n` of a presheaf: the image of the counit from the left Kan
/// extension of its restriction to objects of degree at most `n`, which is
/// the union of the images of the actions out of those objects.
pub fn skeleton(x: &Presheaf, degree: &[usize], n: Option<usize>) -> Result<Presheaf> {
    let c = &x.base;
    let low: Vec<usize> = (0..c.num_objects()).filter(|&o| n.is_some_and(|n| degree[o] <= n)).collect();
    let mut keep: Vec<Vec<bool>> = (0..c.num_objects()).map(|d| vec![false; x.size(d)]).collect();
    for m in 0..c.num_morphisms() {
        let (s, t) = x.ends(m);
        if low.contains(&s) {
            for y in 0..x.size(s) {
                keep[t][x.act(m, y)] = true;
            }
        }
    }
    x.restrict(&keep)
}

fn boundary_weight(r: &ReedyStructure, a: usize, variance: Variance) -> Result<Presheaf> {
    let rep = Presheaf::representable(&r.base, a, variance);
    skeleton(&rep, &r.degree, r.degree[a].checked_sub(1))
}

/// Latching object at `a`: the boundary weight colimit of `x`.
pub fn latching(x: &Presheaf, r: &ReedyStructure, a: usize) -> Result<WeightedColimit> {
    if x.base != r.base {
        return Err(Error::Input("presheaf and Reedy structure have different bases".into()));
    }
    let w = boundary_weight(r, a, x.variance.flip())?;
    weighted_colimit(&w, x)
}

/// The canonical map from the latching object at `a` into `X(a)`: the image
/// of each class, or an error if a class is not sent to a single element.
pub fn latching_comparison(x: &Presheaf, r: &ReedyStructure, a: usize) -> Result<Vec<usize>> {
    let w = boundary_weight(r, a, x.variance.flip())?;
    let l = weighted_colimit(&w, x)?;
    let c = &x.base;
    l.classes
        .iter()
        .map(|cl| {
            let mut image = None;
            for &(d, e, y) in cl {
                let theta = c.morphism_index(&w.sets[d][e])?;
                let v = x.act(theta, y);
                if image.replace(v).is_some_and(|prev| prev != v) {
                    return Err(Error::Incomplete("latching map is not constant on a class".into()));
                }
            }
            image.ok_or_else(|| Error::Input("empty latching class".into()))
        })
        .collect()
}

/// Matching object at `a`: the boundary weight limit of `x`.
pub fn matching(x: &Presheaf, r: &ReedyStructure, a: usize) -> Result<WeightedLimit> {
    if x.base != r.base {
        return Err(Error::Input("presheaf and Reedy structure have different bases".into()));
    }
    let w = boundary_weight(r, a, x.variance)?;
    weighted_limit(&w, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn parallel() -> FinCategory {
        fixtures::parallel_pair().category
    }

    /// Compatible families in the product, enumerated directly.
    fn limit_by_product(x: &Presheaf) -> usize {
        let c = &x.base;
        let sizes: Vec<usize> = (0..c.num_objects()).map(|d| x.size(d)).collect();
        let total: usize = sizes.iter().product();
        (0..total)
            .filter(|&code| {
                let mut rest = code;
                let pick: Vec<usize> = sizes
                    .iter()
                    .map(|&s| {
                        let v = rest % s;
                        rest /= s;
                        v
                    })
                    .collect();
                (0..c.num_morphisms()).all(|m| {
                    let (s, t) = x.ends(m);
                    x.act(m, pick[s]) == pick[t]
                })
            })
            .count()
    }

    #[test]
    fn representable_weights_evaluate() {
        for fx in fixtures::all_fixtures() {
            let c = &fx.category;
            for seed in 0..3 {
                for variance in [Variance::Covariant, Variance::Contravariant] {
                    let x = Presheaf::random(c, variance, 2, seed);
                    for d in 0..c.num_objects() {
                        let lim = weighted_limit(&Presheaf::representable(c, d, variance), &x).unwrap();
                        assert_eq!(lim.len(), x.size(d), "{}", fx.name);
                        // the bijection: evaluate the family at the identity
                        let at_id = Presheaf::representable(c, d, variance).sets[d]
                            .iter()
                            .position(|n| n == c.morphism_id(c.identity(d)))
                            .unwrap();
                        let mut seen: Vec<usize> = lim.families.iter().map(|f| f[d][at_id]).collect();
                        seen.sort_unstable();
                        assert_eq!(seen, (0..x.size(d)).collect::<Vec<_>>());
                        let colim = weighted_colimit(&Presheaf::representable(c, d, variance.flip()), &x).unwrap();
                        assert_eq!(colim.len(), x.size(d), "{}", fx.name);
                    }
                }
            }
        }
    }

    #[test]
    fn terminal_weight_gives_the_limit() {
        for fx in fixtures::all_fixtures() {
            let c = &fx.category;
            for seed in 0..4 {
                let x = Presheaf::random(c, Variance::Covariant, 2, seed);
                let lim = weighted_limit(&Presheaf::terminal(c, Variance::Covariant), &x).unwrap();
                assert_eq!(lim.len(), limit_by_product(&x), "{}", fx.name);
            }
        }
    }

    #[test]
    fn discrete_base_is_a_product_of_powers() {
        let c = FinCategory::discrete(&["p", "q"]);
        let w = Presheaf::new(
            c.clone(),
            Variance::Covariant,
            vec![vec!["a".into(), "b".into()], vec!["c".into()]],
            vec![vec![0, 1], vec![0]],
        )
        .unwrap();
        let x = Presheaf::new(
            c,
            Variance::Covariant,
            vec![vec!["0".into(), "1".into(), "2".into()], vec!["0".into(), "1".into()]],
            vec![vec![0, 1, 2], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(weighted_limit(&w, &x).unwrap().len(), 9 * 2);
    }

    #[test]
    fn coequalizer_on_the_parallel_pair() {
        let c = parallel();
        let (a, b) = (c.object_index("a").unwrap(), c.object_index("b").unwrap());
        let mut sets = vec![Vec::new(); 2];
        sets[a] = vec!["0".to_string(), "1".to_string()];
        sets[b] = vec!["*".to_string()];
        let action = (0..c.num_morphisms())
            .map(|m| {
                if c.is_identity(m) {
                    (0..sets[c.src(m)].len()).collect()
                } else if c.morphism_id(m) == "f" {
                    vec![0]
                } else {
                    vec![1]
                }
            })
            .collect();
        let y = Presheaf::new(c.clone(), Variance::Contravariant, sets, action).unwrap();
        let colim = weighted_colimit(&Presheaf::terminal(&c, Variance::Covariant), &y).unwrap();
        assert_eq!(colim.len(), 1);
    }

    #[test]
    fn colimits_preserve_pushouts_of_weights() {
        // D = [1]; the weight D(1,−) ⇒ D(0,−) along the arrow, pushed out
        // against itself, against diagrams Y: the colimit is the pushout of
        // Y(0) ← Y(1) → Y(0).
        let c = FinCategory::ordinal(1);
        let u = c.non_identity_morphisms().next().unwrap();
        let r0 = Presheaf::representable(&c, 0, Variance::Covariant);
        let r1 = Presheaf::representable(&c, 1, Variance::Covariant);
        // precompose with u: D(1,e) → D(0,e)
        let along: Vec<Vec<usize>> = (0..2)
            .map(|e| {
                c.hom(1, e)
                    .iter()
                    .map(|&g| c.hom(0, e).iter().position(|&k| Some(k) == c.compose(g, u)).unwrap())
                    .collect()
            })
            .collect();
        let w = Presheaf::pushout(&r1, &r0, &r0, &along, &along).unwrap();
        for seed in 0..6 {
            let y = Presheaf::random(&c, Variance::Contravariant, 2, seed);
            let colim = weighted_colimit(&w, &y).unwrap();
            let f = crate::lifting::SetMap {
                cod: y.size(0),
                values: y.action[u].clone(),
            };
            let (left, _) = crate::lifting::pushout_sets(&f, &f);
            assert_eq!(colim.len(), left.cod);
        }
    }

    #[test]
    fn simplex_category_is_reedy() {
        let r = ReedyStructure::simplex(3);
        let report = validate_reedy(&r);
        assert!(report.holds, "{:?}", report.violations);
        for f in 0..r.base.num_morphisms() {
            let fac = reedy_factorize(&r, f).unwrap();
            assert!(fac.minimal);
        }
        let f = r.base.morphism_index("[2->2]0,0,2").unwrap();
        let fac = reedy_factorize(&r, f).unwrap();
        assert_eq!(r.base.morphism_id(fac.decreasing), "[2->1]0,0,1");
        assert_eq!(r.base.morphism_id(fac.increasing), "[1->2]0,2");
    }

    #[test]
    fn discrete_and_parallel_reedy() {
        let d = ReedyStructure::discrete(&FinCategory::discrete(&["p", "q"]));
        assert!(validate_reedy(&d).holds);
        let c = parallel();
        let degrees = vec![0, 1];
        let r = ReedyStructure::from_degrees(&c, degrees);
        assert!(validate_reedy(&r).holds);
        let iso = fixtures::free_iso().category;
        assert!(!validate_reedy(&ReedyStructure::from_degrees(&iso, vec![0, 1])).holds);
    }

    #[test]
    fn latching_and_matching_of_the_interval() {
        let x = Presheaf::from_sset(&SSet::standard_simplex(1, 2), 2).unwrap();
        let r = ReedyStructure::simplex(2);
        assert_eq!(latching(&x, &r, 1).unwrap().len(), 2);
        assert_eq!(matching(&x, &r, 1).unwrap().len(), 4);
        assert_eq!(latching(&x, &r, 0).unwrap().len(), 0);
    }

    #[test]
    fn latching_counts_degenerate_simplices() {
        let samples = [
            SSet::standard_simplex(2, 3),
            SSet::boundary(2, 3),
            SSet::nerve(&fixtures::commutative_square().category, 3),
        ];
        let r = ReedyStructure::simplex(3);
        for x in &samples {
            let p = Presheaf::from_sset(x, 3).unwrap();
            for n in 0..=3 {
                let degenerate = (0..x.len(n)).filter(|&s| x.is_degenerate(n, s)).count();
                assert_eq!(latching(&p, &r, n).unwrap().len(), degenerate);
            }
        }
    }

    #[test]
    fn skeleton_of_a_representable() {
        // sk_0 Δ² has the three vertices only in degree 0 and their
        // degeneracies above.
        let r = ReedyStructure::simplex(2);
        let rep = Presheaf::representable(&r.base, 2, Variance::Contravariant);
        let sk0 = skeleton(&rep, &r.degree, Some(0)).unwrap();
        assert_eq!((sk0.size(0), sk0.size(1), sk0.size(2)), (3, 3, 3));
        let sk1 = skeleton(&rep, &r.degree, Some(1)).unwrap();
        assert_eq!(sk1.size(2), rep.size(2) - 1);
    }

    proptest::proptest! {
        #[test]
        fn random_presheaves_are_functorial(seed in 0u64..500, which in 0usize..10) {
            let fx = &fixtures::all_fixtures()[which];
            for variance in [Variance::Covariant, Variance::Contravariant] {
                let p = Presheaf::random(&fx.category, variance, 2, seed);
                proptest::prop_assert!(p.validate().is_empty());
            }
        }
    }
}
