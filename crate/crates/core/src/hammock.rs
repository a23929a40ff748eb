//! Reduced hammocks and the hammock mapping complexes.
//!
//! A hammock of width `k` has `k + 1` rows, each a zig-zag from the source to
//! the target with the same column directions, joined by vertical weak
//! equivalences between consecutive rows. Length 0 is the identity hammock.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, WeakEquivalences};
use crate::fractions::{FractionsCategory, Letter, ZigZag};
use crate::sset::{SSet, UnionFind};

pub const DEFAULT_HAMMOCK_LIMIT: usize = 500_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hammock {
    pub src: usize,
    pub tgt: usize,
    /// Direction of each column, `true` when it points back towards the source.
    pub backward: Vec<bool>,
    /// `rows[i][j]` is the morphism of column `j` in row `i`.
    pub rows: Vec<Vec<usize>>,
    /// `verticals[i][p]` goes from row `i` to row `i + 1` at interior position `p + 1`.
    pub verticals: Vec<Vec<usize>>,
}

impl Hammock {
    pub fn identity(x: usize, width: usize) -> Hammock {
        Hammock {
            src: x,
            tgt: x,
            backward: Vec::new(),
            rows: vec![Vec::new(); width + 1],
            verticals: vec![Vec::new(); width],
        }
    }

    /// The width-0 hammock of a zig-zag, before reduction.
    pub fn from_zigzag(z: &ZigZag) -> Hammock {
        Hammock {
            src: z.src,
            tgt: z.tgt,
            backward: z.word.iter().map(|l| l.backward).collect(),
            rows: vec![z.word.iter().map(|l| l.morphism).collect()],
            verticals: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn len(&self) -> usize {
        self.backward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.backward.is_empty()
    }

    /// The zig-zag along one row.
    pub fn row(&self, i: usize) -> ZigZag {
        ZigZag {
            src: self.src,
            tgt: self.tgt,
            word: self.rows[i]
                .iter()
                .zip(&self.backward)
                .map(|(&m, &b)| Letter { morphism: m, backward: b })
                .collect(),
        }
    }

    /// Object of row `i` at position `p` (0 is the source, `len` the target).
    pub fn object(&self, c: &FinCategory, i: usize, p: usize) -> usize {
        if p == 0 {
            return self.src;
        }
        if p == self.len() {
            return self.tgt;
        }
        let m = c.morphism(self.rows[i][p - 1]);
        if self.backward[p - 1] {
            m.src
        } else {
            m.tgt
        }
    }

    /// Vertical map from row `i` to row `i + 1` at position `p`, identities at the ends.
    fn vertical(&self, c: &FinCategory, i: usize, p: usize) -> usize {
        if p == 0 {
            c.identity(self.src)
        } else if p == self.len() {
            c.identity(self.tgt)
        } else {
            self.verticals[i][p - 1]
        }
    }

    /// Lists every violated hammock condition, reducedness included.
    pub fn validate(&self, c: &FinCategory, w: &WeakEquivalences) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.len();
        if self.rows.iter().any(|r| r.len() != n) {
            out.push("rows of different lengths".into());
            return out;
        }
        if self.verticals.len() != self.width() || self.verticals.iter().any(|v| v.len() != n.saturating_sub(1)) {
            out.push("vertical table has the wrong shape".into());
            return out;
        }
        if n == 0 && self.src != self.tgt {
            out.push("empty hammock between distinct objects".into());
            return out;
        }
        for i in 0..=self.width() {
            let z = self.row(i);
            if let Err(e) = ZigZag::new(c, w, self.src, z.word.clone()) {
                out.push(format!("row {i}: {e}"));
            } else if ZigZag::new(c, w, self.src, z.word).map(|z| z.tgt) != Ok(self.tgt) {
                out.push(format!("row {i} does not end at the target"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for j in 1..n {
            if self.backward[j] == self.backward[j - 1] {
                out.push(format!("columns {} and {} point the same way", j - 1, j));
            }
        }
        for j in 0..n {
            if self.rows.iter().all(|r| c.is_identity(r[j])) {
                out.push(format!("column {j} consists of identities"));
            }
        }
        for i in 0..self.width() {
            for p in 1..n {
                let v = self.verticals[i][p - 1];
                let m = c.morphism(v);
                if !w.contains(v) {
                    out.push(format!("vertical {} is not a weak equivalence", c.morphism_id(v)));
                }
                if m.src != self.object(c, i, p) || m.tgt != self.object(c, i + 1, p) {
                    out.push(format!("vertical {} at row {i} position {p} has wrong ends", c.morphism_id(v)));
                }
            }
            if !out.is_empty() {
                return out;
            }
            for j in 0..n {
                let (u, v) = (self.vertical(c, i, j), self.vertical(c, i, j + 1));
                let (a, b) = (self.rows[i][j], self.rows[i + 1][j]);
                let (lhs, rhs) = if self.backward[j] {
                    (c.compose(u, a), c.compose(b, v))
                } else {
                    (c.compose(v, a), c.compose(b, u))
                };
                if lhs.is_none() || lhs != rhs {
                    out.push(format!("square at row {i} column {j} does not commute"));
                }
            }
        }
        out
    }

    /// Composes same-direction neighbours and drops identity columns until
    /// neither applies.
    pub fn reduce(&self, c: &FinCategory) -> Hammock {
        let mut h = self.clone();
        loop {
            let n = h.len();
            if let Some(j) = (0..n).find(|&j| h.rows.iter().all(|r| c.is_identity(r[j]))) {
                h.backward.remove(j);
                for r in h.rows.iter_mut() {
                    r.remove(j);
                }
                if n > 1 {
                    let p = if j + 1 < n { j } else { j - 1 };
                    for v in h.verticals.iter_mut() {
                        v.remove(p);
                    }
                }
                continue;
            }
            if let Some(j) = (0..n.saturating_sub(1)).find(|&j| h.backward[j] == h.backward[j + 1]) {
                let back = h.backward[j];
                for r in h.rows.iter_mut() {
                    let (a, b) = (r[j], r[j + 1]);
                    r[j] = if back { c.compose(a, b) } else { c.compose(b, a) }.expect("columns compose");
                    r.remove(j + 1);
                }
                h.backward.remove(j + 1);
                for v in h.verticals.iter_mut() {
                    v.remove(j);
                }
                continue;
            }
            return h;
        }
    }

    /// Omits row `r` (composing the verticals around it), then reduces.
    pub fn face(&self, c: &FinCategory, r: usize) -> Hammock {
        assert!(self.width() >= 1 && r <= self.width(), "face index out of range");
        let mut h = self.clone();
        h.rows.remove(r);
        if r == 0 {
            h.verticals.remove(0);
        } else if r == self.width() {
            h.verticals.remove(r - 1);
        } else {
            let below = h.verticals.remove(r);
            for (p, v) in h.verticals[r - 1].iter_mut().enumerate() {
                *v = c.compose(below[p], *v).expect("verticals compose");
            }
        }
        h.reduce(c)
    }

    /// Duplicates row `r` with identity verticals, then reduces.
    pub fn degeneracy(&self, c: &FinCategory, r: usize) -> Hammock {
        let mut h = self.clone();
        h.rows.insert(r + 1, self.rows[r].clone());
        let ids = (1..self.len()).map(|p| c.identity(self.object(c, r, p))).collect();
        h.verticals.insert(r, ids);
        h.reduce(c)
    }

    /// Pastes `self` (source to middle) and `other` (middle to target), then reduces.
    pub fn compose(&self, c: &FinCategory, other: &Hammock) -> Result<Hammock> {
        if self.tgt != other.src {
            return Err(Error::Input("hammocks are not composable".into()));
        }
        if self.width() != other.width() {
            return Err(Error::Input("hammocks have different widths".into()));
        }
        let mut h = Hammock {
            src: self.src,
            tgt: other.tgt,
            backward: [self.backward.clone(), other.backward.clone()].concat(),
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| [a.clone(), b.clone()].concat()).collect(),
            verticals: Vec::new(),
        };
        let middle = self.len() > 0 && other.len() > 0;
        h.verticals = (0..self.width())
            .map(|i| {
                let mut v = self.verticals[i].clone();
                if middle {
                    v.push(c.identity(self.tgt));
                }
                v.extend_from_slice(&other.verticals[i]);
                v
            })
            .collect();
        Ok(h.reduce(c))
    }

    pub fn display<'a>(&'a self, c: &'a FinCategory) -> impl fmt::Display + 'a {
        DisplayHammock { h: self, c }
    }
}

struct DisplayHammock<'a> {
    h: &'a Hammock,
    c: &'a FinCategory,
}

impl fmt::Display for DisplayHammock<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (h, c) = (self.h, self.c);
        for i in 0..=h.width() {
            if i > 0 {
                let vs: Vec<&str> = h.verticals[i - 1].iter().map(|&v| c.morphism_id(v)).collect();
                write!(f, " // [{}] // ", vs.join(","))?;
            }
            write!(f, "{}", h.row(i).display(c))?;
        }
        Ok(())
    }
}

/// The truncated simplicial set of reduced hammocks between two objects.
#[derive(Clone, Debug)]
pub struct HammockComplex {
    pub src: usize,
    pub tgt: usize,
    pub max_len: usize,
    pub levels: Vec<Vec<Hammock>>,
    pub sset: SSet,
}

impl HammockComplex {
    pub fn max_width(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn index_of(&self, h: &Hammock) -> Option<usize> {
        self.levels.get(h.width())?.iter().position(|g| g == h)
    }

    /// Component label of each width-0 hammock.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.levels[0].len());
        if self.max_width() >= 1 {
            for e in 0..self.levels[1].len() {
                uf.union(self.sset.face(1, e, 0), self.sset.face(1, e, 1));
            }
        }
        (0..self.levels[0].len()).map(|x| uf.find(x)).collect()
    }
}

pub fn enumerate(
    c: &FinCategory,
    w: &WeakEquivalences,
    x: usize,
    y: usize,
    max_len: usize,
    max_width: usize,
) -> Result<HammockComplex> {
    enumerate_with_limit(c, w, x, y, max_len, max_width, DEFAULT_HAMMOCK_LIMIT)
}

/// Every reduced hammock from `x` to `y` of length at most `max_len` and
/// width at most `max_width`, in a deterministic order.
pub fn enumerate_with_limit(
    c: &FinCategory,
    w: &WeakEquivalences,
    x: usize,
    y: usize,
    max_len: usize,
    max_width: usize,
    limit: usize,
) -> Result<HammockComplex> {
    if x >= c.num_objects() || y >= c.num_objects() {
        return Err(Error::UnknownId(format!("object #{}", x.max(y))));
    }
    if max_len == 0 {
        return Err(Error::Parameter("hammock length bound must be at least 1".into()));
    }
    if !w.is_subcategory(c) {
        return Err(Error::Input("weak equivalences do not form a wide subcategory".into()));
    }
    let mut levels: Vec<Vec<Hammock>> = Vec::new();
    let mut total = 0;
    for k in 0..=max_width {
        let mut level = Vec::new();
        if x == y {
            level.push(Hammock::identity(x, k));
        }
        for n in 1..=max_len {
            for first_back in [false, true] {
                let mut search = Search {
                    c,
                    w,
                    x,
                    y,
                    width: k,
                    backward: (0..n).map(|j| first_back ^ (j % 2 == 1)).collect(),
                    rows: vec![Vec::new(); k + 1],
                    verticals: vec![Vec::new(); k],
                    out: &mut level,
                    limit: limit - total.min(limit),
                };
                search.column(0)?;
            }
            if total + level.len() > limit {
                return Err(Error::budget(
                    "hammocks",
                    limit,
                    format!("{} hammocks of width {k} up to length {n}", level.len()),
                ));
            }
        }
        total += level.len();
        levels.push(level);
    }
    let sset = SSet::from_keyed(
        max_width,
        levels.clone(),
        |_, h, i| h.face(c, i),
        |_, h, j| h.degeneracy(c, j),
        |_, h| h.display(c).to_string(),
    )?;
    Ok(HammockComplex {
        src: x,
        tgt: y,
        max_len,
        levels,
        sset,
    })
}

struct Search<'a> {
    c: &'a FinCategory,
    w: &'a WeakEquivalences,
    x: usize,
    y: usize,
    width: usize,
    backward: Vec<bool>,
    rows: Vec<Vec<usize>>,
    verticals: Vec<Vec<usize>>,
    out: &'a mut Vec<Hammock>,
    limit: usize,
}

impl Search<'_> {
    fn prev_object(&self, i: usize, j: usize) -> usize {
        if j == 0 {
            return self.x;
        }
        let m = self.c.morphism(self.rows[i][j - 1]);
        if self.backward[j - 1] {
            m.src
        } else {
            m.tgt
        }
    }

    fn prev_vertical(&self, i: usize, j: usize) -> usize {
        if j == 0 {
            self.c.identity(self.x)
        } else {
            self.verticals[i][j - 1]
        }
    }

    /// Arrows of column `j` available in a row whose previous object is `o`.
    fn arrows(&self, j: usize, o: usize) -> Vec<usize> {
        let last = j + 1 == self.backward.len();
        (0..self.c.num_morphisms())
            .filter(|&m| {
                let mor = self.c.morphism(m);
                let (from, to) = if self.backward[j] { (mor.tgt, mor.src) } else { (mor.src, mor.tgt) };
                from == o && (!last || to == self.y) && (!self.backward[j] || self.w.contains(m))
            })
            .collect()
    }

    fn column(&mut self, j: usize) -> Result<()> {
        if j == self.backward.len() {
            if self.out.len() >= self.limit {
                return Err(Error::budget("hammocks", self.limit, format!("{} found", self.out.len())));
            }
            self.out.push(Hammock {
                src: self.x,
                tgt: self.y,
                backward: self.backward.clone(),
                rows: self.rows.clone(),
                verticals: self.verticals.clone(),
            });
            return Ok(());
        }
        for a in self.arrows(j, self.prev_object(0, j)) {
            self.rows[0].push(a);
            self.row(j, 0)?;
            self.rows[0].pop();
        }
        Ok(())
    }

    /// Row `i` of column `j` is placed; choose the vertical below it and row `i + 1`.
    fn row(&mut self, j: usize, i: usize) -> Result<()> {
        let c = self.c;
        let last = j + 1 == self.backward.len();
        if i == self.width {
            if self.rows.iter().all(|r| c.is_identity(r[j])) {
                return Ok(());
            }
            return self.column(j + 1);
        }
        let a = self.rows[i][j];
        let here = {
            let m = c.morphism(a);
            if self.backward[j] {
                m.src
            } else {
                m.tgt
            }
        };
        let u = self.prev_vertical(i, j);
        let below_prev = self.prev_object(i + 1, j);
        let verticals: Vec<usize> = if last {
            vec![c.identity(self.y)]
        } else {
            c.out_of(here).iter().copied().filter(|&v| self.w.contains(v)).collect()
        };
        for v in verticals {
            let below = c.morphism(v).tgt;
            for b in self.arrows(j, below_prev) {
                let mb = c.morphism(b);
                let b_end = if self.backward[j] { mb.src } else { mb.tgt };
                if b_end != below {
                    continue;
                }
                let ok = if self.backward[j] {
                    c.compose(u, a) == c.compose(b, v)
                } else {
                    c.compose(v, a) == c.compose(b, u)
                };
                if !ok {
                    continue;
                }
                if !last {
                    self.verticals[i].push(v);
                }
                self.rows[i + 1].push(b);
                self.row(j, i + 1)?;
                self.rows[i + 1].pop();
                if !last {
                    self.verticals[i].pop();
                }
            }
        }
        Ok(())
    }
}

/// The fractions class of a hammock's top row, composed letter by letter.
pub fn class_of_row(f: &FractionsCategory, h: &Hammock, row: usize) -> Option<usize> {
    let mut k = f.identity(h.src);
    for (&m, &b) in h.rows[row].iter().zip(&h.backward) {
        let step = if b { f.backward_class(m)? } else { f.forward_class(m)? };
        k = f.compose(k, step)?;
    }
    Some(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAgreement {
    pub src: String,
    pub tgt: String,
    pub width0: usize,
    pub components: usize,
    pub classes: usize,
    pub bijective: bool,
}

#[derive(Clone, Debug)]
pub struct Pi0Agreement {
    pub holds: bool,
    pub homs: Vec<HomAgreement>,
    pub functorial: bool,
    pub counterexample: Option<String>,
}

/// Compares path components of width-0 hammocks with fractions classes on
/// every hom-set, and checks that composition is respected.
pub fn pi0_agreement(f: &FractionsCategory, max_len: usize, max_width: usize) -> Result<Pi0Agreement> {
    if !f.is_complete() {
        return Err(Error::Incomplete(format!(
            "fractions truncated at bound {}; hammock comparison needs a complete category",
            f.bound()
        )));
    }
    let c = f.parent();
    let w = f.weak_equivalences();
    let objs = c.num_objects();
    let mut complexes = BTreeMap::new();
    let mut homs = Vec::new();
    let mut counterexample = None;
    for x in 0..objs {
        for y in 0..objs {
            let mx = enumerate(c, w, x, y, max_len, max_width.max(1))?;
            let comps = mx.components();
            let mut comp_class: HashMap<usize, usize> = HashMap::new();
            let mut well_defined = true;
            for (h, &comp) in mx.levels[0].iter().zip(&comps) {
                let Some(k) = class_of_row(f, h, 0) else {
                    return Err(Error::Incomplete(format!(
                        "class of {} is outside the fractions bound",
                        h.display(c)
                    )));
                };
                if *comp_class.entry(comp).or_insert(k) != k {
                    well_defined = false;
                    counterexample.get_or_insert_with(|| {
                        format!("component of {} meets two fraction classes", h.display(c))
                    });
                }
            }
            let classes = f.hom(x, y);
            let mut hit: Vec<usize> = comp_class.values().copied().collect();
            hit.sort_unstable();
            let injective = hit.windows(2).all(|p| p[0] != p[1]);
            let surjective = classes.iter().all(|k| hit.binary_search(k).is_ok());
            if !injective {
                counterexample.get_or_insert_with(|| {
                    format!("two hammock components from {} to {} share a class", c.object_id(x), c.object_id(y))
                });
            }
            if !surjective {
                counterexample.get_or_insert_with(|| {
                    format!(
                        "a fraction class from {} to {} has no hammock within length {max_len}",
                        c.object_id(x),
                        c.object_id(y)
                    )
                });
            }
            homs.push(HomAgreement {
                src: c.object_id(x).to_string(),
                tgt: c.object_id(y).to_string(),
                width0: mx.levels[0].len(),
                components: comp_class.len(),
                classes: classes.len(),
                bijective: well_defined && injective && surjective,
            });
            complexes.insert((x, y), (mx, comps));
        }
    }
    let mut functorial = true;
    let reps = |x: usize, y: usize| -> Vec<Hammock> {
        let (mx, comps) = &complexes[&(x, y)];
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for (h, &k) in mx.levels[0].iter().zip(comps) {
            if !seen.contains(&k) {
                seen.push(k);
                out.push(h.clone());
            }
        }
        out
    };
    'outer: for x in 0..objs {
        for y in 0..objs {
            let left = reps(x, y);
            for z in 0..objs {
                for g in &left {
                    for h in reps(y, z) {
                        let gh = g.compose(c, &h)?;
                        let expected = f.compose(class_of_row(f, g, 0).unwrap(), class_of_row(f, &h, 0).unwrap());
                        if class_of_row(f, &gh, 0) != expected {
                            functorial = false;
                            counterexample.get_or_insert_with(|| {
                                format!("composite of {} and {} changes class", g.display(c), h.display(c))
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let holds = functorial && homs.iter().all(|h| h.bijective);
    Ok(Pi0Agreement {
        holds,
        homs,
        functorial,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::fractions::{build_fractions, normalize};

    fn obj(c: &FinCategory, id: &str) -> usize {
        c.object_index(id).unwrap()
    }

    #[test]
    fn identities_only_gives_the_hom_set() {
        let c = fixtures::commutative_square().category;
        let w = WeakEquivalences::identities(&c);
        for x in 0..c.num_objects() {
            for y in 0..c.num_objects() {
                let mx = enumerate(&c, &w, x, y, 3, 1).unwrap();
                let forward: Vec<_> = mx.levels[0]
                    .iter()
                    .filter(|h| h.len() == 1 && !h.backward[0])
                    .map(|h| h.rows[0][0])
                    .collect();
                let mut expected: Vec<_> = c.hom(x, y).iter().copied().filter(|&m| !c.is_identity(m)).collect();
                expected.sort_unstable();
                assert_eq!(forward, expected);
                let identity = usize::from(x == y);
                assert_eq!(mx.levels[0].len(), expected.len() + identity);
            }
        }
    }

    #[test]
    fn span_hammocks_normalize_to_the_roof() {
        let fx = fixtures::span();
        let (c, w) = (fx.category, fx.weq);
        let (b, cc) = (obj(&c, "b"), obj(&c, "c"));
        let mx = enumerate(&c, &w, b, cc, 3, 0).unwrap();
        let roof = ZigZag::parse(&c, &w, "s^-1;f").unwrap();
        assert!(!mx.levels[0].is_empty());
        for h in &mx.levels[0] {
            assert!(h.validate(&c, &w).is_empty());
            assert_eq!(normalize(&c, &h.row(0)), roof, "{}", h.display(&c));
        }
    }

    #[test]
    fn faces_after_degeneracies_are_identities() {
        let fx = fixtures::walking_arrow();
        let (c, w) = (fx.category, fx.weq);
        for x in 0..2 {
            for y in 0..2 {
                let mx = enumerate(&c, &w, x, y, 3, 1).unwrap();
                for h in mx.levels.iter().flatten() {
                    for j in 0..=h.width() {
                        let s = h.degeneracy(&c, j);
                        assert_eq!(&s.face(&c, j), h);
                        assert_eq!(&s.face(&c, j + 1), h);
                    }
                }
                assert!(mx.sset.validate().is_empty());
            }
        }
    }

    #[test]
    fn composition_reduces() {
        let fx = fixtures::ordinal(3);
        let (c, w) = (fx.category, fx.weq);
        let f = ZigZag::parse(&c, &w, "0->1").unwrap();
        let g = ZigZag::parse(&c, &w, "1->2").unwrap();
        let gf = Hammock::from_zigzag(&f).compose(&c, &Hammock::from_zigzag(&g)).unwrap();
        assert_eq!(gf.rows, vec![vec![c.morphism_index("0->2").unwrap()]]);
        let id = Hammock::identity(0, 0);
        assert_eq!(id.compose(&c, &Hammock::from_zigzag(&f)).unwrap(), Hammock::from_zigzag(&f));
        let padded = Hammock {
            src: 0,
            tgt: 0,
            backward: vec![false],
            rows: vec![vec![c.identity(0)]],
            verticals: Vec::new(),
        };
        assert_eq!(padded.compose(&c, &Hammock::from_zigzag(&f)).unwrap(), Hammock::from_zigzag(&f));
    }

    #[test]
    fn forward_then_backward_matches_normalize() {
        let fx = fixtures::span();
        let (c, w) = (fx.category, fx.weq);
        let z = ZigZag::parse(&c, &w, "s;s^-1").unwrap();
        let h = Hammock::from_zigzag(&z);
        // Reduction never cancels; the cancellation is a homotopy, so the
        // two sides agree only as fraction classes.
        let reduced = h.reduce(&c);
        assert_eq!(reduced, h);
        let f = build_fractions(&c, &w, 3).unwrap();
        assert_eq!(class_of_row(&f, &reduced, 0), f.class_of(&normalize(&c, &z)));
        assert_eq!(class_of_row(&f, &reduced, 0), Some(f.identity(z.src)));
    }

    #[test]
    fn walking_iso_homotopy() {
        // [u] and [u, u^-1, u] are joined by a width-1 hammock.
        let fx = fixtures::walking_arrow();
        let (c, w) = (fx.category, fx.weq);
        let u = c.non_identity_morphisms().next().unwrap();
        let (x, y) = (c.src(u), c.tgt(u));
        let id = |o| c.identity(o);
        let h = Hammock {
            src: x,
            tgt: y,
            backward: vec![false, true, false],
            rows: vec![vec![id(x), id(x), u], vec![u, u, u]],
            verticals: vec![vec![u, id(x)]],
        };
        assert!(h.validate(&c, &w).is_empty(), "{:?}", h.validate(&c, &w));
        assert_eq!(h.face(&c, 1).rows, vec![vec![u]]);
        assert_eq!(h.face(&c, 0).rows, vec![vec![u, u, u]]);
        let mx = enumerate(&c, &w, x, y, 3, 1).unwrap();
        let comps = mx.components();
        let short = mx.index_of(&h.face(&c, 1)).unwrap();
        let long = mx.index_of(&h.face(&c, 0)).unwrap();
        assert_eq!(comps[short], comps[long]);
    }

    #[test]
    fn pi0_matches_fractions() {
        let sq = fixtures::commutative_square().category;
        let cases = vec![
            (fixtures::walking_arrow().category, fixtures::walking_arrow().weq),
            (fixtures::span().category, fixtures::span().weq),
            (sq.clone(), WeakEquivalences::identities(&sq)),
        ];
        for (c, w) in cases {
            let f = build_fractions(&c, &w, 4).unwrap();
            let report = pi0_agreement(&f, 3, 1).unwrap();
            assert!(report.holds, "{:?}", report);
        }
    }

    #[test]
    fn reduce_is_idempotent() {
        let fx = fixtures::walking_arrow();
        let (c, w) = (fx.category, fx.weq);
        let mx = enumerate(&c, &w, 0, 0, 3, 2).unwrap();
        for h in mx.levels.iter().flatten() {
            assert_eq!(&h.reduce(&c), h);
            assert!(h.validate(&c, &w).is_empty());
        }
    }

    proptest::proptest! {
        #[test]
        fn reduce_yields_valid_reduced_hammocks(picks in proptest::collection::vec(0usize..64, 0..7)) {
            // Random composable words in the walking arrow, identities included.
            let fx = fixtures::walking_arrow();
            let (c, w) = (fx.category, fx.weq);
            let mut at = 0;
            let mut word = Vec::new();
            for p in picks {
                let choices: Vec<Letter> = (0..c.num_morphisms())
                    .flat_map(|m| [Letter::forward(m), Letter::backward(m)])
                    .filter(|l| l.ends(&c).0 == at)
                    .collect();
                let l = choices[p % choices.len()];
                at = l.ends(&c).1;
                word.push(l);
            }
            let z = ZigZag::new(&c, &w, 0, word).unwrap();
            let h = Hammock::from_zigzag(&z).reduce(&c);
            proptest::prop_assert_eq!(h.reduce(&c), h.clone());
            proptest::prop_assert!(h.validate(&c, &w).is_empty());
            let f = build_fractions(&c, &w, 3).unwrap();
            let raw = Hammock::from_zigzag(&z);
            proptest::prop_assert_eq!(class_of_row(&f, &h, 0), class_of_row(&f, &raw, 0));
        }
    }
}
