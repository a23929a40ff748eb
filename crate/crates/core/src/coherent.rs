//! Free simplicial resolutions of categories and the homotopy coherent nerve.
//!
//! An `n`-arrow of the resolution is a composable string of non-identity
//! morphisms with every letter inside exactly `n` pairs of parentheses. The
//! nesting is stored as one number per gap between letters: how many
//! parentheses close there (`n` means the letters are separate at top level).
//! Face `d_i` for `i < n` removes the parentheses inside exactly `i` others;
//! `d_n` composes the innermost groups. Degeneracy `s_i` doubles the
//! parentheses inside exactly `i` others, `s_n` wraps each letter.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::lifting::search_maps;
use crate::scat::{LevelwisePresentation, SCat, SimplicialFunctor};
use crate::sset::{FaceIndex, SSet, SimplicialMap};

pub const DEFAULT_NERVE_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParenString {
    pub src: usize,
    pub tgt: usize,
    pub word: Vec<usize>,
    /// Parentheses closed between consecutive letters.
    pub gaps: Vec<usize>,
}

impl ParenString {
    pub fn identity(x: usize) -> ParenString {
        ParenString {
            src: x,
            tgt: x,
            word: Vec::new(),
            gaps: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// No top-level split at level `n`.
    pub fn is_atomic(&self, n: usize) -> bool {
        !self.word.is_empty() && self.gaps.iter().all(|&g| g < n)
    }

    /// Splits at the first top-level gap into (first, rest).
    pub fn split(&self, c: &FinCategory, n: usize) -> Option<(ParenString, ParenString)> {
        let p = self.gaps.iter().position(|&g| g == n)?;
        let mid = c.tgt(self.word[p]);
        Some((
            ParenString {
                src: self.src,
                tgt: mid,
                word: self.word[..=p].to_vec(),
                gaps: self.gaps[..p].to_vec(),
            },
            ParenString {
                src: mid,
                tgt: self.tgt,
                word: self.word[p + 1..].to_vec(),
                gaps: self.gaps[p + 1..].to_vec(),
            },
        ))
    }

    /// Composite at level `n`: `self` first.
    pub fn then(&self, other: &ParenString, n: usize) -> ParenString {
        assert_eq!(self.tgt, other.src, "strings not composable");
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let mut gaps = self.gaps.clone();
        gaps.push(n);
        gaps.extend_from_slice(&other.gaps);
        ParenString {
            src: self.src,
            tgt: other.tgt,
            word: [self.word.clone(), other.word.clone()].concat(),
            gaps,
        }
    }

    /// Face `d_i` from level `n` to level `n - 1`.
    pub fn face(&self, c: &FinCategory, n: usize, i: usize) -> ParenString {
        assert!(n >= 1 && i <= n, "face index out of range");
        if i < n {
            let gaps = self.gaps.iter().map(|&g| if g >= n - i { g - 1 } else { g }).collect();
            return ParenString { gaps, ..self.clone() };
        }
        if self.is_identity() {
            return self.clone();
        }
        let mut word = vec![self.word[0]];
        let mut gaps = Vec::new();
        for (k, &g) in self.gaps.iter().enumerate() {
            let m = self.word[k + 1];
            if g == 0 {
                let last = word.last_mut().unwrap();
                *last = c.compose(m, *last).expect("composable string");
                assert!(!c.is_identity(*last), "string composes to an identity");
            } else {
                word.push(m);
                gaps.push(g - 1);
            }
        }
        ParenString { word, gaps, ..self.clone() }
    }

    /// Degeneracy `s_j` from level `n` to level `n + 1`.
    pub fn degeneracy(&self, n: usize, j: usize) -> ParenString {
        assert!(j <= n, "degeneracy index out of range");
        let gaps = self.gaps.iter().map(|&g| if g >= n - j { g + 1 } else { g }).collect();
        ParenString { gaps, ..self.clone() }
    }

    /// Image under a functor given on objects and morphisms; letters sent to
    /// identities disappear, and their neighbouring gaps merge.
    pub fn map(&self, objects: &[usize], morphisms: impl Fn(usize) -> usize, target: &FinCategory) -> ParenString {
        let mut word = Vec::new();
        let mut gaps: Vec<usize> = Vec::new();
        let mut pending: Option<usize> = None;
        for (k, &m) in self.word.iter().enumerate() {
            if k > 0 {
                let g = self.gaps[k - 1];
                pending = Some(pending.map_or(g, |p| p.max(g)));
            }
            let image = morphisms(m);
            if target.is_identity(image) {
                continue;
            }
            if !word.is_empty() {
                gaps.push(pending.expect("gap before a later letter"));
            }
            pending = None;
            word.push(image);
        }
        ParenString {
            src: objects[self.src],
            tgt: objects[self.tgt],
            word,
            gaps,
        }
    }

    /// The composite of the whole string.
    pub fn collapse(&self, c: &FinCategory) -> usize {
        self.word
            .iter()
            .fold(c.identity(self.src), |acc, &m| c.compose(m, acc).expect("composable string"))
    }

    pub fn display<'a>(&'a self, c: &'a FinCategory, n: usize) -> impl fmt::Display + 'a {
        DisplayParen { p: self, c, n }
    }
}

struct DisplayParen<'a> {
    p: &'a ParenString,
    c: &'a FinCategory,
    n: usize,
}

impl fmt::Display for DisplayParen<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, c, n) = (self.p, self.c, self.n);
        if p.is_identity() {
            return write!(f, "id_{}", c.object_id(p.src));
        }
        let open = |f: &mut fmt::Formatter<'_>, k: usize| (0..k).try_for_each(|_| write!(f, "("));
        let close = |f: &mut fmt::Formatter<'_>, k: usize| (0..k).try_for_each(|_| write!(f, ")"));
        open(f, n)?;
        for (k, &m) in p.word.iter().enumerate() {
            if k > 0 {
                let g = p.gaps[k - 1];
                close(f, g)?;
                write!(f, "{}", if g == 0 { ";" } else { " " })?;
                open(f, g)?;
            }
            write!(f, "{}", c.morphism_id(m))?;
        }
        close(f, n)
    }
}

/// Composable strings of non-identity morphisms from `x` to `y`, shortest
/// first. Fails when strings of every length exist.
fn strings(c: &FinCategory, x: usize, y: usize) -> Result<Vec<Vec<usize>>> {
    let cap = c.num_objects();
    let mut out = Vec::new();
    let mut frontier: Vec<(usize, Vec<usize>)> = vec![(x, Vec::new())];
    for len in 1..=cap + 1 {
        let mut next = Vec::new();
        for (at, w) in &frontier {
            for &m in c.out_of(*at) {
                if c.is_identity(m) {
                    continue;
                }
                let mut v = w.clone();
                v.push(m);
                next.push((c.tgt(m), v));
            }
        }
        if next.is_empty() {
            break;
        }
        if len > cap {
            return Err(Error::budget(
                "string length",
                cap,
                "composable non-identity strings of every length exist",
            ));
        }
        next.sort();
        out.extend(next.iter().filter(|(t, _)| *t == y).map(|(_, w)| w.clone()));
        frontier = next;
    }
    Ok(out)
}

fn gap_vectors(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=n).map(move |g| {
                    let mut w = v.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    out
}

/// The free resolution truncated at a dimension, with every arrow kept as
/// a parenthesized string.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub category: FinCategory,
    pub scat: SCat,
    /// `arrows[x * |ob| + y][n]` lists the `n`-arrows in simplex order.
    pub arrows: Vec<Vec<Vec<ParenString>>>,
    index: Vec<Vec<HashMap<ParenString, usize>>>,
}

impl FreeResolution {
    pub fn dimension(&self) -> usize {
        self.scat.truncation()
    }

    pub fn arrow(&self, x: usize, y: usize, n: usize, s: usize) -> &ParenString {
        &self.arrows[x * self.category.num_objects() + y][n][s]
    }

    pub fn index_of(&self, n: usize, p: &ParenString) -> Option<usize> {
        self.index[p.src * self.category.num_objects() + p.tgt][n].get(p).copied()
    }

    /// Atomic marker for every morphism of the levelwise presentation.
    pub fn atomic_markers(&self) -> Vec<Vec<bool>> {
        (0..=self.dimension())
            .map(|n| self.arrows.iter().flat_map(|h| h[n].iter().map(move |p| p.is_atomic(n))).collect())
            .collect()
    }
}

pub fn free_resolution(a: &FinCategory, d: usize) -> Result<FreeResolution> {
    if !a.is_valid() {
        return Err(Error::Input("category is not valid".into()));
    }
    let no = a.num_objects();
    let mut arrows = Vec::with_capacity(no * no);
    let mut homs = Vec::with_capacity(no * no);
    for x in 0..no {
        for y in 0..no {
            let words = strings(a, x, y)?;
            let levels: Vec<Vec<ParenString>> = (0..=d)
                .map(|n| {
                    let mut level = Vec::new();
                    if x == y {
                        level.push(ParenString::identity(x));
                    }
                    for w in &words {
                        for gaps in gap_vectors(w.len() - 1, n) {
                            level.push(ParenString {
                                src: x,
                                tgt: y,
                                word: w.clone(),
                                gaps,
                            });
                        }
                    }
                    level
                })
                .collect();
            let hom = SSet::from_keyed(
                d,
                levels.clone(),
                |n, p, i| p.face(a, n, i),
                |n, p, j| p.degeneracy(n, j),
                |n, p| p.display(a, n).to_string(),
            )?;
            homs.push(hom);
            arrows.push(levels);
        }
    }
    let index: Vec<Vec<HashMap<ParenString, usize>>> = arrows
        .iter()
        .map(|h: &Vec<Vec<ParenString>>| {
            h.iter()
                .map(|l| l.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect())
                .collect()
        })
        .collect();
    let identities = (0..no).map(|_| 0).collect();
    let scat = SCat::new(a.objects().to_vec(), homs, identities, |x, y, z, n, g, f| {
        let composite = arrows[x * no + y][n][f].then(&arrows[y * no + z][n][g], n);
        index[x * no + z][n][&composite]
    })?;
    Ok(FreeResolution {
        category: a.clone(),
        scat,
        arrows,
        index,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputadReport {
    pub holds: bool,
    /// Atomic flags per level, in the presentation's morphism order.
    pub atomic: Vec<Vec<bool>>,
    pub witness: Option<String>,
}

/// Checks that every level is free on its atomic arrows (unique
/// factorization, found by exhaustive search) and that degeneracies keep
/// atomic arrows atomic.
pub fn is_simplicial_computad(l: &LevelwisePresentation) -> ComputadReport {
    let mut atomic = Vec::new();
    let mut witness = None;
    for (n, c) in l.levels.iter().enumerate() {
        let flags = atomics(c);
        if witness.is_none() {
            if let Some(w) = free_on(c, &flags) {
                witness = Some(format!("level {n}: {w}"));
            }
        }
        atomic.push(flags);
    }
    if witness.is_none() {
        'outer: for (n, ops) in l.degeneracies.iter().enumerate() {
            for (j, s) in ops.iter().enumerate() {
                for m in 0..l.levels[n].num_morphisms() {
                    if atomic[n][m] && !atomic[n + 1][s.morphism_map[m]] {
                        witness = Some(format!(
                            "degeneracy s{j} sends atomic {} to non-atomic {}",
                            l.levels[n].morphism_id(m),
                            l.levels[n + 1].morphism_id(s.morphism_map[m])
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    ComputadReport {
        holds: witness.is_none(),
        atomic,
        witness,
    }
}

fn atomics(c: &FinCategory) -> Vec<bool> {
    let mut flags: Vec<bool> = (0..c.num_morphisms()).map(|m| !c.is_identity(m)).collect();
    for f in c.non_identity_morphisms() {
        for &g in c.out_of(c.tgt(f)) {
            if !c.is_identity(g) {
                if let Some(gf) = c.compose(g, f) {
                    flags[gf] = false;
                }
            }
        }
    }
    flags
}

/// Some non-identity morphism without exactly one atomic factorization.
fn free_on(c: &FinCategory, atomic: &[bool]) -> Option<String> {
    let total = c.num_morphisms();
    let mut count = vec![0usize; total];
    let mut frontier: Vec<(usize, Vec<usize>)> =
        (0..total).filter(|&m| atomic[m]).map(|m| (m, vec![m])).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (m, path) in frontier {
            count[m] += 1;
            if count[m] > 1 || path.len() > total {
                let names: Vec<&str> = path.iter().map(|&a| c.morphism_id(a)).collect();
                return Some(format!("{} has a second factorization {}", c.morphism_id(m), names.join(";")));
            }
            for &g in c.out_of(c.tgt(m)) {
                if atomic[g] {
                    let mut p = path.clone();
                    p.push(g);
                    next.push((c.compose(g, m).expect("composable"), p));
                }
            }
        }
        frontier = next;
    }
    (0..total)
        .find(|&m| !c.is_identity(m) && count[m] == 0)
        .map(|m| format!("{} is not a composite of atomic arrows", c.morphism_id(m)))
}

#[derive(Clone, Debug)]
pub struct Augmentation {
    pub functor: SimplicialFunctor,
    pub target: SCat,
    /// `(x, y, components, |A(x, y)|, bijective)`.
    pub pairs: Vec<(String, String, usize, usize, bool)>,
    pub bijective: bool,
}

/// The functor composing every string, and whether it is bijective on
/// components of each mapping complex.
pub fn augmentation(a: &FinCategory, d: usize) -> Result<Augmentation> {
    let r = free_resolution(a, d)?;
    let target = SCat::from_category(a, d);
    let no = a.num_objects();
    let mut hom_maps = Vec::with_capacity(no * no);
    let mut pairs = Vec::new();
    for x in 0..no {
        for y in 0..no {
            let hom = a.hom(x, y);
            let levels: Vec<Vec<usize>> = (0..=d)
                .map(|n| {
                    r.arrows[x * no + y][n]
                        .iter()
                        .map(|p| hom.iter().position(|&m| m == p.collapse(a)).unwrap())
                        .collect()
                })
                .collect();
            let comps = r.scat.hom(x, y).pi0();
            let mut image: HashMap<usize, usize> = HashMap::new();
            let mut well_defined = true;
            for (v, &k) in comps.iter().enumerate() {
                if *image.entry(k).or_insert(levels[0][v]) != levels[0][v] {
                    well_defined = false;
                }
            }
            let mut hit: Vec<usize> = image.values().copied().collect();
            hit.sort_unstable();
            hit.dedup();
            let bij = well_defined && hit.len() == image.len() && hit.len() == hom.len();
            pairs.push((a.object_id(x).to_string(), a.object_id(y).to_string(), image.len(), hom.len(), bij));
            hom_maps.push(SimplicialMap { levels });
        }
    }
    let functor = SimplicialFunctor {
        object_map: (0..no).collect(),
        hom_maps,
    };
    let bijective = pairs.iter().all(|p| p.4);
    Ok(Augmentation {
        functor,
        target,
        pairs,
        bijective,
    })
}

/// An `n`-simplex of the coherent nerve: a simplicial functor from the
/// coherent `n`-simplex, stored as object images and one map per hom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoherentSimplex {
    pub objects: Vec<usize>,
    /// `maps[a * (n + 1) + b].levels[m][s]`.
    pub maps: Vec<SimplicialMap>,
}

#[derive(Clone, Debug)]
pub struct CoherentNerve {
    pub sset: SSet,
    pub simplices: Vec<Vec<CoherentSimplex>>,
}

pub fn coherent_nerve(s: &SCat, n_max: usize) -> Result<CoherentNerve> {
    coherent_nerve_with_limit(s, n_max, DEFAULT_NERVE_LIMIT)
}

/// Enumerates simplicial functors from each coherent `n`-simplex into `s`,
/// choosing atomic arrows and forcing composites, then wires faces and
/// degeneracies by precomposition.
pub fn coherent_nerve_with_limit(s: &SCat, n_max: usize, limit: usize) -> Result<CoherentNerve> {
    let dc = n_max.saturating_sub(1);
    if s.truncation() < dc {
        return Err(Error::Truncation(format!(
            "coherent {n_max}-simplices need mapping complexes truncated at {dc}, got {}",
            s.truncation()
        )));
    }
    let no = s.num_objects();
    let indexes: Vec<FaceIndex> = (0..no * no).map(|k| FaceIndex::new(s.hom(k / no, k % no))).collect();
    let simplices_of: Vec<FreeResolution> = (0..=n_max)
        .map(|n| free_resolution(&FinCategory::ordinal(n), dc))
        .collect::<Result<_>>()?;
    let mut levels: Vec<Vec<CoherentSimplex>> = Vec::new();
    let mut total = 0;
    for (n, r) in simplices_of.iter().enumerate() {
        let mut level = Vec::new();
        let mut objects = vec![0usize; n + 1];
        loop {
            let mut search = NerveSearch {
                s,
                r,
                indexes: &indexes,
                objects: &objects,
                maps: vec![None; (n + 1) * (n + 1)],
                out: &mut level,
                limit: limit.saturating_sub(total),
            };
            search.fill_trivial();
            search.pair(&pairs_by_length(n), 0)?;
            // next object assignment
            let mut k = 0;
            while k <= n && objects[k] + 1 == no {
                objects[k] = 0;
                k += 1;
            }
            if k > n || no == 0 {
                break;
            }
            objects[k] += 1;
        }
        total += level.len();
        levels.push(level);
    }
    let ordinals: Vec<FinCategory> = (0..=n_max).map(FinCategory::ordinal).collect();
    let reindex = |n: usize, x: &CoherentSimplex, theta: &[usize]| -> CoherentSimplex {
        // precompose with the functor induced by theta: [m] → [n]
        let m = theta.len() - 1;
        let (src, tgt) = (&simplices_of[m], &simplices_of[n]);
        let (om, on) = (&ordinals[m], &ordinals[n]);
        let morph = |f: usize| on.hom(theta[om.src(f)], theta[om.tgt(f)])[0];
        let mut maps = Vec::with_capacity((m + 1) * (m + 1));
        for a in 0..=m {
            for b in 0..=m {
                let levels = (0..=dc)
                    .map(|l| {
                        src.arrows[a * (m + 1) + b][l]
                            .iter()
                            .map(|p| {
                                let q = p.map(theta, morph, on);
                                let idx = tgt.index_of(l, &q).expect("image string exists");
                                x.maps[theta[a] * (n + 1) + theta[b]].at(l, idx)
                            })
                            .collect()
                    })
                    .collect();
                maps.push(SimplicialMap { levels });
            }
        }
        CoherentSimplex {
            objects: theta.iter().map(|&t| x.objects[t]).collect(),
            maps,
        }
    };
    let names: Vec<HashMap<CoherentSimplex, String>> = levels
        .iter()
        .enumerate()
        .map(|(n, l)| {
            l.iter()
                .enumerate()
                .map(|(k, x)| {
                    let name = match n {
                        0 => s.objects()[x.objects[0]].clone(),
                        1 => s.hom(x.objects[0], x.objects[1]).name(0, x.maps[1].at(0, 0)).to_string(),
                        _ => format!("{}#{k}", x.objects.iter().map(|&o| s.objects()[o].as_str()).collect::<Vec<_>>().join(",")),
                    };
                    (x.clone(), name)
                })
                .collect()
        })
        .collect();
    let sset = SSet::from_keyed(
        n_max,
        levels.clone(),
        |n, x, i| {
            let theta: Vec<usize> = (0..n).map(|v| if v < i { v } else { v + 1 }).collect();
            reindex(n, x, &theta)
        },
        |n, x, j| {
            let theta: Vec<usize> = (0..n + 2).map(|v| if v <= j { v } else { v - 1 }).collect();
            reindex(n, x, &theta)
        },
        |n, x| names[n][x].clone(),
    )?;
    Ok(CoherentNerve { sset, simplices: levels })
}

fn pairs_by_length(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for len in 1..=n {
        for a in 0..=n - len {
            out.push((a, a + len));
        }
    }
    out
}

struct NerveSearch<'a> {
    s: &'a SCat,
    r: &'a FreeResolution,
    indexes: &'a [FaceIndex],
    objects: &'a [usize],
    maps: Vec<Option<SimplicialMap>>,
    out: &'a mut Vec<CoherentSimplex>,
    limit: usize,
}

impl NerveSearch<'_> {
    fn size(&self) -> usize {
        self.objects.len()
    }

    /// Identity and empty homs have only one possible map.
    fn fill_trivial(&mut self) {
        let k = self.size();
        let dc = self.r.dimension();
        for a in 0..k {
            for b in 0..k {
                if a > b {
                    self.maps[a * k + b] = Some(SimplicialMap {
                        levels: vec![Vec::new(); dc + 1],
                    });
                } else if a == b {
                    let o = self.objects[a];
                    self.maps[a * k + b] = Some(SimplicialMap {
                        levels: (0..=dc).map(|l| vec![self.s.identity_at(o, l)]).collect(),
                    });
                }
            }
        }
    }

    fn pair(&mut self, pairs: &[(usize, usize)], at: usize) -> Result<()> {
        let k = self.size();
        if at == pairs.len() {
            if self.out.len() >= self.limit {
                return Err(Error::budget(
                    "coherent nerve simplices",
                    self.limit,
                    format!("{} simplices of dimension {}", self.out.len(), k - 1),
                ));
            }
            self.out.push(CoherentSimplex {
                objects: self.objects.to_vec(),
                maps: self.maps.iter().map(|m| m.clone().expect("all homs assigned")).collect(),
            });
            return Ok(());
        }
        let (a, b) = pairs[at];
        let (fa, fb) = (self.objects[a], self.objects[b]);
        let source = self.r.scat.hom(a, b);
        let no = self.s.num_objects();
        let forced: Vec<Vec<Option<usize>>> = (0..=source.truncation())
            .map(|l| {
                (0..source.len(l))
                    .map(|x| {
                        let p = self.r.arrow(a, b, l, x);
                        let (first, rest) = p.split(&self.r.category, l)?;
                        let mid = first.tgt;
                        let f = self.maps[a * k + mid].as_ref()?.at(l, self.r.index_of(l, &first)?);
                        let g = self.maps[mid * k + b].as_ref()?.at(l, self.r.index_of(l, &rest)?);
                        Some(self.s.compose(fa, self.objects[mid], fb, l, g, f))
                    })
                    .collect()
            })
            .collect();
        let mut found = Vec::new();
        search_maps(source, self.s.hom(fa, fb), &self.indexes[fa * no + fb], &forced, &|_, _, _| true, &mut |m| {
            found.push(m.clone());
            true
        })?;
        for m in found {
            self.maps[a * k + b] = Some(m);
            self.pair(pairs, at + 1)?;
        }
        self.maps[a * k + b] = None;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lifting::is_quasi_category;
    use crate::quasicat::homotopy_category;
    fn nerve(c: &FinCategory, d: usize) -> SSet {
        SSet::nerve(c, d)
    }

    fn ord(n: usize) -> FinCategory {
        FinCategory::ordinal(n)
    }

    #[test]
    fn arrow_resolution_is_a_point() {
        let r = free_resolution(&ord(1), 3).unwrap();
        assert_eq!(r.scat.hom(0, 1).level_sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn two_simplex_hom_is_an_interval() {
        let a = ord(2);
        let r = free_resolution(&a, 1).unwrap();
        let h = r.scat.hom(0, 2);
        assert_eq!(h.len(0), 2);
        let nondeg = h.nondegenerate(1);
        assert_eq!(nondeg.len(), 1);
        let e = nondeg[0];
        assert_eq!(h.name(1, e), "(0->1;1->2)");
        let (d0, d1) = (h.face(1, e, 0), h.face(1, e, 1));
        assert_eq!(h.name(0, d0), "0->1;1->2");
        assert_eq!(h.name(0, d1), "0->2");
    }

    #[test]
    fn three_simplex_vertex_count() {
        let r = free_resolution(&ord(3), 2).unwrap();
        assert_eq!(r.scat.hom(0, 3).len(0), 4);
        // Map(0, 3) is a square: four vertices, five edges, two triangles.
        let h = r.scat.hom(0, 3);
        assert_eq!((h.nondegenerate(1).len(), h.nondegenerate(2).len()), (5, 2));
    }

    #[test]
    fn resolutions_satisfy_simplicial_identities() {
        for fx in fixtures::all_fixtures() {
            let Ok(r) = free_resolution(&fx.category, 3) else {
                continue;
            };
            let no = fx.category.num_objects();
            for k in 0..no * no {
                assert!(r.scat.hom(k / no, k % no).validate().is_empty(), "{}", fx.name);
            }
            assert!(is_simplicial_computad(&r.scat.to_levelwise()).holds, "{}", fx.name);
        }
    }

    #[test]
    fn cyclic_categories_are_refused() {
        let fx = fixtures::free_iso();
        assert!(matches!(free_resolution(&fx.category, 1), Err(Error::Budget { .. })));
    }

    #[test]
    fn discrete_non_free_is_not_a_computad() {
        // [2] is free on 0->1, 1->2: the long arrow factors uniquely.
        let s = SCat::from_category(&ord(2), 1);
        assert!(is_simplicial_computad(&s.to_levelwise()).holds);
        let sq = fixtures::commutative_square().category;
        let report = is_simplicial_computad(&SCat::from_category(&sq, 1).to_levelwise());
        assert!(!report.holds);
        assert!(report.witness.unwrap().contains("a->d"));
    }

    #[test]
    fn degeneracy_onto_a_composite_is_caught() {
        // Both levels are free, but s0 sends the atomic a->c to a composite.
        let level0 = FinCategory::poset(&["a", "b", "c"], &[("a", "c")]).unwrap();
        let level1 = FinCategory::poset(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let s0 = crate::fincat::Functor {
            object_map: vec![0, 1, 2],
            morphism_map: (0..level0.num_morphisms())
                .map(|m| level1.morphism_index(level0.morphism_id(m)).unwrap())
                .collect(),
        };
        let report = is_simplicial_computad(&LevelwisePresentation {
            levels: vec![level0, level1],
            faces: vec![Vec::new()],
            degeneracies: vec![vec![s0]],
        });
        assert!(!report.holds);
        assert!(report.witness.unwrap().contains("a->c"));
    }

    #[test]
    fn augmentation_is_bijective_on_components() {
        for a in [ord(1), ord(2), fixtures::commutative_square().category] {
            let aug = augmentation(&a, 2).unwrap();
            assert!(aug.bijective, "{:?}", aug.pairs);
        }
        let aug = augmentation(&ord(2), 1).unwrap();
        let p02 = aug.pairs.iter().find(|p| p.0 == "0" && p.1 == "2").unwrap();
        assert_eq!((p02.2, p02.3), (1, 1));
    }

    #[test]
    fn nerve_of_discrete_is_ordinary_nerve() {
        let c = fixtures::commutative_square().category;
        let s = SCat::from_category(&c, 2);
        let cn = coherent_nerve(&s, 3).unwrap();
        let n = nerve(&c, 3);
        assert_eq!(cn.sset.level_sizes(), n.level_sizes());
        assert!(cn.sset.find_isomorphism(&n).is_some());
        assert!(cn.sset.validate().is_empty());
    }

    #[test]
    fn low_levels_are_objects_and_vertices() {
        let x = nerve(&fixtures::free_iso().category, 2);
        let s = SCat::suspension(&x);
        let cn = coherent_nerve(&s, 2).unwrap();
        assert_eq!(cn.sset.len(0), 2);
        let homs: usize = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).map(|(a, b)| s.hom(a, b).len(0)).sum();
        assert_eq!(cn.sset.len(1), homs);
    }

    #[test]
    fn kan_enriched_nerve_is_a_quasi_category() {
        let x = nerve(&fixtures::free_iso().category, 3);
        let s = SCat::suspension(&x);
        assert!(s.is_kan_enriched(3).unwrap().is_none());
        let cn = coherent_nerve(&s, 3).unwrap();
        assert!(is_quasi_category(&cn.sset, 3).unwrap().holds);
        let ho = homotopy_category(&cn.sset).unwrap().category;
        let expected = s.homotopy_category().unwrap();
        assert_eq!(ho.num_morphisms(), expected.num_morphisms());
        let iso = crate::fincat::enumerate_functors(&ho, &expected, 10_000)
            .unwrap()
            .into_iter()
            .any(|f| {
                let mut om = f.object_map.clone();
                let mut mm = f.morphism_map.clone();
                om.sort_unstable();
                om.dedup();
                mm.sort_unstable();
                mm.dedup();
                om.len() == ho.num_objects() && mm.len() == ho.num_morphisms()
            });
        assert!(iso);
    }
}
