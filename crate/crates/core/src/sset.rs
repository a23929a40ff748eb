//! Truncated finite simplicial sets.
//!
//! Every simplex up to the truncation dimension is stored, degenerate ones
//! included, together with full face and degeneracy tables. Constructions
//! state the truncation of their output.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::fincat::FinCategory;

/// All monotone maps `[m] → [n]` as value lists, in lexicographic order.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, min: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in min..=n {
            cur.push(v);
            go(len, v, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m + 1, 0, n, &mut Vec::new(), &mut out);
    out
}

fn vertex_word(vals: &[usize]) -> String {
    if vals.iter().all(|&v| v < 10) {
        vals.iter().map(|v| v.to_string()).collect()
    } else {
        vals.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSet {
    truncation: usize,
    names: Vec<Vec<String>>,
    /// `faces[n][x][i] = d_i x`, empty at level 0.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][x][j] = s_j x`, empty at the top level.
    degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SSet {
    /// Raw constructor; run [`SSet::validate`] on untrusted data.
    pub fn from_tables(
        truncation: usize,
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<SSet> {
        let levels = truncation + 1;
        if names.len() != levels || faces.len() != levels || degeneracies.len() != levels {
            return Err(Error::Input("level count does not match truncation".into()));
        }
        for n in 0..levels {
            let count = names[n].len();
            if faces[n].len() != count || degeneracies[n].len() != count {
                return Err(Error::Input(format!("table size mismatch at level {n}")));
            }
            for x in 0..count {
                let fl = if n == 0 { 0 } else { n + 1 };
                let dl = if n == truncation { 0 } else { n + 1 };
                if faces[n][x].len() != fl || degeneracies[n][x].len() != dl {
                    return Err(Error::Input(format!("operator arity mismatch at level {n}")));
                }
                if faces[n][x].iter().any(|&y| n == 0 || y >= names[n - 1].len()) {
                    return Err(Error::Input(format!("face out of range at level {n}")));
                }
                if degeneracies[n][x].iter().any(|&y| y >= names[n + 1].len()) {
                    return Err(Error::Input(format!("degeneracy out of range at level {n}")));
                }
            }
        }
        Ok(SSet {
            truncation,
            names,
            faces,
            degeneracies,
        })
    }

    /// Builds a simplicial set whose simplices are described by keys.
    ///
    /// `levels[n]` lists the keys of the `n`-simplices; `face(n, k, i)` and
    /// `degen(n, k, j)` must return keys present at the adjacent level.
    pub fn from_keyed<K: Clone + Eq + Hash + fmt::Debug>(
        truncation: usize,
        levels: Vec<Vec<K>>,
        face: impl Fn(usize, &K, usize) -> K,
        degen: impl Fn(usize, &K, usize) -> K,
        name: impl Fn(usize, &K) -> String,
    ) -> Result<SSet> {
        if levels.len() != truncation + 1 {
            return Err(Error::Input("level count does not match truncation".into()));
        }
        let index: Vec<HashMap<&K, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, k)| (k, i)).collect())
            .collect();
        let mut faces = Vec::with_capacity(truncation + 1);
        let mut degeneracies = Vec::with_capacity(truncation + 1);
        let mut names = Vec::with_capacity(truncation + 1);
        for (n, keys) in levels.iter().enumerate() {
            let mut fl = Vec::with_capacity(keys.len());
            let mut dl = Vec::with_capacity(keys.len());
            for k in keys {
                let mut fs = Vec::new();
                if n > 0 {
                    for i in 0..=n {
                        let fk = face(n, k, i);
                        let j = *index[n - 1].get(&fk).ok_or_else(|| {
                            Error::Input(format!("face d{i} of {k:?} missing at level {}", n - 1))
                        })?;
                        fs.push(j);
                    }
                }
                let mut ds = Vec::new();
                if n < truncation {
                    for j in 0..=n {
                        let dk = degen(n, k, j);
                        let t = *index[n + 1].get(&dk).ok_or_else(|| {
                            Error::Input(format!(
                                "degeneracy s{j} of {k:?} missing at level {}",
                                n + 1
                            ))
                        })?;
                        ds.push(t);
                    }
                }
                fl.push(fs);
                dl.push(ds);
            }
            faces.push(fl);
            degeneracies.push(dl);
            names.push(keys.iter().map(|k| name(n, k)).collect());
        }
        Ok(SSet {
            truncation,
            names,
            faces,
            degeneracies,
        })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Equality of face and degeneracy tables, ignoring simplex names.
    pub fn same_tables(&self, other: &SSet) -> bool {
        self.truncation == other.truncation
            && self.faces == other.faces
            && self.degeneracies == other.degeneracies
    }

    pub fn len(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, |l| l.len())
    }

    pub fn is_empty(&self) -> bool {
        self.names[0].is_empty()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.names.iter().map(|l| l.len()).collect()
    }

    pub fn name(&self, n: usize, x: usize) -> &str {
        &self.names[n][x]
    }

    pub fn names(&self, n: usize) -> &[String] {
        &self.names[n]
    }

    pub fn find(&self, n: usize, name: &str) -> Option<usize> {
        self.names.get(n)?.iter().position(|s| s == name)
    }

    pub fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x][i]
    }

    pub fn faces_of(&self, n: usize, x: usize) -> &[usize] {
        &self.faces[n][x]
    }

    pub fn degen(&self, n: usize, x: usize, j: usize) -> usize {
        self.degeneracies[n][x][j]
    }

    /// The degenerate vertex path `s_0 ⋯ s_0 v` at level `n`.
    pub fn constant(&self, v: usize, n: usize) -> usize {
        (0..n).fold(v, |x, k| self.degen(k, x, 0))
    }

    /// Source and target vertex of an edge.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.face(1, e, 1), self.face(1, e, 0))
    }

    /// The `i`-th vertex of an `n`-simplex.
    pub fn vertex(&self, n: usize, x: usize, i: usize) -> usize {
        let mut cur = x;
        let mut level = n;
        // drop every other vertex: faces from the top down keep vertex i
        let mut keep = i;
        while level > 0 {
            if keep < level {
                cur = self.face(level, cur, level);
            } else {
                cur = self.face(level, cur, 0);
                keep -= 1;
            }
            level -= 1;
        }
        cur
    }

    /// `X(θ)(x)` for a monotone `θ: [m] → [n]` and `x ∈ X_n`.
    pub fn act(&self, theta: &[usize], n: usize, x: usize) -> usize {
        let m = theta.len() - 1;
        // epi-mono factorization: θ = η ∘ ε
        let mut image: Vec<usize> = theta.to_vec();
        image.dedup();
        let eps: Vec<usize> = theta
            .iter()
            .map(|v| image.iter().position(|w| w == v).unwrap())
            .collect();
        let y = self.act_mono(&image, n, x);
        self.act_epi(&eps, image.len() - 1, y, m)
    }

    fn act_mono(&self, eta: &[usize], n: usize, x: usize) -> usize {
        let k = eta.len() - 1;
        if k == n {
            return x;
        }
        // largest missing value j: η = δ^j ∘ η'
        let j = (0..=n).rev().find(|v| !eta.contains(v)).unwrap();
        let y = self.face(n, x, j);
        let eta2: Vec<usize> = eta.iter().map(|&v| if v > j { v - 1 } else { v }).collect();
        self.act_mono(&eta2, n - 1, y)
    }

    fn act_epi(&self, eps: &[usize], k: usize, y: usize, m: usize) -> usize {
        if m == k {
            return y;
        }
        let i = (0..m).find(|&i| eps[i] == eps[i + 1]).unwrap();
        let mut eps2 = eps.to_vec();
        eps2.remove(i + 1);
        let z = self.act_epi(&eps2, k, y, m - 1);
        self.degen(m - 1, z, i)
    }

    /// Every violated simplicial identity, described.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let t = self.truncation;
        for n in 0..=t {
            for x in 0..self.len(n) {
                let nm = || self.name(n, x).to_string();
                if n >= 2 {
                    for j in 0..=n {
                        for i in 0..j {
                            let l = self.face(n - 1, self.face(n, x, j), i);
                            let r = self.face(n - 1, self.face(n, x, i), j - 1);
                            if l != r {
                                out.push(format!("d{i}d{j} != d{}d{i} on {}", j - 1, nm()));
                            }
                        }
                    }
                }
                if n < t {
                    for j in 0..=n {
                        let sx = self.degen(n, x, j);
                        for i in 0..=n + 1 {
                            let l = self.face(n + 1, sx, i);
                            let expected = if i == j || i == j + 1 {
                                Some(x)
                            } else if n == 0 {
                                None
                            } else if i < j {
                                Some(self.degen(n - 1, self.face(n, x, i), j - 1))
                            } else {
                                Some(self.degen(n - 1, self.face(n, x, i - 1), j))
                            };
                            if let Some(e) = expected {
                                if l != e {
                                    out.push(format!("d{i}s{j} identity fails on {}", nm()));
                                }
                            }
                        }
                        if n + 1 < t {
                            for i in 0..=j {
                                let l = self.degen(n + 1, self.degen(n, x, j), i);
                                let r = self.degen(n + 1, self.degen(n, x, i), j + 1);
                                if l != r {
                                    out.push(format!("s{i}s{j} != s{}s{i} on {}", j + 1, nm()));
                                }
                            }
                        }
                    }
                }
            }
            if n < t {
                for j in 0..=n {
                    let mut seen = BTreeSet::new();
                    for x in 0..self.len(n) {
                        if !seen.insert(self.degen(n, x, j)) {
                            out.push(format!("s{j} not injective at level {n}"));
                            break;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn degenerate_flags(&self, n: usize) -> Vec<bool> {
        let mut flags = vec![false; self.len(n)];
        if n > 0 {
            for y in 0..self.len(n - 1) {
                for j in 0..n {
                    flags[self.degen(n - 1, y, j)] = true;
                }
            }
        }
        flags
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..self.len(n - 1)).any(|y| (0..n).any(|j| self.degen(n - 1, y, j) == x))
    }

    /// Non-degenerate `n`-simplices, in id order.
    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        self.degenerate_flags(n)
            .iter()
            .enumerate()
            .filter(|(_, &d)| !d)
            .map(|(i, _)| i)
            .collect()
    }

    /// `(y, j)` with `s_j y = x`, the smallest `j` first.
    pub fn degeneracy_source(&self, n: usize, x: usize) -> Option<(usize, usize)> {
        if n == 0 {
            return None;
        }
        for j in 0..n {
            for y in 0..self.len(n - 1) {
                if self.degen(n - 1, y, j) == x {
                    return Some((y, j));
                }
            }
        }
        None
    }

    /// Per-level tables `x ↦ Some((y, j))` with `s_j y = x`.
    pub fn degeneracy_sources(&self) -> Vec<Vec<Option<(usize, usize)>>> {
        (0..=self.truncation)
            .map(|n| {
                let mut out = vec![None; self.len(n)];
                if n > 0 {
                    for j in (0..n).rev() {
                        for y in 0..self.len(n - 1) {
                            out[self.degen(n - 1, y, j)] = Some((y, j));
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// Lower the truncation.
    pub fn truncate(&self, d: usize) -> SSet {
        let d = d.min(self.truncation);
        let mut degeneracies: Vec<Vec<Vec<usize>>> = self.degeneracies[..=d].to_vec();
        for x in degeneracies[d].iter_mut() {
            x.clear();
        }
        SSet {
            truncation: d,
            names: self.names[..=d].to_vec(),
            faces: self.faces[..=d].to_vec(),
            degeneracies,
        }
    }

    /// The sub-simplicial set on the flagged simplices with its inclusion.
    pub fn subcomplex(&self, keep: &[Vec<bool>]) -> Result<(SSet, SimplicialMap)> {
        let t = self.truncation;
        let mut remap: Vec<Vec<usize>> = Vec::new();
        let mut incl: Vec<Vec<usize>> = Vec::new();
        for n in 0..=t {
            let mut r = vec![usize::MAX; self.len(n)];
            let mut inc = Vec::new();
            for x in 0..self.len(n) {
                if keep[n][x] {
                    r[x] = inc.len();
                    inc.push(x);
                }
            }
            remap.push(r);
            incl.push(inc);
        }
        let mut names = Vec::new();
        let mut faces = Vec::new();
        let mut degeneracies = Vec::new();
        for n in 0..=t {
            names.push(incl[n].iter().map(|&x| self.names[n][x].clone()).collect());
            let mut fl = Vec::new();
            let mut dl = Vec::new();
            for &x in &incl[n] {
                let fs = self.faces[n][x]
                    .iter()
                    .map(|&y| remap[n - 1][y])
                    .collect::<Vec<_>>();
                let ds = self.degeneracies[n][x]
                    .iter()
                    .map(|&y| remap[n + 1][y])
                    .collect::<Vec<_>>();
                if fs.contains(&usize::MAX) || ds.contains(&usize::MAX) {
                    return Err(Error::Input(format!(
                        "subcomplex not closed at {}",
                        self.names[n][x]
                    )));
                }
                fl.push(fs);
                dl.push(ds);
            }
            faces.push(fl);
            degeneracies.push(dl);
        }
        Ok((
            SSet {
                truncation: t,
                names,
                faces,
                degeneracies,
            },
            SimplicialMap { levels: incl },
        ))
    }

    /// Simplices generated by non-degenerate simplices of dimension `≤ n`.
    pub fn skeleton(&self, n: usize) -> SSet {
        let t = self.truncation;
        let mut keep: Vec<Vec<bool>> = (0..=t).map(|m| vec![m <= n; self.len(m)]).collect();
        for m in n + 1..=t {
            for y in 0..self.len(m - 1) {
                if keep[m - 1][y] {
                    for j in 0..m {
                        keep[m][self.degen(m - 1, y, j)] = true;
                    }
                }
            }
        }
        self.subcomplex(&keep).expect("skeleta are closed").0
    }

    // --- standard cells ---------------------------------------------------

    /// `Δⁿ` truncated at `d`; simplices are monotone maps named by their
    /// vertex lists, e.g. `012`, `0012`.
    pub fn standard_simplex(n: usize, d: usize) -> SSet {
        Self::simplex_sub(n, d, |_| true).expect("standard simplex")
    }

    /// `∂Δⁿ`: omits the simplices surjective onto `[n]`.
    pub fn boundary(n: usize, d: usize) -> SSet {
        Self::simplex_sub(n, d, |img| img.len() < n + 1).expect("boundary")
    }

    /// `Λⁿ_k`: omits every simplex whose image together with `k` covers `[n]`.
    pub fn horn(n: usize, k: usize, d: usize) -> Result<SSet> {
        if n == 0 || k > n {
            return Err(Error::Parameter(format!("horn Λ^{n}_{k} needs 0 ≤ k ≤ n, n ≥ 1")));
        }
        Self::simplex_sub(n, d, |img| {
            let mut s = img.clone();
            s.insert(k);
            s.len() < n + 1
        })
    }

    fn simplex_sub(n: usize, d: usize, keep: impl Fn(&BTreeSet<usize>) -> bool) -> Result<SSet> {
        let levels: Vec<Vec<Vec<usize>>> = (0..=d)
            .map(|m| {
                monotone_maps(m, n)
                    .into_iter()
                    .filter(|f| keep(&f.iter().copied().collect()))
                    .collect()
            })
            .collect();
        SSet::from_keyed(
            d,
            levels,
            |_, k, i| {
                let mut v = k.clone();
                v.remove(i);
                v
            },
            |_, k, j| {
                let mut v = k.clone();
                v.insert(j, k[j]);
                v
            },
            |_, k| vertex_word(k),
        )
    }

    /// The nerve: `n`-simplices are composable chains `x₀ → ⋯ → xₙ`, named
    /// `f|g|…` in diagrammatic order.
    pub fn nerve(c: &FinCategory, d: usize) -> SSet {
        let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..c.num_objects()).map(|o| vec![o]).collect()];
        if d >= 1 {
            levels.push((0..c.num_morphisms()).map(|m| vec![m]).collect());
        }
        for _ in 2..=d {
            let prev = levels.last().unwrap();
            let mut next = Vec::new();
            for chain in prev {
                let last = *chain.last().unwrap();
                for &m in c.out_of(c.tgt(last)) {
                    let mut nc = chain.clone();
                    nc.push(m);
                    next.push(nc);
                }
            }
            levels.push(next);
        }
        SSet::from_keyed(
            d,
            levels,
            |n, k, i| {
                if n == 1 {
                    return vec![if i == 0 { c.tgt(k[0]) } else { c.src(k[0]) }];
                }
                let mut v = k.clone();
                if i == 0 {
                    v.remove(0);
                } else if i == n {
                    v.pop();
                } else {
                    let gf = c.compose(k[i], k[i - 1]).expect("valid category");
                    v.splice(i - 1..=i, [gf]);
                }
                v
            },
            |n, k, j| {
                if n == 0 {
                    return vec![c.identity(k[0])];
                }
                let obj = if j == 0 { c.src(k[0]) } else { c.tgt(k[j - 1]) };
                let mut v = k.clone();
                v.insert(j, c.identity(obj));
                v
            },
            |n, k| {
                if n == 0 {
                    c.object_id(k[0]).to_string()
                } else {
                    k.iter()
                        .map(|&m| c.morphism_id(m))
                        .collect::<Vec<_>>()
                        .join("|")
                }
            },
        )
        .expect("nerve of a valid category")
    }

    /// The 1-coskeleton of a reflexive graph: an `n`-simplex is a vertex
    /// list with a chosen edge `v_i → v_j` for every `i < j`. Equal
    /// vertices get the identity loop `id_v`. Simplices are named by their
    /// edges in pair order.
    pub fn graph_coskeleton<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)], d: usize) -> Result<SSet> {
        let nv = vertices.len();
        let vid = |s: &str| {
            vertices
                .iter()
                .position(|v| v.as_ref() == s)
                .ok_or_else(|| Error::UnknownId(s.to_string()))
        };
        // loops first, then the given edges
        let mut all: Vec<(String, usize, usize)> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (format!("id_{}", v.as_ref()), i, i))
            .collect();
        for (e, s, t) in edges {
            all.push((e.as_ref().to_string(), vid(s.as_ref())?, vid(t.as_ref())?));
        }
        let pairs = |n: usize| -> Vec<(usize, usize)> {
            (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
        };
        type Key = (Vec<usize>, Vec<usize>);
        let mut levels: Vec<Vec<Key>> = Vec::new();
        for n in 0..=d {
            let ps = pairs(n);
            let mut out: Vec<Key> = Vec::new();
            for code in 0..nv.pow(n as u32 + 1) {
                let verts: Vec<usize> = (0..=n).map(|i| code / nv.pow((n - i) as u32) % nv).collect();
                // every edge choice compatible with the vertex list
                let options: Vec<Vec<usize>> = ps
                    .iter()
                    .map(|&(i, j)| {
                        if verts[i] == verts[j] {
                            vec![verts[i]]
                        } else {
                            (nv..all.len())
                                .filter(|&e| all[e].1 == verts[i] && all[e].2 == verts[j])
                                .collect()
                        }
                    })
                    .collect();
                if options.iter().any(|o| o.is_empty()) {
                    continue;
                }
                let mut idx = vec![0usize; ps.len()];
                loop {
                    out.push((verts.clone(), idx.iter().zip(&options).map(|(&k, o)| o[k]).collect()));
                    let mut p = 0;
                    while p < idx.len() {
                        idx[p] += 1;
                        if idx[p] < options[p].len() {
                            break;
                        }
                        idx[p] = 0;
                        p += 1;
                    }
                    if p == idx.len() {
                        break;
                    }
                }
            }
            levels.push(out);
        }
        let pick = |key: &Key, n: usize, keep: &dyn Fn(usize) -> usize, m: usize| -> Key {
            let verts = (0..=m).map(|i| key.0[keep(i)]).collect();
            let ps = pairs(n);
            let es = pairs(m)
                .into_iter()
                .map(|(i, j)| {
                    let (a, b) = (keep(i), keep(j));
                    if key.0[a] == key.0[b] {
                        key.0[a]
                    } else {
                        key.1[ps.iter().position(|&p| p == (a, b)).unwrap()]
                    }
                })
                .collect();
            (verts, es)
        };
        SSet::from_keyed(
            d,
            levels,
            |n, k, i| pick(k, n, &|v| if v < i { v } else { v + 1 }, n - 1),
            |n, k, j| pick(k, n, &|v| if v <= j { v } else { v - 1 }, n + 1),
            |n, k| {
                if n == 0 {
                    vertices[k.0[0]].as_ref().to_string()
                } else {
                    k.1.iter().map(|&e| all[e].0.as_str()).collect::<Vec<_>>().join(",")
                }
            },
        )
    }

    /// The discrete simplicial set on the given points.
    pub fn discrete<S: AsRef<str>>(points: &[S], d: usize) -> SSet {
        let names: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let n = names.len();
        SSet {
            truncation: d,
            names: vec![names; d + 1],
            faces: (0..=d)
                .map(|m| (0..n).map(|x| if m == 0 { Vec::new() } else { vec![x; m + 1] }).collect())
                .collect(),
            degeneracies: (0..=d)
                .map(|m| (0..n).map(|x| if m == d { Vec::new() } else { vec![x; m + 1] }).collect())
                .collect(),
        }
    }

    pub fn empty(d: usize) -> SSet {
        SSet::discrete::<&str>(&[], d)
    }

    // --- limits and colimits ---------------------------------------------

    /// Levelwise product, truncated at the smaller truncation. Simplices
    /// are indexed row-major: `(x, y) ↦ x·|Y_n| + y`.
    pub fn product(x: &SSet, y: &SSet) -> SSet {
        let t = x.truncation.min(y.truncation);
        let mut names = Vec::new();
        let mut faces = Vec::new();
        let mut degeneracies = Vec::new();
        for n in 0..=t {
            let (nx, ny) = (x.len(n), y.len(n));
            let mut nl = Vec::with_capacity(nx * ny);
            let mut fl = Vec::with_capacity(nx * ny);
            let mut dl = Vec::with_capacity(nx * ny);
            for a in 0..nx {
                for b in 0..ny {
                    nl.push(format!("({},{})", x.name(n, a), y.name(n, b)));
                    let fs = if n == 0 {
                        Vec::new()
                    } else {
                        let my = y.len(n - 1);
                        (0..=n)
                            .map(|i| x.face(n, a, i) * my + y.face(n, b, i))
                            .collect()
                    };
                    let ds = if n == t {
                        Vec::new()
                    } else {
                        let my = y.len(n + 1);
                        (0..=n)
                            .map(|j| x.degen(n, a, j) * my + y.degen(n, b, j))
                            .collect()
                    };
                    fl.push(fs);
                    dl.push(ds);
                }
            }
            names.push(nl);
            faces.push(fl);
            degeneracies.push(dl);
        }
        SSet {
            truncation: t,
            names,
            faces,
            degeneracies,
        }
    }

    /// Quotient of a disjoint union by identifications that are already
    /// closed under the simplicial operators (as images of simplicial
    /// maps always are). Class names are those of the least member.
    pub fn glue(parts: &[(&str, &SSet)], identify: &[Vec<(usize, usize, usize, usize)>]) -> Result<SSet> {
        let t = parts
            .iter()
            .map(|(_, p)| p.truncation)
            .min()
            .ok_or_else(|| Error::Parameter("nothing to glue".into()))?;
        if parts.iter().any(|(_, p)| p.truncation != t) {
            return Err(Error::Truncation("glued pieces need a common truncation".into()));
        }
        let offsets: Vec<Vec<usize>> = (0..=t)
            .map(|n| {
                let mut acc = 0;
                parts
                    .iter()
                    .map(|(_, p)| {
                        let o = acc;
                        acc += p.len(n);
                        o
                    })
                    .collect()
            })
            .collect();
        let mut class_of: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<Vec<(usize, usize)>> = Vec::new();
        for n in 0..=t {
            let total: usize = parts.iter().map(|(_, p)| p.len(n)).sum();
            let mut uf = UnionFind::new(total);
            for &(pa, a, pb, b) in identify.get(n).map(|v| v.as_slice()).unwrap_or(&[]) {
                uf.union(offsets[n][pa] + a, offsets[n][pb] + b);
            }
            let mut cls = vec![usize::MAX; total];
            let mut rep = Vec::new();
            let mut root_class: HashMap<usize, usize> = HashMap::new();
            for (pi, (_, p)) in parts.iter().enumerate() {
                for x in 0..p.len(n) {
                    let g = offsets[n][pi] + x;
                    let r = uf.find(g);
                    let c = *root_class.entry(r).or_insert_with(|| {
                        rep.push((pi, x));
                        rep.len() - 1
                    });
                    cls[g] = c;
                }
            }
            class_of.push(cls);
            reps.push(rep);
        }
        let mut names = Vec::new();
        let mut faces = Vec::new();
        let mut degeneracies = Vec::new();
        for n in 0..=t {
            let mut nl = Vec::new();
            let mut fl = Vec::new();
            let mut dl = Vec::new();
            for &(pi, x) in &reps[n] {
                let (tag, p) = parts[pi];
                nl.push(if tag.is_empty() {
                    p.name(n, x).to_string()
                } else {
                    format!("{tag}.{}", p.name(n, x))
                });
                fl.push(if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| class_of[n - 1][offsets[n - 1][pi] + p.face(n, x, i)])
                        .collect()
                });
                dl.push(if n == t {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|j| class_of[n + 1][offsets[n + 1][pi] + p.degen(n, x, j)])
                        .collect()
                });
            }
            names.push(nl);
            faces.push(fl);
            degeneracies.push(dl);
        }
        let out = SSet {
            truncation: t,
            names,
            faces,
            degeneracies,
        };
        // well-definedness: every member of a class must induce the same faces
        for n in 1..=t {
            for (pi, (_, p)) in parts.iter().enumerate() {
                for x in 0..p.len(n) {
                    let c = class_of[n][offsets[n][pi] + x];
                    for i in 0..=n {
                        let via = class_of[n - 1][offsets[n - 1][pi] + p.face(n, x, i)];
                        if out.face(n, c, i) != via {
                            return Err(Error::Input(
                                "identifications are not closed under faces".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn coproduct(x: &SSet, y: &SSet) -> Result<SSet> {
        SSet::glue(&[("L", x), ("R", y)], &[])
    }

    /// Strict pushout of `X ←f A →g Y`.
    pub fn pushout(a: &SSet, x: &SSet, y: &SSet, f: &SimplicialMap, g: &SimplicialMap) -> Result<SSet> {
        check_map(a, x, f)?;
        check_map(a, y, g)?;
        let ids: Vec<Vec<_>> = (0..=a.truncation)
            .map(|n| (0..a.len(n)).map(|s| (0, f.at(n, s), 1, g.at(n, s))).collect())
            .collect();
        SSet::glue(&[("X", x), ("Y", y)], &ids)
    }

    /// Double mapping cylinder `X ⊔_{A×0} (A×Δ¹) ⊔_{A×1} Y`.
    pub fn ho_pushout(a: &SSet, x: &SSet, y: &SSet, f: &SimplicialMap, g: &SimplicialMap) -> Result<SSet> {
        check_map(a, x, f)?;
        check_map(a, y, g)?;
        let t = a.truncation;
        let interval = SSet::standard_simplex(1, t);
        let cyl = SSet::product(a, &interval);
        let ids: Vec<Vec<_>> = (0..=t)
            .map(|n| {
                let zero = interval.constant(0, n);
                let one = interval.constant(1, n);
                let w = interval.len(n);
                (0..a.len(n))
                    .flat_map(|s| {
                        [
                            (0, f.at(n, s), 1, s * w + zero),
                            (2, g.at(n, s), 1, s * w + one),
                        ]
                    })
                    .collect()
            })
            .collect();
        SSet::glue(&[("X", x), ("C", &cyl), ("Y", y)], &ids)
    }

    // --- invariants -------------------------------------------------------

    /// Path components: `component[v]` for each vertex, numbered in order
    /// of first appearance.
    pub fn pi0(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.len(0));
        if self.truncation >= 1 {
            for e in 0..self.len(1) {
                let (s, t) = self.endpoints(e);
                uf.union(s, t);
            }
        }
        let mut label = HashMap::new();
        (0..self.len(0))
            .map(|v| {
                let r = uf.find(v);
                let next = label.len();
                *label.entry(r).or_insert(next)
            })
            .collect()
    }

    pub fn num_components(&self) -> usize {
        self.pi0().into_iter().collect::<BTreeSet<_>>().len()
    }

    pub fn fundamental_groupoid(&self) -> Result<GroupoidPresentation> {
        if self.truncation < 2 {
            return Err(Error::Truncation("fundamental groupoid needs truncation ≥ 2".into()));
        }
        let gens = self.nondegenerate(1);
        let gen_of: HashMap<usize, usize> = gens.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let generators = gens
            .iter()
            .map(|&e| {
                let (s, t) = self.endpoints(e);
                (self.name(1, e).to_string(), s, t)
            })
            .collect();
        let relations = self
            .nondegenerate(2)
            .into_iter()
            .map(|s| {
                let g = |i| gen_of.get(&self.face(2, s, i)).copied();
                Relation {
                    first: g(2),
                    second: g(0),
                    composite: g(1),
                }
            })
            .collect();
        Ok(GroupoidPresentation {
            objects: self.names[0].clone(),
            generators,
            relations,
        })
    }

    /// The edge-path group at a basepoint, presented by the non-degenerate
    /// edges off a breadth-first spanning tree, one relator per
    /// non-degenerate 2-simplex.
    pub fn edge_path_group(&self, basepoint: usize) -> Result<GroupPresentation> {
        if basepoint >= self.len(0) {
            return Err(Error::Parameter(format!("basepoint {basepoint} is not a vertex")));
        }
        if self.truncation < 2 {
            return Err(Error::Truncation("edge-path group needs truncation ≥ 2".into()));
        }
        let edges = self.nondegenerate(1);
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.len(0)];
        for &e in &edges {
            let (s, t) = self.endpoints(e);
            adj[s].push((e, t));
            adj[t].push((e, s));
        }
        let mut seen = vec![false; self.len(0)];
        let mut tree = BTreeSet::new();
        let mut queue = VecDeque::from([basepoint]);
        seen[basepoint] = true;
        while let Some(v) = queue.pop_front() {
            for &(e, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree.insert(e);
                    queue.push_back(w);
                }
            }
        }
        let mut generators = Vec::new();
        let mut gen_of = HashMap::new();
        for &e in &edges {
            let (s, _) = self.endpoints(e);
            if seen[s] && !tree.contains(&e) {
                gen_of.insert(e, generators.len() as i32 + 1);
                generators.push(self.name(1, e).to_string());
            }
        }
        let mut relators = Vec::new();
        for s in self.nondegenerate(2) {
            if !seen[self.vertex(2, s, 0)] {
                continue;
            }
            let letter = |i| gen_of.get(&self.face(2, s, i)).copied();
            let mut w = Vec::new();
            w.extend(letter(2));
            w.extend(letter(0));
            w.extend(letter(1).map(|g| -g));
            relators.push(w);
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    // --- comparisons ------------------------------------------------------

    /// Searches for an isomorphism `self → other`.
    pub fn find_isomorphism(&self, other: &SSet) -> Option<SimplicialMap> {
        if self.level_sizes() != other.level_sizes() {
            return None;
        }
        let sig = |s: &SSet| -> Vec<(usize, usize)> {
            let mut out = vec![(0, 0); s.len(0)];
            if s.truncation >= 1 {
                for e in s.nondegenerate(1) {
                    let (a, b) = s.endpoints(e);
                    out[a].0 += 1;
                    out[b].1 += 1;
                }
            }
            out
        };
        let (sa, sb) = (sig(self), sig(other));
        let src_deg = self.degeneracy_sources();
        let tgt_deg: Vec<Vec<bool>> = (0..=other.truncation).map(|n| other.degenerate_flags(n)).collect();
        let index = FaceIndex::new(other);
        let order: Vec<(usize, usize)> = (0..=self.truncation)
            .flat_map(|n| (0..self.len(n)).map(move |x| (n, x)))
            .collect();
        let mut phi: Vec<Vec<usize>> = (0..=self.truncation).map(|n| vec![usize::MAX; self.len(n)]).collect();
        let mut used: Vec<Vec<bool>> = (0..=other.truncation).map(|n| vec![false; other.len(n)]).collect();
        let ok = iso_search(self, other, &order, 0, &src_deg, &tgt_deg, &index, &sa, &sb, &mut phi, &mut used);
        if ok {
            let map = SimplicialMap { levels: phi };
            debug_assert!(map.validate(self, other).is_empty());
            Some(map)
        } else {
            None
        }
    }

    /// Whether the spine map `X_n → X_1 ×_{X_0} ⋯ ×_{X_0} X_1` is a
    /// bijection for every `n ≤ truncation`.
    pub fn segal_condition(&self) -> bool {
        if self.truncation < 2 {
            return true;
        }
        // number of composable edge strings, by dynamic programming
        let mut paths: Vec<usize> = vec![1; self.len(0)];
        for n in 1..=self.truncation {
            let mut next = vec![0usize; self.len(0)];
            for e in 0..self.len(1) {
                let (s, t) = self.endpoints(e);
                next[t] += paths[s];
            }
            paths = next;
            let total: usize = paths.iter().sum();
            let mut spines = BTreeSet::new();
            for x in 0..self.len(n) {
                let spine: Vec<usize> = (1..=n).map(|i| self.act(&[i - 1, i], n, x)).collect();
                spines.insert(spine);
            }
            if spines.len() != self.len(n) || self.len(n) != total {
                return false;
            }
        }
        true
    }

    /// Whether every compatible boundary of dimension `k < n ≤ truncation`
    /// has exactly one filler.
    pub fn is_coskeletal(&self, k: usize) -> bool {
        let index = FaceIndex::new(self);
        for n in k + 1..=self.truncation {
            let present = vec![true; n + 1];
            let mut ok = true;
            index.for_each_compatible(self, n, &present, &mut |tuple| {
                if index.fillers(n, tuple).len() != 1 {
                    ok = false;
                    return false;
                }
                true
            });
            if !ok {
                return false;
            }
        }
        true
    }
}

fn check_map(src: &SSet, tgt: &SSet, f: &SimplicialMap) -> Result<()> {
    let problems = f.validate(src, tgt);
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::Input(format!("not a simplicial map: {}", problems[0])))
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    x: &SSet,
    y: &SSet,
    order: &[(usize, usize)],
    k: usize,
    src_deg: &[Vec<Option<(usize, usize)>>],
    tgt_deg: &[Vec<bool>],
    index: &FaceIndex,
    sa: &[(usize, usize)],
    sb: &[(usize, usize)],
    phi: &mut Vec<Vec<usize>>,
    used: &mut Vec<Vec<bool>>,
) -> bool {
    let Some(&(n, s)) = order.get(k) else { return true };
    let candidates: Vec<usize> = if let Some((base, j)) = src_deg[n][s] {
        vec![y.degen(n - 1, phi[n - 1][base], j)]
    } else if n == 0 {
        (0..y.len(0)).filter(|&v| sa[s] == sb[v]).collect()
    } else {
        let faces: Vec<usize> = (0..=n).map(|i| phi[n - 1][x.face(n, s, i)]).collect();
        index
            .fillers(n, &faces)
            .iter()
            .copied()
            .filter(|&c| !tgt_deg[n][c])
            .collect()
    };
    for c in candidates {
        if used[n][c] {
            continue;
        }
        if n > 0 && (0..=n).any(|i| y.face(n, c, i) != phi[n - 1][x.face(n, s, i)]) {
            continue;
        }
        phi[n][s] = c;
        used[n][c] = true;
        if iso_search(x, y, order, k + 1, src_deg, tgt_deg, index, sa, sb, phi, used) {
            return true;
        }
        used[n][c] = false;
        phi[n][s] = usize::MAX;
    }
    false
}

/// Lookup of simplices by their faces.
pub struct FaceIndex {
    by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    /// `by_face[n][i][v]`: simplices at level `n` with `d_i = v`.
    by_face: Vec<Vec<Vec<Vec<usize>>>>,
}

impl FaceIndex {
    pub fn new(x: &SSet) -> FaceIndex {
        let mut by_faces = vec![HashMap::new()];
        let mut by_face = vec![Vec::new()];
        for n in 1..=x.truncation() {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            let mut per: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); x.len(n - 1)]; n + 1];
            for s in 0..x.len(n) {
                m.entry(x.faces_of(n, s).to_vec()).or_default().push(s);
                for i in 0..=n {
                    per[i][x.face(n, s, i)].push(s);
                }
            }
            by_faces.push(m);
            by_face.push(per);
        }
        FaceIndex { by_faces, by_face }
    }

    /// Simplices at level `n` whose `i`-th face is `v`.
    pub fn with_face(&self, n: usize, i: usize, v: usize) -> &[usize] {
        &self.by_face[n][i][v]
    }

    pub fn fillers(&self, n: usize, faces: &[usize]) -> &[usize] {
        self.by_faces[n].get(faces).map_or(&[], |v| v.as_slice())
    }

    /// Visits every compatible tuple `(x_i)` of `(n-1)`-simplices for the
    /// face positions flagged in `present` (`d_i x_j = d_{j-1} x_i` for
    /// `i < j`). Absent positions hold `usize::MAX`. The visitor returns
    /// `false` to stop.
    pub fn for_each_compatible(
        &self,
        x: &SSet,
        n: usize,
        present: &[bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let mut tuple = vec![usize::MAX; n + 1];
        self.compatible_rec(x, n, present, 0, &mut tuple, visit)
    }

    fn compatible_rec(
        &self,
        x: &SSet,
        n: usize,
        present: &[bool],
        i: usize,
        tuple: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i > n {
            return visit(tuple);
        }
        if !present[i] {
            return self.compatible_rec(x, n, present, i + 1, tuple, visit);
        }
        let m = n - 1;
        // constraint from the first earlier present face, if any
        let earlier = (0..i).find(|&a| present[a]);
        let candidates: Vec<usize> = match (earlier, m) {
            (Some(a), m) if m >= 1 => self.by_face[m][a][x.face(m, tuple[a], i - 1)].clone(),
            (Some(a), 0) => {
                // vertices: compatibility is equality conditions on nothing
                let _ = a;
                (0..x.len(0)).collect()
            }
            _ => (0..x.len(m)).collect(),
        };
        for c in candidates {
            let ok = m == 0
                || (0..i)
                    .filter(|&a| present[a])
                    .all(|a| x.face(m, c, a) == x.face(m, tuple[a], i - 1));
            if !ok {
                continue;
            }
            tuple[i] = c;
            if !self.compatible_rec(x, n, present, i + 1, tuple, visit) {
                tuple[i] = usize::MAX;
                return false;
            }
        }
        tuple[i] = usize::MAX;
        true
    }
}

/// A levelwise map of simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn at(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    pub fn identity(x: &SSet) -> SimplicialMap {
        SimplicialMap {
            levels: (0..=x.truncation()).map(|n| (0..x.len(n)).collect()).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap {
            levels: self
                .levels
                .iter()
                .enumerate()
                .map(|(n, l)| l.iter().map(|&x| other.levels[n][x]).collect())
                .collect(),
        }
    }

    /// The unique map to `Δ⁰` (truncated like `x`).
    pub fn to_point(x: &SSet) -> SimplicialMap {
        SimplicialMap {
            levels: (0..=x.truncation()).map(|n| vec![0; x.len(n)]).collect(),
        }
    }

    /// Checks the map is defined on every level of `src` and commutes with
    /// all faces and degeneracies.
    pub fn validate(&self, src: &SSet, tgt: &SSet) -> Vec<String> {
        let mut out = Vec::new();
        if src.truncation() > tgt.truncation() || self.levels.len() != src.truncation() + 1 {
            out.push("map levels do not match the truncations".into());
            return out;
        }
        for n in 0..=src.truncation() {
            if self.levels[n].len() != src.len(n) || self.levels[n].iter().any(|&y| y >= tgt.len(n)) {
                out.push(format!("level {n} has the wrong size or range"));
                return out;
            }
        }
        for n in 0..=src.truncation() {
            for x in 0..src.len(n) {
                let fx = self.levels[n][x];
                if n > 0 {
                    for i in 0..=n {
                        if tgt.face(n, fx, i) != self.levels[n - 1][src.face(n, x, i)] {
                            out.push(format!("d{i} not preserved at {}", src.name(n, x)));
                        }
                    }
                }
                if n < src.truncation() {
                    for j in 0..=n {
                        if tgt.degen(n, fx, j) != self.levels[n + 1][src.degen(n, x, j)] {
                            out.push(format!("s{j} not preserved at {}", src.name(n, x)));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|l| {
            let s: BTreeSet<_> = l.iter().collect();
            s.len() == l.len()
        })
    }
}

/// A relation `composite = second ∘ first` read off a 2-simplex; `None`
/// entries are degenerate edges, i.e. identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub first: Option<usize>,
    pub second: Option<usize>,
    pub composite: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidPresentation {
    pub objects: Vec<String>,
    /// `(name, source vertex, target vertex)` per non-degenerate edge.
    pub generators: Vec<(String, usize, usize)>,
    pub relations: Vec<Relation>,
}

impl GroupoidPresentation {
    pub fn validate(&self) -> Vec<String> {
        let ends = |g: Option<usize>| g.map(|i| (self.generators[i].1, self.generators[i].2));
        let mut out = Vec::new();
        for (k, r) in self.relations.iter().enumerate() {
            let (f, g, h) = (ends(r.first), ends(r.second), ends(r.composite));
            let mid_ok = match (f, g) {
                (Some(f), Some(g)) => f.1 == g.0,
                _ => true,
            };
            let outer_ok = match (f, g, h) {
                (Some(f), Some(g), Some(h)) => f.0 == h.0 && g.1 == h.1,
                _ => true,
            };
            if !mid_ok || !outer_ok {
                out.push(format!("relation {k} has mismatched endpoints"));
            }
        }
        out
    }
}

/// A finitely presented group. Letters are `±(generator index + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

/// What rank counting can say about a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRecognition {
    /// Free of the given rank; rank 0 is the trivial group.
    Free(usize),
    /// Relators survive simplification; nothing is claimed.
    Unrecognized(GroupPresentation),
}

impl fmt::Display for GroupRecognition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupRecognition::Free(0) => write!(f, "trivial"),
            GroupRecognition::Free(r) => write!(f, "free of rank {r}"),
            GroupRecognition::Unrecognized(p) => write!(
                f,
                "unrecognized ({} generators, {} relators)",
                p.generators.len(),
                p.relators.len()
            ),
        }
    }
}

fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    // cyclic reduction
    while out.len() >= 2 && out[0] == -out[out.len() - 1] {
        out.pop();
        out.remove(0);
    }
    out
}

impl GroupPresentation {
    /// Tietze simplification: a generator occurring exactly once in some
    /// relator is solved for and eliminated.
    pub fn simplified(&self) -> GroupPresentation {
        let mut gens: Vec<Option<String>> = self.generators.iter().cloned().map(Some).collect();
        let mut rels: Vec<Vec<i32>> = self.relators.iter().map(|r| free_reduce(r)).collect();
        loop {
            rels.retain(|r| !r.is_empty());
            let mut step = None;
            'search: for (ri, r) in rels.iter().enumerate() {
                for &l in r {
                    let g = l.abs();
                    if r.iter().filter(|&&x| x.abs() == g).count() == 1 {
                        step = Some((ri, l));
                        break 'search;
                    }
                }
            }
            let Some((ri, l)) = step else { break };
            let r = rels.remove(ri);
            let pos = r.iter().position(|&x| x == l).unwrap();
            // r = u l v = 1  ⇒  l = u⁻¹ v⁻¹
            let inv = |w: &[i32]| w.iter().rev().map(|x| -x).collect::<Vec<_>>();
            let mut value = inv(&r[..pos]);
            value.extend(inv(&r[pos + 1..]));
            let g = l.abs();
            let (pos_val, neg_val) = if l > 0 {
                (value.clone(), inv(&value))
            } else {
                (inv(&value), value.clone())
            };
            for other in rels.iter_mut() {
                let mut nw = Vec::new();
                for &x in other.iter() {
                    if x == g {
                        nw.extend(&pos_val);
                    } else if x == -g {
                        nw.extend(&neg_val);
                    } else {
                        nw.push(x);
                    }
                }
                *other = free_reduce(&nw);
            }
            gens[(g - 1) as usize] = None;
        }
        // renumber survivors
        let mut renum = HashMap::new();
        let mut generators = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if let Some(name) = g {
                renum.insert(i as i32 + 1, generators.len() as i32 + 1);
                generators.push(name.clone());
            }
        }
        let relators = rels
            .iter()
            .map(|r| r.iter().map(|&x| x.signum() * renum[&x.abs()]).collect())
            .collect();
        GroupPresentation {
            generators,
            relators,
        }
    }

    pub fn recognize(&self) -> GroupRecognition {
        let s = self.simplified();
        if s.relators.is_empty() {
            GroupRecognition::Free(s.generators.len())
        } else {
            GroupRecognition::Unrecognized(s)
        }
    }
}

/// Plain union–find over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if two classes merged. The smaller root wins.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn monotone_map_counts_match_binomials() {
        for m in 0..4 {
            for n in 0..4 {
                assert_eq!(monotone_maps(m, n).len(), binom(m + n + 1, m + 1));
            }
        }
    }

    #[test]
    fn cells() {
        assert_eq!(SSet::standard_simplex(1, 2).level_sizes(), vec![2, 3, 4]);
        let b = SSet::boundary(1, 2);
        assert_eq!(b.len(0), 2);
        assert!(b.nondegenerate(1).is_empty() && b.nondegenerate(2).is_empty());
        let h = SSet::horn(2, 1, 2).unwrap();
        let nd0: Vec<&str> = h.nondegenerate(0).iter().map(|&x| h.name(0, x)).collect();
        let nd1: Vec<&str> = h.nondegenerate(1).iter().map(|&x| h.name(1, x)).collect();
        assert_eq!(nd0, vec!["0", "1", "2"]);
        assert_eq!(nd1, vec!["01", "12"]);
        assert!(h.nondegenerate(2).is_empty());
        assert!(SSet::horn(2, 3, 2).is_err());
        assert!(SSet::horn(0, 0, 2).is_err());
    }

    #[test]
    fn nerve_examples() {
        let n1 = SSet::nerve(&FinCategory::ordinal(1), 3);
        assert!(n1.find_isomorphism(&SSet::standard_simplex(1, 3)).is_some());
        let n2 = SSet::nerve(&FinCategory::ordinal(2), 3);
        assert_eq!(n2.level_sizes(), vec![3, 6, 10, 15]);
        let disc = SSet::nerve(&FinCategory::discrete(&["x", "y"]), 2);
        let pts = SSet::coproduct(&SSet::standard_simplex(0, 2), &SSet::standard_simplex(0, 2)).unwrap();
        assert!(disc.find_isomorphism(&pts).is_some());
        assert_eq!(n2.nondegenerate(2).len(), 1);
    }

    #[test]
    fn act_agrees_with_faces_and_degeneracies() {
        let x = SSet::nerve(&fixtures::commutative_square().category, 3);
        for s in 0..x.len(2) {
            assert_eq!(x.act(&[1, 2], 2, s), x.face(2, s, 0));
            assert_eq!(x.act(&[0, 2], 2, s), x.face(2, s, 1));
            assert_eq!(x.act(&[0, 1, 1, 2], 2, s), x.degen(2, s, 1));
            assert_eq!(x.act(&[2], 2, s), x.vertex(2, s, 2));
        }
    }

    #[test]
    fn products_and_pushouts() {
        let x = SSet::nerve(&FinCategory::ordinal(2), 3);
        let pt = SSet::standard_simplex(0, 3);
        assert!(SSet::product(&pt, &x).find_isomorphism(&x).is_some());
        let id = SimplicialMap::identity(&x);
        let po = SSet::pushout(&x, &x, &x, &id, &id).unwrap();
        assert!(po.find_isomorphism(&x).is_some());
        let sq = SSet::product(&SSet::standard_simplex(1, 3), &SSet::standard_simplex(1, 3));
        assert!(sq.validate().is_empty());
        assert_eq!(sq.nondegenerate(2).len(), 2);
        assert!(sq.nondegenerate(3).is_empty());
    }

    #[test]
    fn nerve_preserves_products() {
        let c = FinCategory::ordinal(1);
        let d = fixtures::span().category;
        let lhs = SSet::nerve(&c.product(&d), 3);
        let rhs = SSet::product(&SSet::nerve(&c, 3), &SSet::nerve(&d, 3));
        assert!(lhs.find_isomorphism(&rhs).is_some());
    }

    fn circle_span() -> (SSet, SSet, SimplicialMap) {
        let a = SSet::boundary(1, 2);
        let pt = SSet::standard_simplex(0, 2);
        let f = SimplicialMap::to_point(&a);
        (a, pt, f)
    }

    #[test]
    fn homotopy_pushout_of_two_points_is_a_circle() {
        let (a, pt, f) = circle_span();
        let c = SSet::ho_pushout(&a, &pt, &pt, &f, &f).unwrap();
        assert!(c.validate().is_empty());
        assert_eq!(c.nondegenerate(0).len(), 2);
        assert_eq!(c.nondegenerate(1).len(), 2);
        assert!(c.nondegenerate(2).is_empty());
        assert_eq!(c.edge_path_group(0).unwrap().recognize(), GroupRecognition::Free(1));
        let strict = SSet::pushout(&a, &pt, &pt, &f, &f).unwrap();
        assert!(strict.find_isomorphism(&pt).is_some());
        assert_eq!(strict.edge_path_group(0).unwrap().recognize(), GroupRecognition::Free(0));
    }

    #[test]
    fn homotopy_pushout_of_identity_span_keeps_components() {
        let x = SSet::coproduct(&SSet::standard_simplex(1, 2), &SSet::standard_simplex(0, 2)).unwrap();
        let id = SimplicialMap::identity(&x);
        let c = SSet::ho_pushout(&x, &x, &x, &id, &id).unwrap();
        assert_eq!(c.num_components(), x.num_components());
    }

    #[test]
    fn edge_path_groups() {
        assert_eq!(SSet::standard_simplex(3, 3).num_components(), 1);
        let b = SSet::boundary(2, 2);
        assert_eq!(b.edge_path_group(0).unwrap().recognize(), GroupRecognition::Free(1));
        let d = SSet::standard_simplex(2, 2);
        assert_eq!(d.edge_path_group(0).unwrap().recognize(), GroupRecognition::Free(0));
        assert!(d.edge_path_group(7).is_err());
        let g = d.fundamental_groupoid().unwrap();
        assert_eq!(g.generators.len(), 3);
        assert_eq!(g.relations.len(), 1);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn skeleta_and_nondegenerate() {
        assert_eq!(SSet::standard_simplex(1, 2).nondegenerate(1).len(), 1);
        let sk = SSet::standard_simplex(2, 2).skeleton(1);
        assert!(sk.find_isomorphism(&SSet::boundary(2, 2)).is_some());
    }

    #[test]
    fn nerves_are_segal_and_two_coskeletal() {
        for fx in fixtures::all_fixtures() {
            let x = SSet::nerve(&fx.category, 3);
            assert!(x.segal_condition(), "{}", fx.name);
            assert!(x.is_coskeletal(2), "{}", fx.name);
        }
        assert!(!SSet::boundary(2, 3).segal_condition());
    }

    #[test]
    fn tietze_handles_a_substitution_chain() {
        // <a, b | a b^-1, b> is trivial
        let p = GroupPresentation {
            generators: vec!["a".into(), "b".into()],
            relators: vec![vec![1, -2], vec![2]],
        };
        assert_eq!(p.recognize(), GroupRecognition::Free(0));
        // <a | a a> is not recognized
        let q = GroupPresentation {
            generators: vec!["a".into()],
            relators: vec![vec![1, 1]],
        };
        assert!(matches!(q.recognize(), GroupRecognition::Unrecognized(_)));
    }

    proptest! {
        #[test]
        fn constructor_outputs_satisfy_simplicial_identities(n in 0usize..4, extra in 0usize..2, k in 0usize..4) {
            let d = n + extra;
            prop_assert!(SSet::standard_simplex(n, d).validate().is_empty());
            prop_assert!(SSet::boundary(n, d).validate().is_empty());
            if n >= 1 && k <= n {
                prop_assert!(SSet::horn(n, k, d).unwrap().validate().is_empty());
            }
        }

        #[test]
        fn poset_nerves_are_valid(edges in proptest::collection::vec((0usize..4, 0usize..4), 0..5)) {
            let objs = ["p", "q", "r", "s"];
            let leq: Vec<(&str, &str)> = edges
                .iter()
                .filter(|(a, b)| a < b)
                .map(|&(a, b)| (objs[a], objs[b]))
                .collect();
            let c = FinCategory::poset(&objs, &leq).unwrap();
            let x = SSet::nerve(&c, 3);
            prop_assert!(x.validate().is_empty());
            prop_assert!(x.segal_condition());
        }
    }
}
