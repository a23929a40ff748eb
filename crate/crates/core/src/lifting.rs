//! Finite lifting problems, horn filling and the (mono, epi) factorization
//! system on finite sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::sset::{FaceIndex, SSet, SimplicialMap};

/// Enumerates simplicial maps `b → x` extending `forced` (per level,
/// `Some(target)` pins a simplex) and passing `allowed(n, simplex, image)`.
/// Simplices are assigned in dimension-ascending, id order. The visitor
/// returns `false` to stop.
pub fn search_maps(
    b: &SSet,
    x: &SSet,
    x_index: &FaceIndex,
    forced: &[Vec<Option<usize>>],
    allowed: &dyn Fn(usize, usize, usize) -> bool,
    visit: &mut dyn FnMut(&SimplicialMap) -> bool,
) -> Result<()> {
    if x.truncation() < b.truncation() {
        return Err(Error::Truncation(format!(
            "target truncated at {} below source truncation {}",
            x.truncation(),
            b.truncation()
        )));
    }
    let degen = b.degeneracy_sources();
    let order: Vec<(usize, usize)> = (0..=b.truncation())
        .flat_map(|n| (0..b.len(n)).map(move |s| (n, s)))
        .collect();
    let mut h: Vec<Vec<usize>> = (0..=b.truncation()).map(|n| vec![usize::MAX; b.len(n)]).collect();
    let candidates = |h: &Vec<Vec<usize>>, n: usize, s: usize| -> Vec<usize> {
        let faces_ok = |c: usize| n == 0 || (0..=n).all(|i| x.face(n, c, i) == h[n - 1][b.face(n, s, i)]);
        let from_degen = degen[n][s].map(|(y, j)| x.degen(n - 1, h[n - 1][y], j));
        let base: Vec<usize> = match (forced[n][s], from_degen) {
            (Some(c), Some(d)) if c != d => Vec::new(),
            (Some(c), _) => {
                if c < x.len(n) && faces_ok(c) {
                    vec![c]
                } else {
                    Vec::new()
                }
            }
            (None, Some(d)) => vec![d],
            (None, None) if n == 0 => (0..x.len(0)).collect(),
            (None, None) => {
                let faces: Vec<usize> = (0..=n).map(|i| h[n - 1][b.face(n, s, i)]).collect();
                x_index.fillers(n, &faces).to_vec()
            }
        };
        base.into_iter().filter(|&c| allowed(n, s, c)).collect()
    };
    if order.is_empty() {
        visit(&SimplicialMap { levels: h });
        return Ok(());
    }
    let mut cands: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    let mut next = vec![0usize; order.len()];
    cands[0] = candidates(&h, order[0].0, order[0].1);
    let mut k = 0usize;
    loop {
        if k == order.len() {
            if !visit(&SimplicialMap { levels: h.clone() }) {
                return Ok(());
            }
            k -= 1;
            continue;
        }
        let (n, s) = order[k];
        if next[k] < cands[k].len() {
            h[n][s] = cands[k][next[k]];
            next[k] += 1;
            k += 1;
            if k < order.len() {
                let (n2, s2) = order[k];
                cands[k] = candidates(&h, n2, s2);
                next[k] = 0;
            }
        } else {
            h[n][s] = usize::MAX;
            if k == 0 {
                return Ok(());
            }
            k -= 1;
        }
    }
}

/// Every simplicial map `s → x`; errors past `limit` maps.
pub fn enumerate_maps(s: &SSet, x: &SSet, limit: usize) -> Result<Vec<SimplicialMap>> {
    let forced: Vec<Vec<Option<usize>>> = (0..=s.truncation()).map(|n| vec![None; s.len(n)]).collect();
    enumerate_maps_fixing(s, x, &forced, limit)
}

/// Every simplicial map `s → x` agreeing with `forced`; errors past `limit`.
pub fn enumerate_maps_fixing(
    s: &SSet,
    x: &SSet,
    forced: &[Vec<Option<usize>>],
    limit: usize,
) -> Result<Vec<SimplicialMap>> {
    let index = FaceIndex::new(x);
    let mut out = Vec::new();
    let mut over = false;
    search_maps(s, x, &index, forced, &|_, _, _| true, &mut |m| {
        if out.len() == limit {
            over = true;
            return false;
        }
        out.push(m.clone());
        true
    })?;
    if over {
        return Err(Error::budget("budget", limit, format!("{} maps enumerated", out.len())));
    }
    Ok(out)
}

/// A commuting square `p ∘ u = v ∘ i` asking for `h: B → X` with
/// `h ∘ i = u` and `p ∘ h = v`.
pub struct LiftingProblem<'a> {
    pub a: &'a SSet,
    pub b: &'a SSet,
    pub x: &'a SSet,
    pub y: &'a SSet,
    pub i: &'a SimplicialMap,
    pub u: &'a SimplicialMap,
    pub p: &'a SimplicialMap,
    pub v: &'a SimplicialMap,
}

impl LiftingProblem<'_> {
    pub fn validate(&self) -> Result<()> {
        for (name, m, s, t) in [
            ("i", self.i, self.a, self.b),
            ("u", self.u, self.a, self.x),
            ("p", self.p, self.x, self.y),
            ("v", self.v, self.b, self.y),
        ] {
            if let Some(e) = m.validate(s, t).first() {
                return Err(Error::Input(format!("{name} is not a simplicial map: {e}")));
            }
        }
        if self.u.then(self.p) != self.i.then(self.v) {
            return Err(Error::Input("lifting square does not commute".into()));
        }
        Ok(())
    }

    fn forced(&self) -> Option<Vec<Vec<Option<usize>>>> {
        let mut forced: Vec<Vec<Option<usize>>> =
            (0..=self.b.truncation()).map(|n| vec![None; self.b.len(n)]).collect();
        for n in 0..=self.a.truncation() {
            for s in 0..self.a.len(n) {
                let slot = &mut forced[n][self.i.at(n, s)];
                let want = self.u.at(n, s);
                match slot {
                    Some(c) if *c != want => return None,
                    _ => *slot = Some(want),
                }
            }
        }
        Some(forced)
    }

    /// The first filler in search order.
    pub fn solve(&self) -> Result<Option<SimplicialMap>> {
        Ok(self.solve_all(1)?.into_iter().next())
    }

    /// Up to `limit` fillers, in search order.
    pub fn solve_all(&self, limit: usize) -> Result<Vec<SimplicialMap>> {
        self.validate()?;
        let Some(forced) = self.forced() else {
            return Ok(Vec::new());
        };
        let index = FaceIndex::new(self.x);
        let mut out = Vec::new();
        let allowed = |n: usize, s: usize, c: usize| self.p.at(n, c) == self.v.at(n, s);
        search_maps(self.b, self.x, &index, &forced, &allowed, &mut |m| {
            out.push(m.clone());
            out.len() < limit
        })?;
        Ok(out)
    }
}

/// The canonical inclusion of a sub-simplex of `Δⁿ` into `Δⁿ`, matched by
/// simplex name.
pub fn inclusion_by_name(sub: &SSet, whole: &SSet) -> Result<SimplicialMap> {
    let levels = (0..=sub.truncation())
        .map(|n| {
            (0..sub.len(n))
                .map(|s| {
                    whole
                        .find(n, sub.name(n, s))
                        .ok_or_else(|| Error::UnknownId(sub.name(n, s).to_string()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMap { levels })
}

/// An unfillable horn: `faces[i]` is the `i`-th face, absent at `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornWitness {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<Option<String>>,
}

impl fmt::Display for HornWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ^{}_{} with faces [", self.n, self.k)?;
        for (i, x) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match x {
                Some(s) => write!(f, "{s}")?,
                None => write!(f, "-")?,
            }
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornCheck {
    pub holds: bool,
    /// The first horn without a filler, when `holds` is false.
    pub witness: Option<HornWitness>,
    /// Every horn checked had exactly one filler.
    pub unique: bool,
    pub horns_checked: usize,
}

/// Counts fillers of every horn `Λⁿ_k → x` for `2 ≤ n ≤ n_max`; inner
/// horns only when `inner_only`.
pub fn check_horns(x: &SSet, n_max: usize, inner_only: bool) -> Result<HornCheck> {
    if n_max > x.truncation() {
        return Err(Error::Truncation(format!(
            "n_max {n_max} exceeds truncation {}",
            x.truncation()
        )));
    }
    let index = FaceIndex::new(x);
    let mut report = HornCheck {
        holds: true,
        witness: None,
        unique: true,
        horns_checked: 0,
    };
    for n in 2..=n_max {
        let ks: Vec<usize> = if inner_only { (1..n).collect() } else { (0..=n).collect() };
        for k in ks {
            let mut present = vec![true; n + 1];
            present[k] = false;
            let anchor = if k == 0 { 1 } else { 0 };
            let mut failed = None;
            index.for_each_compatible(x, n, &present, &mut |tuple| {
                report.horns_checked += 1;
                let fillers = index
                    .with_face(n, anchor, tuple[anchor])
                    .iter()
                    .filter(|&&s| (0..=n).all(|i| i == k || x.face(n, s, i) == tuple[i]))
                    .count();
                if fillers != 1 {
                    report.unique = false;
                }
                if fillers == 0 {
                    failed = Some(tuple.to_vec());
                    return false;
                }
                true
            });
            if let Some(t) = failed {
                report.holds = false;
                report.witness = Some(HornWitness {
                    n,
                    k,
                    faces: t
                        .iter()
                        .enumerate()
                        .map(|(i, &f)| (i != k).then(|| x.name(n - 1, f).to_string()))
                        .collect(),
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

pub fn is_quasi_category(x: &SSet, n_max: usize) -> Result<HornCheck> {
    check_horns(x, n_max, true)
}

pub fn is_kan(x: &SSet, n_max: usize) -> Result<HornCheck> {
    check_horns(x, n_max, false)
}

/// Whether `p: x → y` lifts against `∂Δⁿ ↪ Δⁿ` for `n ≤ n_max`; on failure
/// returns a description of the unliftable boundary.
pub fn is_trivial_fibration(x: &SSet, y: &SSet, p: &SimplicialMap, n_max: usize) -> Result<std::result::Result<(), String>> {
    if let Some(e) = p.validate(x, y).first() {
        return Err(Error::Input(format!("not a simplicial map: {e}")));
    }
    if n_max > x.truncation() || n_max > y.truncation() {
        return Err(Error::Truncation("n_max exceeds a truncation".into()));
    }
    for v in 0..y.len(0) {
        if !p.levels[0].contains(&v) {
            return Ok(Err(format!("vertex {} has no preimage", y.name(0, v))));
        }
    }
    let xi = FaceIndex::new(x);
    let yi = FaceIndex::new(y);
    for n in 1..=n_max {
        let present = vec![true; n + 1];
        let mut failure = None;
        xi.for_each_compatible(x, n, &present, &mut |tuple| {
            let image: Vec<usize> = tuple.iter().map(|&f| p.at(n - 1, f)).collect();
            for &target in yi.fillers(n, &image) {
                if !xi.fillers(n, tuple).iter().any(|&c| p.at(n, c) == target) {
                    failure = Some(format!(
                        "boundary [{}] over {} has no lift",
                        tuple.iter().map(|&f| x.name(n - 1, f)).collect::<Vec<_>>().join(", "),
                        y.name(n, target)
                    ));
                    return false;
                }
            }
            true
        });
        if let Some(f) = failure {
            return Ok(Err(f));
        }
    }
    Ok(Ok(()))
}

// --- finite sets ------------------------------------------------------------

/// A function between finite sets `{0..dom} → {0..cod}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetMap {
    pub cod: usize,
    pub values: Vec<usize>,
}

impl SetMap {
    pub fn dom(&self) -> usize {
        self.values.len()
    }

    pub fn identity(n: usize) -> SetMap {
        SetMap {
            cod: n,
            values: (0..n).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SetMap) -> SetMap {
        SetMap {
            cod: other.cod,
            values: self.values.iter().map(|&v| other.values[v]).collect(),
        }
    }

    pub fn is_mono(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_epi(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.values {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Every function `dom → cod`, in lexicographic order.
    pub fn all(dom: usize, cod: usize) -> Vec<SetMap> {
        let mut out = Vec::new();
        if dom > 0 && cod == 0 {
            return out;
        }
        let total = cod.pow(dom as u32);
        for mut code in 0..total {
            let mut values = vec![0; dom];
            for v in values.iter_mut() {
                *v = code % cod.max(1);
                code /= cod.max(1);
            }
            out.push(SetMap { cod, values });
        }
        out
    }
}

/// A diagonal `h` with `h ∘ i = u` and `p ∘ h = v`, by exhaustive search.
pub fn solve_sets(i: &SetMap, u: &SetMap, p: &SetMap, v: &SetMap) -> Option<SetMap> {
    assert_eq!(u.then(p), i.then(v), "lifting square does not commute");
    let (b, x) = (i.cod, u.cod);
    let mut h = vec![None; b];
    for (a, &ia) in i.values.iter().enumerate() {
        match h[ia] {
            Some(c) if c != u.values[a] => return None,
            _ => h[ia] = Some(u.values[a]),
        }
    }
    let mut values = Vec::with_capacity(b);
    for (s, fixed) in h.into_iter().enumerate() {
        let c = match fixed {
            Some(c) => c,
            None => (0..x).find(|&c| p.values[c] == v.values[s])?,
        };
        if p.values[c] != v.values[s] {
            return None;
        }
        values.push(c);
    }
    Some(SetMap { cod: x, values })
}

/// Pushout of `x ←f a →g y` in finite sets, with both legs into it.
pub fn pushout_sets(f: &SetMap, g: &SetMap) -> (SetMap, SetMap) {
    let (nx, ny) = (f.cod, g.cod);
    let mut uf = crate::sset::UnionFind::new(nx + ny);
    for a in 0..f.dom() {
        uf.union(f.values[a], nx + g.values[a]);
    }
    let mut label = std::collections::HashMap::new();
    let mut class = vec![0; nx + ny];
    for (e, c) in class.iter_mut().enumerate() {
        let r = uf.find(e);
        let next = label.len();
        *c = *label.entry(r).or_insert(next);
    }
    let cod = label.len();
    (
        SetMap {
            cod,
            values: class[..nx].to_vec(),
        },
        SetMap {
            cod,
            values: class[nx..].to_vec(),
        },
    )
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WfsReport {
    pub factorizations: bool,
    pub monos_lift_against_epis: bool,
    pub pushouts: bool,
    pub coproducts: bool,
    pub composites: bool,
    pub retracts: bool,
    pub retract_argument: bool,
    pub squares_checked: usize,
    pub failures: Vec<String>,
}

impl WfsReport {
    pub fn all_hold(&self) -> bool {
        self.factorizations
            && self.monos_lift_against_epis
            && self.pushouts
            && self.coproducts
            && self.composites
            && self.retracts
            && self.retract_argument
    }
}

/// Exhaustive (mono, epi) checks over all functions between sets of size
/// at most `max_size`.
pub fn wfs_property_suite(max_size: usize) -> WfsReport {
    let sizes: Vec<usize> = (0..=max_size).collect();
    let maps = |a: usize, b: usize| SetMap::all(a, b);
    let mut r = WfsReport {
        factorizations: true,
        monos_lift_against_epis: true,
        pushouts: true,
        coproducts: true,
        composites: true,
        retracts: true,
        retract_argument: true,
        ..Default::default()
    };
    let fail = |flag: &mut bool, failures: &mut Vec<String>, msg: String| {
        *flag = false;
        if failures.len() < 20 {
            failures.push(msg);
        }
    };
    // factorizations: image (epi then mono) and A → A ⊔ B → B (mono then epi)
    for &a in &sizes {
        for &b in &sizes {
            for f in maps(a, b) {
                let mut image: Vec<usize> = f.values.clone();
                image.sort();
                image.dedup();
                let e = SetMap {
                    cod: image.len(),
                    values: f.values.iter().map(|v| image.binary_search(v).unwrap()).collect(),
                };
                let m = SetMap {
                    cod: b,
                    values: image.clone(),
                };
                let ok1 = e.is_epi() && m.is_mono() && e.then(&m) == f;
                let i = SetMap {
                    cod: a + b,
                    values: (0..a).collect(),
                };
                let mut pv = f.values.clone();
                pv.extend(0..b);
                let p = SetMap { cod: b, values: pv };
                let ok2 = i.is_mono() && p.is_epi() && i.then(&p) == f;
                if !(ok1 && ok2) {
                    fail(&mut r.factorizations, &mut r.failures, format!("factorization of {f:?}"));
                }
            }
        }
    }
    // lifting: every commuting square with a mono on the left and an epi on
    // the right has a diagonal
    for &a in &sizes {
        for &b in &sizes {
            let monos: Vec<SetMap> = maps(a, b).into_iter().filter(|m| m.is_mono()).collect();
            for &x in &sizes {
                for &y in &sizes {
                    let epis: Vec<SetMap> = maps(x, y).into_iter().filter(|m| m.is_epi()).collect();
                    if monos.is_empty() || epis.is_empty() {
                        continue;
                    }
                    let us = maps(a, x);
                    let vs = maps(b, y);
                    for i in &monos {
                        for p in &epis {
                            for u in &us {
                                let pu = u.then(p);
                                for v in &vs {
                                    if i.then(v) != pu {
                                        continue;
                                    }
                                    r.squares_checked += 1;
                                    if solve_sets(i, u, p, v).is_none() {
                                        fail(
                                            &mut r.monos_lift_against_epis,
                                            &mut r.failures,
                                            format!("no lift: i={i:?} p={p:?} u={u:?} v={v:?}"),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // closure of monos
    for &a in &sizes {
        for &x in &sizes {
            for &y in &sizes {
                for f in maps(a, x).into_iter().filter(|m| m.is_mono()) {
                    for g in maps(a, y) {
                        let (_, f_pushed) = pushout_sets(&f, &g);
                        if !f_pushed.is_mono() {
                            fail(&mut r.pushouts, &mut r.failures, format!("pushout of {f:?} along {g:?}"));
                        }
                    }
                    for h in maps(x, y).into_iter().filter(|m| m.is_mono()) {
                        if !f.then(&h).is_mono() {
                            fail(&mut r.composites, &mut r.failures, format!("{f:?} then {h:?}"));
                        }
                    }
                }
            }
        }
    }
    for &a1 in &sizes {
        for &b1 in &sizes {
            for &a2 in &sizes {
                for &b2 in &sizes {
                    for f in maps(a1, b1).into_iter().filter(|m| m.is_mono()) {
                        for g in maps(a2, b2).into_iter().filter(|m| m.is_mono()) {
                            let mut values = f.values.clone();
                            values.extend(g.values.iter().map(|v| v + b1));
                            let sum = SetMap { cod: b1 + b2, values };
                            if !sum.is_mono() {
                                fail(&mut r.coproducts, &mut r.failures, format!("{f:?} + {g:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    // retracts: f: A → B a retract of a mono m: C → D in the arrow category
    for &a in &sizes {
        for &b in &sizes {
            for &c in &sizes {
                for &d in &sizes {
                    if c < a || d < b {
                        continue;
                    }
                    let sections_a: Vec<(SetMap, SetMap)> = retraction_pairs(a, c);
                    let sections_b: Vec<(SetMap, SetMap)> = retraction_pairs(b, d);
                    if sections_a.is_empty() || sections_b.is_empty() {
                        continue;
                    }
                    for m in maps(c, d).into_iter().filter(|m| m.is_mono()) {
                        for (ia, ra) in &sections_a {
                            for (ib, rb) in &sections_b {
                                // f = rb ∘ m ∘ ia; require the diagram to commute
                                let f = ia.then(&m).then(rb);
                                if ia.then(&m) != f.then(ib) || m.then(rb) != ra.then(&f) {
                                    continue;
                                }
                                if !f.is_mono() {
                                    fail(&mut r.retracts, &mut r.failures, format!("retract {f:?} of {m:?}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // retract argument: if f = r ∘ l and f lifts against r, f is a retract
    // of l
    for &a in &sizes {
        for &b in &sizes {
            for &c in &sizes {
                for l in maps(a, c) {
                    for rr in maps(c, b) {
                        let f = l.then(&rr);
                        let Some(h) = solve_sets(&f, &l, &rr, &SetMap::identity(b)) else {
                            continue;
                        };
                        // A = A = A over B →h C →r B
                        let commutes = f.then(&h) == l && h.then(&rr) == SetMap::identity(b);
                        if !commutes {
                            fail(&mut r.retract_argument, &mut r.failures, format!("retract argument {l:?} {rr:?}"));
                        }
                    }
                }
            }
        }
    }
    r
}

/// Pairs `(s, r)` with `s: n → m`, `r: m → n`, `r ∘ s = id`.
fn retraction_pairs(n: usize, m: usize) -> Vec<(SetMap, SetMap)> {
    let mut out = Vec::new();
    for s in SetMap::all(n, m).into_iter().filter(|s| s.is_mono()) {
        for r in SetMap::all(m, n) {
            if s.then(&r) == SetMap::identity(n) {
                out.push((s.clone(), r));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;
    use crate::fixtures;

    fn point_map(x: &SSet) -> SimplicialMap {
        SimplicialMap::to_point(x)
    }

    #[test]
    fn isomorphism_lifts_by_transport() {
        let b = SSet::standard_simplex(2, 2);
        let x = SSet::nerve(&FinCategory::ordinal(2), 2);
        let pt = SSet::standard_simplex(0, 2);
        let iso = b.find_isomorphism(&x).unwrap();
        let i = SimplicialMap::identity(&b);
        let lp = LiftingProblem {
            a: &b,
            b: &b,
            x: &x,
            y: &pt,
            i: &i,
            u: &iso,
            p: &point_map(&x),
            v: &point_map(&b),
        };
        assert_eq!(lp.solve().unwrap(), Some(iso));
    }

    fn horn_problem(n: usize, k: usize, x: &SSet, edges: &[&str]) -> Vec<SimplicialMap> {
        let horn = SSet::horn(n, k, 2).unwrap();
        let simplex = SSet::standard_simplex(n, 2);
        let i = inclusion_by_name(&horn, &simplex).unwrap();
        // pin the horn's non-degenerate edges, in id order, to the given chains
        let mut forced: Vec<Vec<Option<usize>>> = (0..=2).map(|m| vec![None; horn.len(m)]).collect();
        for (e, name) in horn.nondegenerate(1).into_iter().zip(edges) {
            forced[1][e] = Some(x.find(1, name).unwrap());
        }
        let us = enumerate_maps_fixing(&horn, x, &forced, 10).unwrap();
        assert_eq!(us.len(), 1);
        let pt = SSet::standard_simplex(0, 2);
        let lp = LiftingProblem {
            a: &horn,
            b: &simplex,
            x,
            y: &pt,
            i: &i,
            u: &us[0],
            p: &point_map(x),
            v: &point_map(&simplex),
        };
        lp.solve_all(10).unwrap()
    }

    #[test]
    fn inner_horn_in_a_nerve_has_one_filler() {
        let x = SSet::nerve(&FinCategory::ordinal(2), 2);
        let fillers = horn_problem(2, 1, &x, &["0->1", "1->2"]);
        assert_eq!(fillers.len(), 1);
        let top = SSet::standard_simplex(2, 2).find(2, "012").unwrap();
        assert_eq!(x.name(2, fillers[0].at(2, top)), "0->1|1->2");
    }

    #[test]
    fn outer_horns_in_the_nerve_of_an_arrow() {
        let x = SSet::nerve(&FinCategory::ordinal(1), 2);
        // Λ²₀ edges are 01 and 02
        assert!(horn_problem(2, 0, &x, &["0->1", "id_0"]).is_empty());
        // the same arrow on both edges fills with an identity
        assert_eq!(horn_problem(2, 0, &x, &["0->1", "0->1"]).len(), 1);
    }

    #[test]
    fn horn_checks() {
        for fx in fixtures::all_fixtures() {
            let x = SSet::nerve(&fx.category, 4);
            let qc = is_quasi_category(&x, 4).unwrap();
            assert!(qc.holds && qc.unique, "{}", fx.name);
            let kan = is_kan(&x, 4).unwrap();
            assert_eq!(kan.holds, fx.category.is_groupoid(), "{}", fx.name);
            if !kan.holds {
                let w = kan.witness.unwrap();
                assert!(w.k == 0 || w.k == w.n);
            }
        }
        let h = SSet::horn(2, 1, 2).unwrap();
        let qc = is_quasi_category(&h, 2).unwrap();
        assert!(!qc.holds);
        assert_eq!(qc.witness.unwrap().faces, vec![Some("12".into()), None, Some("01".into())]);
        assert!(is_kan(&h, 5).is_err());
    }

    #[test]
    fn trivial_fibrations() {
        let x = SSet::nerve(&fixtures::span().category, 3);
        assert_eq!(is_trivial_fibration(&x, &x, &SimplicialMap::identity(&x), 3).unwrap(), Ok(()));
        let d1 = SSet::standard_simplex(1, 2);
        let pt = SSet::standard_simplex(0, 2);
        assert!(is_trivial_fibration(&d1, &pt, &point_map(&d1), 2).unwrap().is_err());
        // projection X × Δ⁰ → X
        let prod = SSet::product(&x, &SSet::standard_simplex(0, 3));
        let proj = SimplicialMap {
            levels: (0..=3).map(|n| (0..prod.len(n)).collect()).collect(),
        };
        assert_eq!(is_trivial_fibration(&prod, &x, &proj, 3).unwrap(), Ok(()));
        // the free isomorphism is contractible
        let iso = SSet::nerve(&fixtures::free_iso().category, 3);
        let pt3 = SSet::standard_simplex(0, 3);
        assert_eq!(is_trivial_fibration(&iso, &pt3, &point_map(&iso), 3).unwrap(), Ok(()));
    }

    #[test]
    fn searches_are_deterministic() {
        let b = SSet::standard_simplex(1, 2);
        let x = SSet::nerve(&fixtures::commutative_square().category, 2);
        let a = enumerate_maps(&b, &x, 1000).unwrap();
        let c = enumerate_maps(&b, &x, 1000).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.len(), 9);
        assert!(matches!(enumerate_maps(&b, &x, 3), Err(Error::Budget { .. })));
    }

    #[test]
    fn set_lifting_examples() {
        let bij = SetMap {
            cod: 2,
            values: vec![1, 0],
        };
        let id = SetMap::identity(2);
        assert!(solve_sets(&bij, &id, &id, &bij).is_some());
        // ∅ → 1 against an epi 2 → 1
        let empty = SetMap { cod: 1, values: vec![] };
        let u = SetMap { cod: 2, values: vec![] };
        let p = SetMap { cod: 1, values: vec![0, 0] };
        let v = SetMap::identity(1);
        assert!(solve_sets(&empty, &u, &p, &v).is_some());
    }

    #[test]
    fn wfs_suite_small() {
        let r = wfs_property_suite(2);
        assert!(r.all_hold(), "{:?}", r.failures);
        assert!(r.squares_checked > 0);
    }
}
