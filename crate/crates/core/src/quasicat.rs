//! Homotopy categories, homotopies of edges and function complexes of
//! quasi-categories.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Morphism};
use crate::lifting::{enumerate_maps_fixing, is_quasi_category};
use crate::sset::{monotone_maps, FaceIndex, SSet, SimplicialMap, UnionFind};

/// Which of the four boundary shapes of a homotopy `f ~ g` occur:
/// `(id, f, g)`, `(f, id, g)`, `(id, g, f)`, `(g, id, f)` as `(d2, d0, d1)`.
pub fn homotopy_forms(x: &SSet, f: usize, g: usize) -> Result<[bool; 4]> {
    if x.truncation() < 2 {
        return Err(Error::Truncation("homotopies need 2-simplices".into()));
    }
    let (a, b) = x.endpoints(f);
    if x.endpoints(g) != (a, b) {
        return Err(Error::Input(format!(
            "edges {} and {} do not share endpoints",
            x.name(1, f),
            x.name(1, g)
        )));
    }
    let (ida, idb) = (x.degen(0, a, 0), x.degen(0, b, 0));
    let index = FaceIndex::new(x);
    let has = |d0: usize, d1: usize, d2: usize| !index.fillers(2, &[d0, d1, d2]).is_empty();
    Ok([has(f, g, ida), has(idb, g, f), has(g, f, ida), has(idb, f, g)])
}

pub fn homotopic(x: &SSet, f: usize, g: usize) -> Result<bool> {
    Ok(homotopy_forms(x, f, g)?.iter().any(|&b| b))
}

/// The homotopy category of a quasi-category.
#[derive(Clone, Debug)]
pub struct HoCategory {
    /// Objects are the vertices; morphisms are classes, named by their
    /// least edge.
    pub category: FinCategory,
    /// Class of every edge.
    pub class_of_edge: Vec<usize>,
    /// Least edge of each class.
    pub representatives: Vec<usize>,
    /// For each composable pair of classes `(f, g)`, a 2-simplex with
    /// `d2 = rep f`, `d0 = rep g`.
    pub witnesses: BTreeMap<(usize, usize), usize>,
}

impl HoCategory {
    pub fn class(&self, edge: usize) -> usize {
        self.class_of_edge[edge]
    }
}

pub fn homotopy_category(x: &SSet) -> Result<HoCategory> {
    if x.truncation() < 3 {
        return Err(Error::Truncation(
            "homotopy category needs truncation ≥ 3 to certify associativity".into(),
        ));
    }
    let qc = is_quasi_category(x, 3)?;
    if !qc.holds {
        return Err(Error::Input(format!(
            "not a quasi-category: unfillable {}",
            qc.witness.expect("failing check has a witness")
        )));
    }
    let index = FaceIndex::new(x);
    let ne = x.len(1);
    let mut uf = UnionFind::new(ne);
    for s in 0..x.len(2) {
        let (d0, d1, d2) = (x.face(2, s, 0), x.face(2, s, 1), x.face(2, s, 2));
        let (p, q) = (x.endpoints(d2), x.endpoints(d0));
        // (id, f, g) and (f, id, g) shapes identify the other two edges
        if p.0 == p.1 && x.degen(0, p.0, 0) == d2 {
            uf.union(d0, d1);
        }
        if q.0 == q.1 && x.degen(0, q.0, 0) == d0 {
            uf.union(d2, d1);
        }
    }
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let class_of_edge: Vec<usize> = (0..ne)
        .map(|e| {
            let r = uf.find(e);
            *label.entry(r).or_insert_with(|| {
                representatives.push(e);
                representatives.len() - 1
            })
        })
        .collect();
    let nc = representatives.len();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for e in 0..ne {
        members[class_of_edge[e]].push(e);
    }
    let mut composite: HashMap<(usize, usize), usize> = HashMap::new();
    let mut witnesses = BTreeMap::new();
    for f in 0..nc {
        for g in 0..nc {
            let (rf, rg) = (representatives[f], representatives[g]);
            if x.endpoints(rf).1 != x.endpoints(rg).0 {
                continue;
            }
            let mut result: Option<usize> = None;
            for &ef in &members[f] {
                for &sigma in index.with_face(2, 2, ef) {
                    if class_of_edge[x.face(2, sigma, 0)] != g {
                        continue;
                    }
                    let h = class_of_edge[x.face(2, sigma, 1)];
                    match result {
                        Some(prev) if prev != h => {
                            return Err(Error::Input(format!(
                                "composition of {} and {} is not well defined",
                                x.name(1, rf),
                                x.name(1, rg)
                            )))
                        }
                        _ => result = Some(h),
                    }
                    if ef == rf && x.face(2, sigma, 0) == rg {
                        witnesses.entry((f, g)).or_insert(sigma);
                    }
                }
            }
            let h = result.ok_or_else(|| {
                Error::Input(format!(
                    "no composite of {} and {}",
                    x.name(1, rf),
                    x.name(1, rg)
                ))
            })?;
            composite.insert((f, g), h);
        }
    }
    let morphisms = representatives
        .iter()
        .map(|&e| {
            let (s, t) = x.endpoints(e);
            Morphism {
                id: x.name(1, e).to_string(),
                src: s,
                tgt: t,
            }
        })
        .collect();
    let identities = (0..x.len(0)).map(|v| class_of_edge[x.degen(0, v, 0)]).collect();
    let category = FinCategory::from_parts(x.names(0).to_vec(), morphisms, identities, |g, f| {
        composite.get(&(f, g)).copied()
    });
    if let Some(v) = category.validate().first() {
        return Err(Error::Input(format!("homotopy category fails an axiom: {v}")));
    }
    Ok(HoCategory {
        category,
        class_of_edge,
        representatives,
        witnesses,
    })
}

pub fn is_isomorphism_1simplex(x: &SSet, f: usize) -> Result<bool> {
    let ho = homotopy_category(x)?;
    Ok(ho.category.is_isomorphism(ho.class(f)))
}

/// The unit `X → N(hX)`: each simplex goes to the chain of classes of its
/// spine. Returns the nerve and the map.
pub fn unit_map(x: &SSet, ho: &HoCategory) -> Result<(SSet, SimplicialMap)> {
    let nerve = SSet::nerve(&ho.category, x.truncation());
    let mut levels = vec![(0..x.len(0)).collect::<Vec<_>>()];
    for n in 1..=x.truncation() {
        let by_name: HashMap<&str, usize> =
            (0..nerve.len(n)).map(|s| (nerve.name(n, s), s)).collect();
        let mut level = Vec::with_capacity(x.len(n));
        for s in 0..x.len(n) {
            let name = (1..=n)
                .map(|i| ho.category.morphism_id(ho.class(x.act(&[i - 1, i], n, s))))
                .collect::<Vec<_>>()
                .join("|");
            level.push(*by_name.get(name.as_str()).ok_or_else(|| Error::UnknownId(name.clone()))?);
        }
        levels.push(level);
    }
    let map = SimplicialMap { levels };
    if let Some(e) = map.validate(x, &nerve).first() {
        return Err(Error::Input(format!("unit is not simplicial: {e}")));
    }
    Ok((nerve, map))
}

/// `X^K` up to level `d_out`: `n`-simplices are maps `K × Δⁿ → X`. Levels
/// above `min(trunc K, trunc X)` of the products are not enumerated, so the
/// result is exact when `X` is coskeletal from there on (nerves are
/// 2-coskeletal).
pub fn exponential(x: &SSet, k: &SSet, d_out: usize, budget: usize) -> Result<SSet> {
    function_complex(x, k, d_out, budget, &|_, _, _| None)
}

/// The fiber of `A^{Δ¹} → A × A` over `(from, to)`.
pub fn mapping_space(a: &SSet, from: usize, to: usize, d_out: usize, budget: usize) -> Result<SSet> {
    if from >= a.len(0) || to >= a.len(0) {
        return Err(Error::Parameter("mapping space endpoints must be vertices".into()));
    }
    let t = a.truncation();
    let interval = SSet::standard_simplex(1, t);
    let ends: Vec<Vec<Option<usize>>> = (0..=t)
        .map(|m| {
            (0..interval.len(m))
                .map(|s| {
                    let name = interval.name(m, s);
                    if name.chars().all(|c| c == '0') {
                        Some(a.constant(from, m))
                    } else if name.chars().all(|c| c == '1') {
                        Some(a.constant(to, m))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    function_complex(a, &interval, d_out, budget, &|m, ks, _| ends[m][ks])
}

type Fix<'a> = dyn Fn(usize, usize, usize) -> Option<usize> + 'a;

fn function_complex(x: &SSet, k: &SSet, d_out: usize, budget: usize, fix: &Fix) -> Result<SSet> {
    let t = k.truncation().min(x.truncation());
    let k = k.truncate(t);
    let simplices: Vec<SSet> = (0..=d_out).map(|n| SSet::standard_simplex(n, t)).collect();
    let products: Vec<SSet> = simplices.iter().map(|d| SSet::product(&k, d)).collect();
    let theta_index: Vec<Vec<HashMap<Vec<usize>, usize>>> = (0..=d_out)
        .map(|n| {
            (0..=t)
                .map(|m| monotone_maps(m, n).into_iter().enumerate().map(|(i, f)| (f, i)).collect())
                .collect()
        })
        .collect();
    let theta_of: Vec<Vec<Vec<Vec<usize>>>> =
        (0..=d_out).map(|n| (0..=t).map(|m| monotone_maps(m, n)).collect()).collect();
    let mut levels: Vec<Vec<SimplicialMap>> = Vec::new();
    let mut total = 0usize;
    for n in 0..=d_out {
        let p = &products[n];
        let width = |m: usize| simplices[n].len(m);
        let forced: Vec<Vec<Option<usize>>> = (0..=t)
            .map(|m| (0..p.len(m)).map(|s| fix(m, s / width(m), s % width(m))).collect())
            .collect();
        let maps = enumerate_maps_fixing(p, x, &forced, budget.saturating_sub(total)).map_err(|e| match e {
            Error::Budget { limit, .. } => {
                Error::budget("budget", budget.max(limit), format!("enumerating level {n} of a function complex"))
            }
            other => other,
        })?;
        total += maps.len();
        levels.push(maps);
    }
    // precompose with K × θ for a monotone θ: [n'] → [n]
    let precompose = |phi: &SimplicialMap, n: usize, n2: usize, theta: &dyn Fn(usize) -> usize| -> SimplicialMap {
        SimplicialMap {
            levels: (0..=t)
                .map(|m| {
                    let w2 = simplices[n2].len(m);
                    let w = simplices[n].len(m);
                    (0..products[n2].len(m))
                        .map(|s| {
                            let (ks, ts) = (s / w2, s % w2);
                            let moved: Vec<usize> = theta_of[n2][m][ts].iter().map(|&v| theta(v)).collect();
                            phi.at(m, ks * w + theta_index[n][m][&moved])
                        })
                        .collect()
                })
                .collect(),
        }
    };
    let maximal: Vec<Vec<(usize, usize)>> = products.iter().map(maximal_simplices).collect();
    SSet::from_keyed(
        d_out,
        levels,
        |n, phi, i| precompose(phi, n, n - 1, &|v| if v < i { v } else { v + 1 }),
        |n, phi, j| precompose(phi, n, n + 1, &|v| if v <= j { v } else { v - 1 }),
        |n, phi| {
            let parts: Vec<&str> = maximal[n].iter().map(|&(m, s)| x.name(m, phi.at(m, s))).collect();
            if parts.len() == 1 {
                parts[0].to_string()
            } else {
                format!("<{}>", parts.join(","))
            }
        },
    )
}

/// Non-degenerate simplices that are not a face of another non-degenerate
/// simplex, by dimension then id.
fn maximal_simplices(x: &SSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 0..=x.truncation() {
        let mut is_face = vec![false; x.len(n)];
        if n < x.truncation() {
            for s in x.nondegenerate(n + 1) {
                for &f in x.faces_of(n + 1, s) {
                    is_face[f] = true;
                }
            }
        }
        for s in x.nondegenerate(n) {
            if !is_face[s] {
                out.push((n, s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lifting::is_kan;

    fn cosk_parallel() -> SSet {
        SSet::graph_coskeleton(&["x", "z"], &[("f", "x", "z"), ("g", "x", "z")], 3).unwrap()
    }

    #[test]
    fn homotopies_in_nerves_are_equalities() {
        for fx in fixtures::all_fixtures() {
            let x = SSet::nerve(&fx.category, 3);
            for f in 0..x.len(1) {
                for g in 0..x.len(1) {
                    if x.endpoints(f) == x.endpoints(g) {
                        assert_eq!(homotopic(&x, f, g).unwrap(), f == g);
                    }
                }
            }
        }
    }

    #[test]
    fn all_four_forms_appear_together() {
        let x = cosk_parallel();
        assert!(x.validate().is_empty());
        assert!(is_quasi_category(&x, 3).unwrap().holds);
        let (f, g) = (x.find(1, "f").unwrap(), x.find(1, "g").unwrap());
        assert_eq!(homotopy_forms(&x, f, g).unwrap(), [true; 4]);
        assert_eq!(homotopy_forms(&x, f, f).unwrap(), [true; 4]);
        let id = x.find(1, "id_x").unwrap();
        assert!(homotopy_forms(&x, f, id).is_err());
        let ho = homotopy_category(&x).unwrap();
        assert_eq!(ho.class(f), ho.class(g));
        assert_eq!(ho.category.num_morphisms(), 3);
        assert!(!is_isomorphism_1simplex(&x, f).unwrap());
    }

    #[test]
    fn homotopy_category_of_nerve_is_the_category() {
        for fx in fixtures::all_fixtures() {
            let x = SSet::nerve(&fx.category, 3);
            let ho = homotopy_category(&x).unwrap();
            assert_eq!(ho.category, fx.category, "{}", fx.name);
            let (n, u) = unit_map(&x, &ho).unwrap();
            assert!(u.validate(&x, &n).is_empty());
        }
    }

    #[test]
    fn homotopy_category_needs_truncation_and_fillers() {
        let x = SSet::nerve(&FinCategory::ordinal(2), 2);
        assert!(matches!(homotopy_category(&x), Err(Error::Truncation(_))));
        // one vertex with a loop: its inner horn has no filler
        let b = SSet::boundary(1, 3);
        let loop_ = SSet::pushout(
            &b,
            &SSet::standard_simplex(0, 3),
            &SSet::standard_simplex(1, 3),
            &SimplicialMap::to_point(&b),
            &crate::lifting::inclusion_by_name(&b, &SSet::standard_simplex(1, 3)).unwrap(),
        )
        .unwrap();
        assert_eq!(loop_.nondegenerate(1).len(), 1);
        assert!(!is_quasi_category(&loop_, 3).unwrap().holds);
        assert!(matches!(homotopy_category(&loop_), Err(Error::Input(_))));
    }

    #[test]
    fn two_vertex_circle_is_the_nerve_of_a_parallel_pair() {
        let a = SSet::boundary(1, 3);
        let pt = SSet::standard_simplex(0, 3);
        let f = SimplicialMap::to_point(&a);
        let c = SSet::ho_pushout(&a, &pt, &pt, &f, &f).unwrap();
        let ho = homotopy_category(&c).unwrap();
        assert_eq!(ho.category.num_morphisms(), 4);
        assert!(!ho.category.is_groupoid());
        assert!(!is_kan(&c, 3).unwrap().holds);
    }

    #[test]
    fn isomorphisms() {
        let x = SSet::nerve(&FinCategory::ordinal(1), 3);
        let arrow = x.find(1, "0->1").unwrap();
        assert!(!is_isomorphism_1simplex(&x, arrow).unwrap());
        assert!(is_isomorphism_1simplex(&x, x.degen(0, 0, 0)).unwrap());
        for fx in [fixtures::free_iso(), fixtures::cyclic2()] {
            let x = SSet::nerve(&fx.category, 3);
            for e in 0..x.len(1) {
                assert!(is_isomorphism_1simplex(&x, e).unwrap());
            }
        }
    }

    #[test]
    fn joyal_criterion_on_fixtures() {
        let mut family: Vec<SSet> = fixtures::all_fixtures()
            .iter()
            .map(|fx| SSet::nerve(&fx.category, 3))
            .collect();
        family.push(cosk_parallel());
        family.push(SSet::graph_coskeleton(&["x", "z"], &[("f", "x", "z"), ("g", "z", "x")], 3).unwrap());
        for x in &family {
            let ho = homotopy_category(x).unwrap();
            assert_eq!(is_kan(x, 3).unwrap().holds, ho.category.is_groupoid());
        }
    }

    #[test]
    fn exponential_by_a_point() {
        let x = SSet::nerve(&fixtures::span().category, 3);
        let e = exponential(&x, &SSet::standard_simplex(0, 3), 3, 100_000).unwrap();
        assert!(e.validate().is_empty());
        assert!(e.find_isomorphism(&x).is_some());
    }

    #[test]
    fn mapping_spaces_of_nerves_are_discrete() {
        let fx = fixtures::commutative_square();
        let c = &fx.category;
        let x = SSet::nerve(c, 3);
        for a in 0..c.num_objects() {
            for b in 0..c.num_objects() {
                let m = mapping_space(&x, a, b, 2, 100_000).unwrap();
                assert!(m.validate().is_empty());
                assert_eq!(m.len(0), c.hom(a, b).len());
                assert!(m.nondegenerate(1).is_empty());
            }
        }
        let m = mapping_space(&x, 0, 3, 2, 100_000).unwrap();
        assert_eq!(m.names(0), ["a->d"]);
    }

    #[test]
    fn mapping_space_of_a_kan_fixture_is_kan() {
        let x = SSet::nerve(&fixtures::cyclic2().category, 3);
        let m = mapping_space(&x, 0, 0, 3, 100_000).unwrap();
        assert_eq!(m.len(0), 2);
        assert!(is_kan(&m, 2).unwrap().holds);
    }

    #[test]
    fn budget_is_reported() {
        let x = SSet::nerve(&fixtures::commutative_square().category, 3);
        let err = exponential(&x, &SSet::standard_simplex(1, 3), 2, 5).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn homotopy_is_an_equivalence_relation() {
        for x in [cosk_parallel(), SSet::nerve(&fixtures::free_iso().category, 3)] {
            let ne = x.len(1);
            let rel = |f: usize, g: usize| x.endpoints(f) == x.endpoints(g) && homotopic(&x, f, g).unwrap();
            for f in 0..ne {
                assert!(rel(f, f));
                for g in 0..ne {
                    assert_eq!(rel(f, g), rel(g, f));
                    for h in 0..ne {
                        if rel(f, g) && rel(g, h) {
                            assert!(rel(f, h));
                        }
                    }
                }
            }
        }
    }
}
