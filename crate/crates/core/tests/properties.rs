//! Invariants over randomly chosen inputs.

use hokit::document::{self, Loaded};
use hokit::fincat::{small_categories, FinCategory, WeakEquivalences};
use hokit::fixtures;
use hokit::fractions::{build_fractions, normalize, ZigZag};
use hokit::lifting::{is_kan, is_quasi_category, solve_sets, SetMap};
use hokit::sset::SSet;
use hokit::weighted::{weighted_colimit, weighted_limit, Presheaf, Variance};
use proptest::prelude::*;

fn small() -> &'static [FinCategory] {
    use std::sync::OnceLock;
    static CATS: OnceLock<Vec<FinCategory>> = OnceLock::new();
    CATS.get_or_init(|| small_categories(4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nerves_of_small_categories(i in 0usize..70) {
        let c = &small()[i % small().len()];
        let x = SSet::nerve(c, 3);
        prop_assert!(x.validate().is_empty());
        let qc = is_quasi_category(&x, 3).unwrap();
        prop_assert!(qc.holds && qc.unique);
        prop_assert_eq!(is_kan(&x, 3).unwrap().holds, c.is_groupoid());
    }

    #[test]
    fn sset_documents_round_trip(i in 0usize..70, d in 0usize..3) {
        let x = SSet::nerve(&small()[i % small().len()], d);
        let text = document::sset_document(&x).to_json();
        match document::parse(&text).unwrap() {
            Loaded::SSet(y) => prop_assert!(y.same_tables(&x)),
            other => prop_assert!(false, "loaded {:?}", other.kind()),
        }
    }

    #[test]
    fn category_documents_round_trip(i in 0usize..70) {
        let c = &small()[i % small().len()];
        let text = document::category_document(c, None).to_json();
        match document::parse(&text).unwrap() {
            Loaded::Category(fx) => prop_assert!(fx.category.same_up_to_order(c)),
            other => prop_assert!(false, "loaded {:?}", other.kind()),
        }
    }

    #[test]
    fn fraction_composition_is_associative(which in 0usize..10, picks in proptest::collection::vec(0usize..64, 3)) {
        let fx = &fixtures::all_fixtures()[which];
        let f = build_fractions(&fx.category, &fx.weq, 4).unwrap();
        prop_assume!(f.is_complete());
        let n = f.classes().len();
        let a = picks[0] % n;
        let src_b: Vec<usize> = (0..n).filter(|&k| f.classes()[k].src == f.classes()[a].tgt).collect();
        let b = src_b[picks[1] % src_b.len()];
        let src_c: Vec<usize> = (0..n).filter(|&k| f.classes()[k].src == f.classes()[b].tgt).collect();
        let c = src_c[picks[2] % src_c.len()];
        let left = f.compose(f.compose(a, b).unwrap(), c);
        let right = f.compose(a, f.compose(b, c).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normalizing_keeps_the_class(which in 0usize..10, picks in proptest::collection::vec(0usize..64, 0..4)) {
        let fx = &fixtures::all_fixtures()[which];
        let c = &fx.category;
        let f = build_fractions(c, &fx.weq, 4).unwrap();
        prop_assume!(f.is_complete());
        // a random walk of letters from object 0
        let mut text = Vec::new();
        let mut at = 0usize;
        for p in picks {
            let mut moves: Vec<(String, usize)> = c
                .non_identity_morphisms()
                .filter(|&m| c.src(m) == at)
                .map(|m| (c.morphism_id(m).to_string(), c.tgt(m)))
                .collect();
            moves.extend(
                fx.weq
                    .members()
                    .filter(|&m| !c.is_identity(m) && c.tgt(m) == at)
                    .map(|m| (format!("{}^-1", c.morphism_id(m)), c.src(m))),
            );
            if moves.is_empty() {
                break;
            }
            let (l, next) = moves[p % moves.len()].clone();
            text.push(l);
            at = next;
        }
        let word = if text.is_empty() {
            ZigZag::empty(0)
        } else {
            ZigZag::parse(c, &fx.weq, &text.join(";")).unwrap()
        };
        let k = f.class_of(&word);
        prop_assume!(k.is_some());
        prop_assert_eq!(f.class_of(&normalize(c, &word)), k);
    }

    #[test]
    fn monos_lift_against_epis(
        a in 1usize..4, b in 1usize..4, x in 1usize..4,
        iv in proptest::collection::vec(0usize..16, 3),
        pv in proptest::collection::vec(0usize..16, 3),
        uv in proptest::collection::vec(0usize..16, 3),
    ) {
        // i: a -> b mono, p: y -> x epi, u: a -> y, v: b -> x with p u = v i
        prop_assume!(a <= b);
        let monos: Vec<SetMap> = SetMap::all(a, b).into_iter().filter(SetMap::is_mono).collect();
        let i = monos[iv[0] % monos.len()].clone();
        let y = x + pv[1] % 2;
        let epis: Vec<SetMap> = SetMap::all(y, x).into_iter().filter(SetMap::is_epi).collect();
        let p = epis[pv[0] % epis.len()].clone();
        let us = SetMap::all(a, y);
        let u = us[uv[0] % us.len()].clone();
        // extend p u along i, picking any value off the image of i
        let mut values = vec![0usize; b];
        for (k, &t) in i.values.iter().enumerate() {
            values[t] = p.values[u.values[k]];
        }
        for (t, v) in values.iter_mut().enumerate() {
            if !i.values.contains(&t) {
                *v = uv[(t + 1) % 3] % x;
            }
        }
        let v = SetMap { cod: x, values };
        let lift = solve_sets(&i, &u, &p, &v);
        prop_assert!(lift.is_some());
        let h = lift.unwrap();
        prop_assert_eq!(i.then(&h), u);
        prop_assert_eq!(h.then(&p), v);
    }

    #[test]
    fn yoneda_for_random_presheaves(which in 0usize..10, seed in 0u64..1000, contra in any::<bool>()) {
        let fx = &fixtures::all_fixtures()[which];
        let c = &fx.category;
        let variance = if contra { Variance::Contravariant } else { Variance::Covariant };
        let x = Presheaf::random(c, variance, 2, seed);
        for d in 0..c.num_objects() {
            let lim = weighted_limit(&Presheaf::representable(c, d, variance), &x).unwrap();
            prop_assert_eq!(lim.len(), x.size(d));
            let col = weighted_colimit(&Presheaf::representable(c, d, variance.flip()), &x).unwrap();
            prop_assert_eq!(col.len(), x.size(d));
        }
    }

    #[test]
    fn groupoid_localization(i in 0usize..70) {
        let c = &small()[i % small().len()];
        let f = build_fractions(c, &WeakEquivalences::all(c), 4).unwrap();
        prop_assume!(f.is_complete());
        prop_assert!(f.as_category().unwrap().is_groupoid());
    }
}
