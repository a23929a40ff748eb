//! Small named categories with weak-equivalence markings.
//!
//! These are the shapes every module is exercised on; the CLI exposes them
//! as `builtin:<name>`.

use crate::fincat::{FinCategory, WeakEquivalences};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub category: FinCategory,
    pub weq: WeakEquivalences,
}

impl Fixture {
    fn new(name: &'static str, category: FinCategory, marked: &[&str]) -> Fixture {
        let weq = WeakEquivalences::from_ids(&category, marked).expect("fixture ids");
        Fixture {
            name: name.to_string(),
            category,
            weq,
        }
    }

    fn all_marked(name: &'static str, category: FinCategory) -> Fixture {
        let weq = WeakEquivalences::all(&category);
        Fixture {
            name: name.to_string(),
            category,
            weq,
        }
    }
}

/// `[n]` with only identities marked.
pub fn ordinal(n: usize) -> Fixture {
    let mut fx = Fixture::new("ordinal", FinCategory::ordinal(n), &[]);
    fx.name = format!("ordinal{n}");
    fx
}

/// `[1]` with its arrow marked; its fractions category is the free-living
/// isomorphism.
pub fn walking_arrow() -> Fixture {
    Fixture::all_marked("walking-arrow", FinCategory::ordinal(1))
}

/// `b ←s a →f c` with `s` marked.
pub fn span() -> Fixture {
    let c = FinCategory::generated_by_functions(
        &[("a", 1), ("b", 1), ("c", 1)],
        &[("s", "a", "b", vec![0]), ("f", "a", "c", vec![0])],
    )
    .expect("span");
    Fixture::new("span", c, &["s"])
}

/// `b →s d ←t c` with `s` marked.
pub fn cospan() -> Fixture {
    let c = FinCategory::generated_by_functions(
        &[("b", 1), ("c", 1), ("d", 1)],
        &[("s", "b", "d", vec![0]), ("t", "c", "d", vec![0])],
    )
    .expect("cospan");
    Fixture::new("cospan", c, &["s"])
}

/// The commuting square poset `a → b → d`, `a → c → d`, with `a → b`
/// marked.
pub fn commutative_square() -> Fixture {
    let c = FinCategory::poset(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
    .expect("square");
    Fixture::new("square", c, &["a->b"])
}

/// Two objects with mutually inverse arrows `u`, `v`; everything marked.
pub fn free_iso() -> Fixture {
    let c = FinCategory::generated_by_functions(
        &[("a", 1), ("b", 1)],
        &[("u", "a", "b", vec![0]), ("v", "b", "a", vec![0])],
    )
    .expect("free iso");
    Fixture::all_marked("free-iso", c)
}

/// The group of order two as a one-object category; everything marked.
pub fn cyclic2() -> Fixture {
    let c = FinCategory::generated_by_functions(&[("*", 2)], &[("g", "*", "*", vec![1, 0])])
        .expect("Z/2");
    Fixture::all_marked("cyclic2", c)
}

/// `a ⇉ b`; everything marked. Its fractions category has infinite hom
/// sets, so closure truncates.
pub fn parallel_pair() -> Fixture {
    let c = FinCategory::generated_by_functions(
        &[("a", 1), ("b", 2)],
        &[("f", "a", "b", vec![0]), ("g", "a", "b", vec![1])],
    )
    .expect("parallel pair");
    Fixture::all_marked("parallel-pair", c)
}

/// Two discrete objects.
pub fn discrete2() -> Fixture {
    Fixture::new("discrete2", FinCategory::discrete(&["x", "y"]), &[])
}

/// Objects `a`, `b` with inverse arrows `u`, `v` and a non-invertible
/// idempotent `e` on `b`.
pub fn iso_with_idempotent() -> FinCategory {
    FinCategory::generated_by_functions(
        &[("a", 2), ("b", 2)],
        &[
            ("u", "a", "b", vec![0, 1]),
            ("v", "b", "a", vec![0, 1]),
            ("e", "b", "b", vec![0, 0]),
        ],
    )
    .expect("iso with idempotent")
}

/// Every fixture, in a fixed order.
pub fn all_fixtures() -> Vec<Fixture> {
    vec![
        ordinal(1),
        ordinal(2),
        walking_arrow(),
        span(),
        cospan(),
        commutative_square(),
        free_iso(),
        cyclic2(),
        parallel_pair(),
        discrete2(),
    ]
}

/// Looks a fixture up by name; `ordinalN` is accepted for any `N`.
pub fn by_name(name: &str) -> Option<Fixture> {
    if let Some(n) = name.strip_prefix("ordinal").and_then(|s| s.parse().ok()) {
        return Some(ordinal(n));
    }
    all_fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_is_a_category_with_wide_weq() {
        for fx in all_fixtures() {
            assert!(fx.category.validate().is_empty(), "{}", fx.name);
            assert!(fx.weq.is_subcategory(&fx.category), "{}", fx.name);
        }
        assert!(iso_with_idempotent().is_valid());
    }

    #[test]
    fn fixture_sizes() {
        assert_eq!(span().category.num_morphisms(), 5);
        assert_eq!(commutative_square().category.num_morphisms(), 9);
        assert_eq!(free_iso().category.num_morphisms(), 4);
        assert_eq!(cyclic2().category.num_morphisms(), 2);
        assert_eq!(parallel_pair().category.num_morphisms(), 4);
        assert_eq!(iso_with_idempotent().num_morphisms(), 8);
    }
}
