//! Invert the marked leg of a span and print every hom-set of the
//! category of fractions, then extend a functor along the localization.

use hokit::fincat::enumerate_functors;
use hokit::fixtures;
use hokit::fractions::{build_fractions, check_universal_property, Extension};

fn main() -> hokit::error::Result<()> {
    let fx = fixtures::span();
    let c = &fx.category;
    let f = build_fractions(c, &fx.weq, 4)?;
    println!("status: {:?}, {} classes", f.status(), f.classes().len());
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            let reps: Vec<String> = f.hom(x, y).iter().map(|&k| f.class_name(k)).collect();
            println!("hom({}, {}) = {{{}}}", c.object_id(x), c.object_id(y), reps.join(", "));
        }
    }

    // functors into the free isomorphism either extend or name the culprit
    let target = fixtures::free_iso().category;
    for g in enumerate_functors(c, &target, 100)? {
        match check_universal_property(&f, &g, &target)? {
            Extension::Extends { .. } => println!("{:?} extends", g.morphism_map),
            Extension::NotInverting { morphism } => {
                println!("{:?} does not invert {}", g.morphism_map, c.morphism_id(morphism))
            }
        }
    }
    Ok(())
}
