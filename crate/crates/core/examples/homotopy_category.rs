//! Homotopy category and a mapping space of a quasi-category.

use hokit::fixtures;
use hokit::quasicat::{homotopy_category, mapping_space};
use hokit::sset::SSet;

fn main() -> hokit::error::Result<()> {
    let x = SSet::nerve(&fixtures::commutative_square().category, 3);
    let ho = homotopy_category(&x)?;
    let c = &ho.category;
    println!("{} objects, {} morphisms", c.num_objects(), c.num_morphisms());
    for m in c.non_identity_morphisms() {
        println!("  {}: {} -> {}", c.morphism_id(m), c.object_id(c.src(m)), c.object_id(c.tgt(m)));
    }

    let a = x.find(0, "a").expect("vertex a");
    let d = x.find(0, "d").expect("vertex d");
    let m = mapping_space(&x, a, d, 1, 100_000)?;
    println!("Map(a, d): levels {:?}, {} component(s)", m.level_sizes(), m.num_components());
    Ok(())
}
