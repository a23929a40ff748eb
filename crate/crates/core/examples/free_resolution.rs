//! The free simplicial resolution of the commutative square and its
//! augmentation back onto the square.

use hokit::coherent::{augmentation, free_resolution, is_simplicial_computad};
use hokit::fixtures;

fn main() -> hokit::error::Result<()> {
    let c = fixtures::commutative_square().category;
    let r = free_resolution(&c, 2)?;
    let (a, d) = (c.object_index("a")?, c.object_index("d")?);
    let h = r.scat.hom(a, d);
    println!("Map(a, d) levels {:?}", h.level_sizes());
    for s in 0..h.len(1) {
        println!("  {}", h.name(1, s));
    }
    let computad = is_simplicial_computad(&r.scat.to_levelwise());
    println!("computad: {}", computad.holds);
    println!("augmentation bijective on components: {}", augmentation(&c, 2)?.bijective);
    Ok(())
}
