//! Simplicial categories: suspensions, Kan-enrichment and homotopy
//! categories.

use hokit::fixtures;
use hokit::scat::SCat;
use hokit::sset::SSet;

fn main() -> hokit::error::Result<()> {
    let iso = SSet::nerve(&fixtures::free_iso().category, 2);
    let cases = [
        ("suspension of N(free-iso)", SCat::suspension(&iso)),
        ("suspension of the interval", SCat::suspension(&SSet::standard_simplex(1, 2))),
        ("discrete square", SCat::from_category(&fixtures::commutative_square().category, 2)),
    ];
    for (name, s) in &cases {
        let kan = s.is_kan_enriched(2)?;
        let ho = s.homotopy_category()?;
        println!(
            "{name}: {} objects, Kan-enriched {}, homotopy category has {} morphisms",
            s.num_objects(),
            kan.is_none(),
            ho.num_morphisms()
        );
        if let Some((x, y, w)) = kan {
            println!("  Map({x}, {y}) fails {w}");
        }
    }
    Ok(())
}
