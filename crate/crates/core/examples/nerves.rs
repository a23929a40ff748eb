//! Nerves of small categories are quasi-categories with unique inner
//! fillers; they are Kan exactly for groupoids.

use hokit::fixtures;
use hokit::lifting::{is_kan, is_quasi_category};
use hokit::sset::SSet;

fn main() -> hokit::error::Result<()> {
    for fx in fixtures::all_fixtures() {
        let x = SSet::nerve(&fx.category, 3);
        let qc = is_quasi_category(&x, 3)?;
        let kan = is_kan(&x, 3)?;
        print!("{:<14} levels {:?}  qc {} unique {}", fx.name, x.level_sizes(), qc.holds, qc.unique);
        match kan.witness {
            Some(w) => println!("  not Kan: {w}"),
            None => println!("  Kan"),
        }
    }
    Ok(())
}
