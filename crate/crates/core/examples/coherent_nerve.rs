//! The homotopy coherent nerve of a Kan-enriched category is a
//! quasi-category; for a discrete one it is the ordinary nerve.

use hokit::coherent::coherent_nerve;
use hokit::fixtures;
use hokit::lifting::is_quasi_category;
use hokit::scat::SCat;
use hokit::sset::SSet;

fn main() -> hokit::error::Result<()> {
    let c = fixtures::span().category;
    let n = coherent_nerve(&SCat::from_category(&c, 2), 3)?;
    let iso = n.sset.find_isomorphism(&SSet::nerve(&c, 3)).is_some();
    println!("discrete span: levels {:?}, isomorphic to the nerve: {iso}", n.sset.level_sizes());

    let s = SCat::suspension(&SSet::nerve(&fixtures::free_iso().category, 2));
    let n = coherent_nerve(&s, 3)?;
    println!(
        "suspension of N(free-iso): levels {:?}, quasi-category: {}",
        n.sset.level_sizes(),
        is_quasi_category(&n.sset, 3)?.holds
    );
    Ok(())
}
