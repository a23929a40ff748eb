//! Reedy factorizations in the simplex category and latching/matching
//! objects of simplicial sets.

use hokit::sset::SSet;
use hokit::weighted::{latching, matching, reedy_factorize, validate_reedy, Presheaf, ReedyStructure};

fn main() -> hokit::error::Result<()> {
    let r = ReedyStructure::simplex(3);
    println!("simplex category up to [3] is Reedy: {}", validate_reedy(&r).holds);
    let c = &r.base;
    let f = c.morphism_index("[3->2]0,1,1,2")?;
    let fac = reedy_factorize(&r, f)?;
    println!(
        "{} = {} o {}",
        c.morphism_id(f),
        c.morphism_id(fac.increasing),
        c.morphism_id(fac.decreasing)
    );

    for n in 0..=2 {
        let x = Presheaf::from_sset(&SSet::standard_simplex(n, 3), 3)?;
        let lat: Vec<usize> = (0..=3).map(|k| latching(&x, &r, k).map(|l| l.len())).collect::<Result<_, _>>()?;
        let mat: Vec<usize> = (0..=3).map(|k| matching(&x, &r, k).map(|l| l.len())).collect::<Result<_, _>>()?;
        println!("Δ{n}: latching {lat:?}, matching {mat:?}");
    }
    Ok(())
}
