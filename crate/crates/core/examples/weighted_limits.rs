//! Weighted limits and colimits of a presheaf on the span.

use hokit::fixtures;
use hokit::weighted::{weighted_colimit, weighted_limit, Presheaf, Variance};

fn main() -> hokit::error::Result<()> {
    let c = fixtures::span().category;
    let x = Presheaf::random(&c, Variance::Covariant, 2, 7).coproduct(&Presheaf::terminal(&c, Variance::Covariant))?;
    println!("diagram sizes {:?}", x.sets.iter().map(Vec::len).collect::<Vec<_>>());

    let lim = weighted_limit(&Presheaf::terminal(&c, Variance::Covariant), &x)?;
    let colim = weighted_colimit(&Presheaf::terminal(&c, Variance::Contravariant), &x)?;
    println!("limit: {} elements, colimit: {} elements", lim.len(), colim.len());

    // weighting by a representable evaluates the diagram
    for d in 0..c.num_objects() {
        let rep = Presheaf::representable(&c, d, Variance::Covariant);
        println!("{{{}}}-weighted limit at {}: {}", d, c.object_id(d), weighted_limit(&rep, &x)?.len());
    }
    Ok(())
}
