//! Hammocks between two objects and how their components line up with
//! the classes of the category of fractions.

use hokit::fixtures;
use hokit::fractions::build_fractions;
use hokit::hammock::{enumerate, pi0_agreement};

fn main() -> hokit::error::Result<()> {
    let fx = fixtures::span();
    let c = &fx.category;
    let (a, c_obj) = (c.object_index("a")?, c.object_index("c")?);
    let mx = enumerate(c, &fx.weq, a, c_obj, 3, 1)?;
    println!("hammocks a -> c by width: {:?}", mx.counts());
    for h in mx.levels[0].iter().take(5) {
        println!("  {}", h.display(c));
    }
    let f = build_fractions(c, &fx.weq, 4)?;
    let report = pi0_agreement(&f, 3, 1)?;
    for h in &report.homs {
        println!("{} -> {}: {} components, {} classes", h.src, h.tgt, h.components, h.classes);
    }
    println!("agreement: {}, functorial: {}", report.holds, report.functorial);
    Ok(())
}
