//! Gluing two points along two points: the strict pushout is a point, the
//! double mapping cylinder is a circle.

use hokit::sset::{SSet, SimplicialMap};

fn main() -> hokit::error::Result<()> {
    let two = SSet::boundary(1, 2);
    let pt = SSet::standard_simplex(0, 2);
    let collapse = SimplicialMap::to_point(&two);
    let strict = SSet::pushout(&two, &pt, &pt, &collapse, &collapse)?;
    let ho = SSet::ho_pushout(&two, &pt, &pt, &collapse, &collapse)?;
    for (name, x) in [("strict", &strict), ("homotopy", &ho)] {
        let g = x.edge_path_group(0)?;
        println!("{name:>8}: levels {:?}, pi1 {}", x.level_sizes(), g.recognize());
    }
    Ok(())
}
