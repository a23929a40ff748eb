//! Monomorphisms lift against epimorphisms of finite sets, and the class
//! of monos is closed under the usual operations.

use hokit::lifting::{pushout_sets, wfs_property_suite, SetMap};

fn main() {
    let report = wfs_property_suite(3);
    println!("{report:#?}");

    // pushing the inclusion 1 -> 2 along 1 -> 3 gives a mono 3 -> 4
    let i = SetMap { cod: 2, values: vec![0] };
    let f = SetMap { cod: 3, values: vec![2] };
    let (j, _) = pushout_sets(&i, &f);
    println!("pushout leg {:?} is mono: {}", j.values, j.is_mono());
}
