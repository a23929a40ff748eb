//! Round-trip a category through the JSON document format and load a
//! document written by hand.

use hokit::document::{self, Loaded};
use hokit::fixtures;

fn main() -> hokit::error::Result<()> {
    let fx = fixtures::cospan();
    let text = document::category_document(&fx.category, Some(&fx.weq)).to_json();
    println!("{text}");

    let doc = r#"{"kind": "presheaf", "payload": {"simplicial": {"boundary": 2, "dim": 2}}}"#;
    if let Loaded::Presheaf(p) = document::parse(doc)? {
        println!("boundary of Δ2 as a presheaf: {:?}", p.presheaf.sets);
    }
    Ok(())
}
