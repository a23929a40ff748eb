//! One line per acceptance criterion, written straight to stderr so it
//! shows up in captured test output.

use std::io::Write;

use hokit::suite;

#[test]
fn acceptance_battery() {
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for n in 1..=suite::count() {
        let r = suite::run_criterion(n).unwrap();
        writeln!(err, "{r}").unwrap();
        if !r.passed {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
