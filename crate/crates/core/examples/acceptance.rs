//! Runs the acceptance battery and prints one line per criterion.

fn main() {
    let results = hokit::suite::run_all();
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    std::process::exit(i32::from(failed > 0));
}
