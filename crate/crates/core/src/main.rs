fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = hokit::cli::run(&args);
    if outcome.exit_code >= hokit::cli::EXIT_INPUT {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    std::process::exit(outcome.exit_code);
}
