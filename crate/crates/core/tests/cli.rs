use std::path::PathBuf;

use hokit::cli::{run, Outcome, EXIT_BUDGET, EXIT_INPUT, EXIT_OK, EXIT_PROPERTY};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn hokit(args: &[&str]) -> Outcome {
    let mut v = vec!["hokit".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    run(&v)
}

#[test]
fn qc_on_nerve_of_two() {
    let out = hokit(&["qc", "--nmax", "3", "builtin:ordinal2"]);
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.report.contains("quasi-category: yes; inner fillers unique: yes"), "{}", out.report);
}

#[test]
fn fractions_on_span_is_complete_with_hom_table() {
    let out = hokit(&["fractions", "--bound", "4", &fixture("span.json")]);
    assert_eq!(out.exit_code, EXIT_OK);
    let expected = "\
fractions of span (bound 4)
status: complete
zig-zags enumerated: 15
classes: 7
objects: a b c
hom(a, a): id_a
hom(a, b): s
hom(a, c): f
hom(b, a): s^-1
hom(b, b): id_b
hom(b, c): s^-1;f
hom(c, a): 
hom(c, b): 
hom(c, c): id_c
";
    assert_eq!(out.report, expected);
}

#[test]
fn validate_well_formed_documents() {
    for name in [
        "span.json",
        "square.json",
        "interval.json",
        "circle-span.json",
        "suspension-iso.json",
        "delta1.json",
        "arrow-diagram.json",
        "arrow-terminal.json",
        "arrow-coterminal.json",
        "simplex3-reedy.json",
        "arrow-reedy.json",
    ] {
        let out = hokit(&["validate", &fixture(name)]);
        assert_eq!(out.exit_code, EXIT_OK, "{name}: {}", out.report);
        assert!(out.report.ends_with("violations: none\n"), "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["fractions".into(), "builtin:square".into()],
        vec!["hocat".into(), "builtin:square".into()],
        vec!["resolve".into(), "builtin:square".into(), "--dim".into(), "2".into()],
        vec!["hammock".into(), "builtin:cospan".into(), "--from".into(), "b".into(), "--to".into(), "d".into()],
        vec!["cnerve".into(), fixture("suspension-iso.json")],
        vec!["wlim".into(), fixture("arrow-terminal.json"), fixture("arrow-diagram.json")],
        vec!["reedy".into(), "factor".into(), fixture("simplex3-reedy.json")],
    ];
    for args in cases {
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = hokit(&a);
        assert_eq!(first.exit_code, EXIT_OK, "{args:?}: {}", first.report);
        assert_eq!(first, hokit(&a), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(hokit(&["kan", "builtin:ordinal1"]).exit_code, EXIT_PROPERTY);
    assert_eq!(hokit(&["kan", "builtin:free-iso"]).exit_code, EXIT_OK);
    assert_eq!(hokit(&["qc", "builtin:nope"]).exit_code, EXIT_INPUT);
    assert_eq!(hokit(&["frobnicate"]).exit_code, EXIT_INPUT);
    assert_eq!(hokit(&["qc", "/no/such/file.json"]).exit_code, EXIT_INPUT);
    assert_eq!(hokit(&["resolve", "builtin:free-iso"]).exit_code, EXIT_BUDGET);
    assert_eq!(hokit(&["--help"]).exit_code, EXIT_OK);
}

#[test]
fn budget_errors_name_the_bound() {
    let out = hokit(&["fractions", "builtin:parallel-pair", "--budget", "10"]);
    assert_eq!(out.exit_code, EXIT_BUDGET);
    assert!(out.report.contains("bound `"), "{}", out.report);
    let out = hokit(&["fractions", "builtin:parallel-pair", "--bound", "3"]);
    assert_eq!(out.exit_code, EXIT_BUDGET);
    assert!(out.report.contains("`--bound` = 3"), "{}", out.report);
    let out = hokit(&["cnerve", "builtin:square", "--nmax", "3", "--budget", "5"]);
    assert_eq!(out.exit_code, EXIT_BUDGET, "{}", out.report);
    assert!(out.report.contains("bound `"), "{}", out.report);
}

#[test]
fn pushout_report() {
    let out = hokit(&["ho-pushout", &fixture("circle-span.json")]);
    assert_eq!(out.exit_code, EXIT_OK);
    let lines: Vec<&str> = out.report.lines().filter(|l| l.contains("edge-path group")).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].ends_with("trivial") && lines[1].ends_with("free of rank 1"), "{}", out.report);
}

#[test]
fn latching_and_matching_of_interval() {
    let lat = hokit(&["latching", &fixture("delta1.json"), "--at", "[1]"]);
    assert!(lat.report.contains("elements: 2"), "{}", lat.report);
    let mat = hokit(&["matching", &fixture("delta1.json"), "--at", "[1]"]);
    assert!(mat.report.contains("elements: 4"), "{}", mat.report);
    let none = hokit(&["latching", &fixture("arrow-diagram.json"), "--at", "1"]);
    assert_eq!(none.exit_code, EXIT_INPUT);
    let with = hokit(&["latching", &fixture("arrow-diagram.json"), "--at", "1", "--reedy", &fixture("arrow-reedy.json")]);
    assert!(with.report.contains("elements: 2"), "{}", with.report);
}

#[test]
fn every_subcommand_is_wired() {
    let iface = [
        "validate", "nerve", "fractions", "hammock", "qc", "kan", "hocat", "mapspace", "ho-pushout", "resolve",
        "cnerve", "wlim", "wcolim", "reedy", "latching", "matching", "suite",
    ];
    for cmd in iface {
        let out = hokit(&[cmd, "--help"]);
        assert_eq!(out.exit_code, EXIT_OK, "{cmd}");
    }
}

#[test]
fn nerve_emits_a_loadable_document() {
    let out = hokit(&["nerve", "builtin:span", "--dim", "2", "--emit"]);
    assert_eq!(out.exit_code, EXIT_OK);
    match hokit::document::parse(&out.report).unwrap() {
        hokit::document::Loaded::SSet(x) => assert_eq!(x.level_sizes(), vec![3, 5, 7]),
        other => panic!("{:?}", other.kind()),
    }
}

#[test]
fn fixture_directory_lookup() {
    std::env::set_var(hokit::document::FIXTURE_DIR_VAR, fixture(""));
    let out = hokit(&["validate", "square"]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.report);
}
