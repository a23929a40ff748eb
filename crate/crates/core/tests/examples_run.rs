//! Every example binary built alongside the tests runs to completion.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 13] = [
    "fractions",
    "nerves",
    "homotopy_category",
    "pushouts",
    "simplicial_categories",
    "hammocks",
    "free_resolution",
    "coherent_nerve",
    "weighted_limits",
    "reedy",
    "lifting",
    "documents",
    "acceptance",
];

fn example_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn examples_exit_cleanly() {
    let dir = example_dir();
    for name in EXAMPLES {
        let path = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        assert!(path.exists(), "example {name} was not built at {}", path.display());
        let out = Command::new(&path).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
