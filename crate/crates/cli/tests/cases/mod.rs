#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// A golden case: file stem and arguments.
pub const CASES: &[(&str, &[&str])] = &[
    ("corpus-list", &["corpus"]),
    ("corpus-sl4", &["corpus", "--corpus", "sl4"]),
    ("info-butterfly", &["info", "--corpus", "butterfly"]),
    ("info-sl4", &["info", "--corpus", "sl4"]),
    ("info-sl6", &["info", "--corpus", "sl6"]),
    ("info-sp-5", &["info", "--corpus", "sp", "--m", "5"]),
    ("info-sl-minors-3-5", &["info", "--corpus", "sl-minors", "--n", "3", "--m", "5"]),
    ("fan-butterfly", &["fan", "--corpus", "butterfly", "--check-oracle"]),
    ("fan-butterfly-json", &["fan", "--corpus", "butterfly", "--format", "json"]),
    ("fan-sl4", &["fan", "--corpus", "sl4", "--check-oracle"]),
    ("fan-sl6", &["fan", "--corpus", "sl6", "--check-oracle"]),
    ("fan-sp-4", &["fan", "--corpus", "sp", "--m", "4", "--check-oracle"]),
    ("fan-sl-minors-2-4", &["fan", "--corpus", "sl-minors", "--n", "2", "--m", "4"]),
    ("fan-sl-minors-3-5", &["fan", "--corpus", "sl-minors", "--n", "3", "--m", "5"]),
    ("fan-quadrant", &["fan", "--input", "tests/data/quadrant.json"]),
    ("walls-butterfly", &["walls", "--corpus", "butterfly"]),
    ("walls-sl4", &["walls", "--corpus", "sl4", "--check-oracle"]),
    ("walls-sl6", &["walls", "--corpus", "sl6", "--check-oracle"]),
    ("walls-sp-4", &["walls", "--corpus", "sp", "--m", "4", "--check-oracle"]),
    ("walls-sp-5", &["walls", "--corpus", "sp", "--m", "5", "--check-oracle"]),
    ("walls-sp-5-json", &["walls", "--corpus", "sp", "--m", "5", "--format", "json"]),
    ("walls-sl-minors-2-4", &["walls", "--corpus", "sl-minors", "--n", "2", "--m", "4", "--check-oracle"]),
    ("walls-sl-minors-3-5", &["walls", "--corpus", "sl-minors", "--n", "3", "--m", "5", "--check-oracle"]),
    ("chamber-butterfly", &["chamber", "--corpus", "butterfly", "--chi", "2,1", "--check-oracle"]),
    ("chamber-sl4", &["chamber", "--corpus", "sl4", "--chi", "20,3", "--check-oracle"]),
    ("chamber-sl6", &["chamber", "--corpus", "sl6", "--chi", "1,2,3", "--check-oracle"]),
    ("chamber-sp-4", &["chamber", "--corpus", "sp", "--m", "4", "--chi", "1,1,1,1", "--check-oracle"]),
    ("chamber-sp-5", &["chamber", "--corpus", "sp", "--m", "5", "--chi", "1,1,1,1,1"]),
    ("chamber-sp-5-json", &["chamber", "--corpus", "sp", "--m", "5", "--chi", "1/2,1/2,1/2,1/2,1/2", "--format", "json"]),
    ("chamber-sl-minors-2-4", &["chamber", "--corpus", "sl-minors", "--n", "2", "--m", "4", "--chi", "1,1,1,1"]),
    ("chamber-sl-minors-3-5", &["chamber", "--corpus", "sl-minors", "--n", "3", "--m", "5", "--chi", "1,1,1,1,1"]),
    ("two-maximal-butterfly", &["two-maximal", "--corpus", "butterfly", "--check-oracle"]),
    ("two-maximal-butterfly-json", &["two-maximal", "--corpus", "butterfly", "--format", "json"]),
    ("bunch-sl4", &["bunch", "--corpus", "sl4", "--chi", "20,3", "--check-oracle"]),
    ("bunch-sl4-json", &["bunch", "--corpus", "sl4", "--chi", "20,3", "--format", "json"]),
    ("check-sl4", &["check", "--corpus", "sl4", "--check-oracle"]),
    ("check-quadrant", &["check", "--input", "tests/data/quadrant.json", "--check-oracle"]),
];

/// Figures: file stem and arguments before `--svg PATH`.
pub const FIGURES: &[(&str, &[&str])] = &[
    ("butterfly", &["fan", "--corpus", "butterfly"]),
    ("quadrant", &["fan", "--input", "tests/data/quadrant.json"]),
    ("sl4", &["fan", "--corpus", "sl4"]),
    ("sl6-slice", &["fan", "--corpus", "sl6", "--slice", "1,1,1=1"]),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(name)
}

pub struct Run {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn gitq(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gitq"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("the binary runs");
    Run {
        status: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 output"),
    }
}

/// Writes the figure of a case to `dir` and returns its bytes.
pub fn figure(args: &[&str], dir: &Path, file: &str) -> Vec<u8> {
    let path = dir.join(file);
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().expect("utf-8 path").to_string();
    all.push("--svg");
    all.push(&p);
    let run = gitq(&all);
    assert_eq!(run.status, 0, "{args:?}: {}", run.stderr);
    std::fs::read(&path).expect("figure written")
}

pub fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gitq-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch directory");
    dir
}
