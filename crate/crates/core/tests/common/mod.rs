//! Shared helpers for the CLI golden script.

#![allow(dead_code)]

use std::path::PathBuf;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Commands of the golden script, one per non-empty, non-comment line.
pub fn script() -> Vec<String> {
    let text = std::fs::read_to_string(golden_dir().join("script.txt")).expect("golden script");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

/// Runs the whole script in-process with `--threads k` and returns the
/// transcript: each command, its exit code, stdout and stderr.
pub fn transcript(threads: usize) -> String {
    let mut out = String::new();
    for line in script() {
        let mut argv: Vec<String> = vec!["weylstat".into()];
        argv.extend(line.split_whitespace().map(String::from));
        argv.extend(["--threads".into(), threads.to_string()]);
        let (mut so, mut se) = (Vec::new(), Vec::new());
        let code = weylstat::cli::run(argv, &mut so, &mut se);
        out.push_str(&format!("$ weylstat {line}\n[exit {code}]\n"));
        out.push_str(&String::from_utf8(so).expect("utf-8 stdout"));
        out.push_str(&String::from_utf8(se).expect("utf-8 stderr"));
    }
    out
}
