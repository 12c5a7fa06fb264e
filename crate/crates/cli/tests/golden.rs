//! Byte-for-byte comparison of the CLI's JSON output on fixed inputs.
//! Set `QUADFACT_UPDATE_GOLDEN=1` to rewrite the expected files.

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs every `*.args` file (one argument per line) and compares stdout
/// with the matching `*.json`.
pub fn check_goldens() -> Result<String, String> {
    let update = std::env::var_os("QUADFACT_UPDATE_GOLDEN").is_some();
    let mut inputs: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "args"))
        .collect();
    inputs.sort();
    let mut failures = Vec::new();
    for input in &inputs {
        let text = std::fs::read_to_string(input).map_err(|e| e.to_string())?;
        let args: Vec<&str> = text.lines().collect();
        let out = Command::new(env!("CARGO_BIN_EXE_quadfact"))
            .args(&args)
            .env_remove("QUADFACT_BUDGET")
            .output()
            .map_err(|e| e.to_string())?;
        let expected_path = input.with_extension("json");
        let name = input.file_stem().unwrap().to_string_lossy().to_string();
        if !out.status.success() {
            failures.push(format!("{name}: exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
            continue;
        }
        if update {
            std::fs::write(&expected_path, &out.stdout).map_err(|e| e.to_string())?;
        }
        match std::fs::read(&expected_path) {
            Ok(expected) if expected == out.stdout => {}
            Ok(_) => failures.push(format!("{name}: output differs")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(format!("{} golden files identical", inputs.len()))
    } else {
        Err(failures.join("; "))
    }
}

#[test]
fn golden_files() {
    let summary = check_goldens().unwrap();
    assert!(summary.starts_with("12 "), "{summary}");
}
