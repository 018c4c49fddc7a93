//! Runs `linquo repro <case> --json` for every acceptance criterion and
//! prints one PASS/FAIL line per criterion. A criterion passes when every
//! check of its case passes within the time limit.

use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::Value;

/// (criterion, case, time limit in seconds)
const CRITERIA: [(usize, &str, u64); 9] = [
    (1, "istanbul", 1),
    (2, "pentagon-powers", 5),
    (3, "fig2", 30),
    (4, "fig4", 30),
    (5, "gamma7", 60),
    (6, "cdcc6", 60),
    (7, "expansion", 60),
    (8, "thm64-c5", 120),
    (9, "properties", 600),
];

fn run_case(case: &str) -> Result<(Value, u128), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_linquo"))
        .args(["repro", case, "--json"])
        .output()
        .map_err(|e| format!("could not run linquo: {e}"))?;
    let wall_ms = start.elapsed().as_millis();
    let reports: Value = serde_json::from_slice(&out.stdout)
        .map_err(|e| format!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stderr)))?;
    let report = reports
        .as_array()
        .and_then(|a| a.first())
        .cloned()
        .ok_or("empty report")?;
    let expected_code = if report["pass"].as_bool() == Some(true) {
        0
    } else {
        1
    };
    if out.status.code() != Some(expected_code) {
        return Err(format!(
            "exit status {:?} disagrees with the report",
            out.status.code()
        ));
    }
    Ok((report, wall_ms))
}

fn main() -> ExitCode {
    let mut all = true;
    for (criterion, case, limit_s) in CRITERIA {
        let (pass, notes) = match run_case(case) {
            Err(e) => (false, vec![e]),
            Ok((report, wall_ms)) => {
                let elapsed = report["elapsed_ms"].as_u64().unwrap_or(u64::MAX);
                let mut notes: Vec<String> = report["checks"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .filter(|c| c["pass"].as_bool() != Some(true))
                    .map(|c| {
                        format!(
                            "{}: {}",
                            c["name"].as_str().unwrap_or("?"),
                            c["detail"].as_str().unwrap_or("")
                        )
                    })
                    .collect();
                let in_time = elapsed <= limit_s * 1000;
                if !in_time {
                    notes.push(format!("took {elapsed} ms, limit {limit_s} s"));
                }
                let checks = report["checks"].as_array().map_or(0, Vec::len);
                notes.insert(
                    0,
                    format!("{checks} checks, {elapsed} ms compute, {wall_ms} ms wall"),
                );
                (report["pass"].as_bool() == Some(true) && in_time, notes)
            }
        };
        all &= pass;
        println!(
            "criterion {criterion} ({case}): {}",
            if pass { "PASS" } else { "FAIL" }
        );
        for note in notes {
            println!("    {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
