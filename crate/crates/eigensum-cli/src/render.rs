//! Artifact assembly: reproducibility headers, float formatting, output
//! routing. Artifacts must be byte-identical across reruns with equal
//! semantic arguments, so headers carry resolved arguments and never carry
//! paths of the artifacts themselves.

use crate::CliError;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::PathBuf;

/// The reproducibility header stamped into every artifact.
///
/// `args` holds the resolved semantic arguments of the subcommand: file
/// inputs appear as canonical graph6 strings, never as paths, and defaulted
/// values appear explicitly.
pub fn run_header(command: &str, args: Value, seed: u64) -> Value {
    json!({
        "tool": "eigensum",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "args": args,
        "seed": seed,
        "tolerances": {
            "off_target_per_vertex": eigensum::spectrum::OFF_TARGET_PER_VERTEX,
            "trace_tol_per_vertex": eigensum::spectrum::TRACE_TOL_PER_VERTEX,
            "energy_tol_per_vertex_sq": eigensum::spectrum::ENERGY_TOL_PER_VERTEX_SQ,
            "slack_floor": eigensum::spectrum::SLACK_FLOOR,
            "blowup_multiset_tol_per_unit": eigensum::verify::BLOWUP_MULTISET_TOL_PER_UNIT,
            "improve_eps": eigensum::search::IMPROVE_EPS,
        },
    })
}

/// A JSON artifact: the header plus named payload fields, pretty-printed.
/// Key order is serde_json's sorted map order, which is stable.
pub fn json_artifact(header: Value, payload: Vec<(&str, Value)>) -> String {
    let mut root = Map::new();
    root.insert("run".to_string(), header);
    for (key, value) in payload {
        root.insert(key.to_string(), value);
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("maps of finite numbers");
    text.push('\n');
    text
}

/// The header as `# ` comment lines for CSV artifacts.
pub fn csv_header(header: &Value) -> String {
    let mut lines = String::new();
    for key in ["tool", "version", "command", "args", "seed", "tolerances"] {
        let value = &header[key];
        let rendered = match value {
            Value::String(s) => s.clone(),
            other => serde_json::to_string(other).expect("finite header"),
        };
        lines.push_str(&format!("# {key}: {rendered}\n"));
    }
    lines
}

/// Nine-decimal fixed-point with trailing zeros trimmed; `-0` folds to `0`.
/// Used only in the human-facing text format, where full round-trip digits
/// would be noise.
pub fn fmt9(v: f64) -> String {
    let s = format!("{v:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Routes the finished artifact: to `--output` when given, else to stdout.
pub fn emit(artifact: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, artifact)
            .map_err(|e| CliError::new(format!("{}: {e}", path.display()))),
        None => {
            out.write_all(artifact.as_bytes())?;
            Ok(())
        }
    }
}
