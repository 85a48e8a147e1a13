//! `farey contains`.

use farey_core::membership::{contains_with_cap, DEFAULT_ITERATION_CAP};
use farey_core::{format_word, FareySymbol, ProjectiveMatrix};
use serde_json::json;

pub fn run(
    f: &FareySymbol,
    matrix: &str,
    word: bool,
    cap: Option<u64>,
    json: bool,
) -> super::Outcome {
    let a: ProjectiveMatrix = matrix.parse().map_err(|e| format!("{e}"))?;
    let cert = contains_with_cap(f, &a, cap.unwrap_or(DEFAULT_ITERATION_CAP))
        .map_err(|e| e.to_string())?;
    if json {
        let mut out = json!({ "matrix": a, "member": cert.verdict });
        if word && cert.verdict {
            out["word"] = json!(format_word(&cert.word));
        }
        return Ok(super::pretty(out));
    }
    let answer = if cert.verdict { "yes" } else { "no" };
    if word && cert.verdict {
        Ok(format!("{answer}\n{}", format_word(&cert.word)))
    } else {
        Ok(answer.to_string())
    }
}
