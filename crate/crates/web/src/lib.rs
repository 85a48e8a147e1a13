//! WebAssembly bindings for the static demo page in `www/`.

use farey_core::{
    construct_symbol, contains, format_word, render_svg, FareySymbol, GroupSpec, ProjectiveMatrix,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Browsers get a tighter edge budget than the CLI.
const MAX_EDGES: usize = 2000;

/// Accepts either a group spec (`gamma0:11`) or a bare symbol.
fn load(input: &str) -> Result<FareySymbol, String> {
    let input = input.trim();
    if input.starts_with('[') {
        return input.parse().map_err(|e| format!("{e}"));
    }
    match input.parse::<GroupSpec>().map_err(|e| e.to_string())? {
        GroupSpec::Symbol(f) => Ok(f),
        spec => construct_symbol(&spec, MAX_EDGES).map_err(|e| e.to_string()),
    }
}

/// Symbol text and the polygon as SVG.
#[wasm_bindgen]
pub fn domain(group: &str) -> Result<String, String> {
    let f = load(group)?;
    Ok(json!({ "symbol": f.to_string(), "svg": render_svg(&f) }).to_string())
}

#[wasm_bindgen]
pub fn invariants(group: &str) -> Result<String, String> {
    let f = load(group)?;
    let gens: Vec<String> = f.generators().iter().map(ToString::to_string).collect();
    Ok(json!({ "invariants": f.invariants(), "generators": gens }).to_string())
}

/// Membership of `a,b,c,d`, with the word when it is a member.
#[wasm_bindgen]
pub fn membership(group: &str, matrix: &str) -> Result<String, String> {
    let f = load(group)?;
    let a: ProjectiveMatrix = matrix.parse().map_err(|e| format!("{e}"))?;
    let cert = contains(&f, &a).map_err(|e| e.to_string())?;
    let word = cert.verdict.then(|| format_word(&cert.word));
    Ok(json!({ "member": cert.verdict, "word": word }).to_string())
}
