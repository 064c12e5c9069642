//! Browser bindings. Every export takes plain strings and returns JSON text,
//! so the page needs no generated type glue beyond the functions themselves.

use affgrass::affine::{AffineElement, Convention};
use affgrass::cartan::RootSystem;
use affgrass::chains::{decompose_chain, decomposition_json};
use affgrass::context::Context;
use affgrass::error::Error;
use affgrass::mobius::{elements_below as below, mobius_deodhar, mobius_oracle, mobius_superregular};
use affgrass::qbg::{DualUntwisted, QuantumBruhatGraph, Untwisted};
use affgrass::regularity::{Profile, RegularityConfig, Scope};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

fn context(type_label: &str, convention: &str) -> Result<Context, JsError> {
    let c: Convention = convention.parse().map_err(js)?;
    Context::named(type_label, c).map_err(js)
}

fn config(ctx: &Context, profile: &str, scope: &str) -> Result<RegularityConfig, JsError> {
    let p: Profile = profile.parse().map_err(js)?;
    let s: Scope = scope.parse().map_err(js)?;
    Ok(RegularityConfig::new(ctx.weyl(), p).map_err(js)?.with_scope(s))
}

fn text(v: Value) -> String {
    v.to_string()
}

/// The quantum Bruhat graph as JSON: vertices as reduced words, edges with
/// kind, label and weight.
#[wasm_bindgen]
pub fn qbg_graph(type_label: &str, convention: &str) -> Result<String, JsError> {
    let rs = RootSystem::named(type_label).map_err(js)?;
    let c: Convention = convention.parse().map_err(js)?;
    let g = match c {
        Convention::Untwisted => serde_json::to_value(QuantumBruhatGraph::<Untwisted>::from_root_system(rs).map_err(js)?.to_json()),
        Convention::Dual => serde_json::to_value(QuantumBruhatGraph::<DualUntwisted>::from_root_system(rs).map_err(js)?.to_json()),
    };
    Ok(text(g.map_err(|e| JsError::new(&e.to_string()))?))
}

/// μ̃(x, y) by all three methods. A regularity refusal of the closed formula
/// is reported in the result rather than thrown.
#[wasm_bindgen]
pub fn mobius(type_label: &str, x: &str, y: &str, profile: &str, scope: &str) -> Result<String, JsError> {
    let ctx = context(type_label, "untwisted")?;
    let g = ctx.group();
    let (x, y) = (g.parse(x).map_err(js)?, g.parse(y).map_err(js)?);
    let cfg = config(&ctx, profile, scope)?;
    let oracle = mobius_oracle(&ctx, &x, &y).map_err(js)?;
    let deodhar = mobius_deodhar(&ctx, &x, &y).map_err(js)?;
    let (sr, refused) = match mobius_superregular(&ctx, &x, &y, &cfg) {
        Ok(r) => (Some(r.value), None),
        Err(e @ Error::RegularityViolation(_)) => (None, Some(e.to_string())),
        Err(e) => return Err(js(e)),
    };
    Ok(text(json!({
        "x": g.format(&x),
        "y": g.format(&y),
        "lengths": [g.length(&x), g.length(&y)],
        "oracle": oracle,
        "deodhar": deodhar.value,
        "deodhar_witness": deodhar.witness,
        "superregular": sr,
        "refused": refused,
        "agree": oracle == deodhar.value && sr.is_none_or(|v| v == oracle),
    })))
}

/// The support of μ̃(·, y) with the QBG distance behind each sign.
#[wasm_bindgen]
pub fn elements_below(type_label: &str, y: &str, profile: &str, scope: &str) -> Result<String, JsError> {
    let ctx = context(type_label, "untwisted")?;
    let g = ctx.group();
    let y = g.parse(y).map_err(js)?;
    let cfg = config(&ctx, profile, scope)?;
    let terms: Vec<Value> = below(&ctx, &y, &cfg)
        .map_err(js)?
        .into_iter()
        .map(|t| {
            json!({
                "u": ctx.weyl().format(t.u),
                "element": g.format(&t.element),
                "hops": t.hops,
                "sign": if t.hops % 2 == 0 { 1 } else { -1 },
                "length": g.length(&t.element),
            })
        })
        .collect();
    Ok(text(json!({ "y": g.format(&y), "length": g.length(&y), "terms": terms })))
}

/// Near and far paths of a saturated chain, one element per line, bottom first.
#[wasm_bindgen]
pub fn chain_decomposition(type_label: &str, chain: &str) -> Result<String, JsError> {
    let ctx = context(type_label, "untwisted")?;
    let g = ctx.group();
    let elements: Vec<AffineElement> = chain
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| g.parse(l))
        .collect::<Result<_, _>>()
        .map_err(js)?;
    let d = decompose_chain(&ctx, &elements).map_err(js)?;
    let out = decomposition_json(&ctx, &d).map_err(js)?;
    Ok(text(serde_json::to_value(out).map_err(|e| JsError::new(&e.to_string()))?))
}
