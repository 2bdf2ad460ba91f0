//! Browser bindings: each export takes plain strings/numbers and returns a
//! JSON string, with `{"error": ...}` on bad input.

use gotzmann::lex::saturated_lex_module;
use gotzmann::numpoly::{adjusted_gotzmann_rep, gotzmann_rep};
use gotzmann::resolution::{koszul_betti, regularity, RegularityOf};
use gotzmann::theorems::{self, Verdict};
use gotzmann::{green_transform, macaulay_rep, macaulay_transform, GradedFreeModule, MonomialSubmodule, NumPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn int(v: &BigInt) -> Value {
    i64::try_from(v).map_or_else(|_| json!(v.to_string()), |x| json!(x))
}

pub fn macaulay_json(a: &str, d: u32) -> Result<Value, String> {
    let a: BigInt = a.trim().parse().map_err(|_| format!("a: `{a}` is not an integer"))?;
    if a.sign() == num_bigint::Sign::Minus || d == 0 {
        return Err("need a ≥ 0 and d ≥ 1".into());
    }
    let rep = macaulay_rep(&a, d);
    Ok(json!({
        "rep": rep.to_string(),
        "macaulay": int(&macaulay_transform(&a, d)),
        "green": int(&green_transform(&a, d)),
    }))
}

/// Hilbert data of `F/N` plus the adjusted checks on a window of degrees.
pub fn analyze_json(module: &str, lo: i64, hi: i64, seed: u64) -> Result<Value, String> {
    let n: MonomialSubmodule = serde_json::from_str(module).map_err(|e| format!("module: {e}"))?;
    if hi < lo || hi - lo > 40 {
        return Err("degree window must satisfy lo ≤ hi ≤ lo + 40".into());
    }
    let p = n.hilbert_polynomial().map_err(|e| e.to_string())?;
    let table: Vec<Value> = (lo..=hi).map(|d| json!([d, int(&n.hf_direct(d))])).collect();
    let reg = regularity(&n, RegularityOf::Quotient).ok();
    let threshold = theorems::adjusted_threshold(&n);
    let mut checks = Vec::new();
    for d in lo.max(threshold)..=hi {
        for r in [
            theorems::check_macaulay_adjusted(&n, d),
            theorems::check_green_adjusted(&n, d, 3, seed),
        ]
        .into_iter()
        .flatten()
        {
            checks.push(json!({
                "name": r.name, "d": d, "lhs": int(&r.bound_lhs), "rhs": int(&r.bound_rhs),
                "verdict": serde_json::to_value(r.verdict).unwrap(),
            }));
        }
    }
    let betti: Vec<Value> = koszul_betti(&n, true).entries().map(|(i, j, v)| json!([i, j, v])).collect();
    Ok(json!({
        "rank": n.rank(),
        "polynomial": p.to_string(),
        "hilbert": table,
        "regularity": reg,
        "betti": betti,
        "checks": checks,
    }))
}

/// Standard and adjusted Gotzmann representations and the saturated lex
/// module realizing `P`.
pub fn gotzmann_json(poly: &str, shape: &str, rank: usize) -> Result<Value, String> {
    let p: NumPoly = serde_json::from_str(poly).map_err(|e| format!("poly: {e}"))?;
    let f: GradedFreeModule = serde_json::from_str(shape).map_err(|e| format!("shape: {e}"))?;
    let std = gotzmann_rep(&p).map_err(|e| e.to_string())?;
    let adj = adjusted_gotzmann_rep(&p, f.n, f.degrees(), rank).map_err(|e| e.to_string())?;
    let lex = saturated_lex_module(&p, &f, rank);
    let sharp = if rank >= 1 && rank < f.rank() {
        theorems::check_sharpness(&p, &f, rank).ok().map(|r| r.verdict == Verdict::Sharp)
    } else {
        None
    };
    Ok(json!({
        "polynomial": p.to_string(),
        "standard": { "s": std.len(), "rep": std.to_string() },
        "adjusted": { "s": adj.adjusted_number(), "free_degrees": adj.free_degrees, "q": adj.q.to_string() },
        "lex_module": lex.as_ref().map(|l| serde_json::to_value(l).unwrap()).map_err(|e| e.to_string()).ok(),
        "lex_regularity_sharp": sharp,
    }))
}

#[wasm_bindgen]
pub fn macaulay(a: &str, d: u32) -> String {
    respond(macaulay_json(a, d))
}

#[wasm_bindgen]
pub fn analyze(module: &str, lo: i32, hi: i32, seed: u32) -> String {
    respond(analyze_json(module, lo.into(), hi.into(), seed.into()))
}

#[wasm_bindgen]
pub fn gotzmann(poly: &str, shape: &str, rank: u32) -> String {
    respond(gotzmann_json(poly, shape, rank as usize))
}
