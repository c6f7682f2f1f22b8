//! Browser entry points. Each returns a JSON string; errors become JS
//! exceptions carrying the message.

use serde_json::json;
use wasm_bindgen::prelude::*;

use sbl::blob::{compose_blob, BlobDiagram};
use sbl::brauer::compose;
use sbl::cellrep::{gram_det, gram_matrix, CellModule, Lambda};
use sbl::iso::{phi, psi};
use sbl::pairpart::Limits;
use sbl::PairPartition;

fn is_blob(s: &str) -> bool {
    s.trim_start().starts_with("bB")
}

pub fn compose_json(a: &str, b: &str) -> Result<String, String> {
    let err = |e: sbl::Error| e.to_string();
    let value = if is_blob(a) || is_blob(b) {
        let x: BlobDiagram = a.parse().map_err(err)?;
        let y: BlobDiagram = b.parse().map_err(err)?;
        let (r, plain, blobbed) = compose_blob(&x, &y).map_err(err)?;
        json!({ "diagram": r.to_string(), "loops": plain, "blobbed_loops": blobbed })
    } else {
        let x: PairPartition = a.parse().map_err(err)?;
        let y: PairPartition = b.parse().map_err(err)?;
        let (r, loops) = compose(&x, &y).map_err(err)?;
        json!({ "diagram": r.to_string(), "loops": loops, "blobbed_loops": 0 })
    };
    Ok(value.to_string())
}

/// Rank is capped at 8 so the page stays responsive.
pub fn gram_json(n: usize, lambda: &str) -> Result<String, String> {
    if n > 8 {
        return Err(format!("n = {n} is too large for the demo (max 8)"));
    }
    let err = |e: sbl::Error| e.to_string();
    let lambda: Lambda = lambda.parse().map_err(err)?;
    let module = CellModule::new(n, lambda, &Limits::default()).map_err(err)?;
    let g = gram_matrix(&module).map_err(err)?;
    let det = gram_det(&g).map_err(err)?;
    let matrix: Vec<Vec<String>> = (0..g.rows())
        .map(|i| g.row(i).iter().map(|p| p.to_string()).collect())
        .collect();
    let basis: Vec<String> = module.basis.iter().map(|h| h.to_string()).collect();
    Ok(
        json!({ "dim": module.dim(), "basis": basis, "matrix": matrix, "det": det.to_string() })
            .to_string(),
    )
}

pub fn psi_json(literal: &str) -> Result<String, String> {
    let err = |e: sbl::Error| e.to_string();
    let b: BlobDiagram = literal.parse().map_err(err)?;
    let image = psi(&b).map_err(err)?;
    let sum = phi(&b).map_err(err)?;
    Ok(json!({ "psi": image.to_string(), "phi": sum.to_string() }).to_string())
}

#[wasm_bindgen(js_name = compose)]
pub fn compose_js(a: &str, b: &str) -> Result<String, JsValue> {
    compose_json(a, b).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = gram)]
pub fn gram_js(n: usize, lambda: &str) -> Result<String, JsValue> {
    gram_json(n, lambda).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = psi)]
pub fn psi_js(literal: &str) -> Result<String, JsValue> {
    psi_json(literal).map_err(|e| JsValue::from_str(&e))
}
