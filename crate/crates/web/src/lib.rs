//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each export takes a generator word and returns a JSON string, either
//! `{"ok": true, ...}` or `{"ok": false, "error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use holf2::torsion::{classify, ClassifyResult};
use holf2::{compute_nf, gl_normal_form, parse_word, HolElt, Order};

/// Search depth cap for the browser; deeper searches stall the page.
pub const MAX_DEPTH: usize = 6;

fn parse(word: &str) -> Result<HolElt, Value> {
    parse_word(word)
        .map(|w| w.eval())
        .map_err(|e| json!({ "ok": false, "error": e.to_string() }))
}

fn finish(v: Result<Value, Value>) -> String {
    match v {
        Ok(v) | Err(v) => v.to_string(),
    }
}

/// Normal form of a word, with the images of `a` and `b`.
#[wasm_bindgen]
pub fn normal_form(word: &str) -> String {
    finish(parse(word).and_then(|e| {
        let nf = compute_nf(&e).map_err(|err| json!({ "ok": false, "error": err.to_string() }))?;
        let [ia, ib] = e.aut().images();
        Ok(json!({
            "ok": true,
            "normal_form": nf.to_string(),
            "word": nf.to_word_string(),
            "image_a": ia.to_string(),
            "image_b": ib.to_string(),
            "z": e.z().to_string(),
        }))
    }))
}

/// Order of a word, plus its conjugacy class and certificate when finite.
#[wasm_bindgen]
pub fn order_and_class(word: &str, depth: usize) -> String {
    let depth = depth.min(MAX_DEPTH);
    finish(parse(word).map(|e| {
        let order = match e.order() {
            Order::Finite(n) => json!(n),
            Order::Infinite => json!("infinite"),
        };
        match classify(&e, depth) {
            ClassifyResult::Classified(cert) => json!({
                "ok": true,
                "order": order,
                "class": cert.class.word(),
                "conjugator": cert.conjugator_string(),
                "verified": cert.verify(&e),
            }),
            ClassifyResult::NotTorsion => json!({ "ok": true, "order": order, "class": null }),
            ClassifyResult::UnknownAtDepth(d) => {
                json!({ "ok": true, "order": order, "class": null, "unknown_at_depth": d })
            }
        }
    }))
}

/// The GL(2,Z) image of a word and its normal form.
#[wasm_bindgen]
pub fn gl2z_form(word: &str) -> String {
    finish(parse(word).and_then(|e| {
        let m = e.project_gl2z();
        let nf =
            gl_normal_form(&m).map_err(|err| json!({ "ok": false, "error": err.to_string() }))?;
        Ok(json!({ "ok": true, "matrix": m.to_string(), "normal_form": nf.display_upper() }))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn normal_form_of_p_squared_is_trivial() {
        let v = parsed(&normal_form("p p"));
        assert_eq!(v["ok"], true);
        assert_eq!(v["word"], "1");
    }

    #[test]
    fn order_three_class() {
        let v = parsed(&order_and_class("y^2 tb' a", 6));
        assert_eq!(v["order"], 3);
        assert_eq!(v["class"], "y^2 tb' a");
        assert_eq!(v["verified"], true);
        assert_eq!(parsed(&order_and_class("b", 6))["order"], "infinite");
    }

    #[test]
    fn gl2z_of_x() {
        let v = parsed(&gl2z_form("x"));
        assert_eq!(v["matrix"], "[[0, 1], [-1, 0]]");
        assert_eq!(v["normal_form"], "X");
    }

    #[test]
    fn syntax_errors_are_reported() {
        let v = parsed(&normal_form("y2tb'"));
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains('1'));
    }
}
