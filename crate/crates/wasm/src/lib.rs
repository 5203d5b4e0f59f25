//! Browser bindings for the interactive demo page: tableau dictionary,
//! orbit counting, and resolution reports, all returned as JSON strings.

use serde_json::json;
use std::str::FromStr;
use wasm_bindgen::prelude::*;
use zorbit_core::orbits::{count_orbits, hook_component_count};
use zorbit_core::perm::Perm;
use zorbit_core::resolve::hypothesis_report;
use zorbit_core::rng::DEFAULT_SEED;
use zorbit_core::tableaux::{enumerate_tableaux, tableau_dims, tableau_to_w};
use zorbit_core::weyl::{enumerate_weyl, type_length, Family, ModelSpec};

fn err(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn parse_spec(family: &str, n: usize, r: usize) -> Result<ModelSpec, String> {
    let family = Family::from_str(family).map_err(|e| e.to_string())?;
    ModelSpec::new(family, n, r).map_err(|e| e.to_string())
}

/// All two-column tableaux for (n, r): diagrams, words and dimensions.
#[wasm_bindgen]
pub fn tableau_explorer(n: usize, r: usize) -> String {
    if n == 0 || n > 12 || r > n / 2 {
        return err("need 0 < n <= 12 and r <= n/2");
    }
    let tableaux: Vec<_> = enumerate_tableaux(n, r)
        .iter()
        .map(|t| {
            let word = tableau_to_w(t);
            let (dim_hb, len_w) = tableau_dims(t);
            json!({
                "p": t.p,
                "diagram": t.render(),
                "w": word.w.to_string(),
                "q": word.q,
                "s": word.s,
                "dim_h_mod_bh": dim_hb,
                "len_w": len_w,
                "separated": t.separated(),
            })
        })
        .collect();
    json!({
        "n": n,
        "r": r,
        "hook_count": hook_component_count(n, r) as u64,
        "tableaux": tableaux,
    })
    .to_string()
}

/// Orbit count of the model, with the component identity for type A.
#[wasm_bindgen]
pub fn orbit_counter(family: &str, n: usize, r: usize) -> String {
    let spec = match parse_spec(family, n, r) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    if n > 12 {
        return err("n too large for the demo");
    }
    let count = count_orbits(&spec) as u64;
    let mut value = json!({ "spec": spec.to_string(), "count": count });
    if spec.family == Family::A {
        let components = hook_component_count(n, r) as u64;
        let mut factor = 1u64;
        for k in (n - 2 * r + 2)..=(n - r + 1) {
            factor *= k as u64;
        }
        value["components"] = components.into();
        value["factor"] = factor.into();
        value["identity_holds"] = (count == components * factor).into();
    }
    value.to_string()
}

/// The Weyl elements of a model, with lengths, for the resolution picker.
#[wasm_bindgen]
pub fn list_weyl(family: &str, n: usize, r: usize) -> String {
    let spec = match parse_spec(family, n, r) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    if spec.ambient() > 8 {
        return err("model too large for the demo");
    }
    let kind = spec.weyl_kind();
    let elements: Vec<_> = enumerate_weyl(kind)
        .iter()
        .map(|w| {
            json!({
                "perm": w.to_string(),
                "length": type_length(w, kind).unwrap(),
            })
        })
        .collect();
    json!({ "spec": spec.to_string(), "elements": elements }).to_string()
}

/// Full resolution report for one Weyl element given in one-line notation.
#[wasm_bindgen]
pub fn resolution_explorer(family: &str, n: usize, r: usize, v: &str) -> String {
    let spec = match parse_spec(family, n, r) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    if spec.ambient() > 8 {
        return err("model too large for the demo");
    }
    let v = match Perm::from_str(v) {
        Ok(p) => p,
        Err(e) => return err(e),
    };
    match hypothesis_report(&v, &spec, DEFAULT_SEED, 12) {
        Ok(rep) => serde_json::to_string(&rep).unwrap_or_else(err),
        Err(e) => err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explorer_outputs_are_valid_json() {
        let v: serde_json::Value = serde_json::from_str(&tableau_explorer(5, 2)).unwrap();
        assert_eq!(v["hook_count"], 5);
        assert_eq!(v["tableaux"].as_array().unwrap().len(), 5);

        let v: serde_json::Value = serde_json::from_str(&orbit_counter("A", 6, 2)).unwrap();
        assert_eq!(v["count"], 180);
        assert_eq!(v["identity_holds"], true);

        let v: serde_json::Value = serde_json::from_str(&list_weyl("D", 6, 2)).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), 24);

        let v: serde_json::Value =
            serde_json::from_str(&resolution_explorer("D", 6, 2, "6 5 3 4 2 1")).unwrap();
        assert_eq!(v["hypotheses"], serde_json::json!([true, true, true, true]));
    }

    #[test]
    fn bad_inputs_return_error_objects() {
        let v: serde_json::Value = serde_json::from_str(&orbit_counter("E", 4, 1)).unwrap();
        assert!(v["error"].is_string());
        let v: serde_json::Value =
            serde_json::from_str(&resolution_explorer("A", 4, 1, "1 1 2 3")).unwrap();
        assert!(v["error"].is_string());
    }
}
