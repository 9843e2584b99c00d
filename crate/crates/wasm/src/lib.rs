//! Browser bindings: three interactive entry points over the invariant
//! library. Inputs and outputs are JSON strings so the page stays plain
//! JavaScript; errors come back as `{"error": "..."}` objects.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use borelkit_core::ideal::height_from_borel_gens;
use borelkit_core::invariants::minimal_primes;
use borelkit_core::json::{monomial_strings, BettiDocument, IdealDocument, ProfileDocument};
use borelkit_core::resolution::{betti_kborel, koszul_homology_oracle, OracleOptions};
use borelkit_core::shifts::monotonicity_profile;
use borelkit_core::tspread::{
    hs1_linear_quotient_order, tspread_generators, tspread_hs, TSpreadVeroneseSpec,
};
use borelkit_core::{Error, Monomial};

const DEMO_ORACLE_LIMIT: usize = 5_000;

fn error_json(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

/// Expand an ideal document into its minimal generators with Betti numbers
/// (formula and oracle) and, for squarefree Borel presentations, height.
#[wasm_bindgen]
pub fn expand_ideal(document: &str) -> String {
    match expand_ideal_impl(document) {
        Ok(v) => v.to_string(),
        Err(e) => error_json(e),
    }
}

fn expand_ideal_impl(document: &str) -> Result<Value, Error> {
    let doc: IdealDocument = serde_json::from_str(document).map_err(|e| Error::Parse {
        column: e.column(),
        message: e.to_string(),
    })?;
    let resolved = doc.resolve()?;
    let mut out = json!({
        "n": resolved.n,
        "num_generators": resolved.ideal.num_gens(),
        "generators": monomial_strings(resolved.ideal.gens()),
    });
    if resolved.ideal.is_zero() || resolved.ideal.is_unit() {
        return Ok(out);
    }

    let k = resolved.k.unwrap_or_else(|| {
        resolved
            .ideal
            .gens()
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(1)
            .max(1)
    });
    if let Ok(table) = betti_kborel(&resolved.ideal, k) {
        out["betti_formula"] =
            serde_json::to_value(BettiDocument::from_table(&table, "ideal")).expect("serializable");
    }
    if let Ok(oracle) = koszul_homology_oracle(
        &resolved.ideal,
        &OracleOptions::with_limit(DEMO_ORACLE_LIMIT),
    ) {
        out["betti_oracle"] =
            serde_json::to_value(BettiDocument::from_table(&oracle.collapse(), "ideal"))
                .expect("serializable");
    }
    if let Some(bg) = &resolved.borel_gens {
        out["height"] = json!(height_from_borel_gens(bg)?);
    }
    if resolved.ideal.is_squarefree() {
        out["multiplicity"] = json!(minimal_primes(&resolved.ideal)?.multiplicity());
    }
    Ok(out)
}

/// Shift profile of an equigenerated squarefree Borel ideal given by its
/// Borel generators: per-degree generators, heights, multiplicities and
/// analytic spreads with provenance flags.
#[wasm_bindgen]
pub fn shift_profile(document: &str) -> String {
    match shift_profile_impl(document) {
        Ok(v) => v.to_string(),
        Err(e) => error_json(e),
    }
}

fn shift_profile_impl(document: &str) -> Result<Value, Error> {
    let doc: IdealDocument = serde_json::from_str(document).map_err(|e| Error::Parse {
        column: e.column(),
        message: e.to_string(),
    })?;
    let resolved = doc.resolve()?;
    let Some(bg) = resolved.borel_gens else {
        return Err(Error::Parse {
            column: 0,
            message: "the profile needs borel_generators".into(),
        });
    };
    let profile = monotonicity_profile(&bg)?;
    Ok(serde_json::to_value(ProfileDocument::from_profile(&profile)).expect("serializable"))
}

/// t-spread Veronese explorer: generators and shift ideals for each degree,
/// plus the verified first-shift linear-quotient order.
#[wasm_bindgen]
pub fn tspread_explore(n: usize, d: usize, t: usize, max_j: u32) -> String {
    match tspread_explore_impl(n, d, t, max_j) {
        Ok(v) => v.to_string(),
        Err(e) => error_json(e),
    }
}

fn tspread_explore_impl(n: usize, d: usize, t: usize, max_j: u32) -> Result<Value, Error> {
    let spec = TSpreadVeroneseSpec::new(n, d, t)?;
    let ideal = tspread_generators(&spec);
    let mut shifts = Vec::new();
    for j in 0..=max_j {
        let shift = tspread_hs(&spec, j);
        let zero = shift.is_zero();
        shifts.push(json!({
            "j": j,
            "num_generators": shift.num_gens(),
            "generators": monomial_strings(shift.gens()),
        }));
        if zero {
            break;
        }
    }
    let lq = hs1_linear_quotient_order(&spec)?;
    Ok(json!({
        "n": n, "d": d, "t": t,
        "count_formula": spec.generator_count(),
        "zero": ideal.is_zero(),
        "generators": monomial_strings(ideal.gens()),
        "shifts": shifts,
        "hs1_order": monomial_strings(lq.order()),
        "hs1_verified": true,
    }))
}
