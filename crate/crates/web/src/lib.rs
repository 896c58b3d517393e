//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every function takes plain strings, uses 1-based simple-root indices like
//! the command line, and returns a JSON document or an error message.

use std::sync::Arc;

use flagherm::ahstruct::{AhStructure, Iacs, InvariantMetric};
use flagherm::classify::classify;
use flagherm::flag::FlagManifold;
use flagherm::geometry::ConnectionTable;
use flagherm::rootsys::{self, Family};
use flagherm::scalar::parse_rational;
use flagherm::submanifold::{CertifyOptions, SubmanifoldData};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

type Outcome = std::result::Result<String, String>;

#[derive(Serialize)]
struct PositiveRoot {
    label: String,
    coords: Vec<i32>,
    height: i32,
    /// Isotropy summand, or `None` for roots of `R_Theta`.
    class: Option<usize>,
}

fn indices(s: &str, rank: usize) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(format!("simple-root index {t:?} is not in 1..={rank}")),
        })
        .collect()
}

fn flag(family: &str, rank: usize, theta: &str) -> Result<Arc<FlagManifold>, String> {
    let family: Family = family.parse().map_err(|e: flagherm::Error| e.to_string())?;
    let wb = rootsys::build(family, rank).map_err(|e| e.to_string())?;
    let theta = indices(theta, rank)?;
    FlagManifold::new(wb, &theta).map(Arc::new).map_err(|e| e.to_string())
}

/// Blank metric means Killing; blank signs mean canonical.
fn table(flag: Arc<FlagManifold>, lambda: &str, epsilon: &str) -> Result<Arc<ConnectionTable>, String> {
    let metric = if lambda.trim().is_empty() {
        InvariantMetric::killing(&flag)
    } else {
        let values = lambda
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<flagherm::Result<Vec<_>>>()
            .map_err(|e| e.to_string())?;
        InvariantMetric::new(&flag, values).map_err(|e| e.to_string())?
    };
    let iacs = if epsilon.trim().is_empty() {
        Iacs::canonical(&flag)
    } else {
        let signs = epsilon
            .split(',')
            .map(|t| match t.trim() {
                "+" | "1" | "+1" => Ok(1),
                "-" | "-1" => Ok(-1),
                other => Err(format!("bad sign {other:?}")),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        Iacs::new(&flag, signs).map_err(|e| e.to_string())?
    };
    let s = AhStructure::new(flag, metric, iacs).map_err(|e| e.to_string())?;
    Ok(Arc::new(ConnectionTable::new(Arc::new(s))))
}

/// Flag summary plus the positive roots with their summand, for drawing.
#[wasm_bindgen]
pub fn flag_summary(family: &str, rank: usize, theta: &str) -> Outcome {
    let f = flag(family, rank, theta)?;
    let rs = f.root_system();
    let roots: Vec<PositiveRoot> = rs
        .positives()
        .map(|a| PositiveRoot {
            label: rs.label(a),
            coords: rs.root(a).coords.clone(),
            height: rs.root(a).height(),
            class: f.class_of(a),
        })
        .collect();
    let doc = json!({ "summary": f.summary(), "positive_roots": roots });
    Ok(doc.to_string())
}

#[wasm_bindgen]
pub fn classify_structure(family: &str, rank: usize, theta: &str, lambda: &str, epsilon: &str) -> Outcome {
    let t = table(flag(family, rank, theta)?, lambda, epsilon)?;
    let s = t.structure();
    let report = classify(&t);
    let doc = json!({
        "lambda": s.metric().lambda().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "epsilon": s.iacs().signs(),
        "flags": report.flags,
        "witnesses": report.witnesses,
        "lattice_consistent": report.flags.lattice_consistent(),
    });
    Ok(doc.to_string())
}

/// Certificate of the sub-flag spanned by `theta_prime`; `full` adds the
/// Gauss formula, normal terms and class inheritance.
#[wasm_bindgen]
pub fn certify_subflag(
    family: &str,
    rank: usize,
    theta: &str,
    theta_prime: &str,
    lambda: &str,
    epsilon: &str,
    full: bool,
) -> Outcome {
    let tp = indices(theta_prime, rank)?;
    let t = table(flag(family, rank, theta)?, lambda, epsilon)?;
    let d = SubmanifoldData::build_subflag(t, &tp).map_err(|e| e.to_string())?;
    let cert = if full { d.certify() } else { d.certify_with(CertifyOptions::core()) };
    serde_json::to_string(&cert).map_err(|e| e.to_string())
}
