//! Golden tables: solution tables regenerated from the solvers and compared
//! byte for byte with checked-in JSON fixtures.

use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::diagram::Oracle;
use crate::error::{Result, TangleError};
use crate::fraction::TangleFraction;
use crate::solver::{
    admissible_residues, nonrational_scan, psi_move_solve, solve_2k_to_2k1, solve_nonband_family,
    trefoil_hopf_family, PsiOutcome, SolutionFamily,
};
use crate::two_bridge::{closure_of_rational, describe, genus_one_fraction};

/// Product knots `N((4mn - 1)/2m)`, `m <= n`, with `2k + 1` crossings.
fn products(k: i64) -> Vec<TangleFraction> {
    crate::solver::knot_parameters(k)
        .into_iter()
        .filter(|&(m, _)| m > 0)
        .map(|(m, n)| genus_one_fraction(m, n))
        .collect()
}

fn verified(mut fams: Vec<SolutionFamily>, oracle: &Oracle) -> Vec<SolutionFamily> {
    for f in &mut fams {
        f.verify(oracle);
    }
    fams
}

fn xer_table(k: i64, oracle: &Oracle) -> Value {
    json!({
        "description": format!("Xer recombination N({}) -> knots with {} crossings, w = -1", 2 * k, 2 * k + 1),
        "families": verified(solve_2k_to_2k1(k, -1), oracle),
    })
}

fn trefoil_hopf_table(oracle: &Oracle) -> Value {
    json!({
        "description": "trefoil N(3) -> Hopf link N(2) by (0, 1/w), w in [-5, 5]",
        "families": verified(vec![trefoil_hopf_family(-5..=5)], oracle),
    })
}

fn psi_table(k: i64, oracle: &Oracle) -> Value {
    let mut rows = Vec::new();
    for zv in products(k) {
        let link = closure_of_rational(zv);
        let mut solutions = Vec::new();
        for f in [zv, zv.neg()] {
            if let PsiOutcome::Solved { families } = psi_move_solve(k, f) {
                solutions.extend(verified(families, oracle));
            }
        }
        let outcome = if solutions.is_empty() {
            "no solution"
        } else {
            "solved"
        };
        rows.push(json!({
            "product": describe(&link),
            "outcome": outcome,
            "families": solutions,
        }));
    }
    json!({
        "description": format!("(-1/3, -4/3) move from N({}) to knots with {} crossings", 2 * k, 2 * k + 1),
        "rows": rows,
    })
}

fn nonband_table(k: i64) -> Value {
    let mut rows = Vec::new();
    for zv in products(k) {
        let (z, v) = (zv.num(), zv.den());
        let residues: Vec<Value> = admissible_residues(z, v)
            .into_iter()
            .map(|vp| json!({"v'": vp, "t": z - 2 * k * vp}))
            .collect();
        let fam = solve_nonband_family(k, zv, [0]).expect("odd z");
        let scan = nonrational_scan(k, zv);
        rows.push(json!({
            "product": describe(&closure_of_rational(zv)),
            "t/w": format!("({z}-{}v')/(v'-({z}-{}v')h)", 2 * k, 2 * k),
            "U": format!("{}/({}h+1)", 2 * k, 2 * k),
            "residues": residues,
            "h0_instances": fam.instances,
            "nonrational_candidates": scan.examined.len(),
            "nonrational_survivors": scan.survivors,
        }));
    }
    json!({
        "description": format!("non-band (0, t/w) surgeries from N({}) with |t| > 1", 2 * k),
        "rows": rows,
    })
}

/// Every golden table, as `(name, pretty JSON with trailing newline)`.
pub fn golden_tables(oracle: &Oracle) -> Vec<(String, String)> {
    let mut out: Vec<(String, Value)> = Vec::new();
    for (k, name) in [(3, "6cat"), (4, "8cat"), (5, "10cat")] {
        out.push((format!("xer_{name}"), xer_table(k, oracle)));
    }
    out.push(("trefoil_hopf".into(), trefoil_hopf_table(oracle)));
    for (k, name) in [(3, "6cat"), (4, "8cat"), (5, "10cat")] {
        out.push((format!("psi_{name}"), psi_table(k, oracle)));
        out.push((format!("nonband_{name}"), nonband_table(k)));
    }
    out.into_iter()
        .map(|(n, v)| {
            let mut s = serde_json::to_string_pretty(&json!({"table": n, "content": v}))
                .expect("serializable");
            s.push('\n');
            (n, s)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FixtureStatus {
    Pass,
    Mismatch {
        diff: Vec<String>,
    },
    Missing,
    /// A fixture file no table generates.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: String,
    #[serde(flatten)]
    pub status: FixtureStatus,
}

fn line_diff(expected: &str, actual: &str) -> Vec<String> {
    let e: Vec<&str> = expected.lines().collect();
    let a: Vec<&str> = actual.lines().collect();
    let mut out = Vec::new();
    for i in 0..e.len().max(a.len()) {
        let (x, y) = (e.get(i), a.get(i));
        if x != y {
            if let Some(x) = x {
                out.push(format!("{}: -{x}", i + 1));
            }
            if let Some(y) = y {
                out.push(format!("{}: +{y}", i + 1));
            }
        }
        if out.len() >= 40 {
            out.push("...".into());
            break;
        }
    }
    out
}

/// Regenerates every table and compares it with `<dir>/<name>.json`.
/// An empty or missing directory is an error.
pub fn report_golden(dir: &Path, oracle: &Oracle) -> Result<Vec<FixtureResult>> {
    let present = fixture_names(dir)?;
    if present.is_empty() {
        return Err(TangleError::precondition(format!(
            "no fixtures in {}",
            dir.display()
        )));
    }
    let tables = golden_tables(oracle);
    let mut results = Vec::new();
    for (name, text) in &tables {
        let status = match fs::read_to_string(dir.join(format!("{name}.json"))) {
            Err(_) => FixtureStatus::Missing,
            Ok(expected) if expected == *text => FixtureStatus::Pass,
            Ok(expected) => FixtureStatus::Mismatch {
                diff: line_diff(&expected, text),
            },
        };
        results.push(FixtureResult {
            name: name.clone(),
            status,
        });
    }
    for name in present {
        if !tables.iter().any(|(n, _)| *n == name) {
            results.push(FixtureResult {
                name,
                status: FixtureStatus::Unknown,
            });
        }
    }
    Ok(results)
}

/// Writes every table to `dir`, returning the names written.
pub fn bless(dir: &Path, oracle: &Oracle) -> Result<Vec<String>> {
    fs::create_dir_all(dir)
        .map_err(|e| TangleError::precondition(format!("{}: {e}", dir.display())))?;
    let mut names = Vec::new();
    for (name, text) in golden_tables(oracle) {
        fs::write(dir.join(format!("{name}.json")), text)
            .map_err(|e| TangleError::precondition(format!("{name}: {e}")))?;
        names.push(name);
    }
    Ok(names)
}

fn fixture_names(dir: &Path) -> Result<Vec<String>> {
    let entries = fs::read_dir(dir)
        .map_err(|e| TangleError::precondition(format!("{}: {e}", dir.display())))?;
    let mut names: Vec<String> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .filter_map(|p| p.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .collect();
    names.sort();
    Ok(names)
}
