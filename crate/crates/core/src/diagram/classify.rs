//! Identifies a closure among 2-bridge links by comparing invariants with
//! every candidate of the same determinant.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use super::{expr_to_diagram_capped, numerator_diagram, Closure, Diagram, LaurentPoly};
use crate::arith::gcd;
use crate::error::Result;
use crate::expr::TangleExpr;
use crate::two_bridge::TwoBridgeLink;

pub const DEFAULT_CROSSING_CAP: usize = 24;

/// Environment variable overriding the crossing cap.
pub const CAP_ENV: &str = "TANGLEKIT_CROSSING_CAP";

/// The configured crossing cap.
pub fn crossing_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CROSSING_CAP)
}

/// Invariants compared during classification. `classes` lists
/// the distinct `(Jones, signature)` pairs over orientations up to total
/// reversal, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub components: usize,
    pub determinant: u64,
    pub classes: Vec<(LaurentPoly, i64)>,
}

impl Fingerprint {
    pub fn of(d: &Diagram) -> Fingerprint {
        let base = d.orient();
        let mut classes: Vec<(LaurentPoly, i64)> = base
            .orientation_classes()
            .iter()
            .map(|o| (o.jones(), o.signature()))
            .collect();
        classes.sort();
        classes.dedup();
        let (re, im) = classes[0].0.eval_at_i();
        Fingerprint {
            components: d.component_count(),
            determinant: re.unsigned_abs() + im.unsigned_abs(),
            classes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Classification {
    TwoBridge(TwoBridgeLink),
    /// No candidate, or several, share the invariants.
    Unrecognized {
        candidates: Vec<TwoBridgeLink>,
    },
}

impl Classification {
    pub fn link(&self) -> Option<TwoBridgeLink> {
        match self {
            Classification::TwoBridge(l) => Some(*l),
            Classification::Unrecognized { .. } => None,
        }
    }
}

fn candidate_cache() -> &'static Mutex<HashMap<TwoBridgeLink, Fingerprint>> {
    static CACHE: OnceLock<Mutex<HashMap<TwoBridgeLink, Fingerprint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fingerprint of the standard alternating diagram of `link`.
pub fn candidate_fingerprint(link: &TwoBridgeLink) -> Fingerprint {
    if let Some(f) = candidate_cache().lock().unwrap().get(link) {
        return f.clone();
    }
    let d = numerator_diagram(&TangleExpr::leaf(link.fraction()));
    let f = Fingerprint::of(&d);
    candidate_cache().lock().unwrap().insert(*link, f.clone());
    f
}

/// 2-bridge links with determinant `p` and the given component count, one
/// per equivalence class, mirrors listed separately.
pub fn candidates(p: u64, components: usize) -> Vec<TwoBridgeLink> {
    let parity_ok = |p: u64| {
        if p.is_multiple_of(2) {
            components == 2
        } else {
            components == 1
        }
    };
    if !parity_ok(p) {
        return Vec::new();
    }
    match p {
        0 => vec![TwoBridgeLink::UNLINK],
        1 => vec![TwoBridgeLink::UNKNOT],
        _ => (1..p as i64)
            .filter(|&q| gcd(p as i64, q) == 1)
            .map(|q| TwoBridgeLink::new(p as i64, q).unwrap())
            .filter(|l| l.q() == l.reduced_q())
            .collect(),
    }
}

/// Diagram builder and classifier with a crossing cap.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: crossing_cap(),
        }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `N(e)` within the cap.
    pub fn diagram(&self, e: &TangleExpr) -> Result<Diagram> {
        expr_to_diagram_capped(e, Closure::Numerator, self.cap)
    }

    pub fn classify_diagram(&self, d: &Diagram) -> Classification {
        let fp = Fingerprint::of(d);
        let matches: Vec<TwoBridgeLink> = candidates(fp.determinant, fp.components)
            .into_iter()
            .filter(|c| candidate_fingerprint(c) == fp)
            .collect();
        if matches.len() == 1 {
            Classification::TwoBridge(matches[0])
        } else {
            Classification::Unrecognized {
                candidates: matches,
            }
        }
    }

    pub fn classify_closure(&self, e: &TangleExpr) -> Result<Classification> {
        Ok(self.classify_diagram(&self.diagram(e)?))
    }
}

/// Classifies `N(e)` with the configured crossing cap.
pub fn classify_closure(e: &TangleExpr) -> Result<Classification> {
    Oracle::default().classify_closure(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::fraction::TangleFraction;
    use crate::two_bridge::closure_of_rational;

    fn classify(s: &str) -> Option<TwoBridgeLink> {
        classify_closure(&parse_expr(s).unwrap()).unwrap().link()
    }

    fn n(p: i64, q: i64) -> TwoBridgeLink {
        closure_of_rational(TangleFraction::new(p, q).unwrap())
    }

    #[test]
    fn rational_closures() {
        assert_eq!(classify("3"), Some(n(3, 1)));
        assert_eq!(classify("-3"), Some(n(-3, 1)));
        assert_eq!(classify("0"), Some(TwoBridgeLink::UNLINK));
        assert_eq!(classify("1/0"), Some(TwoBridgeLink::UNKNOT));
        assert_eq!(classify("7/3"), Some(n(7, 3)));
    }

    #[test]
    fn sums_of_rational_tangles() {
        assert_eq!(classify("(-1/3 + -1/3 + -1)"), Some(n(15, 4)));
        assert_eq!(classify("(-1/3 + -1/5 + -1)"), Some(n(23, 4)));
        assert_eq!(classify("(3 + -1)"), Some(n(2, 1)));
        assert_eq!(classify("(4 + -1)"), Some(n(3, 1)));
    }

    #[test]
    fn candidate_lists() {
        assert_eq!(candidates(11, 1).len(), 6);
        assert!(candidates(11, 2).is_empty());
        assert_eq!(candidates(6, 2), vec![n(6, 1), n(6, 5)]);
    }
}
