//! Solvers for systems `N(U + P) = K1`, `N(U + R) = K2` of tangle
//! equations, and oracle verification of the solutions they emit.

mod band;
mod gamma;
mod moves;
mod nonband;
mod obstruction;
mod pathway;
mod psi;
mod xer;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::diagram::{transfer_orientation, Classification, Oracle};
use crate::error::{Result, TangleError};
use crate::expr::TangleExpr;
use crate::fraction::TangleFraction;
use crate::two_bridge::{describe, two_bridge_equal, TwoBridgeLink};

pub use band::{band_solve, BandOutcome};
pub use gamma::{gamma_unknot_classify, GammaParams, GAMMA_SYMMETRIES};
pub use moves::{move_equiv_zero, move_to_zero_form, zero_forms, Move, ZeroForm};
pub use nonband::{
    admissible_residues, nonrational_scan, solve_generalized_m, solve_nonband_family,
    ScanCandidate, ScanReport,
};
pub use obstruction::{signature_obstruction, ObstructionVerdict, SignatureFacts};
pub use pathway::{pathway_check, PathwayStep, StepStatus};
pub use psi::{psi_move_solve, psi_translate, PsiOutcome};
pub use xer::{knot_parameters, solve_2k_to_2k1, solve_trefoil_hopf, trefoil_hopf_family};

/// A target link, optionally with the linking number its orientation must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkSpec {
    pub link: TwoBridgeLink,
    pub lk: Option<i64>,
}

impl LinkSpec {
    pub fn unoriented(link: TwoBridgeLink) -> Self {
        LinkSpec { link, lk: None }
    }

    pub fn of_fraction(f: TangleFraction) -> Self {
        Self::unoriented(crate::two_bridge::closure_of_rational(f))
    }

    /// `N(2k)` with linking number `lk`.
    pub fn torus(k: i64, lk: i64) -> Self {
        LinkSpec {
            link: crate::two_bridge::closure_of_rational(TangleFraction::integer(2 * k)),
            lk: Some(lk),
        }
    }
}

impl fmt::Display for LinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", describe(&self.link))?;
        if let Some(lk) = self.lk {
            write!(f, " lk={lk}")?;
        }
        Ok(())
    }
}

impl Serialize for LinkSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    NotRequested,
    Verified,
    Failed(String),
    CapExceeded,
    /// The invariants tie the demanded link with other candidates.
    Ambiguous,
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified)
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verification::NotRequested => write!(f, "not requested"),
            Verification::Verified => write!(f, "verified"),
            Verification::Failed(why) => write!(f, "failed: {why}"),
            Verification::CapExceeded => write!(f, "cap-exceeded: unverified"),
            Verification::Ambiguous => write!(f, "ambiguous: unverified"),
        }
    }
}

impl Serialize for Verification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One concrete solution `U` of `N(U + P) = substrate`, `N(U + R) = product`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub u: TangleExpr,
    pub p: TangleFraction,
    pub r: TangleFraction,
    pub substrate: LinkSpec,
    pub product: LinkSpec,
    /// The surgery must be a coherent band surgery.
    pub coherent: bool,
    /// Values of the family parameters for this instance (e.g. `h`).
    pub params: BTreeMap<String, i64>,
    pub verified: Verification,
}

impl Instance {
    pub fn u_fraction(&self) -> Option<TangleFraction> {
        self.u.evaluate()
    }
}

impl Serialize for Instance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Instance", 7)?;
        st.serialize_field("U_expr", &self.u.to_string())?;
        st.serialize_field("U_fraction", &self.u_fraction().map(|f| f.to_string()))?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("move", &format!("({}, {})", self.p, self.r))?;
        st.serialize_field("substrate", &self.substrate)?;
        st.serialize_field("product", &self.product)?;
        st.serialize_field("verified", &self.verified)?;
        st.end()
    }
}

/// A closed-form solution family with concrete instances. An empty
/// instance list with a note records that the case has no solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionFamily {
    pub theorem_case: String,
    pub parameters: BTreeMap<String, i64>,
    pub closed_form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub instances: Vec<Instance>,
}

impl SolutionFamily {
    pub fn new(case: impl Into<String>, closed_form: impl Into<String>) -> Self {
        SolutionFamily {
            theorem_case: case.into(),
            parameters: BTreeMap::new(),
            closed_form: closed_form.into(),
            note: None,
            instances: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, v: i64) -> Self {
        self.parameters.insert(name.to_string(), v);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_solved(&self) -> bool {
        !self.instances.is_empty()
    }

    /// Adds an instance unless one with the same `U` fraction (or the same
    /// expression, for non-rational `U`) is already present.
    pub fn push_unique(&mut self, inst: Instance) -> bool {
        let dup = self
            .instances
            .iter()
            .any(|i| match (i.u_fraction(), inst.u_fraction()) {
                (Some(a), Some(b)) => a == b,
                _ => i.u == inst.u,
            });
        if !dup {
            self.instances.push(inst);
        }
        !dup
    }

    pub fn verify(&mut self, oracle: &Oracle) {
        for inst in &mut self.instances {
            inst.verified = verify_instance(oracle, inst);
        }
    }

    pub fn all_verified(&self) -> bool {
        self.instances.iter().all(|i| i.verified.is_verified())
    }
}

/// `a o (c1, ..., cn)`, leaving `a` alone when every entry is zero.
pub fn circle_simplified(a: TangleExpr, word: &[i64]) -> TangleExpr {
    if word.iter().all(|&c| c == 0) {
        a
    } else {
        a.circle(word.to_vec())
    }
}

/// `U + T` with `U`'s crossings built first.
pub fn attach(u: &TangleExpr, t: TangleFraction) -> TangleExpr {
    TangleExpr::Sum(vec![u.clone(), TangleExpr::leaf(t)])
}

/// Checks an instance against the oracle: both closures classify as the
/// demanded links (chirality included) and, for a coherent surgery, the
/// orientation carried across `U` gives the demanded linking number.
pub fn verify_instance(oracle: &Oracle, inst: &Instance) -> Verification {
    match check_instance(oracle, inst) {
        Ok(v) => v,
        Err(TangleError::CapExceeded { .. }) => Verification::CapExceeded,
        Err(e) => Verification::Failed(e.to_string()),
    }
}

fn check_instance(oracle: &Oracle, inst: &Instance) -> Result<Verification> {
    let sides = [
        (inst.p, inst.substrate, "substrate"),
        (inst.r, inst.product, "product"),
    ];
    let mut diagrams = Vec::new();
    for (t, _, _) in &sides {
        diagrams.push(oracle.diagram(&attach(&inst.u, *t))?);
    }
    let mut ambiguous = false;
    for ((_, spec, label), d) in sides.iter().zip(&diagrams) {
        match oracle.classify_diagram(d) {
            Classification::TwoBridge(l) if two_bridge_equal(&l, &spec.link) => {}
            Classification::TwoBridge(l) => {
                return Ok(Verification::Failed(format!(
                    "{label} closes to {}, expected {}",
                    describe(&l),
                    describe(&spec.link)
                )))
            }
            Classification::Unrecognized { candidates }
                if candidates.iter().any(|c| two_bridge_equal(c, &spec.link)) =>
            {
                ambiguous = true;
            }
            Classification::Unrecognized { .. } => {
                return Ok(Verification::Failed(format!(
                    "{label} closure not recognized"
                )))
            }
        }
    }
    let done = if ambiguous {
        Verification::Ambiguous
    } else {
        Verification::Verified
    };
    if !inst.coherent && inst.substrate.lk.is_none() && inst.product.lk.is_none() {
        return Ok(done);
    }
    let comps: Vec<usize> = diagrams.iter().map(|d| d.component_count()).collect();
    let (knot, link, spec) = match (comps[0], comps[1]) {
        (1, 2) => (&diagrams[0], &diagrams[1], inst.product),
        (2, 1) => (&diagrams[1], &diagrams[0], inst.substrate),
        _ => {
            return Ok(Verification::Failed(
                "orientation check needs one knot and one 2-component link".into(),
            ))
        }
    };
    let shared = inst.u.crossing_count();
    let Some(oriented) = transfer_orientation(&knot.orient(), link, shared) else {
        return Ok(Verification::Failed("surgery is not coherent".into()));
    };
    if let Some(lk) = spec.lk {
        let got = oriented.linking_number()?;
        if got != lk {
            return Ok(Verification::Failed(format!(
                "linking number {got}, expected {lk}"
            )));
        }
    }
    Ok(done)
}
