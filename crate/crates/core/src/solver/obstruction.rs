//! Murasugi's bound: a coherent band surgery changes the signature by at
//! most one.

use serde::Serialize;

use crate::diagram::{OrientedDiagram, OrientedTorusLink2};

/// Known absolute signatures, as inclusive ranges `(min, max)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SignatureFacts;

impl SignatureFacts {
    /// `|σ|` of `N(2k)` oriented with linking number `lk`, when known:
    /// `2|k| - 1` for the parallel orientation `lk = k`.
    pub fn torus_link(&self, t: &OrientedTorusLink2) -> Option<(i64, i64)> {
        (t.k != 0 && t.lk == t.k).then(|| {
            let s = 2 * t.k.abs() - 1;
            (s, s)
        })
    }

    /// `|σ|` of the genus-one 2-bridge knots `N((4mn - 1)/2m)`.
    pub fn genus_one_knot(&self) -> (i64, i64) {
        (0, 2)
    }

    /// Whether the facts alone force `|σ(L) - σ(Lb)| >= 2` between `N(2k)`
    /// and any genus-one 2-bridge knot.
    pub fn forces_obstruction(&self, t: &OrientedTorusLink2) -> bool {
        match self.torus_link(t) {
            Some((lo, _)) => lo - self.genus_one_knot().1 >= 2,
            None => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum ObstructionVerdict {
    Passes { sigma_l: i64, sigma_lb: i64 },
    Obstructed { sigma_l: i64, sigma_lb: i64 },
}

impl ObstructionVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, ObstructionVerdict::Obstructed { .. })
    }
}

/// Compares oracle signatures of two oriented diagrams.
pub fn signature_obstruction(l: &OrientedDiagram, lb: &OrientedDiagram) -> ObstructionVerdict {
    let (sigma_l, sigma_lb) = (l.signature(), lb.signature());
    if (sigma_l - sigma_lb).abs() >= 2 {
        ObstructionVerdict::Obstructed { sigma_l, sigma_lb }
    } else {
        ObstructionVerdict::Passes { sigma_l, sigma_lb }
    }
}
