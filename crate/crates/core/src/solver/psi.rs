//! The `(-1/3, -4/3)` move of Xer at psi sites, solved through its
//! equivalent `(0, 9/5)` move and the non-band rational family.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Instance, LinkSpec, SolutionFamily, Verification};
use crate::arith::mod_inverse;
use crate::expr::TangleExpr;
use crate::fraction::{circle_product_fraction, TangleFraction, TwistWord};
use crate::two_bridge::closure_of_rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum PsiOutcome {
    Solved { families: Vec<SolutionFamily> },
    NoSolution { reason: String },
}

/// `U o (1,2,0)`: a solution of the `(0, 9/5)` system becomes one of the
/// `(-1/3, -4/3)` system.
pub fn psi_translate(u: TangleFraction) -> TangleFraction {
    circle_product_fraction(u, &TwistWord::new(vec![1, 2, 0]))
}

/// Solves `N(U + -1/3) = N(2k)`, `N(U + -4/3) = N(z/v)` for rational `U`,
/// matching `N(z/v)` with its chirality.
pub fn psi_move_solve(k: i64, zv: TangleFraction) -> PsiOutcome {
    let z = zv.num().abs();
    if k <= 0 || z % 2 == 0 || zv.den() == 0 {
        return PsiOutcome::NoSolution {
            reason: format!("N({zv}) is not a nontrivial knot or k <= 0"),
        };
    }
    let v = zv.den() * zv.num().signum();
    let residues = [v.rem_euclid(z), mod_inverse(v, z).expect("unit")];
    let mut families = Vec::new();
    for t in [9, -9] {
        // z - 2kv' = t
        if (z - t) % (2 * k) != 0 {
            continue;
        }
        let vp = (z - t) / (2 * k);
        if !residues.contains(&vp.rem_euclid(z)) {
            continue;
        }
        // w = v' - th must be 5 for the move (0, 9/5)
        let h = if t == 9 {
            if (vp - 5).rem_euclid(9) != 0 {
                continue;
            }
            (vp - 5) / 9
        } else {
            if (vp + 5).rem_euclid(9) != 0 {
                continue;
            }
            (-5 - vp) / 9
        };
        let u0 = TangleFraction::new(2 * k, 2 * k * h + 1).expect("nonzero");
        let u = psi_translate(u0);
        let mut fam = SolutionFamily::new("psi move", "U = (2k/(2kh+1)) o (1,2,0)")
            .param("k", k)
            .param("v'", vp)
            .param("h", h)
            .param("t", t);
        fam.push_unique(Instance {
            u: TangleExpr::leaf(u),
            p: TangleFraction::new(-1, 3).unwrap(),
            r: TangleFraction::new(-4, 3).unwrap(),
            substrate: LinkSpec::of_fraction(TangleFraction::integer(2 * k)),
            product: LinkSpec::unoriented(closure_of_rational(zv)),
            coherent: false,
            params: BTreeMap::from([("v'".into(), vp), ("h".into(), h)]),
            verified: Verification::NotRequested,
        });
        families.push(fam.with_note(format!("(0, 9/5) solution U = {u0}")));
    }
    if families.is_empty() {
        PsiOutcome::NoSolution {
            reason: "no solution".into(),
        }
    } else {
        PsiOutcome::Solved { families }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Oracle;

    fn fr(n: i64, d: i64) -> TangleFraction {
        TangleFraction::new(n, d).unwrap()
    }

    fn solved(k: i64, z: i64, v: i64) -> Vec<TangleFraction> {
        match psi_move_solve(k, fr(z, v)) {
            PsiOutcome::Solved { families } => families
                .iter()
                .flat_map(|f| f.instances.iter().map(|i| i.u_fraction().unwrap()))
                .collect(),
            PsiOutcome::NoSolution { .. } => Vec::new(),
        }
    }

    #[test]
    fn translation_matches_move() {
        assert_eq!(psi_translate(TangleFraction::ZERO), fr(1, 3));
        assert_eq!(psi_translate(fr(-6, 5)), fr(-1, 3));
    }

    #[test]
    fn product_tables() {
        assert_eq!(solved(3, 15, 4), vec![fr(-1, 3)]);
        assert_eq!(solved(4, 23, 4), vec![fr(-1, 5)]);
        assert_eq!(solved(5, 31, 4), vec![fr(-1, 7)]);
        for (k, z, v) in [(3, 11, 2), (4, 15, 2), (5, 19, 2), (5, 35, 6)] {
            assert!(solved(k, z, v).is_empty());
            assert!(solved(k, -z, v).is_empty());
        }
        assert!(solved(3, -15, 4).is_empty());
    }

    #[test]
    fn solutions_verify() {
        let oracle = Oracle::default();
        for (k, z, v) in [(3, 15, 4), (4, 23, 4), (5, 31, 4)] {
            let PsiOutcome::Solved { mut families } = psi_move_solve(k, fr(z, v)) else {
                panic!()
            };
            for f in &mut families {
                f.verify(&oracle);
                assert!(f.all_verified(), "{:?}", f.instances);
            }
        }
    }
}
