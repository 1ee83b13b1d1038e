//! Coherent band surgeries from the genus-one knot `N((4mn - 1)/2m)` to the
//! `(2, 2k)`-torus link.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{circle_simplified, Instance, LinkSpec, SignatureFacts, SolutionFamily, Verification};
use crate::diagram::OrientedTorusLink2;
use crate::error::{Result, TangleError};
use crate::expr::TangleExpr;
use crate::fraction::TangleFraction;
use crate::two_bridge::genus_one_fraction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum BandOutcome {
    /// One family per applicable case; empty when no case applies.
    Solutions {
        families: Vec<SolutionFamily>,
    },
    Obstructed {
        reason: String,
        torus_sigma: i64,
        knot_sigma_max: i64,
    },
    Unknown {
        reason: String,
    },
}

/// Solves `N(U + 0) = N((4mn - 1)/2m)`, `N(U + 1/w) = target` for coherent
/// band surgeries.
pub fn band_solve(m: i64, n: i64, w: i64, target: OrientedTorusLink2) -> Result<BandOutcome> {
    if m == 0 || n == 0 {
        return Err(TangleError::Unsupported(
            "mn = 0 (unknot substrate) is not handled by the band solver".into(),
        ));
    }
    let k = target.k;
    let facts = SignatureFacts;
    if k.abs() > 1 && !target.is_antiparallel() {
        if facts.forces_obstruction(&target) {
            let (sigma, _) = facts.torus_link(&target).expect("fact exists");
            return Ok(BandOutcome::Obstructed {
                reason: "signature".into(),
                torus_sigma: sigma,
                knot_sigma_max: facts.genus_one_knot().1,
            });
        }
        return Ok(BandOutcome::Unknown {
            reason: format!("lk = k = {k}: coherent banding to this orientation is open"),
        });
    }

    let p = TangleFraction::ZERO;
    let r = TangleFraction::new(1, w)?;
    let substrate = LinkSpec::of_fraction(genus_one_fraction(m, n));
    let product = LinkSpec::torus(k, -k);
    let make = |u: TangleExpr| Instance {
        u,
        p,
        r,
        substrate,
        product,
        coherent: true,
        params: BTreeMap::from([("m".into(), m), ("n".into(), n), ("w".into(), w)]),
        verified: Verification::NotRequested,
    };
    let d = 4 * m * n - 1;
    let mut families = Vec::new();

    for (case, cond, twist) in [("band (1) k=m", k == m, m), ("band (2) k=n", k == n, n)] {
        if !cond {
            continue;
        }
        let closed = if twist == m {
            "U = (4mn-1)/(-w(4mn-1)+2m)"
        } else {
            "U = (4mn-1)/(-w(4mn-1)+2n)"
        };
        let mut fam = family(case, closed, m, n, w);
        fam.push_unique(make(TangleExpr::leaf(TangleFraction::new(
            d,
            -w * d + 2 * twist,
        )?)));
        families.push(fam);
    }

    let sums = [
        (
            "band (3) k=m+n+1",
            k == m + n + 1,
            "U = (-1/(2m+1) + -1/(2n+1)) o (1,-(w+1),0) or its swap",
            (2 * m + 1, 2 * n + 1),
            [1, -(w + 1), 0],
        ),
        (
            "band (4) k=m+n-1",
            k == m + n - 1,
            "U = (-1/(2m-1) + -1/(2n-1)) o (-1,-(w-1),0) or its swap",
            (2 * m - 1, 2 * n - 1),
            [-1, -(w - 1), 0],
        ),
    ];
    for (case, cond, closed, (a, b), word) in sums {
        if !cond {
            continue;
        }
        let mut fam = family(case, closed, m, n, w);
        for (x, y) in [(a, b), (b, a)] {
            let u = TangleExpr::sum([TangleExpr::frac(-1, x), TangleExpr::frac(-1, y)]);
            fam.push_unique(make(circle_simplified(u, &word)));
        }
        if m == n {
            fam = fam.with_note("m = n: both summand orders give the same tangle");
        }
        families.push(fam);
    }
    Ok(BandOutcome::Solutions { families })
}

fn family(case: &str, closed: &str, m: i64, n: i64, w: i64) -> SolutionFamily {
    SolutionFamily::new(case, closed)
        .param("m", m)
        .param("n", n)
        .param("w", w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Oracle;

    fn solve(m: i64, n: i64, w: i64, k: i64, lk: i64) -> BandOutcome {
        band_solve(m, n, w, OrientedTorusLink2::new(k, lk).unwrap()).unwrap()
    }

    fn families(o: BandOutcome) -> Vec<SolutionFamily> {
        match o {
            BandOutcome::Solutions { families } => families,
            other => panic!("expected solutions, got {other:?}"),
        }
    }

    #[test]
    fn hopf_from_trefoil_is_three() {
        let fams = families(solve(-1, -1, -1, -1, 1));
        assert_eq!(fams.len(), 3);
        for f in &fams {
            for i in &f.instances {
                assert_eq!(
                    i.u_fraction(),
                    Some(TangleFraction::integer(3)),
                    "{}",
                    f.theorem_case
                );
            }
        }
    }

    #[test]
    fn case_four_with_swap_collapsed() {
        let fams = families(solve(2, 2, -1, 3, -3));
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].instances.len(), 1);
        assert_eq!(
            fams[0].instances[0].u.to_string(),
            "(-1/3 + -1/3) o (-1,2,0)"
        );
        assert!(fams[0].note.is_some());
    }

    #[test]
    fn parallel_orientations() {
        assert!(matches!(
            solve(2, 2, 0, 3, 3),
            BandOutcome::Obstructed { .. }
        ));
        assert!(matches!(solve(2, 2, 0, 2, 2), BandOutcome::Unknown { .. }));
        assert!(matches!(
            solve(1, 1, -1, 1, 1),
            BandOutcome::Solutions { .. }
        ));
        assert!(band_solve(0, 2, 0, OrientedTorusLink2::new(3, -3).unwrap()).is_err());
    }

    #[test]
    fn no_applicable_case() {
        assert!(families(solve(3, 3, 0, 2, -2)).is_empty());
    }

    #[test]
    fn emitted_solutions_verify() {
        let oracle = Oracle::default();
        for (m, n, w, k) in [(2, 2, -1, 3), (1, 2, 0, 2), (-1, -2, 1, -2), (2, 1, 1, 4)] {
            for mut f in families(solve(m, n, w, k, -k)) {
                assert!(f.is_solved());
                f.verify(&oracle);
                for i in &f.instances {
                    assert_eq!(
                        i.verified,
                        Verification::Verified,
                        "{} {}",
                        f.theorem_case,
                        i.u
                    );
                }
            }
        }
    }
}
