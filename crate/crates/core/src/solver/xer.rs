//! Xer recombination from the torus link `N(2k)` to a knot with `2k + 1`
//! crossings, and from the trefoil to the Hopf link.

use std::collections::BTreeMap;

use super::{circle_simplified, Instance, LinkSpec, SolutionFamily, Verification};
use crate::expr::TangleExpr;
use crate::fraction::TangleFraction;
use crate::two_bridge::genus_one_fraction;

/// All `(m, n)` with `m <= n`, `mn > 0` and `|m + n| = k + 1`, positive
/// class first.
pub fn knot_parameters(k: i64) -> Vec<(i64, i64)> {
    let s = k + 1;
    let pos = (1..=s / 2).map(|m| (m, s - m));
    let neg = (1..=s / 2).map(|m| (-(s - m), -m));
    pos.chain(neg).collect()
}

/// Solutions of `N(U + 0) = N(2k)` (linking number `-k`),
/// `N(U + 1/w) = N((4mn - 1)/2m)`, one family per `{m, n}`.
/// Families of the class `m, n < 0` are recorded with no instances.
pub fn solve_2k_to_2k1(k: i64, w: i64) -> Vec<SolutionFamily> {
    assert!(k >= 1, "k must be positive");
    let p = TangleFraction::ZERO;
    let r = TangleFraction::new(1, w).expect("1/w is a fraction");
    let substrate = LinkSpec::torus(k, -k);
    let mut out = Vec::new();
    for (m, n) in knot_parameters(k) {
        let product = LinkSpec::of_fraction(genus_one_fraction(m, n));
        let mut fam = SolutionFamily::new(
            "2k to 2k+1",
            "U = (-1/(2m-1) + -1/(2n-1)) o (-w-1,0) or its swap",
        )
        .param("k", k)
        .param("m", m)
        .param("n", n)
        .param("w", w);
        if m < 0 {
            fam = fam.with_note(format!(
                "no solution: needs m + n = k + 1, here m + n = {}",
                m + n
            ));
            out.push(fam);
            continue;
        }
        for (x, y) in [(m, n), (n, m)] {
            let u = TangleExpr::sum([
                TangleExpr::frac(-1, 2 * x - 1),
                TangleExpr::frac(-1, 2 * y - 1),
            ]);
            fam.push_unique(Instance {
                u: circle_simplified(u, &[-w - 1, 0]),
                p,
                r,
                substrate,
                product,
                coherent: true,
                params: BTreeMap::from([("m".into(), x), ("n".into(), y), ("w".into(), w)]),
                verified: Verification::NotRequested,
            });
        }
        if m == n {
            fam = fam.with_note("m = n: both summand orders give the same tangle");
        }
        out.push(fam);
    }
    out
}

/// `U = 3/(-3w - 2)`, the solution of `N(U + 0) = N(3)`, `N(U + 1/w) = N(2)`.
pub fn solve_trefoil_hopf(w: i64) -> TangleFraction {
    TangleFraction::new(3, -3 * w - 2).expect("-3w - 2 is never zero")
}

/// The trefoil to Hopf link family materialized for each `w` in `ws`.
pub fn trefoil_hopf_family(ws: impl IntoIterator<Item = i64>) -> SolutionFamily {
    let mut fam = SolutionFamily::new("trefoil to Hopf", "U = 3/(-3w-2)");
    for w in ws {
        fam.push_unique(Instance {
            u: TangleExpr::leaf(solve_trefoil_hopf(w)),
            p: TangleFraction::ZERO,
            r: TangleFraction::new(1, w).expect("1/w is a fraction"),
            substrate: LinkSpec::of_fraction(TangleFraction::integer(3)),
            product: LinkSpec::torus(-1, 1),
            coherent: true,
            params: BTreeMap::from([("w".into(), w)]),
            verified: Verification::NotRequested,
        });
    }
    fam
}
