//! Rational tangle surgeries `(0, t/w)` with `|t| > 1` from a 2-bridge link
//! `N(a/b)` to a 2-bridge knot `N(z/v)`. Here `U` is a generalized
//! M-tangle, a sum of two rational tangles circle-producted with `(h, 0)`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{circle_simplified, Instance, LinkSpec, SolutionFamily, Verification};
use crate::arith::{divisors, ext_gcd, gcd, mod_inverse};
use crate::error::{Result, TangleError};
use crate::expr::TangleExpr;
use crate::fraction::TangleFraction;
use crate::two_bridge::{closure_of_rational, two_bridge_equal};

/// Residues `v, v^-1, -v, -v^-1` modulo `z`, in `[0, z)`, without repeats.
/// The first two give `N(z/v)` itself, the last two its mirror.
pub fn admissible_residues(z: i64, v: i64) -> Vec<i64> {
    let z = z.abs();
    let inv = mod_inverse(v, z).expect("v is a unit mod z");
    let mut out = Vec::new();
    for r in [v, inv, -v, -inv] {
        let r = r.rem_euclid(z);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Rational solutions of `N(U + 0) = N(2k)`, `N(U + t/w) = N(z/v')`:
/// `t/w = (z - 2kv')/(v' - (z - 2kv')h)` and `U = 2k/(2kh + 1)`, over
/// every admissible residue `v'` and every `h` in `hs`.
pub fn solve_nonband_family(
    k: i64,
    zv: TangleFraction,
    hs: impl IntoIterator<Item = i64> + Clone,
) -> Result<SolutionFamily> {
    let (z, v) = (zv.num().abs(), zv.den());
    if z % 2 == 0 {
        return Err(TangleError::precondition(format!("N({zv}) is not a knot")));
    }
    if k == 0 {
        return Err(TangleError::precondition("k must be nonzero"));
    }
    let mut fam = SolutionFamily::new(
        "non-band rational U",
        "t/w = (z-2kv')/(v'-(z-2kv')h), U = 2k/(2kh+1)",
    )
    .param("k", k)
    .param("z", z)
    .param("v", v);
    let substrate = LinkSpec::of_fraction(TangleFraction::integer(2 * k));
    for vp in admissible_residues(z, v) {
        let t = z - 2 * k * vp;
        for h in hs.clone() {
            let w = vp - t * h;
            fam.push_unique_move(Instance {
                u: TangleExpr::leaf(TangleFraction::new(2 * k, 2 * k * h + 1)?),
                p: TangleFraction::ZERO,
                r: TangleFraction::new(t, w)?,
                substrate,
                product: LinkSpec::of_fraction(TangleFraction::new(z, vp)?),
                coherent: false,
                params: BTreeMap::from([
                    ("v'".into(), vp),
                    ("h".into(), h),
                    ("t".into(), t),
                    ("w".into(), w),
                ]),
                verified: Verification::NotRequested,
            });
        }
    }
    Ok(fam)
}

impl SolutionFamily {
    /// Adds an instance unless one with the same `U` and the same move is
    /// already present.
    fn push_unique_move(&mut self, inst: Instance) {
        if !self
            .instances
            .iter()
            .any(|i| i.u == inst.u && i.r == inst.r)
        {
            self.instances.push(inst);
        }
    }
}

fn frac(n: i64, d: i64) -> Result<TangleFraction> {
    TangleFraction::new(n, d)
}

/// All generalized M-tangle solutions `U` of `N(U + 0) = N(a/b)`,
/// `N(U + t/w) = N(z/v)` for `|t| > 1`. Returns the family of whichever
/// case the residue of `w` mod `t` selects; an empty family means no
/// solution.
pub fn solve_generalized_m(
    ab: TangleFraction,
    tw: TangleFraction,
    zv: TangleFraction,
) -> Result<Vec<SolutionFamily>> {
    let (a, b) = (ab.num(), ab.den());
    let (t, w) = (tw.num(), tw.den());
    if t.abs() <= 1 {
        return Err(TangleError::precondition(format!(
            "|t| > 1 required, got t/w = {tw}"
        )));
    }
    if a == 0 || b == 0 || zv.den() == 0 {
        return Err(TangleError::Unsupported(
            "N(a/b) and N(z/v) must be nontrivial 2-bridge links".into(),
        ));
    }
    let target = closure_of_rational(zv);
    let z = zv.num().abs();
    let substrate = LinkSpec::of_fraction(ab);
    let product = LinkSpec::unoriented(target);
    let make = |u: TangleExpr, params: BTreeMap<String, i64>| Instance {
        u,
        p: TangleFraction::ZERO,
        r: tw,
        substrate,
        product,
        coherent: false,
        params,
        verified: Verification::NotRequested,
    };
    let eps: Vec<i64> = [1, -1]
        .into_iter()
        .filter(|e| (w - e).rem_euclid(t.abs()) == 0)
        .collect();

    if eps.is_empty() {
        let mut fam =
            SolutionFamily::new("generalized M (a)", "U = a/b' with b' b^(+-1) = 1 mod a")
                .param("a", a)
                .param("b", b)
                .param("t", t)
                .param("w", w);
        for s in [1, -1] {
            let num = s * z - w * a;
            if num % t != 0 {
                continue;
            }
            let bp = num / t;
            let unit = |x: i64| (bp * x - 1).rem_euclid(a.abs()) == 0;
            if gcd(bp, a) != 1 || !(unit(b) || unit(mod_inverse(b, a.abs()).unwrap_or(0))) {
                continue;
            }
            let (_, x, my) = ext_gcd(bp, a);
            let y = -my;
            debug_assert_eq!(bp * x - a * y, 1);
            if !two_bridge_equal(
                &closure_of_rational(frac(t * bp + w * a, t * y + w * x)?),
                &target,
            ) {
                continue;
            }
            fam.push_unique(make(
                TangleExpr::leaf(frac(a, bp)?),
                BTreeMap::from([("b'".into(), bp)]),
            ));
        }
        return Ok(vec![fam]);
    }

    let mut fam = SolutionFamily::new(
        "generalized M (b)",
        "U = ((da-jb)/(pb-qa) + j/p) o (-h,0) or its swap, pd - qj = 1, w = ht + eps",
    )
    .param("a", a)
    .param("b", b)
    .param("t", t)
    .param("w", w);
    for c in case_b_candidates(a, b, t, z, &eps) {
        let lhs = frac(c.s * z, t * c.q * c.r + c.eps * b)?;
        if !two_bridge_equal(&closure_of_rational(lhs), &target) {
            continue;
        }
        let h = (w - c.eps) / t;
        let (_, d, mj) = ext_gcd(c.p, c.q);
        let j = -mj;
        debug_assert_eq!(c.p * d - c.q * j, 1);
        let first = TangleExpr::leaf(frac(d * a - j * b, c.r)?);
        let second = TangleExpr::leaf(frac(j, c.p)?);
        let params = BTreeMap::from([
            ("p".into(), c.p),
            ("q".into(), c.q),
            ("eps".into(), c.eps),
            ("h".into(), h),
        ]);
        for (x, y) in [(first.clone(), second.clone()), (second, first)] {
            // untwists the (0, t/eps) solution to the (0, t/w) move
            fam.push_unique(make(
                circle_simplified(TangleExpr::sum([x, y]), &[-h, 0]),
                params.clone(),
            ));
        }
    }
    Ok(vec![fam])
}

/// A factorization `t p r = s z - eps a` admissible in case (b), with
/// `r = pb - qa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanCandidate {
    pub s: i64,
    pub eps: i64,
    pub t: i64,
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl ScanCandidate {
    pub fn is_nonrational(&self) -> bool {
        self.p > 1 && self.r.abs() > 1
    }
}

fn case_b_candidates(a: i64, b: i64, t: i64, z: i64, eps: &[i64]) -> Vec<ScanCandidate> {
    let mut out = Vec::new();
    for s in [1, -1] {
        for &e in eps {
            let m = s * z - e * a;
            if m == 0 || m % t != 0 {
                continue;
            }
            for p in divisors(m / t) {
                let r = m / t / p;
                if (p * b - r) % a != 0 {
                    continue;
                }
                let q = (p * b - r) / a;
                if gcd(p, q) != 1 {
                    continue;
                }
                out.push(ScanCandidate {
                    s,
                    eps: e,
                    t,
                    p,
                    q,
                    r,
                });
            }
        }
    }
    out
}

/// Exhaustive search for non-rational case (b) solutions from `N(2k)` to
/// either chirality of `N(z/v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub k: i64,
    pub z: i64,
    pub v: i64,
    /// Factorizations with `|t|, p, |r| > 1` and integral coprime `q`.
    pub examined: Vec<ScanCandidate>,
    /// Those whose closure also matches the target.
    pub survivors: Vec<ScanCandidate>,
}

/// Every `t` dividing `z -+ 2k` with `|t| > 1` is tried, so the scan is
/// complete.
pub fn nonrational_scan(k: i64, zv: TangleFraction) -> ScanReport {
    let (a, b) = (2 * k, 1);
    let (z, v) = (zv.num().abs(), zv.den());
    let targets = [closure_of_rational(zv), closure_of_rational(zv.neg())];
    let mut examined = Vec::new();
    let mut survivors = Vec::new();
    let mut ts: Vec<i64> = [z - a, z + a]
        .iter()
        .flat_map(|&m| divisors(m))
        .filter(|&d| d > 1)
        .flat_map(|d| [d, -d])
        .collect();
    ts.sort_unstable();
    ts.dedup();
    for t in ts {
        for c in case_b_candidates(a, b, t, z, &[1, -1]) {
            if !c.is_nonrational() {
                continue;
            }
            examined.push(c);
            let lhs = TangleFraction::new(c.s * z, t * c.q * c.r + c.eps * b).expect("nonzero");
            let l = closure_of_rational(lhs);
            if targets.iter().any(|x| two_bridge_equal(&l, x)) {
                survivors.push(c);
            }
        }
    }
    ScanReport {
        k,
        z,
        v,
        examined,
        survivors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Oracle;

    fn fr(n: i64, d: i64) -> TangleFraction {
        TangleFraction::new(n, d).unwrap()
    }

    #[test]
    fn residues() {
        assert_eq!(admissible_residues(11, 2), vec![2, 6, 9, 5]);
        assert_eq!(admissible_residues(15, 4), vec![4, 11]);
        assert_eq!(admissible_residues(35, 6), vec![6, 29]);
    }

    #[test]
    fn family_substitution() {
        let fam = solve_nonband_family(3, fr(15, 4), [0]).unwrap();
        let i = &fam.instances[0];
        assert_eq!(i.r, fr(-9, 4));
        assert_eq!(i.u_fraction(), Some(TangleFraction::integer(6)));
        assert!(solve_nonband_family(3, fr(6, 1), [0]).is_err());
    }

    #[test]
    fn family_instances_verify_or_hit_cap() {
        let oracle = Oracle::default();
        let mut fam = solve_nonband_family(3, fr(11, 2), -1..=1).unwrap();
        fam.verify(&oracle);
        let mut verified = 0;
        for i in &fam.instances {
            match &i.verified {
                Verification::Verified => verified += 1,
                Verification::CapExceeded => {}
                other => panic!("{} {}: {other}", i.u, i.r),
            }
        }
        assert!(verified >= 4);
    }

    #[test]
    fn case_a_recovers_rational_u() {
        let fams = solve_generalized_m(fr(6, 1), fr(-25, 6), fr(11, 2)).unwrap();
        assert_eq!(fams[0].theorem_case, "generalized M (a)");
        let us: Vec<_> = fams[0]
            .instances
            .iter()
            .map(|i| i.u_fraction().unwrap())
            .collect();
        assert_eq!(us, vec![TangleFraction::integer(6)]);
        assert!(solve_generalized_m(fr(6, 1), fr(1, 3), fr(11, 2)).is_err());
    }

    #[test]
    fn case_b_solutions_verify() {
        let oracle = Oracle::default();
        // v' = 3 in the family from N(4) to N(5/2) gives t/w = -3/2, w = -1 mod 3
        let fams = solve_generalized_m(fr(4, 1), fr(-3, 2), fr(5, 2)).unwrap();
        let fam = &fams[0];
        assert_eq!(fam.theorem_case, "generalized M (b)");
        assert!(fam.is_solved());
        let mut fam = fam.clone();
        fam.verify(&oracle);
        for i in &fam.instances {
            assert!(i.u_fraction().is_some(), "{}", i.u);
            assert!(
                matches!(
                    i.verified,
                    Verification::Verified | Verification::CapExceeded
                ),
                "{} {}",
                i.u,
                i.verified
            );
        }
    }

    #[test]
    fn constructed_nonrational_systems_verify() {
        let oracle = Oracle::new(20);
        let mut nonrational = 0;
        for (a, b) in [(4i64, 1i64), (5, 2), (3, 1)] {
            for (p, q) in [(2, 1), (3, 1), (2, -1), (3, 2)] {
                for (t, eps, h) in [(2, 1, 0), (3, -1, 0), (-3, 1, 1), (2, -1, 1)] {
                    let r = p * b - q * a;
                    let (z, v) = (t * p * r + eps * a, t * q * r + eps * b);
                    if r.abs() <= 1 || z == 0 || gcd(z, v) != 1 {
                        continue;
                    }
                    let w = h * t + eps;
                    let mut fams = solve_generalized_m(fr(a, b), fr(t, w), fr(z, v)).unwrap();
                    let fam = &mut fams[0];
                    let found = fam
                        .instances
                        .iter()
                        .any(|i| i.params["p"] == p && i.params["q"] == q);
                    assert!(found, "a/b={a}/{b} p={p} q={q} t={t} w={w}");
                    fam.verify(&oracle);
                    for i in &fam.instances {
                        assert!(
                            matches!(
                                i.verified,
                                Verification::Verified
                                    | Verification::CapExceeded
                                    | Verification::Ambiguous
                            ),
                            "{} for {a}/{b} t/w={t}/{w} z/v={z}/{v}: {}",
                            i.u,
                            i.verified
                        );
                        if i.u_fraction().is_none() && i.verified.is_verified() {
                            nonrational += 1;
                        }
                    }
                }
            }
        }
        assert!(nonrational > 5, "{nonrational}");
    }

    #[test]
    fn no_nonrational_solutions() {
        for (k, z, v) in [
            (3, 11, 2),
            (3, 15, 4),
            (4, 15, 2),
            (4, 23, 4),
            (5, 19, 2),
            (5, 31, 4),
            (5, 35, 6),
        ] {
            let rep = nonrational_scan(k, fr(z, v));
            assert!(rep.survivors.is_empty(), "{rep:?}");
            for c in &rep.examined {
                assert_eq!((c.t * c.p * c.r), c.s * z - c.eps * 2 * k);
            }
        }
        let rep = nonrational_scan(5, fr(35, 6));
        assert!(rep
            .examined
            .iter()
            .all(|c| (c.s * 35 - c.eps * 10).abs() == 45));
    }
}
