//! Equivalence of rational tangle surgeries: every `(P, R)` move is
//! equivalent to a `(0, t/w)` move, and `(0, t/w)` is equivalent to
//! `(0, t/(w - ht))` for every integer `h`.

use std::fmt;

use serde::Serialize;

use crate::error::{Result, TangleError};
use crate::fraction::TangleFraction;

/// A rational tangle surgery replacing `p` by `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub p: TangleFraction,
    pub r: TangleFraction,
}

impl Move {
    pub fn new(p: TangleFraction, r: TangleFraction) -> Result<Self> {
        if p == r {
            return Err(TangleError::precondition(format!(
                "move ({p}, {r}) needs P != R"
            )));
        }
        Ok(Move { p, r })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.r)
    }
}

/// Decides whether the `(0, t/w)` and `(0, c/d)` moves are equivalent,
/// i.e. `c/d = t/(w - ht)` for some integer `h`, and returns that `h`.
pub fn move_equiv_zero(t: i64, w: i64, c: i64, d: i64) -> Option<i64> {
    let target = TangleFraction::new(c, d).ok()?;
    let (c, d) = (target.num(), target.den());
    let tw = TangleFraction::new(t, w).ok()?;
    let (t, w) = (tw.num(), tw.den());
    if t == 0 {
        // (0, 0/1) only matches itself
        return (c == 0).then_some(0);
    }
    // t/(w - ht) is already reduced, so it equals c/d up to a joint sign
    if c == t && (w - d) % t == 0 {
        return Some((w - d) / t);
    }
    if c == -t && (w + d) % t == 0 {
        return Some((w + d) / t);
    }
    None
}

/// `(0, t/w)` form of a `(f1/g1, f2/g2)` move with its Bézout witness
/// `g1*e1 - f1*i1 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroForm {
    pub t: i64,
    pub w: i64,
    pub e1: i64,
    pub i1: i64,
}

impl ZeroForm {
    pub fn fraction(&self) -> TangleFraction {
        TangleFraction::new(self.t, self.w).expect("t/w is never 0/0")
    }
}

/// Converts a `(P, R)` move to a `(0, t/w)` move using the witness with the
/// smallest positive `e1`.
pub fn move_to_zero_form(p: TangleFraction, r: TangleFraction) -> Result<ZeroForm> {
    Move::new(p, r)?;
    let (f1, g1) = (p.num(), p.den());
    let (f2, g2) = (r.num(), r.den());
    let (e1, i1) = if f1 == 0 {
        (1, 0)
    } else {
        let e1 = (1..=f1.abs())
            .find(|&e| (g1 * e - 1) % f1 == 0)
            .expect("g1 is invertible mod f1");
        (e1, (g1 * e1 - 1) / f1)
    };
    debug_assert_eq!(g1 * e1 - f1 * i1, 1);
    let tw = TangleFraction::new(g1 * f2 - g2 * f1, e1 * g2 - i1 * f2)?;
    Ok(ZeroForm {
        t: tw.num(),
        w: tw.den(),
        e1,
        i1,
    })
}

/// Every witness `(e1 + k f1, i1 + k g1)` of the move, for `k` in `range`.
pub fn zero_forms(
    p: TangleFraction,
    r: TangleFraction,
    range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<ZeroForm>> {
    let base = move_to_zero_form(p, r)?;
    let (f1, g1) = (p.num(), p.den());
    let (f2, g2) = (r.num(), r.den());
    range
        .map(|k| {
            let (e1, i1) = (base.e1 + k * f1, base.i1 + k * g1);
            let tw = TangleFraction::new(g1 * f2 - g2 * f1, e1 * g2 - i1 * f2)?;
            Ok(ZeroForm {
                t: tw.num(),
                w: tw.den(),
                e1,
                i1,
            })
        })
        .collect()
}
