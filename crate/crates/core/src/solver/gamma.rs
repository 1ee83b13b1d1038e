//! Triviality of the core curve `γ_b` of the annulus cut from a genus-one
//! Seifert surface by a band, parametrized by its linking numbers `(p, q)`
//! with the cores of the two twisted bands.

use serde::{Deserialize, Serialize};

use crate::arith::{fibonacci, gcd};
use crate::error::{Result, TangleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaParams {
    pub m: i64,
    pub n: i64,
    pub p: i64,
    pub q: i64,
}

impl GammaParams {
    pub fn new(m: i64, n: i64, p: i64, q: i64) -> Self {
        GammaParams { m, n, p, q }
    }
}

fn identity(g: GammaParams) -> GammaParams {
    g
}

fn swap(g: GammaParams) -> GammaParams {
    GammaParams::new(g.n, g.m, g.q, g.p)
}

fn flip(g: GammaParams) -> GammaParams {
    GammaParams::new(-g.m, -g.n, g.p, -g.q)
}

/// Parameter changes that preserve the knot type of `γ_b` up to mirror
/// image: identity, `(b, a, d, c)` and `(-a, -b, c, -d)`.
pub const GAMMA_SYMMETRIES: [fn(GammaParams) -> GammaParams; 3] = [identity, swap, flip];

/// Fibonacci numbers large enough for any `|p|, |q|` that fits in an `i64`.
const FIB_LEN: usize = 92;

fn pm(p: i64, q: i64, a: i64, b: i64) -> bool {
    (p, q) == (a, b) || (p, q) == (-a, -b)
}

fn trefoil_set(p: i64, q: i64) -> bool {
    [(0, 1), (1, 0), (1, 1), (1, -1), (2, -1), (1, -2)]
        .iter()
        .any(|&(a, b)| pm(p, q, a, b))
}

fn figure_eight_set(p: i64, q: i64) -> bool {
    let f = fibonacci(FIB_LEN);
    f.windows(2)
        .any(|w| pm(p, q, w[0], w[1]) || pm(p, q, w[1], -w[0]))
}

/// Whether `γ_b` is the unknot.
pub fn gamma_unknot_classify(g: GammaParams) -> Result<bool> {
    let GammaParams { m, n, p, q } = g;
    if m == 0 || n == 0 {
        return Err(TangleError::precondition("m and n must be nonzero"));
    }
    if p == 0 && q == 0 {
        return Err(TangleError::precondition("(p, q) must be nonzero"));
    }
    if gcd(p, q) != 1 {
        return Ok(false);
    }
    if m.abs() == 1 && n.abs() == 1 {
        return Ok(match (m, n) {
            (1, 1) => trefoil_set(p, q),
            (1, -1) => figure_eight_set(p, q),
            (-1, 1) => figure_eight_set(q, p),
            _ => trefoil_set(p, -q),
        });
    }
    Ok(p.abs() <= 1 && q.abs() <= 1
        || n == 1 && pm(p, q, 1, -2)
        || n == -1 && pm(p, q, 1, 2)
        || m == 1 && pm(p, q, -2, 1)
        || m == -1 && pm(p, q, 2, 1))
}
