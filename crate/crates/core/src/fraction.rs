//! Extended rationals naming rational tangles, twist words and continued fractions.
//!
//! Twisting acts on a fraction `a/b` by integer Möbius maps:
//! a horizontal twist `c` sends `a/b` to `(a + cb)/b`, a vertical twist `c`
//! sends it to `a/(ca + b)`, i.e. `f ↦ 1/(c + 1/f)`. Both are exact on the
//! infinity tangle `1/0` and the zero tangle `0/1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Result, TangleError};

/// A reduced extended rational `num/den` with `den >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TangleFraction {
    num: i64,
    den: i64,
}

impl TangleFraction {
    pub const INFINITY: TangleFraction = TangleFraction { num: 1, den: 0 };
    pub const ZERO: TangleFraction = TangleFraction { num: 0, den: 1 };

    /// Normalizes `num/den`. Any `x/0` with `x != 0` becomes `1/0`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(TangleError::InvalidFraction { num, den });
        }
        Ok(Self::normalized(num, den))
    }

    pub fn integer(n: i64) -> Self {
        TangleFraction { num: n, den: 1 }
    }

    fn normalized(num: i64, den: i64) -> Self {
        debug_assert!(num != 0 || den != 0);
        if den == 0 {
            return Self::INFINITY;
        }
        let g = gcd(num, den);
        let s = if den < 0 { -1 } else { 1 };
        TangleFraction {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            *self
        } else {
            TangleFraction {
                num: -self.num,
                den: self.den,
            }
        }
    }

    pub fn recip(&self) -> Self {
        Self::normalized(self.den, self.num)
    }

    /// Mirror image of the tangle.
    pub fn mirror(&self) -> Self {
        self.neg()
    }

    pub fn apply_twist(&self, c: i64, axis: Axis) -> Self {
        match axis {
            Axis::Horizontal => Self::normalized(self.num + c * self.den, self.den),
            Axis::Vertical => Self::normalized(self.num, c * self.num + self.den),
        }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for TangleFraction {
    type Err = TangleError;

    /// Accepts `p/q` or a bare integer. The only zero-denominator literal is `1/0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| TangleError::Syntax {
            pos: 0,
            msg: format!("{msg}: {s:?}"),
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i64 = n.parse().map_err(|_| bad("bad numerator"))?;
        let den: i64 = d.parse().map_err(|_| bad("bad denominator"))?;
        if den == 0 && num != 1 {
            return Err(TangleError::InvalidFraction { num, den });
        }
        TangleFraction::new(num, den)
    }
}

impl TryFrom<String> for TangleFraction {
    type Error = TangleError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TangleFraction> for String {
    fn from(f: TangleFraction) -> String {
        f.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Integer sequence `(c_1, ..., c_n)` of a circle product.
///
/// `c_n` is always a horizontal twist and the axes alternate going
/// backwards, so `c_i` is horizontal exactly when `n - i` is even.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TwistWord(pub Vec<i64>);

impl TwistWord {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        TwistWord(entries.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The twists in application order, each tagged with its axis.
    pub fn steps(&self) -> impl Iterator<Item = (i64, Axis)> + '_ {
        let n = self.0.len();
        self.0.iter().enumerate().map(move |(i, &c)| {
            let axis = if (n - 1 - i).is_multiple_of(2) {
                Axis::Horizontal
            } else {
                Axis::Vertical
            };
            (c, axis)
        })
    }

    /// Base tangle of the rational tangle `base ∘ word`: vertical strings
    /// (`1/0`) for even length, horizontal strings (`0/1`) for odd length.
    pub fn base(&self) -> TangleFraction {
        if self.0.len().is_multiple_of(2) {
            TangleFraction::INFINITY
        } else {
            TangleFraction::ZERO
        }
    }

    /// Total number of crossings contributed by the twist regions.
    pub fn crossings(&self) -> usize {
        self.0.iter().map(|c| c.unsigned_abs() as usize).sum()
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `c_n + 1/(c_{n-1} + ... + 1/c_1)`, with the empty word giving `1/0`.
pub fn cf_to_fraction(word: &TwistWord) -> TangleFraction {
    circle_product_fraction(word.base(), word)
}

/// Expansion with every entry of one sign (the last, `c_n`, may be zero),
/// which yields an alternating diagram.
pub fn fraction_to_cf(f: TangleFraction) -> TwistWord {
    if f.is_infinite() {
        return TwistWord::default();
    }
    if f.num() == 0 {
        return TwistWord::new(vec![0]);
    }
    let sign = f.num().signum();
    let (mut a, mut b) = (f.num().abs(), f.den());
    // Partial quotients q0, q1, ... of a/b; the word is them reversed.
    let mut quotients = Vec::new();
    while b != 0 {
        quotients.push(a / b);
        let r = a % b;
        a = b;
        b = r;
    }
    quotients.reverse();
    TwistWord::new(quotients.into_iter().map(|q| sign * q).collect::<Vec<_>>())
}

pub fn apply_twist(f: TangleFraction, c: i64, axis: Axis) -> TangleFraction {
    f.apply_twist(c, axis)
}

/// `f ∘ word` for a rational `f`.
pub fn circle_product_fraction(f: TangleFraction, word: &TwistWord) -> TangleFraction {
    word.steps()
        .fold(f, |acc, (c, axis)| acc.apply_twist(c, axis))
}
