//! Tangle expressions: rational leaves, ordered sums and circle products.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr    := primary ("o" "(" int ("," int)* ")")*
//! primary := frac | "(" expr ("+" expr)* ")"
//! frac    := int ["/" int]
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, TangleError};
use crate::fraction::{circle_product_fraction, fraction_to_cf, TangleFraction, TwistWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Rational(TangleFraction),
    /// Left-to-right tangle sum; order is significant.
    Sum(Vec<TangleExpr>),
    CircleProduct(Box<TangleExpr>, TwistWord),
}

impl TangleExpr {
    pub fn leaf(f: TangleFraction) -> Self {
        TangleExpr::Rational(f)
    }

    pub fn frac(num: i64, den: i64) -> Self {
        TangleExpr::Rational(TangleFraction::new(num, den).expect("nonzero fraction"))
    }

    pub fn int(n: i64) -> Self {
        TangleExpr::Rational(TangleFraction::integer(n))
    }

    pub fn sum(parts: impl Into<Vec<TangleExpr>>) -> Self {
        let parts = parts.into();
        assert!(parts.len() >= 2, "a sum needs at least two summands");
        TangleExpr::Sum(parts)
    }

    /// `self + other`, flattening when `self` is already a sum.
    pub fn plus(&self, other: TangleExpr) -> Self {
        match self {
            TangleExpr::Sum(parts) => {
                let mut parts = parts.clone();
                parts.push(other);
                TangleExpr::Sum(parts)
            }
            _ => TangleExpr::Sum(vec![self.clone(), other]),
        }
    }

    pub fn circle(self, word: impl Into<Vec<i64>>) -> Self {
        TangleExpr::CircleProduct(Box::new(self), TwistWord::new(word))
    }

    fn as_integer(&self) -> Option<i64> {
        match self {
            TangleExpr::Rational(f) if f.is_integer() => Some(f.num()),
            _ => None,
        }
    }

    /// Decides rationality syntactically: a leaf, a circle product of a
    /// rational subtree, or a sum in which at most one summand is a
    /// rational non-integer and every other summand is an integer leaf.
    pub fn is_rational(&self) -> bool {
        self.evaluate().is_some()
    }

    /// Fraction of a rational expression, `None` otherwise.
    pub fn evaluate(&self) -> Option<TangleFraction> {
        match self {
            TangleExpr::Rational(f) => Some(*f),
            TangleExpr::CircleProduct(inner, word) => {
                inner.evaluate().map(|f| circle_product_fraction(f, word))
            }
            TangleExpr::Sum(parts) => {
                let mut shift = 0i64;
                let mut core: Option<TangleFraction> = None;
                for p in parts {
                    if let Some(n) = p.as_integer() {
                        shift += n;
                    } else if core.is_none() {
                        core = Some(p.evaluate()?);
                    } else {
                        return None;
                    }
                }
                let base = core.unwrap_or(TangleFraction::ZERO);
                Some(base.apply_twist(shift, crate::fraction::Axis::Horizontal))
            }
        }
    }

    pub fn try_fraction(&self) -> Result<TangleFraction> {
        self.evaluate()
            .ok_or_else(|| TangleError::NotRational(self.to_string()))
    }

    /// Crossings in the expanded diagram (leaves drawn from their
    /// one-signed continued fraction).
    pub fn crossing_count(&self) -> usize {
        match self {
            TangleExpr::Rational(f) => fraction_to_cf(*f).crossings(),
            TangleExpr::Sum(parts) => parts.iter().map(|p| p.crossing_count()).sum(),
            TangleExpr::CircleProduct(inner, word) => inner.crossing_count() + word.crossings(),
        }
    }

    /// Mirror image: every leaf and twist negated.
    pub fn mirror(&self) -> Self {
        match self {
            TangleExpr::Rational(f) => TangleExpr::Rational(f.mirror()),
            TangleExpr::Sum(parts) => TangleExpr::Sum(parts.iter().map(|p| p.mirror()).collect()),
            TangleExpr::CircleProduct(inner, word) => TangleExpr::CircleProduct(
                Box::new(inner.mirror()),
                TwistWord::new(word.entries().iter().map(|c| -c).collect::<Vec<_>>()),
            ),
        }
    }
}

impl From<TangleFraction> for TangleExpr {
    fn from(f: TangleFraction) -> Self {
        TangleExpr::Rational(f)
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Rational(q) => write!(f, "{q}"),
            TangleExpr::Sum(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            TangleExpr::CircleProduct(inner, word) => write!(f, "{inner} o {word}"),
        }
    }
}

impl FromStr for TangleExpr {
    type Err = TangleError;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

pub fn parse_expr(text: &str) -> Result<TangleExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> TangleError {
        TangleError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<TangleExpr> {
        let mut e = self.primary()?;
        while self.peek() == Some(b'o') {
            self.pos += 1;
            self.expect(b'(')?;
            let mut word = vec![self.int()?];
            while self.peek() == Some(b',') {
                self.pos += 1;
                word.push(self.int()?);
            }
            self.expect(b')')?;
            e = TangleExpr::CircleProduct(Box::new(e), TwistWord::new(word));
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<TangleExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let mut parts = vec![self.expr()?];
                while self.peek() == Some(b'+') {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                self.expect(b')')?;
                Ok(if parts.len() == 1 {
                    parts.pop().unwrap()
                } else {
                    TangleExpr::Sum(parts)
                })
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => self.frac(),
            Some(_) => Err(self.error("expected a fraction or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| TangleError::Syntax {
                pos: start,
                msg: "expected an integer".into(),
            })
    }

    fn frac(&mut self) -> Result<TangleExpr> {
        let start = self.pos;
        let num = self.int()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.int()?
        } else {
            1
        };
        if den == 0 && num != 1 {
            return Err(TangleError::Syntax {
                pos: start,
                msg: format!("zero denominator in {num}/0 (only 1/0 is allowed)"),
            });
        }
        Ok(TangleExpr::Rational(TangleFraction::new(num, den)?))
    }
}
