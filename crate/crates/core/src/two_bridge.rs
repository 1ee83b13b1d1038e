//! Schubert classification of numerator closures of rational tangles.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{gcd, mod_inverse};
use crate::error::{Result, TangleError};
use crate::fraction::TangleFraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkKind {
    TwoComponentUnlink,
    Unknot,
    TwoBridge,
}

/// Canonical `b(p, q)` with `p >= 0` and `0 <= q < p` (for `p >= 2`).
///
/// `q` carries the chirality: the mirror of `b(p, q)` is `b(p, p - q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeLink {
    p: u64,
    q: u64,
}

impl TwoBridgeLink {
    pub const UNKNOT: TwoBridgeLink = TwoBridgeLink { p: 1, q: 0 };
    pub const UNLINK: TwoBridgeLink = TwoBridgeLink { p: 0, q: 1 };

    /// `b(p, q)` from any integers with `gcd(p, q) = 1`; signs fold so that
    /// `N(-z/v) = N(z/-v)`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(TangleError::precondition(format!("b({p},{q}) needs gcd 1")));
        }
        let q = if p < 0 { -q } else { q };
        let p = p.unsigned_abs();
        Ok(match p {
            0 => Self::UNLINK,
            1 => Self::UNKNOT,
            _ => TwoBridgeLink {
                p,
                q: q.rem_euclid(p as i64) as u64,
            },
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn kind(&self) -> LinkKind {
        match self.p {
            0 => LinkKind::TwoComponentUnlink,
            1 => LinkKind::Unknot,
            _ => LinkKind::TwoBridge,
        }
    }

    pub fn components(&self) -> usize {
        if self.p.is_multiple_of(2) {
            2
        } else {
            1
        }
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub fn mirror(&self) -> Self {
        if self.p < 2 {
            *self
        } else {
            TwoBridgeLink {
                p: self.p,
                q: (self.p - self.q) % self.p,
            }
        }
    }

    /// A fraction whose numerator closure is this link.
    pub fn fraction(&self) -> TangleFraction {
        match self.p {
            0 => TangleFraction::ZERO,
            1 => TangleFraction::integer(1),
            p => TangleFraction::new(p as i64, self.q as i64).unwrap(),
        }
    }

    /// Smallest representative `q'` of the class `{q, q^{-1}}`.
    pub fn reduced_q(&self) -> u64 {
        if self.p < 2 {
            return self.q;
        }
        let inv = mod_inverse(self.q as i64, self.p as i64).unwrap() as u64;
        self.q.min(inv)
    }

    pub fn is_amphichiral(&self) -> bool {
        two_bridge_equal(self, &self.mirror())
    }

    /// Name from the fixed table, with a mirror flag.
    pub fn name(&self) -> Option<KnotName> {
        KnotName::lookup(self)
    }
}

impl fmt::Display for TwoBridgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

impl Serialize for TwoBridgeLink {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `N(a/b)` as a canonical 2-bridge link.
pub fn closure_of_rational(f: TangleFraction) -> TwoBridgeLink {
    TwoBridgeLink::new(f.num(), f.den()).expect("fractions are reduced")
}

/// Unoriented, chirality-sensitive equality: same `p` and `q' ≡ q^{±1} (mod p)`.
pub fn two_bridge_equal(a: &TwoBridgeLink, b: &TwoBridgeLink) -> bool {
    if a.p != b.p {
        return false;
    }
    if a.p < 2 {
        return true;
    }
    a.q == b.q || (a.q * b.q) % a.p == 1
}

/// Crossing number of the genus-one 2-bridge knot `N((4mn-1)/2m)`.
pub fn crossing_number_genus1(m: i64, n: i64) -> Result<u64> {
    if m == 0 || n == 0 {
        return Err(TangleError::precondition("m and n must be nonzero"));
    }
    let s = m.unsigned_abs() + n.unsigned_abs();
    Ok(if m * n > 0 { 2 * s - 1 } else { 2 * s })
}

/// `(4mn - 1)/(2m)`.
pub fn genus_one_fraction(m: i64, n: i64) -> TangleFraction {
    TangleFraction::new(4 * m * n - 1, 2 * m).expect("nonzero")
}

/// A table label with mirror flag, e.g. `7_2` or `7_2*` for its mirror.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotName {
    pub label: String,
    pub link: TwoBridgeLink,
    pub mirror: bool,
}

/// Fixed name table: label and the fraction naming the unmirrored form.
const NAME_TABLE: &[(&str, i64, i64)] = &[
    ("trefoil", 3, 1),
    ("figure-eight", 5, 2),
    ("5_2", 7, 2),
    ("7_2", 11, 2),
    ("7_4", 15, 4),
    ("9_2", 15, 2),
    ("9_5", 23, 4),
    ("11a247", 19, 2),
    ("11a343", 31, 4),
    ("11a363", 35, 6),
    ("Hopf", 2, 1),
];

/// Largest `k` for which `T(2,2k)` names are recognized.
const MAX_TORUS_K: u64 = 12;

impl KnotName {
    pub fn lookup(link: &TwoBridgeLink) -> Option<KnotName> {
        for &(label, p, q) in NAME_TABLE {
            let base = TwoBridgeLink::new(p, q).unwrap();
            if two_bridge_equal(&base, link) {
                return Some(KnotName {
                    label: label.into(),
                    link: base,
                    mirror: false,
                });
            }
            if two_bridge_equal(&base.mirror(), link) {
                return Some(KnotName {
                    label: label.into(),
                    link: base,
                    mirror: true,
                });
            }
        }
        // (2,2k)-torus links N(2k), k >= 2
        if link.p.is_multiple_of(2) && link.p >= 4 && link.p / 2 <= MAX_TORUS_K {
            let base = TwoBridgeLink::new(link.p as i64, 1).unwrap();
            let label = format!("T(2,{})", link.p);
            if two_bridge_equal(&base, link) {
                return Some(KnotName {
                    label,
                    link: base,
                    mirror: false,
                });
            }
            if two_bridge_equal(&base.mirror(), link) {
                return Some(KnotName {
                    label,
                    link: base,
                    mirror: true,
                });
            }
        }
        None
    }

    /// Parses `7_2`, `7_2*` (mirror), `trefoil`, `T(2,6)`.
    pub fn parse(s: &str) -> Result<KnotName> {
        let s = s.trim();
        let (label, mirror) = match s.strip_suffix('*') {
            Some(l) => (l, true),
            None => (s, false),
        };
        let base = if let Some(&(_, p, q)) = NAME_TABLE.iter().find(|(l, _, _)| *l == label) {
            TwoBridgeLink::new(p, q).unwrap()
        } else if let Some(inner) = label.strip_prefix("T(2,").and_then(|r| r.strip_suffix(')')) {
            let p: i64 = inner
                .trim()
                .parse()
                .map_err(|_| TangleError::UnknownName(s.into()))?;
            if p < 2 {
                return Err(TangleError::UnknownName(s.into()));
            }
            TwoBridgeLink::new(p, 1).unwrap()
        } else {
            return Err(TangleError::UnknownName(s.into()));
        };
        Ok(KnotName {
            label: label.to_string(),
            link: base,
            mirror,
        })
    }

    pub fn link(&self) -> TwoBridgeLink {
        if self.mirror {
            self.link.mirror()
        } else {
            self.link
        }
    }
}

impl fmt::Display for KnotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, if self.mirror { "*" } else { "" })
    }
}

/// `b(p,q)` plus the table label when there is one.
pub fn describe(link: &TwoBridgeLink) -> String {
    match link.kind() {
        LinkKind::Unknot => format!("{link} unknot"),
        LinkKind::TwoComponentUnlink => format!("{link} unlink"),
        LinkKind::TwoBridge => match link.name() {
            Some(n) => format!("{link} {n}"),
            None => link.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(p: i64, q: i64) -> TwoBridgeLink {
        closure_of_rational(TangleFraction::new(p, q).unwrap())
    }

    #[test]
    fn closure_examples() {
        assert_eq!(n(1, 5).kind(), LinkKind::Unknot);
        assert_eq!(n(0, 1).kind(), LinkKind::TwoComponentUnlink);
        assert_eq!(n(15, 19), TwoBridgeLink::new(15, 4).unwrap());
        assert_eq!(n(-15, 4), TwoBridgeLink::new(15, 11).unwrap());
        assert_eq!(n(1, 0), TwoBridgeLink::UNKNOT);
    }

    #[test]
    fn equality_examples() {
        assert!(two_bridge_equal(&n(11, 2), &n(11, 6)));
        assert!(!two_bridge_equal(&n(11, 2), &n(-11, 2)));
        assert_eq!(n(-11, 2), n(11, 9));
        assert!(!two_bridge_equal(&n(3, 1), &n(3, 2)));
        assert!(two_bridge_equal(&n(2, 1), &n(-2, 1)));
    }

    #[test]
    fn component_counts() {
        assert_eq!(n(6, 1).components(), 2);
        assert_eq!(n(15, 4).components(), 1);
        assert_eq!(n(0, 1).components(), 2);
    }

    #[test]
    fn crossing_numbers() {
        assert_eq!(crossing_number_genus1(1, 1).unwrap(), 3);
        assert_eq!(crossing_number_genus1(2, 2).unwrap(), 7);
        assert_eq!(crossing_number_genus1(2, -1).unwrap(), 6);
        assert!(crossing_number_genus1(0, 3).is_err());
        assert_eq!(
            genus_one_fraction(2, -1),
            TangleFraction::new(-9, 4).unwrap()
        );
    }

    #[test]
    fn names() {
        assert_eq!(n(11, 2).name().unwrap().to_string(), "7_2");
        assert_eq!(n(-11, 2).name().unwrap().to_string(), "7_2*");
        assert_eq!(n(35, 6).name().unwrap().to_string(), "11a363");
        assert_eq!(n(5, 3).name().unwrap().to_string(), "figure-eight");
        assert_eq!(n(6, 1).name().unwrap().to_string(), "T(2,6)");
        assert_eq!(n(-6, 1).name().unwrap().to_string(), "T(2,6)*");
        assert_eq!(KnotName::parse("9_5*").unwrap().link(), n(-23, 4));
        assert_eq!(KnotName::parse("T(2,8)").unwrap().link(), n(8, 1));
        assert!(KnotName::parse("8_17").is_err());
        assert!(n(5, 2).is_amphichiral());
    }

    #[test]
    fn name_table_is_injective() {
        let mut seen = Vec::new();
        for &(_, p, q) in NAME_TABLE {
            let l = TwoBridgeLink::new(p, q).unwrap();
            for s in &seen {
                assert!(!two_bridge_equal(s, &l) && !two_bridge_equal(&s.mirror(), &l));
            }
            seen.push(l);
        }
    }
}
