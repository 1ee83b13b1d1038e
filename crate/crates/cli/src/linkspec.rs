//! Link arguments: `b(p,q)`, `T(2,2k,lk=±k)`, fractions `z/v` or `N(z/v)`,
//! and table names such as `7_4` or `7_4*`.

use tanglekit_core::solver::LinkSpec;
use tanglekit_core::two_bridge::KnotName;
use tanglekit_core::{closure_of_rational, Result, TangleError, TangleFraction, TwoBridgeLink};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParsedLink {
    pub spec: LinkSpec,
    /// Given by table name, so chirality was not pinned down by the user.
    pub by_name: bool,
}

impl ParsedLink {
    pub fn fraction(&self) -> TangleFraction {
        self.spec.link.fraction()
    }
}

fn ints(inner: &str, s: &str) -> Result<Vec<i64>> {
    inner
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| bad(s)))
        .collect()
}

fn bad(s: &str) -> TangleError {
    TangleError::precondition(format!("cannot parse link {s:?}"))
}

pub fn parse_link(s: &str) -> Result<ParsedLink> {
    let t = s.trim();
    let exact = |spec| {
        Ok(ParsedLink {
            spec,
            by_name: false,
        })
    };
    if let Some(inner) = t.strip_prefix("b(").and_then(|r| r.strip_suffix(')')) {
        let v = ints(inner, s)?;
        if v.len() != 2 {
            return Err(bad(s));
        }
        return exact(LinkSpec::unoriented(TwoBridgeLink::new(v[0], v[1])?));
    }
    if let Some(inner) = t.strip_prefix("N(").and_then(|r| r.strip_suffix(')')) {
        return exact(LinkSpec::of_fraction(inner.parse()?));
    }
    if let Some(inner) = t.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
        if let Some((head, lk)) = inner
            .split_once(",lk=")
            .or_else(|| inner.split_once(", lk="))
        {
            let v = ints(head, s)?;
            let lk: i64 = lk.trim().parse().map_err(|_| bad(s))?;
            if v.len() != 2 || v[0] != 2 || v[1] % 2 != 0 {
                return Err(TangleError::precondition(format!(
                    "{s}: only T(2,2k) carries a linking number"
                )));
            }
            let k = v[1] / 2;
            if lk.abs() != k.abs() {
                return Err(TangleError::precondition(format!(
                    "{s}: need lk = ±{}",
                    k.abs()
                )));
            }
            return exact(LinkSpec::torus(k, lk));
        }
    }
    if t.chars()
        .next()
        .is_some_and(|c| c == '-' || c.is_ascii_digit())
        && t.contains('/')
    {
        return exact(LinkSpec::unoriented(closure_of_rational(t.parse()?)));
    }
    let name = KnotName::parse(t)?;
    let pinned = t.ends_with('*');
    Ok(ParsedLink {
        spec: LinkSpec::unoriented(name.link()),
        by_name: !pinned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let l = parse_link("b(15,4)").unwrap();
        assert_eq!(l.spec.link, TwoBridgeLink::new(15, 4).unwrap());
        assert!(!l.by_name);
        let t = parse_link("T(2,6,lk=-3)").unwrap();
        assert_eq!(t.spec.lk, Some(-3));
        assert!(parse_link("T(2,6,lk=2)").is_err());
        assert!(parse_link("7_4").unwrap().by_name);
        assert!(!parse_link("7_4*").unwrap().by_name);
        assert_eq!(
            parse_link("N(11/2)").unwrap().spec.link,
            parse_link("7_2").unwrap().spec.link
        );
        assert_eq!(
            parse_link("-11/2").unwrap().spec.link,
            parse_link("7_2*").unwrap().spec.link
        );
        assert!(parse_link("b(4,2)").is_err());
        assert!(parse_link("nonsense").is_err());
    }
}
