use serde::{Deserialize, Serialize};

use super::{Link, PlumbingGraph, SeifertData};
use crate::{Error, Result};

/// Link input as accepted on the command line and over FFI.
///
/// JSON forms: `{"seifert":{"b":2,"fibers":[[2,1],[3,1],[5,1]]}}`,
/// `{"lens":[5,2]}`, `{"graph":{"weights":[-2,-2],"edges":[[0,1]]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum LinkDescriptor {
    Seifert { b: i64, fibers: Vec<(i64, i64)> },
    Lens((i64, i64)),
    Graph(PlumbingGraph),
}

impl LinkDescriptor {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("link descriptor: {e}")))
    }

    /// Normal-form link. Seifert data with fewer than three fibers becomes a
    /// lens space when possible.
    pub fn to_link(&self) -> Result<Link> {
        match self {
            LinkDescriptor::Seifert { b, fibers } => Link::from_seifert(SeifertData::new(*b, fibers)?),
            LinkDescriptor::Lens((p, q)) => Link::lens(*p, *q),
            LinkDescriptor::Graph(g) => g.to_link(),
        }
    }
}

fn parse_int(s: &str, what: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected an integer for {what}, got {s:?}")))
}

/// `p,q`
pub fn parse_lens_shorthand(s: &str) -> Result<LinkDescriptor> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [p, q] => Ok(LinkDescriptor::Lens((parse_int(p, "p")?, parse_int(q, "q")?))),
        _ => Err(Error::Parse(format!("lens shorthand must be `p,q`, got {s:?}"))),
    }
}

/// `b;(p1,q1)(p2,q2)…`
pub fn parse_seifert_shorthand(s: &str) -> Result<LinkDescriptor> {
    let (b, rest) = s
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("Seifert shorthand must be `b;(p,q)...`, got {s:?}")))?;
    let b = parse_int(b, "b")?;
    let mut fibers = Vec::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in Seifert shorthand at {rest:?}")))?;
        let (pair, tail) = body
            .split_once(')')
            .ok_or_else(|| Error::Parse(format!("unclosed fiber in Seifert shorthand {s:?}")))?;
        let (p, q) = pair
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("fiber must be `(p,q)`, got ({pair})")))?;
        fibers.push((parse_int(p, "p")?, parse_int(q, "q")?));
        rest = tail.trim_start();
    }
    Ok(LinkDescriptor::Seifert { b, fibers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let d = LinkDescriptor::from_json(r#"{"seifert":{"b":2,"fibers":[[2,1],[3,1],[5,1]]}}"#).unwrap();
        assert_eq!(
            d,
            LinkDescriptor::Seifert {
                b: 2,
                fibers: vec![(2, 1), (3, 1), (5, 1)]
            }
        );
        assert_eq!(
            LinkDescriptor::from_json(r#"{"lens":[5,2]}"#).unwrap(),
            LinkDescriptor::Lens((5, 2))
        );
        let g = LinkDescriptor::from_json(r#"{"graph":{"weights":[-3,-2],"edges":[[0,1]]}}"#).unwrap();
        assert_eq!(g.to_link().unwrap(), Link::lens(5, 2).unwrap());
        assert_eq!(
            serde_json::to_string(&LinkDescriptor::Lens((5, 2))).unwrap(),
            r#"{"lens":[5,2]}"#
        );
    }

    #[test]
    fn bad_json_is_a_parse_error() {
        for bad in [r#"{"lens":[5]}"#, r#"{"torus":1}"#, "not json", r#"{"lens":[5,2],"x":1}"#] {
            let err = LinkDescriptor::from_json(bad).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn shorthands() {
        assert_eq!(parse_lens_shorthand("5,2").unwrap(), LinkDescriptor::Lens((5, 2)));
        assert_eq!(
            parse_seifert_shorthand("2;(2,1)(3,2)(5,4)").unwrap(),
            LinkDescriptor::Seifert {
                b: 2,
                fibers: vec![(2, 1), (3, 2), (5, 4)]
            }
        );
        assert_eq!(
            parse_seifert_shorthand(" 3 ; (2, 1) (2,1)").unwrap(),
            LinkDescriptor::Seifert {
                b: 3,
                fibers: vec![(2, 1), (2, 1)]
            }
        );
        assert!(parse_seifert_shorthand("2;(2,1").is_err());
        assert!(parse_seifert_shorthand("2(2,1)").is_err());
        assert!(parse_lens_shorthand("5").is_err());
        assert!(parse_lens_shorthand("a,b").is_err());
    }
}
