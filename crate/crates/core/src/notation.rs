//! Textual element notation: `e`, `t[1,0]*s1`, `s0*s2`, `tau`, `tau^-2`.
//!
//! The printer emits the canonical form `t[λ]*s_{i_1}*...*s_{i_k}` using the
//! shortlex-first reduced word of the finite part; parsing a canonical string
//! returns the element it was printed from.

use crate::affine_weyl::{AffineWeylGroup, Element};
use crate::error::{Error, Result};

pub fn format_element(g: &AffineWeylGroup, w: &Element) -> String {
    let mut parts = Vec::new();
    if w.translation.iter().any(|&x| x != 0) {
        let coords: Vec<String> = w.translation.iter().map(|x| x.to_string()).collect();
        parts.push(format!("t[{}]", coords.join(",")));
    }
    for &i in g.weyl().word(w.finite) {
        parts.push(format!("s{}", i + 1));
    }
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join("*")
    }
}

pub fn parse_element(g: &AffineWeylGroup, input: &str) -> Result<Element> {
    let err = |reason: String| Error::Parse {
        input: input.to_string(),
        reason,
    };
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(err("empty input".into()));
    }
    let mut acc = g.identity();
    for token in split_tokens(trimmed) {
        let token = token.trim();
        let factor = if token == "e" || token == "1" {
            g.identity()
        } else if let Some(body) = token.strip_prefix("t[") {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| err(format!("unterminated translation `{token}`")))?;
            let coords = body
                .split(',')
                .map(|c| c.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(format!("bad coordinate in `{token}`: {e}")))?;
            if coords.len() != g.rank() {
                return Err(err(format!(
                    "translation has {} coordinates, the lattice has rank {}",
                    coords.len(),
                    g.rank()
                )));
            }
            g.translation(&coords)
        } else if let Some(rest) = token.strip_prefix("tau") {
            let exp: i64 = match rest.strip_prefix('^') {
                None if rest.is_empty() => 1,
                None => return Err(err(format!("unknown token `{token}`"))),
                Some(e) => e
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad exponent in `{token}`")))?,
            };
            let tau = tau_generator(g).ok_or_else(|| {
                err(format!(
                    "`tau` needs a cyclic nontrivial fundamental group, found {}",
                    g.pi1()
                ))
            })?;
            let base = if exp < 0 { g.inv(&tau) } else { tau };
            g.power(&base, exp.unsigned_abs() as usize)
        } else if let Some(k) = g.generator_index(token) {
            g.generator(k).clone()
        } else {
            return Err(err(format!("unknown token `{token}`")));
        };
        acc = g.mul(&acc, &factor);
    }
    Ok(acc)
}

/// Length-zero generator of `Ω` when `π_1` is cyclic: the class `1`.
pub fn tau_generator(g: &AffineWeylGroup) -> Option<Element> {
    if g.pi1().invariant_factors().len() != 1 {
        return None;
    }
    g.omega_generators().into_iter().next()
}

fn split_tokens(s: &str) -> Vec<&str> {
    // `*` separates factors; brackets never contain `*`
    s.split('*').collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::RootDatum;

    #[test]
    fn canonical_forms() {
        let g = AffineWeylGroup::new(RootDatum::gl(2).unwrap());
        assert_eq!(format_element(&g, &g.identity()), "e");
        let w = parse_element(&g, "t[1,0]*s1").unwrap();
        assert_eq!(format_element(&g, &w), "t[1,0]*s1");
        assert_eq!(g.length(&w), 0);
        let tau = parse_element(&g, "tau").unwrap();
        assert_eq!(tau, w);
        assert_eq!(parse_element(&g, "tau^2").unwrap(), g.translation(&[1, 1]));
        assert_eq!(parse_element(&g, "tau^-1*tau").unwrap(), g.identity());
        let s0 = parse_element(&g, "s0").unwrap();
        assert_eq!(format_element(&g, &s0), "t[1,-1]*s1");
    }

    #[test]
    fn parse_errors() {
        let g = AffineWeylGroup::new(RootDatum::gl(2).unwrap());
        assert!(parse_element(&g, "t[1,0,0]").is_err());
        assert!(parse_element(&g, "s7").is_err());
        assert!(parse_element(&g, "").is_err());
        let sl = AffineWeylGroup::new(RootDatum::sl(3).unwrap());
        assert!(parse_element(&sl, "tau").is_err());
    }
}
