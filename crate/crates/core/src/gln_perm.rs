//! `GL_n` affine permutations and the Kottwitz–Rapoport permissible set.
//!
//! `t_λ u` becomes the bijection `p` of `Z` with `p(i) = u(i) + n λ_{u(i)}` for
//! `1 ≤ i ≤ n`, extended by `p(i + n) = p(i) + n`. Under this dictionary the
//! Iwahori–Matsumoto length is the affine inversion count.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::admissible;
use crate::affine_weyl::{AffineWeylGroup, Element};
use crate::error::{Error, Result};
use crate::root_datum::{Cocharacter, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidGroupSpec("empty window".into()));
        }
        let residues: BTreeSet<i64> = window.iter().map(|x| x.rem_euclid(n as i64)).collect();
        if residues.len() != n {
            return Err(Error::Parse {
                input: format!("{window:?}"),
                reason: "window values are not distinct modulo n".into(),
            });
        }
        Ok(AffinePermutation { n, window })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `Σ (p(i) - i) / n`.
    pub fn shift(&self) -> i64 {
        let s: i64 = self
            .window
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (i as i64 + 1))
            .sum();
        s / self.n as i64
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        assert_eq!(self.n, other.n);
        AffinePermutation {
            n: self.n,
            window: (1..=self.n as i64).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    /// `#{(i, j) : 1 ≤ i ≤ n, i < j, p(i) > p(j)}`.
    pub fn inversions(&self) -> usize {
        let n = self.n as i64;
        let mut count = 0i64;
        for i in 1..=n {
            for j in 1..=n {
                let (pi, pj) = (self.apply(i), self.apply(j));
                // j + kn > i and p(j) + kn < p(i)
                let k_min = (i - j).div_euclid(n) + 1;
                let k_max = -((pj - pi).div_euclid(n)) - 1;
                count += (k_max - k_min + 1).max(0);
            }
        }
        count as usize
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn require_gl(g: &AffineWeylGroup) -> Result<usize> {
    match g.datum().spec() {
        GroupSpec::Preset { preset, n } if preset.eq_ignore_ascii_case("GL") => Ok(*n),
        other => Err(Error::WrongGroup(format!(
            "affine permutations need the GL_n preset, got {}",
            other.label()
        ))),
    }
}

/// `u(i)` for the finite part, read off the permutation matrix.
fn finite_perm(g: &AffineWeylGroup, u: usize) -> Vec<usize> {
    let m = g.weyl().matrix(u);
    let n = m.len();
    (0..n)
        .map(|i| (0..n).find(|&r| m[r][i] == 1).expect("permutation matrix"))
        .collect()
}

pub fn to_affine_perm(g: &AffineWeylGroup, w: &Element) -> Result<AffinePermutation> {
    let n = require_gl(g)?;
    let u = finite_perm(g, w.finite);
    let window = (0..n)
        .map(|i| u[i] as i64 + 1 + n as i64 * w.translation[u[i]])
        .collect();
    Ok(AffinePermutation { n, window })
}

pub fn from_affine_perm(g: &AffineWeylGroup, p: &AffinePermutation) -> Result<Element> {
    let n = require_gl(g)?;
    if p.n != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: p.n,
        });
    }
    let mut matrix = vec![vec![0i64; n]; n];
    let mut lambda = vec![0i64; n];
    for (i, &v) in p.window.iter().enumerate() {
        let r = (v - 1).rem_euclid(n as i64) as usize;
        matrix[r][i] = 1;
        lambda[r] = (v - 1 - r as i64) / n as i64;
    }
    let finite = g
        .weyl()
        .lookup(&matrix)
        .ok_or_else(|| Error::Inconsistent("permutation matrix missing from W_0".into()))?;
    Ok(Element {
        translation: lambda,
        finite,
    })
}

/// `(lo, hi, total)` for a minuscule `μ`: coordinates take the values `lo` and `hi`.
fn minuscule_shape(mu: &[i64]) -> Result<(i64, i64, i64)> {
    let lo = *mu.iter().min().ok_or_else(|| Error::NotMinuscule(mu.to_vec()))?;
    let hi = *mu.iter().max().unwrap();
    if hi - lo > 1 {
        return Err(Error::NotMinuscule(mu.to_vec()));
    }
    Ok((lo, hi, mu.iter().sum()))
}

/// `p(ω_j) - ω_j ∈ Conv(W_0 μ)` for every vertex `ω_j = (1^j, 0^{n-j})` of the base
/// alcove, together with `κ(p) = κ(t_μ)`.
pub fn is_permissible(p: &AffinePermutation, mu: &[i64]) -> Result<bool> {
    if mu.len() != p.n {
        return Err(Error::RankMismatch {
            expected: p.n,
            got: mu.len(),
        });
    }
    let (lo, hi, total) = minuscule_shape(mu)?;
    let n = p.n;
    let u: Vec<usize> = p
        .window
        .iter()
        .map(|&v| (v - 1).rem_euclid(n as i64) as usize)
        .collect();
    let lambda: Vec<i64> = {
        let mut l = vec![0; n];
        for (&v, &r) in p.window.iter().zip(&u) {
            l[r] = (v - 1 - r as i64) / n as i64;
        }
        l
    };
    if lambda.iter().sum::<i64>() != total {
        return Ok(false);
    }
    for j in 0..n {
        // λ + u(ω_j) - ω_j
        let mut d = lambda.clone();
        for &r in &u[..j] {
            d[r] += 1;
        }
        for x in d.iter_mut().take(j) {
            *x -= 1;
        }
        if d.iter().any(|&x| x != lo && x != hi) || d.iter().sum::<i64>() != total {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every permissible affine permutation. The vertex `ω_0 = 0` forces the
/// translation part into `W_0 μ`, so the search runs over `W_0 μ × S_n`.
pub fn perm_set(g: &AffineWeylGroup, mu: &[i64]) -> Result<Vec<AffinePermutation>> {
    let n = require_gl(g)?;
    minuscule_shape(mu)?;
    let orbit = g.datum().weyl_orbit(mu);
    let finite: Vec<usize> = (0..g.weyl().len()).collect();
    let candidates: Vec<(Cocharacter, usize)> = orbit
        .iter()
        .flat_map(|l| finite.iter().map(move |&u| (l.clone(), u)))
        .collect();
    let found: Result<Vec<Option<AffinePermutation>>> = candidates
        .par_iter()
        .map(|(l, u)| {
            let p = to_affine_perm(
                g,
                &Element {
                    translation: l.clone(),
                    finite: *u,
                },
            )?;
            Ok(is_permissible(&p, mu)?.then_some(p))
        })
        .collect();
    let mut out: Vec<AffinePermutation> = found?.into_iter().flatten().collect();
    debug_assert_eq!(out.iter().map(|p| p.n).max().unwrap_or(n), n);
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct PermReport {
    pub n: usize,
    pub mu: Cocharacter,
    pub adm_size: usize,
    pub perm_size: usize,
    pub equal: bool,
    pub only_in_adm: Vec<String>,
    pub only_in_perm: Vec<String>,
}

/// Compares `Perm(μ)` with the image of `Adm(μ)` under the dictionary.
pub fn adm_eq_perm_check(g: &AffineWeylGroup, mu: &[i64]) -> Result<PermReport> {
    let n = require_gl(g)?;
    let perm: BTreeSet<AffinePermutation> = perm_set(g, mu)?.into_iter().collect();
    let a = admissible::adm(g, mu);
    let adm: BTreeSet<AffinePermutation> = a
        .elements
        .iter()
        .map(|w| to_affine_perm(g, w))
        .collect::<Result<_>>()?;
    let only_in_adm: Vec<String> = adm.difference(&perm).map(|p| p.to_string()).collect();
    let only_in_perm: Vec<String> = perm.difference(&adm).map(|p| p.to_string()).collect();
    Ok(PermReport {
        n,
        mu: a.mu,
        adm_size: adm.len(),
        perm_size: perm.len(),
        equal: only_in_adm.is_empty() && only_in_perm.is_empty(),
        only_in_adm,
        only_in_perm,
    })
}
