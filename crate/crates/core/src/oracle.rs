//! Brute-force reference implementations, kept independent of the fast paths
//! in [`crate::affine_weyl`] and [`crate::admissible`].
//!
//! Lengths here count affine root hyperplanes separating the base alcove from
//! its image, Bruhat order is decided by subword products, and `GL_n` Newton
//! sets come from enumerating concave polygons with integral break points.

use std::collections::{BTreeSet, HashSet};

use crate::affine_weyl::{AffineWeylGroup, Element};
use crate::finite_weyl::strictly_dominant_point;
use crate::lattice::dot;
use crate::root_datum::{Cocharacter, RationalCocharacter};
use crate::sigma::SigmaAction;

/// A fixed interior point of the base alcove, stored as `point / denom`.
#[derive(Clone, Debug)]
pub struct AlcoveOracle {
    point: Vec<i64>,
    denom: i64,
}

impl AlcoveOracle {
    pub fn new(g: &AffineWeylGroup) -> Self {
        let rd = g.datum();
        let point = strictly_dominant_point(rd);
        if rd.semisimple_rank() == 0 {
            return AlcoveOracle { point, denom: 1 };
        }
        // <point, alpha_i> is the same constant for every simple root
        let d = dot(&point, &rd.simple_roots()[0]);
        let h = (0..rd.positive_roots().len()).map(|k| rd.height(k)).max().unwrap_or(0);
        AlcoveOracle {
            point,
            denom: d * (h + 1),
        }
    }

    fn image(&self, g: &AffineWeylGroup, w: &Element) -> Vec<i64> {
        g.act_on_point(w, &self.point, self.denom)
    }

    /// Number of affine root hyperplanes between the base alcove and `w(a)`.
    pub fn length(&self, g: &AffineWeylGroup, w: &Element) -> usize {
        let x = self.image(g, w);
        g.datum()
            .positive_roots()
            .iter()
            .map(|a| dot(&x, a).div_euclid(self.denom).unsigned_abs() as usize)
            .sum()
    }

    /// `w` stabilises the base alcove.
    pub fn in_omega(&self, g: &AffineWeylGroup, w: &Element) -> bool {
        let x = self.image(g, w);
        g.datum().positive_roots().iter().all(|a| {
            let v = dot(&x, a);
            v > 0 && v < self.denom
        })
    }

    /// `w = s_{k_1} ... s_{k_m} ω` found by walking towards the base alcove.
    pub fn reduced_word(&self, g: &AffineWeylGroup, w: &Element) -> (Vec<usize>, Element) {
        let mut cur = w.clone();
        let mut word = Vec::new();
        let mut l = self.length(g, &cur);
        while l > 0 {
            let (k, next) = (0..g.generators().len())
                .map(|k| (k, g.mul(g.generator(k), &cur)))
                .find(|(_, v)| self.length(g, v) < l)
                .expect("an alcove off the base has a wall facing it");
            word.push(k);
            cur = next;
            l -= 1;
        }
        (word, cur)
    }

    /// `{v : v ≤ w}` as the set of all subword products of one reduced word.
    pub fn lower_interval(&self, g: &AffineWeylGroup, w: &Element) -> HashSet<Element> {
        let (word, omega) = self.reduced_word(g, w);
        let mut acc: HashSet<Element> = HashSet::from([g.identity()]);
        for &k in &word {
            let s = g.generator(k);
            let extra: Vec<Element> = acc.iter().map(|x| g.mul(x, s)).collect();
            acc.extend(extra);
        }
        acc.into_iter().map(|x| g.mul(&x, &omega)).collect()
    }

    pub fn bruhat_leq(&self, g: &AffineWeylGroup, v: &Element, w: &Element) -> bool {
        self.lower_interval(g, w).contains(v)
    }

    /// Every element of the coset `W_a ω` of alcove length at most `max_len`.
    pub fn ball(&self, g: &AffineWeylGroup, omega: &Element, max_len: usize) -> Vec<Element> {
        let mut all: BTreeSet<Element> = BTreeSet::from([omega.clone()]);
        let mut level = vec![omega.clone()];
        for l in 1..=max_len {
            let mut next = BTreeSet::new();
            for v in &level {
                for k in 0..g.generators().len() {
                    let u = g.mul(g.generator(k), v);
                    if self.length(g, &u) == l {
                        next.insert(u);
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next.into_iter().collect();
        }
        all.into_iter().collect()
    }

    /// `Adm(μ)` by filtering the ball of radius `l(t_μ)` through subword Bruhat order.
    pub fn brute_force_adm(&self, g: &AffineWeylGroup, mu: &[i64]) -> BTreeSet<Element> {
        let tops: Vec<Element> = g
            .datum()
            .weyl_orbit(mu)
            .iter()
            .map(|x| g.translation(x))
            .collect();
        let top_len = self.length(g, &tops[0]);
        let (_, omega) = self.reduced_word(g, &tops[0]);
        let intervals: Vec<HashSet<Element>> = tops.iter().map(|t| self.lower_interval(g, t)).collect();
        self.ball(g, &omega, top_len)
            .into_iter()
            .filter(|w| intervals.iter().any(|i| i.contains(w)))
            .collect()
    }

    /// `n l(w) = l(w σ(w) ... σ^{n-1}(w))` for `n = 1..=n_max`.
    pub fn is_straight(&self, g: &AffineWeylGroup, sigma: &SigmaAction, w: &Element, n_max: usize) -> bool {
        let l = self.length(g, w);
        let mut acc = g.identity();
        let mut twisted = w.clone();
        for n in 1..=n_max {
            acc = g.mul(&acc, &twisted);
            if self.length(g, &acc) != n * l {
                return false;
            }
            twisted = g.sigma_apply(sigma, &twisted);
        }
        true
    }
}

/// Minimal number of affine simple reflections `k` with `w = s_1 ... s_k ω`, searched
/// breadth-first up to `max_len`.
pub fn word_length_bfs(g: &AffineWeylGroup, w: &Element, max_len: usize) -> Option<usize> {
    let alc = AlcoveOracle::new(g);
    let mut seen: HashSet<Element> = HashSet::from([w.clone()]);
    let mut level = vec![w.clone()];
    for l in 0..=max_len {
        if level.iter().any(|v| alc.in_omega(g, v)) {
            return Some(l);
        }
        let mut next = Vec::new();
        for v in &level {
            for k in 0..g.generators().len() {
                let u = g.mul(g.generator(k), v);
                if seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        level = next;
    }
    None
}

/// `B(GL_n, μ)` for `σ = id`: concave polygons from `(0,0)` to `(n, |μ|)` with
/// integral break points lying below the polygon of `μ`. Slopes are returned as
/// dominant rational cocharacters, sorted.
pub fn gl_newton_polygons(mu: &[i64]) -> Vec<RationalCocharacter> {
    let mut m = mu.to_vec();
    m.sort_unstable_by(|a, b| b.cmp(a));
    let n = m.len();
    let total: i64 = m.iter().sum();
    let (hi, lo) = (m[0], m[n - 1]);
    let mut out = BTreeSet::new();
    let mut blocks: Vec<(usize, i64)> = Vec::new();
    polygon_search(&m, n, total, hi, lo, 0, 0, None, &mut blocks, &mut out);
    out.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn polygon_search(
    mu: &[i64],
    n: usize,
    total: i64,
    hi: i64,
    lo: i64,
    x: usize,
    y: i64,
    prev: Option<(i64, usize)>,
    blocks: &mut Vec<(usize, i64)>,
    out: &mut BTreeSet<RationalCocharacter>,
) {
    if x == n {
        if y != total {
            return;
        }
        // expand to a slope vector over a common denominator
        let den = blocks.iter().fold(1i64, |acc, &(len, _)| num_integer::lcm(acc, len as i64));
        let mut numer = Vec::with_capacity(n);
        for &(len, rise) in blocks.iter() {
            numer.extend(std::iter::repeat_n(rise * den / len as i64, len));
        }
        // the polygon of ν must lie on or below that of μ
        let mut pn = 0i64;
        let mut pm = 0i64;
        for i in 0..n {
            pn += numer[i];
            pm += mu[i] * den;
            if pn > pm {
                return;
            }
        }
        out.insert(RationalCocharacter::new(numer, den));
        return;
    }
    for len in 1..=n - x {
        for rise in lo * len as i64..=hi * len as i64 {
            // slopes strictly decrease: rise/len < prev_rise/prev_len
            if let Some((pr, pl)) = prev {
                if rise * pl as i64 >= pr * len as i64 {
                    continue;
                }
            }
            blocks.push((len, rise));
            polygon_search(mu, n, total, hi, lo, x + len, y + rise, Some((rise, len)), blocks, out);
            blocks.pop();
        }
    }
}

/// Sum of coordinates: the Kottwitz invariant for `GL_n`.
pub fn gl_kappa(lambda: &[i64]) -> i64 {
    lambda.iter().sum()
}

/// All cocharacters with coordinates in `lo..=hi`.
pub fn box_points(rank: usize, lo: i64, hi: i64) -> Vec<Cocharacter> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible;
    use crate::root_datum::RootDatum;

    fn gl(n: usize) -> AffineWeylGroup {
        AffineWeylGroup::new(RootDatum::gl(n).unwrap())
    }

    #[test]
    fn alcove_length_matches_formula() {
        for g in [gl(2), gl(3), AffineWeylGroup::new(RootDatum::gsp(4).unwrap())] {
            let alc = AlcoveOracle::new(&g);
            for w in alc.ball(&g, &g.identity(), 4) {
                assert_eq!(alc.length(&g, &w), g.length(&w));
            }
            for p in box_points(g.rank(), -2, 2) {
                let t = g.translation(&p);
                assert_eq!(alc.length(&g, &t), g.length(&t), "{p:?}");
            }
        }
    }

    #[test]
    fn word_search_lengths() {
        let g = gl(2);
        assert_eq!(word_length_bfs(&g, &g.translation(&[1, 0]), 3), Some(1));
        assert_eq!(word_length_bfs(&g, &g.translation(&[1, 1]), 3), Some(0));
        let g3 = gl(3);
        assert_eq!(word_length_bfs(&g3, &g3.translation(&[1, 0, 0]), 3), Some(2));
    }

    #[test]
    fn drinfeld_counts() {
        for n in 2..=5 {
            let g = gl(n);
            let alc = AlcoveOracle::new(&g);
            let mut mu = vec![0; n];
            mu[0] = 1;
            let brute = alc.brute_force_adm(&g, &mu);
            assert_eq!(brute.len(), (1 << n) - 1);
            let fast: BTreeSet<Element> = admissible::adm(&g, &mu).elements.into_iter().collect();
            assert_eq!(brute, fast);
        }
    }

    #[test]
    fn newton_polygons_gl2_and_gl3() {
        let p = gl_newton_polygons(&[1, 0]);
        assert_eq!(
            p,
            vec![RationalCocharacter::new(vec![1, 0], 1), RationalCocharacter::new(vec![1, 1], 2)]
        );
        assert_eq!(gl_newton_polygons(&[1, 1]).len(), 1);
        // (1,0,0): slopes (1/3^3) and (1,0,0) and (1/2,1/2,0)
        assert_eq!(gl_newton_polygons(&[1, 0, 0]).len(), 3);
        // (2,1,0): polygons under (2,1,0) through (3,3)
        assert_eq!(gl_newton_polygons(&[2, 1, 0]).len(), 4);
    }
}
