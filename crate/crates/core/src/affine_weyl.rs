//! The extended affine Weyl group `W = X_*(T) ⋊ W_0`.
//!
//! An element `t_λ u` acts on `X_*(T) ⊗ R` by `x -> λ + u(x)`. The base alcove
//! is `{x : 0 < <x, α> < 1 for all α > 0}`, so the affine simple reflections
//! are the finite simple reflections plus, for each irreducible component with
//! highest root `θ`, the reflection `s_0 = t_{θ^∨} s_θ` in `<x, θ> = 1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fin_ab::{FinAbGroup, GroupElement};
use crate::finite_weyl::FiniteWeyl;
use crate::lattice;
use crate::root_datum::{Cocharacter, RootDatum};
use crate::sigma::SigmaAction;

/// `t_λ u`: translation part plus an index into the finite Weyl group table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub translation: Cocharacter,
    pub finite: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    /// Finite simple reflection `s_{i+1}`.
    Finite(usize),
    /// Affine node of an irreducible component.
    Affine(usize),
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
    pub element: Element,
}

#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    datum: RootDatum,
    weyl: FiniteWeyl,
    pi1: FinAbGroup,
    generators: Vec<Generator>,
}

impl AffineWeylGroup {
    pub fn new(datum: RootDatum) -> Self {
        let weyl = FiniteWeyl::new(&datum);
        let pi1 = datum.fundamental_group(None);
        let mut generators = Vec::new();
        for c in 0..datum.components().len() {
            let k = datum.highest_root(c);
            let m = datum.reflection_matrix(&datum.positive_roots()[k], &datum.positive_coroots()[k]);
            let finite = weyl.lookup(&m).expect("reflection lies in W_0");
            generators.push(Generator {
                name: if c == 0 { "s0".to_string() } else { format!("s0_{c}") },
                kind: GeneratorKind::Affine(c),
                element: Element {
                    translation: datum.positive_coroots()[k].clone(),
                    finite,
                },
            });
        }
        for i in 0..datum.semisimple_rank() {
            generators.push(Generator {
                name: format!("s{}", i + 1),
                kind: GeneratorKind::Finite(i),
                element: Element {
                    translation: vec![0; datum.rank()],
                    finite: weyl.simple(i),
                },
            });
        }
        AffineWeylGroup {
            datum,
            weyl,
            pi1,
            generators,
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn weyl(&self) -> &FiniteWeyl {
        &self.weyl
    }

    /// `π_1(G) = X_*(T) / Q^∨`.
    pub fn pi1(&self) -> &FinAbGroup {
        &self.pi1
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Affine simple reflections `𝕊`, affine nodes first.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> &Element {
        &self.generators[k].element
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn identity(&self) -> Element {
        Element {
            translation: vec![0; self.rank()],
            finite: self.weyl.identity(),
        }
    }

    pub fn translation(&self, lambda: &[i64]) -> Element {
        assert_eq!(lambda.len(), self.rank(), "translation of the wrong rank");
        Element {
            translation: lambda.to_vec(),
            finite: self.weyl.identity(),
        }
    }

    /// Finite simple reflection `s_{i+1}`.
    pub fn simple_reflection(&self, i: usize) -> Element {
        Element {
            translation: vec![0; self.rank()],
            finite: self.weyl.simple(i),
        }
    }

    pub fn finite_element(&self, u: usize) -> Element {
        Element {
            translation: vec![0; self.rank()],
            finite: u,
        }
    }

    pub fn is_translation(&self, w: &Element) -> bool {
        w.finite == self.weyl.identity()
    }

    /// `(λ_1, u_1)(λ_2, u_2) = (λ_1 + u_1 λ_2, u_1 u_2)`.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        debug_assert_eq!(a.translation.len(), b.translation.len());
        let moved = self.weyl.apply(a.finite, &b.translation);
        Element {
            translation: a.translation.iter().zip(&moved).map(|(x, y)| x + y).collect(),
            finite: self.weyl.mul(a.finite, b.finite),
        }
    }

    pub fn checked_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Validates that an element belongs to this group.
    pub fn check(&self, a: &Element) -> Result<()> {
        if a.translation.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: a.translation.len(),
            });
        }
        if a.finite >= self.weyl.len() {
            return Err(Error::WrongGroup(format!("finite part index {} out of range", a.finite)));
        }
        Ok(())
    }

    /// `(t_λ u)^{-1} = t_{-u^{-1} λ} u^{-1}`.
    pub fn inv(&self, a: &Element) -> Element {
        let ui = self.weyl.inverse(a.finite);
        Element {
            translation: self.weyl.apply(ui, &a.translation).iter().map(|x| -x).collect(),
            finite: ui,
        }
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Element {
        items
            .into_iter()
            .fold(self.identity(), |acc, x| self.mul(&acc, x))
    }

    pub fn power(&self, w: &Element, n: usize) -> Element {
        (0..n).fold(self.identity(), |acc, _| self.mul(&acc, w))
    }

    /// Iwahori–Matsumoto length:
    /// `Σ_{α>0, u^{-1}α>0} |<λ,α>| + Σ_{α>0, u^{-1}α<0} |<λ,α> - 1|`.
    pub fn length(&self, w: &Element) -> usize {
        self.length_with(w, self.datum.positive_roots(), |k| self.weyl.sends_negative(w.finite, k))
    }

    pub(crate) fn length_with(
        &self,
        w: &Element,
        roots: &[Vec<i64>],
        negative: impl Fn(usize) -> bool,
    ) -> usize {
        roots
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let p = lattice::dot(&w.translation, a);
                if negative(k) {
                    (p - 1).unsigned_abs() as usize
                } else {
                    p.unsigned_abs() as usize
                }
            })
            .sum()
    }

    /// First generator `s` (in generator order) with `l(s w) < l(w)`.
    pub fn left_descent(&self, w: &Element) -> Option<usize> {
        let l = self.length(w);
        (0..self.generators.len()).find(|&k| self.length(&self.mul(self.generator(k), w)) < l)
    }

    pub fn right_descent(&self, w: &Element) -> Option<usize> {
        let l = self.length(w);
        (0..self.generators.len()).find(|&k| self.length(&self.mul(w, self.generator(k))) < l)
    }

    /// Greedy left-descent factorisation `w = s_{k_1} ... s_{k_m} ω` with `l(ω) = 0`.
    pub fn reduced_word(&self, w: &Element) -> (Vec<usize>, Element) {
        let mut cur = w.clone();
        let mut word = Vec::new();
        while let Some(k) = self.left_descent(&cur) {
            cur = self.mul(self.generator(k), &cur);
            word.push(k);
        }
        (word, cur)
    }

    /// The `Ω`-component of `w` under `W = W_a ⋊ Ω`.
    pub fn omega_part(&self, w: &Element) -> Element {
        self.reduced_word(w).1
    }

    pub fn word_names(&self, word: &[usize]) -> Vec<String> {
        word.iter().map(|&k| self.generators[k].name.clone()).collect()
    }

    /// Kottwitz map `W -> π_1(G)`: class of the translation part.
    pub fn kottwitz(&self, w: &Element) -> GroupElement {
        self.kappa_of(&w.translation)
    }

    pub fn kappa_of(&self, lambda: &[i64]) -> GroupElement {
        self.pi1
            .project(lambda)
            .expect("X_*(T) is the full lattice")
    }

    /// Bruhat order via the descent recursion: with `s` a left descent of `w`,
    /// `v ≤ w` iff `sv ≤ sw` when `sv < v`, and iff `v ≤ sw` otherwise.
    pub fn bruhat_leq(&self, v: &Element, w: &Element) -> bool {
        if self.kottwitz(v) != self.kottwitz(w) {
            return false;
        }
        let mut v = v.clone();
        let mut w = w.clone();
        loop {
            let (lv, lw) = (self.length(&v), self.length(&w));
            if lv > lw {
                return false;
            }
            if lw == 0 {
                return v == w;
            }
            if lv == lw {
                return v == w;
            }
            let k = self.left_descent(&w).expect("positive length has a descent");
            let s = self.generator(k);
            let sv = self.mul(s, &v);
            if self.length(&sv) < lv {
                v = sv;
            }
            w = self.mul(s, &w);
        }
    }

    /// `σ(t_λ u) = t_{σλ} σ u σ^{-1}`.
    pub fn sigma_apply(&self, sigma: &SigmaAction, w: &Element) -> Element {
        let m = sigma.matrix();
        let inv = self.sigma_inverse_matrix(sigma);
        let conj = lattice::mat_mul(&lattice::mat_mul(m, self.weyl.matrix(w.finite)), &inv);
        Element {
            translation: sigma.apply(&w.translation),
            finite: self
                .weyl
                .lookup(&conj)
                .expect("sigma normalises W_0"),
        }
    }

    pub fn sigma_power_apply(&self, sigma: &SigmaAction, k: usize, w: &Element) -> Element {
        (0..k % sigma.order()).fold(w.clone(), |acc, _| self.sigma_apply(sigma, &acc))
    }

    fn sigma_inverse_matrix(&self, sigma: &SigmaAction) -> lattice::IntMatrix {
        let mut inv = lattice::identity(self.rank());
        for _ in 0..sigma.order() - 1 {
            inv = lattice::mat_mul(&inv, sigma.matrix());
        }
        inv
    }

    /// Checks that `sigma` is an automorphism of this group's datum.
    pub fn check_sigma(&self, sigma: &SigmaAction) -> Result<()> {
        SigmaAction::from_matrix(&self.datum, sigma.matrix().clone()).map(|_| ())
    }

    /// Image of a generator index under `σ`.
    pub fn sigma_generator(&self, sigma: &SigmaAction, k: usize) -> usize {
        let image = self.sigma_apply(sigma, self.generator(k));
        (0..self.generators.len())
            .find(|&j| *self.generator(j) == image)
            .expect("sigma permutes the affine simple reflections")
    }

    /// The unique length-zero element with Kottwitz class equal to that of `λ`.
    pub fn omega_for_translation(&self, lambda: &[i64]) -> Element {
        self.omega_part(&self.translation(lambda))
    }

    /// Length-zero lifts of the standard generators of `π_1`.
    pub fn omega_generators(&self) -> Vec<Element> {
        self.pi1
            .generator_lifts()
            .iter()
            .map(|l| self.omega_for_translation(l))
            .collect()
    }

    /// Minimal-length representative of `W_K w W_K` by descent on both sides.
    pub fn double_coset_rep(&self, w: &Element, level: &ParahoricLevel) -> Element {
        let mut cur = w.clone();
        loop {
            let l = self.length(&cur);
            let mut moved = false;
            for &k in level.generators() {
                let s = self.generator(k);
                let left = self.mul(s, &cur);
                if self.length(&left) < l {
                    cur = left;
                    moved = true;
                    break;
                }
                let right = self.mul(&cur, s);
                if self.length(&right) < l {
                    cur = right;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return cur;
            }
        }
    }

    /// Deterministic order: length, then translation, then finite part.
    pub fn cmp_elements(&self, a: &Element, b: &Element) -> Ordering {
        self.length(a)
            .cmp(&self.length(b))
            .then_with(|| a.translation.cmp(&b.translation))
            .then_with(|| a.finite.cmp(&b.finite))
    }

    pub fn sort_elements(&self, v: &mut [Element]) {
        v.sort_by_cached_key(|e| (self.length(e), e.translation.clone(), e.finite));
    }

    /// Image of a rational point (numerators over a common denominator).
    pub fn act_on_point(&self, w: &Element, numer: &[i64], denom: i64) -> Vec<i64> {
        let moved = self.weyl.apply(w.finite, numer);
        moved
            .iter()
            .zip(&w.translation)
            .map(|(m, t)| m + t * denom)
            .collect()
    }
}

/// A subset `K ⊂ 𝕊` with finite `W_K`, stable under the chosen `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParahoricLevel {
    generators: Vec<usize>,
}

impl ParahoricLevel {
    pub fn iwahori() -> Self {
        ParahoricLevel {
            generators: Vec::new(),
        }
    }

    pub fn new(group: &AffineWeylGroup, generators: &[usize], sigma: &SigmaAction) -> Result<Self> {
        let set: BTreeSet<usize> = generators.iter().copied().collect();
        for &k in &set {
            if k >= group.generators().len() {
                return Err(Error::InvalidLevel(format!("generator index {k} out of range")));
            }
            let image = group.sigma_generator(sigma, k);
            if !set.contains(&image) {
                return Err(Error::InvalidLevel(format!(
                    "not sigma-stable: {} maps to {}",
                    group.generators()[k].name,
                    group.generators()[image].name
                )));
            }
        }
        for (c, nodes) in group.datum().components().iter().enumerate() {
            let affine = group
                .generators()
                .iter()
                .position(|g| g.kind == GeneratorKind::Affine(c))
                .expect("affine node per component");
            let finite_all = nodes.iter().all(|&i| {
                let k = group
                    .generators()
                    .iter()
                    .position(|g| g.kind == GeneratorKind::Finite(i))
                    .expect("finite node");
                set.contains(&k)
            });
            if finite_all && set.contains(&affine) {
                return Err(Error::InvalidLevel(format!(
                    "W_K is infinite: K contains every affine node of component {c}"
                )));
            }
        }
        Ok(ParahoricLevel {
            generators: set.into_iter().collect(),
        })
    }

    pub fn from_names(group: &AffineWeylGroup, names: &[String], sigma: &SigmaAction) -> Result<Self> {
        let idx = names
            .iter()
            .map(|n| {
                group
                    .generator_index(n.trim())
                    .ok_or_else(|| Error::InvalidLevel(format!("unknown generator `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, &idx, sigma)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_iwahori(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn names(&self, group: &AffineWeylGroup) -> Vec<String> {
        self.generators
            .iter()
            .map(|&k| group.generators()[k].name.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(n: usize) -> AffineWeylGroup {
        AffineWeylGroup::new(RootDatum::gl(n).unwrap())
    }

    #[test]
    fn group_law_examples() {
        let g = gl(2);
        let a = g.translation(&[1, 0]);
        let b = g.translation(&[0, 1]);
        assert_eq!(g.mul(&a, &b), g.translation(&[1, 1]));
        let s = g.simple_reflection(0);
        assert_eq!(g.mul(&s, &s), g.identity());
        let w = g.mul(&a, &s);
        assert_eq!(g.mul(&w, &g.inv(&w)), g.identity());
        assert_eq!(g.inv(&w).translation, vec![0, -1]);
    }

    #[test]
    fn length_examples() {
        let g = gl(2);
        assert_eq!(g.length(&g.translation(&[1, 0])), 1);
        assert_eq!(g.length(&g.translation(&[1, 1])), 0);
        let g3 = gl(3);
        assert_eq!(g3.length(&g3.translation(&[1, 0, 0])), 2);
        for gen in g.generators() {
            assert_eq!(g.length(&gen.element), 1);
        }
    }

    #[test]
    fn tau_in_gl2() {
        let g = gl(2);
        let tau = g.mul(&g.translation(&[1, 0]), &g.simple_reflection(0));
        assert_eq!(g.length(&tau), 0);
        assert_eq!(g.mul(&tau, &tau), g.translation(&[1, 1]));
        assert_eq!(g.kottwitz(&tau), g.kottwitz(&g.translation(&[1, 0])));
        assert_eq!(g.omega_for_translation(&[1, 0]), tau);
    }

    #[test]
    fn reduced_word_of_t10() {
        let g = gl(2);
        let t = g.translation(&[1, 0]);
        let (word, omega) = g.reduced_word(&t);
        assert_eq!(word.len(), 1);
        assert_eq!(g.length(&omega), 0);
        let rebuilt = g.mul(&g.product(word.iter().map(|&k| g.generator(k))), &omega);
        assert_eq!(rebuilt, t);
        assert_eq!(g.reduced_word(&g.identity()), (vec![], g.identity()));
    }

    #[test]
    fn bruhat_examples() {
        let g = gl(2);
        let tau = g.omega_for_translation(&[1, 0]);
        let t10 = g.translation(&[1, 0]);
        let t01 = g.translation(&[0, 1]);
        assert!(g.bruhat_leq(&tau, &t10));
        assert!(!g.bruhat_leq(&t10, &t01));
        assert!(!g.bruhat_leq(&t01, &t10));
        assert!(g.bruhat_leq(&t10, &t10));
        assert!(!g.bruhat_leq(&g.identity(), &t10));
    }

    #[test]
    fn kottwitz_kills_finite_reflections() {
        let g = gl(3);
        for i in 0..2 {
            assert_eq!(g.kottwitz(&g.simple_reflection(i)), g.pi1().zero());
        }
        assert_eq!(g.kottwitz(g.generator(0)), g.pi1().zero());
    }

    #[test]
    fn sigma_flip_on_gl4() {
        let rd = RootDatum::gl(4).unwrap();
        let g = AffineWeylGroup::new(rd.clone());
        let s = SigmaAction::flip(&rd, g.weyl()).unwrap();
        let t = g.translation(&[1, 0, 0, 0]);
        let st = g.sigma_apply(&s, &t);
        assert_eq!(st, g.translation(&[0, 0, 0, -1]));
        assert_eq!(g.length(&st), g.length(&t));
        assert_eq!(g.sigma_apply(&s, &st), t);
        for k in 0..g.generators().len() {
            let j = g.sigma_generator(&s, k);
            assert_eq!(g.length(g.generator(j)), 1);
        }
        let id = SigmaAction::identity(&rd);
        assert_eq!(g.sigma_apply(&id, &t), t);
    }

    #[test]
    fn double_coset_examples() {
        let g = gl(2);
        let id = SigmaAction::identity(g.datum());
        let k = ParahoricLevel::from_names(&g, &["s1".to_string()], &id).unwrap();
        assert_eq!(g.double_coset_rep(&g.simple_reflection(0), &k), g.identity());
        let t = g.translation(&[1, 0]);
        let rep = g.double_coset_rep(&t, &k);
        assert!(g.length(&rep) <= 1);
        assert!(g.bruhat_leq(&rep, &t));
        assert_eq!(g.double_coset_rep(&t, &ParahoricLevel::iwahori()), t);
    }

    #[test]
    fn level_validation() {
        let g = gl(2);
        let id = SigmaAction::identity(g.datum());
        let all = vec!["s0".to_string(), "s1".to_string()];
        assert!(matches!(
            ParahoricLevel::from_names(&g, &all, &id),
            Err(Error::InvalidLevel(_))
        ));
        let rd = RootDatum::gl(3).unwrap();
        let g3 = AffineWeylGroup::new(rd.clone());
        let flip = SigmaAction::flip(&rd, g3.weyl()).unwrap();
        assert!(ParahoricLevel::from_names(&g3, &["s1".to_string()], &flip).is_err());
        assert!(ParahoricLevel::from_names(&g3, &["s1".to_string(), "s2".to_string()], &flip).is_ok());
        assert!(ParahoricLevel::from_names(&g3, &["s0".to_string()], &flip).is_ok());
    }
}
