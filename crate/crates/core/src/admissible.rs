//! μ-admissible sets, their parahoric images, and the Kottwitz–Rapoport poset.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::affine_weyl::{AffineWeylGroup, Element, ParahoricLevel};
use crate::root_datum::Cocharacter;

/// `Adm(μ) = {w : w ≤ t_{x(μ)} for some x ∈ W_0}` with its Bruhat cover relation.
#[derive(Clone, Debug)]
pub struct AdmissibleSet {
    /// Dominant representative of μ.
    pub mu: Cocharacter,
    /// Sorted by length, translation, finite part.
    pub elements: Vec<Element>,
    /// The translations `t_{x(μ)}`.
    pub maximal: Vec<Element>,
    /// `(lower, upper)` index pairs into `elements`.
    pub cover_edges: Vec<(usize, usize)>,
}

impl AdmissibleSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.elements.contains(w)
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.elements.iter().position(|e| e == w)
    }
}

/// Enumerates `Adm(μ)` by closing the maximal translations downward under
/// one-letter deletions from reduced words.
pub fn adm(g: &AffineWeylGroup, mu: &[i64]) -> AdmissibleSet {
    let (mu_dom, _) = g.datum().dominant_rep(mu);
    let maximal: Vec<Element> = g
        .datum()
        .weyl_orbit(&mu_dom)
        .iter()
        .map(|x| g.translation(x))
        .collect();

    let pieces: Vec<(HashSet<Element>, HashSet<(Element, Element)>)> =
        maximal.par_iter().map(|t| lower_interval(g, t)).collect();
    let mut all: BTreeSet<Element> = BTreeSet::new();
    let mut edges: BTreeSet<(Element, Element)> = BTreeSet::new();
    for (els, es) in pieces {
        all.extend(els);
        edges.extend(es);
    }
    let mut elements: Vec<Element> = all.into_iter().collect();
    g.sort_elements(&mut elements);
    let index: HashMap<&Element, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut cover_edges: Vec<(usize, usize)> = edges
        .iter()
        .map(|(lo, hi)| (index[lo], index[hi]))
        .collect();
    cover_edges.sort_unstable();
    AdmissibleSet {
        mu: mu_dom,
        elements,
        maximal,
        cover_edges,
    }
}

/// The Bruhat interval below `w` together with its cover relations.
fn lower_interval(g: &AffineWeylGroup, w: &Element) -> (HashSet<Element>, HashSet<(Element, Element)>) {
    let mut seen: HashSet<Element> = HashSet::from([w.clone()]);
    let mut edges = HashSet::new();
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        let l = g.length(&cur);
        if l == 0 {
            continue;
        }
        let (word, omega) = g.reduced_word(&cur);
        for skip in 0..word.len() {
            let v = g.mul(
                &g.product(
                    word.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &k)| g.generator(k)),
                ),
                &omega,
            );
            if g.length(&v) + 1 == l {
                edges.insert((v.clone(), cur.clone()));
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    (seen, edges)
}

/// The unique length-zero element of `Adm(μ)`.
pub fn tau(g: &AffineWeylGroup, mu: &[i64]) -> Element {
    g.omega_for_translation(mu)
}

/// Membership test against each maximal translation, without enumeration.
pub fn is_admissible(g: &AffineWeylGroup, w: &Element, mu: &[i64]) -> bool {
    let (mu_dom, _) = g.datum().dominant_rep(mu);
    g.datum()
        .weyl_orbit(&mu_dom)
        .iter()
        .any(|x| g.bruhat_leq(w, &g.translation(x)))
}

/// Image of `Adm(μ)` in `W_K \ W / W_K`, as sorted minimal-length representatives.
pub fn adm_k(g: &AffineWeylGroup, adm: &AdmissibleSet, level: &ParahoricLevel) -> Vec<Element> {
    let reps: BTreeSet<Element> = adm
        .elements
        .par_iter()
        .map(|w| g.double_coset_rep(w, level))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let mut out: Vec<Element> = reps.into_iter().collect();
    g.sort_elements(&mut out);
    out
}

/// Closure poset of Kottwitz–Rapoport strata at level `K`.
#[derive(Clone, Debug)]
pub struct KrPoset {
    pub nodes: Vec<Element>,
    /// Bruhat covers `(lower, upper)` among the representatives.
    pub edges: Vec<(usize, usize)>,
    pub ranks: Vec<usize>,
}

impl KrPoset {
    pub fn bottom(&self) -> Option<usize> {
        let has_lower: HashSet<usize> = self.edges.iter().map(|&(_, hi)| hi).collect();
        let minimal: Vec<usize> = (0..self.nodes.len()).filter(|i| !has_lower.contains(i)).collect();
        (minimal.len() == 1).then(|| minimal[0])
    }
}

pub fn kr_poset(g: &AffineWeylGroup, adm: &AdmissibleSet, level: &ParahoricLevel) -> KrPoset {
    let nodes = adm_k(g, adm, level);
    let n = nodes.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| g.bruhat_leq(&nodes[i], &nodes[j])).collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let covered = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !covered {
                edges.push((i, j));
            }
        }
    }
    let ranks = nodes.iter().map(|w| g.length(w)).collect();
    KrPoset { nodes, edges, ranks }
}
