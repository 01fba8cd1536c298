//! σ-straight elements, Newton points, straight classes, `B(G, μ)`, Levi
//! subgroups `M_ν` and the component-bound report.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::admissible::{self, AdmissibleSet};
use crate::affine_weyl::{AffineWeylGroup, Element, ParahoricLevel};
use crate::error::{Error, Result};
use crate::fin_ab::{FinAbGroup, GroupElement};
use crate::lattice::{self, dot};
use crate::notation::format_element;
use crate::root_datum::{Cocharacter, RationalCocharacter, RootDatum};
use crate::sigma::SigmaAction;
use crate::stembridge;

/// A point of `B(G)`: dominant Newton vector and Kottwitz class in `π_1(G)_σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NewtonPoint {
    pub nu: RationalCocharacter,
    pub kappa: GroupElement,
}

impl NewtonPoint {
    pub fn kappa_string(&self) -> String {
        if self.kappa.is_empty() {
            "0".into()
        } else {
            let parts: Vec<String> = self.kappa.iter().map(|k| k.to_string()).collect();
            parts.join(",")
        }
    }
}

impl fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu={} kappa={}", self.nu, self.kappa_string())
    }
}

/// Newton data of a single element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonVector {
    /// `λ / n` where `w σ(w) ... σ^{n-1}(w) = t_λ`.
    pub raw: RationalCocharacter,
    pub period: usize,
    pub point: NewtonPoint,
}

/// Frobenius-twisted data attached to one group and one `σ`.
pub struct Frobenius<'a> {
    pub group: &'a AffineWeylGroup,
    pub sigma: &'a SigmaAction,
    /// `π_1(G)_σ`, where Kottwitz classes of `B(G)` live.
    pub pi1_coinvariants: FinAbGroup,
}

impl<'a> Frobenius<'a> {
    pub fn new(group: &'a AffineWeylGroup, sigma: &'a SigmaAction) -> Result<Self> {
        group.check_sigma(sigma)?;
        let pi1_coinvariants =
            FinAbGroup::coinvariants(group.rank(), sigma.matrix(), group.datum().simple_coroots());
        Ok(Frobenius {
            group,
            sigma,
            pi1_coinvariants,
        })
    }

    /// `w σ(w) ... σ^{n-1}(w)`.
    pub fn twisted_power(&self, w: &Element, n: usize) -> Element {
        let g = self.group;
        let mut acc = g.identity();
        let mut cur = w.clone();
        for _ in 0..n {
            acc = g.mul(&acc, &cur);
            cur = g.sigma_apply(self.sigma, &cur);
        }
        acc
    }

    /// Checks `n l(w) = l(w σ(w) ... σ^{n-1}(w))` for `n ≤ ord(σ) · exp(W_0)`.
    pub fn is_straight(&self, w: &Element) -> bool {
        let g = self.group;
        let l = g.length(w);
        let bound = self.sigma.order() * g.weyl().exponent() as usize;
        let mut acc = g.identity();
        let mut cur = w.clone();
        for n in 1..=bound {
            acc = g.mul(&acc, &cur);
            if g.length(&acc) != n * l {
                return false;
            }
            cur = g.sigma_apply(self.sigma, &cur);
        }
        true
    }

    pub fn kappa_sigma(&self, lambda: &[i64]) -> GroupElement {
        self.pi1_coinvariants
            .project(lambda)
            .expect("coinvariants of the full lattice")
    }

    pub fn newton_vector(&self, w: &Element) -> NewtonVector {
        let g = self.group;
        let m = self.sigma.order();
        let base = self.twisted_power(w, m);
        let k = g.weyl().order(base.finite) as usize;
        let t = g.power(&base, k);
        debug_assert!(g.is_translation(&t));
        let period = m * k;
        let raw = RationalCocharacter::new(t.translation.clone(), period as i64);
        let nu = g.datum().dominant_rep_rational(&raw);
        NewtonVector {
            raw,
            period,
            point: NewtonPoint {
                nu,
                kappa: self.kappa_sigma(&w.translation),
            },
        }
    }

    /// `μ̄ = (1/d) Σ σ^i(μ_dom)`.
    pub fn galois_average(&self, mu: &[i64]) -> RationalCocharacter {
        let (mu_dom, _) = self.group.datum().dominant_rep(mu);
        let d = self.sigma.order();
        let mut sum = vec![0i64; mu.len()];
        for i in 0..d {
            for (s, x) in sum.iter_mut().zip(self.sigma.power_apply(i, &mu_dom)) {
                *s += x;
            }
        }
        RationalCocharacter::new(sum, d as i64)
    }

    /// `π_1(G)^σ`.
    pub fn pi1_invariants(&self) -> FinAbGroup {
        pi1_sigma_invariants(self.group.datum(), self.sigma)
    }
}

pub fn pi1_sigma_invariants(rd: &RootDatum, sigma: &SigmaAction) -> FinAbGroup {
    rd.fundamental_group(None)
        .fixed_subgroup(sigma.matrix(), rd.simple_coroots())
}

/// Levi subgroup centralising `ν`: roots with `<ν, α> = 0`, positive system
/// inherited from `G`.
pub fn levi(rd: &RootDatum, nu: &RationalCocharacter) -> Result<RootDatum> {
    let zero: Vec<usize> = (0..rd.positive_roots().len())
        .filter(|&k| dot(nu.numer(), &rd.positive_roots()[k]) == 0)
        .collect();
    let members: HashSet<&Vec<i64>> = zero.iter().map(|&k| &rd.positive_roots()[k]).collect();
    let simple: Vec<usize> = zero
        .iter()
        .copied()
        .filter(|&k| {
            let a = &rd.positive_roots()[k];
            !zero.iter().any(|&j| {
                let b = &rd.positive_roots()[j];
                let rest: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                members.contains(&rest)
            })
        })
        .collect();
    rd.sub_datum(&simple)
}

/// Length of `w` in the affine Weyl group of `M`, or `None` if `w ∉ W_M`.
pub fn levi_length(g: &AffineWeylGroup, m: &AffineWeylGroup, w: &Element) -> Option<usize> {
    let finite = m.weyl().lookup(g.weyl().matrix(w.finite))?;
    Some(m.length(&Element {
        translation: w.translation.clone(),
        finite,
    }))
}

/// IM length of `w` measured only with the roots of `M`; zero exactly when `w`
/// stabilises the base alcove of `M`. Defined even when `w ∉ W_M`.
pub fn levi_alcove_length(g: &AffineWeylGroup, m: &RootDatum, w: &Element) -> usize {
    let index: Vec<usize> = m
        .positive_roots()
        .iter()
        .map(|a| {
            g.datum()
                .positive_roots()
                .iter()
                .position(|b| b == a)
                .expect("roots of a Levi are roots of G")
        })
        .collect();
    g.length_with(w, m.positive_roots(), |k| g.weyl().sends_negative(w.finite, index[k]))
}

/// One `∼`-class of σ-straight elements meeting `Adm(μ)`.
#[derive(Clone, Debug)]
pub struct StraightClass {
    pub id: usize,
    pub representative: Element,
    pub newton: NewtonPoint,
    /// Raw Newton vector of the representative.
    pub raw_nu: RationalCocharacter,
    pub length: usize,
    /// All elements reached by the `∼` moves.
    pub members_found: BTreeSet<Element>,
    /// Straight elements of `Adm(μ)` in this class, sorted.
    pub members_in_adm: Vec<Element>,
    pub levi: RootDatum,
}

/// Closure of `w` under length-preserving `s`-conjugation `w -> s w σ(s)` and
/// twists `w -> τ^{-1} w σ(τ)` by length-zero lifts of `π_1(G)^σ`.
pub fn sim_class(fr: &Frobenius, w: &Element, twists: &[Element]) -> BTreeSet<Element> {
    let g = fr.group;
    let l = g.length(w);
    let gens: Vec<(Element, Element)> = (0..g.generators().len())
        .map(|k| (g.generator(k).clone(), g.sigma_apply(fr.sigma, g.generator(k))))
        .collect();
    let mut moves: Vec<(Element, Element)> = gens;
    for t in twists {
        let ti = g.inv(t);
        moves.push((ti.clone(), g.sigma_apply(fr.sigma, t)));
        moves.push((t.clone(), g.sigma_apply(fr.sigma, &ti)));
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (left, right) in &moves {
            let next = g.mul(&g.mul(left, &cur), right);
            if g.length(&next) == l && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Partition of the σ-straight elements of `Adm(μ)` into `∼`-classes, cross-checked
/// against the partition by Newton point.
pub fn straight_classes(fr: &Frobenius, adm: &AdmissibleSet) -> Result<Vec<StraightClass>> {
    let g = fr.group;
    let straight: Vec<Element> = adm
        .elements
        .par_iter()
        .filter(|w| fr.is_straight(w))
        .cloned()
        .collect();
    let twists: Vec<Element> = fr
        .pi1_invariants()
        .generator_lifts()
        .iter()
        .map(|l| g.omega_for_translation(l))
        .collect();

    let mut assigned: BTreeMap<Element, usize> = BTreeMap::new();
    let mut classes: Vec<(BTreeSet<Element>, Vec<Element>)> = Vec::new();
    for w in &straight {
        if assigned.contains_key(w) {
            continue;
        }
        let found = sim_class(fr, w, &twists);
        let in_adm: Vec<Element> = straight.iter().filter(|x| found.contains(x)).cloned().collect();
        for x in &in_adm {
            assigned.insert(x.clone(), classes.len());
        }
        classes.push((found, in_adm));
    }

    let mut out = Vec::new();
    for (found, in_adm) in classes {
        let rep = in_adm[0].clone();
        let nv = fr.newton_vector(&rep);
        for x in &in_adm {
            if fr.newton_vector(x).point != nv.point {
                return Err(Error::Inconsistent(format!(
                    "{} and {} are ∼-equivalent but have different Newton points",
                    format_element(g, &rep),
                    format_element(g, x)
                )));
            }
        }
        out.push(StraightClass {
            id: 0,
            length: g.length(&rep),
            levi: levi(g.datum(), &nv.raw)?,
            raw_nu: nv.raw,
            newton: nv.point,
            representative: rep,
            members_found: found,
            members_in_adm: in_adm,
        });
    }
    let mut points = HashSet::new();
    for c in &out {
        if !points.insert(c.newton.clone()) {
            return Err(Error::Inconsistent(format!(
                "two ∼-classes share the Newton point {}",
                c.newton
            )));
        }
    }
    out.sort_by(|a, b| cmp_newton(&b.newton, &a.newton));
    for (i, c) in out.iter_mut().enumerate() {
        c.id = i;
    }
    Ok(out)
}

/// Lexicographic on exact rational coordinates, then κ.
fn cmp_newton(a: &NewtonPoint, b: &NewtonPoint) -> std::cmp::Ordering {
    a.nu
        .coords()
        .cmp(&b.nu.coords())
        .then_with(|| a.kappa.cmp(&b.kappa))
}

/// `B(G, μ)` together with the straight classes witnessing it.
#[derive(Clone, Debug)]
pub struct NewtonSet {
    pub mu: Cocharacter,
    pub mu_bar: RationalCocharacter,
    pub mu_kappa: GroupElement,
    pub classes: Vec<StraightClass>,
    /// Pairs `(i, j)` with `ν_j < ν_i` a cover in the dominance order.
    pub covers: Vec<(usize, usize)>,
    pub basic: usize,
}

impl NewtonSet {
    pub fn points(&self) -> Vec<NewtonPoint> {
        self.classes.iter().map(|c| c.newton.clone()).collect()
    }

    pub fn contains(&self, b: &NewtonPoint) -> bool {
        self.classes.iter().any(|c| &c.newton == b)
    }

    pub fn class_of(&self, b: &NewtonPoint) -> Option<&StraightClass> {
        self.classes.iter().find(|c| &c.newton == b)
    }

    pub fn is_basic(&self, id: usize) -> bool {
        id == self.basic
    }
}

pub fn b_set(fr: &Frobenius, adm: &AdmissibleSet) -> Result<NewtonSet> {
    let rd = fr.group.datum();
    let classes = straight_classes(fr, adm)?;
    let mu_bar = fr.galois_average(&adm.mu);
    let mu_kappa = fr.kappa_sigma(&adm.mu);
    for c in &classes {
        if c.newton.kappa != mu_kappa {
            return Err(Error::Inconsistent(format!("class {} has the wrong Kottwitz class", c.id)));
        }
        if !rd.dominance_leq_rational(&c.newton.nu, &mu_bar)? {
            return Err(Error::Inconsistent(format!(
                "Newton point {} is not below {}",
                c.newton.nu, mu_bar
            )));
        }
    }
    let n = classes.len();
    let leq = |i: usize, j: usize| -> bool {
        rd.dominance_leq_rational(&classes[i].newton.nu, &classes[j].newton.nu)
            .unwrap_or(false)
    };
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && leq(j, i) && !(0..n).any(|k| k != i && k != j && leq(j, k) && leq(k, i)) {
                covers.push((i, j));
            }
        }
    }
    let minimal: Vec<usize> = (0..n).filter(|&i| (0..n).all(|j| leq(i, j))).collect();
    if minimal.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "B(G, mu) has {} dominance-minimal points",
            minimal.len()
        )));
    }
    Ok(NewtonSet {
        mu: adm.mu.clone(),
        mu_bar,
        mu_kappa,
        classes,
        covers,
        basic: minimal[0],
    })
}

/// Non-emptiness of `X(μ, b)_K`: some straight witness of `b` in `Adm(μ)` maps
/// into `Adm_K(μ)`.
pub fn adlv_nonempty(
    fr: &Frobenius,
    adm: &AdmissibleSet,
    set: &NewtonSet,
    b: &NewtonPoint,
    level: &ParahoricLevel,
) -> bool {
    let Some(class) = set.class_of(b) else {
        return false;
    };
    let reps: HashSet<Element> = admissible::adm_k(fr.group, adm, level).into_iter().collect();
    class
        .members_in_adm
        .iter()
        .any(|w| reps.contains(&fr.group.double_coset_rep(w, level)))
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentBound {
    /// `π_1(M)^σ` indexes the components.
    Pi1Invariants { group: String, invariant_factors: Vec<i64> },
    Discrete { marker: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviSummary {
    pub type_label: String,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub element: String,
    pub length: usize,
    pub nu_raw: String,
    pub levi: LeviSummary,
    /// Finite part of `w` lies in `W_M`.
    pub in_levi_weyl: bool,
    pub levi_length: usize,
    pub lambda_w: Cocharacter,
    /// `true` when `λ_w` was certified by the minuscule reflection chain.
    pub lift_certified: bool,
    pub lift_chain: Vec<Cocharacter>,
    pub bound: ComponentBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentsReport {
    pub class_id: usize,
    pub newton: NewtonPoint,
    pub basic: bool,
    pub witnesses: Vec<WitnessReport>,
}

pub fn components_bound_report(fr: &Frobenius, set: &NewtonSet, b: &NewtonPoint) -> Result<ComponentsReport> {
    let g = fr.group;
    let rd = g.datum();
    let class = set
        .class_of(b)
        .ok_or_else(|| Error::NotInNewtonSet(b.to_string()))?;
    let mut witnesses = Vec::new();
    for w in &class.members_in_adm {
        let nv = fr.newton_vector(w);
        let m_datum = levi(rd, &nv.raw)?;
        let m = AffineWeylGroup::new(m_datum.clone());
        let in_levi_weyl = levi_length(g, &m, w).is_some();
        let m_len = levi_alcove_length(g, &m_datum, w);
        if m_len != 0 || (fr.sigma.is_identity() && !in_levi_weyl) {
            return Err(Error::Inconsistent(format!(
                "{} is not a length-0 element of W_M",
                format_element(g, w)
            )));
        }
        let lambda = w.translation.clone();
        let (lambda_w, certified, chain) = if rd.is_minuscule(&set.mu) {
            let lift = stembridge::minuscule_lift(rd, &lambda, &set.mu)?;
            let chain = lift.steps.iter().map(|s| s.coroot.clone()).collect();
            (lift.v2, true, chain)
        } else {
            (lambda, false, Vec::new())
        };
        let factors_noncentral = !m_datum.components().is_empty()
            && m_datum.components().iter().all(|nodes| {
                nodes
                    .iter()
                    .any(|&i| dot(&lambda_w, &m_datum.simple_roots()[i]) != 0)
            });
        let bound = if factors_noncentral {
            // u σ normalises M; the W_M part of u acts trivially on π_1(M)
            let phi = lattice::mat_mul(g.weyl().matrix(w.finite), fr.sigma.matrix());
            let grp = m_datum
                .fundamental_group(None)
                .fixed_subgroup(&phi, m_datum.simple_coroots());
            ComponentBound::Pi1Invariants {
                group: grp.to_string(),
                invariant_factors: grp.invariant_factors().to_vec(),
            }
        } else {
            ComponentBound::Discrete {
                marker: "discrete: M(Q_p)/M(Z_p)".into(),
            }
        };
        witnesses.push(WitnessReport {
            element: format_element(g, w),
            length: g.length(w),
            nu_raw: nv.raw.to_string(),
            levi: LeviSummary {
                type_label: m_datum.type_label(),
                simple_roots: m_datum.simple_roots().to_vec(),
                simple_coroots: m_datum.simple_coroots().to_vec(),
            },
            in_levi_weyl,
            levi_length: m_len,
            lambda_w,
            lift_certified: certified,
            lift_chain: chain,
            bound,
        });
    }
    Ok(ComponentsReport {
        class_id: class.id,
        newton: class.newton.clone(),
        basic: set.is_basic(class.id),
        witnesses,
    })
}

/// Dominance between Newton points of the same Kottwitz class.
pub fn newton_leq(rd: &RootDatum, a: &NewtonPoint, b: &NewtonPoint) -> bool {
    a.kappa == b.kappa && rd.dominance_leq_rational(&a.nu, &b.nu).unwrap_or(false)
}
