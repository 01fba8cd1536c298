//! Chains of positive coroots between dominant coweights, and the minuscule
//! lifting procedure built on them.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::dot;
use crate::root_datum::{Cocharacter, Dominance, RootDatum};

/// `start = points[0]`, `points[i+1] = points[i] - steps[i]`, every point dominant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorootChain {
    pub start: Cocharacter,
    pub end: Cocharacter,
    pub steps: Vec<Cocharacter>,
    pub points: Vec<Cocharacter>,
}

impl CorootChain {
    /// Replays the chain and checks every point is dominant.
    pub fn is_valid(&self, rd: &RootDatum) -> bool {
        let mut cur = self.start.clone();
        if !rd.is_dominant(&cur) {
            return false;
        }
        for (step, point) in self.steps.iter().zip(&self.points[1..]) {
            if !rd.positive_coroots().contains(step) {
                return false;
            }
            cur = sub(&cur, step);
            if &cur != point || !rd.is_dominant(&cur) {
                return false;
            }
        }
        cur == self.end
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn check_rank(rd: &RootDatum, v: &[i64]) -> Result<()> {
    if v.len() != rd.rank() {
        return Err(Error::RankMismatch {
            expected: rd.rank(),
            got: v.len(),
        });
    }
    Ok(())
}

/// A chain from `μ` down to `λ`, both dominant with `λ ⪯ μ`.
///
/// Coroots are tried highest first; the search backtracks when a branch dead-ends.
pub fn stembridge_chain(rd: &RootDatum, lambda: &[i64], mu: &[i64]) -> Result<CorootChain> {
    check_rank(rd, lambda)?;
    check_rank(rd, mu)?;
    for v in [lambda, mu] {
        if !rd.is_dominant(v) {
            return Err(Error::NotDominant(v.to_vec()));
        }
    }
    let pi1 = rd.fundamental_group(None);
    if pi1.project(lambda) != pi1.project(mu) {
        return Err(Error::KappaMismatch {
            lambda: lambda.to_vec(),
            mu: mu.to_vec(),
        });
    }
    if !rd.dominance_leq(lambda, mu, Dominance::Integral)? {
        return Err(Error::NotDominated {
            lambda: lambda.to_vec(),
            mu: mu.to_vec(),
        });
    }

    let mut order: Vec<usize> = (0..rd.positive_coroots().len()).collect();
    // stable: ties keep the datum's own order
    order.sort_by_key(|&k| std::cmp::Reverse(rd.height(k)));

    let mut steps = Vec::new();
    let mut dead = HashSet::new();
    if !search(rd, lambda, mu.to_vec(), &order, &mut steps, &mut dead) {
        return Err(Error::Inconsistent(format!(
            "no coroot chain from {mu:?} to {lambda:?} although {lambda:?} ⪯ {mu:?}"
        )));
    }
    let mut points = vec![mu.to_vec()];
    for s in &steps {
        let next = sub(points.last().unwrap(), s);
        points.push(next);
    }
    Ok(CorootChain {
        start: mu.to_vec(),
        end: lambda.to_vec(),
        steps,
        points,
    })
}

fn search(
    rd: &RootDatum,
    target: &[i64],
    cur: Vec<i64>,
    order: &[usize],
    steps: &mut Vec<Cocharacter>,
    dead: &mut HashSet<Vec<i64>>,
) -> bool {
    if cur == target {
        return true;
    }
    if dead.contains(&cur) {
        return false;
    }
    for &k in order {
        let beta = &rd.positive_coroots()[k];
        let next = sub(&cur, beta);
        if !rd.is_dominant(&next) {
            continue;
        }
        if !rd
            .dominance_leq(target, &next, Dominance::Integral)
            .unwrap_or(false)
        {
            continue;
        }
        steps.push(beta.clone());
        if search(rd, target, next, order, steps, dead) {
            return true;
        }
        steps.pop();
    }
    dead.insert(cur);
    false
}

/// One reflection step `λ_{i+1} = s_α(λ_i) = λ_i - α^∨`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftStep {
    pub coroot: Cocharacter,
    pub from: Cocharacter,
    pub to: Cocharacter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinusculeLift {
    pub v2: Cocharacter,
    pub steps: Vec<LiftStep>,
}

/// Walks from the minuscule `μ` to `λ` one reflection at a time, checking that
/// every pairing `<λ_i, α_{i+1}>` equals 1.
pub fn minuscule_lift(rd: &RootDatum, lambda: &[i64], mu: &[i64]) -> Result<MinusculeLift> {
    check_rank(rd, lambda)?;
    check_rank(rd, mu)?;
    let (mu_dom, _) = rd.dominant_rep(mu);
    if !rd.is_minuscule(&mu_dom) {
        return Err(Error::NotMinuscule(mu.to_vec()));
    }
    let (lambda_dom, word) = rd.dominant_rep(lambda);
    let chain = stembridge_chain(rd, &lambda_dom, &mu_dom)?;

    let mut steps = Vec::new();
    let mut cur = mu_dom.clone();
    let mut take = |cur: &mut Vec<i64>, root: &[i64], coroot: &[i64]| -> Result<()> {
        let p = dot(cur, root);
        if p != 1 {
            return Err(Error::Inconsistent(format!(
                "pairing of {cur:?} with the root of {coroot:?} is {p}, expected 1"
            )));
        }
        let next = sub(cur, coroot);
        if !rd.is_minuscule(&next) {
            return Err(Error::Inconsistent(format!("{next:?} is not minuscule")));
        }
        steps.push(LiftStep {
            coroot: coroot.to_vec(),
            from: cur.clone(),
            to: next.clone(),
        });
        *cur = next;
        Ok(())
    };
    for beta in &chain.steps {
        let k = rd
            .positive_coroots()
            .iter()
            .position(|c| c == beta)
            .expect("chain steps are positive coroots");
        take(&mut cur, &rd.positive_roots()[k].clone(), beta)?;
    }
    // undo the descent that made λ dominant
    for &i in word.iter().rev() {
        take(&mut cur, &rd.simple_roots()[i].clone(), &rd.simple_coroots()[i].clone())?;
    }
    if cur != lambda || !rd.weyl_orbit(&mu_dom).contains(&cur) {
        return Err(Error::Inconsistent(format!("lift ended at {cur:?}, expected {lambda:?}")));
    }
    Ok(MinusculeLift { v2: cur, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_single_step() {
        let rd = RootDatum::gl(2).unwrap();
        let c = stembridge_chain(&rd, &[1, 1], &[2, 0]).unwrap();
        assert_eq!(c.steps, vec![vec![1, -1]]);
        assert!(c.is_valid(&rd));
        assert!(stembridge_chain(&rd, &[1, 0], &[1, 0]).unwrap().steps.is_empty());
    }

    #[test]
    fn gl3_needs_the_highest_coroot() {
        let rd = RootDatum::gl(3).unwrap();
        for s in rd.simple_coroots() {
            assert!(!rd.is_dominant(&sub(&[2, 1, 0], s)));
        }
        let c = stembridge_chain(&rd, &[1, 1, 1], &[2, 1, 0]).unwrap();
        assert_eq!(c.steps, vec![vec![1, 0, -1]]);
    }

    #[test]
    fn typed_failures() {
        let rd = RootDatum::gl(2).unwrap();
        assert!(matches!(
            stembridge_chain(&rd, &[1, 0], &[1, 1]),
            Err(Error::KappaMismatch { .. })
        ));
        assert!(matches!(
            stembridge_chain(&rd, &[2, 0], &[1, 1]),
            Err(Error::NotDominated { .. })
        ));
        assert!(matches!(stembridge_chain(&rd, &[0, 1], &[1, 0]), Err(Error::NotDominant(_))));
        let pgl = RootDatum::pgl(2).unwrap();
        // 2ϖ - α^∨ = 0 in weight coordinates, not ⪯ in the other direction
        assert!(stembridge_chain(&pgl, &[0], &[2]).is_ok());
        assert!(matches!(
            stembridge_chain(&pgl, &[0], &[1]),
            Err(Error::KappaMismatch { .. })
        ));
    }

    #[test]
    fn lifts() {
        let rd = RootDatum::gl(2).unwrap();
        let l = minuscule_lift(&rd, &[0, 1], &[1, 0]).unwrap();
        assert_eq!(l.v2, vec![0, 1]);
        assert_eq!(l.steps.len(), 1);
        assert_eq!(l.steps[0].coroot, vec![1, -1]);
        assert!(minuscule_lift(&rd, &[1, 0], &[1, 0]).unwrap().steps.is_empty());
        assert!(matches!(minuscule_lift(&rd, &[1, 1], &[2, 0]), Err(Error::NotMinuscule(_))));

        let rd4 = RootDatum::gl(4).unwrap();
        let l = minuscule_lift(&rd4, &[0, 1, 1, 0], &[1, 1, 0, 0]).unwrap();
        assert_eq!(l.v2, vec![0, 1, 1, 0]);
        let coroots: Vec<Cocharacter> = l.steps.iter().map(|s| s.coroot.clone()).collect();
        assert_eq!(coroots, vec![vec![0, 1, -1, 0], vec![1, -1, 0, 0]]);
    }
}
