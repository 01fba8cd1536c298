//! The finite Weyl group `W_0` as an explicit table of lattice matrices.

use std::collections::{HashMap, VecDeque};

use crate::lattice::{self, IntMatrix};
use crate::root_datum::RootDatum;

#[derive(Clone, Debug)]
pub struct FiniteWeyl {
    rank: usize,
    matrices: Vec<IntMatrix>,
    index: HashMap<IntMatrix, usize>,
    /// Shortlex-first reduced word of each element (simple indices, left to right).
    words: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    /// `negative[u][k]`: the root `alpha_k ∘ u` (that is `u^{-1} alpha_k`) is negative.
    negative: Vec<Vec<bool>>,
    simple: Vec<usize>,
    exponent: u64,
}

impl FiniteWeyl {
    pub fn new(rd: &RootDatum) -> Self {
        let rank = rd.rank();
        let gens: Vec<IntMatrix> = (0..rd.semisimple_rank())
            .map(|i| rd.simple_reflection_matrix(i))
            .collect();
        let id = lattice::identity(rank);
        let mut matrices = vec![id.clone()];
        let mut words = vec![Vec::new()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let m = lattice::mat_mul(&matrices[e], g);
                if !index.contains_key(&m) {
                    let k = matrices.len();
                    index.insert(m.clone(), k);
                    matrices.push(m);
                    let mut w = words[e].clone();
                    w.push(i);
                    words.push(w);
                    queue.push_back(k);
                }
            }
        }
        let simple = gens.iter().map(|g| index[g]).collect();

        // strictly dominant integral point: <p, alpha_i> > 0 for all i
        let p = strictly_dominant_point(rd);
        let negative: Vec<Vec<bool>> = matrices
            .iter()
            .map(|m| {
                let up = lattice::mat_vec(m, &p);
                rd.positive_roots()
                    .iter()
                    .map(|a| lattice::dot(&up, a) < 0)
                    .collect()
            })
            .collect();

        let mut fw = FiniteWeyl {
            rank,
            matrices,
            index,
            words,
            inverse: Vec::new(),
            negative,
            simple,
            exponent: 1,
        };
        fw.inverse = (0..fw.len())
            .map(|u| {
                let mut m = lattice::identity(rank);
                for &i in fw.words[u].iter().rev() {
                    m = lattice::mat_mul(&m, &fw.matrices[fw.simple[i]]);
                }
                fw.index[&m]
            })
            .collect();
        fw.exponent = (0..fw.len())
            .map(|u| fw.order(u))
            .fold(1, num_integer::lcm);
        fw
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn simple(&self, i: usize) -> usize {
        self.simple[i]
    }

    pub fn matrix(&self, u: usize) -> &IntMatrix {
        &self.matrices[u]
    }

    pub fn lookup(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn word(&self, u: usize) -> &[usize] {
        &self.words[u]
    }

    pub fn length(&self, u: usize) -> usize {
        self.words[u].len()
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        let m = lattice::mat_mul(&self.matrices[u], &self.matrices[v]);
        self.index[&m]
    }

    pub fn inverse(&self, u: usize) -> usize {
        self.inverse[u]
    }

    pub fn apply(&self, u: usize, x: &[i64]) -> Vec<i64> {
        lattice::mat_vec(&self.matrices[u], x)
    }

    /// Whether `u^{-1}(alpha_k)` is a negative root, for the `k`-th positive root.
    pub fn sends_negative(&self, u: usize, k: usize) -> bool {
        self.negative[u][k]
    }

    pub fn order(&self, u: usize) -> u64 {
        let mut cur = u;
        let mut n = 1;
        while cur != 0 {
            cur = self.mul(cur, u);
            n += 1;
        }
        n
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// An integral point `p` with `<p, alpha_i> > 0` for every simple root.
pub(crate) fn strictly_dominant_point(rd: &RootDatum) -> Vec<i64> {
    use num_rational::Rational64;
    let l = rd.semisimple_rank();
    // p = sum c_j alpha_j^vee with A c = (1, .., 1)
    let ones: Vec<i64> = vec![1; l];
    let cartan_q: Vec<Vec<Rational64>> = rd
        .cartan()
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let inv = lattice::rational_inverse(&cartan_q).unwrap_or_default();
    let c: Vec<Rational64> = (0..l)
        .map(|i| (0..l).map(|j| inv[i][j] * ones[j]).sum())
        .collect();
    let denom = c.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let mut p = vec![0i64; rd.rank()];
    for (j, cj) in c.iter().enumerate() {
        let k = (cj * denom).to_integer();
        for (pi, ci) in p.iter_mut().zip(&rd.simple_coroots()[j]) {
            *pi += k * ci;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(FiniteWeyl::new(&RootDatum::gl(3).unwrap()).len(), 6);
        assert_eq!(FiniteWeyl::new(&RootDatum::gl(4).unwrap()).len(), 24);
        assert_eq!(FiniteWeyl::new(&RootDatum::gsp(4).unwrap()).len(), 8);
        assert_eq!(FiniteWeyl::new(&RootDatum::gsp(6).unwrap()).len(), 48);
        assert_eq!(FiniteWeyl::new(&RootDatum::gl(1).unwrap()).len(), 1);
    }

    #[test]
    fn inverse_and_exponent() {
        let w = FiniteWeyl::new(&RootDatum::gl(4).unwrap());
        for u in 0..w.len() {
            assert_eq!(w.mul(u, w.inverse(u)), 0);
        }
        assert_eq!(w.exponent(), 12);
        let c2 = FiniteWeyl::new(&RootDatum::gsp(4).unwrap());
        assert_eq!(c2.exponent(), 4);
    }

    #[test]
    fn inversion_count_matches_word_length() {
        let rd = RootDatum::gsp(6).unwrap();
        let w = FiniteWeyl::new(&rd);
        for u in 0..w.len() {
            let inv = (0..rd.positive_roots().len())
                .filter(|&k| w.sends_negative(u, k))
                .count();
            assert_eq!(inv, w.length(u));
        }
    }
}
