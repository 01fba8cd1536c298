//! Frobenius-type actions: automorphisms of the based root datum.

use crate::error::{Error, Result};
use crate::finite_weyl::FiniteWeyl;
use crate::lattice::{self, IntMatrix};
use crate::root_datum::RootDatum;

/// A finite-order lattice automorphism permuting the simple roots and coroots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaAction {
    matrix: IntMatrix,
    /// `sigma(alpha_i^vee) = alpha_{perm[i]}^vee`.
    simple_perm: Vec<usize>,
    order: usize,
    name: String,
}

impl SigmaAction {
    pub fn identity(rd: &RootDatum) -> Self {
        SigmaAction {
            matrix: lattice::identity(rd.rank()),
            simple_perm: (0..rd.semisimple_rank()).collect(),
            order: 1,
            name: "id".into(),
        }
    }

    /// The opposition involution `x -> -w_0 x`. Errors when it is trivial.
    pub fn flip(rd: &RootDatum, weyl: &FiniteWeyl) -> Result<Self> {
        let w0 = (0..weyl.len())
            .max_by_key(|&u| weyl.length(u))
            .expect("nonempty Weyl group");
        let m: IntMatrix = weyl
            .matrix(w0)
            .iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        if m == lattice::identity(rd.rank()) {
            return Err(Error::InvalidSigma(format!(
                "-w0 is trivial for {}; use `id`",
                rd.name()
            )));
        }
        let mut s = Self::from_matrix(rd, m)?;
        s.name = "flip".into();
        Ok(s)
    }

    /// Validates an arbitrary lattice matrix as a datum automorphism.
    pub fn from_matrix(rd: &RootDatum, matrix: IntMatrix) -> Result<Self> {
        let r = rd.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidSigma(format!("matrix must be {r}x{r}")));
        }
        let s = lattice::smith(&matrix, r, r);
        if s.rank() != r || s.diag.iter().any(|&d| d != 1) {
            return Err(Error::InvalidSigma("matrix is not invertible over Z".into()));
        }
        let mut simple_perm = Vec::new();
        for (i, c) in rd.simple_coroots().iter().enumerate() {
            let image = lattice::mat_vec(&matrix, c);
            let j = rd
                .simple_coroots()
                .iter()
                .position(|d| *d == image)
                .ok_or_else(|| Error::InvalidSigma(format!("simple coroot {i} is not sent to a simple coroot")))?;
            // alpha_j ∘ sigma must equal alpha_i
            let pulled: Vec<i64> = (0..r)
                .map(|b| (0..r).map(|a| rd.simple_roots()[j][a] * matrix[a][b]).sum())
                .collect();
            if pulled != rd.simple_roots()[i] {
                return Err(Error::InvalidSigma(format!("simple root {i} is not sent to a simple root")));
            }
            simple_perm.push(j);
        }
        let mut order = 1;
        let mut power = matrix.clone();
        let id = lattice::identity(r);
        while power != id {
            power = lattice::mat_mul(&power, &matrix);
            order += 1;
            if order > 1000 {
                return Err(Error::InvalidSigma("automorphism has infinite order".into()));
            }
        }
        Ok(SigmaAction {
            matrix,
            simple_perm,
            order,
            name: "matrix".into(),
        })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn simple_perm(&self) -> &[usize] {
        &self.simple_perm
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        lattice::mat_vec(&self.matrix, x)
    }

    /// `σ^k`.
    pub fn power_apply(&self, k: usize, x: &[i64]) -> Vec<i64> {
        (0..k % self.order).fold(x.to_vec(), |v, _| self.apply(&v))
    }
}
