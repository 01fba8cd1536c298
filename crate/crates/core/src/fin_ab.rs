//! Finitely generated abelian groups presented as lattice quotients.

use std::fmt;

use serde::Serialize;

use crate::lattice::{self, IntMatrix, LatticeSolver};

/// Normal form of an element of a [`FinAbGroup`]: one coordinate per invariant
/// factor, reduced into `0..d` for torsion factors and unreduced for free ones.
pub type GroupElement = Vec<i64>;

/// The quotient `Λ / L` of a lattice `Λ ⊆ Z^n` by a sublattice `L ⊆ Λ`.
///
/// `invariant_factors` are in divisibility order with `0` standing for an
/// infinite cyclic factor; trivial factors are dropped.
#[derive(Clone, Debug)]
pub struct FinAbGroup {
    ambient_dim: usize,
    invariant_factors: Vec<i64>,
    /// Rows map `Λ`-coordinates to normal-form coordinates.
    projection: IntMatrix,
    /// Columns of `u^{-1}` matching the kept rows, in `Λ`-coordinates.
    lifts: Vec<Vec<i64>>,
    /// Basis of `Λ` when it is a proper sublattice of `Z^n`.
    lattice: Option<(Vec<Vec<i64>>, LatticeSolver)>,
}

impl FinAbGroup {
    /// `Z^n / span(sublattice)`.
    pub fn quotient(ambient_dim: usize, sublattice: &[Vec<i64>]) -> Self {
        Self::build(ambient_dim, sublattice, None)
    }

    /// `span(basis) / span(sublattice)`; the sublattice must lie inside the span of `basis`.
    pub fn subquotient(ambient_dim: usize, basis: &[Vec<i64>], sublattice: &[Vec<i64>]) -> Self {
        let basis = lattice::lattice_basis(ambient_dim, basis);
        let solver = LatticeSolver::new(ambient_dim, &basis);
        Self::build(ambient_dim, sublattice, Some((basis, solver)))
    }

    fn build(
        ambient_dim: usize,
        sublattice: &[Vec<i64>],
        lattice: Option<(Vec<Vec<i64>>, LatticeSolver)>,
    ) -> Self {
        let (k, gens): (usize, Vec<Vec<i64>>) = match &lattice {
            None => (ambient_dim, sublattice.to_vec()),
            Some((basis, solver)) => (
                basis.len(),
                sublattice
                    .iter()
                    .map(|g| solver.solve(g).expect("sublattice not contained in lattice"))
                    .collect(),
            ),
        };
        let m = lattice::from_columns(k, &gens);
        let s = lattice::smith(&m, k, gens.len());
        let mut invariant_factors = Vec::new();
        let mut projection = Vec::new();
        let mut lifts = Vec::new();
        for i in 0..k {
            let f = s.diag.get(i).copied().unwrap_or(0);
            if f != 1 {
                let mut row = s.u[i].clone();
                let mut lift = lattice::column(&s.u_inv, i);
                // free coordinates: first nonzero entry positive (GL_n gets the sum of coordinates)
                if f == 0 && row.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    row.iter_mut().for_each(|x| *x = -*x);
                    lift.iter_mut().for_each(|x| *x = -*x);
                }
                invariant_factors.push(f);
                projection.push(row);
                lifts.push(lift);
            }
        }
        FinAbGroup {
            ambient_dim,
            invariant_factors,
            projection,
            lifts,
            lattice,
        }
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|&&d| d == 0).count()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<i64> {
        if self.free_rank() > 0 {
            None
        } else {
            Some(self.invariant_factors.iter().product())
        }
    }

    /// Class of `x`; `None` if `x` is outside the lattice `Λ`.
    pub fn project(&self, x: &[i64]) -> Option<GroupElement> {
        assert_eq!(x.len(), self.ambient_dim, "vector length does not match the lattice");
        let coords = match &self.lattice {
            None => x.to_vec(),
            Some((_, solver)) => solver.solve(x)?,
        };
        let y = lattice::mat_vec(&self.projection, &coords);
        Some(self.reduce(y))
    }

    pub fn reduce(&self, mut y: GroupElement) -> GroupElement {
        for (c, &d) in y.iter_mut().zip(&self.invariant_factors) {
            if d > 0 {
                *c = c.rem_euclid(d);
            }
        }
        y
    }

    pub fn zero(&self) -> GroupElement {
        vec![0; self.invariant_factors.len()]
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> GroupElement {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    /// Vectors of `Z^n` projecting onto the standard generators of the normal form.
    pub fn generator_lifts(&self) -> Vec<Vec<i64>> {
        self.lifts
            .iter()
            .map(|c| match &self.lattice {
                None => c.clone(),
                Some((basis, _)) => {
                    let m = lattice::from_columns(self.ambient_dim, basis);
                    lattice::mat_vec(&m, c)
                }
            })
            .collect()
    }

    /// Elements of `Λ/L` fixed by a lattice automorphism `phi` of `Z^n` that
    /// preserves `L` (here `Λ = Z^n` is required).
    pub fn fixed_subgroup(&self, phi: &IntMatrix, sublattice: &[Vec<i64>]) -> FinAbGroup {
        assert!(self.lattice.is_none(), "fixed points are computed on full-lattice quotients");
        let n = self.ambient_dim;
        // x with (phi - 1) x ∈ L  <=>  [(phi - 1) | -L] (x, y) = 0
        let mut block = vec![vec![0; n + sublattice.len()]; n];
        for i in 0..n {
            for j in 0..n {
                block[i][j] = phi[i][j] - i64::from(i == j);
            }
            for (j, g) in sublattice.iter().enumerate() {
                block[i][n + j] = -g[i];
            }
        }
        let ker = lattice::kernel(&block, n, n + sublattice.len());
        let gens: Vec<Vec<i64>> = ker.iter().map(|k| k[..n].to_vec()).collect();
        FinAbGroup::subquotient(n, &gens, sublattice)
    }

    /// Coinvariants `Z^n / (L + (phi - 1) Z^n)`.
    pub fn coinvariants(ambient_dim: usize, phi: &IntMatrix, sublattice: &[Vec<i64>]) -> FinAbGroup {
        let mut gens = sublattice.to_vec();
        for j in 0..ambient_dim {
            let col: Vec<i64> = (0..ambient_dim)
                .map(|i| phi[i][j] - i64::from(i == j))
                .collect();
            if col.iter().any(|&c| c != 0) {
                gens.push(col);
            }
        }
        FinAbGroup::quotient(ambient_dim, &gens)
    }

    pub fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|&d| if d == 0 { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl Serialize for FinAbGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FinAbGroup", 2)?;
        st.serialize_field("invariant_factors", &self.invariant_factors)?;
        st.serialize_field("description", &self.to_string())?;
        st.end()
    }
}
