//! Integer and rational linear algebra on small dense matrices.
//!
//! Everything here works with `i64` row-major matrices; the lattices that show
//! up (cocharacter lattices of classical groups of small rank) keep entries tiny.

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Row-major integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Matrix whose columns are the given vectors (`dim` rows even when `cols` is empty).
pub fn from_columns(dim: usize, cols: &[Vec<i64>]) -> IntMatrix {
    (0..dim)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

pub fn column(m: &IntMatrix, j: usize) -> Vec<i64> {
    m.iter().map(|row| row[j]).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Smith normal form `u * m * v = diag(d_1, .., d_rank, 0, ..)` with `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries, all positive.
    pub diag: Vec<i64>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub fn smith(m: &IntMatrix, rows: usize, cols: usize) -> Smith {
    let mut a: IntMatrix = if m.is_empty() {
        vec![vec![0; cols]; rows]
    } else {
        m.clone()
    };
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);
    let mut diag = Vec::new();

    // row_i += q * row_t, mirrored on u and u_inv
    let row_add = |a: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize, t: usize, q: i64| {
        for j in 0..a[0].len() {
            a[i][j] += q * a[t][j];
        }
        for j in 0..u[0].len() {
            u[i][j] += q * u[t][j];
        }
        for row in u_inv.iter_mut() {
            row[t] -= q * row[i];
        }
    };
    let col_add = |a: &mut IntMatrix, v: &mut IntMatrix, j: usize, t: usize, q: i64| {
        for row in a.iter_mut() {
            row[j] += q * row[t];
        }
        for row in v.iter_mut() {
            row[j] += q * row[t];
        }
    };
    let row_swap = |a: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize, t: usize| {
        a.swap(i, t);
        u.swap(i, t);
        for row in u_inv.iter_mut() {
            row.swap(i, t);
        }
    };
    let col_swap = |a: &mut IntMatrix, v: &mut IntMatrix, j: usize, t: usize| {
        for row in a.iter_mut() {
            row.swap(j, t);
        }
        for row in v.iter_mut() {
            row.swap(j, t);
        }
    };

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        row_swap(&mut a, &mut u, &mut u_inv, pi, t);
        col_swap(&mut a, &mut v, pj, t);

        loop {
            let mut clean = true;
            for i in (t + 1)..rows {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    row_add(&mut a, &mut u, &mut u_inv, i, t, -q);
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in (t + 1)..cols {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    col_add(&mut a, &mut v, j, t, -q);
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                let mut best = (t, t);
                for i in (t + 1)..rows {
                    if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in (t + 1)..cols {
                    if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    row_swap(&mut a, &mut u, &mut u_inv, best.0, t);
                }
                if best.1 != t {
                    col_swap(&mut a, &mut v, best.1, t);
                }
                continue;
            }
            let offender = ((t + 1)..rows)
                .find(|&i| ((t + 1)..cols).any(|j| a[i][j] % a[t][t] != 0));
            match offender {
                Some(i) => row_add(&mut a, &mut u, &mut u_inv, t, i, 1),
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
            for row in u_inv.iter_mut() {
                row[t] = -row[t];
            }
        }
        diag.push(a[t][t]);
    }
    Smith { u, u_inv, v, diag }
}

/// Integer kernel basis of a `rows x cols` matrix, as column vectors.
pub fn kernel(m: &IntMatrix, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    let s = smith(m, rows, cols);
    (s.rank()..cols).map(|j| column(&s.v, j)).collect()
}

/// A basis (as columns) of the lattice spanned by `gens` inside `Z^dim`.
pub fn lattice_basis(dim: usize, gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let g = from_columns(dim, gens);
    let s = smith(&g, dim, gens.len());
    let gv = mat_mul(&g, &s.v);
    (0..s.rank()).map(|j| column(&gv, j)).collect()
}

/// Solves `basis * c = x` over the integers for a basis of full column rank.
#[derive(Clone, Debug)]
pub struct LatticeSolver {
    smith: Smith,
    dim: usize,
}

impl LatticeSolver {
    pub fn new(dim: usize, basis: &[Vec<i64>]) -> Self {
        let m = from_columns(dim, basis);
        let smith = smith(&m, dim, basis.len());
        debug_assert_eq!(smith.rank(), basis.len(), "basis must be independent");
        LatticeSolver { smith, dim }
    }

    pub fn solve(&self, x: &[i64]) -> Option<Vec<i64>> {
        let z = mat_vec(&self.smith.u, x);
        let k = self.smith.rank();
        if z[k..self.dim].iter().any(|&c| c != 0) {
            return None;
        }
        let mut y = Vec::with_capacity(k);
        for (zi, di) in z.iter().zip(&self.smith.diag) {
            if zi % di != 0 {
                return None;
            }
            y.push(zi / di);
        }
        Some(mat_vec(&self.smith.v, &y))
    }
}

/// Rational square matrix inverse by Gauss-Jordan; `None` if singular.
pub fn rational_inverse(m: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m.to_vec();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational64::one() } else { Rational64::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

/// Exact determinant over the rationals.
pub fn rational_det(m: &[Vec<Rational64>]) -> Rational64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational64::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational64::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col];
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for j in col..n {
                let v = a[col][j];
                a[r][j] -= f * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_smith(m: IntMatrix) {
        let rows = m.len();
        let cols = m[0].len();
        let s = smith(&m, rows, cols);
        let d = mat_mul(&mat_mul(&s.u, &m), &s.v);
        for i in 0..rows {
            for j in 0..cols {
                let expect = if i == j && i < s.rank() { s.diag[i] } else { 0 };
                assert_eq!(d[i][j], expect, "{m:?}");
            }
        }
        for w in s.diag.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        assert_eq!(mat_mul(&s.u, &s.u_inv), identity(rows));
    }

    #[test]
    fn smith_of_a2_cartan() {
        let m = vec![vec![2, -1], vec![-1, 2]];
        let s = smith(&m, 2, 2);
        assert_eq!(s.diag, vec![1, 3]);
        check_smith(m);
    }

    #[test]
    fn smith_assorted() {
        check_smith(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        check_smith(vec![vec![1, -1, 0], vec![0, 1, -1]]);
        check_smith(vec![vec![0, 0], vec![0, 0]]);
        check_smith(vec![vec![6], vec![4]]);
        check_smith(vec![vec![2, -2, 0, 0], vec![0, 0, 3, 3], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ker = kernel(&m, 2, 3);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert_eq!(mat_vec(&m, k), vec![0, 0]);
        }
    }

    #[test]
    fn solver_detects_non_members() {
        let basis = vec![vec![2, 0], vec![0, 3]];
        let s = LatticeSolver::new(2, &basis);
        assert_eq!(s.solve(&[4, 9]), Some(vec![2, 3]));
        assert_eq!(s.solve(&[1, 0]), None);
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let r = |x: i64| Rational64::from_integer(x);
        let m = vec![vec![r(2), r(-1)], vec![r(-2), r(2)]];
        let inv = rational_inverse(&m).unwrap();
        assert_eq!(inv[0][0], Rational64::new(1, 1));
        assert_eq!(inv[0][1], Rational64::new(1, 2));
        assert_eq!(rational_det(&m), r(2));
    }
}
