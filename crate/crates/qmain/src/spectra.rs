//! The signless Laplacian, its walk matrix, and exact main-eigenvalue
//! counting over the rationals.
//!
//! The number of distinct eigenvalues of a symmetric matrix whose
//! eigenspaces meet the all-ones vector non-orthogonally equals the rank
//! of the Krylov matrix `[j, Mj, M^2 j, ...]`. Counting main eigenvalues
//! therefore reduces to an exact integer rank computation, which is the
//! source of truth throughout the crate; floating point only ever locates
//! eigenvalues (see [`crate::jacobi`]).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;

/// Dense symmetric integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entries converted to f64, row-major.
    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.entries
            .iter()
            .map(|e| e.to_f64().expect("finite"))
            .collect()
    }
}

/// The matrix `D + A`: degrees on the diagonal, adjacency elsewhere.
pub fn signless_laplacian(g: &Graph) -> IntMatrix {
    let n = g.n();
    let mut m = IntMatrix::zero(n);
    for v in 0..n {
        m.set(v, v, BigInt::from(g.degree(v)));
        for &u in g.neighbors(v) {
            m.set(v, u, BigInt::one());
        }
    }
    m
}

/// Columns `j, L+ j, (L+)^2 j, ...` of the walk matrix, exact.
#[derive(Clone, Debug)]
pub struct WalkMatrix {
    pub n: usize,
    /// `columns[k]` is `(L+)^k` applied to the all-ones vector.
    pub columns: Vec<Vec<BigInt>>,
}

/// Builds all `n` walk-matrix columns of the signless Laplacian.
pub fn walk_matrix(g: &Graph) -> WalkMatrix {
    let n = g.n();
    let mut columns = Vec::with_capacity(n);
    columns.push(vec![BigInt::one(); n]);
    for _ in 1..n {
        let prev = columns.last().unwrap();
        let next: Vec<BigInt> = (0..n)
            .map(|v| {
                let mut acc: BigInt = prev[v].clone() * BigInt::from(g.degree(v));
                for &u in g.neighbors(v) {
                    acc += &prev[u];
                }
                acc
            })
            .collect();
        columns.push(next);
    }
    WalkMatrix { n, columns }
}

/// Rank of an integer matrix over the rationals, by fraction-free
/// elimination with full pivoting. Exact and tolerance-free.
pub fn integer_rank(rows: usize, cols: usize, mut m: Vec<BigInt>) -> usize {
    assert_eq!(m.len(), rows * cols);
    let at = |i: usize, j: usize| i * cols + j;
    let steps = rows.min(cols);
    let mut prev = BigInt::one();
    let mut row_order: Vec<usize> = (0..rows).collect();
    let mut col_order: Vec<usize> = (0..cols).collect();
    for k in 0..steps {
        // Full pivoting: any nonzero entry of the trailing submatrix.
        let mut pivot = None;
        'scan: for i in k..rows {
            for j in k..cols {
                if !m[at(row_order[i], col_order[j])].is_zero() {
                    pivot = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return k;
        };
        row_order.swap(k, pi);
        col_order.swap(k, pj);
        let pivot_val = m[at(row_order[k], col_order[k])].clone();
        for i in k + 1..rows {
            let head = m[at(row_order[i], col_order[k])].clone();
            for j in k + 1..cols {
                let val = &pivot_val * &m[at(row_order[i], col_order[j])]
                    - &head * &m[at(row_order[k], col_order[j])];
                m[at(row_order[i], col_order[j])] = &val / &prev;
            }
            m[at(row_order[i], col_order[k])] = BigInt::zero();
        }
        prev = pivot_val;
    }
    steps
}

/// Exact count of eigenvalues of a symmetric integer matrix whose
/// eigenspaces are not orthogonal to the all-ones vector: the rank of the
/// Krylov matrix generated from the all-ones vector.
pub fn main_count_exact(m: &IntMatrix) -> usize {
    let n = m.n();
    let mut columns = Vec::with_capacity(n);
    columns.push(vec![BigInt::one(); n]);
    for _ in 1..n {
        let prev: &Vec<BigInt> = columns.last().unwrap();
        let next: Vec<BigInt> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j) * &prev[j]).sum())
            .collect();
        columns.push(next);
    }
    let mut flat = Vec::with_capacity(n * n);
    for i in 0..n {
        for col in &columns {
            flat.push(col[i].clone());
        }
    }
    integer_rank(n, n, flat)
}

/// Number of main signless Laplacian eigenvalues, exactly.
pub fn main_eigenvalue_count(g: &Graph) -> usize {
    let wm = walk_matrix(g);
    let n = wm.n;
    let mut flat = Vec::with_capacity(n * n);
    for i in 0..n {
        for col in &wm.columns {
            flat.push(col[i].clone());
        }
    }
    integer_rank(n, n, flat)
}

/// Largest absolute row sum.
pub fn inf_norm(m: &IntMatrix) -> f64 {
    use num_traits::ToPrimitive;
    (0..m.n())
        .map(|i| {
            (0..m.n())
                .map(|j| m.get(i, j).abs().to_f64().unwrap_or(f64::INFINITY))
                .sum::<f64>()
        })
        .fold(0.0, f64::max)
}
