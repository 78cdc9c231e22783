//! Exact Gauss-Jordan elimination and what falls out of it: rank, kernels,
//! linear solves, inverses and rank factorizations.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{self, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivot_columns: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }
}

/// Reduced row-echelon form. Pivots are taken on the first nonzero entry of
/// each column in row order; with exact arithmetic no pivoting strategy is
/// needed.
pub fn rref(m: &Matrix) -> Rref {
    let mut r = m.clone();
    let (rows, cols) = r.shape();
    let mut pivot_columns = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        if lead == rows {
            break;
        }
        let Some(pivot) = (lead..rows).find(|&i| !r[(i, col)].is_zero()) else {
            continue;
        };
        if pivot != lead {
            for j in 0..cols {
                let tmp = r[(pivot, j)].clone();
                r[(pivot, j)] = r[(lead, j)].clone();
                r[(lead, j)] = tmp;
            }
        }
        let inv = r[(lead, col)].recip();
        r.scale_row(lead, &inv);
        let pivot_row = r.row(lead).to_vec();
        for i in 0..rows {
            if i == lead || r[(i, col)].is_zero() {
                continue;
            }
            let factor = r[(i, col)].clone();
            for (x, p) in r.row_mut(i).iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivot_columns.push(col);
        lead += 1;
    }
    Rref {
        reduced: r,
        pivot_columns,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank()
}

/// Rank of a list of vectors of common length `dim`.
pub fn vectors_rank(vectors: &[Vector], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let m = Matrix::from_rows(dim, vectors.to_vec()).expect("vectors share a length");
    rank(&m)
}

/// Dimension of the affine hull of `points`, or `None` for no points.
pub fn affine_dimension(points: &[Vector], dim: usize) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(vectors_rank(&diffs, dim))
}

/// Basis of `{ x : m x = 0 }`, one vector per free column of the RREF.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let Rref {
        reduced,
        pivot_columns,
    } = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &c in &pivot_columns {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut x = rational::zeros(cols);
            x[free] = Rational::one();
            for (row, &pc) in pivot_columns.iter().enumerate() {
                x[pc] = -reduced[(row, free)].clone();
            }
            x
        })
        .collect()
}

/// Basis of `{ y : yᵀ m = 0 }`.
pub fn left_kernel_basis(m: &Matrix) -> Vec<Vector> {
    kernel_basis(&m.transpose())
}

/// Some `x` with `a x = b`, or `None` if the system is inconsistent. Free
/// variables are set to zero.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let column = Matrix::from_columns(a.rows(), vec![b.to_vec()])?;
    let augmented = a.hstack(&column)?;
    let Rref {
        reduced,
        pivot_columns,
    } = rref(&augmented);
    let n = a.cols();
    if pivot_columns.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = rational::zeros(n);
    for (row, &pc) in pivot_columns.iter().enumerate() {
        x[pc] = reduced[(row, n)].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let augmented = m.hstack(&Matrix::identity(n)).ok()?;
    let r = rref(&augmented);
    if r.pivot_columns.iter().take_while(|&&c| c < n).count() != n {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.reduced.select_columns(&cols))
}

/// `m = a · b` with `a` the pivot columns of `m` (full column rank) and `b`
/// the nonzero rows of its RREF (full row rank).
pub fn rank_factorization(m: &Matrix) -> (Matrix, Matrix) {
    let Rref {
        reduced,
        pivot_columns,
    } = rref(m);
    let k = pivot_columns.len();
    let a = m.select_columns(&pivot_columns);
    let rows: Vec<usize> = (0..k).collect();
    let b = reduced.select_rows(&rows);
    (a, b)
}
