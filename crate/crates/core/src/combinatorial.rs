//! Zero patterns of slack matrices and the polygon characterization.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;

/// 0/1 matrix with a 1 exactly where the source matrix has a zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidencePattern {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl IncidencePattern {
    pub fn from_bits<const C: usize>(rows: &[[u8; C]]) -> Self {
        Self {
            rows: rows.len(),
            cols: C,
            bits: rows.iter().flatten().map(|&b| b != 0).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn row_count(&self, i: usize) -> usize {
        (0..self.cols).filter(|&j| self.get(i, j)).count()
    }

    pub fn column_count(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j)).count()
    }

    pub fn to_matrix(&self) -> Matrix {
        let data = self
            .bits
            .iter()
            .map(|&b| crate::rational::int(i64::from(b)))
            .collect();
        Matrix::new(self.rows, self.cols, data).expect("sizes agree")
    }
}

pub fn incidence_matrix(m: &Matrix) -> Result<IncidencePattern> {
    m.ensure_nonnegative()?;
    Ok(IncidencePattern {
        rows: m.rows(),
        cols: m.cols(),
        bits: m.entries().iter().map(Zero::is_zero).collect(),
    })
}

/// Whether a square `n × n` matrix (`n ≥ 3`) is a vertex-facet slack matrix
/// of an n-gon: its rows span an affine plane and its zeros can be permuted
/// onto the cyclic two-band. The band condition is checked as "two zeros in
/// every row and column, and the row/column graph joined by zeros is one
/// cycle of length 2n".
pub fn polygon_slack_check(m: &Matrix) -> Result<bool> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::NotApplicable(format!(
            "matrix is {}x{}, not square",
            m.rows(),
            m.cols()
        )));
    }
    if n < 3 {
        return Err(Error::NotApplicable(format!("size {n} is below 3")));
    }
    let inc = incidence_matrix(m)?;
    if linalg::affine_dimension(&m.to_rows(), n) != Some(2) {
        return Ok(false);
    }
    Ok(is_single_band_cycle(&inc))
}

fn is_single_band_cycle(inc: &IncidencePattern) -> bool {
    let n = inc.rows();
    if (0..n).any(|i| inc.row_count(i) != 2) || (0..n).any(|j| inc.column_count(j) != 2) {
        return false;
    }
    // Every vertex of the bipartite graph has degree 2, so it is a union of
    // cycles; walk from row 0 and see whether the cycle covers all 2n nodes.
    let row_nbrs = |i: usize| -> Vec<usize> { (0..n).filter(|&j| inc.get(i, j)).collect() };
    let col_nbrs = |j: usize| -> Vec<usize> { (0..n).filter(|&i| inc.get(i, j)).collect() };
    let mut visited_rows = 1;
    let mut row = 0;
    let mut col = row_nbrs(0)[0];
    loop {
        let rows = col_nbrs(col);
        let next_row = if rows[0] == row { rows[1] } else { rows[0] };
        if next_row == 0 {
            break;
        }
        visited_rows += 1;
        let cols = row_nbrs(next_row);
        col = if cols[0] == col { cols[1] } else { cols[0] };
        row = next_row;
    }
    visited_rows == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexample_pattern() {
        let m = Matrix::from_i64(&[[1, 2], [2, 1], [0, 0], [0, 0]]);
        assert_eq!(
            incidence_matrix(&m).unwrap(),
            IncidencePattern::from_bits(&[[0, 0], [0, 0], [1, 1], [1, 1]])
        );
    }

    #[test]
    fn positive_matrix_has_empty_pattern() {
        let m = Matrix::from_i64(&[[1, 2, 3], [4, 5, 6]]);
        let inc = incidence_matrix(&m).unwrap();
        assert!((0..2).all(|i| inc.row_count(i) == 0));
        assert!(incidence_matrix(&Matrix::from_i64(&[[-1]])).is_err());
    }

    #[test]
    fn square_is_a_four_gon() {
        let m = Matrix::from_i64(&[[0, 2, 0, 2], [0, 2, 2, 0], [2, 0, 0, 2], [2, 0, 2, 0]]);
        assert!(polygon_slack_check(&m).unwrap());
    }

    #[test]
    fn identity_is_not_a_polygon() {
        assert!(!polygon_slack_check(&Matrix::identity(4)).unwrap());
    }

    #[test]
    fn two_disjoint_cycles_rejected() {
        // two zeros per row and column, but the zero graph is two 4-cycles
        let m = Matrix::from_i64(&[
            [0, 0, 1, 1, 1, 1],
            [0, 0, 1, 1, 1, 1],
            [1, 1, 0, 0, 1, 1],
            [1, 1, 0, 0, 1, 1],
            [1, 1, 1, 1, 0, 0],
            [1, 1, 1, 1, 0, 0],
        ]);
        let inc = incidence_matrix(&m).unwrap();
        assert!(!is_single_band_cycle(&inc));
    }

    #[test]
    fn not_applicable_shapes() {
        let prism = Matrix::zeros(6, 5);
        assert!(matches!(
            polygon_slack_check(&prism),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            polygon_slack_check(&Matrix::identity(2)),
            Err(Error::NotApplicable(_))
        ));
    }
}
