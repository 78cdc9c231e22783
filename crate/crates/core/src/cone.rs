//! Polyhedral cones in generator (V) and inequality (H) form.

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::rational::{self, Rational, Vector};

/// `{ x ∈ ℝⁿ : x·b ≥ 0 for every normal b }`. Equations are stored as pairs
/// of opposite normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeH {
    pub dim: usize,
    pub normals: Vec<Vector>,
}

/// `cone(rays) + span(lineality)`. Generators need not be minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeV {
    pub dim: usize,
    pub rays: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeRep {
    V(ConeV),
    H(ConeH),
}

impl ConeH {
    pub fn new(dim: usize, normals: Vec<Vector>) -> Result<Self> {
        check_lengths(dim, &normals)?;
        Ok(Self { dim, normals })
    }

    /// The cone `{ x : xᵀB ≥ 0 }` described by the columns of `b`.
    pub fn from_columns(b: &Matrix) -> Self {
        Self {
            dim: b.rows(),
            normals: b.to_columns(),
        }
    }

    pub fn normal_matrix(&self) -> Matrix {
        Matrix::from_rows(self.dim, self.normals.clone())
            .expect("normals share the ambient dimension")
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.normals
            .iter()
            .all(|b| !num_traits::Signed::is_negative(&rational::dot(b, x)))
    }

    /// Dimension of the lineality space: the common kernel of the normals.
    pub fn lineality_dim(&self) -> usize {
        self.dim - linalg::vectors_rank(&self.normals, self.dim)
    }
}

impl ConeV {
    pub fn new(dim: usize, rays: Vec<Vector>, lineality: Vec<Vector>) -> Result<Self> {
        check_lengths(dim, &rays)?;
        check_lengths(dim, &lineality)?;
        Ok(Self {
            dim,
            rays,
            lineality,
        })
    }

    /// The cone generated by the rows of `a`.
    pub fn from_rows(a: &Matrix) -> Self {
        Self {
            dim: a.cols(),
            rays: a.to_rows(),
            lineality: Vec::new(),
        }
    }

    /// Removes zero, duplicate and non-extreme generators and moves any
    /// lineality into `lineality`. Rays come back in canonical form.
    pub fn minimal(&self) -> ConeV {
        dd::minimal_vrep(self)
    }

    pub fn lineality_dim(&self) -> usize {
        self.minimal().lineality.len()
    }
}

impl From<ConeV> for ConeRep {
    fn from(c: ConeV) -> Self {
        ConeRep::V(c)
    }
}

impl From<ConeH> for ConeRep {
    fn from(c: ConeH) -> Self {
        ConeRep::H(c)
    }
}

/// `(dim lineal(K), K is pointed)`.
pub fn lineality_and_pointedness(cone: &ConeRep) -> (usize, bool) {
    let dim = match cone {
        ConeRep::H(h) => h.lineality_dim(),
        ConeRep::V(v) => v.lineality_dim(),
    };
    (dim, dim == 0)
}

/// Positive rescaling of `v` with unit 1-norm. Two nonzero vectors are
/// positive multiples of each other iff their canonical rays are equal.
pub fn canonical_ray(v: &[Rational]) -> Result<Vector> {
    let norm = rational::l1_norm(v);
    if num_traits::Zero::is_zero(&norm) {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &norm).collect())
}

/// `S = A·B`, rejecting pairs that produce a negative slack.
pub fn slack_of_cone(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let s = a.mul(b)?;
    match s.first_negative() {
        Some((row, col)) => Err(Error::NotRepresentationPair { row, col }),
        None => Ok(s),
    }
}

fn check_lengths(dim: usize, vectors: &[Vector]) -> Result<()> {
    match vectors.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, vector};

    #[test]
    fn canonical_rays() {
        assert_eq!(
            canonical_ray(&vector(&[2, 4])).unwrap(),
            vec![frac(1, 3), frac(2, 3)]
        );
        assert_eq!(
            canonical_ray(&vector(&[3, 0, 3])).unwrap(),
            vec![frac(1, 2), int(0), frac(1, 2)]
        );
        assert_eq!(canonical_ray(&vector(&[0, 0])), Err(Error::ZeroVector));
        assert_eq!(
            canonical_ray(&vector(&[-1, 3])).unwrap(),
            canonical_ray(&vector(&[-2, 6])).unwrap()
        );
    }

    #[test]
    fn slack_of_cone_examples() {
        let id = Matrix::identity(3);
        assert_eq!(slack_of_cone(&id, &id).unwrap(), id);

        let a = Matrix::from_i64(&[[1, 0], [0, 0]]);
        let s = slack_of_cone(&a, &Matrix::identity(2)).unwrap();
        assert!(s.is_zero_row(1));

        let bad = Matrix::from_i64(&[[1, -1]]);
        assert_eq!(
            slack_of_cone(&bad, &Matrix::identity(2)),
            Err(Error::NotRepresentationPair { row: 0, col: 1 })
        );
    }

    #[test]
    fn pointedness() {
        let orthant = ConeH::from_columns(&Matrix::identity(3));
        assert_eq!(lineality_and_pointedness(&orthant.into()), (0, true));

        let half_plane = ConeH::new(2, vec![vector(&[0, 1])]).unwrap();
        assert_eq!(lineality_and_pointedness(&half_plane.into()), (1, false));

        let v = ConeV::new(
            2,
            vec![
                vector(&[0, 1]),
                vector(&[0, 1]),
                vector(&[1, 0]),
                vector(&[-1, 0]),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(lineality_and_pointedness(&v.into()), (1, false));
    }
}
