//! Exact double description conversion between H- and V-forms of cones.
//!
//! The lineality space is split off first: the cone is projected onto the row
//! space of its normals, where it is pointed, and the extreme rays of that
//! pointed cone are enumerated by inserting the inequalities one at a time.
//! Adjacency of two rays is decided algebraically from the rank of their
//! common tight constraints.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::cone::{canonical_ray, ConeH, ConeV};
use crate::linalg;
use crate::matrix::Matrix;
use crate::rational::{self, Vector};

/// Minimal V-form of an H-cone: a lineality basis plus one canonical ray per
/// extreme ray of the pointed part, which lies in the orthogonal complement
/// of the lineality space.
pub fn dd_h_to_v(h: &ConeH) -> ConeV {
    let n = h.dim;
    if h.normals.is_empty() {
        return ConeV {
            dim: n,
            rays: Vec::new(),
            lineality: (0..n).map(|i| rational::unit(n, i)).collect(),
        };
    }
    let normals = h.normal_matrix();
    let lineality = linalg::kernel_basis(&normals);
    let r = linalg::rref(&normals);
    let k = r.rank();
    let basis_rows: Vec<usize> = (0..k).collect();
    let basis = r.reduced.select_rows(&basis_rows);

    // Coordinates t ∈ ℝᵏ with x = basisᵀ t.
    let projected = normals.mul(&basis.transpose()).expect("shapes agree");
    let rays = pointed_extreme_rays(&projected.to_rows(), k)
        .into_iter()
        .map(|t| {
            let x = basis.left_mul_vec(&t).expect("shapes agree");
            canonical_ray(&x).expect("lifted rays are nonzero")
        })
        .collect();
    ConeV {
        dim: n,
        rays,
        lineality,
    }
}

/// Minimal H-form of a V-cone: one normal per facet, followed by opposite
/// pairs spanning the orthogonal complement of the linear hull.
pub fn dd_v_to_h(v: &ConeV) -> ConeH {
    let mut dual_normals = v.rays.clone();
    for l in &v.lineality {
        dual_normals.push(l.clone());
        dual_normals.push(rational::neg(l));
    }
    let dual = dd_h_to_v(&ConeH {
        dim: v.dim,
        normals: dual_normals,
    });
    let mut normals = dual.rays;
    for l in dual.lineality {
        let l = canonical_ray(&l).expect("basis vectors are nonzero");
        normals.push(rational::neg(&l));
        normals.push(l);
    }
    ConeH {
        dim: v.dim,
        normals,
    }
}

pub fn minimal_vrep(v: &ConeV) -> ConeV {
    dd_h_to_v(&dd_v_to_h(v))
}

struct Ray {
    point: Vector,
    /// Sorted indices of the inserted constraints that are tight at `point`.
    tight: Vec<usize>,
}

/// Extreme rays of `{ t : c·t ≥ 0 for c in constraints }`, which must have
/// rank `dim` (so the cone is pointed). Rays are returned canonical.
pub(crate) fn pointed_extreme_rays(constraints: &[Vector], dim: usize) -> Vec<Vector> {
    if dim == 0 {
        return Vec::new();
    }

    // Initial simplicial cone from the first linearly independent rows.
    let mut chosen: Vec<usize> = Vec::with_capacity(dim);
    for (i, c) in constraints.iter().enumerate() {
        if chosen.len() == dim {
            break;
        }
        let mut trial: Vec<Vector> = chosen.iter().map(|&j| constraints[j].clone()).collect();
        trial.push(c.clone());
        if linalg::vectors_rank(&trial, dim) == trial.len() {
            chosen.push(i);
        }
    }
    assert_eq!(
        chosen.len(),
        dim,
        "constraint system must have full column rank"
    );
    let square = Matrix::from_rows(
        dim,
        chosen.iter().map(|&i| constraints[i].clone()).collect(),
    )
    .expect("rows have length dim");
    let inv = linalg::inverse(&square).expect("chosen rows are independent");
    let mut rays: Vec<Ray> = (0..dim)
        .map(|k| {
            let mut tight: Vec<usize> = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &i)| i)
                .collect();
            tight.sort_unstable();
            Ray {
                point: canonical_ray(&inv.column(k)).expect("inverse columns are nonzero"),
                tight,
            }
        })
        .collect();

    for (i, c) in constraints.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let values: Vec<_> = rays.iter().map(|r| rational::dot(c, &r.point)).collect();
        let positive: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_positive())
            .collect();
        let negative: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_negative())
            .collect();

        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let Some(common) = adjacent(&rays[p], &rays[q], constraints, dim) else {
                    continue;
                };
                let point: Vector = rays[q]
                    .point
                    .iter()
                    .zip(&rays[p].point)
                    .map(|(xq, xp)| &values[p] * xq - &values[q] * xp)
                    .collect();
                let mut tight = common;
                tight.push(i);
                tight.sort_unstable();
                created.push(Ray {
                    point: canonical_ray(&point).expect("combination of independent rays"),
                    tight,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (k, mut ray) in rays.into_iter().enumerate() {
            if values[k].is_negative() {
                continue;
            }
            if values[k].is_zero() {
                ray.tight.push(i);
                ray.tight.sort_unstable();
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }

    let mut seen = HashSet::new();
    rays.into_iter()
        .map(|r| r.point)
        .filter(|p| seen.insert(p.clone()))
        .collect()
}

/// Common tight set of two rays if they span a 2-face, i.e. their common
/// tight constraints have rank `dim − 2`.
fn adjacent(a: &Ray, b: &Ray, constraints: &[Vector], dim: usize) -> Option<Vec<usize>> {
    if dim < 2 {
        return None;
    }
    let common: Vec<usize> = a
        .tight
        .iter()
        .filter(|i| b.tight.binary_search(i).is_ok())
        .copied()
        .collect();
    if common.len() < dim - 2 {
        return None;
    }
    let rows: Vec<Vector> = common.iter().map(|&i| constraints[i].clone()).collect();
    (linalg::vectors_rank(&rows, dim) == dim - 2).then_some(common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::vector;

    fn canon(vs: &[Vector]) -> HashSet<Vector> {
        vs.iter().map(|v| canonical_ray(v).unwrap()).collect()
    }

    #[test]
    fn orthant() {
        let h = ConeH::from_columns(&Matrix::identity(3));
        let v = dd_h_to_v(&h);
        assert!(v.lineality.is_empty());
        assert_eq!(
            canon(&v.rays),
            canon(&[vector(&[1, 0, 0]), vector(&[0, 1, 0]), vector(&[0, 0, 1])])
        );
    }

    #[test]
    fn half_plane_has_lineality() {
        let h = ConeH::new(2, vec![vector(&[0, 1])]).unwrap();
        let v = dd_h_to_v(&h);
        assert_eq!(v.lineality, vec![vector(&[1, 0])]);
        assert_eq!(v.rays, vec![vector(&[0, 1])]);
    }

    #[test]
    fn square_cone_rays() {
        let h = ConeH::new(
            3,
            vec![
                vector(&[1, 1, 0]),
                vector(&[1, -1, 0]),
                vector(&[1, 0, 1]),
                vector(&[1, 0, -1]),
            ],
        )
        .unwrap();
        let v = dd_h_to_v(&h);
        assert_eq!(v.rays.len(), 4);
        assert_eq!(
            canon(&v.rays),
            canon(&[
                vector(&[1, 1, 1]),
                vector(&[1, 1, -1]),
                vector(&[1, -1, 1]),
                vector(&[1, -1, -1])
            ])
        );
    }

    #[test]
    fn dualize_square_cone() {
        let v = ConeV::new(
            3,
            vec![
                vector(&[1, 1, 1]),
                vector(&[1, 1, -1]),
                vector(&[1, -1, 1]),
                vector(&[1, -1, -1]),
            ],
            vec![],
        )
        .unwrap();
        let h = dd_v_to_h(&v);
        assert_eq!(
            canon(&h.normals),
            canon(&[
                vector(&[1, 1, 0]),
                vector(&[1, -1, 0]),
                vector(&[1, 0, 1]),
                vector(&[1, 0, -1])
            ])
        );
        assert_eq!(h.normals.len(), 4);
    }

    #[test]
    fn prism_homogenization_facets() {
        let pts = [
            [0, 1, -1],
            [2, -1, -1],
            [-2, -1, -1],
            [0, 1, 1],
            [2, -1, 1],
            [-2, -1, 1],
        ];
        let rays = pts.iter().map(|p| vector(&[1, p[0], p[1], p[2]])).collect();
        let h = dd_v_to_h(&ConeV::new(4, rays, vec![]).unwrap());
        assert_eq!(
            canon(&h.normals),
            canon(&[
                vector(&[1, 0, 0, -1]),
                vector(&[1, 0, 1, 0]),
                vector(&[1, 1, -1, 0]),
                vector(&[1, -1, -1, 0]),
                vector(&[1, 0, 0, 1]),
            ])
        );
    }

    #[test]
    fn minimal_vrep_examples() {
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
        let m = minimal_vrep(&v);
        assert_eq!(m.lineality.len(), 1);
        assert_eq!(canon(&m.lineality), canon(&[vector(&[1, 0])]));
        assert_eq!(m.rays, vec![vector(&[0, 1])]);

        let v = ConeV::new(
            2,
            vec![vector(&[1, 0]), vector(&[0, 1]), vector(&[1, 1])],
            vec![],
        )
        .unwrap();
        assert_eq!(
            canon(&minimal_vrep(&v).rays),
            canon(&[vector(&[1, 0]), vector(&[0, 1])])
        );

        let id = ConeV::from_rows(&Matrix::identity(3));
        let m = minimal_vrep(&id);
        assert_eq!(canon(&m.rays), canon(&id.rays));
        assert!(m.lineality.is_empty());
    }

    #[test]
    fn zero_cone_and_whole_space() {
        let h = ConeH::new(2, vec![vector(&[1, 0]), vector(&[0, 1]), vector(&[-1, -1])]).unwrap();
        let v = dd_h_to_v(&h);
        assert!(v.rays.is_empty() && v.lineality.is_empty());

        let v = dd_h_to_v(&ConeH::new(2, vec![]).unwrap());
        assert_eq!(v.lineality.len(), 2);
    }
}
