//! Polytopes as point lists (V) or inequality systems `a·x ≤ β` (H), their
//! homogenization cones, slack matrices and polars.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use crate::cone::{ConeH, ConeRep, ConeV};
use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{self, Constraint, LpOutcome, Sense};
use crate::matrix::Matrix;
use crate::rational::{self, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeV {
    pub dim: usize,
    pub points: Vec<Vector>,
}

/// `normal · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub rhs: Rational,
    pub normal: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeH {
    pub dim: usize,
    pub inequalities: Vec<Inequality>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeRep {
    V(PolytopeV),
    H(PolytopeH),
}

impl Inequality {
    pub fn new(rhs: Rational, normal: Vector) -> Self {
        Self { rhs, normal }
    }

    /// `rhs − normal·x`.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.rhs - rational::dot(&self.normal, x)
    }
}

impl PolytopeV {
    pub fn new(dim: usize, points: Vec<Vector>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        Ok(Self { dim, points })
    }

    pub fn from_rows(v: &Matrix) -> Self {
        Self {
            dim: v.cols(),
            points: v.to_rows(),
        }
    }

    pub fn from_i64<const N: usize>(points: &[[i64; N]]) -> Self {
        Self {
            dim: N,
            points: points.iter().map(|p| rational::vector(p)).collect(),
        }
    }

    /// Generators `(1, v)` of the homogenization cone.
    pub fn homogenize(&self) -> ConeV {
        ConeV {
            dim: self.dim + 1,
            rays: self
                .points
                .iter()
                .map(|p| {
                    std::iter::once(Rational::one())
                        .chain(p.iter().cloned())
                        .collect()
                })
                .collect(),
            lineality: Vec::new(),
        }
    }

    /// The distinct vertices, in the order the double description finds them.
    pub fn vertices(&self) -> Vec<Vector> {
        dd::minimal_vrep(&self.homogenize())
            .rays
            .into_iter()
            .map(|r| dehomogenize(&r))
            .collect()
    }

    /// Facet inequalities plus, for lower-dimensional polytopes, opposite
    /// pairs cutting out the affine hull.
    pub fn facets(&self) -> Result<PolytopeH> {
        if self.points.is_empty() {
            return Err(Error::Empty);
        }
        let h = dd::dd_v_to_h(&self.homogenize());
        Ok(PolytopeH::from_homogenized(&h))
    }
}

impl PolytopeH {
    pub fn new(dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        if let Some(q) = inequalities.iter().find(|q| q.normal.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: q.normal.len(),
            });
        }
        Ok(Self { dim, inequalities })
    }

    /// Each row `[β, a₁, …, aₙ]` is the inequality `a·x ≤ β`.
    pub fn from_i64<const N: usize>(dim: usize, rows: &[[i64; N]]) -> Result<Self> {
        if N != dim + 1 {
            return Err(Error::DimensionMismatch {
                expected: dim + 1,
                found: N,
            });
        }
        Ok(Self {
            dim,
            inequalities: rows
                .iter()
                .map(|r| Inequality::new(rational::int(r[0]), rational::vector(&r[1..])))
                .collect(),
        })
    }

    /// Reads `x0·β − a·x ≥ 0` normals `(β, −a)` back as `a·x ≤ β`.
    pub fn from_homogenized(h: &ConeH) -> Self {
        Self {
            dim: h.dim - 1,
            inequalities: h
                .normals
                .iter()
                .map(|b| Inequality::new(b[0].clone(), rational::neg(&b[1..])))
                .collect(),
        }
    }

    /// Normals `(β, −a)` of the homogenization cone `{(x0, x) : a·x ≤ x0 β}`.
    pub fn homogenize(&self) -> ConeH {
        ConeH {
            dim: self.dim + 1,
            normals: self
                .inequalities
                .iter()
                .map(|q| {
                    std::iter::once(q.rhs.clone())
                        .chain(q.normal.iter().map(|a| -a))
                        .collect()
                })
                .collect(),
        }
    }

    /// The matrix `W` whose rows are the inequality normals.
    pub fn normal_matrix(&self) -> Matrix {
        Matrix::from_rows(
            self.dim,
            self.inequalities.iter().map(|q| q.normal.clone()).collect(),
        )
        .expect("normals share the ambient dimension")
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.inequalities.iter().all(|q| !q.slack(x).is_negative())
    }

    /// Pointed iff `W` has a trivial right kernel.
    pub fn is_pointed(&self) -> bool {
        linalg::vectors_rank(
            &self
                .inequalities
                .iter()
                .map(|q| q.normal.clone())
                .collect::<Vec<_>>(),
            self.dim,
        ) == self.dim
    }

    /// True when the recession cone `{ x : W x ≤ 0 }` is trivial. Empty
    /// systems with a trivial recession cone also count as bounded.
    pub fn is_bounded(&self) -> bool {
        let recession = ConeH {
            dim: self.dim,
            normals: self
                .inequalities
                .iter()
                .map(|q| rational::neg(&q.normal))
                .collect(),
        };
        let v = dd::dd_h_to_v(&recession);
        v.rays.is_empty() && v.lineality.is_empty()
    }

    /// Vertices of the polyhedron, which must be a nonempty polytope.
    pub fn vertices(&self) -> Result<PolytopeV> {
        if !self.is_bounded() {
            return Err(Error::NotApplicable("unbounded polyhedron".into()));
        }
        let v = dd::dd_h_to_v(&self.homogenize());
        let points: Vec<Vector> = v
            .rays
            .iter()
            .filter(|r| r[0].is_positive())
            .map(|r| dehomogenize(r))
            .collect();
        if points.is_empty() {
            return Err(Error::Empty);
        }
        Ok(PolytopeV {
            dim: self.dim,
            points,
        })
    }

    fn lp_constraints(&self) -> Vec<Constraint> {
        self.inequalities
            .iter()
            .map(|q| Constraint::le(q.normal.clone(), q.rhs.clone()))
            .collect()
    }
}

impl From<PolytopeV> for PolytopeRep {
    fn from(p: PolytopeV) -> Self {
        PolytopeRep::V(p)
    }
}

impl From<PolytopeH> for PolytopeRep {
    fn from(p: PolytopeH) -> Self {
        PolytopeRep::H(p)
    }
}

pub fn homogenize(p: &PolytopeRep) -> ConeRep {
    match p {
        PolytopeRep::V(v) => ConeRep::V(v.homogenize()),
        PolytopeRep::H(h) => ConeRep::H(h.homogenize()),
    }
}

fn dehomogenize(r: &[Rational]) -> Vector {
    let x0 = &r[0];
    r[1..].iter().map(|x| x / x0).collect()
}

/// `S_ij = β_j − a_j·v_i`; a negative entry means a point lies outside.
pub fn slack_of_polytope(v: &PolytopeV, h: &PolytopeH) -> Result<Matrix> {
    if v.dim != h.dim {
        return Err(Error::DimensionMismatch {
            expected: v.dim,
            found: h.dim,
        });
    }
    let mut s = Matrix::zeros(v.points.len(), h.inequalities.len());
    for (i, p) in v.points.iter().enumerate() {
        for (j, q) in h.inequalities.iter().enumerate() {
            let slack = q.slack(p);
            if slack.is_negative() {
                return Err(Error::NotContained {
                    point: i,
                    inequality: j,
                });
            }
            s[(i, j)] = slack;
        }
    }
    Ok(s)
}

/// Dimension of the set: linear for cones, affine for polytopes. H-forms
/// detect implicit equalities by linear programming.
pub trait Dimension {
    fn dimension(&self) -> Result<usize>;
}

impl Dimension for ConeV {
    fn dimension(&self) -> Result<usize> {
        let mut all = self.rays.clone();
        all.extend(self.lineality.iter().cloned());
        Ok(linalg::vectors_rank(&all, self.dim))
    }
}

impl Dimension for ConeH {
    fn dimension(&self) -> Result<usize> {
        // Normal b is implicit iff max b·x over the cone capped at b·x ≤ 1 is 0.
        let cone: Vec<Constraint> = self
            .normals
            .iter()
            .map(|b| Constraint::ge(b.clone(), Rational::zero()))
            .collect();
        let mut implicit = Vec::new();
        for b in &self.normals {
            let mut cons = cone.clone();
            cons.push(Constraint::le(b.clone(), Rational::one()));
            if optimum(b, &cons)?.is_zero() {
                implicit.push(b.clone());
            }
        }
        Ok(self.dim - linalg::vectors_rank(&implicit, self.dim))
    }
}

impl Dimension for PolytopeV {
    fn dimension(&self) -> Result<usize> {
        linalg::affine_dimension(&self.points, self.dim).ok_or(Error::Empty)
    }
}

impl Dimension for PolytopeH {
    fn dimension(&self) -> Result<usize> {
        let base = self.lp_constraints();
        let zero = rational::zeros(self.dim);
        if !lp::lp_solve(&zero, &base, Sense::Maximize)?.is_optimal() {
            return Err(Error::Empty);
        }
        // a·x ≤ β is implicit iff min a·x over P, floored at β − 1, equals β.
        let mut implicit = Vec::new();
        for q in &self.inequalities {
            let mut cons = base.clone();
            cons.push(Constraint::ge(q.normal.clone(), &q.rhs - Rational::one()));
            let min = -optimum(&rational::neg(&q.normal), &cons)?;
            if min == q.rhs {
                implicit.push(q.normal.clone());
            }
        }
        Ok(self.dim - linalg::vectors_rank(&implicit, self.dim))
    }
}

impl Dimension for ConeRep {
    fn dimension(&self) -> Result<usize> {
        match self {
            ConeRep::V(v) => v.dimension(),
            ConeRep::H(h) => h.dimension(),
        }
    }
}

impl Dimension for PolytopeRep {
    fn dimension(&self) -> Result<usize> {
        match self {
            PolytopeRep::V(v) => v.dimension(),
            PolytopeRep::H(h) => h.dimension(),
        }
    }
}

fn optimum(objective: &[Rational], cons: &[Constraint]) -> Result<Rational> {
    match lp::lp_solve(objective, cons, Sense::Maximize)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        LpOutcome::Infeasible { .. } => Err(Error::Empty),
        LpOutcome::Unbounded => unreachable!("objective is capped by a constraint"),
    }
}

/// Whether the origin is an interior point of `conv(points)`: the points
/// must affinely span the space and admit a strictly positive convex
/// combination equal to zero.
pub fn origin_in_interior(p: &PolytopeV) -> Result<bool> {
    if p.dimension()? != p.dim {
        return Ok(false);
    }
    let k = p.points.len();
    // variables (λ₁, …, λₖ, t): max t s.t. λᵢ ≥ t, Σλ = 1, Σλᵢvᵢ = 0, t ≤ 1
    let mut cons = Vec::new();
    for i in 0..k {
        let mut c = rational::zeros(k + 1);
        c[i] = Rational::one();
        c[k] = -Rational::one();
        cons.push(Constraint::ge(c, Rational::zero()));
    }
    let mut sum = rational::ones(k);
    sum.push(Rational::zero());
    cons.push(Constraint::eq(sum, Rational::one()));
    for j in 0..p.dim {
        let mut c: Vector = p.points.iter().map(|v| v[j].clone()).collect();
        c.push(Rational::zero());
        cons.push(Constraint::eq(c, Rational::zero()));
    }
    cons.push(Constraint::le(rational::unit(k + 1, k), Rational::one()));
    match lp::lp_solve(&rational::unit(k + 1, k), &cons, Sense::Maximize)? {
        LpOutcome::Optimal { value, .. } => Ok(value.is_positive()),
        _ => Ok(false),
    }
}

/// `P° = { y : x·y ≤ 1 for x ∈ P }` as the convex hull of the facet normals
/// of `P` scaled to right-hand side 1.
pub fn polar(p: &PolytopeV) -> Result<PolytopeV> {
    if !origin_in_interior(p)? {
        return Err(Error::OriginNotInterior);
    }
    let facets = p.facets()?;
    let mut seen = HashSet::new();
    let points = facets
        .inequalities
        .iter()
        .map(|q| rational::scale(&q.normal, &q.rhs.recip()))
        .filter(|v| seen.insert(v.clone()))
        .collect();
    Ok(PolytopeV { dim: p.dim, points })
}
