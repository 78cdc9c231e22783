//! Random inputs and brute-force references shared by the test targets.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use slackmat::rational::{frac, int, vector};
use slackmat::{linalg, polytope, Inequality, Matrix, PolytopeH, PolytopeV, Rational, Vector};

pub fn small_rational(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    frac(rng.random_range(lo..=hi), rng.random_range(1..=3))
}

/// Nonnegative `rows × cols` matrix whose entries are zero with probability
/// `zero_prob`.
pub fn random_nonnegative(rng: &mut impl Rng, rows: usize, cols: usize, zero_prob: f64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| {
            if rng.random_bool(zero_prob) {
                int(0)
            } else {
                small_rational(rng, 1, 4)
            }
        })
        .collect();
    Matrix::new(rows, cols, data).unwrap()
}

/// `count` points in ℝ^dim with small rational coordinates, retried until
/// they span ℝ^dim affinely.
pub fn random_full_dimensional_points(rng: &mut impl Rng, dim: usize, count: usize) -> Vec<Vector> {
    assert!(count > dim);
    loop {
        let points: Vec<Vector> = (0..count)
            .map(|_| (0..dim).map(|_| small_rational(rng, -6, 6)).collect())
            .collect();
        if linalg::affine_dimension(&points, dim) == Some(dim) {
            return points;
        }
    }
}

/// Vertex list and facet description of a random full-dimensional polytope.
pub fn random_polytope(
    rng: &mut impl Rng,
    dim: usize,
    max_points: usize,
) -> (PolytopeV, PolytopeH) {
    let count = rng.random_range(dim + 1..=max_points.max(dim + 1));
    let points = random_full_dimensional_points(rng, dim, count);
    let all = PolytopeV::new(dim, points).unwrap();
    let vertices = PolytopeV::new(dim, all.vertices()).unwrap();
    let facets = all.facets().unwrap();
    (vertices, facets)
}

/// Vertex-facet slack matrix of a random polytope, with rows and columns
/// shuffled.
pub fn random_slack_matrix(rng: &mut impl Rng, dim: usize, max_points: usize) -> Matrix {
    let (mut v, mut h) = random_polytope(rng, dim, max_points);
    v.points.shuffle(rng);
    h.inequalities.shuffle(rng);
    polytope::slack_of_polytope(&v, &h).unwrap()
}

pub fn positive_scaling(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng, 1, 5)).collect()
}

pub fn scale_rows(m: &Matrix, s: &[Rational]) -> Matrix {
    let mut out = m.clone();
    for (i, x) in s.iter().enumerate() {
        out.scale_row(i, x);
    }
    out
}

pub fn scale_columns(m: &Matrix, s: &[Rational]) -> Matrix {
    let mut out = m.clone();
    for (j, x) in s.iter().enumerate() {
        out.scale_column(j, x);
    }
    out
}

pub fn with_zero_row(m: &Matrix, at: usize) -> Matrix {
    let mut rows = m.to_rows();
    rows.insert(at, vec![int(0); m.cols()]);
    Matrix::from_rows(m.cols(), rows).unwrap()
}

pub fn without_zero_rows(m: &Matrix) -> Matrix {
    let keep: Vec<usize> = (0..m.rows()).filter(|&i| !m.is_zero_row(i)).collect();
    m.select_rows(&keep)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Strictly convex hull of lattice points in counter-clockwise order.
pub fn lattice_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// A convex lattice polygon with exactly `n` vertices, counter-clockwise.
pub fn random_lattice_polygon(rng: &mut impl Rng, n: usize) -> Vec<(i64, i64)> {
    loop {
        let cloud: Vec<(i64, i64)> = (0..40)
            .map(|_| (rng.random_range(-30..=30), rng.random_range(-30..=30)))
            .collect();
        let hull = lattice_hull(&cloud);
        if hull.len() < n {
            continue;
        }
        let mut picked = rand::seq::index::sample(rng, hull.len(), n).into_vec();
        picked.sort_unstable();
        // A subset of points in convex position stays in convex position.
        return picked.into_iter().map(|i| hull[i]).collect();
    }
}

/// Edge inequalities of a counter-clockwise polygon; edge `j` joins vertex
/// `j` to vertex `j + 1`.
pub fn polygon_h(vertices: &[(i64, i64)]) -> PolytopeH {
    let n = vertices.len();
    let inequalities = (0..n)
        .map(|j| {
            let (a, b) = (vertices[j], vertices[(j + 1) % n]);
            let normal = (b.1 - a.1, a.0 - b.0);
            Inequality::new(
                int(normal.0 * a.0 + normal.1 * a.1),
                vector(&[normal.0, normal.1]),
            )
        })
        .collect();
    PolytopeH::new(2, inequalities).unwrap()
}

pub fn polygon_v(vertices: &[(i64, i64)]) -> PolytopeV {
    PolytopeV::new(2, vertices.iter().map(|&(x, y)| vector(&[x, y])).collect()).unwrap()
}

pub fn prism() -> Matrix {
    Matrix::from_i64(&[
        [1, 1, 0, 0, 0],
        [1, 0, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
    ])
}

pub fn sorted(mut points: Vec<Vector>) -> Vec<Vector> {
    points.sort();
    points
}
