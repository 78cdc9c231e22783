//! A dense two-phase simplex over the rationals with Bland's rule.
//!
//! Variables are free; sign restrictions are ordinary constraints. Infeasible
//! programs come back with Farkas multipliers, obtained by solving the
//! alternative system rather than by reading off phase-one duals.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coefficients · x  (≤ | ≥ | =)  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vector,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coefficients: Vector, relation: Relation, rhs: Rational) -> Self {
        Self {
            coefficients,
            relation,
            rhs,
        }
    }

    pub fn le(coefficients: Vector, rhs: Rational) -> Self {
        Self::new(coefficients, Relation::Le, rhs)
    }

    pub fn ge(coefficients: Vector, rhs: Rational) -> Self {
        Self::new(coefficients, Relation::Ge, rhs)
    }

    pub fn eq(coefficients: Vector, rhs: Rational) -> Self {
        Self::new(coefficients, Relation::Eq, rhs)
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = rational::dot(&self.coefficients, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        point: Vector,
        value: Rational,
    },
    /// Multipliers `y`, one per constraint, with `y ≥ 0` on `≤` rows,
    /// `y ≤ 0` on `≥` rows, `Σ yᵢ aᵢ = 0` and `Σ yᵢ bᵢ = −1`.
    Infeasible {
        farkas: Vector,
    },
    Unbounded,
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }
}

/// Solves `max/min objective · x` subject to `constraints` over free `x`.
pub fn lp_solve(
    objective: &[Rational],
    constraints: &[Constraint],
    sense: Sense,
) -> Result<LpOutcome> {
    let n = objective.len();
    for c in constraints {
        if c.coefficients.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.coefficients.len(),
            });
        }
    }
    let cost: Vector = match sense {
        Sense::Minimize => objective.to_vec(),
        Sense::Maximize => rational::neg(objective),
    };
    Ok(match solve_free(&cost, constraints) {
        Standard::Optimal(point) => {
            let value = rational::dot(objective, &point);
            LpOutcome::Optimal { point, value }
        }
        Standard::Unbounded => LpOutcome::Unbounded,
        Standard::Infeasible => LpOutcome::Infeasible {
            farkas: farkas_multipliers(constraints, n),
        },
    })
}

/// Checks a Farkas certificate for `constraints` by direct arithmetic.
pub fn verify_farkas(constraints: &[Constraint], dim: usize, y: &[Rational]) -> bool {
    if y.len() != constraints.len() {
        return false;
    }
    let mut combo = rational::zeros(dim);
    let mut rhs = Rational::zero();
    for (c, yi) in constraints.iter().zip(y) {
        let sign_ok = match c.relation {
            Relation::Le => !yi.is_negative(),
            Relation::Ge => !yi.is_positive(),
            Relation::Eq => true,
        };
        if !sign_ok || c.coefficients.len() != dim {
            return false;
        }
        for (acc, a) in combo.iter_mut().zip(&c.coefficients) {
            *acc += yi * a;
        }
        rhs += yi * &c.rhs;
    }
    rational::is_zero(&combo) && rhs == -Rational::one()
}

fn farkas_multipliers(constraints: &[Constraint], n: usize) -> Vector {
    let m = constraints.len();
    let mut alt = Vec::with_capacity(m + n + 1);
    for (i, c) in constraints.iter().enumerate() {
        match c.relation {
            Relation::Le => alt.push(Constraint::ge(rational::unit(m, i), Rational::zero())),
            Relation::Ge => alt.push(Constraint::le(rational::unit(m, i), Rational::zero())),
            Relation::Eq => {}
        }
    }
    for j in 0..n {
        let column = constraints
            .iter()
            .map(|c| c.coefficients[j].clone())
            .collect();
        alt.push(Constraint::eq(column, Rational::zero()));
    }
    let rhs = constraints.iter().map(|c| c.rhs.clone()).collect();
    alt.push(Constraint::eq(rhs, -Rational::one()));
    match solve_free(&rational::zeros(m), &alt) {
        Standard::Optimal(y) => y,
        _ => unreachable!("an infeasible system always has a Farkas certificate"),
    }
}

enum Standard {
    Optimal(Vector),
    Infeasible,
    Unbounded,
}

/// Minimizes `cost · x` over free `x`, via `x = u − v` with slack columns.
fn solve_free(cost: &[Rational], constraints: &[Constraint]) -> Standard {
    let n = cost.len();
    let slack_count = constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let width = 2 * n + slack_count;
    let mut rows = Vec::with_capacity(constraints.len());
    let mut rhs = Vec::with_capacity(constraints.len());
    let mut next_slack = 2 * n;
    for c in constraints {
        let mut row = rational::zeros(width);
        for (j, a) in c.coefficients.iter().enumerate() {
            row[j] = a.clone();
            row[n + j] = -a;
        }
        match c.relation {
            Relation::Le => {
                row[next_slack] = Rational::one();
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
            }
            Relation::Eq => {}
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
            b = -b;
        }
        rows.push(row);
        rhs.push(b);
    }
    let mut std_cost = rational::zeros(width);
    for (j, c) in cost.iter().enumerate() {
        std_cost[j] = c.clone();
        std_cost[n + j] = -c;
    }
    match two_phase(rows, rhs, &std_cost) {
        Standard::Optimal(z) => Standard::Optimal((0..n).map(|j| &z[j] - &z[n + j]).collect()),
        other => other,
    }
}

struct Tableau {
    /// Each row holds the constraint coefficients followed by the right-hand side.
    rows: Vec<Vector>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations over columns `< allowed` until optimal.
    /// Returns `false` on unboundedness.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            // Bland: smallest-index column with negative reduced cost.
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() && !cost[b].is_zero() {
                        d -= &cost[b] * &self.rows[i][j];
                    }
                }
                d.is_negative()
            });
            let Some(c) = entering else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// `min cost·z` s.t. `rows z = rhs`, `z ≥ 0`, with `rhs ≥ 0`.
fn two_phase(rows: Vec<Vector>, rhs: Vec<Rational>, cost: &[Rational]) -> Standard {
    let m = rows.len();
    let width = cost.len();
    let total = width + m;
    let mut tableau = Tableau {
        rows: rows
            .into_iter()
            .zip(rhs)
            .enumerate()
            .map(|(i, (mut row, b))| {
                row.extend((0..m).map(|k| {
                    if k == i {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row.push(b);
                row
            })
            .collect(),
        basis: (width..total).collect(),
        width: total,
    };

    let mut phase_one = rational::zeros(total);
    for c in phase_one.iter_mut().skip(width) {
        *c = Rational::one();
    }
    tableau.optimize(&phase_one, total);
    let infeasibility = tableau
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= width)
        .fold(Rational::zero(), |acc, (i, _)| acc + tableau.rhs(i));
    if infeasibility.is_positive() {
        return Standard::Infeasible;
    }

    // Drive zero-level artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tableau.rows.len() {
        if tableau.basis[i] >= width {
            match (0..width).find(|&j| !tableau.rows[i][j].is_zero()) {
                Some(j) => tableau.pivot(i, j),
                None => {
                    tableau.rows.remove(i);
                    tableau.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase_two = cost.to_vec();
    phase_two.extend(rational::zeros(m));
    if !tableau.optimize(&phase_two, width) {
        return Standard::Unbounded;
    }
    let mut z = rational::zeros(width);
    for (i, &b) in tableau.basis.iter().enumerate() {
        z[b] = tableau.rhs(i).clone();
    }
    Standard::Optimal(z)
}
