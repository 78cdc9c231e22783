//! Slack matrix recognition.
//!
//! A nonnegative matrix is a slack matrix of a cone exactly when the cone
//! generated by its columns equals the nonnegative part of its column span
//! (the column generating condition). The check computes the extreme rays of
//! `K = { x ≥ 0 : ℓ·x = 0 for ℓ in the left kernel }` and asks whether each of
//! them is a positive multiple of a column. Polytope slack matrices are the
//! cone slack matrices of rank at least two with the all-ones vector in their
//! column span.
//!
//! Every verdict carries a certificate: a factorization `M = A·B` for yes,
//! and for no either a nonnegative point of the span separated from the
//! generated cone by a hyperplane, a left-kernel vector that is not
//! orthogonal to the all-ones vector, or the rank.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use crate::cone::{canonical_ray, ConeH, ConeV};
use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{self, Constraint, LpOutcome, Sense};
use crate::matrix::Matrix;
use crate::polytope::{self, Inequality, PolytopeH, PolytopeV};
use crate::rational::{self, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Cone,
    Polytope,
}

/// Which span a cone-generating certificate lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `witness ∈ M·ℝ^q`, a p-vector; the separator is checked against columns.
    Column,
    /// `witness ∈ ℝ^p·M`, a q-vector; the separator is checked against rows.
    Row,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YesCertificate {
    /// Generators: `M = a · b` with inner dimension `rank(M)`.
    pub a: Matrix,
    /// Inequality normals, one per column of `M`.
    pub b: Matrix,
    /// For polytopes, some `μ` with `M μ = 𝟙`.
    pub mu: Option<Vector>,
    /// For polytopes, a realization whose slack matrix is `M`.
    pub polytope: Option<(PolytopeV, PolytopeH)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoCertificate {
    /// `witness` is nonnegative and in the span, `separator` is nonnegative
    /// on every generator, and `witness · separator < 0`.
    ConeGenerating {
        convention: Convention,
        witness: Vector,
        separator: Vector,
    },
    /// `yᵀ M = 0` and `y · 𝟙 ≠ 0`, so `𝟙` is not in the column span.
    OnesNotInColumnSpan { left_kernel_vector: Vector },
    /// Polytope slack matrices have rank at least two.
    RankTooSmall { rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Yes(YesCertificate),
    No(NoCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub kind: Kind,
    pub certificate: Certificate,
}

impl RecognitionResult {
    pub fn verdict(&self) -> bool {
        matches!(self.certificate, Certificate::Yes(_))
    }

    pub fn yes(&self) -> Option<&YesCertificate> {
        match &self.certificate {
            Certificate::Yes(y) => Some(y),
            Certificate::No(_) => None,
        }
    }

    pub fn no(&self) -> Option<&NoCertificate> {
        match &self.certificate {
            Certificate::Yes(_) => None,
            Certificate::No(n) => Some(n),
        }
    }
}

impl NoCertificate {
    pub fn reason(&self) -> &'static str {
        match self {
            NoCertificate::ConeGenerating { .. } => "cone_generating",
            NoCertificate::OnesNotInColumnSpan { .. } => "ones_not_in_column_span",
            NoCertificate::RankTooSmall { .. } => "rank_too_small",
        }
    }
}

/// Decides the column cone generating condition `M·ℝ₊^q = M·ℝ^q ∩ ℝ₊^p`.
pub fn ccgc_check(m: &Matrix) -> Result<RecognitionResult> {
    m.ensure_nonnegative()?;
    let certificate = match unmatched_ray(m) {
        None => {
            let (a, b) = linalg::rank_factorization(m);
            Certificate::Yes(YesCertificate {
                a,
                b,
                mu: None,
                polytope: None,
            })
        }
        Some(witness) => {
            let separator = separating_normal(m, &witness);
            Certificate::No(NoCertificate::ConeGenerating {
                convention: Convention::Column,
                witness,
                separator,
            })
        }
    };
    Ok(RecognitionResult {
        kind: Kind::Cone,
        certificate,
    })
}

/// Decides the row cone generating condition by running [`ccgc_check`] on
/// the transpose.
pub fn rcgc_check(m: &Matrix) -> Result<RecognitionResult> {
    m.ensure_nonnegative()?;
    let t = ccgc_check(&m.transpose())?;
    let certificate = match t.certificate {
        Certificate::Yes(y) => Certificate::Yes(YesCertificate {
            a: y.b.transpose(),
            b: y.a.transpose(),
            mu: None,
            polytope: None,
        }),
        Certificate::No(NoCertificate::ConeGenerating {
            witness, separator, ..
        }) => Certificate::No(NoCertificate::ConeGenerating {
            convention: Convention::Row,
            witness,
            separator,
        }),
        Certificate::No(other) => Certificate::No(other),
    };
    Ok(RecognitionResult {
        kind: Kind::Cone,
        certificate,
    })
}

pub fn is_cone_slack(m: &Matrix) -> Result<RecognitionResult> {
    ccgc_check(m)
}

pub fn is_polytope_slack(m: &Matrix) -> Result<RecognitionResult> {
    m.ensure_nonnegative()?;
    let no = |c| {
        Ok(RecognitionResult {
            kind: Kind::Polytope,
            certificate: Certificate::No(c),
        })
    };
    let rank = linalg::rank(m);
    if rank < 2 {
        return no(NoCertificate::RankTooSmall { rank });
    }
    let Some(mu) = linalg::solve_linear(m, &rational::ones(m.rows()))? else {
        let left_kernel_vector = linalg::left_kernel_basis(m)
            .into_iter()
            .find(|y| !rational::dot(y, &rational::ones(m.rows())).is_zero())
            .expect("inconsistent system has a left-kernel witness");
        return no(NoCertificate::OnesNotInColumnSpan { left_kernel_vector });
    };
    let cone = ccgc_check(m)?;
    let (a, b) = match cone.certificate {
        Certificate::Yes(y) => (y.a, y.b),
        Certificate::No(c) => return no(c),
    };
    let realization = polytope_from_factors(&a, &b, &mu);
    Ok(RecognitionResult {
        kind: Kind::Polytope,
        certificate: Certificate::Yes(YesCertificate {
            a,
            b,
            mu: Some(mu),
            polytope: Some(realization),
        }),
    })
}

/// Extreme ray of `M·ℝ^q ∩ ℝ₊^p` that is not a positive multiple of any
/// column of `M`.
fn unmatched_ray(m: &Matrix) -> Option<Vector> {
    let p = m.rows();
    let mut normals: Vec<Vector> = (0..p).map(|i| rational::unit(p, i)).collect();
    for l in linalg::left_kernel_basis(m) {
        normals.push(rational::neg(&l));
        normals.push(l);
    }
    let k = dd::dd_h_to_v(&ConeH { dim: p, normals });
    debug_assert!(
        k.lineality.is_empty(),
        "cones inside the orthant are pointed"
    );
    let columns: HashSet<Vector> = m
        .to_columns()
        .iter()
        .filter(|c| !rational::is_zero(c))
        .map(|c| canonical_ray(c).expect("nonzero column"))
        .collect();
    k.rays.into_iter().find(|r| !columns.contains(r))
}

/// A facet normal of the cone generated by the columns of `m` that `x` violates.
fn separating_normal(m: &Matrix, x: &[Rational]) -> Vector {
    let generators = ConeV {
        dim: m.rows(),
        rays: m
            .to_columns()
            .into_iter()
            .filter(|c| !rational::is_zero(c))
            .collect(),
        lineality: Vec::new(),
    };
    dd::dd_v_to_h(&generators)
        .normals
        .into_iter()
        .find(|h| rational::dot(h, x).is_negative())
        .expect("a point outside a closed cone violates one of its inequalities")
}

/// Re-checks a rejection certificate by direct arithmetic.
pub fn verify_no_certificate(m: &Matrix, cert: &NoCertificate) -> bool {
    if !m.is_nonnegative() {
        return false;
    }
    match cert {
        NoCertificate::ConeGenerating {
            convention,
            witness,
            separator,
        } => {
            let m = match convention {
                Convention::Column => m.clone(),
                Convention::Row => m.transpose(),
            };
            let p = m.rows();
            if witness.len() != p || separator.len() != p || !rational::is_nonnegative(witness) {
                return false;
            }
            let in_span = linalg::left_kernel_basis(&m)
                .iter()
                .all(|l| rational::dot(l, witness).is_zero());
            let separates_generators =
                (0..m.cols()).all(|j| !rational::dot(&m.column(j), separator).is_negative());
            in_span && separates_generators && rational::dot(witness, separator).is_negative()
        }
        NoCertificate::OnesNotInColumnSpan { left_kernel_vector } => {
            let y = left_kernel_vector;
            y.len() == m.rows()
                && m.left_mul_vec(y)
                    .map(|r| rational::is_zero(&r))
                    .unwrap_or(false)
                && !rational::dot(y, &rational::ones(m.rows())).is_zero()
        }
        NoCertificate::RankTooSmall { rank } => *rank < 2 && linalg::rank(m) == *rank,
    }
}

/// Re-checks an acceptance certificate: the factors reproduce `m` with inner
/// dimension `rank(m)`, and any polytope data is consistent.
pub fn verify_yes_certificate(m: &Matrix, cert: &YesCertificate) -> bool {
    let Ok(product) = cert.a.mul(&cert.b) else {
        return false;
    };
    if product != *m || cert.a.cols() != linalg::rank(m) {
        return false;
    }
    if let Some(mu) = &cert.mu {
        if m.mul_vec(mu).ok() != Some(rational::ones(m.rows())) {
            return false;
        }
    }
    if let Some((v, h)) = &cert.polytope {
        if polytope::slack_of_polytope(v, h).ok().as_ref() != Some(m) {
            return false;
        }
    }
    true
}

/// Independent test of `conv(rows M) = aff(rows M) ∩ ℝ₊^q`: the right-hand
/// side is enumerated by double description and must be bounded with every
/// vertex a row of `M`.
pub fn affine_criterion_check(m: &Matrix) -> Result<bool> {
    m.ensure_nonnegative()?;
    let rank = linalg::rank(m);
    if rank < 2 {
        return Err(Error::RankTooSmall { rank });
    }
    let q = m.cols();
    // (c0, c) with c0 + c·r = 0 for every row r cut out the affine hull.
    let lifted = Matrix::from_columns(m.rows(), vec![rational::ones(m.rows())])?.hstack(m)?;
    let mut normals: Vec<Vector> = (0..=q).map(|i| rational::unit(q + 1, i)).collect();
    for e in linalg::kernel_basis(&lifted) {
        normals.push(rational::neg(&e));
        normals.push(e);
    }
    let cone = dd::dd_h_to_v(&ConeH {
        dim: q + 1,
        normals,
    });
    let rows: HashSet<Vector> = m.to_rows().into_iter().collect();
    Ok(cone.rays.iter().all(|r| {
        r[0].is_positive() && rows.contains(&r[1..].iter().map(|x| x / &r[0]).collect::<Vector>())
    }))
}

/// Cone recognition through polytope recognition: zero rows are dropped and
/// rows are scaled to sum 1, which puts `𝟙` in the column span.
pub fn cone_check_via_polytope(m: &Matrix) -> Result<bool> {
    m.ensure_nonnegative()?;
    let nonzero: Vec<usize> = (0..m.rows()).filter(|&i| !m.is_zero_row(i)).collect();
    let mut dm = m.select_rows(&nonzero);
    if linalg::rank(&dm) <= 1 {
        return Ok(true);
    }
    for i in 0..dm.rows() {
        let sum = dm.row(i).iter().fold(Rational::zero(), |acc, x| acc + x);
        dm.scale_row(i, &sum.recip());
    }
    Ok(is_polytope_slack(&dm)?.verdict())
}

/// The cone generated by the rows of `A` and its H-form from the columns of
/// `B`, for the rank factorization `M = A·B`.
pub fn reconstruct_cone(m: &Matrix) -> Result<(ConeV, ConeH)> {
    let result = is_cone_slack(m)?;
    let yes = result.yes().ok_or(Error::NotConeSlack)?;
    Ok((ConeV::from_rows(&yes.a), ConeH::from_columns(&yes.b)))
}

/// A polytope whose slack matrix is `m`, from the deterministic rank
/// factorization.
pub fn reconstruct_polytope(m: &Matrix) -> Result<(PolytopeV, PolytopeH)> {
    let result = is_polytope_slack(m)?;
    match result.certificate {
        Certificate::Yes(YesCertificate {
            polytope: Some(p), ..
        }) => Ok(p),
        _ => Err(Error::NotPolytopeSlack),
    }
}

/// A polytope whose slack matrix is `m`, starting from a caller-supplied
/// rank factorization `m = a·b`.
pub fn reconstruct_polytope_with_factors(
    m: &Matrix,
    a: &Matrix,
    b: &Matrix,
) -> Result<(PolytopeV, PolytopeH)> {
    let k = linalg::rank(m);
    if a.cols() != k || a.mul(b).ok().as_ref() != Some(m) {
        return Err(Error::BadFactorization);
    }
    if !is_polytope_slack(m)?.verdict() {
        return Err(Error::NotPolytopeSlack);
    }
    let mu = linalg::solve_linear(m, &rational::ones(m.rows()))?.expect("checked by recognition");
    Ok(polytope_from_factors(a, b, &mu))
}

/// With `c = Bμ` (so `Ac = 𝟙`), change basis by `U = [c, e_j …]` so that
/// `AU = [𝟙, V]` and `U⁻¹B = [w, −W]ᵀ`.
fn polytope_from_factors(a: &Matrix, b: &Matrix, mu: &[Rational]) -> (PolytopeV, PolytopeH) {
    let k = a.cols();
    let c = b.mul_vec(mu).expect("shapes agree");
    let pivot = c
        .iter()
        .position(|x| !x.is_zero())
        .expect("A c = 𝟙 forces c ≠ 0");
    let mut columns = vec![c];
    columns.extend((0..k).filter(|&j| j != pivot).map(|j| rational::unit(k, j)));
    let u = Matrix::from_columns(k, columns).expect("k columns of length k");
    let u_inv = linalg::inverse(&u).expect("U has a nonzero pivot in column 0");
    let au = a.mul(&u).expect("shapes agree");
    let ub = u_inv.mul(b).expect("shapes agree");
    debug_assert!(au.row_iter().all(|r| r[0].is_one()));

    let points = au.row_iter().map(|r| r[1..].to_vec()).collect();
    let inequalities = (0..ub.cols())
        .map(|j| {
            let col = ub.column(j);
            Inequality::new(col[0].clone(), rational::neg(&col[1..]))
        })
        .collect();
    (
        PolytopeV { dim: k - 1, points },
        PolytopeH {
            dim: k - 1,
            inequalities,
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarRealization {
    /// `conv(rows A)` for `αM − J = A·B`; the origin is interior.
    pub polytope: PolytopeV,
    /// `{ x : −bⱼ·x ≤ 1 }`, one inequality per column of `M`.
    pub hrep: PolytopeH,
    /// The polar, `conv(−bⱼ)`, whose slack matrix is `(αM)ᵀ`.
    pub polar: PolytopeV,
    /// `α > 0` with `𝟙 ∈ conv(rows αM)`.
    pub scale: Rational,
}

/// For `M` and `Mᵀ` both polytope slack matrices, a polytope `P` with the
/// origin interior such that `αM` is a slack matrix of `P` and `(αM)ᵀ` one of
/// its polar.
pub fn polar_realization(m: &Matrix) -> Result<PolarRealization> {
    if !is_polytope_slack(m)?.verdict() || !is_polytope_slack(&m.transpose())?.verdict() {
        return Err(Error::NotPolytopeSlack);
    }
    let p = m.rows();
    let mut cons: Vec<Constraint> = (0..p)
        .map(|i| Constraint::ge(rational::unit(p, i), Rational::zero()))
        .collect();
    for j in 0..m.cols() {
        cons.push(Constraint::eq(m.column(j), Rational::one()));
    }
    let y = match lp::lp_solve(&rational::ones(p), &cons, Sense::Minimize)? {
        LpOutcome::Optimal { point, .. } => point,
        _ => return Err(Error::NotPolytopeSlack),
    };
    let scale = y.iter().fold(Rational::zero(), |acc, x| acc + x);
    let scaled = m.scaled(&scale);
    let shifted = scaled.sub(&Matrix::ones(m.rows(), m.cols()))?;
    let (a, b) = linalg::rank_factorization(&shifted);
    let d = a.cols();

    let polytope = PolytopeV::from_rows(&a);
    let normals: Vec<Vector> = b.to_columns().iter().map(|c| rational::neg(c)).collect();
    let hrep = PolytopeH {
        dim: d,
        inequalities: normals
            .iter()
            .map(|w| Inequality::new(Rational::one(), w.clone()))
            .collect(),
    };
    let polar = PolytopeV {
        dim: d,
        points: normals,
    };
    let polar_h = PolytopeH {
        dim: d,
        inequalities: polytope
            .points
            .iter()
            .map(|v| Inequality::new(Rational::one(), v.clone()))
            .collect(),
    };

    if polytope::slack_of_polytope(&polytope, &hrep)? != scaled
        || polytope::slack_of_polytope(&polar, &polar_h)? != scaled.transpose()
        || !polytope::origin_in_interior(&polytope)?
    {
        return Err(Error::BadFactorization);
    }
    Ok(PolarRealization {
        polytope,
        hrep,
        polar,
        scale,
    })
}
