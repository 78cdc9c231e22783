//! The polyhedral verification problem: given a V-polytope `Q` contained in
//! an H-polyhedron `P = { x : Wx ≤ w }`, decide whether `P = Q`.
//!
//! When `P` is pointed and `dim P = dim Q`, the map `x ↦ w − Wx` is injective
//! and sends the points of `Q` to the rows of a nonnegative matrix `M`; then
//! `P = Q` exactly when `M` is a slack matrix of a polytope.

use std::fmt;

use crate::error::{Error, Result};
use crate::polytope::{self, Dimension, PolytopeH, PolytopeV};
use crate::recognition::{self, NoCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    NotPointed,
    DimMismatch,
    SlackReject,
    Equal,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::NotPointed => "not_pointed",
            Reason::DimMismatch => "dim_mismatch",
            Reason::SlackReject => "slack_reject",
            Reason::Equal => "equal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Dimensions { polyhedron: usize, polytope: usize },
    Certificate(NoCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationResult {
    pub reason: Reason,
    pub witness: Option<Witness>,
}

impl VerificationResult {
    pub fn equal(&self) -> bool {
        self.reason == Reason::Equal
    }
}

/// Every point of `q` satisfies every inequality of `p`.
pub fn containment_check(q: &PolytopeV, p: &PolytopeH) -> Result<bool> {
    if q.dim != p.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: q.dim,
        });
    }
    Ok(q.points.iter().all(|x| p.contains(x)))
}

pub fn verify_polytope_equality(q: &PolytopeV, p: &PolytopeH) -> Result<VerificationResult> {
    // Surfaces the offending point/inequality pair when Q ⊄ P.
    let m = polytope::slack_of_polytope(q, p)?;
    if q.points.is_empty() {
        return Err(Error::Empty);
    }
    if !p.is_pointed() {
        return Ok(VerificationResult {
            reason: Reason::NotPointed,
            witness: None,
        });
    }
    let dim_p = p.dimension()?;
    let dim_q = q.dimension()?;
    if dim_p != dim_q {
        return Ok(VerificationResult {
            reason: Reason::DimMismatch,
            witness: Some(Witness::Dimensions {
                polyhedron: dim_p,
                polytope: dim_q,
            }),
        });
    }
    if dim_q == 0 {
        // A pointed polyhedron of dimension 0 is the single point it contains.
        return Ok(VerificationResult {
            reason: Reason::Equal,
            witness: None,
        });
    }
    let result = recognition::is_polytope_slack(&m)?;
    Ok(match result.no() {
        None => VerificationResult {
            reason: Reason::Equal,
            witness: None,
        },
        Some(cert) => VerificationResult {
            reason: Reason::SlackReject,
            witness: Some(Witness::Certificate(cert.clone())),
        },
    })
}
