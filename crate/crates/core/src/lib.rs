//! Exact recognition of slack matrices of polyhedral cones and polytopes.
//!
//! Everything runs over arbitrary-precision rationals. The crate is organised
//! bottom-up:
//!
//! * [`matrix`], [`linalg`] and [`lp`]: dense exact linear algebra and a small
//!   Bland's-rule simplex.
//! * [`cone`], [`dd`] and [`polytope`]: H/V representations, the double
//!   description conversion, slack computation and polars.
//! * [`recognition`]: the cone/column generating conditions, slack matrix
//!   recognition with certificates, and reconstruction of realizations.
//! * [`combinatorial`] and [`verification`]: incidence patterns, the polygon
//!   test, and the polyhedral verification problem.
//! * [`io`]: the plain-text document format.

pub mod combinatorial;
pub mod cone;
pub mod dd;
mod error;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod matrix;
pub mod polytope;
pub mod rational;
pub mod recognition;
pub mod verification;

pub use cone::{ConeH, ConeRep, ConeV};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use polytope::{Dimension, Inequality, PolytopeH, PolytopeRep, PolytopeV};
pub use rational::{Rational, Vector};
pub use recognition::{
    Certificate, Convention, Kind, NoCertificate, RecognitionResult, YesCertificate,
};
