//! Point-evaluation models over a prime field for the varieties whose
//! syzygies the engine computes: rational normal curves, elliptic normal
//! curves, and decomposable elliptic ruled surfaces with `e >= 0`.
//!
//! Every model carries the expected Hilbert function supplied by the
//! numeric oracle, certifies the rank of its section matrix at build time,
//! and keeps enough sample points that evaluation is provably injective in
//! every degree the engine will touch.

mod curve;
mod embedded;

pub use curve::{elliptic_points, rr_basis, EllipticCurveModel, RrMonomial};
pub use embedded::{elliptic_normal_model, rnc_model, ruled_surface_model, EmbeddedModel};

use crate::fp::FieldError;
use crate::oracle::NumClass;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("curve y^2 = x^3 + {a}x + {b} over F_{prime} is singular")]
    SingularCurve { a: u64, b: u64, prime: u64 },
    #[error("prime {prime} too small: need at least {needed} sample points, have {available}")]
    PrimeTooSmall {
        prime: u64,
        needed: usize,
        available: usize,
    },
    #[error("not enough points: need {needed}, curve has {available}")]
    InsufficientPoints { needed: usize, available: usize },
    #[error("degree {0} is not very ample here (need degree >= 3)")]
    DegreeNotVeryAmple(u32),
    #[error("invariant e = {0} has no decomposable section model (only e >= 0 is built)")]
    UnsupportedInvariant(i64),
    #[error("class ({0:?}) is outside the split model's cone: summand degree {1} < 1")]
    SummandNotEffective(NumClass, i64),
    #[error("cohomology tables do not certify h1 = h2 = 0 for multiple {multiple} of {class:?}")]
    OracleObstruction { class: NumClass, multiple: usize },
    #[error("section matrix rank {rank} disagrees with expected h0 = {expected}")]
    SectionRankDeficit { rank: usize, expected: usize },
}
