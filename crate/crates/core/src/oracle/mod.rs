//! Integer calculus on the numerical divisor lattice of an elliptic ruled
//! surface.
//!
//! Classes are written `a*C0 + b*f` where `C0` is a minimal section and `f`
//! a fiber, so `C0^2 = -e`, `C0.f = 1`, `f^2 = 0` for the surface invariant
//! `e`. All verdicts in this module are exact integer computations; the
//! cohomology tables distinguish `Known(n)` from `Positive` (nonzero, value
//! not determined) and `Unknown`.

mod decompose;
mod np;
mod tables;

pub use decompose::{decompose_for_np, DecompositionWitness, Route};
pub use np::{combination_np, np_status, FactorKind, NpSource, NpStatus, NpVerdict};
pub use tables::{
    cohomology_dims, effectivity_status, positivity, BasePointFree, CohomDim, CohomTriple,
    EffectivityStatus, EffectivityVerdict, Positivity,
};

use serde::Serialize;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invariant e = {0} out of range: an elliptic ruled surface has e >= -1")]
    InvariantOutOfRange(i64),
    #[error("factor {index} ({class:?}) does not satisfy its declared kind {kind:?}")]
    FactorPositivityMismatch {
        index: usize,
        class: NumClass,
        kind: FactorKind,
    },
    #[error("p = {0} out of range for this criterion (needs p >= 1)")]
    POutOfRange(u32),
    #[error("cohomology table does not certify h1 = h2 = 0 for this class")]
    TableUnknown,
}

/// The invariant `e` of the surface; `e = -1` and `e >= 0` are the two
/// regimes, anything below -1 is rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SurfaceInvariant {
    e: i64,
}

impl SurfaceInvariant {
    pub fn new(e: i64) -> Result<Self, OracleError> {
        if e < -1 {
            return Err(OracleError::InvariantOutOfRange(e));
        }
        Ok(Self { e })
    }

    #[inline]
    pub fn e(self) -> i64 {
        self.e
    }

    pub fn is_negative_regime(self) -> bool {
        self.e == -1
    }
}

/// Numerical class `a*C0 + b*f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NumClass {
    pub a: i64,
    pub b: i64,
}

impl NumClass {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const ZERO: NumClass = NumClass::new(0, 0);
}

impl Add for NumClass {
    type Output = NumClass;
    fn add(self, rhs: NumClass) -> NumClass {
        NumClass::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for NumClass {
    type Output = NumClass;
    fn sub(self, rhs: NumClass) -> NumClass {
        NumClass::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for NumClass {
    type Output = NumClass;
    fn neg(self) -> NumClass {
        NumClass::new(-self.a, -self.b)
    }
}

impl Mul<NumClass> for i64 {
    type Output = NumClass;
    fn mul(self, rhs: NumClass) -> NumClass {
        NumClass::new(self * rhs.a, self * rhs.b)
    }
}

/// Intersection number `L1.L2 = a1*b2 + a2*b1 - e*a1*a2`.
pub fn intersection_form(l1: NumClass, l2: NumClass, s: SurfaceInvariant) -> i64 {
    let (a1, b1) = (l1.a as i128, l1.b as i128);
    let (a2, b2) = (l2.a as i128, l2.b as i128);
    let e = s.e as i128;
    let v = a1 * b2 + a2 * b1 - e * a1 * a2;
    i64::try_from(v).expect("intersection number overflows i64")
}

/// Numerical canonical class `-2*C0 - e*f`.
pub fn canonical_class(s: SurfaceInvariant) -> NumClass {
    NumClass::new(-2, -s.e)
}

/// Euler characteristic by Riemann-Roch: `chi(L) = L.(L - K)/2` with
/// `chi(O) = 0`, i.e. `a*b + b - e*a*(a+1)/2`.
pub fn euler_characteristic(l: NumClass, s: SurfaceInvariant) -> i64 {
    let (a, b) = (l.a as i128, l.b as i128);
    let e = s.e as i128;
    let v = a * b + b - e * a * (a + 1) / 2;
    i64::try_from(v).expect("Euler characteristic overflows i64")
}

/// Codimension of the image of the embedding given by `L`, namely
/// `h0(L) - 3 = chi(L) - 3`; requires the tables to certify
/// `h1 = h2 = 0` so that `h0 = chi`.
pub fn codimension(l: NumClass, s: SurfaceInvariant) -> Result<i64, OracleError> {
    let c = cohomology_dims(l, s);
    if c.h1 != CohomDim::Known(0) || c.h2 != CohomDim::Known(0) {
        return Err(OracleError::TableUnknown);
    }
    Ok(euler_characteristic(l, s) - 3)
}

pub fn codim_at_least_p(l: NumClass, s: SurfaceInvariant, p: u32) -> Result<bool, OracleError> {
    Ok(codimension(l, s)? >= p as i64)
}
