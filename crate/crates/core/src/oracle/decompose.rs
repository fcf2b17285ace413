//! Constructive decomposition of a class in the proven N_p region into
//! ample base-point-free factors plus an effective remainder.

use super::np::theorem61_region;
use super::{effectivity_status, EffectivityVerdict, NumClass, SurfaceInvariant};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `e = -1`: factors from the classes 2*C0 and C0 + f, remainder with
    /// both coordinates nonnegative.
    MixedFactors,
    /// `e = -1`: all factors 2*C0, remainder effective (used when b < 0).
    AllTwoC0,
    /// `e >= 0`: factors C0 + (e+2)*f, remainder in the cone spanned by
    /// C0 + e*f and f.
    StandardE,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionWitness {
    pub factors: Vec<NumClass>,
    pub remainder: NumClass,
    pub route: Route,
}

impl DecompositionWitness {
    pub fn total(&self) -> NumClass {
        self.factors
            .iter()
            .fold(self.remainder, |acc, &f| acc + f)
    }
}

/// Write `l` as a product of `k+1` ample base-point-free factors and an
/// effective remainder, for any `1 <= k <= p`.
///
/// Requires `l` to lie in the proven region at level `p`; inside it a
/// witness always exists and the search is deterministic (maximal count of
/// C0 + f factors first, then the all-2C0 fallback).
pub fn decompose_for_np(
    l: NumClass,
    s: SurfaceInvariant,
    p: u32,
    k: u32,
) -> Option<DecompositionWitness> {
    if k < 1 || k > p || !theorem61_region(l, s, p) {
        return None;
    }
    let (a, b, e) = (l.a, l.b, s.e());
    let m = k as i64 + 1; // number of factors
    if e >= 0 {
        let factor = NumClass::new(1, e + 2);
        let remainder = NumClass::new(a - m, b - m * (e + 2));
        // remainder must be a' * (C0 + e*f) + b' * f with a', b' >= 0
        let a1 = remainder.a;
        let b1 = remainder.b - a1 * e;
        if a1 < 0 || b1 < 0 {
            return None;
        }
        return Some(DecompositionWitness {
            factors: vec![factor; m as usize],
            remainder,
            route: Route::StandardE,
        });
    }
    // e = -1. First route: x copies of 2*C0 and y copies of C0 + f with
    // x + y = k + 1, componentwise-nonnegative remainder; y is maximized.
    let y_hi = m.min(b);
    let y_lo = 0.max(2 * m - a);
    if y_hi >= y_lo {
        let y = y_hi;
        let x = m - y;
        let remainder = NumClass::new(a - 2 * x - y, b - y);
        debug_assert!(remainder.a >= 0 && remainder.b >= 0);
        let mut factors = vec![NumClass::new(2, 0); x as usize];
        factors.extend(vec![NumClass::new(1, 1); y as usize]);
        return Some(DecompositionWitness {
            factors,
            remainder,
            route: Route::MixedFactors,
        });
    }
    // Second route: all factors 2*C0, remainder merely effective.
    let remainder = NumClass::new(a - 2 * m, b);
    let effective = matches!(
        effectivity_status(remainder, s).verdict,
        EffectivityVerdict::AllRepresentativesEffective
            | EffectivityVerdict::SomeRepresentativesEffective
    );
    if !effective {
        return None;
    }
    Some(DecompositionWitness {
        factors: vec![NumClass::new(2, 0); m as usize],
        remainder,
        route: Route::AllTwoC0,
    })
}
