//! Cohomology, effectivity and positivity verdicts for a numerical class.
//!
//! The verdicts are lookup tables in `a` and `b`, split by the sign regime
//! of the invariant `e`. Cells the tables leave open surface as `Unknown`
//! and are never silently filled in from the Euler characteristic; the one
//! permitted upgrade replaces a `Positive` h0 by `Known(chi)` when
//! `h1 = h2 = 0`.

use super::{canonical_class, euler_characteristic, NumClass, SurfaceInvariant};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "lowercase")]
pub enum CohomDim {
    Known(u64),
    /// Known to be nonzero, value not determined by the tables.
    Positive,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CohomTriple {
    pub h0: CohomDim,
    pub h1: CohomDim,
    pub h2: CohomDim,
}

impl CohomTriple {
    pub fn all_known(&self) -> Option<(u64, u64, u64)> {
        match (self.h0, self.h1, self.h2) {
            (CohomDim::Known(a), CohomDim::Known(b), CohomDim::Known(c)) => Some((a, b, c)),
            _ => None,
        }
    }
}

/// Dimensions of h0, h1, h2 of any line bundle in the class of `l`.
pub fn cohomology_dims(l: NumClass, s: SurfaceInvariant) -> CohomTriple {
    use CohomDim::{Known, Positive, Unknown};
    let (a, b, e) = (l.a, l.b, s.e());
    let mut t = if e == -1 {
        // The verdict is controlled by the sign of a + 2b (i.e. b vs -a/2).
        let d = a + 2 * b;
        if a >= 0 {
            match d.signum() {
                1 => CohomTriple {
                    h0: Positive,
                    h1: Known(0),
                    h2: Known(0),
                },
                0 => CohomTriple {
                    h0: Unknown,
                    h1: Unknown,
                    h2: Known(0),
                },
                _ => CohomTriple {
                    h0: Known(0),
                    h1: Positive,
                    h2: Known(0),
                },
            }
        } else if a == -1 {
            CohomTriple {
                h0: Known(0),
                h1: Known(0),
                h2: Known(0),
            }
        } else {
            match d.signum() {
                1 => CohomTriple {
                    h0: Known(0),
                    h1: Positive,
                    h2: Known(0),
                },
                0 => CohomTriple {
                    h0: Known(0),
                    h1: Unknown,
                    h2: Unknown,
                },
                _ => CohomTriple {
                    h0: Known(0),
                    h1: Known(0),
                    h2: Positive,
                },
            }
        }
    } else {
        let h0 = if a >= 0 {
            match b.signum() {
                1 => Positive,
                0 => Unknown,
                _ => Known(0),
            }
        } else {
            Known(0)
        };
        let h2 = if a >= -1 {
            Known(0)
        } else {
            // Serre dual of the h0 column: h2(L) = h0(K - L).
            match (b + e).signum() {
                1 => Known(0),
                0 => Unknown,
                _ => Positive,
            }
        };
        let h1 = if a >= 0 {
            match (b - a * e).signum() {
                1 => Known(0),
                0 => Unknown,
                _ => Positive,
            }
        } else if a == -1 {
            Known(0)
        } else {
            // For a <= -2 the h1 verdict mirrors the dual class
            // (-2-a, -e-b) under Serre duality: h1 = 0 iff b < e(a+1).
            match (b - e * (a + 1)).signum() {
                -1 => Known(0),
                0 => Unknown,
                _ => Positive,
            }
        };
        CohomTriple { h0, h1, h2 }
    };
    if t.h0 == Positive && t.h1 == Known(0) && t.h2 == Known(0) {
        let chi = euler_characteristic(l, s);
        debug_assert!(chi > 0, "table claims h0 > 0 = h1 = h2 but chi = {chi}");
        t.h0 = Known(chi as u64);
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EffectivityVerdict {
    AllRepresentativesEffective,
    SomeRepresentativesEffective,
    NoRepresentativeEffective,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EffectivityStatus {
    pub verdict: EffectivityVerdict,
    pub detail: Option<String>,
}

/// Effectivity of the representatives of the class of `l`.
///
/// Beyond the generic table rows, the classes `n*(2C0 - f)` with `e = -1`
/// carry exact counts: four effective bundles for n >= 2, three for n = 1.
pub fn effectivity_status(l: NumClass, s: SurfaceInvariant) -> EffectivityStatus {
    use EffectivityVerdict::*;
    let (a, b, e) = (l.a, l.b, s.e());
    if e == -1 && a >= 2 && a + 2 * b == 0 {
        let n = a / 2;
        let count = if n == 1 { 3 } else { 4 };
        return EffectivityStatus {
            verdict: SomeRepresentativesEffective,
            detail: Some(format!("exactly {count} effective line bundles (n = {n})")),
        };
    }
    let verdict = match cohomology_dims(l, s).h0 {
        CohomDim::Known(0) => NoRepresentativeEffective,
        CohomDim::Known(_) | CohomDim::Positive => AllRepresentativesEffective,
        CohomDim::Unknown => Unknown,
    };
    EffectivityStatus {
        verdict,
        detail: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasePointFree {
    Yes,
    /// The base-point-freeness criterion is one-directional, so outside it
    /// nothing is claimed.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Positivity {
    pub ample: bool,
    pub bpf: BasePointFree,
    pub ample_and_bpf: bool,
}

/// Ampleness (iff), base-point-freeness (sufficient condition only) and
/// the combined iff criterion.
pub fn positivity(l: NumClass, s: SurfaceInvariant) -> Positivity {
    let (a, b, e) = (l.a, l.b, s.e());
    if e == -1 {
        let d = a + 2 * b;
        Positivity {
            ample: a >= 1 && d >= 1,
            bpf: if a >= 0 && a + b >= 2 && d >= 2 {
                BasePointFree::Yes
            } else {
                BasePointFree::Unknown
            },
            ample_and_bpf: a >= 1 && a + b >= 2 && d >= 2,
        }
    } else {
        let d = b - a * e;
        Positivity {
            ample: a >= 1 && d >= 1,
            bpf: if a >= 0 && d >= 2 {
                BasePointFree::Yes
            } else {
                BasePointFree::Unknown
            },
            ample_and_bpf: a >= 1 && d >= 2,
        }
    }
}
