//! Property N_p verdicts on the numerical lattice.
//!
//! Verdicts carry their provenance: the two low-p characterizations on
//! `e = -1` surfaces are if-and-only-if results, the general region is a
//! sufficient criterion, and everything outside is labeled by the
//! conjectured classification, never upgraded to proven.

use super::{canonical_class, positivity, NumClass, OracleError, SurfaceInvariant};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NpVerdict {
    ProvenYes,
    ProvenNo,
    ConjecturedYes,
    ConjecturedNo,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NpSource {
    #[serde(rename = "homma_n0")]
    HommaN0,
    #[serde(rename = "gp_n1")]
    GpN1,
    #[serde(rename = "thm6.1.1")]
    Thm611,
    #[serde(rename = "thm6.1.2")]
    Thm612,
    #[serde(rename = "conj7.3")]
    Conj73,
}

impl NpSource {
    pub fn as_str(self) -> &'static str {
        match self {
            NpSource::HommaN0 => "homma_n0",
            NpSource::GpN1 => "gp_n1",
            NpSource::Thm611 => "thm6.1.1",
            NpSource::Thm612 => "thm6.1.2",
            NpSource::Conj73 => "conj7.3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NpStatus {
    pub verdict: NpVerdict,
    pub source: NpSource,
    pub p: u32,
}

impl NpStatus {
    pub fn verdict_str(&self) -> &'static str {
        match self.verdict {
            NpVerdict::ProvenYes => "proven_yes",
            NpVerdict::ProvenNo => "proven_no",
            NpVerdict::ConjecturedYes => "conjectured_yes",
            NpVerdict::ConjecturedNo => "conjectured_no",
            NpVerdict::Unknown => "unknown",
        }
    }
}

/// The proven sufficient region: for `e = -1` it is
/// `a >= p+1, a+b >= 2p+2, a+2b >= 2p+2`; for `e >= 0` it is
/// `a >= p+1, b-ae >= 2p+2`. Only meaningful for `p >= 1`.
pub(crate) fn theorem61_region(l: NumClass, s: SurfaceInvariant, p: u32) -> bool {
    if p < 1 {
        return false;
    }
    let (a, b, e) = (l.a, l.b, s.e());
    let p = p as i64;
    if e == -1 {
        a >= p + 1 && a + b >= 2 * p + 2 && a + 2 * b >= 2 * p + 2
    } else {
        a >= p + 1 && b - a * e >= 2 * p + 2
    }
}

fn homma_n0_region(l: NumClass) -> bool {
    l.a >= 1 && l.a + l.b >= 3 && l.a + 2 * l.b >= 3
}

fn gp_n1_region(l: NumClass) -> bool {
    l.a >= 1 && l.a + l.b >= 4 && l.a + 2 * l.b >= 4
}

fn conjecture73_region(l: NumClass, s: SurfaceInvariant, p: u32) -> bool {
    let (a, b, e) = (l.a, l.b, s.e());
    let p = p as i64;
    if e == -1 {
        a >= 1 && a + b >= p + 3 && a + 2 * b >= p + 3
    } else {
        a >= 1 && b - a * e >= p + 3
    }
}

fn thm_source(s: SurfaceInvariant) -> NpSource {
    if s.e() == -1 {
        NpSource::Thm611
    } else {
        NpSource::Thm612
    }
}

/// Decide N_p for the class of `l`.
///
/// Resolution order: the proven region first, then the two proven iff
/// characterizations on `e = -1` (p = 0 and p = 1), then the conjectured
/// iff classification for everything that remains.
pub fn np_status(l: NumClass, s: SurfaceInvariant, p: u32) -> NpStatus {
    let verdict_source = if theorem61_region(l, s, p) {
        (NpVerdict::ProvenYes, thm_source(s))
    } else if s.e() == -1 && p == 0 {
        let v = if homma_n0_region(l) {
            NpVerdict::ProvenYes
        } else {
            NpVerdict::ProvenNo
        };
        (v, NpSource::HommaN0)
    } else if s.e() == -1 && p == 1 {
        let v = if gp_n1_region(l) {
            NpVerdict::ProvenYes
        } else {
            NpVerdict::ProvenNo
        };
        (v, NpSource::GpN1)
    } else {
        let v = if conjecture73_region(l, s, p) {
            NpVerdict::ConjecturedYes
        } else {
            NpVerdict::ConjecturedNo
        };
        (v, NpSource::Conj73)
    };
    NpStatus {
        verdict: verdict_source.0,
        source: verdict_source.1,
        p,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    Ample,
    AmpleAndBpf,
}

/// N_p for a product of positive factors, optionally twisted by the
/// canonical class.
///
/// The count conditions are: `q >= 2p+2 - min(e, p-1)` for the adjoint
/// case, `q >= p+1` when every factor is ample and base-point-free, and
/// `q >= 2p+2` for merely ample factors. When the relevant condition holds
/// the total class is independently verified against the proven region;
/// otherwise the verdict is whatever `np_status` says about the total.
pub fn combination_np(
    s: SurfaceInvariant,
    factors: &[(NumClass, FactorKind)],
    adjoint: bool,
    p: u32,
) -> Result<NpStatus, OracleError> {
    if p < 1 {
        return Err(OracleError::POutOfRange(p));
    }
    for (index, &(class, kind)) in factors.iter().enumerate() {
        let pos = positivity(class, s);
        let ok = match kind {
            FactorKind::Ample => pos.ample,
            FactorKind::AmpleAndBpf => pos.ample_and_bpf,
        };
        if !ok {
            return Err(OracleError::FactorPositivityMismatch { index, class, kind });
        }
    }
    let mut total = factors
        .iter()
        .fold(NumClass::ZERO, |acc, &(class, _)| acc + class);
    if adjoint {
        total = total + canonical_class(s);
    }
    let q = factors.len() as i64;
    let p_i = p as i64;
    let count_ok = if adjoint {
        q >= 2 * p_i + 2 - s.e().min(p_i - 1)
    } else if factors
        .iter()
        .all(|&(_, kind)| kind == FactorKind::AmpleAndBpf)
    {
        q >= p_i + 1
    } else {
        q >= 2 * p_i + 2
    };
    if count_ok && theorem61_region(total, s, p) {
        return Ok(NpStatus {
            verdict: NpVerdict::ProvenYes,
            source: thm_source(s),
            p,
        });
    }
    Ok(np_status(total, s, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i64) -> SurfaceInvariant {
        SurfaceInvariant::new(e).unwrap()
    }

    #[test]
    fn np_status_examples() {
        let st = np_status(NumClass::new(2, 2), s(-1), 1);
        assert_eq!(st.verdict, NpVerdict::ProvenYes);
        assert_eq!(st.source, NpSource::Thm611);

        let st = np_status(NumClass::new(1, 2), s(-1), 1);
        assert_eq!(st.verdict, NpVerdict::ProvenNo);
        assert_eq!(st.source, NpSource::GpN1);

        let st = np_status(NumClass::new(1, 5), s(0), 2);
        assert_eq!(st.verdict, NpVerdict::ConjecturedYes);
        assert_eq!(st.source, NpSource::Conj73);

        let st = np_status(NumClass::new(1, 1), s(-1), 0);
        assert_eq!(st.verdict, NpVerdict::ProvenNo);
        assert_eq!(st.source, NpSource::HommaN0);

        // proven via the iff outside the sufficient region: a = 1
        let st = np_status(NumClass::new(1, 3), s(-1), 1);
        assert_eq!(st.verdict, NpVerdict::ProvenYes);
        assert_eq!(st.source, NpSource::GpN1);
    }

    #[test]
    fn proven_yes_nests_downward() {
        for e in [-1i64, 0, 1, 2, 3] {
            let sv = s(e);
            for a in -10..=15 {
                for b in -10..=15 {
                    let l = NumClass::new(a, b);
                    for p in 1..=5u32 {
                        if np_status(l, sv, p).verdict == NpVerdict::ProvenYes {
                            for q in 1..p {
                                assert_eq!(
                                    np_status(l, sv, q).verdict,
                                    NpVerdict::ProvenYes,
                                    "a={a} b={b} e={e} p={p} q={q}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gp_yes_implies_homma_yes() {
        for a in -10..=15 {
            for b in -10..=15 {
                let l = NumClass::new(a, b);
                if np_status(l, s(-1), 1).verdict == NpVerdict::ProvenYes {
                    assert_eq!(np_status(l, s(-1), 0).verdict, NpVerdict::ProvenYes);
                }
            }
        }
    }

    #[test]
    fn region_nesting_is_strict_on_grid() {
        // the proven region at p sits strictly inside the region at p-1
        for e in [-1i64, 0, 1, 2, 3] {
            let sv = s(e);
            for p in 2..=6u32 {
                let mut shrank = false;
                for a in -5..=25 {
                    for b in -15..=30 {
                        let l = NumClass::new(a, b);
                        let now = theorem61_region(l, sv, p);
                        let before = theorem61_region(l, sv, p - 1);
                        assert!(!now || before, "nesting fails at a={a} b={b} e={e} p={p}");
                        if before && !now {
                            shrank = true;
                        }
                    }
                }
                assert!(shrank, "region did not shrink at e={e} p={p}");
            }
        }
    }

    #[test]
    fn combination_examples() {
        let st = combination_np(
            s(0),
            &[
                (NumClass::new(1, 2), FactorKind::AmpleAndBpf),
                (NumClass::new(1, 2), FactorKind::AmpleAndBpf),
            ],
            false,
            1,
        )
        .unwrap();
        assert_eq!(st.verdict, NpVerdict::ProvenYes);

        let st = combination_np(
            s(-1),
            &[(NumClass::new(1, 0), FactorKind::Ample); 5],
            true,
            1,
        )
        .unwrap();
        assert_eq!(st.verdict, NpVerdict::ProvenYes);

        let st = combination_np(
            s(0),
            &[(NumClass::new(1, 1), FactorKind::Ample); 4],
            false,
            1,
        )
        .unwrap();
        assert_eq!(st.verdict, NpVerdict::ProvenYes);
    }

    #[test]
    fn combination_rejects_bad_factors() {
        let err = combination_np(
            s(0),
            &[(NumClass::new(1, 1), FactorKind::AmpleAndBpf)],
            false,
            1,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            OracleError::FactorPositivityMismatch { index: 0, .. }
        ));
        let err = combination_np(s(0), &[], false, 0).unwrap_err();
        assert_eq!(err, OracleError::POutOfRange(0));
    }

    #[test]
    fn combination_falls_back_to_total_class_status() {
        // one ample-and-bpf factor with p = 2: count condition fails,
        // verdict comes from the total class directly
        let st = combination_np(
            s(0),
            &[(NumClass::new(3, 10), FactorKind::AmpleAndBpf)],
            false,
            2,
        )
        .unwrap();
        assert_eq!(st.verdict, NpVerdict::ProvenYes);
        assert_eq!(st.source, NpSource::Thm612);
    }
}
