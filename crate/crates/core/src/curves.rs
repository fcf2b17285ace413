//! Cohomology of twisted tensor products of kernel bundles on curves.
//!
//! For a base-point-free line bundle `B`, the kernel bundle `M_B` is the
//! kernel of the evaluation map `H0(B) (x) O -> B`. On the projective line
//! everything splits and there is a closed form; on an elliptic curve a
//! slope bound certifies vanishing, and an exact point-model computation
//! measures how sharp that bound is.

use crate::linalg::{left_nullspace, FpMatrix};
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveCalcError {
    #[error("factor degree {0} too small: kernel bundles on an elliptic curve need degree >= 2")]
    DegreeTooSmall(i64),
    #[error("too many factors ({0}): the explicit computation is capped at 3")]
    TooManyFactors(usize),
    #[error("evaluation model cannot certify ranks: {0}")]
    ModelInsufficientPoints(String),
}

/// A direct sum of line bundles `O(d_i)` on the projective line, kept as a
/// multiset of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitBundle {
    degrees: Vec<i64>,
}

impl SplitBundle {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        Self { degrees }
    }

    pub fn line(d: i64) -> Self {
        Self { degrees: vec![d] }
    }

    /// The kernel bundle of a degree-b line bundle on P^1: O(-1)^b.
    pub fn kernel_bundle(b: u64) -> Self {
        Self {
            degrees: vec![-1; b as usize],
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Tensor product: all pairwise degree sums.
    pub fn tensor(&self, other: &SplitBundle) -> SplitBundle {
        let mut degrees = Vec::with_capacity(self.rank() * other.rank());
        for &d in &self.degrees {
            for &d2 in &other.degrees {
                degrees.push(d + d2);
            }
        }
        SplitBundle::new(degrees)
    }

    pub fn twist(&self, l: i64) -> SplitBundle {
        SplitBundle::new(self.degrees.iter().map(|&d| d + l).collect())
    }

    /// `(h0, h1)` summand by summand: `h0(O(d)) = max(0, d+1)` and
    /// `h1(O(d)) = max(0, -d-1)`.
    pub fn cohomology(&self) -> (u64, u64) {
        let mut h0 = 0u64;
        let mut h1 = 0u64;
        for &d in &self.degrees {
            h0 += 0.max(d + 1) as u64;
            h1 += 0.max(-d - 1) as u64;
        }
        (h0, h1)
    }
}

/// Closed form for `h1(M_B1 (x) ... (x) M_Bk (x) O(l))` on the projective
/// line: the bundle is `O(l - k)^(prod b_i)`, so with `p = k - 1` the
/// answer is `prod(b_i) * max(0, p - l)`; it vanishes exactly when
/// `l >= p`.
pub fn mb_tensor_cohomology_p1(factor_degrees: &[u64], l: i64) -> u64 {
    let p = factor_degrees.len() as i64 - 1;
    let rank: u64 = factor_degrees.iter().product();
    rank * 0.max(p - l) as u64
}

/// Instance data for the elliptic slope criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipticMBundleSpec {
    pub factor_degrees: Vec<i64>,
    pub twist_degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeReport {
    /// True when the slope bound certifies `h1 = 0`.
    pub applies: bool,
    /// Exact slope of the twisted tensor bundle, `l - sum b_i/(b_i - 1)`.
    pub slope: Ratio<i64>,
    /// The uniform special case: every `b_i >= p+3` and `l >= p+2`.
    pub corollary_applies: bool,
}

/// Slope criterion on an elliptic curve: the twisted tensor of kernel
/// bundles is semistable, so positive slope kills `h1`. The criterion is
/// the strict inequality `sum b_i/(b_i-1) < l`.
pub fn slope_criterion_elliptic(spec: &EllipticMBundleSpec) -> Result<SlopeReport, CurveCalcError> {
    if let Some(&bad) = spec.factor_degrees.iter().find(|&&b| b <= 1) {
        return Err(CurveCalcError::DegreeTooSmall(bad));
    }
    let l = Ratio::from_integer(spec.twist_degree);
    let sum: Ratio<i64> = spec
        .factor_degrees
        .iter()
        .map(|&b| Ratio::new(b, b - 1))
        .sum();
    let slope = l - sum;
    let p = spec.factor_degrees.len() as i64 - 1;
    let corollary_applies = spec.factor_degrees.iter().all(|&b| b >= p + 3)
        && spec.twist_degree >= p + 2;
    Ok(SlopeReport {
        applies: slope > Ratio::from_integer(0),
        slope,
        corollary_applies,
    })
}

/// A concrete space of sections presented by its values on a shared list
/// of sample points. `pole_bound` dominates the pole order of every
/// section (and hence its zero count), which is what makes evaluation
/// ranks trustworthy.
#[derive(Debug, Clone)]
pub struct SectionSpace {
    pub degree: i64,
    pub pole_bound: u64,
    pub basis: FpMatrix,
}

impl SectionSpace {
    pub fn new(degree: i64, pole_bound: u64, basis: FpMatrix) -> Result<Self, CurveCalcError> {
        let space = Self {
            degree,
            pole_bound,
            basis,
        };
        if space.basis.rank() != space.basis.rows() {
            return Err(CurveCalcError::ModelInsufficientPoints(format!(
                "section matrix rank {} below row count {}",
                space.basis.rank(),
                space.basis.rows()
            )));
        }
        Ok(space)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

/// Dimension of the space of global sections of
/// `M_B1 (x) ... (x) M_Bk (x) T` computed as a nested kernel of
/// multiplication maps on evaluation vectors.
///
/// Taking sections is left exact, so sections of `M_B (x) G` are exactly
/// the kernel of `H0(B) (x) H0(G) -> H0(B (x) G)`, and the latter map is
/// pointwise multiplication in the evaluation model. The intermediate
/// spaces are vector-valued functions on the sample points, with the
/// already-processed factors kept as abstract coordinates.
pub fn mb_tensor_h0(factors: &[&SectionSpace], twist: &SectionSpace) -> Result<u64, CurveCalcError> {
    if factors.len() > 3 {
        return Err(CurveCalcError::TooManyFactors(factors.len()));
    }
    let field = twist.basis.field();
    let n = twist.basis.cols();
    let p = field.modulus();
    let mut needed: u64 = twist.pole_bound;
    for f in factors {
        if f.basis.cols() != n {
            return Err(CurveCalcError::ModelInsufficientPoints(
                "section spaces sampled on different point sets".into(),
            ));
        }
        needed += f.pole_bound;
    }
    if (n as u64) <= needed {
        return Err(CurveCalcError::ModelInsufficientPoints(format!(
            "{n} sample points cannot separate sections with pole bound {needed}"
        )));
    }

    // state: rows are the current basis, laid out as `block * n + point`
    // where block indexes the processed abstract coordinates.
    let mut blocks = 1usize;
    let mut state: Vec<Vec<u64>> = (0..twist.dim())
        .map(|i| twist.basis.row(i).to_vec())
        .collect();
    for factor in factors {
        let fdim = factor.dim();
        if state.is_empty() || fdim == 0 {
            // no sections anywhere downstream
            state.clear();
            break;
        }
        let width = blocks * n;
        let mut products: Vec<Vec<u64>> = Vec::with_capacity(fdim * state.len());
        for u in 0..fdim {
            let urow = factor.basis.row(u);
            for t in state.iter() {
                let mut row = vec![0u64; width];
                for blk in 0..blocks {
                    for pt in 0..n {
                        row[blk * n + pt] = t[blk * n + pt] * urow[pt] % p;
                    }
                }
                products.push(row);
            }
        }
        let kernel = left_nullspace(field, width, &products);
        let old = std::mem::take(&mut state);
        let new_blocks = fdim * blocks;
        for coeffs in kernel {
            let mut row = vec![0u64; new_blocks * n];
            for (idx, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (u, t) = (idx / old.len(), idx % old.len());
                let dst = &mut row[u * blocks * n..(u + 1) * blocks * n];
                for (d, &s) in dst.iter_mut().zip(&old[t]) {
                    *d = (*d + c * s) % p;
                }
            }
            state.push(row);
        }
        blocks = new_blocks;
    }
    Ok(state.len() as u64)
}

/// `h1` of the twisted tensor of kernel bundles on an elliptic curve:
/// `h0 - chi`, where `chi = deg` (genus one) and the degree comes from the
/// rank/degree bookkeeping `rk = prod r_i`,
/// `deg = l * prod r_i - sum_i b_i * prod_{j != i} r_j` with `r_i = b_i - 1`.
pub fn mb_tensor_h1_elliptic(
    factors: &[&SectionSpace],
    twist: &SectionSpace,
) -> Result<u64, CurveCalcError> {
    if let Some(f) = factors.iter().find(|f| f.degree < 2) {
        return Err(CurveCalcError::DegreeTooSmall(f.degree));
    }
    if factors.len() > 3 {
        return Err(CurveCalcError::TooManyFactors(factors.len()));
    }
    let h0 = mb_tensor_h0(factors, twist)? as i64;
    let rank_product: i64 = factors.iter().map(|f| f.degree - 1).product();
    let mut chi = twist.degree * rank_product;
    for (i, f) in factors.iter().enumerate() {
        let others: i64 = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.degree - 1)
            .product();
        chi -= f.degree * others;
    }
    let h1 = h0 - chi;
    assert!(
        h1 >= 0,
        "h0 = {h0} fell below chi = {chi}; the evaluation model is unfaithful"
    );
    Ok(h1 as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn split_cohomology_examples() {
        assert_eq!(SplitBundle::new(vec![0]).cohomology(), (1, 0));
        assert_eq!(SplitBundle::new(vec![-2, 0, 3]).cohomology(), (5, 1));
        assert_eq!(SplitBundle::new(vec![-1, -1]).cohomology(), (0, 0));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(mb_tensor_cohomology_p1(&[2, 2], 1), 0);
        assert_eq!(mb_tensor_cohomology_p1(&[2, 2], 0), 4);
        assert_eq!(mb_tensor_cohomology_p1(&[3], -1), 3);
        // empty product: the bundle is just O(l)
        assert_eq!(mb_tensor_cohomology_p1(&[], -3), 2);
    }

    #[test]
    fn slope_examples() {
        let r = slope_criterion_elliptic(&EllipticMBundleSpec {
            factor_degrees: vec![5, 5],
            twist_degree: 4,
        })
        .unwrap();
        assert!(r.applies);
        assert_eq!(r.slope, Ratio::new(3, 2)); // 4 - 5/2

        let r = slope_criterion_elliptic(&EllipticMBundleSpec {
            factor_degrees: vec![4, 4],
            twist_degree: 3,
        })
        .unwrap();
        assert!(r.applies);
        assert!(r.corollary_applies);
        assert_eq!(r.slope, Ratio::new(1, 3)); // 3 - 8/3

        let r = slope_criterion_elliptic(&EllipticMBundleSpec {
            factor_degrees: vec![2],
            twist_degree: 2,
        })
        .unwrap();
        assert!(!r.applies);
        assert_eq!(r.slope, Ratio::from_integer(0));

        assert_eq!(
            slope_criterion_elliptic(&EllipticMBundleSpec {
                factor_degrees: vec![1],
                twist_degree: 5,
            }),
            Err(CurveCalcError::DegreeTooSmall(1))
        );
    }

    proptest! {
        #[test]
        fn closed_form_matches_split_route(
            degrees in proptest::collection::vec(1u64..=4, 0..=3),
            l in -6i64..=6,
        ) {
            // independent route: tensor the split kernel bundles explicitly
            let mut bundle = SplitBundle::line(0);
            for &b in &degrees {
                bundle = bundle.tensor(&SplitBundle::kernel_bundle(b));
            }
            let (_, h1) = bundle.twist(l).cohomology();
            prop_assert_eq!(h1, mb_tensor_cohomology_p1(&degrees, l));
        }

        #[test]
        fn corollary_implies_criterion(
            degrees in proptest::collection::vec(2i64..=12, 1..=4),
            l in -3i64..=12,
        ) {
            let r = slope_criterion_elliptic(&EllipticMBundleSpec {
                factor_degrees: degrees,
                twist_degree: l,
            }).unwrap();
            prop_assert!(!r.corollary_applies || r.applies);
        }
    }
}
