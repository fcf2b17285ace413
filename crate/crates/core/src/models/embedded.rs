//! Embedded models: a basis of sections of a very ample bundle presented
//! as value vectors on sample points, plus the expected Hilbert function.

use super::curve::{rr_basis, EllipticCurveModel};
use super::ModelError;
use crate::fp::PrimeField;
use crate::linalg::FpMatrix;
use crate::oracle::{
    cohomology_dims, euler_characteristic, CohomDim, NumClass, SurfaceInvariant,
};
use serde::Serialize;

/// A projectively embedded variety presented by point evaluation.
///
/// `sections` has one row per basis section of `H0(L)` and one column per
/// sample point. `weights[i]` is the fiber degree of section `i` when the
/// model carries a second grading (0 everywhere otherwise); products of
/// sections add weights, which lets the engine split its rank computations
/// into blocks. `expected_hilbert[m]` is the predicted `h0(L^m)` for
/// `m <= q_max + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddedModel {
    pub prime: u64,
    pub label: String,
    pub points: Vec<Vec<u64>>,
    pub sections: FpMatrix,
    pub weights: Vec<usize>,
    pub expected_hilbert: Vec<usize>,
}

impl EmbeddedModel {
    pub fn field(&self) -> PrimeField {
        self.sections.field()
    }

    /// Largest degree the stored Hilbert data covers (`q_max + 1`).
    pub fn m_cap(&self) -> usize {
        self.expected_hilbert.len() - 1
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    fn certify(self) -> Result<Self, ModelError> {
        assert_eq!(self.sections.rows(), self.weights.len());
        let expected = self.expected_hilbert[1];
        if self.sections.rows() != expected {
            return Err(ModelError::SectionRankDeficit {
                rank: self.sections.rows(),
                expected,
            });
        }
        let rank = self.sections.rank();
        if rank != expected {
            return Err(ModelError::SectionRankDeficit { rank, expected });
        }
        let needed = 2 * self.expected_hilbert[self.m_cap()];
        if self.num_points() < needed {
            return Err(ModelError::InsufficientPoints {
                needed,
                available: self.num_points(),
            });
        }
        Ok(self)
    }
}

/// Rational normal curve of degree `d`: the projective line embedded by
/// `1, u, ..., u^d`, sampled at every element of the field.
pub fn rnc_model(d: u32, prime: u64, q_max: usize) -> Result<EmbeddedModel, ModelError> {
    assert!(d >= 1 && q_max >= 1);
    let field = PrimeField::new(prime)?;
    let m_cap = q_max + 1;
    let expected_hilbert: Vec<usize> = (0..=m_cap).map(|m| m * d as usize + 1).collect();
    let needed = 2 * expected_hilbert[m_cap];
    if (prime as usize) < needed {
        return Err(ModelError::PrimeTooSmall {
            prime,
            needed,
            available: prime as usize,
        });
    }
    let points: Vec<Vec<u64>> = (0..prime).map(|u| vec![u]).collect();
    let mut sections = FpMatrix::new(field, points.len());
    for j in 0..=d {
        let row: Vec<u64> = (0..prime).map(|u| field.pow(u, j as u64)).collect();
        sections.push_row(&row);
    }
    let weights = (0..=d as usize).collect();
    EmbeddedModel {
        prime,
        label: format!("rnc(d={d})"),
        points,
        sections,
        weights,
        expected_hilbert,
    }
    .certify()
}

/// Elliptic normal curve of degree `d >= 3`: the curve embedded by the
/// sections with pole order at most `d` at infinity, evaluated at all
/// affine points.
pub fn elliptic_normal_model(
    curve: &EllipticCurveModel,
    d: u32,
    q_max: usize,
) -> Result<EmbeddedModel, ModelError> {
    assert!(q_max >= 1);
    if d < 3 {
        return Err(ModelError::DegreeNotVeryAmple(d));
    }
    let m_cap = q_max + 1;
    let mut expected_hilbert: Vec<usize> = (0..=m_cap).map(|m| m * d as usize).collect();
    expected_hilbert[0] = 1;
    let needed = 2 * expected_hilbert[m_cap];
    if curve.points.len() < needed {
        return Err(ModelError::InsufficientPoints {
            needed,
            available: curve.points.len(),
        });
    }
    let mut sections = FpMatrix::new(curve.field(), curve.points.len());
    for m in rr_basis(d) {
        let row: Vec<u64> = curve
            .points
            .iter()
            .map(|&pt| curve.eval_monomial(m, pt))
            .collect();
        sections.push_row(&row);
    }
    EmbeddedModel {
        prime: curve.prime,
        label: format!("elliptic(d={d})"),
        points: curve.points.iter().map(|&(x, y)| vec![x, y]).collect(),
        sections,
        weights: vec![0; d as usize],
        expected_hilbert,
    }
    .certify()
}

/// Decomposable elliptic ruled surface with invariant `e >= 0`, polarized
/// by the class `a*C0 + b*f`.
///
/// The model realizes the projectivization of `O + O(-e*inf)`: sections of
/// the polarization are `f(P) * u^j` for `0 <= j <= a` and `f` of pole
/// order at most `b - j*e`, evaluated on a grid of curve points times
/// fiber coordinates. The grid is cut deterministically but large enough
/// that a section vanishing on it vanishes identically in every degree up
/// to `q_max + 1`: the fiber direction sees polynomials of u-degree at
/// most `a*(q_max+1)` and the base direction functions with at most
/// `b*(q_max+1)` zeros.
pub fn ruled_surface_model(
    curve: &EllipticCurveModel,
    e: i64,
    class: NumClass,
    q_max: usize,
) -> Result<EmbeddedModel, ModelError> {
    assert!(q_max >= 1);
    if e < 0 {
        return Err(ModelError::UnsupportedInvariant(e));
    }
    let s = SurfaceInvariant::new(e).expect("e >= 0 validated");
    let (a, b) = (class.a, class.b);
    if a < 0 {
        return Err(ModelError::SummandNotEffective(class, b - a * e));
    }
    for j in 0..=a {
        if b - j * e < 1 {
            return Err(ModelError::SummandNotEffective(class, b - j * e));
        }
    }
    let m_cap = q_max + 1;
    let mut expected_hilbert = vec![1usize];
    for m in 1..=m_cap {
        let ml = NumClass::new(a * m as i64, b * m as i64);
        let t = cohomology_dims(ml, s);
        if t.h1 != CohomDim::Known(0) || t.h2 != CohomDim::Known(0) {
            return Err(ModelError::OracleObstruction {
                class,
                multiple: m,
            });
        }
        expected_hilbert.push(euler_characteristic(ml, s) as usize);
    }

    let u_count = (a as usize) * m_cap + 2;
    let h_top = expected_hilbert[m_cap];
    let c_count = ((b as usize) * m_cap + 2).max(2 * h_top / u_count + 1);
    if curve.points.len() < c_count {
        return Err(ModelError::InsufficientPoints {
            needed: c_count,
            available: curve.points.len(),
        });
    }
    let base_points = &curve.points[..c_count];
    let field = curve.field();
    let mut points = Vec::with_capacity(c_count * u_count);
    for &(x, y) in base_points {
        for u in 0..u_count as u64 {
            points.push(vec![x, y, u]);
        }
    }
    let mut sections = FpMatrix::new(field, points.len());
    let mut weights = Vec::new();
    for j in 0..=a {
        let fiber_deg = (b - j * e) as u32;
        for m in rr_basis(fiber_deg) {
            let mut row = Vec::with_capacity(points.len());
            for &(x, y) in base_points {
                let base_val = curve.eval_monomial(m, (x, y));
                for u in 0..u_count as u64 {
                    row.push(field.mul(base_val, field.pow(u, j as u64)));
                }
            }
            sections.push_row(&row);
            weights.push(j as usize);
        }
    }
    EmbeddedModel {
        prime: curve.prime,
        label: format!("ruled(e={e}, a={a}, b={b})"),
        points,
        sections,
        weights,
        expected_hilbert,
    }
    .certify()
}
