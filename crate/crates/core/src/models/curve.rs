//! Point models of elliptic curves over a prime field and bases of the
//! spaces of functions with poles only at the point at infinity.

use super::ModelError;
use crate::curves::SectionSpace;
use crate::fp::PrimeField;
use crate::linalg::FpMatrix;
use serde::Serialize;

/// A short Weierstrass curve `y^2 = x^3 + A x + B` with its full list of
/// affine points, ordered by `(x, y)`. The base point is the point at
/// infinity and stays implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipticCurveModel {
    pub prime: u64,
    #[serde(rename = "A")]
    pub a: u64,
    #[serde(rename = "B")]
    pub b: u64,
    pub points: Vec<(u64, u64)>,
}

/// Enumerate all affine points of `y^2 = x^3 + A x + B` over F_prime.
pub fn elliptic_points(a: u64, b: u64, prime: u64) -> Result<EllipticCurveModel, ModelError> {
    let field = PrimeField::new(prime)?;
    let a = a % prime;
    let b = b % prime;
    // discriminant factor 4A^3 + 27B^2
    let disc = field.add(
        field.mul(4, field.mul(a, field.mul(a, a))),
        field.mul(27, field.mul(b, b)),
    );
    if disc == 0 {
        return Err(ModelError::SingularCurve { a, b, prime });
    }
    let mut points = Vec::new();
    for x in 0..prime {
        let rhs = field.add(field.mul(field.mul(x, x), x), field.add(field.mul(a, x), b));
        if rhs == 0 {
            points.push((x, 0));
        } else if let Some(y) = field.sqrt(rhs) {
            let y2 = field.neg(y);
            points.push((x, y.min(y2)));
            points.push((x, y.max(y2)));
        }
    }
    let model = EllipticCurveModel {
        prime,
        a,
        b,
        points,
    };
    // Hasse bound sanity: |#affine - p| <= 2 sqrt(p).
    let n = model.points.len() as i64;
    let p = prime as i64;
    let dev = (n - p).unsigned_abs();
    assert!(
        (dev * dev) as i64 <= 4 * p,
        "point count {n} violates the Hasse bound for p = {p}"
    );
    Ok(model)
}

/// A monomial `x^i y^j` (j <= 1, powers of y reduced by the curve
/// equation) with pole order `2i + 3j` at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RrMonomial {
    pub x_pow: u32,
    pub y: bool,
}

impl RrMonomial {
    pub fn pole_order(self) -> u32 {
        2 * self.x_pow + if self.y { 3 } else { 0 }
    }
}

/// Basis of the space of functions with a pole of order at most `d` at
/// infinity and regular elsewhere: monomials of pole orders
/// `0, 2, 3, ..., d` (order 1 does not occur), exactly `d` of them.
pub fn rr_basis(d: u32) -> Vec<RrMonomial> {
    assert!(d >= 1);
    let mut out = vec![RrMonomial { x_pow: 0, y: false }];
    for pole in 2..=d {
        out.push(if pole % 2 == 0 {
            RrMonomial {
                x_pow: pole / 2,
                y: false,
            }
        } else {
            RrMonomial {
                x_pow: (pole - 3) / 2,
                y: true,
            }
        });
    }
    out
}

impl EllipticCurveModel {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.prime).expect("validated at construction")
    }

    pub fn eval_monomial(&self, m: RrMonomial, point: (u64, u64)) -> u64 {
        let f = self.field();
        let mut v = f.pow(point.0, m.x_pow as u64);
        if m.y {
            v = f.mul(v, point.1);
        }
        v
    }

    /// Section space of the degree-`d` bundle concentrated at infinity,
    /// evaluated on the given points.
    pub fn section_space_at_infinity(
        &self,
        d: u32,
        points: &[(u64, u64)],
    ) -> Result<SectionSpace, crate::curves::CurveCalcError> {
        let f = self.field();
        let mut basis = FpMatrix::new(f, points.len());
        for m in rr_basis(d) {
            let row: Vec<u64> = points.iter().map(|&pt| self.eval_monomial(m, pt)).collect();
            basis.push_row(&row);
        }
        SectionSpace::new(d as i64, d as u64, basis)
    }

    /// Section space of the degree-2 bundle with poles at `q` and at
    /// infinity, spanned by `1` and `(y + q_y)/(x - q_x)`. Not isomorphic
    /// to the bundle concentrated at infinity. Sample points with
    /// `x = q_x` are rejected.
    pub fn shifted_degree2_space(
        &self,
        q: (u64, u64),
        points: &[(u64, u64)],
    ) -> Result<SectionSpace, crate::curves::CurveCalcError> {
        let f = self.field();
        assert!(q.1 != 0, "pick a point with nonzero y so the pole is genuine");
        let mut basis = FpMatrix::new(f, points.len());
        basis.push_row(&vec![1; points.len()]);
        let row: Vec<u64> = points
            .iter()
            .map(|&(x, y)| {
                assert!(x != q.0, "sample points must avoid the pole fiber");
                f.mul(f.add(y, q.1), f.inv(f.sub(x, q.0)))
            })
            .collect();
        basis.push_row(&row);
        SectionSpace::new(2, 2, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_point_check_small_field() {
        let m = elliptic_points(0, 1, 5).unwrap();
        // exhaustive check over all 25 pairs
        let mut expected = Vec::new();
        for x in 0..5u64 {
            for y in 0..5u64 {
                if (y * y) % 5 == (x * x * x + 1) % 5 {
                    expected.push((x, y));
                }
            }
        }
        expected.sort_unstable();
        assert_eq!(m.points, expected);
        assert!(m.points.contains(&(0, 1)));
        assert!(m.points.contains(&(0, 4)));
        assert!(m.points.contains(&(2, 2)));
    }

    #[test]
    fn hasse_bound_on_larger_fields() {
        for (a, b) in [(1, 0), (0, 1), (2, 3)] {
            let m = elliptic_points(a, b, 10007).unwrap();
            let dev = (m.points.len() as i64 - 10007).unsigned_abs();
            assert!(dev * dev <= 4 * 10007);
        }
    }

    #[test]
    fn singular_curve_rejected() {
        assert!(matches!(
            elliptic_points(0, 0, 10007),
            Err(ModelError::SingularCurve { .. })
        ));
        // 4a^3 + 27b^2 = 0 mod 5 for a = 3, b = 1: 4*27+27 = 135 = 0 mod 5
        assert!(matches!(
            elliptic_points(3, 1, 5),
            Err(ModelError::SingularCurve { .. })
        ));
    }

    #[test]
    fn rr_basis_examples() {
        let names = |d: u32| -> Vec<(u32, bool)> {
            rr_basis(d).iter().map(|m| (m.x_pow, m.y)).collect()
        };
        assert_eq!(names(1), vec![(0, false)]);
        assert_eq!(names(3), vec![(0, false), (1, false), (0, true)]);
        assert_eq!(
            names(5),
            vec![(0, false), (1, false), (0, true), (2, false), (1, true)]
        );
        // pole orders pairwise distinct and bounded by d
        for d in 1..=12 {
            let basis = rr_basis(d);
            assert_eq!(basis.len(), d as usize);
            let mut poles: Vec<u32> = basis.iter().map(|m| m.pole_order()).collect();
            poles.sort_unstable();
            poles.dedup();
            assert_eq!(poles.len(), d as usize);
            assert!(poles.iter().all(|&o| o <= d));
        }
    }

    #[test]
    fn pointwise_products_match_symbolic_products() {
        let curve = elliptic_points(0, 1, 10007).unwrap();
        let pts = &curve.points[..50];
        let f = curve.field();
        let x = RrMonomial { x_pow: 1, y: false };
        let y = RrMonomial { x_pow: 0, y: true };
        let xy = RrMonomial { x_pow: 1, y: true };
        for &pt in pts {
            assert_eq!(
                f.mul(curve.eval_monomial(x, pt), curve.eval_monomial(y, pt)),
                curve.eval_monomial(xy, pt)
            );
        }
    }
}
