//! t-radian angle measure.
//!
//! A t-radian is the angle that cuts off an arc of taxicab length 1 on the
//! unit taxicab circle `|x| + |y| = 1`. That circle has circumference 8, so a
//! full turn is 8 t-radians. Arc positions are measured counterclockwise from
//! `(1, 0)`.
//!
//! Taxicab angle measure is translation invariant but not rotation invariant:
//! the same Euclidean angle measures differently depending on where it sits.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{finite, GeometryError, Result};
use crate::plane::{Point, TaxicabLength, Vector};

/// Full turn in t-radians.
pub const FULL_TURN: f64 = 8.0;

/// An angle magnitude in t-radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct TaxicabAngle(f64);

impl TaxicabAngle {
    pub const fn new(t: f64) -> Self {
        Self(t)
    }

    pub fn t(&self) -> f64 {
        self.0
    }

    /// Representative in `[0, 8)`.
    pub fn normalize(self) -> Self {
        Self(wrap(self.0, FULL_TURN))
    }
}

impl From<f64> for TaxicabAngle {
    fn from(t: f64) -> Self {
        Self(t)
    }
}

impl From<TaxicabAngle> for f64 {
    fn from(a: TaxicabAngle) -> f64 {
        a.0
    }
}

impl Add for TaxicabAngle {
    type Output = TaxicabAngle;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for TaxicabAngle {
    type Output = TaxicabAngle;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl fmt::Display for TaxicabAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}t", self.0)
    }
}

/// An angle magnitude in ordinary radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct EuclideanAngle(f64);

impl EuclideanAngle {
    pub const fn new(rad: f64) -> Self {
        Self(rad)
    }

    pub fn rad(&self) -> f64 {
        self.0
    }

    /// Representative in `[0, 2π)`.
    pub fn normalize(self) -> Self {
        Self(wrap(self.0, TAU))
    }
}

impl From<f64> for EuclideanAngle {
    fn from(rad: f64) -> Self {
        Self(rad)
    }
}

impl From<EuclideanAngle> for f64 {
    fn from(a: EuclideanAngle) -> f64 {
        a.0
    }
}

// rem_euclid can round up to `period` for tiny negative inputs.
fn wrap(value: f64, period: f64) -> f64 {
    let r = value.rem_euclid(period);
    if r >= period {
        0.0
    } else {
        r
    }
}

pub fn normalize(theta: TaxicabAngle) -> TaxicabAngle {
    theta.normalize()
}

/// Taxicab measure of an acute angle in standard position: `2 - 2/(1 + tan φ)`.
pub fn taxicab_measure_standard(phi: EuclideanAngle) -> Result<TaxicabAngle> {
    let phi = finite(phi.0)?;
    if !(0.0..FRAC_PI_2).contains(&phi) {
        return Err(GeometryError::AngleOutOfDomain {
            value: phi,
            domain: "[0, π/2)",
        });
    }
    Ok(TaxicabAngle(2.0 - 2.0 / (1.0 + phi.tan())))
}

/// Inverse of [`taxicab_measure_standard`]: `atan(θ / (2 - θ))`.
pub fn euclidean_measure_standard(theta: TaxicabAngle) -> Result<EuclideanAngle> {
    let theta = finite(theta.0)?;
    if !(0.0..2.0).contains(&theta) {
        return Err(GeometryError::AngleOutOfDomain {
            value: theta,
            domain: "[0, 2)",
        });
    }
    Ok(EuclideanAngle((theta / (2.0 - theta)).atan()))
}

/// Taxicab measure of a Euclidean angle `phi` whose lower side makes the
/// reference angle `psi` with the x-axis, the whole angle staying inside one
/// quadrant: `2/(1 + tan ψ) - 2/(1 + tan(φ + ψ))`.
///
/// At `φ + ψ = π/2` the second term is taken at its limit, 0.
pub fn taxicab_measure_in_quadrant(
    phi: EuclideanAngle,
    psi: EuclideanAngle,
) -> Result<TaxicabAngle> {
    let phi = finite(phi.0)?;
    let psi = finite(psi.0)?;
    let upper = phi + psi;
    if phi <= 0.0 || psi < 0.0 || upper > FRAC_PI_2 + 1e-15 {
        return Err(GeometryError::AngleOutOfDomain {
            value: upper,
            domain: "φ > 0, ψ ≥ 0, φ + ψ ≤ π/2",
        });
    }
    let lower_term = 2.0 / (1.0 + psi.tan());
    let upper_term = if upper >= FRAC_PI_2 {
        0.0
    } else {
        2.0 / (1.0 + upper.tan())
    };
    Ok(TaxicabAngle(lower_term - upper_term))
}

/// Arc position, counterclockwise from `(1, 0)`, at which the ray along `v`
/// meets the unit taxicab circle. Result in `[0, 8)`.
///
/// Directions on an axis land exactly on the corners 0, 2, 4, 6.
pub fn direction_arc_position(v: Vector) -> Result<TaxicabAngle> {
    let v = v.nonzero()?;
    let (x, y) = (v.dx(), v.dy());
    let norm = x.abs() + y.abs();
    // Each quadrant's edge adds 2 t-radians; within an edge the arc
    // travelled from the starting corner is twice the coordinate that
    // moved away from zero.
    let t = if x > 0.0 && y >= 0.0 {
        2.0 * y / norm
    } else if x <= 0.0 && y > 0.0 {
        2.0 + 2.0 * (-x) / norm
    } else if x < 0.0 && y <= 0.0 {
        4.0 + 2.0 * (-y) / norm
    } else {
        6.0 + 2.0 * x / norm
    };
    Ok(TaxicabAngle(t).normalize())
}

/// Unsigned angle between two ray directions: the shorter arc, in `[0, 4]`.
pub fn angle_between_directions(u: Vector, v: Vector) -> Result<TaxicabAngle> {
    let a = direction_arc_position(u)?.0;
    let b = direction_arc_position(v)?.0;
    let diff = (a - b).abs();
    Ok(TaxicabAngle(diff.min(FULL_TURN - diff)))
}

/// Taxicab measure of the angle at `vertex` formed by rays towards `p` and `q`.
pub fn angle_between(vertex: Point, p: Point, q: Point) -> Result<TaxicabAngle> {
    let u = p - vertex;
    let v = q - vertex;
    if u.is_zero() || v.is_zero() {
        return Err(GeometryError::CoincidentPoints);
    }
    angle_between_directions(u, v)
}

/// Arc length `s = rθ` on a taxicab circle of radius `r`.
pub fn arc_length(r: TaxicabLength, theta: TaxicabAngle) -> Result<TaxicabLength> {
    let theta = finite(theta.0)?;
    if theta < 0.0 {
        return Err(GeometryError::AngleOutOfDomain {
            value: theta,
            domain: "θ ≥ 0",
        });
    }
    TaxicabLength::new(r.value() * theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, FRAC_PI_8};

    fn v(dx: f64, dy: f64) -> Vector {
        Vector::new(dx, dy).unwrap()
    }

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(TaxicabAngle(9.0)).t(), 1.0);
        assert_eq!(normalize(TaxicabAngle(0.0)).t(), 0.0);
        assert_eq!(normalize(TaxicabAngle(-1.0)).t(), 7.0);
        assert_eq!(normalize(TaxicabAngle(-1e-18)).t(), 0.0);
        assert_eq!(
            EuclideanAngle(-FRAC_PI_2).normalize().rad(),
            1.5 * std::f64::consts::PI
        );
    }

    #[test]
    fn standard_position_measure() {
        let m = |phi: f64| taxicab_measure_standard(EuclideanAngle(phi)).unwrap().t();
        assert!(close(m(FRAC_PI_4), 1.0, 1e-12));
        assert_eq!(m(0.0), 0.0);
        // 3 - √3, and the diamond walk agrees
        assert!(close(m(FRAC_PI_3), 1.267_949_192_431_122_7, 1e-12));
        let walked = oracle::arc_position(Vector::from_radians(FRAC_PI_3).unwrap()).unwrap();
        assert!(close(m(FRAC_PI_3), walked.t(), 1e-12));
        assert!(close(m((1.0f64 / 3.0).atan()), 0.5, 1e-12));
    }

    #[test]
    fn standard_position_domain() {
        assert!(taxicab_measure_standard(EuclideanAngle(FRAC_PI_2)).is_err());
        assert!(taxicab_measure_standard(EuclideanAngle(-0.1)).is_err());
        assert!(taxicab_measure_standard(EuclideanAngle(f64::NAN)).is_err());
        assert!(euclidean_measure_standard(TaxicabAngle(2.0)).is_err());
        assert!(euclidean_measure_standard(TaxicabAngle(-0.5)).is_err());
    }

    #[test]
    fn inverse_standard_measure() {
        let e = |t: f64| euclidean_measure_standard(TaxicabAngle(t)).unwrap().rad();
        assert!(close(e(1.0), FRAC_PI_4, 1e-15));
        assert_eq!(e(0.0), 0.0);
        assert!(close(e(0.5), 0.321_750_554_396_642_2, 1e-12));
        for i in 0..200 {
            let t = i as f64 * 0.01;
            let back = taxicab_measure_standard(EuclideanAngle(e(t))).unwrap().t();
            assert!(close(back, t, 1e-12), "{t} -> {back}");
        }
    }

    #[test]
    fn in_quadrant_measure() {
        let q = |phi: f64, psi: f64| {
            taxicab_measure_in_quadrant(EuclideanAngle(phi), EuclideanAngle(psi))
                .unwrap()
                .t()
        };
        assert!(close(q(FRAC_PI_4, 0.0), 1.0, 1e-12));
        // (√3 - 1)^2
        assert!(close(
            q(FRAC_PI_6, FRAC_PI_6),
            0.535_898_384_862_245_4,
            1e-12
        ));
        // 2√2 - 2: the 45° angle rotated by 22.5° no longer measures 1
        assert!(close(
            q(FRAC_PI_4, FRAC_PI_8),
            0.828_427_124_746_190_1,
            1e-12
        ));
        let walked = oracle::arc_between(
            Vector::from_radians(FRAC_PI_8).unwrap(),
            Vector::from_radians(FRAC_PI_8 + FRAC_PI_4).unwrap(),
        )
        .unwrap();
        assert!(close(q(FRAC_PI_4, FRAC_PI_8), walked.t(), 1e-12));
        // upper boundary taken as a limit
        assert!(close(q(FRAC_PI_4, FRAC_PI_4), 1.0, 1e-12));
        assert!(close(q(FRAC_PI_2, 0.0), 2.0, 1e-12));
    }

    #[test]
    fn in_quadrant_domain() {
        let q = |phi: f64, psi: f64| {
            taxicab_measure_in_quadrant(EuclideanAngle(phi), EuclideanAngle(psi))
        };
        assert!(q(0.0, 0.1).is_err());
        assert!(q(0.5, -0.1).is_err());
        assert!(q(1.0, 1.0).is_err());
    }

    #[test]
    fn arc_positions() {
        let a = |dx: f64, dy: f64| direction_arc_position(v(dx, dy)).unwrap().t();
        assert_eq!(a(1.0, 0.0), 0.0);
        assert_eq!(a(0.0, 1.0), 2.0);
        assert_eq!(a(-1.0, 0.0), 4.0);
        assert_eq!(a(0.0, -3.0), 6.0);
        assert_eq!(a(-1.0, -1.0), 5.0);
        assert_eq!(a(1.0, -1.0), 7.0);
        // scale invariant
        assert!(close(a(3.0, 4.0), a(0.3, 0.4), 1e-15));
        assert!(a(1.0, -1e-300) < 8.0);
        assert_eq!(
            direction_arc_position(v(0.0, 0.0)),
            Err(GeometryError::ZeroVector)
        );
    }

    #[test]
    fn angle_between_examples() {
        let o = Point::ORIGIN;
        assert_eq!(angle_between(o, p(1.0, 0.0), p(1.0, 1.0)).unwrap().t(), 1.0);
        assert!(close(
            angle_between(o, p(1.0, 2.0), p(-2.0, 1.0)).unwrap().t(),
            2.0,
            1e-15
        ));
        assert_eq!(
            angle_between(p(5.0, 5.0), p(6.0, 5.0), p(6.0, 6.0))
                .unwrap()
                .t(),
            1.0
        );
        // shorter arc across the starting corner
        assert!(close(
            angle_between(o, p(1.0, 1.0), p(1.0, -1.0)).unwrap().t(),
            2.0,
            1e-15
        ));
        assert_eq!(
            angle_between(o, o, p(1.0, 0.0)),
            Err(GeometryError::CoincidentPoints)
        );
        assert_eq!(
            angle_between(o, p(1.0, 0.0), o),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn arc_length_examples() {
        let r = |x: f64| TaxicabLength::new(x).unwrap();
        assert_eq!(arc_length(r(1.0), TaxicabAngle(8.0)).unwrap().value(), 8.0);
        assert_eq!(arc_length(r(3.0), TaxicabAngle(1.5)).unwrap().value(), 4.5);
        assert_eq!(arc_length(r(0.0), TaxicabAngle(5.0)).unwrap().value(), 0.0);
        assert!(arc_length(r(1.0), TaxicabAngle(-1.0)).is_err());
    }

    #[test]
    fn arc_length_matches_circle_distance() {
        // the arc from θ=0.5 to θ=1.5 on a radius-3 circle is one straight edge piece
        use crate::plane::{point_on_taxicab_circle, taxicab_distance};
        let r = TaxicabLength::new(3.0).unwrap();
        let a = point_on_taxicab_circle(Point::ORIGIN, r, TaxicabAngle(0.5));
        let b = point_on_taxicab_circle(Point::ORIGIN, r, TaxicabAngle(1.5));
        let s = arc_length(r, TaxicabAngle(1.0)).unwrap();
        assert!(close(taxicab_distance(a, b).value(), s.value(), 1e-12));
    }
}
