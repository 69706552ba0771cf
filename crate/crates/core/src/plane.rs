//! Points, direction vectors and the two metrics of the plane.
//!
//! All distances are taxicab unless a name says otherwise. The Euclidean
//! metric is only carried along so the parallax code can compare both worlds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::angle::TaxicabAngle;
use crate::error::{finite, GeometryError, Result};
use crate::trig::{cos_t, sin_t};

/// Library-wide absolute tolerance for geometric predicates.
pub const EPSILON: f64 = 1e-9;

/// A location in the plane with finite coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        Ok(Self {
            x: finite(x)?,
            y: finite(y)?,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Reflection through `center` (the point diametrically opposite).
    pub fn reflect_through(&self, center: Point) -> Point {
        Point {
            x: 2.0 * center.x - self.x,
            y: 2.0 * center.y - self.y,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A displacement, also used as a ray direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector {
    dx: f64,
    dy: f64,
}

impl Vector {
    pub fn new(dx: f64, dy: f64) -> Result<Self> {
        Ok(Self {
            dx: finite(dx)?,
            dy: finite(dy)?,
        })
    }

    /// Unit Euclidean direction at `rad` radians from the positive x-axis.
    pub fn from_radians(rad: f64) -> Result<Self> {
        finite(rad)?;
        Ok(Self {
            dx: rad.cos(),
            dy: rad.sin(),
        })
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn dy(&self) -> f64 {
        self.dy
    }

    pub fn is_zero(&self) -> bool {
        self.dx == 0.0 && self.dy == 0.0
    }

    /// Euclidean quarter turn counterclockwise.
    pub fn rot90(&self) -> Vector {
        Vector {
            dx: -self.dy,
            dy: self.dx,
        }
    }

    pub fn taxicab_norm(&self) -> f64 {
        self.dx.abs() + self.dy.abs()
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    /// Direction angle in radians, in (-π, π].
    pub fn atan2(&self) -> f64 {
        self.dy.atan2(self.dx)
    }

    pub(crate) fn nonzero(self) -> Result<Self> {
        if self.is_zero() {
            Err(GeometryError::ZeroVector)
        } else {
            Ok(self)
        }
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        Vector {
            dx: self.dx + rhs.dx,
            dy: self.dy + rhs.dy,
        }
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            dx: -self.dx,
            dy: -self.dy,
        }
    }
}

impl Mul<f64> for Vector {
    type Output = Vector;
    fn mul(self, k: f64) -> Vector {
        Vector {
            dx: self.dx * k,
            dy: self.dy * k,
        }
    }
}

impl Sub for Point {
    type Output = Vector;
    fn sub(self, rhs: Point) -> Vector {
        Vector {
            dx: self.x - rhs.x,
            dy: self.y - rhs.y,
        }
    }
}

impl Add<Vector> for Point {
    type Output = Point;
    fn add(self, v: Vector) -> Point {
        Point {
            x: self.x + v.dx,
            y: self.y + v.dy,
        }
    }
}

impl Sub<Vector> for Point {
    type Output = Point;
    fn sub(self, v: Vector) -> Point {
        Point {
            x: self.x - v.dx,
            y: self.y - v.dy,
        }
    }
}

macro_rules! length_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
        pub struct $name(f64);

        impl $name {
            pub const ZERO: $name = $name(0.0);

            pub fn new(value: f64) -> Result<Self> {
                let value = finite(value)?;
                if value < 0.0 {
                    return Err(GeometryError::NegativeLength(value));
                }
                Ok(Self(value))
            }

            pub fn value(&self) -> f64 {
                self.0
            }
        }

        impl From<$name> for f64 {
            fn from(l: $name) -> f64 {
                l.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

length_type!(
    /// A non-negative length measured with the taxicab metric.
    TaxicabLength
);
length_type!(
    /// A non-negative length measured with the Euclidean metric.
    EuclideanLength
);

/// `|q.x - p.x| + |q.y - p.y|`
pub fn taxicab_distance(p: Point, q: Point) -> TaxicabLength {
    TaxicabLength((q - p).taxicab_norm())
}

pub fn euclidean_distance(p: Point, q: Point) -> EuclideanLength {
    EuclideanLength((q - p).euclidean_norm())
}

/// The point at arc position `theta` on the taxicab circle of radius `r`
/// about `center`, i.e. `center + r * (cos_t θ, sin_t θ)`.
pub fn point_on_taxicab_circle(center: Point, r: TaxicabLength, theta: TaxicabAngle) -> Point {
    Point {
        x: center.x + r.0 * cos_t(theta),
        y: center.y + r.0 * sin_t(theta),
    }
}
