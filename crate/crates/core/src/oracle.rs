//! Reference arc measurements on the unit taxicab circle.
//!
//! Everything here is computed by construction: intersect the ray with the
//! four edges of the diamond, then walk the boundary counterclockwise and add
//! up taxicab lengths of the pieces. None of the closed-form arc formulas in
//! [`crate::angle`] are used, so the two can check each other.

use crate::angle::{TaxicabAngle, FULL_TURN};
use crate::error::{GeometryError, Result};
use crate::plane::{taxicab_distance, Point, Vector};

/// Diamond corners in counterclockwise order; edge `k` runs from corner `k`
/// to corner `k + 1`.
const CORNERS: [(f64, f64); 4] = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];

fn corner(k: usize) -> Point {
    let (x, y) = CORNERS[k % 4];
    Point::new(x, y).expect("corner coordinates are finite")
}

/// Where a ray leaves the unit diamond.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Hit {
    edge: usize,
    point: Point,
}

impl Hit {
    /// Taxicab distance travelled along the edge from its starting corner.
    fn along(&self) -> f64 {
        taxicab_distance(corner(self.edge), self.point).value()
    }
}

fn intersect(v: Vector) -> Result<Hit> {
    if v.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    // Solve  t * v = c + s * (c' - c)  for each edge; keep t > 0, s in [0, 1].
    let slack = 1e-12;
    let mut best: Option<(Hit, f64)> = None;
    for edge in 0..4 {
        let c = corner(edge);
        let e = corner(edge + 1) - c;
        let det = e.dx() * v.dy() - e.dy() * v.dx();
        if det == 0.0 {
            continue;
        }
        let t = (e.dx() * c.y() - e.dy() * c.x()) / det;
        let s = (v.dx() * c.y() - v.dy() * c.x()) / det;
        if t <= 0.0 || s < -slack || s > 1.0 + slack {
            continue;
        }
        let s = s.clamp(0.0, 1.0);
        // prefer the parameter furthest inside its edge
        let inside = s.min(1.0 - s);
        if best.as_ref().is_none_or(|(_, b)| inside > *b) {
            let point = Point::new(c.x() + s * e.dx(), c.y() + s * e.dy())?;
            best = Some((Hit { edge, point }, inside));
        }
    }
    best.map(|(hit, _)| hit)
        .ok_or_else(|| GeometryError::InvalidScene("ray missed the unit diamond".into()))
}

/// A counterclockwise walk along the unit diamond.
#[derive(Debug, Clone, PartialEq)]
pub struct DiamondArc {
    vertices: Vec<Point>,
}

impl DiamondArc {
    /// Walk from where ray `from` meets the diamond to where ray `to` does.
    /// Coinciding rays give an empty walk, not a full lap.
    pub fn walk(from: Vector, to: Vector) -> Result<Self> {
        let start = intersect(from)?;
        let end = intersect(to)?;
        let mut vertices = vec![start.point];
        let ahead_on_same_edge = start.edge == end.edge && end.along() >= start.along();
        if !ahead_on_same_edge {
            let mut edge = start.edge;
            loop {
                edge = (edge + 1) % 4;
                vertices.push(corner(edge));
                if edge == end.edge {
                    break;
                }
            }
        }
        vertices.push(end.point);
        Ok(Self { vertices })
    }

    /// The whole diamond, corner to corner back to `(1, 0)`.
    pub fn full_circle() -> Self {
        Self {
            vertices: (0..=4).map(corner).collect(),
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Taxicab length of the walk.
    pub fn length(&self) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| taxicab_distance(w[0], w[1]).value())
            .sum()
    }
}

/// Arc position of the ray `v`, walked from `(1, 0)`.
pub fn arc_position(v: Vector) -> Result<TaxicabAngle> {
    let hit = intersect(v)?;
    let mut length = 2.0 * hit.edge as f64 + hit.along();
    if length >= FULL_TURN {
        length -= FULL_TURN;
    }
    Ok(TaxicabAngle::new(length))
}

/// Shorter arc between the two ray intersections, in `[0, 4]`.
pub fn arc_between(u: Vector, v: Vector) -> Result<TaxicabAngle> {
    let forward = DiamondArc::walk(u, v)?.length();
    let backward = DiamondArc::walk(v, u)?.length();
    let forward = if forward >= FULL_TURN { 0.0 } else { forward };
    let backward = if backward >= FULL_TURN { 0.0 } else { backward };
    Ok(TaxicabAngle::new(forward.min(backward)))
}

/// Outcome of comparing the closed-form arc position with the walk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepReport {
    pub samples: usize,
    pub max_deviation: f64,
}

/// Compare [`crate::angle::direction_arc_position`] with [`arc_position`] on
/// `n` evenly spaced directions plus the axis and diagonal directions and
/// their immediate neighbours.
pub fn arc_position_sweep(n: usize) -> SweepReport {
    let mut directions: Vec<Vector> = (0..n)
        .map(|i| {
            let rad = std::f64::consts::TAU * i as f64 / n as f64;
            Vector::from_radians(rad).expect("finite angle")
        })
        .collect();
    for &(x, y) in &[
        (1.0, 0.0),
        (1.0, 1.0),
        (0.0, 1.0),
        (-1.0, 1.0),
        (-1.0, 0.0),
        (-1.0, -1.0),
        (0.0, -1.0),
        (1.0, -1.0),
    ] {
        for &(ex, ey) in &[
            (0.0, 0.0),
            (1e-9, 0.0),
            (-1e-9, 0.0),
            (0.0, 1e-9),
            (0.0, -1e-9),
        ] {
            let v = Vector::new(x + ex, y + ey).expect("finite");
            if !v.is_zero() {
                directions.push(v);
            }
        }
    }
    let max_deviation = directions
        .iter()
        .map(|&v| {
            let closed = crate::angle::direction_arc_position(v)
                .expect("non-zero")
                .t();
            let walked = arc_position(v).expect("non-zero").t();
            circular_gap(closed, walked)
        })
        .fold(0.0, f64::max);
    SweepReport {
        samples: directions.len(),
        max_deviation,
    }
}

/// Compare the acute-angle conversion formula with the walk over `n`
/// interior angles of the first quadrant.
pub fn standard_measure_sweep(n: usize) -> SweepReport {
    let max_deviation = (1..=n)
        .map(|i| {
            let phi = std::f64::consts::FRAC_PI_2 * i as f64 / (n + 1) as f64;
            let closed = crate::angle::taxicab_measure_standard(phi.into())
                .expect("acute")
                .t();
            let walked = arc_position(Vector::from_radians(phi).expect("finite"))
                .expect("non-zero")
                .t();
            (closed - walked).abs()
        })
        .fold(0.0, f64::max);
    SweepReport {
        samples: n,
        max_deviation,
    }
}

/// Distance between two arc positions on the circle of circumference 8.
pub fn circular_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % FULL_TURN;
    d.min(FULL_TURN - d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(dx: f64, dy: f64) -> Vector {
        Vector::new(dx, dy).unwrap()
    }

    #[test]
    fn arc_position_examples() {
        assert_eq!(arc_position(v(0.0, 1.0)).unwrap().t(), 2.0);
        assert_eq!(arc_position(v(1.0, 1.0)).unwrap().t(), 1.0);
        assert_eq!(arc_position(v(-1.0, 0.0)).unwrap().t(), 4.0);
        assert_eq!(arc_position(v(1.0, 0.0)).unwrap().t(), 0.0);
        assert_eq!(arc_position(v(0.0, 0.0)), Err(GeometryError::ZeroVector));
    }

    #[test]
    fn arc_between_examples() {
        assert_eq!(arc_between(v(1.0, 0.0), v(0.0, 1.0)).unwrap().t(), 2.0);
        assert!((arc_between(v(1.0, 2.0), v(-2.0, 1.0)).unwrap().t() - 2.0).abs() < 1e-12);
        assert_eq!(arc_between(v(1.0, 0.0), v(1.0, 0.0)).unwrap().t(), 0.0);
        assert!(arc_between(v(0.0, 0.0), v(1.0, 0.0)).is_err());
    }

    #[test]
    fn walk_vertices_stay_on_diamond() {
        let arc = DiamondArc::walk(v(3.0, 1.0), v(-1.0, -5.0)).unwrap();
        // entry, corners 1 and 2, exit
        assert_eq!(arc.vertices().len(), 4);
        for p in arc.vertices() {
            assert!((p.x().abs() + p.y().abs() - 1.0).abs() < 1e-12);
        }
        // consecutive vertices share an edge: they sit in one closed quadrant
        for w in arc.vertices().windows(2) {
            let same_x_side = w[0].x() * w[1].x() >= -1e-15;
            let same_y_side = w[0].y() * w[1].y() >= -1e-15;
            assert!(same_x_side && same_y_side, "{:?}", w);
        }
    }

    #[test]
    fn half_and_full_circle() {
        for &(x, y) in &[(1.0, 0.0), (0.3, 0.9), (-2.0, 0.5), (0.1, -7.0)] {
            let u = v(x, y);
            assert!((arc_between(u, -u).unwrap().t() - 4.0).abs() < 1e-12);
        }
        assert_eq!(DiamondArc::full_circle().length(), 8.0);
    }

    #[test]
    fn sweeps_agree() {
        assert!(arc_position_sweep(1000).max_deviation < 1e-9);
        assert!(standard_measure_sweep(1000).max_deviation < 1e-9);
    }
}
