//! Triangles measured with taxicab sides and t-radian angles, and the
//! classical congruence conditions checked part by part.
//!
//! Taxicab angles always sum to 4 t-radians, yet almost none of the Euclidean
//! congruence conditions survive: only matching all sides and angles (SASAS)
//! forces two triangles to agree.

use std::fmt;

use crate::angle::{angle_between, TaxicabAngle};
use crate::error::{GeometryError, Result};
use crate::plane::{taxicab_distance, Point, TaxicabLength, Vector, EPSILON};

/// Shoelace area below which vertices count as collinear.
pub const DEGENERACY_AREA: f64 = 1e-12;

/// Three non-collinear vertices, in order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    vertices: [Point; 3],
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        let area = 0.5 * ((b - a).dx() * (c - a).dy() - (b - a).dy() * (c - a).dx()).abs();
        if area <= DEGENERACY_AREA {
            return Err(GeometryError::DegenerateTriangle);
        }
        Ok(Self {
            vertices: [a, b, c],
        })
    }

    /// Build from `[x1, y1, x2, y2, x3, y3]`.
    pub fn from_coords(c: [f64; 6]) -> Result<Self> {
        Self::new(
            Point::new(c[0], c[1])?,
            Point::new(c[2], c[3])?,
            Point::new(c[4], c[5])?,
        )
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    pub fn translate(&self, v: Vector) -> Triangle {
        Triangle {
            vertices: self.vertices.map(|p| p + v),
        }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "{a} {b} {c}")
    }
}

/// `sides[i]` is opposite vertex `i`, `angles[i]` sits at vertex `i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleMetrics {
    pub sides: [TaxicabLength; 3],
    pub angles: [TaxicabAngle; 3],
}

impl TriangleMetrics {
    pub fn angle_sum(&self) -> TaxicabAngle {
        TaxicabAngle::new(self.angles.iter().map(|a| a.t()).sum())
    }

    pub fn side_values(&self) -> [f64; 3] {
        self.sides.map(|s| s.value())
    }

    pub fn angle_values(&self) -> [f64; 3] {
        self.angles.map(|a| a.t())
    }
}

pub fn measure(tri: &Triangle) -> TriangleMetrics {
    let [a, b, c] = tri.vertices;
    let angle =
        |v, p, q| angle_between(v, p, q).expect("vertices of a valid triangle are distinct");
    TriangleMetrics {
        sides: [
            taxicab_distance(b, c),
            taxicab_distance(c, a),
            taxicab_distance(a, b),
        ],
        angles: [angle(a, b, c), angle(b, c, a), angle(c, a, b)],
    }
}

pub fn angle_sum(tri: &Triangle) -> TaxicabAngle {
    measure(tri).angle_sum()
}

/// The part-matching conditions a pair of triangles may satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Sss,
    Sas,
    Asa,
    Aas,
    Ssa,
    Aaa,
    Asasa,
    Sssa,
    Sasas,
}

impl Condition {
    pub const ALL: [Condition; 9] = [
        Condition::Sss,
        Condition::Sas,
        Condition::Asa,
        Condition::Aas,
        Condition::Ssa,
        Condition::Aaa,
        Condition::Asasa,
        Condition::Sssa,
        Condition::Sasas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Sss => "SSS",
            Condition::Sas => "SAS",
            Condition::Asa => "ASA",
            Condition::Aas => "AAS",
            Condition::Ssa => "SSA",
            Condition::Aaa => "AAA",
            Condition::Asasa => "ASASA",
            Condition::Sssa => "SSSA",
            Condition::Sasas => "SASAS",
        }
    }

    /// Whether the parts matched under one vertex correspondence satisfy
    /// this condition. `side[i]` / `angle[i]` refer to the side opposite and
    /// the angle at vertex `i` of the first triangle.
    fn holds(self, side: [bool; 3], angle: [bool; 3]) -> bool {
        let all = |m: [bool; 3]| m.iter().all(|&b| b);
        let others = |i: usize| ((i + 1) % 3, (i + 2) % 3);
        match self {
            Condition::Sss => all(side),
            Condition::Aaa => all(angle),
            // angle at i between the two sides meeting there
            Condition::Sas => (0..3).any(|i| {
                let (j, k) = others(i);
                angle[i] && side[j] && side[k]
            }),
            // angles at j, k and the side joining them
            Condition::Asa => (0..3).any(|i| {
                let (j, k) = others(i);
                side[i] && angle[j] && angle[k]
            }),
            // two angles and the side opposite one of them
            Condition::Aas => (0..3).any(|i| {
                let (j, k) = others(i);
                side[i] && angle[i] && (angle[j] || angle[k])
            }),
            // two sides and the angle opposite one of them
            Condition::Ssa => (0..3).any(|i| {
                let (j, k) = others(i);
                side[i] && angle[i] && (side[j] || side[k])
            }),
            // all angles and the two sides meeting at one vertex
            Condition::Asasa => {
                all(angle)
                    && (0..3).any(|i| {
                        let (j, k) = others(i);
                        side[j] && side[k]
                    })
            }
            Condition::Sssa => all(side) && angle.iter().any(|&b| b),
            Condition::Sasas => all(side) && all(angle),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which conditions hold for some vertex correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CongruenceReport {
    flags: [bool; 9],
}

impl CongruenceReport {
    pub fn get(&self, c: Condition) -> bool {
        self.flags[c as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Condition, bool)> + '_ {
        Condition::ALL.iter().map(move |&c| (c, self.get(c)))
    }
}

/// All six relabelings of three vertices, both orientations.
const CORRESPONDENCES: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [0, 2, 1],
    [2, 1, 0],
    [1, 0, 2],
];

pub fn classify_congruence(t1: &Triangle, t2: &Triangle) -> CongruenceReport {
    classify_congruence_with_tolerance(t1, t2, EPSILON)
}

/// As [`classify_congruence`], matching lengths and angles within `tol`.
pub fn classify_congruence_with_tolerance(
    t1: &Triangle,
    t2: &Triangle,
    tol: f64,
) -> CongruenceReport {
    let m1 = measure(t1);
    let m2 = measure(t2);
    let (s1, a1) = (m1.side_values(), m1.angle_values());
    let (s2, a2) = (m2.side_values(), m2.angle_values());
    let mut report = CongruenceReport::default();
    for perm in CORRESPONDENCES {
        let side = [0, 1, 2].map(|i| (s1[i] - s2[perm[i]]).abs() <= tol);
        let angle = [0, 1, 2].map(|i| (a1[i] - a2[perm[i]]).abs() <= tol);
        for c in Condition::ALL {
            report.flags[c as usize] |= c.holds(side, angle);
        }
    }
    report
}

/// Congruent means every side and every angle can be matched (SASAS).
pub fn is_congruent(t1: &Triangle, t2: &Triangle) -> bool {
    classify_congruence(t1, t2).get(Condition::Sasas)
}

pub fn is_congruent_with_tolerance(t1: &Triangle, t2: &Triangle, tol: f64) -> bool {
    classify_congruence_with_tolerance(t1, t2, tol).get(Condition::Sasas)
}
