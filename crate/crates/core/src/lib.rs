//! Modified taxicab geometry.
//!
//! Distances use the taxicab metric `|Δx| + |Δy|`, and angles are measured
//! by the taxicab length of the arc they cut from the unit taxicab circle
//! (the diamond `|x| + |y| = 1`), in t-radians. On top of that the crate
//! provides taxicab sine and cosine with their quadrant-dependent sum
//! formulas, triangle measurement and congruence checks, and exact
//! taxicab parallax with its Euclidean counterparts.
//!
//! [`oracle`] recomputes arc measures by walking the diamond edge by edge
//! and is used to cross-check the closed forms.

pub mod angle;
pub mod error;
pub mod oracle;
pub mod parallax;
pub mod plane;
pub mod triangle;
pub mod trig;

pub use angle::{
    angle_between, angle_between_directions, arc_length, direction_arc_position,
    euclidean_measure_standard, normalize, taxicab_measure_in_quadrant, taxicab_measure_standard,
    EuclideanAngle, TaxicabAngle,
};
pub use error::{GeometryError, Result};
pub use parallax::{
    euclidean_parallax_approx, euclidean_parallax_exact, euclidean_parallax_perpendicular,
    link_taxicab_euclidean, simulate_observation, taxicab_parallax_distance,
    EuclideanParallaxMeasurement, MoveDirection, ParallaxMeasurement, ParallaxScene,
};
pub use plane::{
    euclidean_distance, point_on_taxicab_circle, taxicab_distance, EuclideanLength, Point,
    TaxicabLength, Vector, EPSILON,
};
pub use triangle::{
    angle_sum, classify_congruence, is_congruent, measure, Condition, CongruenceReport, Triangle,
    TriangleMetrics,
};
pub use trig::{
    cos_double, cos_sum, cos_t, quadrant_of, sin_double, sin_sum, sin_t, Quadrant, TrigPair,
};
