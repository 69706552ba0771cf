//! Distance by parallax, taxicab and Euclidean.
//!
//! An observer at `A` sights an object `Q` against a reference direction
//! "at infinity", steps a taxicab distance `s` to `B` along a diagonal, and
//! sights again. In the taxicab plane one of the two diagonals through `A`
//! keeps the distance to `Q` unchanged, so `Q` and its translate by `A - B`
//! lie on one taxicab circle about `A` and `d = s / (β - α)` holds exactly.
//! The Euclidean counterparts are either exact but configuration-dependent,
//! or the familiar small-angle estimate.
//!
//! # Scene reduction
//!
//! Scenes may put the object in any quadrant relative to the observer. Before
//! validating, a scene is reflected (x ↦ -x, y ↦ -y, then possibly swapping
//! x and y) so that the object lies in the open first quadrant and the
//! observer moves SE. These reflections preserve taxicab lengths and
//! t-radian measure, so validity in the reduced frame is validity in the
//! original one. The measured angles themselves are taken in the original
//! frame.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::angle::{
    angle_between_directions, direction_arc_position, taxicab_measure_in_quadrant, EuclideanAngle,
    TaxicabAngle,
};
use crate::error::{finite, GeometryError, Result};
use crate::plane::{EuclideanLength, Point, TaxicabLength, Vector, EPSILON};

/// Slack when the reference direction coincides with the line of sight.
const ALIGNMENT_SLACK: f64 = 1e-12;

/// Taxicab parallax reading: baseline and the two sighting angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParallaxMeasurement {
    pub s: TaxicabLength,
    pub alpha: TaxicabAngle,
    pub beta: TaxicabAngle,
}

impl ParallaxMeasurement {
    pub fn parallax(&self) -> TaxicabAngle {
        self.beta - self.alpha
    }
}

/// Euclidean parallax reading. `theta_e` is the reference direction and
/// `theta_e + alpha_e` the first line of sight, both from the x-axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanParallaxMeasurement {
    pub s_e: EuclideanLength,
    pub alpha_e: EuclideanAngle,
    pub beta_e: EuclideanAngle,
    pub theta_e: EuclideanAngle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveDirection {
    NW,
    NE,
    SW,
    SE,
}

impl MoveDirection {
    pub const ALL: [MoveDirection; 4] = [
        MoveDirection::NW,
        MoveDirection::NE,
        MoveDirection::SW,
        MoveDirection::SE,
    ];

    fn signs(self) -> (f64, f64) {
        match self {
            MoveDirection::NW => (-1.0, 1.0),
            MoveDirection::NE => (1.0, 1.0),
            MoveDirection::SW => (-1.0, -1.0),
            MoveDirection::SE => (1.0, -1.0),
        }
    }

    /// Displacement of taxicab length `step` in this direction.
    pub fn displacement(self, step: TaxicabLength) -> Vector {
        let (sx, sy) = self.signs();
        let h = 0.5 * step.value();
        Vector::new(sx * h, sy * h).expect("finite step")
    }

    fn from_signs(sx: f64, sy: f64) -> MoveDirection {
        match (sx > 0.0, sy > 0.0) {
            (false, true) => MoveDirection::NW,
            (true, true) => MoveDirection::NE,
            (false, false) => MoveDirection::SW,
            (true, false) => MoveDirection::SE,
        }
    }
}

impl fmt::Display for MoveDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveDirection::NW => "NW",
            MoveDirection::NE => "NE",
            MoveDirection::SW => "SW",
            MoveDirection::SE => "SE",
        };
        f.write_str(s)
    }
}

impl FromStr for MoveDirection {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "NW" => Ok(MoveDirection::NW),
            "NE" => Ok(MoveDirection::NE),
            "SW" => Ok(MoveDirection::SW),
            "SE" => Ok(MoveDirection::SE),
            _ => Err(GeometryError::InvalidScene(format!(
                "unknown move direction {s:?} (expected NW, NE, SW or SE)"
            ))),
        }
    }
}

/// Ground truth for a parallax observation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParallaxScene {
    pub observer: Point,
    pub object: Point,
    pub step: TaxicabLength,
    pub move_direction: MoveDirection,
}

impl ParallaxScene {
    pub fn new(
        observer: Point,
        object: Point,
        step: TaxicabLength,
        move_direction: MoveDirection,
    ) -> Self {
        Self {
            observer,
            object,
            step,
            move_direction,
        }
    }

    /// A scene whose move direction is the one [`choose_move_direction`] picks.
    pub fn with_chosen_direction(
        observer: Point,
        object: Point,
        step: TaxicabLength,
        reference: EuclideanAngle,
    ) -> Result<Self> {
        let move_direction = choose_move_direction(observer, object, step, reference)?;
        Ok(Self::new(observer, object, step, move_direction))
    }

    /// Position `B` after the move.
    pub fn second_position(&self) -> Point {
        self.observer + self.move_direction.displacement(self.step)
    }
}

/// Reflection taking a scene to the reduced frame.
#[derive(Debug, Clone, Copy)]
struct Frame {
    flip_x: bool,
    flip_y: bool,
    swap: bool,
}

impl Frame {
    fn apply(&self, v: Vector) -> Vector {
        let x = if self.flip_x { -v.dx() } else { v.dx() };
        let y = if self.flip_y { -v.dy() } else { v.dy() };
        let (x, y) = if self.swap { (y, x) } else { (x, y) };
        Vector::new(x, y).expect("reflection keeps coordinates finite")
    }
}

/// A scene expressed in the reduced frame, already validated.
#[derive(Debug, Clone, Copy)]
struct Reduced {
    /// `Q - A`, strictly inside the first quadrant.
    sight_a: Vector,
    /// `Q - B`, strictly inside the first quadrant.
    sight_b: Vector,
    reference: Vector,
}

fn reduce(scene: &ParallaxScene, reference: EuclideanAngle) -> Result<Reduced> {
    let step = scene.step.value();
    if step <= 0.0 {
        return Err(GeometryError::InvalidScene("step must be positive".into()));
    }
    let sight = scene.object - scene.observer;
    if sight.dx().abs() <= EPSILON || sight.dy().abs() <= EPSILON {
        return Err(GeometryError::InvalidScene(
            "object lies on an axis through the observer".into(),
        ));
    }
    let mut frame = Frame {
        flip_x: sight.dx() < 0.0,
        flip_y: sight.dy() < 0.0,
        swap: false,
    };
    let (sx, sy) = scene.move_direction.signs();
    let unit = frame.apply(Vector::new(sx, sy).expect("finite"));
    if unit.dx() == unit.dy() {
        return Err(GeometryError::InvalidScene(format!(
            "moving {} changes the taxicab distance to the object",
            scene.move_direction
        )));
    }
    // NW in the reduced frame becomes SE after exchanging the axes
    frame.swap = unit.dx() < 0.0;

    let sight_a = frame.apply(sight);
    let sight_b = frame.apply(scene.object - scene.second_position());
    if sight_b.dx() <= EPSILON {
        return Err(GeometryError::InvalidScene(
            "step too long: the object would leave the quadrant".into(),
        ));
    }
    let reference = frame.apply(Vector::from_radians(finite(reference.rad())?)?);

    let pos_a = direction_arc_position(sight_a)?.t();
    let pos_b = direction_arc_position(sight_b)?.t();
    let pos_ref = direction_arc_position(reference)?.t();
    let mut offset = pos_a - pos_ref;
    if offset > 4.0 {
        offset -= 8.0;
    } else if offset <= -4.0 {
        offset += 8.0;
    }
    if offset < -ALIGNMENT_SLACK {
        return Err(GeometryError::InvalidScene(format!(
            "moving {} shrinks the angle between object and reference",
            scene.move_direction
        )));
    }
    if offset + (pos_b - pos_a) > 4.0 {
        return Err(GeometryError::InvalidScene(
            "reference direction is too far from the object".into(),
        ));
    }
    Ok(Reduced {
        sight_a,
        sight_b,
        reference,
    })
}

/// The diagonal move of length `step` that keeps the taxicab distance to
/// `object` fixed and increases the angle between object and reference.
///
/// Of the two distance-preserving diagonals exactly one increases the angle,
/// unless the reference lies along the line of sight, in which case both do
/// and the first of SE, NW, NE, SW that qualifies is returned.
pub fn choose_move_direction(
    observer: Point,
    object: Point,
    step: TaxicabLength,
    reference: EuclideanAngle,
) -> Result<MoveDirection> {
    let candidates = [
        MoveDirection::SE,
        MoveDirection::NW,
        MoveDirection::NE,
        MoveDirection::SW,
    ];
    let mut last_err = None;
    for dir in candidates {
        let scene = ParallaxScene::new(observer, object, step, dir);
        match reduce(&scene, reference) {
            Ok(_) => return Ok(dir),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one candidate was tried"))
}

/// The two diagonals along which the taxicab distance to `object` does not
/// change (for small steps).
pub fn distance_preserving_directions(
    observer: Point,
    object: Point,
) -> Result<[MoveDirection; 2]> {
    let sight = object - observer;
    if sight.dx().abs() <= EPSILON || sight.dy().abs() <= EPSILON {
        return Err(GeometryError::InvalidScene(
            "object lies on an axis through the observer".into(),
        ));
    }
    // move so that one coordinate gap shrinks while the other grows
    let (sx, sy) = (sight.dx().signum(), sight.dy().signum());
    Ok([
        MoveDirection::from_signs(sx, -sy),
        MoveDirection::from_signs(-sx, sy),
    ])
}

/// `d = s / (β - α)`, exact for a distance-preserving move.
pub fn taxicab_parallax_distance(m: &ParallaxMeasurement) -> Result<TaxicabLength> {
    let parallax = m.beta.t() - m.alpha.t();
    if parallax.is_nan() || parallax <= 0.0 {
        return Err(GeometryError::NonPositiveParallax(parallax));
    }
    if m.s.value() <= 0.0 {
        return Err(GeometryError::InvalidScene(
            "baseline must be positive".into(),
        ));
    }
    TaxicabLength::new(m.s.value() / parallax)
}

/// Sight the object against the reference direction from `A` and again from
/// `B`, in t-radians.
pub fn simulate_observation(
    scene: &ParallaxScene,
    reference: EuclideanAngle,
) -> Result<ParallaxMeasurement> {
    reduce(scene, reference)?;
    let reference = Vector::from_radians(reference.rad())?;
    let alpha = angle_between_directions(reference, scene.object - scene.observer)?;
    let beta = angle_between_directions(reference, scene.object - scene.second_position())?;
    if beta <= alpha {
        return Err(GeometryError::NonPositiveParallax(beta.t() - alpha.t()));
    }
    Ok(ParallaxMeasurement {
        s: scene.step,
        alpha,
        beta,
    })
}

fn wrap_pi(rad: f64) -> f64 {
    let r = (rad + PI).rem_euclid(2.0 * PI) - PI;
    if r <= -PI {
        r + 2.0 * PI
    } else {
        r
    }
}

/// The Euclidean reading of a scene, expressed in the reduced frame so that
/// the exact Euclidean formula applies: object in the first quadrant,
/// observer moving SE by `s_e = s / √2`.
pub fn simulate_euclidean_observation(
    scene: &ParallaxScene,
    reference: EuclideanAngle,
) -> Result<EuclideanParallaxMeasurement> {
    let reduced = reduce(scene, reference)?;
    let sight_a = reduced.sight_a.atan2();
    let alpha = wrap_pi(sight_a - reduced.reference.atan2()).max(0.0);
    let theta = sight_a - alpha;
    let beta = reduced.sight_b.atan2() - theta;
    Ok(EuclideanParallaxMeasurement {
        s_e: EuclideanLength::new(scene.step.value() * FRAC_1_SQRT_2)?,
        alpha_e: alpha.into(),
        beta_e: beta.into(),
        theta_e: theta.into(),
    })
}

/// Euclidean reading after stepping `step_e` perpendicular to the line of
/// sight, away from the reference direction. Angles are unsigned
/// separations from the reference.
pub fn simulate_perpendicular_observation(
    observer: Point,
    object: Point,
    step_e: EuclideanLength,
    reference: EuclideanAngle,
) -> Result<EuclideanParallaxMeasurement> {
    if step_e.value() <= 0.0 {
        return Err(GeometryError::InvalidScene("step must be positive".into()));
    }
    let sight = object - observer;
    let d = sight.euclidean_norm();
    if d == 0.0 {
        return Err(GeometryError::CoincidentPoints);
    }
    let theta = finite(reference.rad())?;
    let signed_alpha = wrap_pi(sight.atan2() - theta);
    // a clockwise step turns the line of sight counterclockwise
    let unit = sight * (1.0 / d);
    let side = if signed_alpha >= 0.0 {
        unit.rot90() * -1.0
    } else {
        unit.rot90()
    };
    let b = observer + side * step_e.value();
    let alpha = signed_alpha.abs();
    let beta = wrap_pi((object - b).atan2() - theta).abs();
    if beta <= alpha {
        return Err(GeometryError::InvalidScene(
            "reference direction is too far from the object".into(),
        ));
    }
    Ok(EuclideanParallaxMeasurement {
        s_e: step_e,
        alpha_e: alpha.into(),
        beta_e: beta.into(),
        theta_e: theta.into(),
    })
}

fn euclidean_parallax_angle(alpha_e: EuclideanAngle, beta_e: EuclideanAngle) -> Result<f64> {
    let parallax = finite(beta_e.rad())? - finite(alpha_e.rad())?;
    if parallax.is_nan() || parallax <= 0.0 {
        return Err(GeometryError::NonPositiveParallax(parallax));
    }
    Ok(parallax)
}

/// Exact Euclidean distance for a diagonal step in the reduced frame:
/// `d_e = s_e (cos(β+θ) + sin(β+θ)) / (√2 sin(β-α))`.
pub fn euclidean_parallax_exact(m: &EuclideanParallaxMeasurement) -> Result<EuclideanLength> {
    let parallax = euclidean_parallax_angle(m.alpha_e, m.beta_e)?;
    if parallax >= FRAC_PI_2 {
        return Err(GeometryError::AngleOutOfDomain {
            value: parallax,
            domain: "0 < β - α < π/2",
        });
    }
    let sight_b = m.beta_e.rad() + finite(m.theta_e.rad())?;
    let gamma = 0.75 * PI - sight_b;
    if !(gamma > 0.0 && gamma < PI) {
        return Err(GeometryError::InvalidScene(format!(
            "angle at the second position {gamma} is not a triangle angle"
        )));
    }
    let d = m.s_e.value() * (sight_b.cos() + sight_b.sin()) / (SQRT_2 * parallax.sin());
    EuclideanLength::new(d)
}

/// Exact Euclidean distance for a step perpendicular to the line of sight:
/// `d_e = s_e / tan(β - α)`.
pub fn euclidean_parallax_perpendicular(
    s_e: EuclideanLength,
    alpha_e: EuclideanAngle,
    beta_e: EuclideanAngle,
) -> Result<EuclideanLength> {
    let parallax = euclidean_parallax_angle(alpha_e, beta_e)?;
    if parallax >= FRAC_PI_2 {
        return Err(GeometryError::AngleOutOfDomain {
            value: parallax,
            domain: "0 < β - α < π/2",
        });
    }
    EuclideanLength::new(s_e.value() / parallax.tan())
}

/// Small-angle estimate `d_e ≈ s_e / (β - α)`.
pub fn euclidean_parallax_approx(
    s_e: EuclideanLength,
    alpha_e: EuclideanAngle,
    beta_e: EuclideanAngle,
) -> Result<EuclideanLength> {
    let parallax = euclidean_parallax_angle(alpha_e, beta_e)?;
    EuclideanLength::new(s_e.value() / parallax)
}

/// Taxicab quantities recovered from a Euclidean scene.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaxicabLink {
    pub s: TaxicabLength,
    pub d: TaxicabLength,
    pub parallax: TaxicabAngle,
}

/// Convert a Euclidean reading (reduced frame) and its distance `d_e` into
/// the taxicab baseline, distance and parallax angle:
///
/// * `s = √2 s_e`
/// * `d = d_e (cos(α+θ) + sin(α+θ))`
/// * `β - α` = taxicab measure of the angle `β_e - α_e` with reference angle `α_e + θ_e`
///
/// For a consistent scene these satisfy `d = s / (β - α)`.
pub fn link_taxicab_euclidean(
    m: &EuclideanParallaxMeasurement,
    d_e: EuclideanLength,
) -> Result<TaxicabLink> {
    let parallax_e = euclidean_parallax_angle(m.alpha_e, m.beta_e)?;
    let theta = finite(m.theta_e.rad())?;
    let sight_a = m.alpha_e.rad() + theta;
    let sight_b = m.beta_e.rad() + theta;
    if sight_a <= ALIGNMENT_SLACK || sight_b >= FRAC_PI_2 - ALIGNMENT_SLACK {
        return Err(GeometryError::InvalidScene(
            "lines of sight must stay strictly inside the first quadrant".into(),
        ));
    }
    let expected = euclidean_parallax_exact(m)?.value();
    if (expected - d_e.value()).abs() > 1e-9 * expected.max(1.0) {
        return Err(GeometryError::InvalidScene(format!(
            "distance {} is inconsistent with the sightings (expected {expected})",
            d_e.value()
        )));
    }
    let parallax = taxicab_measure_in_quadrant(parallax_e.into(), sight_a.into())?;
    Ok(TaxicabLink {
        s: TaxicabLength::new(SQRT_2 * m.s_e.value())?,
        d: TaxicabLength::new(d_e.value() * (sight_a.cos() + sight_a.sin()))?,
        parallax,
    })
}
