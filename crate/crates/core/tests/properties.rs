//! Invariants of the taxicab plane, angle measure, trigonometry, triangles
//! and parallax, checked on generated inputs.

use proptest::prelude::*;
use taxicab::angle::{angle_between_directions, FULL_TURN};
use taxicab::oracle;
use taxicab::parallax::{simulate_euclidean_observation, ParallaxScene};
use taxicab::triangle::{classify_congruence_with_tolerance, is_congruent_with_tolerance};
use taxicab::trig::{cos_sum_detailed, sin_sum_detailed};
use taxicab::*;

// =============================================================================
// STRATEGIES
// =============================================================================

fn coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y).unwrap())
}

/// Multiples of 1/8 in a small range: sums and differences stay exact.
fn dyadic() -> impl Strategy<Value = f64> {
    (-800i32..800).prop_map(|k| k as f64 / 8.0)
}

fn dyadic_point() -> impl Strategy<Value = Point> {
    (dyadic(), dyadic()).prop_map(|(x, y)| Point::new(x, y).unwrap())
}

fn direction() -> impl Strategy<Value = Vector> {
    (coord(), coord())
        .prop_filter("non-zero", |(x, y)| x.abs() + y.abs() > 1e-6)
        .prop_map(|(x, y)| Vector::new(x, y).unwrap())
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_filter_map("non-degenerate", |(a, b, c)| Triangle::new(a, b, c).ok())
}

// =============================================================================
// PLANE
// =============================================================================

proptest! {
    #[test]
    fn metric_axioms(p in point(), q in point(), r in point()) {
        let d = |a, b| taxicab_distance(a, b).value();
        prop_assert!(d(p, q) >= 0.0);
        prop_assert_eq!(d(p, q), d(q, p));
        prop_assert_eq!(d(p, p), 0.0);
        prop_assert!(d(p, q) > 0.0 || p == q);
        prop_assert!(d(p, r) <= d(p, q) + d(q, r) + 1e-12);
    }

    #[test]
    fn distance_is_translation_invariant(p in dyadic_point(), q in dyadic_point(), dx in dyadic(), dy in dyadic()) {
        let v = Vector::new(dx, dy).unwrap();
        prop_assert_eq!(taxicab_distance(p + v, q + v), taxicab_distance(p, q));
    }

    #[test]
    fn circle_points_sit_at_radius(cx in -10.0..10.0f64, cy in -10.0..10.0f64, r in 0.0..10.0f64, t in 0.0..8.0f64) {
        let center = Point::new(cx, cy).unwrap();
        let radius = TaxicabLength::new(r).unwrap();
        let q = point_on_taxicab_circle(center, radius, t.into());
        prop_assert!((taxicab_distance(center, q).value() - r).abs() <= 1e-12);
    }
}

// =============================================================================
// ANGLES
// =============================================================================

proptest! {
    #[test]
    fn right_angles_measure_two(v in direction()) {
        let a = angle_between_directions(v, v.rot90()).unwrap().t();
        prop_assert!((a - 2.0).abs() <= EPSILON, "{:?} -> {}", v, a);
    }

    #[test]
    fn angles_are_translation_invariant(
        vertex in dyadic_point(), p in dyadic_point(), q in dyadic_point(), dx in dyadic(), dy in dyadic()
    ) {
        prop_assume!(p != vertex && q != vertex);
        let w = Vector::new(dx, dy).unwrap();
        prop_assert_eq!(
            angle_between(vertex + w, p + w, q + w).unwrap(),
            angle_between(vertex, p, q).unwrap()
        );
    }

    #[test]
    fn opposite_angles_are_congruent(vertex in point(), p in point(), q in point()) {
        prop_assume!(p != vertex && q != vertex);
        let a = angle_between(vertex, p, q).unwrap().t();
        let b = angle_between(vertex, p.reflect_through(vertex), q.reflect_through(vertex)).unwrap().t();
        prop_assert!((a - b).abs() <= EPSILON);
    }

    #[test]
    fn alternate_interior_angles_are_congruent(
        p1 in point(), p2 in point(), line in direction()
    ) {
        let transversal = p2 - p1;
        prop_assume!(transversal.taxicab_norm() > 1e-6);
        // both lines run along `line`; the transversal joins p1 and p2
        let at_p1 = angle_between(p1, p1 + line, p2).unwrap().t();
        let at_p2 = angle_between(p2, p2 - line, p1).unwrap().t();
        prop_assert!((at_p1 - at_p2).abs() <= EPSILON);
    }

    #[test]
    fn quadrant_formula_matches_general_angle(phi_frac in 0.001..1.0f64, psi_frac in 0.0..1.0f64) {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let phi = phi_frac * half_pi;
        let psi = psi_frac * (half_pi - phi);
        let closed = taxicab_measure_in_quadrant(phi.into(), psi.into()).unwrap().t();
        let general = angle_between_directions(
            Vector::from_radians(psi).unwrap(),
            Vector::from_radians(phi + psi).unwrap(),
        ).unwrap().t();
        prop_assert!((closed - general).abs() <= EPSILON);
    }

    #[test]
    fn arc_position_matches_oracle(v in direction()) {
        let closed = direction_arc_position(v).unwrap().t();
        let walked = oracle::arc_position(v).unwrap().t();
        prop_assert!(oracle::circular_gap(closed, walked) <= 1e-9);
        prop_assert!((0.0..FULL_TURN).contains(&closed));
    }

    #[test]
    fn arc_between_matches_oracle(u in direction(), v in direction()) {
        let closed = angle_between_directions(u, v).unwrap().t();
        let walked = oracle::arc_between(u, v).unwrap().t();
        prop_assert!((closed - walked).abs() <= 1e-9);
        prop_assert!((oracle::arc_between(u, -u).unwrap().t() - 4.0).abs() <= 1e-12);
    }
}

#[test]
fn rotation_changes_measure() {
    let standard = taxicab_measure_standard(std::f64::consts::FRAC_PI_4.into())
        .unwrap()
        .t();
    let rotated = taxicab_measure_in_quadrant(
        std::f64::consts::FRAC_PI_4.into(),
        std::f64::consts::FRAC_PI_8.into(),
    )
    .unwrap()
    .t();
    assert!((standard - 1.0).abs() <= EPSILON);
    assert!((rotated - 0.828_427_124_746_190_1).abs() <= EPSILON);
}

// =============================================================================
// TRIGONOMETRY
// =============================================================================

fn grid(from: f64, to: f64, step: f64) -> impl Iterator<Item = f64> {
    let n = ((to - from) / step).round() as i64;
    (0..=n).map(move |i| from + i as f64 * step)
}

#[test]
fn table_one_identities() {
    for theta in grid(-16.0, 16.0, 0.01) {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12;
        assert!(close(sin_t(-theta), -sin_t(theta)), "odd sine at {theta}");
        assert!(close(cos_t(-theta), cos_t(theta)), "even cosine at {theta}");
        assert!(
            close(sin_t(theta + 2.0), cos_t(theta)),
            "shifted sine at {theta}"
        );
        assert!(
            close(cos_t(theta - 2.0), sin_t(theta)),
            "shifted cosine at {theta}"
        );
        assert!(
            close(sin_t(theta - 4.0), -sin_t(theta)),
            "half-turn sine at {theta}"
        );
        assert!(
            close(cos_t(theta - 4.0), -cos_t(theta)),
            "half-turn cosine at {theta}"
        );
        for k in -2..=2 {
            let shifted = theta + 8.0 * k as f64;
            assert!(
                close(sin_t(shifted), sin_t(theta)),
                "sine period at {theta}, k={k}"
            );
            assert!(
                close(cos_t(shifted), cos_t(theta)),
                "cosine period at {theta}, k={k}"
            );
        }
    }
}

proptest! {
    #[test]
    fn sums_match_direct_evaluation(a in -20.0..20.0f64, b in -20.0..20.0f64) {
        prop_assert!((cos_sum(a, b) - cos_t(a + b)).abs() <= 1e-12);
        prop_assert!((sin_sum(a, b) - sin_t(a + b)).abs() <= 1e-12);
    }

    #[test]
    fn diamond_identity(t in -1e3..1e3f64) {
        prop_assert!((sin_t(t).abs() + cos_t(t).abs() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn double_angles_agree_with_sums() {
    for a in grid(-8.0, 8.0, 0.005) {
        assert!((cos_double(a) - cos_sum(a, a)).abs() <= 1e-12, "cos at {a}");
        assert!((sin_double(a) - sin_sum(a, a)).abs() <= 1e-12, "sin at {a}");
        assert!((cos_double(a) - cos_t(2.0 * a)).abs() <= 1e-12);
        assert!((sin_double(a) - sin_t(2.0 * a)).abs() <= 1e-12);
    }
}

#[test]
fn sum_evaluations_report_their_row() {
    let e = cos_sum_detailed(0.5, 2.5);
    assert_eq!((e.row.alpha, e.row.beta), (Quadrant::I, Quadrant::II));
    let e = sin_sum_detailed(6.5, 0.5);
    assert!(e.swapped);
    assert_eq!((e.row.alpha, e.row.beta), (Quadrant::I, Quadrant::IV));
}

// =============================================================================
// TRIANGLES
// =============================================================================

proptest! {
    #[test]
    fn angles_sum_to_four(t in triangle()) {
        prop_assert!((angle_sum(&t).t() - 4.0).abs() <= 1e-9);
        let m = measure(&t);
        for a in m.angles {
            prop_assert!(a.t() > 0.0 && a.t() < 4.0);
        }
        for s in m.sides {
            prop_assert!(s.value() > 0.0);
        }
    }

    #[test]
    fn measure_is_translation_invariant(t in triangle(), dx in coord(), dy in coord()) {
        let moved = t.translate(Vector::new(dx, dy).unwrap());
        let (a, b) = (measure(&t), measure(&moved));
        for i in 0..3 {
            prop_assert!((a.sides[i].value() - b.sides[i].value()).abs() <= EPSILON);
            prop_assert!((a.angles[i].t() - b.angles[i].t()).abs() <= EPSILON);
        }
    }

    #[test]
    fn report_implications(t1 in triangle(), t2 in triangle()) {
        for (x, y) in [(t1, t2), (t1, t1), (t1, t1.translate(Vector::new(1.5, -2.0).unwrap()))] {
            let r = classify_congruence(&x, &y);
            if r.get(Condition::Sasas) {
                prop_assert!(r.get(Condition::Sss));
                prop_assert!(r.get(Condition::Asasa));
            }
            if r.get(Condition::Sssa) {
                prop_assert!(r.get(Condition::Sss));
            }
        }
    }
}

#[test]
fn congruence_is_an_equivalence() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let tol = EPSILON / 2.0;
    // a few base shapes, each with translated and relabeled copies
    let mut sample = Vec::new();
    for _ in 0..6 {
        let base = loop {
            let c: [f64; 6] = std::array::from_fn(|_| rng.gen_range(-20.0..20.0));
            if let Ok(t) = Triangle::from_coords(c) {
                break t;
            }
        };
        let [a, b, c] = base.vertices();
        sample.push(base);
        sample.push(Triangle::new(c, a, b).unwrap());
        sample.push(
            base.translate(
                Vector::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)).unwrap(),
            ),
        );
    }
    for x in &sample {
        assert!(is_congruent_with_tolerance(x, x, tol));
        for y in &sample {
            let xy = is_congruent_with_tolerance(x, y, tol);
            assert_eq!(xy, is_congruent_with_tolerance(y, x, tol));
            for z in &sample {
                if xy && is_congruent_with_tolerance(y, z, tol) {
                    assert!(
                        classify_congruence_with_tolerance(x, z, 2.0 * tol).get(Condition::Sasas)
                    );
                }
            }
        }
    }
}

// =============================================================================
// PARALLAX
// =============================================================================

fn scene() -> impl Strategy<Value = (ParallaxScene, EuclideanAngle)> {
    (
        point(),
        1.0..50.0f64,
        1.0..50.0f64,
        any::<(bool, bool)>(),
        0.01..0.95f64,
        -0.6..0.6f64,
    )
        .prop_filter_map("valid scene", |(a, dx, dy, (fx, fy), step_frac, turn)| {
            let dx = if fx { -dx } else { dx };
            let dy = if fy { -dy } else { dy };
            let q = Point::new(a.x() + dx, a.y() + dy).ok()?;
            let reference = EuclideanAngle::new(dy.atan2(dx) + turn);
            let step = TaxicabLength::new(step_frac * 2.0 * dx.abs().min(dy.abs())).ok()?;
            let scene = ParallaxScene::with_chosen_direction(a, q, step, reference).ok()?;
            Some((scene, reference))
        })
}

proptest! {
    #[test]
    fn taxicab_parallax_is_exact((scene, reference) in scene()) {
        let m = simulate_observation(&scene, reference).unwrap();
        let d = taxicab_parallax_distance(&m).unwrap().value();
        let truth = taxicab_distance(scene.observer, scene.object).value();
        prop_assert!((d - truth).abs() <= 1e-9 * truth.max(1.0), "{} vs {}", d, truth);
    }

    #[test]
    fn diagonal_step_keeps_distance((scene, _) in scene()) {
        let before = taxicab_distance(scene.observer, scene.object).value();
        let after = taxicab_distance(scene.second_position(), scene.object).value();
        prop_assert!((before - after).abs() <= 1e-12 * before.max(1.0));
    }

    #[test]
    fn link_reproduces_taxicab_formula((scene, reference) in scene()) {
        let m = simulate_euclidean_observation(&scene, reference).unwrap();
        let d_e = euclidean_distance(scene.observer, scene.object);
        let exact = euclidean_parallax_exact(&m).unwrap().value();
        prop_assert!((exact - d_e.value()).abs() <= 1e-9 * d_e.value().max(1.0));
        let link = link_taxicab_euclidean(&m, d_e).unwrap();
        prop_assert!((link.d.value() * link.parallax.t() - link.s.value()).abs() <= 1e-9);
        prop_assert!((link.d.value() - taxicab_distance(scene.observer, scene.object).value()).abs() <= 1e-9);
        prop_assert!((link.s.value() - scene.step.value()).abs() <= 1e-12);
    }
}

#[test]
fn dyadic_scene_keeps_distance_bit_for_bit() {
    let a = Point::new(1.25, -3.5).unwrap();
    let q = Point::new(-4.0, 2.75).unwrap();
    for dir in taxicab::parallax::distance_preserving_directions(a, q).unwrap() {
        let scene = ParallaxScene::new(a, q, TaxicabLength::new(0.5).unwrap(), dir);
        assert_eq!(
            taxicab_distance(scene.second_position(), q),
            taxicab_distance(a, q)
        );
    }
}

#[test]
fn approximation_error_shrinks_with_step() {
    use taxicab::parallax::simulate_perpendicular_observation;
    let a = Point::new(-2.0, 1.0).unwrap();
    let q = Point::new(5.0, 9.0).unwrap();
    let truth = euclidean_distance(a, q).value();
    let reference = EuclideanAngle::new((q - a).atan2() - 0.2);
    let mut last = f64::INFINITY;
    for k in 0..10 {
        let step = 2.0 / 2f64.powi(k);
        let m = simulate_perpendicular_observation(
            a,
            q,
            EuclideanLength::new(step).unwrap(),
            reference,
        )
        .unwrap();
        let error = (euclidean_parallax_approx(m.s_e, m.alpha_e, m.beta_e)
            .unwrap()
            .value()
            - truth)
            .abs();
        assert!(
            error > 0.0 && error < last,
            "step {step}: {error} vs {last}"
        );
        last = error;
    }
}
