//! Static figures: the unit taxicab circle and the graphs of sin_t and cos_t.

use std::fmt::Write;

use taxicab::{cos_t, point_on_taxicab_circle, sin_t, Point, TaxicabLength};

use crate::report::{fmt_num, Record, Report};

/// Samples per t-radian for the trig graphs and the circle outline.
const STEPS_PER_UNIT: usize = 100;
const GRAPH_END: usize = 16;

fn circle_point(theta: f64) -> Point {
    let unit = TaxicabLength::new(1.0).expect("positive radius");
    point_on_taxicab_circle(Point::ORIGIN, unit, theta.into())
}

pub fn unit_circle_svg(precision: usize) -> String {
    let n = |x: f64| fmt_num(x, precision);
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.5 -1.5 3 3\" width=\"480\" height=\"480\">\n",
    );
    s.push_str("<title>The taxicab unit circle</title>\n");
    s.push_str("<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.01\">\n");
    s.push_str("<line x1=\"-1.4\" y1=\"0\" x2=\"1.4\" y2=\"0\" stroke=\"gray\"/>\n");
    s.push_str("<line x1=\"0\" y1=\"-1.4\" x2=\"0\" y2=\"1.4\" stroke=\"gray\"/>\n");
    s.push_str("<polygon id=\"unit-circle\" points=\"1,0 0,1 -1,0 0,-1\" stroke=\"black\"/>\n");
    for k in 0..8 {
        let p = circle_point(k as f64);
        let (x, y) = (p.x(), p.y());
        let _ = writeln!(
            s,
            "<line class=\"tick\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
            n(x * 0.94),
            n(y * 0.94),
            n(x * 1.06),
            n(y * 1.06)
        );
    }
    s.push_str("</g>\n");
    for k in 0..8 {
        let p = circle_point(k as f64);
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-size=\"0.1\" text-anchor=\"middle\" dominant-baseline=\"middle\">{k}t</text>",
            n(p.x() * 1.2),
            n(-p.y() * 1.2)
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn unit_circle_table() -> Report {
    let records = (0..8 * STEPS_PER_UNIT)
        .map(|i| {
            let theta = i as f64 / STEPS_PER_UNIT as f64;
            let p = circle_point(theta);
            Record::new()
                .with("theta", theta)
                .with("x", p.x())
                .with("y", p.y())
        })
        .collect();
    Report { records }
}

fn graph_samples() -> impl Iterator<Item = f64> {
    (0..=GRAPH_END * STEPS_PER_UNIT).map(|i| i as f64 / STEPS_PER_UNIT as f64)
}

pub fn trig_graphs_table() -> Report {
    let records = graph_samples()
        .map(|theta| {
            Record::new()
                .with("theta", theta)
                .with("cos", cos_t(theta))
                .with("sin", sin_t(theta))
        })
        .collect();
    Report { records }
}

pub fn trig_graphs_svg(precision: usize) -> String {
    let polyline = |f: fn(f64) -> f64| -> String {
        graph_samples()
            .map(|t| format!("{},{}", fmt_num(t, precision), fmt_num(f(t), precision)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 -1.5 17 3\" width=\"1020\" height=\"180\">\n",
    );
    s.push_str("<title>Taxicab sine and cosine</title>\n");
    s.push_str("<g transform=\"scale(1,-1)\" fill=\"none\">\n");
    s.push_str(
        "<line x1=\"0\" y1=\"0\" x2=\"16\" y2=\"0\" stroke=\"gray\" stroke-width=\"0.01\"/>\n",
    );
    s.push_str(
        "<line x1=\"0\" y1=\"-1.2\" x2=\"0\" y2=\"1.2\" stroke=\"gray\" stroke-width=\"0.01\"/>\n",
    );
    let _ = writeln!(
        s,
        "<polyline id=\"cos_t\" stroke=\"blue\" stroke-width=\"0.03\" points=\"{}\"/>",
        polyline(cos_t)
    );
    let _ = writeln!(
        s,
        "<polyline id=\"sin_t\" stroke=\"red\" stroke-width=\"0.03\" points=\"{}\"/>",
        polyline(sin_t)
    );
    s.push_str("</g>\n");
    s.push_str("<text x=\"0.1\" y=\"-1.1\" font-size=\"0.25\" fill=\"blue\">cos_t</text>\n");
    s.push_str("<text x=\"1.1\" y=\"-1.1\" font-size=\"0.25\" fill=\"red\">sin_t</text>\n");
    s.push_str("</svg>\n");
    s
}
