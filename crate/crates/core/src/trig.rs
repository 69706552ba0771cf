//! Taxicab sine and cosine.
//!
//! `(cos_t θ, sin_t θ)` is the point at arc position θ on the unit taxicab
//! circle, so both functions are piecewise linear with period 8 and
//! `|sin_t θ| + |cos_t θ| = 1`.
//!
//! The sum formulas only take two shapes each; which one applies depends on
//! the quadrants of the two operands. Those quadrant pairs are kept as data
//! ([`COS_SUM_TABLE`], [`SIN_SUM_TABLE`]) and the evaluators dispatch on them.

use std::fmt;

use crate::angle::TaxicabAngle;

/// Quarter of the unit taxicab circle an angle falls in.
///
/// Boundary angles belong to the quadrant that starts there: 0 is in I,
/// 2 in II, 4 in III, 6 in IV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The quadrant that ends where this one starts.
    pub fn previous(self) -> Quadrant {
        Self::ALL[(self.index() + 3) % 4]
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Quadrant::I => "I",
            Quadrant::II => "II",
            Quadrant::III => "III",
            Quadrant::IV => "IV",
        };
        f.write_str(s)
    }
}

/// A point on the unit taxicab circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigPair {
    pub cos: f64,
    pub sin: f64,
}

impl TrigPair {
    pub fn of(theta: impl Into<TaxicabAngle>) -> Self {
        let theta = theta.into();
        Self {
            cos: cos_t(theta),
            sin: sin_t(theta),
        }
    }
}

pub fn cos_t(theta: impl Into<TaxicabAngle>) -> f64 {
    let t = theta.into().normalize().t();
    if t < 4.0 {
        1.0 - 0.5 * t
    } else {
        -3.0 + 0.5 * t
    }
}

pub fn sin_t(theta: impl Into<TaxicabAngle>) -> f64 {
    let t = theta.into().normalize().t();
    if t < 2.0 {
        0.5 * t
    } else if t < 6.0 {
        2.0 - 0.5 * t
    } else {
        -4.0 + 0.5 * t
    }
}

pub fn quadrant_of(theta: impl Into<TaxicabAngle>) -> Quadrant {
    let t = theta.into().normalize().t();
    // t < 8, so the index is at most 3
    Quadrant::ALL[((t / 2.0).floor() as usize).min(3)]
}

/// The two shapes a sum formula can take. For the cosine table the operands
/// are `(cos_t α, cos_t β)`; for the sine table `(sin_t α, cos_t β)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumForm {
    /// `-1 + |a + b|`
    MinusOnePlusAbsSum,
    /// `1 - |a - b|`
    OneMinusAbsDiff,
}

impl SumForm {
    fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            SumForm::MinusOnePlusAbsSum => -1.0 + (a + b).abs(),
            SumForm::OneMinusAbsDiff => 1.0 - (a - b).abs(),
        }
    }
}

/// One row of a sum-formula table: operand quadrants and the form to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumRow {
    pub alpha: Quadrant,
    pub beta: Quadrant,
    pub form: SumForm,
}

const fn row(alpha: Quadrant, beta: Quadrant, form: SumForm) -> SumRow {
    SumRow { alpha, beta, form }
}

use Quadrant::{I, II, III, IV};
use SumForm::{MinusOnePlusAbsSum as PLUS, OneMinusAbsDiff as MINUS};

/// Forms of `cos_t(α + β)`. Both forms are symmetric in α and β, so a row
/// applies to its operands in either order.
pub const COS_SUM_TABLE: [SumRow; 10] = [
    row(I, I, PLUS),
    row(II, II, PLUS),
    row(III, III, PLUS),
    row(IV, IV, PLUS),
    row(I, II, PLUS),
    row(III, IV, PLUS),
    row(I, III, MINUS),
    row(I, IV, MINUS),
    row(II, III, MINUS),
    row(II, IV, MINUS),
];

/// Forms of `sin_t(α + β)`. Rows are order-sensitive: the sine form mixes
/// `sin_t α` with `cos_t β`. Pairs not listed are evaluated with the
/// operands exchanged.
pub const SIN_SUM_TABLE: [SumRow; 10] = [
    row(I, III, PLUS),
    row(I, IV, PLUS),
    row(II, II, PLUS),
    row(IV, IV, PLUS),
    row(I, I, MINUS),
    row(I, II, MINUS),
    row(II, III, MINUS),
    row(II, IV, MINUS),
    row(III, III, MINUS),
    row(III, IV, MINUS),
];

/// Which table row produced a sum, and the value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumEvaluation {
    pub value: f64,
    /// Index into the table the value came from.
    pub row_index: usize,
    pub row: SumRow,
    /// Whether α and β were exchanged to find the row.
    pub swapped: bool,
}

impl SumEvaluation {
    /// Human-readable form with the operands actually used, e.g. `1−|cosα−cosβ|`.
    pub fn formula(&self, kind: SumKind) -> String {
        let (a, b) = if self.swapped {
            ("β", "α")
        } else {
            ("α", "β")
        };
        let first = match kind {
            SumKind::Cos => "cos",
            SumKind::Sin => "sin",
        };
        match self.row.form {
            SumForm::MinusOnePlusAbsSum => format!("−1+|{first}{a}+cos{b}|"),
            SumForm::OneMinusAbsDiff => format!("1−|{first}{a}−cos{b}|"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    Cos,
    Sin,
}

/// Evaluate `cos_t(α + β)` using the row for an explicit quadrant
/// classification of the operands. Returns `None` if the table has no row
/// for that pair (cannot happen for the cosine table, which covers all pairs
/// up to order).
pub fn cos_sum_in(
    qa: Quadrant,
    qb: Quadrant,
    alpha: impl Into<TaxicabAngle>,
    beta: impl Into<TaxicabAngle>,
) -> Option<SumEvaluation> {
    let (alpha, beta) = (alpha.into(), beta.into());
    let (row_index, row) = COS_SUM_TABLE
        .iter()
        .enumerate()
        .find(|(_, r)| (r.alpha, r.beta) == (qa, qb) || (r.alpha, r.beta) == (qb, qa))?;
    Some(SumEvaluation {
        value: row.form.apply(cos_t(alpha), cos_t(beta)),
        row_index,
        row: *row,
        swapped: false,
    })
}

/// Evaluate `sin_t(α + β)` using the row for an explicit quadrant
/// classification, exchanging the operands if only `(qb, qa)` is listed.
pub fn sin_sum_in(
    qa: Quadrant,
    qb: Quadrant,
    alpha: impl Into<TaxicabAngle>,
    beta: impl Into<TaxicabAngle>,
) -> Option<SumEvaluation> {
    let (alpha, beta) = (alpha.into(), beta.into());
    let lookup = |x: Quadrant, y: Quadrant| {
        SIN_SUM_TABLE
            .iter()
            .enumerate()
            .find(|(_, r)| (r.alpha, r.beta) == (x, y))
    };
    if let Some((row_index, row)) = lookup(qa, qb) {
        return Some(SumEvaluation {
            value: row.form.apply(sin_t(alpha), cos_t(beta)),
            row_index,
            row: *row,
            swapped: false,
        });
    }
    let (row_index, row) = lookup(qb, qa)?;
    Some(SumEvaluation {
        value: row.form.apply(sin_t(beta), cos_t(alpha)),
        row_index,
        row: *row,
        swapped: true,
    })
}

pub fn cos_sum_detailed(
    alpha: impl Into<TaxicabAngle>,
    beta: impl Into<TaxicabAngle>,
) -> SumEvaluation {
    let (alpha, beta) = (alpha.into().normalize(), beta.into().normalize());
    cos_sum_in(quadrant_of(alpha), quadrant_of(beta), alpha, beta)
        .expect("cosine table covers every quadrant pair")
}

pub fn sin_sum_detailed(
    alpha: impl Into<TaxicabAngle>,
    beta: impl Into<TaxicabAngle>,
) -> SumEvaluation {
    let (alpha, beta) = (alpha.into().normalize(), beta.into().normalize());
    sin_sum_in(quadrant_of(alpha), quadrant_of(beta), alpha, beta)
        .expect("sine table covers every quadrant pair up to order")
}

/// `cos_t(α + β)` via the quadrant table.
pub fn cos_sum(alpha: impl Into<TaxicabAngle>, beta: impl Into<TaxicabAngle>) -> f64 {
    cos_sum_detailed(alpha, beta).value
}

/// `sin_t(α + β)` via the quadrant table.
pub fn sin_sum(alpha: impl Into<TaxicabAngle>, beta: impl Into<TaxicabAngle>) -> f64 {
    sin_sum_detailed(alpha, beta).value
}

/// `cos_t(2α) = -1 + 2|cos_t α|`
pub fn cos_double(alpha: impl Into<TaxicabAngle>) -> f64 {
    -1.0 + 2.0 * cos_t(alpha).abs()
}

/// `sin_t(2α) = -1 + 2|cos_t(α - 1)|`
pub fn sin_double(alpha: impl Into<TaxicabAngle>) -> f64 {
    let alpha = alpha.into();
    -1.0 + 2.0 * cos_t(alpha.t() - 1.0).abs()
}
