//! Two-sided volume bounds for equiangular polyhedra from combinatorial data.
//!
//! Every candidate term is recorded in [`BoundInterval::terms`] under a
//! descriptive tag, so a catalog entry shows which estimate won.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::andreev::{self, RealizabilityReport};
use crate::combinatorics::{self, CombinatoricsError};
use crate::lobachevsky::{v3, v8, HyperbolicVolume};
use crate::polyhedron::{AbstractPolyhedron, AngleKind};

/// Absolute tolerance when comparing a bound with a user-supplied volume cap.
/// Caps are usually typed as rounded decimals (`3.66386` for V₈), so values
/// this close to the cap count as equal to it.
pub const CAP_SLACK: f64 = 5e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("polyhedron fails the realizability conditions: {0}")]
    NotRealizable(String),
    #[error("polyhedron has {0} finite vertices; use the compact or mixed bounds")]
    HasFiniteVertices(usize),
    #[error("polyhedron has {0} ideal vertices; use the ideal or mixed bounds")]
    HasIdealVertices(usize),
    #[error("mixed bounds need both ideal and finite vertices (N_inf = {n_inf}, N_F = {n_f})")]
    WrongDispatch { n_inf: usize, n_f: usize },
    #[error("area formula is negative: {0}")]
    NegativeArea(f64),
    #[error("vertex and face counts disagree: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Coloring(#[from] CombinatoricsError),
    #[error("unknown case {0:?}; expected ideal_pi2, compact_pi2 or ideal_pi3")]
    UnknownKind(String),
    #[error("volume cap must be finite and non-negative, got {0}")]
    InvalidVolume(f64),
}

/// A hyperbolic area.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
pub struct AreaQuantity(f64);

impl AreaQuantity {
    pub fn new(value: f64) -> Result<Self, BoundsError> {
        if value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(BoundsError::NegativeArea(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Area of the white faces of a four-valent ideal polyhedron: 2π(N − |W|).
pub fn white_area(n: usize, w: usize) -> Result<AreaQuantity, BoundsError> {
    AreaQuantity::new(2.0 * PI * (n as f64 - w as f64))
}

/// Area of the boundary of the truncated orbifold: π(8N_∞ + 3N_F − 4F)/2.
pub fn boundary_area(n_inf: usize, n_f: usize, f: usize) -> Result<AreaQuantity, BoundsError> {
    let k = 8 * n_inf as i64 + 3 * n_f as i64 - 4 * f as i64;
    AreaQuantity::new(PI * k as f64 / 2.0)
}

/// Area(∂)·V₈/(4π).
pub fn miyamoto_lower(area: AreaQuantity) -> HyperbolicVolume {
    nonnegative(area.value() * v8() / (4.0 * PI))
}

fn nonnegative(raw: f64) -> HyperbolicVolume {
    HyperbolicVolume::from_formula(raw).unwrap_or_else(|_| HyperbolicVolume::clamped_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundTerm {
    pub tag: &'static str,
    pub side: Side,
    pub value: f64,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundInterval {
    pub lower: HyperbolicVolume,
    pub lower_strict: bool,
    pub upper: HyperbolicVolume,
    pub upper_strict: bool,
    pub terms: Vec<BoundTerm>,
}

impl BoundInterval {
    pub fn term(&self, tag: &str) -> Option<&BoundTerm> {
        self.terms.iter().find(|t| t.tag == tag)
    }

    fn from_terms(terms: Vec<(&'static str, Side, f64, bool)>) -> Self {
        let mut recorded = Vec::new();
        let mut lower: Option<(HyperbolicVolume, bool)> = None;
        let mut upper: Option<(HyperbolicVolume, bool)> = None;
        for (tag, side, raw, strict) in terms {
            let vol = nonnegative(raw);
            recorded.push(BoundTerm { tag, side, value: vol.value(), strict });
            let slot = match side {
                Side::Lower => &mut lower,
                Side::Upper => &mut upper,
            };
            let better = match *slot {
                None => true,
                Some((cur, cur_strict)) => {
                    let (a, b) = (vol.value(), cur.value());
                    let tie = (a - b).abs() <= 1e-12 * a.abs().max(1.0);
                    let wins = match side {
                        Side::Lower => a > b,
                        Side::Upper => a < b,
                    };
                    (wins && !tie) || (tie && strict && !cur_strict)
                }
            };
            if better {
                *slot = Some((vol, strict));
            }
        }
        let (lower, lower_strict) = lower.expect("at least one lower term");
        let (upper, upper_strict) = upper.expect("at least one upper term");
        Self { lower, lower_strict, upper, upper_strict, terms: recorded }
    }
}

fn require_realizable(report: &RealizabilityReport) -> Result<(), BoundsError> {
    if report.realizable {
        Ok(())
    } else {
        let failed: Vec<&str> = report.failed_conditions().iter().map(|c| c.as_str()).collect();
        Err(BoundsError::NotRealizable(failed.join(",")))
    }
}

/// Bounds for a right-angled polyhedron with only ideal vertices.
pub fn bounds_ideal_pi2(p: &AbstractPolyhedron) -> Result<BoundInterval, BoundsError> {
    ideal_pi2_with(p, &andreev::check_pi2(p))
}

fn ideal_pi2_with(p: &AbstractPolyhedron, report: &RealizabilityReport) -> Result<BoundInterval, BoundsError> {
    require_realizable(report)?;
    if report.counts.n_finite > 0 {
        return Err(BoundsError::HasFiniteVertices(report.counts.n_finite));
    }
    let coloring = combinatorics::two_color_faces(p)?;
    let n = p.vertex_count() as f64;
    let w = coloring.white.len();
    let v8 = v8();
    Ok(BoundInterval::from_terms(vec![
        ("vertex_count_ideal", Side::Lower, (n - 2.0) * v8 / 4.0, false),
        ("white_face_area", Side::Lower, miyamoto_lower(white_area(p.vertex_count(), w)?).value(), false),
        ("black_face_area", Side::Lower, (w as f64 - 2.0) * v8 / 2.0, false),
        ("octahedral_cells_upper", Side::Upper, (n - 4.0) * v8 / 2.0, false),
    ]))
}

/// Bounds for a compact right-angled polyhedron.
pub fn bounds_compact_pi2(p: &AbstractPolyhedron) -> Result<BoundInterval, BoundsError> {
    compact_pi2_with(p, &andreev::check_pi2(p))
}

fn compact_pi2_with(p: &AbstractPolyhedron, report: &RealizabilityReport) -> Result<BoundInterval, BoundsError> {
    require_realizable(report)?;
    if report.counts.n_ideal > 0 {
        return Err(BoundsError::HasIdealVertices(report.counts.n_ideal));
    }
    let n = p.vertex_count() as i64;
    let f = p.face_count() as i64;
    if n - 8 != 3 * n - 4 * f {
        return Err(BoundsError::Inconsistent(format!("N − 8 = {} but 3N − 4F = {}", n - 8, 3 * n - 4 * f)));
    }
    Ok(BoundInterval::from_terms(vec![
        ("compact_lower", Side::Lower, (n - 8) as f64 * v8() / 32.0, false),
        ("compact_upper", Side::Upper, (n - 10) as f64 * 5.0 * v3() / 8.0, true),
    ]))
}

/// Bounds for a right-angled polyhedron with both ideal and finite vertices.
pub fn bounds_mixed_pi2(p: &AbstractPolyhedron) -> Result<BoundInterval, BoundsError> {
    mixed_pi2_with(p, &andreev::check_pi2(p))
}

fn mixed_pi2_with(p: &AbstractPolyhedron, report: &RealizabilityReport) -> Result<BoundInterval, BoundsError> {
    require_realizable(report)?;
    let (n_inf, n_f) = (report.counts.n_ideal, report.counts.n_finite);
    if n_inf == 0 || n_f == 0 {
        return Err(BoundsError::WrongDispatch { n_inf, n_f });
    }
    let (ni, nf, f) = (n_inf as i64, n_f as i64, p.face_count() as i64);
    let short = 4 * ni + nf - 8;
    let long = 8 * ni + 3 * nf - 4 * f;
    if short != long {
        return Err(BoundsError::Inconsistent(format!("4N_inf + N_F − 8 = {short} but 8N_inf + 3N_F − 4F = {long}")));
    }
    let v8 = v8();
    Ok(BoundInterval::from_terms(vec![
        ("mixed_lower", Side::Lower, short as f64 * v8 / 32.0, false),
        ("mixed_boundary_area", Side::Lower, long as f64 * v8 / 32.0, false),
        ("mixed_upper", Side::Upper, (ni - 1) as f64 * v8 / 2.0 + nf as f64 * 5.0 * v3() / 8.0, true),
    ]))
}

/// Bounds for a π/3-equiangular polyhedron (all vertices ideal).
pub fn bounds_ideal_pi3(p: &AbstractPolyhedron) -> Result<BoundInterval, BoundsError> {
    ideal_pi3_with(p, &andreev::check_pi3(p))
}

fn ideal_pi3_with(p: &AbstractPolyhedron, report: &RealizabilityReport) -> Result<BoundInterval, BoundsError> {
    require_realizable(report)?;
    let v3 = v3();
    let n = p.vertex_count();
    if n == 4 {
        return Ok(BoundInterval::from_terms(vec![
            ("regular_ideal_tetrahedron", Side::Lower, v3, false),
            ("regular_ideal_tetrahedron", Side::Upper, v3, false),
        ]));
    }
    let independent = combinatorics::max_independent_set(&p.skeleton());
    let nf = n as f64;
    Ok(BoundInterval::from_terms(vec![
        ("horoball_packing", Side::Lower, nf * v3 / 3.0, true),
        ("independent_set_tetrahedra", Side::Lower, independent.len() as f64 * v3, false),
        ("cubic_independence_ratio", Side::Lower, (3 * n).div_ceil(8) as f64 * v3, false),
        ("tetrahedral_upper", Side::Upper, (3.0 * nf - 14.0) * v3 / 2.0, false),
    ]))
}

/// Picks the bound family matching the angle kind and vertex classes.
pub fn bounds_for(p: &AbstractPolyhedron, kind: AngleKind) -> Result<BoundInterval, BoundsError> {
    bounds_from_report(p, &andreev::check(p, kind))
}

/// As [`bounds_for`], reusing an existing realizability report.
pub fn bounds_from_report(p: &AbstractPolyhedron, report: &RealizabilityReport) -> Result<BoundInterval, BoundsError> {
    match report.kind {
        AngleKind::Pi3 => ideal_pi3_with(p, report),
        AngleKind::Pi2 => match (report.counts.n_ideal, report.counts.n_finite) {
            (_, 0) => ideal_pi2_with(p, report),
            (0, _) => compact_pi2_with(p, report),
            _ => mixed_pi2_with(p, report),
        },
    }
}

/// The three cases with a universal lower bound in terms of N alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VolumeCase {
    IdealPi2,
    CompactPi2,
    IdealPi3,
}

impl VolumeCase {
    pub fn as_str(self) -> &'static str {
        match self {
            VolumeCase::IdealPi2 => "ideal_pi2",
            VolumeCase::CompactPi2 => "compact_pi2",
            VolumeCase::IdealPi3 => "ideal_pi3",
        }
    }

    /// Lower-bound terms valid for every realizable polyhedron of this case
    /// with `n` vertices, as `(value, strict)`.
    pub fn universal_lower_terms(self, n: usize) -> Vec<(f64, bool)> {
        let nf = n as f64;
        match self {
            VolumeCase::IdealPi2 => vec![((nf - 2.0) * v8() / 4.0, false)],
            VolumeCase::CompactPi2 => vec![((nf - 8.0) * v8() / 32.0, false)],
            VolumeCase::IdealPi3 if n == 4 => vec![(v3(), false)],
            VolumeCase::IdealPi3 => vec![
                (nf * v3() / 3.0, true),
                ((3 * n).div_ceil(8) as f64 * v3(), false),
            ],
        }
    }
}

impl fmt::Display for VolumeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for VolumeCase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for VolumeCase {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ideal_pi2" => Ok(VolumeCase::IdealPi2),
            "compact_pi2" => Ok(VolumeCase::CompactPi2),
            "ideal_pi3" => Ok(VolumeCase::IdealPi3),
            other => Err(BoundsError::UnknownKind(other.to_string())),
        }
    }
}

/// Whether a lower bound `bound` (strict or not) still allows a volume of at
/// most `cap`. Values within [`CAP_SLACK`] of the cap count as equal.
pub fn admits(bound: f64, strict: bool, cap: f64) -> bool {
    if (bound - cap).abs() <= CAP_SLACK {
        !strict
    } else {
        bound < cap
    }
}

/// Largest vertex count whose universal lower bound allows volume ≤ `cap`.
pub fn max_vertices_for_volume(cap: f64, case: VolumeCase) -> Result<usize, BoundsError> {
    if !(cap.is_finite() && cap >= 0.0) {
        return Err(BoundsError::InvalidVolume(cap));
    }
    let admitted = |n: usize| case.universal_lower_terms(n).iter().all(|&(b, s)| admits(b, s, cap));
    // every lower bound grows at least like N·V₈/32 ≥ N/10
    let limit = 10 * (cap.ceil() as usize + 2) + 16;
    Ok((0..=limit).filter(|&n| admitted(n)).max().unwrap_or(0))
}
