//! The Lobachevsky function and the closed-form hyperbolic volumes built
//! from it.
//!
//! Λ(θ) = −∫₀^θ log|2 sin t| dt is odd and π-periodic, and equals half the
//! Clausen function Cl₂(2θ). Arguments are reduced to `[0, π/2]` first, then
//! one of two expansions is summed:
//!
//! * near 0: `Cl₂(x) = x (1 − ln x + Σ ζ(2k)/(k(2k+1)) (x/2π)^{2k})`,
//!   used for `x ≤ π/2`, where the ratio of successive terms is at most 1/16;
//! * near π: `Cl₂(π − z) = z (ln 2 − Σ (1 − 4^{−k}) ζ(2k)/(k(2k+1)) (z/π)^{2k})`,
//!   used for `z = π − x ≤ π/2`, ratio at most 1/4.
//!
//! Both series have positive decreasing terms with geometric tails, so
//! stopping once a term drops below `1e-17` keeps the truncation error under
//! `1e-16`. The second form makes `Λ(π/2) = 0` exact.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

/// Low-order part of π for two-step range reduction.
const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

/// Negative volumes above this are treated as rounding noise.
pub const CLAMP_TOLERANCE: f64 = 1e-12;

const ZETA_TERMS: usize = 64;
const SERIES_CUTOFF: f64 = 1e-17;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VolumeError {
    #[error("angle {value} is outside the admissible range {range}")]
    AngleOutOfRange { value: f64, range: &'static str },
    #[error("sin²α·sin²γ − cos²β = {delta} > 0: not a hyperbolic orthoscheme")]
    NotAnOrthoscheme { delta: f64 },
    #[error("angle sum {c} is outside [0, {max}]")]
    ConstraintOutOfRange { c: f64, max: f64 },
    #[error("vertex count must be positive")]
    ZeroCount,
    #[error("formula produced a negative volume {0}")]
    NegativeVolume(f64),
}

/// An angle in radians.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
pub struct Angle(f64);

impl Angle {
    pub const fn new(radians: f64) -> Self {
        Angle(radians)
    }

    /// `π / d`.
    pub fn pi_over(d: f64) -> Self {
        Angle(PI / d)
    }

    pub const fn radians(self) -> f64 {
        self.0
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Angle(radians)
    }
}

/// A hyperbolic volume. `clamped` records that the formula returned a tiny
/// negative value which was replaced by zero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HyperbolicVolume {
    value: f64,
    clamped: bool,
}

impl HyperbolicVolume {
    pub fn value(self) -> f64 {
        self.value
    }

    pub fn was_clamped(self) -> bool {
        self.clamped
    }

    pub(crate) fn clamped_zero() -> Self {
        Self { value: 0.0, clamped: true }
    }

    pub(crate) fn from_formula(raw: f64) -> Result<Self, VolumeError> {
        if raw >= 0.0 {
            Ok(Self { value: raw, clamped: false })
        } else if raw > -CLAMP_TOLERANCE {
            Ok(Self { value: 0.0, clamped: true })
        } else {
            Err(VolumeError::NegativeVolume(raw))
        }
    }
}

fn zeta_even() -> &'static [f64; ZETA_TERMS + 1] {
    static TABLE: OnceLock<[f64; ZETA_TERMS + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // table[k] = ζ(2k); table[0] unused
        let mut table = [0.0; ZETA_TERMS + 1];
        table[1] = PI.powi(2) / 6.0;
        table[2] = PI.powi(4) / 90.0;
        table[3] = PI.powi(6) / 945.0;
        for (k, slot) in table.iter_mut().enumerate().skip(4) {
            let s = 2 * k as i32;
            // tail beyond n = 1000 is below 1000^{1−2k} < 1e-21
            *slot = (1..=1000).rev().map(|n| (n as f64).powi(-s)).sum();
        }
        table
    })
}

/// Cl₂(x) for `x ∈ [0, π]`.
fn clausen_reduced(x: f64) -> f64 {
    let zeta = zeta_even();
    if x <= FRAC_PI_2 {
        if x == 0.0 {
            return 0.0;
        }
        let r2 = (x / (2.0 * PI)).powi(2);
        let mut power = 1.0;
        let mut sum = 0.0;
        for (k, &zk) in zeta.iter().enumerate().take(ZETA_TERMS + 1).skip(1) {
            power *= r2;
            let kf = k as f64;
            let term = zk * power / (kf * (2.0 * kf + 1.0));
            sum += term;
            if term < SERIES_CUTOFF {
                break;
            }
        }
        x * (1.0 - x.ln() + sum)
    } else {
        let z = (PI - x).max(0.0);
        let r2 = (z / PI).powi(2);
        let mut power = 1.0;
        let mut quarter = 1.0;
        let mut sum = 0.0;
        for (k, &zk) in zeta.iter().enumerate().take(ZETA_TERMS + 1).skip(1) {
            power *= r2;
            quarter *= 0.25;
            let kf = k as f64;
            let term = (1.0 - quarter) * zk * power / (kf * (2.0 * kf + 1.0));
            sum += term;
            if term < SERIES_CUTOFF {
                break;
            }
        }
        z * (LN_2 - sum)
    }
}

/// Reduces θ modulo π into `[−π/2, π/2]`.
fn reduce(theta: f64) -> f64 {
    let k = (theta / PI).round();
    (theta - k * PI) - k * PI_LO
}

/// Λ(θ) = −∫₀^θ log|2 sin t| dt for any finite θ. Non-finite input gives NaN.
pub fn lobachevsky(theta: Angle) -> f64 {
    let t = theta.radians();
    if !t.is_finite() {
        return f64::NAN;
    }
    let r = reduce(t);
    let value = 0.5 * clausen_reduced(2.0 * r.abs());
    if r < 0.0 {
        -value
    } else {
        value
    }
}

fn lob(t: f64) -> f64 {
    lobachevsky(Angle(t))
}

/// Volume of the regular ideal octahedron, 8Λ(π/4).
pub fn constant_v8() -> HyperbolicVolume {
    static V8: OnceLock<f64> = OnceLock::new();
    let value = *V8.get_or_init(|| 8.0 * lob(PI / 4.0));
    HyperbolicVolume { value, clamped: false }
}

/// Volume of the regular ideal tetrahedron, 2Λ(π/6).
pub fn constant_v3() -> HyperbolicVolume {
    static V3: OnceLock<f64> = OnceLock::new();
    let value = *V3.get_or_init(|| 2.0 * lob(PI / 6.0));
    HyperbolicVolume { value, clamped: false }
}

/// `constant_v8().value()`.
pub fn v8() -> f64 {
    constant_v8().value()
}

/// `constant_v3().value()`.
pub fn v3() -> f64 {
    constant_v3().value()
}

fn check_closed(a: Angle, lo: f64, hi: f64, range: &'static str) -> Result<f64, VolumeError> {
    let t = a.radians();
    if t.is_finite() && t >= lo && t <= hi {
        Ok(t)
    } else {
        Err(VolumeError::AngleOutOfRange { value: t, range })
    }
}

fn check_open_right(a: Angle) -> Result<f64, VolumeError> {
    let t = a.radians();
    if t.is_finite() && t > 0.0 && t < FRAC_PI_2 {
        Ok(t)
    } else {
        Err(VolumeError::AngleOutOfRange { value: t, range: "(0, π/2)" })
    }
}

/// Volume of the cone to an ideal point over an ideal polygon whose side
/// faces meet the base at the given angles: Σ Λ(αᵢ).
pub fn cone_on_ideal_polygon(angles: &[Angle]) -> Result<HyperbolicVolume, VolumeError> {
    let mut total = 0.0;
    for &a in angles {
        total += lob(check_closed(a, 0.0, FRAC_PI_2, "[0, π/2]")?);
    }
    HyperbolicVolume::from_formula(total)
}

/// Tetrahedron with two ideal vertices whose ideal edge has dihedral angle
/// α, three right angles, and two angles π/2 − α: Λ(π/2 − α)/2.
pub fn two_ideal_vertex_tet_volume(alpha: Angle) -> Result<HyperbolicVolume, VolumeError> {
    let a = check_closed(alpha, 0.0, FRAC_PI_2, "[0, π/2]")?;
    HyperbolicVolume::from_formula(0.5 * lob(FRAC_PI_2 - a))
}

/// Orthoscheme with essential dihedral angles α, β, γ along its chain of
/// faces (the other three are right angles).
pub fn orthoscheme_volume(
    alpha: Angle,
    beta: Angle,
    gamma: Angle,
) -> Result<HyperbolicVolume, VolumeError> {
    let a = check_open_right(alpha)?;
    let b = check_open_right(beta)?;
    let g = check_open_right(gamma)?;
    let mut delta_gram = (a.sin() * g.sin()).powi(2) - b.cos().powi(2);
    if delta_gram > 0.0 {
        if delta_gram > 4.0 * f64::EPSILON {
            return Err(VolumeError::NotAnOrthoscheme { delta: delta_gram });
        }
        delta_gram = 0.0;
    }
    let d = (-delta_gram).sqrt().atan2(a.cos() * g.cos());
    let raw = 0.25
        * (lob(a + d) - lob(a - d) + lob(g + d) - lob(g - d) - lob(FRAC_PI_2 - b + d)
            + lob(FRAC_PI_2 - b - d)
            + 2.0 * lob(FRAC_PI_2 - d));
    HyperbolicVolume::from_formula(raw)
}

/// Orthoscheme T(α, π/2 − α, γ), which has an ideal vertex:
/// ¼(Λ(α+γ) + Λ(α−γ) + 2Λ(π/2−α)).
pub fn ideal_orthoscheme_volume(alpha: Angle, gamma: Angle) -> Result<HyperbolicVolume, VolumeError> {
    let a = check_open_right(alpha)?;
    let g = check_open_right(gamma)?;
    HyperbolicVolume::from_formula(0.25 * (lob(a + g) + lob(a - g) + 2.0 * lob(FRAC_PI_2 - a)))
}

/// Largest possible value of ½ Σ Λ(π/2 − αᵢ) over `m` angles in `[0, π/2]`
/// summing to `c`, attained at equal angles: (m/2)·Λ(π/2 − c/m).
pub fn vertex_volume_cap(m: u32, c: Angle) -> Result<HyperbolicVolume, VolumeError> {
    if m == 0 {
        return Err(VolumeError::ZeroCount);
    }
    let mf = f64::from(m);
    let max = mf * FRAC_PI_2;
    let total = c.radians();
    if !(total.is_finite() && total >= 0.0 && total <= max * (1.0 + f64::EPSILON)) {
        return Err(VolumeError::ConstraintOutOfRange { c: total, max });
    }
    HyperbolicVolume::from_formula(0.5 * mf * lob(FRAC_PI_2 - total / mf))
}
