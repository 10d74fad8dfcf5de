//! The extended real line ℝ ∪ {∞} with the commutative group operation □.
//!
//! The bijection Φ maps angles in [−π/3, 2π/3) onto ℝ ∪ {∞} and conjugates
//! addition of angles modulo π into the rational operation □.  Composition of
//! cevian reflection matrices is governed by this group, so everything else in
//! the crate sits on top of this module.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::CevaError;

/// Lower endpoint of the angle domain, −π/3. Attained (maps to ∞ under Φ).
pub const ANGLE_MIN: f64 = -FRAC_PI_3;
/// Upper endpoint of the angle domain, 2π/3. Excluded.
pub const ANGLE_MAX: f64 = 2.0 * FRAC_PI_3;

/// An element of ℝ ∪ {∞}.
///
/// `Infinity` is a symbolic value, never a large float. Finite values are
/// always finite floats; operations that hit a pole exactly (for example
/// ρ□τ with ρτ = 1) return `Infinity` instead of overflowing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    Infinity,
}

impl ExtReal {
    /// Wraps a finite float.
    ///
    /// Panics if `value` is NaN or a machine infinity; those must never leak
    /// into the `Finite` variant.
    pub fn finite(value: f64) -> Self {
        assert!(value.is_finite(), "ExtReal::finite({value}) is not finite");
        ExtReal::Finite(value)
    }

    pub const ZERO: ExtReal = ExtReal::Finite(0.0);
    pub const ONE: ExtReal = ExtReal::Finite(1.0);

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtReal::Infinity)
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(v) => Some(v),
            ExtReal::Infinity => None,
        }
    }

    /// The norm ⟨ρ⟩ = √(1 − ρ + ρ²), with ⟨∞⟩ = 1.
    ///
    /// Always positive: the quadratic 1 − ρ + ρ² has negative discriminant.
    pub fn norm(self) -> f64 {
        match self {
            ExtReal::Finite(r) => r.mul_add(r - 1.0, 1.0).sqrt(),
            ExtReal::Infinity => 1.0,
        }
    }

    /// The group operation ρ□τ, conjugate to angle addition mod π under Φ.
    ///
    /// Infinity is produced only when the pole ρτ = 1 is hit exactly in
    /// floating point; near-singular products yield large finite values.
    /// Commutative, with identity 0.
    pub fn box_op(self, rhs: ExtReal) -> ExtReal {
        use ExtReal::*;
        match (self, rhs) {
            (Finite(r), Finite(t)) => {
                let prod = r * t;
                if prod == 1.0 {
                    Infinity
                } else {
                    ExtReal::finite((r + t - prod) / (1.0 - prod))
                }
            }
            (Finite(r), Infinity) | (Infinity, Finite(r)) => {
                if r == 0.0 {
                    Infinity
                } else {
                    ExtReal::finite(1.0 - 1.0 / r)
                }
            }
            (Infinity, Infinity) => ExtReal::finite(1.0),
        }
    }

    /// The □-inverse: ρ/(ρ−1) for finite ρ ≠ 1, with 1^□ = ∞ and ∞^□ = 1.
    pub fn box_inv(self) -> ExtReal {
        match self {
            ExtReal::Infinity => ExtReal::finite(1.0),
            ExtReal::Finite(r) => {
                if r == 1.0 {
                    ExtReal::Infinity
                } else {
                    ExtReal::finite(r / (r - 1.0))
                }
            }
        }
    }

    /// The unique solution of ξ□ξ = κ in [−1, 1): κ/(1 + ⟨κ⟩), with √∞ = −1.
    ///
    /// The full solution set of ξ□ξ = κ is {√κ, √κ□2}.
    pub fn box_sqrt(self) -> ExtReal {
        match self {
            ExtReal::Finite(k) => ExtReal::finite(k / (1.0 + self.norm())),
            ExtReal::Infinity => ExtReal::finite(-1.0),
        }
    }

    /// The angle Φ⁻¹(ρ) ∈ [−π/3, 2π/3), with Φ⁻¹(∞) = −π/3.
    pub fn phi_inv(self) -> Angle {
        match self {
            ExtReal::Infinity => Angle(ANGLE_MIN),
            ExtReal::Finite(r) => {
                let sqrt3 = 3.0_f64.sqrt();
                Angle(((2.0 / sqrt3) * (r - 0.5)).atan() + FRAC_PI_6)
            }
        }
    }

    /// Compares two elements through Φ⁻¹, measuring distance on the circle of
    /// circumference π. Values near a pole of □ are numerically huge yet
    /// angularly close; this metric absorbs that.
    pub fn approx_eq(self, other: ExtReal, eps: f64) -> bool {
        let d = (self.phi_inv().radians() - other.phi_inv().radians()).abs();
        d.min(PI - d) <= eps
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(v) => write!(f, "{v}"),
            ExtReal::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtReal {
    type Err = CevaError;

    /// Accepts the literal `inf` (any case) or a finite decimal number.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(ExtReal::Infinity);
        }
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(ExtReal::Finite(v)),
            _ => Err(CevaError::ParseExtReal { input: s.to_owned() }),
        }
    }
}

/// An angle in the half-open interval [−π/3, 2π/3), the domain of Φ.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    /// Validating constructor; rejects angles outside [−π/3, 2π/3).
    pub fn new(theta: f64) -> Result<Angle, CevaError> {
        if theta.is_finite() && (ANGLE_MIN..ANGLE_MAX).contains(&theta) {
            Ok(Angle(theta))
        } else {
            Err(CevaError::AngleOutOfRange { theta })
        }
    }

    /// Reduces an arbitrary angle modulo π into [−π/3, 2π/3).
    pub fn wrapped(theta: f64) -> Angle {
        let mut t = (theta - ANGLE_MIN).rem_euclid(PI) + ANGLE_MIN;
        // rem_euclid can round up to the modulus itself.
        if t >= ANGLE_MAX {
            t -= PI;
        }
        if t < ANGLE_MIN {
            t = ANGLE_MIN;
        }
        Angle(t)
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Addition modulo π, normalized back into [−π/3, 2π/3).
    pub fn add_mod_pi(self, rhs: Angle) -> Angle {
        Angle::wrapped(self.0 + rhs.0)
    }
}

/// Φ: [−π/3, 2π/3) → ℝ ∪ {∞}; the boundary −π/3 maps to ∞, the rest to
/// sin ϑ / cos(ϑ − π/6). Strictly increasing on the open interval.
pub fn phi(theta: Angle) -> ExtReal {
    let t = theta.radians();
    if t == ANGLE_MIN {
        ExtReal::Infinity
    } else {
        ExtReal::finite(t.sin() / (t - FRAC_PI_6).cos())
    }
}

/// The order-3 subgroup 𝕊 = {0, 1, ∞}: the coset structure of direct similarity.
pub const SUBGROUP_S: [ExtReal; 3] = [ExtReal::Finite(0.0), ExtReal::Finite(1.0), ExtReal::Infinity];

/// The order-6 subgroup 𝕋 = {0, 1/2, 1, 2, ∞, −1}.
pub const SUBGROUP_T: [ExtReal; 6] = [
    ExtReal::Finite(0.0),
    ExtReal::Finite(0.5),
    ExtReal::Finite(1.0),
    ExtReal::Finite(2.0),
    ExtReal::Infinity,
    ExtReal::Finite(-1.0),
];
