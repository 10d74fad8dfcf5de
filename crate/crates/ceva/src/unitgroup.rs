//! The unit-interval group (𝕀, ◇) with 𝕀 = [0, 1).
//!
//! The factor group (ℝ ∪ {∞})/𝕊 is realized on 𝕀 through the projection `p`,
//! which picks the unique representative of the coset 𝕊□ρ inside 𝕀.  Direct
//! similarity of Ceva's triangles depends on a parameter only through its
//! image under `p`, so similarity bookkeeping happens in this group.

use crate::error::CevaError;
use crate::extgroup::ExtReal;

/// An element of 𝕀 = [0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitParam(f64);

impl UnitParam {
    pub const ZERO: UnitParam = UnitParam(0.0);
    pub const HALF: UnitParam = UnitParam(0.5);

    /// Validating constructor; rejects values outside [0, 1).
    pub fn new(value: f64) -> Result<UnitParam, CevaError> {
        if value.is_finite() && (0.0..1.0).contains(&value) {
            Ok(UnitParam(value + 0.0)) // normalize -0.0
        } else {
            Err(CevaError::UnitOutOfRange { value })
        }
    }

    /// Constructor for internally computed values: results that round to 1
    /// are clamped to the largest float below 1, and negative zeros are
    /// normalized, so the half-open invariant survives floating error.
    pub(crate) fn from_computed(value: f64) -> UnitParam {
        debug_assert!(value.is_finite() && value > -1e-9 && value < 1.0 + 1e-9);
        if value <= 0.0 {
            UnitParam(0.0)
        } else if value >= 1.0 {
            UnitParam(1.0_f64.next_down())
        } else {
            UnitParam(value)
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn to_ext(self) -> ExtReal {
        ExtReal::Finite(self.0)
    }

    /// The group operation ρ◇τ = p(ρ□τ) on 𝕀, evaluated by the two-branch
    /// rational formula (branch chosen by ρ + τ < 1).
    pub fn diamond(self, rhs: UnitParam) -> UnitParam {
        let (r, t) = (self.0, rhs.0);
        let prod = r * t;
        let sum = r + t;
        let v = if sum < 1.0 {
            (sum - prod) / (1.0 - prod)
        } else {
            (sum - 1.0) / (sum - prod)
        };
        UnitParam::from_computed(v)
    }

    /// The ◇-inverse: 1 − ρ for ρ > 0, and 0 for the identity itself.
    pub fn diamond_inv(self) -> UnitParam {
        if self.0 == 0.0 {
            UnitParam::ZERO
        } else {
            UnitParam(1.0 - self.0)
        }
    }
}

/// The projection p: ℝ ∪ {∞} → 𝕀 selecting the 𝕀-representative of 𝕊□ρ.
///
/// A group homomorphism onto (𝕀, ◇): p(ρ□τ) = p(ρ)◇p(τ).
pub fn project(rho: ExtReal) -> UnitParam {
    match rho {
        // 1□∞ = 1 − 1/1 = 0
        ExtReal::Infinity => UnitParam::ZERO,
        ExtReal::Finite(r) if r < 0.0 => UnitParam::from_computed(1.0 / (1.0 - r)),
        ExtReal::Finite(r) if r < 1.0 => UnitParam::from_computed(r),
        ExtReal::Finite(r) => UnitParam::from_computed(1.0 - 1.0 / r),
    }
}

/// Both solutions of ξ◇ξ = κ in 𝕀, ordered: (√κ, ½◇√κ) with
/// 0 ≤ √κ < 1/2 ≤ ½◇√κ < 1.
pub fn diamond_sqrt_pair(kappa: UnitParam) -> (UnitParam, UnitParam) {
    let s1 = match kappa.to_ext().box_sqrt() {
        ExtReal::Finite(v) => UnitParam::from_computed(v),
        ExtReal::Infinity => unreachable!("box_sqrt of a finite value is finite"),
    };
    let s2 = UnitParam::HALF.diamond(s1);
    (s1, s2)
}

/// The translation F_κ(ξ) = κ◇ξ, a bijection on 𝕀 with inverse F_{κ^◇}.
pub fn f_translation(kappa: UnitParam, xi: UnitParam) -> UnitParam {
    kappa.diamond(xi)
}

/// The involution G_κ(ξ) = κ◇ξ^◇. Its fixed points are the two ◇-square
/// roots of κ, and it swaps the interior of [√κ, ½◇√κ] with its exterior.
pub fn g_involution(kappa: UnitParam, xi: UnitParam) -> UnitParam {
    kappa.diamond(xi.diamond_inv())
}
