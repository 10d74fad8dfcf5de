//! Oriented triangles as counterclockwise side-length triples.
//!
//! Validity is the cone criterion: (a, b, c) are the sides of a triangle
//! exactly when the squared-side vector [a² b² c²]ᵀ lies inside the cone
//! x² + y² + z² < 2(xy + yz + zx) of the first octant.  The angle γ between
//! that vector and the diagonal [1 1 1]ᵀ — the cone angle — determines the
//! Brocard angle ω through 3 tan²ω + 2 tan²γ = 1, and together with the
//! isosceles parameter μ forms a complete direct-similarity invariant.

use num_complex::Complex64;

use crate::error::CevaError;
use crate::extgroup::ExtReal;
use crate::unitgroup::{self, UnitParam};

/// Relative tolerance for detecting equal squared sides in classification.
pub const CLASSIFY_EPS: f64 = 1e-9;

/// An oriented triangle given by its counterclockwise side lengths
/// (a, b, c) = (BC, CA, AB).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a: f64,
    b: f64,
    c: f64,
}

/// The squared-side vector t = [a² b² c²]ᵀ, or any vector tested against
/// the cone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquaredVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Orientation classes of an oriented triangle.
///
/// A scalene triple is increasing or decreasing according to which cyclic
/// relabeling of (a, b, c) is monotone; isosceles triangles are wide or
/// narrow according to whether the base is longer or shorter than the legs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleClass {
    Equilateral,
    Wide,
    Narrow,
    Increasing,
    Decreasing,
}

/// Coarse orientation: wide triangles behave like increasing ones under the
/// cevian family, narrow like decreasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Increasing,
    Decreasing,
}

/// The pair (γ, μ): a complete invariant for direct similarity.
/// By convention μ = 1 exactly when the triangle is equilateral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeDescriptor {
    /// Cone angle in [0, arctan(1/√2)).
    pub gamma: f64,
    /// Wide-isosceles parameter in [0, 1), or 1.0 for equilateral.
    pub mu: f64,
}

impl ShapeDescriptor {
    pub fn approx_eq(&self, other: &ShapeDescriptor, eps: f64) -> bool {
        (self.gamma - other.gamma).abs() <= eps && (self.mu - other.mu).abs() <= eps
    }
}

fn rel_eq(u: f64, v: f64, eps: f64) -> bool {
    (u - v).abs() <= eps * u.abs().max(v.abs())
}

impl SquaredVector {
    pub fn new(x: f64, y: f64, z: f64) -> SquaredVector {
        SquaredVector { x, y, z }
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Dot product with r = −(1/√3)[1 1 1]ᵀ.
    pub fn dot_r(&self) -> f64 {
        -(self.x + self.y + self.z) / 3.0_f64.sqrt()
    }

    /// Strict cone membership: positive components and
    /// x² + y² + z² < 2(xy + yz + zx).
    pub fn in_cone(&self) -> bool {
        let (x, y, z) = (self.x, self.y, self.z);
        x > 0.0
            && y > 0.0
            && z > 0.0
            && x * x + y * y + z * z < 2.0 * (x * y + y * z + z * x)
    }

    /// Whether the vector is (numerically) a multiple of [1 1 1]ᵀ.
    pub fn is_isotropic(&self) -> bool {
        rel_eq(self.x, self.y, 1e-12) && rel_eq(self.y, self.z, 1e-12) && rel_eq(self.x, self.z, 1e-12)
    }

    /// Side lengths of the triangle this vector encodes, if it is in the cone.
    pub fn to_triangle(&self) -> Result<Triangle, CevaError> {
        Triangle::new(self.x.sqrt(), self.y.sqrt(), self.z.sqrt())
    }
}

impl Triangle {
    /// Validates a side triple.
    ///
    /// Both the linear form |a−b| < c < a+b and the quartic cone inequality
    /// a⁴+b⁴+c⁴ < 2(a²b²+b²c²+c²a²) are evaluated; they are algebraically
    /// equivalent and must agree. Borderline triples where floating point
    /// makes them disagree are rejected as degenerate.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Triangle, CevaError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite() && a > 0.0 && b > 0.0 && c > 0.0) {
            return Err(CevaError::NonPositiveSide { a, b, c });
        }
        let linear_ok = (a - b).abs() < c && c < a + b;
        let (x, y, z) = (a * a, b * b, c * c);
        let quartic_ok = x * x + y * y + z * z < 2.0 * (x * y + y * z + z * x);
        match (linear_ok, quartic_ok) {
            (true, true) => Ok(Triangle { a, b, c }),
            (false, false) => Err(CevaError::DegenerateOrImpossible {
                a,
                b,
                c,
                inequality: format!("|a-b| < c < a+b (|{a}-{b}| vs {c} vs {}) ", a + b),
            }),
            // The two forms disagree only within rounding of the degenerate
            // boundary; treat as degenerate and report the quartic form.
            _ => Err(CevaError::DegenerateOrImpossible {
                a,
                b,
                c,
                inequality: format!(
                    "a^4+b^4+c^4 < 2(a^2b^2+b^2c^2+c^2a^2) ({} vs {})",
                    x * x + y * y + z * z,
                    2.0 * (x * y + y * z + z * x)
                ),
            }),
        }
    }

    /// Constructor for sides produced by the cevian formulas, whose outputs
    /// are inside the cone by construction.
    pub(crate) fn new_unchecked(a: f64, b: f64, c: f64) -> Triangle {
        debug_assert!(a > 0.0 && b > 0.0 && c > 0.0, "cevian sides must be positive");
        Triangle { a, b, c }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// The squared-side vector t = [a² b² c²]ᵀ.
    pub fn squared(&self) -> SquaredVector {
        SquaredVector::new(self.a * self.a, self.b * self.b, self.c * self.c)
    }

    /// Uniform scaling by l > 0.
    pub fn scaled(&self, l: f64) -> Triangle {
        assert!(l > 0.0 && l.is_finite());
        Triangle { a: l * self.a, b: l * self.b, c: l * self.c }
    }

    /// The reversely congruent triangle (c, b, a).
    pub fn reversed(&self) -> Triangle {
        Triangle { a: self.c, b: self.b, c: self.a }
    }

    /// Cyclic relabeling (b, c, a); the same oriented triangle read from the
    /// next vertex.
    pub fn rotated(&self) -> Triangle {
        Triangle { a: self.b, b: self.c, c: self.a }
    }

    /// Classifies into equilateral / wide / narrow / increasing / decreasing.
    ///
    /// Comparisons run on squared sides with relative tolerance
    /// [`CLASSIFY_EPS`], since every downstream formula consumes squares.
    pub fn classify(&self) -> TriangleClass {
        let SquaredVector { x, y, z } = self.squared();
        let ab = rel_eq(x, y, CLASSIFY_EPS);
        let bc = rel_eq(y, z, CLASSIFY_EPS);
        let ca = rel_eq(z, x, CLASSIFY_EPS);
        match (ab, bc, ca) {
            (true, true, _) | (true, _, true) | (_, true, true) => TriangleClass::Equilateral,
            (true, false, false) => {
                // legs a = b, base c
                if z > x {
                    TriangleClass::Wide
                } else {
                    TriangleClass::Narrow
                }
            }
            (false, true, false) => {
                // legs b = c, base a
                if x > y {
                    TriangleClass::Wide
                } else {
                    TriangleClass::Narrow
                }
            }
            (false, false, true) => {
                // legs c = a, base b
                if y > x {
                    TriangleClass::Wide
                } else {
                    TriangleClass::Narrow
                }
            }
            (false, false, false) => {
                // scalene: one cyclic relabeling is monotone
                let increasing = (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
                if increasing {
                    TriangleClass::Increasing
                } else {
                    TriangleClass::Decreasing
                }
            }
        }
    }

    /// Wide/increasing vs narrow/decreasing; errors on equilateral input.
    pub fn orientation(&self) -> Result<Orientation, CevaError> {
        match self.classify() {
            TriangleClass::Equilateral => Err(CevaError::EquilateralInput),
            TriangleClass::Wide | TriangleClass::Increasing => Ok(Orientation::Increasing),
            TriangleClass::Narrow | TriangleClass::Decreasing => Ok(Orientation::Decreasing),
        }
    }

    /// The cone angle γ ∈ [0, arctan(1/√2)): the angle between
    /// [a² b² c²]ᵀ and [1 1 1]ᵀ.
    pub fn cone_angle(&self) -> f64 {
        let SquaredVector { x, y, z } = self.squared();
        let quart = x * x + y * y + z * z;
        let cos = ((x + y + z) / (3.0 * quart).sqrt()).clamp(-1.0, 1.0);
        cos.acos()
    }

    /// The Brocard angle ω ∈ (0, π/6], from
    /// tan²ω = (2 − k)/(k + 2) with k = (a⁴+b⁴+c⁴)/(a²b²+b²c²+c²a²).
    pub fn brocard_angle(&self) -> f64 {
        let SquaredVector { x, y, z } = self.squared();
        let k = (x * x + y * y + z * z) / (x * y + y * z + z * x);
        // 1 ≤ k < 2 inside the cone; clamp shields the equilateral boundary
        let tan_sq = ((2.0 - k) / (k + 2.0)).max(0.0);
        tan_sq.sqrt().atan()
    }

    /// The fixed-triangle parameter ϰ_T = (a²−b²)/(a²−c²), or ∞ when a² = c².
    ///
    /// C_{ϰ_T}(T) is directly similar to T. The value is taken on the stored
    /// labeling, so it is not a similarity invariant by itself; its projection
    /// p(ϰ_T) is.
    pub fn kappa(&self) -> ExtReal {
        let SquaredVector { x, y, z } = self.squared();
        if x == z {
            ExtReal::Infinity
        } else {
            ExtReal::finite((x - y) / (x - z))
        }
    }

    /// The unique parameters (μ, ν) in 𝕀 for which C_μ(T) is wide and
    /// C_ν(T) is narrow. Errors on equilateral input.
    pub fn mu_nu(&self) -> Result<(UnitParam, UnitParam), CevaError> {
        let (s1, s2) = unitgroup::diamond_sqrt_pair(unitgroup::project(self.kappa()));
        match self.classify() {
            TriangleClass::Equilateral => Err(CevaError::EquilateralInput),
            TriangleClass::Wide => Ok((UnitParam::ZERO, UnitParam::HALF)),
            TriangleClass::Narrow => Ok((UnitParam::HALF, UnitParam::ZERO)),
            TriangleClass::Increasing => Ok((s1, s2)),
            TriangleClass::Decreasing => Ok((s2, s1)),
        }
    }

    /// The endpoints of the fundamental interval
    /// 𝕄_T = [min(μ,ν), max(μ,ν)] = [√p(ϰ), ½◇√p(ϰ)].
    pub fn fundamental_interval(&self) -> Result<(UnitParam, UnitParam), CevaError> {
        if self.classify() == TriangleClass::Equilateral {
            return Err(CevaError::EquilateralInput);
        }
        Ok(unitgroup::diamond_sqrt_pair(unitgroup::project(self.kappa())))
    }

    /// Hajja's complex shape value
    /// σ(T) = (a² + e^{−2πi/3} b² + e^{2πi/3} c²)/(a² + b² + c²),
    /// with |σ(T)| = tan(γ)/√2.
    pub fn hajja_sigma(&self) -> Complex64 {
        let SquaredVector { x, y, z } = self.squared();
        let w = Complex64::new(-0.5, 0.75_f64.sqrt()); // e^{2πi/3}
        let num = Complex64::new(x, 0.0) + w.conj() * y + w * z;
        num / (x + y + z)
    }

    /// The complete direct-similarity invariant (γ, μ); μ = 1 for equilateral.
    pub fn shape_descriptor(&self) -> ShapeDescriptor {
        let gamma = self.cone_angle();
        let mu = match self.mu_nu() {
            Ok((mu, _)) => mu.value(),
            Err(_) => 1.0,
        };
        ShapeDescriptor { gamma, mu }
    }
}

/// The closed form for μ_T in terms of the sides (canonical counterclockwise
/// labeling a ≤ b < c or a ≥ b > c). An independent route to the same value
/// as [`Triangle::mu_nu`]; used to cross-check it.
pub fn mu_closed_form(t: &Triangle) -> Result<f64, CevaError> {
    if t.classify() == TriangleClass::Equilateral {
        return Err(CevaError::EquilateralInput);
    }
    // find the cyclic relabeling with a ≤ b < c or a ≥ b > c
    let mut canon = *t;
    for _ in 0..3 {
        let [a, b, c] = canon.sides();
        if (a <= b && b < c) || (a >= b && b > c) {
            let (x, y, z) = (a * a, b * b, c * c);
            let disc = 0.5 * ((x - y).powi(2) + (y - z).powi(2) + (z - x).powi(2));
            let root = disc.sqrt();
            let mu = if a <= b && b < c {
                (y - x) / (z - x + root)
            } else {
                (x - z) / (y - z + root)
            };
            return Ok(mu);
        }
        canon = canon.rotated();
    }
    Err(CevaError::VerificationFailed {
        detail: format!("no canonical labeling found for {:?}", t.sides()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    fn tri(a: f64, b: f64, c: f64) -> Triangle {
        Triangle::new(a, b, c).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Triangle::new(8.0, 9.0, 12.0).is_ok());
        assert!(Triangle::new(3.0, 4.0, 5.0).is_ok());
        assert!(matches!(
            Triangle::new(1.0, 1.0, 3.0),
            Err(CevaError::DegenerateOrImpossible { .. })
        ));
        assert!(matches!(
            Triangle::new(1.0, 1.0, 2.0),
            Err(CevaError::DegenerateOrImpossible { .. })
        ));
        assert!(matches!(
            Triangle::new(0.0, 1.0, 1.0),
            Err(CevaError::NonPositiveSide { .. })
        ));
        assert!(matches!(
            Triangle::new(1.0, f64::NAN, 1.0),
            Err(CevaError::NonPositiveSide { .. })
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(tri(8.0, 9.0, 12.0).classify(), TriangleClass::Increasing);
        assert_eq!(tri(12.0, 9.0, 8.0).classify(), TriangleClass::Decreasing);
        assert_eq!(tri(5.0, 5.0, 8.0).classify(), TriangleClass::Wide);
        assert_eq!(tri(5.0, 3.0, 5.0).classify(), TriangleClass::Narrow);
        assert_eq!(tri(1.0, 1.0, 1.0).classify(), TriangleClass::Equilateral);
        // cyclic relabeling preserves the class
        assert_eq!(tri(9.0, 12.0, 8.0).classify(), TriangleClass::Increasing);
        assert_eq!(tri(8.0, 5.0, 5.0).classify(), TriangleClass::Wide);
    }

    #[test]
    fn cone_angle_values() {
        assert!(tri(1.0, 1.0, 1.0).cone_angle() < 1e-7);
        let g = tri(1.0, 1.0, 2.0_f64.sqrt()).cone_angle();
        assert!((g - (2.0_f64.sqrt() / 4.0).atan()).abs() < EPS);
        let g = tri(8.0, 9.0, 12.0).cone_angle();
        let expect = ((10658.0_f64 / 83521.0).sqrt()).atan();
        assert!((g - expect).abs() < EPS);
        // always below the aperture
        assert!(g < (1.0 / 2.0_f64.sqrt()).atan());
    }

    #[test]
    fn brocard_angle_values() {
        assert!((tri(1.0, 1.0, 1.0).brocard_angle() - std::f64::consts::FRAC_PI_6).abs() < EPS);
        let w = tri(1.0, 1.0, 2.0_f64.sqrt()).brocard_angle();
        assert!((w - 0.5_f64.atan()).abs() < EPS);
        let w = tri(8.0, 9.0, 12.0).brocard_angle();
        let expect = (20735.0_f64.sqrt() / 289.0).atan();
        assert!((w - expect).abs() < EPS);
        // 3·20735 + 2·10658 = 83521 pins the identity for this fixture
        assert_eq!(3 * 20735 + 2 * 10658, 83521);
    }

    #[test]
    fn brocard_cone_identity() {
        for t in [tri(8.0, 9.0, 12.0), tri(3.0, 4.0, 5.0), tri(5.0, 5.0, 8.0), tri(7.0, 13.0, 17.0)] {
            let w = t.brocard_angle().tan();
            let g = t.cone_angle().tan();
            assert!((3.0 * w * w + 2.0 * g * g - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn kappa_values() {
        assert_eq!(tri(8.0, 9.0, 12.0).kappa(), ExtReal::finite(17.0 / 80.0));
        assert_eq!(tri(5.0, 3.0, 5.0).kappa(), ExtReal::Infinity);
        assert_eq!(tri(7.0, 13.0, 17.0).kappa(), ExtReal::finite(0.5));
    }

    #[test]
    fn kappa_scale_invariant() {
        let t = tri(8.0, 9.0, 12.0);
        for l in [0.25, 3.0, 17.5] {
            let k1 = t.kappa().as_finite().unwrap();
            let k2 = t.scaled(l).kappa().as_finite().unwrap();
            assert!((k1 - k2).abs() < EPS);
        }
    }

    #[test]
    fn mu_nu_fixture() {
        let (mu, nu) = tri(8.0, 9.0, 12.0).mu_nu().unwrap();
        assert!((mu.value() - 1.0 / 9.0).abs() < EPS);
        assert!((nu.value() - 10.0 / 17.0).abs() < EPS);

        let (mu, nu) = tri(5.0, 5.0, 8.0).mu_nu().unwrap();
        assert_eq!((mu.value(), nu.value()), (0.0, 0.5));

        let (mu, nu) = tri(5.0, 3.0, 5.0).mu_nu().unwrap();
        assert_eq!((mu.value(), nu.value()), (0.5, 0.0));

        // reversal complements the parameters: μ' = 1 − μ, ν' = 1 − ν
        let (mu_d, nu_d) = tri(12.0, 9.0, 8.0).mu_nu().unwrap();
        let (mu_i, nu_i) = tri(8.0, 9.0, 12.0).mu_nu().unwrap();
        assert!((mu_d.value() - (1.0 - mu_i.value())).abs() < EPS);
        assert!((nu_d.value() - (1.0 - nu_i.value())).abs() < EPS);

        assert!(tri(1.0, 1.0, 1.0).mu_nu().is_err());
    }

    #[test]
    fn mu_nu_brackets_kappa() {
        // increasing: μ < ϰ < ν; decreasing: ν < ϰ < μ
        let t = tri(8.0, 9.0, 12.0);
        let (mu, nu) = t.mu_nu().unwrap();
        let k = t.kappa().as_finite().unwrap();
        assert!(mu.value() < k && k < nu.value());
        let t = tri(12.0, 9.0, 8.0);
        let (mu, nu) = t.mu_nu().unwrap();
        let k = unitgroup::project(t.kappa()).value();
        assert!(nu.value() < k && k < mu.value());
    }

    #[test]
    fn closed_form_agrees_with_group_route() {
        for t in [
            tri(8.0, 9.0, 12.0),
            tri(12.0, 9.0, 8.0),
            tri(9.0, 12.0, 8.0),
            tri(5.0, 5.0, 8.0),
            tri(5.0, 3.0, 5.0),
            tri(3.0, 4.0, 5.0),
            tri(7.0, 13.0, 17.0),
        ] {
            let (mu, _) = t.mu_nu().unwrap();
            let closed = mu_closed_form(&t).unwrap();
            assert!(
                (mu.value() - closed).abs() < 1e-9,
                "{:?}: group {} vs closed {}",
                t.sides(),
                mu.value(),
                closed
            );
        }
    }

    #[test]
    fn fundamental_interval_fixture() {
        let (lo, hi) = tri(8.0, 9.0, 12.0).fundamental_interval().unwrap();
        assert!((lo.value() - 1.0 / 9.0).abs() < EPS);
        assert!((hi.value() - 10.0 / 17.0).abs() < EPS);
        let (lo, hi) = tri(5.0, 5.0, 8.0).fundamental_interval().unwrap();
        assert_eq!((lo.value(), hi.value()), (0.0, 0.5));
        // automedian: p(ϰ) = 1/2, endpoints are the ◇-roots of 1/2
        let (lo, hi) = tri(7.0, 13.0, 17.0).fundamental_interval().unwrap();
        assert!((lo.diamond(lo).value() - 0.5).abs() < EPS);
        assert!((hi.diamond(hi).value() - 0.5).abs() < EPS);
        // 1/2 interior for scalene
        assert!(lo.value() < 0.5 && 0.5 < hi.value());
    }

    #[test]
    fn hajja_sigma_values() {
        let s = tri(1.0, 1.0, 1.0).hajja_sigma();
        assert!(s.norm() < 1e-15);
        for t in [tri(8.0, 9.0, 12.0), tri(3.0, 4.0, 5.0)] {
            let s = t.hajja_sigma();
            assert!((s.norm() - t.cone_angle().tan() / 2.0_f64.sqrt()).abs() < EPS);
            // similarity-invariant
            let s2 = t.scaled(3.5).hajja_sigma();
            assert!((s - s2).norm() < EPS);
        }
    }

    #[test]
    fn shape_descriptor_values() {
        let d = tri(1.0, 1.0, 1.0).shape_descriptor();
        assert_eq!(d.mu, 1.0);
        assert!(d.gamma < 1e-7);

        let d1 = tri(8.0, 9.0, 12.0).shape_descriptor();
        assert!((d1.mu - 1.0 / 9.0).abs() < EPS);
        let d2 = tri(16.0, 18.0, 24.0).shape_descriptor();
        assert!(d1.approx_eq(&d2, 1e-12));
        // reversal changes the descriptor (reverse similarity, not direct)
        let d3 = tri(12.0, 9.0, 8.0).shape_descriptor();
        assert!(!d1.approx_eq(&d3, 1e-6));
    }

    #[test]
    fn cone_membership() {
        assert!(tri(8.0, 9.0, 12.0).squared().in_cone());
        assert!(!SquaredVector::new(1.0, 1.0, 9.0).in_cone());
        assert!(SquaredVector::new(2.0, 2.0, 2.0).is_isotropic());
        assert!(!tri(8.0, 9.0, 12.0).squared().is_isotropic());
    }
}
