//! The Ceva operator C_ρ and the similarity structure of its orbit.
//!
//! C_ρ sends a triangle to the triangle formed by its three ρ-cevians, in the
//! cyclic order that makes iteration binary: C_ρ² scales by ⟨ρ⟩². Parameters
//! compose through the □ group, direct similarity of family members is
//! governed by the coset ρ□𝕊, and the fundamental interval 𝕄_T carries every
//! shape in the family exactly once up to similarity.

use crate::error::CevaError;
use crate::extgroup::{ExtReal, SUBGROUP_T};
use crate::triangle::{Triangle, TriangleClass};
use crate::unitgroup::{self, UnitParam};

/// Relative tolerance for side-ratio comparisons in similarity tests.
pub const RATIO_EPS: f64 = 1e-9;

/// How two oriented triangles compare under similarity.
///
/// The ratio is first argument to second: `Direct(l)` for `similarity(t, v)`
/// means the sides of `t` are `l` times the matched sides of `v`. `Both` can
/// only occur when at least one of the triangles is isosceles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SimilarityRelation {
    NotSimilar,
    Direct(f64),
    Reverse(f64),
    Both(f64),
}

impl SimilarityRelation {
    pub fn is_direct(&self) -> bool {
        matches!(self, SimilarityRelation::Direct(_) | SimilarityRelation::Both(_))
    }

    pub fn is_reverse(&self) -> bool {
        matches!(self, SimilarityRelation::Reverse(_) | SimilarityRelation::Both(_))
    }

    pub fn ratio(&self) -> Option<f64> {
        match self {
            SimilarityRelation::NotSimilar => None,
            SimilarityRelation::Direct(l)
            | SimilarityRelation::Reverse(l)
            | SimilarityRelation::Both(l) => Some(*l),
        }
    }
}

/// Ceva's triangle C_ρ(T): the cevians (CC_ρ, BB_ρ, AA_ρ) as an oriented
/// side triple (x_ρ, y_ρ, z_ρ).
///
/// C_∞ is the symbolic reversal (c, b, a); finite parameters go through the
/// radical side-length formulas. The image of a valid triangle is always
/// valid (the reflection matrices map the cone into itself).
pub fn apply(t: &Triangle, rho: ExtReal) -> Triangle {
    match rho {
        ExtReal::Infinity => Triangle::new_unchecked(t.c(), t.b(), t.a()),
        ExtReal::Finite(r) => {
            let [a2, b2, c2] = t.squared().components();
            let rr = r * (r - 1.0);
            let or = 1.0 - r;
            let x2 = r * a2 + or * b2 + rr * c2;
            let y2 = or * a2 + rr * b2 + r * c2;
            let z2 = rr * a2 + r * b2 + or * c2;
            Triangle::new_unchecked(x2.sqrt(), y2.sqrt(), z2.sqrt())
        }
    }
}

/// Hajja's generalized median operator H_ρ: the same three cevians in
/// reversed order, (z_ρ, y_ρ, x_ρ). Satisfies H_ρ(H_ρ(T)) = C_{1−ρ}(C_ρ(T)),
/// which is why its iteration lacks the binary similarity of C_ρ.
pub fn apply_hajja(t: &Triangle, rho: f64) -> Triangle {
    apply(t, ExtReal::finite(rho)).reversed()
}

/// The n-fold composition C_ρⁿ(T). For even n this is the uniform scaling
/// ⟨ρ⟩ⁿ·T.
pub fn iterate(t: &Triangle, rho: ExtReal, n: u32) -> Triangle {
    let mut out = *t;
    for _ in 0..n {
        out = apply(&out, rho);
    }
    out
}

const DIRECT_PATTERNS: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
const REVERSE_PATTERNS: [[usize; 3]; 3] = [[2, 1, 0], [1, 0, 2], [0, 2, 1]];

fn match_patterns(t: &Triangle, v: &Triangle, patterns: &[[usize; 3]; 3], tol: f64) -> Option<f64> {
    let ts = t.sides();
    let vs = v.sides();
    for perm in patterns {
        let ratios = [ts[0] / vs[perm[0]], ts[1] / vs[perm[1]], ts[2] / vs[perm[2]]];
        let mean = (ratios[0] + ratios[1] + ratios[2]) / 3.0;
        if ratios.iter().all(|r| (r - mean).abs() <= tol * mean) {
            return Some(mean);
        }
    }
    None
}

/// Classifies the similarity of two oriented triangles by testing the three
/// cyclic and three anticyclic side-ratio patterns at tolerance `tol`.
pub fn similarity_with_tol(t: &Triangle, v: &Triangle, tol: f64) -> SimilarityRelation {
    let direct = match_patterns(t, v, &DIRECT_PATTERNS, tol);
    let reverse = match_patterns(t, v, &REVERSE_PATTERNS, tol);
    match (direct, reverse) {
        (Some(l), Some(_)) => SimilarityRelation::Both(l),
        (Some(l), None) => SimilarityRelation::Direct(l),
        (None, Some(l)) => SimilarityRelation::Reverse(l),
        (None, None) => SimilarityRelation::NotSimilar,
    }
}

/// [`similarity_with_tol`] at the default tolerance [`RATIO_EPS`].
pub fn similarity(t: &Triangle, v: &Triangle) -> SimilarityRelation {
    similarity_with_tol(t, v, RATIO_EPS)
}

/// Whether ρ and τ lie in the same 𝕊-coset, i.e. ρ□𝕊 = τ□𝕊. Tested in angle
/// space: Φ⁻¹ images must agree modulo π/3.
fn same_s_coset(rho: ExtReal, tau: ExtReal, eps: f64) -> bool {
    let third = std::f64::consts::FRAC_PI_3;
    let d = (rho.phi_inv().radians() - tau.phi_inv().radians()).abs() % third;
    d.min(third - d) <= eps
}

/// The relation between C_ρ(T) and C_τ(T), decided group-theoretically
/// (direct iff τ ∈ ρ□𝕊, reverse iff τ□ρ ∈ ϰ_T□𝕊, ratio ⟨ρ⟩/⟨τ⟩) and then
/// verified against a direct side comparison of the two images.
pub fn param_similarity(
    t: &Triangle,
    rho: ExtReal,
    tau: ExtReal,
) -> Result<SimilarityRelation, CevaError> {
    if t.classify() == TriangleClass::Equilateral {
        return Err(CevaError::EquilateralInput);
    }
    let eps = 1e-9;
    let kappa = t.kappa();
    let direct = same_s_coset(rho, tau, eps);
    let reverse = same_s_coset(tau.box_op(rho), kappa, eps);
    let ratio = rho.norm() / tau.norm();
    let predicted = match (direct, reverse) {
        (true, true) => SimilarityRelation::Both(ratio),
        (true, false) => SimilarityRelation::Direct(ratio),
        (false, true) => SimilarityRelation::Reverse(ratio),
        (false, false) => SimilarityRelation::NotSimilar,
    };
    let observed = similarity(&apply(t, rho), &apply(t, tau));
    let agree = match (&predicted, &observed) {
        (SimilarityRelation::NotSimilar, SimilarityRelation::NotSimilar) => true,
        (a, b) => {
            a.is_direct() == b.is_direct()
                && a.is_reverse() == b.is_reverse()
                && match (a.ratio(), b.ratio()) {
                    (Some(x), Some(y)) => (x - y).abs() <= 1e-9 * x.max(y),
                    _ => false,
                }
        }
    };
    if !agree {
        return Err(CevaError::VerificationFailed {
            detail: format!(
                "group law predicts {predicted:?} for ({rho}, {tau}) but sides give {observed:?}"
            ),
        });
    }
    Ok(predicted)
}

/// The coset ϰ_T□𝕊 = {ϰ, ϰ□1, ϰ□∞}: exactly the parameters ρ for which
/// C_ρ(T) is directly similar to T (with ratio ⟨ρ⟩).
pub fn self_similar_params(t: &Triangle) -> Result<[ExtReal; 3], CevaError> {
    if t.classify() == TriangleClass::Equilateral {
        return Err(CevaError::EquilateralInput);
    }
    let k = t.kappa();
    Ok([k, k.box_op(ExtReal::ONE), k.box_op(ExtReal::Infinity)])
}

/// Whether T is directly similar to its own median triangle, i.e.
/// 1/2 ∈ ϰ_T□𝕊.
pub fn is_automedian(t: &Triangle, eps: f64) -> bool {
    match t.classify() {
        TriangleClass::Equilateral => true,
        _ => same_s_coset(t.kappa(), ExtReal::finite(0.5), eps),
    }
}

/// The coset √ϰ_T□𝕋: exactly the parameters ρ for which C_ρ(T) is
/// isosceles. Listed in the 𝕋-order (0, 1/2, 1, 2, ∞, −1); the 𝕊-translates
/// (entries 0, 2, 4) share one wide/narrow character and the other three the
/// opposite one.
pub fn isosceles_params(t: &Triangle) -> Result<[ExtReal; 6], CevaError> {
    if t.classify() == TriangleClass::Equilateral {
        return Err(CevaError::EquilateralInput);
    }
    let s = t.kappa().box_sqrt();
    Ok(SUBGROUP_T.map(|g| s.box_op(g)))
}

/// The involution ι(ξ) = p(ϰ_T)◇ξ^◇ pairing each parameter in the
/// fundamental interval 𝕄_T with a reversely similar exterior parameter.
///
/// Returns the image together with a flag telling whether ξ actually lay in
/// 𝕄_T (the pairing statement applies only there, but the map is total).
pub fn iota(t: &Triangle, xi: UnitParam) -> Result<(UnitParam, bool), CevaError> {
    let (lo, hi) = t.fundamental_interval()?;
    let value = unitgroup::g_involution(unitgroup::project(t.kappa()), xi);
    let inside = lo.value() <= xi.value() && xi.value() <= hi.value();
    Ok((value, inside))
}

fn ensure_equal_brocard(t: &Triangle, v: &Triangle, tol: f64) -> Result<(), CevaError> {
    let (wt, wv) = (t.brocard_angle(), v.brocard_angle());
    if (wt - wv).abs() > tol {
        Err(CevaError::BrocardMismatch { omega_t: wt, omega_v: wv })
    } else {
        Ok(())
    }
}

/// For triangles with equal Brocard angles, the parameter μ_V◇μ_T for which
/// T is directly similar to C_{μ_V◇μ_T}(V).
pub fn matching_param(t: &Triangle, v: &Triangle, tol: f64) -> Result<UnitParam, CevaError> {
    ensure_equal_brocard(t, v, tol)?;
    let (mu_t, _) = t.mu_nu()?;
    let (mu_v, _) = v.mu_nu()?;
    Ok(mu_v.diamond(mu_t))
}

/// The monotonic bijection Z: 𝕄_T → 𝕄_V aligning the two fundamental
/// intervals of equal-Brocard triangles: C_{Z(ξ)}(V) is directly similar to
/// C_ξ(T) when T and V have the same orientation, reversely similar
/// otherwise.
pub fn z_map(t: &Triangle, v: &Triangle, xi: UnitParam, tol: f64) -> Result<UnitParam, CevaError> {
    ensure_equal_brocard(t, v, tol)?;
    let (lo, hi) = t.fundamental_interval()?;
    if xi.value() < lo.value() - tol || xi.value() > hi.value() + tol {
        return Err(CevaError::ParamOutsideInterval {
            value: xi.value(),
            lo: lo.value(),
            hi: hi.value(),
        });
    }
    let (mu_t, _) = t.mu_nu()?;
    let (mu_v, _) = v.mu_nu()?;
    let z = if t.orientation()? == v.orientation()? {
        mu_v.diamond(mu_t.diamond_inv()).diamond(xi)
    } else {
        mu_v.diamond(mu_t).diamond(xi.diamond_inv())
    };
    Ok(z)
}

/// Builds a triangle with the prescribed shape (γ, μ), unique up to direct
/// similarity: the μ-cevian triangle of the wide isosceles W = (1, 1, F)
/// whose base/leg ratio F realizes the cone angle γ.
///
/// `mu = 1` requests the equilateral shape (γ is then necessarily 0 and is
/// ignored).
pub fn triangle_from_shape(gamma: f64, mu: f64) -> Result<Triangle, CevaError> {
    let aperture = (1.0 / 2.0_f64.sqrt()).atan();
    if !gamma.is_finite() || !(0.0..aperture).contains(&gamma) {
        return Err(CevaError::GammaOutOfRange { gamma });
    }
    if mu == 1.0 {
        return Ok(Triangle::new(1.0, 1.0, 1.0).expect("unit equilateral is valid"));
    }
    let mu = UnitParam::new(mu)?;
    let s2 = 2.0_f64.sqrt();
    let g = gamma.tan();
    let f = ((s2 + 2.0 * g) / (s2 - g)).sqrt();
    let wide = Triangle::new(1.0, 1.0, f).expect("base/leg ratio in [1, 2) is valid");
    Ok(apply(&wide, mu.to_ext()))
}

/// The parameter ρ (in 𝕀) for which C_ρ(T) is a right triangle, when one
/// exists. A right Ceva triangle exists exactly when tan ω_T ≤ 1/2.
///
/// The construction passes through the wide member W of the family: the
/// right-cevian parameter τ of W solves x_τ² + y_τ² = z_τ² with the legs
/// of W scaled to 1, and is transported back to T through the composition
/// law. The result is verified on the actual side triple.
pub fn right_ceva_param(t: &Triangle) -> Result<Option<ExtReal>, CevaError> {
    if t.classify() == TriangleClass::Equilateral {
        return Err(CevaError::EquilateralInput);
    }
    let tan_w = t.brocard_angle().tan();
    if tan_w > 0.5 + 1e-12 {
        return Ok(None);
    }
    let g = t.cone_angle().tan();
    let s2 = 2.0_f64.sqrt();
    let f2 = (s2 + 2.0 * g) / (s2 - g);
    let tau = (2.0 - f2 + ((f2 - 2.0) * (5.0 * f2 - 2.0)).max(0.0).sqrt()) / (2.0 * f2);
    let (mu, _) = t.mu_nu()?;
    let zeta = ExtReal::finite(tau)
        .box_op(t.kappa())
        .box_op(mu.to_ext().box_inv());
    let rho = unitgroup::project(zeta).to_ext();

    let image = apply(t, rho);
    let mut sq = image.squared().components();
    sq.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if (sq[0] + sq[1] - sq[2]).abs() > 1e-9 * sq[2] {
        return Err(CevaError::VerificationFailed {
            detail: format!(
                "transported parameter {rho} does not give a right triangle: squares {sq:?}"
            ),
        });
    }
    Ok(Some(rho))
}

/// A verified recipe turning T into a directly congruent copy of V:
/// 2·n₀ applications of C_ξ (a pure scaling) followed by one C_ρ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconstructionPlan {
    /// The shape-matching parameter μ_T◇μ_V.
    pub rho: UnitParam,
    /// Number of even-power scaling rounds.
    pub n0: u32,
    /// The scaling parameter, ≥ 1/2, with ⟨ξ⟩^{2n₀} equal to the scale gap.
    pub xi: f64,
    /// Side ratio of V to C_ρ(T): the scale the iterations must produce.
    pub scale: f64,
}

impl ReconstructionPlan {
    /// Total operator applications: 2·n₀ + 1.
    pub fn total_ops(&self) -> u32 {
        2 * self.n0 + 1
    }

    /// Runs the plan on a triangle.
    pub fn execute(&self, t: &Triangle) -> Triangle {
        let scaled = iterate(t, ExtReal::finite(self.xi), 2 * self.n0);
        apply(&scaled, self.rho.to_ext())
    }
}

/// Plans the reconstruction of a directly congruent copy of V from T, which
/// is possible exactly when the two Brocard angles agree.
///
/// ρ = μ_T◇μ_V makes C_ρ(T) directly similar to V; the residual scale l is
/// bridged by n₀ even iterations of C_ξ where n₀ is minimal with
/// l^{1/n₀} ≥ 3/4 and ξ ≥ 1/2 solves ⟨ξ⟩² = l^{1/n₀}.
pub fn reconstruct(t: &Triangle, v: &Triangle, tol: f64) -> Result<ReconstructionPlan, CevaError> {
    ensure_equal_brocard(t, v, tol)?;
    let rho = matching_param(v, t, tol)?; // μ_T◇μ_V, written from V's side
    let base = apply(t, rho.to_ext());

    // per-side ratios of V to C_ρ(T) through the matching direct pattern
    let vs = v.sides();
    let bs = base.sides();
    let mut scale = None;
    for perm in &DIRECT_PATTERNS {
        let ratios = [vs[0] / bs[perm[0]], vs[1] / bs[perm[1]], vs[2] / bs[perm[2]]];
        let mean = (ratios[0] + ratios[1] + ratios[2]) / 3.0;
        if ratios.iter().all(|r| (r - mean).abs() <= RATIO_EPS * mean) {
            scale = Some((ratios[0] * ratios[1] * ratios[2]).cbrt());
            break;
        }
    }
    let l = scale.ok_or_else(|| CevaError::VerificationFailed {
        detail: "C_rho(T) is not directly similar to V despite equal Brocard angles".to_owned(),
    })?;

    let (n0, xi) = if (l - 1.0).abs() <= RATIO_EPS {
        (0, 1.0)
    } else {
        let mut n = 1u32;
        while l.powf(1.0 / f64::from(n)) < 0.75 {
            n += 1;
        }
        let m = l.powf(1.0 / f64::from(n));
        (n, 0.5 * (1.0 + (4.0 * m - 3.0).max(0.0).sqrt()))
    };
    Ok(ReconstructionPlan { rho, n0, xi, scale: l })
}
