//! The left-circulant reflection matrices M_ρ.
//!
//! Every M_ρ is symmetric, orthogonal, involutive, and fixes [1 1 1]ᵀ; it acts
//! on squared-side vectors as the reflection across the plane spanned by its
//! 1-eigenvectors p_ρ and r.  Products compose through the □ group:
//! M_ζ M_τ M_ρ = M_{ρ□τ^□□ζ}, which turns questions about iterated cevian
//! constructions into group arithmetic.

use crate::error::CevaError;
use crate::extgroup::ExtReal;
use crate::triangle::SquaredVector;

/// A plain 3×3 matrix in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    /// Largest absolute entry difference, the max-norm distance.
    pub fn max_abs_diff(&self, rhs: &Mat3) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                d = d.max((self.0[i][j] - rhs.0[i][j]).abs());
            }
        }
        d
    }
}

/// The reflection matrix M_ρ together with the parameter that generated it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CevaMatrix {
    mat: Mat3,
    rho: ExtReal,
}

impl CevaMatrix {
    /// Builds M_ρ from the closed form: for finite ρ,
    /// (1/⟨ρ⟩²) [[ρ, 1−ρ, ρ(ρ−1)], [1−ρ, ρ(ρ−1), ρ], [ρ(ρ−1), ρ, 1−ρ]];
    /// M_∞ is the antidiagonal permutation.
    pub fn new(rho: ExtReal) -> CevaMatrix {
        let mat = match rho {
            ExtReal::Finite(r) => {
                let n2 = r.mul_add(r - 1.0, 1.0); // ⟨ρ⟩²
                let p = r / n2;
                let q = (1.0 - r) / n2;
                let s = r * (r - 1.0) / n2;
                Mat3([[p, q, s], [q, s, p], [s, p, q]])
            }
            ExtReal::Infinity => Mat3([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]]),
        };
        CevaMatrix { mat, rho }
    }

    pub fn rho(&self) -> ExtReal {
        self.rho
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.mat
    }

    /// The squared-side action of C_ρ: t ↦ ⟨ρ⟩² M_ρ t.
    pub fn transform(&self, t: &SquaredVector) -> SquaredVector {
        let n2 = match self.rho {
            ExtReal::Finite(r) => r.mul_add(r - 1.0, 1.0),
            ExtReal::Infinity => 1.0,
        };
        let [x, y, z] = self.mat.apply(t.components());
        SquaredVector::new(n2 * x, n2 * y, n2 * z)
    }
}

/// Orthonormal positively oriented eigenvectors (p_ρ, q_ρ, r) of M_ρ for the
/// eigenvalues (1, −1, 1). r = −(1/√3)[1 1 1]ᵀ is shared by the whole family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenBasis {
    pub p: [f64; 3],
    pub q: [f64; 3],
    pub r: [f64; 3],
}

/// The constant eigenvector r = −(1/√3)[1 1 1]ᵀ.
pub fn r_vector() -> [f64; 3] {
    let s = -(1.0 / 3.0_f64.sqrt());
    [s, s, s]
}

/// The closed-form eigenbasis of M_ρ.
pub fn eigenbasis(rho: ExtReal) -> EigenBasis {
    let r = r_vector();
    match rho {
        ExtReal::Finite(t) => {
            let n = ExtReal::Finite(t).norm();
            let s6 = (6.0_f64).sqrt() * n;
            let s2 = (2.0_f64).sqrt() * n;
            EigenBasis {
                p: [(1.0 + t) / s6, (1.0 - 2.0 * t) / s6, (t - 2.0) / s6],
                q: [(1.0 - t) / s2, -1.0 / s2, t / s2],
                r,
            }
        }
        ExtReal::Infinity => {
            let s6 = 6.0_f64.sqrt();
            let s2 = 2.0_f64.sqrt();
            EigenBasis {
                p: [-1.0 / s6, 2.0 / s6, -1.0 / s6],
                q: [1.0 / s2, 0.0, -1.0 / s2],
                r,
            }
        }
    }
}

/// The orthogonal change of basis Q = [p₀ q₀ r]: columns are the eigenbasis
/// of M₀.
pub fn basis_matrix() -> Mat3 {
    let EigenBasis { p, q, r } = eigenbasis(ExtReal::ZERO);
    Mat3([[p[0], q[0], r[0]], [p[1], q[1], r[1]], [p[2], q[2], r[2]]])
}

/// Counterclockwise rotation about r by `theta`, expressed in standard
/// coordinates: Q·Rot(θ)·Qᵀ.
pub fn rotation_about_r(theta: f64) -> Mat3 {
    let (s, c) = theta.sin_cos();
    let rot = Mat3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]);
    let q = basis_matrix();
    q.mul(&rot).mul(&q.transpose())
}

/// The product M_ζ·M_τ·M_ρ computed numerically, together with the parameter
/// ρ□τ^□□ζ it must equal by the composition law. Both representations are
/// returned so callers can assert their agreement.
pub fn compose(zeta: ExtReal, tau: ExtReal, rho: ExtReal) -> (Mat3, ExtReal) {
    let product = CevaMatrix::new(zeta)
        .matrix()
        .mul(CevaMatrix::new(tau).matrix())
        .mul(CevaMatrix::new(rho).matrix());
    let param = rho.box_op(tau.box_inv()).box_op(zeta);
    (product, param)
}

/// The fixed-vector parameter ϰ_t = (x − y)/(x − z), with ∞ when x = z.
/// M_{ϰ_t} t = t. Errors when t is a multiple of [1 1 1]ᵀ.
pub fn kappa_vec(t: &SquaredVector) -> Result<ExtReal, CevaError> {
    if t.is_isotropic() {
        return Err(CevaError::IsotropicVector);
    }
    if t.x == t.z {
        Ok(ExtReal::Infinity)
    } else {
        Ok(ExtReal::finite((t.x - t.y) / (t.x - t.z)))
    }
}

/// Relative tolerance on normalized r-components when testing solvability of
/// the reflection equation. Looser than the residual check because it
/// compares derived quantities.
pub const SOLVE_EXISTENCE_EPS: f64 = 1e-7;

/// Residual tolerance confirming a candidate parameter.
pub const SOLVE_RESIDUAL_EPS: f64 = 1e-9;

/// Solution of M_ρ t = λ v.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionSolution {
    /// λ = ‖t‖/‖v‖.
    pub lambda: f64,
    /// Both group-theoretic candidates √ϰ_t□√ϰ_v and √ϰ_t□2□√ϰ_v.
    pub candidates: [ExtReal; 2],
    /// The candidate that verifies numerically.
    pub rho: ExtReal,
}

/// Solves M_ρ t = λ v for λ and ρ.
///
/// Solvable exactly when t and v subtend the same angle with r, i.e.
/// ‖v‖(t·r) = ‖t‖(v·r). The two candidates arise from composing the
/// fixed-vector reflections of t and v through M₀ or M₂; exactly one of
/// them satisfies the equation.
pub fn solve_reflection(
    t: &SquaredVector,
    v: &SquaredVector,
) -> Result<ReflectionSolution, CevaError> {
    if t.is_isotropic() || v.is_isotropic() {
        return Err(CevaError::IsotropicVector);
    }
    let (nt, nv) = (t.norm(), v.norm());
    let ut = t.dot_r() / nt;
    let uv = v.dot_r() / nv;
    if (ut - uv).abs() > SOLVE_EXISTENCE_EPS * ut.abs().max(uv.abs()).max(f64::MIN_POSITIVE) {
        return Err(CevaError::NoSolution {
            detail: format!("normalized r-components differ: {ut} vs {uv}"),
        });
    }
    let lambda = nt / nv;
    let st = kappa_vec(t)?.box_sqrt();
    let sv = kappa_vec(v)?.box_sqrt();
    let candidates = [st.box_op(sv), st.box_op(ExtReal::finite(2.0)).box_op(sv)];

    let scale = t.components().iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let residual = |rho: ExtReal| -> f64 {
        let img = CevaMatrix::new(rho).matrix().apply(t.components());
        let want = v.components();
        (0..3).fold(0.0_f64, |m, i| m.max((img[i] - lambda * want[i]).abs()))
    };
    let mut verified = None;
    for &cand in &candidates {
        if residual(cand) <= SOLVE_RESIDUAL_EPS * scale {
            verified = Some(cand);
            break;
        }
    }
    match verified {
        Some(rho) => Ok(ReflectionSolution { lambda, candidates, rho }),
        None => Err(CevaError::NoSolution {
            detail: format!(
                "both candidates exceeded the residual bound ({} and {})",
                residual(candidates[0]),
                residual(candidates[1])
            ),
        }),
    }
}
