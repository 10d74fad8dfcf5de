//! Coordinate-geometry oracle.
//!
//! Everything here works on explicit planar coordinates and knows nothing
//! about the algebraic machinery: triangles are embedded in the plane, cevian
//! endpoints are constructed from the defining vector equations, and lengths
//! are measured. The rest of the crate is tested against these measurements.

use std::ops::{Add, Mul, Sub};

use crate::error::CevaError;
use crate::triangle::Triangle;
use crate::unitgroup::UnitParam;

/// A 2D point / vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn dot(self, rhs: Vec2) -> f64 {
        self.x * rhs.x + self.y * rhs.y
    }

    pub fn cross(self, rhs: Vec2) -> f64 {
        self.x * rhs.y - self.y * rhs.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, rhs: Vec2) -> f64 {
        (self - rhs).norm()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self * rhs.x, self * rhs.y)
    }
}

/// A triangle as counterclockwise vertex coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarTriangle {
    /// Vertex A (opposite side a = BC).
    pub a: Vec2,
    /// Vertex B (opposite side b = CA).
    pub b: Vec2,
    /// Vertex C (opposite side c = AB).
    pub c: Vec2,
}

impl PlanarTriangle {
    /// Signed area; positive for counterclockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        0.5 * (self.b - self.a).cross(self.c - self.a)
    }

    /// Side lengths (|BC|, |CA|, |AB|).
    pub fn side_lengths(&self) -> [f64; 3] {
        [
            self.b.distance(self.c),
            self.c.distance(self.a),
            self.a.distance(self.b),
        ]
    }
}

/// Canonical planar placement: B at the origin, C at (a, 0), A in the upper
/// half-plane, so that the vertex order is counterclockwise and side a lies
/// on the x-axis.
pub fn embed(t: &Triangle) -> PlanarTriangle {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let ax = (a * a + c * c - b * b) / (2.0 * a);
    let ay = (c * c - ax * ax).sqrt();
    PlanarTriangle {
        a: Vec2::new(ax, ay),
        b: Vec2::new(0.0, 0.0),
        c: Vec2::new(a, 0.0),
    }
}

/// The cevian endpoints for parameter ρ: A_ρ on line BC, B_ρ on line CA,
/// C_ρ on line AB, from the vector definitions
/// AC_ρ = ρ·AB, CB_ρ = ρ·CA, BA_ρ = ρ·BC.
pub fn cevian_points(p: &PlanarTriangle, rho: f64) -> (Vec2, Vec2, Vec2) {
    let a_rho = p.b + rho * (p.c - p.b);
    let b_rho = p.c + rho * (p.a - p.c);
    let c_rho = p.a + rho * (p.b - p.a);
    (a_rho, b_rho, c_rho)
}

/// Measured cevian lengths (|CC_ρ|, |BB_ρ|, |AA_ρ|): the coordinate oracle
/// for the side triple (x_ρ, y_ρ, z_ρ) of Ceva's triangle.
pub fn cevian_lengths(p: &PlanarTriangle, rho: f64) -> (f64, f64, f64) {
    let (a_rho, b_rho, c_rho) = cevian_points(p, rho);
    (p.c.distance(c_rho), p.b.distance(b_rho), p.a.distance(a_rho))
}

/// The cevian triangle A A_ρ A′_ρ assembled in place through the
/// parallelogram ABCD (D = A + C − B, A′_ρ on CD with CA′_ρ = ρ·CD).
/// Its sides are the three cevians of parameter ρ.
pub fn parallelogram_copy(p: &PlanarTriangle, rho: f64) -> PlanarTriangle {
    let d = p.a + p.c - p.b;
    let a_rho = p.b + rho * (p.c - p.b);
    let a_rho_prime = p.c + rho * (d - p.c);
    PlanarTriangle { a: p.a, b: a_rho, c: a_rho_prime }
}

/// The normalized dot product of the base cevians of the two isosceles
/// members of the family: the base of the wide triangle C_μ(T) against the
/// base of the narrow triangle C_ν(T), both as planar segments. They are
/// perpendicular, so the value is 0 up to rounding.
///
/// For an increasing T these are the vectors AA_μ = AB + μ·BC and
/// CC_ν = CA + ν·AB; for the other orientations the base lands on a
/// different cevian of the triple, so it is selected by side comparison.
pub fn bases_perpendicular(t: &Triangle) -> Result<f64, CevaError> {
    let (mu, nu) = t.mu_nu()?;
    let p = embed(t);

    // side triples of the two isosceles images; the base is the odd one out:
    // strictly longest for wide, strictly shortest for narrow
    let wide = crate::operator::apply(t, mu.to_ext()).squared().components();
    let narrow = crate::operator::apply(t, nu.to_ext()).squared().components();
    let base_w = (0..3).max_by(|&i, &j| wide[i].total_cmp(&wide[j])).unwrap();
    let base_n = (0..3).min_by(|&i, &j| narrow[i].total_cmp(&narrow[j])).unwrap();

    let u = cevian_vector(&p, mu, base_w);
    let w = cevian_vector(&p, nu, base_n);
    Ok(u.dot(w) / (u.norm() * w.norm()))
}

/// The planar vector of the cevian carrying the side at `index` of C_ρ(T):
/// 0 ↦ CC_ρ = CA + ρ·AB, 1 ↦ BB_ρ = BC + ρ·CA, 2 ↦ AA_ρ = AB + ρ·BC.
fn cevian_vector(p: &PlanarTriangle, rho: UnitParam, index: usize) -> Vec2 {
    let r = rho.value();
    match index {
        0 => p.a - p.c + r * (p.b - p.a),
        1 => p.c - p.b + r * (p.a - p.c),
        _ => p.b - p.a + r * (p.c - p.b),
    }
}
