//! Shared generators for the randomized integration suites.
#![allow(dead_code)] // not every test target uses every helper

use ceva::{Triangle, TriangleClass};
use rand::Rng;

/// A valid triangle with sides in a moderate range, kept away from the
/// degenerate boundary so relative tolerances stay meaningful.
pub fn random_triangle<R: Rng>(rng: &mut R) -> Triangle {
    loop {
        let a: f64 = rng.gen_range(1.0..10.0);
        let b: f64 = rng.gen_range(1.0..10.0);
        let lo = (a - b).abs();
        let hi = a + b;
        let c = lo + rng.gen_range(0.08..0.92) * (hi - lo);
        if let Ok(t) = Triangle::new(a, b, c) {
            return t;
        }
    }
}

/// A random scalene triangle.
pub fn random_scalene<R: Rng>(rng: &mut R) -> Triangle {
    loop {
        let t = random_triangle(rng);
        if matches!(t.classify(), TriangleClass::Increasing | TriangleClass::Decreasing) {
            return t;
        }
    }
}

pub fn assert_rel_close(got: f64, want: f64, tol: f64, what: &str) {
    let scale = got.abs().max(want.abs()).max(f64::MIN_POSITIVE);
    assert!(
        (got - want).abs() <= tol * scale,
        "{what}: {got} vs {want} (rel err {})",
        (got - want).abs() / scale
    );
}
