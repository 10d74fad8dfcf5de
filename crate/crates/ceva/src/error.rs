//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong when constructing or transforming triangles
/// and group elements.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CevaError {
    /// A side length was zero, negative, or not a finite number.
    #[error("side lengths must be positive finite numbers, got ({a}, {b}, {c})")]
    NonPositiveSide { a: f64, b: f64, c: f64 },

    /// The triple fails the triangle inequality / cone criterion.
    #[error("({a}, {b}, {c}) is not a triangle: {inequality} fails")]
    DegenerateOrImpossible {
        a: f64,
        b: f64,
        c: f64,
        /// Which form of the validity test failed.
        inequality: String,
    },

    /// An angle outside [-pi/3, 2*pi/3) was supplied.
    #[error("angle {theta} lies outside [-pi/3, 2*pi/3)")]
    AngleOutOfRange { theta: f64 },

    /// A unit-interval parameter outside [0, 1) was supplied.
    #[error("parameter {value} lies outside [0, 1)")]
    UnitOutOfRange { value: f64 },

    /// The operation is undefined for equilateral triangles.
    #[error("operation is undefined for equilateral triangles")]
    EquilateralInput,

    /// The two triangles do not share a Brocard angle.
    #[error("Brocard angles differ: {omega_t} vs {omega_v}")]
    BrocardMismatch { omega_t: f64, omega_v: f64 },

    /// The supplied parameter lies outside the fundamental interval.
    #[error("parameter {value} lies outside the fundamental interval [{lo}, {hi}]")]
    ParamOutsideInterval { value: f64, lo: f64, hi: f64 },

    /// The vector is a multiple of [1 1 1]^T and carries no shape information.
    #[error("vector is a multiple of [1 1 1]^T")]
    IsotropicVector,

    /// The reflection equation has no solution for the given pair of vectors.
    #[error("no reflection maps the first vector onto a multiple of the second: {detail}")]
    NoSolution { detail: String },

    /// The requested shape angle is not attainable by any triangle.
    #[error("shape angle {gamma} lies outside [0, arctan(1/sqrt(2)))")]
    GammaOutOfRange { gamma: f64 },

    /// A cross-check between two independent computation routes failed.
    /// Indicates a bug rather than bad input.
    #[error("internal verification failed: {detail}")]
    VerificationFailed { detail: String },

    /// Could not parse an extended real from a string.
    #[error("cannot parse {input:?} as a finite number or \"inf\"")]
    ParseExtReal { input: String },
}
