//! Ceva's triangles and the groups behind them.
//!
//! For a triangle T and a parameter ρ, the three cevians joining each vertex
//! to the point dividing the opposite side in the ratio ρ:(1−ρ) themselves
//! form a triangle, C_ρ(T). Taken in the right cyclic order this family has a
//! rich algebraic structure:
//!
//! * iterating the operator is *binary*: C_ρ(C_ρ(T)) = ⟨ρ⟩²·T with
//!   ⟨ρ⟩ = √(1 − ρ + ρ²);
//! * compositions with different parameters are governed by a commutative
//!   group (ℝ ∪ {∞}, □) conjugate to angle addition, realized on squared
//!   sides by the left-circulant reflection matrices M_ρ;
//! * up to similarity the whole family lives over the fundamental interval
//!   𝕄_T = [μ_T, ν_T] between the two isosceles members;
//! * two triangles share a Brocard angle exactly when a congruent copy of
//!   one can be rebuilt from the other by a short, explicit chain of cevian
//!   operators.
//!
//! ```
//! use ceva::{ExtReal, Triangle};
//! use ceva::operator::{apply, iterate};
//!
//! let t = Triangle::new(8.0, 9.0, 12.0)?;
//! // the median triangle, ρ = 1/2
//! let m = apply(&t, ExtReal::finite(0.5));
//! // two rounds of medians shrink by exactly 3/4
//! let twice = iterate(&t, ExtReal::finite(0.5), 2);
//! for (s, orig) in twice.sides().iter().zip(t.sides()) {
//!     assert!((s - 0.75 * orig).abs() < 1e-12);
//! }
//! assert!((m.sides()[0] - (73.0_f64 / 2.0).sqrt()).abs() < 1e-12);
//! # Ok::<(), ceva::CevaError>(())
//! ```

pub mod error;
pub mod extgroup;
pub mod matrices;
pub mod operator;
pub mod oracle;
pub mod triangle;
pub mod unitgroup;

pub use error::CevaError;
pub use extgroup::{Angle, ExtReal};
pub use operator::{ReconstructionPlan, SimilarityRelation};
pub use triangle::{ShapeDescriptor, SquaredVector, Triangle, TriangleClass};
pub use unitgroup::UnitParam;

/// Default numeric tolerance used by precondition checks and the CLI.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

// The book chapters double as doctests so their code stays honest.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Cevians, "../../../book/src/cevians.md");
    chapter!(Groups, "../../../book/src/groups.md");
    chapter!(Matrices, "../../../book/src/matrices.md");
    chapter!(Similarity, "../../../book/src/similarity.md");
    chapter!(Shape, "../../../book/src/shape.md");
    chapter!(Reconstruction, "../../../book/src/reconstruction.md");
}
