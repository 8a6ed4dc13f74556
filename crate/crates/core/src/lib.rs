//! Exact symbolic engine for truncated super Yangians and the finite
//! W-superalgebras of rectangular nilpotent elements in `gl(M|N)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact rational
//! arithmetic on PBW normal forms:
//!
//! * [`gl`], [`uea`], [`tensor`], [`linalg`]: the superalgebra substrate.
//! * [`rectangle`]: colored rectangles, `e`, `h`, the good grading, `chi`,
//!   the projection `pr_chi` and the centralizer of `e`.
//! * [`yangian`]: the truncated super Yangian through its image in
//!   `U(gl(m|n))^{(x) l}`.
//! * [`walgebra`]: the explicit W-generators, the row determinant
//!   machinery and the isomorphism checks.

#![no_std]

extern crate alloc;

pub mod error;
pub mod gl;
pub mod linalg;
pub mod rectangle;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod uea;
pub mod walgebra;
pub mod yangian;

pub use error::{AlgebraError, RectangleError};
pub use gl::{BasisElement, GeneratorOrder, GlSuper, GlVector, GradedIndex, Parity};
pub use rectangle::{BoxIndex, ColoredRectangle, EpsilonDeltaSequence};
pub use report::{CheckOutcome, CheckRecord, Counterexample, Payload, RenderedLetter, RenderedTerm, VerificationReport};
pub use scalar::Scalar;
pub use tensor::{TensorElement, TensorPower};
pub use uea::{Monomial, RewriteStrategy, Uea};
