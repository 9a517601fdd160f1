//! Exact computation in twisted quantized enveloping algebras, their
//! Poisson limits, and the invariants attached to them.

// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod algebras;
pub mod coeff;
pub mod error;
pub mod expr;
pub mod invariants;
pub mod morphisms;
pub mod nc;
pub mod poisson;
pub mod report;
pub mod suites;
pub mod tensor;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/elements.md")]
    struct Elements;
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    struct NormalForms;
    #[doc = include_str!("../../../book/src/morphisms.md")]
    struct Morphisms;
    #[doc = include_str!("../../../book/src/poisson.md")]
    struct Poisson;
    #[doc = include_str!("../../../book/src/invariants.md")]
    struct Invariants;
    #[doc = include_str!("../../../book/src/tensor.md")]
    struct Tensor;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
