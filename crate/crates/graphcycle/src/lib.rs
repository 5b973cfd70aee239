//! Exact-arithmetic toolkit for strongly homotopy algebra structures and
//! graph complex homology.
//!
//! The library validates A-infinity and L-infinity structures given by lower
//! structure constants with an invariant inner product, builds ordinary and
//! ribbon graph complexes over the rationals, and evaluates the graded
//! tensor contraction that turns such a structure into a cycle in the
//! corresponding complex. All arithmetic is exact: rationals everywhere,
//! dual numbers (`t^2 = 0`) for first-order deformations.
//!
//! ```
//! use graphcycle::complex::ComplexParams;
//! use graphcycle::statesum::{cycle_chain, verify_cycle};
//! use graphcycle::zoo;
//!
//! let params = ComplexParams::Ordinary { chi: -1 };
//! let z = cycle_chain(&zoo::so3(), &params, 3).unwrap();
//! assert!(verify_cycle(&z, &params, 3).verified);
//! ```

pub mod algebra;
pub mod cochain;
pub mod complex;
pub mod enumerate;
pub mod format;
pub mod graded;
pub mod graph;
pub mod scalar;
pub mod statesum;
pub mod tensor;
pub mod zoo;

pub use algebra::{AlgebraSpec, Flavor};
pub use cochain::Cochain;
pub use complex::{Chain, ComplexParams};
pub use graded::{GradedBasis, Parity, Permutation, Sign};
pub use graph::{CanonicalGraph, GraphKind, OrientedGraph};
pub use scalar::{DualScalar, Ring, Scalar};
pub use tensor::Tensor;
