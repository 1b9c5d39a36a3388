//! Exact algebraic solution of the spin-1/2 XXX Heisenberg ring with seven nodes.
//!
//! The crate is layered bottom-up:
//!
//! * [`numbers`]: exact arithmetic in `Q ⊂ Q(ρ) ⊂ Q(ω)` and in the tagged quadratic
//!   extensions `Q(ρ, √Δ)`, `Q(ω, √Δ)`, with automorphisms, norms and square-class tests.
//! * [`linalg`]: dense matrices over any of those fields, with Gaussian elimination.
//! * [`model`]: configurations, the integer Hamiltonian, Galois wavelets, qubit blocks,
//!   projectors, density matrices and the full 128-level spectrum.
//! * [`galois`]: wreath-product Galois groups, their actions, the arithmetic identities on
//!   the discriminants and the Kummer independence certificates.
//! * [`oracle`]: an independent floating-point Jacobi diagonalization used as a cross-check.
//! * [`verify`]: the named check suite behind `heptagon verify`.

pub mod error;
pub mod export;
pub mod galois;
pub mod linalg;
pub mod model;
pub mod numbers;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Label};
pub use numbers::{CycAut, CycNum, DiscTag, Field, KClass, QuadNum, Rat, RhoNum};
