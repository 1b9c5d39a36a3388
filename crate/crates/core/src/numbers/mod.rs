//! Exact arithmetic in the field tower `Q ⊂ Q(ρ) ⊂ Q(ω)` and in `Q(ρ,√Δ)`, `Q(ω,√Δ)`.

pub mod cyclotomic;
mod field;
pub mod json;
pub mod quadratic;
pub mod rat;
pub mod real;
pub mod reconstruct;
pub mod sqrt;

pub use cyclotomic::{CycAut, CycNum, KClass, Momentum};
pub use field::{field_arith, ArithOp, Field};
pub use json::{FieldElement, IntoFieldElement};
pub use quadratic::{DiscTag, QuadBase, QuadNum};
pub use rat::{rat, ratio, Rat};
pub use real::{embed, project, trace_norm, valuation, RhoNum};
pub use sqrt::{designated_prime, sqrt_in_rho, NonSquareCertificate, SqrtOutcome};

/// Numeric image of any exact element under `ω ↦ exp(2πi·l/7)`.
pub fn numeric_embed<F: Field>(x: &F, embedding: CycAut) -> crate::Result<num_complex::Complex64> {
    x.numeric_embed(embedding)
}
