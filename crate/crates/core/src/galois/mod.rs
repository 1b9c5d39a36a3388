//! Galois groups of the Heisenberg fields, their actions, the arithmetic identities and the
//! Kummer independence certificates.

pub mod action;
pub mod kummer;
pub mod lattice;
pub mod identities;
pub mod wreath;

pub use action::{act_on_element, act_on_level, act_on_operator, act_on_spectrum, GaloisAct};
pub use kummer::{kummer_independence, KummerCertificate};
pub use lattice::Subfield;
pub use identities::arithmetic_identities;
pub use wreath::{ElementSpec, SignMatrix, Variant, WreathElement};
