//! Floating-point cross-check of the exact spectrum.

pub mod blocks;
pub mod compare;
pub mod jacobi;

pub use blocks::{block_eigenvalues, full_hamiltonian, integer_trace};
pub use compare::{compare_spectra, compare_values, Comparison};
pub use jacobi::{jacobi_eigenvalues, DenseSym, DEFAULT_TOL};
