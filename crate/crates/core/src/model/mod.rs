//! The heptagon: configurations, the Hamiltonian, its wavelet blocks, Galois qubits,
//! projectors, density matrices and the full spectrum.

pub mod config;
pub mod hamiltonian;
pub mod projector;
pub mod qubit;
pub mod spectrum;
pub mod wavelet;

pub use config::{build_configs, build_orbits, Config, Orbit, NODES};
pub use hamiltonian::{hamiltonian_arith, s_minus};
pub use projector::{density_matrices, projector, weight_space_basis};
pub use qubit::{
    charpoly_disc, energies, highest_weight_basis, highest_weight_kernel, qubit_hamiltonian,
    singlet_product_vector, CharPoly, Level,
};
pub use spectrum::{full_spectrum, SpectrumRecord};
pub use wavelet::{fourier_block, s_block};
