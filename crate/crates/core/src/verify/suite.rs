//! The check suite, grouped by topic.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::galois::action::{act_on_level, act_on_operator, act_on_vector, GaloisAct};
use crate::galois::kummer::{certified_degree, kummer_independence};
use crate::galois::lattice::{degree, Subfield};
use crate::galois::{arithmetic_identities, Variant, WreathElement};
use crate::linalg::{inner, ExactMatrix};
use crate::model::config::{build_configs, build_orbits, Orbit};
use crate::model::hamiltonian::{hamiltonian_arith, particle_hole_image, s_minus};
use crate::model::projector::{density_matrices, lifted_energy, projector};
use crate::model::qubit::{
    charpoly_disc, energies, highest_weight_basis, highest_weight_kernel, qubit_hamiltonian,
    singlet_product_vector,
};
use crate::model::spectrum::{full_spectrum, total_multiplicity, SpectrumRecord};
use crate::model::wavelet::{
    block_dim, block_direct_sum, block_orbits, fourier_block, s_block, wavelet, wavelet_transform,
};
use crate::numbers::{rat, CycNum, DiscTag, Field, Momentum, QuadNum, Rat, RhoNum};
use crate::oracle::{
    block_eigenvalues, compare_spectra, full_hamiltonian, integer_trace, jacobi_eigenvalues,
    DEFAULT_TOL,
};

use super::fixtures as fx;
use super::report::{Check, VerifyReport};

/// Topic groups selectable with `--section`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Section {
    Configurations = 2,
    Wavelets = 3,
    Qubits = 4,
    Arithmetic = 5,
    Kummer = 6,
    Actions = 7,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::Configurations,
        Section::Wavelets,
        Section::Qubits,
        Section::Arithmetic,
        Section::Kummer,
        Section::Actions,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Result<Section> {
        Section::ALL
            .into_iter()
            .find(|s| s.number() == n)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown section {n}; expected 2..=7")))
    }

    pub fn title(self) -> &'static str {
        match self {
            Section::Configurations => "configurations and the integer Hamiltonian",
            Section::Wavelets => "orbits, wavelets and the cyclotomic field",
            Section::Qubits => "blocks, Galois qubits and the spectrum",
            Section::Arithmetic => "norms, traces and discriminant factorizations",
            Section::Kummer => "Kummer independence and wreath groups",
            Section::Actions => "Galois actions on wavelets, operators and spectra",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.number(), self.title())
    }
}

fn guarded(section: Section, name: &str, anchor: &str, f: impl FnOnce() -> Result<Check>) -> Check {
    f().unwrap_or_else(|e| Check::errored(section.number(), name, anchor, &e))
}

fn all_hold(
    section: Section,
    name: &str,
    anchor: &str,
    f: impl FnOnce() -> Result<Vec<String>>,
) -> Check {
    guarded(section, name, anchor, || {
        let failures = f()?;
        Ok(Check::holds(
            section.number(),
            name,
            anchor,
            failures.is_empty(),
            "no counterexample",
            if failures.is_empty() { "no counterexample".to_string() } else { failures.join("; ") },
        ))
    })
}

/// A precomputed result shared between several checks.
type Shared<T> = std::result::Result<T, String>;

fn share<T>(r: Result<T>) -> Shared<T> {
    r.map_err(|e| e.to_string())
}

fn reuse<T: Clone>(r: &Shared<T>) -> Result<T> {
    r.clone().map_err(Error::SpectrumMismatch)
}

fn borrow<T>(r: &Shared<T>) -> Result<&T> {
    r.as_ref().map_err(|e| Error::SpectrumMismatch(e.clone()))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn matrix_mismatch<F: Field>(what: String, want: &ExactMatrix<F>, got: &ExactMatrix<F>) -> Option<String> {
    (want != got).then(|| format!("{what}: expected\n{want}got\n{got}"))
}

pub fn run(sections: &[Section]) -> VerifyReport {
    let mut report = VerifyReport::default();
    for s in sections {
        report.checks.extend(match s {
            Section::Configurations => configurations(),
            Section::Wavelets => wavelets(),
            Section::Qubits => qubits(),
            Section::Arithmetic => arithmetic_identities(),
            Section::Kummer => kummer(),
            Section::Actions => actions(),
        });
    }
    report
}

pub fn run_all() -> VerifyReport {
    run(&Section::ALL)
}

fn configurations() -> Vec<Check> {
    let s = Section::Configurations;
    let mut out = Vec::new();
    out.push(all_hold(s, "configuration counts are C(7,r)", "configuration spaces", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            let n = build_configs(r)?.len();
            if n != binom(7, r) {
                bad.push(format!("r={r}: {n}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "orbits partition each configuration space", "configuration spaces", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            let mut members: Vec<_> = build_orbits(r)?.iter().flat_map(|o| o.members().to_vec()).collect();
            members.sort();
            let mut all = build_configs(r)?;
            all.sort();
            if members != all {
                bad.push(format!("r={r}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "H_r is symmetric, integral, with zero row sums", "nearest-neighbour Hamiltonian", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            let h = hamiltonian_arith(r)?;
            let sums_zero = (0..h.rows()).all(|i| h.row(i).into_iter().fold(Rat::zero(), |a, b| a + b).is_zero());
            let integral = h.entries().all(|q| q.is_integer());
            if h != h.transpose() || !sums_zero || !integral {
                bad.push(format!("r={r}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "H_2 diagonal is −2 for adjacent pairs and −4 otherwise", "nearest-neighbour Hamiltonian", || {
        let h = hamiltonian_arith(2)?;
        let mut bad = Vec::new();
        for (i, c) in build_configs(2)?.iter().enumerate() {
            let j = c.nodes();
            let adjacent = j[1] - j[0] == 1 || j[0] + 7 - j[1] == 1;
            let want = rat(if adjacent { -2 } else { -4 });
            if *h.get(i, i) != want {
                bad.push(c.to_string());
            }
        }
        Ok(bad)
    }));
    for r in 0..7 {
        out.push(guarded(s, &format!("S⁻ H_{r} = H_{} S⁻", r + 1), "lowering operator commutes with H", || {
            let sm = s_minus(r)?;
            let lhs = sm.mul(&hamiltonian_arith(r)?)?;
            let rhs = hamiltonian_arith(r + 1)?.mul(&sm)?;
            Ok(Check::holds(
                s.number(),
                format!("S⁻ H_{r} = H_{} S⁻", r + 1),
                "lowering operator commutes with H",
                lhs == rhs,
                "zero commutator",
                if lhs == rhs { "zero commutator".to_string() } else { format!("difference\n{}", lhs.sub(&rhs)?) },
            ))
        }));
    }
    out.push(all_hold(s, "S⁻ from level r has column sums 7−r", "lowering operator", || {
        let mut bad = Vec::new();
        for r in 0..7 {
            let sm = s_minus(r)?;
            for j in 0..sm.cols() {
                if sm.column(j).into_iter().fold(Rat::zero(), |a, b| a + b) != rat(7 - r as i64) {
                    bad.push(format!("r={r} column {j}"));
                }
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "H_(7−r) is the particle-hole image of H_r", "particle-hole symmetry", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            if particle_hole_image(7, r)? != hamiltonian_arith(7 - r)? {
                bad.push(format!("r={r}"));
            }
        }
        Ok(bad)
    }));
    out
}

fn wavelets() -> Vec<Check> {
    let s = Section::Wavelets;
    let mut out = Vec::new();
    for (r, dim, rows) in fx::orbit_table() {
        out.push(guarded(s, &format!("orbit table at r={r}"), "orbit structure table", || {
            let orbits = build_orbits(r)?;
            let got: Vec<(Vec<u8>, usize)> = orbits.iter().map(|o| (o.t().to_vec(), o.islands())).collect();
            let n = build_configs(r)?.len();
            let show = |d: usize, v: &[(Vec<u8>, usize)]| format!("dim {d}, {v:?}");
            Ok(Check::holds(s.number(), format!("orbit table at r={r}"), "orbit structure table", got == rows && n == dim, show(dim, &rows), show(n, &got)))
        }));
    }
    out.push(all_hold(s, "orbits are regular except at r = 0 and r = 7", "orbit structure table", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            for o in build_orbits(r)? {
                if o.is_regular() == (r == 0 || r == 7) {
                    bad.push(format!("r={r} t={:?}", o.t()));
                }
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "Σ_k dim H_r^k = C(7,r)", "Fourier decomposition", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            let mut total = 0;
            for k in Momentum::all() {
                total += block_dim(r, k)?;
            }
            if total != binom(7, r) {
                bad.push(format!("r={r}: {total}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "wavelets block-diagonalize H_r exactly", "Fourier decomposition", || {
        let mut bad = Vec::new();
        for r in 0..=7 {
            let w = wavelet_transform(r)?;
            let h = hamiltonian_arith(r)?.map(|q| CycNum::from_rat(q.clone()));
            if w.rank()? != w.rows() || h.mul(&w)? != w.mul(&block_direct_sum(r)?)? {
                bad.push(format!("r={r}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "1 + ω + … + ω⁶ = 0 and ω⁷ = 1", "cyclotomic field", || {
        let sum = (0..7).fold(CycNum::zero(), |a, e| a + CycNum::omega_pow(e));
        let mut bad = Vec::new();
        if !sum.is_zero() {
            bad.push(format!("sum = {sum}"));
        }
        if CycNum::omega().pow(7) != CycNum::one() {
            bad.push("ω⁷ ≠ 1".into());
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "ρ³ = 1+2ρ−ρ² and ρ⁴ = −1−ρ+3ρ²", "minimal polynomial of ρ", || {
        let r = RhoNum::rho();
        let mut bad = Vec::new();
        if r.pow(3) != RhoNum::from_ints([1, 2, -1]) {
            bad.push(format!("ρ³ = {}", r.pow(3)));
        }
        if r.pow(4) != RhoNum::from_ints([-1, -1, 3]) {
            bad.push(format!("ρ⁴ = {}", r.pow(4)));
        }
        Ok(bad)
    }));
    out.push(guarded(s, "η = i√7 squares to −7", "cyclotomic field", || {
        let e = CycNum::eta();
        Ok(Check::equal(s.number(), "η = i√7 squares to −7", "cyclotomic field", &CycNum::from_rat(rat(-7)), &(e.clone() * e)))
    }));
    let certs = kummer_independence().unwrap_or_default();
    for (field, want) in [(Subfield::Eta, 2u64), (Subfield::Real, 3), (Subfield::Cyclotomic, 6)] {
        let name = format!("[{}:Q] = {want}", field.name());
        out.push(guarded(s, &name, "subfield lattice", || {
            let got = degree(&field, &certs)?.unwrap_or(0);
            Ok(Check::equal(s.number(), name.clone(), "subfield lattice", &want, &got))
        }));
    }
    out
}

fn each_k(
    ks: impl Iterator<Item = Momentum>,
    mut f: impl FnMut(Momentum) -> Result<Option<String>>,
) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for k in ks {
        if let Some(m) = f(k)? {
            bad.push(format!("k={k}: {m}"));
        }
    }
    Ok(bad)
}

fn qubits() -> Vec<Check> {
    let s = Section::Qubits;
    let mut out = Vec::new();
    out.push(all_hold(s, "H_0^0 = [0]", "wavelet blocks", || {
        Ok(matrix_mismatch("r=0".into(), &fx::ham0(), &fourier_block(0, Momentum::ZERO)?).into_iter().collect())
    }));
    for (r, fixture) in [
        (1usize, fx::ham1 as fn(Momentum) -> ExactMatrix<CycNum>),
        (2, fx::ham2),
        (3, fx::ham3),
    ] {
        out.push(all_hold(s, &format!("H_{r}^k matches the reference block for all k"), "wavelet blocks", || {
            each_k(Momentum::all(), |k| Ok(matrix_mismatch(format!("r={r}"), &fixture(k), &fourier_block(r, k)?)))
        }));
    }
    out.push(all_hold(s, "S_(1,1)^k and S_(2,1)^k match the reference matrices", "lowering blocks", || {
        each_k(Momentum::all(), |k| {
            Ok(matrix_mismatch("S11".into(), &fx::s11(k), &s_block(1, 1, k)?)
                .or(matrix_mismatch("S21".into(), &fx::s21(k), &s_block(2, 1, k)?)))
        })
    }));
    out.push(all_hold(s, "S_(1,2)^k = S_(2,1)^k S_(1,1)^k", "lowering blocks", || {
        each_k(Momentum::all(), |k| {
            let prod = s_block(2, 1, k)?.mul(&s_block(1, 1, k)?)?;
            Ok(matrix_mismatch("S12".into(), &prod, &s_block(1, 2, k)?))
        })
    }));
    out.push(all_hold(s, "tr S S† = 5, 14, 40 for k ≠ 0", "lowering blocks", || {
        each_k(Momentum::nonzero(), |k| {
            let mut got = Vec::new();
            for (r, dr) in [(1, 1), (2, 1), (1, 2)] {
                let b = s_block(r, dr, k)?;
                got.push(b.mul(&b.adjoint())?.trace());
            }
            let want: Vec<CycNum> = [5, 14, 40].iter().map(|&n| CycNum::from_rat(rat(n))).collect();
            Ok((got != want).then(|| format!("{got:?}")))
        })
    }));
    out.push(all_hold(s, "dim H_(r',r') = 1, 6, 14, 14 by exact rank", "highest-weight spaces", || {
        let mut bad = Vec::new();
        for (rp, want) in [(0usize, 1usize), (1, 6), (2, 14), (3, 14)] {
            let mut total = 0;
            for k in Momentum::all() {
                total += highest_weight_kernel(rp, k)?.len();
            }
            if total != want {
                bad.push(format!("r'={rp}: {total}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "dim H_(r,r')^k = 2 for r' = 2, 3", "highest-weight spaces", || {
        let mut bad = Vec::new();
        for rp in [2usize, 3] {
            for k in Momentum::all() {
                for r in rp..=7 - rp {
                    let basis = crate::model::weight_space_basis(r, rp, k)?;
                    let rank = ExactMatrix::from_columns(&basis)?.rank()?;
                    if rank != 2 {
                        bad.push(format!("r={r} r'={rp} k={k}: {rank}"));
                    }
                }
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "explicit highest-weight vectors span the S⁺ kernel", "highest-weight spaces", || {
        let mut bad = Vec::new();
        for rp in [2usize, 3] {
            for k in Momentum::all() {
                let e = highest_weight_basis(rp, k)?;
                let g = highest_weight_kernel(rp, k)?;
                let stacked: Vec<Vec<CycNum>> = e.iter().chain(&g).cloned().collect();
                if ExactMatrix::from_columns(&e)?.rank()? != 2 || ExactMatrix::from_columns(&stacked)?.rank()? != 2 {
                    bad.push(format!("r'={rp} k={k}"));
                }
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "highest-weight vectors equal the reference vectors", "highest-weight spaces", || {
        let mut bad = each_k(Momentum::nonzero(), |k| {
            let two = highest_weight_basis(2, k)?;
            let three = highest_weight_basis(3, k)?;
            Ok((two[..] != fx::two_magnon_basis(k)[..] || three[..] != fx::three_magnon_basis(k)[..]).then(|| "differs".into()))
        })?;
        for rp in [2usize, 3] {
            if highest_weight_basis(rp, Momentum::ZERO)?[..] != fx::zero_momentum_vectors(rp)[..] {
                bad.push(format!("k=0 r'={rp}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "singlet-product vectors span the three-magnon qubit", "highest-weight spaces", || {
        each_k(Momentum::nonzero(), |k| {
            let a = singlet_product_vector(&[(2, 1), (4, 3), (6, 5)], k)?;
            let b = singlet_product_vector(&[(1, 4), (2, 5), (3, 6)], k)?;
            let e = highest_weight_basis(3, k)?;
            let stacked = vec![a.clone(), b.clone(), e[0].clone(), e[1].clone()];
            let ok = ExactMatrix::from_columns(&[a, b])?.rank()? == 2
                && ExactMatrix::from_columns(&stacked)?.rank()? == 2;
            Ok((!ok).then(|| "span differs".into()))
        })
    }));
    for (rp, fixture) in [(2usize, fx::qubit_h2 as fn(Momentum) -> ExactMatrix<RhoNum>), (3, fx::qubit_h3)] {
        out.push(all_hold(s, &format!("H_({rp},{rp})^k matches the reference qubit Hamiltonian"), "qubit Hamiltonians", || {
            each_k(Momentum::nonzero(), |k| Ok(matrix_mismatch(format!("r'={rp}"), &fixture(k), &qubit_hamiltonian(rp, k)?)))
        }));
        out.push(all_hold(s, &format!("characteristic polynomial of H_({rp},{rp})^k"), "characteristic polynomials", || {
            each_k(Momentum::nonzero(), |k| {
                let cp = charpoly_disc(rp, k)?;
                let (sw, dw) = fx::charpoly(rp, k);
                Ok((cp.shifted_trace != sw || cp.shifted_det != dw).then(|| format!("s={} d={}", cp.shifted_trace, cp.shifted_det)))
            })
        }));
        out.push(all_hold(s, &format!("Δ_{rp}^k in μ and in the ρ basis"), "discriminants", || {
            each_k(Momentum::nonzero(), |k| {
                let cp = charpoly_disc(rp, k)?;
                let tag = DiscTag::new(rp as u8, k.class().expect("nonzero"))?;
                let table = fx::disc_table().into_iter().find(|(t, _)| *t == tag).map(|(_, v)| v);
                let ok = cp.disc == fx::disc_in_mu(rp, k) && Some(cp.disc.clone()) == table;
                Ok((!ok).then(|| format!("{}", cp.disc)))
            })
        }));
    }
    out.push(all_hold(s, "k = 0 energies: 0; −2, −6; −5 twice", "zero-momentum energies", || {
        let mut bad = Vec::new();
        let a = |rp| -> Result<Vec<RhoNum>> { Ok(energies(rp, Momentum::ZERO)?.into_iter().map(|l| l.energy.a().clone()).collect()) };
        if a(0)? != vec![RhoNum::zero()] {
            bad.push(format!("r'=0: {:?}", a(0)?));
        }
        for rp in [2usize, 3] {
            let want: Vec<RhoNum> = fx::zero_momentum_energies(rp).iter().map(|&n| RhoNum::from_rat(rat(n))).collect();
            if a(rp)? != want {
                bad.push(format!("r'={rp}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "qubit energies are roots of their characteristic polynomials", "energies", || {
        let mut bad = Vec::new();
        for rp in [2usize, 3] {
            bad.extend(each_k(Momentum::all(), |k| {
                let cp = charpoly_disc(rp, k)?;
                for l in energies(rp, k)? {
                    if !cp.eval(&l.energy)?.is_zero() {
                        return Ok(Some(format!("r'={rp} E={}", l.energy)));
                    }
                }
                Ok(None)
            })?);
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "E_(r',ν)^(−k) = E_(r',ν)^k", "energies", || {
        let mut bad = Vec::new();
        for rp in 0..=3usize {
            bad.extend(each_k(Momentum::nonzero(), |k| Ok((energies(rp, k)? != energies(rp, k.neg())?).then(|| format!("r'={rp}"))))?);
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "projectors are idempotent, self-adjoint and complete", "projectors", || {
        let mut bad = Vec::new();
        for r in [2usize, 3] {
            bad.extend(each_k(Momentum::nonzero(), |k| {
                let dim = block_dim(r, k)?;
                let mut sum = ExactMatrix::zeros(dim, dim);
                for rp in 1..=r {
                    let p = projector(r, rp, k)?;
                    if p.mul(&p)? != p || !p.is_hermitian() {
                        return Ok(Some(format!("r={r} r'={rp}")));
                    }
                    sum = sum.add(&p)?;
                }
                Ok((sum != ExactMatrix::identity(dim)).then(|| format!("r={r} incomplete")))
            })?);
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "projector closed forms equal the Gram construction", "projectors", || {
        let mut bad = Vec::new();
        for (r, rp) in [(2usize, 1usize), (2, 2), (3, 1), (3, 2), (3, 3)] {
            bad.extend(each_k(Momentum::nonzero(), |k| {
                let closed = fx::projector_closed_form(r, rp, k).ok_or_else(|| Error::InvalidArgument("no closed form".into()))?;
                Ok(matrix_mismatch(format!("P_({r},{rp})"), &projector(r, rp, k)?, &closed))
            })?);
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "tr P_(r,r')^k = dim H_(r,r')^k", "projectors", || {
        let mut bad = Vec::new();
        for (r, rp, d) in [(2usize, 1usize, 1i64), (2, 2, 2), (3, 1, 1), (3, 2, 2), (3, 3, 2)] {
            bad.extend(each_k(Momentum::nonzero(), |k| {
                Ok((projector(r, rp, k)?.trace() != CycNum::from_rat(rat(d))).then(|| format!("r={r} r'={rp}")))
            })?);
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "density matrices: ϱ² = ϱ, tr ϱ = 1, Hϱ = Eϱ, ϱ₊ + ϱ₋ = P", "density matrices", || {
        let mut bad = Vec::new();
        for (r, rp) in [(2usize, 2usize), (3, 2), (3, 3)] {
            bad.extend(each_k(Momentum::all(), |k| {
                let [a, b] = density_matrices(r, rp, k)?;
                let lift = |m: &ExactMatrix<CycNum>| m.map(|x| QuadNum::from_base(x.clone()));
                let p = lift(&projector(r, rp, k)?);
                let h = lift(&fourier_block(r, k)?);
                if a.add(&b)? != p {
                    return Ok(Some(format!("r={r} r'={rp}: sum ≠ P")));
                }
                for (rho, level) in [a, b].iter().zip(energies(rp, k)?) {
                    let e = lifted_energy(&level.energy);
                    let one = QuadNum::from_base(CycNum::one());
                    if rho.mul(rho)? != *rho || rho.trace() != one || h.mul(rho)? != rho.scale(&e) {
                        return Ok(Some(format!("r={r} r'={rp} ν={:?}", level.nu)));
                    }
                }
                Ok(None)
            })?);
        }
        Ok(bad)
    }));
    out.push(guarded(s, "k = 0, r' = 3 density matrix from (0,1,0,−1,0) has trace 1", "density matrices", || {
        let [_, b] = density_matrices(3, 3, Momentum::ZERO)?;
        Ok(Check::equal(s.number(), "k = 0, r' = 3 density matrix from (0,1,0,−1,0) has trace 1", "density matrices", &QuadNum::from_base(CycNum::one()), &b.trace()))
    }));
    let spectrum = share(full_spectrum());
    out.push(guarded(s, "multiplicities 1·8 + 6·6 + 14·4 + 14·2 = 128", "spectrum", || {
        let sp = reuse(&spectrum)?;
        let by_weight: Vec<usize> = (0..=3u8).map(|rp| sp.iter().filter(|r| r.r_prime == rp).map(|r| r.multiplicity).sum()).collect();
        let got = format!("{by_weight:?} total {}", total_multiplicity(&sp));
        Ok(Check::equal(s.number(), "multiplicities 1·8 + 6·6 + 14·4 + 14·2 = 128", "spectrum", &"[8, 36, 56, 28] total 128".to_string(), &got))
    }));
    out.extend(oracle_checks(spectrum));
    out
}

/// Numeric cross-checks; always reported under the spectrum topic.
fn oracle_checks(spectrum: Shared<Vec<SpectrumRecord>>) -> Vec<Check> {
    let s = Section::Qubits;
    let mut out = Vec::new();
    let numeric = share(full_hamiltonian().and_then(|h| jacobi_eigenvalues(&h, DEFAULT_TOL).map(|ev| (h, ev))));
    out.push(guarded(s, "oracle: 128 eigenvalues match the exact spectrum within 1e-9", "numeric oracle", || {
        let sp = reuse(&spectrum)?;
        let (_, ev) = reuse(&numeric)?;
        let c = compare_spectra(&sp, &ev, 1e-9);
        Ok(Check::holds(
            s.number(),
            "oracle: 128 eigenvalues match the exact spectrum within 1e-9",
            "numeric oracle",
            c.passed(),
            "128 levels, deviation ≤ 1e-9, equal cluster sizes",
            format!("{} vs {} levels, max deviation {:.3e}, {} clusters, sizes match: {}", c.exact_count, c.numeric_count, c.max_deviation, c.clusters.len(), c.clusters_match()),
        ))
    }));
    out.push(guarded(s, "oracle: eigenvalue sum equals the integer trace", "numeric oracle", || {
        let (_, ev) = reuse(&numeric)?;
        let t = integer_trace()?;
        let sum: f64 = ev.iter().sum();
        Ok(Check::holds(s.number(), "oracle: eigenvalue sum equals the integer trace", "numeric oracle", (sum - t as f64).abs() <= 1e-9, t.to_string(), format!("{sum:.12}")))
    }));
    out.push(guarded(s, "oracle: reordered basis gives the same spectrum", "numeric oracle", || {
        let (h, ev) = reuse(&numeric)?;
        let n = h.n();
        let perm: Vec<usize> = (0..n).map(|i| (i * 37 + 11) % n).collect();
        let ev2 = jacobi_eigenvalues(&h.permuted(&perm), DEFAULT_TOL)?;
        let dev = ev.iter().zip(&ev2).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        Ok(Check::holds(s.number(), "oracle: reordered basis gives the same spectrum", "numeric oracle", dev <= 1e-10, "deviation ≤ 1e-10", format!("{dev:.3e}")))
    }));
    out.push(all_hold(s, "oracle: per-block Fourier spectra match the exact levels", "numeric oracle", || {
        let sp = reuse(&spectrum)?;
        let mut bad = Vec::new();
        for r in 0..=7usize {
            for k in Momentum::all() {
                let exact: Vec<f64> = sp
                    .iter()
                    .filter(|rec| rec.k == k && rec.r_values.contains(&(r as u8)))
                    .map(|rec| rec.energy_float)
                    .collect();
                let num = block_eigenvalues(r, k.value(), DEFAULT_TOL)?;
                let c = crate::oracle::compare_values(&exact, &num, 1e-9);
                if !c.passed() {
                    bad.push(format!("r={r} k={k}: deviation {:.3e}", c.max_deviation));
                }
            }
        }
        Ok(bad)
    }));
    out
}

fn cayley_table(elements: &[WreathElement]) -> Result<Vec<Vec<usize>>> {
    let index: std::collections::HashMap<WreathElement, usize> =
        elements.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    elements
        .par_iter()
        .map(|g| {
            elements
                .iter()
                .map(|h| {
                    let p = g.mul(h)?;
                    index.get(&p).copied().ok_or_else(|| Error::InvalidArgument(format!("{p} not closed")))
                })
                .collect()
        })
        .collect()
}

fn kummer() -> Vec<Check> {
    let s = Section::Kummer;
    let mut out = Vec::new();
    let certs = share(kummer_independence());
    match &certs {
        Ok(cs) => {
            for c in cs {
                let names: Vec<String> = c.subset.iter().map(|t| t.to_string()).collect();
                out.push(Check::holds(
                    s.number(),
                    format!("product of {{{}}} is a nonsquare", names.join(", ")),
                    "Kummer certificates",
                    c.is_odd(),
                    "odd valuation",
                    format!("valuation {} at the prime of {}", c.valuation, c.witness),
                ));
            }
        }
        Err(e) => out.push(Check::errored(s.number(), "Kummer certificates", "Kummer certificates", &Error::MissingCertificate(e.clone()))),
    }
    out.push(guarded(s, "[H_E : Q(ρ)] = 64", "Kummer certificates", || {
        let cs = reuse(&certs)?;
        let d = certified_degree(&cs, &DiscTag::all()).unwrap_or(0);
        Ok(Check::equal(s.number(), "[H_E : Q(ρ)] = 64", "Kummer certificates", &64, &d))
    }));
    for (variant, want) in Variant::all().into_iter().zip([24usize, 192, 48, 384]) {
        let name = format!("{variant} has order {want} and satisfies the group axioms");
        out.push(all_hold(s, &name, "wreath products", || {
            let elements = WreathElement::enumerate(variant)?;
            let mut bad = Vec::new();
            if elements.len() != want {
                bad.push(format!("order {}", elements.len()));
            }
            let t = cayley_table(&elements)?;
            let n = elements.len();
            let e = elements.iter().position(WreathElement::is_identity).expect("identity listed");
            let assoc = (0..n).into_par_iter().all(|a| {
                (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]]))
            });
            if !assoc {
                bad.push("not associative".into());
            }
            for a in 0..n {
                if t[e][a] != a || t[a][e] != a || !(0..n).any(|b| t[a][b] == e) {
                    bad.push(format!("identity or inverse fails at {}", elements[a]));
                    break;
                }
                let inv = elements[a].inverse();
                if !elements[a].mul(&inv)?.is_identity() {
                    bad.push(format!("inverse of {}", elements[a]));
                    break;
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if elements[t[a][b]].l() != elements[a].l().compose(elements[b].l()) {
                        bad.push("l is not a homomorphism".into());
                        return Ok(bad);
                    }
                }
            }
            Ok(bad)
        }));
    }
    out.push(all_hold(s, "sign part is normal with cyclic quotient", "wreath products", || {
        let elements = WreathElement::enumerate(Variant::ComplexDouble)?;
        let mut bad = Vec::new();
        let signs: Vec<&WreathElement> = elements.iter().filter(|g| g.l() == crate::numbers::CycAut::IDENTITY).collect();
        if signs.len() != 64 {
            bad.push(format!("{} sign elements", signs.len()));
        }
        for g in &elements {
            for n in &signs {
                let c = g.mul(n)?.mul(&g.inverse())?;
                if c.l() != crate::numbers::CycAut::IDENTITY {
                    bad.push(format!("{g} conjugates {n} out"));
                    return Ok(bad);
                }
            }
        }
        Ok(bad)
    }));
    let cs = certs.unwrap_or_default();
    for (field, want) in [
        (crate::galois::lattice::real_qubit(2, crate::numbers::KClass::One), 6u64),
        (Subfield::RealWeight(2), 24),
        (Subfield::RealTotal, 192),
        (Subfield::ComplexQubit(DiscTag::all()[3]), 12),
        (Subfield::ComplexWeight(3), 48),
        (Subfield::ComplexTotal, 384),
    ] {
        let name = format!("[{}:Q] = {want}", field.name());
        out.push(guarded(s, &name, "subfield lattice", || {
            let got = degree(&field, &cs)?.unwrap_or(0);
            Ok(Check::equal(s.number(), name.clone(), "subfield lattice", &want, &got))
        }));
    }
    out
}

/// Per-`k` objects compared under the group action.
struct Objects {
    s: Vec<ExactMatrix<CycNum>>,
    p: Vec<ExactMatrix<CycNum>>,
    rho: Vec<ExactMatrix<QuadNum<CycNum>>>,
}

fn objects(k: Momentum) -> Result<Objects> {
    let mut s = Vec::new();
    for (r, dr) in [(1, 1), (2, 1), (1, 2)] {
        s.push(s_block(r, dr, k)?);
    }
    let mut p = Vec::new();
    for (r, rp) in [(2usize, 1usize), (2, 2), (3, 1), (3, 2), (3, 3)] {
        p.push(projector(r, rp, k)?);
    }
    let mut rho = Vec::new();
    for (r, rp) in [(2usize, 2usize), (3, 2), (3, 3)] {
        rho.extend(density_matrices(r, rp, k)?);
    }
    Ok(Objects { s, p, rho })
}

const RHO_WEIGHTS: [u8; 3] = [2, 2, 3];

fn actions() -> Vec<Check> {
    let s = Section::Actions;
    let mut out = Vec::new();
    let group = share(WreathElement::enumerate(Variant::ComplexDouble));
    let table: Shared<Vec<(Momentum, Objects)>> = share(Momentum::all().map(|k| Ok((k, objects(k)?))).collect());
    let find = |tab: &[(Momentum, Objects)], k: Momentum| -> usize { tab.iter().position(|(q, _)| *q == k).expect("all k") };

    out.push(all_hold(s, "Θ_g S^k = S^(lk) for all 384 elements", "action on operators", || {
        let g = reuse(&group)?;
        let tab = borrow(&table)?;
        Ok(g.par_iter()
            .flat_map_iter(|g| {
                tab.iter().filter_map(move |(k, o)| {
                    let target = &tab[find(tab, k.scaled(g.l()))].1;
                    (o.s.iter().zip(&target.s).any(|(a, b)| act_on_operator(g, a) != *b)).then(|| format!("{g} k={k}"))
                })
            })
            .collect())
    }));
    out.push(all_hold(s, "Θ_g P^k = P^(lk) for all 384 elements", "action on operators", || {
        let g = reuse(&group)?;
        let tab = borrow(&table)?;
        Ok(g.par_iter()
            .flat_map_iter(|g| {
                tab.iter().filter_map(move |(k, o)| {
                    let target = &tab[find(tab, k.scaled(g.l()))].1;
                    (o.p.iter().zip(&target.p).any(|(a, b)| act_on_operator(g, a) != *b)).then(|| format!("{g} k={k}"))
                })
            })
            .collect())
    }));
    out.push(all_hold(s, "Θ_g ϱ_ν^k = ϱ_(ε_k ν)^(lk) for all 384 elements", "action on density matrices", || {
        let g = reuse(&group)?;
        let tab = borrow(&table)?;
        Ok(g.par_iter()
            .flat_map_iter(|g| {
                tab.iter().filter(|(k, _)| !k.is_zero()).filter_map(move |(k, o)| {
                    let target = &tab[find(tab, k.scaled(g.l()))].1;
                    for (i, rp) in RHO_WEIGHTS.iter().enumerate() {
                        for (j, nu) in [1i8, -1].into_iter().enumerate() {
                            let (_, _, image) = act_on_level(g, *k, *rp, Some(nu));
                            let jj = if image == Some(1) { 0 } else { 1 };
                            if act_on_operator(g, &o.rho[2 * i + j]) != target.rho[2 * i + jj] {
                                return Some(format!("{g} k={k} r'={rp} ν={nu}"));
                            }
                        }
                    }
                    None
                })
            })
            .collect())
    }));
    out.push(all_hold(s, "k = 0 projectors and density matrices are fixed", "action on density matrices", || {
        let g = reuse(&group)?;
        let tab = borrow(&table)?;
        let o = &tab[find(tab, Momentum::ZERO)].1;
        Ok(g.iter()
            .filter(|g| o.p.iter().any(|m| act_on_operator(g, m) != *m) || o.rho.iter().any(|m| act_on_operator(g, m) != *m))
            .map(|g| g.to_string())
            .collect())
    }));
    out.push(all_hold(s, "g E_(r',ν)^k = E_(r',ε_k ν)^(lk); k = 0 energies fixed", "action on spectra", || {
        let g = reuse(&group)?;
        let sp = full_spectrum()?;
        let mut bad = Vec::new();
        for g in &g {
            for rec in &sp {
                let (k2, rp2, nu2) = act_on_level(g, rec.k, rec.r_prime, rec.nu);
                let target = sp.iter().find(|r| (r.k, r.r_prime, r.nu) == (k2, rp2, nu2));
                match target {
                    Some(t) if rec.energy_exact.act(g) == t.energy_exact && (!rec.k.is_zero() || t == rec) => {}
                    _ => {
                        bad.push(format!("{g} on {}", rec.key()));
                        return Ok(bad);
                    }
                }
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "θ_g |G,r,k,t⟩ = |G,r,lk,t⟩ for r ≤ 3", "action on wavelets", || {
        let mut bad = Vec::new();
        for g in WreathElement::enumerate(Variant::ComplexSingle { r_prime: 2 })?.iter().filter(|g| g.eps() == &[[1; 3]; 2]) {
            for r in 0..=3 {
                for k in Momentum::all() {
                    let orbits: Vec<Orbit> = block_orbits(r, k)?;
                    for o in &orbits {
                        if act_on_vector(g, &wavelet(o, k)?) != wavelet(o, k.scaled(g.l()))? {
                            bad.push(format!("{g} r={r} k={k} t={:?}", o.t()));
                        }
                    }
                }
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "actions are additive and multiplicative", "field automorphisms", || {
        let g = reuse(&group)?;
        let mut bad = Vec::new();
        let xs = sample_quads();
        for (i, g) in g.iter().enumerate().step_by(5) {
            let x = &xs[i % xs.len()];
            let y = &xs[(i * 7 + 3) % xs.len()];
            if x.checked_mul(y)?.act(g) != x.act(g).checked_mul(&y.act(g))?
                || x.checked_add(y)?.act(g) != x.act(g).checked_add(&y.act(g))?
            {
                bad.push(format!("{g}"));
            }
        }
        Ok(bad)
    }));
    out.push(all_hold(s, "⟨θa, θb⟩ = g⟨a, b⟩ and (Θ A)† = Θ(A†)", "field automorphisms", || {
        let g = reuse(&group)?;
        let mut bad = Vec::new();
        let tab = borrow(&table)?;
        let a = &tab[find(tab, Momentum::new(1))].1.s[1];
        let u = a.column(0);
        let v = a.column(2);
        for g in g.iter().step_by(3) {
            if inner(&act_on_vector(g, &u), &act_on_vector(g, &v)) != inner(&u, &v).act(g) {
                bad.push(format!("inner product under {g}"));
            }
            if act_on_operator(g, a).adjoint() != act_on_operator(g, &a.adjoint()) {
                bad.push(format!("adjoint under {g}"));
            }
        }
        Ok(bad)
    }));
    out
}

/// Deterministic sample of `Q(ω, √Δ)` elements sharing one tag.
fn sample_quads() -> Vec<QuadNum<CycNum>> {
    let tag = DiscTag::all()[1];
    (0..12i64)
        .map(|i| {
            let a = CycNum::from_ints([i - 5, 2 * i % 7, -i, 3, i % 4, 1 - i]);
            let b = CycNum::from_ints([1, i % 3, 0, -2 * i, 5 - i, i % 5]);
            QuadNum::new(a, b, tag)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_numbers_round_trip() {
        for s in Section::ALL {
            assert_eq!(Section::from_number(s.number()).unwrap(), s);
        }
        assert!(Section::from_number(1).is_err());
        assert!(Section::from_number(8).is_err());
    }

    #[test]
    fn every_check_passes() {
        let report = run_all();
        let failures: Vec<String> = report.failures().map(|c| c.to_string()).collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
        assert!(report.len() >= 40);
    }
}
