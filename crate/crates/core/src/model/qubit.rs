//! Highest-weight (Galois qubit) subspaces, their 2×2 Hamiltonians and energies.

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::numbers::{
    project, rat, ratio, CycNum, DiscTag, Field, Momentum, QuadNum, Rat, RhoNum,
};
use crate::numbers::rat::rational_sqrt;

use super::config::{build_configs, Config, NODES};
use super::wavelet::{block_orbits, fourier_block, s_block, wavelet_coordinates, xi_pow};

fn check_qubit_weight(r_prime: usize) -> Result<()> {
    if !(2..=3).contains(&r_prime) {
        return Err(Error::InvalidArgument(format!("qubit weight must be 2 or 3, got {r_prime}")));
    }
    Ok(())
}

fn c(n: i64) -> CycNum {
    CycNum::from_rat(rat(n))
}

fn ints(v: &[i64]) -> Vec<CycNum> {
    v.iter().map(|&n| c(n)).collect()
}

/// The explicit basis of `H_{r′,r′}^k` in wavelet coordinates.
///
/// For `k = 0` the vectors are eigenvectors, ordered `ν = +1, −1` for `r′ = 2`.
pub fn highest_weight_basis(r_prime: usize, k: Momentum) -> Result<Vec<Vec<CycNum>>> {
    check_qubit_weight(r_prime)?;
    if k.is_zero() {
        return Ok(match r_prime {
            2 => vec![ints(&[-1, 0, 1]), ints(&[1, -2, 1])],
            _ => vec![ints(&[2, -3, 2, -3, 2]), ints(&[0, 1, 0, -1, 0])],
        });
    }
    let x = |e: i64| xi_pow(k, e);
    Ok(match r_prime {
        2 => vec![
            vec![c(1) + x(2), -(c(1) + x(1)), c(0)],
            vec![c(1) - x(1) + x(2), c(0), c(-1)],
        ],
        _ => vec![
            vec![
                c(0),
                -(c(1) + x(-2)),
                -(x(2) - x(-2)),
                c(1) + x(2),
                x(-1) - x(-2),
            ],
            vec![x(1) - x(5), x(5) + x(6), c(0), -(x(1) + x(2)), x(3) - x(1)],
        ],
    })
}

/// A basis of `ker (S⁻: H_{r′−1}^k → H_{r′}^k)†`, found by elimination over `Q(ω)`.
pub fn highest_weight_kernel(r_prime: usize, k: Momentum) -> Result<Vec<Vec<CycNum>>> {
    if r_prime == 0 {
        return Ok(if k.is_zero() { vec![vec![c(1)]] } else { Vec::new() });
    }
    s_block(r_prime - 1, 1, k)?.adjoint().kernel()
}

/// Basis of the highest-weight space for any weight `0..=3`: the explicit vectors for
/// `r′ ≥ 2`, the single wavelet otherwise.
pub fn weight_basis(r_prime: usize, k: Momentum) -> Result<Vec<Vec<CycNum>>> {
    match r_prime {
        0 | 1 => highest_weight_kernel(r_prime, k),
        _ => highest_weight_basis(r_prime, k),
    }
}

/// `Σ_j ξ^{−j} ⊙_α (|a_α + j⟩ − |b_α + j⟩)` in wavelet coordinates, nodes taken mod 7.
pub fn singlet_product_vector(pairs: &[(usize, usize)], k: Momentum) -> Result<Vec<CycNum>> {
    let r = pairs.len();
    let idx: std::collections::HashMap<Config, usize> =
        build_configs(r)?.into_iter().enumerate().map(|(i, c)| (c, i)).collect();
    let node = |a: usize, j: usize| (a + j - 1) % NODES + 1;
    let mut v = vec![CycNum::zero(); idx.len()];
    for j in 0..NODES {
        let phase = xi_pow(k, -(j as i64));
        for choice in 0u32..(1 << r) {
            let mut nodes = Vec::with_capacity(r);
            let mut negative = false;
            for (alpha, &(a, b)) in pairs.iter().enumerate() {
                if choice >> alpha & 1 == 1 {
                    nodes.push(node(b, j));
                    negative = !negative;
                } else {
                    nodes.push(node(a, j));
                }
            }
            let cfg = Config::from_nodes(NODES, &nodes)?;
            let term = if negative { -phase.clone() } else { phase.clone() };
            let i = idx[&cfg];
            v[i] = v[i].clone() + term;
        }
    }
    wavelet_coordinates(&v, &block_orbits(r, k)?)
}

/// `M` with `H V = V M`, for `V` the explicit highest-weight basis (any `k`).
pub fn qubit_block(r_prime: usize, k: Momentum) -> Result<ExactMatrix<CycNum>> {
    let v = ExactMatrix::from_columns(&highest_weight_basis(r_prime, k)?)?;
    let hv = fourier_block(r_prime, k)?.mul(&v)?;
    v.solve(&hv)
}

/// The qubit Hamiltonian for `k ≠ 0`; entries lie in `Q(ρ)`.
pub fn qubit_hamiltonian(r_prime: usize, k: Momentum) -> Result<ExactMatrix<RhoNum>> {
    if k.is_zero() {
        return Err(Error::InvalidArgument(
            "k = 0 qubits are described by their eigenvectors".into(),
        ));
    }
    qubit_block(r_prime, k)?.try_map(project)
}

/// `f(x) = (x+4)² − s(x+4) + d` with discriminant `s² − 4d`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    pub shifted_trace: RhoNum,
    pub shifted_det: RhoNum,
    pub disc: RhoNum,
}

impl CharPoly {
    fn from_matrix(m: &ExactMatrix<RhoNum>) -> Self {
        let four = RhoNum::from_rat(rat(4));
        let a = m.get(0, 0).clone() + four.clone();
        let d = m.get(1, 1).clone() + four;
        let s = a.clone() + d.clone();
        let det = a * d - m.get(0, 1).clone() * m.get(1, 0).clone();
        let disc = s.clone() * s.clone() - RhoNum::from_rat(rat(4)) * det.clone();
        CharPoly {
            shifted_trace: s,
            shifted_det: det,
            disc,
        }
    }

    /// Coefficients of `f` in `x`, constant term first.
    pub fn coefficients(&self) -> [RhoNum; 3] {
        let four = RhoNum::from_rat(rat(4));
        let s = &self.shifted_trace;
        [
            RhoNum::from_rat(rat(16)) - four.clone() * s.clone() + self.shifted_det.clone(),
            RhoNum::from_rat(rat(8)) - s.clone(),
            RhoNum::one(),
        ]
    }

    pub fn eval(&self, x: &QuadNum<RhoNum>) -> Result<QuadNum<RhoNum>> {
        let [c0, c1, c2] = self.coefficients();
        let lift = QuadNum::from_base;
        x.checked_mul(x)?
            .checked_mul(&lift(c2))?
            .checked_add(&x.checked_mul(&lift(c1))?)?
            .checked_add(&lift(c0))
    }
}

pub fn charpoly_disc(r_prime: usize, k: Momentum) -> Result<CharPoly> {
    let m = qubit_block(r_prime, k)?.try_map(project)?;
    Ok(CharPoly::from_matrix(&m))
}

/// The discriminant tag of a qubit at `k ≠ 0`.
pub fn disc_tag(r_prime: usize, k: Momentum) -> Result<DiscTag> {
    let class = k
        .class()
        .ok_or_else(|| Error::InvalidArgument("k = 0 has no discriminant".into()))?;
    DiscTag::new(r_prime as u8, class)
}

/// An energy level of a highest-weight space; `nu` is `±1` on qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub nu: Option<i8>,
    pub energy: QuadNum<RhoNum>,
}

/// Highest-weight energies at weight `r′`; empty where the weight space is.
/// Qubit levels are ordered `ν = +1, −1`, with `E_ν = ½(s + ν√Δ) − 4`.
pub fn energies(r_prime: usize, k: Momentum) -> Result<Vec<Level>> {
    match r_prime {
        0 | 1 => {
            if highest_weight_kernel(r_prime, k)?.is_empty() {
                return Ok(Vec::new());
            }
            let e = project(fourier_block(1.min(r_prime), k)?.get(0, 0))?;
            let e = if r_prime == 0 { RhoNum::zero() } else { e };
            Ok(vec![Level {
                nu: None,
                energy: QuadNum::from_base(e),
            }])
        }
        2 | 3 => {
            let cp = charpoly_disc(r_prime, k)?;
            let half = ratio(1, 2);
            let base = cp.shifted_trace.scale(&half) - RhoNum::from_rat(rat(4));
            let root: Vec<QuadNum<RhoNum>> = if k.is_zero() {
                let d = rational_disc(&cp.disc)?;
                let s = rational_sqrt(&d).ok_or_else(|| {
                    Error::Undecided(format!("k = 0 discriminant {d} is not a rational square"))
                })?;
                vec![
                    QuadNum::from_base(RhoNum::from_rat(s.clone() * half.clone())),
                    QuadNum::from_base(RhoNum::from_rat(-s * half)),
                ]
            } else {
                let tag = disc_tag(r_prime, k)?;
                if cp.disc != tag.value() {
                    return Err(Error::SpectrumMismatch(format!(
                        "discriminant {} differs from {tag} = {}",
                        cp.disc,
                        tag.value()
                    )));
                }
                let h = RhoNum::from_rat(half);
                vec![
                    QuadNum::new(RhoNum::zero(), h.clone(), tag),
                    QuadNum::new(RhoNum::zero(), -h, tag),
                ]
            };
            Ok([1i8, -1]
                .into_iter()
                .zip(root)
                .map(|(nu, r)| Level {
                    nu: Some(nu),
                    energy: QuadNum::from_base(base.clone()) + r,
                })
                .collect())
        }
        _ => Err(Error::InvalidArgument(format!("highest weight {r_prime} exceeds 3"))),
    }
}

fn rational_disc(d: &RhoNum) -> Result<Rat> {
    if !d.is_rational() {
        return Err(Error::Undecided(format!("discriminant {d} is irrational at k = 0")));
    }
    Ok(d.coeffs()[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::KClass;

    fn mu(k: Momentum, l: i64) -> RhoNum {
        RhoNum::rho_l(k.value() * l)
    }

    fn stacked_rank(a: &[Vec<CycNum>], b: &[Vec<CycNum>]) -> usize {
        let cols: Vec<Vec<CycNum>> = a.iter().chain(b).cloned().collect();
        ExactMatrix::from_columns(&cols).unwrap().rank().unwrap()
    }

    #[test]
    fn explicit_bases_span_the_kernel() {
        for r_prime in [2, 3] {
            for k in Momentum::all() {
                let explicit = highest_weight_basis(r_prime, k).unwrap();
                let kernel = highest_weight_kernel(r_prime, k).unwrap();
                assert_eq!(kernel.len(), 2);
                assert_eq!(stacked_rank(&explicit, &[]), 2);
                assert_eq!(stacked_rank(&explicit, &kernel), 2, "r'={r_prime} k={k}");
            }
        }
    }

    #[test]
    fn singlet_products_are_proportional() {
        for k in Momentum::nonzero() {
            let b = highest_weight_basis(3, k).unwrap();
            let x = |e: i64| xi_pow(k, e);
            let a = singlet_product_vector(&[(2, 1), (4, 3), (6, 5)], k).unwrap();
            let f = -(x(4) * (CycNum::one() + x(2)));
            assert_eq!(b[0], a.iter().map(|y| f.clone() * y.clone()).collect::<Vec<_>>());
            let s = singlet_product_vector(&[(1, 4), (2, 5), (3, 6)], k).unwrap();
            let f = x(1) * (CycNum::one() + x(1));
            assert_eq!(b[1], s.iter().map(|y| f.clone() * y.clone()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn qubit_hamiltonians() {
        let four = RhoNum::from_rat(rat(4));
        let one = RhoNum::one();
        let two = RhoNum::from_rat(rat(2));
        for k in Momentum::nonzero() {
            let h2 = qubit_hamiltonian(2, k).unwrap();
            let m = mu(k, 1);
            assert_eq!(h2.get(0, 0).clone(), -m.clone() - four.clone());
            assert_eq!(h2.get(0, 1).clone(), two.clone() - m.clone());
            assert_eq!(h2.get(1, 0).clone(), two.clone() + m.clone());
            assert_eq!(h2.get(1, 1).clone(), mu(k, 4) - four.clone());
            let h3 = qubit_hamiltonian(3, k).unwrap();
            let three = RhoNum::from_rat(rat(3));
            assert_eq!(h3.get(0, 0).clone(), -three - mu(k, 4) - four.clone());
            assert_eq!(h3.get(0, 1).clone(), mu(k, 2) - one.clone() - two.clone() * mu(k, 4));
            assert_eq!(h3.get(1, 0).clone(), one.clone() + mu(k, 2));
            assert_eq!(h3.get(1, 1).clone(), one.clone() + mu(k, 2) - four.clone());
        }
        assert!(qubit_hamiltonian(2, Momentum::ZERO).is_err());
        assert!(qubit_hamiltonian(4, Momentum::new(1)).is_err());
    }

    #[test]
    fn discriminants_and_energies() {
        for k in Momentum::nonzero() {
            for r_prime in [2, 3] {
                let cp = charpoly_disc(r_prime, k).unwrap();
                let tag = DiscTag::new(r_prime as u8, k.class().unwrap()).unwrap();
                assert_eq!(cp.disc, tag.value());
                for level in energies(r_prime, k).unwrap() {
                    assert!(cp.eval(&level.energy).unwrap().is_zero());
                }
                assert_eq!(energies(r_prime, k).unwrap(), energies(r_prime, k.neg()).unwrap());
            }
        }
        assert_eq!(
            DiscTag::new(3, KClass::Four).unwrap().value(),
            RhoNum::from_ints([9, 7, 10])
        );
    }

    #[test]
    fn zero_momentum_energies() {
        let e = |r_prime| -> Vec<RhoNum> {
            energies(r_prime, Momentum::ZERO)
                .unwrap()
                .into_iter()
                .map(|l| l.energy.a().clone())
                .collect()
        };
        assert_eq!(e(0), vec![RhoNum::zero()]);
        assert!(e(1).is_empty());
        assert_eq!(e(2), vec![RhoNum::from_ints([-2, 0, 0]), RhoNum::from_ints([-6, 0, 0])]);
        assert_eq!(e(3), vec![RhoNum::from_ints([-5, 0, 0]); 2]);
        assert!(energies(0, Momentum::new(3)).unwrap().is_empty());
    }
}
