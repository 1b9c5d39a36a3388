//! Galois wavelets `G_t = Σ_j ω^{−kj} |base_t + j⟩` and the blocks of `H` and `S⁻` in them.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Label};
use crate::numbers::{CycNum, Field, Momentum, Rat};

use super::config::{build_configs, build_orbits, Config, Orbit, NODES};
use super::hamiltonian::{hamiltonian_arith, s_minus};

/// Orbits whose wavelet at `k` is nonzero: every regular orbit, and the
/// translation-invariant ones only at `k = 0`.
pub fn block_orbits(r: usize, k: Momentum) -> Result<Vec<Orbit>> {
    Ok(build_orbits(r)?
        .into_iter()
        .filter(|o| o.is_regular() || k.is_zero())
        .collect())
}

pub fn block_dim(r: usize, k: Momentum) -> Result<usize> {
    Ok(block_orbits(r, k)?.len())
}

fn config_index(r: usize) -> Result<HashMap<Config, usize>> {
    Ok(build_configs(r)?.into_iter().enumerate().map(|(i, c)| (c, i)).collect())
}

fn orbit_labels(orbits: &[Orbit]) -> Vec<Label> {
    orbits.iter().map(Orbit::label).collect()
}

/// The wavelet of `orbit` at `k` in the configuration basis of its level.
pub fn wavelet(orbit: &Orbit, k: Momentum) -> Result<Vec<CycNum>> {
    let r = orbit.base().r();
    let idx = config_index(r)?;
    let mut v = vec![CycNum::zero(); idx.len()];
    for (j, c) in orbit.members().iter().enumerate() {
        v[idx[c]] = CycNum::omega_pow(-k.value() * j as i64);
    }
    Ok(v)
}

/// Writes `v`, assumed to lie in the span of the wavelets of `orbits`, in that basis.
/// Each wavelet has coefficient `1` at its base configuration and `0` at other bases.
pub fn wavelet_coordinates(v: &[CycNum], orbits: &[Orbit]) -> Result<Vec<CycNum>> {
    let Some(first) = orbits.first() else {
        return Ok(Vec::new());
    };
    let idx = config_index(first.base().r())?;
    Ok(orbits.iter().map(|o| v[idx[&o.base()]].clone()).collect())
}

/// `M v` for a rational matrix acting on a cyclotomic vector.
pub fn apply_rational(m: &ExactMatrix<Rat>, v: &[CycNum]) -> Vec<CycNum> {
    (0..m.rows())
        .map(|i| {
            let mut acc = CycNum::zero();
            for (j, x) in v.iter().enumerate() {
                let q = m.get(i, j);
                if !q.is_zero() && !x.is_zero() {
                    acc = acc + x.scale(q);
                }
            }
            acc
        })
        .collect()
}

/// Inverse of [`wavelet_coordinates`]: `Σ_t c_t G_t` in the configuration basis.
pub fn from_wavelet_coordinates(c: &[CycNum], r: usize, k: Momentum) -> Result<Vec<CycNum>> {
    let orbits = block_orbits(r, k)?;
    if c.len() != orbits.len() {
        return Err(Error::Dimension(format!(
            "{} coordinates for a {}-dimensional block",
            c.len(),
            orbits.len()
        )));
    }
    let mut v = vec![CycNum::zero(); config_index(r)?.len()];
    for (o, x) in orbits.iter().zip(c) {
        for (i, y) in wavelet(o, k)?.into_iter().enumerate() {
            if !y.is_zero() {
                v[i] = v[i].clone() + x.clone() * y;
            }
        }
    }
    Ok(v)
}

/// Block of a level-changing rational operator between wavelet bases at `k`.
fn block_of(op: &ExactMatrix<Rat>, from: &[Orbit], to: &[Orbit], k: Momentum) -> Result<ExactMatrix<CycNum>> {
    let mut cols = Vec::with_capacity(from.len());
    for o in from {
        cols.push(wavelet_coordinates(&apply_rational(op, &wavelet(o, k)?), to)?);
    }
    let m = if cols.is_empty() {
        ExactMatrix::zeros(to.len(), 0)
    } else {
        ExactMatrix::from_columns(&cols)?
    };
    Ok(m.with_labels(orbit_labels(to), orbit_labels(from)))
}

/// `H_r^k` in the wavelet basis, rows and columns in orbit order.
pub fn fourier_block(r: usize, k: Momentum) -> Result<ExactMatrix<CycNum>> {
    let orbits = block_orbits(r, k)?;
    block_of(&hamiltonian_arith(r)?, &orbits, &orbits, k)
}

/// `(S⁻)^dr` from `H_r^k` to `H_{r+dr}^k` in the wavelet bases.
pub fn s_block(r: usize, dr: usize, k: Momentum) -> Result<ExactMatrix<CycNum>> {
    if r + dr > NODES {
        return Err(Error::InvalidArgument(format!("r + dr = {} exceeds {NODES}", r + dr)));
    }
    let mut op = ExactMatrix::<Rat>::identity(build_configs(r)?.len());
    for level in r..r + dr {
        op = s_minus(level)?.mul(&op)?;
    }
    block_of(&op, &block_orbits(r, k)?, &block_orbits(r + dr, k)?, k)
}

/// All wavelets of level `r`, columns grouped by `k = −3..3`.
pub fn wavelet_transform(r: usize) -> Result<ExactMatrix<CycNum>> {
    let mut cols = Vec::new();
    for k in Momentum::all() {
        for o in block_orbits(r, k)? {
            cols.push(wavelet(&o, k)?);
        }
    }
    ExactMatrix::from_columns(&cols)
}

/// `⊕_k H_r^k` in the same column order as [`wavelet_transform`].
pub fn block_direct_sum(r: usize) -> Result<ExactMatrix<CycNum>> {
    let blocks = Momentum::all()
        .map(|k| fourier_block(r, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactMatrix::direct_sum(&blocks))
}

/// `ξ = ω^k`.
pub fn xi(k: Momentum) -> CycNum {
    CycNum::omega_pow(k.value())
}

/// `ξ^e`.
pub fn xi_pow(k: Momentum, e: i64) -> CycNum {
    CycNum::omega_pow(k.value() * e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;

    fn x(k: Momentum, e: i64) -> CycNum {
        CycNum::omega_pow(k.value() * e)
    }

    fn c(n: i64) -> CycNum {
        CycNum::from_rat(rat(n))
    }

    #[test]
    fn one_deviation_block() {
        for k in Momentum::all() {
            let b = fourier_block(1, k).unwrap();
            assert_eq!(b.to_rows(), vec![vec![c(-2) + x(k, 1) + x(k, -1)]]);
        }
        assert_eq!(fourier_block(0, Momentum::ZERO).unwrap().to_rows(), vec![vec![c(0)]]);
        assert_eq!(block_dim(0, Momentum::new(1)).unwrap(), 0);
    }

    #[test]
    fn two_deviation_block() {
        for k in Momentum::all() {
            let b = fourier_block(2, k).unwrap();
            let want = vec![
                vec![c(-2), c(1) + x(k, 1), c(0)],
                vec![c(1) + x(k, -1), c(-4), c(1) + x(k, 1)],
                vec![c(0), c(1) + x(k, -1), c(-4) + x(k, 3) + x(k, -3)],
            ];
            assert_eq!(b.to_rows(), want, "k={k}");
        }
    }

    #[test]
    fn block_diagonalization() {
        for r in 0..=7 {
            let w = wavelet_transform(r).unwrap();
            assert_eq!(w.rank().unwrap(), w.rows());
            let h = hamiltonian_arith(r).unwrap().map(|q| CycNum::from_rat(q.clone()));
            let lhs = h.mul(&w).unwrap();
            let rhs = w.mul(&block_direct_sum(r).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "r={r}");
        }
    }

    #[test]
    fn wavelet_round_trip() {
        let k = Momentum::new(2);
        let c3 = vec![c(1), x(k, 1), c(0), c(-2), x(k, 3)];
        let v = from_wavelet_coordinates(&c3, 3, k).unwrap();
        assert_eq!(wavelet_coordinates(&v, &block_orbits(3, k).unwrap()).unwrap(), c3);
        assert!(from_wavelet_coordinates(&c3[..2], 3, k).is_err());
    }
}
