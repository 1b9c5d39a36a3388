//! The integer Hamiltonian and the spin-lowering operator in the configuration basis.

use std::collections::HashMap;

use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::numbers::{rat, Rat};

use super::config::{build_configs_n, Config, NODES};

fn index_of(configs: &[Config]) -> HashMap<Config, usize> {
    configs.iter().enumerate().map(|(i, &c)| (c, i)).collect()
}

fn labels(configs: &[Config]) -> Vec<crate::linalg::Label> {
    configs.iter().map(|c| c.label()).collect()
}

/// `H_r` on an `n`-node ring: `+1` per single-spin hop to an adjacent empty node,
/// `−(number of hops)` on the diagonal.
pub fn hamiltonian_arith_n(n: usize, r: usize) -> Result<ExactMatrix<Rat>> {
    let configs = build_configs_n(n, r)?;
    let idx = index_of(&configs);
    let mut h = ExactMatrix::zeros(configs.len(), configs.len());
    for (i, c) in configs.iter().enumerate() {
        let hops = c.hops();
        h.set(i, i, rat(-(hops.len() as i64)));
        for d in hops {
            h.set(idx[&d], i, rat(1));
        }
    }
    let l = labels(&configs);
    Ok(h.with_labels(l.clone(), l))
}

pub fn hamiltonian_arith(r: usize) -> Result<ExactMatrix<Rat>> {
    hamiltonian_arith_n(NODES, r)
}

/// `S⁻` from level `r` to `r + 1`: `|j⟩ ↦ Σ_{i ∉ j} |j ∪ {i}⟩`.
pub fn s_minus_n(n: usize, r: usize) -> Result<ExactMatrix<Rat>> {
    let src = build_configs_n(n, r)?;
    let dst = build_configs_n(n, r + 1)?;
    let idx = index_of(&dst);
    let mut s = ExactMatrix::zeros(dst.len(), src.len());
    for (j, c) in src.iter().enumerate() {
        for i in 1..=n {
            if !c.contains(i) {
                let up = Config::new(n, c.mask() | 1 << (i - 1))?;
                s.set(idx[&up], j, rat(1));
            }
        }
    }
    Ok(s.with_labels(labels(&dst), labels(&src)))
}

pub fn s_minus(r: usize) -> Result<ExactMatrix<Rat>> {
    s_minus_n(NODES, r)
}

/// Integer entries of an integral rational matrix, row-major.
pub fn to_integer_rows(m: &ExactMatrix<Rat>) -> Vec<Vec<i64>> {
    m.to_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| {
                    assert!(q.is_integer(), "non-integral entry {q}");
                    i64::try_from(q.to_integer()).expect("small entry")
                })
                .collect()
        })
        .collect()
}

/// `H_{n−r}` recovered from `H_r` by mapping each configuration to its complement.
pub fn particle_hole_image(n: usize, r: usize) -> Result<ExactMatrix<Rat>> {
    let src = build_configs_n(n, r)?;
    let dst = build_configs_n(n, n - r)?;
    let idx = index_of(&dst);
    let h = hamiltonian_arith_n(n, r)?;
    let mut out = ExactMatrix::zeros(dst.len(), dst.len());
    for (i, a) in src.iter().enumerate() {
        for (j, b) in src.iter().enumerate() {
            out.set(idx[&a.complement()], idx[&b.complement()], h.get(i, j).clone());
        }
    }
    let l = labels(&dst);
    Ok(out.with_labels(l.clone(), l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::Field;

    #[test]
    fn vacuum_and_row_sums() {
        assert_eq!(hamiltonian_arith(0).unwrap(), ExactMatrix::zeros(1, 1));
        for r in 0..=7 {
            let h = hamiltonian_arith(r).unwrap();
            assert_eq!(h, h.transpose());
            for i in 0..h.rows() {
                assert!(h.row(i).into_iter().fold(Rat::zero(), |a, b| a + b).is_zero());
            }
        }
    }

    #[test]
    fn two_deviation_diagonal() {
        let h = hamiltonian_arith(2).unwrap();
        for (i, c) in build_configs_n(7, 2).unwrap().iter().enumerate() {
            let j = c.nodes();
            let adjacent = (j[1] - j[0]) % 7 == 1 || (j[0] + 7 - j[1]) % 7 == 1;
            assert_eq!(*h.get(i, i), rat(if adjacent { -2 } else { -4 }));
        }
    }

    #[test]
    fn lowering_operator() {
        let s0 = s_minus(0).unwrap();
        assert_eq!(s0.column(0), vec![rat(1); 7]);
        for r in 0..7 {
            let s = s_minus(r).unwrap();
            for j in 0..s.cols() {
                let sum = s.column(j).into_iter().fold(Rat::zero(), |a, b| a + b);
                assert_eq!(sum, rat(7 - r as i64));
            }
            let lhs = s.mul(&hamiltonian_arith(r).unwrap()).unwrap();
            let rhs = hamiltonian_arith(r + 1).unwrap().mul(&s).unwrap();
            assert_eq!(lhs, rhs, "r={r}");
        }
    }

    #[test]
    fn particle_hole() {
        for n in [5, 7] {
            for r in 0..=n {
                assert_eq!(particle_hole_image(n, r).unwrap(), hamiltonian_arith_n(n, n - r).unwrap());
            }
        }
    }
}
