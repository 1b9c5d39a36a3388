//! Numeric Hamiltonians built only from the integer matrices and `exp(2πi·kj/7)`.

use std::f64::consts::PI;

use crate::error::Result;
use crate::linalg::Label;
use crate::model::hamiltonian::{hamiltonian_arith, to_integer_rows};

use super::jacobi::{jacobi_eigenvalues, DenseSym};

const N: usize = 7;

/// `⊕_r H_r`, the `128×128` Hamiltonian in the configuration basis.
pub fn full_hamiltonian() -> Result<DenseSym> {
    let blocks: Vec<Vec<Vec<i64>>> = (0..=N)
        .map(|r| hamiltonian_arith(r).map(|h| to_integer_rows(&h)))
        .collect::<Result<_>>()?;
    let dim: usize = blocks.iter().map(Vec::len).sum();
    let mut rows = vec![vec![0.0; dim]; dim];
    let mut off = 0;
    for b in &blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                rows[off + i][off + j] = x as f64;
            }
        }
        off += b.len();
    }
    DenseSym::from_rows(&rows)
}

/// Exact integer trace of `⊕_r H_r`.
pub fn integer_trace() -> Result<i64> {
    let mut t = 0;
    for r in 0..=N {
        let h = to_integer_rows(&hamiltonian_arith(r)?);
        t += (0..h.len()).map(|i| h[i][i]).sum::<i64>();
    }
    Ok(t)
}

fn nodes_of(label: &Label) -> Vec<usize> {
    match label {
        Label::Config(j) => j.iter().map(|&x| x as usize).collect(),
        other => panic!("configuration label expected, got {other}"),
    }
}

fn shift(nodes: &[usize], s: usize) -> Vec<usize> {
    let mut v: Vec<usize> = nodes.iter().map(|&j| (j - 1 + s) % N + 1).collect();
    v.sort();
    v
}

/// Orbits of the configuration labels under translation; each orbit lists indices
/// `members[j]` of `representative + j`.
fn orbits(labels: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; labels.len()];
    let mut out = Vec::new();
    for start in 0..labels.len() {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        for s in 0..N {
            let image = shift(&labels[start], s);
            let i = labels.iter().position(|l| *l == image).expect("closed under shifts");
            if members.contains(&i) {
                break;
            }
            seen[i] = true;
            members.push(i);
        }
        out.push(members);
    }
    out
}

/// Eigenvalues of `H_r^k`, from `U† H_r U` with orthonormal Fourier vectors
/// `(1/√p) Σ_j e^{−2πikj/7} |c + j⟩` over orbits of period `p`.
pub fn block_eigenvalues(r: usize, k: i64, tol: f64) -> Result<Vec<f64>> {
    let h = hamiltonian_arith(r)?;
    let labels: Vec<Vec<usize>> = h.row_labels().iter().map(nodes_of).collect();
    let h = to_integer_rows(&h);
    let dim = h.len();
    let mut basis: Vec<Vec<(f64, f64)>> = Vec::new();
    for members in orbits(&labels) {
        let p = members.len();
        if (k * p as i64).rem_euclid(N as i64) != 0 {
            continue;
        }
        let norm = 1.0 / (p as f64).sqrt();
        let mut v = vec![(0.0, 0.0); dim];
        for (j, &i) in members.iter().enumerate() {
            let phase = -2.0 * PI * (k * j as i64) as f64 / N as f64;
            v[i] = (norm * phase.cos(), norm * phase.sin());
        }
        basis.push(v);
    }
    let m = basis.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    // B[a][b] = ⟨u_a| H |u_b⟩.
    let mut re = vec![vec![0.0; m]; m];
    let mut im = vec![vec![0.0; m]; m];
    for (b, ub) in basis.iter().enumerate() {
        let hu: Vec<(f64, f64)> = (0..dim)
            .map(|i| {
                (0..dim).fold((0.0, 0.0), |(x, y), j| {
                    let c = h[i][j] as f64;
                    (x + c * ub[j].0, y + c * ub[j].1)
                })
            })
            .collect();
        for (a, ua) in basis.iter().enumerate() {
            let (mut x, mut y) = (0.0, 0.0);
            for i in 0..dim {
                x += ua[i].0 * hu[i].0 + ua[i].1 * hu[i].1;
                y += ua[i].0 * hu[i].1 - ua[i].1 * hu[i].0;
            }
            re[a][b] = x;
            im[a][b] = y;
        }
    }
    let doubled = jacobi_eigenvalues(&DenseSym::real_embedding(&re, &im)?, tol)?;
    Ok(doubled.into_iter().step_by(2).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::jacobi::DEFAULT_TOL;

    #[test]
    fn blocks_reassemble_levels() {
        for r in 0..=N {
            let global = jacobi_eigenvalues(
                &DenseSym::from_rows(
                    &to_integer_rows(&hamiltonian_arith(r).unwrap())
                        .iter()
                        .map(|row| row.iter().map(|&x| x as f64).collect())
                        .collect::<Vec<_>>(),
                )
                .unwrap(),
                DEFAULT_TOL,
            )
            .unwrap();
            let mut parts: Vec<f64> = (-3..=3)
                .flat_map(|k| block_eigenvalues(r, k, DEFAULT_TOL).unwrap())
                .collect();
            parts.sort_by(f64::total_cmp);
            assert_eq!(parts.len(), global.len());
            assert!(parts.iter().zip(&global).all(|(a, b)| (a - b).abs() < 1e-9), "r={r}");
        }
    }

    #[test]
    fn trace_is_integral() {
        let h = full_hamiltonian().unwrap();
        assert_eq!(h.n(), 128);
        assert_eq!(h.trace(), integer_trace().unwrap() as f64);
    }
}
