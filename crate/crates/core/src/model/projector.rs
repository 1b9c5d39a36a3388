//! Weight-space projectors and qubit density matrices inside the blocks `H_r^k`.

use crate::error::{Error, Result};
use crate::linalg::{outer, inner, projector_onto, ExactMatrix};
use crate::numbers::{embed, CycNum, Field, Momentum, QuadNum, RhoNum};

use super::qubit::{disc_tag, energies, weight_basis};
use super::wavelet::{block_dim, fourier_block, s_block};

fn check_levels(r: usize, r_prime: usize) -> Result<()> {
    if r_prime > r || r_prime > 3 || r + r_prime > 7 {
        return Err(Error::InvalidArgument(format!("no weight {r_prime} inside level {r}")));
    }
    Ok(())
}

/// Basis of `H_{r,r′}^k = (S⁻)^{r−r′} H_{r′,r′}^k` in the wavelet coordinates of `H_r^k`.
pub fn weight_space_basis(r: usize, r_prime: usize, k: Momentum) -> Result<Vec<Vec<CycNum>>> {
    check_levels(r, r_prime)?;
    let hw = weight_basis(r_prime, k)?;
    if r == r_prime {
        return Ok(hw);
    }
    let s = s_block(r_prime, r - r_prime, k)?;
    hw.iter().map(|v| s.mul_vec(v)).collect()
}

/// Orthogonal projector of `H_r^k` onto `H_{r,r′}^k`, as `B (B†B)⁻¹ B†`.
pub fn projector(r: usize, r_prime: usize, k: Momentum) -> Result<ExactMatrix<CycNum>> {
    let dim = block_dim(r, k)?;
    projector_onto(&weight_space_basis(r, r_prime, k)?, dim)
}

fn lift(m: &ExactMatrix<CycNum>) -> ExactMatrix<QuadNum<CycNum>> {
    m.map(|x| QuadNum::from_base(x.clone()))
}

/// `[ϱ_{+1}, ϱ_{−1}]` on `H_{r,r′}^k` for `r′ ∈ {2,3}`.
///
/// For `k ≠ 0`: `ϱ_ν = ν (H_r P − E_{−ν} P) / √Δ_{r′}^k`. For `k = 0`: `|v⟩⟨v| / ⟨v|v⟩`
/// on the images of the explicit eigenvectors.
pub fn density_matrices(
    r: usize,
    r_prime: usize,
    k: Momentum,
) -> Result<[ExactMatrix<QuadNum<CycNum>>; 2]> {
    check_levels(r, r_prime)?;
    if !(2..=3).contains(&r_prime) {
        return Err(Error::InvalidArgument(format!("qubit weight must be 2 or 3, got {r_prime}")));
    }
    if k.is_zero() {
        let vs = weight_space_basis(r, r_prime, k)?;
        let rho = |v: &Vec<CycNum>| -> Result<ExactMatrix<QuadNum<CycNum>>> {
            let n = inner(v, v).inv()?;
            Ok(lift(&outer(v, v).scale(&n)))
        };
        return Ok([rho(&vs[0])?, rho(&vs[1])?]);
    }
    let p = projector(r, r_prime, k)?;
    let hp = fourier_block(r, k)?.mul(&p)?;
    let tag = disc_tag(r_prime, k)?;
    let disc_inv = embed(&tag.value()).inv()?;
    let levels = energies(r_prime, k)?;
    let one = |nu: i8| -> Result<ExactMatrix<QuadNum<CycNum>>> {
        let other = &levels.iter().find(|l| l.nu == Some(-nu)).expect("both qubit levels").energy;
        let a = embed(other.a());
        let b = embed(other.b());
        let sign = CycNum::from_rat(crate::numbers::rat(nu as i64));
        let root_part = hp.sub(&p.scale(&a))?.scale(&(sign.clone() * disc_inv.clone()));
        let base_part = p.scale(&-(sign * b));
        let mut out = ExactMatrix::zeros(p.rows(), p.cols());
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                out.set(
                    i,
                    j,
                    QuadNum::new(base_part.get(i, j).clone(), root_part.get(i, j).clone(), tag),
                );
            }
        }
        Ok(out)
    };
    Ok([one(1)?, one(-1)?])
}

/// Energy of `ϱ_ν` lifted into the cyclotomic quadratic field.
pub fn lifted_energy(e: &QuadNum<RhoNum>) -> QuadNum<CycNum> {
    match e.tag() {
        Some(t) => QuadNum::new(embed(e.a()), embed(e.b()), t),
        None => QuadNum::from_base(embed(e.a())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;

    #[test]
    fn projectors_are_complete() {
        for k in Momentum::all() {
            for r in [2usize, 3] {
                let mut sum = ExactMatrix::zeros(block_dim(r, k).unwrap(), block_dim(r, k).unwrap());
                for r_prime in 0..=r {
                    let p = projector(r, r_prime, k).unwrap();
                    assert_eq!(p.mul(&p).unwrap(), p);
                    assert!(p.is_hermitian());
                    sum = sum.add(&p).unwrap();
                }
                assert_eq!(sum, ExactMatrix::identity(sum.rows()), "r={r} k={k}");
            }
        }
    }

    #[test]
    fn two_deviation_closed_form() {
        for k in Momentum::nonzero() {
            let s = s_block(1, 1, k).unwrap();
            let p = s.mul(&s.adjoint()).unwrap().scale(&CycNum::from_rat(crate::numbers::ratio(1, 5)));
            assert_eq!(projector(2, 1, k).unwrap(), p);
        }
    }

    #[test]
    fn density_identities() {
        for k in [Momentum::ZERO, Momentum::new(1), Momentum::new(-2), Momentum::new(3)] {
            for (r, r_prime) in [(2, 2), (3, 2), (3, 3)] {
                let [a, b] = density_matrices(r, r_prime, k).unwrap();
                let p = lift(&projector(r, r_prime, k).unwrap());
                assert_eq!(a.add(&b).unwrap(), p);
                let h = lift(&fourier_block(r, k).unwrap());
                for (rho, level) in [a, b].iter().zip(energies(r_prime, k).unwrap()) {
                    assert_eq!(rho.mul(rho).unwrap(), *rho);
                    assert_eq!(rho.trace(), QuadNum::from_base(CycNum::from_rat(rat(1))));
                    let e = lifted_energy(&level.energy);
                    assert_eq!(h.mul(rho).unwrap(), rho.scale(&e), "r={r} r'={r_prime} k={k}");
                }
            }
        }
    }
}
