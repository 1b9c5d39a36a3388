//! Algebraic invariants of the number fields and group actions, checked against
//! oracles written here from first principles.

use heptagon::galois::action::GaloisAct;
use heptagon::galois::{Variant, WreathElement};
use heptagon::model::energies;
use heptagon::numbers::{
    embed, project, sqrt_in_rho, CycAut, CycNum, DiscTag, Field, Momentum, QuadNum, Rat, RhoNum,
    SqrtOutcome,
};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64) -> Rat {
    BigRational::from_integer(n.into())
}

/// Dense polynomial product followed by reduction with `x⁶ = −(1 + x + … + x⁵)`.
fn oracle_cyc_mul(a: &[Rat; 6], b: &[Rat; 6]) -> [Rat; 6] {
    let mut p = vec![q(0); 11];
    for i in 0..6 {
        for j in 0..6 {
            p[i + j] += &a[i] * &b[j];
        }
    }
    for d in (6..11).rev() {
        let c = std::mem::replace(&mut p[d], q(0));
        for e in 0..6 {
            p[d - 6 + e] -= &c;
        }
    }
    std::array::from_fn(|i| p[i].clone())
}

/// `ρ³ = 1 + 2ρ − ρ²`.
fn oracle_rho_mul(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    let mut p = vec![q(0); 5];
    for i in 0..3 {
        for j in 0..3 {
            p[i + j] += &a[i] * &b[j];
        }
    }
    for d in (3..5).rev() {
        let c = std::mem::replace(&mut p[d], q(0));
        p[d - 3] += &c;
        p[d - 2] += &c * q(2);
        p[d - 1] -= &c;
    }
    std::array::from_fn(|i| p[i].clone())
}

/// Determinant by fraction-exact Gaussian elimination.
fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut d = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !Zero::is_zero(&m[r][c])) else { return q(0) };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for j in c..n {
                let s = &f * &m[c][j];
                m[r][j] -= s;
            }
        }
    }
    d
}

/// Norm as the determinant of multiplication by `x` on the power basis.
fn oracle_cyc_norm(x: &[Rat; 6]) -> Rat {
    let cols: Vec<[Rat; 6]> = (0..6)
        .map(|j| {
            let mut e: [Rat; 6] = std::array::from_fn(|_| q(0));
            e[j] = q(1);
            oracle_cyc_mul(x, &e)
        })
        .collect();
    det((0..6).map(|i| (0..6).map(|j| cols[j][i].clone()).collect()).collect())
}

fn oracle_rho_norm(x: &[Rat; 3]) -> Rat {
    let cols: Vec<[Rat; 3]> = (0..3)
        .map(|j| {
            let mut e: [Rat; 3] = std::array::from_fn(|_| q(0));
            e[j] = q(1);
            oracle_rho_mul(x, &e)
        })
        .collect();
    det((0..3).map(|i| (0..3).map(|j| cols[j][i].clone()).collect()).collect())
}

type Poly = Vec<Rat>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub_mul(a: &Poly, c: &Rat, shift: usize, b: &Poly) -> Poly {
    let mut out = a.clone();
    out.resize(out.len().max(b.len() + shift), q(0));
    for (i, bi) in b.iter().enumerate() {
        out[i + shift] -= c * bi;
    }
    trim(out)
}

fn poly_divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = trim(a.clone());
    let mut quo = vec![q(0); r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / b.last().unwrap();
        quo[shift] += &c;
        r = poly_sub_mul(&r, &c, shift, b);
    }
    (trim(quo), r)
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut p = vec![q(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j] += x * y;
        }
    }
    trim(p)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    out.resize(a.len().max(b.len()), q(0));
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Inverse modulo `Φ₇` by the extended Euclidean algorithm.
fn oracle_cyc_inv(x: &[Rat; 6]) -> [Rat; 6] {
    let phi: Poly = vec![q(1); 7];
    let (mut r0, mut r1) = (phi, trim(x.to_vec()));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![q(1)]);
    while r1.len() > 1 {
        let (quo, rem) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&quo, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let c = r1[0].clone();
    let (_, s) = poly_divmod(&s1, &vec![q(1); 7]);
    std::array::from_fn(|i| s.get(i).map(|v| v / &c).unwrap_or_else(|| q(0)))
}

fn oracle_embed(x: &[Rat; 6], l: i64) -> (f64, f64) {
    use num_traits::ToPrimitive;
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, c) in x.iter().enumerate() {
        let theta = 2.0 * std::f64::consts::PI * ((j as i64 * l) % 7) as f64 / 7.0;
        let c = c.to_f64().unwrap();
        re += c * theta.cos();
        im += c * theta.sin();
    }
    (re, im)
}

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn cyc() -> impl Strategy<Value = CycNum> {
    (prop::array::uniform6(small()), 1i64..=3).prop_map(|(c, d)| CycNum::from_ints(c).scale(&Rat::new(1.into(), d.into())))
}

fn rho() -> impl Strategy<Value = RhoNum> {
    (prop::array::uniform3(small()), 1i64..=3).prop_map(|(c, d)| RhoNum::from_ints(c).scale(&Rat::new(1.into(), d.into())))
}

fn aut() -> impl Strategy<Value = CycAut> {
    (1i64..=6).prop_map(|l| CycAut::new(l).unwrap())
}

fn tag() -> impl Strategy<Value = DiscTag> {
    (0usize..6).prop_map(|i| DiscTag::all()[i])
}

fn element() -> impl Strategy<Value = WreathElement> {
    (0usize..384).prop_map(|i| WreathElement::enumerate(Variant::ComplexDouble).unwrap()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cyclotomic_product_matches_polynomial_reduction(x in cyc(), y in cyc()) {
        let want = CycNum::new(oracle_cyc_mul(x.coeffs(), y.coeffs()));
        prop_assert_eq!(x * y, want);
    }

    #[test]
    fn real_product_matches_polynomial_reduction(x in rho(), y in rho()) {
        let want = RhoNum::new(oracle_rho_mul(x.coeffs(), y.coeffs()));
        prop_assert_eq!(x * y, want);
    }

    #[test]
    fn norms_are_multiplicative(x in rho(), y in rho(), a in cyc(), b in cyc()) {
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn field_axioms(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() + CycNum::zero(), x.clone());
        prop_assert_eq!(x.clone() * CycNum::one(), x.clone());
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.inv().unwrap(), CycNum::one());
        }
    }

    #[test]
    fn norm_is_the_multiplication_determinant(x in cyc(), r in rho()) {
        prop_assert_eq!(x.norm(), oracle_cyc_norm(x.coeffs()));
        prop_assert_eq!(r.norm(), oracle_rho_norm(r.coeffs()));
    }

    #[test]
    fn inverse_matches_extended_euclid(x in cyc()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.inv().unwrap(), CycNum::new(oracle_cyc_inv(x.coeffs())));
    }

    #[test]
    fn automorphisms_are_ring_homomorphisms(x in cyc(), y in cyc(), t in aut()) {
        prop_assert_eq!((x.clone() * y.clone()).apply_aut(t), x.apply_aut(t) * y.apply_aut(t));
        prop_assert_eq!((x.clone() + y.clone()).apply_aut(t), x.apply_aut(t) + y.apply_aut(t));
        prop_assert_eq!(x.conj(), x.apply_aut(CycAut::new(6).unwrap()));
    }

    #[test]
    fn real_subfield_is_the_conjugation_fixed_part(x in rho(), y in cyc()) {
        prop_assert_eq!(project(&embed(&x)).unwrap(), x);
        let sym = y.clone() + y.conj();
        prop_assert_eq!(embed(&project(&sym).unwrap()), sym);
    }

    #[test]
    fn embeddings_agree_with_direct_evaluation(x in cyc(), t in aut()) {
        let z = x.numeric_embed(t).unwrap();
        let (re, im) = oracle_embed(x.coeffs(), t.value());
        prop_assert!((z.re - re).abs() <= 1e-12 * (1.0 + re.abs()));
        prop_assert!((z.im - im).abs() <= 1e-12 * (1.0 + im.abs()));
    }

    #[test]
    fn quadratic_arithmetic(a in cyc(), b in cyc(), c in cyc(), d in cyc(), t in tag()) {
        let x = QuadNum::new(a, b, t);
        let y = QuadNum::new(c, d, t);
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy.rel_norm(), x.rel_norm() * y.rel_norm());
        if !x.is_zero() {
            prop_assert_eq!(x.checked_mul(&x.inv().unwrap()).unwrap(), QuadNum::one());
        }
    }

    #[test]
    fn group_action_is_an_action(g in element(), h in element(), a in cyc(), b in cyc(), t in tag()) {
        let x = QuadNum::new(a, b, t);
        let gh = g.mul(&h).unwrap();
        prop_assert_eq!(x.act(&gh), x.act(&h).act(&g));
        prop_assert_eq!(x.act(&WreathElement::identity(Variant::ComplexDouble)), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn square_roots_are_recovered(y in rho()) {
        prop_assume!(!y.is_zero());
        match sqrt_in_rho(&(y.clone() * y.clone())).unwrap() {
            SqrtOutcome::Square(s) => prop_assert!(s == y || s == -y.clone()),
            SqrtOutcome::NonSquare(c) => prop_assert!(false, "square reported as nonsquare: {c:?}"),
        }
    }
}

#[test]
fn momentum_reversal_preserves_every_level() {
    for rp in 0..=3 {
        for k in Momentum::all() {
            assert_eq!(energies(rp, k).unwrap(), energies(rp, k.neg()).unwrap(), "r'={rp} k={k}");
        }
    }
}

#[test]
fn euclid_oracle_sanity() {
    let one: [Rat; 6] = std::array::from_fn(|i| if i == 0 { q(1) } else { q(0) });
    assert_eq!(oracle_cyc_inv(&one), one);
}
