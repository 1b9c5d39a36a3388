//! Exact arithmetic facts about the discriminants in `Z[ρ]`.

use num_traits::Signed;

use crate::numbers::rat::{factorize, is_prime};
use crate::numbers::real::{norm_linear_closed_form, norm_shift_closed_form};
use crate::numbers::{rat, sqrt_in_rho, DiscTag, Field, KClass, Rat, RhoNum, SqrtOutcome};
use crate::verify::Check;

const SECTION: u8 = 5;

fn r(c: [i64; 3]) -> RhoNum {
    RhoNum::from_ints(c)
}

/// `x + yρ`.
fn lin(x: i64, y: i64) -> RhoNum {
    r([x, y, 0])
}

fn tau(x: &RhoNum, e: u32) -> RhoNum {
    x.tau_pow(e)
}

fn disc(rp: u8, k: KClass) -> RhoNum {
    DiscTag::new(rp, k).expect("valid tag").value()
}

fn factor_string(n: u64) -> String {
    factorize(n)
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("·")
}

fn eq<T: PartialEq + std::fmt::Display>(name: &str, anchor: &str, expected: T, actual: T) -> Check {
    Check::equal(SECTION, name, anchor, &expected, &actual)
}

/// The three-magnon factorizations: `Δ₃^{τ^e(1)} = τ^e(5−3ρ) τ^{e+1}(3+ρ) τ^{e+1}(2−ρ)`.
pub fn three_magnon_factors(k: KClass) -> [RhoNum; 3] {
    let e = k.tau_exponent();
    [
        tau(&lin(5, -3), e),
        tau(&lin(3, 1), (e + 1) % 3),
        tau(&lin(2, -1), (e + 1) % 3),
    ]
}

pub fn arithmetic_identities() -> Vec<Check> {
    let mut out = Vec::new();
    let rho = RhoNum::rho();
    let a_anchor = "trace and norm";

    out.push(eq("trace of ρ", a_anchor, rat(-1), rho.trace()));
    out.push(eq("norm of ρ", a_anchor, rat(1), rho.norm()));
    out.push(eq(
        "trace of ρ² from the minimal polynomial",
        a_anchor,
        rat(5),
        (rho.clone() * rho.clone()).trace(),
    ));

    let mut closed_ok = true;
    let mut shift_ok = true;
    let samples = [(-3, 2), (0, 1), (1, 0), (5, -3), (5, 1), (7, 4), (-2, -9)];
    for &(x, y) in &samples {
        let v = lin(x, y);
        closed_ok &= norm_linear_closed_form(&rat(x), &rat(y)) == v.norm();
        let a = r([y, x, -y]);
        shift_ok &= norm_shift_closed_form(&rat(x), &a) == (RhoNum::from_rat(rat(x)) + a.clone()).norm();
    }
    out.push(Check::holds(
        SECTION,
        "norm of x+yρ equals x³−x²y−2xy²+y³",
        "norm closed form",
        closed_ok,
        "agreement on all samples",
        if closed_ok { "agreement on all samples" } else { "disagreement" },
    ));
    out.push(Check::holds(
        SECTION,
        "norm of x+a expands through tr(a), tr(a²), N(a)",
        "norm closed form",
        shift_ok,
        "agreement on all samples",
        if shift_ok { "agreement on all samples" } else { "disagreement" },
    ));

    for k in KClass::ALL {
        let d = disc(2, k);
        out.push(eq(&format!("N(Δ2^{k}) = 1289"), "two-magnon norm", rat(1289), d.norm()));
    }
    out.push(Check::holds(SECTION, "1289 is prime", "two-magnon norm", is_prime(1289), "prime", factor_string(1289)));

    let a = (rho.clone() - RhoNum::one()) * (rho.clone() - RhoNum::one());
    out.push(eq("(ρ−1)² = ρ₂ − 2ρ + 3", "two-magnon norm", RhoNum::rho_l(2) - rho.scale(&rat(2)) + RhoNum::from_rat(rat(3)), a.clone()));
    out.push(eq("Δ2^4 = 8 + (ρ−1)²", "two-magnon norm", disc(2, KClass::Four), RhoNum::from_rat(rat(8)) + a.clone()));
    out.push(eq("tr((ρ−1)²) = 10", "two-magnon norm", rat(10), a.trace()));
    let a2 = a.clone() * a.clone();
    out.push(eq(
        "(ρ−1)⁴ = 13ρ₂ − 13ρ + 22",
        "two-magnon norm",
        RhoNum::rho_l(2).scale(&rat(13)) - rho.scale(&rat(13)) + RhoNum::from_rat(rat(22)),
        a2.clone(),
    ));
    out.push(eq("tr((ρ−1)⁴) = 66", "two-magnon norm", rat(66), a2.trace()));

    for k in KClass::ALL {
        out.push(eq(&format!("N(Δ3^{k}) = 7553"), "three-magnon norm", rat(7553), disc(3, k).norm()));
    }
    out.push(eq("7553 = 7·13·83", "three-magnon norm", "7·13·83".to_string(), factor_string(7553)));
    out.push(eq("Δ3^1 = (5−3ρ)(5+ρ)", "three-magnon norm", disc(3, KClass::One), lin(5, -3) * lin(5, 1)));
    out.push(eq("N(5−3ρ) = 83", "three-magnon norm", rat(83), lin(5, -3).norm()));
    out.push(eq("N(5+ρ) = 91 = 7·13", "three-magnon norm", "91 = 7·13".to_string(), format!("{} = {}", lin(5, 1).norm(), factor_string(91))));

    for k in KClass::ALL {
        let [p, q, s] = three_magnon_factors(k);
        out.push(eq(
            &format!("Δ3^{k} factors as τ^e(5−3ρ)·τ^(e+1)(3+ρ)·τ^(e+1)(2−ρ)"),
            "three-magnon factorization",
            disc(3, k),
            p * q * s,
        ));
    }
    out.push(eq("τ²(5+ρ) = (3+ρ)(2−ρ)", "three-magnon factorization", tau(&lin(5, 1), 2), lin(3, 1) * lin(2, -1)));
    out.push(eq("N(3+ρ) = 13", "three-magnon factorization", rat(13), lin(3, 1).norm()));
    out.push(eq("N(2−ρ) = 7", "three-magnon factorization", rat(7), lin(2, -1).norm()));
    let primes_ok = [13u64, 83, 1289].iter().all(|&p| is_prime(p));
    out.push(Check::holds(SECTION, "13, 83 and 1289 are prime", "three-magnon factorization", primes_ok, "all prime", if primes_ok { "all prime" } else { "composite found" }));

    let u = tau(&lin(2, -1), 1) * lin(2, -1).inv().expect("nonzero");
    let unit = u.is_integral() && u.norm().abs() == rat(1);
    out.push(Check::holds(
        SECTION,
        "τ(2−ρ)/(2−ρ) is a unit of Z[ρ]",
        "ramified prime",
        unit,
        "integral with norm ±1",
        format!("{u}, norm {}", u.norm()),
    ));

    let mut conj_ok = true;
    for rp in [2u8, 3] {
        for k in KClass::ALL {
            for e in 0..3u32 {
                let target = KClass::from_residue(k.value() << e).expect("unit");
                conj_ok &= tau(&disc(rp, k), e) == disc(rp, target);
            }
        }
    }
    out.push(Check::holds(SECTION, "τ^e Δ_r^k = Δ_r^(2^e k)", "conjugate discriminants", conj_ok, "all conjugates match", if conj_ok { "all conjugates match" } else { "mismatch" }));

    let m7 = |n: &Rat| -> i64 {
        let n = i64::try_from(n.to_integer()).expect("small");
        n.rem_euclid(7)
    };
    out.push(eq("N(Δ2^1) ≡ 1 mod 7", "norm congruences", 1, m7(&disc(2, KClass::One).norm())));
    out.push(eq("N(3+ρ) ≡ −1 mod 7", "norm congruences", 6, m7(&lin(3, 1).norm())));

    for tag in DiscTag::all() {
        let name = format!("{tag} is not a square in Q(ρ)");
        let anchor = "nonsquare discriminants";
        out.push(match sqrt_in_rho(&tag.value()) {
            Ok(SqrtOutcome::NonSquare(cert)) => Check::holds(SECTION, name, anchor, true, "nonsquare certificate", format!("{cert:?}")),
            Ok(SqrtOutcome::Square(y)) => Check::holds(SECTION, name, anchor, false, "nonsquare certificate", format!("square root {y}")),
            Err(e) => Check::errored(SECTION, name, anchor, &e),
        });
    }

    out
}
