//! First and second Chern classes from the top three coefficients of a
//! Hilbert polynomial on `P^n`, via Hirzebruch–Riemann–Roch:
//!
//! ```text
//! P(d) = r d^n/n! + (r(n+1)/2 + c1) d^{n-1}/(n-1)!
//!      + ((c1^2 - 2 c2 + (n+1) c1)/2 + r(n+1)(3n+2)/24) d^{n-2}/(n-2)! + ...
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::numpoly::{adjusted_gotzmann_rep, factorial, is_integral, times_factorial, NumPoly};
use crate::theorems::{CheckReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub n: u32,
    pub r: u32,
    #[serde(with = "crate::serde_util::bigint")]
    pub c1: BigInt,
    #[serde(with = "crate::serde_util::bigint")]
    pub c2: BigInt,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Solves the two coefficient identities for `c1`, `c2`.
pub fn chern_from_hilbert(p: &NumPoly, n: u32, r: u32) -> Result<ChernData> {
    if n < 2 {
        return Err(Error::PreconditionViolated(format!("need n ≥ 2, got {n}")));
    }
    if r == 0 {
        return Err(Error::PreconditionViolated("rank must be positive".into()));
    }
    let expected = BigRational::new(r.into(), factorial(n));
    if p.degree() != Some(n as usize) || p.leading() != expected {
        return Err(Error::RankMismatch(format!(
            "leading term of {p} is not {expected} d^{n}"
        )));
    }
    let (nn, rr) = (n as i64, r as i64);
    let c1 = times_factorial(&p.coeff(n as usize - 1), n - 1) - q(rr * (nn + 1)) / q(2);
    if !is_integral(&c1) {
        return Err(Error::NonIntegralChern(format!("c1 = {c1}")));
    }
    let lower = times_factorial(&p.coeff(n as usize - 2), n - 2);
    let c2 = (&c1 * &c1 + q(nn + 1) * &c1 + q(rr * (nn + 1) * (3 * nn + 2)) / q(12) - q(2) * lower) / q(2);
    if !is_integral(&c2) {
        return Err(Error::NonIntegralChern(format!("c2 = {c2}")));
    }
    Ok(ChernData {
        n,
        r,
        c1: c1.to_integer(),
        c2: c2.to_integer(),
    })
}

/// `c2 ≤ c1^2` for `P` admitting an adjusted Gotzmann representation with
/// every generator degree `≤ 0` (the globally generated case). `r` is both
/// the rank of the sheaf and the number of free summands split off.
pub fn check_chern_bound(p: &NumPoly, n: u32, r: u32, all_degrees: &[i64]) -> Result<CheckReport> {
    if all_degrees.last().is_some_and(|&f| f > 0) {
        return Err(Error::PreconditionViolated(
            "generator degrees must all be ≤ 0".into(),
        ));
    }
    let adj = adjusted_gotzmann_rep(p, n, all_degrees, r as usize)?;
    let data = chern_from_hilbert(p, n, r)?;
    let lhs = data.c2.clone();
    let rhs = &data.c1 * &data.c1;
    let verdict = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Verdict::Holds,
        std::cmp::Ordering::Equal => Verdict::Sharp,
        std::cmp::Ordering::Greater => Verdict::Violated,
    };
    let mut context = match serde_json::to_value(&data).expect("serializes") {
        serde_json::Value::Object(m) => m,
        _ => unreachable!(),
    };
    context.insert("adjusted_gotzmann_number".into(), json!(adj.adjusted_number()));
    Ok(CheckReport {
        name: "chern_bound".into(),
        instance: json!({ "poly": p, "n": n, "r": r, "degrees": all_degrees }),
        premises_hold: true,
        bound_lhs: lhs,
        bound_rhs: rhs,
        verdict,
        context,
    })
}

/// `(Σ_{1≤i<j≤n} ij, (n-1) n (n+1)(3n+2) / 24)`.
pub fn sum_ij_identity(n: u64) -> (BigInt, BigInt) {
    let mut lhs = BigInt::from(0);
    for i in 1..=n {
        for j in i + 1..=n {
            lhs += BigInt::from(i * j);
        }
    }
    let n = BigInt::from(n);
    let rhs = (&n - 1) * &n * (&n + 1) * (BigInt::from(3) * &n + 2) / 24;
    (lhs, rhs)
}

/// Hilbert polynomial of `⊕ O(a_i)` on `P^n`.
pub fn twist_sum_polynomial(n: u32, twists: &[i64]) -> NumPoly {
    twists.iter().map(|&a| crate::numpoly::free_poly(n, -a)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numpoly::free_poly;

    fn twisted_kernel(a: i64, extra: usize) -> NumPoly {
        // 0 → S(-a) → S^2 → N(a) → 0, plus trivial summands
        let two = BigRational::from_integer(2.into());
        let mut p = &free_poly(3, 0).scale(&two) - &free_poly(3, a);
        for _ in 0..extra {
            p = &p + &free_poly(3, 0);
        }
        p
    }

    #[test]
    fn extraction_examples() {
        for a in 1..=5 {
            let c = chern_from_hilbert(&twisted_kernel(a, 0), 3, 1).unwrap();
            assert_eq!((c.c1, c.c2), (a.into(), (a * a).into()));
        }
        let c = chern_from_hilbert(&free_poly(2, 0), 2, 1).unwrap();
        assert_eq!((c.c1, c.c2), (0.into(), 0.into()));
        let c = chern_from_hilbert(&twist_sum_polynomial(3, &[0, -1]), 3, 2).unwrap();
        assert_eq!((c.c1, c.c2), ((-1).into(), 0.into()));
    }

    #[test]
    fn extraction_errors() {
        assert!(matches!(
            chern_from_hilbert(&free_poly(3, 0), 3, 2),
            Err(Error::RankMismatch(_))
        ));
        // d^2/2 + d: c1 = 1 - 3/2
        let p = NumPoly::from_coeffs(vec![q(0), q(1), q(1) / q(2)]);
        assert!(matches!(chern_from_hilbert(&p, 2, 1), Err(Error::NonIntegralChern(_))));
        // d^2/2 + d/2 + 1/2: c1 = -1, c2 = -1/2
        let p = NumPoly::from_coeffs(vec![q(1) / q(2), q(1) / q(2), q(1) / q(2)]);
        assert!(matches!(chern_from_hilbert(&p, 2, 1), Err(Error::NonIntegralChern(_))));
    }

    #[test]
    fn bound_examples() {
        for a in 1..=5 {
            for extra in 0..3 {
                let degrees = vec![0; 2 + extra];
                let r = check_chern_bound(&twisted_kernel(a, extra), 3, 1 + extra as u32, &degrees).unwrap();
                assert_eq!(r.verdict, Verdict::Sharp, "a = {a}");
            }
        }
        let p = twist_sum_polynomial(2, &[1, 0]);
        let r = check_chern_bound(&p, 2, 2, &[-1, 0]).unwrap();
        assert_eq!((r.bound_lhs.clone(), r.bound_rhs.clone()), (0.into(), 1.into()));
        assert_eq!(r.verdict, Verdict::Holds);
        let r = check_chern_bound(&free_poly(4, 0), 4, 1, &[0]).unwrap();
        assert_eq!(r.verdict, Verdict::Sharp);
    }

    #[test]
    fn sum_ij() {
        assert_eq!(sum_ij_identity(2), (2.into(), 2.into()));
        assert_eq!(sum_ij_identity(3), (11.into(), 11.into()));
        let (l, r) = sum_ij_identity(10);
        assert_eq!(l, r);
    }
}
