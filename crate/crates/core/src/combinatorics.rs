//! Binomial coefficients, Macaulay representations and the Macaulay/Green
//! transforms.
//!
//! `binomial` follows the combinatorial convention: `C(k, j) = 0` whenever
//! `k < j`, including every negative `k`. The polynomial convention lives in
//! [`crate::numpoly`].

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::serde_util::JsonInt;

/// `C(k, j)` with `C(k, j) = 0` for `k < j`.
pub fn binomial(k: impl Into<BigInt>, j: u32) -> BigInt {
    let k = k.into();
    let jb = BigInt::from(j);
    if k < jb {
        return BigInt::zero();
    }
    // symmetric reduction when k - j is smaller than j
    let other = &k - &jb;
    let steps: u64 = if other < jb {
        // other < j, so it fits in u64
        other.to_u64().expect("k - j < j")
    } else {
        u64::from(j)
    };
    let mut acc = BigInt::one();
    for i in 0..steps {
        acc = acc * (&k - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// The `d`-th Macaulay representation `a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_δ, δ)`
/// with `k_d > k_{d-1} > ... > k_δ ≥ δ ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MacaulayRepJson", into = "MacaulayRepJson")]
pub struct MacaulayRep {
    d: u32,
    /// `(k_j, j)` pairs with `j` descending.
    terms: Vec<(BigInt, u32)>,
}

impl MacaulayRep {
    pub fn index(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &[(BigInt, u32)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the binomials; reconstructs the represented integer.
    pub fn value(&self) -> BigInt {
        self.terms.iter().map(|(k, j)| binomial(k.clone(), *j)).sum()
    }

    /// Checks strict descent of the tops, contiguity of the bottom indices
    /// starting at `d`, and `k_δ ≥ δ ≥ 1`.
    pub fn is_valid(&self) -> bool {
        let mut expected = self.d;
        let mut prev: Option<&BigInt> = None;
        for (k, j) in &self.terms {
            if *j != expected || *j == 0 || *k < BigInt::from(*j) {
                return false;
            }
            if let Some(p) = prev {
                if k >= p {
                    return false;
                }
            }
            prev = Some(k);
            expected = expected.saturating_sub(1);
        }
        true
    }

    /// `a^{<d>} = Σ C(k_j + 1, j + 1)`.
    pub fn macaulay_transform(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(k, j)| binomial(k + 1, j + 1))
            .sum()
    }

    /// `a_{<d>} = Σ C(k_j - 1, j)`.
    pub fn green_transform(&self) -> BigInt {
        self.terms.iter().map(|(k, j)| binomial(k - 1, *j)).sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, j)| format!("C({k},{j})"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct MacaulayRepJson {
    d: u32,
    terms: Vec<(JsonInt, u32)>,
}

impl From<MacaulayRep> for MacaulayRepJson {
    fn from(r: MacaulayRep) -> Self {
        MacaulayRepJson {
            d: r.d,
            terms: r.terms.into_iter().map(|(k, j)| (JsonInt(k), j)).collect(),
        }
    }
}

impl TryFrom<MacaulayRepJson> for MacaulayRep {
    type Error = String;

    fn try_from(j: MacaulayRepJson) -> Result<Self, String> {
        let rep = MacaulayRep {
            d: j.d,
            terms: j.terms.into_iter().map(|(k, i)| (k.0, i)).collect(),
        };
        if rep.d == 0 || !rep.is_valid() {
            return Err("terms violate the Macaulay descent conditions".into());
        }
        Ok(rep)
    }
}

/// Largest `k` with `C(k, j) ≤ a`, for `j ≥ 1` and `a ≥ 0`.
fn largest_top(a: &BigInt, j: u32) -> BigInt {
    // C(j - 1, j) = 0 ≤ a always holds
    let mut lo = BigInt::from(j) - 1;
    let mut step = BigInt::one();
    let mut hi: BigInt = &lo + &step;
    while binomial(hi.clone(), j) <= *a {
        lo = hi.clone();
        step *= 2;
        hi = &lo + &step;
    }
    // invariant: C(lo, j) ≤ a < C(hi, j)
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if binomial(mid.clone(), j) <= *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy construction of the `d`-th Macaulay representation of `a`.
///
/// Panics if `a` is negative or `d` is zero.
pub fn macaulay_rep(a: &BigInt, d: u32) -> MacaulayRep {
    assert!(!a.is_negative(), "macaulay_rep needs a ≥ 0");
    assert!(d >= 1, "macaulay_rep needs d ≥ 1");
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut j = d;
    while !rest.is_zero() && j >= 1 {
        let k = largest_top(&rest, j);
        rest -= binomial(k.clone(), j);
        terms.push((k, j));
        j -= 1;
    }
    debug_assert!(rest.is_zero());
    MacaulayRep { d, terms }
}

/// `a^{<d>}`; zero maps to zero.
pub fn macaulay_transform(a: &BigInt, d: u32) -> BigInt {
    macaulay_rep(a, d).macaulay_transform()
}

/// `a_{<d>}`; zero maps to zero.
pub fn green_transform(a: &BigInt, d: u32) -> BigInt {
    macaulay_rep(a, d).green_transform()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), b(6));
        assert_eq!(binomial(1, 3), b(0));
        assert_eq!(binomial(0, 0), b(1));
        assert_eq!(binomial(-1, 0), b(0));
        assert_eq!(binomial(-5, 2), b(0));
        assert_eq!(binomial(7, 7), b(1));
    }

    #[test]
    fn binomial_matches_factorial_formula() {
        let fact = |n: u32| (1..=n).map(BigInt::from).product::<BigInt>();
        assert_eq!(binomial(52, 5), fact(52) / (fact(5) * fact(47)));
        assert_eq!(binomial(52, 5), b(2_598_960));
        for k in 0..30u32 {
            for j in 0..=k {
                assert_eq!(binomial(k, j), fact(k) / (fact(j) * fact(k - j)));
            }
        }
    }

    #[test]
    fn macaulay_rep_examples() {
        let r = macaulay_rep(&b(4), 1);
        assert_eq!(r.terms(), &[(b(4), 1)]);
        assert!(macaulay_rep(&b(0), 3).is_empty());
        let r = macaulay_rep(&b(5), 2);
        assert_eq!(r.terms(), &[(b(3), 2), (b(2), 1)]);
        assert!(r.is_valid());
    }

    #[test]
    fn transforms_examples() {
        assert_eq!(macaulay_transform(&b(4), 1), b(10));
        assert_eq!(macaulay_transform(&b(0), 2), b(0));
        assert_eq!(macaulay_transform(&b(5), 2), b(7));
        assert_eq!(green_transform(&b(1), 1), b(0));
        assert_eq!(green_transform(&b(5), 2), b(2));
        assert_eq!(green_transform(&b(6), 2), b(3));
        // 4 = C(4,1) gives C(3,1) = 3
        assert_eq!(green_transform(&b(4), 1), b(3));
    }

    #[test]
    fn huge_values_do_not_overflow() {
        let a: BigInt = "123456789012345678901234567890".parse().unwrap();
        for d in 1..6 {
            let r = macaulay_rep(&a, d);
            assert!(r.is_valid());
            assert_eq!(r.value(), a);
        }
    }

    #[test]
    fn json_round_trip() {
        let r = macaulay_rep(&b(5), 2);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"d":2,"terms":[[3,2],[2,1]]}"#);
        let back: MacaulayRep = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<MacaulayRep>(r#"{"d":2,"terms":[[2,2],[3,1]]}"#).is_err());
    }
}
