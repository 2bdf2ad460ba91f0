//! Hilbert series numerators of monomial quotients via pivot recursion.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::numpoly::{series_to_polynomial_from, NumPoly};

/// Default cap on the number of recursion nodes per ideal.
pub const DEFAULT_NODE_CAP: usize = 10_000;

/// `Σ_j c_j t^{low + j} / (1 - t)^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Exponent of `t` attached to `numerator[0]`; negative for modules with
    /// generators in negative degree.
    pub low: i64,
    #[serde(with = "crate::serde_util::bigint_vec")]
    pub numerator: Vec<BigInt>,
    pub denominator_exponent: u32,
}

impl HilbertSeries {
    pub fn zero(n: u32) -> Self {
        HilbertSeries {
            low: 0,
            numerator: Vec::new(),
            denominator_exponent: n + 1,
        }
    }

    /// `n` of the ambient `k[x_0..x_n]`.
    pub fn n(&self) -> u32 {
        self.denominator_exponent - 1
    }

    /// Highest power of `t` with a nonzero coefficient.
    pub fn top(&self) -> Option<i64> {
        self.numerator
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|i| self.low + i as i64)
    }

    /// Coefficient of `t^d` in the expanded series.
    pub fn coefficient(&self, d: i64) -> BigInt {
        let n = self.n();
        self.numerator
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial(d - self.low - i as i64 + n as i64, n))
            .sum()
    }

    pub fn polynomial(&self) -> NumPoly {
        series_to_polynomial_from(&self.numerator, self.low, self.n())
    }

    /// `self + t^shift · other`.
    pub(crate) fn add_shifted(&mut self, other: &[BigInt], shift: i64) {
        if other.iter().all(Zero::is_zero) {
            return;
        }
        if self.numerator.is_empty() {
            self.low = shift;
        }
        let new_low = self.low.min(shift);
        let new_high = (self.low + self.numerator.len() as i64).max(shift + other.len() as i64);
        let mut out = vec![BigInt::zero(); (new_high - new_low) as usize];
        for (i, c) in self.numerator.iter().enumerate() {
            out[(self.low - new_low) as usize + i] += c;
        }
        for (i, c) in other.iter().enumerate() {
            out[(shift - new_low) as usize + i] += c;
        }
        // trim zero padding on both ends
        let first = out.iter().position(|c| !c.is_zero());
        match first {
            None => {
                self.numerator.clear();
                self.low = 0;
            }
            Some(f) => {
                let last = out.iter().rposition(|c| !c.is_zero()).unwrap();
                self.low = new_low + f as i64;
                self.numerator = out[f..=last].to_vec();
            }
        }
    }
}

/// Numerator `K(I)` of the Hilbert series of `S/I` over `(1-t)^{nvars}`.
///
/// The numerator does not depend on the number of ambient variables.
pub fn kpoly(ideal: &MonomialIdeal) -> Result<Vec<BigInt>> {
    kpoly_capped(ideal, DEFAULT_NODE_CAP)
}

pub fn kpoly_capped(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<BigInt>> {
    let mut nodes = 0usize;
    let mut out = recurse(ideal, &mut nodes, cap)?;
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

fn recurse(ideal: &MonomialIdeal, nodes: &mut usize, cap: usize) -> Result<Vec<BigInt>> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::RecursionCap(cap));
    }
    if ideal.is_zero() {
        return Ok(vec![BigInt::from(1)]);
    }
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let gens = ideal.gens();
    if gens.len() == 1 {
        let d = gens[0].degree() as usize;
        let mut v = vec![BigInt::zero(); d + 1];
        v[0] += 1;
        v[d] -= 1;
        return Ok(v);
    }
    let x = pivot(ideal);
    let nvars = ideal.nvars();
    let var = Monomial::var(nvars, x);
    // I + (x) = (x) + J with J the generators free of x: K = (1 - t) K(J)
    let rest = MonomialIdeal::new(
        nvars,
        gens.iter().filter(|g| g.exps()[x] == 0).cloned().collect(),
    );
    let k_rest = recurse(&rest, nodes, cap)?;
    let k_colon = recurse(&ideal.colon(&var), nodes, cap)?;
    let len = (k_rest.len() + 1).max(k_colon.len() + 1);
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in k_rest.iter().enumerate() {
        out[i] += c;
        out[i + 1] -= c;
    }
    for (i, c) in k_colon.iter().enumerate() {
        out[i + 1] += c;
    }
    Ok(out)
}

/// Most frequent variable among the generators, ties to the lowest index.
fn pivot(ideal: &MonomialIdeal) -> usize {
    let mut counts = vec![0usize; ideal.nvars()];
    for g in ideal.gens() {
        for (i, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let best = *counts.iter().max().unwrap_or(&0);
    counts.iter().position(|&c| c == best).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kpoly_examples() {
        let i = MonomialIdeal::from_exponents(3, &[&[1, 0, 0]]);
        assert_eq!(kpoly(&i).unwrap(), ints(&[1, -1]));
        let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0]]);
        assert_eq!(kpoly(&i).unwrap(), ints(&[1, 0, -2, 1]));
        assert_eq!(kpoly(&MonomialIdeal::zero(2)).unwrap(), ints(&[1]));
        assert!(kpoly(&MonomialIdeal::unit(2)).unwrap().is_empty());
        // (x0, x1)^2: 1 - 3t^2 + 2t^3
        let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(kpoly(&i).unwrap(), ints(&[1, 0, -3, 2]));
    }

    #[test]
    fn node_cap_is_enforced() {
        let i = MonomialIdeal::from_exponents(3, &[&[2, 1, 0], &[1, 2, 1], &[0, 1, 3], &[3, 0, 1]]);
        assert!(matches!(kpoly_capped(&i, 2), Err(Error::RecursionCap(2))));
        assert!(kpoly_capped(&i, DEFAULT_NODE_CAP).is_ok());
    }

    #[test]
    fn shifted_sum_trims() {
        let mut s = HilbertSeries::zero(1);
        s.add_shifted(&ints(&[1, -1]), -1);
        s.add_shifted(&ints(&[1]), 0);
        assert_eq!(s.low, -1);
        assert_eq!(s.numerator, ints(&[1]));
        s.add_shifted(&ints(&[-1]), -1);
        assert!(s.numerator.is_empty());
    }
}
