use serde::{Deserialize, Serialize};
use std::fmt;

use super::monomial::{deg_lex_desc, monomials_of_degree, Monomial};
use crate::error::Result;

/// Monomial ideal of `k[x_0..x_{nvars-1}]` given by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// Ideal generated by `gens`, reduced to its minimal generating set.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Self {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Largest degree of a minimal generator.
    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// `lcm` of all minimal generators.
    pub fn lcm_all(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.colon(m)).collect())
    }

    /// `I : x_i^∞`, obtained by deleting `x_i` from every generator.
    pub fn colon_var_inf(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.without_var(i)).collect())
    }

    /// `I : m^∞ = ∩_j (I : x_j^∞)`.
    pub fn saturate(&self) -> MonomialIdeal {
        if self.is_zero() {
            return self.clone();
        }
        (0..self.nvars)
            .map(|j| self.colon_var_inf(j))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| self.clone())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Monomials of degree `d` lying in the ideal.
    pub fn monomials_in_degree(&self, d: i64) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// `dim_k (S/I)_d` by explicit enumeration.
    pub fn quotient_dim(&self, d: i64) -> u64 {
        if self.is_zero() {
            return monomials_of_degree(self.nvars, d).len() as u64;
        }
        monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as u64
    }

    /// Parses generator strings like `"x0^2*x1"`.
    pub fn parse(nvars: usize, gens: &[String]) -> Result<MonomialIdeal> {
        let gens = gens
            .iter()
            .map(|g| Monomial::parse(g, nvars))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(nvars, gens))
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(deg_lex_desc);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    // ascending degree: a generator can only be divided by an earlier one
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// JSON form of an ideal: `{"gens": [...]}` or `{"unit": true}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<bool>,
}

impl IdealJson {
    pub fn to_ideal(&self, nvars: usize) -> Result<MonomialIdeal> {
        if self.unit == Some(true) {
            return Ok(MonomialIdeal::unit(nvars));
        }
        MonomialIdeal::parse(nvars, self.gens.as_deref().unwrap_or(&[]))
    }
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        if i.is_unit() {
            IdealJson { gens: None, unit: Some(true) }
        } else {
            IdealJson {
                gens: Some(i.gens.iter().map(|g| g.to_string()).collect()),
                unit: None,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(nvars: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|g| Monomial::parse(g, nvars).unwrap()).collect())
    }

    #[test]
    fn minimal_generators() {
        let i = ideal(3, &["x0^2*x1", "x0^2", "x0*x1", "x0*x1^3"]);
        let gens: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["x0^2", "x0*x1"]);
        assert!(ideal(2, &["x0", "1"]).is_unit());
        assert_eq!(ideal(2, &["x0", "1"]).gens().len(), 1);
    }

    #[test]
    fn saturation_examples() {
        let i = ideal(3, &["x0^2", "x0*x1"]);
        assert_eq!(i.saturate(), i);
        // principal ideals are saturated: (x0 x2^3) = (x0) ∩ (x2^3)
        let j = ideal(3, &["x0*x2^3"]);
        assert_eq!(j.saturate(), j);
        assert!(MonomialIdeal::zero(3).saturate().is_zero());
        // m-primary ideals saturate to the unit ideal
        assert!(ideal(2, &["x0^2", "x0*x1", "x1^2"]).saturate().is_unit());
        // (x0^2, x0 x1, x0 x2^2) = (x0) ∩ (x0^2, x1, x2^2) saturates to (x0)
        assert_eq!(ideal(3, &["x0^2", "x0*x1", "x0*x2^2"]).saturate(), ideal(3, &["x0"]));
    }

    #[test]
    fn saturation_is_idempotent_on_samples() {
        for gens in [
            vec!["x0^3", "x0^2*x1^2", "x1^4*x2"],
            vec!["x0*x1*x2", "x2^5"],
            vec!["x1^2", "x0*x2", "x2^3"],
        ] {
            let i = ideal(3, &gens);
            let s = i.saturate();
            assert!(i.is_subset_of(&s));
            assert_eq!(s.saturate(), s);
        }
    }

    #[test]
    fn intersection_and_colon() {
        let a = ideal(2, &["x0"]);
        let b = ideal(2, &["x1^2"]);
        assert_eq!(a.intersect(&b), ideal(2, &["x0*x1^2"]));
        let i = ideal(3, &["x0^2", "x0*x1"]);
        assert_eq!(i.colon(&Monomial::var(3, 0)), ideal(3, &["x0", "x1"]));
        assert_eq!(i.colon_var_inf(1), ideal(3, &["x0"]));
    }

    #[test]
    fn quotient_dims() {
        let i = ideal(3, &["x0^2", "x0*x1"]);
        let dims: Vec<u64> = (0..5).map(|d| i.quotient_dim(d)).collect();
        assert_eq!(dims, [1, 3, 4, 5, 6]);
        assert_eq!(MonomialIdeal::unit(3).quotient_dim(0), 0);
        assert_eq!(MonomialIdeal::zero(3).quotient_dim(2), 6);
        assert_eq!(MonomialIdeal::zero(3).quotient_dim(-1), 0);
    }

    #[test]
    fn json_forms() {
        let j: IdealJson = serde_json::from_str(r#"{"unit": true}"#).unwrap();
        assert!(j.to_ideal(2).unwrap().is_unit());
        let j: IdealJson = serde_json::from_str(r#"{"gens": []}"#).unwrap();
        assert!(j.to_ideal(2).unwrap().is_zero());
        let i = ideal(3, &["x0^2", "x0*x1"]);
        let s = serde_json::to_string(&IdealJson::from(&i)).unwrap();
        assert_eq!(s, r#"{"gens":["x0^2","x0*x1"]}"#);
    }
}
