use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

use super::ideal::{IdealJson, MonomialIdeal};
use super::series::{kpoly, HilbertSeries};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::numpoly::NumPoly;

/// `F = S e_1 ⊕ ... ⊕ S e_m` over `S = k[x_0..x_n]` with `deg e_i = f_i`,
/// `f_1 ≤ ... ≤ f_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeJson")]
pub struct GradedFreeModule {
    pub n: u32,
    degrees: Vec<i64>,
}

#[derive(Deserialize)]
struct ShapeJson {
    n: u32,
    degrees: Vec<i64>,
}

impl TryFrom<ShapeJson> for GradedFreeModule {
    type Error = Error;
    fn try_from(j: ShapeJson) -> Result<Self> {
        GradedFreeModule::new(j.n, j.degrees)
    }
}

impl GradedFreeModule {
    pub fn new(n: u32, degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::parse("degrees", "a free module needs at least one generator"));
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::parse("degrees", "generator degrees must be sorted ascending"));
        }
        Ok(GradedFreeModule { n, degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Number of generators `m`.
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn nvars(&self) -> usize {
        self.n as usize + 1
    }

    /// `dim F_d = Σ C(d - f_i + n, n)`.
    pub fn dim(&self, d: i64) -> BigInt {
        self.degrees
            .iter()
            .map(|&f| binomial(d - f + self.n as i64, self.n))
            .sum()
    }

    /// `f_{m-r}` (1-based), or `None` when `r = m`.
    pub fn split_degree(&self, r: usize) -> Option<i64> {
        let m = self.rank();
        (r < m).then(|| self.degrees[m - r - 1])
    }

    pub fn max_degree(&self) -> i64 {
        *self.degrees.last().expect("nonempty")
    }

    pub fn min_degree(&self) -> i64 {
        self.degrees[0]
    }

    /// `Σ_{i > m-r} C(d - f_i + n, n)` over the last `r` generators.
    pub fn free_part(&self, r: usize, d: i64) -> BigInt {
        let m = self.rank();
        self.degrees[m - r..]
            .iter()
            .map(|&f| binomial(d - f + self.n as i64, self.n))
            .sum()
    }

    /// Same sum over the last `r` generators in one variable fewer.
    pub fn free_part_hyperplane(&self, r: usize, d: i64) -> BigInt {
        let m = self.rank();
        let n1 = self.n - 1;
        self.degrees[m - r..]
            .iter()
            .map(|&f| binomial(d - f + n1 as i64, n1))
            .sum()
    }
}

/// Monomial submodule `N = ⊕ I_i e_i ⊂ F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModuleJson", into = "ModuleJson")]
pub struct MonomialSubmodule {
    ambient: GradedFreeModule,
    components: Vec<MonomialIdeal>,
}

impl MonomialSubmodule {
    pub fn new(ambient: GradedFreeModule, components: Vec<MonomialIdeal>) -> Result<Self> {
        if components.len() != ambient.rank() {
            return Err(Error::parse(
                "components",
                format!("expected {} components, got {}", ambient.rank(), components.len()),
            ));
        }
        if components.iter().any(|c| c.nvars() != ambient.nvars()) {
            return Err(Error::parse("components", "component ring does not match n"));
        }
        Ok(MonomialSubmodule { ambient, components })
    }

    /// The zero submodule of `F`.
    pub fn zero(ambient: GradedFreeModule) -> Self {
        let components = vec![MonomialIdeal::zero(ambient.nvars()); ambient.rank()];
        MonomialSubmodule { ambient, components }
    }

    pub fn ambient(&self) -> &GradedFreeModule {
        &self.ambient
    }

    pub fn components(&self) -> &[MonomialIdeal] {
        &self.components
    }

    pub fn n(&self) -> u32 {
        self.ambient.n
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MonomialIdeal::is_zero)
    }

    /// Rank of `M = F/N`: the number of zero components.
    pub fn rank(&self) -> usize {
        self.components.iter().filter(|c| c.is_zero()).count()
    }

    /// Largest degree of a minimal generator `m e_i` (`deg m + f_i`).
    pub fn max_generator_degree(&self) -> Option<i64> {
        self.components
            .iter()
            .zip(self.ambient.degrees())
            .filter_map(|(c, &f)| c.max_degree().map(|d| d as i64 + f))
            .max()
    }

    pub fn min_generator_degree(&self) -> Option<i64> {
        self.components
            .iter()
            .zip(self.ambient.degrees())
            .filter_map(|(c, &f)| c.min_degree().map(|d| d as i64 + f))
            .min()
    }

    /// `H(F/N, d)` by counting standard monomials `m e_i`, `deg m = d - f_i`.
    pub fn hf_direct(&self, d: i64) -> BigInt {
        self.components
            .iter()
            .zip(self.ambient.degrees())
            .map(|(c, &f)| BigInt::from(c.quotient_dim(d - f)))
            .sum()
    }

    /// Hilbert series of `F/N`: `Σ_i t^{f_i} K(I_i) / (1-t)^{n+1}`.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let mut hs = HilbertSeries::zero(self.n());
        for (c, &f) in self.components.iter().zip(self.ambient.degrees()) {
            hs.add_shifted(&kpoly(c)?, f);
        }
        Ok(hs)
    }

    pub fn hilbert_polynomial(&self) -> Result<NumPoly> {
        Ok(self.hilbert_series()?.polynomial())
    }

    /// Least `d_0` with `H(F/N, d) = P(d)` for all `d ≥ d_0`.
    ///
    /// When `H` and `P` agree in every degree (both eventually zero and never
    /// different), the scan floor `f_1 - n - 1` is returned.
    pub fn stabilization_degree(&self) -> Result<i64> {
        let hs = self.hilbert_series()?;
        let p = hs.polynomial();
        let n = self.n() as i64;
        let floor = self.ambient.min_degree() - n - 1;
        // H and P agree for d ≥ top - n, where the combinatorial and
        // polynomial binomials coincide
        let start = hs.top().map_or(floor, |t| t - n).max(floor);
        let mut d = start;
        while d > floor {
            let h = self.hf_direct(d - 1);
            if p.eval_int(d - 1) != num_rational::BigRational::from_integer(h) {
                break;
            }
            d -= 1;
        }
        Ok(d)
    }

    /// Componentwise `I_i : m^∞`.
    pub fn saturate(&self) -> MonomialSubmodule {
        MonomialSubmodule {
            ambient: self.ambient.clone(),
            components: self.components.iter().map(MonomialIdeal::saturate).collect(),
        }
    }

    /// `H(F/N, d) = Σ_{i > m-r} C(d - f_i + n, n) + ρ_d`, returning
    /// `(free_part, ρ_d)` with `r = rank(N)`.
    pub fn adjusted_hf_decomposition(&self, d: i64) -> Result<(BigInt, BigInt)> {
        let r = self.rank();
        let free = self.ambient.free_part(r, d);
        let rho = self.hf_direct(d) - &free;
        let m = self.ambient.rank();
        let window: BigInt = self.ambient.degrees()[..m - r]
            .iter()
            .map(|&f| binomial(d - f + self.n() as i64, self.n()))
            .sum();
        if rho.is_negative() || rho > window {
            return Err(Error::InvariantViolated(format!(
                "rho_{d} = {rho} outside [0, {window}]"
            )));
        }
        Ok((free, rho))
    }

    /// Same module, components replaced.
    pub fn with_components(&self, components: Vec<MonomialIdeal>) -> Result<MonomialSubmodule> {
        MonomialSubmodule::new(self.ambient.clone(), components)
    }
}

impl fmt::Display for MonomialSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .zip(self.ambient.degrees())
            .map(|(c, d)| format!("{c}·e[{d}]"))
            .collect();
        write!(f, "{} over k[x0..x{}]", parts.join(" ⊕ "), self.n())
    }
}

/// `{"n": 2, "degrees": [...], "components": [{"gens": [...]}, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleJson {
    pub n: u32,
    pub degrees: Vec<i64>,
    pub components: Vec<IdealJson>,
}

impl TryFrom<ModuleJson> for MonomialSubmodule {
    type Error = Error;
    fn try_from(j: ModuleJson) -> Result<Self> {
        let ambient = GradedFreeModule::new(j.n, j.degrees)?;
        let nvars = ambient.nvars();
        let components = j
            .components
            .iter()
            .map(|c| c.to_ideal(nvars))
            .collect::<Result<Vec<_>>>()?;
        MonomialSubmodule::new(ambient, components)
    }
}

impl From<MonomialSubmodule> for ModuleJson {
    fn from(m: MonomialSubmodule) -> Self {
        ModuleJson {
            n: m.ambient.n,
            degrees: m.ambient.degrees.clone(),
            components: m.components.iter().map(IdealJson::from).collect(),
        }
    }
}

/// Checks that the series expansion reproduces [`MonomialSubmodule::hf_direct`]
/// on `lo..=hi`.
pub fn series_matches_direct(n: &MonomialSubmodule, lo: i64, hi: i64) -> Result<bool> {
    let hs = n.hilbert_series()?;
    Ok((lo..=hi).all(|d| hs.coefficient(d) == n.hf_direct(d)))
}
