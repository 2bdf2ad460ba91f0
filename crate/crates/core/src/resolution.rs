//! Graded Betti numbers from Koszul homology, regularity, and the
//! Eliahou–Kervaire shortcut for stable ideals.
//!
//! For a monomial ideal `I` the Koszul complex `K(x; S/I)` splits into
//! multigraded strands. In multidegree `α` the `i`-th term has basis `e_F`
//! for `|F| = i`, `F ≤ α`, with `x^{α-F} ∉ I` (for the submodule `I`
//! itself: `∈ I`); the differential has entries `±1`. Taylor's resolution
//! shows that homology is concentrated in multidegrees that are lcms of
//! generators (and `0` for the quotient), so only those strands are visited.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Monomial, MonomialIdeal, MonomialSubmodule};
use crate::error::{Error, Result};
use crate::linalg;

/// `β_{i,j}` with homological index `i` and internal degree `j`; only
/// nonzero entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BettiJson", into = "BettiJson")]
pub struct BettiTable {
    entries: BTreeMap<(u32, i64), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    betti: Vec<(u32, i64, u64)>,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson {
            betti: t.entries.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = Error;
    fn try_from(j: BettiJson) -> Result<Self> {
        let mut t = BettiTable::default();
        for (i, d, v) in j.betti {
            if v == 0 {
                return Err(Error::parse("betti", "entries must be positive"));
            }
            t.add(i, d, v);
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn get(&self, i: u32, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `(i, j, β_{i,j})` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    fn add(&mut self, i: u32, j: i64, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// `max(j - i)`, or `None` for the empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }

    /// Length of the resolution.
    pub fn projective_dimension(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `Σ_i (-1)^i Σ_j β_{i,j} t^j` as `(low, coefficients)`.
    pub fn euler_polynomial(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.entries.keys().map(|&(_, j)| j).min() else {
            return (0, Vec::new());
        };
        let hi = self.entries.keys().map(|&(_, j)| j).max().unwrap();
        let mut out = vec![BigInt::from(0); (hi - lo + 1) as usize];
        for (&(i, j), &v) in &self.entries {
            let v = BigInt::from(v);
            if i % 2 == 0 {
                out[(j - lo) as usize] += v;
            } else {
                out[(j - lo) as usize] -= v;
            }
        }
        (lo, out)
    }
}

/// Every lcm of a nonempty set of generators.
fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Monomial> {
    let gens = ideal.gens();
    let mut all: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if all.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    all
}

/// Koszul homology ranks `dim H_i` in multidegree `alpha`, for `i = 0..=nvars`.
fn strand_homology(ideal: &MonomialIdeal, alpha: &Monomial, quotient: bool) -> Vec<u64> {
    let nvars = ideal.nvars();
    let a = alpha.exps();
    // cells: subsets F ⊂ support(alpha) (bitmasks) with the right membership
    let valid = |mask: usize| -> bool {
        let exps: Vec<u32> = (0..nvars)
            .map(|v| a[v] - u32::from(mask >> v & 1 == 1))
            .collect();
        ideal.contains(&Monomial::new(exps)) != quotient
    };
    let support: usize = (0..nvars).filter(|&v| a[v] > 0).map(|v| 1 << v).sum();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); nvars + 1];
    // enumerate submasks of the support
    let mut sub = support;
    loop {
        if valid(sub) {
            by_size[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & support;
    }
    // rank of ∂_i : K_i → K_{i-1}
    let ranks: Vec<usize> = (0..=nvars)
        .map(|i| {
            if i == 0 || by_size[i].is_empty() || by_size[i - 1].is_empty() {
                return 0;
            }
            let cols: BTreeMap<usize, usize> =
                by_size[i - 1].iter().enumerate().map(|(k, &m)| (m, k)).collect();
            let rows: Vec<Vec<BigInt>> = by_size[i]
                .iter()
                .map(|&f| {
                    let mut row = vec![BigInt::from(0); cols.len()];
                    let mut sign = 1i64;
                    for v in 0..nvars {
                        if f >> v & 1 == 1 {
                            if let Some(&c) = cols.get(&(f & !(1 << v))) {
                                row[c] = BigInt::from(sign);
                            }
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            linalg::rank(&rows)
        })
        .collect();
    (0..=nvars)
        .map(|i| {
            let next = if i < nvars { ranks[i + 1] } else { 0 };
            (by_size[i].len() - ranks[i] - next) as u64
        })
        .collect()
}

/// Betti numbers of `S/I` (or of `I`) over `k[x_0..x_n]`, unshifted.
pub fn ideal_betti(ideal: &MonomialIdeal, as_quotient: bool) -> BettiTable {
    let mut t = BettiTable::default();
    if ideal.is_zero() {
        if as_quotient {
            t.add(0, 0, 1);
        }
        return t;
    }
    let mut alphas = lcm_lattice(ideal);
    if as_quotient {
        alphas.insert(Monomial::one(ideal.nvars()));
    }
    for alpha in &alphas {
        let deg = alpha.degree() as i64;
        for (i, b) in strand_homology(ideal, alpha, as_quotient).into_iter().enumerate() {
            t.add(i as u32, deg, b);
        }
    }
    t
}

/// Graded Betti numbers of `F/N` (`as_quotient`) or of `N`.
pub fn koszul_betti(n: &MonomialSubmodule, as_quotient: bool) -> BettiTable {
    let mut t = BettiTable::default();
    for (c, &f) in n.components().iter().zip(n.ambient().degrees()) {
        for (i, j, v) in ideal_betti(c, as_quotient).entries() {
            t.add(i, j + f, v);
        }
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegularityOf {
    Quotient,
    Submodule,
}

/// Castelnuovo–Mumford regularity `max(j - i)` of `F/N` or `N`.
pub fn regularity(n: &MonomialSubmodule, of: RegularityOf) -> Result<i64> {
    koszul_betti(n, of == RegularityOf::Quotient)
        .regularity()
        .ok_or(Error::ZeroModule)
}

/// Stable: `x_j · g / x_u ∈ I` for each minimal generator `g` with largest
/// variable `x_u` and each `j < u`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|g| match g.max_var() {
        None => true,
        Some(u) => {
            let base = g.div(&Monomial::var(ideal.nvars(), u)).expect("x_u divides g");
            (0..u).all(|j| ideal.contains(&base.times_var(j)))
        }
    })
}

/// Regularity of a stable ideal: its largest generator degree.
pub fn ek_regularity(ideal: &MonomialIdeal) -> Result<i64> {
    if !is_stable(ideal) {
        return Err(Error::NotStable);
    }
    ideal.max_degree().map(i64::from).ok_or(Error::ZeroModule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedFreeModule;

    fn ideal(nvars: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|g| Monomial::parse(g, nvars).unwrap()).collect())
    }

    fn module(json: &str) -> MonomialSubmodule {
        serde_json::from_str(json).unwrap()
    }

    fn table(t: &BettiTable) -> Vec<(u32, i64, u64)> {
        t.entries().collect()
    }

    #[test]
    fn betti_examples() {
        let i = ideal(3, &["x0^2", "x0*x1"]);
        assert_eq!(table(&ideal_betti(&i, true)), [(0, 0, 1), (1, 2, 2), (2, 3, 1)]);
        assert_eq!(table(&ideal_betti(&i, false)), [(0, 2, 2), (1, 3, 1)]);
        let m = ideal(2, &["x0", "x1"]);
        assert_eq!(table(&ideal_betti(&m, true)), [(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
        // complete intersection of three quadrics
        let ci = ideal(3, &["x0^2", "x1^2", "x2^2"]);
        assert_eq!(
            table(&ideal_betti(&ci, true)),
            [(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)]
        );
        // (x0, x1)^2 in k[x0, x1]: 0 → S(-3)^2 → S(-2)^3 → S
        let sq = ideal(2, &["x0^2", "x0*x1", "x1^2"]);
        assert_eq!(table(&ideal_betti(&sq, true)), [(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn free_modules_and_units() {
        let free = MonomialSubmodule::zero(GradedFreeModule::new(2, vec![-1, -1, 0]).unwrap());
        assert_eq!(table(&koszul_betti(&free, true)), [(0, -1, 2), (0, 0, 1)]);
        assert_eq!(regularity(&free, RegularityOf::Quotient).unwrap(), 0);
        assert_eq!(regularity(&free, RegularityOf::Submodule), Err(Error::ZeroModule));
        assert!(ideal_betti(&MonomialIdeal::unit(3), true).is_empty());
        assert_eq!(table(&ideal_betti(&MonomialIdeal::unit(3), false)), [(0, 0, 1)]);
    }

    #[test]
    fn regularity_examples() {
        let n = module(r#"{"n":2,"degrees":[0],"components":[{"gens":["x0^2","x0*x1"]}]}"#);
        assert_eq!(regularity(&n, RegularityOf::Submodule).unwrap(), 2);
        assert_eq!(regularity(&n, RegularityOf::Quotient).unwrap(), 1);
        let unit_plus_free = module(r#"{"n":1,"degrees":[0,0,0],"components":[{"unit":true},{"gens":[]},{"gens":[]}]}"#);
        assert_eq!(regularity(&unit_plus_free, RegularityOf::Quotient).unwrap(), 0);
        assert_eq!(regularity(&unit_plus_free, RegularityOf::Submodule).unwrap(), 0);
        let shifted = module(r#"{"n":2,"degrees":[-1,2],"components":[{"gens":["x0^2"]},{"gens":["x1^3"]}]}"#);
        assert_eq!(regularity(&shifted, RegularityOf::Submodule).unwrap(), 5);
    }

    #[test]
    fn stability() {
        assert!(is_stable(&ideal(3, &["x0^2", "x0*x1"])));
        assert!(!is_stable(&ideal(2, &["x1"])));
        assert!(is_stable(&MonomialIdeal::unit(2)));
        assert_eq!(ek_regularity(&ideal(3, &["x0^2", "x0*x1"])).unwrap(), 2);
        assert_eq!(ek_regularity(&ideal(3, &["x0"])).unwrap(), 1);
        assert_eq!(ek_regularity(&ideal(2, &["x1"])), Err(Error::NotStable));
    }

    #[test]
    fn euler_characteristic_matches_series() {
        for gens in [
            vec!["x0^2", "x0*x1", "x1^3"],
            vec!["x0*x2", "x1^2*x2", "x0^3"],
            vec!["x0*x1*x2", "x0^2*x3", "x2^2", "x1*x3^2"],
        ] {
            let i = ideal(4, &gens);
            let (lo, coeffs) = ideal_betti(&i, true).euler_polynomial();
            assert_eq!(lo, 0);
            assert_eq!(coeffs, crate::algebra::kpoly(&i).unwrap(), "{gens:?}");
        }
    }

    #[test]
    fn json_round_trip() {
        let t = ideal_betti(&ideal(3, &["x0^2", "x0*x1"]), true);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"betti":[[0,0,1],[1,2,2],[2,3,1]]}"#);
        assert_eq!(serde_json::from_str::<BettiTable>(&s).unwrap(), t);
    }
}
