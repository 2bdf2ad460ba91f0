//! Lex segments, lexification of Hilbert functions and saturated lex modules.
//!
//! Module monomials `m e_i` are ordered position first: `m e_i > m' e_j` iff
//! `i < j`, or `i = j` and `m >_lex m'`. A lex submodule therefore fills `e_1`
//! first, has components `I_1 ⊇ I_2 ⊇ ...`, and its zero components come last.
//!
//! Everything here is combinatorial; no hypothesis on the base field is used.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    kpoly, monomials_of_degree, GradedFreeModule, Monomial, MonomialIdeal, MonomialSubmodule,
};
use crate::combinatorics::{binomial, macaulay_rep};
use crate::error::{Error, Result};
use crate::numpoly::{
    adjusted_gotzmann_rep, binomial_poly, gotzmann_rep, series_to_polynomial, GotzmannRep, NumPoly,
};
use crate::serde_util::JsonInt;

/// Degrees scanned past the end of the table (and past `f_m`) before
/// [`lexify`] gives up.
pub const DEFAULT_EXTRA_DEGREES: i64 = 64;

/// The first `c` monomials of degree `d` in `k[x_0..x_n]`, in lex order.
pub fn lex_segment(n: u32, d: i64, c: u64) -> Result<Vec<Monomial>> {
    let all = monomials_of_degree(n as usize + 1, d);
    if c > all.len() as u64 {
        return Err(Error::OutOfRange(format!(
            "segment of size {c} exceeds the {} monomials of degree {d}",
            all.len()
        )));
    }
    Ok(all.into_iter().take(c as usize).collect())
}

/// Whether every graded piece of `ideal` is an initial lex segment.
pub fn is_lex_ideal(ideal: &MonomialIdeal) -> bool {
    let top = ideal.max_degree().unwrap_or(0) as i64;
    // S_1 · (lex segment) is again a lex segment, so generator degrees suffice
    (0..=top).all(|e| {
        let ms = monomials_of_degree(ideal.nvars(), e);
        let k = ms.iter().take_while(|m| ideal.contains(m)).count();
        ms[k..].iter().all(|m| !ideal.contains(m))
    })
}

/// Whether every graded piece of `n` is an initial segment in the
/// position-dominant module order: full components, then one lex segment,
/// then nothing.
pub fn is_lex_module(n: &MonomialSubmodule) -> bool {
    let Some(top) = n.max_generator_degree() else {
        return true;
    };
    let nvars = n.ambient().nvars();
    let pairs: Vec<_> = n.components().iter().zip(n.ambient().degrees()).collect();
    (n.ambient().min_degree()..=top).all(|d| {
        let mut open = false;
        pairs.iter().all(|(c, &f)| {
            let ms = monomials_of_degree(nvars, d - f);
            let k = ms.iter().take_while(|m| c.contains(m)).count();
            let ok = !(open && k > 0) && ms[k..].iter().all(|m| !c.contains(m));
            open |= k < ms.len();
            ok
        })
    })
}

/// Hilbert function given as a finite table followed by a polynomial tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HfJson", into = "HfJson")]
pub struct HilbertFunctionSpec {
    table: Vec<(i64, BigInt)>,
    tail: NumPoly,
}

#[derive(Serialize, Deserialize)]
struct HfJson {
    table: Vec<(i64, JsonInt)>,
    tail: NumPoly,
}

impl TryFrom<HfJson> for HilbertFunctionSpec {
    type Error = Error;
    fn try_from(j: HfJson) -> Result<Self> {
        HilbertFunctionSpec::new(j.table.into_iter().map(|(d, v)| (d, v.0)).collect(), j.tail)
    }
}

impl From<HilbertFunctionSpec> for HfJson {
    fn from(h: HilbertFunctionSpec) -> Self {
        HfJson {
            table: h.table.into_iter().map(|(d, v)| (d, JsonInt(v))).collect(),
            tail: h.tail,
        }
    }
}

impl HilbertFunctionSpec {
    /// `table` must list consecutive degrees; the tail applies after its end.
    pub fn new(table: Vec<(i64, BigInt)>, tail: NumPoly) -> Result<Self> {
        if table.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
            return Err(Error::parse("table", "degrees must be consecutive and ascending"));
        }
        if table.iter().any(|(_, v)| v.is_negative()) {
            return Err(Error::parse("table", "Hilbert function values must be ≥ 0"));
        }
        if !tail.is_numerical() {
            return Err(Error::parse("tail", format!("{tail} is not integer-valued")));
        }
        Ok(HilbertFunctionSpec { table, tail })
    }

    /// Tabulates `H(F/N, d)` for `d` in `lo..=hi`, with the Hilbert polynomial
    /// as tail.
    pub fn of_module(n: &MonomialSubmodule, lo: i64, hi: i64) -> Result<Self> {
        let table = (lo..=hi).map(|d| (d, n.hf_direct(d))).collect();
        HilbertFunctionSpec::new(table, n.hilbert_polynomial()?)
    }

    pub fn table(&self) -> &[(i64, BigInt)] {
        &self.table
    }

    pub fn tail(&self) -> &NumPoly {
        &self.tail
    }

    /// Last tabulated degree.
    pub fn table_end(&self) -> Option<i64> {
        self.table.last().map(|(d, _)| *d)
    }

    /// `H(d)`: table value, 0 below the table, tail above it.
    pub fn value(&self, d: i64) -> Result<BigInt> {
        match (self.table.first(), self.table.last()) {
            (Some(&(lo, _)), Some(&(hi, _))) if d <= hi => {
                if d < lo {
                    Ok(BigInt::zero())
                } else {
                    Ok(self.table[(d - lo) as usize].1.clone())
                }
            }
            _ => self.tail.eval_integer(d),
        }
    }
}

/// Polynomial `t ↦ H(S/J, e + t)` for a lex ideal `J` generated in degree
/// `≤ e`, read off the Macaulay representation of `a = H(S/J, e)`.
fn growth_polynomial(a: &BigInt, e: i64) -> NumPoly {
    if a.is_zero() {
        return NumPoly::zero();
    }
    macaulay_rep(a, e as u32)
        .terms()
        .iter()
        .map(|(k, j)| {
            let k = k.to_i64().expect("Macaulay top fits in i64");
            binomial_poly((k - *j as i64) as u32, k)
        })
        .sum()
}

/// Lex submodule `L ⊂ F` with `H(F/L, d) = H(d)` for all `d`.
pub fn lexify(f: &GradedFreeModule, h: &HilbertFunctionSpec) -> Result<MonomialSubmodule> {
    lexify_capped(f, h, DEFAULT_EXTRA_DEGREES)
}

pub fn lexify_capped(
    f: &GradedFreeModule,
    h: &HilbertFunctionSpec,
    extra: i64,
) -> Result<MonomialSubmodule> {
    let nvars = f.nvars();
    let degrees = f.degrees();
    let m = degrees.len();
    let start = h.table.first().map_or(f.min_degree(), |&(d, _)| d.min(f.min_degree()));
    let settle = h.table_end().unwrap_or(start).max(f.max_degree() + 1);
    let mut gens: Vec<Vec<Monomial>> = vec![Vec::new(); m];
    let mut comps: Vec<MonomialIdeal> = vec![MonomialIdeal::zero(nvars); m];
    for d in start..=settle + extra {
        let target = h.value(d)?;
        let total = f.dim(d);
        if target.is_negative() || target > total {
            return Err(Error::NotAchievable(format!(
                "H({d}) = {target} outside [0, dim F_{d} = {total}]"
            )));
        }
        let mut codim = total - &target;
        let mut quotient = Vec::with_capacity(m);
        for i in 0..m {
            let e = d - degrees[i];
            let ms = monomials_of_degree(nvars, e);
            let take = codim.clone().min(BigInt::from(ms.len())).to_usize().expect("small");
            codim -= take;
            if ms[take..].iter().any(|mon| comps[i].contains(mon)) {
                return Err(Error::NotAchievable(format!(
                    "degree {d}: component {} already has more than {take} monomials of degree {e}",
                    i + 1
                )));
            }
            let fresh: Vec<Monomial> = ms[..take]
                .iter()
                .filter(|mon| !comps[i].contains(mon))
                .cloned()
                .collect();
            if !fresh.is_empty() {
                gens[i].extend(fresh);
                comps[i] = MonomialIdeal::new(nvars, gens[i].clone());
            }
            quotient.push((e, BigInt::from(ms.len() - take)));
        }
        debug_assert!(codim.is_zero());
        if d >= settle {
            // every generator so far lies in degree ≤ d, so each lex component
            // grows maximally from here on
            let grown: NumPoly = quotient.iter().map(|(e, a)| growth_polynomial(a, *e)).sum();
            if grown == h.tail.shift(d) {
                return MonomialSubmodule::new(f.clone(), comps);
            }
        }
    }
    Err(Error::NotAchievable(format!(
        "no lex module matches the tail by degree {}",
        settle + extra
    )))
}

/// Hilbert polynomial of `S/I` over `k[x_0..x_n]`.
fn quotient_polynomial(ideal: &MonomialIdeal, n: u32) -> Result<NumPoly> {
    Ok(series_to_polynomial(&kpoly(ideal)?, n))
}

/// Saturated lex ideal `L ⊂ k[x_0..x_n]` with `P_{S/L} = P_g`: the ideal
/// generated by the lex segment of degree `s = |g|` and codimension `P(s)`,
/// saturated.
pub fn saturated_lex_ideal(g: &GotzmannRep, n: u32) -> Result<MonomialIdeal> {
    let s = g.len() as i64;
    let p = g.polynomial();
    let ps = p.eval_integer(s)?;
    let total = binomial(s + n as i64, n);
    if ps > total {
        return Err(Error::OutOfRange(format!(
            "P({s}) = {ps} exceeds dim S_{s} = {total}: not realizable with n = {n}"
        )));
    }
    let size = (total - ps).to_u64().expect("segment size fits in u64");
    let seg = lex_segment(n, s, size)?;
    let ideal = MonomialIdeal::new(n as usize + 1, seg).saturate();
    let got = quotient_polynomial(&ideal, n)?;
    if got != p {
        return Err(Error::InvariantViolated(format!(
            "saturated lex ideal {ideal} has Hilbert polynomial {got}, expected {p}"
        )));
    }
    debug_assert!(is_lex_ideal(&ideal) && ideal.is_saturated());
    Ok(ideal)
}

/// `S(-f_1) ⊕ ... ⊕ S(-f_{m-r-1}) ⊕ L_{m-r} ⊕ 0 ⊕ ... ⊕ 0` with
/// `P_{F/L} = P`, where `L_{m-r}` realizes the Gotzmann part `Q` in degree
/// shifted by `f_{m-r}`.
pub fn saturated_lex_module(p: &NumPoly, f: &GradedFreeModule, r: usize) -> Result<MonomialSubmodule> {
    let n = f.n;
    let nvars = f.nvars();
    let m = f.rank();
    let adj = adjusted_gotzmann_rep(p, n, f.degrees(), r)?;
    let mut comps = vec![MonomialIdeal::unit(nvars); m - r];
    comps.extend(std::iter::repeat_n(MonomialIdeal::zero(nvars), r));
    match f.split_degree(r) {
        None if !adj.q.is_empty() => {
            return Err(Error::NotAdmissible(format!(
                "rank {r} = m leaves no component for Q = {}",
                adj.q.polynomial()
            )))
        }
        None => {}
        Some(split) => {
            let shifted = adj.q.polynomial().shift(split);
            let g = gotzmann_rep(&shifted).map_err(|e| {
                Error::NotAdmissible(format!("Q(d{split:+}) = {shifted} is not a Hilbert polynomial: {e}"))
            })?;
            comps[m - r - 1] = saturated_lex_ideal(&g, n)?;
        }
    }
    let l = MonomialSubmodule::new(f.clone(), comps)?;
    let got = l.hilbert_polynomial()?;
    if got != *p {
        return Err(Error::InvariantViolated(format!(
            "saturated lex module has Hilbert polynomial {got}, expected {p}"
        )));
    }
    Ok(l)
}
