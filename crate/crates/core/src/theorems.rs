//! Executable checks of the Macaulay, Green, Gotzmann regularity and
//! persistence bounds (classical module versions and the rank-and-degree
//! adjusted versions), plus seeded instance generators.
//!
//! With `r = rank(F/N)` the Hilbert function splits as
//! `H(M, d) = Σ_{i > m-r} C(d - f_i + n, n) + ρ_d`; the adjusted bounds apply
//! the Macaulay/Green transforms to `ρ_d` at index `d - f_{m-r}` only. When
//! `r = 0` the free sum is empty, `ρ_d = H(M, d)` and the adjusted bounds are
//! the classical ones with `l = f_m`, `p = 0`. When `r = m` (`N = 0`), `ρ ≡ 0`
//! and no degree restriction applies.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::{
    generic_hyperplane_hf, GradedFreeModule, Monomial, MonomialIdeal, MonomialSubmodule,
};
use crate::combinatorics::{green_transform, macaulay_transform};
use crate::error::{Error, Result};
use crate::lex::saturated_lex_module;
use crate::numpoly::{adjusted_gotzmann_rep, free_poly, GotzmannRep, NumPoly};
use crate::resolution::{regularity, RegularityOf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The bound holds strictly.
    Holds,
    /// The bound holds with equality.
    Sharp,
    Violated,
    /// A conditional statement whose premise is false at this instance.
    PremiseFails,
}

/// Outcome of one check; serialized as one JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub instance: Value,
    pub premises_hold: bool,
    #[serde(with = "crate::serde_util::bigint")]
    pub bound_lhs: BigInt,
    #[serde(with = "crate::serde_util::bigint")]
    pub bound_rhs: BigInt,
    pub verdict: Verdict,
    pub context: Map<String, Value>,
}

impl CheckReport {
    /// Report for the claim `lhs ≤ rhs`.
    fn at_most(name: &str, instance: Value, lhs: BigInt, rhs: BigInt, context: Map<String, Value>) -> Self {
        let verdict = match lhs.cmp(&rhs) {
            std::cmp::Ordering::Less => Verdict::Holds,
            std::cmp::Ordering::Equal => Verdict::Sharp,
            std::cmp::Ordering::Greater => Verdict::Violated,
        };
        CheckReport {
            name: name.into(),
            instance,
            premises_hold: true,
            bound_lhs: lhs,
            bound_rhs: rhs,
            verdict,
            context,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

fn instance(n: &MonomialSubmodule) -> Value {
    serde_json::to_value(n).expect("modules serialize")
}

fn ctx(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn big(v: &BigInt) -> Value {
    serde_json::to_value(crate::serde_util::JsonInt(v.clone())).expect("integers serialize")
}

/// `(r, f_{m-r})` after checking `d ≥ f_{m-r} + 1`.
fn adjusted_split(n: &MonomialSubmodule, d: i64) -> Result<(usize, Option<i64>)> {
    let r = n.rank();
    let split = n.ambient().split_degree(r);
    if let Some(f) = split {
        if d < f + 1 {
            return Err(Error::PreconditionViolated(format!(
                "d = {d} must be ≥ f_(m-r) + 1 = {}",
                f + 1
            )));
        }
    }
    Ok((r, split))
}

/// `Σ_{i > m-r} C(d + 1 - f_i + n, n) + ρ_d^{<d - f_{m-r}>}`.
pub fn adjusted_macaulay_bound(n: &MonomialSubmodule, d: i64) -> Result<BigInt> {
    let (r, split) = adjusted_split(n, d)?;
    let (_, rho) = n.adjusted_hf_decomposition(d)?;
    let free = n.ambient().free_part(r, d + 1);
    Ok(match split {
        Some(f) => free + macaulay_transform(&rho, (d - f) as u32),
        None => free,
    })
}

/// `Σ_{i > m-r} C(d - f_i + n - 1, n - 1) + (ρ_d)_{<d - f_{m-r}>}`.
pub fn adjusted_green_bound(n: &MonomialSubmodule, d: i64) -> Result<BigInt> {
    let (r, split) = adjusted_split(n, d)?;
    let (_, rho) = n.adjusted_hf_decomposition(d)?;
    let free = n.ambient().free_part_hyperplane(r, d);
    Ok(match split {
        Some(f) => free + green_transform(&rho, (d - f) as u32),
        None => free,
    })
}

/// `H(M, d + 1) ≤ Σ_{i > m-r} C(d + 1 - f_i + n, n) + ρ_d^{<d - f_{m-r}>}`.
pub fn check_macaulay_adjusted(n: &MonomialSubmodule, d: i64) -> Result<CheckReport> {
    let rhs = adjusted_macaulay_bound(n, d)?;
    let lhs = n.hf_direct(d + 1);
    let r = n.rank();
    let (_, rho) = n.adjusted_hf_decomposition(d)?;
    Ok(CheckReport::at_most(
        "macaulay_adjusted",
        instance(n),
        lhs,
        rhs,
        ctx(&[
            ("d", json!(d)),
            ("r", json!(r)),
            ("split_degree", json!(n.ambient().split_degree(r))),
            ("rho", big(&rho)),
        ]),
    ))
}

/// `H(M', d) ≤ Σ_{i > m-r} C(d - f_i + n - 1, n - 1) + (ρ_d)_{<d - f_{m-r}>}`
/// for a general hyperplane section `M'`.
pub fn check_green_adjusted(
    n: &MonomialSubmodule,
    d: i64,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    if n.n() < 1 {
        return Err(Error::PreconditionViolated("hyperplane sections need n ≥ 1".into()));
    }
    let rhs = adjusted_green_bound(n, d)?;
    let lhs = generic_hyperplane_hf(n, d, samples, seed)?;
    let r = n.rank();
    let (_, rho) = n.adjusted_hf_decomposition(d)?;
    Ok(CheckReport::at_most(
        "green_adjusted",
        instance(n),
        lhs,
        rhs,
        ctx(&[
            ("d", json!(d)),
            ("r", json!(r)),
            ("split_degree", json!(n.ambient().split_degree(r))),
            ("rho", big(&rho)),
            ("samples", json!(samples)),
            ("seed", json!(seed)),
        ]),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GasharovKind {
    Macaulay,
    Green,
}

/// Classical module bounds with `l = f_m`: `H(M, d+1) ≤ H(M, d)^{<d-l-p>}`
/// or `H(M', d) ≤ H(M, d)_{<d-l-p>}`, for `d ≥ p + l + 1`.
pub fn check_gasharov(
    n: &MonomialSubmodule,
    d: i64,
    p: u32,
    kind: GasharovKind,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let l = n.ambient().max_degree();
    if d < p as i64 + l + 1 {
        return Err(Error::PreconditionViolated(format!(
            "d = {d} must be ≥ p + l + 1 = {}",
            p as i64 + l + 1
        )));
    }
    let index = (d - l - p as i64) as u32;
    let h = n.hf_direct(d);
    let (name, lhs, rhs) = match kind {
        GasharovKind::Macaulay => ("gasharov_macaulay", n.hf_direct(d + 1), macaulay_transform(&h, index)),
        GasharovKind::Green => {
            if n.n() < 1 {
                return Err(Error::PreconditionViolated("hyperplane sections need n ≥ 1".into()));
            }
            (
                "gasharov_green",
                generic_hyperplane_hf(n, d, samples, seed)?,
                green_transform(&h, index),
            )
        }
    };
    Ok(CheckReport::at_most(
        name,
        instance(n),
        lhs,
        rhs,
        ctx(&[("d", json!(d)), ("p", json!(p)), ("l", json!(l)), ("index", json!(index))]),
    ))
}

/// If `N` is generated in degree `≤ d` and `H(M, d+1)` attains the adjusted
/// Macaulay bound at `d`, then it attains it at `d + 1` as well. The chain
/// is followed on to `d + horizon`; steps past `d + 1` extend the literal
/// statement along the classical persistence pattern.
pub fn check_persistence_adjusted(n: &MonomialSubmodule, d: i64, horizon: u32) -> Result<CheckReport> {
    if let Some(top) = n.max_generator_degree() {
        if top > d {
            return Err(Error::PreconditionViolated(format!(
                "N has a generator in degree {top} > d = {d}"
            )));
        }
    }
    if horizon == 0 {
        return Err(Error::PreconditionViolated("horizon must be positive".into()));
    }
    let premise_lhs = n.hf_direct(d + 1);
    let premise_rhs = adjusted_macaulay_bound(n, d)?;
    let mut context = ctx(&[
        ("d", json!(d)),
        ("r", json!(n.rank())),
        ("horizon", json!(horizon)),
        ("chain_is_extension", json!(horizon > 1)),
    ]);
    if premise_lhs != premise_rhs {
        return Ok(CheckReport {
            name: "persistence_adjusted".into(),
            instance: instance(n),
            premises_hold: false,
            bound_lhs: premise_lhs,
            bound_rhs: premise_rhs,
            verdict: Verdict::PremiseFails,
            context,
        });
    }
    let mut last = (premise_lhs, premise_rhs);
    for k in d + 1..=d + horizon as i64 {
        let lhs = n.hf_direct(k + 1);
        let rhs = adjusted_macaulay_bound(n, k)?;
        let equal = lhs == rhs;
        if k == d + 1 {
            context.insert("literal_conclusion_holds".into(), json!(equal));
        }
        if !equal {
            context.insert("failed_at".into(), json!(k));
            return Ok(CheckReport {
                name: "persistence_adjusted".into(),
                instance: instance(n),
                premises_hold: true,
                bound_lhs: lhs,
                bound_rhs: rhs,
                verdict: Verdict::Violated,
                context,
            });
        }
        last = (lhs, rhs);
    }
    Ok(CheckReport {
        name: "persistence_adjusted".into(),
        instance: instance(n),
        premises_hold: true,
        bound_lhs: last.0,
        bound_rhs: last.1,
        verdict: Verdict::Sharp,
        context,
    })
}

/// `reg(sat N) ≤ max(s, f_m)` with `s` the adjusted Gotzmann number, when
/// `f_{m-r} ≤ 0`.
///
/// For `N = 0` the regularity is reported as `f_m`, the regularity of `F`,
/// and the verdict is `sharp`.
pub fn check_gotzmann_regularity_adjusted(n: &MonomialSubmodule) -> Result<CheckReport> {
    let f = n.ambient();
    let r = n.rank();
    if let Some(split) = f.split_degree(r) {
        if split > 0 {
            return Err(Error::PreconditionViolated(format!("f_(m-r) = {split} must be ≤ 0")));
        }
    }
    let p = n.hilbert_polynomial()?;
    let adj = adjusted_gotzmann_rep(&p, n.n(), f.degrees(), r)?;
    let s = adj.adjusted_number() as i64;
    let bound = s.max(f.max_degree());
    let sat = n.saturate();
    let (reg, note) = if sat.is_zero() {
        (f.max_degree(), "zero submodule: regularity of F used")
    } else {
        (regularity(&sat, RegularityOf::Submodule)?, "")
    };
    let mut context = ctx(&[
        ("r", json!(r)),
        ("s", json!(s)),
        ("f_m", json!(f.max_degree())),
        ("q", serde_json::to_value(&adj.q).expect("serializes")),
    ]);
    if !note.is_empty() {
        context.insert("note".into(), json!(note));
    }
    Ok(CheckReport::at_most(
        "gotzmann_regularity_adjusted",
        instance(n),
        BigInt::from(reg),
        BigInt::from(bound),
        context,
    ))
}

/// The saturated lex module with Hilbert polynomial `P` has regularity
/// exactly `max(s, f_m)` when `f_{m-r} = 0` and `s ≥ f_m`.
pub fn check_sharpness(p: &NumPoly, f: &GradedFreeModule, r: usize) -> Result<CheckReport> {
    if r == 0 || r >= f.rank() {
        return Err(Error::PreconditionViolated(format!(
            "need 1 ≤ r < m, got r = {r}, m = {}",
            f.rank()
        )));
    }
    if f.split_degree(r) != Some(0) {
        return Err(Error::PreconditionViolated("sharpness needs f_(m-r) = 0".into()));
    }
    let adj = adjusted_gotzmann_rep(p, f.n, f.degrees(), r)?;
    let s = adj.adjusted_number() as i64;
    if s < f.max_degree() {
        return Err(Error::PreconditionViolated(format!(
            "sharpness needs s = {s} ≥ f_m = {}",
            f.max_degree()
        )));
    }
    let l = saturated_lex_module(p, f, r)?;
    let reg = regularity(&l, RegularityOf::Submodule)?;
    let bound = s.max(f.max_degree());
    let mut report = CheckReport::at_most(
        "sharpness",
        json!({ "poly": p, "module_shape": f, "rank": r }),
        BigInt::from(reg),
        BigInt::from(bound),
        ctx(&[("s", json!(s)), ("lex_module", instance(&l))]),
    );
    if report.verdict == Verdict::Holds {
        // equality is the claim
        report.verdict = Verdict::Violated;
    }
    Ok(report)
}

/// Random monomial ideal in `nvars` variables with `1..=max_gens` generators
/// of degree `1..=max_deg`.
pub fn random_ideal(nvars: usize, max_gens: usize, max_deg: u32, rng: &mut impl Rng) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..k)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg.max(1));
            let mut exps = vec![0u32; nvars];
            for _ in 0..deg {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(nvars, gens)
}

/// Seeded random monomial submodule: `n ∈ 1..=max_n`, `m ∈ 1..=max_m`,
/// generator degrees in `[-2, 2]`, about a quarter of the components zero
/// and a few unit components.
pub fn random_submodule(
    max_n: u32,
    max_m: usize,
    max_gens: usize,
    max_deg: u32,
    seed: u64,
) -> MonomialSubmodule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n.max(1));
    let m = rng.gen_range(1..=max_m.max(1));
    let mut degrees: Vec<i64> = (0..m).map(|_| rng.gen_range(-2..=2)).collect();
    degrees.sort_unstable();
    let nvars = n as usize + 1;
    let components = (0..m)
        .map(|_| match rng.gen_range(0..20) {
            0..=4 => MonomialIdeal::zero(nvars),
            5 => MonomialIdeal::unit(nvars),
            _ => random_ideal(nvars, max_gens, max_deg, &mut rng),
        })
        .collect();
    let f = GradedFreeModule::new(n, degrees).expect("sorted, nonempty");
    MonomialSubmodule::new(f, components).expect("shapes match")
}

/// Random Gotzmann representation of length `≤ max_len` with parameters
/// `≤ min(max_a, n - 1)`, so that it is realized by a saturated ideal of
/// `k[x_0..x_n]`.
pub fn random_gotzmann_rep(n: u32, max_len: usize, max_a: u32, rng: &mut impl Rng) -> GotzmannRep {
    let len = rng.gen_range(0..=max_len);
    let top = max_a.min(n.saturating_sub(1));
    let mut a: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=top)).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    GotzmannRep::new(a).expect("sorted descending")
}

/// Instance for the sharpness statement: `(P, F, r)` with `f_{m-r} = 0` and
/// `s ≥ f_m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessInstance {
    pub poly: NumPoly,
    pub module_shape: GradedFreeModule,
    pub rank: usize,
}

pub fn random_sharpness_instance(seed: u64) -> SharpnessInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3u32);
    let g = loop {
        let g = random_gotzmann_rep(n, 8, 3, &mut rng);
        if !g.is_empty() {
            break g;
        }
    };
    let s = g.len() as i64;
    let m = rng.gen_range(2..=3usize);
    let r = rng.gen_range(1..m);
    let mut degrees: Vec<i64> = (0..m - r - 1).map(|_| rng.gen_range(-2..=0)).collect();
    degrees.push(0);
    degrees.extend((0..r).map(|_| rng.gen_range(0..=s.min(2))));
    degrees.sort_unstable();
    let free: NumPoly = degrees[m - r..].iter().map(|&f| free_poly(n, f)).sum();
    SharpnessInstance {
        poly: &free + &g.polynomial(),
        module_shape: GradedFreeModule::new(n, degrees).expect("sorted"),
        rank: r,
    }
}

/// Lex-segment-friendly Borel-fixed ideal: the ideal generated by the first
/// `c` monomials of each listed degree.
pub fn random_stable_ideal(nvars: usize, max_deg: u32, rng: &mut impl Rng) -> MonomialIdeal {
    let mut gens = Vec::new();
    let picks = rng.gen_range(1..=3);
    for _ in 0..picks {
        let d = rng.gen_range(1..=max_deg as i64);
        let mut ms = crate::algebra::monomials_of_degree(nvars, d);
        // a random monomial and everything Borel-above it
        let g = ms.choose(rng).cloned().expect("nonempty");
        ms.retain(|m| borel_above(m, &g));
        gens.extend(ms);
    }
    MonomialIdeal::new(nvars, gens)
}

/// `m` is obtained from `g` by moves `x_j → x_i` with `i < j`.
fn borel_above(m: &Monomial, g: &Monomial) -> bool {
    let (mut a, mut b) = (0u32, 0u32);
    m.exps().iter().zip(g.exps()).all(|(x, y)| {
        a += x;
        b += y;
        a >= b
    })
}

/// Gotzmann numbers `(standard, adjusted)` for a shape and rank.
pub fn gotzmann_numbers(p: &NumPoly, f: &GradedFreeModule, r: usize) -> Result<(usize, usize)> {
    let standard = crate::numpoly::gotzmann_number(p)?;
    let adjusted = adjusted_gotzmann_rep(p, f.n, f.degrees(), r)?.adjusted_number();
    Ok((standard, adjusted))
}

/// Degrees `d ≥ max(threshold, lo)` in a window of `width` for a module.
pub fn degree_window(threshold: i64, width: i64) -> impl Iterator<Item = i64> {
    threshold..threshold + width
}

/// Lowest valid `d` for the adjusted checks.
pub fn adjusted_threshold(n: &MonomialSubmodule) -> i64 {
    n.ambient()
        .split_degree(n.rank())
        .map_or(n.ambient().min_degree(), |f| f + 1)
}

/// Sum of all checks' verdict counts, for harness summaries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: usize,
    pub sharp: usize,
    pub violated: usize,
    pub premise_fails: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn record(&mut self, r: &Result<CheckReport>) {
        match r {
            Ok(rep) => match rep.verdict {
                Verdict::Holds => self.holds += 1,
                Verdict::Sharp => self.sharp += 1,
                Verdict::Violated => self.violated += 1,
                Verdict::PremiseFails => self.premise_fails += 1,
            },
            Err(_) => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, o: &Tally) {
        self.holds += o.holds;
        self.sharp += o.sharp;
        self.violated += o.violated;
        self.premise_fails += o.premise_fails;
        self.skipped += o.skipped;
    }

    pub fn total(&self) -> usize {
        self.holds + self.sharp + self.violated + self.premise_fails + self.skipped
    }
}

/// Runs every module checker over its valid degrees in a window of `width`
/// above its threshold.
pub fn sweep_module(n: &MonomialSubmodule, width: i64, seed: u64) -> (Tally, Vec<CheckReport>) {
    let mut tally = Tally::default();
    let mut violations = Vec::new();
    let mut push = |r: Result<CheckReport>, tally: &mut Tally| {
        tally.record(&r);
        if let Ok(rep) = r {
            if rep.is_violation() {
                violations.push(rep);
            }
        }
    };
    let t = adjusted_threshold(n);
    for d in degree_window(t, width) {
        push(check_macaulay_adjusted(n, d), &mut tally);
        push(check_green_adjusted(n, d, crate::algebra::DEFAULT_SAMPLES, seed), &mut tally);
        let top = n.max_generator_degree().unwrap_or(d).max(t);
        if d >= top {
            push(check_persistence_adjusted(n, d, 3), &mut tally);
        }
    }
    let l = n.ambient().max_degree();
    for p in 0..3u32 {
        for d in degree_window(p as i64 + l + 1, width) {
            push(check_gasharov(n, d, p, GasharovKind::Macaulay, 3, seed), &mut tally);
            push(check_gasharov(n, d, p, GasharovKind::Green, 3, seed), &mut tally);
        }
    }
    push(check_gotzmann_regularity_adjusted(n), &mut tally);
    (tally, violations)
}

/// Whether the adjusted Macaulay bound is at most the classical one
/// (`p = 0`, `l = f_m`) at `d`, where both apply.
pub fn adjusted_refines_classical(n: &MonomialSubmodule, d: i64) -> Option<bool> {
    let l = n.ambient().max_degree();
    if d < l + 1 {
        return None;
    }
    let adjusted = adjusted_macaulay_bound(n, d).ok()?;
    let classical = macaulay_transform(&n.hf_direct(d), (d - l) as u32);
    Some(adjusted <= classical)
}
