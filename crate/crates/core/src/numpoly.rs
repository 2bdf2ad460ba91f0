//! Exact rational polynomials in one variable `d`, Gotzmann representations,
//! rank-and-degree adjusted Gotzmann representations and Grassmannian
//! embedding dimensions of Quot schemes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::serde_util::{format_rational, JsonRational};

/// Default cap on the number of terms of a Gotzmann representation.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Dense polynomial `Σ coeffs[i] d^i` with trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct NumPoly {
    coeffs: Vec<BigRational>,
}

impl NumPoly {
    pub fn zero() -> Self {
        NumPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        NumPoly::from_coeffs(vec![BigRational::from_integer(c.into())])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NumPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        NumPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `d^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }

    /// Value at an integer argument, failing if it is not an integer.
    pub fn eval_integer(&self, x: i64) -> Result<BigInt> {
        let v = self.eval_int(x);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NotNumerical(format!("P({x}) = {}", format_rational(&v))))
        }
    }

    /// Integer-valued on all integers; checked at `deg + 1` consecutive points.
    pub fn is_numerical(&self) -> bool {
        let pts = self.degree().map_or(0, |d| d + 1) as i64;
        (0..pts).all(|x| self.eval_int(x).is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> NumPoly {
        NumPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `P(d + t)`.
    pub fn shift(&self, t: i64) -> NumPoly {
        let lin = NumPoly::from_int_coeffs(&[t, 1]);
        let mut out = NumPoly::zero();
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &NumPoly::from_coeffs(vec![c.clone()]);
        }
        out
    }
}

impl Add for &NumPoly {
    type Output = NumPoly;
    fn add(self, rhs: &NumPoly) -> NumPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NumPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &NumPoly {
    type Output = NumPoly;
    fn sub(self, rhs: &NumPoly) -> NumPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NumPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &NumPoly {
    type Output = NumPoly;
    fn mul(self, rhs: &NumPoly) -> NumPoly {
        if self.is_zero() || rhs.is_zero() {
            return NumPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NumPoly::from_coeffs(out)
    }
}

impl Neg for &NumPoly {
    type Output = NumPoly;
    fn neg(self) -> NumPoly {
        NumPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for NumPoly {
            type Output = NumPoly;
            fn $f(self, rhs: NumPoly) -> NumPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for NumPoly {
    fn sum<I: Iterator<Item = NumPoly>>(iter: I) -> NumPoly {
        iter.fold(NumPoly::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{i}"),
            };
            if i == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{mono}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// One term `mult · C(d + shift, a)` of the binomial-term JSON encoding.
#[derive(Serialize, Deserialize)]
struct BinomialTerm {
    a: u32,
    shift: i64,
    #[serde(default = "one_mult")]
    mult: JsonRational,
}

fn one_mult() -> JsonRational {
    JsonRational(BigRational::one())
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PolyJson {
    Coeffs { coeffs: Vec<JsonRational> },
    Terms { terms: Vec<BinomialTerm> },
}

impl From<NumPoly> for PolyJson {
    fn from(p: NumPoly) -> Self {
        PolyJson::Coeffs {
            coeffs: p.coeffs.into_iter().map(JsonRational).collect(),
        }
    }
}

impl TryFrom<PolyJson> for NumPoly {
    type Error = String;
    fn try_from(j: PolyJson) -> std::result::Result<Self, String> {
        Ok(match j {
            PolyJson::Coeffs { coeffs } => {
                NumPoly::from_coeffs(coeffs.into_iter().map(|c| c.0).collect())
            }
            PolyJson::Terms { terms } => terms
                .iter()
                .map(|t| binomial_poly(t.a, t.shift).scale(&t.mult.0))
                .sum(),
        })
    }
}

/// `C(d + shift, a)` expanded as a polynomial in `d`.
pub fn binomial_poly(a: u32, shift: i64) -> NumPoly {
    let mut p = NumPoly::constant(1);
    for i in 0..a as i64 {
        p = &p * &NumPoly::from_int_coeffs(&[shift - i, 1]);
    }
    let fact: BigInt = (1..=a).map(BigInt::from).product();
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// `C(d - f + n, n)`, the Hilbert polynomial of `S(-f)` over `k[x_0..x_n]`.
pub fn free_poly(n: u32, f: i64) -> NumPoly {
    binomial_poly(n, n as i64 - f)
}

/// Gotzmann representation `P(d) = Σ_{i=1..s} C(d + a_i - (i-1), a_i)` with
/// `a_1 ≥ ... ≥ a_s ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GotzmannRep {
    pub a: Vec<u32>,
}

impl GotzmannRep {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAdmissible(format!(
                "Gotzmann parameters must be non-increasing: {a:?}"
            )));
        }
        Ok(GotzmannRep { a })
    }

    /// The Gotzmann number `s`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn polynomial(&self) -> NumPoly {
        // group runs of equal a to keep this cheap for long constant tails
        let mut out = NumPoly::zero();
        let mut zeros = 0i64;
        for (i, &a) in self.a.iter().enumerate() {
            if a == 0 {
                zeros += 1;
            } else {
                out = &out + &binomial_poly(a, a as i64 - i as i64);
            }
        }
        &out + &NumPoly::constant(zeros)
    }

    /// Value of the representation at `d`, term by term in the polynomial
    /// convention.
    pub fn eval(&self, d: i64) -> BigRational {
        self.polynomial().eval_int(d)
    }
}

impl fmt::Display for GotzmannRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        let zeros = self.a.iter().filter(|&&a| a == 0).count();
        for (i, &a) in self.a.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let top = a as i64 - i as i64;
            let top = match top.cmp(&0) {
                std::cmp::Ordering::Equal => "d".to_string(),
                std::cmp::Ordering::Greater => format!("d+{top}"),
                std::cmp::Ordering::Less => format!("d{top}"),
            };
            parts.push(format!("C({top},{a})"));
        }
        if zeros > 0 {
            parts.push(zeros.to_string());
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Greedy Gotzmann representation with the default term cap.
pub fn gotzmann_rep(p: &NumPoly) -> Result<GotzmannRep> {
    gotzmann_rep_capped(p, DEFAULT_TERM_CAP)
}

/// Greedy peeling: repeatedly subtract `C(d + a - i, a)` with `a` the degree
/// of the remainder.
pub fn gotzmann_rep_capped(p: &NumPoly, cap: usize) -> Result<GotzmannRep> {
    if !p.is_numerical() {
        return Err(Error::NotNumerical(p.to_string()));
    }
    let mut rest = p.clone();
    let mut a_list: Vec<u32> = Vec::new();
    while let Some(deg) = rest.degree() {
        let lead = rest.leading();
        if lead.is_negative() {
            return Err(Error::NotAdmissible(format!(
                "remainder {rest} has negative leading coefficient after {} terms",
                a_list.len()
            )));
        }
        let a = deg as u32;
        if a_list.last().is_some_and(|&prev| a > prev) {
            return Err(Error::NotAdmissible(format!(
                "Gotzmann parameters would increase at term {}",
                a_list.len() + 1
            )));
        }
        if a == 0 {
            // positive integer constant: that many trailing zeros
            let c = lead.to_integer();
            let c = c
                .to_usize()
                .filter(|&c| a_list.len() + c <= cap)
                .ok_or(Error::TooManyTerms(cap))?;
            a_list.extend(std::iter::repeat_n(0, c));
            break;
        }
        let i = a_list.len() as i64;
        rest = &rest - &binomial_poly(a, a as i64 - i);
        a_list.push(a);
        if a_list.len() > cap {
            return Err(Error::TooManyTerms(cap));
        }
    }
    Ok(GotzmannRep { a: a_list })
}

/// Length of the Gotzmann representation; 0 for the zero polynomial.
pub fn gotzmann_number(p: &NumPoly) -> Result<usize> {
    gotzmann_rep(p).map(|g| g.len())
}

/// `P(d) = Σ_{free} C(d - f_i + n, n) + Q(d)` with `Q` Gotzmann-represented.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjustedGotzmannRep {
    pub n: u32,
    pub free_degrees: Vec<i64>,
    pub q: GotzmannRep,
}

impl AdjustedGotzmannRep {
    /// The rank-and-degree adjusted Gotzmann number (length of `q`).
    pub fn adjusted_number(&self) -> usize {
        self.q.len()
    }

    pub fn free_part(&self) -> NumPoly {
        self.free_degrees.iter().map(|&f| free_poly(self.n, f)).sum()
    }

    pub fn polynomial(&self) -> NumPoly {
        &self.free_part() + &self.q.polynomial()
    }
}

/// Checks that `degrees` is sorted and `r ≤ m`, returning `f_{m-r}` (1-based)
/// when `r < m`.
pub(crate) fn split_degree(degrees: &[i64], r: usize) -> Result<Option<i64>> {
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::PreconditionViolated(format!(
            "generator degrees must be sorted ascending: {degrees:?}"
        )));
    }
    let m = degrees.len();
    if r > m {
        return Err(Error::PreconditionViolated(format!("rank {r} exceeds {m} generators")));
    }
    Ok((r < m).then(|| degrees[m - r - 1]))
}

/// Splits off `C(d - f_i + n, n)` for the last `r` generator degrees and
/// Gotzmann-represents the remainder. `r = 0` is accepted (no free part).
pub fn adjusted_gotzmann_rep(
    p: &NumPoly,
    n: u32,
    all_degrees: &[i64],
    r: usize,
) -> Result<AdjustedGotzmannRep> {
    if let Some(f) = split_degree(all_degrees, r)? {
        if f > 0 {
            return Err(Error::PreconditionViolated(format!(
                "f_(m-r) = {f} must be ≤ 0"
            )));
        }
    }
    let m = all_degrees.len();
    let free_degrees = all_degrees[m - r..].to_vec();
    let free: NumPoly = free_degrees.iter().map(|&f| free_poly(n, f)).sum();
    let q = gotzmann_rep(&(p - &free))?;
    Ok(AdjustedGotzmannRep { n, free_degrees, q })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GotzmannMode {
    Standard,
    Adjusted,
}

/// Dimensions of the Grassmannian `G(P(s), F_s)` receiving the Quot scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotDims {
    pub s: usize,
    #[serde(with = "crate::serde_util::bigint")]
    pub ambient_dim: BigInt,
    #[serde(with = "crate::serde_util::bigint")]
    pub sub_dim: BigInt,
    #[serde(with = "crate::serde_util::bigint")]
    pub grass_dim: BigInt,
}

pub fn grassmannian_embedding_dims(
    p: &NumPoly,
    n: u32,
    all_degrees: &[i64],
    r: usize,
    mode: GotzmannMode,
) -> Result<QuotDims> {
    let s = match mode {
        GotzmannMode::Standard => gotzmann_number(p)?,
        GotzmannMode::Adjusted => adjusted_gotzmann_rep(p, n, all_degrees, r)?.adjusted_number(),
    };
    let si = s as i64;
    let ambient_dim: BigInt = all_degrees
        .iter()
        .map(|&f| binomial(si - f + n as i64, n))
        .sum();
    let sub_dim = p.eval_integer(si)?;
    if sub_dim.is_negative() || sub_dim > ambient_dim {
        return Err(Error::OutOfRange(format!(
            "P({s}) = {sub_dim} does not fit in dim F_{s} = {ambient_dim}"
        )));
    }
    let grass_dim = &sub_dim * (&ambient_dim - &sub_dim);
    Ok(QuotDims {
        s,
        ambient_dim,
        sub_dim,
        grass_dim,
    })
}

/// `Σ_j c_j C(d - j + n, n)` for the series `Σ_j c_j t^j / (1 - t)^{n+1}`.
pub fn series_to_polynomial(numerator: &[BigInt], n: u32) -> NumPoly {
    series_to_polynomial_from(numerator, 0, n)
}

/// As [`series_to_polynomial`] with the numerator starting at `t^low`.
pub fn series_to_polynomial_from(numerator: &[BigInt], low: i64, n: u32) -> NumPoly {
    numerator
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| free_poly(n, low + i as i64).scale(&BigRational::from_integer(c.clone())))
        .sum()
}

impl TryFrom<Vec<u32>> for GotzmannRep {
    type Error = Error;
    fn try_from(a: Vec<u32>) -> Result<Self> {
        GotzmannRep::new(a)
    }
}

/// Exact factorial.
pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `x · k!`.
pub(crate) fn times_factorial(x: &BigRational, k: u32) -> BigRational {
    x * BigRational::from_integer(factorial(k))
}

pub(crate) fn is_integral(x: &BigRational) -> bool {
    x.denom().is_one() || x.numer().is_multiple_of(x.denom())
}
