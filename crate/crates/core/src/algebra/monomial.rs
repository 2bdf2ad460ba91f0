use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Monomial `x_0^{e_0} ... x_n^{e_n}` stored as its exponent vector.
///
/// `Ord` is lexicographic with `x_0 > x_1 > ... > x_n`: the first differing
/// exponent decides, larger exponent is larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// Same monomial with `x_i` removed.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = 0;
        Monomial { exps }
    }

    /// Index of the largest-index variable present (`max(m)`).
    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Parses `"x0^2*x1"` (or `"1"`) in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; nvars];
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, pow) = match factor.split_once('^') {
                Some((v, p)) => (
                    v.trim(),
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::parse(s, format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let idx: usize = var
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| Error::parse(s, format!("bad variable `{var}`")))?;
            if idx >= nvars {
                return Err(Error::parse(
                    s,
                    format!("variable x{idx} outside x0..x{}", nvars.saturating_sub(1)),
                ));
            }
            exps[idx] += pow;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Ascending degree, then decreasing lex. Used for deterministic generator lists.
pub(crate) fn deg_lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

/// All monomials of degree `d` in `nvars` variables, in decreasing lex order
/// (so `x_0^d` comes first). Empty for negative `d`.
pub fn monomials_of_degree(nvars: usize, d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 || nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(nvars));
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, d as u32, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, rest: u32, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = rest;
        out.push(Monomial { exps: cur.clone() });
        return;
    }
    for e in (0..=rest).rev() {
        cur[i] = e;
        fill(cur, i + 1, rest - e, out);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m = Monomial::parse("x0^2*x1", 3).unwrap();
        assert_eq!(m.exps(), &[2, 1, 0]);
        assert_eq!(m.to_string(), "x0^2*x1");
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert_eq!(Monomial::parse("x1*x1", 2).unwrap().exps(), &[0, 2]);
        assert!(Monomial::parse("x3", 3).is_err());
        assert!(Monomial::parse("y", 3).is_err());
    }

    #[test]
    fn lex_enumeration() {
        let ms: Vec<String> = monomials_of_degree(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(ms, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
        assert!(monomials_of_degree(2, -1).is_empty());
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one(2)]);
        // decreasing in Ord
        let ms = monomials_of_degree(4, 3);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ms.len(), 20);
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 0, 3]);
        assert_eq!(a.lcm(&b).exps(), &[2, 1, 3]);
        assert_eq!(a.colon(&b).exps(), &[1, 1, 0]);
        assert!(Monomial::new(vec![1, 1, 0]).divides(&a));
        assert_eq!(a.div(&Monomial::new(vec![1, 1, 0])).unwrap().exps(), &[1, 0, 0]);
        assert_eq!(a.max_var(), Some(1));
        assert_eq!(Monomial::one(3).max_var(), None);
    }
}
