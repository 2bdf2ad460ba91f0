//! Exact rank of integer matrices.
//!
//! [`rank`] first reduces modulo a large prime. The modular rank never exceeds
//! the rank over the rationals, so when it already equals `min(rows, cols)` it
//! is exact; otherwise fraction-free (Bareiss) elimination over the integers
//! decides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

const PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b);
        }
        b = mul_mod(b, b);
        e >>= 1;
    }
    acc
}

fn reduce(x: &BigInt) -> u64 {
    x.mod_floor(&BigInt::from(PRIME)).to_u64().unwrap_or(0)
}

/// Rank modulo `2^61 - 1`; a lower bound for the rational rank.
pub fn rank_mod_p(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(reduce).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], PRIME - 2);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&v| mul_mod(v, inv)).collect();
        for r in rank + 1..m.len() {
            let f = m[r][c];
            if f == 0 {
                continue;
            }
            for (k, pv) in pivot_row.iter().enumerate().skip(c) {
                let sub = mul_mod(f, *pv);
                m[r][k] = (m[r][k] + PRIME - sub) % PRIME;
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank over the rationals by fraction-free Gaussian elimination.
pub fn rank_bareiss(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in rank + 1..m.len() {
            let f = m[r][c].clone();
            for k in c..cols {
                let v = (&piv * &m[r][k] - &f * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
        }
        prev = piv;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact rank over the rationals.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let full = rows.len().min(cols);
    if full == 0 {
        return 0;
    }
    let modular = rank_mod_p(rows);
    if modular == full {
        return modular;
    }
    rank_bareiss(rows)
}
