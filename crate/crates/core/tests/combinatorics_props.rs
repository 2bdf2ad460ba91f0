use gotzmann::combinatorics::{binomial, green_transform, macaulay_rep, macaulay_transform};
use num_bigint::BigInt;
use proptest::prelude::*;

/// All descent-valid decompositions `a = Σ C(k_j, j)`, `j = d, d-1, ..., δ ≥ 1`,
/// `k_d > ... > k_δ ≥ δ`, by exhaustive search.
fn all_decompositions(a: u64, d: u32) -> Vec<Vec<(u64, u32)>> {
    fn go(rest: u64, j: u32, below: u64, acc: &mut Vec<(u64, u32)>, out: &mut Vec<Vec<(u64, u32)>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        if j == 0 {
            return;
        }
        let mut k = j as u64;
        while k < below {
            let c: u64 = binomial(k, j).try_into().unwrap();
            if c > rest {
                break;
            }
            acc.push((k, j));
            go(rest - c, j - 1, k, acc, out);
            acc.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    go(a, d, u64::MAX, &mut Vec::new(), &mut out);
    out
}

#[test]
fn macaulay_representation_is_unique_by_brute_force() {
    for d in 1..=4 {
        for a in 0..=200u64 {
            let found = all_decompositions(a, d);
            assert_eq!(found.len(), 1, "a = {a}, d = {d}: {found:?}");
            let rep = macaulay_rep(&BigInt::from(a), d);
            let terms: Vec<(u64, u32)> = rep
                .terms()
                .iter()
                .map(|(k, j)| (u64::try_from(k).unwrap(), *j))
                .collect();
            assert_eq!(terms, found[0]);
        }
    }
}

#[test]
fn reconstruction_on_full_range() {
    for d in 1..=6 {
        for a in 0..=2000u64 {
            let rep = macaulay_rep(&BigInt::from(a), d);
            assert!(rep.is_valid(), "a = {a}, d = {d}");
            assert_eq!(rep.value(), BigInt::from(a));
        }
    }
}

#[test]
fn transform_values_from_definitions() {
    let t = |a: u64, d| macaulay_transform(&BigInt::from(a), d);
    let g = |a: u64, d| green_transform(&BigInt::from(a), d);
    assert_eq!(t(4, 1), BigInt::from(10));
    assert_eq!(t(0, 2), BigInt::from(0));
    assert_eq!(t(5, 2), BigInt::from(7));
    assert_eq!(g(1, 1), BigInt::from(0));
    assert_eq!(g(5, 2), BigInt::from(2));
    assert_eq!(g(6, 2), BigInt::from(3));
    // 4 = C(4, 1), so 4_<1> = C(3, 1)
    assert_eq!(g(4, 1), BigInt::from(3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn superadditivity(a in 1u64..=500, b in 1u64..=500, d in 1u32..=5) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let s = &a + &b;
        prop_assert!(green_transform(&a, d) + green_transform(&b, d) <= green_transform(&s, d));
        prop_assert!(macaulay_transform(&a, d) + macaulay_transform(&b, d) <= macaulay_transform(&s, d));
    }

    #[test]
    fn transforms_decrease_with_index(a in 1u64..=500, d in 1u32..=5) {
        let a = BigInt::from(a);
        prop_assert!(green_transform(&a, d + 1) <= green_transform(&a, d));
        prop_assert!(macaulay_transform(&a, d + 1) <= macaulay_transform(&a, d));
    }

    #[test]
    fn transforms_are_monotone(a in 0u64..=500, b in 0u64..=500, d in 1u32..=5) {
        let (lo, hi) = (BigInt::from(a.min(b)), BigInt::from(a.max(b)));
        prop_assert!(macaulay_transform(&lo, d) <= macaulay_transform(&hi, d));
        prop_assert!(green_transform(&lo, d) <= green_transform(&hi, d));
    }

    #[test]
    fn huge_inputs_reconstruct(a in any::<u128>(), d in 1u32..=12) {
        let a = BigInt::from(a);
        let rep = macaulay_rep(&a, d);
        prop_assert!(rep.is_valid());
        prop_assert_eq!(rep.value(), a);
    }
}
