//! Small exact-integer helpers shared across modules. No floating point
//! anywhere: Ramsey counts are exact or wrong.

/// Emits every permutation of `0..n` (as images) to `visit`.
pub(crate) fn permutations(n: u32, visit: &mut impl FnMut(&[u32])) {
    let mut items: Vec<u32> = (0..n).collect();
    fn rec(items: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, visit);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, visit);
}

/// Exact binomial coefficient; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Binomial under the saturating convention `C(a, b) = 0` for `a < b`,
/// including negative `a`.
pub fn binomial_sat(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || a < b {
        0
    } else {
        binomial(a as u64, b as u64)
    }
}

/// Difference under the saturating convention `a - b = 0` for `a < b`.
pub fn sub_sat(a: i64, b: i64) -> u64 {
    if a < b {
        0
    } else {
        (a - b) as u64
    }
}

/// Exact factorial as `u128` (enough for `k <= 33`).
pub fn factorial_u128(n: u64) -> u128 {
    (1..=n as u128).product()
}
