//! Exact binomial coefficients and the closed-form counts.

/// `C(n, k)`, or `None` on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) because acc = C(n, i)
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of maximal rigid orbit sets for period `m`: `2 · C(2m − 1, m − 1)`.
pub fn equivariant_count(m: u64) -> Option<u128> {
    if m == 0 {
        return None;
    }
    binomial(2 * m - 1, m - 1)?.checked_mul(2)
}

/// Number of maximal rigid representations of type α with `n` grid points
/// per period: `2^(n+1) · C(4n − 1, 2n − 1)`.
pub fn alpha_count(n: u64) -> Option<u128> {
    if n == 0 {
        return None;
    }
    let pow = 1u128.checked_shl(u32::try_from(n + 1).ok()?)?;
    if n + 1 >= 128 {
        return None;
    }
    binomial(4 * n - 1, 2 * n - 1)?.checked_mul(pow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut t: Vec<Vec<u128>> = vec![vec![1]];
        for n in 1..rows {
            let prev = &t[n - 1];
            let mut row = vec![1u128; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(60);
        for (n, row) in t.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), Some(v));
            }
            assert_eq!(binomial(n as u64, n as u64 + 1), Some(0));
        }
    }

    #[test]
    fn closed_forms() {
        let eq: Vec<u128> = (1..=6).map(|m| equivariant_count(m).unwrap()).collect();
        assert_eq!(eq, vec![2, 6, 20, 70, 252, 924]);
        assert_eq!(alpha_count(1), Some(12));
        assert_eq!(alpha_count(2), Some(280));
        assert_eq!(alpha_count(3), Some(7392));
        assert_eq!(equivariant_count(0), None);
        assert_eq!(binomial(200, 100), None);
    }
}
