//! Closed-form counts in arbitrary precision.

use num_bigint::BigUint;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// `2 · C(2m − 1, m − 1)`.
pub fn equivariant_count(m: u64) -> BigUint {
    assert!(m > 0);
    binomial(2 * m - 1, m - 1) * 2u32
}

/// `2^(n+1) · C(4n − 1, 2n − 1)`.
pub fn alpha_count(n: u64) -> BigUint {
    assert!(n > 0);
    binomial(4 * n - 1, 2 * n - 1) << (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_fixed_width() {
        for m in 1..=30u64 {
            let small = qrigid_core::binom::equivariant_count(m).unwrap();
            assert_eq!(equivariant_count(m), BigUint::from(small));
            if let Some(small) = qrigid_core::binom::alpha_count(m) {
                assert_eq!(alpha_count(m), BigUint::from(small));
            }
        }
    }

    #[test]
    fn beyond_u128() {
        assert!(qrigid_core::binom::alpha_count(40).is_none());
        let big = alpha_count(40);
        assert_eq!(big.clone() >> 41u32, binomial(159, 79));
        assert!(big.bits() > 128);
    }
}
