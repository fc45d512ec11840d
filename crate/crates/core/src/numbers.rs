//! Classical integer sequences and coefficients used by the engines and their checks.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Multinomial coefficient `n! / (k_1! ... k_r!)`.
///
/// Zero whenever some part is negative or the parts do not sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::zero();
    }
    let mut remaining = n;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Bell numbers `B_0..=B_n` computed with the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigUint::one));
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out.truncate(n + 1);
    out
}

/// Catalan numbers `C_0..=C_n` from the closed form `C(2k, k) / (k + 1)`.
pub fn catalan_numbers(n: usize) -> Vec<BigInt> {
    (0..=n as i64)
        .map(|k| binomial(2 * k, k) / BigInt::from(k + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn multinomial_boundaries() {
        assert_eq!(multinomial(3, &[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(3, &[0, 2, 1]), BigInt::from(3));
        assert_eq!(multinomial(3, &[-1, 3, 1]), BigInt::zero());
        assert_eq!(multinomial(3, &[1, 1, 0]), BigInt::zero());
    }

    #[test]
    fn bell_prefix() {
        let b: Vec<u64> = bell_numbers(14)
            .iter()
            .map(|x| x.to_string().parse().unwrap())
            .collect();
        assert_eq!(&b[..8], &[1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(b[13], 27_644_437);
        assert_eq!(b[14], 190_899_322);
    }

    #[test]
    fn catalan_prefix() {
        let c = catalan_numbers(15);
        assert_eq!(c[5], BigInt::from(42));
        assert_eq!(c[15], BigInt::from(9_694_845));
    }
}
