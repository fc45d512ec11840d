use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gtree;
use crate::numbers::{binomial, catalan_numbers};
use crate::poly::Poly;

fn half_central(n: i64) -> BigInt {
    binomial(2 * n + 2, n + 1) / 2
}

/// `F_0..=F_N` from `F_n = C(2n+2, n+1)/2 - sum_{j<n} C(2j+2, j+1) F_{n-1-j}`.
pub fn catalan_recurrence(terms: usize) -> Vec<BigInt> {
    let mut f: Vec<BigInt> = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut v = half_central(n as i64);
        for j in 0..n {
            v -= binomial(2 * j as i64 + 2, j as i64 + 1) * &f[n - 1 - j];
        }
        f.push(v);
    }
    f
}

/// Whether `sum_{k<=n} C(2k, k) C_{n-k} = C(2n+2, n+1)/2` for every `n <= terms`,
/// with `C_i` the Catalan numbers.
pub fn catalan_convolution_check(terms: usize) -> bool {
    let c = catalan_numbers(terms);
    (0..=terms).all(|n| {
        let lhs: BigInt = (0..=n)
            .map(|k| binomial(2 * k as i64, k as i64) * &c[n - k])
            .sum();
        lhs == half_central(n as i64)
    })
}

/// Expands both sides of the `m = 1` kernel equation
///
/// ```text
/// F(x; t) = s/(1 - t h s) - t s h F(0; t)/(1 - t h s),   s = 1 + x,  h = 1 + 1/x,
/// ```
///
/// through `t^terms`, with `F(0; t)` the Catalan series and the left side
/// rebuilt from generating-tree label counts as `sum (1 + x)^{a_1} t^n`.
pub fn m1_series_check(terms: usize) -> bool {
    m1_series_check_with(terms, &catalan_numbers(terms)).unwrap_or(false)
}

/// [`m1_series_check`] with a caller-supplied series for `F(0; t)`.
pub fn m1_series_check_with(terms: usize, f0: &[BigInt]) -> Result<bool> {
    if f0.len() <= terms {
        return Err(Error::InsufficientTable {
            have: f0.len(),
            need: terms + 1,
        });
    }
    let s = Poly::linear_sum(1, 0..1, true);
    let h = Poly::reciprocal_sum(1, 0..1, true);
    let sh = &s * &h;
    let mut sh_pow = vec![Poly::one(1)];
    for i in 1..=terms {
        let next = &sh_pow[i - 1] * &sh;
        sh_pow.push(next);
    }
    for (n, level) in gtree::levels(1).take(terms + 1).enumerate() {
        let mut lhs = Poly::zero(1);
        for (label, count) in level.sorted() {
            lhs += &(&s.pow(label.get(1) as u32) * &BigInt::from(count));
        }
        // s^{n+1} h^n - sum_{i=1..n} (s h)^i F_{n-i}
        let mut rhs = &s * &sh_pow[n];
        for i in 1..=n {
            if !f0[n - i].is_zero() {
                rhs -= &(&sh_pow[i] * &f0[n - i]);
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_values() {
        let f = catalan_recurrence(15);
        assert_eq!(f[0], BigInt::from(1));
        assert_eq!(f[5], BigInt::from(42));
        assert_eq!(f[15], BigInt::from(9_694_845));
        assert_eq!(f, catalan_numbers(15));
    }

    #[test]
    fn convolution() {
        assert!(catalan_convolution_check(0));
        assert!(catalan_convolution_check(2));
        assert!(catalan_convolution_check(30));
    }

    #[test]
    fn series_identity() {
        assert!(m1_series_check(0));
        assert!(m1_series_check(8));
        let mut bad = catalan_numbers(8);
        bad[3] += 1;
        assert!(!m1_series_check_with(8, &bad).unwrap());
        assert!(m1_series_check_with(8, &bad[..4]).is_err());
    }
}
