use num_bigint::BigUint;

use super::{to_counts, TruncatedSeries};
use crate::error::Result;
use crate::poly::Poly;

/// The series `F~(u; t) = sum over partitions of u_1^{a_1} ... u_m^{a_m} t^{|p|}`
/// through `t^terms`, built order by order from the `u`-equation:
///
/// ```text
/// P_{n+1} = U P_n + u_1 (P_n - u_1 P_n|_{u_1=1}) / (u_1 - 1)
///         + sum_{j=2..m} u_1...u_j (P_n - P_n|_{u_{j-1} <- u_{j-1} u_j, u_j <- 1}) / (u_j - 1)
/// ```
///
/// with `U = u_1 ... u_m` and `P_0 = U`. Every division must be exact and
/// every coefficient nonnegative; anything else is an internal-consistency error.
pub fn u_series(m: usize, terms: usize) -> Result<TruncatedSeries> {
    assert!(m >= 1, "m must be positive");
    let prefix: Vec<Poly> = (1..=m)
        .map(|j| Poly::monomial(m, &prefix_exponents(m, j), 1))
        .collect();
    let all = &prefix[m - 1];
    let mut orders = vec![all.clone()];
    for _ in 0..terms {
        let p = orders.last().unwrap();
        let mut next = all * p;
        let d1 = (p - &(&prefix[0] * &p.at_one(0))).div_by_var_minus_one(0)?;
        next += &(&prefix[0] * &d1);
        for j in 2..=m {
            let dj = (p - &p.merge_into(j - 2, j - 1)).div_by_var_minus_one(j - 1)?;
            next += &(&prefix[j - 1] * &dj);
        }
        orders.push(next);
    }
    let series = TruncatedSeries::from_orders(m, orders, false)?;
    series.check_nonnegative()?;
    Ok(series)
}

fn prefix_exponents(m: usize, j: usize) -> Vec<i16> {
    (0..m).map(|i| (i < j) as i16).collect()
}

/// Counts of partitions of sizes `0..=terms` with maximal nesting number at most
/// `m`: the `u`-series evaluated at `u_1 = ... = u_m = 1`.
pub fn u_engine(m: usize, terms: usize) -> Result<Vec<BigUint>> {
    to_counts(u_series(m, terms)?.coefficient_sums())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn nums(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn m2_third_order() {
        let s = u_series(2, 3).unwrap();
        let expected = Poly::from_terms(
            2,
            [([4, 4], 1), ([3, 3], 2), ([2, 2], 1), ([2, 3], 1)]
                .into_iter()
                .map(|(e, c)| (e.iter().copied().collect(), BigInt::from(c))),
        );
        assert_eq!(s.order(3), &expected);
        assert_eq!(s.order(1), &Poly::monomial(2, &[2, 2], 1));
    }

    #[test]
    fn counts() {
        assert_eq!(nums(&u_engine(1, 5).unwrap()), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(nums(&u_engine(4, 9).unwrap())[9], 21147);
        assert_eq!(nums(&u_engine(3, 0).unwrap()), vec![1]);
    }

    #[test]
    fn degree_bound_per_variable() {
        let s = u_series(3, 7).unwrap();
        for n in 0..=7 {
            for (e, c) in s.order(n).terms() {
                assert!(e.iter().all(|&d| d >= 1 && d as usize <= n + 1));
                assert!(e.windows(2).all(|w| w[0] <= w[1]));
                assert!(c > &BigInt::from(0));
            }
        }
    }
}
