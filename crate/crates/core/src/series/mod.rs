//! Exact truncated-series engines for the two functional equations satisfied by
//! the label generating function: the `u`-equation, solved order by order with
//! exact divided differences, and the kernel form in the `x` variables, iterated
//! as a fixed point with a degree-graded truncation.

mod identity;
mod u_engine;
mod x_engine;

pub use identity::{v_identity_check, SamplePoint};
pub use u_engine::{u_engine, u_series};
pub use x_engine::{x_engine, x_engine_with_bound, XEngine};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::{total, Monomial, Poly};

/// A power series in `t` truncated after order `N`, whose coefficients are
/// Laurent polynomials in `nvars` catalytic variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    nvars: usize,
    orders: Vec<Poly>,
    laurent_allowed: bool,
}

impl TruncatedSeries {
    pub fn zero(nvars: usize, truncation: usize) -> Self {
        TruncatedSeries {
            nvars,
            orders: vec![Poly::zero(nvars); truncation + 1],
            laurent_allowed: false,
        }
    }

    /// Builds a series from its coefficients of `t^0, ..., t^N`. Fails on a
    /// negative exponent unless Laurent terms are allowed, and on any exponent
    /// below -1 either way.
    pub fn from_orders(nvars: usize, orders: Vec<Poly>, laurent_allowed: bool) -> Result<Self> {
        assert!(
            !orders.is_empty(),
            "a truncated series has at least the order-0 coefficient"
        );
        let s = TruncatedSeries {
            nvars,
            orders,
            laurent_allowed,
        };
        s.check_exponents()?;
        Ok(s)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The truncation order `N`.
    pub fn truncation(&self) -> usize {
        self.orders.len() - 1
    }

    pub fn laurent_allowed(&self) -> bool {
        self.laurent_allowed
    }

    /// Coefficient of `t^k`.
    pub fn order(&self, k: usize) -> &Poly {
        &self.orders[k]
    }

    pub fn orders(&self) -> &[Poly] {
        &self.orders
    }

    /// Per-order constant terms in the catalytic variables.
    pub fn constant_terms(&self) -> Vec<BigInt> {
        self.orders.iter().map(Poly::constant_term).collect()
    }

    /// Per-order sums of coefficients, i.e. the series at all variables equal to one.
    pub fn coefficient_sums(&self) -> Vec<BigInt> {
        self.orders.iter().map(Poly::coefficient_sum).collect()
    }

    /// Keeps the monomials with `total x-degree + t-order <= bound`.
    pub fn truncate_weight(&mut self, bound: usize) {
        for (k, p) in self.orders.iter_mut().enumerate() {
            let cap = bound as i32 - k as i32;
            p.retain(|e| total(&Monomial::from_slice(e)) <= cap);
        }
    }

    fn check_exponents(&self) -> Result<()> {
        let floor = if self.laurent_allowed { -1 } else { 0 };
        for (k, p) in self.orders.iter().enumerate() {
            if let Some(lo) = p.min_exponents() {
                if let Some(v) = lo.iter().position(|&e| e < floor) {
                    return Err(Error::Inconsistency(format!(
                        "exponent {} of x{} at t^{k} is below {floor}",
                        lo[v],
                        v + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Fails if any coefficient is negative.
    pub fn check_nonnegative(&self) -> Result<()> {
        for (k, p) in self.orders.iter().enumerate() {
            if p.has_negative_coefficient() {
                return Err(Error::Inconsistency(format!(
                    "negative coefficient at t^{k}"
                )));
            }
        }
        Ok(())
    }

    pub fn map_orders(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<TruncatedSeries> {
        Ok(TruncatedSeries {
            nvars: self.nvars,
            orders: self.orders.iter().map(f).collect::<Result<_>>()?,
            laurent_allowed: self.laurent_allowed,
        })
    }
}

/// Replaces `x_{j-1}` by `x_{j-1} + x_j` and `x_j` by `0` (1-based `j`, `2 <= j <= m`),
/// expanding binomially.
pub fn substitute_pair(series: &TruncatedSeries, j: usize) -> Result<TruncatedSeries> {
    if j < 2 || j > series.nvars {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: series.nvars,
        });
    }
    series.map_orders(|p| p.substitute_sum(j - 2, j - 1))
}

/// Expansion of `1 / (1 + x_2 + ... + x_m)` up to total degree `degree`, in `m` variables.
pub fn geometric_inverse(m: usize, degree: usize) -> Poly {
    let tail = Poly::linear_sum(m, 1..m, false);
    let mut out = Poly::one(m);
    let mut power = Poly::one(m);
    for k in 1..=degree {
        power = &power * &tail;
        if power.is_zero() {
            break;
        }
        if k % 2 == 1 {
            out -= &power;
        } else {
            out += &power;
        }
    }
    out
}

/// The kernel `1 - t*s*h` with `s = 1 + x_1 + ... + x_m` and
/// `h = 1 + 1/x_1 + ... + 1/x_m`, as a series truncated at `t^1`.
pub fn kernel(m: usize) -> TruncatedSeries {
    let sh = &Poly::linear_sum(m, 0..m, true) * &Poly::reciprocal_sum(m, 0..m, true);
    TruncatedSeries {
        nvars: m,
        orders: vec![Poly::one(m), -&sh],
        laurent_allowed: true,
    }
}

/// `1 / (1 - t*s*h)` expanded through `t^order`.
pub fn kernel_inverse(m: usize, order: usize) -> TruncatedSeries {
    let sh = &Poly::linear_sum(m, 0..m, true) * &Poly::reciprocal_sum(m, 0..m, true);
    let mut orders = vec![Poly::one(m)];
    for k in 1..=order {
        let next = &orders[k - 1] * &sh;
        orders.push(next);
    }
    TruncatedSeries {
        nvars: m,
        orders,
        laurent_allowed: true,
    }
}

pub(crate) fn to_counts(values: Vec<BigInt>) -> Result<Vec<BigUint>> {
    values
        .into_iter()
        .enumerate()
        .map(|(n, v)| {
            if v.is_negative() {
                Err(Error::Inconsistency(format!(
                    "negative count {v} at n = {n}"
                )))
            } else {
                Ok(v.magnitude().clone())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn pair_substitution_examples() {
        let s =
            TruncatedSeries::from_orders(2, vec![Poly::monomial(2, &[1, 1], 1)], false).unwrap();
        assert!(substitute_pair(&s, 2).unwrap().order(0).is_zero());
        let s =
            TruncatedSeries::from_orders(2, vec![Poly::monomial(2, &[2, 0], 1)], false).unwrap();
        let expected = (&x(2, 0) + &x(2, 1)).pow(2);
        assert_eq!(substitute_pair(&s, 2).unwrap().order(0), &expected);
        assert!(substitute_pair(&s, 1).is_err());
        assert!(substitute_pair(&s, 3).is_err());
    }

    #[test]
    fn geometric_inverse_examples() {
        let g = geometric_inverse(2, 2);
        let expected = &(&Poly::one(2) - &x(2, 1)) + &x(2, 1).pow(2);
        assert_eq!(g, expected);
        let g = geometric_inverse(3, 1);
        assert_eq!(g, &(&Poly::one(3) - &x(3, 1)) - &x(3, 2));
        assert_eq!(geometric_inverse(1, 5), Poly::one(1));
    }

    #[test]
    fn geometric_inverse_defining_identity() {
        for m in 1..=4 {
            let d = 5;
            let prod = &Poly::linear_sum(m, 1..m, true) * &geometric_inverse(m, d);
            for (e, c) in prod.terms() {
                let deg: i32 = e.iter().map(|&v| v as i32).sum();
                if deg == 0 {
                    assert_eq!(c, &BigInt::from(1));
                } else {
                    assert!(deg > d as i32, "stray term of degree {deg}");
                }
            }
        }
    }

    #[test]
    fn kernel_is_symmetric() {
        for m in 1..=4 {
            let k = kernel(m);
            let inv = kernel_inverse(m, 6);
            for i in 0..m {
                for j in i + 1..m {
                    for p in k.orders().iter().chain(inv.orders()) {
                        assert_eq!(&p.swapped(i, j), p);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_inverse_is_inverse() {
        let m = 2;
        let k = kernel(m);
        let inv = kernel_inverse(m, 4);
        // (1 - tsh) * inv = 1 through t^4
        for n in 0..=4 {
            let mut c = inv.order(n).clone();
            if n >= 1 {
                c += &(k.order(1) * inv.order(n - 1));
            }
            let expected = if n == 0 { Poly::one(m) } else { Poly::zero(m) };
            assert_eq!(c, expected);
        }
    }

    #[test]
    fn series_rejects_bad_exponents() {
        let p = Poly::monomial(1, &[-1], 1);
        assert!(TruncatedSeries::from_orders(1, vec![p.clone()], false).is_err());
        assert!(TruncatedSeries::from_orders(1, vec![p], true).is_ok());
        let q = Poly::monomial(1, &[-2], 1);
        assert!(TruncatedSeries::from_orders(1, vec![q], true).is_err());
    }
}
