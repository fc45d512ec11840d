use num_bigint::BigUint;

use super::{geometric_inverse, to_counts, TruncatedSeries};
use crate::error::{Error, Result};
use crate::poly::{total, Monomial, Poly};

/// Fixed-point iteration of the kernel equation in the `x` variables:
///
/// ```text
/// F = s + s t h F - s t ( s/(s - x_1) F(0, x_2, ..., x_m)/x_1
///                         + sum_{j=2..m} F(x_1, ..., x_{j-1} + x_j, 0, ..., x_m)/x_j )
/// ```
///
/// where `s = 1 + x_1 + ... + x_m` and `h = 1 + 1/x_1 + ... + 1/x_m`. The factor
/// `s/(s - x_1)` is applied as `1 + x_1 / (1 + x_2 + ... + x_m)`.
///
/// Every operator on the right-hand side maps a monomial of weight
/// `w = (total x-degree) + (t-order)` to monomials of weight at least `w`, so
/// discarding everything of weight above `weight_bound` leaves the kept
/// monomials exact. With `weight_bound >= N` the constant terms through `t^N`
/// are exact.
#[derive(Clone, Debug)]
pub struct XEngine {
    m: usize,
    terms: usize,
    weight_bound: usize,
    /// `1 / (1 + x_2 + ... + x_m)` through degree `weight_bound`.
    inverse_tail: Poly,
    s: Poly,
}

impl XEngine {
    /// Engine for `m` variables through `t^terms`, truncating at weight `terms`.
    pub fn new(m: usize, terms: usize) -> Self {
        XEngine::with_weight_bound(m, terms, terms)
    }

    pub fn with_weight_bound(m: usize, terms: usize, weight_bound: usize) -> Self {
        assert!(m >= 1, "m must be positive");
        XEngine {
            m,
            terms,
            weight_bound,
            inverse_tail: geometric_inverse(m, weight_bound),
            s: Poly::linear_sum(m, 0..m, true),
        }
    }

    pub fn weight_bound(&self) -> usize {
        self.weight_bound
    }

    /// The starting point `F = s`, truncated.
    pub fn initial(&self) -> TruncatedSeries {
        let mut orders = vec![Poly::zero(self.m); self.terms + 1];
        orders[0] = self.s.clone();
        let mut out = TruncatedSeries {
            nvars: self.m,
            orders,
            laurent_allowed: false,
        };
        out.truncate_weight(self.weight_bound);
        out
    }

    fn cap(&self, order: usize) -> i32 {
        self.weight_bound as i32 - order as i32
    }

    /// One application of the right-hand side to a committed state.
    pub fn apply(&self, state: &TruncatedSeries) -> Result<TruncatedSeries> {
        assert_eq!(state.nvars, self.m);
        let mut orders = Vec::with_capacity(self.terms + 1);
        let mut first = self.s.clone();
        first.retain(|e| weight(e) <= self.cap(0));
        orders.push(first);
        for k in 1..=self.terms {
            let inner = self.bracket(state.order(k - 1), self.cap(k))?;
            let cap = self.cap(k);
            orders.push(self.s.mul_filtered(&inner, |e| weight(e) <= cap));
        }
        let out = TruncatedSeries {
            nvars: self.m,
            orders,
            laurent_allowed: false,
        };
        out.check_exponents()?;
        Ok(out)
    }

    /// `h P - P(0, x_2, ...)/x_1 - P(0, x_2, ...)/(1 + x_2 + ... + x_m)
    ///  - sum_j P(..., x_{j-1} + x_j, 0, ...)/x_j`, restricted to total degree `<= cap`.
    /// Individual terms may carry `x_j^-1`; the sum must be a polynomial.
    fn bracket(&self, p: &Poly, cap: i32) -> Result<Poly> {
        let m = self.m;
        let keep = |e: &[i16]| weight(e) <= cap;
        let mut acc = Poly::zero(m);
        let mut laurent_terms = Vec::with_capacity(2 * m + 2);

        // h P
        laurent_terms.push(p.clone());
        for j in 0..m {
            laurent_terms.push(p.shifted_var(j, -1));
        }
        // s/(s - x_1) P(0, ...)/x_1 = P0/x_1 + P0/(1 + x_2 + ... + x_m)
        let p0 = p.at_zero(0)?;
        laurent_terms.push(-&p0.shifted_var(0, -1));
        laurent_terms.push(-&self.inverse_tail.mul_filtered(&p0, keep));
        for j in 2..=m {
            let sub = p.substitute_sum(j - 2, j - 1)?;
            laurent_terms.push(-&sub.shifted_var(j - 1, -1));
        }

        for term in &laurent_terms {
            if let Some(lo) = term.min_exponents() {
                if lo.iter().any(|&e| e < -1) {
                    return Err(Error::Inconsistency(
                        "intermediate term below the x^-1 floor".into(),
                    ));
                }
            }
            acc += term;
        }
        acc.retain(keep);
        if !acc.is_polynomial() {
            let lo = acc.min_exponents().unwrap_or_default();
            return Err(Error::Inconsistency(format!(
                "negative exponents survive on the right-hand side: {lo:?}"
            )));
        }
        Ok(acc)
    }

    /// Runs `terms + 1` applications from the initial state. With debug
    /// assertions on, one extra application checks that the state is a fixed point.
    pub fn run(&self) -> Result<TruncatedSeries> {
        let mut state = self.initial();
        for _ in 0..=self.terms {
            state = self.apply(&state)?;
        }
        if cfg!(debug_assertions) {
            let again = self.apply(&state)?;
            if again != state {
                return Err(Error::Inconsistency("iteration did not stabilize".into()));
            }
        }
        state.check_nonnegative()?;
        Ok(state)
    }
}

fn weight(e: &[i16]) -> i32 {
    total(&Monomial::from_slice(e))
}

/// Counts of partitions of sizes `0..=terms` with maximal nesting number at most
/// `m`: the constant terms of the iterated `x`-series.
pub fn x_engine(m: usize, terms: usize) -> Result<Vec<BigUint>> {
    x_engine_with_bound(m, terms, terms)
}

/// [`x_engine`] with an explicit weight bound (must be at least `terms` for exact output).
pub fn x_engine_with_bound(m: usize, terms: usize, weight_bound: usize) -> Result<Vec<BigUint>> {
    let state = XEngine::with_weight_bound(m, terms, weight_bound).run()?;
    to_counts(state.constant_terms())
}
