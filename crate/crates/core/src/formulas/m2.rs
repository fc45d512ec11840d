//! Coefficient extraction for partitions avoiding 3-nestings.
//!
//! With `F_n(k)` the number of such partitions of `[n]` whose label has
//! `a_2 = k`, the count `F_n` is the constant term of three pieces:
//!
//! ```text
//! first  = CT  h^n s^{n+1} (1 - x_1/x_2)
//! second = sum_{n* < n} CT  h^K s^{K+1} ( B(x_2)/x_1 - x_1 B(x_1)/x_2^2 )
//! third  = sum_{n* < n} CT  h^K s^{K+1} ( B(x_2)/(1+x_2) - (x_1/x_2) B(x_1)/(1+x_1) )
//! F_n    = first - second - third
//! ```
//!
//! where `s = 1 + x_1 + x_2`, `h = 1 + 1/x_1 + 1/x_2`, `K = n - n* - 1` and
//! `B(y) = sum_k F_{n*}(k) (1 + y)^k`. The multinomial closed forms below are
//! checked against [`ct_reference`], which expands these products directly.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gtree;
use crate::numbers::{binomial, multinomial};
use crate::poly::Poly;

/// Counts `F_n` and, by last label entry, `F_n(k)` for `n = 0..=depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub m: usize,
    pub totals: Vec<BigUint>,
    /// `by_last[n][k] = F_n(k)`, the number of partitions of `[n]` with `a_m = k`.
    pub by_last: Vec<BTreeMap<u16, BigUint>>,
}

impl CoefficientTable {
    /// Builds the table for sizes `0..=depth` from the generating tree.
    pub fn from_gtree(m: usize, depth: usize) -> Self {
        let mut totals = Vec::with_capacity(depth + 1);
        let mut by_last = Vec::with_capacity(depth + 1);
        for level in gtree::levels(m).take(depth + 1) {
            totals.push(level.total());
            by_last.push(level.marginal(m).expect("m is a valid index"));
        }
        CoefficientTable { m, totals, by_last }
    }

    /// Largest `n` covered.
    pub fn depth(&self) -> usize {
        self.totals.len() - 1
    }

    pub fn f(&self, n: usize, k: u16) -> BigInt {
        self.by_last[n]
            .get(&k)
            .cloned()
            .map(BigInt::from)
            .unwrap_or_default()
    }

    fn require(&self, need: usize) -> Result<()> {
        if self.by_last.len() < need {
            Err(Error::InsufficientTable {
                have: self.by_last.len(),
                need,
            })
        } else {
            Ok(())
        }
    }

    /// `F_n = sum_k F_n(k)` and `F_{n+1} = sum_k k F_n(k)` wherever both sides are in the table.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for (n, row) in self.by_last.iter().enumerate() {
            let sum: BigUint = row.values().sum();
            if sum != self.totals[n] {
                return Err(format!("F_{n} = {} but row sums to {sum}", self.totals[n]));
            }
            if let Some(next) = self.totals.get(n + 1) {
                let weighted: BigUint = row.iter().map(|(&k, v)| v * BigUint::from(k)).sum();
                if &weighted != next {
                    return Err(format!(
                        "F_{} = {next} but sum k F_{n}(k) = {weighted}",
                        n + 1
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Which reading of the assembled formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct M2Reading {
    /// Use the first term with one multinomial factor instead of the exact
    /// constant term (two multinomial factors).
    pub single_multinomial_first_term: bool,
    /// Use the inner condition `j_1 + j_3 = n - l_2 - 2` instead of
    /// `j_1 + j_3 = n - n* - 2 - l_2` in the second term.
    pub unshifted_inner_index: bool,
}

impl M2Reading {
    /// Each term as derived by constant-term extraction.
    pub const RECONCILED: M2Reading = M2Reading {
        single_multinomial_first_term: false,
        unshifted_inner_index: false,
    };
    /// Both variants at once.
    pub const BOTH_VARIANTS: M2Reading = M2Reading {
        single_multinomial_first_term: true,
        unshifted_inner_index: true,
    };

    pub fn all() -> [M2Reading; 4] {
        [
            M2Reading::RECONCILED,
            M2Reading {
                single_multinomial_first_term: false,
                unshifted_inner_index: true,
            },
            M2Reading {
                single_multinomial_first_term: true,
                unshifted_inner_index: false,
            },
            M2Reading::BOTH_VARIANTS,
        ]
    }

    pub fn describe(&self) -> &'static str {
        match (
            self.single_multinomial_first_term,
            self.unshifted_inner_index,
        ) {
            (false, false) => "reconciled",
            (false, true) => "unshifted inner index",
            (true, false) => "single-multinomial first term",
            (true, true) => "both variants",
        }
    }
}

/// Compositions `(l_1, l_2, l_3)` of `n` into three non-negative parts.
fn triples(n: i64) -> impl Iterator<Item = (i64, i64, i64)> {
    (0..=n).flat_map(move |a| (0..=n - a).map(move |b| (a, b, n - a - b)))
}

fn into_integer(r: BigRational, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Inconsistency(format!(
            "{what} is not an integer: {r}"
        )))
    }
}

/// `sum_{l_1+l_2+l_3=n} C(n; l) C(n+1; l_1, l_2, l_3+1) (1 - l_1/(l_2+1))`, the
/// constant term of `h^n s^{n+1} (1 - x_1/x_2)`.
pub fn m2_first_term(n: usize) -> Result<BigInt> {
    first_term(n, false)
}

fn first_term(n: usize, single_multinomial: bool) -> Result<BigInt> {
    let n = n as i64;
    let mut acc = BigRational::zero();
    for (l1, l2, l3) in triples(n) {
        let mut c = multinomial(n, &[l1, l2, l3]);
        if !single_multinomial {
            c *= multinomial(n + 1, &[l1, l2, l3 + 1]);
        }
        let factor = BigRational::new((l2 + 1 - l1).into(), (l2 + 1).into());
        acc += BigRational::from_integer(c) * factor;
    }
    into_integer(acc, "first term")
}

/// `sum_{n* < n} sum_k F_{n*}(k) sum_i c_i C(k + shift_i, lower_i)`, where
/// `inner(K)` lists the triples `(c_i, shift_i, lower_i)` for `K = n - n* - 1`.
fn fold_table(
    n: usize,
    table: &CoefficientTable,
    inner: impl Fn(i64) -> Vec<(BigInt, i64, i64)>,
) -> Result<BigInt> {
    table.require(n)?;
    let mut acc = BigInt::zero();
    for n_star in 0..n {
        let big_k = (n - n_star - 1) as i64;
        let pieces = inner(big_k);
        for (&k, count) in &table.by_last[n_star] {
            let count = BigInt::from(count.clone());
            let k = k as i64;
            let mut local = BigInt::zero();
            for (c, shift, lower) in &pieces {
                local += c * binomial(k + shift, *lower);
            }
            acc += count * local;
        }
    }
    Ok(acc)
}

/// Closed form of the second piece:
///
/// ```text
/// sum_{n*} sum_k F_{n*}(k) sum_{|l| = K} C(K; l) (
///     sum_{j_2 + j_3 = K - l_1}      C(K+1; l_1+1, j_2, j_3) C(k, l_2 - j_2)
///   - sum_{j_1 + j_3 = K - 1 - l_2}  C(K+1; j_1, l_2+2, j_3) C(k, l_1 - j_1 - 1) )
/// ```
///
/// With `unshifted_inner_index`, the second inner sum runs over `j_1 + j_3 = n - l_2 - 2`.
pub fn m2_second_term(n: usize, table: &CoefficientTable, reading: M2Reading) -> Result<BigInt> {
    let n_i = n as i64;
    fold_table(n, table, |big_k| {
        let mut pieces = Vec::new();
        for (l1, l2, l3) in triples(big_k) {
            let outer = multinomial(big_k, &[l1, l2, l3]);
            for j2 in 0..=big_k - l1 {
                let j3 = big_k - l1 - j2;
                let c = &outer * multinomial(big_k + 1, &[l1 + 1, j2, j3]);
                pieces.push((c, 0, l2 - j2));
            }
            let target = if reading.unshifted_inner_index {
                n_i - l2 - 2
            } else {
                big_k - 1 - l2
            };
            for j1 in 0..=target.max(-1) {
                let j3 = target - j1;
                let c = &outer * multinomial(big_k + 1, &[j1, l2 + 2, j3]);
                pieces.push((-c, 0, l1 - j1 - 1));
            }
        }
        pieces.retain(|(c, _, _)| !c.is_zero());
        pieces
    })
}

/// Closed form of the third piece:
///
/// ```text
/// sum_{n*} sum_k F_{n*}(k) sum_{|l| = K} C(K; l) (
///     sum_{j_2 + j_3 = K + 1 - l_1}  C(K+1; l_1, j_2, j_3) C(k-1, l_2 - j_2)
///   - sum_{j_1 + j_3 = K - l_2}      C(K+1; j_1, l_2+1, j_3) C(k-1, l_1 - j_1 - 1) )
/// ```
pub fn m2_third_term(n: usize, table: &CoefficientTable) -> Result<BigInt> {
    fold_table(n, table, |big_k| {
        let mut pieces = Vec::new();
        for (l1, l2, l3) in triples(big_k) {
            let outer = multinomial(big_k, &[l1, l2, l3]);
            for j2 in 0..=big_k + 1 - l1 {
                let j3 = big_k + 1 - l1 - j2;
                let c = &outer * multinomial(big_k + 1, &[l1, j2, j3]);
                pieces.push((c, -1, l2 - j2));
            }
            for j1 in 0..=big_k - l2 {
                let j3 = big_k - l2 - j1;
                let c = &outer * multinomial(big_k + 1, &[j1, l2 + 1, j3]);
                pieces.push((-c, -1, l1 - j1 - 1));
            }
        }
        pieces.retain(|(c, _, _)| !c.is_zero());
        pieces
    })
}

/// `F_n` assembled from the three closed forms under the given reading. Needs
/// `F_{n*}(k)` for every `n* < n`.
pub fn m2_full_expression(
    n: usize,
    table: &CoefficientTable,
    reading: M2Reading,
) -> Result<BigInt> {
    let first = first_term(n, reading.single_multinomial_first_term)?;
    Ok(first - m2_second_term(n, table, reading)? - m2_third_term(n, table)?)
}

/// One of the three pieces of the constant-term identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    First,
    Second,
    Third,
}

impl std::str::FromStr for Term {
    type Err = Error;
    fn from_str(s: &str) -> Result<Term> {
        match s {
            "first" => Ok(Term::First),
            "second" => Ok(Term::Second),
            "third" => Ok(Term::Third),
            other => Err(Error::InvalidInput(format!("unknown term {other:?}"))),
        }
    }
}

/// Coefficient of `x_1^0 x_2^0 t^n` in one piece, by direct Laurent expansion.
///
/// The prefactor `s / (1 - t h s)` contributes `h^K s^{K+1}` at `t^K`; for the
/// second and third pieces the extra `t` and the `t^{n*}` part of the table
/// fix `K = n - n* - 1`. The constant term of each product is read off as
/// `sum_e A_e B_{-e}` without forming it. `h^K s^{K+1}` has exponents in
/// `[-K, K+1]` per variable and the bracketed factors have degree at most
/// `n* + 1`, so every contributing pair lies inside those windows.
pub fn ct_reference(term: Term, n: usize, table: Option<&CoefficientTable>) -> Result<BigInt> {
    let nv = 2;
    let s = Poly::linear_sum(nv, 0..2, true);
    let h = Poly::reciprocal_sum(nv, 0..2, true);
    let prefactor = |k: usize| &h.pow(k as u32) * &s.pow(k as u32 + 1);
    if term == Term::First {
        let bracket = &Poly::one(nv) - &Poly::monomial(nv, &[1, -1], 1);
        return Ok(prefactor(n).constant_term_of_product(&bracket));
    }
    let table = table.ok_or(Error::InsufficientTable { have: 0, need: n })?;
    table.require(n)?;
    let mut acc = BigInt::zero();
    for n_star in 0..n {
        let k_pow = n - n_star - 1;
        // B(y) and B(y)/(1+y) in each variable
        let mut b = [Poly::zero(nv), Poly::zero(nv)];
        let mut b_over = [Poly::zero(nv), Poly::zero(nv)];
        for (&k, count) in &table.by_last[n_star] {
            let count = BigInt::from(count.clone());
            for v in 0..2 {
                let one_plus = &Poly::one(nv) + &Poly::var(nv, v);
                b[v] += &(&one_plus.pow(k as u32) * &count);
                b_over[v] += &(&one_plus.pow(k as u32 - 1) * &count);
            }
        }
        let bracket = match term {
            Term::Second => &b[1].shifted(&[-1, 0]) - &b[0].shifted(&[1, -2]),
            Term::Third => &b_over[1] - &b_over[0].shifted(&[1, -1]),
            Term::First => unreachable!(),
        };
        acc += prefactor(k_pow).constant_term_of_product(&bracket);
    }
    Ok(acc)
}
