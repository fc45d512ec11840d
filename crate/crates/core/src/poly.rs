//! Sparse multivariate Laurent polynomials with exact integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::numbers::binomial;

/// Exponent vector of a monomial. Negative entries are allowed.
pub type Monomial = SmallVec<[i16; 8]>;

/// Sparse Laurent polynomial in `nvars` variables. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: HashMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::from_elem(0, nvars), c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, 1)
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(nvars, &unit(nvars, i, 1), 1)
    }

    pub fn monomial(nvars: usize, exps: &[i16], c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::from_slice(exps), c.into());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted by exponent vector.
    pub fn sorted_terms(&self) -> BTreeMap<Monomial, BigInt> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }

    pub fn coeff(&self, exps: &[i16]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::from_elem(0, self.nvars))
    }

    pub fn add_term(&mut self, exps: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.nvars);
        match self.terms.entry(exps) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn add_term_ref(&mut self, exps: &[i16], c: &BigInt) {
        if let Some(slot) = self.terms.get_mut(exps) {
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(exps);
            }
        } else if !c.is_zero() {
            self.terms.insert(Monomial::from_slice(exps), c.clone());
        }
    }

    /// Smallest exponent of each variable, or `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let mut lo = it.next()?.clone();
        for e in it {
            for (l, &x) in lo.iter_mut().zip(e.iter()) {
                *l = (*l).min(x);
            }
        }
        Some(lo)
    }

    /// Largest total degree over all terms.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(total).max()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shifted(&self, shift: &[i16]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `x_i^k` (0-based `i`).
    pub fn shifted_var(&self, i: usize, k: i16) -> Poly {
        self.shifted(&unit(self.nvars, i, k))
    }

    /// Product keeping only monomials accepted by `keep`.
    pub fn mul_filtered(&self, other: &Poly, keep: impl Fn(&[i16]) -> bool) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        let mut buf = Monomial::from_elem(0, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for k in 0..self.nvars {
                    buf[k] = ea[k] + eb[k];
                }
                if keep(&buf) {
                    out.add_term_ref(&buf, &(ca * cb));
                }
            }
        }
        out
    }

    /// Keeps only monomials accepted by `keep`.
    pub fn retain(&mut self, keep: impl Fn(&[i16]) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }

    /// Constant term of `self * other`, without forming the product.
    pub fn constant_term_of_product(&self, other: &Poly) -> BigInt {
        let mut neg = Monomial::from_elem(0, self.nvars);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            for k in 0..self.nvars {
                neg[k] = -e[k];
            }
            if let Some(d) = other.terms.get(&neg) {
                acc += c * d;
            }
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes the value 0 for variable `i`. Fails if a negative power of it occurs.
    pub fn at_zero(&self, i: usize) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            match e[i] {
                0 => out.add_term_ref(e, c),
                x if x < 0 => {
                    return Err(Error::Inconsistency(format!(
                        "cannot set variable {i} to zero in a term with exponent {x}"
                    )))
                }
                _ => {}
            }
        }
        Ok(out)
    }

    /// Substitutes the value 1 for variable `i`.
    pub fn at_one(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[i] = 0;
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `x_i <- x_i * x_j` and `x_j <- 1`.
    pub fn merge_into(&self, i: usize, j: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[j] = e[i];
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `x_i <- x_i + x_j` and `x_j <- 0` (0-based indices). Total
    /// degree of each monomial is preserved. Requires no negative power of
    /// either variable.
    pub fn substitute_sum(&self, i: usize, j: usize) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] < 0 || e[j] < 0 {
                return Err(Error::Inconsistency(format!(
                    "sum substitution on a term with negative exponent: {e:?}"
                )));
            }
            if e[j] > 0 {
                continue;
            }
            let a = e[i];
            for k in 0..=a {
                let mut f = e.clone();
                f[i] = a - k;
                f[j] = k;
                out.add_term(f, c * binomial(a as i64, k as i64));
            }
        }
        Ok(out)
    }

    /// Exact quotient by `(x_i - 1)`. A nonzero remainder is an error.
    pub fn div_by_var_minus_one(&self, i: usize) -> Result<Poly> {
        // Group by the exponents of the other variables; divide each univariate slice.
        let mut slices: HashMap<Monomial, BTreeMap<i16, BigInt>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key[i] = 0;
            slices.entry(key).or_default().insert(e[i], c.clone());
        }
        let mut out = Poly::zero(self.nvars);
        for (key, slice) in slices {
            let lo = *slice.keys().next().unwrap();
            let hi = *slice.keys().next_back().unwrap();
            // synthetic division from the top: q_{d-1} = c_d, q_{k-1} = c_k + q_k
            let mut carry = BigInt::zero();
            for d in (lo + 1..=hi).rev() {
                carry += slice.get(&d).cloned().unwrap_or_default();
                let mut f = key.clone();
                f[i] = d - 1;
                out.add_term(f, carry.clone());
            }
            let rem = carry + slice.get(&lo).cloned().unwrap_or_default();
            if !rem.is_zero() {
                return Err(Error::Inconsistency(format!(
                    "division by (x{} - 1) leaves remainder {rem}",
                    i + 1
                )));
            }
        }
        Ok(out)
    }

    /// Swaps two variables.
    pub fn swapped(&self, i: usize, j: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f.swap(i, j);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluates at a point with nonzero coordinates wherever negative powers occur.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e.iter()) {
                if k < 0 && x.is_zero() {
                    return Err(Error::InvalidSamplePoint(
                        "negative power of a zero coordinate".into(),
                    ));
                }
                term *= pow_rational(x, k as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

fn pow_rational(x: &BigRational, k: i32) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

pub(crate) fn total(e: &Monomial) -> i32 {
    e.iter().map(|&x| x as i32).sum()
}

pub(crate) fn unit(nvars: usize, i: usize, k: i16) -> Monomial {
    let mut e = Monomial::from_elem(0, nvars);
    e[i] = k;
    e
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms in exponent order, e.g. `3*x1^2*x2^-1 + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sorted = self.sorted_terms();
        for (n, (e, c)) in sorted.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term_ref(e, c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term_ref(e, &-c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_filtered(rhs, |_| true)
    }
}

impl Mul<&BigInt> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &BigInt) -> Poly {
        if rhs.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * rhs))
                .collect(),
        }
    }
}

impl Poly {
    /// `1 + x_1 + ... + x_n` restricted to the variables in `range`.
    pub fn linear_sum(nvars: usize, range: std::ops::Range<usize>, constant: bool) -> Poly {
        let mut p = if constant {
            Poly::one(nvars)
        } else {
            Poly::zero(nvars)
        };
        for i in range {
            p += &Poly::var(nvars, i);
        }
        p
    }

    /// `1 + 1/x_1 + ... + 1/x_n` restricted to the variables in `range`.
    pub fn reciprocal_sum(nvars: usize, range: std::ops::Range<usize>, constant: bool) -> Poly {
        let mut p = if constant {
            Poly::one(nvars)
        } else {
            Poly::zero(nvars)
        };
        for i in range {
            p.add_term(unit(nvars, i, -1), BigInt::one());
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn arithmetic_cancels() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &a - &x(2, 1);
        assert_eq!(b, x(2, 0));
        assert!((&b - &b).is_zero());
        let sq = &a * &a;
        assert_eq!(sq.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn exact_division() {
        // (u^3 - 1) / (u - 1) = u^2 + u + 1
        let p = &Poly::monomial(1, &[3], 1) - &Poly::one(1);
        let q = p.div_by_var_minus_one(0).unwrap();
        assert_eq!(
            q,
            Poly::from_terms(
                1,
                (0..3).map(|k| (Monomial::from_slice(&[k]), BigInt::one()))
            )
        );
        assert!(Poly::monomial(1, &[2], 1).div_by_var_minus_one(0).is_err());
        // divisibility slice-by-slice with a second variable
        let r = &(&Poly::monomial(2, &[2, 1], 1) - &Poly::monomial(2, &[0, 1], 1)) * &x(2, 1);
        let q = r.div_by_var_minus_one(0).unwrap();
        assert_eq!(q.coeff(&[1, 2]), BigInt::one());
        assert_eq!(q.coeff(&[0, 2]), BigInt::one());
    }

    #[test]
    fn sum_substitution() {
        let p = Poly::monomial(2, &[1, 1], 1);
        assert!(p.substitute_sum(0, 1).unwrap().is_zero());
        let q = Poly::monomial(2, &[2, 0], 1).substitute_sum(0, 1).unwrap();
        assert_eq!(q, (&x(2, 0) + &x(2, 1)).pow(2));
    }

    #[test]
    fn evaluation() {
        let p = &Poly::monomial(2, &[-1, 2], 3) + &Poly::one(2);
        let v = p
            .eval(&[
                BigRational::from_integer(2.into()),
                BigRational::from_integer(3.into()),
            ])
            .unwrap();
        assert_eq!(v, BigRational::new(29.into(), 2.into()));
    }

    #[test]
    fn product_constant_term() {
        let a = Poly::reciprocal_sum(2, 0..2, true);
        let b = Poly::linear_sum(2, 0..2, true).pow(2);
        assert_eq!(a.constant_term_of_product(&b), (&a * &b).constant_term());
        assert_eq!(a.constant_term_of_product(&b), BigInt::from(5));
    }
}
