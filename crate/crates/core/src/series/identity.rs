use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{u_series, XEngine};
use crate::error::{Error, Result};

/// A point `(x_1, ..., x_m)` with exact rational coordinates.
pub type SamplePoint = Vec<BigRational>;

/// Checks the change of variables linking the two series engines,
///
/// ```text
/// F-bar(x; t) = F~(v_1/v_2, ..., v_m/v_{m+1}; t),  v_{m+1} = 1,  v_j = 1 + x_j + ... + x_m,
/// ```
///
/// coefficient by coefficient through `t^terms`, at each sample point with
/// exact rational arithmetic. The `x`-series is computed with weight bound
/// `2 * terms + 1`, which keeps every monomial of orders `<= terms` intact.
///
/// Sample points need nonzero coordinates (consecutive `v_j` distinct) and
/// nonzero `v_j`.
pub fn v_identity_check(m: usize, terms: usize, points: &[SamplePoint]) -> Result<bool> {
    let mut ratios = Vec::with_capacity(points.len());
    for x in points {
        if x.len() != m {
            return Err(Error::InvalidSamplePoint(format!(
                "expected {m} coordinates, got {}",
                x.len()
            )));
        }
        if x.iter().any(Zero::is_zero) {
            return Err(Error::InvalidSamplePoint(
                "coordinates must be nonzero".into(),
            ));
        }
        // v_j for j = 1..=m+1
        let mut v = vec![BigRational::from_integer(BigInt::from(1)); m + 1];
        for j in (0..m).rev() {
            v[j] = &v[j + 1] + &x[j];
        }
        if v.iter().any(Zero::is_zero) {
            return Err(Error::InvalidSamplePoint("some v_j vanishes".into()));
        }
        let u: Vec<BigRational> = (0..m).map(|j| &v[j] / &v[j + 1]).collect();
        ratios.push(u);
    }

    let u_side = u_series(m, terms)?;
    let x_side = XEngine::with_weight_bound(m, terms, 2 * terms + 1).run()?;
    for (x, u) in points.iter().zip(&ratios) {
        for n in 0..=terms {
            if u_side.order(n).eval(u)? != x_side.order(n).eval(x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
