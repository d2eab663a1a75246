use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Leading coefficients of `g(x) = 2n² / ((1 − nx)² (1 − n²x)²)`.
///
/// `terms[k]` is the transmission of the perfect `arity`-ary tree of depth `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTerms {
    pub arity: BigUint,
    pub terms: Vec<BigUint>,
}

/// Cauchy product of two power series, truncated to `len` coefficients.
pub fn convolve(a: &[BigUint], b: &[BigUint], len: usize) -> Vec<BigUint> {
    (0..len)
        .map(|k| {
            (0..=k)
                .filter_map(|i| Some(a.get(i)? * b.get(k - i)?))
                .fold(BigUint::zero(), |acc, x| acc + x)
        })
        .collect()
}

/// Coefficients of `1/(1 − rx)²`: `(i + 1) rⁱ`.
fn inverse_square(ratio: &BigUint, len: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(len);
    let mut pow = BigUint::from(1u32);
    for i in 0..len {
        out.push(&pow * (i + 1));
        pow *= ratio;
    }
    out
}

pub fn gf_series(arity: &BigUint, count: usize) -> Result<SeriesTerms> {
    if *arity < BigUint::from(2u32) {
        return Err(Error::single_violation("series", "arity must be ≥ 2"));
    }
    if count == 0 {
        return Err(Error::single_violation("series", "term count must be ≥ 1"));
    }
    let lhs = inverse_square(arity, count);
    let rhs = inverse_square(&(arity * arity), count);
    let scale = arity * arity * 2u32;
    let terms = convolve(&lhs, &rhs, count)
        .into_iter()
        .map(|c| c * &scale)
        .collect();
    Ok(SeriesTerms {
        arity: arity.clone(),
        terms,
    })
}
