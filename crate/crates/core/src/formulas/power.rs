use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{exact_div, natural, signed, TransmissionTriple};
use crate::error::{Error, Result};

fn check(n: &BigUint, k: u32) -> Result<()> {
    if n.is_zero() {
        return Err(Error::single_violation("power", "base size must be ≥ 1"));
    }
    if k == 0 {
        return Err(Error::single_violation("power", "exponent must be ≥ 1"));
    }
    Ok(())
}

/// `(aₖ(n), bₖ(n))` from the recurrences
/// `a₁ = 1, aₖ₊₁ = nᵏ + n²aₖ` and `b₁ = 0, bₖ₊₁ = 2nᵏ⁺¹(nᵏ − 1) + n²bₖ`.
///
/// Integer-only, so `n = 1` is fine (it yields `(k, 0)`).
pub fn power_coefficients(n: &BigUint, k: u32) -> Result<(BigUint, BigUint)> {
    check(n, k)?;
    let n_sq = n * n;
    let mut a = BigUint::one();
    let mut b = BigUint::zero();
    let mut n_pow = n.clone(); // nʲ
    for _ in 1..k {
        let next = &n_pow * n;
        a = &n_pow + &n_sq * &a;
        b = &next * (&n_pow - 1u32) * 2u32 + &n_sq * &b;
        n_pow = next;
    }
    Ok((a, b))
}

/// Closed forms `aₖ(n) = nᵏ⁻¹(nᵏ−1)/(n−1)` and
/// `bₖ(n) = 2(k−1)n²ᵏ⁻¹ − 2nᵏ(nᵏ⁻¹−1)/(n−1)`, for `n ≥ 2`.
pub fn power_coefficients_closed(n: &BigUint, k: u32) -> Result<(BigUint, BigUint)> {
    check(n, k)?;
    if n.is_one() {
        return Err(Error::single_violation("power", "closed forms need n ≥ 2"));
    }
    let n = signed(n);
    let nm1 = &n - 1;
    let a = n.pow(k - 1) * exact_div(&(n.pow(k) - 1), &nm1, "a_k")?;
    let b = BigInt::from(k - 1) * 2 * n.pow(2 * k - 1)
        - n.pow(k) * 2 * exact_div(&(n.pow(k - 1) - 1), &nm1, "b_k")?;
    Ok((natural(a, "a_k")?, natural(b, "b_k")?))
}

/// Triple of the `k`-th rooted power: `|Gᵏ| = nᵏ`,
/// `δ(Gᵏ) = aₖ(n)δ(G) + bₖ(n)δ₀(G)` and `δ₀(Gᵏ) = k·nᵏ⁻¹·δ₀(G)`.
pub fn power_triple(base: &TransmissionTriple, k: u32) -> Result<TransmissionTriple> {
    let (a, b) = power_coefficients(&base.size, k)?;
    Ok(TransmissionTriple {
        size: base.size.pow(k),
        delta: a * &base.delta + b * &base.delta0,
        delta0: base.size.pow(k - 1) * k * &base.delta0,
    })
}
