use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{exact_div, natural, signed, tilde_triple, wedge_copies, TransmissionTriple};
use crate::error::{Error, Result};

/// Triple of the perfect `arity`-ary tree of the given depth.
///
/// Iterates `T⁰ = •`, `Tᵏ⁺¹ = ⋁ (arity copies of attach(Tᵏ))` on triples.
/// Integer-only, so `arity = 1` (a path rooted at an endpoint) works too.
pub fn tree_triple(arity: &BigUint, depth: u32) -> Result<TransmissionTriple> {
    if arity.is_zero() {
        return Err(Error::single_violation("tree", "tree arity must be ≥ 1"));
    }
    let mut t = TransmissionTriple::single_vertex();
    for _ in 0..depth {
        t = wedge_copies(&tilde_triple(&t), arity)?;
    }
    Ok(t)
}

/// Closed forms for perfect trees; only defined for arity ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeClosedForms {
    pub delta: BigUint,
    pub delta0: BigUint,
    /// Root transmission of the tree with a pendant root attached.
    pub delta0_tilde: BigUint,
}

pub fn tree_closed_forms(arity: &BigUint, depth: u32) -> Result<TreeClosedForms> {
    if *arity < BigUint::from(2u32) {
        return Err(Error::single_violation(
            "tree",
            "closed forms need arity ≥ 2",
        ));
    }
    let n = signed(arity);
    let k = BigInt::from(depth);
    let one = BigInt::one();
    let nm1 = &n - &one;
    let nm1_sq = &nm1 * &nm1;
    let pow = |e: u32| n.pow(e);

    // δ = 2nᵏ⁺¹/(n−1)² · (knᵏ⁺¹ + k − 2n(nᵏ−1)/(n−1))
    let geometric = exact_div(&(&n * (pow(depth) - &one) * 2), &nm1, "tree transmission")?;
    let inner = &k * pow(depth + 1) + &k - geometric;
    let delta = exact_div(&(pow(depth + 1) * 2 * inner), &nm1_sq, "tree transmission")?;

    // δ₀ = (knᵏ⁺² − (k+1)nᵏ⁺¹ + n)/(n−1)²
    let delta0 = exact_div(
        &(&k * pow(depth + 2) - (&k + 1) * pow(depth + 1) + &n),
        &nm1_sq,
        "tree root transmission",
    )?;

    // δ₀(T̃) = ((k+1)nᵏ⁺² − (k+2)nᵏ⁺¹ + 1)/(n−1)²
    let delta0_tilde = exact_div(
        &((&k + 1) * pow(depth + 2) - (&k + 2) * pow(depth + 1) + &one),
        &nm1_sq,
        "attached tree root transmission",
    )?;

    Ok(TreeClosedForms {
        delta: natural(delta, "tree transmission")?,
        delta0: natural(delta0, "tree root transmission")?,
        delta0_tilde: natural(delta0_tilde, "attached tree root transmission")?,
    })
}
