//! Closed-form transmission engine.
//!
//! Every topology is summarized by a [`TransmissionTriple`] `(|G|, δ(G), δ₀(G))`
//! and combinators act on triples directly, so no graph is ever built. All
//! arithmetic is arbitrary precision. Where a formula divides, the division
//! is checked to be exact and a remainder is reported as
//! [`Error::Arithmetic`].

mod power;
mod series;
mod tree;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

pub use power::{power_coefficients, power_coefficients_closed, power_triple};
pub use series::{convolve, gf_series, SeriesTerms};
pub use tree::{tree_closed_forms, tree_triple, TreeClosedForms};

use crate::error::{Error, Result};
use crate::expr::{small, Primitive, TopologyExpr};

/// Size, transmission and root transmission of a rooted connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransmissionTriple {
    pub size: BigUint,
    pub delta: BigUint,
    pub delta0: BigUint,
}

impl TransmissionTriple {
    pub fn new(
        size: impl Into<BigUint>,
        delta: impl Into<BigUint>,
        delta0: impl Into<BigUint>,
    ) -> Self {
        Self {
            size: size.into(),
            delta: delta.into(),
            delta0: delta0.into(),
        }
    }

    /// The one-vertex graph, `(1, 0, 0)`.
    pub fn single_vertex() -> Self {
        Self::new(1u32, 0u32, 0u32)
    }

    /// Names of the structural invariants this triple breaks, if any.
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.size.is_zero() {
            out.push("size must be positive");
        }
        if self.delta.is_odd() {
            out.push("delta must be even");
        }
        if self.size >= BigUint::from(2u32) {
            let one = BigUint::one();
            if self.delta < &self.size * (&self.size - &one) {
                out.push("delta must be at least size·(size−1)");
            }
            if self.delta0 < &self.size - &one {
                out.push("delta0 must be at least size−1");
            }
        }
        if &self.delta0 * 2u32 > self.delta {
            out.push("delta0 must be at most delta/2");
        }
        out
    }
}

pub(crate) fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::Arithmetic(format!("{what}: division by zero")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Arithmetic(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

pub(crate) fn natural(value: BigInt, what: &str) -> Result<BigUint> {
    match value.sign() {
        Sign::Minus => Err(Error::Arithmetic(format!("{what}: negative value {value}"))),
        _ => Ok(value.magnitude().clone()),
    }
}

pub(crate) fn signed(value: &BigUint) -> BigInt {
    BigInt::from(value.clone())
}

/// Closed-form triple of a primitive under its root convention.
pub fn primitive_triple(p: &Primitive) -> Result<TransmissionTriple> {
    p.validate()?;
    let one = BigUint::one();
    Ok(match p {
        Primitive::Complete(n) => TransmissionTriple::new(n.clone(), n * (n - &one), n - &one),
        Primitive::Cycle(n) => {
            let cube = signed(&n.pow(3));
            let delta = if n.is_odd() {
                exact_div(&(cube - signed(n)), &4.into(), "odd cycle transmission")?
            } else {
                exact_div(&cube, &4.into(), "even cycle transmission")?
            };
            // distances from vertex 0 run 1, 1, 2, 2, ...; their sum is ⌊n²/4⌋
            let delta0 = n * n / 4u32;
            TransmissionTriple::new(n.clone(), natural(delta, "cycle")?, delta0)
        }
        Primitive::Star(n) => TransmissionTriple::new(n + &one, n * n * 2u32, n.clone()),
        Primitive::Path(n) => {
            let delta = exact_div(
                &(signed(&n.pow(3)) - signed(n)),
                &3.into(),
                "path transmission",
            )?;
            let delta0 = exact_div(
                &signed(&(n * (n - &one))),
                &2.into(),
                "path root transmission",
            )?;
            TransmissionTriple::new(n.clone(), natural(delta, "path")?, natural(delta0, "path")?)
        }
        Primitive::Mesh(dims) => mesh_triple(dims)?,
        Primitive::Tree { arity, depth } => {
            tree_triple(arity, small(depth).expect("validated depth"))?
        }
    })
}

/// `δ(M(R)) = ⅓ (Π R_t²) Σ (R_t − 1/R_t)`, evaluated as
/// `Σ_t (Π_{s≠t} R_s²) (R_t³ − R_t) / 3`; corner `δ₀ = Σ_t (Π_{s≠t} R_s) R_t(R_t − 1)/2`.
fn mesh_triple(dims: &[BigUint]) -> Result<TransmissionTriple> {
    let size: BigUint = dims.iter().product();
    let mut delta = BigInt::zero();
    let mut delta0 = BigInt::zero();
    for (t, r) in dims.iter().enumerate() {
        let others: BigUint = dims
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != t)
            .map(|(_, d)| d)
            .product();
        let r = signed(r);
        let line_delta = exact_div(&(r.pow(3) - &r), &3.into(), "mesh line transmission")?;
        let line_delta0 = exact_div(&(&r * (&r - 1)), &2.into(), "mesh line root transmission")?;
        delta += signed(&(&others * &others)) * line_delta;
        delta0 += signed(&others) * line_delta0;
    }
    Ok(TransmissionTriple {
        size,
        delta: natural(delta, "mesh")?,
        delta0: natural(delta0, "mesh")?,
    })
}

/// One-point union of the parts:
/// `δ₀ = Σ δ₀(Gᵢ)` and `δ = Σ δ(Gᵢ) + 2 Σ δ₀(Gᵢ)(1 − m + Σ_{j≠i} |Gⱼ|)`.
pub fn wedge_triple(parts: &[TransmissionTriple]) -> Result<TransmissionTriple> {
    if parts.is_empty() {
        return Err(Error::single_violation(
            "wedge",
            "wedge needs at least one part",
        ));
    }
    let one = BigUint::one();
    // 1 − m + Σ_{j≠i} |Gⱼ| = Σ_{j≠i} (|Gⱼ| − 1), which stays nonnegative
    let non_root: BigUint = parts.iter().map(|p| &p.size - &one).sum();
    let mut delta = BigUint::zero();
    let mut delta0 = BigUint::zero();
    for p in parts {
        let others = &non_root - (&p.size - &one);
        delta += &p.delta + &p.delta0 * others * 2u32;
        delta0 += &p.delta0;
    }
    Ok(TransmissionTriple {
        size: non_root + one,
        delta,
        delta0,
    })
}

/// Wedge of `copies` identical parts, without materializing the list.
pub fn wedge_copies(part: &TransmissionTriple, copies: &BigUint) -> Result<TransmissionTriple> {
    if copies.is_zero() {
        return Err(Error::single_violation(
            "wedge",
            "wedge needs at least one part",
        ));
    }
    let one = BigUint::one();
    let others = (copies - &one) * (&part.size - &one);
    Ok(TransmissionTriple {
        size: copies * (&part.size - &one) + &one,
        delta: copies * (&part.delta + &part.delta0 * &others * 2u32),
        delta0: copies * &part.delta0,
    })
}

/// Pendant-root attachment: `(|G| + 1, δ + 2δ₀ + 2|G|, δ₀ + |G|)`.
pub fn tilde_triple(t: &TransmissionTriple) -> TransmissionTriple {
    TransmissionTriple {
        size: &t.size + 1u32,
        delta: &t.delta + &t.delta0 * 2u32 + &t.size * 2u32,
        delta0: &t.delta0 + &t.size,
    }
}

/// Rooted product `G ∘ H`:
/// `δ = |G|δ(H) + 2|G|(|G|−1)|H|δ₀(H) + |H|²δ(G)` and `δ₀ = |H|δ₀(G) + |G|δ₀(H)`.
pub fn rooted_product_triple(g: &TransmissionTriple, h: &TransmissionTriple) -> TransmissionTriple {
    let one = BigUint::one();
    TransmissionTriple {
        size: &g.size * &h.size,
        delta: &g.size * &h.delta
            + &g.size * (&g.size - &one) * &h.size * &h.delta0 * 2u32
            + &h.size * &h.size * &g.delta,
        delta0: &h.size * &g.delta0 + &g.size * &h.delta0,
    }
}

/// Bottom-up evaluation of an expression through the closed forms.
pub fn evaluate_expr(e: &TopologyExpr) -> Result<TransmissionTriple> {
    e.validate()?;
    evaluate_validated(e)
}

fn evaluate_validated(e: &TopologyExpr) -> Result<TransmissionTriple> {
    match e {
        TopologyExpr::Primitive(p) => primitive_triple(p),
        TopologyExpr::Wedge(children) => {
            let parts = children
                .iter()
                .map(evaluate_validated)
                .collect::<Result<Vec<_>>>()?;
            wedge_triple(&parts)
        }
        TopologyExpr::RootedProduct(l, r) => Ok(rooted_product_triple(
            &evaluate_validated(l)?,
            &evaluate_validated(r)?,
        )),
        TopologyExpr::Power { base, exponent } => power_triple(
            &evaluate_validated(base)?,
            small(exponent).expect("validated exponent"),
        ),
        TopologyExpr::Attach(child) => Ok(tilde_triple(&evaluate_validated(child)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TopologyExpr as E;

    fn t(size: u64, delta: u64, delta0: u64) -> TransmissionTriple {
        TransmissionTriple::new(size, delta, delta0)
    }

    fn prim(e: E) -> TransmissionTriple {
        match e {
            E::Primitive(p) => primitive_triple(&p).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn primitive_values() {
        assert_eq!(prim(E::complete(4)), t(4, 12, 3));
        assert_eq!(prim(E::cycle(5)), t(5, 30, 6));
        assert_eq!(prim(E::cycle(4)), t(4, 16, 4));
        assert_eq!(prim(E::mesh(&[2, 3])), t(6, 50, 9));
        assert_eq!(prim(E::star(3)), t(4, 18, 3));
        assert_eq!(prim(E::path(5)), t(5, 40, 10));
        assert_eq!(prim(E::complete(1)), t(1, 0, 0));
        assert_eq!(prim(E::tree(2, 2)), t(7, 96, 10));
    }

    #[test]
    fn one_dimensional_mesh_is_a_path() {
        for n in 1..30u64 {
            assert_eq!(prim(E::mesh(&[n])), prim(E::path(n)));
        }
    }

    #[test]
    fn invalid_primitive_rejected() {
        let E::Primitive(p) = E::cycle(2) else {
            unreachable!()
        };
        assert!(matches!(primitive_triple(&p), Err(Error::Validation(_))));
    }

    #[test]
    fn wedge_values() {
        assert_eq!(wedge_triple(&[t(5, 30, 6)]).unwrap(), t(5, 30, 6));
        assert_eq!(wedge_triple(&[t(2, 2, 1), t(2, 2, 1)]).unwrap(), t(3, 8, 2));
        for n in 1..=10u64 {
            let edges = vec![t(2, 2, 1); n as usize];
            assert_eq!(wedge_triple(&edges).unwrap(), t(n + 1, 2 * n * n, n));
        }
        assert!(wedge_triple(&[]).is_err());
    }

    #[test]
    fn wedge_copies_matches_wedge() {
        let parts = [t(1, 0, 0), t(2, 2, 1), t(4, 18, 3), t(7, 96, 10)];
        for p in &parts {
            for m in 1..6usize {
                let list = vec![p.clone(); m];
                assert_eq!(
                    wedge_copies(p, &m.into()).unwrap(),
                    wedge_triple(&list).unwrap()
                );
            }
        }
        assert!(wedge_copies(&parts[1], &BigUint::zero()).is_err());
    }

    #[test]
    fn tilde_values() {
        assert_eq!(tilde_triple(&t(1, 0, 0)), t(2, 2, 1));
        assert_eq!(tilde_triple(&t(3, 8, 2)), t(4, 18, 5));
        // path of 3 rooted at an endpoint: 2·(1 + 2 + 1)
        assert_eq!(tilde_triple(&t(2, 2, 1)), t(3, 8, 3));
    }

    #[test]
    fn rooted_product_values() {
        assert_eq!(rooted_product_triple(&t(2, 2, 1), &t(2, 2, 1)), t(4, 20, 4));
        let g = t(7, 96, 10);
        assert_eq!(
            rooted_product_triple(&g, &TransmissionTriple::single_vertex()),
            g
        );
        assert_eq!(
            rooted_product_triple(&TransmissionTriple::single_vertex(), &g),
            g
        );
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate_expr(&E::star(3)).unwrap(), t(4, 18, 3));
        assert_eq!(
            evaluate_expr(&E::wedge(vec![E::complete(2), E::complete(2)])).unwrap(),
            t(3, 8, 2)
        );
        assert_eq!(
            evaluate_expr(&E::power(E::complete(2), 2)).unwrap(),
            t(4, 20, 4)
        );
        assert!(matches!(
            evaluate_expr(&E::power(E::cycle(2), 0)),
            Err(Error::Validation(v)) if v.len() == 2
        ));
    }

    #[test]
    fn invariant_checks() {
        assert!(t(7, 96, 10).invariant_violations().is_empty());
        assert!(t(1, 0, 0).invariant_violations().is_empty());
        assert_eq!(t(3, 7, 2).invariant_violations(), ["delta must be even"]);
        assert!(!t(3, 4, 2).invariant_violations().is_empty());
        assert!(!t(0, 0, 0).invariant_violations().is_empty());
    }

    #[test]
    fn exact_division_guard() {
        assert!(matches!(
            exact_div(&7.into(), &2.into(), "x"),
            Err(Error::Arithmetic(_))
        ));
        assert!(matches!(
            natural((-1).into(), "x"),
            Err(Error::Arithmetic(_))
        ));
        assert_eq!(exact_div(&8.into(), &2.into(), "x").unwrap(), 4.into());
    }
}
