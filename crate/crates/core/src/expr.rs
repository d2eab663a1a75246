//! Topology expressions: primitives and the combinators that glue them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result, Violation};

/// A named graph family with its parameters.
///
/// Root conventions: complete and cycle at vertex 0, star at the center, path
/// at an endpoint, mesh at the all-zero corner, tree at its root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Primitive {
    /// `K_n`, `n >= 1`.
    Complete(BigUint),
    /// `C_n`, `n >= 3`.
    Cycle(BigUint),
    /// `S_n`: `n >= 1` leaves around a center, `n + 1` vertices.
    Star(BigUint),
    /// Path on `n >= 1` vertices.
    Path(BigUint),
    /// Cartesian product of paths with the given vertex counts.
    Mesh(Vec<BigUint>),
    /// Perfect `arity`-ary tree with all leaves at `depth`.
    Tree { arity: BigUint, depth: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TopologyExpr {
    Primitive(Primitive),
    /// One-point union: all children glued at their roots.
    Wedge(Vec<TopologyExpr>),
    /// A copy of `right` hung by its root from every vertex of `left`.
    RootedProduct(Box<TopologyExpr>, Box<TopologyExpr>),
    /// `base` rooted-multiplied with itself `exponent` times.
    Power {
        base: Box<TopologyExpr>,
        exponent: BigUint,
    },
    /// New pendant vertex on the child's root, which becomes the root.
    Attach(Box<TopologyExpr>),
}

impl From<Primitive> for TopologyExpr {
    fn from(p: Primitive) -> Self {
        TopologyExpr::Primitive(p)
    }
}

/// Shorthand constructors, mostly for tests and examples.
impl TopologyExpr {
    pub fn complete(n: u64) -> Self {
        Primitive::Complete(n.into()).into()
    }

    pub fn cycle(n: u64) -> Self {
        Primitive::Cycle(n.into()).into()
    }

    pub fn star(n: u64) -> Self {
        Primitive::Star(n.into()).into()
    }

    pub fn path(n: u64) -> Self {
        Primitive::Path(n.into()).into()
    }

    pub fn mesh(dims: &[u64]) -> Self {
        Primitive::Mesh(dims.iter().map(|&d| d.into()).collect()).into()
    }

    pub fn tree(arity: u64, depth: u64) -> Self {
        Primitive::Tree {
            arity: arity.into(),
            depth: depth.into(),
        }
        .into()
    }

    pub fn wedge(children: Vec<TopologyExpr>) -> Self {
        TopologyExpr::Wedge(children)
    }

    pub fn rprod(left: TopologyExpr, right: TopologyExpr) -> Self {
        TopologyExpr::RootedProduct(Box::new(left), Box::new(right))
    }

    pub fn power(base: TopologyExpr, exponent: u64) -> Self {
        TopologyExpr::Power {
            base: Box::new(base),
            exponent: exponent.into(),
        }
    }

    pub fn attach(child: TopologyExpr) -> Self {
        TopologyExpr::Attach(Box::new(child))
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primitive::Complete(n) => write!(f, "complete({n})"),
            Primitive::Cycle(n) => write!(f, "cycle({n})"),
            Primitive::Star(n) => write!(f, "star({n})"),
            Primitive::Path(n) => write!(f, "path({n})"),
            Primitive::Mesh(dims) => {
                f.write_str("mesh(")?;
                write_list(f, dims)?;
                f.write_str(")")
            }
            Primitive::Tree { arity, depth } => write!(f, "tree({arity}, {depth})"),
        }
    }
}

/// Canonical text form; parses back to an equal expression.
impl fmt::Display for TopologyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyExpr::Primitive(p) => p.fmt(f),
            TopologyExpr::Wedge(children) => {
                f.write_str("wedge(")?;
                write_list(f, children)?;
                f.write_str(")")
            }
            TopologyExpr::RootedProduct(l, r) => write!(f, "rprod({l}, {r})"),
            TopologyExpr::Power { base, exponent } => write!(f, "power({base}, {exponent})"),
            TopologyExpr::Attach(child) => write!(f, "attach({child})"),
        }
    }
}

pub(crate) fn small(value: &BigUint) -> Option<u32> {
    value.to_u32()
}

impl Primitive {
    /// Every parameter-range violation, each tagged with `path`.
    pub fn violations(&self, path: &str) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut bad = |message: &str| {
            out.push(Violation {
                path: path.to_string(),
                message: message.to_string(),
            })
        };
        match self {
            Primitive::Complete(n) if n.is_zero() => bad("complete size must be ≥ 1"),
            Primitive::Cycle(n) if *n < BigUint::from(3u32) => bad("cycle arity must be ≥ 3"),
            Primitive::Star(n) if n.is_zero() => bad("star leaf count must be ≥ 1"),
            Primitive::Path(n) if n.is_zero() => bad("path length must be ≥ 1"),
            Primitive::Mesh(dims) => {
                if dims.is_empty() {
                    bad("mesh needs at least one dimension");
                }
                if dims.iter().any(Zero::is_zero) {
                    bad("mesh dimensions must be ≥ 1");
                }
            }
            Primitive::Tree { arity, depth } => {
                if arity.is_zero() {
                    bad("tree arity must be ≥ 1");
                }
                if small(depth).is_none() {
                    bad("tree depth must fit in 32 bits");
                }
            }
            _ => {}
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations("expr");
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(v))
        }
    }

    /// Vertex count, computed without building anything.
    pub fn size(&self) -> BigUint {
        match self {
            Primitive::Complete(n) | Primitive::Cycle(n) | Primitive::Path(n) => n.clone(),
            Primitive::Star(n) => n + 1u32,
            Primitive::Mesh(dims) => dims.iter().product(),
            Primitive::Tree { arity, depth } => {
                let depth = small(depth).unwrap_or(u32::MAX);
                if arity.is_one() {
                    BigUint::from(depth) + 1u32
                } else {
                    (arity.pow(depth + 1) - 1u32) / (arity - 1u32)
                }
            }
        }
    }
}

impl TopologyExpr {
    /// Checks every node's parameter ranges and reports all violations.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        self.collect_violations("expr", &mut out);
        out
    }

    fn collect_violations(&self, path: &str, out: &mut Vec<Violation>) {
        match self {
            TopologyExpr::Primitive(p) => out.extend(p.violations(path)),
            TopologyExpr::Wedge(children) => {
                if children.is_empty() {
                    out.push(Violation {
                        path: path.to_string(),
                        message: "wedge needs at least one part".to_string(),
                    });
                }
                for (i, child) in children.iter().enumerate() {
                    child.collect_violations(&format!("{path}/wedge[{i}]"), out);
                }
            }
            TopologyExpr::RootedProduct(l, r) => {
                l.collect_violations(&format!("{path}/rprod.left"), out);
                r.collect_violations(&format!("{path}/rprod.right"), out);
            }
            TopologyExpr::Power { base, exponent } => {
                if exponent.is_zero() {
                    out.push(Violation {
                        path: path.to_string(),
                        message: "exponent must be ≥ 1".to_string(),
                    });
                } else if small(exponent).is_none() {
                    out.push(Violation {
                        path: path.to_string(),
                        message: "exponent must fit in 32 bits".to_string(),
                    });
                }
                base.collect_violations(&format!("{path}/power.base"), out);
            }
            TopologyExpr::Attach(child) => {
                child.collect_violations(&format!("{path}/attach"), out);
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(v))
        }
    }

    /// Exact vertex count of the built graph. Assumes a validated expression.
    pub fn estimated_size(&self) -> BigUint {
        match self {
            TopologyExpr::Primitive(p) => p.size(),
            TopologyExpr::Wedge(children) => {
                let total: BigUint = children.iter().map(Self::estimated_size).sum();
                total + 1u32 - children.len()
            }
            TopologyExpr::RootedProduct(l, r) => l.estimated_size() * r.estimated_size(),
            TopologyExpr::Power { base, exponent } => base
                .estimated_size()
                .pow(small(exponent).unwrap_or(u32::MAX)),
            TopologyExpr::Attach(child) => child.estimated_size() + 1u32,
        }
    }

    /// Nesting depth; a bare primitive has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            TopologyExpr::Primitive(_) => 1,
            TopologyExpr::Wedge(children) => {
                1 + children.iter().map(Self::depth).max().unwrap_or(0)
            }
            TopologyExpr::RootedProduct(l, r) => 1 + l.depth().max(r.depth()),
            TopologyExpr::Power { base, .. } | TopologyExpr::Attach(base) => 1 + base.depth(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TopologyExpr as E;

    #[test]
    fn validation_messages() {
        let v = E::cycle(2).violations();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].message, "cycle arity must be ≥ 3");
        assert!(E::tree(1, 5).validate().is_ok());
        let v = E::power(E::complete(3), 0).violations();
        assert_eq!(v[0].message, "exponent must be ≥ 1");
    }

    #[test]
    fn validation_reports_every_violation_with_paths() {
        let e = E::wedge(vec![E::complete(0), E::rprod(E::star(0), E::mesh(&[2, 0]))]);
        let v = e.violations();
        let paths: Vec<_> = v.iter().map(|v| v.path.as_str()).collect();
        assert_eq!(
            paths,
            [
                "expr/wedge[0]",
                "expr/wedge[1]/rprod.left",
                "expr/wedge[1]/rprod.right"
            ]
        );
        assert!(!E::wedge(vec![]).violations().is_empty());
        assert!(!E::mesh(&[]).violations().is_empty());
    }

    #[test]
    fn sizes() {
        assert_eq!(E::tree(2, 3).estimated_size(), 15u32.into());
        assert_eq!(E::tree(1, 3).estimated_size(), 4u32.into());
        assert_eq!(
            E::power(E::complete(2), 10).estimated_size(),
            1024u32.into()
        );
        assert_eq!(
            E::wedge(vec![E::star(3), E::star(3)]).estimated_size(),
            7u32.into()
        );
        assert_eq!(E::attach(E::mesh(&[2, 3])).estimated_size(), 7u32.into());
    }

    #[test]
    fn canonical_rendering() {
        let e = E::wedge(vec![E::power(E::cycle(6), 3), E::attach(E::tree(2, 1))]);
        assert_eq!(
            e.to_string(),
            "wedge(power(cycle(6), 3), attach(tree(2, 1)))"
        );
        assert_eq!(E::mesh(&[2, 3, 4]).to_string(), "mesh(2, 3, 4)");
    }
}
