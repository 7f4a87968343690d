//! The boundary operator on formal composites.
//!
//! In the shifted convention every relation has plus signs:
//! `Σ p(1^r ⊗ m_k ⊗ 1^t) = Σ m_k(p_{n_1} ⊗ … ⊗ p_{n_k})` and
//! `Σ m_i(1^r ⊗ m_j ⊗ 1^t) = 0`. Moving the `m_1` terms to one side gives the
//! boundary of each generator; the boundary of a composite follows from the
//! Koszul rule, reading degrees in preorder.

use num_traits::One;
use serde::Serialize;

use crate::cumulants::compositions;
use crate::error::{Error, Result};
use crate::hom::{SignConvention, Status};
use crate::rational::Rational;

use super::tree::{FormalSum, FormalTree, Generator, GeneratorKind};

/// `∂g` as a sum of two-level trees on `g.arity` leaves.
pub fn generator_boundary(g: Generator) -> FormalSum {
    let n = g.arity;
    let mut out = FormalSum::zero();
    let one = Rational::one();
    match g.kind {
        GeneratorKind::P => {
            for k in 2..=n {
                let lower = Generator::p(n - k + 1);
                for r in 0..=n - k {
                    let mut children = vec![FormalTree::Leaf; lower.arity];
                    children[r] = FormalTree::corolla(Generator::m_source(k));
                    out.add_term(FormalTree::Node(lower, children), one.clone());
                }
                for c in compositions(n).expect("n >= 1") {
                    if c.blocks().len() != k {
                        continue;
                    }
                    let children = c
                        .blocks()
                        .iter()
                        .map(|&b| FormalTree::corolla(Generator::p(b)))
                        .collect();
                    out.add_term(
                        FormalTree::Node(Generator::m_target(k), children),
                        -one.clone(),
                    );
                }
            }
        }
        kind => {
            let make = |k| Generator { kind, arity: k };
            for j in 2..n {
                let i = n + 1 - j;
                for r in 0..i {
                    let mut children = vec![FormalTree::Leaf; i];
                    children[r] = FormalTree::corolla(make(j));
                    out.add_term(FormalTree::Node(make(i), children), -one.clone());
                }
            }
        }
    }
    out
}

/// Replaces the leaves of `shape` by `subtrees` and returns the Koszul sign
/// of moving every subtree from behind all nodes of `shape` to its place in
/// preorder.
fn graft(shape: &FormalTree, subtrees: &[FormalTree]) -> (FormalTree, bool) {
    fn walk(
        t: &FormalTree,
        subtrees: &[FormalTree],
        next: &mut usize,
        passed: &mut i64,
        sign: &mut bool,
    ) -> FormalTree {
        match t {
            FormalTree::Leaf => {
                let s = subtrees[*next].clone();
                *next += 1;
                *passed += s.degree();
                s
            }
            FormalTree::Node(g, cs) => {
                if g.shifted_degree() % 2 == 1 && *passed % 2 == 1 {
                    *sign = !*sign;
                }
                let children = cs
                    .iter()
                    .map(|c| walk(c, subtrees, next, passed, sign))
                    .collect();
                FormalTree::Node(*g, children)
            }
        }
    }
    let (mut next, mut passed, mut sign) = (0, 0, false);
    let tree = walk(shape, subtrees, &mut next, &mut passed, &mut sign);
    (tree, sign)
}

fn boundary_left(t: &FormalTree) -> FormalSum {
    let FormalTree::Node(g, children) = t else {
        return FormalSum::zero();
    };
    let mut out = FormalSum::zero();
    for (shape, c) in generator_boundary(*g).terms() {
        let (tree, negate) = graft(shape, children);
        out.add_term(tree, if negate { -c.clone() } else { c.clone() });
    }
    let mut passed = g.shifted_degree();
    for (i, child) in children.iter().enumerate() {
        let sign = if passed % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        for (replacement, c) in boundary_left(child).terms() {
            let mut cs = children.clone();
            cs[i] = replacement.clone();
            out.add_term(FormalTree::Node(*g, cs), c * &sign);
        }
        passed += child.degree();
    }
    out
}

/// Boundary of a single tree. Under the mirrored convention the Koszul
/// signs are read right to left.
pub fn tree_boundary(t: &FormalTree, conv: SignConvention) -> Result<FormalSum> {
    t.sort()?;
    Ok(match conv {
        SignConvention::A => boundary_left(t),
        SignConvention::B => boundary_left(&t.mirror()).mirror(),
    })
}

/// Linear extension of [`tree_boundary`].
pub fn formal_boundary(s: &FormalSum, conv: SignConvention) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for (t, c) in s.terms() {
        out = out.add(&tree_boundary(t, conv)?.scale(c));
    }
    Ok(out)
}

/// Outcome of `∂∂ = 0` on one generator.
#[derive(Clone, Debug, Serialize)]
pub struct FormalCheck {
    pub check: String,
    pub n: usize,
    pub status: Status,
    pub terms_after_one_boundary: usize,
    pub residual: FormalSum,
}

/// `∂∂ p_n`, which must cancel term by term.
pub fn check_d_squared(n: usize, conv: SignConvention) -> Result<FormalCheck> {
    if !(1..=5).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            range: "1..=5",
            got: n as i64,
        });
    }
    d_squared_of(Generator::p(n), conv)
}

/// `∂∂` on the corolla of any generator.
pub fn d_squared_of(g: Generator, conv: SignConvention) -> Result<FormalCheck> {
    let once = tree_boundary(&FormalTree::corolla(g), conv)?;
    let residual = formal_boundary(&once, conv)?;
    Ok(FormalCheck {
        check: format!("formal d^2 {}", g.name()),
        n: g.arity,
        status: if residual.is_zero() {
            Status::Pass
        } else {
            Status::Fail
        },
        terms_after_one_boundary: once.len(),
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: SignConvention = SignConvention::A;

    #[test]
    fn small_boundaries() {
        assert!(tree_boundary(&FormalTree::corolla(Generator::p(1)), A)
            .unwrap()
            .is_zero());
        assert!(
            tree_boundary(&FormalTree::corolla(Generator::m_source(2)), A)
                .unwrap()
                .is_zero()
        );
        let b = tree_boundary(&FormalTree::corolla(Generator::p(2)), A).unwrap();
        assert_eq!(b.to_string(), "-m2(p1⊗p1) + p1(m2)");
        let b = tree_boundary(&FormalTree::corolla(Generator::m_source(3)), A).unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn ill_typed_rejected() {
        let bad = FormalTree::Node(Generator::p(1), vec![FormalTree::corolla(Generator::p(1))]);
        assert!(tree_boundary(&bad, A).is_err());
    }

    #[test]
    fn range_of_d_squared() {
        assert!(check_d_squared(0, A).is_err());
        assert!(check_d_squared(6, A).is_err());
    }
}
