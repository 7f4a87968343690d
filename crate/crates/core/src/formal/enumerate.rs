//! Enumeration of planar trees: binary trees, faces of the associahedra and
//! of the cumulant polytopes, and the painted trees at their vertices.

use crate::cumulants::compositions;
use crate::error::{Error, Result};

use super::tree::{FormalTree, Generator};

/// Largest leaf count accepted by the enumerators.
pub const MAX_LEAVES: usize = 10;

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_LEAVES {
        return Err(Error::OutOfRange {
            what: "n",
            range: "1..=10",
            got: n as i64,
        });
    }
    Ok(())
}

/// Ordered splittings of `n` into exactly `k` positive parts.
fn splittings(n: usize, k: usize) -> Vec<Vec<usize>> {
    compositions(n)
        .expect("n >= 1")
        .into_iter()
        .filter(|c| c.blocks().len() == k)
        .map(|c| c.blocks().to_vec())
        .collect()
}

/// All ways of picking one element from each list, first list slowest.
fn product(lists: &[Vec<FormalTree>]) -> Vec<Vec<FormalTree>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect()
    })
}

/// Trees of `make(k)` nodes over `n` items, where `atoms(m)` lists the
/// subtrees spanning `m` items. `binary` restricts the nodes to arity 2.
fn planar(
    n: usize,
    make: Generator,
    binary: bool,
    atoms: &dyn Fn(usize) -> Vec<FormalTree>,
) -> Vec<FormalTree> {
    let mut out = atoms(n);
    let max_k = if binary { 2.min(n) } else { n };
    for k in 2..=max_k {
        for parts in splittings(n, k) {
            let lists: Vec<Vec<FormalTree>> = parts
                .iter()
                .map(|&m| planar(m, make, binary, atoms))
                .collect();
            let g = Generator {
                kind: make.kind,
                arity: k,
            };
            out.extend(
                product(&lists)
                    .into_iter()
                    .map(|cs| FormalTree::Node(g, cs)),
            );
        }
    }
    out
}

fn leaf_atom(m: usize) -> Vec<FormalTree> {
    if m == 1 {
        vec![FormalTree::Leaf]
    } else {
        Vec::new()
    }
}

/// Full binary planar trees of `m_2` source nodes on `n` leaves.
pub fn binary_trees(n: usize) -> Result<Vec<FormalTree>> {
    check(n)?;
    Ok(planar(n, Generator::m_source(2), true, &leaf_atom))
}

/// Faces of the associahedron: planar trees of source `m_k` nodes.
pub fn source_faces(n: usize) -> Result<Vec<FormalTree>> {
    check(n)?;
    Ok(planar(n, Generator::m_source(2), false, &leaf_atom))
}

fn p_rooted(n: usize, vertices_only: bool) -> Vec<FormalTree> {
    let max_a = if vertices_only { 1 } else { n };
    let mut out = Vec::new();
    for a in 1..=max_a {
        for parts in splittings(n, a) {
            let lists: Vec<Vec<FormalTree>> = parts
                .iter()
                .map(|&m| planar(m, Generator::m_source(2), vertices_only, &leaf_atom))
                .collect();
            out.extend(
                product(&lists)
                    .into_iter()
                    .map(|cs| FormalTree::Node(Generator::p(a), cs)),
            );
        }
    }
    out
}

/// Every well-typed composite with target output on `n` leaves: the faces
/// of the level-`n` cumulant polytope.
pub fn polytope_faces(n: usize) -> Result<Vec<FormalTree>> {
    check(n)?;
    Ok(planar(n, Generator::m_target(2), false, &|m| {
        p_rooted(m, false)
    }))
}

/// Vertices of the level-`n` cumulant polytope, built directly: a binary
/// tree of target products over `p_1` nodes, each `p_1` applied to a binary
/// tree of source products.
pub fn painted_trees(n: usize) -> Result<Vec<FormalTree>> {
    check(n)?;
    Ok(planar(n, Generator::m_target(2), true, &|m| {
        p_rooted(m, true)
    }))
}

pub fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// `Σ_c Catalan(k - 1) Π Catalan(b_i - 1)` over compositions `c = (b_1, …, b_k)`.
pub fn painted_count_formula(n: usize) -> Result<u64> {
    Ok(compositions(n)?
        .iter()
        .map(|c| {
            let k = c.blocks().len();
            catalan(k - 1) * c.blocks().iter().map(|&b| catalan(b - 1)).product::<u64>()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(binary_trees(1).unwrap(), vec![FormalTree::Leaf]);
        assert_eq!(binary_trees(3).unwrap().len(), 2);
        assert_eq!(painted_trees(2).unwrap().len(), 2);
        assert_eq!(painted_trees(3).unwrap().len(), 6);
        assert_eq!(painted_count_formula(4).unwrap(), 21);
        assert!(binary_trees(0).is_err());
    }
}
