//! Cell complexes spanned by formal composites: the cumulant polytopes and
//! the associahedra, with their boundary matrices and rational homology.

use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::SignConvention;
use crate::linalg::rank;
use crate::rational::Rational;

use super::boundary::tree_boundary;
use super::enumerate::{painted_trees, polytope_faces, source_faces};
use super::tree::FormalTree;

#[derive(Clone, Debug, Serialize)]
pub struct PolytopeEdge {
    pub from: usize,
    pub to: usize,
    /// Coefficients of the two ends in the boundary of the composite.
    pub from_sign: i8,
    pub to_sign: i8,
    /// The degree-1 composite whose boundary is the difference of the ends.
    pub face: String,
    pub applied: String,
}

/// Vertex–edge graph of the level-`n` cumulant polytope.
#[derive(Clone, Debug)]
pub struct PolytopeGraph {
    pub n: usize,
    pub vertices: Vec<FormalTree>,
    pub edges: Vec<PolytopeEdge>,
}

/// Vertices are the painted trees, edges the 1-dimensional composites whose
/// boundary is a difference of two vertices.
pub fn cumulant_polytope_graph(n: usize, conv: SignConvention) -> Result<PolytopeGraph> {
    if !(2..=4).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            range: "2..=4",
            got: n as i64,
        });
    }
    let vertices = painted_trees(n)?;
    let index: BTreeMap<&FormalTree, usize> =
        vertices.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut edges = Vec::new();
    for face in polytope_faces(n)?.iter().filter(|t| t.dimension() == 1) {
        let b = tree_boundary(face, conv)?;
        let ends: Vec<(usize, bool)> = b
            .terms()
            .map(|(t, c)| {
                index
                    .get(t)
                    .map(|&i| (i, *c > Rational::zero()))
                    .ok_or_else(|| Error::IllTyped(format!("{t} is not a vertex")))
            })
            .collect::<Result<_>>()?;
        let [(from, from_positive), (to, to_positive)] = ends[..] else {
            return Err(Error::IllTyped(format!(
                "{face} has {} boundary terms",
                ends.len()
            )));
        };
        edges.push(PolytopeEdge {
            from,
            to,
            from_sign: if from_positive { 1 } else { -1 },
            to_sign: if to_positive { 1 } else { -1 },
            face: face.point_free(),
            applied: face.applied(),
        });
    }
    edges.sort_by(|x, y| (x.from, x.to, &x.face).cmp(&(y.from, y.to, &y.face)));
    Ok(PolytopeGraph { n, vertices, edges })
}

impl PolytopeGraph {
    pub fn is_connected(&self) -> bool {
        connected(
            self.vertices.len(),
            self.edges.iter().map(|e| (e.from, e.to)),
        )
    }

    /// True if the graph is a single cycle through every vertex.
    pub fn is_cycle(&self) -> bool {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.from] += 1;
            deg[e.to] += 1;
        }
        self.edges.len() == self.vertices.len()
            && deg.iter().all(|&d| d == 2)
            && self.is_connected()
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph P{} {{\n", self.n);
        out.push_str("  // an edge from u to v labelled L means the boundary of L is (su)u + (sv)v, signs in brackets\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{}\"];\n", v.applied()));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  v{} -> v{} [label=\"{} [{}{}]\"];\n",
                e.from,
                e.to,
                e.applied,
                sign_char(e.from_sign),
                sign_char(e.to_sign)
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

fn connected(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeKind {
    /// Composites of source `m_k`: the associahedron on `n` inputs.
    Associahedron,
    /// Composites with one layer of `p_k`: the level-`n` cumulant polytope.
    Cumulant,
}

/// Face counts and rational homology of a face complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractibilityReport {
    pub kind: PolytopeKind,
    pub n: usize,
    pub faces_by_dim: Vec<usize>,
    pub boundary_ranks: Vec<usize>,
    pub betti: Vec<usize>,
    pub d_squared_zero: bool,
    pub connected: bool,
    /// Rank of the cycle space of the vertex–edge graph.
    pub cycle_rank: usize,
    /// Rank of the span of the 2-cell boundaries inside the edge space.
    pub two_cell_boundary_rank: usize,
}

impl ContractibilityReport {
    /// Connected, `∂∂ = 0`, every graph cycle filled by 2-cells and all
    /// higher homology zero.
    pub fn contractible(&self) -> bool {
        self.connected
            && self.d_squared_zero
            && self.cycle_rank == self.two_cell_boundary_rank
            && self.betti.first() == Some(&1)
            && self.betti.iter().skip(1).all(|&b| b == 0)
    }
}

/// Builds the cellular chain complex of the faces and computes its
/// homology over the rationals.
pub fn contractibility(
    kind: PolytopeKind,
    n: usize,
    conv: SignConvention,
) -> Result<ContractibilityReport> {
    if !(1..=5).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            range: "1..=5",
            got: n as i64,
        });
    }
    let faces = match kind {
        PolytopeKind::Associahedron => source_faces(n)?,
        PolytopeKind::Cumulant => polytope_faces(n)?,
    };
    let top = faces.iter().map(FormalTree::dimension).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<FormalTree>> = vec![Vec::new(); top + 1];
    for f in faces {
        let d = f.dimension();
        by_dim[d].push(f);
    }
    let index: Vec<BTreeMap<&FormalTree, usize>> = by_dim
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, t)| (t, i)).collect())
        .collect();
    // matrices[k]: rows are k-faces, columns (k-1)-faces
    let mut matrices: Vec<Vec<Vec<Rational>>> = vec![Vec::new()];
    for k in 1..=top {
        let mut rows = Vec::with_capacity(by_dim[k].len());
        for f in &by_dim[k] {
            let mut row = vec![Rational::zero(); by_dim[k - 1].len()];
            for (t, c) in tree_boundary(f, conv)?.terms() {
                let j = index[k - 1]
                    .get(t)
                    .ok_or_else(|| Error::IllTyped(format!("{t} is not a face")))?;
                row[*j] = c.clone();
            }
            rows.push(row);
        }
        matrices.push(rows);
    }
    let d_squared_zero = (2..=top).all(|k| {
        matrices[k].iter().all(|row| {
            (0..by_dim[k - 2].len()).all(|col| {
                let s: Rational = row
                    .iter()
                    .zip(&matrices[k - 1])
                    .map(|(a, r)| a * &r[col])
                    .sum();
                s.is_zero()
            })
        })
    });
    let boundary_ranks: Vec<usize> = (0..=top)
        .map(|k| if k == 0 { 0 } else { rank(&matrices[k]) })
        .collect();
    let betti: Vec<usize> = (0..=top)
        .map(|k| {
            let next = if k < top { boundary_ranks[k + 1] } else { 0 };
            by_dim[k].len() - boundary_ranks[k] - next
        })
        .collect();
    let edges: Vec<(usize, usize)> = if top >= 1 {
        matrices[1]
            .iter()
            .filter_map(|row| {
                let ends: Vec<usize> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, _)| i)
                    .collect();
                (ends.len() == 2).then(|| (ends[0], ends[1]))
            })
            .collect()
    } else {
        Vec::new()
    };
    let v = by_dim[0].len();
    let e = by_dim.get(1).map_or(0, Vec::len);
    let cycle_rank = e - boundary_ranks.get(1).copied().unwrap_or(0);
    Ok(ContractibilityReport {
        kind,
        n,
        faces_by_dim: by_dim.iter().map(Vec::len).collect(),
        connected: edges.len() == e && connected(v, edges.into_iter()),
        two_cell_boundary_rank: boundary_ranks.get(2).copied().unwrap_or(0),
        cycle_rank,
        boundary_ranks,
        betti,
        d_squared_zero,
    })
}

/// The 2-skeleton check on the level-`n` cumulant polytope.
pub fn associahedron_contractibility(
    n: usize,
    conv: SignConvention,
) -> Result<ContractibilityReport> {
    if n > 4 {
        return Err(Error::OutOfRange {
            what: "n",
            range: "1..=4",
            got: n as i64,
        });
    }
    contractibility(PolytopeKind::Cumulant, n, conv)
}
