//! The composition cube: cells of the solid `(n-1)`-cube indexed by words
//! over `{LOW, HIGH, FREE}`, one letter per cut position between adjacent
//! inputs.
//!
//! A `HIGH` cut separates blocks, a `LOW` cut multiplies its neighbours with
//! the wedge product and a `FREE` cut separates arguments of one `p_j`. The
//! vertices are the cumulant terms and the edges are the `p_2` homotopies
//! between them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cumulants::{composition_sign, compositions, input_name, Composition};
use crate::error::{Error, Result};
use crate::hom::{
    cup_tensor, hom_boundary, maps_equal_on_truncation, morphism_component, MultiMap,
    SignConvention, TruncationGrid, Verdict,
};

/// Largest `n` for which whole-cube enumeration is offered.
pub const MAX_ENUMERATION_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    Low,
    High,
    Free,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::Low => 'L',
            Letter::High => 'H',
            Letter::Free => 'F',
        }
    }

    fn from_token(s: &str) -> Option<Self> {
        match s {
            "L" | "LOW" | "low" => Some(Letter::Low),
            "H" | "HIGH" | "high" => Some(Letter::High),
            "F" | "FREE" | "free" => Some(Letter::Free),
            _ => None,
        }
    }
}

/// A cell of `g_n`, identified by its word of length `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeCell {
    word: Vec<Letter>,
}

/// Block pattern and `p` indices of a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellLabel {
    pub block_pattern: Composition,
    pub p_indices: Vec<usize>,
}

/// The two kinds of square in `g_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareType {
    /// Both free cuts in one block: the square is filled by a `p_3`.
    SingleBlock,
    /// Free cuts in two blocks: the square is a product of two `p_2` edges.
    TwoBlocks,
}

impl CubeCell {
    pub fn new(word: Vec<Letter>) -> Self {
        Self { word }
    }

    /// Checks that the word has length `n - 1`.
    pub fn for_arity(n: usize, word: Vec<Letter>) -> Result<Self> {
        if n < 1 || word.len() + 1 != n {
            return Err(Error::MalformedWord(format!(
                "word of length {} for n = {n}",
                word.len()
            )));
        }
        Ok(Self { word })
    }

    /// The vertex whose `HIGH` cuts are those of `c`.
    pub fn vertex(c: &Composition) -> Self {
        let mut word = vec![Letter::Low; c.n() - 1];
        for cut in c.cuts() {
            word[cut - 1] = Letter::High;
        }
        Self { word }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len() + 1
    }

    pub fn dimension(&self) -> usize {
        self.word.iter().filter(|&&l| l == Letter::Free).count()
    }

    pub fn is_vertex(&self) -> bool {
        self.dimension() == 0
    }

    /// The composition of `n` cut at the `HIGH` letters.
    pub fn block_pattern(&self) -> Composition {
        let cuts: Vec<usize> = self.positions(Letter::High).map(|i| i + 1).collect();
        Composition::from_cuts(self.n(), &cuts).expect("cuts from a word are in range")
    }

    pub fn label(&self) -> CellLabel {
        let block_pattern = self.block_pattern();
        let p_indices = block_pattern
            .ranges()
            .iter()
            .map(|r| {
                1 + self.word[r.start..r.end - 1]
                    .iter()
                    .filter(|&&l| l == Letter::Free)
                    .count()
            })
            .collect();
        CellLabel {
            block_pattern,
            p_indices,
        }
    }

    /// `None` unless the cell is a square.
    pub fn square_type(&self) -> Option<SquareType> {
        if self.dimension() != 2 {
            return None;
        }
        let frees: Vec<usize> = self.positions(Letter::Free).collect();
        let split = self.word[frees[0]..frees[1]].contains(&Letter::High);
        Some(if split {
            SquareType::TwoBlocks
        } else {
            SquareType::SingleBlock
        })
    }

    /// Composite-map notation: `p2(a,bc)`, `p2(a,b)p1(c)`, `p1(abc)`.
    pub fn notation(&self) -> String {
        let mut out = String::new();
        for r in self.block_pattern().ranges() {
            let mut args = vec![String::new()];
            for i in r.clone() {
                args.last_mut().expect("nonempty").push(input_name(i));
                if i + 1 < r.end && self.word[i] == Letter::Free {
                    args.push(String::new());
                }
            }
            out.push_str(&format!("p{}({})", args.len(), args.join(",")));
        }
        out
    }

    /// Facets with orientation signs: the free letter of rank `r` (counted
    /// from the left, starting at 0) gives a `LOW` facet with sign `(-1)^r`
    /// and a `HIGH` facet with sign `-(-1)^r`.
    pub fn boundary(&self) -> Result<Vec<(i8, CubeCell)>> {
        if self.is_vertex() {
            return Err(Error::MalformedWord(format!(
                "vertex {self} has no boundary"
            )));
        }
        let mut out = Vec::with_capacity(2 * self.dimension());
        for (rank, pos) in self.positions(Letter::Free).enumerate() {
            let sign: i8 = if rank % 2 == 0 { 1 } else { -1 };
            for (letter, s) in [(Letter::Low, sign), (Letter::High, -sign)] {
                let mut word = self.word.clone();
                word[pos] = letter;
                out.push((s, CubeCell { word }));
            }
        }
        Ok(out)
    }

    fn positions(&self, letter: Letter) -> impl Iterator<Item = usize> + '_ {
        self.word
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == letter)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for CubeCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.word {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

/// Accepts compact words (`"FHL"`) or separated names (`"FREE,HIGH,LOW"`).
impl FromStr for CubeCell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let separated = trimmed.contains([',', ' '])
            || (trimmed.len() > 1 && Letter::from_token(trimmed).is_some());
        let word: Option<Vec<Letter>> = if separated {
            trimmed
                .split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(Letter::from_token)
                .collect()
        } else {
            trimmed
                .chars()
                .map(|c| Letter::from_token(&c.to_string()))
                .collect()
        };
        word.map(CubeCell::new)
            .ok_or_else(|| Error::MalformedWord(s.to_string()))
    }
}

pub fn cell_boundary(cell: &CubeCell) -> Result<Vec<(i8, CubeCell)>> {
    cell.boundary()
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ENUMERATION_N {
        return Err(Error::OutOfRange {
            what: "n",
            range: if min == 1 { "1..=16" } else { "2..=16" },
            got: n as i64,
        });
    }
    Ok(())
}

/// Every cell of `g_n`, by dimension and then lexicographically
/// (`LOW < HIGH < FREE`).
pub fn cells(n: usize) -> Result<Vec<CubeCell>> {
    check_n(n, 1)?;
    let len = n - 1;
    let letters = [Letter::Low, Letter::High, Letter::Free];
    let mut out: Vec<CubeCell> = (0..3usize.pow(len as u32))
        .map(|mut code| {
            let mut word = vec![Letter::Low; len];
            for slot in (0..len).rev() {
                word[slot] = letters[code % 3];
                code /= 3;
            }
            CubeCell { word }
        })
        .collect();
    out.sort_by_key(|c| c.dimension());
    Ok(out)
}

/// Number of cells in each dimension, counted from the enumeration.
pub fn cells_by_dimension(n: usize) -> Result<Vec<usize>> {
    check_n(n, 1)?;
    let mut counts = vec![0; n];
    for code in 0..3usize.pow(n as u32 - 1) {
        let mut c = code;
        let mut free = 0;
        while c > 0 {
            free += usize::from(c % 3 == 2);
            c /= 3;
        }
        counts[free] += 1;
    }
    Ok(counts)
}

/// `Σ_k (-1)^k #(k-cells)`.
pub fn euler_characteristic(n: usize) -> Result<i64> {
    check_n(n, 1)?;
    Ok(cells_by_dimension(n)?
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum())
}

/// The composite map of a cell: per block `p_{f+1}` precomposed with wedges
/// at the `LOW` cuts, blocks combined by the cup product, left-nested.
pub fn cell_to_map(n: usize, cell: &CubeCell, conv: SignConvention) -> Result<MultiMap> {
    if cell.n() != n {
        return Err(Error::MalformedWord(format!(
            "{cell} has length {}, expected {}",
            cell.word.len(),
            n.saturating_sub(1)
        )));
    }
    let mut acc: Option<MultiMap> = None;
    for r in cell.block_pattern().ranges() {
        let inner = &cell.word[r.start..r.end - 1];
        let mut groups = vec![1usize];
        for &l in inner {
            match l {
                Letter::Free => groups.push(1),
                _ => *groups.last_mut().expect("nonempty") += 1,
            }
        }
        let mut block = morphism_component(groups.len());
        for (slot, &size) in groups.iter().enumerate().rev() {
            for _ in 1..size {
                block = block.precompose_wedge(slot);
            }
        }
        acc = Some(match acc {
            None => block,
            Some(prev) => cup_tensor(&prev, &block, conv),
        });
    }
    Ok(acc.expect("at least one block").relabel(cell.notation()))
}

/// Signed sum of facet maps.
pub fn boundary_map(n: usize, cell: &CubeCell, conv: SignConvention) -> Result<MultiMap> {
    let mut acc: Option<MultiMap> = None;
    for (sign, facet) in cell.boundary()? {
        let m = cell_to_map(n, &facet, conv)?;
        acc = Some(match (acc, sign) {
            (None, 1) => m,
            (None, _) => m.neg(),
            (Some(a), 1) => a.add(&m),
            (Some(a), _) => a.sub(&m),
        });
    }
    Ok(acc.expect("cells of positive dimension have facets"))
}

/// Checks `∂(map of cell) = Σ ± map of facet` on the grid.
pub fn verify_cell(
    n: usize,
    cell: &CubeCell,
    max_exponent: usize,
    conv: SignConvention,
) -> Result<Verdict> {
    let lhs = hom_boundary(&cell_to_map(n, cell, conv)?, conv);
    let rhs = boundary_map(n, cell, conv)?;
    let mut v = maps_equal_on_truncation(&lhs, &rhs, TruncationGrid::new(max_exponent))?;
    v.check = format!("cube cell {cell}");
    Ok(v)
}

/// `Σ_vertices (-1)^{#HIGH} map(vertex)`, which is `K_n`.
pub fn vertex_sum(n: usize, conv: SignConvention) -> Result<MultiMap> {
    let mut acc: Option<MultiMap> = None;
    for c in compositions(n)? {
        let m = cell_to_map(n, &CubeCell::vertex(&c), conv)?;
        acc = Some(match (acc, composition_sign(&c)) {
            (None, 1) => m,
            (None, _) => m.neg(),
            (Some(a), 1) => a.add(&m),
            (Some(a), _) => a.sub(&m),
        });
    }
    Ok(acc.expect("n >= 1").relabel(format!("vertices(g{n})")))
}

/// An edge of `G_n`, from the coarser to the finer composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    /// The 1-cell whose boundary is `from - to`, up to the rank sign.
    pub cell: String,
    pub label: String,
}

/// The graph `G_n` on compositions of `n`.
#[derive(Clone, Debug)]
pub struct CumulantGraph {
    pub n: usize,
    pub vertices: Vec<Composition>,
    pub edges: Vec<GraphEdge>,
}

/// Vertices are compositions, edges join a composition to each one obtained
/// by splitting a single block in two.
pub fn cumulant_graph(n: usize) -> Result<CumulantGraph> {
    check_n(n, 2)?;
    let vertices = compositions(n)?;
    let index: BTreeMap<&Composition, usize> =
        vertices.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (from, c) in vertices.iter().enumerate() {
        let blocks = c.blocks();
        for b in 0..blocks.len() {
            let size = blocks[b];
            for left in 1..size {
                let mut split = blocks.to_vec();
                split.splice(b..=b, [left, size - left]);
                let finer = Composition::new(split).expect("positive blocks");
                let to = index[&finer];
                let mut cell = CubeCell::vertex(c);
                let cut = c.ranges()[b].start + left;
                cell.word[cut - 1] = Letter::Free;
                edges.push(GraphEdge {
                    from,
                    to,
                    label: cell.notation(),
                    cell: cell.to_string(),
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    Ok(CumulantGraph { n, vertices, edges })
}

impl CumulantGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.from == v || e.to == v)
            .count()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.vertices.len()).all(|v| self.degree(v) == k)
    }

    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
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

    /// Every edge joins compositions of opposite sign, which 2-colours the graph.
    pub fn signs_alternate(&self) -> bool {
        self.edges.iter().all(|e| {
            composition_sign(&self.vertices[e.from]) != composition_sign(&self.vertices[e.to])
        })
    }

    /// DOT text. Vertices are labelled by compositions, edges by their `p_2`
    /// composite.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph G{} {{\n", self.n);
        out.push_str("  // edges run from the coarser to the finer composition;\n");
        out.push_str("  // the boundary of each edge map is (coarse term) - (fine term) up to the rank sign\n");
        for (i, c) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{c}\"];\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  v{} -- v{} [label=\"{}\"];\n",
                e.from, e.to, e.label
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// The bijection composition ↔ set of cut positions, i.e. vertex ↔ subset of
/// `{1, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeIsomorphism {
    pub n: usize,
    pub pairs: Vec<(Composition, BTreeSet<usize>)>,
}

pub fn hypercube_isomorphism(n: usize) -> Result<HypercubeIsomorphism> {
    check_n(n, 2)?;
    let pairs = compositions(n)?
        .into_iter()
        .map(|c| {
            let cuts = c.cuts().into_iter().collect();
            (c, cuts)
        })
        .collect();
    Ok(HypercubeIsomorphism { n, pairs })
}

impl HypercubeIsomorphism {
    /// Checks that the map is a bijection onto the subsets of `{1, …, n-1}`
    /// and that the edges of `G_n` are exactly the single-coordinate flips.
    pub fn verify(&self, graph: &CumulantGraph) -> bool {
        let subsets: BTreeSet<&BTreeSet<usize>> = self.pairs.iter().map(|(_, s)| s).collect();
        let dim = self.n - 1;
        if self.pairs.len() != 1 << dim
            || subsets.len() != self.pairs.len()
            || subsets.iter().any(|s| s.iter().any(|&c| c == 0 || c > dim))
        {
            return false;
        }
        let mask_of: BTreeMap<&Composition, u64> = self
            .pairs
            .iter()
            .map(|(c, s)| (c, s.iter().fold(0u64, |m, &i| m | 1 << (i - 1))))
            .collect();
        let edge_set: BTreeSet<(u64, u64)> = graph
            .edges
            .iter()
            .map(|e| {
                let a = mask_of[&graph.vertices[e.from]];
                let b = mask_of[&graph.vertices[e.to]];
                (a.min(b), a.max(b))
            })
            .collect();
        let flips: BTreeSet<(u64, u64)> = (0u64..1 << dim)
            .flat_map(|m| (0..dim).map(move |i| (m, m ^ 1 << i)))
            .filter(|(a, b)| a < b)
            .collect();
        edge_set.len() == graph.edges.len() && edge_set == flips
    }
}

/// Cell counts and verification tally for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCensus {
    pub n: usize,
    pub cells_by_dim: Vec<usize>,
    pub checks_passed: usize,
    pub checks_total: usize,
    pub square_types: BTreeMap<SquareType, usize>,
}

/// Runs [`verify_cell`] on every cell of positive dimension.
pub fn census(
    n: usize,
    max_exponent: usize,
    conv: SignConvention,
) -> Result<(CellCensus, Vec<Verdict>)> {
    let all = cells(n)?;
    let mut square_types = BTreeMap::new();
    let mut verdicts = Vec::new();
    for cell in all.iter().filter(|c| !c.is_vertex()) {
        if let Some(t) = cell.square_type() {
            *square_types.entry(t).or_insert(0) += 1;
        }
        verdicts.push(verify_cell(n, cell, max_exponent, conv)?);
    }
    let checks_passed = verdicts.iter().filter(|v| v.passed()).count();
    Ok((
        CellCensus {
            n,
            cells_by_dim: cells_by_dimension(n)?,
            checks_passed,
            checks_total: verdicts.len(),
            square_types,
        },
        verdicts,
    ))
}
