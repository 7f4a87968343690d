//! Free composites of the structure maps `m_k` of two A∞ algebras and the
//! components `p_k` of a morphism between them, their boundaries, and the
//! polytopes they span.

pub mod boundary;
pub mod enumerate;
pub mod interpret;
pub mod polytope;
pub mod tree;

pub use boundary::{check_d_squared, formal_boundary, tree_boundary, FormalCheck};
pub use enumerate::{binary_trees, painted_trees, polytope_faces, source_faces};
pub use polytope::{
    associahedron_contractibility, contractibility, cumulant_polytope_graph, PolytopeKind,
};
pub use tree::{FormalSum, FormalTree, Generator, GeneratorKind};
