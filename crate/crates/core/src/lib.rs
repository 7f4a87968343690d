//! Exact verification that the Boolean cumulants of the integration map on
//! the interval collapse up to coherent homotopy.
//!
//! * [`interval`]: polynomial forms, cochains, integration and iterated integrals
//! * [`cumulants`]: Boolean cumulants of a chain map
//! * [`hom`]: multilinear maps, the Hom-complex differential and the morphism relations
//! * [`cube`]: the composition cubes whose cells are composites of `p_j`
//! * [`formal`]: free composites of `m_k` and `p_k`, their boundaries and polytopes

pub mod cube;
pub mod cumulants;
pub mod error;
pub mod formal;
pub mod hom;
pub mod interval;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod syntax;

pub use error::{Error, Result};
pub use interval::{Cochain, PolyForm};
pub use poly::Polynomial;
pub use rational::Rational;
