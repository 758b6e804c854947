//! Exact computations with monomial ideals attached to graphs: cover ideals,
//! their ordinary and symbolic powers, multigraded Betti numbers and
//! regularity, weak polymatroidality and vertex decomposability.

pub mod complex;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod monomial;
pub mod polymatroid;
pub mod resolution;
pub mod symbolic;

pub use complex::{ShedTree, SimplicialComplex, VdMemo};
pub use error::{Error, Result};
pub use graph::{CliquePartition, Graph};
pub use monomial::{minimize, Monomial, MonomialIdeal, Polarization, VariableOrder};
pub use polymatroid::{WpCertificate, WpOutcome, WpSearch, WpViolation, WpWitness};
pub use resolution::{BettiTable, LcmLattice};
pub use symbolic::{CoComplex, SymbolicPowerReport};

/// Resource limits. Exceeding one is a hard error, never a silent truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of lcm-lattice elements.
    pub lattice: usize,
    /// Maximum number of faces in one upper Koszul complex.
    pub koszul_faces: usize,
    /// Maximum number of variables for a weak-polymatroid order search.
    pub wp_search_ambient: usize,
    /// Maximum number of generators for the linear-quotient search.
    pub linear_quotient_generators: usize,
    /// Maximum number of vertices for exhaustive cover enumeration.
    pub cover_vertices: usize,
    /// Maximum number of vertices for exhaustive odd-cycle enumeration.
    pub cycle_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            lattice: 200_000,
            koszul_faces: 1 << 14,
            wp_search_ambient: 10,
            linear_quotient_generators: 512,
            cover_vertices: 20,
            cycle_vertices: 14,
        }
    }
}
