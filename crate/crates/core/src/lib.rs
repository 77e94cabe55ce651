//! Combinatorics of cosmological polytopes.
//!
//! For a loopless multigraph `G`, the cosmological polytope `P_G` is the
//! convex hull of three lattice points per edge. This crate builds those
//! points, decides faces with a graph criterion, enumerates facets and the
//! face lattice, evaluates the tree recursion for f-polynomials and the
//! closed-form face counts, and checks all of it against an exact-rational
//! LP and triangulation oracle.

pub mod catalog;
pub mod counting;
pub mod error;
pub mod face;
pub mod faceset;
pub mod functional;
pub mod lattice;
pub mod limits;
pub mod multigraph;
pub mod oracle;
pub mod poly;
pub mod polytope;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use face::{FaceEngine, Facet, SpecialFace};
pub use faceset::FaceSet;
pub use functional::LinearFunctional;
pub use lattice::{f_polynomial, face_lattice, Face, FaceLattice};
pub use limits::Limits;
pub use multigraph::{Cycle, EdgeId, Multigraph, NodeId, Subgraph};
pub use poly::FPolynomial;
pub use polytope::{CosmologicalPolytope, VertexLabel};
