//! Independent exact-rational ground truth. Face decisions and ranks work
//! from coordinates alone and never consult the graph criteria; the pulling
//! triangulation takes a face lattice as input.

mod faces;
pub mod linalg;
pub mod lp;
pub mod scalar;
pub mod triangulation;

pub use faces::{brute_force_faces, lp_face_hull, lp_is_face, LpVerdict};
pub use linalg::{affine_rank, lattice_index, rank};
pub use triangulation::{
    normalized_volume, pulling_triangulation, pulling_triangulation_with, Triangulation,
};
