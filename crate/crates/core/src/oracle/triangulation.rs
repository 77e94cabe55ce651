use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::faceset::FaceSet;
use crate::lattice::{face_lattice, FaceLattice};
use crate::limits::Limits;
use crate::multigraph::Multigraph;
use crate::polytope::CosmologicalPolytope;

use super::linalg::lattice_index;

/// A triangulation without new vertices: each simplex is a set of
/// `dim + 1` polytope vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub simplices: Vec<FaceSet>,
}

/// Pulling triangulation of the whole polytope, pulling vertices in index
/// order.
pub fn pulling_triangulation(lattice: &FaceLattice) -> Triangulation {
    let n = lattice.faces().last().map_or(0, |f| f.set.universe());
    let order: Vec<usize> = (0..n).collect();
    pulling_triangulation_with(lattice, &order)
}

/// Pulling triangulation where `order` lists the vertices from first pulled
/// to last. Every face is coned from its earliest vertex over the
/// triangulations of its facets that avoid that vertex.
pub fn pulling_triangulation_with(lattice: &FaceLattice, order: &[usize]) -> Triangulation {
    let top = lattice
        .faces()
        .last()
        .expect("lattice has the improper face")
        .set
        .clone();
    triangulate_face(lattice, &top, order)
}

/// Pulling triangulation of a single face of the lattice.
pub fn triangulate_face(lattice: &FaceLattice, face: &FaceSet, order: &[usize]) -> Triangulation {
    let mut rank = vec![usize::MAX; face.universe()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut memo = HashMap::new();
    let mut simplices = pull(lattice, face, &rank, &mut memo);
    simplices.sort();
    Triangulation { simplices }
}

fn pull(
    lattice: &FaceLattice,
    face: &FaceSet,
    rank: &[usize],
    memo: &mut HashMap<FaceSet, Vec<FaceSet>>,
) -> Vec<FaceSet> {
    if let Some(hit) = memo.get(face) {
        return hit.clone();
    }
    let dim = lattice.dimension_of(face).expect("face is in the lattice");
    let out = if face.len() as i64 == dim + 1 {
        vec![face.clone()]
    } else {
        let apex = face
            .iter()
            .min_by_key(|&v| (rank[v], v))
            .expect("nonsimplex face is nonempty");
        let mut out = Vec::new();
        for facet in lattice.facets_of(face) {
            if facet.set.contains(apex) {
                continue;
            }
            for s in pull(lattice, &facet.set, rank, memo) {
                out.push(s.with(apex));
            }
        }
        out
    };
    memo.insert(face.clone(), out.clone());
    out
}

/// Normalized volume of one simplex relative to the integer points of its
/// own affine span.
pub fn simplex_volume(polytope: &CosmologicalPolytope, simplex: &FaceSet) -> BigInt {
    let pts = polytope.coordinates(simplex);
    let rows: Vec<Vec<i64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    if rows.is_empty() {
        return BigInt::from(1);
    }
    lattice_index(&rows)
}

/// Sum of normalized simplex volumes of a triangulation.
pub fn triangulation_volume(polytope: &CosmologicalPolytope, t: &Triangulation) -> BigInt {
    t.simplices
        .iter()
        .map(|s| simplex_volume(polytope, s))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// Normalized volume of `P_G`, measured in the integer lattice of its affine
/// hull, via a pulling triangulation.
pub fn normalized_volume(g: &Multigraph, limits: &Limits) -> Result<BigInt> {
    g.require_connected_with_edges()?;
    let p = CosmologicalPolytope::new(g.clone());
    let lattice = face_lattice(&p, limits)?;
    let t = pulling_triangulation(&lattice);
    if t.simplices.is_empty() {
        return Err(Error::Precondition("empty triangulation".into()));
    }
    Ok(triangulation_volume(&p, &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::linalg::affine_rank;

    fn setup(g: Multigraph) -> (CosmologicalPolytope, FaceLattice) {
        let p = CosmologicalPolytope::new(g);
        let l = face_lattice(&p, &Limits::default()).unwrap();
        (p, l)
    }

    #[test]
    fn triangle_and_prism() {
        let (_, l) = setup(Multigraph::path(2));
        assert_eq!(pulling_triangulation(&l).simplices.len(), 1);
        let (p, l) = setup(Multigraph::banana(2));
        let t = pulling_triangulation(&l);
        assert_eq!(t.simplices.len(), 3);
        for s in &t.simplices {
            assert_eq!(s.len(), 4);
            assert_eq!(affine_rank(&p.coordinates(s)), 3);
        }
    }

    #[test]
    fn quadrilateral_vertex_face() {
        let (p, l) = setup(Multigraph::path(3));
        let quad = p
            .parse_face_set(&["E(e1)", "D(e1;v2)", "E(e2)", "D(e2;v2)"])
            .unwrap();
        assert_eq!(l.dimension_of(&quad), Some(2));
        let order: Vec<usize> = (0..p.vertex_count()).collect();
        assert_eq!(triangulate_face(&l, &quad, &order).simplices.len(), 2);
    }

    #[test]
    fn tree_volumes() {
        let limits = Limits::default();
        assert_eq!(
            normalized_volume(&Multigraph::path(2), &limits).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            normalized_volume(&Multigraph::path(3), &limits).unwrap(),
            BigInt::from(16)
        );
        assert_eq!(
            normalized_volume(&Multigraph::path(4), &limits).unwrap(),
            BigInt::from(64)
        );
        assert_eq!(
            normalized_volume(&Multigraph::star(3), &limits).unwrap(),
            BigInt::from(64)
        );
    }

    #[test]
    fn volume_independent_of_pulling_order() {
        for g in [
            Multigraph::path(2),
            Multigraph::path(3),
            Multigraph::path(4),
            Multigraph::star(3),
            Multigraph::banana(2),
        ] {
            let (p, l) = setup(g);
            let n = p.vertex_count();
            let forward: Vec<usize> = (0..n).collect();
            let backward: Vec<usize> = (0..n).rev().collect();
            let stride: Vec<usize> = (0..n).map(|i| (i * 5 + 2) % n).collect();
            let vols: Vec<BigInt> = [forward, backward, stride]
                .iter()
                .map(|o| triangulation_volume(&p, &pulling_triangulation_with(&l, o)))
                .collect();
            assert_eq!(vols[0], vols[1]);
            assert_eq!(vols[0], vols[2]);
        }
    }
}
