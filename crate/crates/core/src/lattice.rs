//! The full face lattice of `P_G`, obtained by closing the facets under
//! intersection, and the f-polynomials read off it.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::FaceEngine;
use crate::faceset::FaceSet;
use crate::limits::Limits;
use crate::multigraph::{Multigraph, NodeId};
use crate::oracle::affine_rank;
use crate::poly::FPolynomial;
use crate::polytope::CosmologicalPolytope;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    pub set: FaceSet,
    pub dim: i64,
}

/// All faces of a polytope, including `∅` and the polytope itself, ordered
/// by dimension and then by vertex index list.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    faces: Vec<Face>,
    index: HashMap<FaceSet, usize>,
    dim: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceLatticeRecord {
    pub dim: i64,
    pub f_vector: Vec<String>,
    pub faces: Vec<LatticeFaceRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeFaceRecord {
    pub dim: i64,
    pub vertices: Vec<String>,
}

/// Dimension of the face `set`: affine rank of its points, `-1` for `∅`.
pub fn face_dimension(engine: &FaceEngine<'_>, set: &FaceSet) -> Result<i64> {
    if !engine.is_face(set)? {
        return Err(Error::NotAFace);
    }
    Ok(set_dimension(engine.polytope(), set))
}

/// Affine dimension of an arbitrary vertex subset, without a face check.
pub fn set_dimension(polytope: &CosmologicalPolytope, set: &FaceSet) -> i64 {
    if set.is_empty() {
        -1
    } else {
        affine_rank(&polytope.coordinates(set)) as i64
    }
}

impl FaceLattice {
    /// Closes the facets under intersection, one round per codimension.
    pub fn build(engine: &FaceEngine<'_>, limits: &Limits) -> Result<FaceLattice> {
        let p = engine.polytope();
        let facets: Vec<FaceSet> = engine
            .all_facets(limits)?
            .into_iter()
            .map(|f| f.vertex_set)
            .collect();
        let cap_error = |count: usize| Error::CapExceeded {
            what: "face",
            cap: limits.max_faces,
            context: format!(
                "graph with {} nodes and {} edges reached {count} faces",
                p.graph().node_count(),
                p.graph().edge_count()
            ),
        };

        let mut seen: HashSet<FaceSet> = HashSet::new();
        seen.insert(p.full_set());
        seen.insert(p.empty_set());
        let mut frontier: Vec<FaceSet> = Vec::new();
        for f in &facets {
            if seen.insert(f.clone()) {
                frontier.push(f.clone());
            }
        }
        while !frontier.is_empty() {
            if seen.len() > limits.max_faces {
                return Err(cap_error(seen.len()));
            }
            let candidates: HashSet<FaceSet> = frontier
                .par_iter()
                .flat_map_iter(|face| {
                    facets
                        .iter()
                        .filter(|f| !face.is_subset(f))
                        .map(|f| face.intersection(f))
                        .collect::<Vec<_>>()
                })
                .collect();
            frontier = candidates
                .into_iter()
                .filter(|c| !seen.contains(c))
                .collect();
            seen.extend(frontier.iter().cloned());
        }
        if seen.len() > limits.max_faces {
            return Err(cap_error(seen.len()));
        }

        let mut faces: Vec<Face> = seen
            .into_par_iter()
            .map(|set| {
                let dim = set_dimension(p, &set);
                Face { set, dim }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.set).cmp(&(b.dim, &b.set)));
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.set.clone(), i))
            .collect();
        let dim = faces.last().map_or(-1, |f| f.dim);
        Ok(FaceLattice { faces, index, dim })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension of the polytope.
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn contains(&self, set: &FaceSet) -> bool {
        self.index.contains_key(set)
    }

    pub fn dimension_of(&self, set: &FaceSet) -> Option<i64> {
        self.index.get(set).map(|&i| self.faces[i].dim)
    }

    pub fn faces_of_dim(&self, dim: i64) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    /// Faces of the face `set`, itself and `∅` included.
    pub fn faces_within<'s>(&'s self, set: &'s FaceSet) -> impl Iterator<Item = &'s Face> + 's {
        self.faces.iter().filter(move |f| f.set.is_subset(set))
    }

    /// Faces containing `set`.
    pub fn faces_containing<'s>(&'s self, set: &'s FaceSet) -> impl Iterator<Item = &'s Face> + 's {
        self.faces.iter().filter(move |f| set.is_subset(&f.set))
    }

    /// Facets of the face `set`: its faces one dimension down.
    pub fn facets_of(&self, set: &FaceSet) -> Vec<&Face> {
        let Some(d) = self.dimension_of(set) else {
            return Vec::new();
        };
        self.faces_of_dim(d - 1)
            .filter(|f| f.set.is_subset(set))
            .collect()
    }

    pub fn f_vector(&self) -> Vec<u64> {
        let mut counts = vec![0u64; (self.dim + 2) as usize];
        for f in &self.faces {
            counts[(f.dim + 1) as usize] += 1;
        }
        counts
    }

    pub fn f_polynomial(&self) -> FPolynomial {
        FPolynomial::from_counts(&self.f_vector())
    }

    /// f-polynomial of the face `set` regarded as a polytope.
    pub fn face_f_polynomial(&self, set: &FaceSet) -> FPolynomial {
        let d = self.dimension_of(set).unwrap_or(-1);
        let mut counts = vec![0u64; (d + 2).max(1) as usize];
        for f in self.faces_within(set) {
            counts[(f.dim + 1) as usize] += 1;
        }
        FPolynomial::from_counts(&counts)
    }

    /// `Σ_{σ ⊇ F} t^{dim σ - dim F - 1}` over faces `σ` containing `F`:
    /// the f-polynomial of the face figure of `F`.
    pub fn upper_f_polynomial_of(&self, set: &FaceSet) -> Option<FPolynomial> {
        let d = self.dimension_of(set)?;
        let mut counts = vec![0u64; (self.dim - d + 1) as usize];
        for f in self.faces_containing(set) {
            counts[(f.dim - d) as usize] += 1;
        }
        Some(FPolynomial::from_counts(&counts))
    }

    /// True iff the pairwise intersection of any two members is a member.
    pub fn is_intersection_closed(&self) -> bool {
        self.faces.par_iter().enumerate().all(|(i, a)| {
            self.faces[i + 1..]
                .iter()
                .all(|b| self.contains(&a.set.intersection(&b.set)))
        })
    }

    pub fn record(
        &self,
        polytope: &CosmologicalPolytope,
        max_dim: Option<i64>,
    ) -> FaceLatticeRecord {
        FaceLatticeRecord {
            dim: self.dim,
            f_vector: self.f_vector().iter().map(ToString::to_string).collect(),
            faces: self
                .faces
                .iter()
                .filter(|f| max_dim.is_none_or(|m| f.dim <= m))
                .map(|f| LatticeFaceRecord {
                    dim: f.dim,
                    vertices: polytope.labels_of(&f.set),
                })
                .collect(),
        }
    }

    /// CSV with columns `dim,vertex_count,labels`; labels separated by spaces.
    pub fn to_csv(&self, polytope: &CosmologicalPolytope, max_dim: Option<i64>) -> String {
        let mut out = String::from("dim,vertex_count,labels\n");
        for f in self
            .faces
            .iter()
            .filter(|f| max_dim.is_none_or(|m| f.dim <= m))
        {
            let labels = polytope.labels_of(&f.set).join(" ");
            out.push_str(&format!("{},{},\"{}\"\n", f.dim, f.set.len(), labels));
        }
        out
    }
}

/// Face lattice of `P_G` for a connected graph with at least one edge.
pub fn face_lattice(polytope: &CosmologicalPolytope, limits: &Limits) -> Result<FaceLattice> {
    polytope.graph().require_connected_with_edges()?;
    let engine = FaceEngine::new(polytope, limits)?;
    FaceLattice::build(&engine, limits)
}

/// f-polynomial of `P_G` for any loopless multigraph.
///
/// All generators lie on the hyperplane `Σx + Σy = 1` and different
/// components use disjoint coordinates, so the polytope of a disjoint union
/// is the join of the component polytopes and its f-polynomial is the
/// product. An isolated node contributes a point `1 + t`; the empty graph
/// gives `1`.
pub fn f_polynomial(g: &Multigraph, limits: &Limits) -> Result<FPolynomial> {
    let mut total = FPolynomial::one();
    for comp in g.components() {
        let part = if comp.len() == 1 {
            FPolynomial::point()
        } else {
            let p = CosmologicalPolytope::new(g.induced(&comp));
            face_lattice(&p, limits)?.f_polynomial()
        };
        total = &total * &part;
    }
    Ok(total)
}

/// `Σ_{σ ⊇ F_w} t^{dim σ - deg w}` over faces of `P_G` containing the
/// vertex face of `w`. Equals the f-polynomial of `P_{G∖w}`.
pub fn upper_f_polynomial(
    lattice: &FaceLattice,
    engine: &FaceEngine<'_>,
    w: NodeId,
) -> Result<FPolynomial> {
    let g = engine.graph();
    if w.index() >= g.node_count() {
        return Err(Error::UnknownNode(format!("#{}", w.index())));
    }
    let deg = g.degree(w) as i64;
    if deg == 0 {
        return Err(Error::Precondition("node has degree 0".into()));
    }
    let fw = engine.vertex_face(w)?;
    let mut counts = vec![0u64; (lattice.dim() - deg + 1) as usize];
    for f in lattice.faces_containing(&fw) {
        counts[(f.dim - deg) as usize] += 1;
    }
    Ok(FPolynomial::from_counts(&counts))
}
