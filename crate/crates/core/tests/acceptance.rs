//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use cosmoface_core::counting::{
    banana_2faces, count_2faces_simple, count_edges, cycle_simplex_count, cycle_simplex_total,
    simplex_enumerate, unicyclic_simplex_total,
};
use cosmoface_core::lattice::{f_polynomial, upper_f_polynomial};
use cosmoface_core::multigraph::connected_subgraphs;
use cosmoface_core::oracle::{affine_rank, normalized_volume};
use cosmoface_core::tree::{
    path_f_polynomial, pyramid_bipyramid_structure, tree_f_polynomial, tree_volume,
};
use cosmoface_core::verify::{verify, VerifyMode};
use cosmoface_core::{
    catalog, CosmologicalPolytope, FPolynomial, FaceEngine, FaceLattice, Limits, Multigraph,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type PinnedCounts = (&'static str, Multigraph, Option<(u64, u64)>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fp(c: &[i64]) -> FPolynomial {
    FPolynomial::from_i64(c)
}

struct Built {
    polytope: CosmologicalPolytope,
    lattice: FaceLattice,
}

fn build(g: &Multigraph) -> Result<Built, String> {
    let limits = Limits::default();
    let polytope = CosmologicalPolytope::new(g.clone());
    let lattice = {
        let engine = FaceEngine::new(&polytope, &limits).map_err(|e| e.to_string())?;
        FaceLattice::build(&engine, &limits).map_err(|e| e.to_string())?
    };
    Ok(Built { polytope, lattice })
}

fn prism() -> Outcome {
    let g = Multigraph::banana(2);
    let b = build(&g)?;
    ensure!(
        b.lattice.f_vector() == vec![1, 6, 9, 5, 1],
        "f-vector {:?}",
        b.lattice.f_vector()
    );
    let facets: Vec<_> = b.lattice.faces_of_dim(2).collect();
    let quads = facets.iter().filter(|f| f.set.len() == 4).count();
    let tris = facets.iter().filter(|f| f.set.len() == 3).count();
    ensure!(
        facets.len() == 5 && quads == 3 && tris == 2,
        "{quads} quads, {tris} triangles"
    );
    let engine = FaceEngine::new(&b.polytope, &Limits::default()).map_err(|e| e.to_string())?;
    ensure!(
        engine.all_facets(&Limits::default()).unwrap().len() == 5,
        "facet count from subgraphs"
    );
    Ok("f = (1,6,9,5,1); 3 quadrilaterals + 2 triangles".into())
}

fn path_recursion() -> Outcome {
    ensure!(path_f_polynomial(1) == FPolynomial::point(), "f_Π1");
    ensure!(path_f_polynomial(2) == fp(&[1, 3, 3, 1]), "f_Π2");
    let totals: Vec<BigInt> = (1..=8).map(|n| path_f_polynomial(n).eval(1)).collect();
    for n in 2..totals.len() {
        let expected = (&totals[n - 1] * 3 - &totals[n - 2] * 2) * 2;
        ensure!(
            totals[n] == expected,
            "total at n={} is {}",
            n + 1,
            totals[n]
        );
    }
    ensure!(
        totals[..5] == [2, 8, 40, 208, 1088].map(BigInt::from),
        "totals {totals:?}"
    );
    for n in 1..=4 {
        let enumerated =
            f_polynomial(&Multigraph::path(n), &Limits::default()).map_err(|e| e.to_string())?;
        ensure!(
            enumerated == path_f_polynomial(n),
            "enumeration differs at n={n}"
        );
    }
    let shown: Vec<String> = totals.iter().map(ToString::to_string).collect();
    Ok(format!("totals {}", shown.join(", ")))
}

fn criterion_vs_oracle() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for (name, g) in catalog::connected_up_to_three_edges() {
        let p = CosmologicalPolytope::new(g);
        let r = verify(&p, &limits, VerifyMode::Exhaustive).map_err(|e| e.to_string())?;
        ensure!(r.checked == 1 << p.vertex_count(), "{name}: not exhaustive");
        ensure!(r.passed(), "{name}: {:?}", r.counterexample);
        checked += r.checked;
    }
    for (name, g) in catalog::four_edge_samples() {
        let p = CosmologicalPolytope::new(g);
        let mode = VerifyMode::Sampled {
            samples: 10_000,
            seed: 20_240_917,
        };
        let r = verify(&p, &limits, mode).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{name}: {:?}", r.counterexample);
        checked += r.checked;
    }
    Ok(format!("{checked} subsets, 0 mismatches"))
}

fn facet_bijection() -> Outcome {
    let limits = Limits::default();
    let expected = [("B2", 5), ("P3", 6), ("C3", 10)];
    let graphs = catalog::connected_up_to_three_edges()
        .into_iter()
        .chain(catalog::four_edge_samples());
    for (name, g) in graphs {
        let p = CosmologicalPolytope::new(g.clone());
        let engine = FaceEngine::new(&p, &limits).map_err(|e| e.to_string())?;
        let facets = engine.all_facets(&limits).map_err(|e| e.to_string())?;
        let subgraphs = connected_subgraphs(&g, &limits)
            .map_err(|e| e.to_string())?
            .len();
        ensure!(
            facets.len() == subgraphs,
            "{name}: {} facets, {subgraphs} subgraphs",
            facets.len()
        );
        if let Some(&(_, n)) = expected.iter().find(|(k, _)| *k == name) {
            ensure!(facets.len() == n, "{name}: expected {n} facets");
        }
        let dim = affine_rank(&p.coordinates(&p.full_set()));
        let mut sets: Vec<_> = facets.iter().map(|f| f.vertex_set.clone()).collect();
        sets.sort();
        sets.dedup();
        ensure!(sets.len() == facets.len(), "{name}: repeated facet");
        for f in &facets {
            ensure!(
                f.functional.certifies(&p, &f.vertex_set),
                "{name}: certificate fails"
            );
            ensure!(
                affine_rank(&p.coordinates(&f.vertex_set)) + 1 == dim,
                "{name}: facet is not of codimension one"
            );
        }
    }
    Ok("B2: 5, P3: 6, C3: 10; all certificates verify".into())
}

fn counting_formulas() -> Outcome {
    let limits = Limits::default();
    let expected: [PinnedCounts; 5] = [
        ("P3", Multigraph::path(3), Some((13, 13))),
        ("C3", Multigraph::cycle(3), Some((30, 46))),
        ("P4", Multigraph::path(4), None),
        ("K1,3", Multigraph::star(3), None),
        ("C4", Multigraph::cycle(4), None),
    ];
    let mut shown = Vec::new();
    for (name, g, pinned) in expected {
        let fv = build(&g)?.lattice.f_vector();
        let e = count_edges(&g, &limits).map_err(|e| e.to_string())?;
        let t = count_2faces_simple(&g, &limits).map_err(|e| e.to_string())?;
        ensure!(e == BigUint::from(fv[2]), "{name}: edges {e} vs {}", fv[2]);
        ensure!(
            t == BigUint::from(fv[3]),
            "{name}: 2-faces {t} vs {}",
            fv[3]
        );
        if let Some((pe, pt)) = pinned {
            ensure!(
                e == BigUint::from(pe) && t == BigUint::from(pt),
                "{name}: pinned values"
            );
        }
        shown.push(format!("{name} ({e}, {t})"));
    }
    Ok(shown.join(", "))
}

fn banana() -> Outcome {
    for (k, want) in [(2usize, 5u64), (3, 24)] {
        let f = banana_2faces(k);
        ensure!(f == BigUint::from(want), "B{k}: formula {f}");
        let enumerated = build(&Multigraph::banana(k))?.lattice.f_vector()[3];
        ensure!(enumerated == want, "B{k}: enumeration {enumerated}");
    }
    Ok("B2: 5, B3: 24".into())
}

fn enumerate(g: &Multigraph) -> Result<cosmoface_core::counting::SimplexCounts, String> {
    let limits = Limits::default();
    let p = CosmologicalPolytope::new(g.clone());
    let engine = FaceEngine::new(&p, &limits).map_err(|e| e.to_string())?;
    simplex_enumerate(&engine, p.vertex_count(), &limits).map_err(|e| e.to_string())
}

fn cycle_simplices() -> Outcome {
    for (n, want) in [(3usize, 109u64), (4, 593)] {
        let total = cycle_simplex_total(n).map_err(|e| e.to_string())?;
        let counts = enumerate(&Multigraph::cycle(n))?;
        ensure!(total == BigUint::from(want), "C{n}: formula {total}");
        ensure!(
            counts.total() == want,
            "C{n}: enumeration {}",
            counts.total()
        );
        for k in 1..=2 * n {
            let f = cycle_simplex_count(n, k).map_err(|e| e.to_string())?;
            ensure!(
                f == BigUint::from(counts.get(k)),
                "C{n}, k={k}: {f} vs {}",
                counts.get(k)
            );
        }
    }
    Ok("C3: 109, C4: 593; per-k counts match for 1 <= k <= 2n (k = 2n corrected)".into())
}

fn unicyclic() -> Outcome {
    let g = catalog::cycle_with_pendants(3, 1);
    let f = unicyclic_simplex_total(&g, &Limits::default()).map_err(|e| e.to_string())?;
    let counted = enumerate(&g)?.total();
    ensure!(f == BigUint::from(659u32), "formula {f}");
    ensure!(counted == 659, "enumeration {counted}");
    Ok("C3+pendant: 659".into())
}

fn volumes() -> Outcome {
    let limits = Limits::default();
    let trees = [
        ("P2", Multigraph::path(2), 4),
        ("P3", Multigraph::path(3), 16),
        ("P4", Multigraph::path(4), 64),
        ("K1,3", Multigraph::star(3), 64),
    ];
    for (name, t, want) in trees {
        let v = normalized_volume(&t, &limits).map_err(|e| e.to_string())?;
        ensure!(v == BigInt::from(want), "{name}: triangulation gives {v}");
        let closed = tree_volume(&t).map_err(|e| e.to_string())?;
        ensure!(
            closed == BigUint::from(want as u32),
            "{name}: tree_volume gives {closed}"
        );
    }
    Ok("4, 16, 64, 64".into())
}

fn special_faces() -> Outcome {
    let limits = Limits::default();
    let star = build(&Multigraph::star(3))?;
    let engine = FaceEngine::new(&star.polytope, &limits).map_err(|e| e.to_string())?;
    let center = star
        .polytope
        .graph()
        .node_by_label("v1")
        .map_err(|e| e.to_string())?;
    let face = engine.vertex_face(center).map_err(|e| e.to_string())?;
    let octahedron = star.lattice.face_f_polynomial(&face);
    ensure!(
        octahedron == fp(&[1, 6, 12, 8, 1]),
        "vertex face f = {octahedron}"
    );

    let cyc = build(&Multigraph::cycle(3))?;
    let engine = FaceEngine::new(&cyc.polytope, &limits).map_err(|e| e.to_string())?;
    let cycle = engine.cycles()[0].clone();
    let face = engine.cycle_face(&cycle).map_err(|e| e.to_string())?;
    ensure!(face.len() == 6, "cycle face has {} vertices", face.len());
    ensure!(
        cyc.lattice.dimension_of(&face) == Some(4),
        "cycle face dimension"
    );
    let mut facets: Vec<_> = cyc
        .lattice
        .facets_of(&face)
        .into_iter()
        .map(|f| f.set.clone())
        .collect();
    facets.sort();
    ensure!(facets.len() == 9, "{} facets", facets.len());
    ensure!(facets.iter().all(|f| f.len() == 4), "nonsimplex facet");
    let gale = engine
        .cycle_face_facets(&cycle)
        .map_err(|e| e.to_string())?;
    ensure!(
        facets == gale,
        "facets differ from the evenness complements"
    );
    Ok("octahedron (6, 12, 8); C3 cycle face: 6 vertices, dim 4, 9 simplex facets".into())
}

fn pyramids() -> Outcome {
    let limits = Limits::default();
    let cases = [
        ("P2 -> P3", Multigraph::path(2), "v2"),
        ("P3 -> P4", Multigraph::path(3), "v3"),
        ("K1,2 -> K1,3", Multigraph::star(2), "v1"),
    ];
    for (name, g, w) in cases {
        let w = g.node_by_label(w).map_err(|e| e.to_string())?;
        let r = pyramid_bipyramid_structure(&g, w, &limits).map_err(|e| e.to_string())?;
        ensure!(r.pass, "{name}: {:?} {:?}", r.failures, r.counterexample);
    }
    let mut pairs = 0;
    for g in [
        Multigraph::path(3),
        Multigraph::path(4),
        Multigraph::star(3),
    ] {
        let p = CosmologicalPolytope::new(g.clone());
        let engine = FaceEngine::new(&p, &limits).map_err(|e| e.to_string())?;
        let lattice = FaceLattice::build(&engine, &limits).map_err(|e| e.to_string())?;
        for w in g.nodes() {
            let upper = upper_f_polynomial(&lattice, &engine, w).map_err(|e| e.to_string())?;
            let deleted = tree_f_polynomial(&g.without_node(w)).map_err(|e| e.to_string())?;
            ensure!(
                upper == deleted,
                "{g} at {}: {upper} vs {deleted}",
                g.node_label(w)
            );
            pairs += 1;
        }
    }
    Ok(format!(
        "3 structure reports pass; upper f-polynomial identity on {pairs} (G, w) pairs"
    ))
}

fn global_properties() -> Outcome {
    let limits = Limits::default();
    let graphs = catalog::connected_up_to_three_edges()
        .into_iter()
        .chain(catalog::four_edge_samples());
    let mut polys = 0;
    for (name, g) in graphs {
        let b = build(&g)?;
        for v in b.polytope.vertices() {
            ensure!(
                v.coords.iter().sum::<i64>() == 1,
                "{name}: generator off the hyperplane"
            );
        }
        ensure!(
            b.lattice.is_intersection_closed(),
            "{name}: lattice not intersection-closed"
        );
        let mut computed = vec![b.lattice.f_polynomial()];
        for w in g.nodes() {
            computed.push(f_polynomial(&g.without_node(w), &limits).map_err(|e| e.to_string())?);
        }
        for f in b.lattice.faces().iter().filter(|f| f.dim >= 0) {
            computed.push(b.lattice.face_f_polynomial(&f.set));
        }
        for f in &computed {
            ensure!(f.satisfies_euler(), "{name}: {f} fails Euler");
        }
        polys += computed.len();
    }
    for n in 1..=12 {
        ensure!(path_f_polynomial(n).satisfies_euler(), "path {n}");
        polys += 1;
    }
    Ok(format!("{polys} f-polynomials vanish at -1"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("prism reproduction", prism),
        ("path recursion", path_recursion),
        ("criterion vs oracle", criterion_vs_oracle),
        ("facet bijection", facet_bijection),
        ("counting formulas", counting_formulas),
        ("banana 2-faces", banana),
        ("cycle simplices", cycle_simplices),
        ("unicyclic simplices", unicyclic),
        ("tree volumes", volumes),
        ("special faces", special_faces),
        ("pyramid/bipyramid", pyramids),
        ("global properties", global_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
