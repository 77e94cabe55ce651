use serde_json::{json, Value};

use cosmoface_core::counting::{
    count_2faces_simple, count_edges, cycle_simplex_count, cycle_simplex_total, simplex_enumerate,
    unicyclic_simplex_total,
};
use cosmoface_core::lattice::{f_polynomial, face_lattice};
use cosmoface_core::multigraph::graph_stats;
use cosmoface_core::oracle::normalized_volume;
use cosmoface_core::tree::{tree_f_polynomial, tree_volume};
use cosmoface_core::verify::{verify, VerifyMode};
use cosmoface_core::{
    CosmologicalPolytope, Error, FPolynomial, FaceEngine, Limits, Multigraph, Result, SpecialFace,
};

/// One command's result in every output format.
pub struct Report {
    pub json: Value,
    pub csv: String,
    pub text: String,
}

pub enum Outcome {
    Done(Report),
    /// `verify` found a disagreement; the report carries the counterexample.
    Mismatch(Report),
}

fn quoted(items: &[String]) -> String {
    format!("\"{}\"", items.join(" "))
}

pub fn vertices(g: &Multigraph) -> Report {
    let p = CosmologicalPolytope::new(g.clone());
    let names = p.coordinate_names();
    let records = p.vertex_records();
    let mut csv = format!("label,{}\n", names.join(","));
    let mut text = format!(
        "{} vertices in coordinates ({})\n",
        records.len(),
        names.join(", ")
    );
    for r in &records {
        let coords: Vec<String> = r.coords.iter().map(ToString::to_string).collect();
        csv.push_str(&format!("{},{}\n", r.label, coords.join(",")));
        text.push_str(&format!("{:<12} ({})\n", r.label, coords.join(", ")));
    }
    Report {
        json: json!({ "coordinates": names, "vertices": records }),
        csv,
        text,
    }
}

pub fn facets(g: &Multigraph, limits: &Limits) -> Result<Report> {
    let p = CosmologicalPolytope::new(g.clone());
    let engine = FaceEngine::new(&p, limits)?;
    let facets = engine.all_facets(limits)?;
    let mut records = Vec::with_capacity(facets.len());
    let mut csv = String::from("nodes,edges,vertex_count,vertices\n");
    let mut text = format!("{} facets\n", facets.len());
    for f in &facets {
        let h = f.subgraph.describe(g);
        let labels = p.labels_of(&f.vertex_set);
        csv.push_str(&format!(
            "{},{},{},{}\n",
            quoted(&h.nodes),
            quoted(&h.edges),
            labels.len(),
            quoted(&labels)
        ));
        text.push_str(&format!(
            "H = {{{}}} / {{{}}}: {}\n",
            h.nodes.join(", "),
            h.edges.join(", "),
            labels.join(" ")
        ));
        records.push(json!({
            "subgraph": h,
            "vertices": labels,
            "certificate": f.functional.record(&p),
        }));
    }
    Ok(Report {
        json: json!({ "count": facets.len(), "facets": records }),
        csv,
        text,
    })
}

pub fn faces(g: &Multigraph, limits: &Limits, max_dim: Option<i64>) -> Result<Report> {
    let p = CosmologicalPolytope::new(g.clone());
    let lattice = face_lattice(&p, limits)?;
    let record = lattice.record(&p, max_dim);
    let mut text = format!("f-vector ({})\n", record.f_vector.join(", "));
    for f in &record.faces {
        text.push_str(&format!("dim {:>2}: {}\n", f.dim, f.vertices.join(" ")));
    }
    Ok(Report {
        json: serde_json::to_value(&record).expect("serializable"),
        csv: lattice.to_csv(&p, max_dim),
        text,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FvectorMethod {
    Enum,
    Tree,
}

fn polynomial_report(method: &str, f: &FPolynomial) -> Report {
    let coeffs = f.to_strings();
    let total = f.eval(1).to_string();
    let mut csv = String::from("dim,count\n");
    for (k, c) in coeffs.iter().enumerate() {
        csv.push_str(&format!("{},{c}\n", k as i64 - 1));
    }
    Report {
        json: json!({
            "method": method,
            "dim": f.dim(),
            "coefficients": coeffs,
            "total": total,
        }),
        csv,
        text: format!("f(t) = {f}\nf(1) = {total}\n"),
    }
}

pub fn fvector(g: &Multigraph, limits: &Limits, method: FvectorMethod) -> Result<Report> {
    match method {
        FvectorMethod::Enum => Ok(polynomial_report("enum", &f_polynomial(g, limits)?)),
        FvectorMethod::Tree => Ok(polynomial_report("tree", &tree_f_polynomial(g)?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexMethod {
    Formula,
    Enum,
}

fn cycle_length(g: &Multigraph) -> Option<usize> {
    let n = g.node_count();
    (n >= 3 && g.edge_count() == n && g.is_connected() && g.nodes().all(|v| g.degree(v) == 2))
        .then_some(n)
}

pub fn simplex_count(g: &Multigraph, limits: &Limits, method: SimplexMethod) -> Result<Report> {
    let (by_size, total): (Option<Vec<(usize, String)>>, String) = match method {
        SimplexMethod::Enum => {
            let p = CosmologicalPolytope::new(g.clone());
            let engine = FaceEngine::new(&p, limits)?;
            let counts = simplex_enumerate(&engine, p.vertex_count(), limits)?;
            let rows = counts
                .by_size
                .iter()
                .map(|(k, c)| (*k, c.to_string()))
                .collect();
            (Some(rows), counts.total().to_string())
        }
        SimplexMethod::Formula => {
            if let Some(n) = cycle_length(g) {
                let rows = (1..=2 * n)
                    .map(|k| cycle_simplex_count(n, k).map(|c| (k, c.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                (Some(rows), cycle_simplex_total(n)?.to_string())
            } else {
                match unicyclic_simplex_total(g, limits) {
                    Ok(t) => (None, t.to_string()),
                    Err(Error::Precondition(why)) => {
                        return Err(Error::Precondition(format!(
                            "no closed form applies ({why}); use --method enum"
                        )))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    };
    let method_name = match method {
        SimplexMethod::Formula => "formula",
        SimplexMethod::Enum => "enum",
    };
    let mut csv = String::from("k,count\n");
    let mut text = String::new();
    let mut map = serde_json::Map::new();
    for (k, c) in by_size.iter().flatten() {
        csv.push_str(&format!("{k},{c}\n"));
        text.push_str(&format!("k = {k}: {c}\n"));
        map.insert(k.to_string(), Value::String(c.clone()));
    }
    csv.push_str(&format!("total,{total}\n"));
    text.push_str(&format!("total: {total}\n"));
    Ok(Report {
        json: json!({
            "method": method_name,
            "by_size": by_size.map(|_| Value::Object(map)),
            "total": total,
        }),
        csv,
        text,
    })
}

pub fn special_faces(g: &Multigraph, limits: &Limits) -> Result<Report> {
    let p = CosmologicalPolytope::new(g.clone());
    let engine = FaceEngine::new(&p, limits)?;
    let mut records = Vec::new();
    let mut csv = String::from("kind,where,dim,vertices\n");
    let mut text = String::new();
    for sf in engine.minimal_nonsimplex_faces() {
        let labels = p.labels_of(sf.face());
        let dim = sf.dim(g);
        match &sf {
            SpecialFace::Vertex { node, .. } => {
                let node = g.node_label(*node);
                csv.push_str(&format!("vertex,{node},{dim},{}\n", quoted(&labels)));
                text.push_str(&format!(
                    "vertex face at {node} (dim {dim}): {}\n",
                    labels.join(" ")
                ));
                records.push(
                    json!({ "kind": "vertex", "node": node, "dim": dim, "vertices": labels }),
                );
            }
            SpecialFace::Cycle { cycle, .. } => {
                let nodes: Vec<String> = cycle
                    .nodes()
                    .iter()
                    .map(|&v| g.node_label(v).to_string())
                    .collect();
                let edges: Vec<String> = cycle
                    .edges()
                    .iter()
                    .map(|&e| g.edge_label(e).to_string())
                    .collect();
                let facets: Vec<Vec<String>> = engine
                    .cycle_face_facets(cycle)?
                    .iter()
                    .map(|f| p.labels_of(f))
                    .collect();
                csv.push_str(&format!(
                    "cycle,{},{dim},{}\n",
                    quoted(&nodes),
                    quoted(&labels)
                ));
                text.push_str(&format!(
                    "cycle face on {} (dim {dim}, {} facets): {}\n",
                    nodes.join("-"),
                    facets.len(),
                    labels.join(" ")
                ));
                records.push(json!({
                    "kind": "cycle",
                    "nodes": nodes,
                    "edges": edges,
                    "dim": dim,
                    "vertices": labels,
                    "facets": facets,
                }));
            }
        }
    }
    Ok(Report {
        json: json!({ "faces": records }),
        csv,
        text,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VolumeMethod {
    Triangulation,
    Tree,
}

pub fn volume(g: &Multigraph, limits: &Limits, method: VolumeMethod) -> Result<Report> {
    let (name, vol) = match method {
        VolumeMethod::Triangulation => ("triangulation", normalized_volume(g, limits)?.to_string()),
        VolumeMethod::Tree => ("tree", tree_volume(g)?.to_string()),
    };
    Ok(Report {
        json: json!({ "method": name, "volume": vol }),
        csv: format!("method,volume\n{name},{vol}\n"),
        text: format!("normalized volume: {vol}\n"),
    })
}

pub fn run_verify(g: &Multigraph, limits: &Limits, mode: VerifyMode) -> Result<Outcome> {
    let p = CosmologicalPolytope::new(g.clone());
    let report = verify(&p, limits, mode)?;
    let mode_json = match mode {
        VerifyMode::Exhaustive => json!({ "kind": "exhaustive" }),
        VerifyMode::Sampled { samples, seed } => {
            json!({ "kind": "sampled", "samples": samples, "seed": seed })
        }
    };
    let mut text = format!(
        "checked {} subsets, {} mismatches\n",
        report.checked, report.mismatches
    );
    let mut csv = format!(
        "checked,mismatches\n{},{}\n",
        report.checked, report.mismatches
    );
    if let Some(m) = &report.counterexample {
        text.push_str(&format!(
            "counterexample: {{{}}} criterion={} oracle={}\n",
            m.vertices.join(" "),
            m.criterion,
            m.oracle
        ));
        csv.push_str(&format!("counterexample,{}\n", quoted(&m.vertices)));
    }
    let out = Report {
        json: json!({
            "mode": mode_json,
            "checked": report.checked,
            "mismatches": report.mismatches,
            "counterexample": report.counterexample,
        }),
        csv,
        text,
    };
    Ok(if report.passed() {
        Outcome::Done(out)
    } else {
        Outcome::Mismatch(out)
    })
}

pub fn counts(g: &Multigraph, limits: &Limits) -> Result<Report> {
    let edges = count_edges(g, limits)?.to_string();
    let two_faces = match count_2faces_simple(g, limits) {
        Ok(c) => Some(c.to_string()),
        Err(Error::NotSimple(..)) => None,
        Err(e) => return Err(e),
    };
    let stats = graph_stats(g, limits)?;
    let two_text = two_faces
        .clone()
        .unwrap_or_else(|| "n/a (parallel edges)".into());
    Ok(Report {
        json: json!({ "edges": edges, "two_faces": two_faces, "stats": stats }),
        csv: format!(
            "edges,two_faces\n{edges},{}\n",
            two_faces.clone().unwrap_or_default()
        ),
        text: format!("edges of P_G: {edges}\nproper 2-faces: {two_text}\n"),
    })
}
