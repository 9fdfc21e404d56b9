//! Deterministic JSON and DOT renderings of spectra and solver output.

use serde::Serialize;

use crate::error::Result;
use crate::ring::{RingElement, RingHandle};
use crate::spectrum::SpectrumGraph;

#[derive(Serialize)]
pub struct SpectrumPointJson {
    pub id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    pub maximal: bool,
    pub minimal: bool,
}

#[derive(Serialize)]
pub struct SpectrumJson {
    pub points: Vec<SpectrumPointJson>,
    pub order: Vec<[usize; 2]>,
}

pub fn spectrum_json(ring: &RingHandle, spec: &SpectrumGraph) -> SpectrumJson {
    let points = spec
        .points
        .iter()
        .map(|p| {
            let elements = p.ideal.elements().map(|e| e.to_vec());
            let symbol = if ring.is_finite() {
                None
            } else {
                Some(p.symbol.clone())
            };
            SpectrumPointJson {
                id: p.id,
                elements,
                symbol,
                maximal: p.maximal,
                minimal: p.minimal,
            }
        })
        .collect();
    let mut order = Vec::new();
    for i in 0..spec.len() {
        for j in 0..spec.len() {
            if i != j && spec.le[i][j] {
                order.push([i, j]);
            }
        }
    }
    SpectrumJson { points, order }
}

/// Digraph of the covering relation: an edge `i -> j` iff the i-th prime is
/// properly contained in the j-th with nothing in between.
pub fn spectrum_dot(spec: &SpectrumGraph) -> String {
    let mut out = String::from("digraph spectrum {\n");
    for p in &spec.points {
        out.push_str(&format!("  p{} [label=\"{}\"];\n", p.id, p.symbol));
    }
    for i in 0..spec.len() {
        for j in 0..spec.len() {
            if i == j || !spec.le[i][j] {
                continue;
            }
            let covering = (0..spec.len())
                .all(|k| k == i || k == j || !(spec.le[i][k] && spec.le[k][j]));
            if covering {
                out.push_str(&format!("  p{i} -> p{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
pub struct PlanJson {
    pub idempotents: Vec<RingElement>,
}

#[derive(Serialize)]
pub struct SolveJson {
    pub status: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assignment: Vec<RingElement>,
    pub plan: PlanJson,
}

pub fn solve_json(ring: &RingHandle, sys: &crate::poly::PolySystem) -> Result<SolveJson> {
    let plan = crate::construct::build_gluing_plan(ring, crate::construct::GluingMode::Max)?;
    let idempotents = plan.parts.iter().map(|p| p.idempotent.clone()).collect();
    let solution = crate::construct::solve_local_global(ring, sys)?;
    Ok(match solution {
        Some(assignment) => SolveJson {
            status: "solved".into(),
            assignment,
            plan: PlanJson { idempotents },
        },
        None => SolveJson {
            status: "unsolvable".into(),
            assignment: Vec::new(),
            plan: PlanJson { idempotents },
        },
    })
}
