//! Combinatorial realizability tests for polyhedra with all dihedral angles
//! π/2 or all π/3.
//!
//! The π/2 test evaluates four conditions: at least six faces, vertex degrees
//! in {3, 4}, no "face triple" whose outer faces meet, and no prismatic
//! 4-circuit. The π/3 test asks for a trivalent skeleton without prismatic
//! 3-circuits. Every failed condition carries witnesses.

use serde::Serialize;
use thiserror::Error;

use crate::polyhedron::{AbstractPolyhedron, AngleKind, Edge};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AndreevError {
    #[error("prismatic circuits are only enumerated for k = 3 or 4, got {0}")]
    UnsupportedK(usize),
}

/// A simple cycle of faces in which consecutive faces share an edge and the
/// shared edges are pairwise vertex-disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrismaticCircuit {
    pub k: usize,
    pub dual_nodes: Vec<usize>,
    /// `primal_edges[i]` separates `dual_nodes[i]` and `dual_nodes[i + 1]`.
    pub primal_edges: Vec<Edge>,
}

/// All prismatic k-circuits, sorted by their sorted face sets.
pub fn prismatic_circuits(p: &AbstractPolyhedron, k: usize) -> Result<Vec<PrismaticCircuit>, AndreevError> {
    if k != 3 && k != 4 {
        return Err(AndreevError::UnsupportedK(k));
    }
    let dual = p.dual();
    let edges = p.edges();
    let disjoint = |a: usize, b: usize| {
        let (x, y) = (edges[a], edges[b]);
        x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
    };

    let mut found = Vec::new();
    let mut path = Vec::with_capacity(k);
    let mut used = Vec::with_capacity(k);
    for start in 0..dual.node_count() {
        path.clear();
        used.clear();
        path.push(start);
        extend(&dual, start, k, &mut path, &mut used, &disjoint, &mut |path, used| {
            found.push(PrismaticCircuit {
                k,
                dual_nodes: path.to_vec(),
                primal_edges: used.iter().map(|&e| edges[e]).collect(),
            });
        });
    }
    found.sort_by_cached_key(|c| {
        let mut key = c.dual_nodes.clone();
        key.sort_unstable();
        (key, c.dual_nodes.clone())
    });
    Ok(found)
}

fn extend(
    dual: &crate::polyhedron::DualGraph,
    start: usize,
    k: usize,
    path: &mut Vec<usize>,
    used: &mut Vec<usize>,
    disjoint: &dyn Fn(usize, usize) -> bool,
    emit: &mut dyn FnMut(&[usize], &[usize]),
) {
    let last = *path.last().expect("path starts non-empty");
    if path.len() == k {
        // close the cycle; second < last fixes the direction
        if path[1] < path[k - 1] {
            if let Some(e) = dual.edge_between(last, start) {
                if used.iter().all(|&u| disjoint(u, e)) {
                    used.push(e);
                    emit(path, used);
                    used.pop();
                }
            }
        }
        return;
    }
    for &(next, e) in dual.neighbors(last) {
        if next <= start || path.contains(&next) {
            continue;
        }
        if !used.iter().all(|&u| disjoint(u, e)) {
            continue;
        }
        path.push(next);
        used.push(e);
        extend(dual, start, k, path, used, disjoint, emit);
        used.pop();
        path.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    Finite,
    Ideal,
    Unclassified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    #[serde(rename = "six-faces")]
    SixFaces,
    #[serde(rename = "vertex-degree")]
    VertexDegree,
    #[serde(rename = "face-triple")]
    FaceTriple,
    #[serde(rename = "prismatic-4-circuit")]
    Prismatic4,
    #[serde(rename = "trivalent")]
    Trivalent,
    #[serde(rename = "prismatic-3-circuit")]
    Prismatic3,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::SixFaces => "six-faces",
            Condition::VertexDegree => "vertex-degree",
            Condition::FaceTriple => "face-triple",
            Condition::Prismatic4 => "prismatic-4-circuit",
            Condition::Trivalent => "trivalent",
            Condition::Prismatic3 => "prismatic-3-circuit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    FaceCount { faces: usize },
    VertexDegree { vertex: usize, degree: usize },
    /// Faces `first` and `second` border `middle` along the vertex-disjoint
    /// edges `edges` and still meet at `shared_vertices`.
    FaceTriple {
        middle: usize,
        first: usize,
        second: usize,
        edges: [Edge; 2],
        shared_vertices: Vec<usize>,
    },
    Prismatic(PrismaticCircuit),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub n: usize,
    pub n_ideal: usize,
    pub n_finite: usize,
    pub f: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizabilityReport {
    pub kind: AngleKind,
    pub realizable: bool,
    pub conditions: Vec<ConditionResult>,
    pub witnesses: Vec<Witness>,
    pub vertex_classes: Vec<VertexClass>,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl RealizabilityReport {
    pub fn failed_conditions(&self) -> Vec<Condition> {
        self.conditions.iter().filter(|c| !c.passed).map(|c| c.condition).collect()
    }

    pub fn passed(&self, condition: Condition) -> Option<bool> {
        self.conditions.iter().find(|c| c.condition == condition).map(|c| c.passed)
    }

    fn assemble(
        kind: AngleKind,
        p: &AbstractPolyhedron,
        checks: Vec<(Condition, Vec<Witness>)>,
        vertex_classes: Vec<VertexClass>,
    ) -> Self {
        let mut conditions = Vec::new();
        let mut witnesses = Vec::new();
        for (condition, found) in checks {
            conditions.push(ConditionResult { condition, passed: found.is_empty() });
            witnesses.extend(found);
        }
        let count = |c| vertex_classes.iter().filter(|&&x| x == c).count();
        let counts = Counts {
            n: p.vertex_count(),
            n_ideal: count(VertexClass::Ideal),
            n_finite: count(VertexClass::Finite),
            f: p.face_count(),
        };
        Self {
            kind,
            realizable: conditions.iter().all(|c| c.passed),
            conditions,
            witnesses,
            vertex_classes,
            counts,
            diagnostics: Vec::new(),
        }
    }
}

/// Pairs of edges of face `f` with no common endpoint, together with the
/// faces across them, whenever those two faces share a vertex.
fn face_triple_violations(p: &AbstractPolyhedron) -> Vec<Witness> {
    let edges = p.edges();
    let mut out = Vec::new();
    for f in 0..p.face_count() {
        let fe = p.face_edges(f);
        for (i, &a) in fe.iter().enumerate() {
            for &b in &fe[i + 1..] {
                let (x, y) = (edges[a], edges[b]);
                if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                    continue;
                }
                let g = p.opposite_face(a, f);
                let h = p.opposite_face(b, f);
                let mut shared: Vec<usize> =
                    p.face(g).iter().copied().filter(|v| p.face(h).contains(v)).collect();
                if shared.is_empty() {
                    continue;
                }
                shared.sort_unstable();
                let (first, second, edges) = if g < h { (g, h, [x, y]) } else { (h, g, [y, x]) };
                out.push(Witness::FaceTriple { middle: f, first, second, edges, shared_vertices: shared });
            }
        }
    }
    out
}

fn prismatic_witnesses(p: &AbstractPolyhedron, k: usize) -> Vec<Witness> {
    prismatic_circuits(p, k)
        .expect("k is 3 or 4")
        .into_iter()
        .map(Witness::Prismatic)
        .collect()
}

/// Right-angled test. Degree-3 vertices are finite and degree-4 vertices
/// ideal.
pub fn check_pi2(p: &AbstractPolyhedron) -> RealizabilityReport {
    let faces = if p.face_count() >= 6 {
        Vec::new()
    } else {
        vec![Witness::FaceCount { faces: p.face_count() }]
    };
    let degrees = (0..p.vertex_count())
        .filter_map(|v| {
            let degree = p.vertex_degree(v);
            (degree != 3 && degree != 4).then_some(Witness::VertexDegree { vertex: v, degree })
        })
        .collect();
    let classes = (0..p.vertex_count())
        .map(|v| match p.vertex_degree(v) {
            3 => VertexClass::Finite,
            4 => VertexClass::Ideal,
            _ => VertexClass::Unclassified,
        })
        .collect();
    RealizabilityReport::assemble(
        AngleKind::Pi2,
        p,
        vec![
            (Condition::SixFaces, faces),
            (Condition::VertexDegree, degrees),
            (Condition::FaceTriple, face_triple_violations(p)),
            (Condition::Prismatic4, prismatic_witnesses(p, 4)),
        ],
        classes,
    )
}

/// π/3 test. All vertices of a realizable polyhedron are ideal.
pub fn check_pi3(p: &AbstractPolyhedron) -> RealizabilityReport {
    let degrees = (0..p.vertex_count())
        .filter_map(|v| {
            let degree = p.vertex_degree(v);
            (degree != 3).then_some(Witness::VertexDegree { vertex: v, degree })
        })
        .collect();
    let classes = (0..p.vertex_count())
        .map(|v| if p.vertex_degree(v) == 3 { VertexClass::Ideal } else { VertexClass::Unclassified })
        .collect();
    let mut report = RealizabilityReport::assemble(
        AngleKind::Pi3,
        p,
        vec![(Condition::Trivalent, degrees), (Condition::Prismatic3, prismatic_witnesses(p, 3))],
        classes,
    );
    if report.realizable && p.vertex_count() > 4 {
        if let Some(f) = (0..p.face_count()).find(|&f| p.face_degree(f) == 3) {
            report
                .diagnostics
                .push(format!("realizable with N > 4 but face {f} is a triangle"));
        }
    }
    report
}

/// Dispatches on the angle kind.
pub fn check(p: &AbstractPolyhedron, kind: AngleKind) -> RealizabilityReport {
    match kind {
        AngleKind::Pi2 => check_pi2(p),
        AngleKind::Pi3 => check_pi3(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::solids;

    #[test]
    fn unsupported_k() {
        assert_eq!(
            prismatic_circuits(&solids::cube(), 5),
            Err(AndreevError::UnsupportedK(5))
        );
    }

    #[test]
    fn octahedron_right_angled() {
        let r = check_pi2(&solids::octahedron());
        assert!(r.realizable);
        assert!(r.vertex_classes.iter().all(|&c| c == VertexClass::Ideal));
        assert_eq!(r.counts, Counts { n: 6, n_ideal: 6, n_finite: 0, f: 8 });
        // triangles make the face-triple condition vacuous
        assert!(face_triple_violations(&solids::octahedron()).is_empty());
    }

    #[test]
    fn dodecahedron_right_angled() {
        let r = check_pi2(&solids::dodecahedron());
        assert!(r.realizable);
        assert_eq!(r.counts.n_finite, 20);
    }

    #[test]
    fn cube_fails_only_on_prismatic_circuits() {
        let r = check_pi2(&solids::cube());
        assert!(!r.realizable);
        assert_eq!(r.failed_conditions(), vec![Condition::Prismatic4]);
        assert!(r.witnesses.iter().all(|w| matches!(w, Witness::Prismatic(c) if c.k == 4)));
    }

    #[test]
    fn pi3_examples() {
        assert!(check_pi3(&solids::tetrahedron()).realizable);
        assert!(check_pi3(&solids::cube()).realizable);
        let prism = check_pi3(&solids::prism(3));
        assert_eq!(prism.failed_conditions(), vec![Condition::Prismatic3]);
        let oct = check_pi3(&solids::octahedron());
        assert_eq!(oct.passed(Condition::Trivalent), Some(false));
    }

    #[test]
    fn report_serializes_with_stable_field_names() {
        let r = check_pi3(&solids::prism(3));
        let v = serde_json::to_value(&r).unwrap();
        for key in ["kind", "realizable", "conditions", "witnesses", "vertex_classes", "counts"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["kind"], "pi3");
        assert_eq!(v["witnesses"][0]["type"], "prismatic");
    }
}
