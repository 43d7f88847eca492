//! Abstract polyhedra: cell complexes on the 2-sphere given by their face
//! cycles.
//!
//! A polyhedron is accepted only when it looks like the boundary of a convex
//! Euclidean polyhedron at the level of incidence:
//!
//! - every edge lies in exactly two faces,
//! - the 1-skeleton is simple,
//! - `V - E + F = 2`,
//! - every face has at least three sides,
//! - the 1-skeleton is 3-connected.
//!
//! Faces are stored as given. No orientation is imposed on them; the checks
//! downstream only look at incidence. [`AbstractPolyhedron::oriented_faces`]
//! produces a coherent orientation when one is needed (planar_code output).

mod dual;
mod graph;
pub mod solids;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dual::{DualEdge, DualGraph};
pub use graph::{find_small_separator, is_three_connected, GraphError, SimpleGraph};

/// Unordered vertex pair stored as `(min, max)`.
pub type Edge = (usize, usize);

pub(crate) fn edge_key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The constant dihedral angle of an equiangular labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleKind {
    /// Every dihedral angle is π/2.
    Pi2,
    /// Every dihedral angle is π/3.
    Pi3,
}

impl AngleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AngleKind::Pi2 => "pi2",
            AngleKind::Pi3 => "pi3",
        }
    }
}

impl std::fmt::Display for AngleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for AngleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pi2" | "pi/2" => Ok(AngleKind::Pi2),
            "pi3" | "pi/3" => Ok(AngleKind::Pi3),
            other => Err(format!("unknown angle kind `{other}` (expected pi2 or pi3)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyhedronError {
    #[error("no faces given")]
    Empty,
    #[error("face {face} has {len} vertices, at least 3 are required")]
    FaceTooSmall { face: usize, len: usize },
    #[error("vertex {vertex} does not occur in any face; vertex indices must be dense from 0")]
    VertexGap { vertex: usize },
    #[error("edge {u}-{v} lies in {count} faces, expected exactly 2")]
    EdgeNotShared { u: usize, v: usize, count: usize },
    #[error("face {face} visits vertex {vertex} twice, so the 1-skeleton is not simple")]
    NotSimple { face: usize, vertex: usize },
    #[error("Euler characteristic V - E + F = {v} - {e} + {f} = {chi}, expected 2")]
    EulerViolation { v: usize, e: usize, f: usize, chi: i64 },
    #[error("1-skeleton is not 3-connected (separating vertices {separator:?})")]
    NotThreeConnected { separator: Vec<usize> },
}

/// Per-element degrees of a polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub vertex_degrees: Vec<usize>,
    pub face_degrees: Vec<usize>,
}

impl DegreeProfile {
    /// Degree → number of vertices with that degree.
    pub fn vertex_histogram(&self) -> BTreeMap<usize, usize> {
        histogram(&self.vertex_degrees)
    }

    /// Degree → number of faces with that degree.
    pub fn face_histogram(&self) -> BTreeMap<usize, usize> {
        histogram(&self.face_degrees)
    }

    pub fn min_face_degree(&self) -> usize {
        self.face_degrees.iter().copied().min().unwrap_or(0)
    }
}

fn histogram(values: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &d in values {
        *h.entry(d).or_insert(0) += 1;
    }
    h
}

/// The "faces-JSON" interchange shape: `{"faces": [[v, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesJson {
    pub faces: Vec<Vec<usize>>,
}

/// A validated abstract polyhedron, optionally carrying an equiangular label.
#[derive(Clone, Debug)]
pub struct AbstractPolyhedron {
    vertex_count: usize,
    faces: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    edge_faces: Vec<[usize; 2]>,
    edge_index: HashMap<Edge, usize>,
    adjacency: Vec<Vec<usize>>,
    vertex_faces: Vec<Vec<usize>>,
    label: Option<AngleKind>,
}

impl PartialEq for AbstractPolyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.faces == other.faces
            && self.label == other.label
    }
}

impl Eq for AbstractPolyhedron {}

impl AbstractPolyhedron {
    /// Builds and validates a polyhedron from its face cycles.
    pub fn from_face_cycles(faces: Vec<Vec<usize>>) -> Result<Self, PolyhedronError> {
        if faces.is_empty() {
            return Err(PolyhedronError::Empty);
        }
        for (i, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(PolyhedronError::FaceTooSmall { face: i, len: face.len() });
            }
            let mut sorted = face.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(PolyhedronError::NotSimple { face: i, vertex: w[0] });
            }
        }

        let vertex_count = faces.iter().flatten().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; vertex_count];
        for &v in faces.iter().flatten() {
            used[v] = true;
        }
        if let Some(vertex) = used.iter().position(|&u| !u) {
            return Err(PolyhedronError::VertexGap { vertex });
        }

        let mut incidence: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            for (u, v) in cycle_pairs(face) {
                incidence.entry(edge_key(u, v)).or_default().push(fi);
            }
        }
        let mut edges = Vec::with_capacity(incidence.len());
        let mut edge_faces = Vec::with_capacity(incidence.len());
        for (&(u, v), fs) in &incidence {
            if fs.len() != 2 {
                return Err(PolyhedronError::EdgeNotShared { u, v, count: fs.len() });
            }
            edges.push((u, v));
            edge_faces.push([fs[0], fs[1]]);
        }

        let (v, e, f) = (vertex_count, edges.len(), faces.len());
        let chi = v as i64 - e as i64 + f as i64;
        if chi != 2 {
            return Err(PolyhedronError::EulerViolation { v, e, f, chi });
        }

        let skeleton = SimpleGraph::from_edges(vertex_count, edges.iter().copied())
            .expect("edge keys are distinct and loop-free");
        match find_small_separator(&skeleton) {
            Ok(None) => {}
            Ok(Some(separator)) => return Err(PolyhedronError::NotThreeConnected { separator }),
            Err(_) => {
                return Err(PolyhedronError::NotThreeConnected { separator: Vec::new() });
            }
        }

        let adjacency = (0..vertex_count).map(|v| skeleton.neighbors(v).to_vec()).collect();
        let mut vertex_faces = vec![Vec::new(); vertex_count];
        for (fi, face) in faces.iter().enumerate() {
            for &v in face {
                vertex_faces[v].push(fi);
            }
        }
        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        Ok(Self {
            vertex_count,
            faces,
            edges,
            edge_faces,
            edge_index,
            adjacency,
            vertex_faces,
            label: None,
        })
    }

    pub fn from_faces_json(text: &str) -> Result<Self, FacesJsonError> {
        let parsed: FacesJson = serde_json::from_str(text)?;
        Ok(Self::from_face_cycles(parsed.faces)?)
    }

    pub fn to_faces_json(&self) -> FacesJson {
        FacesJson { faces: self.faces.clone() }
    }

    /// Attaches the equiangular labeling Θ ≡ π/2 or π/3.
    pub fn with_label(mut self, kind: AngleKind) -> Self {
        self.label = Some(kind);
        self
    }

    pub fn label(&self) -> Option<AngleKind> {
        self.label
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    /// Sorted list of edges; the position of an edge is its edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The two faces containing edge `e`.
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&edge_key(u, v)).copied()
    }

    /// Edge ids of face `f`, following its cycle.
    pub fn face_edges(&self, f: usize) -> Vec<usize> {
        cycle_pairs(&self.faces[f])
            .map(|(u, v)| self.edge_index[&edge_key(u, v)])
            .collect()
    }

    /// The face on the other side of edge `e` from face `f`.
    pub fn opposite_face(&self, e: usize, f: usize) -> usize {
        let [a, b] = self.edge_faces[e];
        if a == f {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Faces incident to vertex `v`, in increasing index order.
    pub fn faces_at_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_faces[v]
    }

    pub fn skeleton(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.vertex_count, self.edges.iter().copied())
            .expect("validated polyhedron has a simple skeleton")
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            vertex_degrees: (0..self.vertex_count).map(|v| self.vertex_degree(v)).collect(),
            face_degrees: self.faces.iter().map(Vec::len).collect(),
        }
    }

    pub fn dual(&self) -> DualGraph {
        DualGraph::of(self)
    }

    /// The dual polyhedron: one face per primal vertex listing the primal
    /// faces around it in cyclic order.
    pub fn dual_polyhedron(&self) -> AbstractPolyhedron {
        let faces = (0..self.vertex_count).map(|v| self.faces_around(v)).collect();
        AbstractPolyhedron::from_face_cycles(faces)
            .expect("dual of a valid polyhedron is a valid polyhedron")
    }

    /// Faces around vertex `v`, walking across the edges at `v`.
    pub fn faces_around(&self, v: usize) -> Vec<usize> {
        let incident = &self.vertex_faces[v];
        let start = incident[0];
        let mut ring = vec![start];
        let (mut current, mut via) = (start, self.edges_at_in_face(v, start)[0]);
        loop {
            let next = self.opposite_face(via, current);
            if next == start {
                break;
            }
            let [a, b] = self.edges_at_in_face(v, next);
            via = if a == via { b } else { a };
            ring.push(next);
            current = next;
        }
        ring
    }

    fn edges_at_in_face(&self, v: usize, f: usize) -> [usize; 2] {
        let face = &self.faces[f];
        let n = face.len();
        let i = face.iter().position(|&w| w == v).expect("vertex lies on face");
        let prev = face[(i + n - 1) % n];
        let next = face[(i + 1) % n];
        [self.edge_index[&edge_key(prev, v)], self.edge_index[&edge_key(v, next)]]
    }

    /// Face cycles re-oriented so every edge is traversed in opposite
    /// directions by its two faces. Face 0 keeps its given direction.
    pub fn oriented_faces(&self) -> Vec<Vec<usize>> {
        let mut faces = self.faces.clone();
        let mut done = vec![false; faces.len()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        done[0] = true;
        while let Some(f) = queue.pop_front() {
            let pairs: Vec<(usize, usize)> = cycle_pairs(&faces[f]).collect();
            for (u, v) in pairs {
                let e = self.edge_index[&edge_key(u, v)];
                let g = self.opposite_face(e, f);
                if done[g] {
                    continue;
                }
                if cycle_pairs(&faces[g]).any(|pair| pair == (u, v)) {
                    faces[g].reverse();
                }
                done[g] = true;
                queue.push_back(g);
            }
        }
        faces
    }

    /// Face cycles in canonical form, sorted: each cycle starts at its
    /// smallest vertex and runs towards the smaller of its two neighbours.
    /// Two polyhedra with equal canonical faces have identical incidence.
    pub fn canonical_faces(&self) -> Vec<Vec<usize>> {
        let mut faces: Vec<Vec<usize>> = self.faces.iter().map(|f| canonical_cycle(f)).collect();
        faces.sort();
        faces
    }
}

#[derive(Debug, Error)]
pub enum FacesJsonError {
    #[error("malformed faces-JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] PolyhedronError),
}

/// Consecutive pairs of a cyclic sequence, including the closing pair.
pub(crate) fn cycle_pairs(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = cycle.len();
    (0..n).map(move |i| (cycle[i], cycle[(i + 1) % n]))
}

/// Rotation/reflection normal form of a cycle.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let (start, _) = cycle.iter().enumerate().min_by_key(|&(_, v)| v).unwrap();
    let forward: Vec<usize> = (0..n).map(|i| cycle[(start + i) % n]).collect();
    let backward: Vec<usize> = (0..n).map(|i| cycle[(start + n - i) % n]).collect();
    forward.min(backward)
}
