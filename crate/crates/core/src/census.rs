//! planar_code streams, catalog records and bulk annotation.
//!
//! A planar_code stream is an optional `>>planar_code<<` header followed by
//! records. Each record is a vertex count byte `n`, then for each vertex its
//! clockwise neighbours as 1-based bytes closed by a 0 byte.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::andreev::{self, RealizabilityReport, Witness};
use crate::bounds::{self, VolumeCase};
use crate::polyhedron::{AbstractPolyhedron, AngleKind, PolyhedronError};

pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CensusError {
    #[error("stream starts with '>>' but not with the >>planar_code<< header")]
    BadHeader,
    #[error("record starting at byte {record_start} is truncated at byte {offset}")]
    TruncatedRecord { record_start: usize, offset: usize },
    #[error("record at byte {record_start}: vertex {vertex} lists {neighbor} {forward} time(s) but the reverse appears {backward} time(s)")]
    InconsistentRotation { record_start: usize, vertex: usize, neighbor: usize, forward: usize, backward: usize },
    #[error("record at byte {record_start}: neighbour {value} out of range 1..={n}")]
    NeighborOutOfRange { record_start: usize, value: usize, n: usize },
    #[error("unsupported record at byte {offset}: {reason}")]
    Unsupported { offset: usize, reason: &'static str },
    #[error("graph has a loop or repeated edge at vertex {0}")]
    NotSimple(usize),
    #[error("rotation system has Euler characteristic {0}, not a sphere")]
    NotSpherical(i64),
    #[error(transparent)]
    Validation(#[from] PolyhedronError),
    #[error("too many vertices for planar_code records: {0}")]
    TooLarge(usize),
}

impl CensusError {
    /// Errors after which the rest of the stream cannot be located.
    pub fn is_framing(&self) -> bool {
        matches!(
            self,
            CensusError::BadHeader | CensusError::TruncatedRecord { .. } | CensusError::Unsupported { .. }
        )
    }
}

/// A graph with a clockwise rotation at each vertex (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbeddedGraph {
    pub rotations: Vec<Vec<usize>>,
}

impl PlanarEmbeddedGraph {
    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }
}

pub fn has_header(bytes: &[u8]) -> bool {
    bytes.starts_with(HEADER)
}

fn body_start(bytes: &[u8]) -> Result<usize, CensusError> {
    if has_header(bytes) {
        Ok(HEADER.len())
    } else if bytes.starts_with(b">>") {
        Err(CensusError::BadHeader)
    } else {
        Ok(0)
    }
}

/// Splits one record at `start`, returning the raw rotations and the offset
/// after it. Only framing problems are reported here.
fn frame(bytes: &[u8], start: usize) -> Result<(Vec<Vec<usize>>, usize), CensusError> {
    let n = bytes[start] as usize;
    if n == 0 {
        return Err(CensusError::Unsupported { offset: start, reason: "zero vertex count (large-graph form)" });
    }
    let mut pos = start + 1;
    let mut rotations = Vec::with_capacity(n);
    for _ in 0..n {
        let mut list = Vec::new();
        loop {
            let Some(&b) = bytes.get(pos) else {
                return Err(CensusError::TruncatedRecord { record_start: start, offset: bytes.len() });
            };
            pos += 1;
            if b == 0 {
                break;
            }
            list.push(b as usize);
        }
        rotations.push(list);
    }
    Ok((rotations, pos))
}

fn check_rotations(raw: Vec<Vec<usize>>, record_start: usize) -> Result<PlanarEmbeddedGraph, CensusError> {
    let n = raw.len();
    for list in &raw {
        if let Some(&value) = list.iter().find(|&&w| w == 0 || w > n) {
            return Err(CensusError::NeighborOutOfRange { record_start, value, n });
        }
    }
    let rotations: Vec<Vec<usize>> =
        raw.into_iter().map(|l| l.into_iter().map(|w| w - 1).collect()).collect();
    for (v, list) in rotations.iter().enumerate() {
        for &w in list {
            let forward = list.iter().filter(|&&x| x == w).count();
            let backward = rotations[w].iter().filter(|&&x| x == v).count();
            if forward != backward {
                return Err(CensusError::InconsistentRotation { record_start, vertex: v, neighbor: w, forward, backward });
            }
        }
    }
    Ok(PlanarEmbeddedGraph { rotations })
}

/// A record's byte offset and its parse result.
pub type OffsetRecord = (usize, Result<PlanarEmbeddedGraph, CensusError>);

/// Every record with its byte offset. Per-record consistency errors are
/// returned in place; a framing error ends the stream.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<OffsetRecord>, CensusError> {
    let mut pos = body_start(bytes)?;
    let mut out = Vec::new();
    while pos < bytes.len() {
        let (raw, next) = frame(bytes, pos)?;
        out.push((pos, check_rotations(raw, pos)));
        pos = next;
    }
    Ok(out)
}

/// Strict parse: the first error of any kind is returned.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlanarEmbeddedGraph>, CensusError> {
    read_planar_code(bytes)?.into_iter().map(|(_, g)| g).collect()
}

pub fn write_planar_code(graphs: &[PlanarEmbeddedGraph], header: bool) -> Result<Vec<u8>, CensusError> {
    let mut out = Vec::new();
    if header {
        out.extend_from_slice(HEADER);
    }
    for g in graphs {
        let n = g.vertex_count();
        if n == 0 || n > 255 {
            return Err(CensusError::TooLarge(n));
        }
        out.push(n as u8);
        for list in &g.rotations {
            out.extend(list.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}

/// Faces of the embedding: after arriving at `v` from `u`, leave towards the
/// neighbour following `u` in the clockwise rotation at `v`.
pub fn to_polyhedron(g: &PlanarEmbeddedGraph) -> Result<AbstractPolyhedron, CensusError> {
    let n = g.vertex_count();
    let mut pos: Vec<std::collections::HashMap<usize, usize>> = Vec::with_capacity(n);
    for (v, list) in g.rotations.iter().enumerate() {
        let mut map = std::collections::HashMap::new();
        for (i, &w) in list.iter().enumerate() {
            if w == v || map.insert(w, i).is_some() {
                return Err(CensusError::NotSimple(v));
            }
        }
        pos.push(map);
    }
    let mut used: Vec<Vec<bool>> = g.rotations.iter().map(|l| vec![false; l.len()]).collect();
    let mut faces = Vec::new();
    for u0 in 0..n {
        for i0 in 0..g.rotations[u0].len() {
            if used[u0][i0] {
                continue;
            }
            let mut face = Vec::new();
            let (mut u, mut i) = (u0, i0);
            while !used[u][i] {
                used[u][i] = true;
                face.push(u);
                let v = g.rotations[u][i];
                let back = pos[v][&u];
                i = (back + 1) % g.rotations[v].len();
                u = v;
            }
            faces.push(face);
        }
    }
    let edges: usize = g.rotations.iter().map(Vec::len).sum::<usize>() / 2;
    let euler = n as i64 - edges as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(CensusError::NotSpherical(euler));
    }
    Ok(AbstractPolyhedron::from_face_cycles(faces)?)
}

/// Rotation system of a polyhedron, read off a coherent face orientation.
/// Each rotation starts at the smallest neighbour.
pub fn from_polyhedron(p: &AbstractPolyhedron) -> PlanarEmbeddedGraph {
    let n = p.vertex_count();
    let mut succ: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); n];
    for face in p.oriented_faces() {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            succ[v].insert(u, w);
        }
    }
    let rotations = (0..n)
        .map(|v| {
            let start = p.neighbors(v).iter().copied().min().expect("vertices have neighbours");
            let mut list = vec![start];
            let mut cur = succ[v][&start];
            while cur != start {
                list.push(cur);
                cur = succ[v][&cur];
            }
            list
        })
        .collect();
    PlanarEmbeddedGraph { rotations }
}

/// One line of a catalog.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: usize,
    pub source: String,
    pub kind: AngleKind,
    pub n: usize,
    pub n_ideal: usize,
    pub n_finite: usize,
    pub f: usize,
    pub realizable: bool,
    pub failed_conditions: Vec<String>,
    pub lower: Option<f64>,
    pub lower_strict: Option<bool>,
    pub upper: Option<f64>,
    pub upper_strict: Option<bool>,
    pub notes: Vec<String>,
}

impl CatalogRecord {
    fn empty(id: usize, source: String, kind: AngleKind, n: usize) -> Self {
        Self {
            id,
            source,
            kind,
            n,
            n_ideal: 0,
            n_finite: 0,
            f: 0,
            realizable: false,
            failed_conditions: Vec::new(),
            lower: None,
            lower_strict: None,
            upper: None,
            upper_strict: None,
            notes: Vec::new(),
        }
    }

    /// The case whose universal lower bound applies to this record. Mixed
    /// right-angled records use the compact bound, which is weaker.
    pub fn volume_case(&self) -> VolumeCase {
        match self.kind {
            AngleKind::Pi3 => VolumeCase::IdealPi3,
            AngleKind::Pi2 if self.n_finite == 0 => VolumeCase::IdealPi2,
            AngleKind::Pi2 => VolumeCase::CompactPi2,
        }
    }
}

/// One input graph together with where it came from.
#[derive(Clone, Debug)]
pub struct CensusInput {
    pub source: String,
    pub graph: Result<PlanarEmbeddedGraph, CensusError>,
}

/// Reads a planar_code stream into census inputs labelled `name:offset`.
pub fn census_inputs(bytes: &[u8], name: &str) -> Result<Vec<CensusInput>, CensusError> {
    Ok(read_planar_code(bytes)?
        .into_iter()
        .map(|(offset, graph)| CensusInput { source: format!("{name}:{offset}"), graph })
        .collect())
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::FaceCount { faces } => format!("six-faces: only {faces} faces"),
        Witness::VertexDegree { vertex, degree } => format!("vertex-degree: vertex {vertex} has degree {degree}"),
        Witness::FaceTriple { middle, first, second, .. } => {
            format!("face-triple: faces {first} and {second} across face {middle} meet")
        }
        Witness::Prismatic(c) => format!("prismatic-{}-circuit: faces {:?}", c.k, c.dual_nodes),
    }
}

fn fill(record: &mut CatalogRecord, p: &AbstractPolyhedron, report: &RealizabilityReport) {
    record.n_ideal = report.counts.n_ideal;
    record.n_finite = report.counts.n_finite;
    record.f = report.counts.f;
    record.realizable = report.realizable;
    record.failed_conditions = report.failed_conditions().iter().map(|c| c.as_str().to_string()).collect();
    record.notes.extend(report.witnesses.iter().map(describe));
    record.notes.extend(report.diagnostics.iter().cloned());
    if report.realizable {
        match bounds::bounds_from_report(p, report) {
            Ok(b) => {
                record.lower = Some(b.lower.value());
                record.lower_strict = Some(b.lower_strict);
                record.upper = Some(b.upper.value());
                record.upper_strict = Some(b.upper_strict);
            }
            Err(e) => record.notes.push(format!("bounds: {e}")),
        }
    }
}

/// Annotates a single polyhedron.
pub fn annotate_polyhedron(id: usize, source: String, p: &AbstractPolyhedron, kind: AngleKind) -> CatalogRecord {
    let mut record = CatalogRecord::empty(id, source, kind, p.vertex_count());
    fill(&mut record, p, &andreev::check(p, kind));
    record
}

fn annotate_one(id: usize, input: &CensusInput, kind: AngleKind) -> CatalogRecord {
    let graph = match &input.graph {
        Ok(g) => g,
        Err(e) => {
            let mut r = CatalogRecord::empty(id, input.source.clone(), kind, 0);
            r.notes.push(format!("error: {e}"));
            return r;
        }
    };
    match to_polyhedron(graph) {
        Ok(p) => annotate_polyhedron(id, input.source.clone(), &p, kind),
        Err(e) => {
            let mut r = CatalogRecord::empty(id, input.source.clone(), kind, graph.vertex_count());
            r.notes.push(format!("error: {e}"));
            r
        }
    }
}

/// One record per input, in input order. `jobs > 1` fans out over a rayon
/// pool; the output is identical for every `jobs`.
pub fn annotate(inputs: &[CensusInput], kind: AngleKind, jobs: usize) -> Vec<CatalogRecord> {
    let work = || -> Vec<CatalogRecord> {
        inputs.par_iter().enumerate().map(|(id, input)| annotate_one(id, input, kind)).collect()
    };
    if jobs <= 1 {
        return inputs.iter().enumerate().map(|(id, input)| annotate_one(id, input, kind)).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

/// Keeps realizable records whose volume may be at most `cap`. A record is
/// dropped when its own lower bound or the universal bound for its vertex
/// count rules the cap out.
pub fn filter_by_volume_cap(records: &[CatalogRecord], cap: f64) -> Vec<CatalogRecord> {
    records
        .iter()
        .filter(|r| {
            let (Some(lower), Some(strict)) = (r.lower, r.lower_strict) else {
                return false;
            };
            r.realizable
                && bounds::admits(lower, strict, cap)
                && r
                    .volume_case()
                    .universal_lower_terms(r.n)
                    .iter()
                    .all(|&(b, s)| bounds::admits(b, s, cap))
        })
        .cloned()
        .collect()
}

pub fn write_jsonl<W: Write>(records: &[CatalogRecord], mut out: W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_jsonl(text: &str) -> Result<Vec<CatalogRecord>, serde_json::Error> {
    text.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}

pub fn write_csv<W: Write>(records: &[CatalogRecord], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["id", "kind", "n", "realizable", "lower", "upper"])?;
    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
    for r in records {
        w.write_record([
            r.id.to_string(),
            r.kind.as_str().to_string(),
            r.n.to_string(),
            r.realizable.to_string(),
            opt(r.lower),
            opt(r.upper),
        ])?;
    }
    w.flush()?;
    Ok(())
}
