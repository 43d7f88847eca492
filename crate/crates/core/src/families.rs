//! Explicit families of equiangular polyhedra.
//!
//! * `OctGlue(m)`: m regular ideal octahedra glued black face to black face
//!   along a path. Its volume is exactly m·V₈.
//! * `P2k(k)`: the diagonal square grid between two horizontal lines, rolled
//!   into a cylinder. Right-angled with all vertices ideal.
//! * `Q2k(k)`: the hexagonal tiling cut the same way. All angles π/3.
//! * `R2k(k)`: `Q2k` with a ring of tripods added in each cap. Compact and
//!   right-angled.
//!
//! The grid families are laid out on integer coordinates (the hexagonal one
//! with its vertical axis scaled by 2/√3, which keeps the cyclic order of
//! edge directions), so the rotation system comes from exact comparisons.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::andreev;
use crate::bounds::{self, BoundsError};
use crate::lobachevsky::{v8, HyperbolicVolume};
use crate::polyhedron::{AbstractPolyhedron, AngleKind, PolyhedronError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("{family} needs parameter >= {min}, got {got}")]
    ParameterTooSmall { family: FamilyTag, min: usize, got: usize },
    #[error("{family}({param}) produced an invalid complex: {source}")]
    Construction { family: FamilyTag, param: usize, source: PolyhedronError },
    #[error("unknown family {0:?}; expected octglue, p2k, q2k or r2k")]
    UnknownFamily(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    OctGlue,
    P2k,
    Q2k,
    R2k,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::OctGlue => "octglue",
            FamilyTag::P2k => "p2k",
            FamilyTag::Q2k => "q2k",
            FamilyTag::R2k => "r2k",
        }
    }

    pub fn min_param(self) -> usize {
        match self {
            FamilyTag::OctGlue => 1,
            FamilyTag::P2k | FamilyTag::R2k => 3,
            FamilyTag::Q2k => 2,
        }
    }

    pub fn angle_kind(self) -> AngleKind {
        match self {
            FamilyTag::Q2k => AngleKind::Pi3,
            _ => AngleKind::Pi2,
        }
    }

    pub fn build(self, param: usize) -> Result<FamilyMember, FamilyError> {
        match self {
            FamilyTag::OctGlue => glue_octahedra(param),
            FamilyTag::P2k => family_p2k(param),
            FamilyTag::Q2k => family_q2k(param),
            FamilyTag::R2k => family_r2k(param),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "octglue" => Ok(FamilyTag::OctGlue),
            "p2k" => Ok(FamilyTag::P2k),
            "q2k" => Ok(FamilyTag::Q2k),
            "r2k" => Ok(FamilyTag::R2k),
            _ => Err(FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedCounts {
    pub n: usize,
    pub f: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub white: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub polyhedron: AbstractPolyhedron,
    pub family: FamilyTag,
    pub param: usize,
    pub expected: ExpectedCounts,
    pub exact_volume: Option<HyperbolicVolume>,
}

fn check_param(family: FamilyTag, got: usize) -> Result<(), FamilyError> {
    let min = family.min_param();
    if got < min {
        Err(FamilyError::ParameterTooSmall { family, min, got })
    } else {
        Ok(())
    }
}

fn finish(
    family: FamilyTag,
    param: usize,
    faces: Vec<Vec<usize>>,
    expected: ExpectedCounts,
    exact_volume: Option<HyperbolicVolume>,
) -> Result<FamilyMember, FamilyError> {
    let polyhedron = AbstractPolyhedron::from_face_cycles(faces)
        .map_err(|source| FamilyError::Construction { family, param, source })?
        .with_label(family.angle_kind());
    debug_assert_eq!(polyhedron.vertex_count(), expected.n);
    debug_assert_eq!(polyhedron.face_count(), expected.f);
    Ok(FamilyMember { polyhedron, family, param, expected, exact_volume })
}

/// A graph drawn on a cylinder `x mod period` with integer coordinates.
struct Cylinder {
    period: i64,
    index: HashMap<(i64, i64), usize>,
    // (neighbour, displacement towards it)
    adj: Vec<Vec<(usize, (i64, i64))>>,
    seen: HashSet<(usize, usize)>,
}

impl Cylinder {
    fn new(period: i64) -> Self {
        Self { period, index: HashMap::new(), adj: Vec::new(), seen: HashSet::new() }
    }

    fn vertex(&mut self, x: i64, y: i64) -> usize {
        let key = (x.rem_euclid(self.period), y);
        let next = self.adj.len();
        let id = *self.index.entry(key).or_insert(next);
        if id == next {
            self.adj.push(Vec::new());
        }
        id
    }

    fn edge(&mut self, p: (i64, i64), q: (i64, i64)) {
        let u = self.vertex(p.0, p.1);
        let v = self.vertex(q.0, q.1);
        if !self.seen.insert((u.min(v), u.max(v))) {
            return;
        }
        let d = (q.0 - p.0, q.1 - p.1);
        self.adj[u].push((v, d));
        self.adj[v].push((u, (-d.0, -d.1)));
    }

    /// Faces traced from the counter-clockwise rotation at each vertex.
    fn faces(mut self) -> Vec<Vec<usize>> {
        for list in &mut self.adj {
            list.sort_by(|a, b| angle_order(a.1, b.1));
        }
        let pos: Vec<HashMap<usize, usize>> = self
            .adj
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, &(w, _))| (w, i)).collect())
            .collect();
        let mut used: Vec<Vec<bool>> = self.adj.iter().map(|l| vec![false; l.len()]).collect();
        let mut faces = Vec::new();
        for u0 in 0..self.adj.len() {
            for i0 in 0..self.adj[u0].len() {
                if used[u0][i0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut i) = (u0, i0);
                while !used[u][i] {
                    used[u][i] = true;
                    face.push(u);
                    let v = self.adj[u][i].0;
                    // the face lies to the left of u→v: turn to the
                    // neighbour preceding u clockwise, i.e. next counter-clockwise
                    let j = pos[v][&u];
                    let len = self.adj[v].len();
                    i = (j + len - 1) % len;
                    u = v;
                }
                faces.push(face);
            }
        }
        faces
    }
}

fn angle_order(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |d: (i64, i64)| if d.1 > 0 || (d.1 == 0 && d.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

/// The 4-valent diagonal grid in the strip `0 ≤ y ≤ 2k`, x taken mod 2k.
pub fn family_p2k(k: usize) -> Result<FamilyMember, FamilyError> {
    check_param(FamilyTag::P2k, k)?;
    let top = 4 * k as i64;
    let mut cyl = Cylinder::new(top);
    // doubled coordinates: X ≡ Y (mod 2)
    for y in 0..=top {
        for x in (0..top).filter(|x| (x - y) % 2 == 0) {
            cyl.vertex(x, y);
        }
    }
    for y in 0..top {
        for x in (0..top).filter(|x| (x - y) % 2 == 0) {
            cyl.edge((x, y), (x + 1, y + 1));
            cyl.edge((x, y), (x - 1, y + 1));
        }
    }
    for y in [0, top] {
        for x in (0..top).step_by(2) {
            cyl.edge((x, y), (x + 2, y));
        }
    }
    let n = 8 * k * k + 2 * k;
    finish(FamilyTag::P2k, k, cyl.faces(), ExpectedCounts { n, f: n + 2, white: None }, None)
}

/// The hexagonal tiling in the strip `0 ≤ y ≤ 2k√3`, x taken mod 3k.
/// Coordinates are `X = 2x` and `m = 2y/√3`, with `sx` scaling X.
fn hex_strip(k: usize, sx: i64) -> Cylinder {
    let levels = 4 * k as i64;
    let period = 6 * k as i64;
    let mut cyl = Cylinder::new(period * sx);
    for m in 0..=levels {
        for x in 0..period {
            if (x - 3 * m).rem_euclid(6) == 0 || (x - 3 * m - 2).rem_euclid(6) == 0 {
                cyl.vertex(x * sx, m);
            }
        }
    }
    let inside = |p: (i64, i64)| p.1 >= 0 && p.1 <= levels;
    for m in -1..=levels + 1 {
        let offset = (3 * m + 4).rem_euclid(6);
        for c in (offset..period).step_by(6) {
            let ring = [(c - 2, m), (c - 1, m - 1), (c + 1, m - 1), (c + 2, m), (c + 1, m + 1), (c - 1, m + 1)];
            for i in 0..6 {
                let (p, q) = (ring[i], ring[(i + 1) % 6]);
                if inside(p) && inside(q) {
                    cyl.edge((p.0 * sx, p.1), (q.0 * sx, q.1));
                }
            }
            if m == 0 || m == levels {
                cyl.edge(((c - 2) * sx, m), ((c + 2) * sx, m));
            }
        }
    }
    cyl
}

/// Trivalent hexagonal strip with all angles π/3.
pub fn family_q2k(k: usize) -> Result<FamilyMember, FamilyError> {
    check_param(FamilyTag::Q2k, k)?;
    let n = 8 * k * k + 2 * k;
    let f = 4 * k * k + k + 2;
    finish(FamilyTag::Q2k, k, hex_strip(k, 1).faces(), ExpectedCounts { n, f, white: None }, None)
}

/// The hexagonal strip with every boundary edge subdivided and a ring of
/// tripods in each cap: ring vertex `i` sits below the midpoint of boundary
/// edge `i` and is joined to it and to its two ring neighbours. Boundary
/// quadrilaterals become pentagons, the new regions between boundary and
/// ring are pentagons, and the caps are 2k-gons.
pub fn family_r2k(k: usize) -> Result<FamilyMember, FamilyError> {
    check_param(FamilyTag::R2k, k)?;
    let levels = 4 * k as i64;
    let sx = 2;
    let mut cyl = hex_strip(k, sx);
    let period = cyl.period;
    for (m, outside) in [(0, -1), (levels, levels + 1)] {
        let mut boundary: Vec<i64> = cyl
            .index
            .keys()
            .filter(|&&(_, y)| y == m)
            .map(|&(x, _)| x)
            .collect();
        boundary.sort_unstable();
        let count = boundary.len();
        let mids: Vec<i64> = (0..count)
            .map(|i| {
                let a = boundary[i];
                let b = if i + 1 < count { boundary[i + 1] } else { boundary[0] + period };
                (a + b) / 2
            })
            .collect();
        for i in 0..count {
            let a = boundary[i];
            let b = if i + 1 < count { boundary[i + 1] } else { boundary[0] + period };
            cyl.remove_edge((a, m), (b, m));
            cyl.edge((a, m), (mids[i], m));
            cyl.edge((mids[i], m), (b, m));
            cyl.edge((mids[i], m), (mids[i], outside));
            let next = if i + 1 < count { mids[i + 1] } else { mids[0] + period };
            cyl.edge((mids[i], outside), (next, outside));
        }
    }
    let faces = cyl.faces();
    let n = faces.iter().flatten().copied().max().map_or(0, |v| v + 1);
    let f = faces.len();
    finish(FamilyTag::R2k, k, faces, ExpectedCounts { n, f, white: None }, None)
}

impl Cylinder {
    fn remove_edge(&mut self, p: (i64, i64), q: (i64, i64)) {
        let u = self.vertex(p.0, p.1);
        let v = self.vertex(q.0, q.1);
        self.adj[u].retain(|&(w, _)| w != v);
        self.adj[v].retain(|&(w, _)| w != u);
        self.seen.remove(&(u.min(v), u.max(v)));
    }
}

/// `m` regular ideal octahedra glued along black faces in a path.
pub fn glue_octahedra(m: usize) -> Result<FamilyMember, FamilyError> {
    check_param(FamilyTag::OctGlue, m)?;
    // a, b, c = 0, 1, 2 and their opposites x, y, z = 3, 4, 5
    let mut faces: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![0, 4, 5],
        vec![3, 1, 5],
        vec![3, 4, 2],
        vec![0, 1, 5],
        vec![0, 4, 2],
        vec![3, 1, 2],
        vec![3, 4, 5],
    ];
    let mut next = 6;
    let mut glue = [3usize, 4, 2];
    for _ in 1..m {
        let [a, b, c] = glue;
        let (x, y, z) = (next, next + 1, next + 2);
        next += 3;
        let t = faces
            .iter()
            .position(|f| f.len() == 3 && [a, b, c].iter().all(|v| f.contains(v)))
            .expect("glue face is present");
        faces.remove(t);
        for (p, q, apex) in [(a, b, z), (b, c, x), (c, a, y)] {
            let face = faces
                .iter_mut()
                .find(|f| {
                    let n = f.len();
                    (0..n).any(|i| {
                        let (s, t) = (f[i], f[(i + 1) % n]);
                        (s, t) == (p, q) || (s, t) == (q, p)
                    })
                })
                .expect("every edge of the glue face borders a white face");
            let n = face.len();
            let i = (0..n)
                .find(|&i| {
                    let (s, t) = (face[i], face[(i + 1) % n]);
                    (s, t) == (p, q) || (s, t) == (q, p)
                })
                .expect("edge located above");
            face.insert(i + 1, apex);
        }
        faces.push(vec![a, y, z]);
        faces.push(vec![x, b, z]);
        faces.push(vec![x, y, c]);
        faces.push(vec![x, y, z]);
        glue = [x, y, c];
    }
    let n = 3 * m + 3;
    let expected = ExpectedCounts { n, f: 3 * m + 5, white: Some(m + 3) };
    let volume = HyperbolicVolume::from_formula(m as f64 * v8()).expect("positive");
    finish(FamilyTag::OctGlue, m, faces, expected, Some(volume))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub param: usize,
    pub n: usize,
    pub lower: f64,
    pub upper: f64,
    pub lower_per_vertex: f64,
    pub upper_per_vertex: f64,
}

/// Bound-per-vertex trend over a parameter range.
pub fn asymptotic_report(
    family: FamilyTag,
    params: impl IntoIterator<Item = usize>,
) -> Result<Vec<AsymptoticRow>, FamilyError> {
    params
        .into_iter()
        .map(|param| {
            let member = family.build(param)?;
            let p = &member.polyhedron;
            let report = andreev::check(p, family.angle_kind());
            let b = bounds::bounds_from_report(p, &report)?;
            let n = p.vertex_count();
            Ok(AsymptoticRow {
                param,
                n,
                lower: b.lower.value(),
                upper: b.upper.value(),
                lower_per_vertex: b.lower.value() / n as f64,
                upper_per_vertex: b.upper.value() / n as f64,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_order_is_counter_clockwise_from_east() {
        let mut dirs = vec![(0, -1), (-1, 0), (1, 1), (1, 0), (-1, -1), (0, 1)];
        dirs.sort_by(|a, b| angle_order(*a, *b));
        assert_eq!(dirs, vec![(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]);
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(family_p2k(2), Err(FamilyError::ParameterTooSmall { min: 3, .. })));
        assert!(matches!(family_q2k(1), Err(FamilyError::ParameterTooSmall { min: 2, .. })));
        assert!(matches!(family_r2k(2), Err(FamilyError::ParameterTooSmall { min: 3, .. })));
        assert!(matches!(glue_octahedra(0), Err(FamilyError::ParameterTooSmall { min: 1, .. })));
    }

    #[test]
    fn small_counts() {
        let p = family_p2k(3).unwrap().polyhedron;
        assert_eq!((p.vertex_count(), p.face_count()), (78, 80));
        let q = family_q2k(2).unwrap().polyhedron;
        assert_eq!((q.vertex_count(), q.face_count()), (36, 20));
        let q = family_q2k(3).unwrap().polyhedron;
        assert_eq!((q.vertex_count(), q.face_count()), (78, 41));
        let g = glue_octahedra(2).unwrap().polyhedron;
        assert_eq!((g.vertex_count(), g.face_count()), (9, 11));
    }

    #[test]
    fn single_octahedron() {
        let m = glue_octahedra(1).unwrap();
        assert_eq!(m.polyhedron.vertex_count(), 6);
        assert!((m.exact_volume.unwrap().value() - v8()).abs() < 1e-15);
    }

    #[test]
    fn family_tags_parse() {
        assert_eq!("Q2K".parse::<FamilyTag>(), Ok(FamilyTag::Q2k));
        assert!("hex".parse::<FamilyTag>().is_err());
    }
}
