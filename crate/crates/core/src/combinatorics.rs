//! Face 2-colorings of four-valent skeleta, maximum independent sets, and
//! vertex/face bookkeeping from Euler's formula.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::polyhedron::{AbstractPolyhedron, SimpleGraph};

/// Graphs up to this many vertices get an exact maximum independent set.
pub const EXACT_MIS_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    NotFourValent { vertex: usize, degree: usize },
    #[error("faces {0} and {1} share an edge but received the same color")]
    NotBipartite(usize, usize),
    #[error("3·N_F + 4·N_inf = {0} is odd")]
    ParityError(usize),
}

/// Proper black/white coloring of the faces with at least as many black
/// faces as white ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceColoring {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
}

pub fn two_color_faces(p: &AbstractPolyhedron) -> Result<FaceColoring, CombinatoricsError> {
    if let Some(v) = (0..p.vertex_count()).find(|&v| p.vertex_degree(v) != 4) {
        return Err(CombinatoricsError::NotFourValent { vertex: v, degree: p.vertex_degree(v) });
    }
    let dual = p.dual();
    let mut color: Vec<Option<bool>> = vec![None; p.face_count()];
    color[0] = Some(true);
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        let c = color[f].expect("queued faces are colored");
        for &(g, _) in dual.neighbors(f) {
            match color[g] {
                None => {
                    color[g] = Some(!c);
                    queue.push_back(g);
                }
                Some(d) if d == c => return Err(CombinatoricsError::NotBipartite(f.min(g), f.max(g))),
                Some(_) => {}
            }
        }
    }
    let (mut black, mut white): (Vec<usize>, Vec<usize>) =
        (0..p.face_count()).partition(|&f| color[f] == Some(true));
    if black.len() < white.len() {
        std::mem::swap(&mut black, &mut white);
    }
    Ok(FaceColoring { black, white })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub vertices: Vec<usize>,
    /// True when the set is known to be maximum.
    pub exact: bool,
}

impl IndependentSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Maximum independent set by branch and bound for graphs with at most
/// [`EXACT_MIS_LIMIT`] vertices, otherwise a min-degree greedy set.
pub fn max_independent_set(g: &SimpleGraph) -> IndependentSet {
    let n = g.vertex_count();
    if n > EXACT_MIS_LIMIT {
        return IndependentSet { vertices: greedy(g), exact: false };
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let initial = greedy(g).iter().fold(0u64, |m, &v| m | (1 << v));
    let mut search = Search { adj: &adj, best: initial };
    search.run(all, 0);
    let vertices = (0..n).filter(|&v| search.best >> v & 1 == 1).collect();
    IndependentSet { vertices, exact: true }
}

fn greedy(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut chosen = Vec::new();
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v)) {
        chosen.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                for &x in g.neighbors(w) {
                    degree[x] = degree[x].saturating_sub(1);
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
}

impl Search<'_> {
    fn run(&mut self, mut cand: u64, mut taken: u64) {
        // vertices of degree ≤ 1 inside the candidate set can always be taken
        loop {
            let mut changed = false;
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if cand >> v & 1 == 0 {
                    continue;
                }
                if (self.adj[v] & cand).count_ones() <= 1 {
                    taken |= 1 << v;
                    cand &= !(self.adj[v] | 1 << v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let have = taken.count_ones();
        if cand == 0 {
            if have > self.best.count_ones() {
                self.best = taken;
            }
            return;
        }
        if have + self.upper_bound(cand) <= self.best.count_ones() {
            return;
        }
        let mut pivot = 0;
        let mut pivot_deg = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.run(cand & !(self.adj[pivot] | 1 << pivot), taken | 1 << pivot);
        self.run(cand & !(1 << pivot), taken);
    }

    /// |cand| minus the size of a greedy matching inside cand.
    fn upper_bound(&self, cand: u64) -> u32 {
        let mut free = cand;
        let mut matched = 0;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= !(1 << v);
            let partners = self.adj[v] & free;
            if partners != 0 {
                free &= !(1 << partners.trailing_zeros());
                matched += 1;
            }
        }
        cand.count_ones() - matched
    }
}

/// Edge and face counts of a polyhedron with only degree-3 and degree-4
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCounts {
    pub edges: usize,
    pub faces: usize,
}

/// E = (3·N_F + 4·N_∞)/2 and F = 2 + E − N.
pub fn euler_face_count_identity(n_inf: usize, n_f: usize) -> Result<EulerCounts, CombinatoricsError> {
    let twice = 3 * n_f + 4 * n_inf;
    if twice % 2 == 1 {
        return Err(CombinatoricsError::ParityError(twice));
    }
    let edges = twice / 2;
    Ok(EulerCounts { edges, faces: 2 + edges - (n_inf + n_f) })
}
