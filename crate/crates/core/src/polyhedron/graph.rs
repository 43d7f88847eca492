//! Undirected simple graphs and the 3-connectivity test used for skeleta.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0}-{0} is a loop")]
    Loop(usize),
    #[error("edge {0}-{1} appears more than once")]
    MultiEdge(usize, usize),
    #[error("edge {u}-{v} references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("3-connectivity needs at least 4 vertices, graph has {0}")]
    TooSmall(usize),
}

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::MultiEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connectivity check with an arbitrary set of vertices deleted.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !seen[v]) else {
            return true;
        };
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Articulation points of the graph with `skip` deleted, or `None` when
    /// that graph is already disconnected.
    fn articulation_points(&self, skip: Option<usize>) -> Option<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let n = self.adj.len();
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let Some(root) = (0..n).find(|&v| Some(v) != skip) else {
            return Some(Vec::new());
        };

        let mut time = 0;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;

        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < self.adj[v].len() {
                let w = self.adj[v][top.2];
                top.2 += 1;
                if Some(w) == skip || w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }

        let expected = n - usize::from(skip.is_some());
        if time != expected {
            return None;
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
        Some((0..n).filter(|&v| is_cut[v]).collect())
    }
}

/// Returns a separating set of at most two vertices, or `None` when the graph
/// is 3-connected. A disconnected graph yields an empty separator.
///
/// Every vertex `a` is deleted in turn and the remainder is scanned for
/// articulation points, which covers every vertex pair in `O(V·E)`.
pub fn find_small_separator(g: &SimpleGraph) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(GraphError::TooSmall(n));
    }
    if !g.is_connected_without(&[]) {
        return Ok(Some(Vec::new()));
    }
    for a in 0..n {
        match g.articulation_points(Some(a)) {
            None => return Ok(Some(vec![a])),
            Some(cuts) => {
                if let Some(&b) = cuts.first() {
                    let mut sep = vec![a, b];
                    sep.sort_unstable();
                    return Ok(Some(sep));
                }
            }
        }
    }
    Ok(None)
}

/// Steinitz criterion: removing any two vertices leaves the graph connected.
pub fn is_three_connected(g: &SimpleGraph) -> Result<bool, GraphError> {
    find_small_separator(g).map(|sep| sep.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    fn cube() -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for bit in [1, 2, 4] {
                let v = u ^ bit;
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(8, edges).unwrap()
    }

    #[test]
    fn cube_and_k4_are_three_connected() {
        assert_eq!(is_three_connected(&cube()), Ok(true));
        assert_eq!(is_three_connected(&complete(4)), Ok(true));
    }

    #[test]
    fn tetrahedra_sharing_an_edge_have_a_two_cut() {
        // {0,1,2,3} and {0,1,4,5} share the edge 0-1
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for group in [[0, 1, 2, 3], [0, 1, 4, 5]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((group[i], group[j]));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let g = SimpleGraph::from_edges(6, edges).unwrap();
        assert_eq!(is_three_connected(&g), Ok(false));
        assert_eq!(find_small_separator(&g), Ok(Some(vec![0, 1])));
    }

    #[test]
    fn too_small_is_an_error() {
        assert_eq!(is_three_connected(&complete(3)), Err(GraphError::TooSmall(3)));
    }

    #[test]
    fn cycle_has_a_two_cut_and_path_a_cut_vertex() {
        let cycle = SimpleGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(is_three_connected(&cycle), Ok(false));
        let path = SimpleGraph::from_edges(5, (0..4).map(|i| (i, i + 1))).unwrap();
        let sep = find_small_separator(&path).unwrap().unwrap();
        assert!(sep.len() <= 2 && !path.is_connected_without(&sep));
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(SimpleGraph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::MultiEdge(0, 1))
        );
    }
}
