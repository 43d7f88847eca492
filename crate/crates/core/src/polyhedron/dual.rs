use super::{AbstractPolyhedron, Edge, SimpleGraph};

/// A dual edge joins the two faces on either side of a primal edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub faces: (usize, usize),
    pub primal: Edge,
}

/// Face adjacency graph G* of a polyhedron. Dual edge `i` crosses primal
/// edge `i`.
#[derive(Clone, Debug)]
pub struct DualGraph {
    edges: Vec<DualEdge>,
    // (neighbouring face, dual edge id), sorted by face
    adj: Vec<Vec<(usize, usize)>>,
}

impl DualGraph {
    pub(super) fn of(p: &AbstractPolyhedron) -> Self {
        let mut adj = vec![Vec::new(); p.face_count()];
        let edges = p
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &primal)| {
                let [a, b] = p.edge_faces(i);
                adj[a].push((b, i));
                adj[b].push((a, i));
                DualEdge { faces: (a.min(b), a.max(b)), primal }
            })
            .collect();
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { edges, adj }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    /// `(face, dual edge id)` pairs adjacent to face `f`.
    pub fn neighbors(&self, f: usize) -> &[(usize, usize)] {
        &self.adj[f]
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adj[f].len()
    }

    pub fn edge_between(&self, f: usize, g: usize) -> Option<usize> {
        self.adj[f]
            .binary_search_by_key(&g, |&(h, _)| h)
            .ok()
            .map(|i| self.adj[f][i].1)
    }

    pub fn as_simple_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.node_count(), self.edges.iter().map(|e| e.faces))
            .expect("faces of a 3-connected polyhedron share at most one edge")
    }
}

#[cfg(test)]
mod tests {
    use crate::polyhedron::solids;

    #[test]
    fn octahedron_dual_is_the_cube_graph() {
        let d = solids::octahedron().dual();
        assert_eq!((d.node_count(), d.edge_count()), (8, 12));
        assert!((0..8).all(|f| d.degree(f) == 3));
    }

    #[test]
    fn cube_dual_is_the_octahedron_graph() {
        let d = solids::cube().dual();
        assert_eq!((d.node_count(), d.edge_count()), (6, 12));
        assert!((0..6).all(|f| d.degree(f) == 4));
    }

    #[test]
    fn tetrahedron_is_self_dual() {
        let d = solids::tetrahedron().dual();
        assert_eq!((d.node_count(), d.edge_count()), (4, 6));
        let g = d.as_simple_graph();
        assert!((0..4).all(|u| (0..4).all(|v| u == v || g.has_edge(u, v))));
    }

    #[test]
    fn dual_edges_point_back_to_primal_edges() {
        let p = solids::dodecahedron();
        let d = p.dual();
        for (i, e) in d.edges().iter().enumerate() {
            assert_eq!(e.primal, p.edges()[i]);
            let (a, b) = e.faces;
            let (u, v) = e.primal;
            for f in [a, b] {
                assert!(p.face(f).contains(&u) && p.face(f).contains(&v));
            }
            assert_eq!(d.edge_between(a, b), Some(i));
        }
    }

    #[test]
    fn double_dual_recovers_incidence() {
        for p in solids::platonic() {
            let dd = p.dual_polyhedron().dual_polyhedron();
            assert_eq!(dd.vertex_count(), p.vertex_count());
            assert_eq!(dd.face_count(), p.face_count());
            let d = p.dual_polyhedron();
            // dual face v = faces around primal vertex v
            for v in 0..p.vertex_count() {
                let mut around = d.face(v).to_vec();
                around.sort_unstable();
                assert_eq!(around, p.faces_at_vertex(v));
            }
            // double dual face f lists the dual faces (primal vertices) around
            // dual vertex f, which are exactly the vertices of primal face f.
            for f in 0..p.face_count() {
                let mut verts = dd.face(f).to_vec();
                verts.sort_unstable();
                let mut expected = p.face(f).to_vec();
                expected.sort_unstable();
                assert_eq!(verts, expected);
                assert_eq!(
                    crate::polyhedron::canonical_cycle(dd.face(f)),
                    crate::polyhedron::canonical_cycle(p.face(f))
                );
            }
        }
    }
}
