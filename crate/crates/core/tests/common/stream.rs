//! Deterministic synthetic polyhedra for census tests.

use std::collections::HashMap;

use equivol_core::families::FamilyTag;
use equivol_core::polyhedron::{solids, AbstractPolyhedron};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Cuts off vertex `v`, replacing it by a face with one corner per edge.
pub fn truncate_vertex(p: &AbstractPolyhedron, v: usize) -> AbstractPolyhedron {
    let nbrs = p.neighbors(v).to_vec();
    let mut corner = HashMap::new();
    for (j, &u) in nbrs.iter().enumerate() {
        corner.insert(u, if j == 0 { v } else { p.vertex_count() + j - 1 });
    }
    let mut succ = HashMap::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for face in p.oriented_faces() {
        let n = face.len();
        let Some(i) = face.iter().position(|&x| x == v) else {
            faces.push(face);
            continue;
        };
        let (a, b) = (corner[&face[(i + n - 1) % n]], corner[&face[(i + 1) % n]]);
        succ.insert(a, b);
        let mut f = Vec::with_capacity(n + 1);
        for (k, &x) in face.iter().enumerate() {
            if k == i {
                f.extend([a, b]);
            } else {
                f.push(x);
            }
        }
        faces.push(f);
    }
    let mut cap = vec![v];
    while cap.len() < nbrs.len() {
        cap.push(succ[cap.last().unwrap()]);
    }
    cap.reverse();
    faces.push(cap);
    AbstractPolyhedron::from_face_cycles(faces).expect("truncation keeps a polyhedron")
}

/// The medial polyhedron: one vertex per edge, 4-valent.
pub fn medial(p: &AbstractPolyhedron) -> AbstractPolyhedron {
    let oriented = p.oriented_faces();
    let eid = |u: usize, w: usize| p.edge_id(u, w).expect("edge");
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut around: Vec<HashMap<usize, usize>> = vec![HashMap::new(); p.vertex_count()];
    for face in &oriented {
        let n = face.len();
        faces.push((0..n).map(|i| eid(face[i], face[(i + 1) % n])).collect());
        for i in 0..n {
            let v = face[i];
            around[v].insert(eid(face[(i + n - 1) % n], v), eid(v, face[(i + 1) % n]));
        }
    }
    for ring in around {
        let start = *ring.keys().min().unwrap();
        let mut cycle = vec![start];
        while cycle.len() < ring.len() {
            cycle.push(ring[cycle.last().unwrap()]);
        }
        faces.push(cycle);
    }
    AbstractPolyhedron::from_face_cycles(faces).expect("medial of a polyhedron is a polyhedron")
}

fn seed_polyhedron(rng: &mut StdRng) -> AbstractPolyhedron {
    match rng.gen_range(0..8) {
        0 => solids::tetrahedron(),
        1 => solids::cube(),
        2 => solids::dodecahedron(),
        3 => solids::prism(rng.gen_range(3..12)),
        4 => solids::antiprism(rng.gen_range(3..10)),
        5 => FamilyTag::OctGlue.build(rng.gen_range(1..12)).unwrap().polyhedron,
        6 => solids::octahedron(),
        _ => solids::icosahedron(),
    }
}

/// `count` polyhedra with at most `max_n` vertices, identical for equal
/// seeds. Mixes truncations of seeds, their medials and duals.
pub fn synthetic_stream(count: usize, seed: u64, max_n: usize) -> Vec<AbstractPolyhedron> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut p = seed_polyhedron(&mut rng);
        for _ in 0..rng.gen_range(0..12) {
            let v = rng.gen_range(0..p.vertex_count());
            p = truncate_vertex(&p, v);
        }
        p = match rng.gen_range(0..4) {
            0 | 1 => medial(&p),
            2 => p.dual_polyhedron(),
            _ => p,
        };
        if p.vertex_count() <= max_n {
            out.push(p);
        }
    }
    out
}
