//! Face lists of a few classical polyhedra.

use super::AbstractPolyhedron;

fn build(faces: Vec<Vec<usize>>) -> AbstractPolyhedron {
    AbstractPolyhedron::from_face_cycles(faces).expect("classical solid is valid")
}

pub fn tetrahedron() -> AbstractPolyhedron {
    build(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
}

/// Vertex `i` sits at the corner whose coordinates are the bits of `i`.
pub fn cube() -> AbstractPolyhedron {
    build(vec![
        vec![0, 2, 6, 4],
        vec![1, 3, 7, 5],
        vec![0, 1, 5, 4],
        vec![2, 3, 7, 6],
        vec![0, 1, 3, 2],
        vec![4, 5, 7, 6],
    ])
}

/// Vertices `0..6` are `+x, -x, +y, -y, +z, -z`.
pub fn octahedron() -> AbstractPolyhedron {
    let mut faces = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                faces.push(vec![a, b, c]);
            }
        }
    }
    build(faces)
}

/// Layers of five: top ring `0..5`, upper zigzag `5..10`, lower zigzag
/// `10..15`, bottom ring `15..20`.
pub fn dodecahedron() -> AbstractPolyhedron {
    let t = |i: usize| i % 5;
    let u = |i: usize| 5 + i % 5;
    let l = |i: usize| 10 + i % 5;
    let b = |i: usize| 15 + i % 5;
    let mut faces = vec![(0..5).map(t).collect::<Vec<_>>()];
    for i in 0..5 {
        faces.push(vec![t(i), t(i + 1), u(i + 1), l(i), u(i)]);
        faces.push(vec![b(i), b(i + 1), l(i + 1), u(i + 1), l(i)]);
    }
    faces.push((0..5).map(b).collect());
    build(faces)
}

pub fn icosahedron() -> AbstractPolyhedron {
    dodecahedron().dual_polyhedron()
}

pub fn platonic() -> Vec<AbstractPolyhedron> {
    vec![tetrahedron(), cube(), octahedron(), dodecahedron(), icosahedron()]
}

/// n-gonal prism: top ring `0..n`, bottom ring `n..2n`.
pub fn prism(n: usize) -> AbstractPolyhedron {
    assert!(n >= 3, "prism needs n >= 3");
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
    }
    build(faces)
}

/// n-gonal antiprism: two n-gons joined by a band of 2n triangles.
pub fn antiprism(n: usize) -> AbstractPolyhedron {
    assert!(n >= 3, "antiprism needs n >= 3");
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + i]);
        faces.push(vec![n + i, n + j, j]);
    }
    build(faces)
}
