//! Independent numerical references. Nothing here calls into the library's
//! Lobachevsky implementation.

use std::f64::consts::PI;

use nalgebra::{Matrix4, SymmetricEigen, Vector3, Vector4};

/// Gauss–Legendre nodes and weights on [0, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((0.5 * (1.0 - x), 0.5 * w));
    }
    out
}

/// −∫₀^θ log(2 sin t) dt for θ ∈ (0, π), with the log singularities at both
/// ends integrated in closed form and the smooth remainder by Gauss–Legendre.
pub fn lobachevsky_quadrature(theta: f64) -> f64 {
    assert!(theta > 0.0 && theta < PI);
    let smooth = |t: f64| {
        if t < 1e-8 {
            (2.0 / PI).ln()
        } else {
            (2.0 * t.sin() / (t * (PI - t))).ln()
        }
    };
    let nodes = gauss_legendre(48);
    let rest: f64 = nodes.iter().map(|&(x, w)| w * smooth(theta * x)).sum::<f64>() * theta;
    let s = PI - theta;
    let log_t = theta * theta.ln() - theta;
    let log_pi_minus_t = -s * s.ln() + s + PI * PI.ln() - PI;
    -(log_t + log_pi_minus_t + rest)
}

/// Catalan's constant from the alternating series, averaging two
/// consecutive partial sums.
pub fn catalan() -> f64 {
    let n = 200_000usize;
    let mut s = 0.0;
    // sum the tail first
    for k in (0..n).rev() {
        let t = 1.0 / ((2 * k + 1) as f64).powi(2);
        s += if k % 2 == 0 { t } else { -t };
    }
    let next = 1.0 / ((2 * n + 1) as f64).powi(2);
    let next = if n % 2 == 0 { next } else { -next };
    s + 0.5 * next
}

/// Klein-model vertices of the orthoscheme with essential angles α, β, γ.
/// Vertex `i` is opposite face `i`; faces 0,1 meet at α, 1,2 at β, 2,3 at γ.
pub fn orthoscheme_vertices(alpha: f64, beta: f64, gamma: f64) -> [Vector3<f64>; 4] {
    let (ca, cb, cg) = (alpha.cos(), beta.cos(), gamma.cos());
    let gram = Matrix4::new(
        1.0, -ca, 0.0, 0.0, //
        -ca, 1.0, -cb, 0.0, //
        0.0, -cb, 1.0, -cg, //
        0.0, 0.0, -cg, 1.0,
    );
    let eig = SymmetricEigen::new(gram);
    let negative: Vec<usize> = (0..4).filter(|&k| eig.eigenvalues[k] < 0.0).collect();
    assert_eq!(negative.len(), 1, "Gram matrix must have signature (3,1)");
    let time = negative[0];
    let spatial: Vec<usize> = (0..4).filter(|&k| k != time).collect();

    // normals[i] = (x, y, z, t) with ⟨nᵢ, nⱼ⟩ = G_ij for the form x²+y²+z²−t²
    let normal = |i: usize| {
        let coord = |k: usize| eig.eigenvectors[(i, k)] * eig.eigenvalues[k].abs().sqrt();
        Vector4::new(coord(spatial[0]), coord(spatial[1]), coord(spatial[2]), coord(time))
    };
    let normals: Vec<Vector4<f64>> = (0..4).map(normal).collect();
    let inv = gram.try_inverse().expect("non-degenerate Gram matrix");

    let mut signs = Vec::new();
    let verts: Vec<Vector3<f64>> = (0..4)
        .map(|i| {
            let v: Vector4<f64> = (0..4).map(|j| normals[j] * inv[(i, j)]).sum();
            signs.push(v[3] > 0.0);
            Vector3::new(v[0] / v[3], v[1] / v[3], v[2] / v[3])
        })
        .collect();
    assert!(signs.iter().all(|&s| s == signs[0]), "vertices on both sheets");
    [verts[0], verts[1], verts[2], verts[3]]
}

/// ∫ dx / (1 − |x|²)² over the Euclidean tetrahedron with the given apex and
/// base, in collapsed coordinates centred at the apex. The apex may lie on
/// the unit sphere; the base triangle must stay strictly inside.
fn klein_cone(apex: Vector3<f64>, base: [Vector3<f64>; 3], nodes: &[(f64, f64)]) -> f64 {
    let [b0, b1, b2] = base;
    let jac = (b0 - apex).dot(&(b1 - b0).cross(&(b2 - b1))).abs();
    let a2 = apex.norm_squared();
    let mut total = 0.0;
    for &(u, wu) in nodes {
        for &(w, ww) in nodes {
            let d = (b0 - apex) + (b1 - b0) * u + (b2 - b1) * (u * w);
            let lin = -2.0 * apex.dot(&d);
            let quad = d.norm_squared();
            let mut inner = 0.0;
            for &(s, ws) in nodes {
                // 1 − |a + s d|² = (1 − |a|²) + s (lin − s quad)
                let denom = (1.0 - a2) + s * (lin - s * quad);
                let scaled = if 1.0 - a2 < 1e-14 { lin - s * quad } else { denom / s };
                inner += ws / (scaled * scaled);
            }
            total += wu * ww * u * inner;
        }
    }
    total * jac
}

/// Hyperbolic volume of the orthoscheme by direct integration in the Klein
/// model. The tetrahedron is cut through the midpoint of the edge joining
/// vertices 0 and 3, the only ones that can be ideal.
pub fn orthoscheme_quadrature(alpha: f64, beta: f64, gamma: f64, points: usize) -> f64 {
    let v = orthoscheme_vertices(alpha, beta, gamma);
    let nodes = gauss_legendre(points);
    let mid = (v[0] + v[3]) * 0.5;
    klein_cone(v[0], [mid, v[1], v[2]], &nodes) + klein_cone(v[3], [mid, v[1], v[2]], &nodes)
}

/// Brute-force prismatic k-circuits: every ordered k-tuple of distinct faces
/// is tried, and each cycle is reported once as its rotation/reflection
/// minimum.
pub fn prismatic_circuits_brute(faces: &[Vec<usize>], k: usize) -> Vec<Vec<usize>> {
    use std::collections::BTreeSet;
    let shared_edge = |a: usize, b: usize| -> Option<(usize, usize)> {
        let fa = &faces[a];
        let fb = &faces[b];
        for i in 0..fa.len() {
            let (u, v) = (fa[i], fa[(i + 1) % fa.len()]);
            for j in 0..fb.len() {
                let (x, y) = (fb[j], fb[(j + 1) % fb.len()]);
                if (u, v) == (x, y) || (u, v) == (y, x) {
                    return Some((u.min(v), u.max(v)));
                }
            }
        }
        None
    };
    let f = faces.len();
    let mut out = BTreeSet::new();
    let mut tuple = vec![0usize; k];
    let total = f.pow(k as u32);
    for code in 0..total {
        let mut c = code;
        for slot in tuple.iter_mut() {
            *slot = c % f;
            c /= f;
        }
        let distinct: BTreeSet<_> = tuple.iter().collect();
        if distinct.len() != k {
            continue;
        }
        let mut edges = Vec::new();
        let mut ok = true;
        for i in 0..k {
            match shared_edge(tuple[i], tuple[(i + 1) % k]) {
                Some(e) => edges.push(e),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let disjoint = (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let (a, b) = (edges[i], edges[j]);
                a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
            })
        });
        if disjoint {
            out.insert(min_rotation(&tuple));
        }
    }
    out.into_iter().collect()
}

/// Lexicographically least rotation of the cycle or its reverse.
pub fn min_rotation(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        let seq: Vec<usize> = if rev { cycle.iter().rev().copied().collect() } else { cycle.to_vec() };
        for r in 0..n {
            let cand: Vec<usize> = (0..n).map(|i| seq[(i + r) % n]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Brute-force face-triple check: for every face and every pair of its edges
/// without a common endpoint, do the faces across them share a vertex?
/// Returns `(middle, first, second)` with `first < second`.
pub fn face_triples_brute(faces: &[Vec<usize>]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let across = |f: usize, u: usize, v: usize| -> usize {
        (0..faces.len())
            .find(|&g| {
                g != f && {
                    let c = &faces[g];
                    (0..c.len()).any(|i| {
                        let (a, b) = (c[i], c[(i + 1) % c.len()]);
                        (a, b) == (u, v) || (a, b) == (v, u)
                    })
                }
            })
            .expect("every edge has two faces")
    };
    for (f, cyc) in faces.iter().enumerate() {
        let n = cyc.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (cyc[i], cyc[(i + 1) % n]);
                let (c, d) = (cyc[j], cyc[(j + 1) % n]);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let g = across(f, a, b);
                let h = across(f, c, d);
                if faces[g].iter().any(|x| faces[h].contains(x)) {
                    out.push((f, g.min(h), g.max(h)));
                }
            }
        }
    }
    out.sort_unstable();
    out
}
