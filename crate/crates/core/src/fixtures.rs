//! Seeded random bodies for property checks. Every generator is a pure
//! function of `(seed, index)`.

use crate::bodies::BodySpec;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::rng::{normal_vec, uniform_vec};
use crate::scalar::dot;

/// Semi-axes in `[1, max_aspect]`, log-uniform, with the extremes attained
/// by two distinct coordinates when `d >= 2`.
pub fn random_semiaxes(seed: u64, index: u64, d: usize, max_aspect: f64) -> Vec<f64> {
    let u = uniform_vec(seed, index, d + 2, 0.0, 1.0);
    let top = max_aspect.ln();
    let mut a: Vec<f64> = (0..d).map(|i| (u[i] * top).exp()).collect();
    let i = (u[d] * d as f64) as usize % d;
    let j = (i + 1 + (u[d + 1] * (d - 1) as f64) as usize % (d - 1).max(1)) % d;
    a[i] = 1.0;
    a[j] = max_aspect;
    a
}

/// Rhombus, box or ellipsoid (by `index % 3`) with aspect at most `max_aspect`.
pub fn random_coordinate_body(seed: u64, index: u64, n: usize, max_aspect: f64) -> BodySpec<f64> {
    let a = random_semiaxes(seed, index, n + 1, max_aspect);
    match index % 3 {
        0 => BodySpec::rhombus(a),
        1 => BodySpec::box_(a),
        _ => BodySpec::ellipsoid(a),
    }
    .expect("positive semi-axes")
}

/// `I + G/2` for Gaussian `G`, redrawn until reasonably conditioned.
pub fn random_linear_map(seed: u64, index: u64, d: usize) -> Matrix<f64> {
    for attempt in 0..64u64 {
        let g = normal_vec(seed, index.wrapping_mul(64).wrapping_add(attempt) ^ 0x9e37_79b9, d * d);
        let rows: Vec<Vec<f64>> =
            (0..d).map(|i| (0..d).map(|j| 0.5 * g[i * d + j] + if i == j { 1.0 } else { 0.0 }).collect()).collect();
        let m = Matrix::from_rows(&rows).expect("square");
        let det = m.determinant().abs();
        if det > 0.05 * m.frobenius_norm().powi(d as i32) / (d as f64).powf(d as f64 / 2.0) {
            return m;
        }
    }
    Matrix::identity(d)
}

/// Symmetric H-polytope with its vertex list: `facet_pairs` random normals,
/// offsets in `[0.5, 1.5]`, vertices by enumerating all `d`-subsets of
/// facets and sign patterns. Redundant facets are dropped. Retries with the
/// next stream until the vertex count is at most `max_vertex_pairs`.
pub fn random_symmetric_polytope(seed: u64, index: u64, n: usize, facet_pairs: usize, max_vertex_pairs: usize) -> BodySpec<f64> {
    let d = n + 1;
    let m = facet_pairs.max(d);
    for attempt in 0..256u64 {
        let stream = index.wrapping_mul(256).wrapping_add(attempt);
        let g = normal_vec(seed ^ 0x5bd1_e995, stream, m * d);
        let h = uniform_vec(seed ^ 0x27d4_eb2f, stream, m, 0.5, 1.5);
        let normals: Vec<Vec<f64>> = g.chunks(d).map(|c| c.to_vec()).collect();
        if let Some(spec) = polytope_from_facets(&normals, &h, max_vertex_pairs) {
            return spec;
        }
    }
    BodySpec::box_(vec![1.0; d]).expect("unit cube")
}

fn polytope_from_facets(normals: &[Vec<f64>], offsets: &[f64], max_pairs: usize) -> Option<BodySpec<f64>> {
    let d = normals[0].len();
    let m = normals.len();
    let mut vertices: Vec<Vec<f64>> = Vec::new();
    for subset in combinations(m, d) {
        let rows: Vec<Vec<f64>> = subset.iter().map(|&j| normals[j].clone()).collect();
        let inv = Matrix::from_rows(&rows).ok()?.inverse(1e-10);
        let Ok(inv) = inv else { continue };
        // First sign fixed: one vertex per ± pair.
        for mask in 0..(1usize << (d - 1)) {
            let rhs: Vec<f64> = subset
                .iter()
                .enumerate()
                .map(|(k, &j)| if k > 0 && mask >> (k - 1) & 1 == 1 { -offsets[j] } else { offsets[j] })
                .collect();
            let v = inv.mul_vec(&rhs);
            let feasible = normals.iter().zip(offsets).all(|(nu, &hj)| dot(nu, &v).abs() <= hj * (1.0 + 1e-11));
            let dup = vertices.iter().any(|w| {
                let close = |s: f64| w.iter().zip(&v).all(|(a, b)| (a - s * b).abs() <= 1e-9 * (1.0 + a.abs()));
                close(1.0) || close(-1.0)
            });
            if feasible && !dup {
                vertices.push(v);
            }
        }
    }
    if vertices.len() > max_pairs || vertices.len() < d {
        return None;
    }
    let keep: Vec<usize> = (0..m)
        .filter(|&j| vertices.iter().any(|v| dot(&normals[j], v).abs() >= offsets[j] * (1.0 - 1e-9)))
        .collect();
    let normals: Vec<Vec<f64>> = keep.iter().map(|&j| normals[j].clone()).collect();
    let offsets: Vec<f64> = keep.iter().map(|&j| offsets[j]).collect();
    BodySpec::hpolytope(normals, offsets, Some(vertices)).ok()
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// A mix of all body kinds in `R^{n+1}`: coordinate bodies, their linear
/// images, and H-polytopes with vertices.
pub fn random_body(seed: u64, index: u64, n: usize) -> Result<BodySpec<f64>> {
    let d = n + 1;
    Ok(match index % 5 {
        0..=2 => random_coordinate_body(seed, index, n, 10.0),
        3 => BodySpec::linear_image(random_coordinate_body(seed, index / 5, n, 5.0), random_linear_map(seed, index, d))?,
        _ => random_symmetric_polytope(seed, index, n, d + 2, 40),
    })
}
