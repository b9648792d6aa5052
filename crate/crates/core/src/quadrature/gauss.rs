//! Gauss-Legendre product rules in spherical coordinates
//! `x_1 = cos θ_1, x_2 = sin θ_1 cos θ_2, ..., x_{n+1} = sin θ_1 ⋯ sin θ_n`
//! with Jacobian `Π_k sin^{n-k} θ_k`.

use std::f64::consts::{FRAC_PI_2, PI};

use super::{Engine, Region, RuleMeta, SphereRule};
use crate::error::{Error, Result};
use crate::Real;

/// Largest sphere dimension a product rule is built for.
pub const MAX_GAUSS_DIM: usize = 8;
/// Cap on the number of nodes in a single product rule.
pub const MAX_RULE_NODES: usize = 40_000_000;
/// Ratio between successive panel widths in graded rules.
const GRADING_RATIO: f64 = 0.1;

/// `k`-point Gauss-Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(k: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; k];
    let mut w = vec![0.0; k];
    let kf = k as f64;
    for i in 0..k.div_ceil(2) {
        let mut t = (PI * (i as f64 + 0.75) / (kf + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(k, t);
            let step = p / d;
            t -= step;
            if step.abs() <= 1e-16 * t.abs().max(1.0) {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(k, t);
        let wi = 2.0 / ((1.0 - t * t) * dp * dp);
        x[i] = -t;
        x[k - 1 - i] = t;
        w[i] = wi;
        w[k - 1 - i] = wi;
    }
    if k % 2 == 1 {
        x[k / 2] = 0.0;
    }
    (x, w)
}

fn legendre_with_derivative(k: usize, t: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, t);
    if k == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=k {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * t * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = k as f64 * (t * p1 - p0) / (t * t - 1.0);
    (p1, d)
}

/// Panel breakpoints of one quarter segment `[lo, lo + π/2]`, geometrically
/// refined toward both ends with `levels` extra panels on each side.
fn quarter_panels(lo: f64, levels: usize) -> Vec<(f64, f64)> {
    let b = FRAC_PI_2;
    if levels == 0 {
        return vec![(lo, lo + b)];
    }
    let mut rel = vec![0.0];
    rel.extend((1..=levels).rev().map(|j| 0.5 * GRADING_RATIO.powi(j as i32)));
    rel.push(0.5);
    rel.extend((1..=levels).map(|j| 1.0 - 0.5 * GRADING_RATIO.powi(j as i32)));
    rel.push(1.0);
    rel.windows(2).map(|w| (lo + b * w[0], lo + b * w[1])).collect()
}

/// One-dimensional composite rule for one angle.
fn axis_rule(panels: &[(f64, f64)], k: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(k);
    let mut nodes = Vec::with_capacity(panels.len() * k);
    let mut weights = Vec::with_capacity(panels.len() * k);
    for &(lo, hi) in panels {
        let half = 0.5 * (hi - lo);
        for (xi, wi) in x.iter().zip(&w) {
            nodes.push(lo + half * (xi + 1.0));
            weights.push(half * wi);
        }
    }
    (nodes, weights)
}

/// Panels for angle `axis` (0-based) of an `n`-sphere rule.
fn panels_for(axis: usize, n: usize, region: Region, levels: usize) -> Vec<(f64, f64)> {
    let quarters = match region {
        Region::Octant => 1,
        Region::Full if axis + 1 < n => 2,
        Region::Full => 4,
    };
    if levels > 0 {
        return (0..quarters).flat_map(|q| quarter_panels(q as f64 * FRAC_PI_2, levels)).collect();
    }
    match quarters {
        1 => vec![(0.0, FRAC_PI_2)],
        2 => vec![(0.0, PI)],
        // Two half-turn panels keep the rule invariant under x -> -x.
        _ => vec![(0.0, PI), (PI, 2.0 * PI)],
    }
}

/// Tensor Gauss-Legendre rule on `[0,π/2]^n` or `[0,π]^{n-1} × [0,2π]`.
pub fn gauss_product_rule<T: Real>(n: usize, nodes_per_axis: usize, region: Region) -> Result<SphereRule<T>> {
    graded_gauss_rule(n, nodes_per_axis, region, 0)
}

/// Composite product rule whose quarter segments are split into panels that
/// shrink geometrically (ratio 0.1) toward both ends, `levels` per side.
/// `nodes_per_axis` then counts nodes per panel. `levels = 0` gives the plain
/// product rule. Grading resolves integrands with features of width
/// `~10^{-levels}` next to coordinate hyperplanes, as produced by very
/// eccentric coordinate bodies.
pub fn graded_gauss_rule<T: Real>(n: usize, nodes_per_axis: usize, region: Region, levels: usize) -> Result<SphereRule<T>> {
    let mut rule = build(n, nodes_per_axis, region, levels)?;
    rule.coarse = Some(Box::new(build(n, (nodes_per_axis / 2).max(1), region, levels)?));
    Ok(rule)
}

fn build<T: Real>(n: usize, k: usize, region: Region, levels: usize) -> Result<SphereRule<T>> {
    if n == 0 || n > MAX_GAUSS_DIM {
        return Err(Error::InvalidInput(format!("product rules need 1 <= n <= {MAX_GAUSS_DIM}, got {n}")));
    }
    if k == 0 {
        return Err(Error::InvalidInput("nodes_per_axis must be >= 1".into()));
    }
    let axes: Vec<(Vec<f64>, Vec<f64>)> = (0..n).map(|j| axis_rule(&panels_for(j, n, region, levels), k)).collect();
    let total = axes.iter().try_fold(1usize, |acc, (x, _)| acc.checked_mul(x.len()));
    let total = match total {
        Some(t) if t <= MAX_RULE_NODES => t,
        _ => return Err(Error::InvalidInput(format!("product rule would exceed {MAX_RULE_NODES} nodes"))),
    };
    let d = n + 1;
    let mut dirs = Vec::with_capacity(total * d);
    let mut angles = Vec::with_capacity(total * n);
    let mut weights = Vec::with_capacity(total);
    let mut idx = vec![0usize; n];
    for _ in 0..total {
        let mut s = 1.0;
        let mut w = 1.0;
        for (j, &i) in idx.iter().enumerate() {
            let th = axes[j].0[i];
            let (sn, cs) = th.sin_cos();
            dirs.push(T::lit(s * cs));
            angles.push(T::lit(th));
            w *= axes[j].1[i] * sn.powi((n - 1 - j) as i32);
            s *= sn;
        }
        dirs.push(T::lit(s));
        weights.push(T::lit(w));
        // Mixed-radix increment, last angle fastest.
        for j in (0..n).rev() {
            idx[j] += 1;
            if idx[j] < axes[j].0.len() {
                break;
            }
            idx[j] = 0;
        }
    }
    let engine = match region {
        Region::Octant => Engine::GaussOctant,
        Region::Full => Engine::GaussFull,
    };
    Ok(SphereRule {
        n,
        dirs,
        weights,
        angles: Some(angles),
        engine,
        meta: RuleMeta::Gauss { nodes_per_axis: k, levels },
        coarse: None,
    })
}
