//! Minimization of the product (or of the polar factor alone) over interior
//! centers by Nelder-Mead simplex descent.

use super::{check_rule, ExponentPair};
use crate::bodies::BodySpec;
use crate::error::{Error, Result};
use crate::quadrature::{Engine, SphereRule};
use crate::scalar::{dot, pairwise_sum};
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SantaloMode {
    /// `I(z)^{1/α} J(z)^{1/β}`.
    #[default]
    Product,
    /// `J(z)` alone, the classical Santaló-point objective.
    PolarOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SantaloOptions<T> {
    pub max_iter: usize,
    /// Start point; the origin when `None`.
    pub start: Option<Vec<T>>,
    /// Trial centers with a support margin at or below this are infeasible.
    pub margin_floor: T,
    /// Initial simplex edge as a fraction of the diameter.
    pub initial_step: T,
}

impl<T: Real> Default for SantaloOptions<T> {
    fn default() -> Self {
        Self { max_iter: 2000, start: None, margin_floor: T::lit(1e-9), initial_step: T::lit(0.05) }
    }
}

/// Result of the center search. In polar-only mode the two values hold the
/// objective `J` rather than the product.
#[derive(Debug, Clone, PartialEq)]
pub struct SantaloResult<T> {
    pub z: Vec<T>,
    pub product_at_z: T,
    pub product_at_origin: T,
    pub iterations: usize,
    /// The simplex shrank below `1e-8 · diam` before the iteration cap.
    pub converged: bool,
    /// Best objective value after each iteration (non-increasing).
    pub history: Vec<T>,
}

struct Objective<'a, T> {
    spec: &'a BodySpec<T>,
    rule: &'a SphereRule<T>,
    support: Vec<T>,
    alpha: T,
    beta: T,
    mode: SantaloMode,
    floor: T,
}

impl<T: Real> Objective<'_, T> {
    fn eval(&self, z: &[T]) -> T {
        let inf = T::infinity();
        let mut jt = Vec::with_capacity(self.rule.len());
        for (i, (u, &h)) in self.rule.directions().zip(&self.support).enumerate() {
            let m = h - dot(z, u);
            if m <= self.floor {
                return inf;
            }
            jt.push(self.rule.weight(i) * m.powf(-self.beta));
        }
        let j = pairwise_sum(&jt);
        if self.mode == SantaloMode::PolarOnly {
            return j;
        }
        let mut it = Vec::with_capacity(self.rule.len());
        for (i, u) in self.rule.directions().enumerate() {
            match self.spec.radial_from(z, u) {
                Ok(r) => it.push(self.rule.weight(i) * r.powf(self.alpha)),
                Err(_) => return inf,
            }
        }
        let v = pairwise_sum(&it).powf(self.alpha.recip()) * j.powf(self.beta.recip());
        if v.is_finite() {
            v
        } else {
            inf
        }
    }
}

/// Searches for the interior center minimizing the product (or `J`).
///
/// Uses the full-sphere `rule` for both factors; octant rules are rejected
/// because off-origin integrands are not unconditional. Returns the origin
/// whenever it is at least as good as the descent result.
pub fn santalo_point<T: Real>(
    spec: &BodySpec<T>,
    pair: &ExponentPair<T>,
    rule: &SphereRule<T>,
    mode: SantaloMode,
    opts: &SantaloOptions<T>,
) -> Result<SantaloResult<T>> {
    let d = spec.dim();
    check_rule(rule, d)?;
    if rule.engine() == Engine::GaussOctant {
        return Err(Error::SymmetryMismatch);
    }
    let support = rule.directions().map(|u| spec.support_at(u)).collect::<Result<Vec<T>>>()?;
    let obj = Objective { spec, rule, support, alpha: pair.alpha(), beta: pair.beta(), mode, floor: opts.margin_floor };
    let diam = T::lit(2.0) * obj.support.iter().fold(T::zero(), |m, &h| m.max(h));

    let origin = vec![T::zero(); d];
    let f_origin = obj.eval(&origin);
    let start = opts.start.clone().unwrap_or_else(|| origin.clone());
    if start.len() != d {
        return Err(Error::DimensionMismatch { what: "start", expected: d, got: start.len() });
    }
    let f_start = obj.eval(&start);
    if !f_start.is_finite() {
        return Err(Error::CenterNotInterior { direction: crate::error::to_f64_vec(&start) });
    }

    let step = opts.initial_step * diam;
    let mut simplex: Vec<(Vec<T>, T)> = vec![(start.clone(), f_start)];
    for i in 0..d {
        let mut x = start.clone();
        x[i] += step;
        let fx = obj.eval(&x);
        simplex.push((x, fx));
    }

    let tol = T::lit(1e-8) * diam;
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let mut history = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    while iterations < opts.max_iter {
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        if simplex_diameter(&simplex) < tol {
            converged = true;
            break;
        }
        iterations += 1;
        let worst = simplex[d].clone();
        let centroid: Vec<T> = (0..d)
            .map(|k| simplex[..d].iter().fold(T::zero(), |s, v| s + v.0[k]) / T::from_usize_lossy(d))
            .collect();
        let along = |t: T| -> Vec<T> { centroid.iter().zip(&worst.0).map(|(&c, &w)| c + t * (c - w)).collect() };
        let xr = along(T::one());
        let fr = obj.eval(&xr);
        if fr < simplex[0].1 {
            let xe = along(two);
            let fe = obj.eval(&xe);
            simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[d - 1].1 {
            simplex[d] = (xr, fr);
        } else {
            let (xc, fc, accept) = if fr < worst.1 {
                let xc = along(half);
                let fc = obj.eval(&xc);
                (xc, fc, fc <= fr)
            } else {
                let xc = along(-half);
                let fc = obj.eval(&xc);
                (xc, fc, fc < worst.1)
            };
            if accept {
                simplex[d] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for v in simplex.iter_mut().skip(1) {
                    let x: Vec<T> = best.iter().zip(&v.0).map(|(&b, &x)| b + half * (x - b)).collect();
                    let fx = obj.eval(&x);
                    *v = (x, fx);
                }
            }
        }
        let best = simplex.iter().fold(T::infinity(), |m, v| m.min(v.1));
        history.push(best);
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    let (mut z, mut fz) = simplex.swap_remove(0);

    // Coordinate polish so that no axis probe at δ = 1e-5·diam improves.
    let delta = T::lit(1e-5) * diam;
    for _ in 0..100 {
        let mut moved = false;
        for i in 0..d {
            for s in [T::one(), -T::one()] {
                let mut x = z.clone();
                x[i] += s * delta;
                let fx = obj.eval(&x);
                if fx < fz {
                    z = x;
                    fz = fx;
                    moved = true;
                }
            }
        }
        if !moved {
            break;
        }
    }
    if f_origin <= fz {
        z = origin;
        fz = f_origin;
    }
    Ok(SantaloResult { z, product_at_z: fz, product_at_origin: f_origin, iterations, converged, history })
}

fn simplex_diameter<T: Real>(s: &[(Vec<T>, T)]) -> T {
    let mut m = T::zero();
    for (i, a) in s.iter().enumerate() {
        for b in &s[i + 1..] {
            let d2 = a.0.iter().zip(&b.0).fold(T::zero(), |acc, (&x, &y)| acc + (x - y) * (x - y));
            m = m.max(d2.sqrt());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::{bs_product, polar_radial_power_integral};
    use crate::linalg::Matrix;
    use crate::quadrature::{gauss_product_rule, Region};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn polar_only_minimizer_of_symmetric_body_is_origin() {
        let spec = BodySpec::box_(vec![2.0, 1.0, 0.5]).unwrap();
        let rule = gauss_product_rule(2, 12, Region::Full).unwrap();
        let pair = ExponentPair::new(3.0, 3.0, 2).unwrap();
        let opts = SantaloOptions { start: Some(vec![0.3, -0.2, 0.1]), ..SantaloOptions::default() };
        let res = santalo_point(&spec, &pair, &rule, SantaloMode::PolarOnly, &opts).unwrap();
        let diam = 2.0 * (4.0f64 + 1.0 + 0.25).sqrt();
        assert!(crate::scalar::norm(&res.z) <= 1e-6 * diam, "{:?}", res.z);
        let j0 = polar_radial_power_integral(&spec, &[0.0; 3], 3.0, &rule).unwrap().value;
        assert_relative_eq!(res.product_at_origin, j0, max_relative = 1e-14);
    }

    #[test]
    fn ball_product_is_minimized_at_origin() {
        let ball = BodySpec::unit_ball(2).unwrap();
        let rule = gauss_product_rule(2, 10, Region::Full).unwrap();
        let pair = ExponentPair::new(2.0, 4.0, 2).unwrap();
        let res = santalo_point(&ball, &pair, &rule, SantaloMode::Product, &SantaloOptions::default()).unwrap();
        assert!(crate::scalar::norm(&res.z) <= 1e-6);
        assert_relative_eq!(res.product_at_z, (4.0 * PI).powf(0.75), max_relative = 1e-9);
    }

    #[test]
    fn descent_from_forced_start_decreases_monotonically() {
        let spec = BodySpec::linear_image(BodySpec::unit_ball(2).unwrap(), Matrix::identity(3)).unwrap();
        let rule = gauss_product_rule(2, 10, Region::Full).unwrap();
        let pair = ExponentPair::new(3.0, 3.0, 2).unwrap();
        let opts = SantaloOptions { start: Some(vec![0.3, 0.0, 0.0]), ..SantaloOptions::default() };
        let res = santalo_point(&spec, &pair, &rule, SantaloMode::Product, &opts).unwrap();
        assert!(crate::scalar::norm(&res.z) <= 1e-4);
        assert!(res.history.windows(2).all(|w| w[1] <= w[0]));
        // Grid oracle along the segment from the start to the origin.
        let on_segment = |t: f64| bs_product(&spec, &[t, 0.0, 0.0], &pair, &rule).unwrap();
        let grid_min = (0..=30).map(|k| on_segment(0.3 * k as f64 / 30.0)).fold(f64::INFINITY, f64::min);
        assert!(res.product_at_z <= grid_min * (1.0 + 1e-12));
        assert!(res.product_at_z <= res.product_at_origin * (1.0 + 1e-12));
    }

    #[test]
    fn stationarity_holds_at_the_result() {
        let spec = BodySpec::rhombus(vec![1.5, 1.0]).unwrap();
        let rule = gauss_product_rule(1, 64, Region::Full).unwrap();
        let pair = ExponentPair::new(2.0, 2.0, 1).unwrap();
        let res = santalo_point(&spec, &pair, &rule, SantaloMode::Product, &SantaloOptions::default()).unwrap();
        let diam = 3.0;
        let delta = 1e-5 * diam;
        for i in 0..2 {
            for s in [-1.0, 1.0] {
                let mut z = res.z.clone();
                z[i] += s * delta;
                let f = bs_product(&spec, &z, &pair, &rule).unwrap();
                assert!(res.product_at_z <= f + 1e-9 * res.product_at_z);
            }
        }
    }

    #[test]
    fn octant_rules_and_bad_starts_are_rejected() {
        let spec = BodySpec::unit_ball(1).unwrap();
        let pair = ExponentPair::new(2.0, 2.0, 1).unwrap();
        let oct = gauss_product_rule(1, 8, Region::Octant).unwrap();
        assert_eq!(
            santalo_point(&spec, &pair, &oct, SantaloMode::Product, &SantaloOptions::default()),
            Err(Error::SymmetryMismatch)
        );
        let full = gauss_product_rule(1, 8, Region::Full).unwrap();
        let opts = SantaloOptions { start: Some(vec![2.0, 0.0]), ..SantaloOptions::default() };
        assert!(santalo_point(&spec, &pair, &full, SantaloMode::Product, &opts).is_err());
    }
}
