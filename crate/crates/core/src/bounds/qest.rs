//! Monomial upper bounds for the model integral `S(β, a)` with
//! `a_i = γ_i a_{i+1}`, `a_{n+1} = 1`, checked at the exponent level.

use rayon::prelude::*;

use super::fit::ols;
use crate::error::{Error, Result};
use crate::functionals::s_integral;
use crate::quadrature::{EngineChoice, RegionChoice, RuleConfig};
use crate::Real;

/// Per-axis slopes may exceed the prediction by at most this.
pub const AXIS_SLOPE_TOL: f64 = 0.05;

fn integer_in_range<T: Real>(x: T, n: usize) -> Option<usize> {
    let r = x.round();
    if x == r && r >= T::one() && r <= T::from_usize_lossy(n) {
        r.to_usize()
    } else {
        None
    }
}

/// Exponents `(e_1, ..., e_{n+1})` with `S(β, a) <= C Π a_k^{e_k}`:
/// for `k-1 < β < k <= n`, `k-1` entries `-1`, then `k-1-β`, then zeros;
/// for `β > n`, `n` entries `-1` then `n-β`.
///
/// Integer `β` in `[1, n]` carries a logarithmic factor instead and fails
/// with `IntegerBetaCase`.
pub fn qest_exponents<T: Real>(beta: T, n: usize) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("sphere dimension n must be >= 1".into()));
    }
    if !(beta.is_finite() && beta > T::zero()) {
        return Err(Error::InvalidInput(format!("beta must be positive, got {beta}")));
    }
    if let Some(k) = integer_in_range(beta, n) {
        return Err(Error::IntegerBetaCase(k));
    }
    let nf = T::from_usize_lossy(n);
    let mut e = vec![T::zero(); n + 1];
    if beta > nf {
        for x in e.iter_mut().take(n) {
            *x = -T::one();
        }
        e[n] = nf - beta;
    } else {
        let k = beta.floor().to_usize().unwrap_or(0) + 1;
        for x in e.iter_mut().take(k - 1) {
            *x = -T::one();
        }
        e[k - 1] = T::from_usize_lossy(k - 1) - beta;
    }
    Ok(e)
}

/// Exponents of the reciprocal form `S(α, 1/a_{n+1}, ..., 1/a_1) <= C Π a_k^{e_k}`,
/// obtained by the substitution `a -> 1/a` reversed.
pub fn pest_exponents<T: Real>(alpha: T, n: usize) -> Result<Vec<T>> {
    let q = qest_exponents(alpha, n)?;
    Ok(q.into_iter().rev().map(|x| -x).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundForm {
    /// `S(β, a_1, ..., a_{n+1})`.
    Direct,
    /// `S(α, 1/a_{n+1}, ..., 1/a_1)`.
    Reciprocal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LatticePoint<T> {
    pub gammas: Vec<T>,
    pub a: Vec<T>,
    pub log_s: T,
    pub log_bound: T,
    /// `log S - log bound` (natural logs); bounded above by the constant.
    pub residual: T,
    pub error_indicator: T,
}

/// Empirical slope of `log S` in `log γ_axis` along one lattice line.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisSlope<T> {
    pub axis: usize,
    /// The other coordinates of the line.
    pub fixed: Vec<T>,
    pub empirical: T,
    pub predicted: T,
    /// Slope of the residual: `empirical - predicted` once the log factor
    /// of integer exponents is accounted for.
    pub excess: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub form: BoundForm,
    pub exponent: T,
    pub n: usize,
    /// Monomial exponents on `a`, power part only for integer cases.
    pub exponents: Vec<T>,
    pub integer_case: Option<usize>,
    pub points: Vec<LatticePoint<T>>,
    /// Empirical stand-in for `log C`: the largest residual.
    pub log_constant: T,
    pub min_residual: T,
    pub axis_slopes: Vec<AxisSlope<T>>,
    pub max_excess: T,
}

impl<T: Real> BoundReport<T> {
    pub fn passed(&self) -> bool {
        self.max_excess <= T::lit(AXIS_SLOPE_TOL)
    }
}

/// Checks the direct bound on the lattice `gamma_grid^n`.
pub fn verify_qest<T: Real>(beta: T, n: usize, gamma_grid: &[T], cfg: &RuleConfig) -> Result<BoundReport<T>> {
    verify_bound(BoundForm::Direct, beta, n, gamma_grid, cfg)
}

/// Checks the reciprocal bound on the lattice `gamma_grid^n`.
pub fn verify_pest<T: Real>(alpha: T, n: usize, gamma_grid: &[T], cfg: &RuleConfig) -> Result<BoundReport<T>> {
    verify_bound(BoundForm::Reciprocal, alpha, n, gamma_grid, cfg)
}

/// Semi-axes `a_{n+1} = 1`, `a_i = γ_i a_{i+1}`.
pub fn semiaxes_from_ratios<T: Real>(gammas: &[T]) -> Vec<T> {
    let n = gammas.len();
    let mut a = vec![T::one(); n + 1];
    for i in (0..n).rev() {
        a[i] = a[i + 1] * gammas[i];
    }
    a
}

fn verify_bound<T: Real>(form: BoundForm, p: T, n: usize, grid: &[T], cfg: &RuleConfig) -> Result<BoundReport<T>> {
    let lo = T::lit(2f64.sqrt() * (1.0 - 1e-12));
    let hi = T::lit(1e3 * (1.0 + 1e-12));
    if grid.len() < 3 {
        return Err(Error::InvalidInput("gamma grid needs at least 3 values".into()));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) || grid.iter().any(|&g| !(g >= lo && g <= hi)) {
        return Err(Error::InvalidInput("gamma grid must be strictly increasing within [sqrt 2, 1e3]".into()));
    }
    let integer_case = integer_in_range(p, n);
    let exponents = match integer_case {
        None => match form {
            BoundForm::Direct => qest_exponents(p, n)?,
            BoundForm::Reciprocal => pest_exponents(p, n)?,
        },
        Some(k) => {
            let mut e: Vec<T> = (0..=n).map(|i| if i < k { -T::one() } else { T::zero() }).collect();
            if form == BoundForm::Reciprocal {
                e = e.into_iter().rev().map(|x| -x).collect();
            }
            e
        }
    };
    let m = grid.len();
    let total = m.checked_pow(n as u32).ok_or_else(|| Error::InvalidInput("lattice too large".into()))?;
    let rule_cfg = RuleConfig { engine: EngineChoice::Gauss, region: RegionChoice::Octant, ..*cfg };

    let points: Vec<Result<LatticePoint<T>>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let gammas = lattice_point(grid, n, idx);
            let a = semiaxes_from_ratios(&gammas);
            let (args, ratios) = match form {
                BoundForm::Direct => (a.clone(), gammas.clone()),
                // b_r = 1/a_{n+2-r}, so b_r / b_{r+1} = γ_{n+1-r}.
                BoundForm::Reciprocal => (a.iter().rev().map(|x| x.recip()).collect(), gammas.iter().rev().copied().collect()),
            };
            let aspect = a[0].as_f64();
            let rule = rule_cfg.build::<T>(n, true, aspect)?;
            let s = s_integral(p, &args, &rule)?;
            let mut log_bound = exponents.iter().zip(&a).fold(T::zero(), |acc, (&e, &x)| acc + e * x.ln());
            if let Some(k) = integer_case {
                let lg = ratios[k - 1..].iter().fold(T::one(), |mx, &g| mx.max(g.ln()));
                log_bound += lg.ln();
            }
            let log_s = s.value.ln();
            Ok(LatticePoint {
                gammas,
                a,
                log_s,
                log_bound,
                residual: log_s - log_bound,
                error_indicator: s.error_indicator,
            })
        })
        .collect();
    let points = points.into_iter().collect::<Result<Vec<_>>>()?;

    let log_constant = points.iter().fold(T::neg_infinity(), |mx, p| mx.max(p.residual));
    let min_residual = points.iter().fold(T::infinity(), |mn, p| mn.min(p.residual));
    let xs_all: Vec<T> = grid.iter().map(|g| g.ln()).collect();
    let h = 3.max(m.div_ceil(2));
    let xs = &xs_all[m - h..];
    let mut axis_slopes = Vec::new();
    for axis in 0..n {
        let predicted = exponents[..=axis].iter().fold(T::zero(), |s, &e| s + e);
        for base in 0..total {
            if digit(base, m, n, axis) != 0 {
                continue;
            }
            let line: Vec<&LatticePoint<T>> =
                (m - h..m).map(|j| &points[base + j * m.pow((n - 1 - axis) as u32)]).collect();
            let ys_s: Vec<T> = line.iter().map(|p| p.log_s).collect();
            let ys_r: Vec<T> = line.iter().map(|p| p.residual).collect();
            let fixed = line[0].gammas.iter().enumerate().filter(|(i, _)| *i != axis).map(|(_, &g)| g).collect();
            axis_slopes.push(AxisSlope {
                axis,
                fixed,
                empirical: ols(xs, &ys_s).0,
                predicted,
                excess: ols(xs, &ys_r).0,
            });
        }
    }
    let max_excess = axis_slopes.iter().fold(T::neg_infinity(), |mx, s| mx.max(s.excess));
    let report = BoundReport {
        form,
        exponent: p,
        n,
        exponents,
        integer_case,
        points,
        log_constant,
        min_residual,
        axis_slopes,
        max_excess,
    };
    if !report.passed() {
        let worst = report.axis_slopes.iter().max_by(|a, b| a.excess.partial_cmp(&b.excess).unwrap()).expect("nonempty");
        return Err(Error::BoundViolation {
            gammas: worst.fixed.iter().map(|g| g.as_f64()).collect(),
            detail: format!(
                "axis {} slope {:.4} exceeds predicted {:.4} by {:.4}",
                worst.axis + 1,
                worst.empirical.as_f64(),
                worst.predicted.as_f64(),
                worst.excess.as_f64()
            ),
        });
    }
    Ok(report)
}

/// Lattice index in mixed radix `m`, first axis most significant.
fn lattice_point<T: Real>(grid: &[T], n: usize, idx: usize) -> Vec<T> {
    let m = grid.len();
    (0..n).map(|axis| grid[digit(idx, m, n, axis)]).collect()
}

fn digit(idx: usize, m: usize, n: usize, axis: usize) -> usize {
    (idx / m.pow((n - 1 - axis) as u32)) % m
}
