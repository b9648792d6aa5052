//! Growth of the product functional along families of increasingly
//! eccentric rhombi.

use rayon::prelude::*;

use super::admissibility::predicted_product_slope;
use super::fit::{fit_slope, ols, SlopeFit};
use crate::bodies::BodySpec;
use crate::error::{Error, Result};
use crate::functionals::{bs_product_parts, santalo_point, ExponentPair, SantaloMode, SantaloOptions};
use crate::quadrature::RuleConfig;
use crate::Real;

/// Largest admissible scan parameter; beyond it the model denominators lose
/// too much precision in double arithmetic.
pub const GAMMA_MAX: f64 = 1e6;
/// Fitted slopes at or below this count as bounded.
pub const BOUNDED_SLOPE_TOL: f64 = 0.02;
/// Divergent slopes must come within this of the prediction.
pub const DIVERGENT_SLOPE_TOL: f64 = 0.05;
/// Largest accepted disagreement between the two halves of the fit window.
pub const UNRESOLVED_TOL: f64 = 0.1;

/// One-parameter family of rhombi `D(a)` with `a_{n+1} = 1`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family<T> {
    /// `D(γ, 1, ..., 1)`.
    RhombusAxis,
    /// Consecutive ratios `a_i / a_{i+1} = γ^{c_i}` for the given powers.
    Custom { powers: Vec<T> },
}

impl<T: Real> Family<T> {
    pub fn semiaxes(&self, n: usize, gamma: T) -> Result<Vec<T>> {
        let powers = match self {
            Family::RhombusAxis => {
                let mut c = vec![T::zero(); n];
                c[0] = T::one();
                c
            }
            Family::Custom { powers } => {
                if powers.len() != n {
                    return Err(Error::DimensionMismatch { what: "family powers", expected: n, got: powers.len() });
                }
                if powers.iter().any(|c| !(c.is_finite() && *c >= T::zero())) {
                    return Err(Error::InvalidInput("family powers must be finite and nonnegative".into()));
                }
                powers.clone()
            }
        };
        let mut a = vec![T::one(); n + 1];
        for i in (0..n).rev() {
            a[i] = a[i + 1] * gamma.powf(powers[i]);
        }
        Ok(a)
    }

    pub fn describe(&self) -> String {
        match self {
            Family::RhombusAxis => "rhombus-axis D(gamma,1,...,1)".to_string(),
            Family::Custom { powers } => {
                let p: Vec<String> = powers.iter().map(|c| c.to_string()).collect();
                format!("rhombus custom ratios gamma^[{}]", p.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CenterMode {
    #[default]
    Origin,
    Santalo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Bounded,
    Divergent,
    Indeterminate,
    Unresolved,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Bounded => "bounded",
            Verdict::Divergent => "divergent",
            Verdict::Indeterminate => "indeterminate",
            Verdict::Unresolved => "unresolved",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow<T> {
    pub gamma: T,
    pub i_alpha: T,
    pub j_beta: T,
    pub product: T,
    pub i_error: T,
    pub j_error: T,
    pub center: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult<T> {
    pub family: String,
    pub alpha: T,
    pub beta: T,
    pub n: usize,
    pub gammas: Vec<T>,
    pub rows: Vec<ScanRow<T>>,
    /// Fit of `log10 product` on `log10 γ` over the upper half of the points.
    pub fit: SlopeFit<T>,
    /// Index of the first row in the fit window.
    pub window_start: usize,
    /// Slopes over the first and last parts of the fit window.
    pub sub_slopes: (T, T),
    /// `1 - n/α - 1/β` for the axis family.
    pub predicted_slope: Option<T>,
    pub verdict: Verdict,
}

impl<T: Real> ScanResult<T> {
    pub fn to_f64(&self) -> ScanResult<f64> {
        let c = |x: T| x.as_f64();
        ScanResult {
            family: self.family.clone(),
            alpha: c(self.alpha),
            beta: c(self.beta),
            n: self.n,
            gammas: self.gammas.iter().map(|&g| c(g)).collect(),
            rows: self
                .rows
                .iter()
                .map(|r| ScanRow {
                    gamma: c(r.gamma),
                    i_alpha: c(r.i_alpha),
                    j_beta: c(r.j_beta),
                    product: c(r.product),
                    i_error: c(r.i_error),
                    j_error: c(r.j_error),
                    center: r.center.iter().map(|&x| c(x)).collect(),
                })
                .collect(),
            fit: self.fit.to_f64(),
            window_start: self.window_start,
            sub_slopes: (c(self.sub_slopes.0), c(self.sub_slopes.1)),
            predicted_slope: self.predicted_slope.map(c),
            verdict: self.verdict,
        }
    }
}

/// Log-spaced (or linear) grid of `count` points on `[lo, hi]`.
pub fn gamma_grid(lo: f64, hi: f64, count: usize, linear: bool) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidInput(format!("gamma range {lo}:{hi} must satisfy 0 < lo < hi")));
    }
    if count < 2 {
        return Err(Error::InvalidInput("gamma grid needs at least 2 points".into()));
    }
    let m = (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            let t = i as f64 / m;
            if i == count - 1 {
                hi
            } else if linear {
                lo + t * (hi - lo)
            } else {
                10f64.powf(lo.log10() + t * (hi.log10() - lo.log10()))
            }
        })
        .collect())
}

fn validate_gammas<T: Real>(gammas: &[T]) -> Result<()> {
    if gammas.len() < 4 {
        return Err(Error::InvalidInput(format!("gamma scan needs at least 4 points, got {}", gammas.len())));
    }
    if gammas.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidInput("gammas must be strictly increasing".into()));
    }
    if gammas.iter().any(|&g| !(g >= T::one() && g <= T::lit(GAMMA_MAX))) {
        return Err(Error::InvalidInput(format!("gammas must lie in [1, {GAMMA_MAX:e}]")));
    }
    Ok(())
}

/// Evaluates `I_α`, `J_β` and the product for each `γ` (in parallel, rows in
/// input order) and fits the log-log slope over the upper half of the range.
///
/// Fails with `UnresolvedAsymptotics`, carrying the full result, when the
/// slopes over the first and second halves of the fit window differ by more
/// than 0.1.
pub fn gamma_scan<T: Real>(
    family: &Family<T>,
    pair: &ExponentPair<T>,
    gammas: &[T],
    cfg: &RuleConfig,
    center: CenterMode,
) -> Result<ScanResult<T>> {
    validate_gammas(gammas)?;
    let n = pair.n();
    let rows: Vec<Result<ScanRow<T>>> = gammas
        .par_iter()
        .map(|&gamma| {
            let a = family.semiaxes(n, gamma)?;
            let spec = BodySpec::rhombus(a)?;
            let aspect = spec.aspect_ratio().as_f64();
            let z = match center {
                CenterMode::Origin => vec![T::zero(); n + 1],
                CenterMode::Santalo => {
                    let rule = cfg.build(n, false, aspect)?;
                    santalo_point(&spec, pair, &rule, SantaloMode::Product, &SantaloOptions::default())?.z
                }
            };
            let unconditional = center == CenterMode::Origin;
            let rule = cfg.build(n, unconditional, aspect)?;
            let p = bs_product_parts(&spec, &z, pair, &rule)?;
            Ok(ScanRow {
                gamma,
                i_alpha: p.i.value,
                j_beta: p.j.value,
                product: p.product,
                i_error: p.i.error_indicator,
                j_error: p.j.error_indicator,
                center: z,
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    if let Some(r) = rows.iter().find(|r| !(r.product.is_finite() && r.product > T::zero())) {
        return Err(Error::InvalidInput(format!("non-positive or non-finite product at gamma {}", r.gamma)));
    }

    let xs: Vec<T> = gammas.iter().map(|g| g.log10()).collect();
    let ys: Vec<T> = rows.iter().map(|r| r.product.log10()).collect();
    let count = xs.len();
    let h = 3.max(count.div_ceil(2));
    let start = count - h;
    let fit = fit_slope(&xs[start..], &ys[start..])?;
    let s = 2.max(h.div_ceil(2));
    let lower = ols(&xs[start..start + s], &ys[start..start + s]).0;
    let upper = ols(&xs[count - s..], &ys[count - s..]).0;
    let predicted = match family {
        Family::RhombusAxis => Some(predicted_product_slope(pair)),
        Family::Custom { .. } => None,
    };
    let mut result = ScanResult {
        family: family.describe(),
        alpha: pair.alpha(),
        beta: pair.beta(),
        n,
        gammas: gammas.to_vec(),
        rows,
        fit,
        window_start: start,
        sub_slopes: (lower, upper),
        predicted_slope: predicted,
        verdict: classify(fit.slope, predicted),
    };
    if (upper - lower).abs() > T::lit(UNRESOLVED_TOL) {
        result.verdict = Verdict::Unresolved;
        return Err(Error::UnresolvedAsymptotics {
            lower: lower.as_f64(),
            upper: upper.as_f64(),
            scan: Box::new(result.to_f64()),
        });
    }
    Ok(result)
}

/// Bounded when the slope is at most 0.02; divergent when the prediction
/// exceeds 0.05 and the slope reaches at least the prediction minus 0.05.
pub fn classify<T: Real>(slope: T, predicted: Option<T>) -> Verdict {
    if slope <= T::lit(BOUNDED_SLOPE_TOL) {
        return Verdict::Bounded;
    }
    match predicted {
        Some(p) if p > T::lit(DIVERGENT_SLOPE_TOL) && slope >= p - T::lit(DIVERGENT_SLOPE_TOL) => Verdict::Divergent,
        _ => Verdict::Indeterminate,
    }
}
