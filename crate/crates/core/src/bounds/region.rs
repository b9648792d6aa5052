use rayon::prelude::*;

use super::admissibility::{admissible, predicted_product_slope};
use super::scan::{gamma_grid, gamma_scan, CenterMode, Family, Verdict};
use crate::error::{Error, Result};
use crate::functionals::ExponentPair;
use crate::quadrature::RuleConfig;
use crate::Real;

/// Largest `γ` a region scan may use.
pub const REGION_GAMMA_MAX: f64 = 1e5;

#[derive(Debug, Clone, PartialEq)]
pub enum EmpiricalClass {
    Bounded,
    Divergent,
    Indeterminate,
    Unresolved,
    Failed(String),
}

impl EmpiricalClass {
    pub fn name(&self) -> &str {
        match self {
            Self::Bounded => "bounded",
            Self::Divergent => "divergent",
            Self::Indeterminate => "indeterminate",
            Self::Unresolved => "unresolved",
            Self::Failed(_) => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionRow<T> {
    pub alpha: T,
    pub beta: T,
    pub admissible: bool,
    /// Pair actually scanned on the axis family: `(α, β)` when `α >= β`,
    /// `(β, α)` otherwise (the polar family of the original pair).
    pub scanned: (T, T),
    pub predicted_slope: T,
    pub fitted_slope: Option<T>,
    pub class: EmpiricalClass,
    /// Whether predicate and empirical class agree; `None` when the class is
    /// not determinate.
    pub agrees: Option<bool>,
}

/// Default grid of a region scan: log-spaced from 10 to `gamma_max`, two
/// points per decade.
pub fn region_gammas(gamma_max: f64) -> Result<Vec<f64>> {
    if !(gamma_max >= 1e2 && gamma_max <= REGION_GAMMA_MAX) {
        return Err(Error::InvalidInput(format!("gamma_max must lie in [1e2, {REGION_GAMMA_MAX:e}]")));
    }
    let count = ((2.0 * (gamma_max / 10.0).log10()).round() as usize + 1).max(4);
    gamma_grid(10.0, gamma_max, count, false)
}

/// Classifies each `(α, β)` of the grid by its admissibility and by the
/// fitted growth slope of the product along the eccentric rhombus family
/// that probes the binding condition. Per-pair failures are recorded in the
/// row; rows come back in grid order, `α` outermost.
pub fn region_scan<T: Real>(n: usize, alphas: &[T], betas: &[T], gamma_max: f64, cfg: &RuleConfig) -> Result<Vec<RegionRow<T>>> {
    if alphas.is_empty() || betas.is_empty() {
        return Err(Error::InvalidInput("alpha and beta grids must be nonempty".into()));
    }
    let gammas: Vec<T> = region_gammas(gamma_max)?.into_iter().map(T::lit).collect();
    let pairs: Vec<(T, T)> = alphas.iter().flat_map(|&a| betas.iter().map(move |&b| (a, b))).collect();
    for &(a, b) in &pairs {
        ExponentPair::new(a, b, n)?;
    }
    Ok(pairs
        .par_iter()
        .map(|&(alpha, beta)| {
            let pair = ExponentPair::new(alpha, beta, n).expect("validated");
            let scanned = if alpha >= beta { pair } else { pair.swapped() };
            let predicted = predicted_product_slope(&scanned);
            let adm = match admissible(&pair) {
                Ok(a) => a.main_holds,
                Err(e) => return failed_row(alpha, beta, false, &scanned, predicted, e),
            };
            let (class, slope) = match gamma_scan(&Family::RhombusAxis, &scanned, &gammas, cfg, CenterMode::Origin) {
                Ok(scan) => {
                    let class = match scan.verdict {
                        Verdict::Bounded => EmpiricalClass::Bounded,
                        Verdict::Divergent => EmpiricalClass::Divergent,
                        _ => EmpiricalClass::Indeterminate,
                    };
                    (class, Some(scan.fit.slope))
                }
                Err(Error::UnresolvedAsymptotics { scan, .. }) => (EmpiricalClass::Unresolved, Some(T::lit(scan.fit.slope))),
                Err(e) => return failed_row(alpha, beta, adm, &scanned, predicted, e),
            };
            let agrees = match class {
                EmpiricalClass::Bounded => Some(adm),
                EmpiricalClass::Divergent => Some(!adm),
                _ => None,
            };
            RegionRow {
                alpha,
                beta,
                admissible: adm,
                scanned: (scanned.alpha(), scanned.beta()),
                predicted_slope: predicted,
                fitted_slope: slope,
                class,
                agrees,
            }
        })
        .collect())
}

fn failed_row<T: Real>(alpha: T, beta: T, adm: bool, scanned: &ExponentPair<T>, predicted: T, e: Error) -> RegionRow<T> {
    RegionRow {
        alpha,
        beta,
        admissible: adm,
        scanned: (scanned.alpha(), scanned.beta()),
        predicted_slope: predicted,
        fitted_slope: None,
        class: EmpiricalClass::Failed(e.to_string()),
        agrees: None,
    }
}
