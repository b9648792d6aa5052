use crate::error::{Error, Result};
use crate::Real;

/// Least-squares line `y = slope·x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit<T> {
    pub slope: T,
    pub intercept: T,
    pub r_squared: T,
    pub max_residual: T,
}

impl<T: Real> SlopeFit<T> {
    pub fn to_f64(&self) -> SlopeFit<f64> {
        SlopeFit {
            slope: self.slope.as_f64(),
            intercept: self.intercept.as_f64(),
            r_squared: self.r_squared.as_f64(),
            max_residual: self.max_residual.as_f64(),
        }
    }
}

/// Minimum span of `xs`, in decades.
pub const MIN_FIT_SPAN: f64 = 0.5;

/// Ordinary least squares of `ys` on `xs`, both in log10 units.
pub fn fit_slope<T: Real>(xs: &[T], ys: &[T]) -> Result<SlopeFit<T>> {
    if xs.len() != ys.len() {
        return Err(Error::DimensionMismatch { what: "ys", expected: xs.len(), got: ys.len() });
    }
    if xs.len() < 3 {
        return Err(Error::InvalidInput(format!("slope fit needs at least 3 points, got {}", xs.len())));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("slope fit needs finite values".into()));
    }
    if xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput("xs must be strictly increasing".into()));
    }
    let span = xs[xs.len() - 1] - xs[0];
    if span < T::lit(MIN_FIT_SPAN) {
        return Err(Error::DegenerateFit(format!("xs span {span} decades, need at least {MIN_FIT_SPAN}")));
    }
    let (slope, intercept) = ols(xs, ys);
    let nf = T::from_usize_lossy(xs.len());
    let mean_y = ys.iter().fold(T::zero(), |s, &y| s + y) / nf;
    let mut ss_res = T::zero();
    let mut ss_tot = T::zero();
    let mut max_residual = T::zero();
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - (slope * x + intercept);
        ss_res += r * r;
        ss_tot += (y - mean_y) * (y - mean_y);
        max_residual = max_residual.max(r.abs());
    }
    let r_squared = if ss_tot > T::zero() { (T::one() - ss_res / ss_tot).max(T::zero()).min(T::one()) } else { T::one() };
    Ok(SlopeFit { slope, intercept, r_squared, max_residual })
}

/// Unchecked OLS slope and intercept; needs two distinct xs.
pub(crate) fn ols<T: Real>(xs: &[T], ys: &[T]) -> (T, T) {
    let nf = T::from_usize_lossy(xs.len());
    let mx = xs.iter().fold(T::zero(), |s, &x| s + x) / nf;
    let my = ys.iter().fold(T::zero(), |s, &y| s + y) / nf;
    let mut sxy = T::zero();
    let mut sxx = T::zero();
    for (&x, &y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}
