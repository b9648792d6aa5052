//! Minimum-volume enclosing ellipsoid of a centrally symmetric point set.
//!
//! Works on the D-optimal design dual: maximize `log det M(w)` with
//! `M(w) = Σ w_j v_j v_jᵀ` over the simplex, by Khachiyan's coordinate ascent
//! with Todd-Yildirim away steps. At any weights, `{x : xᵀ M⁻¹ x <= 1}` lies
//! inside `conv(±v_j)` because its support `sqrt(Σ w_j (v_j·y)²)` never
//! exceeds `max_j |v_j·y|`; stopping when `max_j v_jᵀ M⁻¹ v_j <= d(1+eps)`
//! makes `E_A` with `A = (d M)⁻¹` enclose every point within `1+eps`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Real;

#[derive(Debug, Clone, Copy)]
pub struct LoewnerOptions<T> {
    /// Target relative gap, in `(0, 0.1]`.
    pub eps: T,
    pub max_iter: usize,
}

impl<T: Real> Default for LoewnerOptions<T> {
    fn default() -> Self {
        Self { eps: T::lit(1e-3), max_iter: 100_000 }
    }
}

/// Ellipsoid `{x : xᵀ A x <= 1}`.
#[derive(Debug, Clone)]
pub struct Loewner<T> {
    pub a: Matrix<T>,
    /// Achieved gap: every input point has `vᵀ A v <= 1 + eps`.
    pub eps: T,
    pub iterations: usize,
    pub weights: Vec<T>,
}

impl<T: Real> Loewner<T> {
    /// Scale factor `1/sqrt(d (1+eps))` for which `factor · E_A` is contained
    /// in the convex hull of the points.
    pub fn inner_factor(&self) -> T {
        let d = T::from_usize_lossy(self.a.dim());
        (d * (T::one() + self.eps)).sqrt().recip()
    }

    /// Boundary point of `E_A` in direction `u`.
    pub fn boundary_point(&self, u: &[T]) -> Vec<T> {
        let s = self.a.quad_form(u).sqrt();
        u.iter().map(|&x| x / s).collect()
    }
}

/// `vertices` holds one representative per `±v` pair.
pub fn loewner_ellipsoid<T: Real>(vertices: &[Vec<T>], opts: LoewnerOptions<T>) -> Result<Loewner<T>> {
    if !(opts.eps > T::zero() && opts.eps <= T::lit(0.1)) {
        return Err(Error::InvalidInput("eps must lie in (0, 0.1]".into()));
    }
    let d = vertices.first().map(Vec::len).ok_or_else(|| Error::DegenerateInput("no points".into()))?;
    if d < 2 {
        return Err(Error::DegenerateInput("points must live in dimension >= 2".into()));
    }
    if let Some(v) = vertices.iter().find(|v| v.len() != d) {
        return Err(Error::DimensionMismatch { what: "vertex", expected: d, got: v.len() });
    }
    let m = vertices.len();
    let df = T::from_usize_lossy(d);
    let mut w = vec![T::one() / T::from_usize_lossy(m); m];

    let moment = |w: &[T]| {
        let mut mm = Matrix::zeros(d);
        for (v, &wj) in vertices.iter().zip(w) {
            if wj.is_zero() {
                continue;
            }
            for i in 0..d {
                for k in 0..d {
                    mm[(i, k)] += wj * v[i] * v[k];
                }
            }
        }
        mm
    };
    // Rank check on the uniform design: singular means the points do not span.
    moment(&w)
        .inverse(T::lit(1e-12))
        .map_err(|_| Error::DegenerateInput("points do not span the space".into()))?;

    let mut gap = T::infinity();
    for iter in 0..=opts.max_iter {
        let mm = moment(&w);
        let minv = mm.inverse(T::eps()).map_err(|_| Error::DegenerateInput("moment matrix became singular".into()))?;
        let kappa: Vec<T> = vertices.iter().map(|v| minv.quad_form(v)).collect();
        let (jmax, kmax) = argmax(&kappa);
        gap = kmax / df - T::one();
        if gap <= opts.eps {
            let mut a = minv.scale(df.recip());
            for i in 0..d {
                for k in 0..i {
                    let s = (a[(i, k)] + a[(k, i)]) / T::lit(2.0);
                    a[(i, k)] = s;
                    a[(k, i)] = s;
                }
            }
            return Ok(Loewner { a, eps: gap.max(T::zero()), iterations: iter, weights: w });
        }
        if iter == opts.max_iter {
            break;
        }
        let (jmin, kmin) = kappa
            .iter()
            .enumerate()
            .filter(|(j, _)| w[*j] > T::zero())
            .fold((0, T::infinity()), |acc, (j, &k)| if k < acc.1 { (j, k) } else { acc });
        let toward = kmax / df - T::one() >= T::one() - kmin / df;
        let (j, k) = if toward { (jmax, kmax) } else { (jmin, kmin) };
        let lower = -w[j] / (T::one() - w[j]);
        let step = if k <= T::one() { lower } else { ((k - df) / (df * (k - T::one()))).max(lower) };
        for (i, wi) in w.iter_mut().enumerate() {
            *wi = *wi * (T::one() - step) + if i == j { step } else { T::zero() };
            if *wi < T::zero() {
                *wi = T::zero();
            }
        }
    }
    Err(Error::NoConvergence { iterations: opts.max_iter, gap: gap.as_f64() })
}

fn argmax<T: Real>(xs: &[T]) -> (usize, T) {
    xs.iter().enumerate().fold((0, T::neg_infinity()), |acc, (j, &x)| if x > acc.1 { (j, x) } else { acc })
}
