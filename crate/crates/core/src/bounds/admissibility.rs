//! The admissible region `n/α + 1/β >= 1, 1/α + n/β >= 1` and its
//! equivalent form `β <= α*(α)`, decided in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::functionals::ExponentPair;
use crate::Real;

/// A rational number or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedRational {
    Finite(BigRational),
    PosInfinity,
}

impl ExtendedRational {
    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Finite(q) => q.to_f64().unwrap_or(f64::NAN),
            Self::PosInfinity => f64::INFINITY,
        }
    }

    /// `x <= self`.
    pub fn dominates(&self, x: &BigRational) -> bool {
        match self {
            Self::Finite(q) => x <= q,
            Self::PosInfinity => true,
        }
    }
}

/// Exact rational value of a finite float.
pub fn to_rational<T: Real>(x: T) -> Result<BigRational> {
    BigRational::from_float(x.as_f64()).ok_or_else(|| Error::InvalidInput(format!("{x} is not a finite number")))
}

fn int(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `α*`: `α/(α-n)` for `α > n+1`, `n+1` at `α = n+1`, `nα/(α-1)` for
/// `1 < α < n+1` and `+∞` for `0 < α <= 1`.
pub fn alpha_star_exact(alpha: &BigRational, n: usize) -> Result<ExtendedRational> {
    if n == 0 {
        return Err(Error::InvalidInput("sphere dimension n must be >= 1".into()));
    }
    if *alpha <= BigRational::zero() {
        return Err(Error::NonPositiveAlpha(alpha.to_f64().unwrap_or(f64::NAN)));
    }
    let one = BigRational::one();
    let nn = int(n);
    let n1 = int(n + 1);
    Ok(if *alpha > n1 {
        ExtendedRational::Finite(alpha / (alpha - &nn))
    } else if *alpha == n1 {
        ExtendedRational::Finite(n1)
    } else if *alpha > one {
        ExtendedRational::Finite(&nn * alpha / (alpha - &one))
    } else {
        ExtendedRational::PosInfinity
    })
}

/// Floating-point front end of [`alpha_star_exact`]; `+∞` maps to infinity.
pub fn alpha_star<T: Real>(alpha: T, n: usize) -> Result<T> {
    if !(alpha > T::zero()) {
        return Err(Error::NonPositiveAlpha(alpha.as_f64()));
    }
    let a = to_rational(alpha)?;
    Ok(match alpha_star_exact(&a, n)? {
        ExtendedRational::Finite(q) => T::lit(q.to_f64().unwrap_or(f64::NAN)),
        ExtendedRational::PosInfinity => T::infinity(),
    })
}

/// Exact verdicts for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactAdmissibility {
    pub main_holds: bool,
    pub alpha_star: ExtendedRational,
    pub star_holds: bool,
}

/// Evaluates both characterizations without asserting their agreement.
pub fn classify_exact(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<ExactAdmissibility> {
    if *beta <= BigRational::zero() {
        return Err(Error::InvalidInput("beta must be positive".into()));
    }
    let alpha_star = alpha_star_exact(alpha, n)?;
    let one = BigRational::one();
    let nn = int(n);
    let first = &nn / alpha + beta.recip() >= one;
    let second = alpha.recip() + &nn / beta >= one;
    let star_holds = alpha_star.dominates(beta);
    Ok(ExactAdmissibility { main_holds: first && second, alpha_star, star_holds })
}

/// As [`classify_exact`], failing with `EquivalenceViolation` if the two
/// characterizations disagree.
pub fn admissible_exact(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<ExactAdmissibility> {
    let c = classify_exact(alpha, beta, n)?;
    if c.main_holds != c.star_holds {
        return Err(Error::EquivalenceViolation { alpha: alpha.to_string(), beta: beta.to_string(), n });
    }
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Admissibility {
    pub alpha: f64,
    pub beta: f64,
    pub n: usize,
    pub main_holds: bool,
    /// `+∞` for `α <= 1`.
    pub alpha_star: f64,
    pub star_holds: bool,
}

/// Admissibility of a float pair, evaluated on the exact rational values of
/// `α` and `β`.
pub fn admissible<T: Real>(pair: &ExponentPair<T>) -> Result<Admissibility> {
    let a = to_rational(pair.alpha())?;
    let b = to_rational(pair.beta())?;
    let c = admissible_exact(&a, &b, pair.n())?;
    Ok(Admissibility {
        alpha: pair.alpha().as_f64(),
        beta: pair.beta().as_f64(),
        n: pair.n(),
        main_holds: c.main_holds,
        alpha_star: c.alpha_star.to_f64(),
        star_holds: c.star_holds,
    })
}

/// Growth exponent `1 - n/α - 1/β` of the product along `D(γ, 1, ..., 1)`.
pub fn predicted_product_slope<T: Real>(pair: &ExponentPair<T>) -> T {
    T::one() - T::from_usize_lossy(pair.n()) / pair.alpha() - pair.beta().recip()
}

/// Sign condition at the sharp boundary `β = α/(α-n)`, `α > n+1`:
/// `1 - k/β - (n+1-k)/α <= 0` for `k = 1, ..., ⌈β⌉ - 1`.
pub fn boundary_sign_condition(alpha: &BigRational, n: usize) -> Result<bool> {
    let nn = int(n);
    if *alpha <= int(n + 1) {
        return Err(Error::InvalidInput("boundary sign condition needs alpha > n + 1".into()));
    }
    let beta = alpha / (alpha - &nn);
    let ceil = beta.ceil().to_integer();
    let top = ceil.to_usize().unwrap_or(0).saturating_sub(1);
    Ok((1..=top).all(|k| {
        let kk = int(k);
        BigRational::one() - &kk / &beta - (int(n + 1) - &kk) / alpha <= BigRational::zero()
    }))
}

/// Location and value of the maximum of `γ^{-1/α} (ln γ)^{1/β}` on
/// `[1, gamma_max]`, the damping factor at an integer sharp boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampingProfile {
    pub gamma_at_max: f64,
    pub max_value: f64,
    pub value_at_end: f64,
}

pub fn boundary_damping(alpha: f64, beta: f64, gamma_max: f64) -> Result<DampingProfile> {
    if !(alpha > 0.0 && beta > 0.0 && gamma_max > 1.0 && gamma_max.is_finite()) {
        return Err(Error::InvalidInput("damping profile needs alpha, beta > 0 and gamma_max > 1".into()));
    }
    let g = |x: f64| x.powf(-1.0 / alpha) * x.ln().powf(1.0 / beta);
    let steps = 20_000;
    let top = gamma_max.log10();
    let mut best = (1.0, 0.0);
    for i in 0..=steps {
        let x = 10f64.powf(top * i as f64 / steps as f64);
        let v = g(x);
        if v > best.1 {
            best = (x, v);
        }
    }
    // The exact maximizer is ln γ = α/β whenever it lies in range.
    let crit = (alpha / beta).exp();
    if crit <= gamma_max && g(crit) > best.1 {
        best = (crit, g(crit));
    }
    Ok(DampingProfile { gamma_at_max: best.0, max_value: best.1, value_at_end: g(gamma_max) })
}
