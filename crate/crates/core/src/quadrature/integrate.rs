use rayon::prelude::*;

use super::{Engine, SphereRule};
use crate::error::{to_f64_vec, Error, Result};
use crate::scalar::pairwise_sum;
use crate::Real;

/// Whether the integrand is invariant under every coordinate sign flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Unconditional,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralEstimate<T> {
    pub value: T,
    /// Monte Carlo standard error, or the difference to the nested half rule
    /// for Gauss rules. An indicator, not a bound.
    pub error_indicator: T,
    /// Node count of the rule.
    pub evaluations: usize,
}

/// `∫_{S^n} f dσ`.
pub fn integrate<T, F>(rule: &SphereRule<T>, f: F, symmetry: Symmetry) -> Result<IntegralEstimate<T>>
where
    T: Real,
    F: Fn(&[T]) -> T + Sync,
{
    integrate_with(rule, |u| Ok(f(u)), symmetry)
}

/// As [`integrate`], for integrands that can fail at a node. The first
/// failing node in rule order determines the error.
pub fn integrate_with<T, F>(rule: &SphereRule<T>, f: F, symmetry: Symmetry) -> Result<IntegralEstimate<T>>
where
    T: Real,
    F: Fn(&[T]) -> Result<T> + Sync,
{
    if rule.engine() == Engine::GaussOctant && symmetry != Symmetry::Unconditional {
        return Err(Error::SymmetryMismatch);
    }
    estimate(rule, &|r: &SphereRule<T>, i| f(r.direction(i)), rule.octant_factor())
}

/// Integral over the closed positive octant `S^n_+` only, for octant rules.
/// The integrand receives the node index so it can use the node's angles.
pub fn integrate_octant<T, F>(rule: &SphereRule<T>, f: F) -> Result<IntegralEstimate<T>>
where
    T: Real,
    F: Fn(&SphereRule<T>, usize) -> Result<T> + Sync,
{
    if rule.engine() != Engine::GaussOctant {
        return Err(Error::UnsupportedRule("octant integrals need a gauss-octant rule"));
    }
    estimate(rule, &f, T::one())
}

fn estimate<T, F>(rule: &SphereRule<T>, f: &F, factor: T) -> Result<IntegralEstimate<T>>
where
    T: Real,
    F: Fn(&SphereRule<T>, usize) -> Result<T> + Sync,
{
    let values = evaluate(rule, f)?;
    let terms: Vec<T> = values.iter().zip(rule.weights()).map(|(&v, &w)| v * w).collect();
    let value = pairwise_sum(&terms) * factor;
    let error_indicator = match (rule.engine(), rule.coarse()) {
        (Engine::MonteCarlo, _) => {
            let nf = T::from_usize_lossy(values.len());
            let mean = pairwise_sum(&values) / nf;
            let dev: Vec<T> = values.iter().map(|&v| (v - mean) * (v - mean)).collect();
            let var = pairwise_sum(&dev) / (nf - T::one());
            rule.total_weight() * (var / nf).sqrt()
        }
        (_, Some(coarse)) => {
            let cv = evaluate(coarse, f)?;
            let terms: Vec<T> = cv.iter().zip(coarse.weights()).map(|(&v, &w)| v * w).collect();
            (value - pairwise_sum(&terms) * factor).abs()
        }
        _ => T::zero(),
    };
    Ok(IntegralEstimate { value, error_indicator, evaluations: rule.len() })
}

fn evaluate<T, F>(rule: &SphereRule<T>, f: &F) -> Result<Vec<T>>
where
    T: Real,
    F: Fn(&SphereRule<T>, usize) -> Result<T> + Sync,
{
    let results: Vec<Result<T>> = (0..rule.len()).into_par_iter().with_min_len(512).map(|i| f(rule, i)).collect();
    results
        .into_iter()
        .enumerate()
        .map(|(i, r)| match r {
            Ok(v) if v.is_finite() => Ok(v),
            Ok(_) => Err(Error::NonFiniteIntegrand { direction: to_f64_vec(rule.direction(i)) }),
            Err(e) => Err(e),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_product_rule, monte_carlo_rule, unit_sphere_measure, Region};
    use std::f64::consts::PI;

    #[test]
    fn constant_integrand_gives_sphere_measure() {
        let r = gauss_product_rule::<f64>(2, 16, Region::Full).unwrap();
        let e = integrate(&r, |_| 1.0, Symmetry::None).unwrap();
        assert!((e.value / (4.0 * PI) - 1.0).abs() < 1e-10);
        assert_eq!(e.evaluations, r.len());
        assert!(e.error_indicator >= 0.0);
    }

    #[test]
    fn octant_rule_requires_symmetry() {
        let r = gauss_product_rule::<f64>(2, 16, Region::Octant).unwrap();
        assert_eq!(integrate(&r, |_| 1.0, Symmetry::None), Err(Error::SymmetryMismatch));
        let full = integrate(&r, |_| 1.0, Symmetry::Unconditional).unwrap();
        assert!((full.value / unit_sphere_measure::<f64>(2) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn non_finite_values_name_the_direction() {
        let r = gauss_product_rule::<f64>(1, 4, Region::Full).unwrap();
        let err = integrate(&r, |u| if u[0] > 0.9 { f64::NAN } else { 1.0 }, Symmetry::None).unwrap_err();
        match err {
            Error::NonFiniteIntegrand { direction } => assert!(direction[0] > 0.9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rhombus_square_radial_squared_is_twice_its_area() {
        let r = gauss_product_rule::<f64>(1, 64, Region::Octant).unwrap();
        // r_{D(1,1)}(u) = 1/(|u_1|+|u_2|); ∫ r² = 2 · area = 4.
        let e = integrate(&r, |u| (u[0].abs() + u[1].abs()).powi(-2), Symmetry::Unconditional).unwrap();
        assert!((e.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn octant_and_full_agree_for_unconditional_integrands() {
        let oct = gauss_product_rule::<f64>(2, 20, Region::Octant).unwrap();
        let full = gauss_product_rule::<f64>(2, 20, Region::Full).unwrap();
        let f = |u: &[f64]| (u[0] * u[0] / 4.0 + u[1] * u[1] + 9.0 * u[2] * u[2]).powf(-1.5);
        let a = integrate(&oct, f, Symmetry::Unconditional).unwrap();
        let b = integrate(&full, f, Symmetry::None).unwrap();
        // ∫ r_E^3 = 3 Vol(E) = 3 · (4π/3) · 2 · 1 · (1/3).
        let exact = 4.0 * PI * 2.0 / 3.0;
        assert!((a.value - b.value).abs() <= 10.0 * a.error_indicator.max(b.error_indicator) + 1e-12);
        assert!((a.value / exact - 1.0).abs() < 1e-6);
    }

    #[test]
    fn parallel_evaluation_is_deterministic() {
        let r = monte_carlo_rule::<f64>(3, 20_000, 5).unwrap();
        let f = |u: &[f64]| u[0].exp() * u[3].cos();
        let a = integrate(&r, f, Symmetry::None).unwrap();
        let b = integrate(&r, f, Symmetry::None).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert!(a.error_indicator > 0.0);
    }
}
