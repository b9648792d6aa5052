//! Radial-power integrals, dual quermassintegrals, the polar-side integral
//! and their product, the model integral `S(β, a)`, and Santaló-point search.

mod santalo;

pub use santalo::{santalo_point, SantaloMode, SantaloOptions, SantaloResult};

use crate::bodies::{BodySpec, CenteredBody};
use crate::error::{to_f64_vec, Error, Result};
use crate::quadrature::{integrate_octant, integrate_with, IntegralEstimate, SphereRule, Symmetry};
use crate::scalar::dot;
use crate::Real;

/// Exponents `(α, β)` of the product functional on bodies in `R^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentPair<T> {
    alpha: T,
    beta: T,
    n: usize,
}

impl<T: Real> ExponentPair<T> {
    pub fn new(alpha: T, beta: T, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("sphere dimension n must be >= 1".into()));
        }
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidInput(format!("{name} must be a positive finite number, got {v}")));
            }
        }
        Ok(Self { alpha, beta, n })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The pair with `α` and `β` exchanged.
    pub fn swapped(&self) -> Self {
        Self { alpha: self.beta, beta: self.alpha, n: self.n }
    }
}

fn check_rule<T: Real>(rule: &SphereRule<T>, dim: usize) -> Result<()> {
    if rule.dim() != dim {
        return Err(Error::DimensionMismatch { what: "rule", expected: dim, got: rule.dim() });
    }
    Ok(())
}

fn symmetry_of<T: Real>(spec: &BodySpec<T>, z: &[T]) -> Symmetry {
    if crate::scalar::is_zero_vec(z) && spec.is_unconditional() {
        Symmetry::Unconditional
    } else {
        Symmetry::None
    }
}

/// `I = ∫_{S^n} r_z(u)^α dσ(u)`. Any real `α` is accepted.
pub fn radial_power_integral<T: Real>(body: &CenteredBody<T>, alpha: T, rule: &SphereRule<T>) -> Result<IntegralEstimate<T>> {
    check_rule(rule, body.spec().dim())?;
    let sym = symmetry_of(body.spec(), body.center());
    integrate_with(rule, |u| body.radial_at(u).map(|r| r.powf(alpha)), sym)
}

/// `W̃_q = (1/(n+1)) ∫ r^{n+1-q} dσ`.
pub fn dual_quermassintegral<T: Real>(body: &CenteredBody<T>, q: T, rule: &SphereRule<T>) -> Result<T> {
    let d = T::from_usize_lossy(body.spec().dim());
    Ok(radial_power_integral(body, d - q, rule)?.value / d)
}

/// `J = ∫_{S^n} (h(u) - z·u)^{-β} dσ(u)`, the `β`-th radial power integral
/// of the polar body taken about `z`.
pub fn polar_radial_power_integral<T: Real>(
    spec: &BodySpec<T>,
    z: &[T],
    beta: T,
    rule: &SphereRule<T>,
) -> Result<IntegralEstimate<T>> {
    check_rule(rule, spec.dim())?;
    if z.len() != spec.dim() {
        return Err(Error::DimensionMismatch { what: "center", expected: spec.dim(), got: z.len() });
    }
    if !(spec.gauge(z) < T::one()) {
        return Err(Error::CenterNotInterior { direction: to_f64_vec(z) });
    }
    let sym = symmetry_of(spec, z);
    integrate_with(
        rule,
        |u| {
            let m = spec.support_at(u)? - dot(z, u);
            if m > T::zero() {
                Ok(m.powf(-beta))
            } else {
                Err(Error::CenterNotInterior { direction: to_f64_vec(u) })
            }
        },
        sym,
    )
}

/// Both factors of the product functional and the product itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductEstimate<T> {
    pub i: IntegralEstimate<T>,
    pub j: IntegralEstimate<T>,
    /// `I^{1/α} J^{1/β}`.
    pub product: T,
}

pub fn bs_product_parts<T: Real>(
    spec: &BodySpec<T>,
    z: &[T],
    pair: &ExponentPair<T>,
    rule: &SphereRule<T>,
) -> Result<ProductEstimate<T>> {
    if pair.n() + 1 != spec.dim() {
        return Err(Error::DimensionMismatch { what: "exponent pair n + 1", expected: spec.dim(), got: pair.n() + 1 });
    }
    let body = CenteredBody::new(spec.clone(), z.to_vec())?;
    let i = radial_power_integral(&body, pair.alpha(), rule)?;
    let j = polar_radial_power_integral(spec, z, pair.beta(), rule)?;
    let product = i.value.powf(pair.alpha().recip()) * j.value.powf(pair.beta().recip());
    Ok(ProductEstimate { i, j, product })
}

/// `(∫ r_z^α dσ)^{1/α} (∫ r_{Ω*_z}^β dσ)^{1/β}`, both factors on the same rule.
pub fn bs_product<T: Real>(spec: &BodySpec<T>, z: &[T], pair: &ExponentPair<T>, rule: &SphereRule<T>) -> Result<T> {
    bs_product_parts(spec, z, pair, rule).map(|p| p.product)
}

/// Model integral over the positive octant, evaluated from the node angles:
/// `∫_{[0,π/2]^n} Π sin^{n-k}θ_k / (a_1 cos θ_1 + a_2 sin θ_1 cos θ_2 + ⋯ + a_{n+1} sin θ_1⋯sin θ_n)^β dθ`.
pub fn s_integral<T: Real>(beta: T, a: &[T], rule: &SphereRule<T>) -> Result<IntegralEstimate<T>> {
    check_rule(rule, a.len())?;
    if let Some(i) = a.iter().position(|x| !(x.is_finite() && *x > T::zero())) {
        return Err(Error::InvalidInput(format!("a[{i}] must be a positive finite number")));
    }
    if !beta.is_finite() {
        return Err(Error::InvalidInput("beta must be finite".into()));
    }
    integrate_octant(rule, |r, i| {
        let th = r.angles(i).ok_or(Error::UnsupportedRule("s_integral needs a product rule"))?;
        let mut s = T::one();
        let mut den = T::zero();
        for (k, &t) in th.iter().enumerate() {
            den += a[k] * s * t.cos();
            s *= t.sin();
        }
        den += a[th.len()] * s;
        Ok(den.powf(-beta))
    })
}

/// Normalized mean `(⨏ r^α dσ)^{1/α}`, the average taken against the rule's
/// own total mass.
pub fn mean_power<T: Real>(body: &CenteredBody<T>, alpha: T, rule: &SphereRule<T>) -> Result<T> {
    if alpha.is_zero() {
        return Err(Error::ZeroExponent);
    }
    let i = radial_power_integral(body, alpha, rule)?;
    Ok((i.value / rule.total_weight()).powf(alpha.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_product_rule, unit_ball_volume, unit_sphere_measure, Region};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn oct(n: usize, k: usize) -> SphereRule<f64> {
        gauss_product_rule(n, k, Region::Octant).unwrap()
    }

    fn full(n: usize, k: usize) -> SphereRule<f64> {
        gauss_product_rule(n, k, Region::Full).unwrap()
    }

    #[test]
    fn exponent_pair_validation() {
        assert!(ExponentPair::new(1.0, 0.0, 2).is_err());
        assert!(ExponentPair::new(-1.0, 1.0, 2).is_err());
        assert!(ExponentPair::new(1.0, 1.0, 0).is_err());
        assert_eq!(ExponentPair::new(2.0, 3.0, 1).unwrap().swapped().alpha(), 3.0);
    }

    #[test]
    fn radial_power_examples() {
        let ball = CenteredBody::origin(BodySpec::unit_ball(2).unwrap());
        for alpha in [-3.0, 0.0, 0.7, 5.0] {
            assert_relative_eq!(radial_power_integral(&ball, alpha, &oct(2, 16)).unwrap().value, 4.0 * PI, max_relative = 1e-12);
        }
        let d = CenteredBody::origin(BodySpec::rhombus(vec![1.0, 1.0]).unwrap());
        assert_relative_eq!(radial_power_integral(&d, 2.0, &oct(1, 64)).unwrap().value, 4.0, max_relative = 1e-12);
        let a = [2.0, 0.5, 1.5];
        let e = CenteredBody::origin(BodySpec::ellipsoid(a.to_vec()).unwrap());
        let expected = 3.0 * unit_ball_volume::<f64>(3) * a.iter().product::<f64>();
        assert_relative_eq!(radial_power_integral(&e, 3.0, &oct(2, 48)).unwrap().value, expected, max_relative = 1e-8);
    }

    #[test]
    fn off_center_needs_full_rule() {
        let b = CenteredBody::new(BodySpec::unit_ball(1).unwrap(), vec![0.2, 0.0]).unwrap();
        assert_eq!(radial_power_integral(&b, 2.0, &oct(1, 8)), Err(Error::SymmetryMismatch));
        // ∫ r_z² = 2·area regardless of the interior center.
        let v = radial_power_integral(&b, 2.0, &full(1, 64)).unwrap().value;
        assert_relative_eq!(v, 2.0 * PI, max_relative = 1e-10);
    }

    #[test]
    fn dual_quermassintegral_examples() {
        let ball = CenteredBody::origin(BodySpec::unit_ball(2).unwrap());
        for q in [0.0, 1.5, -2.0, 7.0] {
            assert_relative_eq!(dual_quermassintegral(&ball, q, &oct(2, 8)).unwrap(), 4.0 * PI / 3.0, max_relative = 1e-12);
        }
        let e = CenteredBody::origin(BodySpec::ellipsoid(vec![2.0, 1.0]).unwrap());
        assert_relative_eq!(dual_quermassintegral(&e, 0.0, &oct(1, 48)).unwrap(), 2.0 * PI, max_relative = 1e-10);
    }

    #[test]
    fn polar_integral_examples() {
        let ball = BodySpec::unit_ball(2).unwrap();
        assert_relative_eq!(
            polar_radial_power_integral(&ball, &[0.0; 3], 1.3, &oct(2, 8)).unwrap().value,
            4.0 * PI,
            max_relative = 1e-12
        );
        let d = BodySpec::rhombus(vec![2.0, 3.0]).unwrap();
        let r = oct(1, 48);
        let j = polar_radial_power_integral(&d, &[0.0, 0.0], 2.0, &r).unwrap().value;
        let i = radial_power_integral(&CenteredBody::origin(BodySpec::box_(vec![0.5, 1.0 / 3.0]).unwrap()), 2.0, &r)
            .unwrap()
            .value;
        assert_relative_eq!(j, i, max_relative = 1e-10);

        let b = BodySpec::box_(vec![1.0, 1.0]).unwrap();
        let r = full(1, 64);
        let near = polar_radial_power_integral(&b, &[0.999, 0.0], 1.0, &r).unwrap().value;
        let nearer = polar_radial_power_integral(&b, &[0.99999, 0.0], 1.0, &r).unwrap().value;
        let centered = polar_radial_power_integral(&b, &[0.0, 0.0], 1.0, &r).unwrap().value;
        assert!(near.is_finite() && near > 2.0 * centered && nearer > near);
        assert!(matches!(polar_radial_power_integral(&b, &[1.0, 0.0], 1.0, &r), Err(Error::CenterNotInterior { .. })));
    }

    #[test]
    fn product_examples() {
        let ball = BodySpec::unit_ball(2).unwrap();
        let pair = ExponentPair::new(2.0, 5.0, 2).unwrap();
        assert_relative_eq!(
            bs_product(&ball, &[0.0; 3], &pair, &oct(2, 8)).unwrap(),
            (4.0 * PI).powf(0.5 + 0.2),
            max_relative = 1e-12
        );
        let pair = ExponentPair::new(3.0, 3.0, 2).unwrap();
        let target = unit_sphere_measure::<f64>(2).powf(2.0 / 3.0);
        for a in [[1.0, 1.0, 1.0], [4.0, 1.0, 1.0], [0.3, 2.0, 1.7]] {
            let e = BodySpec::ellipsoid(a.to_vec()).unwrap();
            assert_relative_eq!(bs_product(&e, &[0.0; 3], &pair, &oct(2, 64)).unwrap(), target, max_relative = 1e-8);
        }
    }

    #[test]
    fn product_grows_in_the_divergent_regime() {
        let pair = ExponentPair::new(10.0, 2.5, 2).unwrap();
        let rule = |g: f64| crate::quadrature::graded_gauss_rule(2, 12, Region::Octant, g.log10().ceil() as usize + 2).unwrap();
        let p = |g: f64| bs_product(&BodySpec::rhombus(vec![g, 1.0, 1.0]).unwrap(), &[0.0; 3], &pair, &rule(g)).unwrap();
        assert!(p(1e3) > p(10.0));
    }

    #[test]
    fn s_integral_examples() {
        let r = oct(1, 64);
        assert_relative_eq!(s_integral(2.0, &[1.0, 1.0], &r).unwrap().value, 1.0, max_relative = 1e-10);
        assert_relative_eq!(s_integral(0.0, &[3.0, 0.2], &r).unwrap().value, PI / 2.0, max_relative = 1e-13);
        let r = oct(2, 24);
        let a = [1.0, 2.5, 0.7];
        let base = s_integral(1.7, &a, &r).unwrap().value;
        let scaled = s_integral(1.7, &a.map(|x| 3.0 * x), &r).unwrap().value;
        assert_relative_eq!(scaled, 3f64.powf(-1.7) * base, max_relative = 1e-13);
        assert!(matches!(s_integral(1.0, &[1.0, 1.0], &full(1, 8)), Err(Error::UnsupportedRule(_))));
    }

    #[test]
    fn s_integral_matches_reciprocal_rhombus_route() {
        let r = oct(2, 32);
        let a = [2.0, 0.5, 1.25];
        let s = s_integral(2.3, &a, &r).unwrap().value;
        let d = CenteredBody::origin(BodySpec::rhombus(a.iter().map(|x| 1.0 / x).collect()).unwrap());
        let i = radial_power_integral(&d, 2.3, &r).unwrap().value / 8.0;
        assert_relative_eq!(s, i, max_relative = 1e-10);
    }

    #[test]
    fn mean_power_examples() {
        let ball = CenteredBody::origin(BodySpec::unit_ball(3).unwrap());
        assert_relative_eq!(mean_power(&ball, -2.0, &oct(3, 6)).unwrap(), 1.0, max_relative = 1e-12);
        let d = CenteredBody::origin(BodySpec::rhombus(vec![1.0, 1.0]).unwrap());
        let r = oct(1, 64);
        assert_relative_eq!(mean_power(&d, 2.0, &r).unwrap(), (4.0 / (2.0 * PI)).sqrt(), max_relative = 1e-10);
        assert!(mean_power(&d, 1.0, &r).unwrap() <= mean_power(&d, 2.0, &r).unwrap());
        assert_eq!(mean_power(&d, 0.0, &r), Err(Error::ZeroExponent));
    }
}
