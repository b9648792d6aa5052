//! The invariant suite: every property the library promises, checked at
//! default sizes on seeded random inputs. Each check reports a pass flag and
//! a one-line detail with the worst observed deviation.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;

use crate::bodies::{loewner_ellipsoid, sandwich_check, BodySpec, CenteredBody, LoewnerOptions};
use crate::bounds::{
    admissible, alpha_star_exact, boundary_damping, boundary_sign_condition, classify_exact, gamma_scan,
    predicted_product_slope, region_gammas, semiaxes_from_ratios, CenterMode, ExtendedRational, Family,
};
use crate::error::{Error, Result};
use crate::fixtures::{random_body, random_coordinate_body, random_linear_map, random_semiaxes, random_symmetric_polytope};
use crate::functionals::{
    bs_product, mean_power, polar_radial_power_integral, radial_power_integral, s_integral, santalo_point,
    ExponentPair, SantaloMode, SantaloOptions,
};
use crate::linalg::Matrix;
use crate::quadrature::{
    gauss_product_rule, graded_gauss_rule, monte_carlo_rule, unit_sphere_measure, Grading, Region,
    RuleConfig, SphereRule,
};
use crate::rng::{stream, unit_direction};
use crate::scalar::norm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Smaller body counts and node counts; same tolerances.
    pub quick: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { seed: 20_240_917, quick: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub module: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<(bool, String)>;

#[derive(Clone, Copy)]
pub struct Check {
    pub module: &'static str,
    pub name: &'static str,
    run: fn(&SuiteOptions) -> Outcome,
}

impl Check {
    pub fn run(&self, opts: &SuiteOptions) -> CheckOutcome {
        let (passed, detail) = match (self.run)(opts) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        CheckOutcome { module: self.module, name: self.name, passed, detail }
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}::{}", self.module, self.name)
    }
}

/// All checks in canonical order.
pub fn catalog() -> Vec<Check> {
    let c = |module, name, run| Check { module, name, run };
    vec![
        c("bodies", "duality_involution", duality_involution),
        c("bodies", "radial_support_reciprocity", reciprocity),
        c("bodies", "inclusion_reversal", inclusion_reversal),
        c("bodies", "scaling", scaling),
        c("bodies", "covering_chain", covering_chain),
        c("bodies", "loewner_sandwich", loewner_sandwich),
        c("quadrature", "weight_sums", weight_sums),
        c("quadrature", "octant_full_consistency", octant_full),
        c("quadrature", "gauss_mc_consistency", gauss_mc),
        c("quadrature", "convergence", convergence),
        c("functionals", "polar_consistency", polar_consistency),
        c("functionals", "holder_monotonicity", holder),
        c("functionals", "bs_equality_ellipsoids", bs_equality),
        c("functionals", "bs_inequality", bs_inequality),
        c("functionals", "polar_convexity_in_center", j_convexity),
        c("functionals", "domain_monotonicity", domain_monotonicity),
        c("functionals", "s_homogeneity", s_homogeneity),
        c("bounds", "admissibility_equivalence", equivalence),
        c("bounds", "boundary_sign_condition", sign_condition),
        c("bounds", "boundary_damping", damping),
        c("bounds", "scan_slopes", scan_slopes),
        c("bounds", "s_bound_chain", bound_chain),
    ]
}

/// Runs every check; outcomes come back in catalog order.
pub fn run_all(opts: &SuiteOptions) -> Vec<CheckOutcome> {
    catalog().par_iter().map(|c| c.run(opts)).collect()
}

fn probes(seed: u64, d: usize, count: usize) -> Vec<Vec<f64>> {
    (0..count as u64).map(|i| unit_direction(seed, i, d)).collect()
}

fn origin(d: usize) -> Vec<f64> {
    vec![0.0; d]
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

fn body_count(o: &SuiteOptions, full: u64, quick: u64) -> u64 {
    if o.quick {
        quick
    } else {
        full
    }
}

fn duality_involution(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for n in 1..=3 {
        let dirs = probes(o.seed, n + 1, 1000);
        let z = origin(n + 1);
        for i in 0..body_count(o, 20, 8) {
            let s = random_body(o.seed, i, n)?;
            let pp = s.polar()?.polar()?;
            for u in &dirs {
                let (a, b) = (s.radial_from(&z, u)?, pp.radial_from(&z, u)?);
                worst = worst.max((a - b).abs() / a.max(1.0));
            }
            count += 1;
        }
    }
    Ok((worst <= 1e-12, format!("{count} bodies x 1000 directions, max |dr| {worst:.2e}")))
}

fn reciprocity(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=3 {
        let dirs = probes(o.seed ^ 1, n + 1, 1000);
        let z = origin(n + 1);
        for i in 0..body_count(o, 20, 8) {
            let s = random_body(o.seed, i, n)?;
            let p = s.polar()?;
            for u in &dirs {
                let v = p.radial_from(&z, u)? * s.support_at(u)?;
                worst = worst.max((v - 1.0).abs());
            }
        }
    }
    Ok((worst <= 1e-10, format!("max |r* h - 1| {worst:.2e}")))
}

/// Pairs `S ⊆ S'`: rhombus in ellipsoid in box, and shrunken linear images.
fn nested_pairs(o: &SuiteOptions, n: usize, count: u64) -> Result<Vec<(BodySpec<f64>, BodySpec<f64>)>> {
    let d = n + 1;
    let mut out = Vec::new();
    for i in 0..count {
        let a = random_semiaxes(o.seed, i, d, 20.0);
        out.push((BodySpec::rhombus(a.clone())?, BodySpec::ellipsoid(a.clone())?));
        out.push((BodySpec::ellipsoid(a.clone())?, BodySpec::box_(a)?));
        let s = random_body(o.seed, i, n)?;
        out.push((BodySpec::linear_image(s.clone(), Matrix::identity(d).scale(0.8))?, s));
    }
    Ok(out)
}

fn inclusion_reversal(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    let mut pairs = 0;
    for n in 1..=3 {
        let dirs = probes(o.seed ^ 2, n + 1, 1000);
        let z = origin(n + 1);
        for (s, t) in nested_pairs(o, n, body_count(o, 8, 3))? {
            let mut contained = true;
            for u in &dirs {
                contained &= s.radial_from(&z, u)? <= t.radial_from(&z, u)? * (1.0 + 1e-12);
            }
            if !contained {
                return Ok((false, "constructed pair is not nested".into()));
            }
            let (sp, tp) = (s.polar()?, t.polar()?);
            for u in &dirs {
                let (lo, hi) = (tp.radial_from(&z, u)?, sp.radial_from(&z, u)?);
                worst = worst.max((lo - hi) / hi);
            }
            pairs += 1;
        }
    }
    Ok((worst <= 1e-12, format!("{pairs} nested pairs, max polar violation {:.2e}", worst.max(0.0))))
}

fn scaling(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=3 {
        let d = n + 1;
        let dirs = probes(o.seed ^ 3, d, 500);
        let z = origin(d);
        for i in 0..body_count(o, 10, 4) {
            let s = random_body(o.seed, i, n)?;
            for t in [0.3, 2.5, 7.0] {
                let st = BodySpec::linear_image(s.clone(), Matrix::identity(d).scale(t))?;
                for u in &dirs {
                    worst = worst.max(rel(st.radial_from(&z, u)?, t * s.radial_from(&z, u)?));
                }
            }
        }
    }
    Ok((worst <= 1e-13, format!("max relative deviation {worst:.2e}")))
}

fn covering_chain(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=4 {
        for i in 0..body_count(o, 10, 4) {
            let a = random_semiaxes(o.seed ^ 4, i, n + 1, 1e3);
            worst = worst.max(sandwich_check(&a, 1000, o.seed.wrapping_add(i))?.max_violation);
        }
    }
    Ok((worst <= 1e-12, format!("max chain violation {worst:.2e}")))
}

fn loewner_sandwich(o: &SuiteOptions) -> Outcome {
    let opts = LoewnerOptions::<f64>::default();
    let mut worst_vertex = f64::NEG_INFINITY;
    let mut outside = 0;
    let mut bodies = 0;
    for n in 1..=3 {
        let d = n + 1;
        for i in 0..body_count(o, 8, 3) {
            let p = random_symmetric_polytope(o.seed, i, n, n + 3, 40);
            let verts = p.vertices().ok_or(Error::SupportUnavailable)?;
            let l = loewner_ellipsoid(&verts, opts)?;
            if l.a.asymmetry() > 1e-12 * l.a.max_abs() {
                return Ok((false, "asymmetric shape matrix".into()));
            }
            for v in &verts {
                worst_vertex = worst_vertex.max(l.a.quad_form(v) - (1.0 + opts.eps));
            }
            let f = l.inner_factor();
            for k in 0..200 {
                let u: Vec<f64> = unit_direction(o.seed ^ 5, k, d);
                let x: Vec<f64> = l.boundary_point(&u).iter().map(|c| c * f).collect();
                if !p.contains(&x, 1e-9) {
                    outside += 1;
                }
            }
            bodies += 1;
        }
    }
    let ok = worst_vertex <= 1e-12 && outside == 0;
    Ok((ok, format!("{bodies} polytopes, max vᵀAv-(1+eps) {worst_vertex:.2e}, inner points outside {outside}")))
}

fn weight_sums(o: &SuiteOptions) -> Outcome {
    let mut rules: Vec<SphereRule<f64>> = Vec::new();
    for n in 1..=4 {
        rules.push(gauss_product_rule(n, 24, Region::Octant)?);
        rules.push(gauss_product_rule(n, 24, Region::Full)?);
        rules.push(monte_carlo_rule(n, 1000, o.seed)?);
        if n <= 3 {
            rules.push(graded_gauss_rule(n, 8, Region::Octant, 3)?);
            rules.push(graded_gauss_rule(n, 8, Region::Full, 3)?);
        }
    }
    let (mut mass, mut unit, mut octant) = (0.0f64, 0.0f64, true);
    for r in &rules {
        mass = mass.max(rel(r.total_weight(), unit_sphere_measure(r.n())));
        for u in r.directions() {
            unit = unit.max((norm(u) - 1.0).abs());
            if r.octant_factor() != 1.0 {
                octant &= u.iter().all(|&x| x >= 0.0);
            }
        }
    }
    let ok = mass <= 1e-10 && unit <= 1e-12 && octant;
    Ok((ok, format!("{} rules, mass error {mass:.2e}, norm error {unit:.2e}", rules.len())))
}

fn octant_full(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=3 {
        let oct = gauss_product_rule(n, 24, Region::Octant)?;
        let full = gauss_product_rule(n, 24, Region::Full)?;
        for i in 0..body_count(o, 6, 3) {
            let body = CenteredBody::origin(random_coordinate_body(o.seed ^ 6, i, n, 5.0));
            for alpha in [1.0, 2.5] {
                let a = radial_power_integral(&body, alpha, &oct)?;
                let b = radial_power_integral(&body, alpha, &full)?;
                // Round-off floor for rules that are already exact.
                let tol = 10.0 * a.error_indicator.max(b.error_indicator) + 1e-12 * a.value.abs();
                worst = worst.max((a.value - b.value).abs() / tol);
            }
        }
    }
    Ok((worst <= 1.0, format!("max |octant-full| / (10 x indicator) {worst:.3}")))
}

fn gauss_mc(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=4 {
        let g = gauss_product_rule(n, 32, Region::Octant)?;
        let mc = monte_carlo_rule(n, 100_000, o.seed)?;
        for i in 0..2 {
            let a = random_semiaxes(o.seed ^ 7, i, n + 1, 3.0);
            let body = CenteredBody::origin(BodySpec::ellipsoid(a)?);
            let x = radial_power_integral(&body, 2.0, &g)?;
            let y = radial_power_integral(&body, 2.0, &mc)?;
            worst = worst.max((x.value - y.value).abs() / y.error_indicator);
        }
    }
    Ok((worst <= 4.0, format!("max |gauss-mc| / standard error {worst:.3}")))
}

fn convergence(o: &SuiteOptions) -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 2..=3 {
        let reference = gauss_product_rule(n, 64, Region::Octant)?;
        let rules = [4, 8, 16].map(|k| gauss_product_rule(n, k, Region::Octant));
        for i in 0..body_count(o, 3, 2) {
            let body = CenteredBody::origin(BodySpec::ellipsoid(random_semiaxes(o.seed ^ 8, i, n + 1, 10.0))?);
            let r = radial_power_integral(&body, 2.0, &reference)?.value;
            let floor = 1e-13 * r.abs();
            let mut prev = f64::INFINITY;
            for rule in &rules {
                let rule = rule.as_ref().map_err(Clone::clone)?;
                let e = (radial_power_integral(&body, 2.0, rule)?.value - r).abs();
                ok &= e < prev || e <= floor;
                prev = e;
                detail.push(format!("{e:.1e}"));
            }
        }
    }
    Ok((ok, format!("errors at 4/8/16 nodes: {}", detail.join(" "))))
}

fn polar_consistency(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=3 {
        let rule = gauss_product_rule(n, 16, Region::Octant)?;
        let z = origin(n + 1);
        for i in 0..body_count(o, 9, 3) {
            let spec = random_coordinate_body(o.seed ^ 9, i, n, 10.0);
            let polar = CenteredBody::origin(spec.polar()?);
            for beta in [0.5, 1.5, 3.0] {
                let a = polar_radial_power_integral(&spec, &z, beta, &rule)?.value;
                let b = radial_power_integral(&polar, beta, &rule)?.value;
                worst = worst.max(rel(a, b));
            }
        }
    }
    Ok((worst <= 1e-10, format!("max relative deviation {worst:.2e}")))
}

fn holder(o: &SuiteOptions) -> Outcome {
    let cfg = RuleConfig::gauss(12).with_grading(Grading::Off);
    let mut worst = 0.0f64;
    let count = body_count(o, 50, 15);
    for i in 0..count {
        let n = 1 + (i as usize % 3);
        let spec = random_body(o.seed ^ 10, i, n)?;
        let rule = cfg.build::<f64>(n, spec.is_unconditional(), spec.aspect_ratio())?;
        let body = CenteredBody::origin(spec);
        let mut alphas = vec![0.5];
        alphas.extend((1..=n + 1).map(|k| k as f64));
        let means = alphas.iter().map(|&a| mean_power(&body, a, &rule)).collect::<Result<Vec<_>>>()?;
        for w in means.windows(2) {
            worst = worst.max((w[0] - w[1]) / w[1]);
        }
    }
    Ok((worst <= 1e-12, format!("{count} bodies, max relative decrease {:.2e}", worst.max(0.0))))
}

fn bs_equality(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    let mut spread = 0.0f64;
    for n in 1..=3 {
        let d = n + 1;
        let rule = gauss_product_rule(n, 48, Region::Octant)?;
        let pair = ExponentPair::new(d as f64, d as f64, n)?;
        let target = unit_sphere_measure::<f64>(n).powf(2.0 / d as f64);
        let mut vals = vec![bs_product(&BodySpec::unit_ball(n)?, &origin(d), &pair, &rule)?];
        for i in 0..body_count(o, 4, 2) {
            let e = BodySpec::ellipsoid(random_semiaxes(o.seed ^ 11, i, d, 4.0))?;
            vals.push(bs_product(&e, &origin(d), &pair, &rule)?);
        }
        for v in &vals {
            worst = worst.max(rel(*v, target));
            spread = spread.max(rel(*v, vals[0]));
        }
    }
    Ok((worst <= 1e-8 && spread <= 1e-8, format!("max deviation from target {worst:.2e}, spread {spread:.2e}")))
}

/// Symmetric bodies with moderate eccentricity, so that full-sphere rules of
/// modest size resolve the equality cases far below the tolerance.
fn santalo_test_body(seed: u64, i: u64, n: usize) -> Result<BodySpec<f64>> {
    let d = n + 1;
    Ok(match i % 4 {
        0 => random_symmetric_polytope(seed, i, n, n + 3, 40),
        1 => random_coordinate_body(seed, i / 4 * 3 + (i / 4) % 2, n, 3.0),
        2 => {
            let base = BodySpec::box_(random_semiaxes(seed, i, d, 2.0))?;
            let mut spec = base.clone();
            for j in 0..64 {
                let s = BodySpec::linear_image(base.clone(), random_linear_map(seed, i * 64 + j, d))?;
                if s.aspect_ratio() <= 4.0 {
                    spec = s;
                    break;
                }
            }
            spec
        }
        _ => BodySpec::ellipsoid(random_semiaxes(seed, i, d, 1.5))?,
    })
}

fn bs_inequality(o: &SuiteOptions) -> Outcome {
    let count = body_count(o, 100, 12);
    let rules = [
        gauss_product_rule::<f64>(1, 64, Region::Full)?,
        gauss_product_rule::<f64>(2, 32, Region::Full)?,
        gauss_product_rule::<f64>(3, 20, Region::Full)?,
    ];
    let ratios: Vec<f64> = (0..count)
        .into_par_iter()
        .map(|i| {
            let n = 1 + (i as usize % 3);
            let d = n + 1;
            let spec = santalo_test_body(o.seed ^ 12, i, n)?;
            let pair = ExponentPair::new(d as f64, d as f64, n)?;
            let r = santalo_point(&spec, &pair, &rules[n - 1], SantaloMode::Product, &SantaloOptions::default())?;
            Ok(r.product_at_z / unit_sphere_measure::<f64>(n).powf(2.0 / d as f64))
        })
        .collect::<Result<Vec<_>>>()?;
    let worst = ratios.iter().cloned().fold(0.0, f64::max);
    Ok((worst <= 1.0 + 1e-6, format!("{count} bodies, max product / ellipsoid value {worst:.9}")))
}

/// A point with gauge `t` in a seeded random direction.
fn interior_point(spec: &BodySpec<f64>, seed: u64, index: u64, t: f64) -> Vec<f64> {
    let v: Vec<f64> = unit_direction(seed, index, spec.dim());
    let g = spec.gauge(&v);
    v.iter().map(|x| x * t / g).collect()
}

fn j_convexity(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    let mut tests = 0;
    for n in 1..=3 {
        let rule = gauss_product_rule(n, 12, Region::Full)?;
        for i in 0..body_count(o, 20, 6) {
            let spec = random_body(o.seed ^ 13, i, n)?;
            let mut rng = stream(o.seed ^ 14, i);
            let z1 = interior_point(&spec, o.seed ^ 15, 2 * i, rng.random_range(0.0..0.7));
            let z2 = interior_point(&spec, o.seed ^ 15, 2 * i + 1, rng.random_range(0.0..0.7));
            let mid: Vec<f64> = z1.iter().zip(&z2).map(|(a, b)| 0.5 * (a + b)).collect();
            for beta in [0.5, 2.0, 4.0] {
                let j = |z: &[f64]| polar_radial_power_integral(&spec, z, beta, &rule).map(|e| e.value);
                let avg = 0.5 * (j(&z1)? + j(&z2)?);
                worst = worst.max((j(&mid)? - avg) / avg);
                tests += 1;
            }
        }
    }
    Ok((worst <= 1e-10, format!("{tests} midpoint tests, max relative excess {:.2e}", worst.max(0.0))))
}

fn domain_monotonicity(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=3 {
        let rule = gauss_product_rule(n, 16, Region::Full)?;
        let z = origin(n + 1);
        for (s, t) in nested_pairs(o, n, body_count(o, 4, 2))? {
            for u in rule.directions() {
                if s.radial_from(&z, u)? > t.radial_from(&z, u)? * (1.0 + 1e-12) {
                    return Ok((false, "constructed pair is not nested on the rule nodes".into()));
                }
            }
            let (bs, bt) = (CenteredBody::origin(s.clone()), CenteredBody::origin(t.clone()));
            for alpha in [0.5, 2.0, 3.0] {
                let (a, b) = (radial_power_integral(&bs, alpha, &rule)?.value, radial_power_integral(&bt, alpha, &rule)?.value);
                worst = worst.max((a - b) / b);
            }
            for beta in [0.5, 2.0] {
                let a = polar_radial_power_integral(&s, &z, beta, &rule)?.value;
                let b = polar_radial_power_integral(&t, &z, beta, &rule)?.value;
                worst = worst.max((b - a) / a);
            }
        }
    }
    Ok((worst <= 1e-12, format!("max relative order violation {:.2e}", worst.max(0.0))))
}

fn s_homogeneity(o: &SuiteOptions) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=3 {
        let rule = gauss_product_rule(n, 16, Region::Octant)?;
        for i in 0..body_count(o, 3, 2) {
            let a = random_semiaxes(o.seed ^ 16, i, n + 1, 100.0);
            for beta in [0.5, 1.5, 3.0] {
                let s = s_integral(beta, &a, &rule)?.value;
                for t in [0.25, 3.7, 100.0] {
                    let ta: Vec<f64> = a.iter().map(|x| x * t).collect();
                    worst = worst.max(rel(s_integral(beta, &ta, &rule)?.value, t.powf(-beta) * s));
                }
            }
        }
    }
    Ok((worst <= 1e-12, format!("max relative deviation {worst:.2e}")))
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn equivalence(o: &SuiteOptions) -> Outcome {
    let mut disagreements = 0;
    let mut boundary = 0;
    for n in 1..=4usize {
        let mut rng = stream(o.seed ^ 17, n as u64);
        for k in 0..10_000 {
            let alpha = ratio(rng.random_range(1..=240), rng.random_range(1..=24));
            let beta = match alpha_star_exact(&alpha, n)? {
                ExtendedRational::Finite(s) if k % 4 == 0 => {
                    boundary += 1;
                    s
                }
                _ => ratio(rng.random_range(1..=240), rng.random_range(1..=24)),
            };
            let c = classify_exact(&alpha, &beta, n)?;
            if c.main_holds != c.star_holds {
                disagreements += 1;
            }
        }
    }
    Ok((disagreements == 0, format!("40000 pairs ({boundary} on the boundary), {disagreements} disagreements")))
}

fn sign_condition(o: &SuiteOptions) -> Outcome {
    let mut failures = 0;
    let mut tested = 0;
    for n in 1..=4usize {
        let mut rng = stream(o.seed ^ 18, n as u64);
        let mut alphas: Vec<BigRational> =
            (0..2000).map(|_| ratio(n as i64 + 1, 1) + ratio(rng.random_range(1..=400), rng.random_range(1..=20))).collect();
        // Integer boundary exponents: α = nβ/(β-1) for β = 2..n.
        alphas.extend((2..=n as i64).map(|b| ratio(n as i64 * b, b - 1)));
        for alpha in alphas {
            tested += 1;
            if !boundary_sign_condition(&alpha, n)? {
                failures += 1;
            }
        }
    }
    Ok((failures == 0, format!("{tested} boundary pairs, {failures} violations")))
}

fn damping(_: &SuiteOptions) -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=4usize {
        for beta in 2..=n {
            let alpha = (n * beta) as f64 / (beta - 1) as f64;
            let p = boundary_damping(alpha, beta as f64, 1e8)?;
            ok &= p.max_value.is_finite() && p.gamma_at_max < 1e8 && p.value_at_end < p.max_value;
            detail.push(format!("n={n} b={beta}: max {:.3} at {:.3e}", p.max_value, p.gamma_at_max));
        }
    }
    Ok((ok, detail.join("; ")))
}

fn scan_slopes(o: &SuiteOptions) -> Outcome {
    let cfg = RuleConfig::gauss(if o.quick { 24 } else { 48 });
    let gammas = region_gammas(1e5)?;
    let pairs = [(1, 4.0, 4.0 / 3.0), (2, 10.0, 1.25), (2, 3.0, 3.0), (1, 4.0, 3.0), (2, 10.0, 2.5)];
    let results: Vec<(bool, String)> = pairs
        .par_iter()
        .map(|&(n, a, b)| {
            let pair = ExponentPair::new(a, b, n)?;
            let adm = admissible(&pair)?;
            let predicted = predicted_product_slope(&pair);
            let scan = match gamma_scan(&Family::RhombusAxis, &pair, &gammas, &cfg, CenterMode::Origin) {
                Ok(s) => s,
                Err(Error::UnresolvedAsymptotics { lower, upper, .. }) => {
                    return Ok((false, format!("({n},{a},{b}) unresolved {lower:.3}/{upper:.3}")))
                }
                Err(e) => return Err(e),
            };
            let slope = scan.fit.slope;
            let ok = if adm.main_holds {
                slope <= 0.02
            } else {
                predicted <= 0.05 || (slope - predicted).abs() <= 0.05
            };
            Ok((ok, format!("({n},{a},{b}) slope {slope:.4} predicted {predicted:.4}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = results.iter().all(|r| r.0);
    Ok((ok, results.into_iter().map(|r| r.1).collect::<Vec<_>>().join("; ")))
}

fn bound_chain(o: &SuiteOptions) -> Outcome {
    let cases: [(usize, f64, &[f64], usize); 3] =
        [(2, 1.5, &[1.5, 10.0, 100.0], 12), (2, 2.5, &[1.5, 10.0, 100.0], 12), (3, 1.5, &[1.5, 10.0, 50.0], if o.quick { 6 } else { 8 })];
    let mut detail = Vec::new();
    let mut ok = true;
    for (n, beta, grid, k) in cases {
        let lattice: Vec<Vec<f64>> = (0..grid.len().pow(n as u32))
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let g = grid[idx % grid.len()];
                        idx /= grid.len();
                        g
                    })
                    .collect()
            })
            .collect();
        let ratios: Vec<f64> = lattice
            .par_iter()
            .map(|gammas| {
                let a = semiaxes_from_ratios(gammas);
                let aspect = a[0] / a[n];
                let cfg = RuleConfig::gauss(k).with_region(crate::quadrature::RegionChoice::Octant);
                let s = s_integral(beta, &a, &cfg.build(n, true, aspect)?)?.value;
                let tail_aspect = a[1] / a[n];
                let lower = s_integral(beta - 1.0, &a[1..], &cfg.build(n - 1, true, tail_aspect)?)?.value;
                let bound = (a[1].powf(1.0 - beta) / a[0]).max(lower / a[0]);
                Ok(s / bound)
            })
            .collect::<Result<Vec<_>>>()?;
        let c = ratios.iter().cloned().fold(0.0, f64::max);
        let low = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        ok &= ratios.iter().all(|r| r.is_finite() && *r > 0.0);
        detail.push(format!("n={n} b={beta}: C ~ {c:.3} (min ratio {low:.3}, {} points)", ratios.len()));
    }
    Ok((ok, detail.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names_are_unique() {
        let cat = catalog();
        let mut names: Vec<_> = cat.iter().map(|c| c.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
    }

    #[test]
    fn cheap_checks_pass() {
        let o = SuiteOptions { quick: true, ..Default::default() };
        for c in catalog().iter().filter(|c| c.module == "bodies") {
            let r = c.run(&o);
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
