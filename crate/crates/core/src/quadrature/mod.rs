//! Quadrature on the unit sphere `S^n ⊂ R^{n+1}` with the un-normalized
//! surface measure `σ`, so `σ(S^n) = (n+1) ω_{n+1}`.

mod gauss;
mod integrate;

pub use gauss::{gauss_legendre, gauss_product_rule, graded_gauss_rule, MAX_GAUSS_DIM, MAX_RULE_NODES};
pub use integrate::{integrate, integrate_octant, integrate_with, IntegralEstimate, Symmetry};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Real;

/// Volume `ω_d` of the unit ball in `R^d`.
pub fn unit_ball_volume<T: Real>(d: usize) -> T {
    // ω_0 = 1, ω_1 = 2, ω_d = 2π/d · ω_{d-2}: exact up to one rounding per step.
    let mut w = if d % 2 == 0 { 1.0 } else { 2.0 };
    let mut k = 2 + d % 2;
    while k <= d {
        w *= 2.0 * std::f64::consts::PI / k as f64;
        k += 2;
    }
    T::lit(w)
}

/// Surface measure `σ(S^n) = (n+1) ω_{n+1}`.
pub fn unit_sphere_measure<T: Real>(n: usize) -> T {
    T::from_usize_lossy(n + 1) * unit_ball_volume::<T>(n + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Octant,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    GaussOctant,
    GaussFull,
    MonteCarlo,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::GaussOctant => "gauss-octant",
            Engine::GaussFull => "gauss-full",
            Engine::MonteCarlo => "monte-carlo",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleMeta {
    /// `nodes_per_axis` counts nodes per panel when `levels > 0`.
    Gauss { nodes_per_axis: usize, levels: usize },
    MonteCarlo { samples: usize, seed: u64 },
}

/// Weighted unit directions on `S^n`. Gauss rules carry a nested rule with
/// half the nodes per axis, used for the error indicator.
#[derive(Debug, Clone)]
pub struct SphereRule<T> {
    n: usize,
    dirs: Vec<T>,
    weights: Vec<T>,
    angles: Option<Vec<T>>,
    engine: Engine,
    meta: RuleMeta,
    coarse: Option<Box<SphereRule<T>>>,
}

impl<T: Real> SphereRule<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient dimension `n + 1`.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn meta(&self) -> RuleMeta {
        self.meta
    }

    pub fn direction(&self, i: usize) -> &[T] {
        let d = self.dim();
        &self.dirs[i * d..(i + 1) * d]
    }

    pub fn weight(&self, i: usize) -> T {
        self.weights[i]
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    /// Spherical angles `(θ_1, ..., θ_n)` of node `i`, for product rules.
    pub fn angles(&self, i: usize) -> Option<&[T]> {
        let n = self.n;
        self.angles.as_ref().map(|a| &a[i * n..(i + 1) * n])
    }

    pub fn directions(&self) -> impl Iterator<Item = &[T]> {
        self.dirs.chunks_exact(self.dim())
    }

    /// Factor turning an octant sum into a full-sphere integral.
    pub fn octant_factor(&self) -> T {
        match self.engine {
            Engine::GaussOctant => T::lit(2f64.powi(self.n as i32 + 1)),
            _ => T::one(),
        }
    }

    /// Measure of the sphere as integrated by this rule.
    pub fn total_weight(&self) -> T {
        crate::scalar::pairwise_sum(&self.weights) * self.octant_factor()
    }

    pub fn coarse(&self) -> Option<&SphereRule<T>> {
        self.coarse.as_deref()
    }

    pub fn describe(&self) -> String {
        match self.meta {
            RuleMeta::Gauss { nodes_per_axis, levels } => {
                format!("{} n={} nodes_per_axis={} levels={} nodes={}", self.engine.name(), self.n, nodes_per_axis, levels, self.len())
            }
            RuleMeta::MonteCarlo { samples, seed } => {
                format!("{} n={} samples={} seed={}", self.engine.name(), self.n, samples, seed)
            }
        }
    }
}

/// Minimum sample count accepted by [`monte_carlo_rule`].
pub const MIN_MC_SAMPLES: usize = 100;

/// Independent uniform directions, direction `i` drawn from the stream keyed
/// by `(seed, i)`; each weight is `σ(S^n)/samples`.
pub fn monte_carlo_rule<T: Real>(n: usize, samples: usize, seed: u64) -> Result<SphereRule<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("sphere dimension n must be >= 1".into()));
    }
    if samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidInput(format!("monte carlo needs at least {MIN_MC_SAMPLES} samples, got {samples}")));
    }
    let d = n + 1;
    let dirs: Vec<T> = (0..samples as u64)
        .into_par_iter()
        .flat_map_iter(|i| crate::rng::unit_direction::<T>(seed, i, d))
        .collect();
    let w = unit_sphere_measure::<T>(n) / T::from_usize_lossy(samples);
    Ok(SphereRule {
        n,
        dirs,
        weights: vec![w; samples],
        angles: None,
        engine: Engine::MonteCarlo,
        meta: RuleMeta::MonteCarlo { samples, seed },
        coarse: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    /// Gauss for `n <= 5`, Monte Carlo above.
    #[default]
    Auto,
    Gauss,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RegionChoice {
    /// Octant for unconditional integrands, full sphere otherwise.
    #[default]
    Auto,
    Octant,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grading {
    Off,
    /// `ceil(log10 aspect) + 2` levels once the aspect ratio reaches 10.
    #[default]
    Auto,
    Levels(usize),
}

/// How to build a rule for a given integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleConfig {
    pub engine: EngineChoice,
    pub nodes_per_axis: usize,
    pub samples: usize,
    pub seed: u64,
    pub region: RegionChoice,
    pub grading: Grading,
}

impl Default for RuleConfig {
    fn default() -> Self {
        Self {
            engine: EngineChoice::Auto,
            nodes_per_axis: 48,
            samples: 100_000,
            seed: 0,
            region: RegionChoice::Auto,
            grading: Grading::Auto,
        }
    }
}

impl RuleConfig {
    pub fn gauss(nodes_per_axis: usize) -> Self {
        Self { engine: EngineChoice::Gauss, nodes_per_axis, ..Self::default() }
    }

    pub fn with_region(self, region: RegionChoice) -> Self {
        Self { region, ..self }
    }

    pub fn with_grading(self, grading: Grading) -> Self {
        Self { grading, ..self }
    }

    pub fn resolved_engine(&self, n: usize) -> EngineChoice {
        match self.engine {
            EngineChoice::Auto if n > 5 => EngineChoice::MonteCarlo,
            EngineChoice::Auto => EngineChoice::Gauss,
            e => e,
        }
    }

    pub fn grading_levels(&self, aspect: f64) -> usize {
        match self.grading {
            Grading::Off => 0,
            Grading::Levels(l) => l,
            Grading::Auto if aspect >= 10.0 => aspect.log10().ceil() as usize + 2,
            Grading::Auto => 0,
        }
    }

    /// Builds the rule for an integrand over `S^n`. `unconditional` says the
    /// integrand is invariant under coordinate sign flips; `aspect` is the
    /// eccentricity of the body, used for grading.
    pub fn build<T: Real>(&self, n: usize, unconditional: bool, aspect: f64) -> Result<SphereRule<T>> {
        if self.nodes_per_axis == 0 {
            return Err(Error::InvalidInput("nodes per axis must be positive".into()));
        }
        match self.resolved_engine(n) {
            EngineChoice::MonteCarlo => monte_carlo_rule(n, self.samples, self.seed),
            _ => {
                let region = match self.region {
                    RegionChoice::Auto if unconditional => Region::Octant,
                    RegionChoice::Auto | RegionChoice::Full => Region::Full,
                    RegionChoice::Octant => Region::Octant,
                };
                graded_gauss_rule(n, self.nodes_per_axis, region, self.grading_levels(aspect))
            }
        }
    }
}
