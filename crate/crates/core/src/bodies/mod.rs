//! Origin-symmetric convex bodies in `R^{n+1}`.
//!
//! Every body is described declaratively by a [`BodySpec`]: coordinate
//! rhombi (cross-polytopes), boxes and ellipsoids, symmetric H-polytopes,
//! and invertible linear images of any of these. All of them are symmetric
//! about the origin by construction. Radial functions are exact at any
//! interior center, support functions are closed form, and the polar with
//! respect to the origin is again a `BodySpec`.

mod json;
mod loewner;

pub use json::BodyJson;
pub use loewner::{loewner_ellipsoid, Loewner, LoewnerOptions};

use crate::error::{to_f64_vec, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{dot, is_zero_vec, norm};
use crate::Real;

/// Dimension bookkeeping: bodies live in `R^{n+1}` and integrals run over `S^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmbientDim {
    n: usize,
}

impl AmbientDim {
    /// From the sphere dimension `n >= 1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("sphere dimension n must be >= 1".into()));
        }
        Ok(Self { n })
    }

    /// From the ambient dimension `n + 1 >= 2`.
    pub fn from_ambient(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidInput(format!("ambient dimension must be >= 2, got {d}")));
        }
        Ok(Self { n: d - 1 })
    }

    pub fn sphere(self) -> usize {
        self.n
    }

    pub fn ambient(self) -> usize {
        self.n + 1
    }
}

/// Positive semi-axis lengths `a_1, ..., a_{n+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Semiaxes<T>(Vec<T>);

impl<T: Real> Semiaxes<T> {
    pub fn new(a: Vec<T>) -> Result<Self> {
        AmbientDim::from_ambient(a.len())?;
        if let Some(i) = a.iter().position(|x| !(x.is_finite() && *x > T::zero())) {
            return Err(Error::InvalidInput(format!("a[{i}] must be a positive finite number")));
        }
        Ok(Self(a))
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn reciprocal(&self) -> Self {
        Self(self.0.iter().map(|x| x.recip()).collect())
    }
}

/// Symmetric H-polytope `{x : |nu_j . x| <= h_j for all j}`, one stored
/// normal per facet pair, with an optional vertex list (one vertex per
/// `±v` pair) used for support evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct HPolytopeSym<T> {
    normals: Vec<Vec<T>>,
    offsets: Vec<T>,
    vertices: Option<Vec<Vec<T>>>,
}

const VERTEX_FEASIBILITY_TOL: f64 = 1e-9;
const FACET_TOUCH_TOL: f64 = 1e-6;

impl<T: Real> HPolytopeSym<T> {
    pub fn new(normals: Vec<Vec<T>>, offsets: Vec<T>, vertices: Option<Vec<Vec<T>>>) -> Result<Self> {
        let d = normals.first().map(Vec::len).ok_or_else(|| Error::InvalidInput("normals: empty".into()))?;
        AmbientDim::from_ambient(d)?;
        if offsets.len() != normals.len() {
            return Err(Error::DimensionMismatch { what: "offsets", expected: normals.len(), got: offsets.len() });
        }
        for (j, nu) in normals.iter().enumerate() {
            if nu.len() != d {
                return Err(Error::DimensionMismatch { what: "normals", expected: d, got: nu.len() });
            }
            if nu.iter().any(|x| !x.is_finite()) || is_zero_vec(nu) {
                return Err(Error::InvalidInput(format!("normals[{j}] must be finite and nonzero")));
            }
        }
        if let Some(j) = offsets.iter().position(|h| !(h.is_finite() && *h > T::zero())) {
            return Err(Error::InvalidInput(format!("offsets[{j}] must be a positive finite number")));
        }
        // Symmetric slabs bound the set iff the normals span R^d.
        let mut gram = Matrix::zeros(d);
        for nu in &normals {
            let s = norm(nu);
            for i in 0..d {
                for k in 0..d {
                    gram[(i, k)] += nu[i] * nu[k] / (s * s);
                }
            }
        }
        if gram.inverse(T::lit(1e-12)).is_err() {
            return Err(Error::InvalidInput("normals do not span the space; polytope is unbounded".into()));
        }
        if let Some(vs) = &vertices {
            check_vertices(&normals, &offsets, vs)?;
        }
        Ok(Self { normals, offsets, vertices })
    }

    pub fn normals(&self) -> &[Vec<T>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[T] {
        &self.offsets
    }

    pub fn vertices(&self) -> Option<&[Vec<T>]> {
        self.vertices.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.normals[0].len()
    }
}

fn check_vertices<T: Real>(normals: &[Vec<T>], offsets: &[T], vs: &[Vec<T>]) -> Result<()> {
    let d = normals[0].len();
    if vs.is_empty() {
        return Err(Error::InvalidInput("vertices: empty list".into()));
    }
    let feas = T::one() + T::lit(VERTEX_FEASIBILITY_TOL);
    let touch = T::one() - T::lit(FACET_TOUCH_TOL);
    for (k, v) in vs.iter().enumerate() {
        if v.len() != d {
            return Err(Error::DimensionMismatch { what: "vertices", expected: d, got: v.len() });
        }
        for (j, (nu, &h)) in normals.iter().zip(offsets).enumerate() {
            if dot(nu, v).abs() > h * feas {
                return Err(Error::InvalidInput(format!("vertices[{k}] violates facet {j}")));
            }
        }
    }
    for (j, (nu, &h)) in normals.iter().zip(offsets).enumerate() {
        if !vs.iter().any(|v| dot(nu, v).abs() >= h * touch) {
            return Err(Error::InvalidInput(format!("facet {j} is not touched by any vertex")));
        }
    }
    Ok(())
}

/// Invertible linear map with its inverse cached.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap<T> {
    matrix: Matrix<T>,
    inverse: Matrix<T>,
}

impl<T: Real> LinearMap<T> {
    pub fn new(matrix: Matrix<T>) -> Result<Self> {
        let d = matrix.dim();
        let fro = matrix.frobenius_norm();
        if !fro.is_finite() {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        let det = matrix.determinant();
        if !(det.abs() > T::lit(1e-12) * fro.powi(d as i32)) {
            return Err(Error::InvalidInput("matrix is singular or too ill-conditioned".into()));
        }
        let inverse = matrix.inverse(T::eps())?;
        Ok(Self { matrix, inverse })
    }

    pub fn scaling(dim: usize, t: T) -> Result<Self> {
        Self::new(Matrix::identity(dim).scale(t))
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix<T> {
        &self.inverse
    }

    /// The map `T^{-T}` carrying polars: `(T K)^* = T^{-T} K^*`.
    pub fn polar_map(&self) -> Self {
        Self { matrix: self.inverse.transpose(), inverse: self.matrix.transpose() }
    }

    fn is_diagonal(&self) -> bool {
        let d = self.matrix.dim();
        (0..d).all(|i| (0..d).all(|j| i == j || self.matrix[(i, j)].is_zero()))
    }
}

/// Declarative description of an origin-symmetric convex body.
#[derive(Debug, Clone, PartialEq)]
pub enum BodySpec<T> {
    /// Cross-polytope with vertices `±a_i e_i`.
    Rhombus(Semiaxes<T>),
    /// Box with vertices `(±a_1, ..., ±a_{n+1})`.
    Box(Semiaxes<T>),
    /// `{x : sum x_i^2 / a_i^2 <= 1}`.
    Ellipsoid(Semiaxes<T>),
    HPolytope(HPolytopeSym<T>),
    LinearImage { base: Box<BodySpec<T>>, map: LinearMap<T> },
}

impl<T: Real> BodySpec<T> {
    pub fn rhombus(a: Vec<T>) -> Result<Self> {
        Semiaxes::new(a).map(Self::Rhombus)
    }

    pub fn box_(a: Vec<T>) -> Result<Self> {
        Semiaxes::new(a).map(Self::Box)
    }

    pub fn ellipsoid(a: Vec<T>) -> Result<Self> {
        Semiaxes::new(a).map(Self::Ellipsoid)
    }

    /// Euclidean unit ball `B_1` in `R^{n+1}`.
    pub fn unit_ball(n: usize) -> Result<Self> {
        let d = AmbientDim::new(n)?.ambient();
        Self::ellipsoid(vec![T::one(); d])
    }

    pub fn hpolytope(normals: Vec<Vec<T>>, offsets: Vec<T>, vertices: Option<Vec<Vec<T>>>) -> Result<Self> {
        HPolytopeSym::new(normals, offsets, vertices).map(Self::HPolytope)
    }

    pub fn linear_image(base: Self, matrix: Matrix<T>) -> Result<Self> {
        if matrix.dim() != base.dim() {
            return Err(Error::DimensionMismatch { what: "matrix", expected: base.dim(), got: matrix.dim() });
        }
        Ok(Self::LinearImage { base: Box::new(base), map: LinearMap::new(matrix)? })
    }

    /// Ambient dimension `n + 1`.
    pub fn dim(&self) -> usize {
        match self {
            Self::Rhombus(a) | Self::Box(a) | Self::Ellipsoid(a) => a.as_slice().len(),
            Self::HPolytope(p) => p.dim(),
            Self::LinearImage { base, .. } => base.dim(),
        }
    }

    pub fn ambient(&self) -> AmbientDim {
        AmbientDim { n: self.dim() - 1 }
    }

    /// True when the body is invariant under every coordinate sign flip,
    /// so an octant quadrature rule may be used at the origin.
    pub fn is_unconditional(&self) -> bool {
        match self {
            Self::Rhombus(_) | Self::Box(_) | Self::Ellipsoid(_) => true,
            Self::HPolytope(_) => false,
            Self::LinearImage { base, map } => map.is_diagonal() && base.is_unconditional(),
        }
    }

    /// Eccentricity estimate used to grade quadrature rules: the ratio of the
    /// largest to the smallest semi-axis for coordinate bodies, inflated by
    /// the condition number of the map for linear images.
    pub fn aspect_ratio(&self) -> T {
        match self {
            Self::Rhombus(a) | Self::Box(a) | Self::Ellipsoid(a) => {
                let s = a.as_slice();
                let hi = s.iter().fold(T::zero(), |m, &x| m.max(x));
                let lo = s.iter().fold(T::infinity(), |m, &x| m.min(x));
                hi / lo
            }
            Self::HPolytope(_) => T::one(),
            Self::LinearImage { base, map } => {
                let d = T::from_usize_lossy(self.dim());
                base.aspect_ratio() * map.matrix.frobenius_norm() * map.inverse.frobenius_norm() / d
            }
        }
    }

    /// Minkowski gauge `inf{t > 0 : x ∈ tΩ}`.
    pub fn gauge(&self, x: &[T]) -> T {
        match self {
            Self::Rhombus(a) => x.iter().zip(a.as_slice()).fold(T::zero(), |s, (&xi, &ai)| s + xi.abs() / ai),
            Self::Box(a) => x.iter().zip(a.as_slice()).fold(T::zero(), |s, (&xi, &ai)| s.max(xi.abs() / ai)),
            Self::Ellipsoid(a) => x
                .iter()
                .zip(a.as_slice())
                .fold(T::zero(), |s, (&xi, &ai)| s + (xi / ai) * (xi / ai))
                .sqrt(),
            Self::HPolytope(p) => {
                p.normals.iter().zip(&p.offsets).fold(T::zero(), |s, (nu, &h)| s.max(dot(nu, x).abs() / h))
            }
            Self::LinearImage { base, map } => base.gauge(&map.inverse.mul_vec(x)),
        }
    }

    /// Membership with relative tolerance `tol` on the defining inequalities.
    pub fn contains(&self, x: &[T], tol: T) -> bool {
        self.gauge(x) <= T::one() + tol
    }

    /// Support function `h(u) = max_{x ∈ Ω} x·u`, positively homogeneous in `u`.
    pub fn support_at(&self, u: &[T]) -> Result<T> {
        self.check_len(u, "direction")?;
        Ok(match self {
            Self::Rhombus(a) => u.iter().zip(a.as_slice()).fold(T::zero(), |s, (&ui, &ai)| s.max(ai * ui.abs())),
            Self::Box(a) => u.iter().zip(a.as_slice()).fold(T::zero(), |s, (&ui, &ai)| s + ai * ui.abs()),
            Self::Ellipsoid(a) => u
                .iter()
                .zip(a.as_slice())
                .fold(T::zero(), |s, (&ui, &ai)| s + (ai * ui) * (ai * ui))
                .sqrt(),
            Self::HPolytope(p) => {
                let vs = p.vertices.as_ref().ok_or(Error::SupportUnavailable)?;
                vs.iter().fold(T::zero(), |s, v| s.max(dot(v, u).abs()))
            }
            Self::LinearImage { base, map } => base.support_at(&map.matrix.tr_mul_vec(u))?,
        })
    }

    /// Polar body with respect to the origin.
    pub fn polar(&self) -> Result<Self> {
        Ok(match self {
            Self::Rhombus(a) => Self::Box(a.reciprocal()),
            Self::Box(a) => Self::Rhombus(a.reciprocal()),
            Self::Ellipsoid(a) => Self::Ellipsoid(a.reciprocal()),
            Self::HPolytope(p) => {
                let vs = p.vertices.as_ref().ok_or_else(|| {
                    Error::PolarUnavailable("H-polytope without vertices has no facet data for its polar".into())
                })?;
                let dual_vertices =
                    p.normals.iter().zip(&p.offsets).map(|(nu, &h)| nu.iter().map(|&x| x / h).collect()).collect();
                let polar = HPolytopeSym::new(vs.clone(), vec![T::one(); vs.len()], Some(dual_vertices))
                    .map_err(|e| Error::PolarUnavailable(e.to_string()))?;
                Self::HPolytope(polar)
            }
            Self::LinearImage { base, map } => Self::LinearImage { base: Box::new(base.polar()?), map: map.polar_map() },
        })
    }

    /// One representative per `±v` vertex pair, when the body is a polytope
    /// with known vertices.
    pub fn vertices(&self) -> Option<Vec<Vec<T>>> {
        let d = self.dim();
        match self {
            Self::Rhombus(a) => Some(
                (0..d)
                    .map(|i| {
                        let mut v = vec![T::zero(); d];
                        v[i] = a.as_slice()[i];
                        v
                    })
                    .collect(),
            ),
            Self::Box(a) => {
                // Fix the sign of the first coordinate to get one per pair.
                let count = 1usize << (d - 1);
                Some(
                    (0..count)
                        .map(|mask| {
                            a.as_slice()
                                .iter()
                                .enumerate()
                                .map(|(i, &ai)| if i > 0 && mask >> (i - 1) & 1 == 1 { -ai } else { ai })
                                .collect()
                        })
                        .collect(),
                )
            }
            Self::Ellipsoid(_) => None,
            Self::HPolytope(p) => p.vertices.clone(),
            Self::LinearImage { base, map } => {
                base.vertices().map(|vs| vs.iter().map(|v| map.matrix.mul_vec(v)).collect())
            }
        }
    }

    /// Radial function at center `z` in unit direction `u`:
    /// `sup{λ > 0 : z + λu ∈ Ω}`.
    pub fn radial_from(&self, z: &[T], u: &[T]) -> Result<T> {
        self.check_len(u, "direction")?;
        self.check_len(z, "center")?;
        let r = self.radial_unchecked(z, u);
        match r {
            Some(r) if r > T::zero() && r.is_finite() => Ok(r),
            _ => Err(Error::CenterNotInterior { direction: to_f64_vec(u) }),
        }
    }

    fn radial_unchecked(&self, z: &[T], u: &[T]) -> Option<T> {
        if is_zero_vec(z) {
            return Some(self.gauge(u).recip());
        }
        match self {
            Self::Rhombus(a) => rhombus_radial(a.as_slice(), z, u),
            Self::Box(a) => {
                let mut best = T::infinity();
                for ((&zi, &ui), &ai) in z.iter().zip(u).zip(a.as_slice()) {
                    if zi.abs() >= ai {
                        return None;
                    }
                    if !ui.is_zero() {
                        best = best.min((ai - zi * ui.signum()) / ui.abs());
                    }
                }
                Some(best)
            }
            Self::Ellipsoid(a) => {
                // q λ² + 2 b λ - c = 0 with c > 0 for interior z.
                let (mut q, mut b, mut zz) = (T::zero(), T::zero(), T::zero());
                for ((&zi, &ui), &ai) in z.iter().zip(u).zip(a.as_slice()) {
                    let a2 = ai * ai;
                    q += ui * ui / a2;
                    b += zi * ui / a2;
                    zz += zi * zi / a2;
                }
                let c = T::one() - zz;
                if c <= T::zero() {
                    return None;
                }
                let disc = (b * b + q * c).sqrt();
                Some(if b > T::zero() { c / (b + disc) } else { (disc - b) / q })
            }
            Self::HPolytope(p) => {
                let mut best = T::infinity();
                for (nu, &h) in p.normals.iter().zip(&p.offsets) {
                    let nz = dot(nu, z);
                    if nz.abs() >= h {
                        return None;
                    }
                    let nuu = dot(nu, u);
                    if !nuu.is_zero() {
                        best = best.min((h - nz * nuu.signum()) / nuu.abs());
                    }
                }
                Some(best)
            }
            Self::LinearImage { base, map } => {
                let w = map.inverse.mul_vec(u);
                let zb = map.inverse.mul_vec(z);
                let len = norm(&w);
                let dir: Vec<T> = w.iter().map(|&x| x / len).collect();
                base.radial_unchecked(&zb, &dir).map(|r| r / len)
            }
        }
    }

    fn check_len(&self, v: &[T], what: &'static str) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { what, expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// Converts the scalar type, e.g. to run the same body in `f32`.
    pub fn cast<U: Real>(&self) -> Result<BodySpec<U>> {
        let cv = |v: &[T]| v.iter().map(|&x| U::lit(x.as_f64())).collect::<Vec<U>>();
        Ok(match self {
            Self::Rhombus(a) => BodySpec::rhombus(cv(a.as_slice()))?,
            Self::Box(a) => BodySpec::box_(cv(a.as_slice()))?,
            Self::Ellipsoid(a) => BodySpec::ellipsoid(cv(a.as_slice()))?,
            Self::HPolytope(p) => BodySpec::hpolytope(
                p.normals.iter().map(|v| cv(v)).collect(),
                cv(&p.offsets),
                p.vertices.as_ref().map(|vs| vs.iter().map(|v| cv(v)).collect()),
            )?,
            Self::LinearImage { base, map } => {
                BodySpec::linear_image(base.cast()?, map.matrix.map(|x| U::lit(x.as_f64())))?
            }
        })
    }
}

/// Solves `sum |z_i + λ u_i| / a_i = 1` for the positive root by walking the
/// breakpoints of the convex piecewise-linear left side.
fn rhombus_radial<T: Real>(a: &[T], z: &[T], u: &[T]) -> Option<T> {
    let g = |lam: T| {
        z.iter().zip(u).zip(a).fold(T::zero(), |s, ((&zi, &ui), &ai)| s + (zi + lam * ui).abs() / ai)
    };
    let g0 = g(T::zero());
    if g0 >= T::one() {
        return None;
    }
    let mut breaks: Vec<T> = z
        .iter()
        .zip(u)
        .filter(|(_, ui)| !ui.is_zero())
        .map(|(&zi, &ui)| -zi / ui)
        .filter(|&t| t > T::zero())
        .collect();
    breaks.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (mut lo, mut g_lo) = (T::zero(), g0);
    for b in breaks {
        let g_b = g(b);
        if g_b >= T::one() {
            return Some(lo + (T::one() - g_lo) * (b - lo) / (g_b - g_lo));
        }
        lo = b;
        g_lo = g_b;
    }
    let slope = u.iter().zip(a).fold(T::zero(), |s, (&ui, &ai)| s + ui.abs() / ai);
    Some(lo + (T::one() - g_lo) / slope)
}

/// A body together with an interior center `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct CenteredBody<T> {
    spec: BodySpec<T>,
    z: Vec<T>,
}

impl<T: Real> CenteredBody<T> {
    pub fn new(spec: BodySpec<T>, z: Vec<T>) -> Result<Self> {
        spec.check_len(&z, "center")?;
        if !(spec.gauge(&z) < T::one()) {
            return Err(Error::CenterNotInterior { direction: to_f64_vec(&z) });
        }
        Ok(Self { spec, z })
    }

    pub fn origin(spec: BodySpec<T>) -> Self {
        let z = vec![T::zero(); spec.dim()];
        Self { spec, z }
    }

    pub fn spec(&self) -> &BodySpec<T> {
        &self.spec
    }

    pub fn center(&self) -> &[T] {
        &self.z
    }

    pub fn is_at_origin(&self) -> bool {
        is_zero_vec(&self.z)
    }

    /// Exact radial value `r_z(u)`.
    pub fn radial_at(&self, u: &[T]) -> Result<T> {
        self.spec.radial_from(&self.z, u)
    }
}

/// Pointwise check of `r_D <= r_E <= r_R <= (n+1) r_D` for the rhombus,
/// ellipsoid and box sharing the semi-axes `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct SandwichReport<T> {
    pub samples: usize,
    /// Largest relative violation of any link of the chain (0 when none).
    pub max_violation: T,
}

pub fn sandwich_check<T: Real>(a: &[T], samples: usize, seed: u64) -> Result<SandwichReport<T>> {
    if samples == 0 {
        return Err(Error::InvalidInput("samples must be >= 1".into()));
    }
    let d = a.len();
    let rhombus = BodySpec::rhombus(a.to_vec())?;
    let ellipsoid = BodySpec::ellipsoid(a.to_vec())?;
    let boxed = BodySpec::box_(a.to_vec())?;
    let z = vec![T::zero(); d];
    let factor = T::from_usize_lossy(d);
    let mut worst = T::zero();
    for i in 0..samples {
        let u: Vec<T> = crate::rng::unit_direction(seed, i as u64, d);
        let rd = rhombus.radial_from(&z, &u)?;
        let re = ellipsoid.radial_from(&z, &u)?;
        let rr = boxed.radial_from(&z, &u)?;
        let links = [(rd, re), (re, rr), (rr, factor * rd)];
        for (lo, hi) in links {
            worst = worst.max((lo - hi) / hi);
        }
    }
    Ok(SandwichReport { samples, max_violation: worst.max(T::zero()) })
}
