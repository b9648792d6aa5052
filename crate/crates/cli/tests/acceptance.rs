//! Acceptance suite: twelve criteria, one PASS/FAIL line each.
//!
//! Every reference value is recomputed here from closed forms or plain
//! integer arithmetic rather than taken from the library. The process exits
//! 0 after printing the table; set `ACCEPTANCE_STRICT=1` to exit 1 when any
//! criterion fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use santalo::bodies::{loewner_ellipsoid, sandwich_check};
use santalo::bounds::{
    boundary_sign_condition, classify_exact, fit_slope, gamma_grid, gamma_scan, verify_pest, verify_qest, CenterMode,
    Family, ScanResult,
};
use santalo::fixtures::{random_body, random_semiaxes, random_symmetric_polytope};
use santalo::functionals::{
    bs_product, mean_power, radial_power_integral, s_integral, santalo_point, ExponentPair, SantaloMode, SantaloOptions,
};
use santalo::quadrature::{gauss_product_rule, integrate, monte_carlo_rule, Grading, Region, RegionChoice};
use santalo::rng::unit_direction;
use santalo::{BodySpec, CenteredBody, LoewnerOptions, RuleConfig, Symmetry};

const SEED: u64 = 0x5eed_2024;

type Verdict = Result<(bool, String), String>;

/// `Γ(k/2)` from `Γ(1/2) = √π`, `Γ(1) = 1` and `Γ(x+1) = xΓ(x)`.
fn gamma_half(k: usize) -> f64 {
    let (mut x, mut g) = if k % 2 == 0 { (1.0, 1.0) } else { (0.5, PI.sqrt()) };
    while x < k as f64 / 2.0 - 1e-9 {
        g *= x;
        x += 1.0;
    }
    g
}

/// Surface area of `S^n`, `2π^{(n+1)/2} / Γ((n+1)/2)`.
fn sphere_area(n: usize) -> f64 {
    2.0 * PI.powf((n + 1) as f64 / 2.0) / gamma_half(n + 1)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn within(t: Instant, limit: f64) -> (bool, String) {
    let s = t.elapsed().as_secs_f64();
    (s < limit, format!("{s:.2}s of {limit}s"))
}

fn c1_sphere_measure() -> Verdict {
    let t = Instant::now();
    let mut gauss_worst = 0.0f64;
    let mut mc_ok = true;
    let mut mc_detail = Vec::new();
    for n in 1..=4 {
        let area = sphere_area(n);
        for region in [Region::Octant, Region::Full] {
            let rule = gauss_product_rule::<f64>(n, 32, region).map_err(e)?;
            let v = integrate(&rule, |_| 1.0, Symmetry::Unconditional).map_err(e)?.value;
            gauss_worst = gauss_worst.max(rel(v, area));
        }
        let mc = monte_carlo_rule::<f64>(n, 100_000, SEED).map_err(e)?;
        let est = integrate(&mc, |_| 1.0, Symmetry::None).map_err(e)?;
        // A constant integrand has zero sample variance: allow round-off.
        let tol = 4.0 * est.error_indicator + 1e-12 * area;
        mc_ok &= (est.value - area).abs() <= tol;
        mc_detail.push(format!("{:.1e}", (est.value - area).abs() / area));
    }
    let (fast, time) = within(t, 5.0);
    Ok((
        gauss_worst <= 1e-10 && mc_ok && fast,
        format!("gauss rel err {gauss_worst:.1e}; mc rel err [{}]; {time}", mc_detail.join(" ")),
    ))
}

fn c2_duality() -> Verdict {
    let t = Instant::now();
    let (mut recip, mut invol) = (0.0f64, 0.0f64);
    for i in 0..50u64 {
        let n = 1 + (i as usize % 3);
        let d = n + 1;
        let s = random_body(SEED, i, n).map_err(e)?;
        let p = s.polar().map_err(e)?;
        let pp = p.polar().map_err(e)?;
        let z = vec![0.0; d];
        for k in 0..1000 {
            let u: Vec<f64> = unit_direction(SEED ^ i, k, d);
            let r = s.radial_from(&z, &u).map_err(e)?;
            recip = recip.max((p.radial_from(&z, &u).map_err(e)? * s.support_at(&u).map_err(e)? - 1.0).abs());
            invol = invol.max((pp.radial_from(&z, &u).map_err(e)? - r).abs() / r.max(1.0));
        }
    }
    let (fast, time) = within(t, 10.0);
    Ok((recip <= 1e-10 && invol <= 1e-10 && fast, format!("reciprocity {recip:.1e}, involution {invol:.1e}; {time}")))
}

fn c3_sandwich() -> Verdict {
    let mut lib = 0.0f64;
    let mut oracle = 0.0f64;
    for i in 0..20u64 {
        let d = 2 + (i as usize % 4);
        let a = random_semiaxes(SEED, i, d, 1e3);
        lib = lib.max(sandwich_check(&a, 1000, SEED + i).map_err(e)?.max_violation);
        // Closed-form radial functions of the three coordinate bodies.
        for k in 0..1000 {
            let u: Vec<f64> = unit_direction(SEED ^ 0xabc, i * 1000 + k, d);
            let rd = 1.0 / u.iter().zip(&a).map(|(x, a)| x.abs() / a).sum::<f64>();
            let re = 1.0 / u.iter().zip(&a).map(|(x, a)| (x / a).powi(2)).sum::<f64>().sqrt();
            let rr = 1.0 / u.iter().zip(&a).map(|(x, a)| x.abs() / a).fold(0.0, f64::max);
            for (lo, hi) in [(rd, re), (re, rr), (rr, d as f64 * rd)] {
                oracle = oracle.max((lo - hi) / hi);
            }
        }
    }
    Ok((lib <= 1e-12 && oracle <= 1e-12, format!("library max violation {lib:.1e}, closed-form chain {:.1e}", oracle.max(0.0))))
}

fn c4_classical_bs() -> Verdict {
    let t = Instant::now();
    let mut dev = 0.0f64;
    let mut spread = 0.0f64;
    for i in 0..10u64 {
        let n = 1 + (i as usize % 3);
        let d = n + 1;
        let rule = gauss_product_rule::<f64>(n, 48, Region::Octant).map_err(e)?;
        let pair = ExponentPair::new(d as f64, d as f64, n).map_err(e)?;
        let target = sphere_area(n).powf(2.0 / d as f64);
        let ball = bs_product(&BodySpec::unit_ball(n).map_err(e)?, &vec![0.0; d], &pair, &rule).map_err(e)?;
        let ell = BodySpec::ellipsoid(random_semiaxes(SEED ^ 4, i, d, 5.0)).map_err(e)?;
        let v = bs_product(&ell, &vec![0.0; d], &pair, &rule).map_err(e)?;
        dev = dev.max(rel(v, target));
        spread = spread.max(rel(v, ball));
    }
    let rules = [
        gauss_product_rule::<f64>(1, 64, Region::Full).map_err(e)?,
        gauss_product_rule::<f64>(2, 32, Region::Full).map_err(e)?,
        gauss_product_rule::<f64>(3, 20, Region::Full).map_err(e)?,
    ];
    let mut worst = 0.0f64;
    for i in 0..100u64 {
        let n = 1 + (i as usize % 3);
        let d = n + 1;
        let p = random_symmetric_polytope(SEED ^ 5, i, n, d + (i as usize / 3) % 4, 40);
        let pair = ExponentPair::new(d as f64, d as f64, n).map_err(e)?;
        let r = santalo_point(&p, &pair, &rules[n - 1], SantaloMode::Product, &SantaloOptions::default()).map_err(e)?;
        worst = worst.max(r.product_at_z / sphere_area(n).powf(2.0 / d as f64));
    }
    let (fast, time) = within(t, 60.0);
    Ok((
        dev <= 1e-8 && spread <= 1e-8 && worst <= 1.0 + 1e-6 && fast,
        format!("ellipsoids: deviation {dev:.1e}, spread {spread:.1e}; polytopes: max ratio {worst:.6}; {time}"),
    ))
}

fn c5_s_closed_form() -> Verdict {
    let rule = gauss_product_rule::<f64>(1, 48, Region::Octant).map_err(e)?;
    let unit = s_integral(2.0, &[1.0, 1.0], &rule).map_err(e)?.value;
    // ∫_0^{π/2} dθ/(a₁cosθ + a₂sinθ)² = ∫_0^∞ dt/(a₁ + a₂t)² = 1/(a₁a₂).
    let mut closed = 0.0f64;
    for (a1, a2) in [(2.0, 1.0), (0.5, 3.0), (7.0, 0.25)] {
        closed = closed.max(rel(s_integral(2.0, &[a1, a2], &rule).map_err(e)?.value, 1.0 / (a1 * a2)));
    }
    let mut homog = 0.0f64;
    for n in 1..=3 {
        let rule = gauss_product_rule::<f64>(n, 16, Region::Octant).map_err(e)?;
        let a = random_semiaxes(SEED ^ 6, n as u64, n + 1, 20.0);
        for beta in [0.5, 1.5, 2.0, 3.5] {
            let s = s_integral(beta, &a, &rule).map_err(e)?.value;
            for t in [0.1, 3.0, 250.0] {
                let ta: Vec<f64> = a.iter().map(|x| x * t).collect();
                homog = homog.max(rel(s_integral(beta, &ta, &rule).map_err(e)?.value, t.powf(-beta) * s));
            }
        }
    }
    Ok((
        (unit - 1.0).abs() <= 1e-10 && closed <= 1e-10 && homog <= 1e-12,
        format!("S(2,(1,1)) - 1 = {:.1e}; 1/(a1 a2) form {closed:.1e}; homogeneity {homog:.1e}", unit - 1.0),
    ))
}

/// `∫_0^{π/2} dθ/(γcosθ + sinθ)`: with `R = √(γ²+1)` and `tan φ = γ`, the
/// denominator is `R sin(θ+φ)`, whose antiderivative is `ln tan((θ+φ)/2)/R`.
fn s1_closed(gamma: f64) -> f64 {
    let r = (gamma * gamma + 1.0).sqrt();
    let phi = gamma.atan();
    ((PI / 2.0 + phi) / 2.0).tan().ln() / r - (phi / 2.0).tan().ln() / r
}

fn c6_planar_slopes() -> Verdict {
    let t = Instant::now();
    let gammas = gamma_grid(1e2, 1e5, 10, false).map_err(e)?;
    let cfg = RuleConfig::gauss(16).with_region(RegionChoice::Octant).with_grading(Grading::Auto);
    let eval = |beta: f64| -> Result<Vec<f64>, String> {
        gammas
            .iter()
            .map(|&g| {
                let rule = cfg.build::<f64>(1, true, g).map_err(e)?;
                s_integral(beta, &[g, 1.0], &rule).map(|s| s.value).map_err(e)
            })
            .collect()
    };
    let lg: Vec<f64> = gammas.iter().map(|g| g.log10()).collect();
    let slope = |v: &[f64]| -> Result<f64, String> {
        let ly: Vec<f64> = v.iter().map(|x| x.log10()).collect();
        fit_slope(&lg, &ly).map(|f| f.slope).map_err(e)
    };
    let s_half = slope(&eval(0.5)?)?;
    let s_two = slope(&eval(2.0)?)?;
    let one = eval(1.0)?;
    let band: Vec<f64> = one.iter().zip(&gammas).map(|(s, g)| s * g / g.ln()).collect();
    let (lo, hi) = band.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &x| (l.min(x), h.max(x)));
    let closed = one.iter().zip(&gammas).map(|(s, &g)| rel(*s, s1_closed(g))).fold(0.0, f64::max);
    let (fast, time) = within(t, 30.0);
    let ok = (s_half + 0.5).abs() <= 0.03 && (s_two + 1.0).abs() <= 0.03 && lo >= 0.5 && hi <= 2.0 && closed <= 1e-8 && fast;
    Ok((
        ok,
        format!(
            "slope(0.5) {s_half:.4}, slope(2) {s_two:.4}, S·γ/lnγ in [{lo:.3}, {hi:.3}] (band [0.5, 2]), beta=1 closed form {closed:.1e}; {time}"
        ),
    ))
}

fn c7_qest() -> Verdict {
    let t = Instant::now();
    let grid = gamma_grid(2f64.sqrt(), 1e3, 6, false).map_err(e)?;
    let cfg = RuleConfig::gauss(12);
    let mut ok = true;
    let mut detail = Vec::new();
    for beta in [0.5, 1.5, 2.5] {
        for (form, r) in [("direct", verify_qest(beta, 2, &grid, &cfg)), ("reciprocal", verify_pest(beta, 2, &grid, &cfg))] {
            match r {
                Ok(rep) => {
                    ok &= rep.passed();
                    if form == "reciprocal" {
                        // The reciprocal form is S(α, 1/a₃, 1/a₂, 1/a₁).
                        let p = &rep.points[rep.points.len() / 2];
                        let b: Vec<f64> = p.a.iter().rev().map(|x| 1.0 / x).collect();
                        let aspect = b.iter().cloned().fold(0.0, f64::max) / b.iter().cloned().fold(f64::INFINITY, f64::min);
                        let rule = cfg.with_region(RegionChoice::Octant).build::<f64>(2, true, aspect).map_err(e)?;
                        let direct = s_integral(beta, &b, &rule).map_err(e)?.value.ln();
                        ok &= (direct - p.log_s).abs() <= 1e-9 * direct.abs().max(1.0);
                    }
                    detail.push(format!("{form} b={beta}: excess {:.3}", rep.max_excess));
                }
                Err(err) => {
                    ok = false;
                    detail.push(format!("{form} b={beta}: {err}"));
                }
            }
        }
    }
    let (fast, time) = within(t, 300.0);
    Ok((ok && fast, format!("{}; {time}", detail.join(", "))))
}

fn scan_slope(n: usize, alpha: f64, beta: f64, hi: f64, count: usize) -> Result<(ScanResult<f64>, bool), String> {
    let grid = gamma_grid(10.0, hi, count, false).map_err(e)?;
    let pair = ExponentPair::new(alpha, beta, n).map_err(e)?;
    match gamma_scan(&Family::RhombusAxis, &pair, &grid, &RuleConfig::default(), CenterMode::Origin) {
        Ok(s) => Ok((s, true)),
        Err(santalo::Error::UnresolvedAsymptotics { scan, .. }) => Ok((*scan, false)),
        Err(err) => Err(err.to_string()),
    }
}

fn c8_counterexample() -> Verdict {
    let t = Instant::now();
    let (div, r1) = scan_slope(2, 10.0, 2.5, 1e4, 8)?;
    let (sharp, r2) = scan_slope(2, 10.0, 1.25, 1e4, 8)?;
    let (planar, r3) = scan_slope(1, 4.0, 4.0 / 3.0, 1e4, 8)?;
    // Same sharp pair one decade further out, reported for the record.
    let (further, _) = scan_slope(2, 10.0, 1.25, 1e5, 10)?;
    let a = (div.fit.slope - 0.4).abs() <= 0.05;
    let b = sharp.fit.slope <= 0.02;
    let c = planar.fit.slope.abs() <= 0.02;
    let (fast, time) = within(t, 180.0);
    let resolved = if r1 && r2 && r3 { "" } else { " (a sub-window check was unresolved)" };
    Ok((
        a && b && c && fast,
        format!(
            "(2,10,2.5) slope {:.4} [{}]; (2,10,1.25) slope {:.4} [{}] (to 1e5: {:.4}); (1,4,4/3) slope {:.4} [{}]{resolved}; {time}",
            div.fit.slope,
            if a { "ok" } else { "off" },
            sharp.fit.slope,
            if b { "ok" } else { "above 0.02" },
            further.fit.slope,
            planar.fit.slope,
            if c { "ok" } else { "off" },
        ),
    ))
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Small deterministic generator for the exponent sweep.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self, lo: i64, hi: i64) -> i64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
        lo + (z % (hi - lo + 1) as u64) as i64
    }
}

fn c9_equivalence() -> Verdict {
    let t = Instant::now();
    let mut rng = SplitMix(SEED);
    let (mut disagree, mut oracle_mismatch, mut boundary) = (0, 0, 0);
    for n in 1..=4i64 {
        for k in 0..10_000 {
            let (ap, aq) = (rng.next(1, 300), rng.next(1, 30));
            let (mut bp, mut bq) = (rng.next(1, 300), rng.next(1, 30));
            // Every fifth pair sits on the sharp boundary β = α/(α-n), α > n+1.
            if k % 5 == 0 && ap > (n + 1) * aq {
                (bp, bq) = (ap, ap - n * aq);
                boundary += 1;
            }
            let c = classify_exact(&q(ap, aq), &q(bp, bq), n as usize).map_err(e)?;
            // n/α + 1/β >= 1 and 1/α + n/β >= 1, cleared of denominators.
            let main = n * aq * bp + bq * ap >= ap * bp && aq * bp + n * bq * ap >= ap * bp;
            disagree += (c.main_holds != c.star_holds) as usize;
            oracle_mismatch += (c.main_holds != main) as usize;
        }
    }
    let mut sign_fail = 0;
    let mut sign_oracle = 0;
    let mut tested = 0;
    for n in 1..=4i64 {
        for p in 1..=600 {
            for d in [1, 2, 3, 7, 12] {
                let (ap, aq) = ((n + 1) * d + p, d);
                tested += 1;
                sign_fail += !boundary_sign_condition(&q(ap, aq), n as usize).map_err(e)? as usize;
                // β = ap/(ap - n·aq); 1 - k/β - (n+1-k)/α <= 0 times ap.
                let den = ap - n * aq;
                let top = (ap + den - 1) / den - 1;
                sign_oracle += (1..=top).any(|k| ap - k * den - (n + 1 - k) * aq > 0) as usize;
            }
        }
    }
    let (fast, time) = within(t, 5.0);
    Ok((
        disagree == 0 && oracle_mismatch == 0 && sign_fail == 0 && sign_oracle == 0 && fast,
        format!(
            "40000 pairs ({boundary} boundary): {disagree} disagreements, {oracle_mismatch} oracle mismatches; sign condition {sign_fail}+{sign_oracle} failures in {tested}; {time}"
        ),
    ))
}

fn c10_holder() -> Verdict {
    let cfg = RuleConfig::gauss(16).with_grading(Grading::Off);
    let mut worst = 0.0f64;
    for i in 0..50u64 {
        let n = 1 + (i as usize % 3);
        let spec = random_body(SEED ^ 10, i, n).map_err(e)?;
        let rule = cfg.build::<f64>(n, spec.is_unconditional(), spec.aspect_ratio()).map_err(e)?;
        let body = CenteredBody::origin(spec);
        let m = [0.5, 1.0, 2.0, (n + 1) as f64]
            .iter()
            .map(|&a| mean_power(&body, a, &rule).map_err(e))
            .collect::<Result<Vec<_>, _>>()?;
        for w in m.windows(2) {
            worst = worst.max((w[0] - w[1]) / w[1]);
        }
        // The α = n+1 mean is the volume radius: ((n+1) Vol / σ)^{1/(n+1)}.
        let vol = radial_power_integral(&body, (n + 1) as f64, &rule).map_err(e)?.value / (n + 1) as f64;
        let radius = ((n + 1) as f64 * vol / sphere_area(n)).powf(1.0 / (n + 1) as f64);
        worst = worst.max(rel(radius, m[3]) - 1e-9);
    }
    Ok((worst <= 1e-10, format!("50 bodies, max relative decrease {:.1e}", worst.max(0.0))))
}

fn c11_loewner() -> Verdict {
    let mut diag = 0.0f64;
    for n in 1..=3 {
        for i in 0..4 {
            let a = random_semiaxes(SEED ^ 11, (n * 10 + i) as u64, n + 1, 10.0);
            let verts = BodySpec::rhombus(a.clone()).map_err(e)?.vertices().ok_or("rhombus has vertices")?;
            let l = loewner_ellipsoid(&verts, LoewnerOptions::default()).map_err(e)?;
            let scale = a.iter().map(|x| 1.0 / (x * x)).fold(0.0, f64::max);
            for r in 0..=n {
                for c in 0..=n {
                    let want = if r == c { 1.0 / (a[r] * a[r]) } else { 0.0 };
                    diag = diag.max((l.a[(r, c)] - want).abs() / scale);
                }
            }
        }
    }
    let opts = LoewnerOptions::<f64>::default();
    let (mut vertex, mut outside) = (f64::NEG_INFINITY, 0);
    for i in 0..20u64 {
        let n = 1 + (i as usize % 3);
        let p = random_symmetric_polytope(SEED ^ 12, i, n, n + 2 + (i as usize % 3), 40);
        let verts = p.vertices().ok_or("polytope has vertices")?;
        let l = loewner_ellipsoid(&verts, opts).map_err(e)?;
        for v in &verts {
            vertex = vertex.max(l.a.quad_form(v) - 1.0 - opts.eps);
        }
        let f = l.inner_factor();
        for k in 0..200 {
            let u: Vec<f64> = unit_direction(SEED ^ i, k, n + 1);
            let x: Vec<f64> = l.boundary_point(&u).iter().map(|c| c * f).collect();
            outside += !p.contains(&x, 1e-9) as usize;
        }
    }
    Ok((
        diag <= 1e-4 && vertex <= 1e-12 && outside == 0,
        format!("rhombus MVEE error {diag:.1e}; 20 polytopes: max vᵀAv-(1+eps) {vertex:.1e}, inner points outside {outside}"),
    ))
}

fn c12_determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(e)?;
    let run = |engine: &str, name: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_santalo"))
            .args(["scan-gamma", "--n", "2", "--alpha", "10", "--beta", "2.5", "--gammas", "10:1e3:6"])
            .args(["--engine", engine, "--nodes", "24", "--samples", "20000", "--seed", "17"])
            .arg("--out")
            .arg(&path)
            .output()
            .map_err(e)?;
        // Exit 4 (unresolved asymptotics) still writes the full table.
        if !matches!(status.status.code(), Some(0 | 4)) {
            return Err(format!("scan-gamma exited {:?}: {}", status.status.code(), String::from_utf8_lossy(&status.stderr)));
        }
        std::fs::read(&path).map_err(e)
    };
    let g1 = run("gauss", "g1.csv")?;
    let g2 = run("gauss", "g2.csv")?;
    let m1 = run("mc", "m1.csv")?;
    let m2 = run("mc", "m2.csv")?;
    Ok((g1 == g2 && m1 == m2, format!("gauss {} bytes identical: {}; mc {} bytes identical: {}", g1.len(), g1 == g2, m1.len(), m1 == m2)))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 12] = [
        ("sphere measure", c1_sphere_measure),
        ("duality identities", c2_duality),
        ("covering sandwich", c3_sandwich),
        ("classical product inequality", c4_classical_bs),
        ("S-integral closed form", c5_s_closed_form),
        ("planar slope suite", c6_planar_slopes),
        ("monomial bound exponents", c7_qest),
        ("counterexample growth", c8_counterexample),
        ("admissibility equivalence", c9_equivalence),
        ("Hölder monotonicity", c10_holder),
        ("Löwner/John sandwich", c11_loewner),
        ("scan determinism", c12_determinism),
    ];
    let total = Instant::now();
    let mut passed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = match f() {
            Ok(r) => r,
            Err(msg) => (false, format!("error: {msg}")),
        };
        passed += ok as usize;
        println!("{} {:>2} {name} ({:.2}s): {detail}", if ok { "PASS" } else { "FAIL" }, i + 1, t.elapsed().as_secs_f64());
    }
    println!("{passed}/{} criteria passed in {:.1}s", criteria.len(), Duration::as_secs_f64(&total.elapsed()));
    if passed < criteria.len() && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
