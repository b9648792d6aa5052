use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use santalo::bodies::loewner_ellipsoid;
use santalo::bounds::{
    gamma_grid, gamma_scan, region_scan, verify_pest, verify_qest, BoundReport, CenterMode, Family, ScanResult,
};
use santalo::checks::{run_all, SuiteOptions};
use santalo::functionals::{
    bs_product_parts, dual_quermassintegral, radial_power_integral, s_integral, santalo_point, ExponentPair,
    ProductEstimate, SantaloMode, SantaloOptions,
};
use santalo::quadrature::{Grading, RegionChoice};
use santalo::{BodyJson, BodySpec, CenteredBody, LoewnerOptions, RuleConfig, SphereRule};

use crate::args::{BodyArgs, CenterModeArg, Command, FormArg, GammaSpec, RuleArgs};
use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "santalo-report/1";

pub const SCAN_CSV_HEADER: &str = "gamma,I_alpha,J_beta,product,log10_gamma,log10_product";

pub const REGION_CSV_HEADER: &str =
    "alpha,beta,admissible,scanned_alpha,scanned_beta,predicted_slope,fitted_slope,class,agrees";

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    /// The invocation, program name excluded.
    pub argv: Vec<String>,
    pub parameters: Value,
    pub results: Value,
    pub wall_time_s: f64,
}

impl Report {
    fn new(command: &str, parameters: Value, results: Value) -> Self {
        Self { schema: SCHEMA_VERSION, command: command.into(), argv: Vec::new(), parameters, results, wall_time_s: 0.0 }
    }
}

/// What a command produced, before it is written anywhere.
#[derive(Debug)]
pub enum Primary {
    Report(Report),
    /// CSV text plus a summary report printed when the CSV goes to a file.
    Csv(String, Report),
    Text(String),
}

#[derive(Debug)]
pub struct Done {
    pub primary: Primary,
    pub out: Option<PathBuf>,
    pub code: i32,
    /// Printed on stderr.
    pub message: Option<String>,
}

impl Done {
    fn ok(primary: Primary, out: &Option<PathBuf>) -> Self {
        Self { primary, out: out.clone(), code: 0, message: None }
    }
}

pub fn dispatch(command: &Command) -> Result<Done, CliError> {
    match command {
        Command::Integrate { body, alpha, center, rule, out } => integrate(body, *alpha, center.as_deref(), rule, &out.out),
        Command::Product { body, alpha, beta, santalo, rule, out } => product(body, *alpha, *beta, *santalo, rule, &out.out),
        Command::ScanGamma { n, alpha, beta, gammas, center_mode, powers, rule, out } => {
            scan(*n, *alpha, *beta, gammas, *center_mode, powers.as_deref(), rule, &out.out)
        }
        Command::Region { n, alphas, betas, gamma_max, rule, out } => region(*n, alphas, betas, *gamma_max, rule, &out.out),
        Command::SIntegral { beta, a, nodes, grading, out } => s_integral_cmd(*beta, a, *nodes, *grading, &out.out),
        Command::Dualquermass { body, q, center, rule, out } => dualquermass(body, *q, center.as_deref(), rule, &out.out),
        Command::Mvee { body, eps, max_iter, out } => mvee(body, *eps, *max_iter, &out.out),
        Command::Bound { n, exponent, form, gammas, nodes, out } => bound(*n, *exponent, *form, gammas, *nodes, &out.out),
        Command::Verify { quick, seed } => verify(*quick, *seed),
    }
}

/// Reads and validates a body file. Diagnostics name the file, the field
/// path and, for syntax errors, the line and column.
pub fn load_body(path: &Path) -> Result<BodySpec<f64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    let json: BodyJson = serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        let at = if at == "." { String::new() } else { format!(" (field `{at}`)") };
        CliError::input(format!("{}: {}{at}", path.display(), e.inner()))
    })?;
    json.to_spec().map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn canonical_body_json(spec: &BodySpec<f64>) -> String {
    serde_json::to_string_pretty(&BodyJson::from(spec)).expect("body serializes") + "\n"
}

fn read_body(args: &BodyArgs) -> Result<(BodySpec<f64>, Option<Done>), CliError> {
    let spec = load_body(&args.body)?;
    let echo = args.echo_body.then(|| Done::ok(Primary::Text(canonical_body_json(&spec)), &None));
    Ok((spec, echo))
}

fn center_or_origin(center: Option<&[f64]>, d: usize) -> Result<Vec<f64>, CliError> {
    match center {
        None => Ok(vec![0.0; d]),
        Some(z) if z.len() == d => Ok(z.to_vec()),
        Some(z) => Err(CliError::input(format!("center has {} coordinates, the body lives in dimension {d}", z.len()))),
    }
}

fn grading_name(g: Grading) -> String {
    match g {
        Grading::Off => "off".into(),
        Grading::Auto => "auto".into(),
        Grading::Levels(l) => l.to_string(),
    }
}

fn config_json(cfg: &RuleConfig) -> Value {
    json!({
        "engine": format!("{:?}", cfg.engine).to_lowercase(),
        "nodes_per_axis": cfg.nodes_per_axis,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "region": format!("{:?}", cfg.region).to_lowercase(),
        "grading": grading_name(cfg.grading),
    })
}

fn config_line(cfg: &RuleConfig) -> String {
    format!(
        "engine={:?} nodes={} samples={} seed={} region={:?} grading={}",
        cfg.engine,
        cfg.nodes_per_axis,
        cfg.samples,
        cfg.seed,
        cfg.region,
        grading_name(cfg.grading)
    )
    .to_lowercase()
}

fn rule_json(rule: &SphereRule<f64>) -> Value {
    json!({ "engine": rule.engine().name(), "nodes": rule.len(), "description": rule.describe() })
}

fn integrate(body: &BodyArgs, alpha: f64, center: Option<&[f64]>, rule: &RuleArgs, out: &Option<PathBuf>) -> Result<Done, CliError> {
    let (spec, echo) = read_body(body)?;
    if let Some(done) = echo {
        return Ok(done);
    }
    let d = spec.dim();
    let z = center_or_origin(center, d)?;
    let cfg = rule.config();
    let at_origin = z.iter().all(|&x| x == 0.0);
    let r = cfg.build::<f64>(d - 1, spec.is_unconditional() && at_origin, spec.aspect_ratio())?;
    let cb = CenteredBody::new(spec.clone(), z.clone())?;
    let est = radial_power_integral(&cb, alpha, &r)?;
    let report = Report::new(
        "integrate",
        json!({ "body": BodyJson::from(&spec), "alpha": alpha, "center": z, "rule_config": config_json(&cfg) }),
        json!({
            "value": est.value,
            "error_indicator": est.error_indicator,
            "evaluations": est.evaluations,
            "rule": rule_json(&r),
        }),
    );
    Ok(Done::ok(Primary::Report(report), out))
}

fn parts_json(p: &ProductEstimate<f64>) -> Value {
    json!({
        "i_alpha": p.i.value,
        "i_error": p.i.error_indicator,
        "j_beta": p.j.value,
        "j_error": p.j.error_indicator,
        "product": p.product,
    })
}

fn product(body: &BodyArgs, alpha: f64, beta: f64, santalo: bool, rule: &RuleArgs, out: &Option<PathBuf>) -> Result<Done, CliError> {
    let (spec, echo) = read_body(body)?;
    if let Some(done) = echo {
        return Ok(done);
    }
    let d = spec.dim();
    let pair = ExponentPair::new(alpha, beta, d - 1)?;
    let cfg = rule.config();
    // The center search needs a full-sphere rule; both evaluations share it.
    let r = cfg.build::<f64>(d - 1, spec.is_unconditional() && !santalo, spec.aspect_ratio())?;
    let origin = bs_product_parts(&spec, &vec![0.0; d], &pair, &r)?;
    let mut results = json!({ "origin": parts_json(&origin), "rule": rule_json(&r) });
    if santalo {
        let s = santalo_point(&spec, &pair, &r, SantaloMode::Product, &SantaloOptions::default())?;
        let at = bs_product_parts(&spec, &s.z, &pair, &r)?;
        let mut v = parts_json(&at);
        v["z"] = json!(s.z);
        v["iterations"] = json!(s.iterations);
        v["converged"] = json!(s.converged);
        results["santalo"] = v;
    }
    let report = Report::new(
        "product",
        json!({
            "body": BodyJson::from(&spec),
            "alpha": alpha,
            "beta": beta,
            "santalo": santalo,
            "rule_config": config_json(&cfg),
        }),
        results,
    );
    Ok(Done::ok(Primary::Report(report), out))
}

/// Shortest round-trip decimal; identical inputs give identical text.
fn num(x: f64) -> String {
    format!("{x}")
}

pub fn scan_csv(scan: &ScanResult<f64>, cfg: &RuleConfig) -> String {
    let mut s = String::new();
    s.push_str(SCAN_CSV_HEADER);
    s.push('\n');
    for r in &scan.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            num(r.gamma),
            num(r.i_alpha),
            num(r.j_beta),
            num(r.product),
            num(r.gamma.log10()),
            num(r.product.log10())
        );
    }
    let _ = writeln!(s, "# family={}", scan.family);
    let _ = writeln!(s, "# alpha={} beta={} n={}", num(scan.alpha), num(scan.beta), scan.n);
    let _ = writeln!(s, "# rule {}", config_line(cfg));
    let _ = writeln!(s, "# fit_window_start_gamma={}", num(scan.gammas[scan.window_start]));
    let _ = writeln!(s, "# r_squared={}", num(scan.fit.r_squared));
    let _ = writeln!(s, "# sub_slopes={};{}", num(scan.sub_slopes.0), num(scan.sub_slopes.1));
    let _ = writeln!(s, "# fitted_slope={}", num(scan.fit.slope));
    let _ = writeln!(s, "# predicted_slope={}", scan.predicted_slope.map(num).unwrap_or_else(|| "none".into()));
    let _ = writeln!(s, "# verdict={}", scan.verdict.name());
    s
}

fn scan_json(scan: &ScanResult<f64>) -> Value {
    json!({
        "family": scan.family,
        "points": scan.rows.len(),
        "fitted_slope": scan.fit.slope,
        "intercept": scan.fit.intercept,
        "r_squared": scan.fit.r_squared,
        "sub_slopes": [scan.sub_slopes.0, scan.sub_slopes.1],
        "predicted_slope": scan.predicted_slope,
        "verdict": scan.verdict.name(),
    })
}

#[allow(clippy::too_many_arguments)]
fn scan(
    n: usize,
    alpha: f64,
    beta: f64,
    gammas: &GammaSpec,
    center_mode: CenterModeArg,
    powers: Option<&[f64]>,
    rule: &RuleArgs,
    out: &Option<PathBuf>,
) -> Result<Done, CliError> {
    let grid = gamma_grid(gammas.lo, gammas.hi, gammas.count, gammas.linear)?;
    let pair = ExponentPair::new(alpha, beta, n)?;
    let family = match powers {
        Some(p) => Family::Custom { powers: p.to_vec() },
        None => Family::RhombusAxis,
    };
    let center = match center_mode {
        CenterModeArg::Origin => CenterMode::Origin,
        CenterModeArg::Santalo => CenterMode::Santalo,
    };
    let cfg = rule.config();
    let (result, code, message) = match gamma_scan(&family, &pair, &grid, &cfg, center) {
        Ok(s) => (s, 0, None),
        Err(santalo::Error::UnresolvedAsymptotics { lower, upper, scan }) => {
            (*scan, 4, Some(format!("asymptotics unresolved: sub-window slopes {lower:.4} vs {upper:.4}")))
        }
        Err(e) => return Err(e.into()),
    };
    let csv = scan_csv(&result, &cfg);
    let report = Report::new(
        "scan-gamma",
        json!({
            "n": n,
            "alpha": alpha,
            "beta": beta,
            "gammas": { "lo": gammas.lo, "hi": gammas.hi, "count": gammas.count, "linear": gammas.linear },
            "center_mode": format!("{center_mode:?}").to_lowercase(),
            "rule_config": config_json(&cfg),
        }),
        scan_json(&result),
    );
    Ok(Done { primary: Primary::Csv(csv, report), out: out.clone(), code, message })
}

fn region(n: usize, alphas: &[f64], betas: &[f64], gamma_max: f64, rule: &RuleArgs, out: &Option<PathBuf>) -> Result<Done, CliError> {
    let cfg = rule.config();
    let rows = region_scan(n, alphas, betas, gamma_max, &cfg)?;
    let mut s = String::new();
    s.push_str(REGION_CSV_HEADER);
    s.push('\n');
    for r in &rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            num(r.alpha),
            num(r.beta),
            r.admissible,
            num(r.scanned.0),
            num(r.scanned.1),
            num(r.predicted_slope),
            r.fitted_slope.map(num).unwrap_or_default(),
            r.class.name(),
            match r.agrees {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            }
        );
    }
    let disagreements = rows.iter().filter(|r| r.agrees == Some(false)).count();
    let undecided = rows.iter().filter(|r| r.agrees.is_none()).count();
    let _ = writeln!(s, "# n={n} gamma_max={}", num(gamma_max));
    let _ = writeln!(s, "# rule {}", config_line(&cfg));
    let _ = writeln!(s, "# disagreements={disagreements} undecided={undecided}");
    let report = Report::new(
        "region",
        json!({ "n": n, "alphas": alphas, "betas": betas, "gamma_max": gamma_max, "rule_config": config_json(&cfg) }),
        json!({ "pairs": rows.len(), "disagreements": disagreements, "undecided": undecided }),
    );
    Ok(Done::ok(Primary::Csv(s, report), out))
}

fn s_integral_cmd(beta: f64, a: &[f64], nodes: usize, grading: Grading, out: &Option<PathBuf>) -> Result<Done, CliError> {
    if a.len() < 2 {
        return Err(CliError::input("--a needs at least two semi-axes"));
    }
    let n = a.len() - 1;
    let hi = a.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = a.iter().cloned().fold(f64::INFINITY, f64::min);
    let cfg = RuleConfig::gauss(nodes).with_region(RegionChoice::Octant).with_grading(grading);
    let aspect = if lo > 0.0 { hi / lo } else { 1.0 };
    let r = cfg.build::<f64>(n, true, aspect)?;
    let est = s_integral(beta, a, &r)?;
    let report = Report::new(
        "s-integral",
        json!({ "beta": beta, "a": a, "n": n, "rule_config": config_json(&cfg) }),
        json!({
            "value": est.value,
            "error_indicator": est.error_indicator,
            "evaluations": est.evaluations,
            "rule": rule_json(&r),
        }),
    );
    Ok(Done::ok(Primary::Report(report), out))
}

fn dualquermass(body: &BodyArgs, q: f64, center: Option<&[f64]>, rule: &RuleArgs, out: &Option<PathBuf>) -> Result<Done, CliError> {
    let (spec, echo) = read_body(body)?;
    if let Some(done) = echo {
        return Ok(done);
    }
    let d = spec.dim();
    let z = center_or_origin(center, d)?;
    let cfg = rule.config();
    let at_origin = z.iter().all(|&x| x == 0.0);
    let r = cfg.build::<f64>(d - 1, spec.is_unconditional() && at_origin, spec.aspect_ratio())?;
    let cb = CenteredBody::new(spec.clone(), z.clone())?;
    let value = dual_quermassintegral(&cb, q, &r)?;
    let report = Report::new(
        "dualquermass",
        json!({ "body": BodyJson::from(&spec), "q": q, "center": z, "rule_config": config_json(&cfg) }),
        json!({ "value": value, "rule": rule_json(&r) }),
    );
    Ok(Done::ok(Primary::Report(report), out))
}

fn mvee(body: &BodyArgs, eps: f64, max_iter: usize, out: &Option<PathBuf>) -> Result<Done, CliError> {
    let (spec, echo) = read_body(body)?;
    if let Some(done) = echo {
        return Ok(done);
    }
    let vertices = spec
        .vertices()
        .ok_or_else(|| CliError::input("body has no finite vertex list (ellipsoid, or polytope without vertices)"))?;
    let l = loewner_ellipsoid(&vertices, LoewnerOptions { eps, max_iter })?;
    let report = Report::new(
        "mvee",
        json!({ "body": BodyJson::from(&spec), "eps": eps, "max_iter": max_iter }),
        json!({
            "matrix": l.a.rows(),
            "achieved_eps": l.eps,
            "iterations": l.iterations,
            "inner_factor": l.inner_factor(),
            "determinant": l.a.determinant(),
            "vertex_pairs": vertices.len(),
        }),
    );
    Ok(Done::ok(Primary::Report(report), out))
}

fn bound_json(r: &BoundReport<f64>) -> Value {
    json!({
        "exponents": r.exponents,
        "integer_case": r.integer_case,
        "lattice_points": r.points.len(),
        "log_constant": r.log_constant,
        "min_residual": r.min_residual,
        "max_excess": r.max_excess,
        "passed": r.passed(),
        "axis_slopes": r.axis_slopes.iter().map(|s| json!({
            "axis": s.axis,
            "fixed": s.fixed,
            "empirical": s.empirical,
            "predicted": s.predicted,
            "excess": s.excess,
        })).collect::<Vec<_>>(),
    })
}

fn bound(n: usize, exponent: f64, form: FormArg, spec: &GammaSpec, nodes: usize, out: &Option<PathBuf>) -> Result<Done, CliError> {
    let gammas = &gamma_grid(spec.lo, spec.hi, spec.count, spec.linear)?;
    let cfg = RuleConfig::gauss(nodes);
    let r = match form {
        FormArg::Direct => verify_qest(exponent, n, gammas, &cfg)?,
        FormArg::Reciprocal => verify_pest(exponent, n, gammas, &cfg)?,
    };
    let report = Report::new(
        "bound",
        json!({
            "n": n,
            "exponent": exponent,
            "form": format!("{form:?}").to_lowercase(),
            "gammas": gammas,
            "nodes_per_axis": nodes,
        }),
        bound_json(&r),
    );
    Ok(Done::ok(Primary::Report(report), out))
}

fn verify(quick: bool, seed: Option<u64>) -> Result<Done, CliError> {
    let mut opts = SuiteOptions { quick, ..Default::default() };
    if let Some(s) = seed {
        opts.seed = s;
    }
    let mut rows: Vec<(String, String, bool, String)> =
        run_all(&opts).into_iter().map(|o| (o.module.to_string(), o.name.to_string(), o.passed, o.detail)).collect();
    rows.extend(crate::checks::cli_checks().into_iter().map(|o| ("cli".to_string(), o.name.to_string(), o.passed, o.detail)));
    let mut s = String::new();
    let _ = writeln!(s, "{:<12} {:<28} {:<6} detail", "module", "invariant", "result");
    for (m, name, passed, detail) in &rows {
        let _ = writeln!(s, "{m:<12} {name:<28} {:<6} {detail}", if *passed { "pass" } else { "FAIL" });
    }
    let passed = rows.iter().filter(|r| r.2).count();
    let _ = writeln!(s, "{passed}/{} invariants pass", rows.len());
    let first = rows.iter().find(|r| !r.2).map(|r| format!("invariant failed: {}::{}", r.0, r.1));
    Ok(Done { primary: Primary::Text(s), out: None, code: if first.is_some() { 1 } else { 0 }, message: first })
}
