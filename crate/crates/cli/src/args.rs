use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use santalo::quadrature::{EngineChoice, Grading, RegionChoice};
use santalo::RuleConfig;

#[derive(Debug, Parser)]
#[command(name = "santalo", version, about = "Radial and polar power integrals, product functionals and growth scans for symmetric convex bodies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Gauss,
    Mc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Auto,
    Octant,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CenterModeArg {
    Origin,
    Santalo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Direct,
    Reciprocal,
}

#[derive(Debug, Clone, Args)]
pub struct RuleArgs {
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: EngineArg,
    /// Gauss nodes per axis (per panel when graded).
    #[arg(long, default_value_t = 48)]
    pub nodes: usize,
    /// Monte Carlo sample count.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "auto")]
    pub region: RegionArg,
    /// Geometric panel grading near the octant edges: auto, off, or a level count.
    #[arg(long, default_value = "auto", value_parser = parse_grading)]
    pub grading: Grading,
}

impl RuleArgs {
    pub fn config(&self) -> RuleConfig {
        RuleConfig {
            engine: match self.engine {
                EngineArg::Auto => EngineChoice::Auto,
                EngineArg::Gauss => EngineChoice::Gauss,
                EngineArg::Mc => EngineChoice::MonteCarlo,
            },
            nodes_per_axis: self.nodes,
            samples: self.samples,
            seed: self.seed,
            region: match self.region {
                RegionArg::Auto => RegionChoice::Auto,
                RegionArg::Octant => RegionChoice::Octant,
                RegionArg::Full => RegionChoice::Full,
            },
            grading: self.grading,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BodyArgs {
    /// Body description (JSON).
    #[arg(long, value_name = "FILE")]
    pub body: PathBuf,
    /// Print the parsed body in canonical JSON and exit.
    #[arg(long)]
    pub echo_body: bool,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Write the primary output here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

/// `lo:hi:count[:lin]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSpec {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub linear: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Radial power integral of a body about a center.
    Integrate {
        #[command(flatten)]
        body: BodyArgs,
        #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
        alpha: f64,
        /// Center as x,y,...; the origin by default.
        #[arg(long, value_delimiter = ',', value_parser = parse_real, allow_hyphen_values = true)]
        center: Option<Vec<f64>>,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Product functional at the origin, and optionally at the optimal center.
    Product {
        #[command(flatten)]
        body: BodyArgs,
        #[arg(long, value_parser = parse_real)]
        alpha: f64,
        #[arg(long, value_parser = parse_real)]
        beta: f64,
        /// Also minimize the product over interior centers.
        #[arg(long)]
        santalo: bool,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Product along the eccentric rhombus family; writes CSV.
    ScanGamma {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_real)]
        alpha: f64,
        #[arg(long, value_parser = parse_real)]
        beta: f64,
        #[arg(long, default_value = "10:1e4:8", value_parser = parse_gammas)]
        gammas: GammaSpec,
        #[arg(long, value_enum, default_value = "origin")]
        center_mode: CenterModeArg,
        /// Ratio powers c_i with a_i/a_{i+1} = gamma^{c_i}; the axis family by default.
        #[arg(long, value_delimiter = ',', value_parser = parse_real)]
        powers: Option<Vec<f64>>,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Admissibility against fitted growth over an (alpha, beta) grid; writes CSV.
    Region {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_real, required = true)]
        alphas: Vec<f64>,
        #[arg(long, value_delimiter = ',', value_parser = parse_real, required = true)]
        betas: Vec<f64>,
        #[arg(long, default_value_t = 1e5)]
        gamma_max: f64,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// The octant model integral S(beta, a).
    SIntegral {
        #[arg(long, value_parser = parse_real)]
        beta: f64,
        #[arg(long, value_delimiter = ',', value_parser = parse_real, required = true)]
        a: Vec<f64>,
        #[arg(long, default_value_t = 48)]
        nodes: usize,
        #[arg(long, default_value = "auto", value_parser = parse_grading)]
        grading: Grading,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Dual quermassintegral of index q.
    Dualquermass {
        #[command(flatten)]
        body: BodyArgs,
        #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
        q: f64,
        #[arg(long, value_delimiter = ',', value_parser = parse_real, allow_hyphen_values = true)]
        center: Option<Vec<f64>>,
        #[command(flatten)]
        rule: RuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Minimum-volume enclosing ellipsoid of the body's vertices.
    Mvee {
        #[command(flatten)]
        body: BodyArgs,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Exponent check of the monomial bound for S on a ratio lattice.
    Bound {
        #[arg(long)]
        n: usize,
        /// beta for the direct form, alpha for the reciprocal form.
        #[arg(long, value_parser = parse_real)]
        exponent: f64,
        #[arg(long, value_enum, default_value = "direct")]
        form: FormArg,
        /// Ratio values gamma_i used on every axis, as lo:hi:count[:lin].
        #[arg(long, default_value = "1.4142135623730951:1000:6", value_parser = parse_gammas)]
        gammas: GammaSpec,
        #[arg(long, default_value_t = 12)]
        nodes: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the full invariant suite.
    Verify {
        /// Reduced body and node counts.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// A finite real, written as a decimal or as `p/q`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
            if q == 0.0 {
                return Err(format!("`{s}` divides by zero"));
            }
            p / q
        }
        None => s.parse().map_err(|_| format!("`{s}` is not a number"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

pub fn parse_gammas(s: &str) -> Result<GammaSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let linear = match parts.len() {
        3 => false,
        4 if parts[3] == "lin" => true,
        4 if parts[3] == "log" => false,
        _ => return Err(format!("`{s}` is not lo:hi:count[:lin]")),
    };
    let lo = parse_real(parts[0])?;
    let hi = parse_real(parts[1])?;
    let count: usize = parts[2].parse().map_err(|_| format!("`{}` is not a point count", parts[2]))?;
    Ok(GammaSpec { lo, hi, count, linear })
}

pub fn parse_grading(s: &str) -> Result<Grading, String> {
    match s {
        "auto" => Ok(Grading::Auto),
        "off" | "0" => Ok(Grading::Off),
        _ => s.parse::<usize>().map(Grading::Levels).map_err(|_| format!("`{s}` is not auto, off or a level count")),
    }
}
