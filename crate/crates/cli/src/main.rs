//! Command-line surface: limit computations, diagram utilities, posets and
//! the oracle verification suites.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orbit_limits::verify::{self, Scope};
use orbit_limits_core::diagram::{
    inverse_sigma, parse_rational, sigma_lambda, EllipticSpectrum, Rat, SignedYoungDiagram,
};
use orbit_limits_core::limits::{
    l_map_limit, limit_elliptic_supq, minimal_limit, HyperbolicSpectrum, LimitSet, MinimalParams,
    MinimalType, OrbitComponent,
};
use orbit_limits_core::partition::{ClassicalType, Family, Partition};
use orbit_limits_core::poset::OrbitPoset;

#[derive(Parser)]
#[command(
    name = "orbit-limits",
    version,
    about = "Limits of scaled adjoint orbits for classical real groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the limit of scaled orbits for a given group.
    Limit {
        #[command(subcommand)]
        target: LimitTarget,
    },
    /// Richardson partition of a hyperbolic spectrum.
    Richardson {
        /// Comma-separated rational eigenvalues with zero sum, e.g. `1,0,-1`.
        #[arg(long, allow_hyphen_values = true)]
        spectrum: String,
    },
    /// Signed diagram attached to an elliptic spectrum.
    Sigma {
        /// Comma-separated rationals, nonincreasing after sorting.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mu: String,
    },
    /// Spectrum whose diagram is the given one.
    #[command(name = "sigma-inverse")]
    SigmaInverse {
        /// Diagram as JSON, e.g. `{"rows":[{"len":2,"sign":"+"}]}`.
        #[arg(long)]
        diagram: String,
    },
    /// Minimal-orbit table lookup.
    Minimal {
        #[arg(long = "type", value_enum)]
        ty: MinimalTypeArg,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Dominance poset of admissible orbit labels.
    Poset {
        /// Rank parameter (matrix size n for type A, so(2n+1)/sp(2n)/so(2n)
        /// otherwise).
        #[arg(long)]
        n: usize,
        #[arg(long = "type", value_enum, default_value_t = FamilyArg::A)]
        ty: FamilyArg,
        /// Annotate each node with its limit-map image (type A only).
        #[arg(long)]
        annotate: bool,
    },
    /// Run a seeded oracle verification suite.
    Verify {
        #[arg(value_enum)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Overrides ORBIT_LIMITS_SEED and the default seed 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Rank cutoff for the oracle.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Pin the signature (supq scope only).
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
}

#[derive(Subcommand)]
enum LimitTarget {
    /// Hyperbolic limit map on an SL(n,R) orbit label.
    Sl {
        /// Orbit label as a comma-separated partition, e.g. `8,7,6,4,4,3,2,1`.
        #[arg(long)]
        partition: String,
    },
    /// Elliptic limit in su(p,q).
    Supq {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mu: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MinimalTypeArg {
    #[value(name = "AIII", alias = "aiii")]
    Aiii,
    #[value(name = "BI", alias = "bi")]
    Bi,
    #[value(name = "CI", alias = "ci")]
    Ci,
    #[value(name = "DI", alias = "di")]
    Di,
    #[value(name = "DIII", alias = "diii")]
    Diii,
}

impl From<MinimalTypeArg> for MinimalType {
    fn from(t: MinimalTypeArg) -> Self {
        match t {
            MinimalTypeArg::Aiii => MinimalType::AIII,
            MinimalTypeArg::Bi => MinimalType::BI,
            MinimalTypeArg::Ci => MinimalType::CI,
            MinimalTypeArg::Di => MinimalType::DI,
            MinimalTypeArg::Diii => MinimalType::DIII,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Sl,
    Supq,
    Minimal,
    Curves,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Sl => Scope::Sl,
            ScopeArg::Supq => Scope::Supq,
            ScopeArg::Minimal => Scope::Minimal,
            ScopeArg::Curves => Scope::Curves,
        }
    }
}

struct DomainError(String);

impl<E: std::fmt::Display> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

fn parse_rational_list(s: &str) -> Result<Vec<Rat>, DomainError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| parse_rational(tok).map_err(|e| DomainError(format!("`{tok}`: {e}"))))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, DomainError> {
    let parts = s
        .trim()
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| DomainError(format!("`{tok}` is not a positive integer part")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

fn render_limit_set(limit: &LimitSet, format: Format) -> Result<String, DomainError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(limit)?),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "group: {}", limit.group).unwrap();
            let provenance = serde_json::to_value(limit.provenance)?;
            writeln!(out, "construction: {}", provenance.as_str().unwrap_or("?")).unwrap();
            for (i, component) in limit.components.iter().enumerate() {
                match component {
                    OrbitComponent::Partition(c) => {
                        let realforms = serde_json::to_value(c.realforms)?;
                        write!(
                            out,
                            "component {}: partition {} [{}",
                            i + 1,
                            c.partition,
                            realforms.as_str().unwrap_or("?")
                        )
                        .unwrap();
                        if let Some(count) = c.count {
                            write!(out, ", {count} real form(s)").unwrap();
                        }
                        writeln!(out, "]").unwrap();
                    }
                    OrbitComponent::Diagram(c) => {
                        let (p, q) = c.diagram.signature();
                        writeln!(out, "component {}: signed diagram, signature ({p},{q})", i + 1)
                            .unwrap();
                        writeln!(out, "{}", c.diagram).unwrap();
                    }
                }
            }
            Ok(out.trim_end().to_string())
        }
        Format::Dot => Err(DomainError(
            "dot format is only available for the poset command".to_string(),
        )),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), DomainError> {
    let format = cli.format;
    let payload = match &cli.command {
        Command::Limit { target } => match target {
            LimitTarget::Sl { partition } => {
                let label = parse_partition(partition)?;
                render_limit_set(&l_map_limit(&label), format)?
            }
            LimitTarget::Supq { lambda, mu } => {
                let spec =
                    EllipticSpectrum::new(parse_rational_list(lambda)?, parse_rational_list(mu)?)?;
                render_limit_set(&limit_elliptic_supq(&spec)?, format)?
            }
        },
        Command::Richardson { spectrum } => {
            let h = HyperbolicSpectrum::new(parse_rational_list(spectrum)?)?;
            let partition = orbit_limits_core::limits::richardson_partition(&h);
            match format {
                Format::Json => serde_json::to_string(&partition)?,
                Format::Text => partition.to_string(),
                Format::Dot => {
                    return Err(DomainError(
                        "dot format is only available for the poset command".to_string(),
                    ))
                }
            }
        }
        Command::Sigma { lambda, mu } => {
            let spec =
                EllipticSpectrum::new(parse_rational_list(lambda)?, parse_rational_list(mu)?)?;
            let sigma = sigma_lambda(&spec);
            match format {
                Format::Json => serde_json::to_string_pretty(&sigma)?,
                Format::Text => format!("{sigma}\n{}", serde_json::to_string(&sigma)?),
                Format::Dot => {
                    return Err(DomainError(
                        "dot format is only available for the poset command".to_string(),
                    ))
                }
            }
        }
        Command::SigmaInverse { diagram } => {
            let sigma: SignedYoungDiagram = serde_json::from_str(diagram)
                .map_err(|e| DomainError(format!("diagram JSON: {e}")))?;
            let spec = inverse_sigma(&sigma);
            match format {
                Format::Json => serde_json::to_string_pretty(&spec)?,
                Format::Text => {
                    let join = |v: &[Rat]| {
                        v.iter()
                            .map(|r| r.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    format!("lambda: {}\nmu: {}", join(spec.lambda()), join(spec.mu()))
                }
                Format::Dot => {
                    return Err(DomainError(
                        "dot format is only available for the poset command".to_string(),
                    ))
                }
            }
        }
        Command::Minimal { ty, p, q, n } => {
            let params = match (p, q, n) {
                (Some(p), Some(q), None) => MinimalParams::Signature { p: *p, q: *q },
                (None, None, Some(n)) => MinimalParams::Rank { n: *n },
                _ => {
                    return Err(DomainError(
                        "give either --p and --q, or --n".to_string(),
                    ))
                }
            };
            render_limit_set(&minimal_limit((*ty).into(), params)?, format)?
        }
        Command::Poset { n, ty, annotate } => {
            let classical = ClassicalType::new((*ty).into(), *n);
            let mut poset = OrbitPoset::build(classical);
            if *annotate {
                poset.annotate_l()?;
            }
            match format {
                Format::Dot => poset.export_dot(),
                Format::Json => serde_json::to_string_pretty(&poset)?,
                Format::Text => {
                    let mut out = String::new();
                    writeln!(
                        out,
                        "poset {} with {} nodes, {} covering edges",
                        classical,
                        poset.nodes().len(),
                        poset.edges().len()
                    )
                    .unwrap();
                    for (i, node) in poset.nodes().iter().enumerate() {
                        match poset.annotation(i) {
                            Some(image) => writeln!(out, "  {node}  L={image}").unwrap(),
                            None => writeln!(out, "  {node}").unwrap(),
                        }
                    }
                    for (lower, upper) in poset.edges() {
                        writeln!(
                            out,
                            "  {} < {}",
                            poset.nodes()[*lower],
                            poset.nodes()[*upper]
                        )
                        .unwrap();
                    }
                    out.trim_end().to_string()
                }
            }
        }
        Command::Verify {
            scope,
            trials,
            seed,
            tol,
            p,
            q,
        } => {
            let signature = match (scope, p, q) {
                (_, None, None) => None,
                (ScopeArg::Supq, Some(p), Some(q)) if *p >= 1 && *q >= 1 => Some((*p, *q)),
                (ScopeArg::Supq, _, _) => {
                    return Err(DomainError(
                        "--p and --q must both be given and positive".to_string(),
                    ))
                }
                _ => {
                    return Err(DomainError(
                        "--p/--q only apply to the supq scope".to_string(),
                    ))
                }
            };
            let seed = resolve_seed(*seed)?;
            let report = verify::run((*scope).into(), *trials, seed, *tol, signature);
            let rendered = match format {
                Format::Json => serde_json::to_string_pretty(&report)?,
                Format::Text => report.render_text(),
                Format::Dot => {
                    return Err(DomainError(
                        "dot format is only available for the poset command".to_string(),
                    ))
                }
            };
            return Ok((rendered, report.passed));
        }
    };
    Ok((payload, true))
}

/// Seed precedence: explicit flag, then ORBIT_LIMITS_SEED, then 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, DomainError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("ORBIT_LIMITS_SEED") {
        Ok(value) => value
            .trim()
            .parse::<u64>()
            .map_err(|_| DomainError(format!("ORBIT_LIMITS_SEED=`{value}` is not a u64"))),
        Err(_) => Ok(0),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((payload, passed)) => {
            println!("{payload}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(DomainError(message)) => {
            if cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::json!({ "error": message })
                );
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::FAILURE
        }
    }
}
