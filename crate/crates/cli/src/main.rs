//! Command-line front end: regime classification, simulation, persistence
//! estimation, and the AR3 cone exponent, with reproducible seeds and
//! CSV/JSON artifacts for offline plotting.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use arpersist::arproc;
use arpersist::cone;
use arpersist::persist::{
    self, arithmetic_checkpoints, geometric_checkpoints, power_spaced_checkpoints, Method,
    PersistenceEstimate, SplittingConfig,
};
use arpersist::polyalg::{
    find_roots, from_zero_set, spectral_summary, ZeroEntry, ZeroEntryJson,
    MODULUS_TOL_EXACT, MODULUS_TOL_FOUND,
};
use arpersist::regime::{classify, decay_model, DecayModel};
use arpersist::{Error, GeneratingPolynomial, Regime, ZeroSet};

#[derive(Parser)]
#[command(name = "arpersist", version, about = "Persistence of auto-regressive processes")]
struct Cli {
    /// Master seed; every stream the run uses is derived from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the parallel Monte Carlo loops.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Append the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the decay regime from the generating polynomial.
    Classify(PolyArgs),
    /// Simulate one path of the recurrence (CSV n,value).
    Simulate {
        #[command(flatten)]
        poly: PolyArgs,
        /// Path length.
        #[arg(long)]
        n: usize,
    },
    /// Impulse response h_0..h_N (CSV n,value).
    Impulse {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        n: usize,
    },
    /// Estimate p_N over a grid of horizons and fit the regime's decay law.
    Persist {
        #[command(flatten)]
        poly: PolyArgs,
        /// Comma-separated horizons, strictly increasing.
        #[arg(long = "N-grid", value_name = "N1,N2,...")]
        n_grid: String,
        /// naive | splitting | oracle
        #[arg(long, default_value = "naive")]
        method: String,
        /// Paths per horizon (naive).
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Particles per splitting stage.
        #[arg(long, default_value_t = 2_000)]
        particles: usize,
        /// Independent splitting replicates.
        #[arg(long, default_value_t = 8)]
        replicates: usize,
    },
    /// Refit a decay law to a previously written estimate CSV.
    Fit {
        /// CSV file produced by `persist`.
        #[arg(long)]
        input: PathBuf,
        /// exponential | stretched | power-law
        #[arg(long)]
        model: String,
    },
    /// AR3 persistence power via the spherical eigenvalue problem.
    ConeExponent {
        /// Rotation angle: decimal radians, `pi/q`, or `p*pi/q`.
        #[arg(long)]
        theta: String,
        /// Grid resolution `polar,azimuth`.
        #[arg(long, default_value = "128,256")]
        resolution: String,
    },
    /// Compare beta at a rational angle against irrational perturbations.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Comma-separated offsets, e.g. `1e-2*sqrt2,-1e-3*sqrt2`.
        #[arg(long, allow_hyphen_values = true)]
        offsets: String,
        #[arg(long, default_value = "96,192")]
        resolution: String,
    },
}

/// Polynomial input: recurrence coefficients or zeros, never both.
#[derive(Args)]
#[command(group(ArgGroup::new("poly").required(true).args(["coeffs", "zeros"])))]
struct PolyArgs {
    /// Recurrence coefficients `a1,...,aL`.
    #[arg(long, value_name = "a1,...,aL", allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Zeros as `re[+imi][:mult]`, comma-separated; conjugates are
    /// completed automatically.
    #[arg(long, value_name = "Z1,Z2,...", allow_hyphen_values = true)]
    zeros: Option<String>,
    /// Clustering tolerance for repeated roots.
    #[arg(long, default_value_t = 1e-6)]
    cluster_tol: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config_hash = hash_args();
    if let Some(t) = cli.threads {
        // A second build_global in-process is harmless; ignore it.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli, config_hash) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidPolynomial(_) | Error::Precondition(_) | Error::NotConjugateClosed { .. } => 2,
        _ => 3,
    }
}

/// FNV-1a over the raw argument vector: identical configs hash identically,
/// and the hash is embedded in every artifact.
fn hash_args() -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for arg in std::env::args() {
        for b in arg.bytes().chain([0u8]) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

fn run(cli: &Cli, config_hash: u64) -> arpersist::Result<()> {
    match &cli.command {
        Command::Classify(poly) => cmd_classify(cli, poly, config_hash),
        Command::Simulate { poly, n } => {
            let p = poly.polynomial()?;
            let path = arproc::simulate(&p, *n, cli.seed);
            let mut csv = csv_header(config_hash, cli.seed);
            csv.push_str("n,value\n");
            for (i, x) in path.xs.iter().enumerate() {
                let _ = writeln!(csv, "{i},{x}");
            }
            emit(cli, &csv)?;
            if path.saturated {
                eprintln!("warning: path saturated; magnitudes clamped, signs valid");
            }
            println!("simulate: {} values, seed {}", path.xs.len(), cli.seed);
            Ok(())
        }
        Command::Impulse { poly, n } => {
            let p = poly.polynomial()?;
            let h = arproc::impulse_response(&p, *n);
            let mut csv = csv_header(config_hash, cli.seed);
            csv.push_str("n,value\n");
            for (i, v) in h.h.iter().enumerate() {
                let _ = writeln!(csv, "{i},{v}");
            }
            emit(cli, &csv)?;
            println!("impulse: h_0..h_{n}");
            Ok(())
        }
        Command::Persist {
            poly,
            n_grid,
            method,
            samples,
            particles,
            replicates,
        } => cmd_persist(
            cli,
            poly,
            n_grid,
            method,
            *samples,
            *particles,
            *replicates,
            config_hash,
        ),
        Command::Fit { input, model } => {
            let model = parse_model(model)?;
            let estimates = read_estimates_csv(input)?;
            let fit = persist::fit_exponent(&estimates, model)?;
            let report = FitReport {
                config_hash: hex(config_hash),
                seed: cli.seed,
                fit,
            };
            emit(cli, &to_json(&report))?;
            Ok(())
        }
        Command::ConeExponent { theta, resolution } => {
            let th = parse_angle(theta)?;
            let (np, na) = parse_resolution(resolution)?;
            let eig = cone::exponent_ar3(th, np, na)?;
            let report = ConeReport {
                config_hash: hex(config_hash),
                seed: cli.seed,
                theta: th,
                rationality: cone::classify_rationality(th, cone::RATIONALITY_DENOM_CAP),
                eigen: eig,
            };
            emit(cli, &to_json(&report))?;
            Ok(())
        }
        Command::Sweep {
            theta,
            offsets,
            resolution,
        } => {
            let th = parse_angle(theta)?;
            let offs: arpersist::Result<Vec<f64>> =
                offsets.split(',').map(parse_angle).collect();
            let (np, na) = parse_resolution(resolution)?;
            let sweep = cone::discontinuity_sweep(th, &offs?, np, na)?;
            let mut csv = csv_header(config_hash, cli.seed);
            csv.push_str("theta,beta,lambda,gap\n");
            let _ = writeln!(
                csv,
                "{},{},{},0",
                sweep.base.theta, sweep.base.beta, sweep.base.lambda
            );
            for r in &sweep.perturbed {
                let _ = writeln!(
                    csv,
                    "{},{},{},{}",
                    r.theta,
                    r.beta,
                    r.lambda,
                    r.beta - sweep.base.beta
                );
            }
            emit(cli, &csv)?;
            println!(
                "sweep: base beta = {:.6}, min gap = {:.6} over {} offsets",
                sweep.base.beta,
                sweep.min_gap,
                sweep.perturbed.len()
            );
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ClassifyReport {
    config_hash: String,
    seed: u64,
    regime: Regime,
    decay_model: DecayModel,
    zeros: Vec<ZeroEntryJson>,
}

#[derive(Serialize)]
struct FitReport {
    config_hash: String,
    seed: u64,
    fit: persist::ExponentFit,
}

#[derive(Serialize)]
struct ConeReport {
    config_hash: String,
    seed: u64,
    theta: f64,
    rationality: cone::Rationality,
    eigen: cone::EigenResult,
}

fn cmd_classify(cli: &Cli, poly: &PolyArgs, config_hash: u64) -> arpersist::Result<()> {
    let (zeros, modulus_tol) = poly.zero_set()?;
    let summary = spectral_summary(&zeros, modulus_tol);
    let regime = classify(&summary);
    let report = ClassifyReport {
        config_hash: hex(config_hash),
        seed: cli.seed,
        decay_model: decay_model(&regime),
        regime,
        zeros: zeros.to_json_entries(),
    };
    emit(cli, &to_json(&report))?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_persist(
    cli: &Cli,
    poly: &PolyArgs,
    n_grid: &str,
    method: &str,
    samples: u64,
    particles: usize,
    replicates: usize,
    config_hash: u64,
) -> arpersist::Result<()> {
    let p = poly.polynomial()?;
    let ns = parse_usize_list(n_grid)?;
    if !ns.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Precondition("--N-grid must be strictly increasing".into()));
    }
    let (zeros, modulus_tol) = poly.zero_set()?;
    let regime = classify(&spectral_summary(&zeros, modulus_tol));
    let model = decay_model(&regime);

    let estimates = match method {
        "naive" => persist::naive_persistence_grid(&p, &ns, samples, cli.seed)?,
        "oracle" => ns
            .iter()
            .map(|&n| persist::orthant_oracle(&p, n))
            .collect::<arpersist::Result<Vec<_>>>()?,
        "splitting" => {
            let n_max = *ns.last().unwrap();
            let checkpoints = match (model, &regime.class) {
                (DecayModel::Exponential, _) => arithmetic_checkpoints(n_max, 4),
                (DecayModel::Stretched, arpersist::RegimeClass::StretchedExponential { alpha }) => {
                    power_spaced_checkpoints(n_max, *alpha)
                }
                _ => geometric_checkpoints(n_max),
            };
            let config = SplittingConfig {
                checkpoints,
                particles,
                replicates,
            };
            persist::splitting_persistence_grid(&p, &ns, &config, cli.seed)?
        }
        other => {
            return Err(Error::Precondition(format!(
                "unknown method {other:?}; expected naive, splitting, or oracle"
            )))
        }
    };

    let mut csv = csv_header(config_hash, cli.seed);
    csv.push_str(PersistenceEstimate::CSV_HEADER);
    csv.push('\n');
    for e in &estimates {
        csv.push_str(&e.to_csv_row());
        csv.push('\n');
        if e.extinct {
            eprintln!("warning: horizon {} went extinct; raise --particles", e.n);
        }
    }
    emit(cli, &csv)?;

    // The fit summary always goes to stdout; the CSV is the artifact.
    match model {
        DecayModel::BoundedBelow => {
            println!("regime is bounded below; no decay fit (check the plateau directly)");
        }
        _ => match persist::fit_exponent(&estimates, model) {
            Ok(fit) => println!("{}", to_json(&FitReport {
                config_hash: hex(config_hash),
                seed: cli.seed,
                fit,
            })),
            Err(e) => eprintln!("warning: fit skipped: {e}"),
        },
    }
    Ok(())
}

impl PolyArgs {
    fn polynomial(&self) -> arpersist::Result<GeneratingPolynomial> {
        match (&self.coeffs, &self.zeros) {
            (Some(c), None) => GeneratingPolynomial::new(parse_f64_list(c)?),
            (None, Some(z)) => {
                let entries = parse_zero_list(z)?;
                from_zero_set(&ZeroSet::new(entries, self.cluster_tol)?)
            }
            _ => unreachable!("clap enforces exactly one of --coeffs/--zeros"),
        }
    }

    /// Zero set plus the modulus tolerance matching its provenance (exact
    /// input vs numeric root finding).
    fn zero_set(&self) -> arpersist::Result<(ZeroSet, f64)> {
        match (&self.coeffs, &self.zeros) {
            (Some(c), None) => {
                let poly = GeneratingPolynomial::new(parse_f64_list(c)?)?;
                Ok((find_roots(&poly, self.cluster_tol)?, MODULUS_TOL_FOUND))
            }
            (None, Some(z)) => {
                let entries = parse_zero_list(z)?;
                Ok((ZeroSet::new(entries, self.cluster_tol)?, MODULUS_TOL_EXACT))
            }
            _ => unreachable!("clap enforces exactly one of --coeffs/--zeros"),
        }
    }
}

fn parse_f64_list(s: &str) -> arpersist::Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Precondition(format!("bad number {t:?}")))
        })
        .collect()
}

fn parse_usize_list(s: &str) -> arpersist::Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Precondition(format!("bad horizon {t:?}")))
        })
        .collect()
}

/// One zero: `re`, `re+imi`, or `imi`, optionally `:mult`.
fn parse_zero(s: &str) -> arpersist::Result<ZeroEntry> {
    let bad = || Error::Precondition(format!("bad zero {s:?}; expected re[+imi][:mult]"));
    let (num, mult) = match s.split_once(':') {
        Some((n, m)) => (n.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
        None => (s.trim(), 1),
    };
    let (re, im) = if let Some(body) = num.strip_suffix('i') {
        // Split at the sign introducing the imaginary part: the last +/-
        // that is not leading and not an exponent sign.
        let split = body
            .char_indices()
            .rev()
            .find(|&(k, c)| {
                (c == '+' || c == '-')
                    && k > 0
                    && !matches!(body.as_bytes()[k - 1], b'e' | b'E')
            })
            .map(|(k, _)| k);
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().map_err(|_| bad())?;
                let im = match &body[k..] {
                    "+" => 1.0,
                    "-" => -1.0,
                    t => t.parse().map_err(|_| bad())?,
                };
                (re, im)
            }
            None => (0.0, body.parse().map_err(|_| bad())?),
        }
    } else {
        (num.parse().map_err(|_| bad())?, 0.0)
    };
    if mult == 0 {
        return Err(bad());
    }
    Ok(ZeroEntry {
        root: num_complex::Complex64::new(re, im),
        mult,
    })
}

fn parse_zero_list(s: &str) -> arpersist::Result<Vec<ZeroEntry>> {
    s.split(',').map(parse_zero).collect()
}

/// Angle grammar: `pi`, `pi/q`, `p*pi/q`, decimal radians, or
/// `c*sqrt2` (for irrational offsets); a leading `-` negates.
fn parse_angle(s: &str) -> arpersist::Result<f64> {
    let s = s.trim();
    let bad = || Error::Precondition(format!("bad angle {s:?}"));
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s),
    };
    let value = if let Some(k) = body.find("pi") {
        let p = match &body[..k] {
            "" => 1.0,
            pre => pre
                .strip_suffix('*')
                .unwrap_or(pre)
                .parse::<f64>()
                .map_err(|_| bad())?,
        };
        let q = match &body[k + 2..] {
            "" => 1.0,
            rest => {
                let d = rest.strip_prefix('/').ok_or_else(bad)?;
                let q: f64 = d.parse().map_err(|_| bad())?;
                if q == 0.0 {
                    return Err(bad());
                }
                q
            }
        };
        p * std::f64::consts::PI / q
    } else if let Some(pre) = body.strip_suffix("*sqrt2") {
        pre.parse::<f64>().map_err(|_| bad())? * std::f64::consts::SQRT_2
    } else if body == "sqrt2" {
        std::f64::consts::SQRT_2
    } else {
        body.parse::<f64>().map_err(|_| bad())?
    };
    Ok(sign * value)
}

fn parse_resolution(s: &str) -> arpersist::Result<(usize, usize)> {
    let v = parse_usize_list(s)?;
    if v.len() != 2 || v[0] < 8 || v[1] < 16 {
        return Err(Error::Precondition(
            "--resolution must be `polar,azimuth` with polar >= 8, azimuth >= 16".into(),
        ));
    }
    Ok((v[0], v[1]))
}

fn parse_model(s: &str) -> arpersist::Result<DecayModel> {
    match s {
        "bounded-below" => Ok(DecayModel::BoundedBelow),
        "exponential" => Ok(DecayModel::Exponential),
        "stretched" => Ok(DecayModel::Stretched),
        "power-law" => Ok(DecayModel::PowerLaw),
        _ => Err(Error::Precondition(format!(
            "unknown model {s:?}; expected exponential, stretched, or power-law"
        ))),
    }
}

fn read_estimates_csv(path: &PathBuf) -> arpersist::Result<Vec<PersistenceEstimate>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("n,") {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 6 {
            return Err(Error::Precondition(format!("bad CSV row {line:?}")));
        }
        let bad = |field: &str| Error::Precondition(format!("bad {field} in row {line:?}"));
        let p_hat: f64 = f[1].parse().map_err(|_| bad("p_hat"))?;
        let method = match f[4] {
            "naive" => Method::Naive,
            "splitting" => Method::Splitting,
            "oracle" => Method::Oracle,
            _ => return Err(bad("method")),
        };
        out.push(PersistenceEstimate {
            n: f[0].parse().map_err(|_| bad("n"))?,
            p_hat,
            log_p_hat: f[2].parse().map_err(|_| bad("log_p_hat"))?,
            stderr_log: f[3].parse().unwrap_or(f64::INFINITY),
            method,
            budget: 0,
            seed: f[5].parse().map_err(|_| bad("seed"))?,
            extinct: p_hat <= 0.0,
        });
    }
    if out.is_empty() {
        return Err(Error::Precondition("no estimate rows in input".into()));
    }
    Ok(out)
}

fn hex(h: u64) -> String {
    format!("{h:016x}")
}

fn csv_header(config_hash: u64, seed: u64) -> String {
    format!("# config_hash={} seed={seed}\n", hex(config_hash))
}

fn to_json<T: Serialize>(v: &T) -> String {
    // Struct field order is the declaration order, which is stable.
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

/// Appends to `--out` when given, otherwise prints to stdout.
fn emit(cli: &Cli, text: &str) -> arpersist::Result<()> {
    match &cli.out {
        Some(path) => {
            let mut f = std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Precondition(format!("cannot open {}: {e}", path.display())))?;
            f.write_all(text.as_bytes())
                .map_err(|e| Error::Numeric(format!("write failed: {e}")))?;
            Ok(())
        }
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}
