//! Argument model and subcommand dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ncho_analytic::{default_period_points, mahler_reference, mahler_u, period_poly, r1s_closed_form, MahlerFamily, McConfig};
use ncho_apery::{jtilde, Parity, SpectralParams};
use ncho_congruence::{congruence_sweep, conjecture_report, is_odd_prime, DEFAULT_SIZE_CAP};
use ncho_numcore::Precision;
use ncho_specint::{zeta_q, QuadConfig};

use crate::error::CliError;
use crate::output::{Emitter, Format};
use crate::suite::{self, Status, SuiteConfig};

#[derive(Debug, Parser)]
#[command(name = "ncho", version, about = "Apery-like numbers, congruences, q-series and spectral zeta values")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Working precision in bits for big-float evaluation.
    #[arg(long, global = true, default_value_t = 256)]
    pub precision: usize,
    /// Seed for every randomized routine.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Proved even-index congruence.
    Weak,
    /// Odd-index analogue.
    Odd,
    /// Normalized conjectural congruence, both parities.
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Tensor,
    Mc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tables of normalized Apery-like numbers.
    Apery {
        /// Single index k; all of 1..=8 when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Prime-power congruence sweeps.
    Congruence {
        #[arg(long, value_enum, default_value_t = Theorem::Weak)]
        theorem: Theorem,
        #[arg(long, default_value_t = 47)]
        p_max: u64,
        /// Restrict to one prime.
        #[arg(long)]
        p: Option<u64>,
        /// Largest m for the conjecture sweep.
        #[arg(long, default_value_t = 2)]
        m: u64,
        #[arg(long, default_value_t = 3)]
        s_max: usize,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
    },
    /// Exact q-series identities and Hecke checks.
    Qcheck {
        #[arg(long, default_value_t = 40)]
        order: u32,
    },
    /// Period polynomial of the differential Eisenstein series.
    Period {
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Special value of the spectral zeta function.
    Zeta {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        /// Use alpha = beta with this kappa instead of --alpha/--beta.
        #[arg(long)]
        kappa: Option<f64>,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Gauss-Legendre nodes (tensor) or strata (mc) per axis.
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, default_value_t = 16)]
        replicates: usize,
    },
    /// Monte Carlo torus average against its hypergeometric value.
    Mahler {
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long, default_value_t = 0.1)]
        lambda: f64,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        #[arg(long, default_value_t = 16)]
        replicates: usize,
    },
    /// Full acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = 40)]
        order: u32,
        /// Run only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

/// Runs the parsed command; `Ok(false)` means some check failed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    if let Some(n) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let prec = Precision::new(cli.global.precision)?;
    let mut out = Emitter::new(cli.global.format, cli.global.out.as_deref())?;
    let ok = match &cli.command {
        Command::Apery { k, n_max } => apery(&mut out, *k, *n_max)?,
        Command::Congruence {
            theorem,
            p_max,
            p,
            m,
            s_max,
            n_max,
        } => {
            let primes: Vec<u64> = match p {
                Some(p) => vec![*p],
                None => (3..=*p_max).filter(|&q| is_odd_prime(q)).collect(),
            };
            congruence(&mut out, *theorem, &primes, *m, *s_max, *n_max)?
        }
        Command::Qcheck { order } => {
            let cfg = SuiteConfig {
                order: *order,
                precision: prec,
                seed: cli.global.seed,
            };
            let mut ok = true;
            for id in [6, 7] {
                let result = suite::run_criterion(id, &cfg).expect("known criterion");
                for check in &result.checks {
                    ok &= check.pass;
                    out.record(check)?;
                }
            }
            ok
        }
        Command::Period { k } => period(&mut out, *k, prec)?,
        Command::Zeta {
            k,
            alpha,
            beta,
            kappa,
            method,
            nodes,
            replicates,
        } => {
            let params = match (alpha, beta, kappa) {
                (Some(a), Some(b), None) => SpectralParams::new(*a, *b)?,
                (None, None, Some(kappa)) => SpectralParams::from_kappa(*kappa)?,
                _ => return Err(CliError::Usage("give either --alpha and --beta, or --kappa".into())),
            };
            let mut cfg = QuadConfig::for_dimension(*k);
            match method {
                Some(Method::Tensor) => cfg = QuadConfig::tensor(nodes.unwrap_or(64)),
                Some(Method::Mc) => cfg = QuadConfig::stratified(nodes.unwrap_or(cfg.points.max(8)), *replicates, 0),
                None => {
                    if let Some(n) = nodes {
                        cfg.points = *n;
                    }
                }
            }
            cfg.seed = cli.global.seed;
            let z = zeta_q(*k, &params, &cfg)?;
            out.record(&json!({
                "k": k,
                "alpha": params.alpha(),
                "beta": params.beta(),
                "value": z.value,
                "error": z.error,
                "method": z.method,
                "seed": z.seed,
            }))?;
            true
        }
        Command::Mahler {
            l,
            lambda,
            samples,
            replicates,
        } => {
            let family = MahlerFamily::try_from(*l)?;
            let cfg = McConfig {
                samples: *samples,
                seed: cli.global.seed,
                replicates: *replicates,
            };
            let est = mahler_u(family, *lambda, cfg)?;
            let reference = mahler_reference(family, *lambda, prec)?;
            let ok = est.within_three_sigma(reference);
            out.record(&json!({
                "l": l,
                "lambda": lambda,
                "mean": est.mean,
                "stderr": est.stderr,
                "reference": reference,
                "within_three_sigma": ok,
            }))?;
            ok
        }
        Command::VerifyAll { order, criteria } => {
            let cfg = SuiteConfig {
                order: *order,
                precision: prec,
                seed: cli.global.seed,
            };
            verify_all(&mut out, &cfg, criteria)?
        }
    };
    out.flush()?;
    Ok(ok)
}

fn apery(out: &mut Emitter, k: Option<usize>, n_max: usize) -> Result<bool, CliError> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=8).collect(),
    };
    for (i, k) in ks.iter().enumerate() {
        let table = jtilde(*k, n_max)?;
        if out.format() == Format::Csv {
            let csv = table.to_csv();
            let body = if i == 0 { csv.as_str() } else { csv.split_once('\n').map_or("", |x| x.1) };
            out.raw(body)?;
        } else {
            out.record(&table)?;
        }
    }
    Ok(true)
}

fn congruence(
    out: &mut Emitter,
    theorem: Theorem,
    primes: &[u64],
    m_max: u64,
    s_max: usize,
    n_max: u32,
) -> Result<bool, CliError> {
    match theorem {
        Theorem::Weak | Theorem::Odd => {
            let parity = if theorem == Theorem::Weak { Parity::Even } else { Parity::Odd };
            let report = congruence_sweep(primes, s_max, n_max, parity, DEFAULT_SIZE_CAP)?;
            for failure in &report.failures {
                out.record(failure)?;
            }
            out.record(&json!({
                "theorem": theorem_name(theorem),
                "checked": report.checked,
                "failures": report.failures.len(),
                "skipped_over_cap": report.skipped.len(),
                "pass": report.all_hold(),
            }))?;
            Ok(report.all_hold())
        }
        Theorem::Conjecture => {
            let mut ok = true;
            for parity in [Parity::Even, Parity::Odd] {
                for &p in primes {
                    for m in 1..=m_max {
                        for s in 1..=s_max {
                            let report = conjecture_report(p, m, s, n_max, parity)?;
                            ok &= report.all_pass();
                            out.record(&report)?;
                        }
                    }
                }
            }
            Ok(ok)
        }
    }
}

fn theorem_name(t: Theorem) -> &'static str {
    match t {
        Theorem::Weak => "weak",
        Theorem::Odd => "odd",
        Theorem::Conjecture => "conjecture",
    }
}

fn period(out: &mut Emitter, k: u32, prec: Precision) -> Result<bool, CliError> {
    let poly = period_poly(k, &default_period_points(k, prec))?;
    let coeffs: Vec<[f64; 2]> = poly.coeffs.iter().map(|c| [c.re_f64(), c.im_f64()]).collect();
    let relative = (k == 1).then(|| poly.relative_errors(&r1s_closed_form(prec)));
    let ok = poly.heldout_residual <= 1e-6 && relative.as_ref().map_or(true, |r| r.iter().all(|e| *e <= 1e-6));
    out.record(&json!({
        "k": k,
        "coefficients": coeffs,
        "heldout_residual": poly.heldout_residual,
        "condition": poly.condition,
        "relative_errors_vs_closed_form": relative,
        "pass": ok,
    }))?;
    Ok(ok)
}

fn verify_all(out: &mut Emitter, cfg: &SuiteConfig, criteria: &[u8]) -> Result<bool, CliError> {
    let ids = if criteria.is_empty() { suite::criterion_ids() } else { criteria.to_vec() };
    let mut table = Vec::new();
    let mut ok = true;
    for id in ids {
        let result = suite::run_criterion(id, cfg).ok_or_else(|| CliError::Usage(format!("unknown criterion {id}")))?;
        ok &= result.status != Status::Fail;
        if out.format() == Format::Text {
            out.raw(&result.summary_line())?;
        } else {
            out.record(&result)?;
        }
        table.push(json!({ "id": result.id, "name": result.name, "status": result.status }));
    }
    if out.format() != Format::Text {
        out.record(&json!({ "summary": table, "pass": ok }))?;
    }
    Ok(ok)
}
