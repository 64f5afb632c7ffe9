//! Command-line front end.
//!
//! ```text
//! double-irs [--scenario PATH] [--out PATH] [--seed N] <COMMAND>
//!
//!   sweep      --k 1600 --step 100
//!   rician     --k1 800 --k2 800 --taus inf,3,1 --trials 1000
//!   crossover  --k-min 600 --k-max 1100 --step 20
//!   doubling   --k 800
//!   validate
//! ```
//!
//! Without `--scenario` the shipped scenario is used. Without `--out` results
//! go to `$DOUBLE_IRS_OUT_DIR/<command>.csv` (current directory if unset),
//! with the manifest next to it as `<command>.manifest.json`.

pub mod output;
pub mod scenario_file;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::analysis::{crossover_elements, to_db};
use crate::channel::{rank_one_margin, RicianFactor};
use crate::error::{Error, Result};
use crate::experiments::{
    run_crossover_search, run_doubling_deltas, run_rician_study, run_split_sweep, CrossoverOutcome, RicianStudy,
    ScenarioConfig,
};

pub use output::{format_db, write_outputs, Manifest};
pub use scenario_file::{load_scenario, parse_scenario, REFERENCE_SCENARIO};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "DOUBLE_IRS_OUT_DIR";
pub const DEFAULT_SEED: u64 = 7;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_EXPERIMENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "double-irs", version, about = "Double-IRS link simulations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Scenario file (defaults to the shipped scenario)
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,

    /// Output CSV path; the manifest is written alongside
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// SNR versus the number of elements on IRS 1 for a fixed total
    Sweep {
        #[arg(long, default_value_t = 1600)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        step: usize,
    },
    /// Average SNR under Rician inter-panel fading
    Rician {
        #[arg(long, default_value_t = 800)]
        k1: usize,
        #[arg(long, default_value_t = 800)]
        k2: usize,
        #[arg(long, value_delimiter = ',', default_value = "inf,3,1", value_parser = parse_tau)]
        taus: Vec<RicianFactor>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Smallest budget where two panels beat one
    Crossover {
        #[arg(long, default_value_t = 600)]
        k_min: usize,
        #[arg(long, default_value_t = 1100)]
        k_max: usize,
        #[arg(long, default_value_t = 20)]
        step: usize,
    },
    /// SNR gain from doubling the element budget
    Doubling {
        #[arg(long, default_value_t = 800)]
        k: usize,
    },
    /// Check a scenario and print derived quantities
    Validate,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sweep { .. } => "sweep",
            Command::Rician { .. } => "rician",
            Command::Crossover { .. } => "crossover",
            Command::Doubling { .. } => "doubling",
            Command::Validate => "validate",
        }
    }

    fn parameters(&self) -> serde_json::Value {
        match self {
            Command::Sweep { k, step } => json!({ "k": k, "step": step }),
            Command::Rician { k1, k2, taus, trials } => json!({
                "k1": k1,
                "k2": k2,
                "taus": taus.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "trials": trials,
            }),
            Command::Crossover { k_min, k_max, step } => json!({ "k_min": k_min, "k_max": k_max, "step": step }),
            Command::Doubling { k } => json!({ "k": k }),
            Command::Validate => json!({}),
        }
    }
}

fn parse_tau(s: &str) -> std::result::Result<RicianFactor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A fully resolved invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandSpec {
    pub command: Command,
    pub scenario_path: Option<PathBuf>,
    pub output_path: PathBuf,
    pub seed: u64,
}

impl CommandSpec {
    /// Resolves the output path, consulting `default_dir` when `--out` is absent.
    pub fn from_cli(cli: Cli, default_dir: Option<PathBuf>) -> CommandSpec {
        let output_path = cli.out.unwrap_or_else(|| {
            default_dir
                .unwrap_or_else(|| PathBuf::from("."))
                .join(format!("{}.csv", cli.command.name()))
        });
        CommandSpec {
            command: cli.command,
            scenario_path: cli.scenario,
            output_path,
            seed: cli.seed,
        }
    }

    pub fn from_env(cli: Cli) -> CommandSpec {
        let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
        CommandSpec::from_cli(cli, dir)
    }
}

/// What a successful command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub summary: String,
    pub csv_path: Option<PathBuf>,
    pub manifest_path: Option<PathBuf>,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => EXIT_IO,
        Error::Scenario(_) | Error::InvalidParameter { .. } | Error::InvalidPanel(_) => EXIT_INVALID_INPUT,
        _ => EXIT_EXPERIMENT,
    }
}

/// Loads the scenario, runs the experiment and writes CSV plus manifest.
/// Nothing is written unless the experiment succeeds.
pub fn run_command(spec: &CommandSpec) -> Result<RunReport> {
    let scenario = load_scenario(spec.scenario_path.as_deref())?;
    let name = spec.command.name();
    let (csv, summary_json, summary) = match &spec.command {
        Command::Validate => return Ok(validate_report(&scenario)),
        Command::Sweep { k, step } => {
            let res = run_split_sweep(&scenario, *k, *step, spec.seed)?;
            let best = res.best_row().ok_or_else(|| {
                Error::InvalidParameter {
                    name: "step",
                    reason: format!("no split below k = {k}"),
                }
            })?;
            let text = format!(
                "{} splits; best k1 = {} ({} dB exact, {} dB closed form); one IRS: {} dB",
                res.rows.len(),
                best.k1,
                format_db(best.snr_exact_db),
                format_db(best.snr_closed_form_db),
                format_db(best.snr_single_irs_db)
            );
            let j = json!({ "best_k1": best.k1, "rows": res.rows.len() });
            (output::sweep_csv(&res), j, text)
        }
        Command::Rician { k1, k2, taus, trials } => {
            let study = RicianStudy::new(*k1, *k2, taus.clone(), *trials, spec.seed);
            let res = run_rician_study(&scenario, &study)?;
            let lines: Vec<String> = res
                .iter()
                .map(|r| {
                    format!(
                        "tau={:<4} {:<6} mean {} dB (se {})",
                        r.tau.to_string(),
                        r.case,
                        format_db(r.mean_snr_db),
                        format_db(r.std_err_db)
                    )
                })
                .collect();
            (output::rician_csv(&res), json!({ "rows": res.len() }), lines.join("\n"))
        }
        Command::Crossover { k_min, k_max, step } => {
            let res = run_crossover_search(&scenario, *k_min, *k_max, *step)?;
            let d_t = scenario.link_distances()?.d_t;
            let predicted = crossover_elements(scenario.prop.ref_gain(), d_t)?;
            let (text, j) = match res.outcome {
                CrossoverOutcome::Bracketed { k_star, k_below, k_above } => (
                    format!("K* = {k_star:.1} (between {k_below} and {k_above}); closed form {predicted:.1}"),
                    json!({ "status": "bracketed", "k_star": k_star, "k_below": k_below, "k_above": k_above, "closed_form_k_star": predicted }),
                ),
                CrossoverOutcome::AtLowerBound { k } => (
                    format!("two IRSs already win at the range start k = {k} (boundary); closed form {predicted:.1}"),
                    json!({ "status": "lower_bound", "k_star": k, "closed_form_k_star": predicted }),
                ),
                CrossoverOutcome::NotFound => (
                    format!("no crossover in {k_min}..={k_max}; closed form {predicted:.1}"),
                    json!({ "status": "not_found", "closed_form_k_star": predicted }),
                ),
            };
            (output::crossover_csv(&res), j, text)
        }
        Command::Doubling { k } => {
            let res = run_doubling_deltas(&scenario, *k, spec.seed)?;
            let text = format!(
                "K {} -> {}: one IRS +{} dB (closed form {}), two IRSs +{} dB (closed form {})",
                k,
                2 * k,
                format_db(res.delta_single_db),
                format_db(res.closed_delta_single_db),
                format_db(res.delta_double_db),
                format_db(res.closed_delta_double_db)
            );
            let j = json!({ "delta_single_db": res.delta_single_db, "delta_double_db": res.delta_double_db });
            (output::doubling_csv(&res), j, text)
        }
    };
    let manifest = Manifest::new(
        name,
        spec.seed,
        spec.command.parameters(),
        &scenario,
        &spec.output_path,
        summary_json,
    );
    let manifest_path = write_outputs(&csv, &manifest, &spec.output_path)?;
    Ok(RunReport {
        summary,
        csv_path: Some(spec.output_path.clone()),
        manifest_path: Some(manifest_path),
    })
}

fn validate_report(s: &ScenarioConfig) -> RunReport {
    let mut lines = vec![format!("scenario digest {}", s.digest())];
    match s.link_distances() {
        Ok(d) => {
            lines.push(format!("d_t = {:.5} m, d_S = {:.5} m, d_r = {:.5} m", d.d_t, d.d_s, d.d_r));
            lines.push(format!(
                "rank_one_margin {:.1} (IRS 2 with {} elements)",
                rank_one_margin(&s.irs2, d.d_s, &s.prop),
                s.irs2.len()
            ));
            if let Ok(k) = crossover_elements(s.prop.ref_gain(), d.d_t) {
                lines.push(format!("closed-form crossover K* = {k:.1}"));
            }
        }
        Err(e) => lines.push(format!("distances: {e}")),
    }
    lines.push(format!(
        "wavelength {} m, alpha {} dB, P {} dBm, noise {} dBm",
        s.prop.wavelength(),
        format_db(to_db(s.prop.ref_gain())),
        s.tx_power_dbm,
        s.noise_power_dbm
    ));
    RunReport {
        summary: lines.join("\n"),
        csv_path: None,
        manifest_path: None,
    }
}

/// Parses `args`, runs, prints and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
        }
    };
    let spec = CommandSpec::from_env(cli);
    match run_command(&spec) {
        Ok(report) => {
            println!("{}", report.summary);
            if let Some(p) = &report.csv_path {
                println!("wrote {}", display(p));
            }
            if let Some(p) = &report.manifest_path {
                println!("wrote {}", display(p));
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("double-irs").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_rician_taus() {
        let cli = parse(&["rician", "--taus", "inf,3,1", "--trials", "10"]);
        match cli.command {
            Command::Rician { taus, trials, .. } => {
                assert_eq!(trials, 10);
                assert!(taus[0].is_los());
                assert_eq!(taus[1].value(), 3.0);
                assert_eq!(taus[2].value(), 1.0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(Cli::try_parse_from(["double-irs", "rician", "--taus", "-1"]).is_err());
    }

    #[test]
    fn global_flags_after_subcommand() {
        let cli = parse(&["sweep", "--k", "800", "--seed", "3", "--out", "x.csv"]);
        assert_eq!(cli.seed, 3);
        assert_eq!(cli.out, Some(PathBuf::from("x.csv")));
        assert_eq!(cli.command, Command::Sweep { k: 800, step: 100 });
    }

    #[test]
    fn default_output_path_uses_directory() {
        let spec = CommandSpec::from_cli(parse(&["doubling"]), Some(PathBuf::from("/tmp/runs")));
        assert_eq!(spec.output_path, PathBuf::from("/tmp/runs/doubling.csv"));
        let spec = CommandSpec::from_cli(parse(&["doubling", "--out", "a/b.csv"]), Some(PathBuf::from("/x")));
        assert_eq!(spec.output_path, PathBuf::from("a/b.csv"));
        assert_eq!(spec.seed, DEFAULT_SEED);
    }

    #[test]
    fn validate_prints_margin() {
        let spec = CommandSpec::from_cli(parse(&["validate"]), None);
        let report = run_command(&spec).unwrap();
        assert!(report.summary.contains("rank_one_margin 235.7"), "{}", report.summary);
        assert!(report.summary.contains("-46.4212"), "{}", report.summary);
        assert!(report.csv_path.is_none());
    }

    #[test]
    fn exit_codes_are_distinct() {
        let io = Error::Io(std::io::Error::other("x"));
        let bad = Error::Scenario("x".into());
        let exp = Error::SingularDistance;
        let codes = [exit_code(&io), exit_code(&bad), exit_code(&exp)];
        assert_eq!(codes, [EXIT_IO, EXIT_INVALID_INPUT, EXIT_EXPERIMENT]);
        assert!(codes.iter().all(|&c| c != EXIT_OK));
    }
}
