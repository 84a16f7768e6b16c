//! Command-line entry point: purity checks, tree and incidence generation,
//! ledger runs, the level-lowering decision, and dimension verification.
//!
//! Every report is deterministic: identical invocations on identical files
//! produce byte-identical output. Exit codes: 0 success, 1 domain error,
//! 2 usage error.

use anyhow::{Context, Result};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use paramodular::dimensions::{
    dim_cusp_gamma0p, dim_cusp_gamma0p_new, dim_cusp_level1, ibukiyama_breakdown, ingest_csv,
    verify_table, DeltaConvention,
};
use paramodular::local_reps::catalog;
use paramodular::picard_lefschetz::{mazur_check, run_scenario, LedgerScenario, MazurInput};
use paramodular::ss_locus::{build_tree, contract_e, incidence_from_tree, VertexKind};
use paramodular::WeilDeligneRep;
use serde::Serialize;
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "paramodular", version, about = "Exact-arithmetic toolkit for paramodular threefold bookkeeping", long_about = None)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Weil-Deligne representations.
    Wd {
        #[command(subcommand)]
        command: WdCommand,
    },
    /// Biregular tree and incidence models.
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
    /// Ledger scenarios.
    Ledger {
        #[command(subcommand)]
        command: LedgerCommand,
    },
    /// The level-lowering decision procedure.
    Mazur {
        #[command(subcommand)]
        command: MazurCommand,
    },
    /// Dimension formulas and table verification.
    Dims {
        #[command(subcommand)]
        command: DimsCommand,
    },
}

#[derive(Subcommand)]
enum WdCommand {
    /// Run the weight-monodromy purity test on a representation file.
    CheckPurity { file: PathBuf },
    /// Dump the catalog of local representation types.
    Catalog,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Build a truncated biregular tree and its incidence model.
    Build {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum)]
        root_kind: RootKind,
        /// Write the tree in GraphViz format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the incidence model in GraphViz format to this path.
        #[arg(long)]
        incidence_dot: Option<PathBuf>,
        /// Write the tree as JSON to this path.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RootKind {
    First,
    Second,
}

#[derive(Subcommand)]
enum LedgerCommand {
    /// Run all ledger computations over a scenario file.
    Run {
        file: PathBuf,
        /// Restrict to the contributions of one eigensystem label before
        /// running.
        #[arg(long)]
        localize: Option<String>,
    },
}

#[derive(Subcommand)]
enum MazurCommand {
    /// Decide level lowering from the four hypotheses.
    Check {
        #[arg(long)]
        distinct_eigenvalues: u8,
        #[arg(long, action = ArgAction::Set)]
        irreducible: bool,
        #[arg(long, action = ArgAction::Set)]
        unramified_mod_ell: bool,
        #[arg(long, action = ArgAction::Set)]
        component_group_trivial: bool,
    },
}

#[derive(Subcommand)]
enum DimsCommand {
    /// Classical cusp form dimensions at level one and prime level.
    Classical {
        #[arg(long)]
        weight: i64,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Evaluate the dimension identity for definite algebraic modular forms.
    Ibukiyama {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        j: i64,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        table: PathBuf,
        /// Read the final delta term literally instead of as the
        /// constant-forms contribution at j = 3.
        #[arg(long)]
        literal_delta: bool,
    },
    /// Run every identity over every row of a table; exits nonzero on any
    /// violation.
    Verify {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        literal_delta: bool,
    },
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs_digest: String,
    results: Value,
    warnings: Vec<String>,
}

/// FNV-1a over the canonical argv and every input file read.
struct Digest(u64);

impl Digest {
    fn new() -> Self {
        Digest(0xcbf29ce484222325)
    }

    fn update(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x100000001b3);
        }
    }

    fn hex(&self) -> String {
        format!("{:016x}", self.0)
    }
}

fn read_input(path: &Path, digest: &mut Digest) -> Result<String> {
    let content =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    digest.update(content.as_bytes());
    Ok(content)
}

fn delta_convention(literal: bool) -> DeltaConvention {
    if literal {
        DeltaConvention::LiteralJZero
    } else {
        DeltaConvention::ConstantFormsAtJ3
    }
}

fn render(report: &Report, format: Format) {
    // write through a single handle and ignore pipe-closed errors, so that
    // piping into `head` does not abort the process
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(report).expect("serializable report")
        ),
        Format::Table => (|| {
            writeln!(out, "command: {}", report.command)?;
            writeln!(out, "inputs digest: {}", report.inputs_digest)?;
            let mut lines = Vec::new();
            flatten("", &report.results, &mut lines);
            for (key, value) in lines {
                writeln!(out, "{key}: {value}")?;
            }
            for warning in &report.warnings {
                writeln!(out, "warning: {warning}")?;
            }
            Ok(())
        })(),
    };
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) => {
            if items.iter().all(|v| !v.is_object() && !v.is_array()) {
                let rendered: Vec<String> = items.iter().map(render_scalar).collect();
                out.push((prefix.to_string(), format!("[{}]", rendered.join(", "))));
            } else {
                for (i, v) in items.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), v, out);
                }
            }
        }
        scalar => out.push((prefix.to_string(), render_scalar(scalar))),
    }
}

fn render_scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<(Report, bool)> {
    let mut digest = Digest::new();
    let mut warnings = Vec::new();
    let mut failed = false;

    let (command, results) = match &cli.command {
        Command::Wd { command } => match command {
            WdCommand::CheckPurity { file } => {
                digest.update(b"wd check-purity");
                let content = read_input(file, &mut digest)?;
                let rep = WeilDeligneRep::from_json(&content)?;
                let cert = rep.is_pure()?;
                (
                    "wd check-purity".to_string(),
                    json!({
                        "file": file.display().to_string(),
                        "dimension": rep.dimension(),
                        "base_weight": rep.base_weight(),
                        "n_rank": rep.n_rank(),
                        "pure": cert.pure,
                        "certificate": serde_json::to_value(&cert)?,
                    }),
                )
            }
            WdCommand::Catalog => {
                digest.update(b"wd catalog");
                (
                    "wd catalog".to_string(),
                    json!({ "catalog": serde_json::to_value(catalog())? }),
                )
            }
        },
        Command::Tree { command } => match command {
            TreeCommand::Build {
                prime,
                radius,
                root_kind,
                dot,
                incidence_dot,
                json_out,
            } => {
                let kind = match root_kind {
                    RootKind::First => VertexKind::First,
                    RootKind::Second => VertexKind::Second,
                };
                digest.update(format!("tree build {prime} {radius} {kind}").as_bytes());
                let tree = build_tree(*prime, kind, *radius)?;
                tree.check_invariants()?;
                let model = incidence_from_tree(&tree);
                model.check_interior_valencies()?;
                let singular = contract_e(&model);
                if *radius == 0 {
                    warnings.push(
                        "radius 0 truncation: the root is a boundary vertex".to_string(),
                    );
                }
                if let Some(path) = dot {
                    fs::write(path, tree.to_dot())
                        .with_context(|| format!("cannot write {}", path.display()))?;
                }
                if let Some(path) = incidence_dot {
                    fs::write(path, model.to_dot())
                        .with_context(|| format!("cannot write {}", path.display()))?;
                }
                if let Some(path) = json_out {
                    fs::write(path, tree.to_json())
                        .with_context(|| format!("cannot write {}", path.display()))?;
                }
                let (handshake_components, handshake_points) = model.handshake();
                (
                    "tree build".to_string(),
                    json!({
                        "prime": prime,
                        "radius": radius,
                        "vertex_count": tree.vertex_count(),
                        "edge_count": tree.edge_count(),
                        "components": model.components.len(),
                        "superspecial_points": model.superspecial_points.len(),
                        "sigma_size": singular.sigma_size(),
                        "handshake": {
                            "from_components": handshake_components,
                            "from_points": handshake_points,
                        },
                    }),
                )
            }
        },
        Command::Ledger { command } => match command {
            LedgerCommand::Run { file, localize } => {
                digest.update(b"ledger run");
                if let Some(id) = localize {
                    digest.update(id.as_bytes());
                }
                let content = read_input(file, &mut digest)?;
                let mut scenario = LedgerScenario::from_json(&content)?;
                if let Some(id) = localize {
                    scenario = scenario.localize(id);
                }
                let report = run_scenario(&scenario)?;
                warnings.extend(report.warnings.iter().cloned());
                (
                    "ledger run".to_string(),
                    json!({
                        "file": file.display().to_string(),
                        "localized_to": localize,
                        "total_galois_dim": report.total_galois_dim,
                        "vanishing_cycle_dim": report.vanishing_cycle_dim,
                        "alpha_rank": report.alpha_rank,
                        "weight_profile": report
                            .weight_profile
                            .iter()
                            .map(|(w, d)| (w.to_string(), json!(d)))
                            .collect::<serde_json::Map<_, _>>(),
                        "component_group": report.component_group.to_string(),
                        "component_group_ell_part": report.component_group_ell_part.to_string(),
                        "weight_monodromy_ok": report.weight_monodromy_ok,
                        "mazur": report
                            .mazur
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "not requested".to_string()),
                    }),
                )
            }
        },
        Command::Mazur { command } => match command {
            MazurCommand::Check {
                distinct_eigenvalues,
                irreducible,
                unramified_mod_ell,
                component_group_trivial,
            } => {
                digest.update(
                    format!(
                        "mazur {distinct_eigenvalues} {irreducible} \
                         {unramified_mod_ell} {component_group_trivial}"
                    )
                    .as_bytes(),
                );
                let verdict = mazur_check(MazurInput {
                    n_distinct_frobenius_eigenvalues: *distinct_eigenvalues,
                    irreducible: *irreducible,
                    unramified_mod_ell: *unramified_mod_ell,
                    component_group_trivial: *component_group_trivial,
                })?;
                (
                    "mazur check".to_string(),
                    json!({
                        "distinct_eigenvalues": distinct_eigenvalues,
                        "irreducible": irreducible,
                        "unramified_mod_ell": unramified_mod_ell,
                        "component_group_trivial": component_group_trivial,
                        "verdict": verdict.to_string(),
                    }),
                )
            }
        },
        Command::Dims { command } => match command {
            DimsCommand::Classical { weight, prime } => {
                digest.update(format!("dims classical {weight} {prime:?}").as_bytes());
                let mut results = serde_json::Map::new();
                results.insert("weight".into(), json!(weight));
                results.insert("level_one".into(), json!(dim_cusp_level1(*weight)));
                if let Some(p) = prime {
                    results.insert("prime".into(), json!(p));
                    results.insert("prime_level".into(), json!(dim_cusp_gamma0p(*weight, *p)?));
                    results.insert(
                        "prime_level_new".into(),
                        json!(dim_cusp_gamma0p_new(*weight, *p)?),
                    );
                }
                ("dims classical".to_string(), Value::Object(results))
            }
            DimsCommand::Ibukiyama {
                k,
                j,
                prime,
                table,
                literal_delta,
            } => {
                digest.update(format!("dims ibukiyama {k} {j} {prime} {literal_delta}").as_bytes());
                let content = read_input(table, &mut digest)?;
                let table_data = ingest_csv(&content)?;
                let breakdown =
                    ibukiyama_breakdown(*k, *j, *prime, &table_data, delta_convention(*literal_delta))?;
                if let Some(cokernel) = breakdown.alpha_cokernel {
                    warnings.push(format!(
                        "k = 0 with odd j: the vanishing-cycle map has a cokernel of \
                         dimension {cokernel}, already included in the delta terms"
                    ));
                }
                (
                    "dims ibukiyama".to_string(),
                    json!({
                        "k": k,
                        "j": j,
                        "prime": prime,
                        "literal_delta": literal_delta,
                        "breakdown": serde_json::to_value(&breakdown)?,
                        "dimension": breakdown.total,
                    }),
                )
            }
            DimsCommand::Verify {
                table,
                literal_delta,
            } => {
                digest.update(format!("dims verify {literal_delta}").as_bytes());
                let content = read_input(table, &mut digest)?;
                let table_data = ingest_csv(&content)?;
                let report = verify_table(&table_data, delta_convention(*literal_delta));
                failed = !report.all_ok();
                (
                    "dims verify".to_string(),
                    json!({
                        "table": table.display().to_string(),
                        "checks_run": report.checks.len(),
                        "failures": report.failures(),
                        "checks": serde_json::to_value(&report.checks)?,
                    }),
                )
            }
        },
    };

    Ok((
        Report {
            command,
            inputs_digest: digest.hex(),
            results,
            warnings,
        },
        failed,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, failed)) => {
            render(&report, cli.format);
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
