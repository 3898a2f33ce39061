use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use nimgen_core::catalog::{run_catalog, verification_set, FamilyKind};
use nimgen_core::engine::{analyze, DotExport};
use nimgen_core::oracle::oracle_cap_from_env;
use nimgen_core::{build, game_nim, predict_nim, verify_group, Family, FamilyParams, GameKind, GroupSpec};

/// Nim-numbers of the avoidance (dng) and achievement (gen) games on finite groups.
#[derive(Parser, Debug)]
#[command(name = "nimgen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the nim-number of a game, e.g. `nim --game dng --group Z6xZ3`.
    Nim {
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        group: GroupSpec,
    },
    /// Print the structure diagram in DOT.
    Diagram {
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        group: GroupSpec,
        /// Merge type-equivalent classes and drop loops.
        #[arg(long)]
        simplified: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the engine against exhaustive search.
    Verify {
        /// Every constructible group up to this order.
        #[arg(long, conflicts_with = "group")]
        max_order: Option<usize>,
        /// A single group instead of a sweep.
        #[arg(long)]
        group: Option<GroupSpec>,
        /// Restrict to one game; both by default.
        #[arg(long)]
        game: Option<GameKind>,
    },
    /// Sweep group families and write a CSV table.
    Catalog {
        /// Comma-separated: cyclic, dihedral, abelian, symmetric, alternating, mixed.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<FamilyKind>,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Closed-form value for a family, e.g. `predict --game gen --family abelian:3,9`.
    Predict {
        #[arg(long)]
        game: GameKind,
        #[arg(long)]
        family: Family,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    let mut stdout = std::io::stdout().lock();
    match command {
        Command::Nim { game, group } => {
            let g = build(&group).with_context(|| format!("building {group}"))?;
            let v = game_nim(Arc::new(g), game)?;
            writeln!(stdout, "{v}")?;
        }
        Command::Diagram { game, group, simplified, format: Format::Dot, out } => {
            let g = build(&group).with_context(|| format!("building {group}"))?;
            let digraph = analyze(Arc::new(g), game)?;
            let name = format!("{game}({group})");
            let dot =
                if simplified { digraph.simplify().to_dot(&name) } else { digraph.to_dot(&name) };
            match out {
                Some(path) => std::fs::write(&path, dot)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => stdout.write_all(dot.as_bytes())?,
            }
        }
        Command::Verify { max_order, group, game } => {
            let cap = oracle_cap_from_env()?;
            let games = match game {
                Some(g) => vec![g],
                None => vec![GameKind::Avoid, GameKind::Achieve],
            };
            let specs: Vec<GroupSpec> = match (group, max_order) {
                (Some(g), _) => vec![g],
                (None, Some(k)) => verification_set(k).into_iter().map(|e| e.spec).collect(),
                (None, None) => bail!("verify needs --max-order or --group"),
            };
            let mut failed = 0;
            for spec in specs {
                let g = Arc::new(build(&spec)?);
                if g.order() > cap {
                    writeln!(stdout, "{spec}: skipped, order {} above oracle cap {cap}", g.order())?;
                    continue;
                }
                for &kind in &games {
                    if g.order() == 1 && kind == GameKind::Avoid {
                        continue;
                    }
                    let report = verify_group(g.clone(), kind, cap)?;
                    let verdict = if report.passed() { "ok" } else { "MISMATCH" };
                    writeln!(stdout, "{spec}: {report} {verdict}")?;
                    failed += usize::from(!report.passed());
                }
            }
            if failed > 0 {
                writeln!(stdout, "{failed} mismatching runs")?;
                return Ok(ExitCode::from(2));
            }
        }
        Command::Catalog { families, max_order, out } => {
            let summary = run_catalog(max_order, &families, &out)?;
            writeln!(
                stdout,
                "{} rows, {} mismatches, {} errors -> {}",
                summary.rows.len(),
                summary.mismatches.len(),
                summary.errors,
                out.display()
            )?;
            for r in &summary.mismatches {
                let nim = match &r.nim {
                    Ok(v) => format!("*{v}"),
                    Err(e) => format!("error: {e}"),
                };
                let predicted = r.predicted.map(|p| p.to_string()).unwrap_or_else(|| "none".into());
                writeln!(stdout, "mismatch: {} {} engine={nim} predicted={predicted}", r.game, r.group_spec)?;
            }
            for (spec, v) in &summary.spectrum.dng_outside {
                writeln!(stdout, "finding: DNG({spec}) = *{v} outside {{0,1,3}}")?;
            }
            for (spec, v) in &summary.spectrum.gen_outside {
                writeln!(stdout, "finding: GEN({spec}) = *{v} outside {{0,1,2,3,4}}")?;
            }
            if !summary.mismatches.is_empty() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Predict { game, family } => {
            let p = predict_nim(&FamilyParams::new(family, game))?;
            writeln!(stdout, "{p}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
