#![allow(clippy::neg_cmp_op_on_partial_ord)]
mod args;
mod commands;
mod output;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use dirrelay::NetworkParams;

use args::{Cli, Command};
use output::RunManifest;

const EXIT_ROW_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(failures) => {
            eprintln!("{failures} row(s) failed; see the status column");
            ExitCode::from(EXIT_ROW_FAILURES)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Runs a command and returns the number of failed rows.
fn run(command: Command) -> Result<usize, String> {
    if let Command::Rerun(rerun) = &command {
        let manifest = RunManifest::read(&rerun.manifest).map_err(|e| format!("cannot read manifest {}: {e}", rerun.manifest.display()))?;
        let mut invocation = manifest.invocation;
        if let Some(common) = invocation.common_mut() {
            if let Some(dir) = &rerun.out_dir {
                common.out_dir = dir.clone();
            }
        }
        return execute(invocation, Some((manifest.params, manifest.overrides)));
    }
    execute(command, None)
}

fn execute(command: Command, replay: Option<(NetworkParams, Vec<(String, String)>)>) -> Result<usize, String> {
    let common = command.common().ok_or("rerun manifests cannot nest")?.clone();
    let (params, overrides) = match replay {
        Some(snapshot) => snapshot,
        None => {
            let resolved = common.resolve()?;
            (resolved.params, resolved.overrides)
        }
    };
    let started = chrono::Utc::now().to_rfc3339();
    let outcome = match &command {
        Command::Fig2(a) => commands::fig2(a, &params),
        Command::Fig34(a) => commands::fig34(a, &params),
        Command::Fig5(a) => commands::fig5(a, &params),
        Command::Sweep(a) => commands::sweep(a, &params),
        Command::Optimize(a) => commands::optimize(a, &params),
        Command::Simulate(a) => commands::simulate(a, &params),
        Command::Rerun(_) => unreachable!("handled by run"),
    }?;

    let dir = common.out_dir.as_path();
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let mut outputs = Vec::new();
    let mut failures = 0;
    for table in &outcome.tables {
        failures += table.failures();
        outputs.push(table.write(dir).map_err(|e| write_error(dir, e))?);
    }
    for (name, contents) in &outcome.extra {
        let path = dir.join(name);
        fs::write(&path, contents).map_err(|e| write_error(dir, e))?;
        outputs.push(path);
    }
    for note in &outcome.notes {
        eprintln!("{note}");
    }
    let manifest = RunManifest {
        schema_version: output::SCHEMA_VERSION,
        command: command.name().to_string(),
        params,
        overrides,
        seed: common.seed,
        started,
        finished: chrono::Utc::now().to_rfc3339(),
        outputs: outputs.clone(),
        row_failures: failures,
        notes: outcome.notes,
        invocation: command,
    };
    let manifest_path = manifest.write(dir).map_err(|e| write_error(dir, e))?;
    for path in outputs.iter().chain(std::iter::once(&manifest_path)) {
        println!("{}", path.display());
    }
    Ok(failures)
}

fn write_error(dir: &Path, e: std::io::Error) -> String {
    format!("cannot write to {}: {e}", dir.display())
}
