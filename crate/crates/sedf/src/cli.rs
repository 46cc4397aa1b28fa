//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 search
//! budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use sedf_core::search::Outcome;
use sedf_core::sieve::{admissible_lambda, EnumerateOptions, Status};
use sedf_core::{Group, SearchTask, SetFamily, Verification};

use crate::instance::{self, derived_lambda, InstanceFile};
use crate::{parallel, report, verdict};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sedf",
    version,
    about = "Verify, analyze, sieve and search strong external difference families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an instance file against the defining equations.
    Verify {
        path: PathBuf,
        /// λ to check against (default: declared in the file, else derived).
        #[arg(long)]
        lambda: Option<u64>,
    },
    /// Per-character analysis of an instance file, as JSON lines.
    Chars {
        path: PathBuf,
        #[arg(long)]
        lambda: Option<u64>,
    },
    /// Classify every admissible (v, m, k, λ) with v ≤ V_MAX.
    Sieve {
        v_max: u64,
        #[arg(long)]
        open_only: bool,
        #[arg(long, default_value_t = 1)]
        k_min: u64,
        #[arg(long, default_value_t = 2)]
        m_min: u64,
        /// One JSON object per line instead of CSV.
        #[arg(long)]
        json: bool,
        #[arg(long, env = "SEDF_THREADS")]
        threads: Option<usize>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Exhaustive search in a group such as Z5 or Z3xZ3.
    Search {
        group: String,
        #[arg(short)]
        m: u64,
        #[arg(short)]
        k: u64,
        #[arg(long)]
        lambda: Option<u64>,
        /// Stop after this many solutions (0 = all).
        #[arg(long, default_value_t = 0)]
        limit: usize,
        /// Maximum number of search nodes.
        #[arg(long, env = "SEDF_NODE_BUDGET")]
        budget: Option<u64>,
        /// Write one instance file per solution here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit the external-difference table of each solution.
        #[arg(long)]
        certificate: bool,
        #[arg(long, env = "SEDF_THREADS")]
        threads: Option<usize>,
        /// Disable the λ-count prune.
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        no_timing: bool,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Verify { path, lambda } => cmd_verify(&path, lambda, out),
        Command::Chars { path, lambda } => cmd_chars(&path, lambda, out),
        Command::Sieve {
            v_max,
            open_only,
            k_min,
            m_min,
            json,
            threads,
            no_timing,
        } => {
            let options = EnumerateOptions {
                status: open_only.then_some(Status::Open),
                k_min,
                m_min,
            };
            cmd_sieve(v_max, options, json, threads, no_timing, out, err)
        }
        Command::Search {
            group,
            m,
            k,
            lambda,
            limit,
            budget,
            out: dir,
            certificate,
            threads,
            no_prune,
            no_timing,
        } => {
            let opts = SearchOptions {
                lambda,
                limit,
                budget,
                dir,
                certificate,
                threads,
                prune: !no_prune,
                timing: !no_timing,
            };
            cmd_search(&group, m, k, &opts, out, err)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn coords(e: &sedf_core::Element) -> String {
    let parts: Vec<String> = e.0.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn cmd_verify(path: &Path, lambda: Option<u64>, out: &mut dyn Write) -> anyhow::Result<u8> {
    let inst = instance::load(path)?;
    let fam = &inst.family;
    let (v, m, k) = (fam.group().order(), fam.m(), fam.k());
    let Some(lambda) = lambda.or_else(|| inst.lambda()) else {
        writeln!(out, "INVALID: no positive integer lambda satisfies k^2(m-1) = lambda(v-1) for (v,m,k) = ({v},{m},{k})")?;
        return Ok(EXIT_INVALID);
    };
    if lambda == 0 || lambda > i64::MAX as u64 {
        return Err(anyhow!("lambda must be a positive integer"));
    }
    match sedf_core::algebra::verify_sedf(fam, lambda as i64)? {
        Verification::Valid => {
            writeln!(out, "VALID ({v},{m},{k},{lambda})-SEDF")?;
            Ok(EXIT_OK)
        }
        Verification::ParameterMismatch { lhs, rhs } => {
            writeln!(out, "INVALID: k^2(m-1) = {lhs} but lambda(v-1) = {rhs}")?;
            Ok(EXIT_INVALID)
        }
        Verification::Invalid {
            set,
            element,
            expected,
            found,
        } => {
            writeln!(
                out,
                "INVALID: first failure at j = {}, g = {}: coefficient {found} in the external sum of D_{}, expected {expected}",
                set + 1,
                coords(&element),
                set + 1
            )?;
            Ok(EXIT_INVALID)
        }
    }
}

pub fn cmd_chars(path: &Path, lambda: Option<u64>, out: &mut dyn Write) -> anyhow::Result<u8> {
    let inst = instance::load(path)?;
    let fam = &inst.family;
    let mut annotations = Vec::new();
    let lambda = match lambda.or_else(|| inst.lambda()) {
        Some(l) => l,
        None => {
            let k = fam.k() as f64;
            let approx = (k * k * (fam.m() as f64 - 1.0) / (fam.group().order() as f64 - 1.0))
                .round()
                .max(1.0) as u64;
            annotations.push(format!(
                "no integral lambda for these parameters; using lambda = {approx}"
            ));
            approx
        }
    };
    out.write_all(report::render(fam, lambda, annotations)?.as_bytes())?;
    Ok(EXIT_OK)
}

fn timing(err: &mut dyn Write, enabled: bool, start: Instant) {
    if enabled {
        let _ = writeln!(err, "# elapsed {:.3} s", start.elapsed().as_secs_f64());
    }
}

pub fn cmd_sieve(
    v_max: u64,
    options: EnumerateOptions,
    json: bool,
    threads: Option<usize>,
    no_timing: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<u8> {
    let start = Instant::now();
    let pool = parallel::thread_pool(threads)?;
    if json {
        parallel::sieve(&pool, v_max, options, |v| {
            writeln!(out, "{}", verdict::json_line(v))
        })??;
    } else {
        let mut w = verdict::csv_writer(&mut *out);
        verdict::write_csv_header(&mut w)?;
        parallel::sieve(&pool, v_max, options, |v| verdict::write_csv_row(&mut w, v))??;
        w.flush()?;
    }
    timing(err, !no_timing, start);
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub lambda: Option<u64>,
    pub limit: usize,
    pub budget: Option<u64>,
    pub dir: Option<PathBuf>,
    pub certificate: bool,
    pub threads: Option<usize>,
    pub prune: bool,
    pub timing: bool,
}

/// External-difference table: for each set, the coefficient of every element
/// in `D_j𝒟^{-1} − D_jD_j^{-1}`, listed as `[coordinates, count]`.
#[derive(Debug, serde::Serialize)]
pub struct Certificate {
    pub group: Vec<u64>,
    pub lambda: u64,
    pub external_differences: Vec<Vec<(Vec<u64>, i64)>>,
}

pub fn certificate(family: &SetFamily, lambda: u64) -> sedf_core::Result<Certificate> {
    let g = family.group();
    let external_differences = (0..family.m())
        .map(|j| {
            let sum = family.external_sum(j)?;
            g.elements()
                .zip(sum.coeffs())
                .map(|(e, &c)| Ok((e.0, c)))
                .collect::<sedf_core::Result<Vec<_>>>()
        })
        .collect::<sedf_core::Result<Vec<_>>>()?;
    Ok(Certificate {
        group: g.factors().to_vec(),
        lambda,
        external_differences,
    })
}

pub fn cmd_search(
    group: &str,
    m: u64,
    k: u64,
    opts: &SearchOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<u8> {
    let start = Instant::now();
    let group: Group = group
        .parse()
        .with_context(|| format!("malformed group spec {group:?}"))?;
    let v = group.order();
    let lambda = match opts.lambda {
        Some(l) => l,
        None => admissible_lambda(v, m, k)?.ok_or_else(|| {
            anyhow!("({v},{m},{k}) is inadmissible: no integer lambda with k^2(m-1) = lambda(v-1)")
        })?,
    };
    let mut task = SearchTask::new(&group, m, k, lambda)?
        .with_limit(opts.limit)
        .with_budget(opts.budget);
    if !opts.prune {
        task = task.without_pruning();
    }
    let pool = parallel::thread_pool(opts.threads)?;
    let result = pool.install(|| parallel::search(&task));

    if let Some(dir) = &opts.dir {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    for (i, fam) in result.solutions.iter().enumerate() {
        debug_assert_eq!(derived_lambda(fam), Some(lambda));
        let text = InstanceFile::from_family(fam, Some(lambda)).to_json();
        let cert = if opts.certificate {
            Some(serde_json::to_string(&certificate(fam, lambda)?)?)
        } else {
            None
        };
        match &opts.dir {
            Some(dir) => {
                let base = dir.join(format!("solution-{:04}", i + 1));
                fs::write(base.with_extension("json"), format!("{text}\n"))?;
                if let Some(c) = cert {
                    fs::write(base.with_extension("cert.json"), format!("{c}\n"))?;
                }
            }
            None => {
                writeln!(out, "{text}")?;
                if let Some(c) = cert {
                    writeln!(out, "{c}")?;
                }
            }
        }
    }
    let outcome = match result.outcome {
        Outcome::Completed => "completed",
        Outcome::LimitReached => "limit-reached",
        Outcome::BudgetExhausted => "budget-exhausted",
    };
    writeln!(out, "group: {group}")?;
    writeln!(out, "parameters: ({v},{m},{k},{lambda})")?;
    writeln!(out, "solutions: {}", result.solutions.len())?;
    writeln!(out, "nodes: {}", result.nodes_visited)?;
    writeln!(out, "exhausted: {}", result.exhausted)?;
    writeln!(out, "outcome: {outcome}")?;
    timing(err, opts.timing, start);
    Ok(if result.outcome == Outcome::BudgetExhausted {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}
