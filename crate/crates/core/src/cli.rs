//! Command-line front end: enumeration, per-object statistics, distribution
//! polynomials, and the verification harness.
//!
//! Exit codes: 0 success / all checks pass, 1 a verification task failed,
//! 2 usage or parse error. All stdout output is deterministic for fixed
//! flags, regardless of `--jobs`; timings go to stderr.

use crate::digraphs::{ld_enumerator, perm_cycle_poly, perm_linear_poly, LaguerreDigraph};
use crate::error::{Error, Result};
use crate::jacobi_rogers::{generic, mu_table, ortho_seq, preset, JRParams};
use crate::permstats::{
    distribution, enumerate_words, full_stats, LaguerreWord, QWeight, StatRecord, WordFilter,
};
use crate::polyring::Poly;
use crate::verify::{run_all, run_task, VerifyReport, TASKS};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Parser, Debug)]
#[command(
    name = "mahonian",
    version,
    about = "Exact statistics, bijections, and continued fractions for partial permutations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the enumeration sweeps (results do not depend on it).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Accepted for interface stability; everything here is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Word,
    Digraph,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stream S_n^k as words (or Laguerre digraphs) in deterministic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "as", value_enum, default_value_t = ObjectKind::Word)]
        object: ObjectKind,
    },
    /// Every statistic of one word or digraph.
    Stats {
        /// Space-separated letters, `*` for the hole, e.g. "3 2 5 * 1 8 6 *".
        #[arg(long, conflicts_with = "digraph")]
        word: Option<String>,
        /// Digraph JSON, e.g. {"n":2,"succ":{"1":2}}.
        #[arg(long)]
        digraph: Option<String>,
    },
    /// Print a distribution or enumerator polynomial.
    Poly {
        #[command(subcommand)]
        which: PolyCommand,
    },
    /// Run identity-verification tasks (exit 0 pass, 1 fail).
    Verify {
        /// Task id, e.g. thm2.1; see --all for the full sweep.
        id: Option<String>,
        /// Run every task at its default bound (capped by --n-max).
        #[arg(long)]
        all: bool,
        /// Ground-set bound; default per task.
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolyCommand {
    /// Σ b^rlmin q^stat over S_n^k, optionally restricted.
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// maj | inv | tilde-inv-filled | rlmin
        #[arg(long, default_value = "maj")]
        weight: String,
        /// Restrict to words with holes exactly at these positions, e.g. 2,4.
        #[arg(long, conflicts_with = "image")]
        holes: Option<String>,
        /// Restrict to words with this image set, e.g. 1,2,3.
        #[arg(long)]
        image: Option<String>,
    },
    /// Laguerre digraph enumerator u1^{pk-k} u2^val u3^da u4^dd a^fp b^cyc.
    Ld {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Cycle-statistics polynomial over S_n.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Linear-statistics polynomial over S_n with 0-0 boundary.
    Linear {
        #[arg(long)]
        n: usize,
    },
    /// Generalized Jacobi-Rogers table of a preset (or `generic`).
    Mu {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        order: usize,
    },
    /// Monic orthogonal polynomial sequence of a preset (or `generic`).
    Ortho {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        order: usize,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // A failure here means a pool already exists, which is fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Enumerate { n, k, object } => cmd_enumerate(*n, *k, *object, cli.format),
        Command::Stats { word, digraph } => {
            cmd_stats(word.as_deref(), digraph.as_deref(), cli.format)
        }
        Command::Poly { which } => cmd_poly(which, cli.format),
        Command::Verify { id, all, n_max } => cmd_verify(id.as_deref(), *all, *n_max, cli.format),
    }
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad list entry {s:?}")))
        })
        .collect()
}

fn cmd_enumerate(n: usize, k: usize, object: ObjectKind, format: Format) -> Result<i32> {
    for w in enumerate_words(n, k)? {
        match object {
            ObjectKind::Word => match format {
                Format::Text => println!("{w}"),
                Format::Json => println!("{}", serde_json::to_string(&w.values()).unwrap()),
                Format::Csv => println!(
                    "{}",
                    w.values()
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                Format::Dot => {
                    return Err(Error::InvalidArgument(
                        "dot format applies to digraphs".to_string(),
                    ))
                }
            },
            ObjectKind::Digraph => {
                let g = LaguerreDigraph::from_word(&w);
                match format {
                    Format::Text | Format::Json => {
                        println!("{}", serde_json::to_string(&g).unwrap())
                    }
                    Format::Dot => print!("{}", g.to_dot()),
                    Format::Csv => {
                        let arrows = g
                            .arrows()
                            .iter()
                            .map(|(i, j)| format!("{i}:{j}"))
                            .collect::<Vec<_>>()
                            .join(";");
                        println!("{n},{arrows}");
                    }
                }
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct WordStatsOut {
    word: String,
    #[serde(flatten)]
    record: StatRecord,
    tilde_inv_filled: usize,
    rlmin: usize,
}

#[derive(Serialize)]
struct DigraphStatsOut {
    n: usize,
    #[serde(flatten)]
    stats: crate::digraphs::DigraphStats,
    classes: Vec<String>,
}

fn cmd_stats(word: Option<&str>, digraph: Option<&str>, format: Format) -> Result<i32> {
    match (word, digraph) {
        (Some(text), None) => {
            let w = LaguerreWord::parse(text)?;
            let record = full_stats(&w);
            let out = WordStatsOut {
                word: w.to_string(),
                tilde_inv_filled: record.tilde_inv_filled(),
                rlmin: record.rlmin(),
                record,
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
                Format::Csv => print_kv_csv(&out),
                _ => {
                    let r = &out.record;
                    println!(
                        "word={} n={} k={} des={} inv0={} maj0={} between={} inv={} maj={} inv_filled={} inv_holes={} tilde_inv_filled={} rlmin={} rlmin_set={} image={}",
                        out.word,
                        r.n,
                        r.holes,
                        set_text(&r.des_set),
                        r.inv0,
                        r.maj0,
                        r.between,
                        r.inv,
                        r.maj,
                        r.inv_filled,
                        r.inv_holes,
                        out.tilde_inv_filled,
                        out.rlmin,
                        set_text(&r.rlmin_set),
                        set_text(&r.image),
                    );
                }
            }
            Ok(0)
        }
        (None, Some(json)) => {
            let g: LaguerreDigraph =
                serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
            let (classes, stats) = g.classify();
            let out = DigraphStatsOut {
                n: g.n(),
                stats,
                classes: classes.iter().map(|c| c.abbrev().to_string()).collect(),
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
                Format::Csv => print_kv_csv(&out),
                Format::Dot => print!("{}", g.to_dot()),
                Format::Text => {
                    println!(
                        "n={} pk={} val={} da={} dd={} fp={} cyc={} paths={} classes={}",
                        out.n,
                        out.stats.pk,
                        out.stats.val,
                        out.stats.da,
                        out.stats.dd,
                        out.stats.fp,
                        out.stats.cyc,
                        out.stats.paths,
                        out.classes.join(","),
                    );
                }
            }
            Ok(0)
        }
        _ => Err(Error::InvalidArgument(
            "stats needs exactly one of --word or --digraph".to_string(),
        )),
    }
}

fn set_text<T: std::fmt::Display>(set: &BTreeSet<T>) -> String {
    let inner = set
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

fn print_kv_csv<T: Serialize>(value: &T) {
    let json = serde_json::to_value(value).unwrap();
    if let serde_json::Value::Object(map) = json {
        for (k, v) in map {
            let rendered = match v {
                serde_json::Value::String(s) => s,
                other => other.to_string(),
            };
            println!("{k},{rendered:?}");
        }
    }
}

fn params_by_name(name: &str, order: usize) -> Result<JRParams> {
    if name == "generic" {
        Ok(generic(order))
    } else {
        preset(name)
    }
}

fn print_poly(p: &Poly, format: Format) -> Result<i32> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(p).unwrap()),
        Format::Csv => {
            println!("coef,mono");
            for (m, c) in p.terms() {
                let mono = Poly::term(1, m.clone()).render_text();
                println!("{c},{mono}");
            }
        }
        _ => println!("{}", p.render_text()),
    }
    Ok(0)
}

fn cmd_poly(which: &PolyCommand, format: Format) -> Result<i32> {
    match which {
        PolyCommand::Distribution {
            n,
            k,
            weight,
            holes,
            image,
        } => {
            let weight = QWeight::parse(weight)?;
            let filter = match (holes, image) {
                (Some(h), None) => {
                    WordFilter::HolesExactlyAt(parse_usize_list(h)?.into_iter().collect())
                }
                (None, Some(j)) => WordFilter::ImageSet(
                    parse_usize_list(j)?.into_iter().map(|v| v as u32).collect(),
                ),
                (None, None) => WordFilter::All,
                _ => unreachable!("clap conflicts_with"),
            };
            print_poly(&distribution(*n, *k, weight, &filter)?, format)
        }
        PolyCommand::Ld { n, k } => print_poly(&ld_enumerator(*n, *k)?, format),
        PolyCommand::Cycle { n } => print_poly(&perm_cycle_poly(*n)?, format),
        PolyCommand::Linear { n } => print_poly(&perm_linear_poly(*n)?, format),
        PolyCommand::Mu { preset, order } => {
            let table = mu_table(&params_by_name(preset, *order)?, *order);
            match format {
                Format::Json => println!("{}", serde_json::to_string(&table).unwrap()),
                Format::Csv => {
                    println!("n,k,poly");
                    for (n, row) in table.rows().iter().enumerate() {
                        for (k, p) in row.iter().enumerate() {
                            println!("{n},{k},{}", p.render_text());
                        }
                    }
                }
                _ => {
                    for (n, row) in table.rows().iter().enumerate() {
                        for (k, p) in row.iter().enumerate() {
                            println!("mu[{n}][{k}] = {}", p.render_text());
                        }
                    }
                }
            }
            Ok(0)
        }
        PolyCommand::Ortho { preset, order } => {
            let seq = ortho_seq(&params_by_name(preset, *order)?, *order);
            match format {
                Format::Json => {
                    let polys: Vec<&Poly> = (0..seq.len()).map(|n| seq.poly(n)).collect();
                    println!("{}", serde_json::to_string(&polys).unwrap());
                }
                Format::Csv => {
                    println!("n,poly");
                    for n in 0..seq.len() {
                        println!("{n},{}", seq.poly(n).render_text());
                    }
                }
                _ => {
                    for n in 0..seq.len() {
                        println!("p[{n}] = {}", seq.poly(n).render_text());
                    }
                }
            }
            Ok(0)
        }
    }
}

/// Timing goes to stderr so stdout stays byte-identical across runs.
#[derive(Serialize)]
struct ReportOut<'a> {
    id: &'a str,
    bounds: &'a str,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: &'a Option<crate::report::Counterexample>,
}

fn print_reports(reports: &[VerifyReport], format: Format) {
    match format {
        Format::Json => {
            let rows: Vec<ReportOut> = reports
                .iter()
                .map(|r| ReportOut {
                    id: &r.id,
                    bounds: &r.bounds,
                    status: &r.status,
                    counterexample: &r.counterexample,
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            println!("id,bounds,status");
            for r in reports {
                println!("{},{},{}", r.id, r.bounds, r.status);
            }
        }
        _ => {
            for r in reports {
                println!("{:<18} [{}] {}", r.id, r.bounds, r.status);
                if let Some(ce) = &r.counterexample {
                    println!("  counterexample at {}", ce.location);
                    println!("    lhs: {}", ce.lhs);
                    println!("    rhs: {}", ce.rhs);
                }
            }
        }
    }
    for r in reports {
        eprintln!("{} finished in {}ms", r.id, r.millis);
    }
}

fn cmd_verify(id: Option<&str>, all: bool, n_max: Option<usize>, format: Format) -> Result<i32> {
    let reports = match (id, all) {
        (Some(id), false) => vec![run_task(id, n_max)?],
        (None, true) => run_all(n_max)?,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "verify needs a task id or --all; known ids: {}",
                TASKS.iter().map(|t| t.id).collect::<Vec<_>>().join(", ")
            )))
        }
    };
    print_reports(&reports, format);
    Ok(if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    })
}
