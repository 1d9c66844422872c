//! `circham`: hamiltonicity of circulant digraphs `Circ(n; 2, 3, c)`.
//!
//! Exit codes: 0 = hamiltonian / success, 1 = non-hamiltonian,
//! 2 = invalid input or verification failure, 3 = unknown (budget
//! exhausted).

use circham::classify::{classify, NonHamFamily, Verdict};
use circham::construct::{build, ConstructionResult, DEFAULT_ORACLE_BUDGET};
use circham::dot::to_dot;
use circham::instance::Instance;
use circham::oracle::{solve, OracleResult};
use circham::{decode_cert, encode_cert, rankin_hamiltonian, verify_cycle, CycleCert};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(name = "circham", version, about = "hamiltonicity of Circ(n; 2,3,c)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide hamiltonicity of Circ(n; 2,3,c).
    Decide { n: i64, c: i64 },
    /// Construct a verified hamiltonian cycle certificate.
    Construct {
        n: i64,
        c: i64,
        /// Output representation.
        #[arg(long, value_enum, default_value_t = Format::Steps)]
        format: Format,
        /// Node budget for the exhaustive-search fallback.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        oracle_budget: u64,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a certificate file.
    Verify { file: PathBuf },
    /// Exhaustive hamiltonian-cycle search on Circ(n; steps...).
    Oracle {
        n: i64,
        /// Step residues (one or more).
        #[arg(required = true)]
        steps: Vec<i64>,
        /// Node budget.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
    /// Rankin's hamiltonicity criterion for Circ(n; a, b).
    Rankin { n: i64, a: i64, b: i64 },
    /// Sweep instances and emit a CSV report.
    Survey {
        #[arg(long)]
        n_min: i64,
        #[arg(long)]
        n_max: i64,
        /// Sweep every valid c for each n (the default unless --c is given).
        #[arg(long, conflicts_with = "c_values")]
        c_all: bool,
        /// Restrict the sweep to these c values (repeatable).
        #[arg(long = "c")]
        c_values: Vec<i64>,
        /// Write CSV to a file instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Worker threads; row order does not depend on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Node budget for the exhaustive-search fallback.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        oracle_budget: u64,
    },
    /// Export the digraph (optionally with a certificate highlighted) as DOT.
    Dot {
        n: i64,
        c: i64,
        /// Highlight the cycle from this certificate file.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// The certificate file format.
    Steps,
    /// The vertex tour on one line.
    Vertices,
    /// Graphviz DOT with the cycle highlighted.
    Dot,
}

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    std::process::exit(run(cli.cmd));
}

fn emit(text: &str, out: Option<&Path>) -> i32 {
    match out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => {
                eprintln!("wrote {}", path.display());
                0
            }
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                2
            }
        },
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            0
        }
    }
}

fn witness_line(w: &circham::NonHamWitness) -> String {
    let family = match w.family {
        NonHamFamily::HalfPlusTwo => "3m+2",
        NonHamFamily::HalfPlusThree => "3m+3",
    };
    format!("non-hamiltonian: n=6m, c={family}, c even (m={})", w.m)
}

fn run(cmd: Cmd) -> i32 {
    match cmd {
        Cmd::Decide { n, c } => cmd_decide(n, c),
        Cmd::Construct {
            n,
            c,
            format,
            oracle_budget,
            out,
        } => cmd_construct(n, c, format, oracle_budget, out.as_deref()),
        Cmd::Verify { file } => cmd_verify(&file),
        Cmd::Oracle { n, steps, budget } => cmd_oracle(n, &steps, budget),
        Cmd::Rankin { n, a, b } => cmd_rankin(n, a, b),
        Cmd::Survey {
            n_min,
            n_max,
            c_all,
            c_values,
            csv,
            jobs,
            oracle_budget,
        } => cmd_survey(
            n_min,
            n_max,
            c_all,
            &c_values,
            csv.as_deref(),
            jobs,
            oracle_budget,
        ),
        Cmd::Dot { n, c, cert, out } => cmd_dot(n, c, cert.as_deref(), out.as_deref()),
    }
}

fn cmd_decide(n: i64, c: i64) -> i32 {
    let inst = match Instance::new(n, c) {
        Ok(inst) => inst,
        Err(reason) => {
            println!("invalid: {reason}");
            return 2;
        }
    };
    let cls = classify(&inst);
    match cls.verdict {
        Verdict::Hamiltonian => {
            println!("hamiltonian");
            0
        }
        Verdict::NonHamiltonian => {
            println!("{}", witness_line(&cls.witness.expect("witness")));
            1
        }
    }
}

fn cmd_construct(n: i64, c: i64, format: Format, budget: u64, out: Option<&Path>) -> i32 {
    match build(n, c, budget) {
        ConstructionResult::Cycle { cert, method } => {
            eprintln!("method: {method}");
            let text = render_cert(&cert, format);
            emit(&text, out)
        }
        ConstructionResult::NonHamiltonian { witness } => {
            println!("{}", witness_line(&witness));
            1
        }
        ConstructionResult::Invalid { reason } => {
            println!("invalid: {reason}");
            2
        }
        ConstructionResult::Unknown { reason } => {
            println!("unknown: {reason}");
            3
        }
    }
}

fn render_cert(cert: &CycleCert, format: Format) -> String {
    match format {
        Format::Steps => encode_cert(cert),
        Format::Vertices => {
            let tour: Vec<String> = cert.vertex_tour().iter().map(|v| v.to_string()).collect();
            format!("{}\n", tour.join(" "))
        }
        Format::Dot => to_dot(cert.instance(), Some(cert)),
    }
}

fn cmd_verify(file: &Path) -> i32 {
    let text = match std::fs::read_to_string(file) {
        Ok(text) => text,
        Err(e) => {
            println!("invalid: cannot read {}: {e}", file.display());
            return 2;
        }
    };
    let cert = match decode_cert(&text) {
        Ok(cert) => cert,
        Err(e) => {
            println!("invalid: {e}");
            return 2;
        }
    };
    match verify_cycle(&cert) {
        Ok(()) => {
            println!(
                "valid certificate: n={} c={} start={}",
                cert.instance().n(),
                cert.instance().c(),
                cert.start()
            );
            0
        }
        Err(v) => {
            println!("invalid: {v}");
            2
        }
    }
}

fn cmd_oracle(n: i64, steps: &[i64], budget: u64) -> i32 {
    if n < 1 {
        println!("invalid: n must be positive");
        return 2;
    }
    let mut residues: Vec<i64> = steps.iter().map(|s| s.rem_euclid(n)).collect();
    residues.sort_unstable();
    residues.dedup();
    if residues.len() != steps.len() || residues.contains(&0) {
        println!("invalid: steps must be distinct nonzero residues mod n");
        return 2;
    }
    match solve(n, &residues, budget) {
        OracleResult::Found(found) => {
            let steps: Vec<String> = found.steps.iter().map(|s| s.to_string()).collect();
            println!(
                "hamiltonian: start={} steps={}",
                found.start,
                steps.join(",")
            );
            0
        }
        OracleResult::NoneExhaustive => {
            println!("non-hamiltonian (search exhausted)");
            1
        }
        OracleResult::BudgetExceeded { nodes } => {
            println!("unknown: budget exceeded after {nodes} nodes");
            3
        }
    }
}

fn cmd_rankin(n: i64, a: i64, b: i64) -> i32 {
    if n < 1 {
        println!("invalid: n must be positive");
        return 2;
    }
    let (ra, rb) = (a.rem_euclid(n), b.rem_euclid(n));
    if ra == 0 || rb == 0 || ra == rb {
        println!("invalid: a and b must be distinct nonzero residues mod n");
        return 2;
    }
    match rankin_hamiltonian(n, ra, rb) {
        Some(w) => {
            println!("hamiltonian: s={} t={}", w.s, w.t);
            0
        }
        None => {
            println!("non-hamiltonian");
            1
        }
    }
}

fn survey_row(n: i64, c: i64, budget: u64) -> String {
    let started = Instant::now();
    let result = build(n, c, budget);
    let us = started.elapsed().as_micros();
    let (verdict, method, verified) = match &result {
        ConstructionResult::Cycle { cert, method } => {
            let verified = verify_cycle(cert).is_ok();
            (
                "hamiltonian",
                method.to_string(),
                if verified { "true" } else { "false" },
            )
        }
        ConstructionResult::NonHamiltonian { .. } => ("non-hamiltonian", "-".to_string(), "-"),
        ConstructionResult::Unknown { .. } => ("unknown", "-".to_string(), "-"),
        ConstructionResult::Invalid { .. } => ("invalid", "-".to_string(), "-"),
    };
    format!("{n},{c},{verdict},{method},{verified},{us}")
}

fn cmd_survey(
    n_min: i64,
    n_max: i64,
    _c_all: bool,
    c_values: &[i64],
    csv: Option<&Path>,
    jobs: usize,
    budget: u64,
) -> i32 {
    if n_min > n_max || n_min < 1 {
        eprintln!("error: need 1 <= n-min <= n-max");
        return 2;
    }
    // Lexicographic (n, c) over valid instances; --c restricts per-n.
    let mut instances: Vec<(i64, i64)> = Vec::new();
    for n in n_min..=n_max {
        if c_values.is_empty() {
            for c in 1..n {
                if Instance::new(n, c).is_ok() {
                    instances.push((n, c));
                }
            }
        } else {
            let mut cs: Vec<i64> = c_values
                .iter()
                .copied()
                .filter(|&c| 0 < c && c < n && Instance::new(n, c).is_ok())
                .collect();
            cs.sort_unstable();
            cs.dedup();
            instances.extend(cs.into_iter().map(|c| (n, c)));
        }
    }

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot build thread pool: {e}");
            return 2;
        }
    };
    use rayon::prelude::*;
    let rows: Vec<String> = pool.install(|| {
        instances
            .par_iter()
            .map(|&(n, c)| survey_row(n, c, budget))
            .collect()
    });

    let mut text = String::from("n,c,verdict,method,verified,us\n");
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    emit(&text, csv)
}

fn cmd_dot(n: i64, c: i64, cert_file: Option<&Path>, out: Option<&Path>) -> i32 {
    let inst = match Instance::new(n, c) {
        Ok(inst) => inst,
        Err(reason) => {
            println!("invalid: {reason}");
            return 2;
        }
    };
    let cert = match cert_file {
        None => None,
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(text) => text,
                Err(e) => {
                    println!("invalid: cannot read {}: {e}", path.display());
                    return 2;
                }
            };
            match decode_cert(&text) {
                Ok(cert) if cert.instance() == &inst => Some(cert),
                Ok(cert) => {
                    println!(
                        "invalid: certificate is for n={} c={}, not n={n} c={}",
                        cert.instance().n(),
                        cert.instance().c(),
                        inst.c()
                    );
                    return 2;
                }
                Err(e) => {
                    println!("invalid: {e}");
                    return 2;
                }
            }
        }
    };
    emit(&to_dot(&inst, cert.as_ref()), out)
}
