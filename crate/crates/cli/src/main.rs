//! `eis4`: command-line front end exposing every computation and
//! verification as a subcommand with machine-readable output.
//!
//! Conventions: results go to stdout as JSON (default) or CSV; diagnostics
//! go to stderr. Exit code 0 on success/pass, 1 on a failed verification,
//! 2 on usage errors (including domain violations in the arguments). The
//! environment variable `EIS4_TERMS` overrides the default truncation.

#![allow(clippy::manual_is_multiple_of)]

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use eis4_core::eisenstein::{eis_g, eis_h, eis_h2};
use eis4_core::error::Error as CoreError;
use eis4_core::period::{build_mk, check_det_ord2, delta_tilde_kernel_basis};
use eis4_core::qseries::{ConstTerm, QSeries};
use eis4_core::relations::{
    atilde_vector, atilde_vector_literal, conj_vector, express_in_modular, known_errata,
    RelationVector,
};
use eis4_core::ttilde::{ttilde_double, ttilde_single};
use eis4_core::verifier::{
    verify_g_decomp, verify_g_product, verify_im_vanishing, verify_shuffle, verify_theta,
    VerifyReport,
};

mod suite;

#[derive(Parser)]
#[command(name = "eis4", version, about = "Exact level-4 double Eisenstein series engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "H2", alias = "h2")]
    H2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimKind {
    Shuffle,
    #[value(name = "g-decomp")]
    GDecomp,
    #[value(name = "g-product")]
    GProduct,
    #[value(name = "im-vanish")]
    ImVanish,
    Theta,
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a series.
    Qexp {
        #[arg(long, value_enum)]
        series: SeriesKind,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        k2: Option<u32>,
        /// Truncation order (default: EIS4_TERMS or 40).
        #[arg(long)]
        terms: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run one exact identity check; exit 0 on pass, 1 on fail.
    Verify {
        #[arg(long, value_enum)]
        claim: ClaimKind,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        k1: Option<u32>,
        #[arg(long)]
        k2: Option<u32>,
        #[arg(long)]
        terms: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Rank of the binomial comparison matrix of a given weight.
    Rank {
        /// Weight k of the matrix.
        #[arg(long = "mk")]
        mk: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Determinant of the period matrix with its 2-adic valuation check.
    Det {
        /// Even degree w >= 6.
        #[arg(long = "aw")]
        aw: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Kernel of the reflection element on the degree-(k-2) space.
    Kernel {
        /// Even weight k >= 6.
        #[arg(long = "delta-tilde")]
        delta_tilde: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Relation vectors among the depth-2 constants.
    Relations {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: Option<u32>,
        /// Use the published doubling placement instead of the corrected one.
        #[arg(long = "paper-literal")]
        paper_literal: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Conjectural relation vector from the polynomial construction.
    Conjecture {
        #[arg(long = "N")]
        n_level: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Express a conjectural vector in the span of the modular relations.
    Express {
        #[arg(long = "N")]
        n_level: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Numeric constant-term values.
    Ttilde {
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: Option<u32>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the full reproduction suite.
    PaperSuite {
        /// Only run claims whose id contains this substring.
        #[arg(long)]
        only: Option<String>,
        /// Also run the published-variant relation checks (documented fails).
        #[arg(long = "paper-literal")]
        paper_literal: bool,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn default_terms() -> usize {
    std::env::var("EIS4_TERMS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(40)
}

fn terms_or_default(terms: Option<usize>) -> Result<usize, CoreError> {
    let n = terms.unwrap_or_else(default_terms);
    if n == 0 {
        return Err(CoreError::Range("truncation must be >= 1".into()));
    }
    Ok(n)
}

/// Serializable view of one series coefficient.
#[derive(Serialize)]
struct CoeffRow<'a> {
    n: usize,
    value: &'a eis4_core::LForm,
}

fn print_qexp(series: &QSeries, header: serde_json::Value, format: Format) {
    match format {
        Format::Json => {
            let coeffs: Vec<CoeffRow> = (1..=series.truncation())
                .map(|n| CoeffRow { n, value: series.coeff(n) })
                .collect();
            let constant = match series.constant() {
                ConstTerm::Exact(f) => json!({"kind": "exact", "value": f}),
                ConstTerm::OpaqueT(k) => json!({"kind": "opaque-t", "k": k}),
                ConstTerm::OpaqueT2(a, b) => json!({"kind": "opaque-t2", "k1": a, "k2": b}),
                ConstTerm::Absent => json!({"kind": "absent"}),
            };
            let mut out = header;
            out["constant"] = constant;
            out["coefficients"] = serde_json::to_value(&coeffs).unwrap();
            println!("{out}");
        }
        Format::Csv => {
            println!("n,generator,re,im");
            for n in 1..=series.truncation() {
                for (g, c) in series.coeff(n).iter() {
                    println!("{n},{},{},{}", g.name(), c.re, c.im);
                }
            }
        }
    }
}

fn print_json_or_csv<T: Serialize>(value: &T, format: Format, csv: impl Fn() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).unwrap()),
        Format::Csv => print!("{}", csv()),
    }
}

fn verify_report_csv(rep: &VerifyReport) -> String {
    let mut out = String::from("claim,status,checked_through,first_failure_q\n");
    out.push_str(&format!(
        "{},{},{},{}\n",
        rep.claim,
        if rep.passed() { "pass" } else { "fail" },
        rep.checked_through,
        rep.first_failure.as_ref().map_or(String::new(), |f| f.q_index.to_string()),
    ));
    out
}

fn relation_rows(k: u32, js: &[u32], literal: bool) -> Result<Vec<(u32, RelationVector)>, CoreError> {
    js.iter()
        .map(|&j| {
            let v = if literal { atilde_vector_literal(k, j) } else { atilde_vector(k, j) }?;
            Ok((j, v))
        })
        .collect()
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run `eis4 --help` for usage");
    ExitCode::from(2)
}

fn run(cli: Cli) -> Result<ExitCode, CoreError> {
    match cli.command {
        Command::Qexp { series, k, k2, terms, format } => {
            let n = terms_or_default(terms)?;
            match series {
                SeriesKind::H => {
                    if k < 1 {
                        return Err(CoreError::Range("--k must be >= 1".into()));
                    }
                    let s = eis_h(k, n);
                    print_qexp(&s, json!({"series": "H", "k": k, "terms": n}), format.format);
                }
                SeriesKind::G => {
                    let s = eis_g(k, n)?;
                    print_qexp(&s, json!({"series": "G", "k": k, "terms": n}), format.format);
                }
                SeriesKind::H2 => {
                    let k2 = k2.ok_or_else(|| CoreError::Range("--k2 required for H2".into()))?;
                    if k < 1 || k2 < 1 {
                        return Err(CoreError::Range("weights must be >= 1".into()));
                    }
                    let s = eis_h2(k, k2, n);
                    print_qexp(
                        &s,
                        json!({"series": "H2", "k": k, "k2": k2, "terms": n}),
                        format.format,
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { claim, k, k1, k2, terms, format } => {
            let n = terms_or_default(terms)?;
            let need = |v: Option<u32>, name: &str| {
                v.ok_or_else(|| CoreError::Range(format!("--{name} required for this claim")))
            };
            let rep = match claim {
                ClaimKind::Shuffle => {
                    let (a, b) = (need(k1, "k1")?, need(k2, "k2")?);
                    if a < 1 || b < 1 {
                        return Err(CoreError::Range("weights must be >= 1".into()));
                    }
                    verify_shuffle(a, b, n)
                }
                ClaimKind::GDecomp => verify_g_decomp(need(k, "k")?, n)?,
                ClaimKind::GProduct => verify_g_product(need(k, "k")?, n)?,
                ClaimKind::ImVanish => verify_im_vanishing(need(k, "k")?, n)?,
                ClaimKind::Theta => verify_theta(n),
            };
            print_json_or_csv(&rep, format.format, || verify_report_csv(&rep));
            Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Rank { mk, format } => {
            if mk < 2 {
                return Err(CoreError::Range("--mk must be >= 2".into()));
            }
            let rank = build_mk(mk).rank();
            print_json_or_csv(&json!({"rank": rank}), format.format, || {
                format!("rank\n{rank}\n")
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Det { aw, format } => {
            let rep = check_det_ord2(aw)?;
            print_json_or_csv(&rep, format.format, || {
                format!(
                    "w,det,ord2,ord2_formula,nonzero,matches\n{},{},{},{},{},{}\n",
                    rep.w, rep.det, rep.ord2, rep.ord2_formula, rep.nonzero, rep.matches
                )
            });
            Ok(if rep.nonzero && rep.matches { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Kernel { delta_tilde, format } => {
            let basis = delta_tilde_kernel_basis(delta_tilde)?;
            let dim = basis.len();
            print_json_or_csv(
                &json!({"k": delta_tilde, "kernel_dim": dim, "basis": basis}),
                format.format,
                || {
                    let mut out = format!("k,kernel_dim\n{delta_tilde},{dim}\n");
                    for (i, v) in basis.iter().enumerate() {
                        out.push_str(&format!("basis_{i}"));
                        for x in v {
                            out.push_str(&format!(",{x}"));
                        }
                        out.push('\n');
                    }
                    out
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Relations { k, j, paper_literal, format } => {
            let js: Vec<u32> = match j {
                Some(j) => vec![j],
                None => (1..=(k.saturating_sub(2)) / 4).collect(),
            };
            let rows = relation_rows(k, &js, paper_literal)?;
            match format.format {
                Format::Json => {
                    let body: Vec<_> = rows
                        .iter()
                        .map(|(j, v)| {
                            json!({"k": k, "j": j, "literal": paper_literal, "coeffs": v.coeffs})
                        })
                        .collect();
                    let errata: Vec<_> = known_errata()
                        .into_iter()
                        .filter(|e| e.k == k && js.contains(&e.j))
                        .collect();
                    println!("{}", json!({"vectors": body, "errata": errata}));
                }
                Format::Csv => {
                    println!("k,j,p,value");
                    for (j, v) in &rows {
                        for (idx, c) in v.coeffs.iter().enumerate() {
                            println!("{k},{j},{},{c}", idx + 1);
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Conjecture { n_level, k, j, format } => {
            let v = conj_vector(n_level, k, j)?;
            print_json_or_csv(
                &json!({"N": n_level, "k": k, "j": j, "coeffs": v.coeffs}),
                format.format,
                || {
                    let mut out = String::from("N,k,j,i,value\n");
                    for (idx, c) in v.coeffs.iter().enumerate() {
                        out.push_str(&format!("{n_level},{k},{j},{},{c}\n", idx + 1));
                    }
                    out
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Express { n_level, k, j, format } => {
            let mu = express_in_modular(n_level, k, j)?;
            let consistent = mu.is_some();
            print_json_or_csv(
                &json!({"N": n_level, "k": k, "j": j, "consistent": consistent, "mu": mu}),
                format.format,
                || match &mu {
                    Some(mu) => {
                        let mut out = String::from("jprime,mu\n");
                        for (idx, c) in mu.iter().enumerate() {
                            out.push_str(&format!("{},{c}\n", idx + 1));
                        }
                        out
                    }
                    None => String::from("consistent\nfalse\n"),
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Ttilde { k1, k2, tol, format } => {
            if tol <= 0.0 {
                return Err(CoreError::Range("--tol must be positive".into()));
            }
            if k1 < 1 {
                return Err(CoreError::Range("--k1 must be >= 1".into()));
            }
            let value = match k2 {
                None => ttilde_single(k1),
                Some(k2) => {
                    if k2 < 1 {
                        return Err(CoreError::Range("--k2 must be >= 1".into()));
                    }
                    ttilde_double(k1, k2, tol)?
                }
            };
            print_json_or_csv(&value, format.format, || {
                format!(
                    "re,im,est_error,method\n{:e},{:e},{:e},{}\n",
                    value.re,
                    value.im,
                    value.est_error,
                    serde_json::to_value(value.method).unwrap().as_str().unwrap()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::PaperSuite { only, paper_literal, format } => {
            let manifest = suite::run_suite(only.as_deref(), paper_literal);
            print_json_or_csv(&manifest, format.format, || {
                let mut out = String::from("claim,status,expected,wall_ms\n");
                for c in &manifest.claims {
                    out.push_str(&format!("{},{},{},{}\n", c.id, c.status, c.expected, c.wall_ms));
                }
                out.push_str(&format!("overall,{},,\n", manifest.overall));
                out
            });
            Ok(if manifest.overall == "pass" { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// Die quietly on a closed pipe instead of panicking mid-print.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CoreError::Tolerance { value, tol }) => {
            eprintln!("error: tolerance failure: {value:e} exceeds {tol:e}");
            ExitCode::from(1)
        }
        Err(e) => usage_error(&e.to_string()),
    }
}
