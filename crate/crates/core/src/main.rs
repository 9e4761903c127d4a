//! Command-line frontend: every enumeration and verification as a
//! subcommand with deterministic, machine-readable output.
//!
//! Exit codes: 0 on success or a passing verification, 1 when a
//! verification fails, 2 on usage errors (bad literals, out-of-range
//! arguments).

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use springer_core::census::{enumerate_orbits, Form, OrbitLabel};
use springer_core::characters::composition_factors;
use springer_core::error::Error;
use springer_core::geometry::{induce_orbit, smallness_report, SmallnessReport};
use springer_core::matching::{tilde_e_support, tilde_support_report};
use springer_core::partition::Partition;
use springer_core::schema::{match_output, OrbitRow, TripleRow};
use springer_core::series::{product_inv_one_minus, product_one_plus, product_ratio};
use springer_core::sigma::enumerate_sigma;
use springer_core::verify::{default_suite, verify_single, VerifyReport};

#[derive(Parser)]
#[command(
    name = "springer",
    version,
    about = "Nilpotent-orbit combinatorics for the split symmetric pair (SL(N), SO(N))",
    after_help = "Partition literals are comma-separated descending integers, e.g. 3,1; \
                  an empty string denotes the empty partition."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::I => Form::I,
            FormArg::II => Form::II,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// prod (1+x^s): coefficients q(k)
    OnePlus,
    /// prod 1/(1-x^s): coefficients p(k)
    InvOneMinus,
    /// prod (1+x^s)/(1-x^s)
    Ratio,
}

#[derive(Subcommand)]
enum Command {
    /// List the nilpotent K-orbits of N with local-system counts
    Orbits {
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// List the parameter set Sigma_N of triples (nu; mu1, mu2)
    Sigma {
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Triples attached to one orbit, distinguished triple flagged
    Match {
        /// Orbit partition, e.g. 2,1,1
        lambda: String,
        /// Form tag, required when all parts are even
        #[arg(long, value_enum)]
        form: Option<FormArg>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run the verification suite (all standard ranges, or a single N)
    Verify {
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Smallness certificate rows for every m at the given N
    Smallness {
        n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Coefficient table of a partition generating function
    Series {
        kind: SeriesKind,
        degree: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Composition-factor labels of the level-m induced module
    Factors {
        n: u32,
        m: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Induced orbit of a pair (alpha, beta): parts beta_i + 2 alpha_i
    Induce {
        alpha: String,
        beta: String,
        /// Expected total weight; inferred when omitted
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Predicted support partitions of the tilde labels at a given n
    TildeSupport {
        n: u32,
        #[arg(long, requires = "j")]
        i: Option<u32>,
        #[arg(long, requires = "i")]
        j: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        // A falsified internal-consistency check or conjecture is a
        // verification failure, not a usage error.
        Error::FiberDimMismatch { .. } | Error::UniquenessViolation { .. } => 1,
        _ => 2,
    }
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|_| {
                Error::InvalidPartition(format!("cannot parse part {tok:?} in {text:?}"))
            })
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    Partition::new(parts)
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Orbits { n, format } => {
            let rows: Vec<OrbitRow> = enumerate_orbits(n)?.iter().map(OrbitRow::from).collect();
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        plain(&r.lambda),
                        opt_form(r.form),
                        r.k.to_string(),
                        r.local_systems.to_string(),
                    ]
                })
                .collect();
            emit(
                format,
                &rows,
                &["lambda", "form", "k", "local_systems"],
                &table,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma { n, format } => {
            let rows = enumerate_sigma(n)?
                .iter()
                .map(|t| TripleRow::new(t, n))
                .collect::<Result<Vec<_>, _>>()?;
            let table: Vec<Vec<String>> = rows.iter().map(triple_row_cells).collect();
            emit(
                format,
                &rows,
                &["nu", "mu1", "mu2", "omega", "support_m", "support_omega"],
                &table,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Match {
            lambda,
            form,
            format,
        } => {
            let orbit = OrbitLabel::new(parse_partition(&lambda)?, form.map(Form::from))?;
            let out = match_output(&orbit)?;
            let table: Vec<Vec<String>> = out
                .triples
                .iter()
                .map(|row| {
                    let mut cells = triple_row_cells(&row.triple);
                    cells.push(if row.distinguished {
                        "*".into()
                    } else {
                        String::new()
                    });
                    cells
                })
                .collect();
            emit(
                format,
                &out,
                &[
                    "nu",
                    "mu1",
                    "mu2",
                    "omega",
                    "support_m",
                    "support_omega",
                    "distinguished",
                ],
                &table,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, format } => {
            let report = match n {
                Some(n) => verify_single(n)?,
                None => default_suite(max_n_from_env()?),
            };
            print_verify(&report, format)?;
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Smallness { n, format } => {
            let reports: Vec<SmallnessReport> = (1..=(n / 2))
                .map(|m| smallness_report(m, n))
                .collect::<Result<_, _>>()?;
            let mut table = Vec::new();
            for report in &reports {
                for row in &report.rows {
                    table.push(vec![
                        report.m.to_string(),
                        row.j.to_string(),
                        row.fiber_dim.to_string(),
                        half_string(row.codim),
                        row.pass.to_string(),
                    ]);
                }
            }
            emit(
                format,
                &reports,
                &["m", "j", "fiber_dim", "half_codim", "pass"],
                &table,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Series {
            kind,
            degree,
            format,
        } => {
            let series = match kind {
                SeriesKind::OnePlus => product_one_plus(degree),
                SeriesKind::InvOneMinus => product_inv_one_minus(degree),
                SeriesKind::Ratio => product_ratio(degree),
            };
            let coefficients: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            let table: Vec<Vec<String>> = coefficients
                .iter()
                .enumerate()
                .map(|(deg, c)| vec![deg.to_string(), c.clone()])
                .collect();
            #[derive(Serialize)]
            struct SeriesOut {
                degree: usize,
                coefficients: Vec<String>,
            }
            emit(
                format,
                &SeriesOut {
                    degree,
                    coefficients,
                },
                &["degree", "coefficient"],
                &table,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Factors { n, m, format } => {
            let factors = composition_factors(m, n)?;
            let table: Vec<Vec<String>> = factors
                .iter()
                .map(|f| vec![plain(&f.mu1), plain(&f.mu2), opt_form(f.split)])
                .collect();
            emit(format, &factors, &["mu1", "mu2", "split"], &table)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Induce {
            alpha,
            beta,
            n,
            format,
        } => {
            let alpha = parse_partition(&alpha)?;
            let beta = parse_partition(&beta)?;
            let n = n.unwrap_or_else(|| 2 * alpha.weight() + beta.weight());
            let lambda = induce_orbit(&alpha, &beta, n)?;
            #[derive(Serialize)]
            struct InduceOut {
                lambda: Partition,
            }
            let table = vec![vec![plain(&lambda)]];
            emit(
                format,
                &InduceOut {
                    lambda: lambda.clone(),
                },
                &["lambda"],
                &table,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::TildeSupport { n, i, j, format } => {
            if let (Some(i), Some(j)) = (i, j) {
                let support = tilde_e_support(n, i, j)?;
                #[derive(Serialize)]
                struct SupportOut {
                    i: u32,
                    j: u32,
                    support: Partition,
                }
                let table = vec![vec![i.to_string(), j.to_string(), plain(&support)]];
                emit(
                    format,
                    &SupportOut { i, j, support },
                    &["i", "j", "support"],
                    &table,
                )?;
            } else {
                let report = tilde_support_report(n)?;
                let table: Vec<Vec<String>> = report
                    .rows
                    .iter()
                    .map(|r| vec![r.i.to_string(), r.j.to_string(), plain(&r.support)])
                    .collect();
                emit(format, &report, &["i", "j", "support"], &table)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn max_n_from_env() -> Result<Option<u32>, Error> {
    match std::env::var("SPRINGER_MAX_N") {
        Ok(text) => {
            text.trim().parse::<u32>().map(Some).map_err(|_| {
                Error::OutOfRange(format!("SPRINGER_MAX_N={text:?} is not an integer"))
            })
        }
        Err(_) => Ok(None),
    }
}

/// Partition rendered for table/CSV cells: bare comma-separated parts.
fn plain(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn opt_form(form: Option<Form>) -> String {
    form.map(|f| f.to_string()).unwrap_or_default()
}

fn triple_row_cells(row: &TripleRow) -> Vec<String> {
    vec![
        plain(&row.nu),
        plain(&row.mu1),
        plain(&row.mu2),
        opt_form(row.omega),
        row.support_m.to_string(),
        opt_form(row.support_omega),
    ]
}

/// Exact decimal rendering of codim/2: "3" or "1.5", no floating point.
fn half_string(codim: i64) -> String {
    if codim % 2 == 0 {
        (codim / 2).to_string()
    } else {
        format!("{}.5", codim / 2)
    }
}

fn emit<T: Serialize>(
    format: OutputFormat,
    json_value: &T,
    header: &[&str],
    table: &[Vec<String>],
) -> Result<(), Error> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let outcome = (|| -> std::io::Result<()> {
        match format {
            OutputFormat::Json => {
                let text = serde_json::to_string(json_value).expect("serializable output");
                writeln!(out, "{text}")?;
            }
            OutputFormat::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(header).map_err(csv_io)?;
                for row in table {
                    writer.write_record(row).map_err(csv_io)?;
                }
                writer.flush()?;
            }
            OutputFormat::Table => {
                let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
                for row in table {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.len());
                    }
                }
                let render = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(cell, w)| format!("{cell:w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
                writeln!(out, "{}", render(&header_cells))?;
                for row in table {
                    writeln!(out, "{}", render(row))?;
                }
            }
        }
        Ok(())
    })();
    match outcome {
        Ok(()) => Ok(()),
        // The consumer stopped reading (e.g. piped into head); not an error.
        Err(err) if err.kind() == std::io::ErrorKind::BrokenPipe => {
            std::process::exit(0);
        }
        Err(err) => panic!("cannot write to stdout: {err}"),
    }
}

fn csv_io(err: csv::Error) -> std::io::Error {
    match err.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => std::io::Error::other(format!("{other:?}")),
    }
}

fn print_verify(report: &VerifyReport, format: OutputFormat) -> Result<(), Error> {
    let table: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                if c.pass {
                    "pass".into()
                } else {
                    "FAIL".to_string()
                },
                c.name.clone(),
                c.detail.clone(),
            ]
        })
        .collect();
    emit(format, report, &["status", "check", "detail"], &table)
}
