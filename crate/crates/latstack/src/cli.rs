//! Command-line interface: build, count, tabulate, verify, enumerate and
//! export the stacked lattices.
//!
//! Parameters follow the stacking notation: `k` is the iteration depth, and
//! `--axis` selects which family `n` and `m` refer to — `column` for
//! `Σ^k_n C^n_m` (tables run over `n`) and `row` for `Σ^k_m C^n_m` (tables
//! run over `m`).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::chains::{self, Axis, GridSpec};
use crate::error::Result;
use crate::hypercube::{row_star_sublattice, star_sublattice};
use crate::io::{self, GridFormat};
use crate::poset::{Poset, DEFAULT_ELEMENT_BUDGET};
use crate::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "latstack",
    version,
    about = "Exact maximal-chain combinatorics of stacked lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Ambient element budget (default 1048576).
    #[arg(long, global = true, env = "LATSTACK_BUDGET")]
    budget: Option<usize>,
}

/// A single value `v` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    lo: usize,
    hi: usize,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("invalid number `{t}`"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let (lo, hi) = (parse(a)?, parse(b)?);
                if lo > hi {
                    return Err(format!("empty range `{s}`"));
                }
                Ok(RangeArg { lo, hi })
            }
            None => {
                let v = parse(s)?;
                Ok(RangeArg { lo: v, hi: v })
            }
        }
    }
}

impl RangeArg {
    fn single(&self, flag: &str) -> std::result::Result<usize, CliError> {
        if self.lo == self.hi {
            Ok(self.lo)
        } else {
            Err(CliError::Usage(format!(
                "--{flag} expects a single value here, not a range"
            )))
        }
    }
}

/// Failures after argument parsing: bad flag combinations exit 2 like other
/// usage errors, everything else exits 1.
enum CliError {
    Usage(String),
    Runtime(String),
}

trait IntoRuntime<T> {
    fn runtime(self) -> std::result::Result<T, CliError>;
}

impl<T, E: std::fmt::Display> IntoRuntime<T> for std::result::Result<T, E> {
    fn runtime(self) -> std::result::Result<T, CliError> {
        self.map_err(|e| CliError::Runtime(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AxisArg {
    Column,
    Row,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::Column => Axis::Column,
            AxisArg::Row => Axis::Row,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DocFormatArg {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridFormatArg {
    Table,
    Bfile,
    Csv,
    Json,
}

impl From<GridFormatArg> for GridFormat {
    fn from(f: GridFormatArg) -> GridFormat {
        match f {
            GridFormatArg::Table => GridFormat::Table,
            GridFormatArg::Bfile => GridFormat::BFile,
            GridFormatArg::Csv => GridFormat::Csv,
            GridFormatArg::Json => GridFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Formulas,
    Structure,
    Bijections,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Structure => Suite::Structure,
            SuiteArg::Bijections => Suite::Bijections,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a stacked lattice and write its poset document.
    Build {
        #[arg(long, value_enum)]
        axis: AxisArg,
        #[arg(long)]
        k: RangeArg,
        #[arg(long)]
        n: RangeArg,
        #[arg(long)]
        m: RangeArg,
        #[arg(long, value_enum, default_value = "json")]
        format: DocFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the exact number of maximal chains.
    Count {
        #[arg(long, value_enum)]
        axis: AxisArg,
        #[arg(long)]
        k: RangeArg,
        #[arg(long)]
        n: RangeArg,
        #[arg(long)]
        m: RangeArg,
    },
    /// Tabulate chain counts over parameter ranges (`a..b` is inclusive).
    Grid {
        #[arg(long, value_enum)]
        axis: AxisArg,
        #[arg(long)]
        k: RangeArg,
        #[arg(long)]
        n: RangeArg,
        #[arg(long)]
        m: RangeArg,
        #[arg(long, value_enum, default_value = "table")]
        format: GridFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a self-verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// List every maximal chain, one per line, as label sequences.
    Enumerate {
        #[arg(long, value_enum)]
        axis: AxisArg,
        #[arg(long)]
        k: RangeArg,
        #[arg(long)]
        n: RangeArg,
        #[arg(long)]
        m: RangeArg,
        /// Abort (reporting the exact count) when more chains exist.
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the Hasse diagram (DOT) or poset document (JSON).
    Export {
        #[arg(long, value_enum)]
        axis: AxisArg,
        #[arg(long)]
        k: RangeArg,
        #[arg(long)]
        n: RangeArg,
        #[arg(long)]
        m: RangeArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: DocFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn build_lattice(axis: Axis, k: usize, n: usize, m: usize, budget: usize) -> Result<Arc<Poset>> {
    match axis {
        Axis::Column => Ok(star_sublattice(k, n, m, budget)?.poset),
        Axis::Row => Ok(row_star_sublattice(n, k, m, budget)?.poset),
    }
}

fn poset_document(axis: Axis, k: usize, n: usize, m: usize, p: &Poset) -> io::PosetDocument {
    let mut doc = io::write_poset(p);
    doc.meta.insert(
        "axis".into(),
        serde_json::Value::String(axis.as_str().into()),
    );
    for (key, value) in [("k", k), ("n", n), ("m", m)] {
        doc.meta
            .insert(key.into(), serde_json::Value::Number(value.into()));
    }
    doc
}

fn emit(out: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn single_params(
    k: &RangeArg,
    n: &RangeArg,
    m: &RangeArg,
) -> std::result::Result<(usize, usize, usize), CliError> {
    Ok((k.single("k")?, n.single("n")?, m.single("m")?))
}

fn dispatch(cli: Cli) -> std::result::Result<i32, CliError> {
    let budget = cli.budget.unwrap_or(DEFAULT_ELEMENT_BUDGET);
    match cli.command {
        Command::Build {
            axis,
            k,
            n,
            m,
            format,
            out,
        }
        | Command::Export {
            axis,
            k,
            n,
            m,
            format,
            out,
        } => {
            let (k, n, m) = single_params(&k, &n, &m)?;
            let axis = Axis::from(axis);
            let p = build_lattice(axis, k, n, m, budget).runtime()?;
            let text = match format {
                DocFormatArg::Json => {
                    let mut s = poset_document(axis, k, n, m, &p).to_json();
                    s.push('\n');
                    s
                }
                DocFormatArg::Dot => io::export_dot(&p),
            };
            emit(out.as_ref(), &text).runtime()?;
            Ok(0)
        }
        Command::Count { axis, k, n, m } => {
            let (k, n, m) = single_params(&k, &n, &m)?;
            let p = build_lattice(axis.into(), k, n, m, budget).runtime()?;
            let count = chains::count_maximal_chains(&p).runtime()?;
            println!("{count}");
            Ok(0)
        }
        Command::Grid {
            axis,
            k,
            n,
            m,
            format,
            out,
        } => {
            let spec = GridSpec {
                axis: axis.into(),
                k: (k.lo, k.hi),
                n: (n.lo, n.hi),
                m: (m.lo, m.hi),
                budget,
            };
            let g = chains::grid(&spec).runtime()?;
            let text = io::render_grid(&g, format.into());
            emit(out.as_ref(), &text).runtime()?;
            Ok(0)
        }
        Command::Verify { suite } => {
            let checks = run_suite(suite.into(), budget);
            let mut failures = 0;
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                println!("{status} {} ({})", c.name, c.detail);
                if !c.pass {
                    failures += 1;
                }
            }
            println!("{} checks, {} failed", checks.len(), failures);
            Ok(if failures == 0 { 0 } else { 1 })
        }
        Command::Enumerate {
            axis,
            k,
            n,
            m,
            cap,
            out,
        } => {
            let (k, n, m) = single_params(&k, &n, &m)?;
            let p = build_lattice(axis.into(), k, n, m, budget).runtime()?;
            let chains = chains::enumerate_maximal_chains(&p, cap).runtime()?;
            let mut text = String::new();
            for chain in &chains {
                let labels: Vec<String> = chain
                    .iter()
                    .map(|&id| {
                        p.label(id)
                            .map(str::to_owned)
                            .unwrap_or_else(|| id.to_string())
                    })
                    .collect();
                let _ = writeln!(text, "{}", labels.join(" "));
            }
            emit(out.as_ref(), &text).runtime()?;
            Ok(0)
        }
    }
}

/// Parse `argv` and run; returns the process exit code (0 success, 1 on
/// verification or runtime failure, 2 on usage errors).
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
