use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use recip_pascal::closed_forms::{self, truncation_allowed, Family, FormulaSet};
use recip_pascal::matrix::DenseMatrix;
use recip_pascal::q_closed_forms::{qgenerate, qgenerate_at};
use recip_pascal::render::{self, OutputFormat, TextScalar};
use recip_pascal::scalar::{int, ExactRational};
use recip_pascal::verify::{self, VerificationReport, Q_SYMBOLIC_MAX, Q_TO_1_MAX};

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "recip-pascal",
    version,
    about = "Exact reciprocal Pascal factorizations and their q-analogues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formulas {
    Corrected,
    Printed,
}

impl From<Formulas> for FormulaSet {
    fn from(f: Formulas) -> Self {
        match f {
            Formulas::Corrected => FormulaSet::Corrected,
            Formulas::Printed => FormulaSet::Printed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Classical,
    QSymbolic,
    QNumeric,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print one matrix family.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// `none`, `symbolic`, or a rational evaluation point such as `-3/7`.
        #[arg(long, default_value = "none", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "pretty")]
        format: OutputFormat,
        #[arg(long, value_enum, default_value = "corrected")]
        formulas: Formulas,
        /// Print only the leading K x K block.
        #[arg(long, value_name = "K")]
        truncate: Option<usize>,
        /// Print the exact inverse instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Run identity checks and print one JSON report per line.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Symbolic q dimension for `--suite all` (default min(n, 6)).
        #[arg(long)]
        n_symbolic: Option<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "corrected")]
        formulas: Formulas,
    },
    /// Factor M by elimination and compare with the closed forms.
    Lu {
        #[arg(long)]
        n: usize,
    },
}

enum QMode {
    Classical,
    Symbolic,
    At(ExactRational),
}

fn parse_q_mode(s: &str) -> Result<QMode, String> {
    match s {
        "none" => Ok(QMode::Classical),
        "symbolic" => Ok(QMode::Symbolic),
        _ => {
            let q0 =
                ExactRational::parse_text(s).map_err(|_| format!("invalid --q value {s:?}"))?;
            let excluded = [0, 1, -1].into_iter().any(|v| q0 == int(v));
            if excluded {
                return Err(format!("--q {s} is excluded (q0 must avoid 0, 1 and -1)"));
            }
            Ok(QMode::At(q0))
        }
    }
}

fn emit<T: TextScalar>(
    mut m: DenseMatrix<T>,
    inverse: bool,
    rows: usize,
    format: OutputFormat,
) -> Result<String, String> {
    if inverse {
        m = m.invert_gauss_jordan().map_err(|e| e.to_string())?;
    }
    if rows < m.rows() {
        m = m.leading_block(rows);
    }
    Ok(render::render(&m, format))
}

fn cmd_gen(
    family: Family,
    n: usize,
    q: &str,
    format: OutputFormat,
    formulas: FormulaSet,
    truncate: Option<usize>,
    inverse: bool,
) -> Result<String, String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    let rows = truncate.unwrap_or(n);
    if rows == 0 || rows > n {
        return Err(format!("--truncate must lie in 1..={n}"));
    }
    if !truncation_allowed(family, n, rows) {
        return Err(format!(
            "refusing to truncate {family}: it depends on its dimension, generate it with --n {rows} instead"
        ));
    }
    match parse_q_mode(q)? {
        QMode::Classical => emit(
            closed_forms::generate(family, n, formulas),
            inverse,
            rows,
            format,
        ),
        QMode::Symbolic => emit(qgenerate(family, n, formulas), inverse, rows, format),
        QMode::At(q0) => emit(
            qgenerate_at(family, n, formulas, &q0),
            inverse,
            rows,
            format,
        ),
    }
}

fn cmd_verify(
    suite: Suite,
    n: usize,
    n_symbolic: Option<usize>,
    trials: usize,
    seed: u64,
    formulas: FormulaSet,
) -> Result<Vec<VerificationReport>, String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    if trials == 0 {
        return Err("--trials must be at least 1".into());
    }
    if n_symbolic == Some(0) {
        return Err("--n-symbolic must be at least 1".into());
    }
    Ok(match suite {
        Suite::Classical => verify::run_classical_suite(n, formulas),
        Suite::QSymbolic => {
            let mut r = verify::run_q_symbolic_suite(n, formulas);
            r.extend(verify::run_q_to_1_suite(n.min(Q_TO_1_MAX), formulas));
            r
        }
        Suite::QNumeric => verify::run_q_numeric_suite(n, trials, seed, formulas),
        Suite::All => {
            let mut r = verify::run_classical_suite(n, formulas);
            let n_sym = n_symbolic.unwrap_or(n.min(Q_SYMBOLIC_MAX));
            r.extend(verify::run_q_suite(n_sym, n, trials, seed, formulas));
            r
        }
    })
}

fn cmd_lu(n: usize) -> Result<(String, bool), String> {
    if n == 0 {
        return Err("--n must be at least 1".into());
    }
    let m = closed_forms::gen_m(n);
    let lu = match m.lu_doolittle() {
        Ok(lu) => lu,
        Err(e) => return Ok((format!("elimination failed: {e}"), false)),
    };
    let matched = lu.l == closed_forms::gen_l(n) && lu.u == closed_forms::gen_u(n);
    let text = format!(
        "L={}\nU={}\n{}",
        render::to_nested(&lu.l),
        render::to_nested(&lu.u),
        if matched { "MATCH" } else { "MISMATCH" }
    );
    Ok((text, matched))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen {
            family,
            n,
            q,
            format,
            formulas,
            truncate,
            inverse,
        } => match cmd_gen(family, n, &q, format, formulas.into(), truncate, inverse) {
            Ok(text) => {
                let _ = writeln!(out, "{text}");
                ExitCode::SUCCESS
            }
            Err(msg) => usage_error(&msg),
        },
        Command::Verify {
            suite,
            n,
            n_symbolic,
            trials,
            seed,
            formulas,
        } => match cmd_verify(suite, n, n_symbolic, trials, seed, formulas.into()) {
            Ok(reports) => {
                for r in &reports {
                    let _ = writeln!(out, "{}", r.to_json_line());
                }
                if verify::all_passed(&reports) {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(msg) => usage_error(&msg),
        },
        Command::Lu { n } => match cmd_lu(n) {
            Ok((text, matched)) => {
                let _ = writeln!(out, "{text}");
                if matched {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(msg) => usage_error(&msg),
        },
    }
}
