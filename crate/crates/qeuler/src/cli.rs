//! Command-line front door.
//!
//! Exit statuses are part of the contract: 0 on success and passing
//! verifications, 1 when a verification or certificate fails (or an internal
//! invariant breaks), 2 on usage and domain errors.

use crate::analytic::{euler_series_with_bound, SeriesConfig};
use crate::euler::{
    carlitz_beta, carlitz_beta_polynomial, carlitz_q_euler, euler_q_polynomial, euler_q_recurrence,
};
use crate::padic::{convergence_certificate, Measure, PrimeContext};
use crate::verify::{
    suite_all, suite_eq16, suite_eq16_1, suite_eq19, suite_eq21, SuiteOutcome,
    DEFAULT_EQ16_N_MAX, DEFAULT_EVEN_N_MAX, DEFAULT_M_MAX, DEFAULT_ODD_N_MAX,
};
use crate::{fmt_rational, parse_rational, BigInt, BigRational, Error};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "qeuler",
    version,
    about = "q-Euler numbers and polynomials over Q(q): tables, exact identity suites, p-adic certificates, series oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a table of q-Euler numbers or Carlitz comparison sequences
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        /// Largest index to tabulate
        #[arg(long)]
        n_max: usize,
        /// Rational parameter u (carlitz-h only), written P/Q
        #[arg(long)]
        u: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate E_{n,q} (or E_{n,q}(x)) at an exact rational q, or run the
    /// truncated complex series
    Eval {
        #[arg(long)]
        n: usize,
        /// Exact rational q, written P/Q
        #[arg(long)]
        q_exact: Option<String>,
        /// Complex q, written RE,IM as decimals; requires --terms
        #[arg(long)]
        q_complex: Option<String>,
        /// Truncation index of the series (with --q-complex)
        #[arg(long)]
        terms: Option<usize>,
        /// Integer shift x; evaluates the polynomial E_{n,q}(x) (exact mode only)
        #[arg(long)]
        x: Option<usize>,
    },
    /// Run exact identity suites and emit the report stream
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Emit a p-adic convergence certificate for one Riemann-sum family
    Padic {
        /// Odd prime p
        #[arg(long)]
        p: u64,
        /// Rational q with v_p(q - 1) >= 1, written P/Q
        #[arg(long)]
        q: String,
        /// Refinement depth N_max
        #[arg(long)]
        n_max_level: u32,
        /// Moment m of the integrand [x + shift]_q^m
        #[arg(long)]
        moment: usize,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, value_enum, default_value_t = MeasureArg::Fermionic)]
        measure: MeasureArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    EulerQ,
    BetaQ,
    CarlitzH,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Eq16,
    Eq19,
    Eq21,
    #[value(name = "eq16-1")]
    Eq16_1,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Fermionic,
    Bosonic,
}

/// Parse and execute; returns the process exit status.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvariantViolation(_) => 1,
                _ => 2,
            }
        }
    }
}

fn execute(cli: Cli) -> crate::Result<i32> {
    match cli.command {
        Command::Table { kind, n_max, u, format, out } => cmd_table(kind, n_max, u, format, out),
        Command::Eval { n, q_exact, q_complex, terms, x } => cmd_eval(n, q_exact, q_complex, terms, x),
        Command::Verify { suite, n_max, m_max } => cmd_verify(suite, n_max, m_max),
        Command::Padic { p, q, n_max_level, moment, shift, measure } => {
            cmd_padic(p, q, n_max_level, moment, shift, measure)
        }
    }
}

fn cmd_table(
    kind: TableKind,
    n_max: usize,
    u: Option<String>,
    format: OutputFormat,
    out: Option<PathBuf>,
) -> crate::Result<i32> {
    let rendered = match kind {
        TableKind::EulerQ => {
            let t = euler_q_recurrence(n_max);
            render_table(format, t.to_json(), || (t.to_csv(), t.to_latex(), t.to_text()))
        }
        TableKind::BetaQ => {
            let t = carlitz_beta(n_max);
            render_table(format, t.to_json(), || (t.to_csv(), t.to_latex(), t.to_text()))
        }
        TableKind::CarlitzH => {
            let u = u.ok_or_else(|| {
                Error::BadParameter("--u P/Q is required for --kind carlitz-h".into())
            })?;
            let u = parse_rational(&u)?;
            let t = carlitz_q_euler(u, n_max)?;
            render_table(format, t.to_json(), || (t.to_csv(), t.to_latex(), t.to_text()))
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Ok(1);
            }
        }
        None => print!("{rendered}"),
    }
    Ok(0)
}

fn render_table(
    format: OutputFormat,
    json: serde_json::Value,
    others: impl FnOnce() -> (String, String, String),
) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&json).unwrap()),
        OutputFormat::Csv => others().0,
        OutputFormat::Latex => others().1,
        OutputFormat::Text => others().2,
    }
}

fn cmd_eval(
    n: usize,
    q_exact: Option<String>,
    q_complex: Option<String>,
    terms: Option<usize>,
    x: Option<usize>,
) -> crate::Result<i32> {
    match (q_exact, q_complex) {
        (Some(qs), None) => {
            if terms.is_some() {
                return Err(Error::BadParameter("--terms applies only to --q-complex".into()));
            }
            let qv = parse_rational(&qs)?;
            let table = euler_q_recurrence(n);
            let value = match x {
                Some(x0) => euler_q_polynomial(n, &table).substitute(x0),
                None => table.get(n).clone(),
            };
            println!("{}", fmt_rational(&value.eval(&qv)?));
            Ok(0)
        }
        (None, Some(qc)) => {
            if x.is_some() {
                return Err(Error::BadParameter(
                    "--x requires --q-exact; the series oracle covers the numbers only".into(),
                ));
            }
            let terms = terms.ok_or_else(|| {
                Error::BadParameter("--terms M is required with --q-complex".into())
            })?;
            let (re, im) = parse_complex(&qc)?;
            // constructing the config enforces |q| < 1
            let cfg = SeriesConfig::new(re, im, terms, f64::MAX)?;
            let (v, bound) = euler_series_with_bound(n, cfg.q_complex(), terms);
            println!("{:.15e} {:+.15e}i  tail_bound {:.3e}", v.re, v.im, bound);
            Ok(0)
        }
        _ => Err(Error::BadParameter(
            "exactly one of --q-exact or --q-complex is required".into(),
        )),
    }
}

fn cmd_verify(suite: Suite, n_max: Option<usize>, m_max: Option<usize>) -> crate::Result<i32> {
    let outcome: SuiteOutcome = match suite {
        Suite::Eq16 => {
            if m_max.is_some() {
                return Err(Error::BadParameter("--m-max does not apply to eq16".into()));
            }
            suite_eq16(n_max.unwrap_or(DEFAULT_EQ16_N_MAX))?
        }
        Suite::Eq19 => suite_eq19(
            n_max.unwrap_or(DEFAULT_ODD_N_MAX),
            m_max.unwrap_or(DEFAULT_M_MAX),
        )?,
        Suite::Eq21 => suite_eq21(
            n_max.unwrap_or(DEFAULT_EVEN_N_MAX),
            m_max.unwrap_or(DEFAULT_M_MAX),
        )?,
        Suite::Eq16_1 => suite_eq16_1(
            n_max.unwrap_or(DEFAULT_ODD_N_MAX),
            m_max.unwrap_or(DEFAULT_M_MAX),
        )?,
        Suite::All => {
            if n_max.is_some() || m_max.is_some() {
                return Err(Error::BadParameter(
                    "--n-max/--m-max are fixed to the default ranges for --suite all".into(),
                ));
            }
            suite_all()?
        }
    };
    println!("{}", serde_json::to_string_pretty(&outcome.to_json()).unwrap());
    Ok(if outcome.all_pass() { 0 } else { 1 })
}

fn cmd_padic(
    p: u64,
    q: String,
    n_max_level: u32,
    moment: usize,
    shift: usize,
    measure: MeasureArg,
) -> crate::Result<i32> {
    let qv = parse_rational(&q)?;
    let ctx = PrimeContext::new(p, qv, n_max_level)?;
    let (measure, target) = match measure {
        MeasureArg::Fermionic => {
            let table = euler_q_recurrence(moment);
            let exact = match shift {
                0 => table.get(moment).clone(),
                x0 => euler_q_polynomial(moment, &table).substitute(x0),
            };
            (Measure::Fermionic, exact.eval(ctx.q_value())?)
        }
        MeasureArg::Bosonic => {
            let table = carlitz_beta(moment);
            let exact = carlitz_beta_polynomial(moment, &table).substitute(shift);
            (Measure::Bosonic, exact.eval(ctx.q_value())?)
        }
    };
    let cert = convergence_certificate(&ctx, measure, moment, shift, &target);
    println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
    Ok(if cert.pass { 0 } else { 1 })
}

/// Parse `RE,IM` with decimal components into exact rationals.
fn parse_complex(s: &str) -> crate::Result<(BigRational, BigRational)> {
    let (re, im) = s.split_once(',').ok_or_else(|| {
        Error::BadParameter(format!("expected complex `RE,IM`, got `{s}`"))
    })?;
    Ok((parse_decimal(re.trim())?, parse_decimal(im.trim())?))
}

/// Exact rational value of a decimal literal like `-0.25`.
fn parse_decimal(s: &str) -> crate::Result<BigRational> {
    let err = || Error::BadParameter(format!("expected decimal number, got `{s}`"));
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| err())?
    };
    let mut den = BigInt::one();
    for c in frac_part.chars() {
        num = num * 10 + (c.to_digit(10).unwrap() as i64);
        den *= 10;
    }
    if negative {
        num = -num;
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal("0.5").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_decimal("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert_eq!(parse_decimal("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(parse_decimal(".5").unwrap(), BigRational::new(1.into(), 2.into()));
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("1e3").is_err());
        assert!(parse_decimal("1.2.3").is_err());
    }

    #[test]
    fn complex_parsing() {
        let (re, im) = parse_complex("0.3,-0.2").unwrap();
        assert_eq!(re, BigRational::new(3.into(), 10.into()));
        assert_eq!(im, BigRational::new((-1).into(), 5.into()));
        assert!(parse_complex("0.3").is_err());
    }
}
