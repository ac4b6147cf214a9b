//! `hydromoments` command line: exact, asymptotic, and oracle expectation
//! values for D-dimensional hydrogenic states, uncertainty and entropy
//! reports, reproduction of the published convergence grid, and the full
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 numeric failure.

use clap::{Parser, Subcommand, ValueEnum};
use hydromoments::entropy::{
    bound_renyi_upper, bound_shannon_upper, bound_tsallis_lower, MomentSign,
};
use hydromoments::hydrogenic::{
    log_momentum_expectation, log_position_expectation, momentum_expectation,
    momentum_expectation_rational, position_expectation, position_expectation_rational,
};
use hydromoments::largedim::{
    log_momentum_large_d, log_position_large_d, momentum_large_d, position_large_d,
};
use hydromoments::oracle::{quad_momentum_moment, quad_position_moment, Integrand};
use hydromoments::rydberg::{mom_rydberg_fixed_d, mom_rydberg_fixed_nl_gap, pos_rydberg_fixed_d};
use hydromoments::uncertainty::{heisenberg_margins, log_uncertainty_margins, product22_closed_rational};
use hydromoments::verify::{has_failure, run_suite, Status, Suite};
use hydromoments::{rel_dev, Error, HydrogenicState, Rational, Result, Space};
use hydromoments_cli::output::{
    cells_to_csv, cells_to_json, fmt_input, fmt_sig, fmt_sig12, sort_cells, space_str, Cell,
    CellValue,
};
use hydromoments_cli::printed::{sig_count, PrintedCell, TABLE1};
use num_bigint::BigInt;
use rayon::prelude::*;

#[derive(Parser)]
#[command(
    name = "hydromoments",
    version,
    about = "Expectation values, uncertainty products, and entropy bounds for D-dimensional hydrogenic states"
)]
struct Cli {
    /// Output format for the subcommand's report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Arithmetic backend; defaults to HYDROMOMENTS_PRECISION, then float.
    #[arg(long, global = true, value_enum)]
    precision: Option<Precision>,
    /// Worker threads for sweep cells (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute expectation values for one state over one or more alphas.
    Expect(ExpectArgs),
    /// Reproduce the published convergence grid (n=2, l=0, Z=1) with a
    /// deviation annex for cells that disagree beyond 1e-4 relative.
    Table1,
    /// Heisenberg-like products and logarithmic sums against their floors.
    Uncertainty(StateArgs),
    /// Shannon/Renyi/Tsallis entropies against the variational bounds.
    Entropy(EntropyArgs),
    /// Run the verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteFlag::All)]
        suite: SuiteFlag,
    },
}

#[derive(clap::Args)]
struct ExpectArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// Dimension(s); repeat or comma-separate to sweep.
    #[arg(long = "D", value_delimiter = ',', required = true)]
    d: Vec<u32>,
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
    /// Moment order(s); repeat or comma-separate to sweep.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required_unless_present = "log",
        conflicts_with = "log"
    )]
    alpha: Vec<f64>,
    /// Logarithmic moment instead of a power.
    #[arg(long)]
    log: bool,
    #[arg(long, value_enum, default_value_t = MethodFlag::Exact)]
    method: MethodFlag,
    #[arg(long, value_enum)]
    space: SpaceFlag,
}

#[derive(clap::Args)]
struct StateArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long = "D")]
    d: u32,
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
}

#[derive(clap::Args)]
struct EntropyArgs {
    #[command(flatten)]
    state: StateArgs,
    #[arg(long, value_enum)]
    kind: KindFlag,
    /// Entropic order; required for renyi and tsallis.
    #[arg(long)]
    q: Option<f64>,
    #[arg(long, value_enum)]
    space: SpaceFlag,
    /// Moment order the variational bound is built from.
    #[arg(long, allow_negative_numbers = true)]
    bound_alpha: f64,
    /// Which moment enters the Renyi/Tsallis bound: <r^alpha> or <r^-alpha>.
    #[arg(long, value_enum, default_value_t = SignFlag::Plus)]
    moment_sign: SignFlag,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Precision {
    Float,
    Rational,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodFlag {
    Exact,
    #[value(name = "large-d")]
    LargeD,
    #[value(name = "rydberg-fixed-d")]
    RydbergFixedD,
    #[value(name = "rydberg-nl-gap")]
    RydbergNlGap,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceFlag {
    Position,
    Momentum,
}

impl From<SpaceFlag> for Space {
    fn from(s: SpaceFlag) -> Space {
        match s {
            SpaceFlag::Position => Space::Position,
            SpaceFlag::Momentum => Space::Momentum,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindFlag {
    Shannon,
    Renyi,
    Tsallis,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignFlag {
    Plus,
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteFlag {
    Specfun,
    Exact,
    Largedim,
    Rydberg,
    Uncertainty,
    Entropy,
    All,
}

impl From<SuiteFlag> for Suite {
    fn from(s: SuiteFlag) -> Suite {
        match s {
            SuiteFlag::Specfun => Suite::Specfun,
            SuiteFlag::Exact => Suite::Exact,
            SuiteFlag::Largedim => Suite::Largedim,
            SuiteFlag::Rydberg => Suite::Rydberg,
            SuiteFlag::Uncertainty => Suite::Uncertainty,
            SuiteFlag::Entropy => Suite::Entropy,
            SuiteFlag::All => Suite::All,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Domain(_) | Error::Validity(_) => 2,
                Error::Numeric(_) => 3,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let precision = resolve_precision(cli.precision)?;
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Error::validity("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::numeric(format!("thread pool: {e}")))?;
    }
    match cli.cmd {
        Cmd::Expect(args) => cmd_expect(args, cli.format, precision),
        Cmd::Table1 => cmd_table1(cli.format),
        Cmd::Uncertainty(args) => cmd_uncertainty(args, cli.format, precision),
        Cmd::Entropy(args) => cmd_entropy(args, cli.format),
        Cmd::Verify { suite } => cmd_verify(suite, cli.format),
    }
}

fn resolve_precision(flag: Option<Precision>) -> Result<Precision> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var("HYDROMOMENTS_PRECISION") {
        Ok(v) if v == "float" => Ok(Precision::Float),
        Ok(v) if v == "rational" => Ok(Precision::Rational),
        Ok(v) => Err(Error::validity(format!(
            "HYDROMOMENTS_PRECISION must be 'float' or 'rational', got '{v}'"
        ))),
        Err(_) => Ok(Precision::Float),
    }
}

/// Human-facing short number: 6 significant digits, trailing zeros trimmed.
fn fmt_human(v: f64) -> String {
    let s = fmt_sig(v, 6);
    if s.contains('.') && !s.contains('e') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

// --- expect ---

fn cmd_expect(args: ExpectArgs, format: Format, precision: Precision) -> Result<i32> {
    if precision == Precision::Rational {
        if args.method != MethodFlag::Exact {
            return Err(Error::validity("--precision rational supports --method exact only"));
        }
        if args.log {
            return Err(Error::validity(
                "logarithmic moments are transcendental; use --precision float",
            ));
        }
    }
    // Validate every state up front so rejection happens deterministically.
    for &d in &args.d {
        HydrogenicState::new(args.n, args.l, d, args.z)?;
    }
    let mut grid: Vec<(u32, Option<f64>)> = Vec::new();
    for &d in &args.d {
        if args.log {
            grid.push((d, None));
        } else {
            for &a in &args.alpha {
                grid.push((d, Some(a)));
            }
        }
    }
    let space: Space = args.space.into();
    let computed: Vec<Result<Cell>> = grid
        .par_iter()
        .map(|&(d, alpha)| expect_cell(&args, d, alpha, space, precision))
        .collect();
    let mut cells = Vec::with_capacity(computed.len());
    for c in computed {
        cells.push(c?);
    }
    sort_cells(&mut cells);
    emit_cells(&cells, format);
    Ok(0)
}

fn expect_cell(
    args: &ExpectArgs,
    d: u32,
    alpha: Option<f64>,
    space: Space,
    precision: Precision,
) -> Result<Cell> {
    let state = HydrogenicState::new(args.n, args.l, d, args.z)?;
    let (value, method) = match args.method {
        MethodFlag::Exact if precision == Precision::Rational => {
            let a = alpha.expect("log is rejected in rational mode");
            if a.fract() != 0.0 {
                return Err(Error::validity(format!(
                    "rational mode needs an integer alpha, got {a}"
                )));
            }
            let r = match space {
                Space::Position => position_expectation_rational(&state, a as i64)?,
                Space::Momentum => momentum_expectation_rational(&state, a as i64)?,
            };
            (CellValue::Exact(r.to_string()), "exact")
        }
        MethodFlag::Exact => {
            let v = match (space, alpha) {
                (Space::Position, Some(a)) => position_expectation(&state, a)?.value,
                (Space::Position, None) => log_position_expectation(&state)?.value,
                (Space::Momentum, Some(a)) => momentum_expectation(&state, a)?.value,
                (Space::Momentum, None) => log_momentum_expectation(&state)?.value,
            };
            (CellValue::Float(v), "exact")
        }
        MethodFlag::LargeD => {
            let v = match (space, alpha) {
                (Space::Position, Some(a)) => position_large_d(&state, a)?.value,
                (Space::Position, None) => log_position_large_d(&state).value,
                (Space::Momentum, Some(a)) => momentum_large_d(&state, a)?.value,
                (Space::Momentum, None) => log_momentum_large_d(&state).value,
            };
            (CellValue::Float(v), "largeD")
        }
        MethodFlag::RydbergFixedD => {
            let a = alpha.ok_or_else(|| {
                Error::validity("no Rydberg law for logarithmic moments; use exact or oracle")
            })?;
            let v = match space {
                Space::Position => pos_rydberg_fixed_d(&state, a)?.value,
                Space::Momentum => mom_rydberg_fixed_d(&state, a)?.value,
            };
            (CellValue::Float(v), "rydberg")
        }
        MethodFlag::RydbergNlGap => {
            let a = alpha.ok_or_else(|| {
                Error::validity("no Rydberg law for logarithmic moments; use exact or oracle")
            })?;
            if space == Space::Position {
                return Err(Error::validity(
                    "the printed gap law covers momentum space only",
                ));
            }
            (CellValue::Float(mom_rydberg_fixed_nl_gap(&state, a)?.value), "rydberg")
        }
        MethodFlag::Oracle => {
            let integrand = match alpha {
                Some(a) => Integrand::Power(a),
                None => Integrand::Log,
            };
            let r = match space {
                Space::Position => quad_position_moment(&state, integrand)?,
                Space::Momentum => quad_momentum_moment(&state, integrand)?,
            };
            (CellValue::Float(r.value), "oracle")
        }
    };
    Ok(Cell {
        n: args.n,
        l: args.l,
        d,
        z: args.z,
        alpha,
        space,
        method,
        value,
        reference: None,
        rel_deviation: None,
    })
}

fn emit_cells(cells: &[Cell], format: Format) {
    match format {
        Format::Csv => print!("{}", cells_to_csv(cells)),
        Format::Json => print!("{}", cells_to_json(cells)),
        Format::Table => {
            println!(
                "{:>4} {:>4} {:>5} {:>6} {:>8}  {:<9} {:<8} {}",
                "n", "l", "D", "Z", "alpha", "space", "method", "value"
            );
            for c in cells {
                let alpha = match c.alpha {
                    Some(a) => fmt_input(a),
                    None => "log".to_string(),
                };
                let value = match &c.value {
                    CellValue::Float(v) => fmt_sig12(*v),
                    CellValue::Exact(s) => s.clone(),
                };
                println!(
                    "{:>4} {:>4} {:>5} {:>6} {:>8}  {:<9} {:<8} {}",
                    c.n,
                    c.l,
                    c.d,
                    fmt_input(c.z),
                    alpha,
                    space_str(c.space),
                    c.method,
                    value
                );
            }
        }
    }
}

// --- table1 ---

const ANNEX_THRESHOLD: f64 = 1e-4;

fn table1_value(pc: &PrintedCell) -> Result<f64> {
    let state = HydrogenicState::new(2, 0, pc.d, 1.0)?;
    Ok(match (pc.space, pc.asymptotic) {
        (Space::Position, true) => position_large_d(&state, pc.alpha)?.value,
        (Space::Momentum, true) => momentum_large_d(&state, pc.alpha)?.value,
        (Space::Position, false) => position_expectation(&state, pc.alpha)?.value,
        (Space::Momentum, false) => momentum_expectation(&state, pc.alpha)?.value,
    })
}

fn cmd_table1(format: Format) -> Result<i32> {
    let computed: Vec<Result<f64>> = TABLE1.par_iter().map(table1_value).collect();
    let mut rows: Vec<(PrintedCell, f64)> = Vec::with_capacity(TABLE1.len());
    for (pc, v) in TABLE1.iter().zip(computed) {
        rows.push((*pc, v?));
    }
    match format {
        Format::Table => {
            println!("Convergence grid, n = 2, l = 0, Z = 1 (computed vs printed)");
            println!(
                "{:>4} {:>6}  {:<9} {:<6} {:<18} {:>12} {:>12} {:>9}",
                "D", "alpha", "space", "column", "value", "at-print", "printed", "rel-dev"
            );
            for (pc, v) in &rows {
                println!(
                    "{:>4} {:>6}  {:<9} {:<6} {:<18} {:>12} {:>12} {:>9}",
                    pc.d,
                    fmt_input(pc.alpha),
                    space_str(pc.space),
                    if pc.asymptotic { "asymp" } else { "exact" },
                    fmt_sig12(*v),
                    fmt_sig(*v, sig_count(pc.text)),
                    pc.text,
                    format!("{:.1e}", rel_dev(*v, pc.value)),
                );
            }
            let annex: Vec<_> =
                rows.iter().filter(|(pc, v)| rel_dev(*v, pc.value) > ANNEX_THRESHOLD).collect();
            if annex.is_empty() {
                println!("\ndeviation annex: empty (all cells within 1e-4 relative)");
            } else {
                println!("\ndeviation annex (relative deviation beyond 1e-4):");
                for (pc, v) in annex {
                    println!(
                        "  {} {}  D={} alpha={}: computed {} vs printed {} (rel {:.1e})",
                        space_str(pc.space),
                        if pc.asymptotic { "asymp" } else { "exact" },
                        pc.d,
                        fmt_input(pc.alpha),
                        fmt_sig12(*v),
                        pc.text,
                        rel_dev(*v, pc.value),
                    );
                }
            }
        }
        Format::Csv | Format::Json => {
            let mut cells: Vec<Cell> = rows
                .iter()
                .map(|(pc, v)| Cell {
                    n: 2,
                    l: 0,
                    d: pc.d,
                    z: 1.0,
                    alpha: Some(pc.alpha),
                    space: pc.space,
                    method: if pc.asymptotic { "largeD" } else { "exact" },
                    value: CellValue::Float(*v),
                    reference: Some(pc.value),
                    rel_deviation: Some(rel_dev(*v, pc.value)),
                })
                .collect();
            sort_cells(&mut cells);
            emit_cells(&cells, format);
        }
    }
    Ok(0)
}

// --- uncertainty ---

fn rational_square(num: i64, den: i64) -> Rational {
    let r = Rational::new(BigInt::from(num), BigInt::from(den));
    r.clone() * r
}

fn cmd_uncertainty(args: StateArgs, format: Format, precision: Precision) -> Result<i32> {
    let state = HydrogenicState::new(args.n, args.l, args.d, args.z)?;
    let (kennard, refined) = heisenberg_margins(&state);
    // The logarithmic sum degenerates for (n=1, D=2); report the product part anyway.
    let logs = match log_uncertainty_margins(&state) {
        Ok((log_refined, log_general)) => Ok((log_refined, log_general)),
        Err(Error::Validity(msg)) => Err(msg),
        Err(e) => return Err(e),
    };
    let exact_product = product22_closed_rational(&state);
    let exact_kennard = rational_square(i64::from(args.d), 2);
    let exact_refined = rational_square(i64::from(args.d) + 2 * i64::from(args.l), 2);
    match format {
        Format::Csv => {
            return Err(Error::validity(
                "csv applies to expectation-value streams; use --format table or json",
            ))
        }
        Format::Json => {
            let product = match precision {
                Precision::Rational => format!("\"{exact_product}\""),
                Precision::Float => fmt_sig12(kennard.product_value),
            };
            let rec = |kind: &str, r: &hydromoments::uncertainty::UncertaintyRecord| {
                format!(
                    "{{\"kind\":\"{kind}\",\"value\":{},\"bound\":{},\"margin\":{},\"satisfied\":{}}}",
                    fmt_sig12(r.product_value),
                    fmt_sig12(r.bound),
                    fmt_sig12(r.margin),
                    r.satisfied
                )
            };
            let mut checks = vec![rec("kennard", &kennard), rec("central_refined", &refined)];
            let log_error = match &logs {
                Ok((log_refined, log_general)) => {
                    checks.push(rec("log_refined", log_refined));
                    checks.push(rec("log_general", log_general));
                    "null".to_string()
                }
                Err(msg) => serde_json::Value::String(msg.clone()).to_string(),
            };
            println!(
                "{{\"n\":{},\"l\":{},\"d\":{},\"z\":{},\"product\":{},\"checks\":[{}],\"log_error\":{}}}",
                args.n,
                args.l,
                args.d,
                fmt_input(args.z),
                product,
                checks.join(","),
                log_error
            );
        }
        Format::Table => {
            println!("state n={} l={} D={} Z={}", args.n, args.l, args.d, fmt_input(args.z));
            match precision {
                Precision::Rational => {
                    println!(
                        "  <r^2><p^2> = {exact_product}   kennard bound {exact_kennard}   refined bound {exact_refined}"
                    );
                }
                Precision::Float => {
                    println!("  <r^2><p^2> = {}", fmt_human(kennard.product_value));
                }
            }
            let line = |label: &str, r: &hydromoments::uncertainty::UncertaintyRecord| {
                println!(
                    "  {label} bound = {}   margin = {}   {}",
                    fmt_human(r.bound),
                    fmt_human(r.margin),
                    if r.satisfied { "satisfied" } else { "VIOLATED" }
                );
            };
            line("kennard (D^2/4)", &kennard);
            line("refined ((D/2+l)^2)", &refined);
            match &logs {
                Ok((log_refined, log_general)) => {
                    println!("  <ln r>+<ln p> = {}", fmt_human(log_refined.product_value));
                    line("log refined (psi((D+2l)/4)+ln 2)", log_refined);
                    line("log general (psi(D/4)+ln 2)", log_general);
                }
                Err(msg) => println!("  logarithmic sum unavailable: {msg}"),
            }
        }
    }
    Ok(0)
}

// --- entropy ---

fn cmd_entropy(args: EntropyArgs, format: Format) -> Result<i32> {
    let state = HydrogenicState::new(args.state.n, args.state.l, args.state.d, args.state.z)?;
    let space: Space = args.space.into();
    let sign = match args.moment_sign {
        SignFlag::Plus => MomentSign::Plus,
        SignFlag::Minus => MomentSign::Minus,
    };
    let integer_alpha = || -> Result<u32> {
        if args.bound_alpha.fract() != 0.0 || args.bound_alpha <= 0.0 {
            return Err(Error::validity(format!(
                "Renyi/Tsallis bounds need a positive integer --bound-alpha, got {}",
                args.bound_alpha
            )));
        }
        Ok(args.bound_alpha as u32)
    };
    let need_q = || -> Result<f64> {
        args.q.ok_or_else(|| Error::validity("--q is required for renyi and tsallis"))
    };
    let (kind_name, report) = match args.kind {
        KindFlag::Shannon => {
            ("shannon", bound_shannon_upper(&state, args.bound_alpha, space)?)
        }
        KindFlag::Renyi => {
            ("renyi", bound_renyi_upper(&state, need_q()?, integer_alpha()?, sign, space)?)
        }
        KindFlag::Tsallis => {
            ("tsallis", bound_tsallis_lower(&state, need_q()?, integer_alpha()?, sign, space)?)
        }
    };
    let q = report.inputs.q;
    // Tsallis is bounded through W_q = 1 + (1-q) T_q.
    let entropic_moment = match (args.kind, report.entropy) {
        (KindFlag::Tsallis, Some(e)) => Some(1.0 + (1.0 - q) * e.value),
        _ => None,
    };
    match format {
        Format::Csv => {
            return Err(Error::validity(
                "csv applies to expectation-value streams; use --format table or json",
            ))
        }
        Format::Json => {
            let opt = |o: Option<f64>| o.map(fmt_sig12).unwrap_or_else(|| "null".to_string());
            let sat = report
                .satisfied
                .map(|b| b.to_string())
                .unwrap_or_else(|| "null".to_string());
            println!(
                "{{\"n\":{},\"l\":{},\"d\":{},\"z\":{},\"kind\":\"{}\",\"q\":{},\"space\":\"{}\",\"bound_alpha\":{},\"moment_sign\":\"{}\",\"direction\":\"{}\",\"entropy\":{},\"entropic_moment\":{},\"bound\":{},\"satisfied\":{}}}",
                args.state.n,
                args.state.l,
                args.state.d,
                fmt_input(args.state.z),
                kind_name,
                fmt_input(q),
                space_str(space),
                fmt_input(args.bound_alpha),
                match sign {
                    MomentSign::Plus => "plus",
                    MomentSign::Minus => "minus",
                },
                match report.direction {
                    hydromoments::entropy::Direction::Upper => "upper",
                    hydromoments::entropy::Direction::Lower => "lower",
                },
                opt(report.entropy.map(|e| e.value)),
                opt(entropic_moment),
                fmt_sig12(report.bound_value),
                sat
            );
        }
        Format::Table => {
            println!(
                "state n={} l={} D={} Z={}   {} {}",
                args.state.n,
                args.state.l,
                args.state.d,
                fmt_input(args.state.z),
                kind_name,
                space_str(space)
            );
            let verdict = match report.satisfied {
                Some(true) => "satisfied",
                Some(false) => "VIOLATED",
                None => "bound only (entropy quadrature needs l = 0)",
            };
            match args.kind {
                KindFlag::Shannon => println!(
                    "  S = {}   bound = {} (upper, from alpha = {})   {}",
                    report.entropy.map(|e| fmt_human(e.value)).unwrap_or_else(|| "-".into()),
                    fmt_human(report.bound_value),
                    fmt_input(args.bound_alpha),
                    verdict
                ),
                KindFlag::Renyi => println!(
                    "  R_{} = {}   bound = {} (upper, from alpha = {}, {})   {}",
                    fmt_input(q),
                    report.entropy.map(|e| fmt_human(e.value)).unwrap_or_else(|| "-".into()),
                    fmt_human(report.bound_value),
                    fmt_input(args.bound_alpha),
                    match sign {
                        MomentSign::Plus => "plus",
                        MomentSign::Minus => "minus",
                    },
                    verdict
                ),
                KindFlag::Tsallis => println!(
                    "  T_{} = {}   W_{} = {} >= bound {} (lower)   {}",
                    fmt_input(q),
                    report.entropy.map(|e| fmt_human(e.value)).unwrap_or_else(|| "-".into()),
                    fmt_input(q),
                    entropic_moment.map(fmt_human).unwrap_or_else(|| "-".into()),
                    fmt_human(report.bound_value),
                    verdict
                ),
            }
        }
    }
    Ok(0)
}

// --- verify ---

fn cmd_verify(suite: SuiteFlag, format: Format) -> Result<i32> {
    let s: Suite = suite.into();
    let checks = run_suite(s);
    match format {
        Format::Csv => {
            return Err(Error::validity(
                "csv applies to expectation-value streams; use --format table or json",
            ))
        }
        Format::Json => {
            let esc = |t: &str| serde_json::Value::String(t.to_string()).to_string();
            let body: Vec<String> = checks
                .iter()
                .map(|c| {
                    format!(
                        "{{\"id\":{},\"status\":\"{}\",\"observed\":{},\"required\":{},\"note\":{}}}",
                        esc(&c.id),
                        c.status.as_str(),
                        esc(&c.observed),
                        esc(&c.required),
                        esc(&c.note)
                    )
                })
                .collect();
            println!("{{\"suite\":\"{}\",\"checks\":[{}]}}", s.name(), body.join(","));
        }
        Format::Table => {
            for c in &checks {
                println!("[{}] {}", c.status.as_str(), c.id);
                println!("       observed: {}", c.observed);
                println!("       required: {}", c.required);
                println!("       note: {}", c.note);
            }
            let count = |st: Status| checks.iter().filter(|c| c.status == st).count();
            println!(
                "suite {}: {} checks — {} PASS, {} WARN, {} FAIL",
                s.name(),
                checks.len(),
                count(Status::Pass),
                count(Status::Warn),
                count(Status::Fail)
            );
        }
    }
    Ok(if has_failure(&checks) { 1 } else { 0 })
}
