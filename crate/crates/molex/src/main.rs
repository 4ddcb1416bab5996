use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use molex::bounds::{BoundCase, BoundReport, Direction, Regime};
use molex::formats::parse_graphs;
use molex::graph::MolecularGraph;
use molex::indices::{evaluate, IndexKind, IndexSpec};
use molex::lemmas::{
    alpha_grid, find_x0, k_grid, lemma1_orderings, phi_chain_check, platt_exception_sums,
    sign_chart_check, Violation,
};
use molex::reduction::{coefficient, Variant, REDUCED_PAIRS};
use molex::search::{build_extremal, exhaustive_verify, ExtremalOutcome};

const DEFAULT_TOL: f64 = 1e-9;
const DEFAULT_ALPHA_GRID: [f64; 12] = [
    -1.0, -0.7, -0.5, -0.3, -0.1, 0.3, 0.5, 0.7, 1.3, 1.5, 1.7, 2.0,
];
const DEFAULT_K_GRID: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 1.0];

#[derive(Parser)]
#[command(
    name = "molex",
    version,
    about = "Molecular-graph descriptors, sharp bounds, and exhaustive verification"
)]
struct Cli {
    /// Worker threads for enumeration and verification sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Equality/violation tolerance (overrides MOLEX_TOL; default 1e-9).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Chi,
    Platt,
    Oga,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Chi => Variant::Chi,
            VariantArg::Platt => Variant::Platt,
            VariantArg::Oga => Variant::Oga,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Neg,
    Mid,
    High,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an index over graphs from a file (graph6 lines or an
    /// `n m` adjacency block); `-` reads standard input.
    Compute {
        /// One of: chi, platt-general, oga, zagreb1, platt, harmonic,
        /// sum-connectivity, randic, hyper-zagreb, reformulated-zagreb.
        #[arg(long)]
        index: String,
        /// Exponent for chi / platt-general.
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Exponent for oga.
        #[arg(long)]
        k: Option<f64>,
        #[arg(long = "in")]
        input: String,
    },
    /// Exhaustively verify the refined bounds and equality conditions
    /// over all connected molecular graphs in a vertex range.
    Verify {
        /// Inclusive vertex range, e.g. `5..8`, or a single value.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long)]
        variant: VariantArg,
        /// Explicit exponents (repeatable) for chi / platt.
        #[arg(long, allow_negative_numbers = true)]
        alpha: Vec<f64>,
        /// Explicit exponents (repeatable) for oga.
        #[arg(long)]
        k: Vec<f64>,
        /// Use the built-in exponent grid.
        #[arg(long, value_parser = ["default"])]
        alpha_grid: Option<String>,
        /// Use the built-in k grid.
        #[arg(long, value_parser = ["default"])]
        k_grid: Option<String>,
    },
    /// Emit the coefficient charts, the x0 root, and the ordering, sign,
    /// and chain checks.
    Lemmas {
        #[arg(long, default_value_t = 1e-3)]
        grid_step: f64,
    },
    /// Construct an equality configuration at (n, m), or report
    /// INFEASIBLE with the census argument.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        variant: VariantArg,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long)]
        k: Option<f64>,
        /// Selects a representative exponent when none is given
        /// (neg: -0.5, mid: 0.5, high: 2).
        #[arg(long)]
        regime: Option<RegimeArg>,
        /// Must match (m + n) mod 3 when given.
        #[arg(long)]
        residue: Option<u8>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad range `{s}`"))?;
        let hi: usize = hi
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| format!("bad range `{s}`"))?;
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok((lo, hi))
    } else {
        let v: usize = s.trim().parse().map_err(|_| format!("bad range `{s}`"))?;
        Ok((v, v))
    }
}

/// `value` rounded to `sig` significant digits, plain decimal notation.
fn fmt_sig(value: f64, sig: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let exp = value.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    format!("{value:.decimals$}")
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn tolerance(flag: Option<f64>) -> Result<f64, String> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("MOLEX_TOL") {
        Ok(raw) => raw
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("MOLEX_TOL is not a number: `{raw}`")),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn read_input(path: &str) -> Result<Vec<MolecularGraph>, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    parse_graphs(&text).map_err(|e| e.to_string())
}

fn index_spec(name: &str, alpha: Option<f64>, k: Option<f64>) -> Result<IndexSpec, String> {
    let kind = [
        IndexKind::GeneralSumConnectivity,
        IndexKind::GeneralPlatt,
        IndexKind::Oga,
        IndexKind::FirstZagreb,
        IndexKind::Platt,
        IndexKind::Harmonic,
        IndexKind::SumConnectivity,
        IndexKind::Randic,
        IndexKind::HyperZagreb,
        IndexKind::ReformulatedZagreb,
    ]
    .into_iter()
    .find(|kd| kd.name() == name)
    .ok_or_else(|| format!("unknown index `{name}`"))?;
    let parameter = match kind {
        IndexKind::Oga => k,
        _ => alpha,
    };
    IndexSpec::new(kind, parameter).map_err(|e| e.to_string())
}

fn report_row(r: &BoundReport) -> String {
    let regime = match r.case.regime {
        Regime::NegAlpha => "neg",
        Regime::MidAlpha => "mid",
        Regime::HighAlpha => "high",
        Regime::OgaK => "oga-k",
    };
    let direction = match r.case.direction {
        Direction::Lower => "lower",
        Direction::Upper => "upper",
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.graph6,
        r.n,
        r.m,
        r.case.variant.name(),
        fmt_sig(r.case.parameter, 9),
        r.case.residue,
        regime,
        direction,
        fmt_sig(r.value, 9),
        fmt_sig(r.bound, 9),
        fmt_sig(r.gap, 9),
        r.equality,
        r.condition_met
    )
}

fn cmd_compute(index: &str, alpha: Option<f64>, k: Option<f64>, input: &str) -> ExitCode {
    let spec = match index_spec(index, alpha, k) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let graphs = match read_input(input) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    println!("graph6,n,m,index,parameter,value");
    for g in &graphs {
        let value = match evaluate(g, &spec) {
            Ok(v) => v,
            Err(e) => return usage_error(e),
        };
        let parameter = spec.parameter().map(|p| fmt_sig(p, 9)).unwrap_or_default();
        println!(
            "{},{},{},{},{},{}",
            molex::formats::to_graph6(g),
            g.n(),
            g.m(),
            spec.kind().name(),
            parameter,
            fmt_sig(value, 9)
        );
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    n: (usize, usize),
    variant: Variant,
    alpha: &[f64],
    k: &[f64],
    alpha_grid_flag: bool,
    k_grid_flag: bool,
    tol: f64,
) -> ExitCode {
    let (n_lo, n_hi) = n;
    if n_lo < 5 || n_hi > 12 {
        return usage_error(format!("vertex range {n_lo}..{n_hi} outside 5..12"));
    }
    let parameters: Vec<f64> = match variant {
        Variant::Oga => {
            if k_grid_flag || k.is_empty() {
                DEFAULT_K_GRID.to_vec()
            } else {
                k.to_vec()
            }
        }
        _ => {
            if alpha_grid_flag || alpha.is_empty() {
                DEFAULT_ALPHA_GRID.to_vec()
            } else {
                alpha.to_vec()
            }
        }
    };
    let mut cases = Vec::new();
    for &p in &parameters {
        for residue in 0..3u8 {
            match BoundCase::new(variant, p, residue) {
                Ok(case) => cases.push(case),
                Err(e) => return usage_error(e),
            }
        }
    }
    let summaries = match exhaustive_verify(n_lo, n_hi, &cases, tol) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    println!("{}", serde_json::to_string_pretty(&summaries).unwrap());
    let mut failed = false;
    for s in &summaries {
        for g6 in &s.violations {
            failed = true;
            eprintln!(
                "bound violation at n={} m={} parameter={}: {g6}",
                s.n, s.m, s.case.parameter
            );
        }
        for g6 in &s.mismatches {
            failed = true;
            eprintln!(
                "equality/condition mismatch at n={} m={} parameter={}: {g6}",
                s.n, s.m, s.case.parameter
            );
        }
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_violations(check: &str, violations: &[Violation]) -> bool {
    println!("# {check}: {} violations", violations.len());
    for v in violations {
        println!(
            "violation,{check},{},{},{},{}",
            fmt_sig(v.parameter, 9),
            v.clause,
            fmt_sig(v.lhs, 9),
            fmt_sig(v.rhs, 9)
        );
    }
    !violations.is_empty()
}

fn cmd_lemmas(grid_step: f64, _tol: f64) -> ExitCode {
    if !(grid_step > 0.0 && grid_step <= 0.5) {
        return usage_error(format!("grid step {grid_step} outside (0, 0.5]"));
    }
    let x0 = match find_x0() {
        Ok(x0) => x0,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    println!("# x0 = {}", fmt_sig(x0, 9));
    println!("variant,parameter,i,j,value");
    let steps = (3.0 / grid_step).round() as usize;
    let chart_alphas: Vec<f64> = (0..=steps)
        .map(|i| (-1.0 + i as f64 * grid_step).min(2.0))
        .collect();
    for variant in [Variant::Chi, Variant::Platt] {
        for &a in &chart_alphas {
            for (i, j) in REDUCED_PAIRS {
                let v = coefficient(variant, (i, j), a).unwrap();
                println!(
                    "{},{},{i},{j},{}",
                    variant.name(),
                    fmt_sig(a, 9),
                    fmt_sig(v, 9)
                );
            }
        }
    }
    for k in k_grid(grid_step) {
        for (i, j) in REDUCED_PAIRS {
            let v = coefficient(Variant::Oga, (i, j), k).unwrap();
            println!("oga,{},{i},{j},{}", fmt_sig(k, 9), fmt_sig(v, 9));
        }
    }
    let alphas = alpha_grid(grid_step);
    let ks = k_grid(grid_step);
    let mut failed = false;
    failed |= print_violations(
        "orderings[chi]",
        &lemma1_orderings(Variant::Chi, &alphas).unwrap(),
    );
    failed |= print_violations(
        "orderings[platt]",
        &lemma1_orderings(Variant::Platt, &alphas).unwrap(),
    );
    failed |= print_violations(
        "signs[chi]",
        &sign_chart_check(Variant::Chi, &alphas).unwrap(),
    );
    failed |= print_violations(
        "signs[platt]",
        &sign_chart_check(Variant::Platt, &alphas).unwrap(),
    );
    failed |= print_violations(
        "exception-sums[platt]",
        &platt_exception_sums(&alphas).unwrap(),
    );
    failed |= print_violations("chains[oga]", &phi_chain_check(&ks));
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_extremal(
    n: usize,
    m: usize,
    variant: Variant,
    alpha: Option<f64>,
    k: Option<f64>,
    regime: Option<RegimeArg>,
    residue: Option<u8>,
    tol: f64,
) -> ExitCode {
    let actual_residue = ((n + m) % 3) as u8;
    if let Some(r) = residue {
        if r != actual_residue {
            return usage_error(format!(
                "--residue {r} does not match (m + n) mod 3 = {actual_residue}"
            ));
        }
    }
    let parameter = match variant {
        Variant::Oga => {
            if alpha.is_some() || regime.is_some() {
                return usage_error("oga takes --k, not --alpha/--regime");
            }
            k.unwrap_or(1.0)
        }
        _ => {
            if k.is_some() {
                return usage_error(format!("{} takes --alpha, not --k", variant.name()));
            }
            alpha.unwrap_or(match regime {
                Some(RegimeArg::Mid) => 0.5,
                Some(RegimeArg::High) => 2.0,
                _ => -0.5,
            })
        }
    };
    let case = match BoundCase::new(variant, parameter, actual_residue) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    match build_extremal(n, m, &case, tol) {
        Ok(ExtremalOutcome::Attained { graph, report }) => {
            println!("{}", molex::formats::to_graph6(&graph));
            println!(
                "graph6,n,m,variant,parameter,residue,regime,direction,value,bound,gap,\
                 equality,condition_met"
            );
            println!("{}", report_row(&report));
            ExitCode::SUCCESS
        }
        Ok(ExtremalOutcome::Infeasible { reason }) => {
            println!("INFEASIBLE: {reason}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return usage_error("--jobs must be at least 1");
        }
        molex::exec::set_jobs(jobs);
    }
    let tol = match tolerance(cli.tol) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    match cli.command {
        Command::Compute {
            index,
            alpha,
            k,
            input,
        } => cmd_compute(&index, alpha, k, &input),
        Command::Verify {
            n,
            variant,
            alpha,
            k,
            alpha_grid,
            k_grid,
        } => cmd_verify(
            n,
            variant.into(),
            &alpha,
            &k,
            alpha_grid.is_some(),
            k_grid.is_some(),
            tol,
        ),
        Command::Lemmas { grid_step } => cmd_lemmas(grid_step, tol),
        Command::Extremal {
            n,
            m,
            variant,
            alpha,
            k,
            regime,
            residue,
        } => cmd_extremal(n, m, variant.into(), alpha, k, regime, residue, tol),
    }
}
