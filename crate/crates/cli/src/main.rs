use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bottomschur::analysis::{self, GammaReport};
use bottomschur::characters::{schur_in_p_from_table, CharacterTable};
use bottomschur::jacobi_trudi::{
    bottom_via_jacobi_trudi, jt_star, skew_closed_form, skew_from_jt, square_certificate,
};
use bottomschur::lr::{lr_coeff_jdt, lr_coeff_lattice};
use bottomschur::snakes::{
    bottom_via_intervals, interval_sets, snake_cells, snake_sequence, Orientation,
};
use bottomschur::symfunc::{degree_filter, p_to_m, rescale_p_tilde};
use bottomschur::{Error, Partition, SymFn};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

/// Spectra of bottom Schur functions in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "bottomschur", version, about)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory holding character tables, one file per n.
    #[arg(long, global = true, env = "BOTTOMSCHUR_CACHE")]
    cache: Option<PathBuf>,
    /// Recompute every cached table that is read and require an exact match.
    #[arg(long, global = true)]
    cache_verify: bool,
    /// Worker threads for per-n fan-out.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full expansion of s_λ.
    Expand {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = ExpandBasis::P)]
        basis: ExpandBasis,
    },
    /// Bottom (or j-bottom) Schur function in the p~ basis.
    Bottom {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, value_enum, default_value_t = Route::Mn)]
        route: Route,
    },
    /// Snake word and the cells of each snake.
    Snakes {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// All interval sets with their crossing numbers.
    Intervals {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Jacobi-Trudi minor, recovered skew shape and square certificate.
    Jtstar {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
        #[arg(value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Rule::Both)]
        rule: Rule,
    },
    /// Span dimensions over a range of n.
    Dims {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
    },
    /// Dimension of Γ_n over a range of n.
    Gamma {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Allow n above the default limit.
        #[arg(long)]
        slow: bool,
    },
    /// Run the cross-module property suite through degree n.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpandBasis {
    P,
    M,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Mn,
    Intervals,
    Jt,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Rule {
    Lattice,
    Jdt,
    Both,
}

/// Span ranks in `dims` are computed up to this n; larger n report counts only.
const RANK_LIMIT: usize = 16;

enum Failure {
    Usage(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_assertion() {
            Failure::Assertion(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse_shorthand(s).map_err(|e| {
        if s.len() > 1 && s.bytes().all(|b| b.is_ascii_digit()) {
            format!("{e}; write \"{s},\" for a single part")
        } else {
            e.to_string()
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

struct Cache {
    dir: Option<PathBuf>,
    verify: bool,
}

impl Cache {
    fn path(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("characters-{n}.json"))
    }

    /// The character table of S_n, read from or written to the cache.
    fn table(&self, n: usize) -> Result<CharacterTable, Failure> {
        let Some(dir) = &self.dir else {
            return Ok(CharacterTable::compute(n));
        };
        let path = Self::path(dir, n);
        if path.exists() {
            let text = fs::read_to_string(&path)?;
            let table = CharacterTable::from_json(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            if table.n != n {
                return Err(Failure::Usage(format!(
                    "{} holds n={}",
                    path.display(),
                    table.n
                )));
            }
            if self.verify && CharacterTable::compute(n).to_json() != text {
                return Err(Failure::Assertion(format!(
                    "{} differs from recomputation",
                    path.display()
                )));
            }
            return Ok(table);
        }
        let table = CharacterTable::compute(n);
        fs::create_dir_all(dir)?;
        fs::write(&path, table.to_json())?;
        Ok(table)
    }

    fn schur(&self, lambda: &Partition) -> Result<SymFn, Failure> {
        Ok(schur_in_p_from_table(lambda, &self.table(lambda.size())?)?)
    }
}

fn expand(cli: &Cli, cache: &Cache, lambda: &Partition, basis: ExpandBasis) -> CmdResult {
    let s = cache.schur(lambda)?;
    let f = match basis {
        ExpandBasis::P => s,
        ExpandBasis::M => p_to_m(&s)?,
    };
    Ok(if cli.json {
        f.to_json() + "\n"
    } else {
        format!("{f}\n")
    })
}

fn bottom(cli: &Cli, cache: &Cache, lambda: &Partition, j: usize, route: Route) -> CmdResult {
    if j == 0 {
        return Err(Failure::Usage("--j must be at least 1".into()));
    }
    if j > 1 && route != Route::Mn {
        return Err(Failure::Usage(
            "j-bottom functions are only available on the mn route".into(),
        ));
    }
    let mn = || -> Result<SymFn, Failure> {
        let kept = degree_filter(&cache.schur(lambda)?, lambda.rank() + j - 1)?;
        Ok(rescale_p_tilde(&kept)?)
    };
    let results: Vec<(&str, SymFn)> = match route {
        Route::Mn => vec![("mn", mn()?)],
        Route::Intervals => vec![("intervals", bottom_via_intervals(lambda)?)],
        Route::Jt => vec![("jt", bottom_via_jacobi_trudi(lambda)?)],
        Route::All => vec![
            ("mn", mn()?),
            ("intervals", bottom_via_intervals(lambda)?),
            ("jt", bottom_via_jacobi_trudi(lambda)?),
        ],
    };
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let out = if cli.json {
        let routes: serde_json::Map<String, serde_json::Value> = results
            .iter()
            .map(|(name, f)| {
                (
                    name.to_string(),
                    serde_json::to_value(f).expect("SymFn serializes"),
                )
            })
            .collect();
        to_json(&json!({ "lambda": lambda, "j": j, "routes": routes, "agree": agree }))
    } else if results.len() == 1 {
        format!("{}\n", results[0].1)
    } else {
        let mut s = String::new();
        for (name, f) in &results {
            writeln!(s, "{name:<10} {f}").unwrap();
        }
        writeln!(
            s,
            "{}",
            if agree {
                "routes agree"
            } else {
                "routes DISAGREE"
            }
        )
        .unwrap();
        s
    };
    if agree {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Assertion(format!("routes disagree for {lambda}")))
    }
}

fn snakes(cli: &Cli, lambda: &Partition) -> CmdResult {
    let ss = snake_sequence(lambda)?;
    let mut rows = Vec::new();
    for (i, (letter, edge)) in ss.word.iter().zip(&ss.edges).enumerate() {
        let cells = snake_cells(lambda, i + 1)?;
        rows.push((i + 1, letter.as_char(), edge, cells));
    }
    if cli.json {
        let edges: Vec<_> = rows
            .iter()
            .map(|(pos, letter, edge, cells)| json!({ "position": pos, "letter": letter.to_string(), "edge": edge, "cells": cells }))
            .collect();
        return Ok(to_json(
            &json!({ "lambda": lambda, "word": ss.to_string(), "edges": edges }),
        ));
    }
    let mut s = format!("{ss}\n");
    for (pos, letter, edge, cells) in rows {
        let side = match edge.orientation {
            Orientation::Horizontal => "below",
            Orientation::Vertical => "right of",
        };
        let cells: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
        writeln!(
            s,
            "{pos:>3} {letter} {side} {}: {}",
            edge.cell,
            cells.join(" ")
        )
        .unwrap();
    }
    Ok(s)
}

fn intervals(cli: &Cli, lambda: &Partition) -> CmdResult {
    let sets = interval_sets(lambda)?;
    if cli.json {
        let docs: Vec<_> = sets
            .iter()
            .map(|s| json!({ "pairs": s.pairs, "crossings": s.crossings, "type": s.kind(), "sign": s.sign() }))
            .collect();
        return Ok(to_json(&json!({ "lambda": lambda, "interval_sets": docs })));
    }
    let mut s = String::new();
    for set in &sets {
        let pairs: Vec<String> = set
            .pairs
            .iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect();
        writeln!(
            s,
            "{{{}}} c={} type={}",
            pairs.join(","),
            set.crossings,
            set.kind()
        )
        .unwrap();
    }
    Ok(s)
}

fn jtstar(cli: &Cli, lambda: &Partition) -> CmdResult {
    let star = jt_star(lambda)?;
    let shape = skew_from_jt(&star.minor)?;
    let closed = skew_closed_form(lambda)?;
    if shape != closed {
        return Err(Failure::Assertion(format!(
            "minor gives {shape}, closed form gives {closed}"
        )));
    }
    let certificate = square_certificate(&shape, lambda.rank())?;
    let bottom = bottom_via_jacobi_trudi(lambda)?;
    if cli.json {
        return Ok(to_json(&json!({
            "lambda": lambda,
            "minor": star.minor.subscripts,
            "removed_rows": star.removed_rows,
            "removed_cols": star.removed_cols,
            "laplace_sign": star.laplace_sign(),
            "skew_shape": shape,
            "square_certificate": certificate,
            "bottom": bottom,
        })));
    }
    let mut s = star.minor.display_grid();
    writeln!(
        s,
        "removed rows {:?}, columns {:?}, sign {}",
        star.removed_rows,
        star.removed_cols,
        star.laplace_sign()
    )
    .unwrap();
    writeln!(s, "skew shape {shape}").unwrap();
    writeln!(s, "square of size {}: {certificate}", lambda.rank()).unwrap();
    writeln!(s, "{bottom}").unwrap();
    Ok(s)
}

fn lr(cli: &Cli, lambda: &Partition, mu: &Partition, nu: &Partition, rule: Rule) -> CmdResult {
    let lattice = matches!(rule, Rule::Lattice | Rule::Both)
        .then(|| lr_coeff_lattice(lambda, mu, nu))
        .transpose()?;
    let jdt = matches!(rule, Rule::Jdt | Rule::Both)
        .then(|| lr_coeff_jdt(lambda, mu, nu))
        .transpose()?;
    if let (Some(a), Some(b)) = (lattice, jdt) {
        if a != b {
            return Err(Failure::Assertion(format!(
                "lattice rule gives {a}, jeu de taquin gives {b}"
            )));
        }
    }
    let value = lattice.or(jdt).expect("at least one rule runs");
    if cli.json {
        return Ok(to_json(
            &json!({ "lambda": lambda, "mu": mu, "nu": nu, "lattice": lattice, "jdt": jdt, "value": value }),
        ));
    }
    Ok(format!("{value}\n"))
}

fn check_range(from: usize, to: usize) -> Result<(), Failure> {
    if from == 0 || from > to {
        return Err(Failure::Usage(format!(
            "need 1 <= from <= to, got {from}..{to}"
        )));
    }
    Ok(())
}

fn dims(cli: &Cli, from: usize, to: usize, j: usize) -> CmdResult {
    check_range(from, to)?;
    if j == 0 {
        return Err(Failure::Usage("--j must be at least 1".into()));
    }
    if j > 1 {
        let reports: Vec<_> = rayon_map(from..=to, |n| analysis::jbottom_dim(n, j))
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        if cli.json {
            return Ok(to_json(&reports));
        }
        let mut s = format!("{:>3} {:>6} {:>6} {}\n", "n", "dim", "count", "equal");
        for r in &reports {
            writeln!(
                s,
                "{:>3} {:>6} {:>6} {}",
                r.n,
                r.dimension,
                r.count,
                r.equal()
            )
            .unwrap();
        }
        return Ok(s);
    }
    let reports: Vec<_> = rayon_map(from..=to, |n| {
        if n <= RANK_LIMIT {
            analysis::beta(n)
        } else {
            let r = analysis::beta_counts(n);
            r.value().map(|_| r)
        }
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    if cli.json {
        return Ok(to_json(&reports));
    }
    let mut s = format!(
        "{:>3} {:>6} {:>8} {:>9} {:>5} {:>6}\n",
        "n", "beta", "formula", "distinct2", "mod5", "basis"
    );
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    for r in &reports {
        writeln!(
            s,
            "{:>3} {:>6} {:>8} {:>9} {:>5} {:>6}",
            r.n,
            opt(r.beta),
            r.formula_value,
            r.distinct2_count,
            r.mod5_count,
            opt(r.basis_count)
        )
        .unwrap();
    }
    Ok(s)
}

fn gamma(cli: &Cli, from: usize, to: usize, slow: bool) -> CmdResult {
    check_range(from, to)?;
    let reports: Vec<GammaReport> = rayon_map(from..=to, |n| analysis::gamma(n, slow))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    if cli.json {
        return Ok(to_json(&reports));
    }
    let mut s = format!("{:>3} {:>6} {:>6}\n", "n", "gamma", "beta");
    for r in &reports {
        writeln!(s, "{:>3} {:>6} {:>6}", r.n, r.gamma, r.beta).unwrap();
    }
    Ok(s)
}

fn verify(cli: &Cli, n: usize) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let report = analysis::run_suite(n);
    let out = if cli.json {
        to_json(&report)
    } else {
        let mut s = String::new();
        for c in &report.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{status} n={:<3} {:<14} {}", c.n, c.name, c.detail).unwrap();
        }
        s
    };
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Assertion("property suite failed".into()))
    }
}

/// Maps in parallel and returns results in input order.
fn rayon_map<T: Send, F: Fn(usize) -> T + Sync + Send>(
    range: std::ops::RangeInclusive<usize>,
    f: F,
) -> Vec<T> {
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

fn run(cli: &Cli) -> CmdResult {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let cache = Cache {
        dir: cli.cache.clone(),
        verify: cli.cache_verify,
    };
    match &cli.command {
        Command::Expand { lambda, basis } => expand(cli, &cache, lambda, *basis),
        Command::Bottom { lambda, j, route } => bottom(cli, &cache, lambda, *j, *route),
        Command::Snakes { lambda } => snakes(cli, lambda),
        Command::Intervals { lambda } => intervals(cli, lambda),
        Command::Jtstar { lambda } => jtstar(cli, lambda),
        Command::Lr {
            lambda,
            mu,
            nu,
            rule,
        } => lr(cli, lambda, mu, nu, *rule),
        Command::Dims { from, to, j } => dims(cli, *from, *to, *j),
        Command::Gamma { from, to, slow } => gamma(cli, *from, *to, *slow),
        Command::Verify { n } => verify(cli, *n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Assertion(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(2)
        }
    }
}
