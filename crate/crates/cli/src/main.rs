use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rcperm::atomic::{centro_witness, generated_by_centro_up_to, is_rc_atomic_up_to, rc_witness, BoundedReport, WitnessReport};
use rcperm::class::{count_table, enumerate_centrosymmetric, enumerate_class, ClassSpec};
use rcperm::grid::{
    centro_geom_counts, centro_gridded_bijection, centro_gridding_split, enumerate_geom, enumerate_gridded,
    gridding_count_formulas, rc_component_pairing, split_xy, CellGraph, GridMatrix,
};
use rcperm::harness::{
    self, conjecture_scan, golden, guard, verify_section5, verify_table1, verify_table2, verify_table3, Check,
    Report, MAX_CENTRO_SIZE, MAX_CLASS_N, MAX_GRID_N,
};
use rcperm::series::{growth_rate_rational, positive_roots, Polynomial, RationalGF, ROOT_TOLERANCE};
use rcperm::{Error, Permutation};

mod output;
use output::{Format, Output, Table};

/// Centrosymmetric permutations in permutation classes.
///
/// Class specs: `av:321,3412`, `rc(SPEC)`, `union(SPEC,SPEC)`,
/// `inter(SPEC,SPEC)`, `sumclosure:monotone-skew-monotone`,
/// `sumclosure:layered-skew-one`, `sumclosure:set(231,312)`,
/// `geom:[-1,1;1,-1]`. Matrices list rows top to bottom, separated by `;`.
#[derive(Parser, Debug)]
#[command(name = "rcperm", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Order in which candidates are searched; only lexicographic is supported.
    #[arg(long, value_enum, default_value_t = SeedOrder::Lex, global = true)]
    seed_order: SeedOrder,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Run past the default size limits.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeedOrder {
    Lex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of size n.
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// Only centrosymmetric members.
        #[arg(long)]
        centro: bool,
    },
    /// Class, indecomposable and centrosymmetric counts up to max-n.
    Counts {
        #[arg(long)]
        class: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Expand a rational generating function such as `(1-x)^2/(1-3x+2x^2-x^3)`.
    Gf {
        expr: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Positive real roots of an integer polynomial.
    Root { poly: String },
    /// Geometric grid class checks.
    Grid {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, value_enum)]
        check: GridCheck,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Bounded witness searches for rc-atomicity or generation by
    /// centrosymmetric members.
    Atomic {
        #[arg(long)]
        class: String,
        /// Check a single member instead of every member up to --max-sigma.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, default_value_t = 8)]
        bound: usize,
        #[arg(long, default_value_t = 3)]
        max_sigma: usize,
        #[arg(long, value_enum, default_value_t = AtomicMode::Rc)]
        mode: AtomicMode,
    },
    /// Golden checks against the reference tables.
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        /// Largest size (per target default when omitted).
        #[arg(long)]
        max: Option<usize>,
    },
    /// Bound and conjecture diagnostics for one class.
    Scan {
        #[arg(long)]
        class: String,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GridCheck {
    Graph,
    /// Component pairing, split and gridding counts.
    #[value(name = "thm34")]
    Split,
    Geom,
    Centro,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AtomicMode {
    /// A member containing both σ and rc(σ).
    Rc,
    /// An even-size centrosymmetric member containing σ.
    Centro,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Table1,
    Table2,
    Table3,
    Section5,
    All,
}

fn parse_class(s: &str) -> Result<ClassSpec, Error> {
    s.parse()
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let force = cli.force;
    match &cli.command {
        Command::Enumerate { class, n, centro } => {
            let spec = parse_class(class)?;
            let members = if *centro {
                guard("centrosymmetric", *n, MAX_CENTRO_SIZE, force)?;
                enumerate_centrosymmetric(&spec, *n)
            } else {
                guard("class", *n, MAX_CLASS_N, force)?;
                enumerate_class(&spec, *n)
            };
            let mut report = Report::new("enumerate").input("class", spec.to_string()).input("n", n).input("centro", centro);
            report.push(Check::info("count", members.len()));
            report.push(Check::info("members", members.iter().map(Permutation::compact).collect::<Vec<_>>()));
            let mut table = Table::new(&["permutation"]);
            for m in &members {
                table.row(vec![m.compact()]);
            }
            Ok(Output { report, table: Some(table) })
        }
        Command::Counts { class, max_n } => {
            let spec = parse_class(class)?;
            guard("class", *max_n, MAX_CLASS_N, force)?;
            let t = count_table(&spec, *max_n);
            let mut report = Report::new("counts").input("class", spec.to_string()).input("max_n", max_n);
            report.push(Check::info("table", &t));
            if spec.is_rc_invariant() {
                let v: Vec<String> = t.bound_violations().iter().map(|v| format!("{v:?}")).collect();
                report.push(Check::exact("bounds", Vec::<String>::new(), v));
            }
            let mut table = Table::new(&["n", "a", "c", "b_even", "d", "b_odd"]);
            let cell = |v: Option<&u64>| v.map_or(String::new(), u64::to_string);
            for n in 0..=*max_n {
                table.row(vec![
                    n.to_string(),
                    t.a[n].to_string(),
                    t.c[n].to_string(),
                    cell(t.b_even.get(n)),
                    cell(t.d.get(n)),
                    cell(t.b_odd.get(n)),
                ]);
            }
            Ok(Output { report, table: Some(table) })
        }
        Command::Gf { expr, terms } => {
            let gf: RationalGF = expr.parse()?;
            let series = gf.expand(*terms);
            let coeffs: Vec<String> = series.coeffs().iter().map(ToString::to_string).collect();
            let mut report = Report::new("gf").input("expr", gf.to_string()).input("terms", terms);
            report.push(Check::info("coefficients", &coeffs));
            report.push(Check::info("growth", growth_rate_rational(&gf)?));
            let mut table = Table::new(&["n", "coefficient"]);
            for (n, c) in coeffs.iter().enumerate() {
                table.row(vec![n.to_string(), c.clone()]);
            }
            Ok(Output { report, table: Some(table) })
        }
        Command::Root { poly } => {
            let p: Polynomial = poly.parse()?;
            let roots = positive_roots(&p)?;
            let mut report = Report::new("root").input("poly", p.to_string()).input("tolerance", ROOT_TOLERANCE);
            report.push(Check::info("positive_roots", &roots));
            for (i, &r) in roots.iter().enumerate() {
                report.push(Check::within(format!("residual.{i}"), 0.0, p.eval_f64(r), harness::RESIDUAL_TOLERANCE));
            }
            let mut table = Table::new(&["root"]);
            for r in &roots {
                table.row(vec![format!("{r:.12}")]);
            }
            Ok(Output { report, table: Some(table) })
        }
        Command::Grid { matrix, check, n } => grid(matrix, *check, *n, force),
        Command::Atomic { class, sigma, bound, max_sigma, mode } => {
            let spec = parse_class(class)?;
            guard("witness", *bound, MAX_CENTRO_SIZE, force)?;
            let mut report = Report::new("atomic")
                .input("class", spec.to_string())
                .input("bound", bound)
                .input("mode", format!("{mode:?}").to_lowercase());
            match sigma {
                Some(s) => {
                    let sigma: Permutation = s.parse()?;
                    let w = match mode {
                        AtomicMode::Rc => rc_witness(&spec, &sigma, *bound)?,
                        AtomicMode::Centro => centro_witness(&spec, &sigma, *bound)?,
                    };
                    report = report.input("sigma", sigma.compact());
                    report.push(witness_check(&w));
                }
                None => {
                    let r = match mode {
                        AtomicMode::Rc => is_rc_atomic_up_to(&spec, *max_sigma, *bound)?,
                        AtomicMode::Centro => generated_by_centro_up_to(&spec, *max_sigma, *bound)?,
                    };
                    report = report.input("max_sigma", max_sigma);
                    report.extend(bounded_checks(&r));
                }
            }
            Ok(Output::report(report))
        }
        Command::Verify { target, max } => {
            let reports = match target {
                Target::Table1 => vec![table1(*max, force)?],
                Target::Table2 => vec![table2(*max, force)?],
                Target::Table3 => vec![table3(*max, force)?],
                Target::Section5 => vec![verify_section5()],
                Target::All => vec![table1(None, force)?, table2(None, force)?, table3(None, force)?, verify_section5()],
            };
            let mut merged = Report::new(format!("verify {}", format!("{target:?}").to_lowercase()));
            for r in reports {
                merged.inputs.extend(r.inputs);
                merged.extend(r.checks);
            }
            Ok(Output::report(merged))
        }
        Command::Scan { class, max_n } => {
            let spec = parse_class(class)?;
            guard("class", *max_n, MAX_CLASS_N, force)?;
            Ok(Output::report(conjecture_scan(&spec, *max_n)))
        }
    }
}

fn table1(max: Option<usize>, force: bool) -> Result<Report, Error> {
    let m = max.unwrap_or(12);
    guard("centrosymmetric", m, MAX_CENTRO_SIZE, force)?;
    Ok(verify_table1(m))
}

fn table2(max: Option<usize>, force: bool) -> Result<Report, Error> {
    let m = max.unwrap_or(MAX_CLASS_N);
    guard("class", m, MAX_CLASS_N, force)?;
    Ok(verify_table2(m))
}

fn table3(max: Option<usize>, force: bool) -> Result<Report, Error> {
    let m = max.unwrap_or(10);
    guard("centrosymmetric", m, MAX_CENTRO_SIZE, force)?;
    Ok(verify_table3(m))
}

fn witness_check(w: &WitnessReport) -> Check {
    let id = format!("witness.{}", w.sigma.compact());
    let check = Check::holds(id, w.found(), &w.status);
    match &w.searched_sizes {
        Some((lo, hi)) => check.with_note(format!("searched sizes {lo}..={hi}")),
        None => check.with_note("constructed directly"),
    }
}

fn bounded_checks(r: &BoundedReport) -> Vec<Check> {
    let mut out: Vec<Check> = r.results.iter().map(witness_check).collect();
    out.push(Check::info("summary", &r.note));
    out
}

fn grid(matrix: &str, check: GridCheck, n: usize, force: bool) -> Result<Output, Error> {
    let a: GridMatrix = matrix.parse()?;
    guard("grid", n, MAX_GRID_N, force)?;
    let mut report = Report::new("grid").input("matrix", a.to_string()).input("n", n);
    let mut table = None;
    match check {
        GridCheck::Graph => {
            let g = CellGraph::new(&a);
            report.push(Check::info("forest", g.is_forest()));
            report.push(Check::info("graph", &g));
            report.push(Check::info("rc_invariant", a.is_rc()));
            if a.is_rc() {
                report.push(Check::info("pairing", rc_component_pairing(&a)?));
            }
        }
        GridCheck::Split => {
            let pairing = rc_component_pairing(&a)?;
            report.push(Check::info("forest", pairing.forest));
            report.push(Check::info("components_paired", pairing.components_paired));
            if pairing.components_paired {
                let split = split_xy(&a)?;
                report.push(Check::info("split", &split));
                for row in centro_gridded_bijection(&a, n)? {
                    report.push(
                        Check::exact(format!("bijection.{}", row.n), row.x_gridded, row.centro_gridded)
                            .with_note("|G#_n(A_X)| vs centrosymmetric |G#_2n(A)|"),
                    );
                    report.push(Check::holds(format!("bijection_map.{}", row.n), row.bijective, row.bijective));
                }
                let f = gridding_count_formulas(&a, n)?;
                report.push(
                    Check::info("gridding_counts", &f.rows)
                        .with_note(format!(
                            "convolution matches: {}; sum of squares matches: {}",
                            f.convolution_matches(),
                            f.squares_match()
                        )),
                );
            }
        }
        GridCheck::Geom => {
            let mut t = Table::new(&["n", "members", "gridded"]);
            for k in 0..=n {
                t.row(vec![
                    k.to_string(),
                    enumerate_geom(&a, k).len().to_string(),
                    enumerate_gridded(&a, k).len().to_string(),
                ]);
            }
            report.push(Check::info("counts", &t.rows));
            table = Some(t);
        }
        GridCheck::Centro => {
            let counts = centro_geom_counts(&a, n)?;
            if a == harness::catalog::X_MATRIX.parse::<GridMatrix>()? {
                let want = golden().values("geom.x.centro_even");
                let upto = want.len().min(counts.len());
                report.push(Check::exact("x_class.centro_even", &want[..upto], &counts[..upto]));
            }
            report.push(Check::info("centro_even", &counts));
            let mut t = Table::new(&["n", "centro_2n", "with_centro_gridding", "without"]);
            for (i, c) in counts.iter().enumerate() {
                let (with, without) = centro_gridding_split(&a, 2 * (i + 1))?;
                t.row(vec![(i + 1).to_string(), c.to_string(), with.to_string(), without.to_string()]);
            }
            report.push(Check::info("gridding_split", &t.rows).with_note("columns: n, |C^rc_2n|, with, without"));
            table = Some(t);
        }
    }
    Ok(Output { report, table })
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    let start = std::time::Instant::now();
    let result = run(&cli);
    log::info!("finished in {:?}", start.elapsed());
    match result {
        Ok(out) => {
            println!("{}", out.render(cli.format).trim_end());
            if out.report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
