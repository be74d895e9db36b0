//! `bullchrome`: generate graphs, detect patterns, decide k-colorability
//! with certificates, query the exact oracle and run verification suites.
//!
//! JSON goes to stdout, prose to stderr. Exit codes: 0 success (or
//! colorable), 1 usage or parse error, 2 obstruction, 3 precondition
//! violation, 4 desk cap or budget exhausted.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use bullchrome_core::deciders::{decide, verify_verdict, DeciderConfig, Family};
use bullchrome_core::expansion::{expansion_color_traced, feasibility, recognize_clique_expansion};
use bullchrome_core::generators::{
    antihole, build_expansion, complete, cycle, exceptional, random_hfree, spindle, wheel,
    ExceptionalVariant,
};
use bullchrome_core::io::{parse_any, to_dimacs, to_json};
use bullchrome_core::oracle::{maximum_matching, Oracle};
use bullchrome_core::patterns::{FixedPattern, PatternKind, PatternSearch};
use bullchrome_core::verify::{run_suite, thm4_exhaustive, Suite, VerifyConfig};
use bullchrome_core::{Coloring, Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bullchrome",
    version,
    about = "Certificate-producing colorability deciders for bull-free graphs"
)]
struct Cli {
    /// Node budget for pattern search and the oracle (overrides BULLCHROME_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Graph output format for `gen`.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph.
    Gen {
        #[command(subcommand)]
        shape: Shape,
    },
    /// Search a graph for an induced pattern.
    Detect {
        /// Graph file (JSON or DIMACS); `-` reads stdin.
        input: PathBuf,
        /// bull, claw, chair, c5, k<r>, odd-hole, odd-antihole, odd-wheel,
        /// w<len>, spindle.
        #[arg(long)]
        pattern: String,
    },
    /// Decide k-colorability and print a certificate.
    Decide {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// bull-claw, bull-chair, bull-chair-c5free or bull-claw-c5free.
        #[arg(long)]
        family: Family,
    },
    /// k-color a clique expansion constructively, or any graph by the oracle.
    Color {
        /// Graph file; omit when `--expansion` is given.
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        /// Size vector of an odd-cycle clique expansion, e.g. 2,1,2,1,2,1,1.
        #[arg(long, value_delimiter = ',')]
        expansion: Option<Vec<usize>>,
    },
    /// Exact χ, ω, α and the complement matching number.
    Oracle { input: PathBuf },
    /// Run a seeded verification suite; exit 0 iff nothing disagrees.
    Verify {
        /// thm4, thm6, thm7, thm8, lemmas or fact13.
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        seeds: usize,
        #[arg(long, default_value_t = 0)]
        seed0: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Largest instance order for graph suites.
        #[arg(long)]
        n_max: Option<usize>,
        /// thm4: cycle lengths for an exhaustive sweep instead of sampling.
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<usize>>,
        /// thm4: largest block size in the sweep.
        #[arg(long, default_value_t = 3)]
        sizes_max: usize,
        /// thm4: color counts in the sweep.
        #[arg(long, value_delimiter = ',', default_values_t = [3, 4, 5])]
        k: Vec<usize>,
    },
    /// Summary of a graph: order, degrees, components, fixed patterns.
    Info { input: PathBuf },
}

#[derive(Subcommand)]
enum Shape {
    Cycle {
        n: usize,
    },
    Antihole {
        n: usize,
    },
    Complete {
        r: usize,
    },
    Wheel {
        rim: usize,
    },
    /// The spindle M_{3p+1}.
    Spindle {
        p: usize,
    },
    /// Clique expansion of an odd cycle.
    Expansion {
        #[arg(value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Infeasible expansion that needs k + 1 colors.
    Exceptional {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value = "all-twos-one")]
        variant: String,
    },
    /// Join of graphs given as name:arg, e.g. antihole:7 complete:1.
    Join {
        #[arg(required = true)]
        parts: Vec<String>,
    },
    /// Seeded random graph with forbidden patterns repaired away.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, value_delimiter = ',')]
        free: Vec<FixedPattern>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        tries: usize,
    },
}

/// Failure with its exit code.
struct Fail {
    code: u8,
    message: String,
    witness: Option<Value>,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let (code, witness) = match &e {
            Error::DeskCapExceeded(_) | Error::TimeBudgetExceeded(_) => (4, None),
            Error::FreenessViolation(w) => (3, Some(json!(w))),
            Error::DisconnectedInput
            | Error::UnsupportedDecider(..)
            | Error::UnclassifiedNeighbor(_)
            | Error::SeparationViolation(_)
            | Error::AlphaNotTwo(_) => (3, None),
            _ => (1, None),
        };
        Fail {
            code,
            message: e.to_string(),
            witness,
        }
    }
}

fn usage(message: impl Into<String>) -> Fail {
    Fail {
        code: 1,
        message: message.into(),
        witness: None,
    }
}

type Run = Result<u8, Fail>;

fn budget(cli: Option<u64>) -> Result<Option<u64>, Fail> {
    if cli.is_some() {
        return Ok(cli);
    }
    match std::env::var("BULLCHROME_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("BULLCHROME_BUDGET is not a number: '{s}'"))),
        Err(_) => Ok(None),
    }
}

fn decider_config(budget: Option<u64>) -> DeciderConfig {
    match budget {
        Some(b) => DeciderConfig {
            pattern_budget: b,
            oracle_budget: b,
        },
        None => DeciderConfig::default(),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Fail> {
    let mut text = String::new();
    let io = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    io.map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(parse_any(&text)?)
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("json"));
}

fn main() -> ExitCode {
    // Usage errors exit 1, not clap's default 2, which means "obstruction" here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = budget(cli.budget).and_then(|b| run(cli.command, cli.format, decider_config(b)));
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if let Some(w) = f.witness {
                print(&json!({"schema": 1, "error": f.message, "witness": w}));
            }
            eprintln!("bullchrome: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, format: Format, cfg: DeciderConfig) -> Run {
    match command {
        Command::Gen { shape } => cmd_gen(shape, format),
        Command::Detect { input, pattern } => cmd_detect(&read_graph(&input)?, &pattern, &cfg),
        Command::Decide { input, k, family } => cmd_decide(&read_graph(&input)?, k, family, &cfg),
        Command::Color {
            input,
            k,
            expansion,
        } => cmd_color(input, k, expansion, &cfg),
        Command::Oracle { input } => cmd_oracle(&read_graph(&input)?, &cfg),
        Command::Verify {
            suite,
            seeds,
            seed0,
            threads,
            n_max,
            p,
            sizes_max,
            k,
        } => {
            let report = match (suite, p) {
                (Suite::Thm4, Some(ps)) => thm4_exhaustive(&ps, sizes_max, &k, threads)?,
                (_, Some(_)) => return Err(usage("--p applies to thm4 only")),
                (_, None) => run_suite(
                    suite,
                    &VerifyConfig {
                        seed0,
                        count: seeds,
                        threads,
                        n_max,
                        decider: cfg,
                    },
                )?,
            };
            print(&json!(report));
            eprintln!(
                "{suite}: checked {} of {}, {} disagreements",
                report.checked,
                report.count,
                report.disagreements.len()
            );
            Ok(if report.passed() { 0 } else { 2 })
        }
        Command::Info { input } => cmd_info(&read_graph(&input)?, &cfg),
    }
}

fn shape_graph(shape: Shape) -> Result<Graph, Fail> {
    Ok(match shape {
        Shape::Cycle { n } => cycle(n)?,
        Shape::Antihole { n } => antihole(n)?,
        Shape::Complete { r } => complete(r)?,
        Shape::Wheel { rim } => wheel(rim)?,
        Shape::Spindle { p } => spindle(p)?,
        Shape::Expansion { sizes } => build_expansion(&sizes)?,
        Shape::Exceptional { k, i, variant } => {
            let variant = match variant.as_str() {
                "all-twos-one" => ExceptionalVariant::AllTwosOne,
                "twos-then-one-three" => ExceptionalVariant::TwosThenOneThreeAlt,
                other => return Err(usage(format!("unknown variant '{other}'"))),
            };
            exceptional(k, i, variant)?
        }
        Shape::Join { parts } => {
            let mut graphs = parts.iter().map(|s| named_graph(s));
            let first = graphs.next().expect("at least one part")?;
            graphs.try_fold(first, |acc, g| Ok::<_, Fail>(acc.join(&g?)))?
        }
        Shape::Random {
            n,
            p,
            free,
            seed,
            tries,
        } => random_hfree(n, p, &free, seed, tries)
            .ok_or_else(|| usage(format!("no connected sample within {tries} tries")))?,
    })
}

/// `name:arg` for join operands: cycle, antihole, complete, wheel,
/// spindle, or expansion with a `-` separated size vector.
fn named_graph(spec: &str) -> Result<Graph, Fail> {
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("expected name:arg, got '{spec}'")))?;
    if name == "expansion" {
        let sizes = arg
            .split('-')
            .map(|x| x.parse())
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|_| usage(format!("bad size vector '{arg}'")))?;
        return Ok(build_expansion(&sizes)?);
    }
    let x: usize = arg
        .parse()
        .map_err(|_| usage(format!("bad number in '{spec}'")))?;
    Ok(match name {
        "cycle" => cycle(x)?,
        "antihole" => antihole(x)?,
        "complete" => complete(x)?,
        "wheel" => wheel(x)?,
        "spindle" => spindle(x)?,
        _ => return Err(usage(format!("unknown graph '{name}'"))),
    })
}

fn cmd_gen(shape: Shape, format: Format) -> Run {
    let g = shape_graph(shape)?;
    match format {
        Format::Json => println!("{}", to_json(&g)),
        Format::Dimacs => print!("{}", to_dimacs(&g)),
    }
    eprintln!("{} vertices, {} edges", g.n(), g.edge_count());
    Ok(0)
}

fn parse_pattern(s: &str) -> Result<PatternKind, Fail> {
    let lower = s.to_ascii_lowercase();
    Ok(match lower.as_str() {
        "odd-hole" => PatternKind::OddHole(5),
        "odd-antihole" => PatternKind::OddAntihole(5),
        "odd-wheel" => PatternKind::OddWheel(0),
        "spindle" => PatternKind::Spindle(0),
        _ => match lower.strip_prefix('w').and_then(|x| x.parse().ok()) {
            Some(len) => PatternKind::OddWheel(len),
            None => lower.parse::<FixedPattern>()?.kind(),
        },
    })
}

fn cmd_detect(g: &Graph, pattern: &str, cfg: &DeciderConfig) -> Run {
    let search = PatternSearch::with_budget(cfg.pattern_budget);
    let kind = parse_pattern(pattern)?;
    let found = match kind {
        PatternKind::OddHole(_) => search.odd_hole(g, 5)?,
        PatternKind::OddAntihole(_) => search.odd_antihole(g, 5)?,
        PatternKind::OddWheel(0) => search.odd_wheel(g, None)?,
        PatternKind::OddWheel(len) => search.odd_wheel(g, Some(len))?,
        PatternKind::Spindle(_) => search.spindle(g)?,
        other => search.find(g, &other)?,
    };
    eprintln!(
        "{pattern}: {}",
        if found.is_some() { "found" } else { "absent" }
    );
    print(&json!({"schema": 1, "pattern": pattern, "found": found.is_some(), "witness": found}));
    Ok(0)
}

fn cmd_decide(g: &Graph, k: usize, family: Family, cfg: &DeciderConfig) -> Run {
    let v = decide(g, k, family, cfg)?;
    if !verify_verdict(g, &v, &Oracle::with_budget(cfg.oracle_budget))? {
        return Err(usage("internal error: certificate failed to verify"));
    }
    print(&json!(v));
    match v.obstruction() {
        None => {
            eprintln!("{k}-colorable");
            Ok(0)
        }
        Some(o) => {
            eprintln!("not {k}-colorable: {}", o.kind);
            Ok(2)
        }
    }
}

fn cmd_color(
    input: Option<PathBuf>,
    k: usize,
    expansion: Option<Vec<usize>>,
    cfg: &DeciderConfig,
) -> Run {
    let (g, sizes, order) = match (input, expansion) {
        (None, Some(sizes)) => {
            let g = build_expansion(&sizes)?;
            let order: Vec<usize> = (0..g.n()).collect();
            (g, Some(sizes), order)
        }
        (Some(path), None) => {
            let g = read_graph(&path)?;
            match recognize_clique_expansion(&g)? {
                Some(e) if e.p() % 2 == 1 => {
                    let order = e.vertex_order();
                    (g, Some(e.sizes), order)
                }
                _ => (g, None, Vec::new()),
            }
        }
        _ => return Err(usage("give exactly one of a graph file or --expansion")),
    };
    let out = match sizes {
        Some(sizes) => {
            let report = feasibility(&sizes, k)?;
            let found = expansion_color_traced(&sizes, k)?;
            let coloring = found.as_ref().map(|(c, _)| {
                let mut colors = vec![0; g.n()];
                for (pos, &v) in order.iter().enumerate() {
                    colors[v] = c.colors[pos];
                }
                Coloring::new(colors, k)
            });
            json!({
                "schema": 1,
                "k": k,
                "method": "expansion",
                "sizes": sizes,
                "feasibility": report,
                "route": found.map(|(_, r)| r),
                "coloring": coloring.map(|c| c.colors),
            })
        }
        None => {
            let c = Oracle::with_budget(cfg.oracle_budget).exact_coloring(&g, k)?;
            json!({"schema": 1, "k": k, "method": "oracle", "coloring": c.map(|c| c.colors)})
        }
    };
    let colored = !out["coloring"].is_null();
    print(&out);
    eprintln!(
        "{}",
        if colored {
            format!("{k}-colored")
        } else {
            format!("not {k}-colorable")
        }
    );
    Ok(if colored { 0 } else { 2 })
}

fn cmd_oracle(g: &Graph, cfg: &DeciderConfig) -> Run {
    let o = Oracle::with_budget(cfg.oracle_budget);
    let chi = o.chromatic_number(g, None)?;
    let omega = o.clique_number(g)?;
    let alpha = o.independence_number(g)?;
    let beta0 = maximum_matching(&g.complement()).len();
    print(
        &json!({"schema": 1, "chi": chi, "omega": omega, "alpha": alpha, "beta0_complement": beta0}),
    );
    eprintln!("chi {chi}, omega {omega}, alpha {alpha}");
    Ok(0)
}

fn cmd_info(g: &Graph, cfg: &DeciderConfig) -> Run {
    let search = PatternSearch::with_budget(cfg.pattern_budget);
    let mut present = serde_json::Map::new();
    for f in [
        FixedPattern::Bull,
        FixedPattern::Claw,
        FixedPattern::Chair,
        FixedPattern::C5,
    ] {
        present.insert(f.to_string(), json!(search.find(g, &f.kind())?.is_some()));
    }
    let expansion = recognize_clique_expansion(g)?;
    let degrees = g.degrees();
    let supported: Vec<String> = bullchrome_core::deciders::SUPPORTED
        .iter()
        .filter(|(_, f)| {
            f.patterns()
                .iter()
                .all(|p| !present.get(&p.to_string()).is_some_and(|x| x == true))
        })
        .map(|(k, f)| format!("{k}:{f}"))
        .collect();
    print(&json!({
        "schema": 1,
        "n": g.n(),
        "m": g.edge_count(),
        "min_degree": degrees.iter().min(),
        "max_degree": degrees.iter().max(),
        "components": g.components().len(),
        "contains": present,
        "expansion": expansion.map(|e| e.sizes),
        "deciders": supported,
    }));
    eprintln!(
        "{} vertices, {} edges, {} components",
        g.n(),
        g.edge_count(),
        g.components().len()
    );
    Ok(0)
}
