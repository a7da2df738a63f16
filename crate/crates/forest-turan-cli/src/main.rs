//! Command-line surface for the forest-turan library.

use clap::{Parser, Subcommand};
use forest_turan::search::{ProbeConfig, SearchError};
use forest_turan::{
    brute_force_ex, build_extremal, build_family, contains_forest, count_copies, count_stars,
    explore_problem1, family_star_count, find_threshold, graph6, shift, shift_closure, shift_delta,
    theorem_value, verify_classification, EnumerationBudget, Family, ForestSpec, Graph,
    PatternGraph,
};
use std::io::Read;
use std::process::ExitCode;

/// Exit codes: 0 success, 2 usage error, 3 budget violation, 4 verification
/// mismatch under --expect-match.
enum Failure {
    Usage(String),
    Budget(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(msg) | Failure::Budget(msg) | Failure::Mismatch(msg) => msg,
        }
    }
}

fn usage<E: std::fmt::Display>(err: E) -> Failure {
    Failure::Usage(err.to_string())
}

fn from_search(err: SearchError) -> Failure {
    match err {
        SearchError::Budget { .. } | SearchError::NodeLimit { .. } => {
            Failure::Budget(err.to_string())
        }
        other => Failure::Usage(other.to_string()),
    }
}

#[derive(Parser)]
#[command(
    name = "forest-turan",
    version,
    about = "Star counts, extremal constructions and exhaustive verification for graphs without a fixed linear forest",
    propagate_version = true
)]
struct Cli {
    /// Emit reports as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: FOREST_TURAN_THREADS, then all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for the randomized probes
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write emitted graphs to this path instead of stdout ('-' = stdout)
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the closed-form maximum number of stars S_r over forest-free graphs
    Formula {
        /// Forest as comma-separated path orders, e.g. "4,2" or "3xP3"
        #[arg(long)]
        forest: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Build the extremal construction and print it as graph6
    Construct {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: usize,
    },
    /// Build a named graph family; with --r also evaluate its star count
    Family {
        /// One of: gf, gtp3, L, Fg, Tg, U3h, H1, H2, book2, book3
        #[arg(long)]
        name: String,
        #[arg(long)]
        t1: Option<usize>,
        #[arg(long)]
        t2: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        forest: Option<String>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Count copies of the star S_r in a graph
    CountStars {
        /// Graph input path, '-' for stdin; graph6 or JSON edge list
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        r: usize,
    },
    /// Count copies of an arbitrary pattern in a graph
    CountCopies {
        #[arg(long = "in")]
        input: String,
        /// Pattern: star:R | clique:S | kstar:S,T | path:K | g6:<string>
        #[arg(long)]
        j: String,
    },
    /// Test whether a graph contains the forest (vertex-disjoint paths)
    Contains {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        forest: String,
    },
    /// Apply the ij-shift (or its closure) and report the star-count delta
    Shift {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Iterate shifts over all pairs until a fixpoint is reached
        #[arg(long)]
        closure: bool,
    },
    /// Exhaustively maximize pattern copies over forest-free graphs
    Brute {
        #[arg(long)]
        forest: String,
        #[arg(long, conflicts_with = "j")]
        r: Option<usize>,
        #[arg(long)]
        j: Option<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "iso")]
        mode: String,
        /// Exit 4 unless the brute-force value matches the closed form
        #[arg(long)]
        expect_match: bool,
        /// Lift the built-in order caps (labeled 7, iso 9)
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
    },
    /// Scan orders for the point where formula and construction take over
    Threshold {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        r: usize,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, default_value = "iso")]
        mode: String,
        /// Exit 4 unless agreement holds through n-max
        #[arg(long)]
        expect_match: bool,
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
    },
    /// Check the structural classification of two-path-free graphs
    VerifyLemma1 {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        n: usize,
        /// Exit 4 if any graph is uncovered
        #[arg(long)]
        expect_match: bool,
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
    },
    /// Probe shift-monotonicity for a pattern and scan its extremal graphs
    Explore {
        #[arg(long)]
        j: String,
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "n-max")]
        n_max: usize,
        /// Exit 4 on probe violations or non-construction extremal sets
        #[arg(long)]
        expect_match: bool,
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn parse_forest(text: &str) -> Result<ForestSpec, Failure> {
    ForestSpec::parse(text).map_err(usage)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|err| usage(format!("reading stdin: {err}")))?;
        buffer
    } else {
        std::fs::read_to_string(path).map_err(|err| usage(format!("reading {path}: {err}")))?
    };
    let line = text
        .lines()
        .map(str::trim)
        .find(|line| !line.is_empty())
        .ok_or_else(|| usage(format!("no graph found in {path}")))?;
    if line.starts_with('{') {
        let list: forest_turan::graph::EdgeList = serde_json::from_str(line).map_err(usage)?;
        Graph::from_edge_list(&list).map_err(usage)
    } else {
        graph6::decode(line).map_err(usage)
    }
}

fn emit(cli_out: &Option<String>, text: &str) -> Result<(), Failure> {
    match cli_out.as_deref() {
        None | Some("-") => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|err| usage(format!("writing {path}: {err}"))),
    }
}

fn budget_for(
    mode: &str,
    threads: Option<usize>,
    allow_unsafe: bool,
    n: usize,
) -> Result<EnumerationBudget, Failure> {
    let mut budget = match mode {
        "labeled" => EnumerationBudget::labeled(),
        "iso" => EnumerationBudget::up_to_iso(),
        other => {
            return Err(usage(format!(
                "unknown mode {other:?}: expected labeled or iso"
            )))
        }
    };
    if let Some(threads) = threads {
        budget.workers = threads;
    }
    if allow_unsafe {
        budget.allow_unsafe = true;
        budget.max_n = budget.max_n.max(n);
    }
    Ok(budget)
}

fn g6(g: &Graph) -> Result<String, Failure> {
    graph6::encode(g).map_err(usage)
}

fn family_from_flags(
    name: &str,
    t1: Option<usize>,
    t2: Option<usize>,
    h: Option<usize>,
    t: Option<usize>,
    n: Option<usize>,
    forest: &Option<String>,
) -> Result<Family, Failure> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| usage(format!("family {name} requires --{flag}")))
    };
    let fam = match name {
        "gf" => {
            let text = forest
                .as_ref()
                .ok_or_else(|| usage("family gf requires --forest"))?;
            Family::Extremal {
                forest: parse_forest(text)?,
                n: need(n, "n")?,
            }
        }
        "gtp3" => Family::TP3 {
            t: need(t, "t")?,
            n: need(n, "n")?,
        },
        "L" | "l" => Family::L {
            t1: t1.unwrap_or(0),
            t2: t2.unwrap_or(0),
            h: need(h, "h")?,
        },
        "Fg" | "fg" => Family::Fg {
            t1: t1.unwrap_or(0),
            t2: t2.unwrap_or(0),
            h: need(h, "h")?,
        },
        "Tg" | "tg" => Family::Tg {
            t1: t1.unwrap_or(0),
            t2: t2.unwrap_or(0),
            h: need(h, "h")?,
        },
        "U3h" | "u3h" => Family::U3h { h: need(h, "h")? },
        "H1" | "h1" => Family::H1 { n: need(n, "n")? },
        "H2" | "h2" => Family::H2 { n: need(n, "n")? },
        "book2" => Family::Book2 { n: need(n, "n")? },
        "book3" => Family::Book3 { n: need(n, "n")? },
        other => {
            return Err(usage(format!(
            "unknown family {other:?}: expected gf, gtp3, L, Fg, Tg, U3h, H1, H2, book2 or book3"
        )))
        }
    };
    Ok(fam)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Formula { ref forest, r, n } => {
            let f = parse_forest(forest)?;
            let value = theorem_value(&f, n, r).map_err(usage)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "forest": f.to_string(),
                        "r": r,
                        "n": n,
                        "value": value.to_string(),
                    })
                );
            } else {
                println!("{value}");
            }
            Ok(())
        }
        Command::Construct { ref forest, n } => {
            let f = parse_forest(forest)?;
            let g = build_extremal(&f, n).map_err(usage)?;
            let text = g6(&g)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "forest": f.to_string(),
                        "n": n,
                        "edges": g.edge_count(),
                        "graph6": text,
                    })
                );
                Ok(())
            } else {
                emit(&cli.out, &text)
            }
        }
        Command::Family {
            ref name,
            t1,
            t2,
            h,
            t,
            n,
            ref forest,
            r,
        } => {
            let fam = family_from_flags(name, t1, t2, h, t, n, forest)?;
            let g = build_family(&fam).map_err(usage)?;
            let text = g6(&g)?;
            let count = match r {
                Some(r) => Some(family_star_count(&fam, r).map_err(usage)?),
                None => None,
            };
            if cli.json {
                let mut object = serde_json::json!({
                    "family": name,
                    "order": g.n(),
                    "edges": g.edge_count(),
                    "graph6": text,
                });
                if let (Some(r), Some(count)) = (r, &count) {
                    object["r"] = serde_json::json!(r);
                    object["count"] = serde_json::json!(count.to_string());
                }
                println!("{object}");
                Ok(())
            } else {
                emit(&cli.out, &text)?;
                if let Some(count) = count {
                    println!("{count}");
                }
                Ok(())
            }
        }
        Command::CountStars { ref input, r } => {
            let g = read_graph(input)?;
            let count = count_stars(&g, r);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "r": r, "count": count.to_string() })
                );
            } else {
                println!("{count}");
            }
            Ok(())
        }
        Command::CountCopies { ref input, ref j } => {
            let g = read_graph(input)?;
            let pattern = PatternGraph::parse(j).map_err(usage)?;
            let count = count_copies(&pattern, &g);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "j": pattern.to_string(), "count": count.to_string() })
                );
            } else {
                println!("{count}");
            }
            Ok(())
        }
        Command::Contains {
            ref input,
            ref forest,
        } => {
            let g = read_graph(input)?;
            let f = parse_forest(forest)?;
            let holds = contains_forest(&g, &f);
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "forest": f.to_string(), "contains": holds })
                );
            } else {
                println!("{holds}");
            }
            Ok(())
        }
        Command::Shift {
            ref input,
            i,
            j,
            r,
            closure,
        } => {
            let g = read_graph(input)?;
            if closure {
                let closed = shift_closure(&g);
                let text = g6(&closed)?;
                if cli.json {
                    println!("{}", serde_json::json!({ "graph6": text }));
                    return Ok(());
                }
                return emit(&cli.out, &text);
            }
            let (i, j) = match (i, j) {
                (Some(i), Some(j)) => (i, j),
                _ => return Err(usage("shift requires --i and --j (or --closure)")),
            };
            let shifted = shift(&g, i, j).map_err(usage)?;
            let delta = shift_delta(&g, i, j, r.unwrap_or(2)).map_err(usage)?;
            let text = g6(&shifted)?;
            if cli.json {
                let mut object = serde_json::json!({
                    "graph6": text,
                    "n_i": delta.n_i,
                    "n_j": delta.n_j,
                    "n_ij": delta.n_ij,
                    "adjacent": delta.adjacent,
                });
                if let Some(r) = r {
                    object["r"] = serde_json::json!(r);
                    object["delta"] = serde_json::json!(delta.delta.to_string());
                }
                println!("{object}");
                Ok(())
            } else {
                emit(&cli.out, &text)?;
                let mut line = format!(
                    "n_i={} n_j={} n_ij={} adjacent={}",
                    delta.n_i, delta.n_j, delta.n_ij, delta.adjacent
                );
                if let Some(r) = r {
                    line.push_str(&format!(" r={r} delta={}", delta.delta));
                }
                println!("{line}");
                Ok(())
            }
        }
        Command::Brute {
            ref forest,
            r,
            ref j,
            n,
            ref mode,
            expect_match,
            allow_unsafe,
        } => {
            let f = parse_forest(forest)?;
            let pattern = match (r, j) {
                (Some(r), None) => PatternGraph::star(r).map_err(usage)?,
                (None, Some(text)) => PatternGraph::parse(text).map_err(usage)?,
                _ => return Err(usage("brute requires exactly one of --r or --j")),
            };
            let budget = budget_for(mode, cli.threads, allow_unsafe, n)?;
            let report = brute_force_ex(n, &pattern, &f, &budget).map_err(from_search)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "n={} forest={} pattern={} mode={}",
                    report.n, report.forest, report.pattern, budget.mode
                );
                println!("max={}", report.max_count);
                match (&report.formula, report.matches_formula) {
                    (Some(formula), Some(matched)) => {
                        println!("formula={formula} match={matched}")
                    }
                    _ => println!("formula=none"),
                }
                if let Some(iso) = report.matches_construction {
                    println!("iso_to_construction={iso}");
                }
                for g6 in &report.extremal {
                    println!("extremal {g6}");
                }
            }
            if expect_match && report.matches_formula != Some(true) {
                return Err(Failure::Mismatch(format!(
                    "brute-force value {} does not match the closed form {:?}",
                    report.max_count, report.formula
                )));
            }
            Ok(())
        }
        Command::Threshold {
            ref forest,
            r,
            n_max,
            ref mode,
            expect_match,
            allow_unsafe,
        } => {
            let f = parse_forest(forest)?;
            let budget = budget_for(mode, cli.threads, allow_unsafe, n_max)?;
            let report = find_threshold(&f, r, n_max, &budget).map_err(from_search)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                if report.diagnostic {
                    println!("# r=1 counts edges: outside the closed form's hypotheses");
                }
                println!("n,brute,formula,match,unique_and_iso");
                for row in &report.rows {
                    println!(
                        "{},{},{},{},{}",
                        row.n, row.brute, row.formula, row.value_match, row.unique_and_iso
                    );
                }
                match report.n0 {
                    Some(n0) => println!("n0={n0}"),
                    None => println!("n0=inconclusive at n_max={n_max}"),
                }
            }
            if expect_match && report.n0.is_none() {
                return Err(Failure::Mismatch(format!(
                    "no agreement threshold found up to n_max={n_max}"
                )));
            }
            Ok(())
        }
        Command::VerifyLemma1 {
            a,
            b,
            n,
            expect_match,
            allow_unsafe,
        } => {
            let budget = budget_for("iso", cli.threads, allow_unsafe, n)?;
            let report = verify_classification(a, b, n, &budget).map_err(from_search)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "a={} b={} n={} h={}",
                    report.a, report.b, report.n, report.h
                );
                println!(
                    "free_classes={} checked={}",
                    report.free_classes, report.checked
                );
                let hits: Vec<String> = report
                    .case_hits
                    .iter()
                    .enumerate()
                    .filter(|(_, &count)| count > 0)
                    .map(|(idx, count)| format!("case{}={count}", idx + 1))
                    .collect();
                println!(
                    "case_hits {}",
                    if hits.is_empty() {
                        "none".into()
                    } else {
                        hits.join(" ")
                    }
                );
                println!(
                    "uncovered={} relaxed_only={}",
                    report.uncovered.len(),
                    report.relaxed_only.len()
                );
                for g6 in &report.uncovered {
                    println!("uncovered {g6}");
                }
            }
            if expect_match && !report.uncovered.is_empty() {
                return Err(Failure::Mismatch(format!(
                    "{} graph(s) uncovered by the classification",
                    report.uncovered.len()
                )));
            }
            Ok(())
        }
        Command::Explore {
            ref j,
            ref forest,
            n,
            n_max,
            expect_match,
            allow_unsafe,
        } => {
            let f = parse_forest(forest)?;
            let pattern = PatternGraph::parse(j).map_err(usage)?;
            let budget = budget_for("iso", cli.threads, allow_unsafe, n_max)?;
            let probe = ProbeConfig {
                seed: cli.seed.unwrap_or(forest_turan::search::DEFAULT_SEED),
                ..ProbeConfig::default()
            };
            let report =
                explore_problem1(&pattern, &f, n, n_max, &budget, &probe).map_err(from_search)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "pattern={} forest={} samples={} seed={}",
                    report.pattern, report.forest, report.probe_samples, report.probe_seed
                );
                println!("violations={}", report.violations.len());
                for violation in report.violations.iter().take(10) {
                    println!(
                        "violation {} i={} j={} before={} after={}",
                        violation.graph6,
                        violation.i,
                        violation.j,
                        violation.before,
                        violation.after
                    );
                }
                for row in &report.rows {
                    println!(
                        "n={} max={} iso_to_construction={} extremal={}",
                        row.n,
                        row.max,
                        row.iso_to_construction
                            .map(|flag| flag.to_string())
                            .unwrap_or_else(|| "n/a".into()),
                        row.extremal.join(" ")
                    );
                }
                println!(
                    "construction_extremal_throughout={}",
                    report.construction_extremal_throughout
                );
            }
            if expect_match
                && (!report.violations.is_empty() || !report.construction_extremal_throughout)
            {
                return Err(Failure::Mismatch(
                    "probe violations or non-construction extremal sets found".into(),
                ));
            }
            Ok(())
        }
    }
}
