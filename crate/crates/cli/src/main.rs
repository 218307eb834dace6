//! `bistar`: constructions, detection, verification, exhaustive search, and
//! bound computation for double stars in complete bipartite hosts.
//!
//! Exit status contract:
//! * 0 - success: arrows verdict, witness found, report produced
//! * 1 - domain or parse error (message on stderr)
//! * 2 - usage error
//! * 3 - negative verdict: not-arrows, no witness, cap exceeded
//! * 4 - indeterminate: search budget exhausted

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use bistar::bounds::{bounds, multicolor_bounds, BoundsReport};
use bistar::bsr::{emit_coloring, emit_graph, parse_bsr, BsrObject};
use bistar::construct::{
    blow_up, matching_lower_construction, proper_coloring_latin, turan_extremal,
};
use bistar::detect::{find_double_star, find_monochromatic_double_star};
use bistar::search::{arrows, ramsey_bip, Budget, SearchOptions, Verdict};
use bistar::turan::verify_free_and_count;
use bistar::{DoubleStarSpec, EdgeColoring, Witness};

const EXIT_NEGATIVE: u8 = 3;
const EXIT_INDETERMINATE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bistar",
    version,
    about = "Double stars in edge-colored complete bipartite graphs"
)]
struct Cli {
    /// Emit reports as JSON instead of key-value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a construction and emit it in bsr form.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Find a (monochromatic) double star in a bsr graph or coloring.
    Detect(DetectArgs),
    /// Check an object against a proved invariant.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Exhaustive arrows / Ramsey-number searches.
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
    /// Bounds and exact values for the k-color number of S(n,m).
    Bound(BoundArgs),
    /// Bounds for an asymmetric per-color spec list.
    BoundMulti(BoundMultiArgs),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// k-coloring of K_{kn,kn} by blocks of n disjoint perfect matchings;
    /// contains no monochromatic S(n,m) for any m.
    MatchingLower {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Proper N-coloring of K_{N,N}; every class is a perfect matching.
    Latin {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace each vertex of a base coloring by t clones.
    Blowup {
        #[arg(long)]
        t: usize,
        /// Base coloring in bsr form; standard input when omitted.
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// S(n,m)-free spanning subgraph of K_{p,p} meeting the edge bound.
    TuranExtremal {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Per-color spec list `n1:m1,n2:m2,...` (colorings only).
    #[arg(long, value_parser = parse_spec_list)]
    specs: Option<SpecList>,
    /// bsr input; standard input when omitted.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Freeness and edge count of a bsr graph against max(np, 2m(p-m)).
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Decide whether every k-coloring of K_{N,N} has a monochromatic target.
    Arrows {
        #[arg(long = "N")]
        host: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        specs: SpecSelection,
        #[command(flatten)]
        limits: LimitArgs,
        /// Write the critical coloring here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Least N whose K_{N,N} arrows the targets, swept up to a cap.
    Ramsey {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        specs: SpecSelection,
        #[arg(long = "max-N")]
        max_host: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Args)]
struct SpecSelection {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Per-color spec list `n1:m1,n2:m2,...`; a single pair broadcasts.
    #[arg(long, value_parser = parse_spec_list)]
    specs: Option<SpecList>,
}

#[derive(Args)]
struct LimitArgs {
    /// Stop with an indeterminate verdict after this many search nodes.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Stop with an indeterminate verdict after this many seconds.
    #[arg(long)]
    budget_secs: Option<u64>,
    /// Search worker threads.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl LimitArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: Budget {
                max_nodes: self.budget_nodes,
                max_time: self.budget_secs.map(Duration::from_secs),
            },
            threads: self.threads,
        }
    }
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct BoundMultiArgs {
    #[arg(long, value_parser = parse_spec_list)]
    specs: SpecList,
}

#[derive(Clone)]
struct SpecList(Vec<DoubleStarSpec>);

fn parse_spec_list(raw: &str) -> Result<SpecList, String> {
    let mut out = Vec::new();
    for part in raw.split(',') {
        let (n, m) = part
            .split_once(':')
            .ok_or_else(|| format!("spec `{part}` is not of the form n:m"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| format!("bad leaf count `{n}`"))?;
        let m: usize = m
            .trim()
            .parse()
            .map_err(|_| format!("bad leaf count `{m}`"))?;
        if n == 0 || m == 0 {
            return Err(format!("spec `{part}`: leaf counts must be at least 1"));
        }
        out.push(DoubleStarSpec::new(n, m));
    }
    Ok(SpecList(out))
}

impl SpecSelection {
    fn resolve(&self) -> Result<Vec<DoubleStarSpec>, String> {
        match (&self.specs, self.n, self.m) {
            (Some(list), None, None) => Ok(list.0.clone()),
            (None, Some(n), Some(m)) => {
                if n == 0 || m == 0 {
                    return Err("leaf counts must be at least 1".to_string());
                }
                Ok(vec![DoubleStarSpec::new(n, m)])
            }
            (None, None, None) => Err("give either --specs or both --n and --m".to_string()),
            _ => Err("give either --specs or both --n and --m, not a mixture".to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("bistar: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let json = cli.json;
    match cli.command {
        Command::Construct { what } => run_construct(what),
        Command::Detect(args) => run_detect(args, json),
        Command::Verify {
            what: VerifyCmd::Turan { n, m, file },
        } => run_verify_turan(n, m, file, json),
        Command::Search { what } => run_search(what, json),
        Command::Bound(args) => {
            if args.k == 0 || args.n == 0 || args.m == 0 {
                return Err("--k, --n, --m must be at least 1".to_string());
            }
            let report = bounds(args.k, args.n, args.m);
            print_bounds(&report, json);
            Ok(0)
        }
        Command::BoundMulti(args) => {
            let report = multicolor_bounds(&args.specs.0).map_err(|e| e.to_string())?;
            print_bounds(&report, json);
            Ok(0)
        }
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String, String> {
    match file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn read_object(file: &Option<PathBuf>) -> Result<BsrObject, String> {
    parse_bsr(&read_input(file)?).map_err(|e| e.to_string())
}

fn write_output(text: &str, output: &Option<PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_construct(cmd: ConstructCmd) -> Result<u8, String> {
    let (text, output) = match cmd {
        ConstructCmd::MatchingLower { k, n, output } => {
            if k == 0 || n == 0 {
                return Err("--k and --n must be at least 1".to_string());
            }
            (emit_coloring(&matching_lower_construction(k, n)), output)
        }
        ConstructCmd::Latin { n, output } => {
            if n == 0 {
                return Err("--n must be at least 1".to_string());
            }
            (emit_coloring(&proper_coloring_latin(n)), output)
        }
        ConstructCmd::Blowup { t, file, output } => {
            if t == 0 {
                return Err("--t must be at least 1".to_string());
            }
            let base = match read_object(&file)? {
                BsrObject::Coloring(c) => c,
                BsrObject::Graph(_) => return Err("blowup expects a coloring".to_string()),
            };
            (emit_coloring(&blow_up(&base, t)), output)
        }
        ConstructCmd::TuranExtremal { p, n, m, output } => {
            let g = turan_extremal(p, n, m).map_err(|e| e.to_string())?;
            (emit_graph(&g), output)
        }
    };
    write_output(&text, &output)?;
    Ok(0)
}

fn run_detect(args: DetectArgs, json: bool) -> Result<u8, String> {
    let object = read_object(&args.file)?;
    let selection = SpecSelection {
        n: args.n,
        m: args.m,
        specs: args.specs,
    };
    let specs = selection.resolve()?;
    let witness = match &object {
        BsrObject::Graph(g) => {
            if specs.len() != 1 {
                return Err("a plain graph takes exactly one spec".to_string());
            }
            find_double_star(g, specs[0])
        }
        BsrObject::Coloring(c) => {
            find_monochromatic_double_star(c, &specs).map_err(|e| e.to_string())?
        }
    };
    print_witness(&witness, json);
    Ok(if witness.is_some() { 0 } else { EXIT_NEGATIVE })
}

fn run_verify_turan(n: usize, m: usize, file: Option<PathBuf>, json: bool) -> Result<u8, String> {
    let BsrObject::Graph(g) = read_object(&file)? else {
        return Err("verify turan expects a graph, not a coloring".to_string());
    };
    let report = verify_free_and_count(&g, n, m).map_err(|e| e.to_string())?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "free": report.free,
                "edges": report.edges,
                "bound": report.bound,
                "meets_bound": report.meets_bound,
            })
        );
    } else {
        println!("free {}", report.free);
        println!("edges {}", report.edges);
        println!("bound {}", report.bound);
        println!("meets_bound {}", report.meets_bound);
    }
    if report.free && !report.meets_bound {
        eprintln!("bistar: edge bound violated by a free graph");
        return Ok(1);
    }
    Ok(0)
}

fn run_search(cmd: SearchCmd, json: bool) -> Result<u8, String> {
    match cmd {
        SearchCmd::Arrows {
            host,
            k,
            specs,
            limits,
            output,
        } => {
            if host == 0 || k == 0 {
                return Err("--N and --k must be at least 1".to_string());
            }
            let specs = specs.resolve()?;
            let result = arrows(host, k, &specs, &limits.options()).map_err(|e| e.to_string())?;
            let verdict_word = match result.verdict {
                Verdict::Arrows => "arrows",
                Verdict::NotArrows => "not-arrows",
                Verdict::Indeterminate => "indeterminate",
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "verdict": verdict_word,
                        "nodes": result.stats.nodes,
                        "elapsed_ms": result.stats.elapsed.as_millis() as u64,
                    })
                );
            } else {
                println!("verdict {verdict_word}");
                println!("nodes {}", result.stats.nodes);
                println!("elapsed_ms {}", result.stats.elapsed.as_millis());
            }
            if let Some(cert) = &result.certificate {
                emit_certificate(cert, &output, json)?;
            }
            Ok(match result.verdict {
                Verdict::Arrows => 0,
                Verdict::NotArrows => EXIT_NEGATIVE,
                Verdict::Indeterminate => EXIT_INDETERMINATE,
            })
        }
        SearchCmd::Ramsey {
            k,
            specs,
            max_host,
            limits,
        } => {
            if k == 0 || max_host == 0 {
                return Err("--k and --max-N must be at least 1".to_string());
            }
            let specs = specs.resolve()?;
            let result =
                ramsey_bip(k, &specs, max_host, &limits.options()).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "value": result.value,
                        "lower": result.lower,
                        "indeterminate_at": result.indeterminate_at,
                        "nodes": result.stats.nodes,
                        "elapsed_ms": result.stats.elapsed.as_millis() as u64,
                    })
                );
            } else {
                match result.value {
                    Some(v) => println!("value {v}"),
                    None => {
                        println!("value none");
                        println!("lower {}", result.lower);
                    }
                }
                if let Some(at) = result.indeterminate_at {
                    println!("indeterminate_at {at}");
                }
                println!("nodes {}", result.stats.nodes);
                println!("elapsed_ms {}", result.stats.elapsed.as_millis());
            }
            Ok(if result.value.is_some() {
                0
            } else if result.indeterminate_at.is_some() {
                EXIT_INDETERMINATE
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}

/// Critical colorings go to `-o FILE` when given, otherwise follow the
/// record on standard output after a blank line.
fn emit_certificate(
    cert: &EdgeColoring,
    output: &Option<PathBuf>,
    json: bool,
) -> Result<(), String> {
    let text = emit_coloring(cert);
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        None if !json => {
            println!();
            print!("{text}");
        }
        None => {
            // keep the JSON stream one-value-per-line
            println!("{}", serde_json::json!({ "certificate_bsr": text }));
        }
    }
    Ok(())
}

fn print_witness(witness: &Option<Witness>, json: bool) {
    if json {
        let value = match witness {
            None => serde_json::Value::Null,
            Some(w) => serde_json::json!({
                "color": w.color,
                "center_x": w.center_x,
                "center_y": w.center_y,
                "leaves_y": w.leaves_y,
                "leaves_x": w.leaves_x,
            }),
        };
        println!("{value}");
        return;
    }
    match witness {
        None => println!("none"),
        Some(w) => {
            if let Some(c) = w.color {
                println!("color {c}");
            }
            println!("center_x {}", w.center_x);
            println!("center_y {}", w.center_y);
            println!(
                "leaves_y {}",
                w.leaves_y
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!(
                "leaves_x {}",
                w.leaves_x
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
}

fn print_bounds(report: &BoundsReport, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::json!({
                "k": report.k,
                "specs": report.specs.iter().map(|s| [s.n, s.m]).collect::<Vec<_>>(),
                "lower": report.lower,
                "upper": report.upper,
                "exact": report.exact,
                "lower_rule": report.lower_rule,
                "upper_rule": report.upper_rule,
                "exact_rule": report.exact_rule,
            })
        );
    } else {
        print!("{report}");
    }
}
