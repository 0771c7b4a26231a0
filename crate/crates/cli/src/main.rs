use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use copthrottle::burning::burning_number;
use copthrottle::classification::classify_low_throttle;
use copthrottle::families::FamilySpec;
use copthrottle::graph::{
    domination_number, encode_graph6, girth, is_cop_win, k_radius, parse_edge_list,
    parse_graph6, to_edge_list,
};
use copthrottle::harness::{
    default_corpus, random_clique_sum, random_subtree, verify_clique_sum, verify_formulas,
    verify_inequality_suite, verify_subtree_pair, FormulaRange, Report,
};
use copthrottle::pursuit::{
    capture_time_of_set, cop_number, cop_throttle, game_trace, k_capture_time, CopConfig,
    SolverConfig, DEFAULT_STATE_BUDGET,
};
use copthrottle::zero_forcing::{forcing_number, propagation_time, throttle, Rule};
use copthrottle::{Error, Graph};

#[derive(Parser)]
#[command(name = "copthrottle", version, about = "Exact cop-throttling and PSD zero forcing on small graphs")]
struct Cli {
    /// Print a text table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest game state space the solver may allocate (n^k * n).
    #[arg(long, global = true, env = "COPTHROTTLE_BUDGET", default_value_t = DEFAULT_STATE_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

/// With none of these flags the graph is read from stdin.
#[derive(Args)]
#[group(multiple = false)]
struct Input {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// File holding graph6 or an edge list ("-" for stdin).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family spec, e.g. `stellated_wheel m=10`.
    #[arg(long, num_args = 1.., value_name = "SPEC")]
    family: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant.
    Compute {
        invariant: Invariant,
        #[command(flatten)]
        input: Input,
        /// Number of cops or centers for captk and radk.
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated cop positions for captset.
        #[arg(long)]
        cops: Option<String>,
    },
    /// Print a family member.
    Family {
        /// Family name and key=value parameters.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Replay formulas and inequalities.
    Verify {
        suite: Suite,
        /// Random connected graphs added to the inequality corpus.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide th_c in {1, 2, 3, 4} or at least 5 from the structural tests.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Write a forcing chronology or an optimal game play as JSON.
    Trace {
        kind: TraceKind,
        #[command(flatten)]
        input: Input,
        /// Comma-separated initial blue set or cop positions.
        #[arg(long, alias = "set")]
        cops: String,
        #[arg(long, value_enum, default_value_t = RuleArg::Psd)]
        rule: RuleArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Thc,
    Thplus,
    Th,
    Copnumber,
    Captk,
    Captset,
    Z,
    Zplus,
    Gamma,
    Girth,
    Radk,
    Burn,
    Copwin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Formulas,
    Inequalities,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceKind {
    Forcing,
    Game,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Psd,
    Standard,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Rule {
        match r {
            RuleArg::Psd => Rule::Psd,
            RuleArg::Standard => Rule::Standard,
        }
    }
}

enum Failure {
    Usage(String),
    Budget(String),
    Verification,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn load(input: &Input) -> CliResult<Graph> {
    if let Some(s) = &input.graph6 {
        return Ok(parse_graph6(s.trim())?);
    }
    if let Some(tokens) = &input.family {
        let tokens: Vec<&str> = tokens.iter().flat_map(|t| t.split_whitespace()).collect();
        return Ok(FamilySpec::from_tokens(&tokens)?.build()?);
    }
    let text = match &input.file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
        _ => io::read_to_string(io::stdin()).map_err(|e| Failure::Usage(format!("stdin: {e}")))?,
    };
    let trimmed = text.trim();
    if !trimmed.is_empty() && !trimmed.contains(char::is_whitespace) && trimmed.parse::<usize>().is_err() {
        Ok(parse_graph6(trimmed)?)
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

fn parse_cops(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("`{t}` is not a vertex"))))
        .collect()
}

fn need_k(k: Option<usize>) -> CliResult<usize> {
    k.ok_or_else(|| Failure::Usage("this invariant needs --k".into()))
}

fn compute(inv: Invariant, g: &Graph, k: Option<usize>, cops: Option<&str>, cfg: &SolverConfig) -> CliResult<Value> {
    let out = match inv {
        Invariant::Thc => json!(cop_throttle(g, cfg)?),
        Invariant::Thplus => json!(throttle(g, Rule::Psd)?),
        Invariant::Th => json!(throttle(g, Rule::Standard)?),
        Invariant::Copnumber => json!({ "value": cop_number(g, cfg)? }),
        Invariant::Captk => {
            let k = need_k(k)?;
            let (value, witness) = k_capture_time(g, k, cfg)?;
            json!({ "k": k, "value": value, "witness": witness })
        }
        Invariant::Captset => {
            let cops = parse_cops(cops.ok_or_else(|| Failure::Usage("captset needs --cops".into()))?)?;
            let config = CopConfig::new(cops);
            json!({ "cops": config, "value": capture_time_of_set(g, &config, cfg)? })
        }
        Invariant::Z | Invariant::Zplus => {
            let rule = if matches!(inv, Invariant::Z) { Rule::Standard } else { Rule::Psd };
            let (value, set) = forcing_number(g, rule);
            json!({ "rule": rule, "value": value, "set": set })
        }
        Invariant::Gamma => {
            let (value, set) = domination_number(g);
            json!({ "value": value, "set": set })
        }
        Invariant::Girth => json!({ "value": girth(g) }),
        Invariant::Radk => {
            let k = need_k(k)?;
            let (value, centers) = k_radius(g, k)?;
            json!({ "k": k, "value": value, "centers": centers })
        }
        Invariant::Burn => {
            let (value, sequence) = burning_number(g)?;
            json!({ "value": value, "sequence": sequence })
        }
        Invariant::Copwin => {
            let cert = is_cop_win(g);
            json!({ "value": cert.cop_win, "order": cert.order(), "certificate": cert })
        }
    };
    Ok(out)
}

/// `key  value` lines for the top-level fields of a JSON object.
fn kv_table(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

/// Writes to stdout, treating a closed pipe as success.
fn say(text: &str) -> CliResult<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Io(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn emit(v: &Value, table: bool) -> CliResult<()> {
    if table {
        say(&kv_table(v))
    } else {
        say(&format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize")))
    }
}

fn inequality_report(random: usize, seed: u64, cfg: &SolverConfig) -> CliResult<Report> {
    let corpus = default_corpus(random, seed)?;
    let mut report = Report::default();
    let parts: Vec<Report> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, (name, g))| verify_inequality_suite(name, g, cfg, seed.wrapping_add(i as u64)))
        .collect();
    parts.into_iter().for_each(|r| report.extend(r));

    use rand::SeedableRng;
    let pairs: Vec<Report> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(10_000 + i);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
            let t = copthrottle::families::random_tree(2 + (s % 29) as usize, s).expect("n >= 2");
            let sub = random_subtree(&t, &mut rng);
            verify_subtree_pair(&format!("random_tree seed={s}"), &t, &sub)
        })
        .collect();
    pairs.into_iter().for_each(|r| report.extend(r));

    let sums: Vec<CliResult<Report>> = (0..50u64)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_add(20_000 + i);
            let c = random_clique_sum(s)?;
            Ok(verify_clique_sum(&format!("clique_sum seed={s}"), &c, cfg))
        })
        .collect();
    for r in sums {
        report.extend(r?);
    }
    Ok(report)
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let cfg = SolverConfig::with_budget(cli.budget);
    match cli.command {
        Command::Compute { invariant, input, k, cops } => {
            let g = load(&input)?;
            let mut v = compute(invariant, &g, k, cops.as_deref(), &cfg)?;
            if let Value::Object(map) = &mut v {
                map.insert("n".into(), json!(g.n()));
                map.insert("graph6".into(), json!(encode_graph6(&g)));
            }
            emit(&v, cli.table)?;
        }
        Command::Family { spec, emit: how } => {
            let g = FamilySpec::from_tokens(&spec)?.build()?;
            match how {
                Emit::Graph6 => say(&format!("{}\n", encode_graph6(&g)))?,
                Emit::Edges => say(&to_edge_list(&g))?,
            }
        }
        Command::Verify { suite, random, seed } => {
            let mut report = Report::default();
            if matches!(suite, Suite::Formulas | Suite::All) {
                report.extend(verify_formulas(&FormulaRange::default(), &cfg));
            }
            if matches!(suite, Suite::Inequalities | Suite::All) {
                report.extend(inequality_report(random, seed, &cfg)?);
            }
            if cli.table {
                say(&report.to_table())?;
            } else {
                say(&format!("{}\n", serde_json::to_string_pretty(&report).expect("rows serialize")))?;
            }
            if !report.all_passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Classify { input } => {
            let g = load(&input)?;
            let c = classify_low_throttle(&g, &cfg)?;
            let mut v = json!(c);
            v["label"] = json!(c.label());
            emit(&v, cli.table)?;
        }
        Command::Trace { kind, input, cops, rule, out } => {
            let g = load(&input)?;
            let cops = parse_cops(&cops)?;
            let value = match kind {
                TraceKind::Forcing => {
                    if let Some(&v) = cops.iter().find(|&&v| v >= g.n()) {
                        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() }.into());
                    }
                    let (pt, record) = propagation_time(&g, cops.iter().copied().collect(), rule.into());
                    json!({ "propagation_time": pt, "record": record })
                }
                TraceKind::Game => json!(game_trace(&g, &CopConfig::new(cops), cfg.state_budget)?),
            };
            let text = serde_json::to_string_pretty(&value).expect("traces serialize");
            fs::write(&out, text).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            let summary = match kind {
                TraceKind::Forcing => json!({ "out": out, "propagation_time": value["propagation_time"] }),
                TraceKind::Game => json!({ "out": out, "capture_time": value["capture_time"] }),
            };
            emit(&summary, cli.table)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
