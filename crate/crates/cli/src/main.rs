//! `nugrass`: build nu-Grassmannian atlases, print chart labels and
//! transition maps, and run the verification suites.
//!
//! Exit status: 0 on success, 1 when a verification suite reports a
//! failure, 2 on usage errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nugrass::verify::{run_bundle_suite, run_cocycle_suite, run_reduced_suite, Atlas, FullReport, TriplePolicy};
use nugrass::{build_label, compute_transition, enumerate_charts, ChartIndex, Error, GrassSpec, NuStructure};

#[derive(Parser, Debug)]
#[command(name = "nugrass", version, about = "Exact atlases of nu-Grassmannian supermanifolds")]
struct Cli {
    /// Even rank k.
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Odd rank l.
    #[arg(long, global = true)]
    l: Option<usize>,
    /// Even dimension m of the ambient space.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Odd dimension n of the ambient space.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Odd involution: `identity`, `shift`, or a JSON pairing file.
    #[arg(long, global = true, default_value = "identity")]
    nu: String,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Sample points per chart pair in the reduced suite.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Triple selection: all, standard-only or sample:N.
    #[arg(long, global = true, default_value = "all")]
    triples: TriplePolicy,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the charts in enumeration order.
    Atlas,
    /// Print the label matrix of one chart.
    Label {
        /// Even index set, comma separated (may be empty).
        #[arg(long = "I", allow_hyphen_values = true)]
        i: String,
        /// Odd index set, comma separated (may be empty).
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
    },
    /// Print the chart change between two charts, e.g. `--from 2|1,3`.
    Transition {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Cocycle,
    Bundle,
    Reduced,
    All,
}

/// Failure modes of a run, mapped onto exit codes.
enum Failure {
    Usage(String),
    Io(String),
}

struct Output {
    text: String,
    failed: bool,
}

fn space_of(cli: &Cli) -> Result<GrassSpec, Failure> {
    let dims = [("--k", cli.k), ("--l", cli.l), ("--m", cli.m), ("--n", cli.n)];
    let missing: Vec<&str> = dims.iter().filter(|(_, v)| v.is_none()).map(|(f, _)| *f).collect();
    if !missing.is_empty() {
        return Err(Failure::Usage(format!("missing {}", missing.join(", "))));
    }
    GrassSpec::new(cli.k.unwrap(), cli.l.unwrap(), cli.m.unwrap(), cli.n.unwrap()).map_err(usage)
}

fn nu_of(cli: &Cli, space: &GrassSpec) -> Result<NuStructure, Failure> {
    let beta = space.beta();
    match cli.nu.as_str() {
        "identity" => Ok(NuStructure::identity(beta)),
        "shift" => NuStructure::shift(beta).map_err(usage),
        path => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
            NuStructure::from_json(beta, &text).map_err(usage)
        }
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_set(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("bad index '{t}'"))))
        .collect()
}

fn parse_chart(s: &str, space: &GrassSpec) -> Result<ChartIndex, Failure> {
    let c: ChartIndex = s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    c.validate(space).map_err(usage)?;
    Ok(c)
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_atlas(cli: &Cli, space: &GrassSpec) -> Output {
    let charts = enumerate_charts(space);
    let standard = charts.iter().filter(|c| c.is_standard(space)).count();
    let text = if cli.json {
        let listing: Vec<_> = charts
            .iter()
            .map(|c| json!({ "I": c.i, "R": c.r, "p": c.p(), "q": c.q(), "standard": c.is_standard(space) }))
            .collect();
        pretty(&json!({
            "space": space,
            "alpha": space.alpha(),
            "beta": space.beta(),
            "count": charts.len(),
            "standard": standard,
            "charts": listing,
        }))
    } else {
        let mut out = format!(
            "{space}: {} charts, {standard} standard (even dim {}, odd dim {})\n",
            charts.len(),
            space.alpha(),
            space.beta()
        );
        for (pos, c) in charts.iter().enumerate() {
            let kind = if c.is_standard(space) { "standard" } else { "non-standard" };
            out.push_str(&format!("{:>4}  {:<16} {kind}\n", pos + 1, c.to_string()));
        }
        out
    };
    Output { text, failed: false }
}

fn cmd_label(cli: &Cli, space: &GrassSpec, i: &str, r: &str) -> Result<Output, Failure> {
    let index = ChartIndex::new(parse_set(i)?, parse_set(r)?);
    let label = build_label(space, &index).map_err(usage)?;
    let text = if cli.json { pretty(&label.to_json()) } else { label.render() };
    Ok(Output { text, failed: false })
}

fn cmd_transition(cli: &Cli, space: &GrassSpec, nu: &NuStructure, from: &str, to: &str) -> Result<Output, Failure> {
    let (source, target) = (parse_chart(from, space)?, parse_chart(to, space)?);
    let text = match compute_transition(space, &source, &target, nu) {
        Ok(map) if cli.json => pretty(&map.to_json()),
        Ok(map) => map.render(),
        Err(Error::EmptyOverlap { .. }) if cli.json => {
            pretty(&nugrass::transitions::TransitionJson::empty_overlap(&source, &target))
        }
        Err(Error::EmptyOverlap { .. }) => format!("{source} -> {target}: empty overlap\n"),
        Err(e) => return Err(Failure::Usage(e.to_string())),
    };
    Ok(Output { text, failed: false })
}

fn cmd_verify(cli: &Cli, space: &GrassSpec, nu: &NuStructure, suite: Suite) -> Result<Output, Failure> {
    let atlas = Atlas::build(space, nu).map_err(usage)?;
    let (policy, seed) = (cli.triples, cli.seed);
    let reports = match suite {
        Suite::Cocycle => vec![run_cocycle_suite(&atlas, policy, seed)],
        Suite::Bundle => vec![run_bundle_suite(&atlas, policy, seed)],
        Suite::Reduced => vec![run_reduced_suite(&atlas, cli.samples, seed)],
        Suite::All => vec![
            run_cocycle_suite(&atlas, policy, seed),
            run_bundle_suite(&atlas, policy, seed),
            run_reduced_suite(&atlas, cli.samples, seed),
        ],
    };
    let full = FullReport::new(&atlas, policy, cli.samples, seed, reports);
    let text = if cli.json {
        pretty(&full)
    } else {
        let mut out: String = full.suites.iter().map(|s| s.render()).collect();
        let verdict = if full.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict}: pass {} fail {} skipped {}\n",
            full.totals.pass, full.totals.fail, full.totals.skipped
        ));
        out
    };
    Ok(Output { text, failed: !full.passed() })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let space = space_of(cli)?;
    match &cli.command {
        Command::Atlas => Ok(cmd_atlas(cli, &space)),
        Command::Label { i, r } => cmd_label(cli, &space, i, r),
        Command::Transition { from, to } => cmd_transition(cli, &space, &nu_of(cli, &space)?, from, to),
        Command::Verify { suite } => cmd_verify(cli, &space, &nu_of(cli, &space)?, *suite),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| emit(&cli, &out.text).map(|_| out.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
