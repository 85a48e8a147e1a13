use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use farey_core::{
    congruence_hsu, congruence_wohlfahrt, construct_symbol, coset_reps_from_symbol, perm_rep,
    render_svg, FareySymbol, GroupSpec, Pairing, ProjectiveMatrix, Verdict, DEFAULT_MAX_EDGES,
};
use serde_json::{json, Value};

mod membership;

#[derive(Parser)]
#[command(
    name = "farey",
    version,
    about = "Farey symbols for finite-index subgroups of PSL2(Z)"
)]
struct Cli {
    #[command(flatten)]
    source: Source,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Give up constructing a symbol beyond this many edges.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_EDGES)]
    max_edges: usize,

    /// Resource cap: membership steps for `contains`, index of Γ(N) for the
    /// Wohlfahrt test.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// gamma0:N, gamma1:N, gamma:N, perm:l=<cycles>,r=<cycles> or symbol:<text>.
    #[arg(long, global = true, value_name = "SPEC", conflicts_with = "symbol")]
    group: Option<String>,

    /// A Farey symbol such as "[-oo 0 1 2 oo | 1 2 2 1]".
    #[arg(long, global = true, value_name = "TEXT", allow_hyphen_values = true)]
    symbol: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Farey symbol.
    Symbol,
    /// List the independent generators g1, g2, … with their side pairings.
    Generators,
    /// Index, genus, cusps, elliptic points, level and cusp widths.
    Invariants,
    /// Decide membership of a matrix.
    Contains {
        /// Entries a,b,c,d of a determinant-one matrix.
        #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true)]
        matrix: String,
        /// Also print the matrix as a word in the generators.
        #[arg(long)]
        word: bool,
    },
    /// Left coset representatives, the identity first.
    Cosets,
    /// Permutation action of E and V on the cosets.
    Permrep,
    /// Decide whether the group is a congruence subgroup.
    Congruence {
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// The fundamental polygon.
    Domain {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Hsu,
    Wohlfahrt,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
}

type Outcome = Result<String, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.source.group.is_none() && cli.source.symbol.is_none() {
        Cli::command()
            .error(
                ErrorKind::MissingRequiredArgument,
                "one of --group or --symbol is required",
            )
            .exit();
    }
    match run(&cli) {
        Ok(out) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(cli: &Cli) -> Result<FareySymbol, String> {
    if let Some(text) = &cli.source.symbol {
        return text.parse().map_err(|e| format!("{e}"));
    }
    let spec = cli.source.group.as_deref().unwrap_or_default();
    match spec.parse::<GroupSpec>().map_err(|e| e.to_string())? {
        GroupSpec::Symbol(f) => Ok(f),
        spec => construct_symbol(&spec, cli.max_edges).map_err(|e| e.to_string()),
    }
}

fn run(cli: &Cli) -> Outcome {
    let f = load(cli)?;
    match &cli.command {
        Command::Symbol => symbol(&f, cli.json),
        Command::Generators => generators(&f, cli.json),
        Command::Invariants => invariants(&f, cli.json),
        Command::Contains { matrix, word } => membership::run(&f, matrix, *word, cli.cap, cli.json),
        Command::Cosets => cosets(&f, cli.json),
        Command::Permrep => permrep(&f, cli.json),
        Command::Congruence { method } => congruence(&f, *method, cli.cap, cli.json),
        Command::Domain { format } => domain(&f, *format),
    }
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("JSON values serialize")
}

fn symbol(f: &FareySymbol, json: bool) -> Outcome {
    if !json {
        return Ok(f.to_string());
    }
    Ok(pretty(json!({
        "symbol": f.to_string(),
        "vertices": f.vertices().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "pairings": f.pairings().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })))
}

fn pairing_kind(p: Pairing) -> &'static str {
    match p {
        Pairing::Even => "even",
        Pairing::Odd => "odd",
        Pairing::Free(_) => "free",
    }
}

fn generators(f: &FareySymbol, json: bool) -> Outcome {
    let rows: Vec<(usize, ProjectiveMatrix, usize, Option<usize>)> = f
        .generators()
        .into_iter()
        .zip(f.generator_edges())
        .enumerate()
        .map(|(i, (g, &k))| (i + 1, g, k, f.partner(k)))
        .collect();
    if json {
        let list: Vec<Value> = rows
            .iter()
            .map(|(i, g, k, partner)| {
                json!({
                    "name": format!("g{i}"),
                    "matrix": g,
                    "kind": pairing_kind(f.pairings()[*k]),
                    "edge": k,
                    "partner": partner,
                })
            })
            .collect();
        return Ok(pretty(Value::Array(list)));
    }
    let lines: Vec<String> = rows
        .iter()
        .map(|(i, g, k, partner)| {
            let kind = pairing_kind(f.pairings()[*k]);
            match partner {
                Some(j) => format!("g{i} = {g}  {kind} edges {k} -> {j}"),
                None => format!("g{i} = {g}  {kind} edge {k}"),
            }
        })
        .collect();
    Ok(lines.join("\n"))
}

fn invariants(f: &FareySymbol, json: bool) -> Outcome {
    let inv = f.invariants();
    if json {
        return Ok(pretty(
            serde_json::to_value(&inv).expect("invariants serialize"),
        ));
    }
    let widths: Vec<String> = inv.widths().iter().map(u64::to_string).collect();
    Ok([
        format!("index  {}", inv.index),
        format!("genus  {}", inv.genus),
        format!("cusps  {}", inv.cusps),
        format!("rank   {}", inv.rank),
        format!("e2     {}", inv.e2),
        format!("e3     {}", inv.e3),
        format!("level  {}", inv.level),
        format!("widths {}", widths.join(" ")),
    ]
    .join("\n"))
}

fn cosets(f: &FareySymbol, json: bool) -> Outcome {
    let reps = coset_reps_from_symbol(f).map_err(|e| e.to_string())?;
    if json {
        return Ok(pretty(json!({
            "index": reps.representatives.len(),
            "representatives": reps.representatives,
        })));
    }
    Ok(reps
        .representatives
        .iter()
        .enumerate()
        .map(|(i, a)| format!("{} {a}", i + 1))
        .collect::<Vec<_>>()
        .join("\n"))
}

fn permrep(f: &FareySymbol, json: bool) -> Outcome {
    let table = perm_rep(f).map_err(|e| e.to_string())?;
    if json {
        return Ok(pretty(
            serde_json::to_value(&table.perm).expect("permutations serialize"),
        ));
    }
    let p = &table.perm;
    Ok(format!(
        "e={}\nv={}\nl={}\nr={}",
        p.e(),
        p.v(),
        p.l(),
        p.r()
    ))
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Congruence => "congruence".into(),
        Verdict::Noncongruence => "noncongruence".into(),
        Verdict::Inconclusive { level, index } => {
            format!("inconclusive (gamma({level}) has index {index}, above the cap)")
        }
    }
}

fn congruence(f: &FareySymbol, method: Method, cap: Option<u64>, json: bool) -> Outcome {
    let hsu = || -> Result<Verdict, String> {
        let table = perm_rep(f).map_err(|e| e.to_string())?;
        Ok(if congruence_hsu(&table.perm) {
            Verdict::Congruence
        } else {
            Verdict::Noncongruence
        })
    };
    let wohlfahrt = || {
        congruence_wohlfahrt(
            f,
            cap.unwrap_or(farey_core::congruence::DEFAULT_PRINCIPAL_INDEX_CAP),
        )
        .map_err(|e| e.to_string())
    };
    let results: Vec<(&str, Verdict)> = match method {
        Method::Hsu => vec![("hsu", hsu()?)],
        Method::Wohlfahrt => vec![("wohlfahrt", wohlfahrt()?)],
        Method::Both => vec![("hsu", hsu()?), ("wohlfahrt", wohlfahrt()?)],
    };
    let decided: Vec<bool> = results.iter().filter_map(|(_, v)| v.as_bool()).collect();
    if decided.windows(2).any(|w| w[0] != w[1]) {
        return Err("the two congruence tests disagree".into());
    }
    if json {
        let mut obj = serde_json::Map::new();
        obj.insert("level".into(), json!(f.invariants().level));
        for (name, v) in &results {
            obj.insert(
                (*name).into(),
                serde_json::to_value(v).expect("verdicts serialize"),
            );
        }
        return Ok(pretty(Value::Object(obj)));
    }
    if let [(_, v)] = results[..] {
        return Ok(verdict_text(v));
    }
    Ok(results
        .iter()
        .map(|(name, v)| format!("{name}: {}", verdict_text(*v)))
        .collect::<Vec<_>>()
        .join("\n"))
}

fn domain(f: &FareySymbol, format: Format) -> Outcome {
    match format {
        Format::Json => Ok(pretty(
            serde_json::to_value(f.geometry()).expect("geometry serializes"),
        )),
        Format::Svg => Ok(render_svg(f)),
    }
}
