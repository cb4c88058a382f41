mod generators;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gelfand_core::algebra::spec;
use gelfand_core::diagrams::{compose, enumerate_filtered, parse, Diagram, Family, FamilyTag};
use gelfand_core::model::{model_act, model_basis, ModelBasis, ModelVector};
use gelfand_core::scalars::{parse_rational, rat, DeltaPoly, Rational};
use gelfand_core::specht::all_specht_modules;
use gelfand_core::verify::{check_gelfand, sample_deltas};
use serde_json::json;

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(name = "gelfand", version, about = "Diagram algebras, their Specht modules and Gelfand models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the basis diagrams of an algebra.
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Multiply two diagrams.
    Multiply {
        #[command(flatten)]
        algebra: AlgebraArgs,
        left: String,
        right: String,
    },
    /// Action of a generating set on the model basis.
    ModelTable {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Generator diagram; repeat for several. Defaults to a canonical generating set.
        #[arg(long = "generator")]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// J-classes with their groups and Specht module dimensions.
    Dims {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every verification check and print the JSON report.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Value of δ; repeat for several. Sampled from the seed when absent.
        #[arg(long)]
        delta: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Drawing code for one diagram.
    Render {
        diagram: String,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    #[arg(long)]
    family: FamilyTag,
    #[arg(long)]
    n: usize,
    /// Wall `A,B` with `A + B = n`, required for the walled families.
    #[arg(long)]
    wall: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tikz,
    Svg,
}

/// Failure to run a command; verification failures are reported separately.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<bool, UsageError>;

impl AlgebraArgs {
    fn family(&self) -> Result<Family, UsageError> {
        let wall = match &self.wall {
            None => None,
            Some(w) => {
                let (a, b) = w
                    .split_once(',')
                    .ok_or_else(|| UsageError(format!("wall must look like A,B, got {w:?}")))?;
                Some((a.trim().parse::<usize>()?, b.trim().parse::<usize>()?))
            }
        };
        let fam = Family::new(self.family, wall)?;
        if !fam.accepts_size(self.n) {
            return Err(UsageError(format!("{fam} is not defined for n = {}", self.n)));
        }
        Ok(fam)
    }

    fn member(&self, fam: &Family, text: &str) -> Result<Diagram, UsageError> {
        let d = parse(text, self.n)?;
        if !fam.contains(&d) {
            return Err(UsageError(format!("[{d}] is not a diagram of {fam}")));
        }
        Ok(d)
    }
}

fn nonzero_delta(text: &str) -> Result<Rational, UsageError> {
    let q = parse_rational(text)?;
    if q == rat(0) {
        return Err(UsageError("delta must be nonzero".into()));
    }
    Ok(q)
}

fn cmd_enumerate(args: &AlgebraArgs, rank: Option<usize>) -> CmdResult {
    let fam = args.family()?;
    for d in enumerate_filtered(&fam, args.n, rank, None) {
        println!("{d}");
    }
    Ok(true)
}

fn power(c: usize) -> String {
    match c {
        0 => "1".into(),
        c => format!("d^{c}"),
    }
}

fn cmd_multiply(args: &AlgebraArgs, left: &str, right: &str) -> CmdResult {
    let fam = args.family()?;
    let (l, r) = (args.member(&fam, left)?, args.member(&fam, right)?);
    let c = compose(&l, &r)?;
    println!("{} * [{}]", power(c.closed), c.product);
    Ok(true)
}

/// `v3`, `-v2`, `d*v6`, or a sum of such terms.
fn show_vector(basis: &ModelBasis, v: &ModelVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v
        .coords
        .iter()
        .map(|(d, c)| {
            let label = format!("v{}", basis.index_of(d).expect("targets lie in the basis") + 1);
            show_scaled(c, &label)
        })
        .collect();
    terms.join(" + ")
}

fn show_scaled(c: &DeltaPoly, label: &str) -> String {
    if *c == DeltaPoly::one() {
        return label.to_string();
    }
    if *c == DeltaPoly::one().scale(&rat(-1)) {
        return format!("-{label}");
    }
    let text = c.to_string();
    if c.as_monomial().is_some() {
        format!("{text}*{label}")
    } else {
        format!("({text})*{label}")
    }
}

fn cmd_model_table(args: &AlgebraArgs, generators: &[String], format: Format) -> CmdResult {
    let fam = args.family()?;
    let basis = model_basis(&fam, args.n);
    let gens = if generators.is_empty() {
        generators::default_generators(&fam, args.n)
    } else {
        generators.iter().map(|g| args.member(&fam, g)).collect::<Result<_, _>>()?
    };
    let mut rows = Vec::new();
    for g in &gens {
        let mut row = Vec::new();
        for iota in &basis.elements {
            row.push(show_vector(&basis, &model_act(&fam, g, iota)?));
        }
        rows.push(row);
    }
    match format {
        Format::Json => {
            let value = json!({
                "family": fam.tag().name(),
                "n": args.n,
                "wall": fam.wall(),
                "basis": basis.elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "generators": gens.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "table": rows,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Text => {
            println!("basis");
            for (k, iota) in basis.elements.iter().enumerate() {
                println!("  v{} = [{iota}]", k + 1);
            }
            println!("generators");
            for (k, g) in gens.iter().enumerate() {
                println!("  g{} = [{g}]", k + 1);
            }
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(1).max(2);
            let header: Vec<String> = (1..=basis.len()).map(|k| format!("{:>width$}", format!("v{k}"))).collect();
            println!("{:>4} {}", "", header.join(" "));
            for (k, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
                println!("{:>4} {}", format!("g{}", k + 1), cells.join(" "));
            }
        }
        _ => return Err(UsageError("model-table supports --format text or json".into())),
    }
    Ok(true)
}

fn cmd_dims(args: &AlgebraArgs, format: Format) -> CmdResult {
    let fam = args.family()?;
    let modules = all_specht_modules(&fam, args.n)?;
    let basis = model_basis(&fam, args.n);
    let mut rows = Vec::new();
    for r in spec(&fam, args.n) {
        let mine: Vec<_> = modules.iter().filter(|m| m.j == r.id).collect();
        let involutions = basis.blocks.iter().find(|(j, _)| *j == r.id).map_or(0, |(_, b)| b.len());
        rows.push(json!({
            "rank": r.id.rank,
            "a_rank": r.id.a_rank,
            "q": r.q,
            "group": r.group.to_string(),
            "labels": mine.iter().map(|m| m.label.to_string()).collect::<Vec<_>>(),
            "specht_dims": mine.iter().map(|m| m.dim).collect::<Vec<_>>(),
            "involutions": involutions,
        }));
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        Format::Text => {
            println!("{:>4} {:>6} {:>3} {:>8}  {:<24} {:<16} {:>4}", "rank", "a-rank", "q", "group", "labels", "dims", "|I|");
            for r in &rows {
                let list = |key: &str| {
                    r[key].as_array().unwrap().iter().map(|v| v.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(" ")
                };
                let a_rank = r["a_rank"].as_u64().map_or("-".to_string(), |a| a.to_string());
                println!(
                    "{:>4} {:>6} {:>3} {:>8}  {:<24} {:<16} {:>4}",
                    r["rank"].to_string(),
                    a_rank,
                    r["q"].to_string(),
                    r["group"].as_str().unwrap(),
                    list("labels"),
                    list("specht_dims"),
                    r["involutions"].to_string()
                );
            }
        }
        _ => return Err(UsageError("dims supports --format text or json".into())),
    }
    Ok(true)
}

fn cmd_verify(args: &AlgebraArgs, deltas: &[String], seed: u64) -> CmdResult {
    let fam = args.family()?;
    let deltas = if deltas.is_empty() {
        sample_deltas(3, seed)
    } else {
        deltas.iter().map(|t| nonzero_delta(t)).collect::<Result<_, _>>()?
    };
    let report = check_gelfand(&fam, args.n, &deltas, seed);
    println!("{}", report.to_json());
    Ok(report.passed())
}

fn cmd_render(text: &str, format: Format) -> CmdResult {
    let n = text
        .split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .ok_or_else(|| UsageError(format!("no nodes in {text:?}")))?;
    let d = parse(text, n)?;
    match format {
        Format::Svg => print!("{}", render::svg(&d)),
        Format::Tikz => print!("{}", render::tikz(&d)),
        _ => return Err(UsageError("render supports --format svg or tikz".into())),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate { algebra, rank } => cmd_enumerate(algebra, *rank),
        Command::Multiply { algebra, left, right } => cmd_multiply(algebra, left, right),
        Command::ModelTable { algebra, generators, format } => cmd_model_table(algebra, generators, *format),
        Command::Dims { algebra, format } => cmd_dims(algebra, *format),
        Command::Verify { algebra, delta, seed } => cmd_verify(algebra, delta, *seed),
        Command::Render { diagram, format } => cmd_render(diagram, *format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
