use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use lattice_size::{AffineUnimodular, IntMat, IntVec, Target, DEFAULT_POOL_LIMIT};
use lattice_size_cli::compute;
use lattice_size_cli::{
    batch, exit_code, generate, parse_point_range, parse_target, report, svg, AlgorithmChoice,
    Failure, PolytopeDocument, ResultDocument, EXIT_CHECK_FAILED,
};

/// Exact lattice size, lattice width and unimodular certificates for lattice
/// polygons and polytopes.
#[derive(Parser)]
#[command(name = "latsize", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SizeArgs {
    /// Polytope document (JSON); reads standard input when omitted or "-".
    input: Option<PathBuf>,
    /// sigma (simplex), cube, or width.
    #[arg(short, long, default_value = "sigma", value_parser = parse_target)]
    target: Target,
    /// auto, fast, ul, brute, or all (runs every applicable one and checks
    /// they agree).
    #[arg(short, long, default_value = "auto", value_parser = AlgorithmChoice::parse)]
    algorithm: AlgorithmChoice,
    /// Maximum number of search directions for the brute-force search.
    #[arg(long, default_value_t = DEFAULT_POOL_LIMIT)]
    pool_limit: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a size with a certificate.
    Size {
        #[command(flatten)]
        size: SizeArgs,
        /// Print JSON instead of a summary.
        #[arg(long)]
        json: bool,
        /// Write an SVG picture of the certificate (plane polygons only).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check that a given map puts the polytope inside a dilate.
    Verify {
        input: Option<PathBuf>,
        /// Row-major JSON matrix, e.g. [[1,-2],[0,1]].
        #[arg(long)]
        matrix: String,
        /// JSON translation vector; zero when omitted.
        #[arg(long)]
        translation: Option<String>,
        #[arg(short, long, default_value = "sigma", value_parser = parse_target)]
        target: Target,
        #[arg(long)]
        value: i64,
    },
    /// Reproduce the bundled reference examples.
    Examples {
        /// Run one group: sigma-2d, counterexample-3d, or small-entry-3d.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(report::GROUPS))]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Emit random polytope documents, one JSON object per line.
    Gen {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        dim: u8,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_coord: i64,
        /// Points per document: a count like 6 or a range like 4-8.
        #[arg(long, default_value = "4-8", value_parser = parse_point_range)]
        num_points: (usize, usize),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Size every document of a JSONL file; one result line per input line.
    Batch {
        #[command(flatten)]
        size: SizeArgs,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Same as `size --svg`.
    Plot {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn symbol(t: &str) -> &'static str {
    match t {
        "sigma" => "lsΣ",
        "cube" => "ls□",
        _ => "width",
    }
}

fn summary(doc: &ResultDocument) -> String {
    let name = doc.name.as_deref().unwrap_or("polytope");
    let matrix = serde_json::to_string(&doc.matrix).unwrap_or_default();
    let translation = serde_json::to_string(&doc.translation).unwrap_or_default();
    format!(
        "{name}: {} = {} [{}]\n  matrix      {matrix}\n  translation {translation}\n  verified    {}\n",
        symbol(&doc.target),
        doc.value,
        doc.algorithm,
        if doc.verified { "yes" } else { "NO" },
    )
}

fn cmd_size(args: &SizeArgs, json: bool, svg_path: Option<&Path>) -> anyhow::Result<u8> {
    let doc = PolytopeDocument::parse(&read_input(args.input.as_deref())?)?;
    let p = doc.polytope()?;
    let results = compute::run(doc.name.clone(), &p, args.target, args.algorithm, args.pool_limit)?;
    let docs: Vec<&ResultDocument> = results.iter().map(|r| &r.1).collect();
    if json {
        let text = if docs.len() == 1 {
            serde_json::to_string_pretty(docs[0])?
        } else {
            serde_json::to_string_pretty(&docs)?
        };
        println!("{text}");
    } else {
        for d in &docs {
            print!("{}", summary(d));
        }
    }
    if let Some(path) = svg_path {
        let picture = svg::render(&p, &results[0].0)?;
        fs::write(path, picture).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(if docs.iter().all(|r| r.verified) { 0 } else { EXIT_CHECK_FAILED })
}

fn cmd_verify(
    input: Option<&Path>,
    matrix: &str,
    translation: Option<&str>,
    target: Target,
    value: i64,
) -> anyhow::Result<u8> {
    let doc = PolytopeDocument::parse(&read_input(input)?)?;
    let p = doc.polytope()?;
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(matrix).map_err(|e| Failure::usage(format!("invalid --matrix: {e}")))?;
    if rows.len() != p.dim() || rows.iter().any(|r| r.len() != p.dim()) {
        return Err(Failure::usage(format!("--matrix must be {0}x{0}", p.dim())).into());
    }
    let t = match translation {
        Some(s) => serde_json::from_str::<Vec<i64>>(s)
            .map_err(|e| Failure::usage(format!("invalid --translation: {e}")))?,
        None => vec![0; p.dim()],
    };
    let m = IntMat::from_nested(&rows)?;
    let map = AffineUnimodular::new(m, IntVec::new(&t)?)?;
    let accepted = value >= 0
        && match target {
            Target::Simplex => p.contained_in_simplex_dilate(&map, value)?,
            Target::Cube => p.contained_in_cube_dilate(&map, value)?,
            Target::Width => {
                let image = p.transform(&map)?;
                image.coordinate_min()?.get(0) >= 0 && image.coordinate_max()?.get(0) <= value
            }
        };
    let what = match target {
        Target::Simplex => format!("{value}Σ"),
        Target::Cube => format!("[0,{value}]^{}", p.dim()),
        Target::Width => format!("the strip 0 <= x_1 <= {value}"),
    };
    if accepted {
        println!("accept: the image lies in {what}");
        Ok(0)
    } else {
        println!("reject: the image does not lie in {what}");
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_examples(only: Option<&str>, json: bool) -> anyhow::Result<u8> {
    let claims = report::run(only);
    if json {
        println!("{}", serde_json::to_string_pretty(&claims)?);
    } else {
        for c in &claims {
            println!(
                "[{}] {}: {} (expected {}, got {})",
                c.status, c.group, c.claim, c.expected, c.actual
            );
        }
    }
    Ok(if report::all_passed(&claims) { 0 } else { EXIT_CHECK_FAILED })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Size { size, json, svg } => cmd_size(&size, json, svg.as_deref()),
        Command::Plot { size, output } => cmd_size(&size, false, Some(&output)),
        Command::Verify {
            input,
            matrix,
            translation,
            target,
            value,
        } => cmd_verify(input.as_deref(), &matrix, translation.as_deref(), target, value),
        Command::Examples { only, json } => cmd_examples(only.as_deref(), json),
        Command::Gen {
            dim,
            count,
            max_coord,
            num_points,
            seed,
            output,
        } => {
            let mut text = String::new();
            for doc in generate(dim as usize, count, max_coord, num_points, seed) {
                text.push_str(&serde_json::to_string(&doc)?);
                text.push('\n');
            }
            write_output(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Batch { size, threads, output } => {
            let input = read_input(size.input.as_deref())?;
            let out = batch(&input, size.target, size.algorithm, size.pool_limit, threads)?;
            let mut text = String::new();
            for line in &out.lines {
                text.push_str(line);
                text.push('\n');
            }
            write_output(output.as_deref(), &text)?;
            Ok(if out.unverified { EXIT_CHECK_FAILED } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
