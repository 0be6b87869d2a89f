use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use bergman::io::{
    check_examples, examples, parse_flat_list, parse_matroid, parse_weights, render,
    BuildingSetChoice, CliError, Request,
};
use bergman::Matroid;

#[derive(Parser)]
#[command(
    name = "bergman",
    version,
    about = "Flats, nested set complexes and Bergman complexes of matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel enumeration (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct Input {
    /// Matroid JSON: a file path, or the JSON text itself.
    #[arg(long)]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// All flats with their ranks.
    Flats(Input),
    /// Flacets with their ranks (the facet inequalities of the polytope).
    Flacets(Input),
    /// Lattice of flats: flats, ranks, cover pairs, connectedness.
    Lattice(Input),
    /// Order complex of the proper part of the lattice of flats.
    OrderComplex(Input),
    /// Nested set complex of a building set.
    NestedSet {
        #[command(flatten)]
        input: Input,
        /// `minimal`, `maximal`, or an explicit member list such as `1;2;1234;123456`.
        #[arg(long, default_value = "minimal")]
        building_set: String,
    },
    /// Bergman complex with face types, dimensions and cover relations.
    Bergman(Input),
    /// Matroid type from a weight vector or from a set of flats.
    Type {
        #[command(flatten)]
        input: Input,
        /// Comma-separated integer weights, one per element.
        #[arg(long, conflicts_with = "gamma", required_unless_present = "gamma")]
        weights: Option<String>,
        /// Flats such as `1;2;1234;1256` or `[1,2];[10,11]`.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Direct-sum decomposition of the type of a face.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        gamma: String,
    },
    /// Refinement audit, coarseness tower and finest-ness over every face.
    Audit(Input),
    /// Regenerate the worked examples and compare them with the golden files.
    Examples {
        /// Also write the regenerated files into this directory.
        #[arg(long)]
        write_dir: Option<PathBuf>,
    },
}

fn load(input: &Input) -> Result<Matroid, CliError> {
    let text = if input.input.trim_start().starts_with('{') {
        input.input.clone()
    } else {
        fs::read_to_string(&input.input)
            .map_err(|e| CliError::Io(format!("{}: {e}", input.input)))?
    };
    parse_matroid(&text)
}

fn execute(command: Command) -> Result<Value, CliError> {
    let (input, request) = match command {
        Command::Examples { write_dir } => {
            if let Some(dir) = write_dir {
                fs::create_dir_all(&dir)
                    .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
                for (name, fresh, _) in examples() {
                    let path = dir.join(name);
                    fs::write(&path, fresh)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                }
            }
            return check_examples();
        }
        Command::Flats(i) => (i, Request::Flats),
        Command::Flacets(i) => (i, Request::Flacets),
        Command::Lattice(i) => (i, Request::Lattice),
        Command::OrderComplex(i) => (i, Request::OrderComplex),
        Command::Bergman(i) => (i, Request::Bergman),
        Command::Audit(i) => (i, Request::Audit),
        Command::NestedSet {
            input,
            building_set,
        } => {
            let m = load(&input)?;
            let choice = match building_set.as_str() {
                "minimal" => BuildingSetChoice::Minimal,
                "maximal" => BuildingSetChoice::Maximal,
                list => BuildingSetChoice::Explicit(parse_flat_list(m.n(), list)?),
            };
            return Ok(bergman::io::run(&m, &Request::NestedSet(choice))?);
        }
        Command::Type {
            input,
            weights,
            gamma,
        } => {
            let m = load(&input)?;
            let request = match (weights, gamma) {
                (Some(w), _) => Request::TypeFromWeights(parse_weights(&w)?),
                (None, Some(g)) => Request::TypeFromFlats(parse_flat_list(m.n(), &g)?),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            return Ok(bergman::io::run(&m, &request)?);
        }
        Command::Decompose { input, gamma } => {
            let m = load(&input)?;
            let gamma = parse_flat_list(m.n(), &gamma)?;
            return Ok(bergman::io::run(&m, &Request::Decompose(gamma))?);
        }
    };
    let m = load(&input)?;
    Ok(bergman::io::run(&m, &request)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            print!(
                "{}",
                render(&json!({ "error": "UsageError", "witness": [] }))
            );
            return ExitCode::from(1);
        }
    };
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool is configured once");
    }
    let result = execute(cli.command).and_then(|value| {
        let text = render(&value);
        match &cli.output {
            Some(path) => {
                fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bergman: {e}");
            print!("{}", render(&e.to_json()));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
