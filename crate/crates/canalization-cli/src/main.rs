//! `canalize` — canalizing structure analysis from the command line.
//!
//! Exit codes: 0 on success, 1 on usage or syntax errors, 2 when a domain
//! precondition fails (asking for the DNF of a function that is not nested
//! canalizing, an inconsistent structure spec, and so on).

mod output;
mod spec_file;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use canalization::{
    dnf_from_layers, enumerate_ncfs, fast_layer_partition, find_layers_anf, find_layers_tt,
    random_ncf, random_noncanalizing, records_to_csv, run_benchmark, split_function_lines,
    Error as CoreError, FunctionSource, NcfOrderInfo, ParsedFunction, SourceFormat,
};

#[derive(Parser)]
#[command(name = "canalize", version, about = "Canalizing layer analysis of Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the canalizing layer decomposition of a function
    Analyze {
        #[command(flatten)]
        input: FunctionInput,
        /// Emit one JSON object per function instead of human-readable text
        #[arg(long)]
        json: bool,
    },
    /// Print a disjunctive normal form of a nested canalizing function
    Dnf {
        #[command(flatten)]
        input: FunctionInput,
    },
    /// Check the linear-time layer partition of an NCF with known order
    NcfCheck {
        #[command(flatten)]
        input: FunctionInput,
        /// Canalizing order as comma-separated variable indices, e.g. 2,1,3
        #[arg(long, value_delimiter = ',')]
        order: Vec<usize>,
        /// Canalizing inputs as a bit string in order, e.g. 011
        #[arg(long)]
        inputs: String,
        /// Canalized outputs as a bit string (carried, not used by the check)
        #[arg(long)]
        outputs: Option<String>,
    },
    /// Enumerate all NCFs matching a structure spec file
    Enumerate {
        /// Spec file path; `-` reads standard input
        spec: String,
    },
    /// Generate random functions of a class as table strings
    Generate {
        /// Function class: ncf | noncanalizing
        #[arg(long)]
        class: String,
        /// Number of variables
        #[arg(long)]
        vars: usize,
        /// How many functions to generate
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Base seed; function k uses seed + k
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the layer algorithms on random inputs and write CSV
    Bench {
        /// Sizes to benchmark, e.g. 4,6,8,10
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Trials per configuration
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the CSV here instead of standard output
        #[arg(long)]
        output: Option<String>,
    },
}

#[derive(Args)]
struct FunctionInput {
    /// Inline expression, logic format unless --format says otherwise
    expr: Option<String>,
    /// Read function(s) from a file, one per line with an optional `name:`
    /// prefix; `-` reads standard input. Requires --format.
    #[arg(long, conflicts_with = "expr")]
    file: Option<String>,
    /// Input format: logic | anf | table
    #[arg(long)]
    format: Option<String>,
    /// Explicit variable count, to keep trailing fictitious variables
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        let code = match err {
            CoreError::Parse { .. } => 1,
            _ => 2,
        };
        CliError {
            message: err.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::usage(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

impl FunctionInput {
    /// Loads every function this input designates, with optional names.
    fn load(&self) -> Result<Vec<(Option<String>, ParsedFunction)>, CliError> {
        let format = match &self.format {
            Some(text) => Some(text.parse::<SourceFormat>()?),
            None => None,
        };
        match (&self.expr, &self.file) {
            (Some(expr), None) => {
                let source = FunctionSource {
                    name: None,
                    format: format.unwrap_or(SourceFormat::Logic),
                    body: expr.clone(),
                };
                let parsed = canalization::parse_source(&source, self.vars)?;
                Ok(vec![(None, parsed)])
            }
            (None, Some(path)) => {
                let format = format.ok_or_else(|| {
                    CliError::usage("file input requires an explicit --format")
                })?;
                let text = read_input(path)?;
                let sources = split_function_lines(&text, format);
                if sources.is_empty() {
                    return Err(CliError::usage(format!("no functions found in {path}")));
                }
                sources
                    .into_iter()
                    .map(|source| {
                        let parsed =
                            canalization::parse_source(&source, self.vars).map_err(|e| {
                                let mut err = CliError::from(e);
                                if let Some(name) = source.name.as_deref() {
                                    err.message = format!("{name}: {}", err.message);
                                }
                                err
                            })?;
                        Ok((source.name, parsed))
                    })
                    .collect()
            }
            (None, None) => Err(CliError::usage(
                "provide an inline expression or --file <PATH>",
            )),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        }
    }
}

fn decompose(parsed: &ParsedFunction) -> canalization::LayerDecomposition {
    match parsed {
        ParsedFunction::Table(t) => find_layers_tt(t),
        ParsedFunction::Polynomial(p) => find_layers_anf(p),
    }
}

fn parse_bit_string(text: &str, what: &str) -> Result<Vec<bool>, CliError> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(CliError::usage(format!(
                "{what}: expected a 0/1 string, found `{other}`"
            ))),
        })
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { input, json } => {
            let functions = input.load()?;
            for (i, (name, parsed)) in functions.iter().enumerate() {
                let d = decompose(parsed);
                if json {
                    println!("{}", output::to_json(name.as_deref(), &d));
                } else {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", output::to_human(name.as_deref(), &d));
                }
            }
            Ok(())
        }
        Command::Dnf { input } => {
            for (name, parsed) in input.load()? {
                let d = decompose(&parsed);
                let e = dnf_from_layers(&d).map_err(|err| {
                    CliError::domain(match &name {
                        Some(n) => format!("{n}: {err}"),
                        None => err.to_string(),
                    })
                })?;
                match name {
                    Some(n) => println!("{n}: {}", e.render()),
                    None => println!("{}", e.render()),
                }
            }
            Ok(())
        }
        Command::NcfCheck {
            input,
            order,
            inputs,
            outputs,
        } => {
            let functions = input.load()?;
            if functions.len() != 1 {
                return Err(CliError::usage("ncf-check expects exactly one function"));
            }
            let table = functions.into_iter().next().unwrap().1.into_table();
            let inputs = parse_bit_string(&inputs, "--inputs")?;
            let outputs = match outputs {
                Some(text) => parse_bit_string(&text, "--outputs")?,
                None => vec![false; order.len()],
            };
            let info = NcfOrderInfo {
                order,
                inputs,
                outputs,
            };
            match fast_layer_partition(&table, &info) {
                Ok(p) => {
                    let sizes: Vec<String> =
                        p.layer_sizes.iter().map(|k| k.to_string()).collect();
                    println!("partition: ({})", sizes.join(", "));
                    println!("coefficient checks: {}", p.coefficient_checks);
                    println!("matches engine: yes");
                    Ok(())
                }
                Err(CoreError::PartitionMismatch { computed, expected }) => {
                    println!("partition: {computed:?}");
                    println!("engine layer vector: {expected:?}");
                    println!("matches engine: no");
                    Err(CliError::domain(
                        "supplied order info does not describe this function",
                    ))
                }
                Err(err) => Err(err.into()),
            }
        }
        Command::Enumerate { spec } => {
            let text = read_input(&spec)?;
            let spec = spec_file::parse_structure_spec(&text)?;
            let results = enumerate_ncfs(&spec)?;
            for (i, r) in results.iter().enumerate() {
                println!("function {}: {}", i + 1, r.polynomial.render());
                for (li, layer) in r.resolved.layers.iter().enumerate() {
                    let members: Vec<String> = layer
                        .members
                        .iter()
                        .map(|&(v, input)| format!("x{v}={}", input.unwrap() as u8))
                        .collect();
                    println!(
                        "  layer {}: output {}: {}",
                        li + 1,
                        layer.output.unwrap() as u8,
                        members.join(" ")
                    );
                }
            }
            println!("found {} function(s)", results.len());
            Ok(())
        }
        Command::Generate {
            class,
            vars,
            count,
            seed,
        } => {
            for k in 0..count {
                let s = seed.wrapping_add(k as u64);
                let f = match class.as_str() {
                    "ncf" => random_ncf(vars, s)?,
                    "noncanalizing" => random_noncanalizing(vars, s)?,
                    other => {
                        return Err(CliError::usage(format!(
                            "unknown class `{other}` (expected ncf or noncanalizing)"
                        )))
                    }
                };
                println!("{}", f.to_bit_string());
            }
            Ok(())
        }
        Command::Bench {
            sizes,
            trials,
            seed,
            output,
        } => {
            if sizes.is_empty() {
                return Err(CliError::usage("--sizes must list at least one size"));
            }
            if trials == 0 {
                return Err(CliError::usage("--trials must be at least 1"));
            }
            let records = run_benchmark(&sizes, trials, seed)?;
            let csv = records_to_csv(&records);
            match output {
                Some(path) => fs::write(path, csv)?,
                None => print!("{csv}"),
            }
            Ok(())
        }
    }
}
