use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use singmap::linkdata::{parse_lens_shorthand, parse_seifert_shorthand, LinkDescriptor};
use singmap::pipeline::{classify, map, MapOptions};
use singmap::{suites, Error, Result};

#[derive(Parser)]
#[command(name = "singmap", version, about = "Decide whether a surface singularity link bounds the image of a finite map germ from C^2, and build the map")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the fundamental group, resolution graph and singularity data of a link.
    Classify {
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Classify, then produce invariant generators and their relations.
    Map {
        #[command(flatten)]
        link: LinkArgs,
        /// Highest weighted degree searched for relations.
        #[arg(long, value_name = "N")]
        max_degree: Option<u32>,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Run a built-in check suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(suites::SUITES))]
        suite: String,
        #[command(flatten)]
        format: FormatArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LinkArgs {
    /// Lens space L(p,q), written "p,q".
    #[arg(long, value_name = "P,Q", allow_hyphen_values = true)]
    lens: Option<String>,
    /// Seifert data "b;(p1,q1)(p2,q2)(p3,q3)".
    #[arg(long, value_name = "DATA", allow_hyphen_values = true)]
    seifert: Option<String>,
    /// JSON link descriptor file ("-" reads standard input).
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct FormatArgs {
    /// Human-readable report.
    #[arg(long, conflicts_with = "json")]
    text: bool,
    /// JSON output (the default).
    #[arg(long)]
    json: bool,
}

impl LinkArgs {
    fn descriptor(&self) -> Result<LinkDescriptor> {
        if let Some(s) = &self.lens {
            return parse_lens_shorthand(s);
        }
        if let Some(s) = &self.seifert {
            return parse_seifert_shorthand(s);
        }
        let path = self.graph.as_ref().expect("clap enforces one link source");
        let body = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(path)
        }
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        LinkDescriptor::from_json(&body)
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify { link, format } => {
            let out = classify(&link.descriptor()?)?;
            println!("{}", if format.text { out.to_text() } else { out.to_json() });
            Ok(out.exit_code())
        }
        Command::Map { link, max_degree, format } => {
            let opts = MapOptions {
                max_degree,
                ..MapOptions::default()
            };
            let out = map(&link.descriptor()?, &opts)?;
            println!("{}", if format.text { out.to_text() } else { out.to_json() });
            Ok(out.exit_code())
        }
        Command::Verify { suite, format } => {
            let report = suites::run(&suite)?;
            if format.text {
                print!("{}", report.to_text());
            } else {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
