//! Command-line surface: classification, transforms, reciprocal-pair
//! factoring, sequence generation, exhaustive theorem verification and
//! graph export.
//!
//! Output for fixed flags is byte-identical across runs; JSON is the
//! machine interface, the text forms are human-facing.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use qseq::gf2poly::BitPoly;
use qseq::qtransform::{classify, q_transform};
use qseq::recsplit::split_reciprocal_pair;
use qseq::seqgen::sequence_stream_with_options;
use qseq::thetagraph::build_graph;
use qseq::verify::run_all;

#[derive(Parser)]
#[command(
    name = "qseq",
    about = "Sequences of binary irreducible polynomials via the degree-doubling transform",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Hex,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the type letter and degree profile of a polynomial
    Classify {
        /// Polynomial, text ("x^3+x^2+1") or hex ("0xd")
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply the degree-doubling transform x^n * f(x + 1/x)
    Qtransform {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Factor a reducible transform into its canonical reciprocal pair
    Factor {
        /// The degree-2n product to split (apply qtransform first if
        /// you start from a degree-n polynomial)
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate the irreducible sequence from a seed
    Sequence {
        #[arg(long)]
        poly: String,
        /// Total number of terms to emit
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Skip the per-term irreducibility re-check
        #[arg(long)]
        no_verify: bool,
    },
    /// Run the exhaustive theorem suites up to a degree
    Verify {
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
    /// Emit the functional graph of alpha -> alpha + 1/alpha
    Graph {
        /// Field degree (the graph has 2^n + 1 vertices)
        #[arg(long)]
        n: usize,
        /// Field modulus; defaults to the hex-smallest irreducible
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::FAILURE;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn parse_poly(s: &str) -> Result<BitPoly, String> {
    s.parse::<BitPoly>().map_err(|e| e.to_string())
}

fn poly_json(p: &BitPoly) -> serde_json::Value {
    serde_json::json!({
        "hex": p.to_hex_string(),
        "text": p.to_string(),
        "degree": p.degree(),
    })
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Classify { poly, format } => {
            let f = parse_poly(&poly)?;
            let t = classify(&f).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{} {} (l={}, m={})", t.letter, t.n, t.l, t.m),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&t).expect("serializable")
                ),
                _ => return Err("classify supports --format text or json".to_string()),
            }
        }
        Command::Qtransform { poly, format } => {
            let f = parse_poly(&poly)?;
            let g = q_transform(&f).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{g}"),
                Format::Hex => println!("{}", g.to_hex_string()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&poly_json(&g)).expect("serializable")
                ),
                Format::Dot => {
                    return Err("qtransform supports --format text, hex or json".to_string())
                }
            }
        }
        Command::Factor {
            poly,
            rng_seed,
            format,
        } => {
            let g = parse_poly(&poly)?;
            let deg = g
                .degree()
                .ok_or_else(|| "cannot factor the zero polynomial".to_string())?;
            if deg % 2 != 0 {
                return Err(format!(
                    "expected a degree-2n transform, got degree {deg} (apply qtransform first)"
                ));
            }
            let pair = split_reciprocal_pair(&g, deg / 2, rng_seed).map_err(|e| e.to_string())?;
            let t1 = classify(&pair.g1).map_err(|e| e.to_string())?;
            let t2 = classify(&pair.g2).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!("g1 = {}  {}", pair.g1, t1);
                    println!("g2 = {}  {}", pair.g2, t2);
                }
                Format::Hex => {
                    println!("g1 = {}  {}", pair.g1.to_hex_string(), t1);
                    println!("g2 = {}  {}", pair.g2.to_hex_string(), t2);
                }
                Format::Json => {
                    let value = serde_json::json!({
                        "g1": poly_json(&pair.g1),
                        "g2": poly_json(&pair.g2),
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&value).expect("serializable")
                    );
                }
                Format::Dot => return Err("factor supports --format text, hex or json".to_string()),
            }
        }
        Command::Sequence {
            poly,
            terms,
            rng_seed,
            format,
            no_verify,
        } => {
            if terms == 0 {
                return Err("--terms must be at least 1".to_string());
            }
            let f0 = parse_poly(&poly)?;
            let record = sequence_stream_with_options(&f0, terms, rng_seed, !no_verify)
                .map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", record.to_json_string()),
                Format::Text => {
                    println!(
                        "{:>3}  {:>7}  {:>6}  {:<14}  poly",
                        "i", "degree", "type", "step"
                    );
                    for (i, term) in record.terms.iter().enumerate() {
                        let poly = if term.poly.degree().unwrap_or(0) <= 64 {
                            term.poly.to_string()
                        } else {
                            term.poly.to_hex_string()
                        };
                        println!(
                            "{i:>3}  {:>7}  {:>6}  {:<14}  {poly}",
                            term.poly.degree().unwrap_or(0),
                            term.poly_type.to_string(),
                            term.tag.as_str(),
                        );
                    }
                    println!("s = {}", record.s);
                    if let Some(attempts) = &record.attempts {
                        println!("discarded first-factor chain:");
                        for term in attempts {
                            println!("     {}  {}", term.poly_type, term.poly.to_hex_string());
                        }
                    }
                }
                _ => return Err("sequence supports --format json or text".to_string()),
            }
        }
        Command::Verify {
            max_degree,
            rng_seed,
        } => {
            if !(2..=20).contains(&max_degree) {
                return Err(
                    "--max-degree must be between 2 and 20 (the suites enumerate every \
                     irreducible polynomial up to that degree)"
                        .to_string(),
                );
            }
            let reports = run_all(max_degree, rng_seed);
            let mut failures = 0;
            for report in &reports {
                if report.passed() {
                    println!("PASS {} ({} checked)", report.name, report.checked);
                } else {
                    failures += 1;
                    println!(
                        "FAIL {} ({} checked, {} counterexamples)",
                        report.name,
                        report.checked,
                        report.counterexamples.len()
                    );
                    for ce in report.counterexamples.iter().take(10) {
                        println!("     counterexample: {ce}");
                    }
                    if report.counterexamples.len() > 10 {
                        println!("     ... and {} more", report.counterexamples.len() - 10);
                    }
                }
            }
            if failures > 0 {
                return Err(format!("{failures} suite(s) failed"));
            }
            println!("all checks passed");
        }
        Command::Graph { n, modulus, format } => {
            let modulus = match modulus {
                None => None,
                Some(s) => Some(parse_poly(&s)?),
            };
            let graph = build_graph(n, modulus).map_err(|e| e.to_string())?;
            match format {
                Format::Dot => print!("{}", graph.to_dot()),
                Format::Json => println!("{}", graph.to_json_string()),
                _ => return Err("graph supports --format dot or json".to_string()),
            }
        }
    }
    Ok(())
}
