//! Command-line front end for the `nablaschur` library.
//!
//! Every command prints one value to standard output: the canonical text
//! form by default, or exactly one JSON document under `--format json`.
//! Partitions are comma-separated part lists; the empty string is the zero
//! partition. Exit codes: 0 on success, 1 when `verify` finds a failing
//! case, 2 for unusable flags or malformed input.

use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use nablaschur::lambda::check_theorem3;
use nablaschur::nabla::{check_theorem1, corollary2_sides, laplacian, nabla};
use nablaschur::ring::{MultiPoly, QPoly};
use nablaschur::shapes::{Partition, SkewShape};
use nablaschur::symfunc::{expand_schur_basis, h, schur, skew_schur, ssyt_skew_schur};
use nablaschur::verify::{run_sweep, Identity, SweepConfig};

#[derive(Parser)]
#[command(name = "nablaschur", version, about = "Skew Schur polynomials and their corner expansions, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Oracle {
    /// Jacobi–Trudi determinant, eliminated fraction-free.
    #[default]
    Jt,
    /// Semistandard tableau enumeration.
    Ssyt,
}

#[derive(Subcommand)]
enum Command {
    /// Complete homogeneous polynomial h_n in N variables.
    H {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        nvars: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Skew Schur polynomial of outer/inner in N variables.
    Schur {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long, value_enum, default_value_t)]
        oracle: Oracle,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Diagonal derivative of a skew Schur polynomial. With --a and --b it
    /// instead reports the full corner expansion at that weight split.
    Nabla {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<i64>,
        #[arg(long, visible_alias = "report", value_enum, default_value_t)]
        format: Format,
    },
    /// Schur expansion of the second diagonal derivative of s_outer.
    Laplace {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        outer: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Schur expansion of a polynomial read as JSON from a file or stdin.
    Expand {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Corner expansion of the diagonal derivative at one weight split.
    Theorem1 {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The two unweighted corner sums of a skew shape.
    Corollary2 {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Corner expansion with symbolic q; weights are polynomials in q with
    /// a + b = q - 1. Partitions here are trimmed part lists.
    Theorem3 {
        #[arg(long, default_value = "")]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sweep one identity over all shapes inside the given bounds.
    Verify {
        #[arg(long)]
        identity: String,
        #[arg(long)]
        max_nvars: usize,
        #[arg(long = "max-size")]
        max_size: u64,
        /// Comma-separated weight values, required for theorem1.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        fail_fast: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::H { n, nvars, format } => {
            print_poly(&h(n, nvars), format);
            Ok(0)
        }
        Command::Schur { nvars, outer, inner, oracle, format } => {
            let shape = parse_shape(&outer, &inner, nvars)?;
            let poly = match oracle {
                Oracle::Jt => skew_schur(&shape),
                Oracle::Ssyt => ssyt_skew_schur(&shape),
            };
            print_poly(&poly, format);
            Ok(0)
        }
        Command::Nabla { nvars, outer, inner, a, b, format } => {
            let shape = parse_shape(&outer, &inner, nvars)?;
            match (a, b) {
                (None, None) => {
                    print_poly(&nabla(&skew_schur(&shape)), format);
                }
                (Some(a), Some(b)) => {
                    let report = check_theorem1(&shape, a, b).map_err(|e| e.to_string())?;
                    match format {
                        Format::Text => println!("{}", report.to_text()),
                        Format::Json => println!("{}", report.to_json_string()),
                    }
                }
                _ => return Err("--a and --b must be given together or not at all".to_string()),
            }
            Ok(0)
        }
        Command::Laplace { nvars, outer, format } => {
            let lam = Partition::parse(&outer, nvars).map_err(|e| e.to_string())?;
            let expansion =
                expand_schur_basis(&laplacian(&schur(&lam))).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", expansion.to_text()),
                Format::Json => println!("{}", expansion.to_json_string()),
            }
            Ok(0)
        }
        Command::Expand { input, format } => {
            let source = match input {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| format!("cannot read stdin: {e}"))?;
                    buf
                }
            };
            let poly = MultiPoly::from_json_str(&source).map_err(|e| e.to_string())?;
            let expansion = expand_schur_basis(&poly).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", expansion.to_text()),
                Format::Json => println!("{}", expansion.to_json_string()),
            }
            Ok(0)
        }
        Command::Theorem1 { nvars, outer, inner, a, b, format } => {
            let shape = parse_shape(&outer, &inner, nvars)?;
            let report = check_theorem1(&shape, a, b).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json_string()),
            }
            Ok(0)
        }
        Command::Corollary2 { nvars, outer, inner, format } => {
            let shape = parse_shape(&outer, &inner, nvars)?;
            let (lhs, rhs) = corollary2_sides(&shape);
            match format {
                Format::Text => {
                    println!("lhs: {lhs}");
                    println!("rhs: {rhs}");
                    println!("equal: {}", lhs == rhs);
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "outer": shape.outer().parts(),
                        "inner": shape.inner().parts(),
                        "nvars": shape.nvars(),
                        "lhs": poly_value(&lhs),
                        "rhs": poly_value(&rhs),
                        "equal": lhs == rhs,
                    });
                    println!("{doc}");
                }
            }
            Ok(0)
        }
        Command::Theorem3 { outer, inner, a, b, format } => {
            let outer = parse_trimmed(&outer)?;
            let inner = parse_trimmed(&inner)?;
            let a = QPoly::parse_text(&a).map_err(|e| e.to_string())?;
            let b = QPoly::parse_text(&b).map_err(|e| e.to_string())?;
            let report = check_theorem3(&outer, &inner, &a, &b).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json_string()),
            }
            Ok(0)
        }
        Command::Verify { identity, max_nvars, max_size, a, seed, fail_fast, format } => {
            let identity = Identity::from_str(&identity).map_err(|e| e.to_string())?;
            let a_values = match a {
                Some(list) => parse_int_list(&list)?,
                None => Vec::new(),
            };
            if identity == Identity::Theorem1 && a_values.is_empty() {
                return Err("--a is required for the theorem1 identity".to_string());
            }
            let config = SweepConfig {
                identity,
                max_nvars,
                max_outer_size: max_size,
                a_values,
                seed,
                fail_fast,
            };
            let report = run_sweep(&config).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json_string()),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn parse_shape(outer: &str, inner: &str, nvars: usize) -> Result<SkewShape, String> {
    let outer = Partition::parse(outer, nvars).map_err(|e| e.to_string())?;
    let inner = Partition::parse(inner, nvars).map_err(|e| e.to_string())?;
    Ok(SkewShape::new(outer, inner))
}

/// Parses a partition whose length is the number of listed parts, so no
/// ambient variable count is involved.
fn parse_trimmed(input: &str) -> Result<Partition, String> {
    let tokens = if input.trim().is_empty() { 0 } else { input.split(',').count() };
    Partition::parse(input, tokens).map_err(|e| e.to_string())
}

fn parse_int_list(input: &str) -> Result<Vec<i64>, String> {
    input
        .split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|_| format!("bad integer '{}' in --a", tok.trim()))
        })
        .collect()
}

fn print_poly(poly: &MultiPoly, format: Format) {
    match format {
        Format::Text => println!("{poly}"),
        Format::Json => println!("{}", poly.to_json_string()),
    }
}

/// The polynomial's canonical JSON document as a value, for embedding in a
/// larger document.
fn poly_value(poly: &MultiPoly) -> serde_json::Value {
    serde_json::from_str(&poly.to_json_string()).expect("canonical JSON always parses")
}
