use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use avoid321::enumerate::gen_involutions_avoiding_321;
use avoid321::paths::{
    crossing_sequence, involution_from_labelled_motzkin, involution_from_sequence,
    labelled_motzkin_from_involution, motzkin_from_sequence, CrossingSequence, LatticePath,
};
use avoid321::render::{path_svg, plot_svg};
use avoid321::series::{expand_named, SeriesName};
use avoid321::structure::{classify, Kind};
use avoid321::verify::{self, Suite};
use avoid321::{Error, Permutation, Result};

/// Largest length accepted by `enumerate`.
const MAX_N: usize = 16;

#[derive(Parser)]
#[command(
    name = "avoid321",
    version,
    about = "Involutions avoiding 321: enumeration, series and path bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List I(321)_n in lexicographic order.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Class::All)]
        class: Class,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients 1..=N of a named generating function.
    Coeffs {
        /// phi, f, alpha, beta, gamma, delta, zeta, epsilon, omega or f_minus_gamma
        name: String,
        #[arg(value_name = "N")]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite; exits nonzero iff some check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = verify::DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Convert between an involution, a lattice path and a crossing sequence.
    ///
    /// Input starting with `{` is a crossing sequence, input over U/D/H is the
    /// labelled Motzkin path of an involution, anything else is one-line
    /// notation.
    Convert {
        input: String,
        #[arg(long, value_enum)]
        to: Target,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    All,
    Type12,
    Type21,
    Simple,
    Inflation,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Dyck,
    Motzkin,
    Sequence,
    Involution,
    Svg,
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Singleton => "singleton",
        Kind::Type12 => "type12",
        Kind::Type21 => "type21",
        Kind::Simple => "simple",
        Kind::InflationOfSimple => "inflation",
    }
}

fn class_name(c: Class) -> &'static str {
    match c {
        Class::All => "all",
        Class::Type12 => "type12",
        Class::Type21 => "type21",
        Class::Simple => "simple",
        Class::Inflation => "inflation",
    }
}

#[derive(Serialize)]
struct Listing {
    n: usize,
    class: &'static str,
    count: usize,
    items: Vec<Item>,
}

#[derive(Serialize)]
struct Item {
    involution: String,
    values: Vec<usize>,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    crossing_sequence: Option<Vec<usize>>,
}

fn enumerate(n: usize, class: Class, format: Format) -> Result<String> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::Precondition(format!(
            "n must be in 1..={MAX_N}, got {n}"
        )));
    }
    let mut items = Vec::new();
    for p in gen_involutions_avoiding_321(n)? {
        let kind = classify(&p).kind();
        let keep = match class {
            Class::All => true,
            Class::Type12 => kind == Kind::Type12,
            Class::Type21 => kind == Kind::Type21,
            Class::Simple => kind == Kind::Simple,
            Class::Inflation => kind == Kind::InflationOfSimple,
        };
        if !keep {
            continue;
        }
        let crossing = if kind == Kind::Simple {
            Some(crossing_sequence(&p)?.values().to_vec())
        } else {
            None
        };
        items.push(Item {
            involution: p.to_string(),
            values: p.into_vec(),
            kind: kind_name(kind),
            crossing_sequence: crossing,
        });
    }
    let seq = |s: &[usize]| CrossingSequence::new(s.to_vec()).map(|c| c.to_string());
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for it in &items {
                out.push_str(&it.involution);
                if let Some(s) = &it.crossing_sequence {
                    out.push(' ');
                    out.push_str(&seq(s)?);
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("involution,kind,crossing_sequence\n");
            for it in &items {
                let s = it
                    .crossing_sequence
                    .as_deref()
                    .map(seq)
                    .transpose()?
                    .unwrap_or_default();
                out.push_str(&format!("{},{},\"{s}\"\n", it.involution, it.kind));
            }
            out
        }
        Format::Json => {
            let listing = Listing {
                n,
                class: class_name(class),
                count: items.len(),
                items,
            };
            json(&listing)?
        }
    })
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize)]
struct CoefficientTable {
    name: String,
    order: usize,
    coefficients: Vec<String>,
}

fn coeffs(name: &str, order: usize, format: Format) -> Result<String> {
    let name: SeriesName = name.parse()?;
    let s = expand_named(name, order)?.series;
    let ints = s
        .to_integers()
        .ok_or_else(|| Error::Series(format!("{name} has non-integral coefficients")))?;
    let values: Vec<String> = ints[1..].iter().map(ToString::to_string).collect();
    Ok(match format {
        Format::Text => values
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{} {c}\n", i + 1))
            .collect(),
        Format::Csv => {
            let rows: String = values
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{},{c}\n", i + 1))
                .collect();
            format!("n,coefficient\n{rows}")
        }
        Format::Json => json(&CoefficientTable {
            name: name.to_string(),
            order,
            coefficients: values,
        })?,
    })
}

enum Input {
    Involution(Permutation),
    Path(LatticePath),
    Sequence(CrossingSequence),
}

fn parse_input(s: &str) -> Result<Input> {
    let t = s.trim();
    if t.starts_with('{') {
        Ok(Input::Sequence(t.parse()?))
    } else if !t.is_empty()
        && t.chars().all(|c| "UDHudh:0123456789".contains(c))
        && t.chars().any(|c| c.is_ascii_alphabetic())
    {
        Ok(Input::Path(t.parse()?))
    } else {
        Ok(Input::Involution(t.parse()?))
    }
}

fn convert(input: &str, to: Target) -> Result<String> {
    let parsed = parse_input(input)?;
    if let (Input::Path(m), Target::Svg) = (&parsed, to) {
        return Ok(path_svg(m));
    }
    if let (Input::Sequence(s), Target::Motzkin) = (&parsed, to) {
        return Ok(format!("{}\n", motzkin_from_sequence(s)?));
    }
    let p = match parsed {
        Input::Involution(p) => p,
        Input::Path(m) => involution_from_labelled_motzkin(&m)?,
        Input::Sequence(s) => involution_from_sequence(&s)?,
    };
    Ok(match to {
        Target::Involution => format!("{p}\n"),
        Target::Sequence => format!("{}\n", crossing_sequence(&p)?),
        Target::Motzkin => format!("{}\n", labelled_motzkin_from_involution(&p)?),
        Target::Dyck => {
            let m = labelled_motzkin_from_involution(&p)?;
            if !m.is_dyck() || !m.is_unitary() {
                return Err(Error::Precondition(format!(
                    "{p} has no Dyck path: it has fixed points or contains 321"
                )));
            }
            format!("{m}\n")
        }
        Target::Svg => plot_svg(&p),
    })
}

fn run(cli: Cli) -> Result<(String, bool)> {
    match cli.command {
        Command::Enumerate { n, class, format } => Ok((enumerate(n, class, format)?, true)),
        Command::Coeffs {
            name,
            order,
            format,
        } => Ok((coeffs(&name, order, format)?, true)),
        Command::Verify {
            suite,
            max_n,
            order,
            format,
        } => {
            let report = verify::run(suite.parse::<Suite>()?, max_n, order)?;
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => json(&report)?,
            };
            Ok((text, !report.has_failure()))
        }
        Command::Convert { input, to } => Ok((convert(&input, to)?, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
