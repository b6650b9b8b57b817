//! Command-line front end over the library: load, validate, fuse, and
//! inspect belief documents, export density grids, and recompute the two
//! built-in reference scenarios.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::bba::Bba;
use crate::dirichlet::DEFAULT_PRIOR_CONSTANT;
use crate::document::{BbaDocument, ConjunctiveDocument, EvidenceDocument};
use crate::error::{Error, Result};
use crate::frame::{Frame, Subset};
use crate::fusion;
use crate::mapping;

/// Largest accepted deviation from a reference value; the references are
/// printed rounded to six decimals.
pub const REPRODUCE_TOLERANCE: f64 = 5e-7;

#[derive(Debug, Parser)]
#[command(
    name = "belief-fusion",
    version,
    about = "Fuse bodies of belief and inspect the evidence behind them"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fuse two bba documents under the chosen rule.
    Fuse {
        #[arg(long, value_enum)]
        rule: Rule,
        a: PathBuf,
        b: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Recompute a reference scenario and fail on any deviation.
    Reproduce {
        #[arg(value_enum)]
        case: Case,
    },
    /// Print pignistic probabilities for a bba document.
    Expect { file: PathBuf },
    /// Print the structural classes of a bba document.
    Classify { file: PathBuf },
    /// Convert a bba document to evidence or back.
    Map {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        /// Prior constant used when deriving evidence from beliefs.
        #[arg(long = "C", default_value_t = DEFAULT_PRIOR_CONSTANT)]
        prior_constant: f64,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Sample an evidence document's density on the simplex as CSV.
    Density {
        file: PathBuf,
        #[arg(long)]
        resolution: usize,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Rule {
    Cumulative,
    Dempster,
    Conjunctive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Case {
    Zadeh,
    Sensors,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Direction {
    ToEvidence,
    ToBba,
}

/// Process exit code for an error: 2 for total conflict, 3 for a failed
/// reproduction, 1 for anything else.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::TotalConflict => 2,
        Error::ReproductionMismatch { .. } => 3,
        _ => 1,
    }
}

impl Cli {
    pub fn run(&self) -> Result<()> {
        match &self.command {
            Command::Fuse { rule, a, b, out } => cmd_fuse(*rule, a, b, out.as_deref()),
            Command::Reproduce { case } => cmd_reproduce(*case),
            Command::Expect { file } => cmd_expect(file),
            Command::Classify { file } => cmd_classify(file),
            Command::Map {
                direction,
                file,
                prior_constant,
                out,
            } => cmd_map(*direction, file, *prior_constant, out.as_deref()),
            Command::Density {
                file,
                resolution,
                out,
            } => cmd_density(file, *resolution, out.as_deref()),
        }
    }
}

fn cmd_fuse(rule: Rule, a: &Path, b: &Path, out: Option<&Path>) -> Result<()> {
    let bba_a = read_document::<BbaDocument>(a)?.to_bba()?;
    let bba_b = read_document::<BbaDocument>(b)?.to_bba()?;
    let json = match rule {
        Rule::Cumulative => to_json(&BbaDocument::from_bba(&fusion::fuse_cumulative(
            &bba_a, &bba_b,
        )?))?,
        Rule::Dempster => to_json(&BbaDocument::from_bba(&fusion::fuse_dempster(
            &bba_a, &bba_b,
        )?))?,
        Rule::Conjunctive => to_json(&ConjunctiveDocument::from_result(
            &fusion::fuse_conjunctive(&bba_a, &bba_b)?,
        ))?,
    };
    emit(out, &json)
}

fn cmd_reproduce(case: Case) -> Result<()> {
    match case {
        Case::Zadeh => reproduce(
            "zadeh",
            Frame::new(["Peter", "Paul", "Mary"])?,
            &[("Peter", 0.99), ("Paul", 0.01)],
            &[("Paul", 0.01), ("Mary", 0.99)],
            &[0.495, 0.010, 0.495, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
        ),
        Case::Sensors => reproduce(
            "sensors",
            Frame::new(["Correct", "Faulty"])?,
            &[("Correct", 0.99), ("*", 0.01)],
            &[("Correct", 0.99), ("*", 0.01)],
            &[0.994975, 0.0, 0.005025],
            &[0.9999, 0.0, 0.0001],
        ),
    }
}

/// Fuse the two inputs under both rules and compare every singleton mass
/// plus the frame mass against the expected rows
/// (singletons in frame order, then the whole frame).
fn reproduce(
    name: &str,
    frame: Frame,
    input_a: &[(&str, f64)],
    input_b: &[(&str, f64)],
    expected_cumulative: &[f64],
    expected_dempster: &[f64],
) -> Result<()> {
    let bba_a = bba_from_pairs(&frame, input_a)?;
    let bba_b = bba_from_pairs(&frame, input_b)?;
    let cumulative = fusion::fuse_cumulative(&bba_a, &bba_b)?;
    let dempster = fusion::fuse_dempster(&bba_a, &bba_b)?;

    let k = frame.cardinality();
    let subsets: Vec<(String, Subset)> = (0..k)
        .map(|i| (frame.label(i).to_string(), frame.singleton(i).unwrap()))
        .chain([("Theta".to_string(), frame.full_set())])
        .collect();

    println!("case: {name}");
    println!("  A: {}", format_pairs(input_a));
    println!("  B: {}", format_pairs(input_b));
    println!();
    let header: Vec<String> = subsets.iter().map(|(l, _)| format!("m({l})")).collect();
    println!("{:<12} {}", "rule", header.join("  "));
    for (rule, bba, expected) in [
        ("cumulative", &cumulative, expected_cumulative),
        ("dempster", &dempster, expected_dempster),
    ] {
        let row: Vec<String> = subsets.iter().map(|(_, s)| g9(bba.mass(*s))).collect();
        println!("{rule:<12} {}", row.join("  "));
        for ((label, subset), want) in subsets.iter().zip(expected) {
            let got = bba.mass(*subset);
            if (got - want).abs() > REPRODUCE_TOLERANCE {
                return Err(Error::ReproductionMismatch {
                    label: format!("{rule} m({label})"),
                    computed: got,
                    expected: *want,
                });
            }
        }
    }
    println!();
    println!("all values match the reference results");
    Ok(())
}

fn bba_from_pairs(frame: &Frame, pairs: &[(&str, f64)]) -> Result<Bba> {
    let entries = pairs
        .iter()
        .map(|(label, mass)| {
            let subset = if *label == "*" {
                frame.full_set()
            } else {
                frame.subset_of_labels([*label])?
            };
            Ok((subset, *mass))
        })
        .collect::<Result<Vec<_>>>()?;
    Bba::new(frame.clone(), entries)
}

fn format_pairs(pairs: &[(&str, f64)]) -> String {
    pairs
        .iter()
        .map(|(label, mass)| {
            let shown = if *label == "*" { "Theta" } else { label };
            format!("{shown}={mass}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_expect(file: &Path) -> Result<()> {
    let doc = read_document::<BbaDocument>(file)?;
    let bba = doc.to_bba()?;
    let frame = bba.frame();
    let cells: Vec<Subset> = match doc.partition()? {
        Some(partition) => partition.cells().to_vec(),
        None => (0..frame.cardinality())
            .map(|i| frame.singleton(i))
            .collect::<Result<Vec<_>>>()?,
    };
    for cell in cells {
        println!("{}: {}", subset_name(frame, cell), g9(bba.pignistic(cell)?));
    }
    let full = frame.full_set();
    println!("Theta: {}", g9(bba.pignistic(full)?));
    Ok(())
}

fn cmd_classify(file: &Path) -> Result<()> {
    let bba = read_document::<BbaDocument>(file)?.to_bba()?;
    let tags: Vec<String> = bba.classify().iter().map(|t| t.to_string()).collect();
    println!("{}", tags.join(" "));
    Ok(())
}

fn cmd_map(
    direction: Direction,
    file: &Path,
    prior_constant: f64,
    out: Option<&Path>,
) -> Result<()> {
    match direction {
        Direction::ToEvidence => {
            let doc = read_document::<BbaDocument>(file)?;
            let bba = doc.to_bba()?;
            let partition = match doc.partition()? {
                Some(partition) => partition,
                None => mapping::implied_partition(&bba)?,
            };
            let evidence = mapping::to_evidence(&bba, &partition, prior_constant)?;
            emit(out, &to_json(&EvidenceDocument::from_evidence(&evidence))?)
        }
        Direction::ToBba => {
            let doc = read_document::<EvidenceDocument>(file)?;
            let bba = mapping::to_bba(&doc.to_evidence()?);
            let mut bba_doc = BbaDocument::from_bba(&bba);
            bba_doc.partition = Some(doc.partition.clone());
            emit(out, &to_json(&bba_doc)?)
        }
    }
}

fn cmd_density(file: &Path, resolution: usize, out: Option<&Path>) -> Result<()> {
    let evidence = read_document::<EvidenceDocument>(file)?.to_evidence()?;
    let grid = evidence.density_grid(resolution)?;
    let mut buffer = Vec::new();
    grid.write_csv(&mut buffer)?;
    let text = String::from_utf8(buffer).expect("CSV output is UTF-8");
    emit(out, &text)
}

fn read_document<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn to_json<T: Serialize>(document: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(document)?;
    text.push('\n');
    Ok(text)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn subset_name(frame: &Frame, subset: Subset) -> String {
    if subset == frame.full_set() {
        return "Theta".to_string();
    }
    let labels = frame.subset_labels(subset);
    if labels.len() == 1 {
        labels[0].to_string()
    } else {
        format!("{{{}}}", labels.join(", "))
    }
}

/// Nine significant digits; trailing zeros are kept so columns align.
fn g9(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (8 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}
