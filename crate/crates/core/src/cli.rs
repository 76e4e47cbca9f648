//! Command-line front end.
//!
//! Every command takes `--type`/`--rank`, an output `--format` (`table`,
//! `json` or `csv`) and an optional `--output` path. Exit codes: 0 success,
//! 2 bad arguments or root system, 3 feasibility gate, 4 overflow.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::bwb::{bwb_line_bundle, BwbResult};
use crate::character::CharacterElt;
use crate::error::Error;
use crate::flag_cohomology::{FlagVariety, HhReport, KostantReport};
use crate::rep_theory::{decompose, tensor_character, weyl_dimension, Decomposition};
use crate::root_system::{RootSystem, TypeLabel, Weight};

#[derive(Debug, Parser)]
#[command(
    name = "flagchar",
    version,
    about = "Exact characters of simple Lie groups and polyvector fields on G/B"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Cartan type letter (A-G)
    #[arg(long = "type", value_name = "LETTER")]
    type_label: String,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run feasibility-gated types anyway
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose V(lambda) ⊗ V(mu) into irreducibles
    DecomposeTensor {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Compare the support of V(rho) ⊗ V(rho) with the dominant weights below 2rho
    VerifyKostant {
        #[command(flatten)]
        common: Common,
    },
    /// Euler characteristic of polyvector fields, one exterior degree, or a line bundle
    EulerChar {
        #[command(flatten)]
        common: Common,
        /// Exterior degree p of ∧^p T (default: all degrees summed)
        #[arg(long, conflicts_with = "weight")]
        degree: Option<usize>,
        /// Line bundle L(weight) instead of polyvector fields
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Borel-Weil-Bott for the line bundle L(weight)
    Bwb {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// H^0 of ∧^{n-1} T as a sum of irreducibles
    Wahl {
        #[command(flatten)]
        common: Common,
    },
    /// Lower bounds for the components of H(G/B, ∧T)
    ReportHh {
        #[command(flatten)]
        common: Common,
    },
    /// Dominant weights below a dominant weight (default 2rho)
    DominantBelow {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::DecomposeTensor { common, .. }
            | Command::VerifyKostant { common }
            | Command::EulerChar { common, .. }
            | Command::Bwb { common, .. }
            | Command::Wahl { common }
            | Command::ReportHh { common }
            | Command::DominantBelow { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::DecomposeTensor { .. } => "decompose-tensor",
            Command::VerifyKostant { .. } => "verify-kostant",
            Command::EulerChar { .. } => "euler-char",
            Command::Bwb { .. } => "bwb",
            Command::Wahl { .. } => "wahl",
            Command::ReportHh { .. } => "report-hh",
            Command::DominantBelow { .. } => "dominant-below",
        }
    }
}

/// What a run produced: exit status plus the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn failure(code: i32, message: impl Into<String>) -> Self {
        CliOutcome {
            code,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::FeasibilityGate { .. } => 3,
            Error::Overflow(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: format!("error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: format!("error: {}", message.into()),
    }
}

fn parse_weight(rs: &RootSystem, flag: &str, text: &str) -> Result<Weight, Failure> {
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| usage(format!("--{flag} {text:?}: {e}")))?;
    if coords.len() != rs.rank() {
        return Err(usage(format!(
            "--{flag} {text:?}: expected {} coordinates, got {}",
            rs.rank(),
            coords.len()
        )));
    }
    Ok(Weight::from(coords))
}

fn flag_variety<'a>(rs: &'a RootSystem, common: &Common) -> Result<FlagVariety<'a>, Failure> {
    if common.force {
        Ok(FlagVariety::new_forced(rs))
    } else {
        Ok(FlagVariety::new(rs)?)
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    #[serde(rename = "type")]
    type_label: String,
    rank: usize,
    command: &'a str,
    result: T,
}

#[derive(Serialize)]
struct ComponentRow {
    weight: Weight,
    multiplicity: i64,
    dimension: String,
}

#[derive(Serialize)]
struct DecompositionResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bundle: Option<String>,
    decomposition: Decomposition,
    components: Vec<ComponentRow>,
    #[serde(rename = "virtual")]
    is_virtual: bool,
    total_multiplicity: String,
    dimension: String,
}

#[derive(Serialize)]
struct BwbReport {
    weight: Weight,
    #[serde(flatten)]
    outcome: BwbResult,
}

#[derive(Serialize)]
struct DominantBelowResult {
    weight: Weight,
    count: usize,
    weights: Vec<Weight>,
}

/// Everything needed to render one command's result in any format.
enum Report {
    Decomposition { title: String, result: DecompositionResult },
    Kostant(KostantReport),
    Bwb(BwbReport),
    Hh(HhReport),
    DominantBelow(DominantBelowResult),
}

fn decomposition_result(
    rs: &RootSystem,
    d: Decomposition,
    lambda: Option<Weight>,
    mu: Option<Weight>,
    bundle: Option<String>,
) -> Result<DecompositionResult, Failure> {
    let components = d
        .iter()
        .map(|(w, &m)| {
            Ok(ComponentRow {
                weight: w.clone(),
                multiplicity: m,
                dimension: weyl_dimension(rs, w)?.to_string(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(DecompositionResult {
        lambda,
        mu,
        bundle,
        is_virtual: d.is_virtual(),
        total_multiplicity: d.total_multiplicity().to_string(),
        dimension: d.dimension(rs)?.to_string(),
        components,
        decomposition: d,
    })
}

fn compute(rs: &RootSystem, command: &Command) -> Result<Report, Failure> {
    let common = command.common();
    Ok(match command {
        Command::DecomposeTensor { lambda, mu, .. } => {
            let lambda = parse_weight(rs, "lambda", lambda)?;
            let mu = parse_weight(rs, "mu", mu)?;
            let d = decompose(rs, &tensor_character(rs, &lambda, &mu)?)?;
            Report::Decomposition {
                title: format!("V{lambda} ⊗ V{mu} in {}", rs.name()),
                result: decomposition_result(rs, d, Some(lambda), Some(mu), None)?,
            }
        }
        Command::VerifyKostant { .. } => Report::Kostant(flag_variety(rs, common)?.verify_kostant()?),
        Command::EulerChar { degree, weight, .. } => {
            let (bundle, chm) = if let Some(text) = weight {
                let w = parse_weight(rs, "weight", text)?;
                (format!("L{w}"), CharacterElt::monomial(w.checked_neg()?))
            } else {
                let fv = flag_variety(rs, common)?;
                let graded = fv.exterior_character(false)?;
                match degree {
                    Some(p) => {
                        let piece = graded.degree(*p).cloned().ok_or_else(|| {
                            usage(format!(
                                "--degree {p}: exterior degrees run 0..={}",
                                graded.top_degree()
                            ))
                        })?;
                        (format!("∧^{p} T"), piece)
                    }
                    None => ("∧• T".to_string(), graded.total()?),
                }
            };
            let chi = crate::flag_cohomology::euler_characteristic(rs, &chm)?;
            let d = decompose(rs, &chi)?;
            Report::Decomposition {
                title: format!("Euler characteristic of {bundle} on {}/B", rs.name()),
                result: decomposition_result(rs, d, None, None, Some(bundle))?,
            }
        }
        Command::Bwb { weight, .. } => {
            let w = parse_weight(rs, "weight", weight)?;
            let outcome = bwb_line_bundle(rs, &w)?;
            Report::Bwb(BwbReport { weight: w, outcome })
        }
        Command::Wahl { .. } => {
            let d = flag_variety(rs, common)?.wahl_h0()?;
            Report::Decomposition {
                title: format!("H^0 of ∧^(n-1) T on {}/B", rs.name()),
                result: decomposition_result(rs, d, None, None, Some("∧^(n-1) T".into()))?,
            }
        }
        Command::ReportHh { .. } => Report::Hh(flag_variety(rs, common)?.hh_component_report()?),
        Command::DominantBelow { weight, .. } => {
            let mu = match weight {
                Some(text) => parse_weight(rs, "weight", text)?,
                None => rs.two_rho(),
            };
            let weights = rs.enumerate_dominant_below(&mu)?;
            Report::DominantBelow(DominantBelowResult {
                weight: mu,
                count: weights.len(),
                weights,
            })
        }
    })
}

fn plain(w: &Weight) -> String {
    let s = w.to_string();
    s[1..s.len() - 1].to_string()
}

fn spaced(w: &Weight) -> String {
    w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn module_name(w: &Weight) -> String {
    format!("V({})", plain(w))
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let mut s = String::new();
        for (k, cell) in cells.iter().enumerate() {
            if k + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.extend(std::iter::repeat_n(' ', widths[k] - cell.chars().count() + 2));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        line(row);
    }
    out
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Decomposition { title, result } => {
            writeln!(out, "{title}").unwrap();
            let rows: Vec<Vec<String>> = result
                .components
                .iter()
                .map(|c| vec![module_name(&c.weight), c.multiplicity.to_string(), c.dimension.clone()])
                .collect();
            out.push_str(&table(&["module", "multiplicity", "dimension"], &rows));
            writeln!(out, "components: {}", result.total_multiplicity).unwrap();
            writeln!(out, "dimension: {}", result.dimension).unwrap();
            if result.is_virtual {
                writeln!(out, "virtual: yes").unwrap();
            }
        }
        Report::Kostant(r) => {
            let rows: Vec<Vec<String>> = r
                .support_tensor
                .union(&r.support_order)
                .map(|w| {
                    vec![
                        module_name(w),
                        r.multiplicities.multiplicity(w).to_string(),
                        if r.support_order.contains(w) { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&["module", "m", "below 2rho"], &rows));
            writeln!(out, "tensor support: {}", r.support_tensor.len()).unwrap();
            writeln!(out, "dominance support: {}", r.support_order.len()).unwrap();
            writeln!(
                out,
                "conjecture holds: {}",
                if r.conjecture_holds { "yes" } else { "no" }
            )
            .unwrap();
            if !r.counterexamples.is_empty() {
                let list: Vec<String> = r.counterexamples.iter().map(module_name).collect();
                writeln!(out, "counterexamples: {}", list.join(", ")).unwrap();
            }
        }
        Report::Bwb(r) => match &r.outcome {
            BwbResult::Vanishes => writeln!(out, "all cohomology of L({}) vanishes", plain(&r.weight)).unwrap(),
            BwbResult::Cohomology {
                degree,
                dual_highest_weight,
            } => {
                let trivial = if dual_highest_weight.is_zero() {
                    " (trivial)"
                } else {
                    ""
                };
                writeln!(out, "H^{degree} = {}^*{trivial}", module_name(dual_highest_weight)).unwrap();
            }
        },
        Report::Hh(r) => {
            let rows: Vec<Vec<String>> = r
                .components
                .iter()
                .map(|c| {
                    vec![
                        module_name(&c.weight),
                        c.multiplicity_lower_bound.to_string(),
                        if c.candidate { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&["module", "multiplicity >=", "candidate"], &rows));
            writeln!(out, "multiplicities are lower bounds for H(G/B, ∧T)").unwrap();
            writeln!(out, "total lower bound: {}", r.total_lower_bound).unwrap();
            writeln!(out, "flagged: {}", r.flagged.len()).unwrap();
        }
        Report::DominantBelow(r) => {
            let rows: Vec<Vec<String>> = r.weights.iter().map(|w| vec![plain(w)]).collect();
            out.push_str(&table(&["weight"], &rows));
            writeln!(out, "count: {}", r.count).unwrap();
        }
    }
    out
}

fn render_csv(report: &Report) -> Result<String, Failure> {
    let mut writer = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(Vec::new());
    let io = |e: csv::Error| usage(format!("csv: {e}"));
    match report {
        Report::Decomposition { result, .. } => {
            writer.write_record(["weight", "multiplicity"]).map_err(io)?;
            for c in &result.components {
                writer
                    .write_record([spaced(&c.weight), c.multiplicity.to_string()])
                    .map_err(io)?;
            }
        }
        Report::Kostant(r) => {
            writer
                .write_record(["weight", "multiplicity", "below_two_rho"])
                .map_err(io)?;
            for w in r.support_tensor.union(&r.support_order) {
                writer
                    .write_record([
                        spaced(w),
                        r.multiplicities.multiplicity(w).to_string(),
                        r.support_order.contains(w).to_string(),
                    ])
                    .map_err(io)?;
            }
        }
        Report::Bwb(r) => {
            writer
                .write_record(["weight", "degree", "dual_highest_weight"])
                .map_err(io)?;
            let (degree, dual) = match &r.outcome {
                BwbResult::Vanishes => (String::new(), String::new()),
                BwbResult::Cohomology {
                    degree,
                    dual_highest_weight,
                } => (degree.to_string(), spaced(dual_highest_weight)),
            };
            writer.write_record([spaced(&r.weight), degree, dual]).map_err(io)?;
        }
        Report::Hh(r) => {
            writer
                .write_record(["weight", "multiplicity_lower_bound", "candidate"])
                .map_err(io)?;
            for c in &r.components {
                writer
                    .write_record([
                        spaced(&c.weight),
                        c.multiplicity_lower_bound.to_string(),
                        c.candidate.to_string(),
                    ])
                    .map_err(io)?;
            }
        }
        Report::DominantBelow(r) => {
            writer.write_record(["weight"]).map_err(io)?;
            for w in &r.weights {
                writer.write_record([spaced(w)]).map_err(io)?;
            }
        }
    }
    let bytes = writer.into_inner().map_err(|e| usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_json(rs: &RootSystem, command: &str, report: &Report) -> Result<String, Failure> {
    fn wrap<T: Serialize>(rs: &RootSystem, command: &str, result: &T) -> Result<String, Failure> {
        let envelope = Envelope {
            type_label: rs.label().to_string(),
            rank: rs.rank(),
            command,
            result,
        };
        let mut s = serde_json::to_string_pretty(&envelope).map_err(|e| usage(format!("json: {e}")))?;
        s.push('\n');
        Ok(s)
    }
    match report {
        Report::Decomposition { result, .. } => wrap(rs, command, result),
        Report::Kostant(r) => wrap(rs, command, r),
        Report::Bwb(r) => wrap(rs, command, r),
        Report::Hh(r) => wrap(rs, command, r),
        Report::DominantBelow(r) => wrap(rs, command, r),
    }
}

fn execute(cli: &Cli) -> Result<(String, Option<PathBuf>), Failure> {
    let common = cli.command.common();
    let label: TypeLabel = common.type_label.parse()?;
    let rs = RootSystem::new(label, common.rank)?;
    let report = compute(&rs, &cli.command)?;
    let text = match common.format {
        Format::Table => render_table(&report),
        Format::Json => render_json(&rs, cli.command.name(), &report)?,
        Format::Csv => render_csv(&report)?,
    };
    Ok((text, common.output.clone()))
}

/// Parses `args` (program name first) and runs the command.
pub fn run_cli<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CliOutcome::failure(2, text),
            };
        }
    };
    match execute(&cli) {
        Ok((text, None)) => CliOutcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => CliOutcome {
                code: 0,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => CliOutcome::failure(1, format!("error: cannot write {}: {e}\n", path.display())),
        },
        Err(f) => CliOutcome::failure(f.code, format!("{}\n", f.message)),
    }
}

/// Total multiplicity column of a rendered CSV decomposition; used by tests.
#[doc(hidden)]
pub fn csv_multiplicity_sum(text: &str) -> BigInt {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .filter_map(|r| r.ok())
        .filter_map(|r| r.get(1).and_then(|m| m.parse::<i64>().ok()))
        .map(BigInt::from)
        .sum()
}
