use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cmkit::census::{run_census, CensusOptions};
use cmkit::output::{join, join_matrix, Emitter, Format, Row};
use cmkit::verify::{run_verify, Statement};
use cmkit::{CliError, DEFAULT_CENSUS_RANK, DEFAULT_VERIFY_RANK, SCHEMA};
use cmkit_core::{
    cf_expand, complement_basis, genus_from_changemaker, gram_matrix, leading_ones, linear_gram,
    standard_basis, torsion_sequence, ChangemakerVector,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "cmkit",
    version,
    about = "Changemaker lattices, linear lattices and torsion coefficients"
)]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    /// Largest rank n for census (default 4) and verify (default 8).
    #[arg(long, global = true)]
    max_rank: Option<usize>,
    /// Only print summaries and counterexamples.
    #[arg(long, global = true)]
    quiet: bool,
    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Negative continued fraction of p/q.
    Cf { p: i64, q: i64 },
    /// Gram matrix of a changemaker complement, or of the linear lattice with --pq.
    Gram {
        #[arg(required_unless_present = "pq", conflicts_with = "pq")]
        sigma: Vec<i64>,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        pq: Option<Vec<i64>>,
    },
    /// Genus, determinant and torsion coefficients of a changemaker.
    Torsion {
        #[arg(required = true)]
        sigma: Vec<i64>,
    },
    /// One record per changemaker with sigma_0 = 1, ranks 1..=max-rank.
    Census {
        /// Keep only vectors whose last entry is this value.
        #[arg(long)]
        sigma_n: Option<i64>,
    },
    /// Check a statement over every changemaker up to max-rank.
    Verify { statement: StatementArg },
}

#[derive(Clone, Copy, ValueEnum)]
enum StatementArg {
    Lemma4,
    Lemma5,
    Theorem1,
}

#[derive(Serialize)]
struct CfRecord {
    schema: &'static str,
    p: i64,
    q: i64,
    cf: Vec<i64>,
}

impl Row for CfRecord {
    fn csv_header() -> &'static [&'static str] {
        &["schema", "p", "q", "cf"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.schema.into(),
            self.p.to_string(),
            self.q.to_string(),
            join(&self.cf),
        ]
    }
}

#[derive(Serialize)]
struct GramRecord {
    schema: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
    p: i64,
    basis: Option<Vec<Vec<i64>>>,
    gram: Vec<Vec<i64>>,
    determinant: i64,
}

impl Row for GramRecord {
    fn csv_header() -> &'static [&'static str] {
        &["schema", "sigma", "p", "q", "basis", "gram", "determinant"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.schema.into(),
            self.sigma.as_deref().map(join).unwrap_or_default(),
            self.p.to_string(),
            self.q.map(|q| q.to_string()).unwrap_or_default(),
            self.basis.as_deref().map(join_matrix).unwrap_or_default(),
            join_matrix(&self.gram),
            self.determinant.to_string(),
        ]
    }
}

#[derive(Serialize)]
struct TorsionRecord {
    schema: &'static str,
    sigma: Vec<i64>,
    g: i64,
    p: i64,
    t: Vec<i64>,
}

impl Row for TorsionRecord {
    fn csv_header() -> &'static [&'static str] {
        &["schema", "sigma", "g", "p", "t"]
    }
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.schema.into(),
            join(&self.sigma),
            self.g.to_string(),
            self.p.to_string(),
            join(&self.t),
        ]
    }
}

fn changemaker(sigma: &[i64]) -> Result<ChangemakerVector, CliError> {
    Ok(ChangemakerVector::new(sigma.to_vec())?)
}

fn gram_record(sigma: &[i64], pq: Option<&[i64]>) -> Result<GramRecord, CliError> {
    if let Some(&[p, q]) = pq {
        let g = linear_gram(p, q)?;
        return Ok(GramRecord {
            schema: SCHEMA,
            sigma: None,
            q: Some(q),
            p,
            basis: None,
            gram: g.rows(),
            determinant: g.determinant() as i64,
        });
    }
    let cm = changemaker(sigma)?;
    let basis = if cm.top() == 2 && leading_ones(&cm).is_some() {
        standard_basis(&cm)?
    } else {
        complement_basis(&cm.to_lattice_vector())?
    };
    if basis.is_empty() {
        return Err(CliError::BadInput(
            "sigma needs at least two entries".into(),
        ));
    }
    let g = gram_matrix(&basis)?;
    Ok(GramRecord {
        schema: SCHEMA,
        sigma: Some(sigma.to_vec()),
        q: None,
        p: cm.p(),
        basis: Some(basis.iter().map(|v| v.coords().to_vec()).collect()),
        gram: g.rows(),
        determinant: g.determinant() as i64,
    })
}

/// Returns the process exit code on success.
fn run<W: Write>(cli: &Cli, out: &mut Emitter<W>) -> Result<u8, CliError> {
    let code = match &cli.command {
        Command::Cf { p, q } => {
            let cf = cf_expand(*p, *q)?;
            out.row(&CfRecord {
                schema: SCHEMA,
                p: *p,
                q: *q,
                cf,
            })?;
            0
        }
        Command::Gram { sigma, pq } => {
            out.row(&gram_record(sigma, pq.as_deref())?)?;
            0
        }
        Command::Torsion { sigma } => {
            let cm = changemaker(sigma)?;
            let g = genus_from_changemaker(&cm)?;
            let t = torsion_sequence(&cm)?;
            out.row(&TorsionRecord {
                schema: SCHEMA,
                sigma: sigma.clone(),
                g,
                p: cm.p(),
                t,
            })?;
            0
        }
        Command::Census { sigma_n } => {
            let options = CensusOptions {
                max_rank: cli.max_rank.unwrap_or(DEFAULT_CENSUS_RANK),
                sigma_n: *sigma_n,
            };
            let quiet = cli.quiet;
            let summary = run_census(&options, |r| if quiet { Ok(()) } else { out.row(r) })?;
            out.summary(&summary)?;
            u8::from(!(summary.lemma5_holds && summary.theorem1_holds))
        }
        Command::Verify { statement } => {
            let statement = match statement {
                StatementArg::Lemma4 => Statement::Lemma4,
                StatementArg::Lemma5 => Statement::Lemma5,
                StatementArg::Theorem1 => Statement::Theorem1,
            };
            let max_rank = cli.max_rank.unwrap_or(DEFAULT_VERIFY_RANK);
            let summary = run_verify(statement, max_rank, !cli.quiet, |i| out.row(i))?;
            out.summary(&summary)?;
            u8::from(!summary.holds)
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = Emitter::new(sink, format);
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
