use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use qacodes::bounds::{concat_binary, griesmer_g};
use qacodes::catalog::qam::format_qam_with_comments;
use qacodes::catalog::report::verify_embedded;
use qacodes::catalog::table1::{sweep_parameters, FAMILY_IDS};
use qacodes::catalog::table2::{verify_ct, T_RANGE};
use qacodes::catalog::{
    analyze, build_ct, build_family, read_qam, verify_example2, verify_family, ChainBuilder,
    FamilyParams,
};
use qacodes::code::WeightDistribution;
use qacodes::Error;

#[derive(Parser)]
#[command(
    name = "qacodes",
    version,
    about = "Quaternary additive code constructions and checks"
)]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family code or a chain code and print it as .qam.
    Construct(ConstructArgs),
    /// Enumerate a .qam code and print a JSON report.
    Analyze { file: PathBuf },
    /// Check every family member up to --max-k.
    Table1 {
        #[arg(long, default_value_t = 11)]
        max_k: usize,
    },
    /// Check every row of the 3.5-dimensional chain.
    Table2,
    /// Binary image of a .qam code under the [3,2,2] inner code.
    ConcatBinary { file: PathBuf },
    /// Evaluate the Griesmer sum g(dim2, 2d).
    Griesmer {
        #[arg(long)]
        dim2: usize,
        #[arg(long)]
        d: usize,
    },
    /// Rebuild the worked examples and the embedded matrices.
    VerifyExamples,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Family row, 1 to 10.
    #[arg(long)]
    family: Option<u8>,
    /// Chain row t = n - d.
    #[arg(long)]
    ct: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    k1: Option<usize>,
    #[arg(long)]
    k2: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Length within the chain row; defaults to the longest.
    #[arg(long, requires = "ct")]
    n: Option<usize>,
}

enum Failure {
    Mismatch(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Output text plus whether every check in it passed.
type Outcome = Result<(String, bool), Failure>;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn construct(a: &ConstructArgs) -> Outcome {
    let (code, comment) = if let Some(id) = a.source.family {
        let p = FamilyParams::from_options(a.k, a.k1, a.k2, a.m)?;
        let code = build_family(id, &p)?;
        (
            code,
            format!("family {id} k={} k1={} k2={} m={}", p.k, p.k1, p.k2, p.m),
        )
    } else {
        let t = a.source.ct.expect("clap enforces one source");
        let b = build_ct(t)?;
        let n = a.n.unwrap_or(b.row.n_max);
        let entry = b
            .entries
            .into_iter()
            .find(|e| e.n == n)
            .ok_or_else(|| Failure::Invalid(format!("n={n} outside C{t}'s range")))?;
        let code = entry.code.ok_or_else(|| {
            Failure::Invalid(format!(
                "C{t} is external ({}); no matrix available",
                b.row.recipe
            ))
        })?;
        (code, format!("C{t} n={n}: {}", b.row.recipe))
    };
    let params = code.params()?;
    let text = format_qam_with_comments(&code, &[comment, params.to_string()]);
    Ok((text, true))
}

#[derive(Serialize)]
struct BinaryReport {
    length: usize,
    dimension: usize,
    min_distance: Option<usize>,
    weight_distribution: WeightDistribution,
    generator: Vec<String>,
}

fn concat(file: &PathBuf) -> Outcome {
    let code = read_qam(file)?;
    let b = concat_binary(&code)?;
    let wd = WeightDistribution::from_pairs(b.weight_distribution()?);
    let report = BinaryReport {
        length: b.length(),
        dimension: b.dimension(),
        min_distance: wd.min_distance(),
        weight_distribution: wd,
        generator: b.generator.rows().iter().map(|r| r.to_string()).collect(),
    };
    Ok((json(&report), true))
}

#[derive(Serialize)]
struct GriesmerReport {
    dim2: usize,
    d: usize,
    g: u64,
    /// Shortest length the bound allows.
    min_length: u64,
}

fn griesmer(dim2: usize, d: usize) -> Outcome {
    let g = griesmer_g(dim2, 2 * d)?;
    Ok((
        json(&GriesmerReport {
            dim2,
            d,
            g,
            min_length: g.div_ceil(3),
        }),
        true,
    ))
}

fn table1(max_k: usize) -> Outcome {
    let mut jobs = Vec::new();
    for id in FAMILY_IDS {
        for p in sweep_parameters(id, max_k)? {
            jobs.push((id, p));
        }
    }
    let checks = jobs
        .par_iter()
        .map(|(id, p)| verify_family(*id, p))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = checks.iter().all(|c| c.passed());
    Ok((json(&checks), ok))
}

fn table2() -> Outcome {
    let mut builder = ChainBuilder::new();
    let checks = T_RANGE
        .map(|t| verify_ct(&mut builder, t))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = checks.iter().all(|c| c.passed());
    Ok((json(&checks), ok))
}

fn verify_examples() -> Outcome {
    let mut all: Vec<_> = verify_example2()?.into_iter().collect();
    all.extend(verify_embedded()?);
    let ok = all.iter().all(|o| o.passed);
    Ok((json(&all), ok))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Analyze { file } => Ok((analyze(&read_qam(file)?)?.to_json() + "\n", true)),
        Command::Table1 { max_k } => table1(*max_k),
        Command::Table2 => table2(),
        Command::ConcatBinary { file } => concat(file),
        Command::Griesmer { dim2, d } => griesmer(*dim2, *d),
        Command::VerifyExamples => verify_examples(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => std::fs::write(path, &text)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        if ok {
            Ok(())
        } else {
            Err(Failure::Mismatch("verification mismatch".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("qacodes: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("qacodes: {msg}");
            ExitCode::from(2)
        }
    }
}
