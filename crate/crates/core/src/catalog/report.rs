//! Verification reports computed by enumeration.

use serde::Serialize;

use crate::bounds::{classify, griesmer_gap, nonexistence};
use crate::code::{AdditiveCode, CodeParams, WeightDistribution};
use crate::construct::{generalized_x, SplitCode};
use crate::error::Result;

use super::matrices::{embedded_matrix, EmbeddedName};

/// Serialized with keys in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub dim2: usize,
    pub d: usize,
    pub weight_distribution: WeightDistribution,
    pub asep: bool,
    pub meets_griesmer: bool,
    pub gdo: bool,
    pub gpo: bool,
    pub griesmer_gap: i64,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn params(&self) -> CodeParams {
        CodeParams::new(self.n, self.dim2, self.d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Notes for a missing `[n+1, dim2, d+1]` neighbour.
fn nonexistence_notes(p: CodeParams) -> Option<String> {
    nonexistence(p.n + 1, p.dim2, p.d + 1).map(|f| {
        format!(
            "{} does not exist: {}",
            CodeParams::new(f.n, f.dim2, f.d),
            f.source
        )
    })
}

pub fn analyze(code: &AdditiveCode) -> Result<VerificationReport> {
    let weight_distribution = code.weight_distribution()?;
    let params = code.params()?;
    let CodeParams { n, dim2, d } = params;
    let class = classify(n, dim2, d)?;
    let mut notes = Vec::new();
    if !code.is_full_rank() {
        notes.push(format!(
            "{} generator rows span only {dim2} dimensions over GF(2)",
            code.num_rows()
        ));
    }
    notes.extend(nonexistence_notes(params));
    Ok(VerificationReport {
        n,
        dim2,
        d,
        asep: code.is_asep()?,
        meets_griesmer: class.meets_griesmer,
        gdo: class.gdo,
        gpo: class.gpo,
        griesmer_gap: griesmer_gap(n, dim2, d)?,
        weight_distribution,
        notes,
    })
}

/// Like [`analyze`], with notes on any departure from `expected` parameters or distribution.
pub fn analyze_against(
    code: &AdditiveCode,
    expected: CodeParams,
    distribution: Option<&WeightDistribution>,
) -> Result<(VerificationReport, bool)> {
    let mut report = analyze(code)?;
    let mut ok = true;
    if report.params() != expected {
        ok = false;
        report
            .notes
            .push(format!("expected {expected}, observed {}", report.params()));
    }
    if let Some(wd) = distribution {
        if *wd != report.weight_distribution {
            ok = false;
            report.notes.push(format!(
                "expected distribution {wd}, observed {}",
                report.weight_distribution
            ));
        }
    }
    Ok((report, ok))
}

/// A report paired with whether it agrees with the quoted values.
#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutcome {
    pub name: String,
    pub expected: CodeParams,
    pub expected_distribution: WeightDistribution,
    pub passed: bool,
    pub report: VerificationReport,
}

/// The two juxtapositions of `A16` with `A38` and `A43`.
pub fn verify_example2() -> Result<[ExampleOutcome; 2]> {
    let a16 = SplitCode::new(embedded_matrix(EmbeddedName::A16), 1);
    let null = AdditiveCode::null(a16.code.num_rows());
    let run = |other: EmbeddedName,
               expected: CodeParams,
               pairs: &[(usize, u64)]|
     -> Result<ExampleOutcome> {
        let c2 = SplitCode::new(embedded_matrix(other), 1);
        let code = generalized_x(&a16, &c2, &null)?;
        let wd = WeightDistribution::from_pairs(pairs.iter().copied());
        let (report, ok) = analyze_against(&code, expected, Some(&wd))?;
        Ok(ExampleOutcome {
            name: format!("A16 | {other}"),
            expected,
            expected_distribution: wd,
            passed: ok && report.gpo,
            report,
        })
    };
    Ok([
        run(
            EmbeddedName::A38,
            CodeParams::new(54, 7, 40),
            &[(0, 1), (40, 101), (44, 26)],
        )?,
        run(
            EmbeddedName::A43,
            CodeParams::new(59, 7, 44),
            &[(0, 1), (44, 108), (48, 19)],
        )?,
    ])
}

/// Reports for every embedded matrix whose parameters are fully known.
pub fn verify_embedded() -> Result<Vec<ExampleOutcome>> {
    EmbeddedName::ALL
        .into_iter()
        .filter_map(|name| name.expected_params().map(|p| (name, p)))
        .map(|(name, expected)| {
            let code = embedded_matrix(name);
            let (report, passed) = analyze_against(&code, expected, None)?;
            Ok(ExampleOutcome {
                name: name.to_string(),
                expected,
                expected_distribution: report.weight_distribution.clone(),
                passed,
                report,
            })
        })
        .collect()
}
