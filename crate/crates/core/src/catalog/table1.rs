//! The ten few-weight GPO families: builders, parameter formulas and weight
//! distributions, both as printed and as enumerated.

use serde::Serialize;

use crate::bounds::classify;
use crate::code::{AdditiveCode, CodeParams, WeightDistribution};
use crate::construct::{
    anticode_family, asep, augment, enlarge, one_third, one_third_minus, AnticodeMode, AsepMethod,
};
use crate::error::{invalid, Error, Result};

pub const FAMILY_IDS: std::ops::RangeInclusive<u8> = 1..=10;

/// Family parameters. `k = k1 + k2` whenever a split is used; `m` only matters for rows 3 and 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub k: usize,
    pub k1: usize,
    pub k2: usize,
    pub m: usize,
}

impl FamilyParams {
    pub fn with_k(k: usize) -> Self {
        FamilyParams {
            k,
            k1: 0,
            k2: 0,
            m: 1,
        }
    }

    pub fn split(k1: usize, k2: usize) -> Self {
        FamilyParams {
            k: k1 + k2,
            k1,
            k2,
            m: 1,
        }
    }

    pub fn blocks(k1: usize, k2: usize, m: usize) -> Self {
        FamilyParams {
            m,
            ..Self::split(k1, k2)
        }
    }

    /// Fills in whichever of `k`, `k1`, `k2` is implied by the other two.
    pub fn from_options(
        k: Option<usize>,
        k1: Option<usize>,
        k2: Option<usize>,
        m: Option<usize>,
    ) -> Result<Self> {
        let (k, k1, k2) = match (k, k1, k2) {
            (Some(k), Some(k1), Some(k2)) if k1 + k2 != k => {
                return Err(invalid(format!("k={k} differs from k1 + k2 = {}", k1 + k2)))
            }
            (Some(k), Some(k1), Some(k2)) => (k, k1, k2),
            (None, Some(k1), Some(k2)) => (k1 + k2, k1, k2),
            (Some(k), Some(k1), None) if k1 < k => (k, k1, k - k1),
            (Some(k), None, Some(k2)) if k2 < k => (k, k - k2, k2),
            (Some(k), None, None) => (k, 0, 0),
            _ => return Err(invalid("give k, or two of k, k1, k2")),
        };
        Ok(FamilyParams {
            k,
            k1,
            k2,
            m: m.unwrap_or(1),
        })
    }
}

fn p2(e: usize) -> u64 {
    1u64 << e
}

fn check_id(id: u8) -> Result<()> {
    if !FAMILY_IDS.contains(&id) {
        return Err(invalid(format!("family id {id} outside 1..=10")));
    }
    Ok(())
}

fn is_split(p: &FamilyParams) -> bool {
    p.k1 >= 3 && p.k1 % 2 == 1 && p.k2 >= 4 && p.k2.is_multiple_of(2) && p.k1 + p.k2 == p.k
}

/// Checks `p` against the row's parameter ranges.
pub fn check_range(id: u8, p: &FamilyParams) -> Result<()> {
    check_id(id)?;
    let ok = match id {
        1 | 2 => p.k >= 3 && p.k <= 16,
        3 => is_split(p) && p.m == 1,
        4 => is_split(p) && (2..=3).contains(&p.m),
        5 | 6 => is_split(p),
        7 | 9 => p.k >= 5 && p.k % 2 == 1,
        8 => is_split(p) && p.k2 >= 6 && p.k >= p.k2 + 3,
        10 => is_split(p) && p.k >= 7 && p.k >= p.k2 + 3,
        _ => unreachable!(),
    };
    if !ok {
        return Err(invalid(format!(
            "family {id}: parameters k={} k1={} k2={} m={} outside the row's range ({})",
            p.k,
            p.k1,
            p.k2,
            p.m,
            range_text(id)
        )));
    }
    Ok(())
}

pub fn range_text(id: u8) -> &'static str {
    match id {
        1 | 2 => "k >= 3",
        3 => "odd k1 >= 3, even k2 >= 4, m = 1",
        4 => "odd k1 >= 3, even k2 >= 4, 2 <= m <= 3",
        5 | 6 => "odd k1 >= 3, even k2 >= 4",
        7 | 9 => "odd k >= 5",
        8 => "odd k >= k2 + 3, even k2 >= 6",
        10 => "odd k >= 7, even k2 with 4 <= k2 <= k - 3",
        _ => "",
    }
}

pub fn construction_text(id: u8) -> &'static str {
    match id {
        1 => "asep",
        2 => "augmented extended asep",
        3 | 4 => "anticode, m blocks removed",
        5 => "anticode, third keeping k1 block",
        6 => "anticode, third removing both blocks",
        7 => "one_third",
        8 => "one_third_minus",
        9 => "enlarge(one_third)",
        10 => "enlarge(one_third_minus)",
        _ => "",
    }
}

/// Builds the family code and checks its parameters against the row formula.
pub fn build_family(id: u8, p: &FamilyParams) -> Result<AdditiveCode> {
    check_range(id, p)?;
    let code = match id {
        1 => asep(p.k, AsepMethod::Companion)?,
        2 => augment(&asep(p.k, AsepMethod::Companion)?, true)?,
        3 | 4 => anticode_family(p.k1, p.k2, AnticodeMode::Blocks(p.m))?,
        5 => anticode_family(p.k1, p.k2, AnticodeMode::ThirdK1)?,
        6 => anticode_family(p.k1, p.k2, AnticodeMode::ThirdBoth)?,
        7 => one_third(p.k)?,
        8 => one_third_minus(p.k, p.k2)?,
        9 => enlarge(&one_third(p.k)?)?,
        10 => enlarge(&one_third_minus(p.k, p.k2)?)?,
        _ => unreachable!(),
    };
    let expect = expected_params(id, p)?;
    if (code.n(), code.dim2()) != (expect.n, expect.dim2) {
        return Err(Error::Shape(format!(
            "family {id} built length {} and dim2 {}, formula gives {expect}",
            code.n(),
            code.dim2()
        )));
    }
    Ok(code)
}

/// `(n, dim2, d)` from the row's formula.
#[allow(clippy::manual_div_ceil)]
pub fn expected_params(id: u8, p: &FamilyParams) -> Result<CodeParams> {
    check_range(id, p)?;
    let (k, k1, k2, m) = (p.k, p.k1, p.k2, p.m as u64);
    let (n, d) = match id {
        1 => (p2(k) - 1, 3 * p2(k - 2)),
        2 => (p2(k), 3 * p2(k - 2)),
        3 | 4 => (
            p2(k) - 1 - m * (p2(k2) - 1) / 3,
            3 * p2(k - 2) - m * p2(k2 - 2),
        ),
        5 => ((p2(k) - p2(k1)) / 3, p2(k - 2) - p2(k1 - 2)),
        6 => (
            (p2(k) - p2(k1) - p2(k2) + 1) / 3,
            p2(k - 2) - p2(k1 - 2) - p2(k2 - 2),
        ),
        7 => ((p2(k) + 1) / 3, p2(k - 2)),
        8 => ((p2(k) - p2(k2) + 2) / 3, p2(k - 2) - p2(k2 - 2)),
        9 => ((p2(k) + 1) / 3 + p2(k - 1) - 1, 5 * p2(k - 3)),
        10 => (
            (p2(k) - p2(k2) + 2) / 3 + p2(k - 1) - 1,
            5 * p2(k - 3) - p2(k2 - 2),
        ),
        _ => unreachable!(),
    };
    let dim2 = if id == 2 { k + 2 } else { k };
    Ok(CodeParams::new(n as usize, dim2, d as usize))
}

/// Rows whose codes also meet the Griesmer bound with equality.
pub fn is_griesmer_row(id: u8) -> bool {
    matches!(id, 1 | 2 | 3 | 5 | 6 | 9 | 10)
}

fn dist(terms: &[(u64, u64)]) -> WeightDistribution {
    let mut pairs = vec![(0usize, 1u64)];
    pairs.extend(terms.iter().map(|&(c, w)| (w as usize, c)));
    WeightDistribution::from_pairs(pairs)
}

/// The distribution exactly as tabulated, including its known typesetting errors.
pub fn printed_distribution(id: u8, p: &FamilyParams) -> Result<WeightDistribution> {
    check_range(id, p)?;
    let (k, k1, k2, m) = (p.k, p.k1, p.k2, p.m as u64);
    Ok(match id {
        1 => dist(&[(p2(k), 3 * p2(k - 2))]),
        6 => dist(&[
            (p2(k) - p2(k1) - p2(k2), p2(k - 2) - p2(k1 - 2) - p2(k2 - 2)),
            (p2(k1) - 1, p2(k - 2) - p2(k1 - 2)),
            (p2(k2) - 1, p2(k - 2) - p2(k2 - 2)),
        ]),
        8 => {
            let lead = p2(k - 1) - p2(k1 - 1);
            let d = p2(k - 2) - p2(k2 - 2);
            dist(&[
                (lead, d),
                (lead, d + 1),
                (p2(k1 - 1) - 1, k as u64 - 2),
                (p2(k1 - 1), p2(k - 2) + 1),
            ])
        }
        10 => dist(&[
            (p2(k) - 2, 5 * p2(k - 3) - p2(k2 - 2)),
            (1, 3 * p2(k - 2) - p2(k2 - 2)),
        ]),
        _ => corrected(id, k, k1, k2, m),
    })
}

/// The distribution a correct construction produces.
pub fn corrected_distribution(id: u8, p: &FamilyParams) -> Result<WeightDistribution> {
    check_range(id, p)?;
    Ok(corrected(id, p.k, p.k1, p.k2, p.m as u64))
}

fn corrected(id: u8, k: usize, k1: usize, k2: usize, m: u64) -> WeightDistribution {
    match id {
        1 => dist(&[(p2(k) - 1, 3 * p2(k - 2))]),
        2 => dist(&[(p2(k + 2) - 4, 3 * p2(k - 2)), (3, p2(k))]),
        3 | 4 => dist(&[
            (p2(k) - p2(k1), 3 * p2(k - 2) - m * p2(k2 - 2)),
            (p2(k1) - 1, 3 * p2(k - 2)),
        ]),
        5 => dist(&[
            (p2(k) - p2(k2), p2(k - 2) - p2(k1 - 2)),
            (p2(k2) - 1, p2(k - 2)),
        ]),
        6 => dist(&[
            (
                p2(k) - p2(k1) - p2(k2) + 1,
                p2(k - 2) - p2(k1 - 2) - p2(k2 - 2),
            ),
            (p2(k1) - 1, p2(k - 2) - p2(k1 - 2)),
            (p2(k2) - 1, p2(k - 2) - p2(k2 - 2)),
        ]),
        7 => dist(&[(p2(k - 1) - 1, p2(k - 2)), (p2(k - 1), p2(k - 2) + 1)]),
        8 => {
            let lead = p2(k - 1) - p2(k1 - 1);
            let d = p2(k - 2) - p2(k2 - 2);
            dist(&[
                (lead, d),
                (lead, d + 1),
                (p2(k1 - 1) - 1, p2(k - 2)),
                (p2(k1 - 1), p2(k - 2) + 1),
            ])
        }
        9 => dist(&[(p2(k) - 2, 5 * p2(k - 3)), (1, 3 * p2(k - 2))]),
        10 => dist(&[
            (p2(k) - p2(k1), 5 * p2(k - 3) - p2(k2 - 2)),
            (p2(k1) - 2, 5 * p2(k - 3)),
            (1, 3 * p2(k - 2)),
        ]),
        _ => unreachable!(),
    }
}

/// How a printed distribution departs from the enumerated one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrintedDeviation {
    /// Only the count at `weight` is wrong.
    Coefficient { weight: usize },
    /// One exponent is wrong; the counts are right.
    Exponent { printed: usize, actual: usize },
    /// The printed polynomial has the wrong set of weights.
    Shape,
}

pub fn printed_deviation(id: u8, p: &FamilyParams) -> Result<Option<PrintedDeviation>> {
    check_range(id, p)?;
    let k = p.k;
    Ok(match id {
        1 => Some(PrintedDeviation::Coefficient {
            weight: 3 << (k - 2),
        }),
        6 => Some(PrintedDeviation::Coefficient {
            weight: (1 << (k - 2)) - (1 << (p.k1 - 2)) - (1 << (p.k2 - 2)),
        }),
        8 => Some(PrintedDeviation::Exponent {
            printed: k - 2,
            actual: 1 << (k - 2),
        }),
        10 => Some(PrintedDeviation::Shape),
        _ => None,
    })
}

pub fn deviation_note(id: u8) -> Option<&'static str> {
    match id {
        1 => Some("printed count 2^k at weight 3*2^(k-2); enumeration gives 2^k - 1"),
        6 => Some("printed first count 2^k - 2^k1 - 2^k2; enumeration gives 2^k - 2^k1 - 2^k2 + 1"),
        8 => Some("printed exponent k - 2 on the (2^(k1-1) - 1) term; enumeration gives 2^(k-2)"),
        10 => Some(
            "printed as two nonzero weights; enumeration gives three: \
             (2^k - 2^k1) at 5*2^(k-3) - 2^(k2-2), (2^k1 - 2) at 5*2^(k-3), 1 at 3*2^(k-2)",
        ),
        _ => None,
    }
}

/// In-range parameter choices with `k <= max_k`, in a fixed order.
pub fn sweep_parameters(id: u8, max_k: usize) -> Result<Vec<FamilyParams>> {
    check_id(id)?;
    let splits = || {
        let mut out = Vec::new();
        for k in 7..=max_k {
            for k2 in (4..k).step_by(2) {
                let k1 = k - k2;
                if k1 >= 3 && k1 % 2 == 1 {
                    out.push(FamilyParams::split(k1, k2));
                }
            }
        }
        out
    };
    let odd_k = |from: usize| {
        (from..=max_k)
            .filter(|k| k % 2 == 1)
            .map(FamilyParams::with_k)
    };
    let out: Vec<FamilyParams> = match id {
        1 | 2 => (3..=max_k.min(16)).map(FamilyParams::with_k).collect(),
        3 | 5 | 6 => splits(),
        4 => splits()
            .into_iter()
            .flat_map(|p| [2, 3].map(|m| FamilyParams { m, ..p }))
            .collect(),
        7 | 9 => odd_k(5).collect(),
        8 | 10 => splits()
            .into_iter()
            .filter(|p| check_range(id, p).is_ok())
            .collect(),
        _ => unreachable!(),
    };
    Ok(out)
}

/// Outcome of building one family member and comparing it with the formulas.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCheck {
    pub row: u8,
    pub params: FamilyParams,
    pub expected: CodeParams,
    pub observed: CodeParams,
    pub printed: WeightDistribution,
    pub corrected: WeightDistribution,
    pub observed_distribution: WeightDistribution,
    pub matches_printed: bool,
    pub matches_corrected: bool,
    pub gpo: bool,
    pub meets_griesmer: bool,
    pub notes: Vec<String>,
}

impl FamilyCheck {
    /// Parameters, corrected distribution and optimality class all agree.
    pub fn passed(&self) -> bool {
        self.expected == self.observed
            && self.matches_corrected
            && self.gpo
            && self.meets_griesmer == is_griesmer_row(self.row)
    }
}

pub fn verify_family(id: u8, p: &FamilyParams) -> Result<FamilyCheck> {
    let code = build_family(id, p)?;
    let observed_distribution = code.weight_distribution()?;
    let observed = code.params()?;
    let expected = expected_params(id, p)?;
    let printed = printed_distribution(id, p)?;
    let corrected = corrected_distribution(id, p)?;
    let class = classify(observed.n, observed.dim2, observed.d)?;
    let mut notes = Vec::new();
    if printed != observed_distribution {
        if let Some(note) = deviation_note(id) {
            notes.push(note.to_string());
        }
    }
    if expected != observed {
        notes.push(format!("expected {expected}, observed {observed}"));
    }
    Ok(FamilyCheck {
        row: id,
        params: *p,
        expected,
        observed,
        matches_printed: printed == observed_distribution,
        matches_corrected: corrected == observed_distribution,
        printed,
        corrected,
        observed_distribution,
        gpo: class.gpo,
        meets_griesmer: class.meets_griesmer,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        let c = build_family(1, &FamilyParams::with_k(7)).unwrap();
        assert_eq!(c.params().unwrap(), CodeParams::new(127, 7, 96));
        let p = FamilyParams::split(3, 4);
        let c = build_family(6, &p).unwrap();
        assert_eq!(c.params().unwrap(), CodeParams::new(35, 7, 26));
        assert_eq!(
            printed_distribution(6, &p).unwrap().to_string(),
            "1+104z^26+15z^28+7z^30"
        );
        let c = build_family(9, &FamilyParams::with_k(5)).unwrap();
        assert_eq!(
            c.weight_distribution().unwrap().to_string(),
            "1+30z^20+z^24"
        );
    }

    #[test]
    fn small_rows_match_corrected_formulas() {
        for id in FAMILY_IDS {
            for p in sweep_parameters(id, 9).unwrap() {
                let check = verify_family(id, &p).unwrap();
                assert!(check.passed(), "row {id} {p:?}: {check:?}");
                assert_eq!(
                    check.observed_distribution.total(),
                    1 << check.observed.dim2
                );
            }
        }
    }

    #[test]
    fn ranges_are_enforced() {
        assert!(build_family(0, &FamilyParams::with_k(5)).is_err());
        assert!(build_family(7, &FamilyParams::with_k(4)).is_err());
        assert!(build_family(8, &FamilyParams::split(3, 4)).is_err());
        assert!(build_family(4, &FamilyParams::blocks(3, 4, 1)).is_err());
        assert!(build_family(5, &FamilyParams::split(4, 4)).is_err());
    }

    #[test]
    fn option_resolution() {
        let p = FamilyParams::from_options(Some(9), None, Some(4), None).unwrap();
        assert_eq!((p.k1, p.k2, p.m), (5, 4, 1));
        let p = FamilyParams::from_options(None, Some(3), Some(4), Some(2)).unwrap();
        assert_eq!((p.k, p.m), (7, 2));
        assert!(FamilyParams::from_options(Some(7), Some(3), Some(3), None).is_err());
        assert!(FamilyParams::from_options(None, None, None, None).is_err());
    }

    #[test]
    fn sweep_shapes() {
        assert_eq!(sweep_parameters(8, 11).unwrap().len(), 3);
        assert_eq!(sweep_parameters(10, 11).unwrap().len(), 6);
        assert_eq!(sweep_parameters(4, 11).unwrap().len(), 12);
        assert_eq!(sweep_parameters(1, 13).unwrap().len(), 11);
    }
}
