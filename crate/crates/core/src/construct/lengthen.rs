//! Lengthening constructions that append auxiliary columns to a base code.

use crate::code::{AdditiveCode, SplitReport};
use crate::error::{invalid, Error, Result};
use crate::field::{Gf4, Gf4Vector};

use super::anticode::{anticode_family, AnticodeMode};
use super::asep::{asep, augment, AsepMethod};

/// A base code whose trailing `subcode_rows` rows generate the high-distance
/// subcode, and an auxiliary code aligned with the remaining rows.
#[derive(Clone, Debug)]
pub struct ConstructionXInputs {
    pub base: AdditiveCode,
    pub subcode_rows: usize,
    pub auxiliary: AdditiveCode,
}

/// A code together with the number of leading rows outside its designated subcode.
#[derive(Clone, Debug)]
pub struct SplitCode {
    pub code: AdditiveCode,
    pub head: usize,
}

impl SplitCode {
    pub fn new(code: AdditiveCode, head: usize) -> Self {
        SplitCode { code, head }
    }
}

/// Appends auxiliary rows to the leading rows and zeros to the subcode rows.
pub fn construction_x(inputs: &ConstructionXInputs) -> Result<AdditiveCode> {
    let ConstructionXInputs {
        base,
        subcode_rows,
        auxiliary,
    } = inputs;
    let k = base.num_rows();
    if !base.is_full_rank() {
        return Err(Error::RankDeficient("base rows are dependent".into()));
    }
    if *subcode_rows == 0 || *subcode_rows >= k {
        return Err(invalid(format!(
            "subcode row count {subcode_rows} must lie in 1..{k}"
        )));
    }
    let head = k - subcode_rows;
    if auxiliary.num_rows() != head {
        return Err(Error::Shape(format!(
            "auxiliary has {} rows, expected {head}",
            auxiliary.num_rows()
        )));
    }
    if !auxiliary.is_null() && !auxiliary.is_full_rank() {
        return Err(Error::RankDeficient("auxiliary rows are dependent".into()));
    }
    base.join_columns(&pad_rows(auxiliary, k))
}

/// `rows` generators: the rows of `c` followed by zero rows.
fn pad_rows(c: &AdditiveCode, rows: usize) -> AdditiveCode {
    if c.is_null() {
        return AdditiveCode::null(rows);
    }
    let zero = Gf4Vector::zeros(c.n());
    let extra = vec![zero; rows - c.num_rows()];
    c.stack_rows(&extra).expect("rows share a length")
}

/// Extended augmented ASEP code of parameter `k`; its last two rows span the repetition code.
fn augmented(k: usize) -> Result<AdditiveCode> {
    augment(&asep(k, AsepMethod::Companion)?, true)
}

/// `s` copies of the extended augmented ASEP code of parameter `k = rows(c_a)`,
/// lengthened by `c_a` on the non-repetition rows.
pub fn combination_x(c_a: &AdditiveCode, s: usize) -> Result<AdditiveCode> {
    let k = c_a.num_rows();
    if k < 3 {
        return Err(invalid(format!("auxiliary needs at least 3 rows, got {k}")));
    }
    let d = if c_a.is_null() {
        0
    } else {
        if !c_a.is_full_rank() {
            return Err(Error::RankDeficient("auxiliary rows are dependent".into()));
        }
        c_a.min_distance()?.unwrap_or(0)
    };
    let unit = 1usize << (k - 2);
    let need = d.div_ceil(unit).max(1);
    if s < need {
        return Err(invalid(format!(
            "repetition count s={s} below the required {need} for d={d}, k={k}"
        )));
    }
    let block = augmented(k)?;
    let mut base = block.clone();
    for _ in 1..s {
        base = base.juxtapose(&block)?;
    }
    construction_x(&ConstructionXInputs {
        base,
        subcode_rows: 2,
        auxiliary: c_a.clone(),
    })
}

fn check_odd(k: usize, min: usize, what: &str) -> Result<()> {
    if k < min || k.is_multiple_of(2) {
        return Err(invalid(format!("{what} needs odd k >= {min}, got {k}")));
    }
    Ok(())
}

/// `[(2^k+1)/3, k/2, 2^{k−2}]` with a one-row invariant part in row 0.
pub fn one_third(k: usize) -> Result<AdditiveCode> {
    check_odd(k, 3, "one_third")?;
    let mut code = AdditiveCode::parse_rows(&["www", "110", "011"])?;
    for step in (5..=k).step_by(2) {
        code = construction_x(&ConstructionXInputs {
            base: augmented(step - 2)?,
            subcode_rows: 2,
            auxiliary: code,
        })?;
    }
    Ok(code)
}

/// `[(2^k − 2^{k2} + 2)/3, k/2, 2^{k−2} − 2^{k2−2}]` with a one-row invariant part in row 0.
pub fn one_third_minus(k: usize, k2: usize) -> Result<AdditiveCode> {
    check_odd(k, 7, "one_third_minus")?;
    if k2 < 4 || !k2.is_multiple_of(2) || k2 + 3 > k {
        return Err(invalid(format!(
            "one_third_minus needs even k2 with 4 <= k2 <= k-3, got k={k}, k2={k2}"
        )));
    }
    let k1 = k - k2;
    construction_x(&ConstructionXInputs {
        base: anticode_family(k1, k2, AnticodeMode::ThirdBoth)?,
        subcode_rows: k2,
        auxiliary: one_third(k1)?,
    })
}

/// Joins `[1_{2^{k−1}−1}; A_{(k−1)/2}]` to the right of a `k`-row code.
pub fn enlarge(c: &AdditiveCode) -> Result<AdditiveCode> {
    let k = c.num_rows();
    if k < 4 {
        return Err(Error::Shape(format!(
            "enlarge needs at least 4 rows, got {k}"
        )));
    }
    let a = asep(k - 1, AsepMethod::Companion)?;
    let mut rows = vec![Gf4Vector::constant(Gf4::ONE, a.n())];
    rows.extend_from_slice(a.rows());
    c.join_columns(&AdditiveCode::new(rows)?)
}

/// Two-stage lengthening of `c1 | c2` by an auxiliary code.
///
/// Row `i` of the result is `c1_i | c2_i | aux_i`, with zeros in place of
/// `aux_i` once `i` passes the auxiliary's rows. The split of `c2` marks the
/// rows aligned with the auxiliary's invariant part.
///
/// With a length-zero auxiliary the auxiliary stage is dropped: if `c2.head`
/// is positive it must equal `c1.head` and mark an invariant part of `c2`;
/// if it is zero the result is the plain juxtaposition.
pub fn generalized_x(c1: &SplitCode, c2: &SplitCode, aux: &AdditiveCode) -> Result<AdditiveCode> {
    let k = c1.code.num_rows();
    if c2.code.num_rows() != k {
        return Err(Error::Shape(format!(
            "row counts differ: {k} vs {}",
            c2.code.num_rows()
        )));
    }
    if c1.head >= k || c2.head >= k {
        return Err(invalid("split must leave a nonempty subcode"));
    }
    let joined = c1.code.juxtapose(&c2.code)?;
    if aux.is_null() {
        if c2.head == 0 {
            return Ok(joined);
        }
        if c2.head != c1.head {
            return Err(invalid(format!(
                "invariant part of c2 has {} rows, expected {}",
                c2.head, c1.head
            )));
        }
        require_dominating(&c2.code, c2.head, "c2")?;
        return Ok(joined);
    }
    let (k1, k2) = (c1.head, c2.head);
    if !(0 < k2 && k2 < k1) {
        return Err(invalid(format!("need 0 < k2 < k1, got k1={k1}, k2={k2}")));
    }
    if aux.num_rows() != k1 {
        return Err(Error::Shape(format!(
            "auxiliary has {} rows, expected {k1}",
            aux.num_rows()
        )));
    }
    require_dominating(aux, k2, "auxiliary")?;
    joined.join_columns(&pad_rows(aux, k))
}

fn require_dominating(c: &AdditiveCode, split: usize, name: &str) -> Result<SplitReport> {
    let rep = c.invariant_split_check(split)?;
    if !rep.dominates {
        return Err(Error::NotInvariant(format!(
            "{name}: mixed weight {} does not exceed {}",
            rep.delta2, rep.delta1
        )));
    }
    Ok(rep)
}

fn subcode_distance(c: &AdditiveCode, head: usize) -> Result<usize> {
    let tail = c.row_slice(head..c.num_rows())?;
    tail.min_distance()?
        .ok_or_else(|| Error::RankDeficient("subcode is zero".into()))
}

/// Distance guaranteed for [`generalized_x`] by the case analysis on which
/// part of the information vector is nonzero, evaluated on enumerated
/// ingredient parameters.
pub fn generalized_x_bound(c1: &SplitCode, c2: &SplitCode, aux: &AdditiveCode) -> Result<usize> {
    let d = |c: &AdditiveCode| -> Result<usize> {
        c.min_distance()?
            .ok_or_else(|| Error::RankDeficient("zero code".into()))
    };
    let d1 = d(&c1.code)?;
    let d2 = d(&c2.code)?;
    let d1s = if c1.head == 0 {
        d1
    } else {
        subcode_distance(&c1.code, c1.head)?
    };
    if aux.is_null() {
        if c2.head == 0 {
            return Ok(d1 + d2);
        }
        let rep = c2.code.invariant_split_check(c2.head)?;
        return Ok((d1 + rep.delta2).min(d1s + rep.delta1));
    }
    let d2s = subcode_distance(&c2.code, c2.head)?;
    let rep = aux.invariant_split_check(c2.head)?;
    Ok((d1 + d2 + rep.delta2)
        .min(d1 + d2s + rep.delta1)
        .min(d1s + d2s))
}
