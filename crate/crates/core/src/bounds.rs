//! Griesmer-type bound arithmetic and the binary image of an additive code.

use serde::Serialize;

use crate::code::{AdditiveCode, CodeParams};
use crate::error::{invalid, Error, Result};
use crate::field::{BitRow, Gf2Matrix, Gf4};

/// `Σ_{i=0}^{dim2−1} ⌈d2 / 2^i⌉`.
pub fn griesmer_g(dim2: usize, d2: usize) -> Result<u64> {
    if dim2 == 0 {
        return Err(invalid("griesmer_g needs dim2 >= 1"));
    }
    if d2 < 2 || !d2.is_multiple_of(2) {
        return Err(invalid(format!(
            "griesmer_g needs an even d2 >= 2, got {d2}"
        )));
    }
    let d2 = d2 as u64;
    Ok((0..dim2)
        .map(|i| if i >= 64 { 1 } else { d2.div_ceil(1u64 << i) })
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalityClass {
    pub meets_griesmer: bool,
    pub gdo: bool,
    pub gpo: bool,
}

/// Compares `3n` with the bound at `d` and `d + 1`.
pub fn classify(n: usize, dim2: usize, d: usize) -> Result<OptimalityClass> {
    let n3 = 3 * n as u64;
    let at_d = griesmer_g(dim2, 2 * d)?;
    let at_next = griesmer_g(dim2, 2 * d + 2)?;
    Ok(OptimalityClass {
        meets_griesmer: n3 == at_d,
        gdo: n3 < at_next,
        gpo: n3 + 3 < at_next,
    })
}

/// `3n − g(dim2, 2d)`; negative values mean the parameters violate the bound.
pub fn griesmer_gap(n: usize, dim2: usize, d: usize) -> Result<i64> {
    Ok(3 * n as i64 - griesmer_g(dim2, 2 * d)? as i64)
}

/// Images of `0, 1, w, w²` under the fixed binary `[3,2,2]` code.
pub const INNER_CODE: [[bool; 3]; 4] = [
    [false, false, false],
    [true, true, false],
    [true, false, true],
    [false, true, true],
];

pub fn inner_image(s: Gf4) -> [bool; 3] {
    INNER_CODE[s.code() as usize]
}

/// Binary linear code of length `3n` obtained by replacing each symbol with its inner codeword.
#[derive(Clone, Debug)]
pub struct BinaryImage {
    pub generator: Gf2Matrix,
}

impl BinaryImage {
    pub fn length(&self) -> usize {
        self.generator.num_cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rank()
    }

    /// Weight distribution of the binary code, as `(weight, count)` pairs.
    pub fn weight_distribution(&self) -> Result<Vec<(usize, u64)>> {
        // the binary rows sit in the low plane of a code over GF(4)
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|b| if b { Gf4::ONE } else { Gf4::ZERO })
                    .collect()
            })
            .collect();
        let wd = AdditiveCode::new(rows)?.weight_distribution()?;
        Ok(wd.pairs())
    }

    pub fn min_distance(&self) -> Result<Option<usize>> {
        Ok(self
            .weight_distribution()?
            .into_iter()
            .map(|(w, _)| w)
            .find(|&w| w > 0))
    }
}

pub fn concat_binary(c: &AdditiveCode) -> Result<BinaryImage> {
    if c.is_null() {
        return Err(Error::ZeroLength);
    }
    let rows = c
        .rows()
        .iter()
        .map(|r| BitRow::from_bits(r.iter().flat_map(inner_image)))
        .collect();
    Ok(BinaryImage {
        generator: Gf2Matrix::from_rows(rows).expect("rows share a length"),
    })
}

/// A parameter triple for which no additive code exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonexistenceFact {
    pub n: usize,
    pub dim2: usize,
    pub d: usize,
    /// The missing binary image that rules the code out.
    pub source: &'static str,
}

pub const NONEXISTENCE_FACTS: [NonexistenceFact; 4] = [
    NonexistenceFact {
        n: 18,
        dim2: 7,
        d: 13,
        source: "no binary linear [54,7,26] code",
    },
    NonexistenceFact {
        n: 19,
        dim2: 7,
        d: 14,
        source: "no binary linear [57,7,28] code",
    },
    NonexistenceFact {
        n: 26,
        dim2: 7,
        d: 19,
        source: "no binary linear [78,7,38] code",
    },
    NonexistenceFact {
        n: 27,
        dim2: 7,
        d: 20,
        source: "no binary linear [81,7,40] code",
    },
];

pub fn nonexistence(n: usize, dim2: usize, d: usize) -> Option<NonexistenceFact> {
    NONEXISTENCE_FACTS
        .iter()
        .copied()
        .find(|f| (f.n, f.dim2, f.d) == (n, dim2, d))
}

/// `(n + 2^k − 1, k, d + 3·2^{k−2})` with `k = dim2`; the input must be GPO.
pub fn period_shift(n: usize, dim2: usize, d: usize) -> Result<CodeParams> {
    if !(2..=62).contains(&dim2) {
        return Err(invalid(format!(
            "period shift needs 2 <= dim2 <= 62, got {dim2}"
        )));
    }
    if !classify(n, dim2, d)?.gpo {
        return Err(invalid(format!("[{n},{dim2}/2,{d}] is not GPO")));
    }
    Ok(CodeParams::new(
        n + (1 << dim2) - 1,
        dim2,
        d + 3 * (1 << (dim2 - 2)),
    ))
}
