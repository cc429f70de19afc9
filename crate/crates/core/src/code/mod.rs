//! Additive codes over GF(4): a length and an ordered list of GF(2)-generators.

mod enumerate;
mod params;

use std::collections::BTreeSet;

pub use enumerate::ENUMERATION_LIMIT;
pub use params::{format_dimension, CodeParams, WeightDistribution};

use crate::error::{invalid, Error, Result};
use crate::field::{echelon_basis, gf2::words_for, phi, phi_inv, Gf2Matrix, Gf4, Gf4Vector};
use enumerate::Span;

/// An additive code given by generator rows, kept exactly as supplied.
///
/// Rows may be dependent; `dim2` is the GF(2) rank of their Φ-preimages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveCode {
    n: usize,
    rows: Vec<Gf4Vector>,
    dim2: usize,
}

/// Result of [`AdditiveCode::invariant_split_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitReport {
    /// Minimum weight of a nonzero codeword spanned by the lower rows.
    pub delta1: usize,
    /// Minimum weight of `u + v` with `u` nonzero in the upper span and `v` in the lower span.
    pub delta2: usize,
    /// Maximum weight over the same mixed sums.
    pub delta2_max: usize,
    /// Every mixed sum has weight `delta2` and `delta2 > delta1`.
    pub is_invariant: bool,
    /// `delta2 > delta1`, without the constant-weight requirement.
    pub dominates: bool,
}

impl AdditiveCode {
    /// Builds a code from rows of a common positive length.
    pub fn new(rows: Vec<Gf4Vector>) -> Result<Self> {
        let n = rows.first().ok_or(Error::NoRows)?.len();
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        Self::with_length(n, rows)
    }

    /// Parses rows written over the `{0,1,w,W}` alphabet.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.parse::<Gf4Vector>().map_err(|c| Error::Parse {
                    line: i + 1,
                    msg: format!("unexpected symbol {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    /// The length-zero code with `rows` empty generators.
    ///
    /// Used as a neutral auxiliary code in lengthening constructions.
    pub fn null(rows: usize) -> Self {
        AdditiveCode {
            n: 0,
            rows: vec![Gf4Vector::default(); rows],
            dim2: 0,
        }
    }

    fn with_length(n: usize, rows: Vec<Gf4Vector>) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::RaggedRows {
                    row: i,
                    expected: n,
                    found: r.len(),
                });
            }
        }
        let dim2 = echelon_basis(rows.iter().map(phi_inv)).len();
        Ok(AdditiveCode { n, rows, dim2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Gf4Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Gf4Vector {
        &self.rows[i]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// GF(2) dimension; the GF(4) dimension is half of it.
    pub fn dim2(&self) -> usize {
        self.dim2
    }

    pub fn dimension(&self) -> f64 {
        self.dim2 as f64 / 2.0
    }

    pub fn is_full_rank(&self) -> bool {
        self.dim2 == self.rows.len()
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    /// The Φ-preimages of the rows as a binary matrix with `2n` columns.
    pub fn preimage(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.rows.iter().map(phi_inv).collect()).expect("rows share a length")
    }

    /// The `i`-th column as a GF(4) vector of height `num_rows`.
    pub fn column(&self, i: usize) -> Gf4Vector {
        self.rows.iter().map(|r| r[i]).collect()
    }

    fn words(&self) -> usize {
        words_for(self.n)
    }

    fn pack(&self, row: &Gf4Vector) -> Vec<u64> {
        let mut w = row.lo_plane().words().to_vec();
        w.extend_from_slice(row.hi_plane().words());
        w
    }

    /// A span over an independent subset of generators covering the whole code.
    fn basis_span(&self) -> Result<Span> {
        let gens = if self.is_full_rank() {
            self.rows.iter().map(|r| self.pack(r)).collect()
        } else {
            echelon_basis(self.rows.iter().map(phi_inv))
                .into_iter()
                .map(|b| self.pack(&phi(&b).expect("preimages have even length")))
                .collect()
        };
        Span::new(gens, 2 * self.words())
    }

    /// Exact weight distribution by enumerating all `2^dim2` codewords.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let span = self.basis_span()?;
        let wn = self.words();
        let dense = span.fold(
            || vec![0u64; self.n + 1],
            |acc, _, word| acc[hamming(word, wn)] += 1,
            merge_counts,
        );
        Ok(WeightDistribution::from_dense(&dense))
    }

    /// Smallest weight of a nonzero codeword, or `None` when `dim2 = 0`.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        Ok(self.weight_distribution()?.min_distance())
    }

    /// `(n, dim2, d)`; fails for zero-dimensional codes, whose distance is undefined.
    pub fn params(&self) -> Result<CodeParams> {
        let d = self
            .min_distance()?
            .ok_or_else(|| invalid("zero-dimensional code has no minimum distance"))?;
        Ok(CodeParams::new(self.n, self.dim2, d))
    }

    /// True when every codeword holds equally many `1`, `w` and `w²`.
    pub fn is_asep(&self) -> Result<bool> {
        let span = self.basis_span()?;
        let wn = self.words();
        Ok(span.fold(
            || true,
            |ok, _, word| {
                if *ok {
                    let (lo, hi) = word.split_at(wn);
                    let mut c = [0u32; 3];
                    for (a, b) in lo.iter().zip(hi) {
                        c[0] += (a & !b).count_ones();
                        c[1] += (b & !a).count_ones();
                        c[2] += (a & b).count_ones();
                    }
                    *ok = c[0] == c[1] && c[1] == c[2];
                }
            },
            |a, b| a && b,
        ))
    }

    /// Row-aligned horizontal concatenation.
    ///
    /// Both inputs need the same row count and full rank; an input with all
    /// rows zero is also accepted and acts as padding.
    pub fn juxtapose(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        for (name, c) in [("left", self), ("right", other)] {
            if !c.is_full_rank() && c.dim2 != 0 {
                return Err(Error::RankDeficient(format!(
                    "{name} code has {} rows but rank {}",
                    c.num_rows(),
                    c.dim2
                )));
            }
        }
        self.join_columns(other)
    }

    /// Horizontal concatenation without rank requirements.
    pub fn join_columns(&self, other: &AdditiveCode) -> Result<AdditiveCode> {
        if self.num_rows() != other.num_rows() {
            return Err(Error::Shape(format!(
                "row counts differ: {} vs {}",
                self.num_rows(),
                other.num_rows()
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.concat(b))
            .collect();
        AdditiveCode::with_length(self.n + other.n, rows)
    }

    /// Deletes coordinate `index`.
    pub fn puncture(&self, index: usize) -> Result<AdditiveCode> {
        if index >= self.n {
            return Err(Error::IndexOutOfRange { index, len: self.n });
        }
        self.multiset_subtract(&[index])
    }

    /// Deletes the last `count` coordinates.
    pub fn puncture_last(&self, count: usize) -> Result<AdditiveCode> {
        if count > self.n {
            return Err(Error::IndexOutOfRange {
                index: count,
                len: self.n,
            });
        }
        let idx: Vec<usize> = (self.n - count..self.n).collect();
        self.multiset_subtract(&idx)
    }

    /// Appends the GF(4) sum of each row as a new last coordinate.
    pub fn extend_parity(&self) -> AdditiveCode {
        let rows: Vec<Gf4Vector> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(r.sum());
                r
            })
            .collect();
        AdditiveCode::with_length(self.n + 1, rows).expect("rows share a length")
    }

    /// Deletes the listed columns from every row.
    pub fn multiset_subtract(&self, columns: &[usize]) -> Result<AdditiveCode> {
        let mut drop = BTreeSet::new();
        for &c in columns {
            if c >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: c,
                    len: self.n,
                });
            }
            if !drop.insert(c) {
                return Err(Error::DuplicateIndex(c));
            }
        }
        if drop.len() == self.n {
            return Err(Error::ZeroLength);
        }
        let keep: Vec<usize> = (0..self.n).filter(|c| !drop.contains(c)).collect();
        Ok(self.select_columns(&keep))
    }

    /// Keeps the listed columns in the given order. Indices must be valid.
    pub fn select_columns(&self, keep: &[usize]) -> AdditiveCode {
        let rows = self
            .rows
            .iter()
            .map(|r| keep.iter().map(|&c| r[c]).collect())
            .collect();
        AdditiveCode::with_length(keep.len(), rows).expect("rows share a length")
    }

    /// Appends generator rows.
    pub fn stack_rows(&self, extra: &[Gf4Vector]) -> Result<AdditiveCode> {
        let mut rows = self.rows.clone();
        rows.extend_from_slice(extra);
        AdditiveCode::with_length(self.n, rows)
    }

    /// Keeps rows `range` in order.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> Result<AdditiveCode> {
        if range.end > self.num_rows() || range.start >= range.end {
            return Err(invalid(format!(
                "row range {range:?} invalid for {} rows",
                self.num_rows()
            )));
        }
        AdditiveCode::with_length(self.n, self.rows[range].to_vec())
    }

    /// Replaces every row by its image under multiplication by `s`.
    pub fn scale(&self, s: Gf4) -> AdditiveCode {
        let rows = self.rows.iter().map(|r| r.scale(s)).collect();
        AdditiveCode::with_length(self.n, rows).expect("rows share a length")
    }

    /// Checks whether rows `0..r` generate an invariant part over rows `r..`.
    ///
    /// All rows must be independent and `0 < r < num_rows`.
    pub fn invariant_split_check(&self, r: usize) -> Result<SplitReport> {
        if r == 0 || r >= self.num_rows() {
            return Err(invalid(format!(
                "split {r} must lie strictly inside 0..{}",
                self.num_rows()
            )));
        }
        if !self.is_full_rank() {
            return Err(Error::RankDeficient(format!(
                "{} rows span only {} dimensions",
                self.num_rows(),
                self.dim2
            )));
        }
        let gens = self.rows.iter().map(|row| self.pack(row)).collect();
        let span = Span::new(gens, 2 * self.words())?;
        let wn = self.words();
        let upper = (1u64 << r) - 1;
        // (min lower, min mixed, max mixed)
        let (delta1, delta2, delta2_max) = span.fold(
            || (usize::MAX, usize::MAX, 0usize),
            |acc, mask, word| {
                if mask == 0 {
                    return;
                }
                let w = hamming(word, wn);
                if mask & upper == 0 {
                    acc.0 = acc.0.min(w);
                } else {
                    acc.1 = acc.1.min(w);
                    acc.2 = acc.2.max(w);
                }
            },
            |a, b| (a.0.min(b.0), a.1.min(b.1), a.2.max(b.2)),
        );
        let dominates = delta2 > delta1;
        Ok(SplitReport {
            delta1,
            delta2,
            delta2_max,
            is_invariant: dominates && delta2 == delta2_max,
            dominates,
        })
    }
}

#[inline]
fn hamming(word: &[u64], wn: usize) -> usize {
    let (lo, hi) = word.split_at(wn);
    lo.iter()
        .zip(hi)
        .map(|(a, b)| (a | b).count_ones() as usize)
        .sum()
}

fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}
