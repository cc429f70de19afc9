//! Packed bit rows and dense matrices over GF(2).

use std::fmt;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past `len` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD] |= 1 << (len % WORD);
            }
            len += 1;
        }
        BitRow { len, words }
    }

    /// Parses a string of `0`/`1` characters, ignoring whitespace.
    pub fn parse(s: &str) -> Option<Self> {
        let mut bits = Vec::new();
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(Self::from_bits(bits))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn concat(&self, other: &BitRow) -> BitRow {
        BitRow::from_bits(self.iter().chain(other.iter()))
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow(\"{self}\")")
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense matrix over GF(2) stored as packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitRow>,
}

impl Gf2Matrix {
    /// Builds a matrix from rows of a common length. Returns `None` for ragged input.
    pub fn from_rows(rows: Vec<BitRow>) -> Option<Self> {
        let cols = rows.first().map_or(0, BitRow::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Gf2Matrix { cols, rows })
    }

    pub fn empty(cols: usize) -> Self {
        Gf2Matrix {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = BitRow::zeros(n);
                r.set(i, true);
                r
            })
            .collect();
        Gf2Matrix { cols: n, rows }
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Row rank over GF(2).
    pub fn rank(&self) -> usize {
        echelon_basis(self.rows.iter().cloned()).len()
    }
}

/// Reduces `rows` to a linearly independent set with distinct leading bits.
///
/// The returned rows span the same space as the input.
pub fn echelon_basis<I: IntoIterator<Item = BitRow>>(rows: I) -> Vec<BitRow> {
    let mut basis: Vec<BitRow> = Vec::new();
    for mut row in rows {
        for b in &basis {
            let pivot = b.first_one().expect("basis rows are nonzero");
            if row.get(pivot) {
                row.xor_assign(b);
            }
        }
        if let Some(pivot) = row.first_one() {
            // keep the basis fully reduced on pivot columns
            for b in basis.iter_mut() {
                if b.get(pivot) {
                    b.xor_assign(&row);
                }
            }
            basis.push(row);
        }
    }
    basis
}
