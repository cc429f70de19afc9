//! The four-element field GF(4) = {0, 1, w, w²} with w² = w + 1.
//!
//! Symbols are encoded as `0, 1, 2, 3` for `0, 1, w, w²`. Under this encoding
//! the low bit is the `1`-component and the high bit the `w`-component, so
//! addition is XOR and `x = a + w·b` is stored as `a | b << 1`. Textually the
//! symbols are written `0`, `1`, `w` and `W` (for w²).

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul};
use std::str::FromStr;

use super::gf2::BitRow;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const W: Gf4 = Gf4(2);
    pub const W2: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W2];
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::W, Gf4::W2];

    /// Builds a symbol from its canonical code `0..=3`.
    pub fn from_code(code: u8) -> Option<Gf4> {
        (code < 4).then_some(Gf4(code))
    }

    /// `a + w·b` for bits `a`, `b`.
    #[inline]
    pub fn from_bits(a: bool, b: bool) -> Gf4 {
        Gf4(a as u8 | (b as u8) << 1)
    }

    #[inline]
    pub fn code(self) -> u8 {
        self.0
    }

    /// The `1`-component.
    #[inline]
    pub fn lo(self) -> bool {
        self.0 & 1 == 1
    }

    /// The `w`-component.
    #[inline]
    pub fn hi(self) -> bool {
        self.0 & 2 == 2
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::W),
            'W' => Some(Gf4::W2),
            _ => None,
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        if self.0 == 0 || rhs.0 == 0 {
            return Gf4::ZERO;
        }
        // discrete logs: 1 -> 0, w -> 1, w² -> 2
        let log = |x: u8| x - 1;
        let e = (log(self.0) + log(rhs.0)) % 3;
        Gf4(e + 1)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w²"][self.0 as usize])
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Symbol counts of a vector: Hamming weight plus occurrences of each symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SymbolWeights {
    pub hamming: usize,
    /// Occurrences of `0, 1, w, w²`, indexed by symbol code.
    pub per_symbol: [usize; 4],
}

impl SymbolWeights {
    /// True when 1, w and w² occur equally often.
    pub fn is_balanced(&self) -> bool {
        let [_, a, b, c] = self.per_symbol;
        a == b && b == c
    }
}

/// A fixed-length vector over GF(4).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf4Vector(Vec<Gf4>);

impl Gf4Vector {
    pub fn zeros(n: usize) -> Self {
        Gf4Vector(vec![Gf4::ZERO; n])
    }

    pub fn constant(value: Gf4, n: usize) -> Self {
        Gf4Vector(vec![value; n])
    }

    pub fn from_symbols(symbols: Vec<Gf4>) -> Self {
        Gf4Vector(symbols)
    }

    /// `a + w·b` componentwise for binary vectors of equal length.
    pub fn from_planes(a: &BitRow, b: &BitRow) -> Self {
        assert_eq!(a.len(), b.len());
        Gf4Vector(
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| Gf4::from_bits(x, y))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Gf4] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf4> + '_ {
        self.0.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }

    pub fn scale(&self, by: Gf4) -> Gf4Vector {
        Gf4Vector(self.0.iter().map(|&s| s * by).collect())
    }

    pub fn concat(&self, other: &Gf4Vector) -> Gf4Vector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Gf4Vector(v)
    }

    pub fn sum(&self) -> Gf4 {
        self.0.iter().fold(Gf4::ZERO, |acc, &s| acc + s)
    }

    pub fn push(&mut self, s: Gf4) {
        self.0.push(s);
    }

    pub fn remove(&mut self, index: usize) -> Gf4 {
        self.0.remove(index)
    }

    pub fn weights(&self) -> SymbolWeights {
        let mut per_symbol = [0usize; 4];
        for s in &self.0 {
            per_symbol[s.code() as usize] += 1;
        }
        SymbolWeights {
            hamming: self.0.len() - per_symbol[0],
            per_symbol,
        }
    }

    pub fn hamming_weight(&self) -> usize {
        self.0.iter().filter(|s| !s.is_zero()).count()
    }

    /// The `1`-components as a bit row.
    pub fn lo_plane(&self) -> BitRow {
        BitRow::from_bits(self.0.iter().map(|s| s.lo()))
    }

    /// The `w`-components as a bit row.
    pub fn hi_plane(&self) -> BitRow {
        BitRow::from_bits(self.0.iter().map(|s| s.hi()))
    }
}

impl Index<usize> for Gf4Vector {
    type Output = Gf4;
    fn index(&self, i: usize) -> &Gf4 {
        &self.0[i]
    }
}

impl Add for &Gf4Vector {
    type Output = Gf4Vector;
    fn add(self, rhs: &Gf4Vector) -> Gf4Vector {
        assert_eq!(self.len(), rhs.len(), "length mismatch in vector sum");
        Gf4Vector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Vector(\"{self}\")")
    }
}

impl FromStr for Gf4Vector {
    type Err = char;

    /// Parses the `{0,1,w,W}` alphabet; whitespace is ignored. Returns the first bad char.
    fn from_str(s: &str) -> std::result::Result<Self, char> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Gf4::from_char(c).ok_or(c))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Gf4Vector)
    }
}

impl FromIterator<Gf4> for Gf4Vector {
    fn from_iter<T: IntoIterator<Item = Gf4>>(iter: T) -> Self {
        Gf4Vector(iter.into_iter().collect())
    }
}

/// Φ: GF(2)^{2n} → GF(4)^n, `v ↦ (v_i + w·v_{n+i})_i`.
pub fn phi(v: &BitRow) -> Result<Gf4Vector> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    let n = v.len() / 2;
    Ok((0..n)
        .map(|i| Gf4::from_bits(v.get(i), v.get(n + i)))
        .collect())
}

/// Inverse of [`phi`]: the `1`-components followed by the `w`-components.
pub fn phi_inv(c: &Gf4Vector) -> BitRow {
    c.lo_plane().concat(&c.hi_plane())
}

/// Number of indices `i < n` with `(v_i, v_{n+i}) != (0, 0)`.
pub fn symplectic_weight(v: &BitRow) -> Result<usize> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    let n = v.len() / 2;
    Ok((0..n).filter(|&i| v.get(i) || v.get(n + i)).count())
}

/// τ(c_0, …, c_{n−1}) = (c_{n−1}, c_0, …, c_{n−2}).
pub fn cyclic_shift<T: Clone>(v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    if !out.is_empty() {
        out.rotate_right(1);
    }
    out
}

/// All nonzero vectors of GF(4)^m in lexicographic order (coordinate 0 most
/// significant, `0 < 1 < w < w²`), each written in additive form
/// `(m_0, w·m_0, m_1, w·m_1, …)` as a column of height `2m`.
pub fn additive_form_vectors(m: usize) -> Vec<Gf4Vector> {
    assert!(m >= 1, "additive form needs m >= 1");
    let total = 1usize << (2 * m);
    (1..total)
        .map(|idx| {
            let mut col = Gf4Vector::default();
            for pos in 0..m {
                let code = (idx >> (2 * (m - 1 - pos))) & 3;
                let s = Gf4(code as u8);
                col.push(s);
                col.push(s * Gf4::W);
            }
            col
        })
        .collect()
}
