//! Binary and quaternary Simplex generator matrices.

use crate::error::{invalid, Result};
use crate::field::{cyclic_shift, find_polynomial, BitRow, Gf2Matrix, Gf4, Gf4Vector, PolyKind};

/// Largest binary Simplex dimension supported.
pub const MAX_BINARY_K: usize = 16;
/// Largest quaternary Simplex dimension supported.
pub const MAX_QUATERNARY_L: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplexKind {
    Binary,
    BinaryCyclic,
    Quaternary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplexMatrix {
    Binary(Gf2Matrix),
    Quaternary(Vec<Gf4Vector>),
}

pub fn simplex(kind: SimplexKind, k: usize) -> Result<SimplexMatrix> {
    Ok(match kind {
        SimplexKind::Binary => SimplexMatrix::Binary(binary_simplex(k)?),
        SimplexKind::BinaryCyclic => SimplexMatrix::Binary(cyclic_simplex(k)?),
        SimplexKind::Quaternary => SimplexMatrix::Quaternary(quaternary_simplex(k)?),
    })
}

fn check_binary_k(k: usize) -> Result<()> {
    if !(2..=MAX_BINARY_K).contains(&k) {
        return Err(invalid(format!(
            "binary Simplex dimension {k} outside 2..={MAX_BINARY_K}"
        )));
    }
    Ok(())
}

/// `k × (2^k − 1)`; column `c` is the binary expansion of `c + 1`, row `i` holding bit `i`.
pub fn binary_simplex(k: usize) -> Result<Gf2Matrix> {
    check_binary_k(k)?;
    let n = (1usize << k) - 1;
    let rows = (0..k)
        .map(|i| BitRow::from_bits((1..=n).map(|v| v >> i & 1 == 1)))
        .collect();
    Ok(Gf2Matrix::from_rows(rows).expect("rows share a length"))
}

/// Cyclic variant: row 0 is an m-sequence and each next row is its cyclic shift.
pub fn cyclic_simplex(k: usize) -> Result<Gf2Matrix> {
    check_binary_k(k)?;
    let f = find_polynomial(k, PolyKind::Primitive)?;
    let n = (1usize << k) - 1;
    let coeffs = f.low_coeffs();
    let mut s = vec![false; n];
    s[0] = true;
    for t in 0..n - k {
        s[t + k] = (0..k)
            .filter(|&i| coeffs[i])
            .fold(false, |acc, i| acc ^ s[t + i]);
    }
    let mut rows = Vec::with_capacity(k);
    let mut cur = s;
    for _ in 0..k {
        rows.push(BitRow::from_bits(cur.iter().copied()));
        cur = cyclic_shift(&cur);
    }
    Ok(Gf2Matrix::from_rows(rows).expect("rows share a length"))
}

/// `l × (4^l − 1)/3`; one column per projective point, normalised so the
/// first nonzero entry is 1, in lexicographic order.
pub fn quaternary_simplex(l: usize) -> Result<Vec<Gf4Vector>> {
    if !(1..=MAX_QUATERNARY_L).contains(&l) {
        return Err(invalid(format!(
            "quaternary Simplex dimension {l} outside 1..={MAX_QUATERNARY_L}"
        )));
    }
    let digit = |idx: usize, pos: usize| {
        Gf4::from_code(((idx >> (2 * (l - 1 - pos))) & 3) as u8).expect("two-bit code")
    };
    let cols: Vec<usize> = (1..1usize << (2 * l))
        .filter(|&idx| {
            (0..l)
                .map(|p| digit(idx, p))
                .find(|s| !s.is_zero())
                .is_some_and(|s| s == Gf4::ONE)
        })
        .collect();
    Ok((0..l)
        .map(|pos| cols.iter().map(|&idx| digit(idx, pos)).collect())
        .collect())
}
