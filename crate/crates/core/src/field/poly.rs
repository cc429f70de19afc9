//! Binary polynomials of small degree, stored as bit masks.

use std::fmt;

use crate::error::{invalid, Result};

/// Largest degree accepted by [`find_polynomial`].
pub const MAX_DEGREE: usize = 16;

/// A monic polynomial over GF(2); bit `i` of the mask is the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryPolynomial(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    Irreducible,
    Primitive,
}

impl BinaryPolynomial {
    /// Wraps a coefficient mask. Panics on the zero mask.
    pub fn from_mask(mask: u32) -> Self {
        assert!(mask != 0, "zero polynomial");
        BinaryPolynomial(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        31 - self.0.leading_zeros() as usize
    }

    /// Coefficient of `x^i`.
    pub fn coeff(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    /// Low coefficients `f_0, …, f_{k−1}` (the leading one omitted).
    pub fn low_coeffs(self) -> Vec<bool> {
        (0..self.degree()).map(|i| self.coeff(i)).collect()
    }

    /// Trial division by every monic polynomial of degree `1..=k/2`.
    pub fn is_irreducible(self) -> bool {
        let k = self.degree();
        if k == 0 {
            return false;
        }
        if !self.coeff(0) {
            // x divides it; x itself is excluded by the nonzero-constant convention
            return false;
        }
        for d in 1..=k / 2 {
            for m in (1u32 << d)..(1u32 << (d + 1)) {
                if poly_mod(self.0, m) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Irreducible and `x` has multiplicative order `2^k − 1` modulo `self`.
    pub fn is_primitive(self) -> bool {
        let k = self.degree();
        if k < 2 || !self.is_irreducible() {
            return false;
        }
        let order = (1u64 << k) - 1;
        // e = x^i
        let mut e = poly_mod(2, self.0);
        for _ in 1..order {
            if e == 1 {
                return false;
            }
            e = mul_mod(e, 2, self.0);
        }
        e == 1
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..=self.degree())
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn poly_mod(mut a: u32, m: u32) -> u32 {
    let dm = 31 - m.leading_zeros();
    while a != 0 && 31 - a.leading_zeros() >= dm {
        let shift = (31 - a.leading_zeros()) - dm;
        a ^= m << shift;
    }
    a
}

fn mul_mod(a: u32, b: u32, m: u32) -> u32 {
    let mut acc: u64 = 0;
    for i in 0..32 {
        if b >> i & 1 == 1 {
            acc ^= (a as u64) << i;
        }
    }
    let dm = 63 - (m as u64).leading_zeros();
    while acc != 0 && 63 - acc.leading_zeros() >= dm {
        let shift = (63 - acc.leading_zeros()) - dm;
        acc ^= (m as u64) << shift;
    }
    acc as u32
}

/// The smallest monic degree-`k` polynomial (by coefficient mask) with nonzero
/// constant term and the requested property.
pub fn find_polynomial(k: usize, kind: PolyKind) -> Result<BinaryPolynomial> {
    if k == 0 || k > MAX_DEGREE {
        return Err(invalid(format!("degree {k} outside 1..={MAX_DEGREE}")));
    }
    if kind == PolyKind::Primitive && k < 2 {
        return Err(invalid("primitive polynomials need degree >= 2"));
    }
    let lo = 1u32 << k;
    (lo..lo << 1)
        .filter(|m| m & 1 == 1)
        .map(BinaryPolynomial)
        .find(|p| match kind {
            PolyKind::Irreducible => p.is_irreducible(),
            PolyKind::Primitive => p.is_primitive(),
        })
        .ok_or_else(|| invalid(format!("no {kind:?} polynomial of degree {k}")))
}
