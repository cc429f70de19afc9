//! Codes in which every codeword carries `1`, `w` and `w²` equally often.

use crate::code::AdditiveCode;
use crate::error::{invalid, Error, Result};
use crate::field::{cyclic_shift, find_polynomial, BitRow, Gf2Matrix, Gf4, Gf4Vector, PolyKind};

use super::simplex::{binary_simplex, cyclic_simplex, quaternary_simplex, MAX_BINARY_K};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsepMethod {
    /// Simplex rows paired through the companion matrix of an irreducible polynomial.
    Companion,
    /// Cyclic Simplex rows paired with their shifts.
    Cyclic,
    /// Blocks of the quaternary Simplex matrix; `k` must be even and at least 4.
    Integer,
    /// Grows the dimension by one from the `k = 3` companion code; `k` must be odd.
    Iterate,
    /// Star product of an odd `k1` iterate code and an even `k2` integer code.
    Combine { k1: usize, k2: usize },
}

/// An ASEP `[2^k − 1, k/2, 3·2^{k−2}]` code built by `method`.
pub fn asep(k: usize, method: AsepMethod) -> Result<AdditiveCode> {
    if !(3..=MAX_BINARY_K).contains(&k) {
        return Err(invalid(format!(
            "ASEP parameter k={k} outside 3..={MAX_BINARY_K}"
        )));
    }
    match method {
        AsepMethod::Companion => companion(k),
        AsepMethod::Cyclic => cyclic(k),
        AsepMethod::Integer => integer(k),
        AsepMethod::Iterate => iterate(k),
        AsepMethod::Combine { k1, k2 } => combine(k, k1, k2),
    }
}

/// Rows `r_i + w·r_{i+1}` for `i < k − 1` and `r_{k−1} + w·last`.
fn paired_rows(s: &Gf2Matrix, last: &BitRow) -> Result<AdditiveCode> {
    let r = s.rows();
    let k = r.len();
    let mut rows: Vec<Gf4Vector> = (0..k - 1)
        .map(|i| Gf4Vector::from_planes(&r[i], &r[i + 1]))
        .collect();
    rows.push(Gf4Vector::from_planes(&r[k - 1], last));
    AdditiveCode::new(rows)
}

fn companion(k: usize) -> Result<AdditiveCode> {
    let f = find_polynomial(k, PolyKind::Irreducible)?;
    let s = binary_simplex(k)?;
    let mut last = BitRow::zeros(s.num_cols());
    for (i, &fi) in f.low_coeffs().iter().enumerate() {
        if fi {
            last.xor_assign(&s.rows()[i]);
        }
    }
    paired_rows(&s, &last)
}

fn cyclic(k: usize) -> Result<AdditiveCode> {
    let s = cyclic_simplex(k)?;
    let r: Vec<bool> = s.rows()[k - 1].iter().collect();
    let last = BitRow::from_bits(cyclic_shift(&r));
    paired_rows(&s, &last)
}

fn integer(k: usize) -> Result<AdditiveCode> {
    if !k.is_multiple_of(2) || k < 4 {
        return Err(invalid(format!(
            "integer ASEP method needs even k >= 4, got {k}"
        )));
    }
    let g = quaternary_simplex(k / 2)?;
    let blocks = |a: Gf4, b: Gf4, c: Gf4, row: &Gf4Vector| {
        row.scale(a).concat(&row.scale(b)).concat(&row.scale(c))
    };
    let (one, w, w2) = (Gf4::ONE, Gf4::W, Gf4::W2);
    let mut rows: Vec<Gf4Vector> = g.iter().map(|r| blocks(one, w, w2, r)).collect();
    rows.extend(g.iter().map(|r| blocks(w, w2, one, r)));
    AdditiveCode::new(rows)
}

fn iterate(k: usize) -> Result<AdditiveCode> {
    if k.is_multiple_of(2) {
        return Err(invalid(format!("iterate ASEP method needs odd k, got {k}")));
    }
    let mut code = companion(3)?;
    for _ in (5..=k).step_by(2) {
        code = iterate_step(&code)?;
    }
    Ok(code)
}

/// `[A A A A 0 0 0; 0 1 w w² 1 w w²; 0 w w² 1 w w² 1]`, blocks of width `n`
/// followed by three single columns.
fn iterate_step(a: &AdditiveCode) -> Result<AdditiveCode> {
    let n = a.n();
    let block = |s: Gf4| Gf4Vector::constant(s, n);
    let tail = |syms: [Gf4; 3]| Gf4Vector::from_symbols(syms.to_vec());
    let (z, one, w, w2) = (Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W2);
    let mut rows: Vec<Gf4Vector> = a
        .rows()
        .iter()
        .map(|r| r.concat(r).concat(r).concat(r).concat(&tail([z; 3])))
        .collect();
    for order in [[one, w, w2], [w, w2, one]] {
        let row = block(z)
            .concat(&block(order[0]))
            .concat(&block(order[1]))
            .concat(&block(order[2]))
            .concat(&tail(order));
        rows.push(row);
    }
    AdditiveCode::new(rows)
}

/// `A ⋆ B`: rows of `a` over rows of `b`; column `(i, j)` stacks column `i` of
/// `a` on column `j` of `b`, enumerated with `i` major.
pub fn star(a: &[Gf4Vector], b: &[Gf4Vector]) -> Vec<Gf4Vector> {
    let na = a.first().map_or(0, Gf4Vector::len);
    let nb = b.first().map_or(0, Gf4Vector::len);
    let mut rows = Vec::with_capacity(a.len() + b.len());
    for r in a {
        rows.push(
            (0..na)
                .flat_map(|i| std::iter::repeat_n(r[i], nb))
                .collect(),
        );
    }
    for r in b {
        rows.push((0..na).flat_map(|_| r.iter()).collect());
    }
    rows
}

/// Appends a zero column.
pub(crate) fn with_zero_column(rows: &[Gf4Vector]) -> Vec<Gf4Vector> {
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(Gf4::ZERO);
            r
        })
        .collect()
}

pub(crate) fn check_combine(k: usize, k1: usize, k2: usize) -> Result<()> {
    if k1 < 3 || k1.is_multiple_of(2) || k2 < 4 || !k2.is_multiple_of(2) || k1 + k2 != k {
        return Err(invalid(format!(
            "combine needs odd k1 >= 3, even k2 >= 4 and k1 + k2 = k (got k={k}, k1={k1}, k2={k2})"
        )));
    }
    Ok(())
}

/// `(A_{k1}° ⋆ A_{k2}°)` with the final all-zero column removed.
fn combine(k: usize, k1: usize, k2: usize) -> Result<AdditiveCode> {
    check_combine(k, k1, k2)?;
    let a = iterate(k1)?;
    let b = integer(k2)?;
    let full = star(&with_zero_column(a.rows()), &with_zero_column(b.rows()));
    let code = AdditiveCode::new(full)?;
    code.puncture(code.n() - 1)
}

/// Adds the rows `1_n` and `w_n` to an ASEP code, optionally extending by the
/// coordinate sum. The extended code has the repetition subcode as its last two rows.
pub fn augment(c: &AdditiveCode, extended: bool) -> Result<AdditiveCode> {
    let n = c.n();
    let k = c.dim2();
    if !c.is_full_rank() || n + 1 != 1usize << k || !c.is_asep()? {
        return Err(Error::Shape(format!(
            "augment needs a full-rank ASEP [2^k-1, k/2] code, got n={n}, dim2={k}"
        )));
    }
    let c = c.stack_rows(&[
        Gf4Vector::constant(Gf4::ONE, n),
        Gf4Vector::constant(Gf4::W, n),
    ])?;
    Ok(if extended { c.extend_parity() } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeParams;

    fn asep_params(k: usize) -> CodeParams {
        CodeParams::new((1 << k) - 1, k, 3 << (k - 2))
    }

    #[test]
    fn companion_three_matches_example() {
        let c = asep(3, AsepMethod::Companion).unwrap();
        assert_eq!(c.params().unwrap(), asep_params(3));
        assert!(c.is_asep().unwrap());
        assert_eq!(c.weight_distribution().unwrap().to_string(), "1+7z^6");
    }

    #[test]
    fn all_methods_are_asep() {
        for k in 3..=9 {
            let mut methods = vec![AsepMethod::Companion, AsepMethod::Cyclic];
            if k % 2 == 0 && k >= 4 {
                methods.push(AsepMethod::Integer);
            } else {
                methods.push(AsepMethod::Iterate);
            }
            for k1 in (3..k).step_by(2) {
                let k2 = k - k1;
                if k2 >= 4 && k2 % 2 == 0 {
                    methods.push(AsepMethod::Combine { k1, k2 });
                }
            }
            for m in methods {
                let c = asep(k, m).unwrap();
                assert_eq!(c.params().unwrap(), asep_params(k), "k={k} {m:?}");
                assert!(c.is_asep().unwrap(), "k={k} {m:?}");
                assert_eq!(c.weight_distribution().unwrap().nonzero_weights().len(), 1);
            }
        }
    }

    #[test]
    fn method_preconditions() {
        assert!(asep(2, AsepMethod::Companion).is_err());
        assert!(asep(5, AsepMethod::Integer).is_err());
        assert!(asep(6, AsepMethod::Iterate).is_err());
        assert!(asep(7, AsepMethod::Combine { k1: 4, k2: 3 }).is_err());
        assert!(asep(8, AsepMethod::Combine { k1: 3, k2: 4 }).is_err());
    }

    #[test]
    fn star_shapes() {
        let a = vec!["1w".parse::<Gf4Vector>().unwrap()];
        let b = vec!["0wW".parse::<Gf4Vector>().unwrap()];
        let s = star(&a, &b);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].to_string(), "111www");
        assert_eq!(s[1].to_string(), "0wW0wW");
        let z = vec![Gf4Vector::zeros(1)];
        let s = star(&a, &z);
        assert_eq!(s[0], a[0]);
        assert!(s[1].is_zero());
    }

    #[test]
    fn augment_small() {
        let a = asep(3, AsepMethod::Companion).unwrap();
        let e = augment(&a, true).unwrap();
        assert_eq!(e.params().unwrap(), CodeParams::new(8, 5, 6));
        assert_eq!(e.weight_distribution().unwrap().to_string(), "1+28z^6+3z^8");
        let rep = e.row_slice(3..5).unwrap();
        assert_eq!(rep.params().unwrap(), CodeParams::new(8, 2, 8));
        let u = augment(&a, false).unwrap();
        assert_eq!(
            u.weight_distribution().unwrap().to_string(),
            "1+21z^5+7z^6+3z^7"
        );
        assert!(augment(&u, true).is_err());
    }
}
