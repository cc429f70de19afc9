//! Column-deletion families carved out of the combined ASEP layout.
//!
//! The layout is `A_{k1}° ⋆ A_{k2}°` minus its zero column, where `A_{k1}` is
//! the odd iterate code and `A_{k2}` the even integer code. Column `(i, j)`
//! with `i < n1, j < n2` belongs to the star block; `j = n2` gives the
//! `[A_{k1}; 0]` block and `i = n1` the `[0; A_{k2}]` block. The latter splits
//! into three equal blocks `[0; G; wG]`, `[0; wG; w²G]`, `[0; w²G; G]`.

use crate::code::AdditiveCode;
use crate::error::{invalid, Result};

use super::asep::{asep, check_combine, AsepMethod};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnticodeMode {
    /// Drop the `[A_{k1}; 0]` block.
    RemoveK1,
    /// Drop both diagonal blocks, keeping the star block.
    RemoveBoth,
    /// Drop the first `m` of the three `[0; A_{k2}]` blocks.
    Blocks(usize),
    /// Keep columns whose `j` lies in the first block, including `i = n1`.
    ThirdK1,
    /// Keep star columns whose `j` lies in the first block.
    ThirdBoth,
}

struct Layout {
    code: AdditiveCode,
    n1: usize,
    n2: usize,
}

impl Layout {
    fn build(k1: usize, k2: usize) -> Result<Layout> {
        let k = k1 + k2;
        check_combine(k, k1, k2)?;
        let code = asep(k, AsepMethod::Combine { k1, k2 })?;
        Ok(Layout {
            code,
            n1: (1 << k1) - 1,
            n2: (1 << k2) - 1,
        })
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.n2 + 1) + j
    }

    fn third(&self) -> usize {
        self.n2 / 3
    }

    fn columns_where(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..=self.n1 {
            for j in 0..=self.n2 {
                if (i, j) != (self.n1, self.n2) && keep(i, j) {
                    out.push(self.index(i, j));
                }
            }
        }
        out
    }
}

/// Builds the combined ASEP code for `k = k1 + k2` and deletes the columns selected by `mode`.
pub fn anticode_family(k1: usize, k2: usize, mode: AnticodeMode) -> Result<AdditiveCode> {
    if let AnticodeMode::Blocks(m) = mode {
        if !(1..=3).contains(&m) {
            return Err(invalid(format!("block count m={m} outside 1..=3")));
        }
    }
    let l = Layout::build(k1, k2)?;
    let (n1, n2, q) = (l.n1, l.n2, l.third());
    let drop = match mode {
        AnticodeMode::RemoveK1 => l.columns_where(|i, j| i < n1 && j == n2),
        AnticodeMode::RemoveBoth => l.columns_where(|i, j| i == n1 || j == n2),
        AnticodeMode::Blocks(m) => l.columns_where(|i, j| i == n1 && j < m * q),
        AnticodeMode::ThirdK1 => l.columns_where(|_, j| j >= q),
        AnticodeMode::ThirdBoth => l.columns_where(|i, j| i == n1 || j >= q),
    };
    l.code.multiset_subtract(&drop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeParams;

    #[test]
    fn small_family_parameters() {
        let cases = [
            (AnticodeMode::RemoveK1, CodeParams::new(120, 7, 90)),
            (AnticodeMode::RemoveBoth, CodeParams::new(105, 7, 78)),
            (AnticodeMode::Blocks(1), CodeParams::new(122, 7, 92)),
            (AnticodeMode::Blocks(2), CodeParams::new(117, 7, 88)),
            (AnticodeMode::Blocks(3), CodeParams::new(112, 7, 84)),
            (AnticodeMode::ThirdK1, CodeParams::new(40, 7, 30)),
            (AnticodeMode::ThirdBoth, CodeParams::new(35, 7, 26)),
        ];
        for (mode, expect) in cases {
            let c = anticode_family(3, 4, mode).unwrap();
            assert_eq!(c.params().unwrap(), expect, "{mode:?}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(anticode_family(4, 4, AnticodeMode::RemoveK1).is_err());
        assert!(anticode_family(3, 5, AnticodeMode::RemoveK1).is_err());
        assert!(anticode_family(3, 4, AnticodeMode::Blocks(4)).is_err());
        assert!(anticode_family(3, 4, AnticodeMode::Blocks(0)).is_err());
    }
}
