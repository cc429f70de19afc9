use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

/// Formats a GF(2) dimension `dim2` as the GF(4) dimension `dim2 / 2`.
pub fn format_dimension(dim2: usize) -> String {
    if dim2.is_multiple_of(2) {
        format!("{}", dim2 / 2)
    } else {
        format!("{}.5", dim2 / 2)
    }
}

/// `[n, dim2/2, d]` with the dimension stored doubled so it stays integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub dim2: usize,
    pub d: usize,
}

impl CodeParams {
    pub fn new(n: usize, dim2: usize, d: usize) -> Self {
        CodeParams { n, dim2, d }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, format_dimension(self.dim2), self.d)
    }
}

/// Number of codewords of each Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn from_pairs<I: IntoIterator<Item = (usize, u64)>>(pairs: I) -> Self {
        let mut counts = BTreeMap::new();
        for (w, c) in pairs {
            if c != 0 {
                *counts.entry(w).or_insert(0) += c;
            }
        }
        WeightDistribution { counts }
    }

    pub(crate) fn from_dense(dense: &[u64]) -> Self {
        Self::from_pairs(dense.iter().enumerate().map(|(w, &c)| (w, c)))
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.counts.keys().copied().rfind(|&w| w > 0)
    }

    /// Nonzero weights that occur, ascending.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    /// `(weight, count)` pairs sorted by weight, including weight zero.
    pub fn pairs(&self) -> Vec<(usize, u64)> {
        self.counts.iter().map(|(&w, &c)| (w, c)).collect()
    }
}

/// Serialized as sorted `[weight, count]` pairs.
impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.counts.iter())
    }
}

impl fmt::Display for WeightDistribution {
    /// Polynomial form, e.g. `1+7z^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&w, &c) in &self.counts {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (w, c) {
                (0, c) => write!(f, "{c}")?,
                (w, 1) => write!(f, "z^{w}")?,
                (w, c) => write!(f, "{c}z^{w}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_queries() {
        let wd = WeightDistribution::from_pairs([(0, 1), (3, 4), (2, 3), (5, 0)]);
        assert_eq!(wd.to_string(), "1+3z^2+4z^3");
        assert_eq!(wd.total(), 8);
        assert_eq!(wd.min_distance(), Some(2));
        assert_eq!(wd.max_weight(), Some(3));
        assert_eq!(wd.count(5), 0);
    }

    #[test]
    fn params_display() {
        assert_eq!(CodeParams::new(7, 3, 6).to_string(), "[7,1.5,6]");
        assert_eq!(CodeParams::new(8, 5, 6).to_string(), "[8,2.5,6]");
        assert_eq!(format_dimension(4), "2");
    }
}
