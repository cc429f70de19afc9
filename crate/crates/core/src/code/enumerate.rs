//! Exhaustive Gray-code walk over the GF(2) span of packed generators.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest GF(2) dimension that will be enumerated.
pub const ENUMERATION_LIMIT: usize = 24;

/// Below this dimension the walk runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 12;
const CHUNK_BITS: usize = 6;

/// Generators packed as equal-length word slices.
#[derive(Clone, Debug)]
pub(crate) struct Span {
    gens: Vec<Vec<u64>>,
    words: usize,
}

impl Span {
    pub(crate) fn new(gens: Vec<Vec<u64>>, words: usize) -> Result<Self> {
        debug_assert!(gens.iter().all(|g| g.len() == words));
        if gens.len() > ENUMERATION_LIMIT {
            return Err(Error::EnumerationGuard {
                dim2: gens.len(),
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(Span { gens, words })
    }

    /// Folds `f` over every element of the span.
    ///
    /// `f` receives the coefficient mask (bit `i` set when generator `i` is
    /// included) and the packed word. Per-chunk accumulators are merged in
    /// chunk order, so the result does not depend on scheduling.
    pub(crate) fn fold<T, I, F, M>(&self, identity: I, f: F, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, u64, &[u64]) + Sync,
        M: Fn(T, T) -> T + Sync,
    {
        let dim = self.gens.len();
        let total = 1u64 << dim;
        if dim < PARALLEL_THRESHOLD {
            let mut acc = identity();
            self.walk(0, total, &mut acc, &f);
            return acc;
        }
        let chunks = 1u64 << CHUNK_BITS;
        let len = total / chunks;
        let parts: Vec<T> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = identity();
                self.walk(c * len, (c + 1) * len, &mut acc, &f);
                acc
            })
            .collect();
        parts.into_iter().reduce(&merge).unwrap_or_else(identity)
    }

    fn walk<T, F>(&self, start: u64, end: u64, acc: &mut T, f: &F)
    where
        F: Fn(&mut T, u64, &[u64]),
    {
        let mut gray = start ^ (start >> 1);
        let mut word = vec![0u64; self.words];
        for (i, g) in self.gens.iter().enumerate() {
            if gray >> i & 1 == 1 {
                xor_into(&mut word, g);
            }
        }
        f(acc, gray, &word);
        for i in start + 1..end {
            let bit = i.trailing_zeros() as usize;
            gray ^= 1 << bit;
            xor_into(&mut word, &self.gens[bit]);
            f(acc, gray, &word);
        }
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(span: &Span) -> Vec<(u64, Vec<u64>)> {
        let mut v = span.fold(
            Vec::new,
            |acc, g, w| acc.push((g, w.to_vec())),
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        v.sort();
        v
    }

    #[test]
    fn visits_every_combination_once() {
        let gens = vec![vec![1u64], vec![2], vec![4]];
        let span = Span::new(gens, 1).unwrap();
        let got = collect(&span);
        assert_eq!(got.len(), 8);
        for (g, w) in got {
            assert_eq!(w[0], g);
        }
    }

    #[test]
    fn parallel_walk_matches_direct_sum() {
        let gens: Vec<Vec<u64>> = (0..14).map(|i| vec![1u64 << i, (i as u64) * 3]).collect();
        let span = Span::new(gens.clone(), 2).unwrap();
        let got = collect(&span);
        assert_eq!(got.len(), 1 << 14);
        for (g, w) in got.iter().step_by(97) {
            let mut expect = vec![0u64; 2];
            for (i, gen) in gens.iter().enumerate() {
                if g >> i & 1 == 1 {
                    xor_into(&mut expect, gen);
                }
            }
            assert_eq!(&expect, w);
        }
    }

    #[test]
    fn guard_refuses_large_spans() {
        let gens = vec![vec![0u64]; ENUMERATION_LIMIT + 1];
        assert!(matches!(
            Span::new(gens, 1),
            Err(Error::EnumerationGuard { dim2: 25, .. })
        ));
    }
}
