//! Fixed-width bit masks and the tuple counter shared by the brute-force oracles.

use num_bigint::BigUint;

/// A list of equal-width bit masks stored contiguously.
#[derive(Debug, Clone)]
pub(crate) struct MaskTable {
    words: usize,
    data: Vec<u64>,
}

impl MaskTable {
    pub fn new(bits: usize) -> Self {
        MaskTable { words: bits / 64 + 1, data: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.words
    }

    /// Appends a mask with the given bits set.
    pub fn push(&mut self, bits: impl IntoIterator<Item = usize>) {
        let start = self.data.len();
        self.data.resize(start + self.words, 0);
        for b in bits {
            self.data[start + b / 64] |= 1 << (b % 64);
        }
    }

    fn mask(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Counts `m`-tuples `(i_1, ..., i_m)` whose masks have empty intersection,
    /// walking every tuple with cached prefix intersections.
    pub fn count_tuples_with_empty_meet(&self, m: usize) -> BigUint {
        let n = self.len();
        let w = self.words;
        if n == 0 || m == 0 {
            return BigUint::from((m == 0) as u8);
        }
        // prefix[l] holds the meet of the first l chosen masks.
        let mut prefix = vec![u64::MAX; (m + 1) * w];
        let mut idx = vec![0usize; m];
        let mut total: u128 = 0;
        for l in 0..m - 1 {
            for k in 0..w {
                prefix[(l + 1) * w + k] = prefix[l * w + k] & self.mask(0)[k];
            }
        }
        loop {
            let base = &prefix[(m - 1) * w..m * w];
            for i in 0..n {
                let mk = self.mask(i);
                if base.iter().zip(mk).all(|(a, b)| a & b == 0) {
                    total += 1;
                }
            }
            // advance the odometer over the first m - 1 coordinates
            let mut l = m - 1;
            loop {
                if l == 0 {
                    return BigUint::from(total);
                }
                l -= 1;
                idx[l] += 1;
                if idx[l] < n {
                    break;
                }
                idx[l] = 0;
            }
            for j in l..m - 1 {
                let mk = self.mask(idx[j]);
                for k in 0..w {
                    prefix[(j + 1) * w + k] = prefix[j * w + k] & mk[k];
                }
            }
        }
    }
}
