//! Word-packed matrices over GF(2).

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.words[i * self.stride + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    /// Rank by Gaussian elimination on packed rows.
    pub fn rank(&self) -> usize {
        let mut w = self.words.clone();
        let s = self.stride;
        let mut rank = 0;
        for col in 0..self.cols {
            let (word, bit) = (col / 64, 1u64 << (col % 64));
            let Some(p) = (rank..self.rows).find(|&r| w[r * s + word] & bit != 0) else {
                continue;
            };
            if p != rank {
                for k in 0..s {
                    w.swap(p * s + k, rank * s + k);
                }
            }
            for r in rank + 1..self.rows {
                if w[r * s + word] & bit != 0 {
                    for k in word..s {
                        w[r * s + k] ^= w[rank * s + k];
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for t in 0..rhs.stride {
                        out.words[i * out.stride + t] ^= rhs.words[k * rhs.stride + t];
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Unpacked elimination with one byte per entry.
    fn naive_rank(a: &mut [Vec<u8>]) -> usize {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..rows).find(|&r| a[r][c] % 2 == 1) {
                a.swap(p, rank);
                for r in 0..rows {
                    if r != rank && a[r][c] % 2 == 1 {
                        for k in 0..cols {
                            a[r][k] = (a[r][k] + a[rank][k]) % 2;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn packed_rank_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=64);
            let cols = rng.gen_range(1..=64);
            let density = rng.gen_range(0.05..0.6);
            let mut dense = vec![vec![0u8; cols]; rows];
            let mut packed = BitMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    if rng.gen_bool(density) {
                        dense[i][j] = 1;
                        packed.set(i, j, true);
                    }
                }
            }
            assert_eq!(packed.rank(), naive_rank(&mut dense));
        }
    }

    #[test]
    fn wide_rows() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(1, 0, true);
        m.set(2, 0, true);
        assert_eq!(m.rank(), 2);
        assert!(m.mul(&BitMatrix::zeros(130, 5)).is_zero());
    }
}
