//! Dense boolean matrices with rows packed into 64-bit words.

use crate::error::{DispersionError, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "bit ({i}, {j}) out of range"
        );
        self.words[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "bit ({i}, {j}) out of range"
        );
        let w = &mut self.words[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// Column indices of the set bits in row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Element-wise AND.
    pub fn and(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(DispersionError::DimensionMismatch(format!(
                "{}x{} AND {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(BitMatrix { words, ..*self })
    }

    /// True if every set bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitMatrix) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD + bit)
        })
    })
}

/// Boolean product `C[i][j] = OR_t (A[i][t] AND B[t][j])`.
///
/// Row `i` of `C` is the OR of the rows of `B` selected by the set bits of
/// row `i` of `A`, so the cost is `O(p·q·r / 64)` word operations.
pub fn bool_matrix_multiply(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.cols != b.rows {
        return Err(DispersionError::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut c = BitMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        let out = &mut c.words[i * c.stride..(i + 1) * c.stride];
        for t in iter_ones(a.row(i)) {
            for (o, &w) in out.iter_mut().zip(b.row(t)) {
                *o |= w;
            }
        }
    }
    Ok(c)
}
