//! Linear codes over GF(4) given by a full-rank generator matrix.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::linalg::{weight, Matrix};
use crate::{Error, F4};

/// Counts of codewords by Hamming weight. Index `w` holds `A_w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    /// An enumerator for length `n` with every count zero.
    pub fn empty(n: usize) -> WeightEnumerator {
        WeightEnumerator { counts: vec![0; n + 1] }
    }

    pub fn from_counts(counts: Vec<u64>) -> WeightEnumerator {
        WeightEnumerator { counts }
    }

    /// Builds an enumerator of length `n` from `(weight, count)` terms;
    /// repeated weights accumulate.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (usize, u64)>) -> WeightEnumerator {
        let mut we = WeightEnumerator::empty(n);
        for (w, c) in terms {
            we.add(w, c);
        }
        we
    }

    pub fn add(&mut self, w: usize, count: u64) {
        if w >= self.counts.len() {
            self.counts.resize(w + 1, 0);
        }
        self.counts[w] += count;
    }

    pub fn length(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero `(weight, count)` pairs in increasing weight.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c))
    }

    /// Smallest positive weight carried by a codeword.
    pub fn min_weight(&self) -> Option<usize> {
        self.terms().map(|(w, _)| w).find(|&w| w > 0)
    }

    /// Polynomial form such as `1+6y^5+6y^6+3y^7`.
    pub fn to_polynomial(&self) -> String {
        let mut s = String::new();
        for (w, c) in self.terms() {
            if !s.is_empty() {
                s.push('+');
            }
            if w == 0 {
                let _ = write!(s, "{c}");
            } else {
                let _ = write!(s, "{c}y^{w}");
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_polynomial())
    }
}

/// A linear `[n, k]` code over GF(4). The zero code is a `0 × n` generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    gen: Matrix,
}

impl LinearCode {
    /// Wraps a generator matrix, rejecting linearly dependent rows.
    pub fn new(gen: Matrix) -> Result<LinearCode, Error> {
        let rank = gen.rank();
        if rank != gen.rows() {
            return Err(Error::RankDeficient { rows: gen.rows(), rank });
        }
        Ok(LinearCode { gen })
    }

    /// The zero-dimensional code of length `n`.
    pub fn zero(n: usize) -> LinearCode {
        LinearCode { gen: Matrix::zeros(0, n) }
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    /// All `4^k` codewords. Message vectors run in lexicographic order of
    /// their element codes, first coordinate most significant.
    pub fn codewords(&self) -> Vec<Vec<F4>> {
        let k = self.dimension();
        let total = 1usize << (2 * k);
        let mut out = Vec::with_capacity(total);
        let mut msg = vec![F4::ZERO; k];
        for idx in 0..total {
            for (i, m) in msg.iter_mut().enumerate() {
                *m = F4::from_bits((idx >> (2 * (k - 1 - i))) as u8);
            }
            out.push(self.gen.combine_rows(&msg));
        }
        out
    }

    /// Minimum Hamming weight over nonzero codewords; `None` for the zero code.
    pub fn min_weight(&self) -> Option<usize> {
        if self.dimension() == 2 {
            return self.projective_weights().into_iter().min();
        }
        self.codewords().iter().map(|c| weight(c)).filter(|&w| w > 0).min()
    }

    /// Weights of `r1`, `r2`, `r1 + r2`, `r1 + ω r2`, `r1 + ω² r2`, one
    /// codeword per scalar class of a two-dimensional code.
    fn projective_weights(&self) -> [usize; 5] {
        let r1 = self.gen.row(0);
        let r2 = self.gen.row(1);
        let comb = |s: F4| r1.iter().zip(r2).filter(|(&x, &y)| !(x + s * y).is_zero()).count();
        [weight(r1), weight(r2), comb(F4::ONE), comb(F4::W), comb(F4::W2)]
    }

    /// For `k = 2` each of the five scalar classes contributes three
    /// codewords of equal weight; other dimensions enumerate every codeword.
    pub fn weight_enumerator(&self) -> WeightEnumerator {
        let n = self.length();
        if self.dimension() == 2 {
            let mut we = WeightEnumerator::empty(n);
            we.add(0, 1);
            for w in self.projective_weights() {
                we.add(w, 3);
            }
            return we;
        }
        WeightEnumerator::from_terms(n, self.codewords().iter().map(|c| (weight(c), 1)))
    }

    /// `C^⊥h = { x : (x, y)_h = 0 for all y in C }`.
    pub fn hermitian_dual(&self) -> LinearCode {
        LinearCode { gen: self.gen.kernel_basis() }
    }

    /// `dim(C ∩ C^⊥h) = k - rank(G conj(G)ᵀ)`.
    pub fn hull_dimension(&self) -> usize {
        self.dimension() - self.gen.gram().rank()
    }

    /// `det(G conj(G)ᵀ) ≠ 0`.
    pub fn is_hermitian_lcd(&self) -> bool {
        !self.gen.gram().det().expect("Gram matrix is square").is_zero()
    }

    /// `C* = { (x, 0) : x in C }`.
    pub fn extend_with_zero(&self) -> LinearCode {
        LinearCode { gen: self.gen.with_zero_column() }
    }

    /// Deletes coordinate `j`. The result may lose rank only if `C` had
    /// codewords supported solely on `j`.
    pub fn puncture(&self, j: usize) -> Result<LinearCode, Error> {
        LinearCode::new(self.gen.without_column(j))
    }

    /// Whether some coordinate vanishes on every codeword. For `k < n` this
    /// is equivalent to the Hermitian dual having minimum weight 1.
    pub fn has_zero_coordinate(&self) -> bool {
        (0..self.length()).any(|j| self.gen.is_zero_column(j))
    }
}
