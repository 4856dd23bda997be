//! The parametric construction `C(a)` of two-dimensional codes and the
//! arithmetic that pins down which parameters give optimal Hermitian LCD
//! codes.
//!
//! `G(a0; a1, …, a5)` is the 2-row matrix whose columns are, in order:
//! `(1,0)`, `(0,1)`, then `a0` copies of `(0,0)`, `a1` of `(0,1)`, `a2` of
//! `(1,0)`, `a3` of `(1,1)`, `a4` of `(1,ω)` and `a5` of `(1,ω²)`.

mod table;

pub use table::{
    family, label, split_length, table1_families, table1_members, table1_tuples, FamilyEntry,
    TABLE1,
};

use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::linalg::Matrix;
use crate::{Error, F4};

/// Column multiplicities of `G(a0; a1, …, a5)`; `a[i]` holds `a_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ATuple {
    pub a0: u32,
    pub a: [u32; 5],
}

impl ATuple {
    pub const fn new(a: [u32; 5]) -> ATuple {
        ATuple { a0: 0, a }
    }

    pub const fn with_zero_columns(a0: u32, a: [u32; 5]) -> ATuple {
        ATuple { a0, a }
    }

    /// `a_i` for `i` in `1..=5`.
    pub fn get(&self, i: usize) -> u32 {
        self.a[i - 1]
    }

    /// `n = 2 + a0 + a1 + … + a5`.
    pub fn length(&self) -> usize {
        2 + self.a0 as usize + self.a.iter().map(|&x| x as usize).sum::<usize>()
    }

    /// Weight of the first row, `1 + a2 + a3 + a4 + a5`.
    pub fn first_row_weight(&self) -> usize {
        1 + self.a[1..].iter().map(|&x| x as usize).sum::<usize>()
    }

    /// Weight of the second row, `1 + a1 + a3 + a4 + a5`.
    pub fn second_row_weight(&self) -> usize {
        1 + (self.a[0] + self.a[2] + self.a[3] + self.a[4]) as usize
    }

    pub fn build_generator(&self) -> Matrix {
        let n = self.length();
        let blocks: [(u32, [F4; 2]); 6] = [
            (self.a0, [F4::ZERO, F4::ZERO]),
            (self.a[0], [F4::ZERO, F4::ONE]),
            (self.a[1], [F4::ONE, F4::ZERO]),
            (self.a[2], [F4::ONE, F4::ONE]),
            (self.a[3], [F4::ONE, F4::W]),
            (self.a[4], [F4::ONE, F4::W2]),
        ];
        let mut top = Vec::with_capacity(n);
        let mut bottom = Vec::with_capacity(n);
        top.extend([F4::ONE, F4::ZERO]);
        bottom.extend([F4::ZERO, F4::ONE]);
        for (count, [x, y]) in blocks {
            for _ in 0..count {
                top.push(x);
                bottom.push(y);
            }
        }
        Matrix::from_rows(&[top, bottom]).expect("both rows have length n")
    }

    /// `C(a)`; always of dimension 2 because of the leading identity columns.
    pub fn code(&self) -> LinearCode {
        LinearCode::new(self.build_generator()).expect("identity columns give full rank")
    }
}

/// Largest minimum weight of a Hermitian LCD `[n, 2]` code:
/// `⌊4n/5⌋` when `n ≡ 1, 2, 3 (mod 5)`, otherwise `⌊4n/5⌋ - 1`.
pub fn dmax(n: usize) -> Result<usize, Error> {
    if n < 2 {
        return Err(Error::LengthTooSmall { n });
    }
    let base = 4 * n / 5;
    Ok(match n % 5 {
        1..=3 => base,
        _ => base - 1,
    })
}

/// `Δ = 4n - 5d`.
pub fn delta(n: i64, d: i64) -> i64 {
    4 * n - 5 * d
}

/// The shifted coordinates `b_i = (n - d) - a_i` together with `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BTuple {
    /// `b[i]` holds `b_{i+1}`.
    pub b: [i64; 5],
    pub delta: i64,
    pub n: i64,
    pub d: i64,
}

impl BTuple {
    /// Fills in `b1 = 1` and `b2 = Δ + 1 - (b3 + b4 + b5)`, the values forced
    /// for any LCD code of length `n` and minimum weight `d`.
    pub fn from_tail(n: i64, d: i64, tail: [i64; 3]) -> BTuple {
        let delta = delta(n, d);
        let b2 = delta + 1 - tail.iter().sum::<i64>();
        BTuple { b: [1, b2, tail[0], tail[1], tail[2]], delta, n, d }
    }

    pub fn get(&self, i: usize) -> i64 {
        self.b[i - 1]
    }
}

pub fn a_to_b(a: &ATuple, n: usize, d: usize) -> BTuple {
    let (n, d) = (n as i64, d as i64);
    let b = a.a.map(|x| (n - d) - x as i64);
    BTuple { b, delta: delta(n, d), n, d }
}

pub fn b_to_a(b: &BTuple) -> Result<ATuple, Error> {
    let mut a = [0u32; 5];
    for (i, &bi) in b.b.iter().enumerate() {
        let value = (b.n - b.d) - bi;
        if value < 0 {
            return Err(Error::NegativeEntry { index: i + 1, value });
        }
        a[i] = value as u32;
    }
    Ok(ATuple::new(a))
}

fn require_normalized(a: &ATuple, d: usize) -> Result<(), Error> {
    if a.a0 != 0 {
        return Err(Error::ZeroColumnsPresent { a0: a.a0 });
    }
    if a.first_row_weight() != d {
        return Err(Error::WeightNormalization {
            expected: d as i64,
            found: a.first_row_weight() as i64,
        });
    }
    Ok(())
}

/// Conditions on `a` under which `C(a)`, an `[n, 2, d]` code whose first row
/// has weight `d`, is Hermitian LCD:
///
/// * `a1 = n - d - 1`, `a2 ≤ n - d - 1`, `a3, a4, a5 ≤ n - d`;
/// * for even `d`: `a3 + a4 + a5 + a3a4 + a4a5 + a5a3` is odd;
/// * for odd `d`: `a3a4 + a4a5 + a5a3 ≢ n - d (mod 2)`.
pub fn check_lcd_conditions_a(a: &ATuple, n: usize, d: usize) -> Result<bool, Error> {
    require_normalized(a, d)?;
    let (n, d) = (n as i64, d as i64);
    let [a1, a2, a3, a4, a5] = a.a.map(i64::from);
    let slack = n - d;
    if a1 != slack - 1 || a2 > slack - 1 || a3 > slack || a4 > slack || a5 > slack {
        return Ok(false);
    }
    let pairs = a3 * a4 + a4 * a5 + a5 * a3;
    Ok(if d.rem_euclid(2) == 0 {
        (a3 + a4 + a5 + pairs) % 2 == 1
    } else {
        (pairs - slack).rem_euclid(2) == 1
    })
}

/// The same conditions in shifted coordinates: `b1 = 1`, `b2 ≥ 1`,
/// `b3, b4, b5 ≥ 0`, and the parity of `b3 + b4 + b5 + b3b4 + b4b5 + b5b3`
/// (even `d`) or of `b3b4 + b4b5 + b5b3` (odd `d`) is odd.
pub fn check_lcd_conditions_b(b: &BTuple, d: usize) -> bool {
    let [b1, b2, b3, b4, b5] = b.b;
    if b1 != 1 || b2 < 1 || b3 < 0 || b4 < 0 || b5 < 0 {
        return false;
    }
    let pairs = b3 * b4 + b4 * b5 + b5 * b3;
    let value = if d.is_multiple_of(2) { b3 + b4 + b5 + pairs } else { pairs };
    value % 2 == 1
}

/// Every `a` (with `a0 = 0`, `a3 ≥ a4, a5` and first row of weight `d`) for
/// which `C(a)` is an optimal Hermitian LCD `[n, 2, dmax(n)]` code, in
/// lexicographic order.
///
/// Scans `0 ≤ b3 ≤ b4, b5 ≤ Δ` with `b3 + b4 + b5 ≤ Δ` (so that `b2 ≥ 1`)
/// and keeps the points passing the parity test whose `a` is nonnegative.
pub fn enumerate_optimal_b(n: usize) -> Result<Vec<ATuple>, Error> {
    let d = dmax(n)?;
    let (ni, di) = (n as i64, d as i64);
    let delta = delta(ni, di);
    let mut out = Vec::new();
    for b3 in 0..=delta {
        for b4 in b3..=delta {
            for b5 in b3..=delta {
                if b3 + b4 + b5 > delta {
                    continue;
                }
                let b = BTuple::from_tail(ni, di, [b3, b4, b5]);
                if !check_lcd_conditions_b(&b, d) {
                    continue;
                }
                if let Ok(a) = b_to_a(&b) {
                    out.push(a);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `C(a1, a2, a3, a4, a5) ≃ C(a1, a2, a5, a3, a4)`: scale the second row by ω.
pub fn move_swap345(a: &ATuple) -> ATuple {
    let [a1, a2, a3, a4, a5] = a.a;
    ATuple { a0: a.a0, a: [a1, a2, a5, a3, a4] }
}

/// `C(a) ≃ C(a1, a3 - 1, a2 + 1, a5, a4)` for `a3 ≥ 1`: replace the second
/// row by the sum of both rows, which exchanges the `(1,0)` and `(1,1)`
/// column types and the `(1,ω)` and `(1,ω²)` types.
pub fn move_add_row(a: &ATuple) -> Result<ATuple, Error> {
    let [a1, a2, a3, a4, a5] = a.a;
    if a3 == 0 {
        return Err(Error::NonPositiveA3);
    }
    Ok(ATuple { a0: a.a0, a: [a1, a3 - 1, a2 + 1, a5, a4] })
}

/// `C(a) ≃ C(a2, a1, a3, a5, a4)` when `1 + a1 + a3 + a4 + a5 = d`: swap the
/// two rows.
pub fn move_swap_rows(a: &ATuple, d: usize) -> Result<ATuple, Error> {
    if a.second_row_weight() != d {
        return Err(Error::SecondRowWeight {
            expected: d as i64,
            found: a.second_row_weight() as i64,
        });
    }
    let [a1, a2, a3, a4, a5] = a.a;
    Ok(ATuple { a0: a.a0, a: [a2, a1, a3, a5, a4] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const O: F4 = F4::ZERO;
    const I: F4 = F4::ONE;
    const W: F4 = F4::W;
    const W2: F4 = F4::W2;

    #[test]
    fn build_generator_examples() {
        assert_eq!(ATuple::new([0; 5]).build_generator(), Matrix::identity(2));
        let g = ATuple::new([1, 1, 1, 1, 1]).build_generator();
        let expected = Matrix::from_rows(&[[I, O, O, I, I, I, I], [O, I, I, O, I, W, W2]]).unwrap();
        assert_eq!(g, expected);
        let g = ATuple::with_zero_columns(1, [0, 0, 1, 0, 0]).build_generator();
        assert_eq!(g.cols(), 4);
        assert!(g.is_zero_column(2));
    }

    #[test]
    fn dmax_examples() {
        assert_eq!(dmax(10), Ok(7));
        assert_eq!(dmax(7), Ok(5));
        assert_eq!(dmax(4), Ok(2));
        assert_eq!(dmax(3), Ok(2));
        assert_eq!(dmax(2), Ok(1));
        assert_eq!(dmax(1), Err(Error::LengthTooSmall { n: 1 }));
        assert_eq!(dmax(0), Err(Error::LengthTooSmall { n: 0 }));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(10, 7), 5);
        assert_eq!(delta(7, 5), 3);
        let by_residue = [5, 4, 3, 2, 6];
        for n in 2..200usize {
            let d = dmax(n).unwrap();
            assert_eq!(delta(n as i64, d as i64), by_residue[n % 5], "n = {n}");
        }
    }

    #[test]
    fn b_transform_examples() {
        let b = a_to_b(&ATuple::new([1, 1, 1, 1, 1]), 7, 5);
        assert_eq!(b.b, [1, 1, 1, 1, 1]);
        assert_eq!(b.delta, 3);
        assert_eq!(b_to_a(&b), Ok(ATuple::new([1, 1, 1, 1, 1])));

        let b = a_to_b(&ATuple::new([1, 0, 2, 1, 1]), 7, 5);
        assert_eq!(b.b, [1, 2, 0, 1, 1]);
        assert_eq!(b_to_a(&b), Ok(ATuple::new([1, 0, 2, 1, 1])));

        let bad = BTuple { b: [1, 3, 0, 0, 0], delta: 3, n: 7, d: 5 };
        assert_eq!(b_to_a(&bad), Err(Error::NegativeEntry { index: 2, value: -1 }));

        // b2 is recovered from Δ
        let b = BTuple::from_tail(7, 5, [0, 1, 1]);
        assert_eq!(b.b, [1, 2, 0, 1, 1]);
    }

    #[test]
    fn lcd_conditions_a_examples() {
        assert_eq!(check_lcd_conditions_a(&ATuple::new([1, 1, 1, 1, 1]), 7, 5), Ok(true));
        assert_eq!(check_lcd_conditions_a(&ATuple::new([2, 2, 2, 2, 0]), 10, 7), Ok(true));
        assert_eq!(check_lcd_conditions_a(&ATuple::new([0, 1, 1, 1, 1]), 7, 5), Ok(false));
        assert_eq!(
            check_lcd_conditions_a(&ATuple::new([1, 1, 1, 1, 1]), 7, 4),
            Err(Error::WeightNormalization { expected: 4, found: 5 })
        );
        assert_eq!(
            check_lcd_conditions_a(&ATuple::with_zero_columns(1, [1, 1, 1, 1, 1]), 8, 5),
            Err(Error::ZeroColumnsPresent { a0: 1 })
        );
    }

    #[test]
    fn lcd_conditions_b_examples() {
        let b = |v: [i64; 5]| BTuple { b: v, delta: 3, n: 7, d: 5 };
        assert!(check_lcd_conditions_b(&b([1, 1, 1, 1, 1]), 5));
        assert!(check_lcd_conditions_b(&b([1, 2, 0, 1, 1]), 5));
        assert!(!check_lcd_conditions_b(&b([1, 4, 0, 0, 0]), 5));
        assert!(!check_lcd_conditions_b(&b([2, 1, 1, 1, 1]), 5));
        assert!(!check_lcd_conditions_b(&b([1, 0, 1, 1, 1]), 5));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_optimal_b(7).unwrap(),
            vec![ATuple::new([1, 0, 2, 1, 1]), ATuple::new([1, 1, 1, 1, 1])]
        );
        assert_eq!(enumerate_optimal_b(2).unwrap(), vec![ATuple::new([0; 5])]);
        // C_{5m,8} starts at m = 3, so n = 10 has seven members
        assert_eq!(enumerate_optimal_b(10).unwrap(), table1_tuples(10));
        assert_eq!(enumerate_optimal_b(10).unwrap().len(), 7);
        assert_eq!(enumerate_optimal_b(15).unwrap().len(), 8);
        assert_eq!(enumerate_optimal_b(1), Err(Error::LengthTooSmall { n: 1 }));
    }

    #[test]
    fn enumerated_tuples_are_optimal_lcd() {
        for n in 2..=30 {
            let d = dmax(n).unwrap();
            for a in enumerate_optimal_b(n).unwrap() {
                assert_eq!(a.length(), n);
                assert_eq!(a.first_row_weight(), d);
                assert!(a.a[2] >= a.a[3] && a.a[2] >= a.a[4]);
                let c = a.code();
                assert_eq!(c.min_weight(), Some(d), "{a:?}");
                assert!(c.is_hermitian_lcd(), "{a:?}");
            }
        }
    }

    #[test]
    fn move_examples() {
        let a = ATuple::new([2, 2, 2, 2, 0]);
        assert_eq!(move_swap345(&a), ATuple::new([2, 2, 0, 2, 2]));
        assert_eq!(move_swap345(&move_swap345(&move_swap345(&a))), a);

        assert_eq!(move_add_row(&ATuple::new([1, 1, 1, 1, 1])), Ok(ATuple::new([1, 0, 2, 1, 1])));
        assert_eq!(move_add_row(&ATuple::new([1, 1, 0, 1, 1])), Err(Error::NonPositiveA3));

        let a = ATuple::new([2, 2, 2, 1, 0]);
        let b = move_swap_rows(&a, 6).unwrap();
        assert_eq!(b, ATuple::new([2, 2, 2, 0, 1]));
        assert_eq!(move_swap_rows(&b, 6), Ok(a));
        assert_eq!(move_swap_rows(&a, 5), Err(Error::SecondRowWeight { expected: 5, found: 6 }));
    }

    #[test]
    fn moves_preserve_weight_enumerator() {
        let samples = [[1, 1, 1, 1, 1], [2, 2, 2, 2, 0], [3, 1, 4, 1, 5], [0, 2, 1, 3, 0]];
        for s in samples {
            let a = ATuple::new(s);
            let we = a.code().weight_enumerator();
            assert_eq!(move_swap345(&a).code().weight_enumerator(), we);
            if let Ok(b) = move_add_row(&a) {
                assert_eq!(b.code().weight_enumerator(), we);
            }
            if let Ok(b) = move_swap_rows(&a, a.second_row_weight()) {
                assert_eq!(b.code().weight_enumerator(), we);
            }
        }
    }
}
