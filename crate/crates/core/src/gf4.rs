//! Arithmetic in GF(4) = {0, 1, ω, ω²} with ω² + ω + 1 = 0.
//!
//! Elements are stored as two bits: 0, 1, 2 (ω), 3 (ω²). With this encoding
//! addition is XOR; multiplication goes through a lookup table.
//!
//! ```text
//! × | 0  1  ω  ω²
//! --+------------
//! 0 | 0  0  0  0
//! 1 | 0  1  ω  ω²
//! ω | 0  ω  ω² 1
//! ω²| 0  ω² 1  ω
//! ```

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use crate::Error;

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const CONJ: [u8; 4] = [0, 1, 3, 2];

/// An element of GF(4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    /// ω, a root of x² + x + 1.
    pub const W: F4 = F4(2);
    /// ω² = ω + 1.
    pub const W2: F4 = F4(3);

    /// All four elements in encoding order: 0, 1, ω, ω².
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::W2];
    /// The three nonzero elements.
    pub const NONZERO: [F4; 3] = [F4::ONE, F4::W, F4::W2];

    /// Builds an element from its two-bit code; higher bits are ignored.
    pub const fn from_bits(bits: u8) -> F4 {
        F4(bits & 0b11)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }

    pub const fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }

    /// The Frobenius conjugate x ↦ x², swapping ω and ω².
    pub const fn conj(self) -> F4 {
        F4(CONJ[self.0 as usize])
    }

    /// Multiplicative inverse. For nonzero x this is x², i.e. the conjugate.
    pub fn inv(self) -> Result<F4, Error> {
        if self.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.conj())
        }
    }

    /// Reduces an integer into the prime subfield {0, 1}.
    pub const fn from_parity(value: u64) -> F4 {
        F4((value & 1) as u8)
    }

    /// Short ASCII symbol used by all text formats.
    pub const fn symbol(self) -> &'static str {
        match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w2",
        }
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, rhs: F4) -> F4 {
        F4::add(self, rhs)
    }
}

impl AddAssign for F4 {
    fn add_assign(&mut self, rhs: F4) {
        *self = *self + rhs;
    }
}

// Characteristic 2: subtraction is addition and negation is the identity.
impl Sub for F4 {
    type Output = F4;
    fn sub(self, rhs: F4) -> F4 {
        F4::add(self, rhs)
    }
}

impl SubAssign for F4 {
    fn sub_assign(&mut self, rhs: F4) {
        *self = *self - rhs;
    }
}

impl Neg for F4 {
    type Output = F4;
    fn neg(self) -> F4 {
        self
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        F4::mul(self, rhs)
    }
}

impl MulAssign for F4 {
    fn mul_assign(&mut self, rhs: F4) {
        *self = *self * rhs;
    }
}

impl core::iter::Sum for F4 {
    fn sum<I: Iterator<Item = F4>>(iter: I) -> F4 {
        iter.fold(F4::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for F4 {
    type Err = Error;

    /// Accepts `0`, `1`, `w`, `w2` in any case, surrounding whitespace ignored.
    fn from_str(s: &str) -> Result<F4, Error> {
        let t = s.trim();
        if t == "0" {
            Ok(F4::ZERO)
        } else if t == "1" {
            Ok(F4::ONE)
        } else if t.eq_ignore_ascii_case("w") {
            Ok(F4::W)
        } else if t.eq_ignore_ascii_case("w2") {
            Ok(F4::W2)
        } else {
            Err(Error::ParseElement)
        }
    }
}
