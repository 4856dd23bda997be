//! Classification of two-dimensional codes up to monomial equivalence.
//!
//! A `[n, 2]` code is determined up to column order and column scaling by
//! how many of its columns are zero and how many fall on each of the five
//! projective points. Row operations then act on these counts through a
//! permutation group of order 60, so the lexicographically smallest image
//! is a complete invariant.

mod census;
mod group;
pub mod tables;
mod verify;

pub use census::{census, census_shard, shards, CensusAccumulator, CensusFilter, Shard};
pub use group::{
    apply, compose, induced_by, is_even, point_index, PointGroup, PointPerm, IDENTITY, POINTS,
};
pub use verify::{
    classify_optimal, classify_with, label_classes, verify_tables, verify_tables_with, Check,
    CheckId, VerificationReport,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::code::{LinearCode, WeightEnumerator};
use crate::family::ATuple;
use crate::linalg::Matrix;
use crate::{Error, F4};

/// Zero-column count plus the multiplicity of each projective column type,
/// in the order of [`POINTS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultVector {
    pub m0: u32,
    pub mp: [u32; 5],
}

impl MultVector {
    /// Rejects vectors supported on fewer than two projective points, which
    /// would not generate a two-dimensional code.
    pub fn new(m0: u32, mp: [u32; 5]) -> Result<MultVector, Error> {
        let mv = MultVector { m0, mp };
        if mv.spans_plane() {
            Ok(mv)
        } else {
            Err(Error::DegenerateMultVector)
        }
    }

    pub fn spans_plane(&self) -> bool {
        self.mp.iter().filter(|&&c| c > 0).count() >= 2
    }

    pub fn length(&self) -> usize {
        self.m0 as usize + self.mp.iter().map(|&c| c as usize).sum::<usize>()
    }

    /// Multiplicities of `G(a0; a1, …, a5)`: `mp = (1+a2, 1+a1, a3, a4, a5)`.
    pub fn from_atuple(a: &ATuple) -> MultVector {
        let [a1, a2, a3, a4, a5] = a.a;
        MultVector { m0: a.a0, mp: [1 + a2, 1 + a1, a3, a4, a5] }
    }

    /// The inverse of [`MultVector::from_atuple`] when both identity columns
    /// are present.
    pub fn to_atuple(&self) -> Option<ATuple> {
        let [p0, p1, p2, p3, p4] = self.mp;
        if p0 == 0 || p1 == 0 {
            return None;
        }
        Some(ATuple { a0: self.m0, a: [p1 - 1, p0 - 1, p2, p3, p4] })
    }

    /// A nonzero message `u` annihilates exactly one projective point, so
    /// its codeword has weight `n - m0 - mp[p]`; the minimum follows.
    pub fn min_weight(&self) -> usize {
        self.length() - self.m0 as usize - *self.mp.iter().max().expect("five entries") as usize
    }

    /// Three codewords of weight `n - m0 - mp[p]` for each point `p`.
    pub fn weight_enumerator(&self) -> WeightEnumerator {
        let n = self.length();
        let nonzero = n - self.m0 as usize;
        let mut we = WeightEnumerator::empty(n);
        we.add(0, 1);
        for &c in &self.mp {
            we.add(nonzero - c as usize, 3);
        }
        we
    }

    /// `G conj(G)ᵀ` from the counts alone: each column contributes
    /// `c conj(c)ᵀ`, independent of its scaling, and pairs cancel.
    pub fn gram(&self) -> [[F4; 2]; 2] {
        let mut g = [[F4::ZERO; 2]; 2];
        for (p, &count) in POINTS.iter().zip(&self.mp) {
            if count % 2 == 0 {
                continue;
            }
            for i in 0..2 {
                for j in 0..2 {
                    g[i][j] += p[i] * p[j].conj();
                }
            }
        }
        g
    }

    pub fn is_hermitian_lcd(&self) -> bool {
        let g = self.gram();
        !(g[0][0] * g[1][1] + g[0][1] * g[1][0]).is_zero()
    }

    /// Canonical representative: same `m0`, smallest image of `mp`.
    pub fn canonical(&self, group: &PointGroup) -> MultVector {
        MultVector { m0: self.m0, mp: group.canonical(&self.mp) }
    }

    /// Generator matrix listing each point `mp[p]` times in point order,
    /// followed by `m0` zero columns.
    pub fn to_generator(&self) -> Matrix {
        let n = self.length();
        let mut top = Vec::with_capacity(n);
        let mut bottom = Vec::with_capacity(n);
        for (p, &count) in POINTS.iter().zip(&self.mp) {
            for _ in 0..count {
                top.push(p[0]);
                bottom.push(p[1]);
            }
        }
        for _ in 0..self.m0 {
            top.push(F4::ZERO);
            bottom.push(F4::ZERO);
        }
        Matrix::from_rows(&[top, bottom]).expect("rows share length")
    }
}

/// Counts the columns of a two-dimensional code by projective type.
pub fn code_to_multvector(code: &LinearCode) -> Result<MultVector, Error> {
    if code.dimension() != 2 {
        return Err(Error::NotDimensionTwo { k: code.dimension() });
    }
    let g = code.generator();
    let mut mv = MultVector { m0: 0, mp: [0; 5] };
    for j in 0..g.cols() {
        match point_index(g.get(0, j), g.get(1, j)) {
            Some(p) => mv.mp[p] += 1,
            None => mv.m0 += 1,
        }
    }
    Ok(mv)
}

pub fn multvector_to_code(mv: &MultVector) -> Result<LinearCode, Error> {
    if !mv.spans_plane() {
        return Err(Error::DegenerateMultVector);
    }
    LinearCode::new(mv.to_generator())
}

/// Canonical form with a freshly built group; prefer
/// [`MultVector::canonical`] in loops.
pub fn canonical_form(mv: &MultVector) -> MultVector {
    mv.canonical(&PointGroup::new())
}

/// The permutation group induced on projective points by all invertible
/// 2×2 matrices.
pub fn induced_point_permutations() -> Vec<PointPerm> {
    PointGroup::new().perms().to_vec()
}

/// Monomial equivalence of two `[n, 2]` codes.
pub fn are_equivalent(c1: &LinearCode, c2: &LinearCode) -> Result<bool, Error> {
    let group = PointGroup::new();
    let a = code_to_multvector(c1)?.canonical(&group);
    let b = code_to_multvector(c2)?.canonical(&group);
    Ok(a == b)
}

/// One equivalence class found by the census.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquivClass {
    pub canon: MultVector,
    pub n: usize,
    pub d: usize,
    pub weight_enumerator: WeightEnumerator,
    /// Whether some coordinate is identically zero, i.e. the Hermitian dual
    /// has minimum weight 1.
    pub zero_col: bool,
    /// Family name when a family member lies in the orbit, e.g. `C_{5m+4,21}`.
    /// Zero-column extensions carry the name of the shortened code with a
    /// trailing `*`.
    pub label: Option<String>,
    /// The named family member (with `a0` zero columns), if any.
    pub representative: Option<ATuple>,
}

impl EquivClass {
    pub fn from_canonical(canon: MultVector) -> EquivClass {
        EquivClass {
            canon,
            n: canon.length(),
            d: canon.min_weight(),
            weight_enumerator: canon.weight_enumerator(),
            zero_col: canon.m0 > 0,
            label: None,
            representative: None,
        }
    }
}
