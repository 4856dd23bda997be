//! Published classification data checked by the verifier: equivalence
//! chains between family members, weight enumerators of chain
//! representatives, class counts per length and the closing theorem.

use alloc::vec::Vec;

use crate::code::WeightEnumerator;
use crate::family::{family, split_length, ATuple, FamilyEntry};

/// Family members shown to be equivalent by the three moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chain {
    pub residue: u8,
    /// Index of the member whose weight enumerator is tabulated.
    pub representative: u8,
    /// Indices in the order the chain is written.
    pub members: &'static [u8],
}

impl Chain {
    /// Members defined at parameter `m`, in chain order.
    pub fn active(&self, m: u32) -> Vec<(&'static FamilyEntry, ATuple)> {
        self.members
            .iter()
            .filter_map(|&i| {
                let f = family(self.residue, i).expect("chain members are family entries");
                f.at(m).map(|a| (f, a))
            })
            .collect()
    }

    pub fn representative_entry(&self) -> &'static FamilyEntry {
        family(self.residue, self.representative).expect("representative is a family entry")
    }
}

pub const CHAINS: [Chain; 11] = [
    Chain { residue: 0, representative: 7, members: &[7, 6, 5] },
    Chain { residue: 0, representative: 8, members: &[8, 3, 2, 1, 4] },
    Chain { residue: 1, representative: 9, members: &[9, 6, 4, 3, 7] },
    Chain { residue: 1, representative: 1, members: &[11, 5, 1, 2, 8, 10] },
    Chain { residue: 2, representative: 1, members: &[1, 2] },
    Chain { residue: 3, representative: 1, members: &[1, 2, 3] },
    Chain { residue: 4, representative: 8, members: &[8, 16, 15] },
    Chain { residue: 4, representative: 6, members: &[6, 22, 20] },
    Chain { residue: 4, representative: 21, members: &[21, 17, 12, 2, 3, 11, 19, 18] },
    Chain { residue: 4, representative: 23, members: &[23, 9, 4, 1, 13] },
    Chain { residue: 4, representative: 24, members: &[24, 10, 5, 7, 14, 25] },
];

pub fn chains_for(residue: u8) -> impl Iterator<Item = &'static Chain> {
    CHAINS.iter().filter(move |c| c.residue == residue)
}

/// Weight enumerator `1 + Σ coef · y^(4m + offset)` of a representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedWeightEnumerator {
    pub residue: u8,
    pub index: u8,
    pub terms: &'static [(u64, i64)],
}

impl ClosedWeightEnumerator {
    /// Evaluates at `m`; `None` if an exponent would be negative.
    pub fn at(&self, m: u32) -> Option<WeightEnumerator> {
        let n = 5 * m as usize + self.residue as usize;
        let mut we = WeightEnumerator::empty(n);
        we.add(0, 1);
        for &(coef, off) in self.terms {
            let w = usize::try_from(4 * m as i64 + off).ok()?;
            we.add(w, coef);
        }
        Some(we)
    }
}

const fn cwe(residue: u8, index: u8, terms: &'static [(u64, i64)]) -> ClosedWeightEnumerator {
    ClosedWeightEnumerator { residue, index, terms }
}

pub const WEIGHT_ENUMERATORS: [ClosedWeightEnumerator; 11] = [
    cwe(0, 7, &[(3, -1), (9, 0), (3, 1)]),
    cwe(0, 8, &[(6, -1), (6, 0), (3, 2)]),
    cwe(1, 9, &[(6, 0), (6, 1), (3, 2)]),
    cwe(1, 1, &[(9, 0), (3, 1), (3, 3)]),
    cwe(2, 1, &[(6, 1), (6, 2), (3, 3)]),
    cwe(3, 1, &[(9, 2), (6, 3)]),
    cwe(4, 8, &[(3, 2), (6, 3), (6, 4)]),
    cwe(4, 6, &[(9, 2), (6, 5)]),
    cwe(4, 21, &[(6, 2), (3, 3), (3, 4), (3, 5)]),
    cwe(4, 23, &[(6, 2), (6, 3), (3, 6)]),
    cwe(4, 24, &[(9, 2), (3, 3), (3, 7)]),
];

pub fn closed_weight_enumerator(residue: u8, index: u8) -> Option<&'static ClosedWeightEnumerator> {
    WEIGHT_ENUMERATORS.iter().find(|w| w.residue == residue && w.index == index)
}

/// A row of the published class listing, codes as `(residue, index)`
/// exactly as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ListingRow {
    pub residue: u8,
    pub m_from: u32,
    /// Inclusive upper end; `None` for "and above".
    pub m_to: Option<u32>,
    pub codes: &'static [(u8, u8)],
}

pub const LISTING: [ListingRow; 10] = [
    ListingRow { residue: 0, m_from: 1, m_to: Some(1), codes: &[(0, 7)] },
    ListingRow { residue: 0, m_from: 2, m_to: None, codes: &[(0, 7), (0, 8)] },
    ListingRow { residue: 1, m_from: 1, m_to: Some(1), codes: &[(1, 9)] },
    // printed as C_{5m,1}; the chains place C_{5m+1,1} here
    ListingRow { residue: 1, m_from: 2, m_to: None, codes: &[(1, 9), (0, 1)] },
    ListingRow { residue: 2, m_from: 0, m_to: None, codes: &[(2, 1)] },
    ListingRow { residue: 3, m_from: 0, m_to: None, codes: &[(3, 1)] },
    ListingRow { residue: 4, m_from: 0, m_to: Some(0), codes: &[(4, 8)] },
    ListingRow { residue: 4, m_from: 1, m_to: Some(1), codes: &[(4, 8), (4, 6), (4, 21)] },
    ListingRow { residue: 4, m_from: 2, m_to: Some(2), codes: &[(4, 8), (4, 6), (4, 21), (4, 23)] },
    ListingRow {
        residue: 4,
        m_from: 3,
        m_to: None,
        codes: &[(4, 8), (4, 6), (4, 21), (4, 23), (4, 24)],
    },
];

/// The listing row covering length `n`, if any (`n = 1` has none).
pub fn listing_row(n: usize) -> Option<&'static ListingRow> {
    let (m, residue) = split_length(n);
    LISTING.iter().find(|r| r.residue == residue && m >= r.m_from && r.m_to.is_none_or(|t| m <= t))
}

/// Number of classes without zero columns listed for length `n`.
pub fn listed_class_count(n: usize) -> Option<usize> {
    listing_row(n).map(|r| r.codes.len())
}

/// Expected count from the closing theorem for length `n`, when one of its
/// items applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremClaim {
    /// `i` through `v`.
    pub item: &'static str,
    pub classes: usize,
    pub include_zero_columns: bool,
    /// Required number of classes with a zero coordinate, when stated.
    pub zero_column_classes: Option<usize>,
}

pub fn theorem_claim(n: usize) -> Option<TheoremClaim> {
    let (m, residue) = split_length(n);
    let claim = |item, classes| TheoremClaim {
        item,
        classes,
        include_zero_columns: false,
        zero_column_classes: None,
    };
    match residue {
        0 if m >= 2 => Some(claim("i", 2)),
        1 if m >= 2 => Some(claim("ii", 2)),
        2 => Some(claim("iii", 1)),
        3 => Some(claim("iv", 1)),
        4 if m >= 3 => Some(TheoremClaim {
            item: "v",
            classes: 6,
            include_zero_columns: true,
            zero_column_classes: Some(1),
        }),
        _ => None,
    }
}
