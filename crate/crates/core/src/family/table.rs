//! Closed-form families of optimal Hermitian LCD `[n, 2]` codes.
//!
//! Each entry gives `a_i = m + offset_i` for lengths `n = 5m + residue`,
//! valid from `m_min` on. Entries are listed per residue class in
//! lexicographic order of the tuples.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::ATuple;

/// One row of the family table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyEntry {
    /// `n mod 5`.
    pub residue: u8,
    /// Position within its residue class, starting at 1.
    pub index: u8,
    /// `a_i(m) = m + offsets[i - 1]`.
    pub offsets: [i32; 5],
    pub m_min: u32,
}

impl FamilyEntry {
    /// Name such as `C_{5m+4,21}` or `C_{5m,7}`.
    pub fn label(&self) -> String {
        label(self.residue, self.index)
    }

    /// Length of the member with parameter `m`.
    pub fn length(&self, m: u32) -> usize {
        5 * m as usize + self.residue as usize
    }

    /// The tuple at parameter `m`, or `None` below `m_min` or when an entry
    /// would be negative.
    pub fn at(&self, m: u32) -> Option<ATuple> {
        if m < self.m_min {
            return None;
        }
        let mut a = [0u32; 5];
        for (slot, &off) in a.iter_mut().zip(&self.offsets) {
            *slot = u32::try_from(m as i64 + off as i64).ok()?;
        }
        Some(ATuple::new(a))
    }
}

/// `C_{5m+r,i}` naming used throughout the tables.
pub fn label(residue: u8, index: u8) -> String {
    if residue == 0 {
        format!("C_{{5m,{index}}}")
    } else {
        format!("C_{{5m+{residue},{index}}}")
    }
}

const fn e(residue: u8, index: u8, offsets: [i32; 5], m_min: u32) -> FamilyEntry {
    FamilyEntry { residue, index, offsets, m_min }
}

/// All 49 families.
pub const TABLE1: [FamilyEntry; 49] = [
    e(0, 1, [0, 0, 0, 0, -2], 2),
    e(0, 2, [0, 0, 0, -2, 0], 2),
    e(0, 3, [0, -1, 1, 0, -2], 2),
    e(0, 4, [0, -1, 1, -2, 0], 2),
    e(0, 5, [0, -1, 0, 0, -1], 1),
    e(0, 6, [0, -1, 0, -1, 0], 1),
    e(0, 7, [0, -2, 0, 0, 0], 2),
    e(0, 8, [0, -3, 1, 0, 0], 3),
    e(1, 1, [0, 0, 1, 0, -2], 2),
    e(1, 2, [0, 0, 1, -2, 0], 2),
    e(1, 3, [0, 0, 0, 0, -1], 1),
    e(1, 4, [0, 0, 0, -1, 0], 1),
    e(1, 5, [0, -1, 1, 1, -2], 2),
    e(1, 6, [0, -1, 1, 0, -1], 1),
    e(1, 7, [0, -1, 1, -1, 0], 1),
    e(1, 8, [0, -1, 1, -2, 1], 2),
    e(1, 9, [0, -2, 1, 0, 0], 2),
    e(1, 10, [0, -3, 1, 1, 0], 3),
    e(1, 11, [0, -3, 1, 0, 1], 3),
    e(2, 1, [0, 0, 0, 0, 0], 0),
    e(2, 2, [0, -1, 1, 0, 0], 1),
    e(3, 1, [0, -1, 1, 1, 0], 1),
    e(3, 2, [0, 0, 1, 0, 0], 0),
    e(3, 3, [0, -1, 1, 0, 1], 1),
    e(4, 1, [1, 1, 1, 1, -2], 2),
    e(4, 2, [1, 1, 1, 0, -1], 1),
    e(4, 3, [1, 1, 1, -1, 0], 1),
    e(4, 4, [1, 1, 1, -2, 1], 2),
    e(4, 5, [1, 1, 2, 1, -3], 3),
    e(4, 6, [1, 1, 2, -1, -1], 1),
    e(4, 7, [1, 1, 2, -3, 1], 3),
    e(4, 8, [1, 0, 1, 0, 0], 0),
    e(4, 9, [1, 0, 2, 1, -2], 2),
    e(4, 10, [1, 0, 2, 2, -3], 3),
    e(4, 11, [1, 0, 2, 0, -1], 1),
    e(4, 12, [1, 0, 2, -1, 0], 1),
    e(4, 13, [1, 0, 2, -2, 1], 2),
    e(4, 14, [1, 0, 2, -3, 2], 3),
    e(4, 15, [1, -1, 1, 1, 0], 1),
    e(4, 16, [1, -1, 1, 0, 1], 1),
    e(4, 17, [1, -1, 2, 1, -1], 1),
    e(4, 18, [1, -1, 2, -1, 1], 1),
    e(4, 19, [1, -2, 2, 1, 0], 2),
    e(4, 20, [1, -2, 2, 2, -1], 2),
    e(4, 21, [1, -2, 2, 0, 1], 2),
    e(4, 22, [1, -2, 2, -1, 2], 2),
    e(4, 23, [1, -3, 2, 1, 1], 3),
    e(4, 24, [1, -4, 2, 1, 2], 4),
    e(4, 25, [1, -4, 2, 2, 1], 4),
];

pub fn table1_families() -> &'static [FamilyEntry] {
    &TABLE1
}

/// Looks up an entry by residue class and index.
pub fn family(residue: u8, index: u8) -> Option<&'static FamilyEntry> {
    TABLE1.iter().find(|f| f.residue == residue && f.index == index)
}

/// Splits `n` into `(m, residue)` with `n = 5m + residue`.
pub fn split_length(n: usize) -> (u32, u8) {
    ((n / 5) as u32, (n % 5) as u8)
}

/// Every family member of length `n`, paired with its entry, in table order.
pub fn table1_members(n: usize) -> Vec<(&'static FamilyEntry, ATuple)> {
    let (m, residue) = split_length(n);
    TABLE1.iter().filter(|f| f.residue == residue).filter_map(|f| f.at(m).map(|a| (f, a))).collect()
}

/// The tuples of [`table1_members`], sorted lexicographically.
pub fn table1_tuples(n: usize) -> Vec<ATuple> {
    let mut out: Vec<ATuple> = table1_members(n).into_iter().map(|(_, a)| a).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn table_shape() {
        let per_class: Vec<usize> =
            (0..5).map(|r| TABLE1.iter().filter(|f| f.residue == r).count()).collect();
        assert_eq!(per_class, vec![8, 11, 2, 3, 25]);
        for r in 0..5u8 {
            let idx: Vec<u8> = TABLE1.iter().filter(|f| f.residue == r).map(|f| f.index).collect();
            assert_eq!(idx, (1..=idx.len() as u8).collect::<Vec<_>>());
        }
    }

    #[test]
    fn rows_are_distinct_and_lengths_consistent() {
        for r in 0..5u8 {
            let rows: Vec<[i32; 5]> =
                TABLE1.iter().filter(|f| f.residue == r).map(|f| f.offsets).collect();
            for pair in rows.windows(2) {
                assert_ne!(pair[0], pair[1]);
            }
        }
        for f in &TABLE1 {
            for m in f.m_min..f.m_min + 5 {
                let a = f.at(m).unwrap();
                assert_eq!(a.length(), f.length(m), "{}", f.label());
            }
        }
    }

    #[test]
    fn m_min_is_smallest_nonnegative_parameter() {
        for f in &TABLE1 {
            let min_offset = *f.offsets.iter().min().unwrap();
            let first_valid = (-min_offset).max(0) as u32;
            assert_eq!(f.m_min, first_valid, "{}", f.label());
        }
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(
            table1_tuples(12),
            vec![ATuple::new([2, 1, 3, 2, 2]), ATuple::new([2, 2, 2, 2, 2])]
        );
        assert_eq!(family(0, 8).unwrap().m_min, 3);
        assert_eq!(family(0, 8).unwrap().at(2), None);
        assert_eq!(family(4, 21).unwrap().label(), "C_{5m+4,21}");
        assert_eq!(family(0, 7).unwrap().label(), "C_{5m,7}");
        let idx: Vec<u8> = table1_members(9).iter().map(|(f, _)| f.index).collect();
        assert_eq!(idx, vec![2, 3, 6, 8, 11, 12, 15, 16, 17, 18]);
    }
}
