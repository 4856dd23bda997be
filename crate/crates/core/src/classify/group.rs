//! The action of invertible 2×2 matrices on the five points of the
//! projective line over GF(4).
//!
//! Left-multiplying a generator matrix by `M` maps each column `c` to `M c`;
//! after rescaling columns this permutes the five projective column types.
//! Column scaling is absorbed by the projective normalization, so the
//! induced permutations are exactly the equivalences acting on multiplicity
//! vectors. Field automorphisms are not part of the group.

use alloc::vec::Vec;

use crate::F4;

/// Projective points in their fixed order: `(1,0)`, `(0,1)`, `(1,1)`,
/// `(1,ω)`, `(1,ω²)`.
pub const POINTS: [[F4; 2]; 5] = [
    [F4::ONE, F4::ZERO],
    [F4::ZERO, F4::ONE],
    [F4::ONE, F4::ONE],
    [F4::ONE, F4::W],
    [F4::ONE, F4::W2],
];

/// Index into [`POINTS`] of the projective class of a nonzero column.
pub fn point_index(x: F4, y: F4) -> Option<usize> {
    if x.is_zero() {
        return if y.is_zero() { None } else { Some(1) };
    }
    let slope = y * x.inv().expect("x is nonzero");
    Some(match slope.bits() {
        0 => 0,
        1 => 2,
        2 => 3,
        _ => 4,
    })
}

/// A permutation of the five points: point `i` goes to `perm[i]`.
pub type PointPerm = [u8; 5];

pub const IDENTITY: PointPerm = [0, 1, 2, 3, 4];

/// `(f ∘ g)(i) = f(g(i))`.
pub fn compose(f: &PointPerm, g: &PointPerm) -> PointPerm {
    let mut out = [0u8; 5];
    for i in 0..5 {
        out[i] = f[g[i] as usize];
    }
    out
}

/// Parity by cycle count: a permutation of five points with `c` cycles
/// is even iff `5 - c` is even.
pub fn is_even(p: &PointPerm) -> bool {
    let mut seen = [false; 5];
    let mut cycles = 0;
    for start in 0..5 {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
        }
    }
    (5 - cycles) % 2 == 0
}

/// Moves the count of point `i` to position `perm[i]`.
pub fn apply(perm: &PointPerm, mp: &[u32; 5]) -> [u32; 5] {
    let mut out = [0u32; 5];
    for i in 0..5 {
        out[perm[i] as usize] = mp[i];
    }
    out
}

/// The permutation of [`POINTS`] induced by `[[m00, m01], [m10, m11]]`, or
/// `None` if the matrix is singular.
pub fn induced_by(m: [[F4; 2]; 2]) -> Option<PointPerm> {
    let det = m[0][0] * m[1][1] + m[0][1] * m[1][0];
    if det.is_zero() {
        return None;
    }
    let mut perm = [0u8; 5];
    for (i, p) in POINTS.iter().enumerate() {
        let x = m[0][0] * p[0] + m[0][1] * p[1];
        let y = m[1][0] * p[0] + m[1][1] * p[1];
        perm[i] = point_index(x, y).expect("invertible map sends points to points") as u8;
    }
    Some(perm)
}

/// The group induced by all 180 invertible 2×2 matrices over GF(4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointGroup {
    perms: Vec<PointPerm>,
}

impl PointGroup {
    pub fn new() -> PointGroup {
        let mut perms = Vec::with_capacity(180);
        for code in 0u16..256 {
            let e = |k: u16| F4::from_bits((code >> (2 * k)) as u8);
            if let Some(p) = induced_by([[e(0), e(1)], [e(2), e(3)]]) {
                perms.push(p);
            }
        }
        perms.sort_unstable();
        perms.dedup();
        PointGroup { perms }
    }

    /// Sorted, without repetition.
    pub fn perms(&self) -> &[PointPerm] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn contains(&self, p: &PointPerm) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    /// Lexicographically smallest image of `mp`.
    pub fn canonical(&self, mp: &[u32; 5]) -> [u32; 5] {
        let mut best = *mp;
        for p in &self.perms {
            let image = apply(p, mp);
            if image < best {
                best = image;
            }
        }
        best
    }

    /// All images of `mp`, deduplicated and sorted.
    pub fn orbit(&self, mp: &[u32; 5]) -> Vec<[u32; 5]> {
        let mut out: Vec<[u32; 5]> = self.perms.iter().map(|p| apply(p, mp)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Default for PointGroup {
    fn default() -> Self {
        PointGroup::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_normalization() {
        assert_eq!(point_index(F4::W, F4::W), Some(2));
        assert_eq!(point_index(F4::ONE, F4::ONE), Some(2));
        assert_eq!(point_index(F4::ZERO, F4::W2), Some(1));
        assert_eq!(point_index(F4::W2, F4::ZERO), Some(0));
        assert_eq!(point_index(F4::W, F4::ONE), Some(4));
        assert_eq!(point_index(F4::ZERO, F4::ZERO), None);
        for (i, p) in POINTS.iter().enumerate() {
            for s in F4::NONZERO {
                assert_eq!(point_index(s * p[0], s * p[1]), Some(i));
            }
        }
    }

    #[test]
    fn identity_and_diagonal() {
        assert_eq!(induced_by([[F4::ONE, F4::ZERO], [F4::ZERO, F4::ONE]]), Some(IDENTITY));
        // diag(1, ω): (1,1) -> (1,ω) -> (1,ω²) -> (1,1)
        let p = induced_by([[F4::ONE, F4::ZERO], [F4::ZERO, F4::W]]).unwrap();
        assert_eq!(p, [0, 1, 3, 4, 2]);
        assert_eq!(induced_by([[F4::ONE, F4::ONE], [F4::ONE, F4::ONE]]), None);
    }

    #[test]
    fn group_structure() {
        let g = PointGroup::new();
        assert_eq!(g.len(), 60);
        assert!(g.contains(&IDENTITY));
        for p in g.perms() {
            assert!(is_even(p));
            for q in g.perms() {
                assert!(g.contains(&compose(p, q)));
            }
        }
        // transitive on points
        for target in 0..5u8 {
            assert!(g.perms().iter().any(|p| p[0] == target));
        }
        // 180 matrices, each permutation induced by exactly the 3 scalar multiples
        let mut hits = 0;
        for code in 0u16..256 {
            let e = |k: u16| F4::from_bits((code >> (2 * k)) as u8);
            if induced_by([[e(0), e(1)], [e(2), e(3)]]).is_some() {
                hits += 1;
            }
        }
        assert_eq!(hits, 180);
    }

    #[test]
    fn parity_helper() {
        assert!(is_even(&IDENTITY));
        assert!(!is_even(&[1, 0, 2, 3, 4]));
        assert!(is_even(&[1, 2, 0, 3, 4]));
        assert!(!is_even(&[1, 2, 3, 0, 4]));
    }

    #[test]
    fn canonical_is_orbit_minimum() {
        let g = PointGroup::new();
        let mp = [3, 1, 4, 1, 5];
        let orbit = g.orbit(&mp);
        assert_eq!(g.canonical(&mp), orbit[0]);
        for image in &orbit {
            assert_eq!(g.canonical(image), orbit[0]);
        }
    }
}
