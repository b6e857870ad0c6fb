//! Lexicographic enumeration of the integer points of the cube [-R, R]^N.

use crate::vector::IntVec;

/// Number of integer points in the cube of side 2R, i.e. (2R+1)^N.
pub fn cube_count(n: usize, r: u64) -> u128 {
    let side = 2u128 * r as u128 + 1;
    let mut total = 1u128;
    for _ in 0..n {
        total = total
            .checked_mul(side)
            .expect("cube point count overflows u128");
    }
    total
}

/// Decode the point at `index` in lexicographic order, the first
/// coordinate being the most significant digit. Index 0 is (-R, ..., -R).
pub fn cube_point(n: usize, r: u64, index: u128) -> Vec<i64> {
    let side = 2u128 * r as u128 + 1;
    let mut coords = vec![0i64; n];
    let mut rem = index;
    for i in (0..n).rev() {
        let digit = (rem % side) as i64;
        rem /= side;
        coords[i] = digit - r as i64;
    }
    debug_assert_eq!(rem, 0, "index out of range");
    coords
}

/// Iterator over all points of the cube in lexicographic order.
///
/// The index decomposition makes contiguous index ranges correspond to
/// contiguous lexicographic blocks, so parallel sweeps can partition the
/// range deterministically.
pub fn cube_points(n: usize, r: u64) -> impl Iterator<Item = IntVec> {
    assert!(n >= 2);
    let total = cube_count(n, r);
    (0..total).map(move |idx| IntVec::from_i64(&cube_point(n, r, idx)))
}
