//! Integer matrices with fraction-free (Bareiss) rank and determinant.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::vector::IntVec;

/// A dense integer matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix needs at least one row");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[IntVec]) -> Self {
        assert!(!cols.is_empty(), "matrix needs at least one column");
        let n = cols[0].dim();
        assert!(cols.iter().all(|v| v.dim() == n), "ragged columns");
        let mut m = Self::zero(n, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for (i, x) in v.coords().iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> IntVec {
        assert!(j < self.cols);
        IntVec::new((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn col_vectors(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &IntVec) -> IntVec {
        assert_eq!(self.cols, v.dim());
        IntVec::new(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v.coords()[j]).sum())
                .collect(),
        )
    }

    /// Gram matrix M^t M; symmetric with the squared column norms on the
    /// diagonal.
    pub fn gram(&self) -> IntMat {
        let mut g = Self::zero(self.cols, self.cols);
        for a in 0..self.cols {
            for b in a..self.cols {
                let mut acc = BigInt::zero();
                for i in 0..self.rows {
                    acc += &self[(i, a)] * &self[(i, b)];
                }
                g[(b, a)] = acc.clone();
                g[(a, b)] = acc;
            }
        }
        g
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let (rank, det, _) = bareiss(self);
        if rank < self.rows {
            BigInt::zero()
        } else {
            det
        }
    }

    /// Rank over the rationals, computed without leaving the integers.
    pub fn rank(&self) -> usize {
        bareiss(self).0
    }

    /// Row-major serialization used as the cross-module lattice identity.
    pub fn flat_entries(&self) -> Vec<BigInt> {
        self.entries.clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Circulant matrix M(a) whose columns are a, rot(a), ..., rot^{N-1}(a).
pub fn circulant(a: &IntVec) -> IntMat {
    let cols: Vec<IntVec> = (0..a.dim()).map(|k| a.rot_k(k)).collect();
    IntMat::from_cols(&cols)
}

/// Fraction-free elimination with full pivoting.
///
/// Returns (rank, determinant-up-to-rank, sign); when the matrix is square
/// and of full rank the second component times the sign is det. Every
/// intermediate value is a minor of the input, so divisions are exact.
fn bareiss(m: &IntMat) -> (usize, BigInt, i8) {
    let mut a = m.entries.clone();
    let (nr, nc) = (m.rows, m.cols);
    let idx = |i: usize, j: usize| i * nc + j;
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    let mut r = 0usize;
    while r < nr.min(nc) {
        // pick the remaining entry of least magnitude as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in r..nr {
            for j in r..nc {
                if !a[idx(i, j)].is_zero() {
                    best = match best {
                        None => Some((i, j)),
                        Some((bi, bj)) => {
                            if a[idx(i, j)].abs() < a[idx(bi, bj)].abs() {
                                Some((i, j))
                            } else {
                                Some((bi, bj))
                            }
                        }
                    };
                }
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        if pi != r {
            for j in 0..nc {
                a.swap(idx(pi, j), idx(r, j));
            }
            sign = -sign;
        }
        if pj != r {
            for i in 0..nr {
                a.swap(idx(i, pj), idx(i, r));
            }
            sign = -sign;
        }
        let pivot = a[idx(r, r)].clone();
        for i in (r + 1)..nr {
            for j in (r + 1)..nc {
                let num = &a[idx(i, j)] * &pivot - &a[idx(i, r)] * &a[idx(r, j)];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[idx(i, j)] = q;
            }
            a[idx(i, r)] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    let det = if r > 0 { prev.clone() } else { BigInt::from(1) };
    (r, if sign < 0 { -det } else { det }, sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent oracle: Laplace expansion, used to cross-check Bareiss.
    fn det_minor_expansion(m: &IntMat) -> BigInt {
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let mut sub = IntMat::zero(n - 1, n - 1);
            for i in 1..n {
                let mut jj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    sub[(i - 1, jj)] = m[(i, k)].clone();
                    jj += 1;
                }
            }
            let term = &m[(0, j)] * det_minor_expansion(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_matches_minor_expansion_up_to_5x5() {
        let mut rng = StdRng::seed_from_u64(42);
        for n in 1..=5usize {
            for _ in 0..40 {
                let rows: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| BigInt::from(rng.gen_range(-6..=6)))
                            .collect()
                    })
                    .collect();
                let m = IntMat::from_rows(rows);
                assert_eq!(m.det(), det_minor_expansion(&m));
            }
        }
    }

    #[test]
    fn rank_matches_rational_rank_on_small_matrices() {
        // rank over Q equals the largest k with a nonzero k x k minor
        fn rank_by_minors(m: &IntMat) -> usize {
            let n = m.rows().min(m.cols());
            for k in (1..=n).rev() {
                let rows: Vec<Vec<usize>> = combos(m.rows(), k);
                let cols: Vec<Vec<usize>> = combos(m.cols(), k);
                for rs in &rows {
                    for cs in &cols {
                        let mut sub = IntMat::zero(k, k);
                        for (i, &ri) in rs.iter().enumerate() {
                            for (j, &cj) in cs.iter().enumerate() {
                                sub[(i, j)] = m[(ri, cj)].clone();
                            }
                        }
                        if !det_minor_expansion(&sub).is_zero() {
                            return k;
                        }
                    }
                }
            }
            0
        }
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(
                start: usize,
                n: usize,
                k: usize,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }

        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let r = rng.gen_range(1..=4usize);
            let c = rng.gen_range(1..=4usize);
            let rows: Vec<Vec<BigInt>> = (0..r)
                .map(|_| {
                    (0..c)
                        .map(|_| BigInt::from(rng.gen_range(-3..=3)))
                        .collect()
                })
                .collect();
            let m = IntMat::from_rows(rows);
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
    }

    #[test]
    fn gram_is_symmetric_with_column_norms() {
        let m = IntMat::from_i64_rows(&[&[1, 0], &[2, -1], &[0, 3]]);
        let g = m.gram();
        assert_eq!(g[(0, 0)], m.col(0).norm_sq());
        assert_eq!(g[(1, 1)], m.col(1).norm_sq());
        assert_eq!(g[(0, 1)], g[(1, 0)]);
    }

    #[test]
    fn circulant_columns_are_rotations() {
        let a = IntVec::from_i64(&[2, 1]);
        let m = circulant(&a);
        assert_eq!(m.col(0), a);
        assert_eq!(m.col(1), a.rot());
        assert_eq!(m.det(), BigInt::from(3));
        assert!(circulant(&IntVec::std_basis(4, 0)) == IntMat::identity(4));
        assert!(IntMat::identity(3).det().is_one());
    }
}
