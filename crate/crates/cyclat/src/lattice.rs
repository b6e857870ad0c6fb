//! Sublattices of Z^N identified by a canonical Hermite-normal-form basis.
//!
//! The canonical form is a column echelon basis: pivots go down and to the
//! right, each pivot is positive, every entry left of a pivot in its row is
//! reduced into [0, pivot), and rows above a pivot are zero in its column.
//! Two lattices are equal exactly when their canonical bases are identical,
//! so the flattened basis doubles as a dedup key everywhere downstream.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMat;
use crate::vector::IntVec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    hnf: IntMat,
    pivot_rows: Vec<usize>,
}

impl Lattice {
    /// Canonicalize a generating set (columns, possibly dependent) into the
    /// unique HNF basis of its span.
    pub fn from_generators(gens: &IntMat) -> Result<Lattice> {
        let n = gens.rows();
        if n < 2 {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimension {n} < 2"
            )));
        }
        let m = gens.cols();
        let mut work: Vec<Vec<BigInt>> = (0..m)
            .map(|j| (0..n).map(|i| gens[(i, j)].clone()).collect())
            .collect();
        let mut pivot_rows = Vec::new();
        let mut c = 0usize;
        for row in 0..n {
            // eliminate until at most one column in c.. is nonzero at this row
            loop {
                let nz: Vec<usize> = (c..m).filter(|&j| !work[j][row].is_zero()).collect();
                if nz.len() <= 1 {
                    break;
                }
                let &jmin = nz
                    .iter()
                    .min_by_key(|&&j| work[j][row].abs())
                    .expect("nonempty");
                for &j in &nz {
                    if j == jmin {
                        continue;
                    }
                    let q = &work[j][row] / &work[jmin][row];
                    if !q.is_zero() {
                        for i in 0..n {
                            let t = &q * &work[jmin][i];
                            work[j][i] -= t;
                        }
                    }
                }
            }
            let Some(j0) = (c..m).find(|&j| !work[j][row].is_zero()) else {
                continue;
            };
            work.swap(c, j0);
            if work[c][row].is_negative() {
                for x in work[c].iter_mut() {
                    *x = -&*x;
                }
            }
            // reduce earlier columns at the pivot row into [0, pivot)
            let pivot = work[c][row].clone();
            for j in 0..c {
                let q = work[j][row].div_floor(&pivot);
                if !q.is_zero() {
                    for i in 0..n {
                        let t = &q * &work[c][i];
                        work[j][i] -= t;
                    }
                }
            }
            pivot_rows.push(row);
            c += 1;
        }
        if c == 0 {
            return Err(Error::EmptyLattice);
        }
        debug_assert!(work[c..].iter().all(|col| col.iter().all(|x| x.is_zero())));
        let basis: Vec<IntVec> = work[..c]
            .iter()
            .map(|col| IntVec::new(col.clone()))
            .collect();
        Ok(Lattice {
            ambient: n,
            hnf: IntMat::from_cols(&basis),
            pivot_rows,
        })
    }

    pub fn from_vectors(vecs: &[IntVec]) -> Result<Lattice> {
        if vecs.is_empty() {
            return Err(Error::EmptyLattice);
        }
        Self::from_generators(&IntMat::from_cols(vecs))
    }

    /// The integer lattice Z^n.
    pub fn standard(n: usize) -> Lattice {
        Self::from_generators(&IntMat::identity(n)).expect("identity basis")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.hnf.cols()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    /// The canonical HNF basis (columns generate the lattice).
    pub fn basis(&self) -> &IntMat {
        &self.hnf
    }

    /// Row-major flattening of the canonical basis; equality of keys is
    /// equality of lattices of the same shape.
    pub fn hnf_key(&self) -> Vec<BigInt> {
        self.hnf.flat_entries()
    }

    /// Determinant of a full-rank lattice: product of the HNF diagonal.
    pub fn det(&self) -> BigInt {
        assert!(self.is_full_rank(), "det requires a full-rank lattice");
        let mut d = BigInt::from(1);
        for i in 0..self.ambient {
            d *= &self.hnf[(i, i)];
        }
        d
    }

    /// Exact membership test by forward substitution on the echelon basis.
    pub fn contains(&self, v: &IntVec) -> bool {
        self.coefficients_of(v).is_some()
    }

    /// Integer coordinates of `v` in the canonical basis, if it is a member.
    pub fn coefficients_of(&self, v: &IntVec) -> Option<Vec<BigInt>> {
        if v.dim() != self.ambient {
            return None;
        }
        let mut w: Vec<BigInt> = v.coords().to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (j, &p) in self.pivot_rows.iter().enumerate() {
            let (q, rem) = w[p].div_rem(&self.hnf[(p, j)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for i in 0..self.ambient {
                    let t = &q * &self.hnf[(i, j)];
                    w[i] -= t;
                }
            }
            coeffs.push(q);
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Index |L : sub| of a full-rank sublattice, as the exact determinant
    /// ratio. Containment is verified column by column first.
    pub fn sublattice_index(&self, sub: &Lattice) -> Result<BigInt> {
        if self.ambient != sub.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, sub.ambient
            )));
        }
        if !self.is_full_rank() || !sub.is_full_rank() {
            return Err(Error::DependentBasis);
        }
        for j in 0..sub.rank() {
            if !self.contains(&sub.hnf.col(j)) {
                return Err(Error::NotSublattice);
            }
        }
        let (q, rem) = sub.det().div_rem(&self.det());
        debug_assert!(rem.is_zero() && q.is_positive());
        Ok(q)
    }

    /// The image lattice m * L (m must be injective on the span).
    pub fn transform(&self, m: &IntMat) -> Result<Lattice> {
        Self::from_generators(&m.mul(&self.hnf))
    }
}

impl std::fmt::Display for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let key = self.hnf_key();
        write!(f, "[")?;
        for (i, x) in key.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
