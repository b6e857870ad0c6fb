//! Integer vectors of dimension N >= 2 with exact squared norms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A vector in Z^N with arbitrary-precision coordinates.
///
/// All norm bookkeeping is done on exact squared values; nothing here
/// ever touches floating point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec {
    coords: Vec<BigInt>,
}

impl IntVec {
    pub fn new(coords: Vec<BigInt>) -> Self {
        assert!(coords.len() >= 2, "vector dimension must be at least 2");
        IntVec { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![BigInt::zero(); dim])
    }

    /// Standard basis vector e_{index} (0-based index).
    pub fn std_basis(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut coords = vec![BigInt::zero(); dim];
        coords[index] = BigInt::from(1);
        Self::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Squared Euclidean norm as an exact integer.
    pub fn norm_sq(&self) -> BigInt {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// Sup norm max |x_i|.
    pub fn sup_norm(&self) -> BigInt {
        self.coords.iter().map(|c| c.abs()).max().expect("dim >= 2")
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Cyclic shift: (x_1, ..., x_N) -> (x_N, x_1, ..., x_{N-1}).
    pub fn rot(&self) -> IntVec {
        let n = self.dim();
        let mut coords = Vec::with_capacity(n);
        coords.push(self.coords[n - 1].clone());
        coords.extend_from_slice(&self.coords[..n - 1]);
        IntVec { coords }
    }

    /// k-fold cyclic shift; rot^N is the identity.
    pub fn rot_k(&self, k: usize) -> IntVec {
        let n = self.dim();
        let k = k % n;
        if k == 0 {
            return self.clone();
        }
        let mut coords = Vec::with_capacity(n);
        coords.extend_from_slice(&self.coords[n - k..]);
        coords.extend_from_slice(&self.coords[..n - k]);
        IntVec { coords }
    }

    /// Negacyclic shift: (x_1, ..., x_N) -> (-x_N, x_1, ..., x_{N-1}).
    pub fn srot(&self) -> IntVec {
        let n = self.dim();
        let mut coords = Vec::with_capacity(n);
        coords.push(-self.coords[n - 1].clone());
        coords.extend_from_slice(&self.coords[..n - 1]);
        IntVec { coords }
    }

    pub fn neg(&self) -> IntVec {
        IntVec {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntVec {
        IntVec {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        assert_eq!(self.dim(), other.dim());
        IntVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        assert_eq!(self.dim(), other.dim());
        IntVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Representative of the pair {v, -v} whose first nonzero coordinate
    /// is positive. The zero vector is its own representative.
    pub fn canonical_sign(&self) -> IntVec {
        for c in &self.coords {
            if c.is_positive() {
                return self.clone();
            }
            if c.is_negative() {
                return self.neg();
            }
        }
        self.clone()
    }
}

impl std::fmt::Display for IntVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
