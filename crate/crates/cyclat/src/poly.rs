//! Integer polynomials: the coefficient-vector correspondence with
//! `Z[x]/(x^N - 1)`, cyclotomic polynomials, gcd with `x^N - 1`, cyclic
//! order, and circulant determinants via resultants.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::{circulant, IntMat};
use crate::vector::IntVec;

/// Integer-coefficient polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    /// x^n + 1.
    pub fn x_pow_plus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (kept out of arithmetic
    /// comparisons on purpose).
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Division with remainder by a monic divisor; exact over Z.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree().expect("monic implies nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::zero(), IntPoly::new(rem));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(d) {
                rem[i - d + j] -= &q * c;
            }
            quot[i - d] = q;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn divisible_by_monic(&self, divisor: &IntPoly) -> bool {
        self.div_rem_monic(divisor).1.is_zero()
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The coefficient map: (a_0, ..., a_{N-1}) -> a_0 + a_1 x + ... .
pub fn vec_to_poly(a: &IntVec) -> IntPoly {
    IntPoly::new(a.coords().to_vec())
}

/// Inverse of `vec_to_poly`; fails if the degree does not fit.
pub fn poly_to_vec(p: &IntPoly, n: usize) -> Result<IntVec> {
    if let Some(d) = p.degree() {
        if d >= n {
            return Err(Error::DegreeOverflow { degree: d, dim: n });
        }
    }
    let mut coords = p.coeffs().to_vec();
    coords.resize(n, BigInt::zero());
    Ok(IntVec::new(coords))
}

/// All divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// d-th cyclotomic polynomial: (x^d - 1) divided by all earlier Phi_e,
/// e a proper divisor of d. Monic with degree phi(d).
pub fn cyclotomic(d: u64) -> IntPoly {
    assert!(d >= 1);
    if d == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    let mut result = IntPoly::x_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let (q, r) = result.div_rem_monic(&cyclotomic(e));
        debug_assert!(r.is_zero(), "cyclotomic division must be exact");
        result = q;
    }
    result
}

/// Monic gcd of a(x) with x^N - 1, assembled as the product of the
/// cyclotomic factors Phi_d (d | N) dividing a(x). Since x^N - 1 is
/// squarefree this is the full gcd, and divisibility is over Z because
/// each Phi_d is monic.
pub fn gcd_with_cycle(a: &IntVec) -> Result<IntPoly> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = a.dim() as u64;
    let p = vec_to_poly(a);
    let mut g = IntPoly::one();
    for d in divisors(n) {
        let phi = cyclotomic(d);
        if p.divisible_by_monic(&phi) {
            g = g.mul(&phi);
        }
    }
    Ok(g)
}

/// Rank of the circulant M(a), computed by exact matrix elimination and by
/// N - deg gcd(a(x), x^N - 1); both routes must agree.
pub fn cyclic_order(a: &IntVec) -> Result<usize> {
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = a.dim();
    let by_rank = circulant(a).rank();
    let gcd_deg = gcd_with_cycle(a)?
        .degree()
        .expect("gcd of nonzero is nonzero");
    let by_gcd = n - gcd_deg;
    assert_eq!(
        by_rank, by_gcd,
        "circulant rank and gcd degree disagree for {a}"
    );
    Ok(by_rank)
}

/// Resultant Res(f, g) as the determinant of the Sylvester matrix,
/// evaluated by fraction-free elimination.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let n = f.degree().unwrap();
    let m = g.degree().unwrap();
    if n == 0 && m == 0 {
        return BigInt::one();
    }
    let size = n + m;
    let mut s = IntMat::zero(size, size);
    // m rows of f coefficients (descending), then n rows of g
    for i in 0..m {
        for k in 0..=n {
            s[(i, i + k)] = f.coeff(n - k);
        }
    }
    for i in 0..n {
        for k in 0..=m {
            s[(m + i, i + k)] = g.coeff(m - k);
        }
    }
    s.det()
}

/// det M(a) = Res(x^N - 1, a(x)) = prod over N-th roots of unity of a(w).
/// Both sides are computed independently and must agree exactly.
pub fn circulant_det_resultant(a: &IntVec) -> BigInt {
    let n = a.dim();
    let p = vec_to_poly(a);
    let res = resultant(&IntPoly::x_pow_minus_one(n), &p);
    let det = circulant(a).det();
    assert_eq!(
        res, det,
        "resultant and circulant determinant disagree for {a}"
    );
    res
}

/// The sublattice of Z^N of coefficient vectors divisible by Phi_d, with
/// basis Phi_d * x^i for 0 <= i <= N - 1 - phi(d). Rank N - phi(d).
pub fn cyclotomic_sublattice(n: u64, d: u64) -> Result<Lattice> {
    if !n.is_multiple_of(d) {
        return Err(Error::NotDivisor { divisor: d, n });
    }
    let phi = cyclotomic(d);
    let deg = phi.degree().expect("cyclotomic is nonzero");
    assert!(deg < n as usize, "Phi_d must divide x^n - 1 properly");
    let cols: Vec<IntVec> = (0..(n as usize - deg))
        .map(|i| poly_to_vec(&phi.shift(i), n as usize).expect("degree fits"))
        .collect();
    let lat = Lattice::from_vectors(&cols)?;
    assert_eq!(
        lat.rank(),
        n as usize - deg,
        "shifted basis must be independent"
    );
    Ok(lat)
}
