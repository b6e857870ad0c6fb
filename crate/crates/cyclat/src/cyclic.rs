//! Cyclic-lattice constructions and predicates: the rotation lattice of a
//! vector, rot-invariance of a lattice, angle-sequence certificates, Gram
//! symmetries, and the membership tests behind the counting sweeps.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::{circulant, IntMat};
use crate::poly::{cyclic_order, gcd_with_cycle};
use crate::svp::{is_wr_prime, successive_minima};
use crate::vector::IntVec;

/// The lattice generated by a and all of its rotations; its rank is the
/// cyclic order of a.
pub fn circulant_lattice(a: &IntVec) -> Result<Lattice> {
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    let lat = Lattice::from_generators(&circulant(a))?;
    debug_assert_eq!(lat.rank(), cyclic_order(a)?);
    Ok(lat)
}

/// rot(L) = L, tested on canonical forms: rotate every basis column and
/// compare HNF keys.
pub fn is_cyclic(lattice: &Lattice) -> bool {
    let rotated: Vec<IntVec> = (0..lattice.rank())
        .map(|j| lattice.basis().col(j).rot())
        .collect();
    match Lattice::from_vectors(&rotated) {
        Ok(l) => l == *lattice,
        Err(_) => false,
    }
}

/// Exact squared cosines of the angles between each vector and the span of
/// its predecessors.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSequence {
    /// cos^2(theta_i) for i = 1..k-1, each in [0, 1].
    pub cos_sq: Vec<BigRational>,
}

/// Angle sequence of an ordered list of linearly independent vectors.
///
/// The squared distance from a_{i+1} to span(a_1..a_i) is the ratio of
/// consecutive Gram determinants, so every cosine is an exact rational.
pub fn angle_sequence(vectors: &[IntVec]) -> Result<AngleSequence> {
    if vectors.is_empty() {
        return Err(Error::DependentBasis);
    }
    let mut cos_sq = Vec::with_capacity(vectors.len().saturating_sub(1));
    let mut prev_gram_det = IntMat::from_cols(&vectors[..1]).gram().det();
    if prev_gram_det.is_zero() {
        return Err(Error::DependentBasis);
    }
    for i in 1..vectors.len() {
        let with_next = IntMat::from_cols(&vectors[..=i]).gram().det();
        if with_next.is_zero() {
            return Err(Error::DependentBasis);
        }
        let norm = vectors[i].norm_sq();
        // cos^2 = 1 - dist^2 / ||a||^2 with dist^2 = G_{i+1}/G_i
        let dist_sq = BigRational::new(with_next.clone(), prev_gram_det.clone());
        let c = BigRational::one() - dist_sq / BigRational::from_integer(norm.clone());
        assert!(
            !c.is_negative() && c <= BigRational::one(),
            "cos^2 must land in [0,1]"
        );
        cos_sq.push(c);
        prev_gram_det = with_next;
    }
    Ok(AngleSequence { cos_sq })
}

/// Near-orthogonality certificate for the natural rotation ordering
/// a, rot(a), ..., rot^{N-1}(a): full cyclic order and every
/// cos^2(theta_i) < 1/4 strictly. The angle between a vector and a
/// subspace lies in [0, pi/2], so the strict cosine bound is the whole
/// condition; no separate upper angle constraint exists. A passing
/// certificate forces a into D_N, which is cross-checked against the
/// shortest-vector oracle.
pub fn angles_certificate(a: &IntVec) -> bool {
    if a.is_zero() {
        return false;
    }
    let n = a.dim();
    if cyclic_order(a).expect("nonzero") != n {
        return false;
    }
    let rotations: Vec<IntVec> = (0..n).map(|k| a.rot_k(k)).collect();
    let seq = angle_sequence(&rotations).expect("full order implies independence");
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let ok = seq.cos_sq.iter().all(|c| *c < quarter);
    if ok {
        assert!(
            in_d_n(a),
            "certificate passed but the shortest-vector oracle rejects {a}"
        );
    }
    ok
}

/// Structural identities of the rotation Gram matrix Q(a) = M(a)^t M(a):
/// entries depend only on (i - j) mod N, the first row mirrors around the
/// middle, the diagonal is constantly ||a||^2, and there are at most
/// floor(N/2) distinct off-diagonal values. A false return signals an
/// arithmetic bug rather than a property of a.
pub fn gram_symmetries(a: &IntVec) -> bool {
    let n = a.dim();
    let m = circulant(a);
    let q = m.gram();
    let norm = a.norm_sq();
    let first_row: Vec<BigInt> = (0..n).map(|j| q[(0, j)].clone()).collect();
    for i in 0..n {
        for j in 0..n {
            let shift = (n + j - i) % n;
            if q[(i, j)] != first_row[shift] {
                return false;
            }
        }
    }
    for i in 2..n {
        // a . rot^{i-1}(a) = a . rot^{N-i+1}(a)
        if first_row[i - 1] != first_row[n - i + 1] {
            return false;
        }
    }
    if first_row[0] != norm {
        return false;
    }
    let mut distinct: Vec<&BigInt> = first_row[1..].iter().collect();
    distinct.sort();
    distinct.dedup();
    distinct.len() <= n / 2
}

/// a has full cyclic order, realizes the minimum of its rotation lattice,
/// and that lattice is generated by its minimal vectors.
pub fn in_d_n(a: &IntVec) -> bool {
    if a.is_zero() {
        return false;
    }
    let n = a.dim();
    if cyclic_order(a).expect("nonzero") != n {
        return false;
    }
    let lat = circulant_lattice(a).expect("nonzero");
    let smin = successive_minima(&lat);
    a.norm_sq() == smin.lambda_sq[0] && is_wr_prime(&lat)
}

/// The rotation lattice is full rank and ||a|| = lambda_1 = lambda_N.
pub fn in_r_n(a: &IntVec) -> bool {
    if a.is_zero() {
        return false;
    }
    let n = a.dim();
    if cyclic_order(a).expect("nonzero") != n {
        return false;
    }
    let lat = circulant_lattice(a).expect("nonzero");
    let smin = successive_minima(&lat);
    let norm = a.norm_sq();
    norm == smin.lambda_sq[0] && norm == smin.lambda_sq[n - 1]
}

/// Additionally every minimal vector has full cyclic order, i.e. none of
/// them lies in a cyclotomic subspace; on such lattices SIVP is solved by
/// the rotations of any SVP solution.
pub fn in_rprime(a: &IntVec) -> bool {
    if !in_r_n(a) {
        return false;
    }
    let lat = circulant_lattice(a).expect("nonzero");
    let smin = successive_minima(&lat);
    smin.minimal_reps.iter().all(|c| {
        gcd_with_cycle(c)
            .map(|g| g.degree() == Some(0))
            .unwrap_or(false)
    })
}

/// The vector (m, m/k_1, ..., m/k_{N-1}) with m = lcm(|k_i|); each division
/// is exact and carries the sign of k_i.
pub fn lcm_family_vector(k: &[BigInt]) -> Result<IntVec> {
    if k.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroK);
    }
    let mut m = BigInt::one();
    for x in k {
        m = m.lcm(&x.abs());
    }
    let mut coords = Vec::with_capacity(k.len() + 1);
    coords.push(m.clone());
    for x in k {
        let (q, rem) = m.div_rem(x);
        debug_assert!(rem.is_zero(), "lcm must be divisible by every k_i");
        coords.push(q);
    }
    Ok(IntVec::new(coords))
}

/// The set of minimal vectors of the rotation lattice is exactly the +/-
/// rotations of a, and a has full cyclic order. Decided by the
/// shortest-vector oracle.
pub fn rotations_are_minimal_set(a: &IntVec) -> bool {
    if a.is_zero() {
        return false;
    }
    let n = a.dim();
    if cyclic_order(a).expect("nonzero") != n {
        return false;
    }
    let lat = circulant_lattice(a).expect("nonzero");
    let smin = successive_minima(&lat);
    let mut expected: Vec<IntVec> = (0..n).map(|k| a.rot_k(k).canonical_sign()).collect();
    expected.sort();
    expected.dedup();
    if expected.len() != n {
        return false;
    }
    smin.minimal_reps == expected
}
