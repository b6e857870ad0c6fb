//! Exact shortest-vector machinery.
//!
//! Everything is driven by one complete enumeration primitive: given a
//! basis, Gram-Schmidt data over the rationals turns the squared norm into
//! a diagonal quadratic form, and a depth-first scan walks every integer
//! coefficient vector inside the bound. Interval endpoints are never
//! computed through square roots; each level scans outward from the
//! rational center while the exact inequality still holds, so completeness
//! is unconditional.
//!
//! An exact LLL pass (rational arithmetic, delta = 3/4) shrinks the basis
//! first. Correctness never depends on the reduction quality: the
//! enumeration bound is the largest reduced basis-column norm, which always
//! dominates the last successive minimum.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::IntMat;
use crate::rational::{round_rat, unit_ball_vol_sq};
use crate::vector::IntVec;

/// Exact successive minima data for a lattice of rank r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvpResult {
    /// Squared minima lambda_1^2 <= ... <= lambda_r^2.
    pub lambda_sq: Vec<BigInt>,
    /// One representative per +/- pair of minimal vectors, first nonzero
    /// coordinate positive, sorted lexicographically.
    pub minimal_reps: Vec<IntVec>,
    /// Squared radius up to which the enumeration was complete.
    pub enum_radius_sq: BigInt,
}

impl SvpResult {
    /// |S(L)|: both signs counted, as in the usual minimal-vector counts.
    pub fn minimal_count(&self) -> usize {
        2 * self.minimal_reps.len()
    }
}

/// Gram-Schmidt data of independent columns: mu[i][j] (j < i) and the
/// squared lengths of the orthogonalized vectors.
struct Gso {
    mu: Vec<Vec<BigRational>>,
    b_star_sq: Vec<BigRational>,
}

fn gso(cols: &[Vec<BigInt>]) -> Option<Gso> {
    let r = cols.len();
    let dim = cols[0].len();
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(r);
    let mut mu = vec![vec![]; r];
    let mut b_star_sq: Vec<BigRational> = Vec::with_capacity(r);
    for i in 0..r {
        let mut v: Vec<BigRational> = cols[i]
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        let mut row = Vec::with_capacity(i);
        for j in 0..i {
            let dot: BigRational = (0..dim)
                .map(|k| BigRational::from_integer(cols[i][k].clone()) * &star[j][k])
                .sum();
            let m = dot / &b_star_sq[j];
            for k in 0..dim {
                let t = &m * &star[j][k];
                v[k] -= t;
            }
            row.push(m);
        }
        let norm: BigRational = v.iter().map(|x| x * x).sum();
        if norm.is_zero() {
            return None; // dependent columns
        }
        mu[i] = row;
        b_star_sq.push(norm);
        star.push(v);
    }
    Some(Gso { mu, b_star_sq })
}

/// Exact LLL reduction (delta = 3/4) on basis columns. The span is
/// unchanged; only the presentation shrinks.
fn lll_reduce(cols: &mut [Vec<BigInt>]) {
    let r = cols.len();
    if r <= 1 {
        return;
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    let mut g = gso(cols).expect("LLL requires independent columns");
    let mut k = 1usize;
    while k < r {
        // size-reduce column k
        for j in (0..k).rev() {
            let q = round_rat(&g.mu[k][j]);
            if !q.is_zero() {
                for i in 0..cols[k].len() {
                    let t = &q * &cols[j][i];
                    cols[k][i] -= t;
                }
                g = gso(cols).expect("independent");
            }
        }
        let lhs = g.b_star_sq[k].clone();
        let mu_sq = &g.mu[k][k - 1] * &g.mu[k][k - 1];
        let rhs = (&delta - &mu_sq) * &g.b_star_sq[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            cols.swap(k, k - 1);
            g = gso(cols).expect("independent");
            k = k.max(2) - 1;
        }
    }
}

/// All nonzero lattice vectors with squared norm <= bound_sq, one
/// representative per +/- pair. Completeness comes from the exhaustive
/// coefficient scan under the exact Gram-Schmidt bound at every level.
pub fn enumerate_short(lattice: &Lattice, bound_sq: &BigInt) -> Vec<IntVec> {
    let mut cols: Vec<Vec<BigInt>> = (0..lattice.rank())
        .map(|j| lattice.basis().col(j).into_coords())
        .collect();
    lll_reduce(&mut cols);
    enumerate_cols(&cols, bound_sq)
}

fn descend(
    level: usize,
    remaining: &BigRational,
    cols: &[Vec<BigInt>],
    g: &Gso,
    x: &mut [BigInt],
    found: &mut BTreeSet<Vec<BigInt>>,
) {
    let r = cols.len();
    // center of the admissible interval for x[level]
    let mut center = BigRational::zero();
    for j in (level + 1)..r {
        center -= BigRational::from_integer(x[j].clone()) * &g.mu[j][level];
    }
    let b = &g.b_star_sq[level];

    let emit =
        |t: BigInt, rem_here: BigRational, x: &mut [BigInt], found: &mut BTreeSet<Vec<BigInt>>| {
            x[level] = t;
            if level == 0 {
                if x.iter().any(|c| !c.is_zero()) {
                    let dim = cols[0].len();
                    let mut v = vec![BigInt::zero(); dim];
                    for (j, col) in cols.iter().enumerate() {
                        if x[j].is_zero() {
                            continue;
                        }
                        for (i, e) in col.iter().enumerate() {
                            v[i] += &x[j] * e;
                        }
                    }
                    found.insert(IntVec::new(v).canonical_sign().into_coords());
                }
            } else {
                descend(level - 1, &rem_here, cols, g, x, found);
            }
        };

    // the admissible x[level] form a contiguous interval around `center`:
    // walk down from floor(center) and up from floor(center)+1
    let start = crate::rational::floor_rat(&center);
    let mut t = start.clone();
    loop {
        let d = BigRational::from_integer(t.clone()) - &center;
        let used = &d * &d * b;
        if used > *remaining {
            break;
        }
        emit(t.clone(), remaining - &used, x, found);
        t -= 1;
    }
    let mut t: BigInt = start + 1;
    loop {
        let d = BigRational::from_integer(t.clone()) - &center;
        let used = &d * &d * b;
        if used > *remaining {
            break;
        }
        emit(t.clone(), remaining - &used, x, found);
        t += 1;
    }
}

fn enumerate_cols(cols: &[Vec<BigInt>], bound_sq: &BigInt) -> Vec<IntVec> {
    if bound_sq.is_negative() || cols.is_empty() {
        return Vec::new();
    }
    let g = gso(cols).expect("enumeration requires independent columns");
    let bound = BigRational::from_integer(bound_sq.clone());
    let mut x = vec![BigInt::zero(); cols.len()];
    let mut found: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    descend(cols.len() - 1, &bound, cols, &g, &mut x, &mut found);
    found.into_iter().map(IntVec::new).collect()
}

/// Exact successive minima with canonical minimal-vector representatives.
///
/// The enumeration bound is the largest squared column norm of the reduced
/// basis, a valid upper bound for lambda_r; vectors are then selected
/// greedily by (norm, lex) order, keeping those independent of the already
/// selected set. For full-rank lattices the Minkowski inequalities are
/// asserted on the way out; a violation means the solver is broken.
pub fn successive_minima(lattice: &Lattice) -> SvpResult {
    let r = lattice.rank();
    let mut cols: Vec<Vec<BigInt>> = (0..r)
        .map(|j| lattice.basis().col(j).into_coords())
        .collect();
    lll_reduce(&mut cols);
    let bound = cols
        .iter()
        .map(|c| c.iter().map(|x| x * x).sum::<BigInt>())
        .max()
        .expect("rank >= 1");
    let mut reps = enumerate_cols(&cols, &bound);
    reps.sort_by(|a, b| a.norm_sq().cmp(&b.norm_sq()).then_with(|| a.cmp(b)));

    let mut lambda_sq: Vec<BigInt> = Vec::with_capacity(r);
    let mut selected: Vec<IntVec> = Vec::with_capacity(r);
    for v in &reps {
        if selected.len() == r {
            break;
        }
        let mut trial = selected.clone();
        trial.push(v.clone());
        if IntMat::from_cols(&trial).rank() == trial.len() {
            lambda_sq.push(v.norm_sq());
            selected = trial;
        }
    }
    assert_eq!(
        lambda_sq.len(),
        r,
        "enumeration bound must reach the last minimum"
    );
    let minimal_reps: Vec<IntVec> = reps
        .iter()
        .take_while(|v| v.norm_sq() == lambda_sq[0])
        .cloned()
        .collect();
    let result = SvpResult {
        lambda_sq,
        minimal_reps,
        enum_radius_sq: bound,
    };
    if lattice.is_full_rank() {
        assert!(
            minkowski_inequalities(lattice, &result.lambda_sq),
            "successive minima violate the Minkowski bounds on {lattice}"
        );
    }
    result
}

/// det(L)^2 <= prod lambda_i^2 and prod lambda_i^2 * V_N^2 <= 4^N det(L)^2,
/// the second checked against the upper end of the ball-volume enclosure so
/// a true inequality can never fail from rounding.
fn minkowski_inequalities(lattice: &Lattice, lambda_sq: &[BigInt]) -> bool {
    let n = lattice.ambient_dim();
    let det = lattice.det();
    let det_sq = BigRational::from_integer(&det * &det);
    let prod_sq = BigRational::from_integer(lambda_sq.iter().fold(BigInt::one(), |acc, l| acc * l));
    let lower_ok = prod_sq >= det_sq;
    let vol_sq_hi = unit_ball_vol_sq(n).hi;
    let four_n = BigRational::from_integer(BigInt::from(4).pow(n as u32));
    let upper_ok = &prod_sq * vol_sq_hi <= four_n * det_sq;
    lower_ok && upper_ok
}

/// Minkowski successive-minima sanity check for a full-rank lattice.
pub fn minkowski_sanity(lattice: &Lattice) -> bool {
    assert!(lattice.is_full_rank(), "Minkowski check needs full rank");
    let smin = successive_minima(lattice);
    minkowski_inequalities(lattice, &smin.lambda_sq)
}

/// lambda_1 = lambda_r, i.e. the minimal vectors span a space of full
/// dimension in the lattice's span.
pub fn is_well_rounded(lattice: &Lattice) -> bool {
    let smin = successive_minima(lattice);
    smin.lambda_sq.first() == smin.lambda_sq.last()
}

/// The strictly stronger condition: the minimal vectors generate the
/// lattice over Z.
pub fn is_wr_prime(lattice: &Lattice) -> bool {
    let smin = successive_minima(lattice);
    match Lattice::from_vectors(&smin.minimal_reps) {
        Ok(span) => span == *lattice,
        Err(_) => false,
    }
}

/// Whether some choice of independent vectors achieving all successive
/// minima generates the lattice, decided by exhaustive search over the
/// minimal-norm classes with independence and determinant pruning.
/// Guaranteed true for rank <= 4.
pub fn is_minkowskian(lattice: &Lattice) -> Result<bool> {
    if !lattice.is_full_rank() {
        return Err(Error::DependentBasis);
    }
    let r = lattice.rank();
    if r > 8 {
        return Err(Error::SearchTooLarge);
    }
    let smin = successive_minima(lattice);
    let det = lattice.det().abs();
    let candidates = enumerate_short(lattice, &smin.lambda_sq[r - 1]);

    // norm classes in the order the minima prescribe
    let mut classes: Vec<(BigInt, usize)> = Vec::new();
    for l in &smin.lambda_sq {
        match classes.last_mut() {
            Some((norm, count)) if norm == l => *count += 1,
            _ => classes.push((l.clone(), 1)),
        }
    }
    let per_class: Vec<Vec<&IntVec>> = classes
        .iter()
        .map(|(norm, _)| candidates.iter().filter(|v| v.norm_sq() == *norm).collect())
        .collect();

    fn search(
        class_idx: usize,
        classes: &[(BigInt, usize)],
        per_class: &[Vec<&IntVec>],
        chosen: &mut Vec<IntVec>,
        det: &BigInt,
    ) -> bool {
        if class_idx == classes.len() {
            let m = IntMat::from_cols(chosen);
            return m.det().abs() == *det;
        }
        pick(
            &per_class[class_idx],
            0,
            classes[class_idx].1,
            class_idx,
            classes,
            per_class,
            chosen,
            det,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn pick(
        pool: &[&IntVec],
        start: usize,
        left: usize,
        class_idx: usize,
        classes: &[(BigInt, usize)],
        per_class: &[Vec<&IntVec>],
        chosen: &mut Vec<IntVec>,
        det: &BigInt,
    ) -> bool {
        if left == 0 {
            return search(class_idx + 1, classes, per_class, chosen, det);
        }
        for i in start..pool.len() {
            chosen.push(pool[i].clone());
            let ok = IntMat::from_cols(chosen).rank() == chosen.len()
                && pick(
                    pool,
                    i + 1,
                    left - 1,
                    class_idx,
                    classes,
                    per_class,
                    chosen,
                    det,
                );
            chosen.pop();
            if ok {
                return true;
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(r);
    Ok(search(0, &classes, &per_class, &mut chosen, &det))
}

/// For a vector generating a lattice where SVP and SIVP coincide, the N
/// rotations of one shortest vector already solve SIVP. Verified against
/// the successive-minima oracle before returning.
pub fn sivp_via_rotations(a: &IntVec) -> Result<Vec<IntVec>> {
    if !crate::cyclic::in_rprime(a) {
        return Err(Error::NotInRPrime);
    }
    let n = a.dim();
    let rotations: Vec<IntVec> = (0..n).map(|k| a.rot_k(k)).collect();
    let lat = crate::cyclic::circulant_lattice(a)?;
    let smin = successive_minima(&lat);
    let norm = a.norm_sq();
    assert!(rotations.iter().all(|v| v.norm_sq() == norm));
    assert_eq!(IntMat::from_cols(&rotations).rank(), n);
    assert!(smin.lambda_sq.iter().all(|l| *l == norm));
    Ok(rotations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::circulant;

    fn lat(cols: &[&[i64]]) -> Lattice {
        let vecs: Vec<IntVec> = cols.iter().map(|c| IntVec::from_i64(c)).collect();
        Lattice::from_vectors(&vecs).unwrap()
    }

    fn norms(reps: &[IntVec]) -> Vec<BigInt> {
        reps.iter().map(|v| v.norm_sq()).collect()
    }

    #[test]
    fn unit_lattice_short_vectors() {
        let z2 = Lattice::standard(2);
        let reps = enumerate_short(&z2, &BigInt::from(1));
        assert_eq!(
            reps,
            vec![IntVec::from_i64(&[0, 1]), IntVec::from_i64(&[1, 0])]
        );
        assert!(enumerate_short(&z2, &BigInt::from(0)).is_empty());
    }

    #[test]
    fn rotation_lattice_short_vectors() {
        // oracle: the form 17m^2 + 16mn + 17n^2 over |m|,|n| <= 2 has
        // minimum nonzero value 17, attained only at (1,0) and (0,1)
        let mut min = None;
        for m in -2i64..=2 {
            for n in -2i64..=2 {
                if (m, n) == (0, 0) {
                    continue;
                }
                let q = 17 * m * m + 16 * m * n + 17 * n * n;
                min = Some(min.map_or(q, |c: i64| c.min(q)));
            }
        }
        assert_eq!(min, Some(17));
        let l = lat(&[&[4, 1], &[1, 4]]);
        let reps = enumerate_short(&l, &BigInt::from(17));
        assert_eq!(
            reps,
            vec![IntVec::from_i64(&[1, 4]), IntVec::from_i64(&[4, 1])]
        );
    }

    #[test]
    fn successive_minima_examples() {
        let z2 = Lattice::standard(2);
        assert_eq!(
            successive_minima(&z2).lambda_sq,
            vec![BigInt::from(1), BigInt::from(1)]
        );

        // oracle: norms of m(1,1) + n(2,-2) are 2m^2 + 8n^2
        let skew = lat(&[&[1, 1], &[2, -2]]);
        assert_eq!(
            successive_minima(&skew).lambda_sq,
            vec![BigInt::from(2), BigInt::from(8)]
        );

        let rot = lat(&[&[4, 1], &[1, 4]]);
        let smin = successive_minima(&rot);
        assert_eq!(smin.lambda_sq, vec![BigInt::from(17), BigInt::from(17)]);
        assert_eq!(smin.minimal_count(), 4);
    }

    #[test]
    fn well_rounded_predicates() {
        for n in 2..=5usize {
            let zn = Lattice::standard(n);
            assert!(is_well_rounded(&zn));
            assert!(is_wr_prime(&zn));
        }
        let skew = lat(&[&[1, 1], &[2, -2]]);
        assert!(!is_well_rounded(&skew));
        assert!(!is_wr_prime(&skew));
        let rot = lat(&[&[4, 1], &[1, 4]]);
        assert!(is_well_rounded(&rot));
        assert!(is_wr_prime(&rot));
    }

    #[test]
    fn wr_prime_implies_wr_on_samples() {
        let samples = [
            lat(&[&[1, 1], &[1, -1]]),
            lat(&[&[2, 0], &[0, 2]]),
            lat(&[&[2, 1], &[1, 2]]),
            lat(&[&[3, 0, 1], &[0, 3, 1], &[1, 1, 3]]),
            lat(&[&[1, 2], &[2, 1]]),
        ];
        for l in &samples {
            if is_wr_prime(l) {
                assert!(is_well_rounded(l), "WR' must imply WR on {l}");
            }
        }
    }

    #[test]
    fn minkowskian_examples() {
        // every rank-2 lattice is Minkowskian
        for cols in [[[3i64, 1], [1, 3]], [[5, 3], [0, 7]], [[2, 1], [9, 11]]] {
            let l = lat(&[&cols[0], &cols[1]]);
            assert!(is_minkowskian(&l).unwrap());
        }
        assert!(is_minkowskian(&Lattice::standard(5)).unwrap());
        let rot3 = Lattice::from_generators(&circulant(&IntVec::from_i64(&[31, 1, 1]))).unwrap();
        assert!(is_minkowskian(&rot3).unwrap());
        let rank1 = lat(&[&[1, 1]]);
        assert_eq!(is_minkowskian(&rank1), Err(Error::DependentBasis));
        assert_eq!(
            is_minkowskian(&Lattice::standard(9)),
            Err(Error::SearchTooLarge)
        );
    }

    #[test]
    fn checkerboard_dim5_is_not_minkowskian() {
        // the classical rank-5 example: vectors of Z^5 whose coordinates
        // share one parity. The only norm-4 vectors are +-2e_i, which
        // generate 2Z^5 of index 2, so no basis achieves the minima.
        let mut cols: Vec<IntVec> = (0..5)
            .map(|i| IntVec::std_basis(5, i).scale(&BigInt::from(2)))
            .collect();
        cols.push(IntVec::from_i64(&[1, 1, 1, 1, 1]));
        let l = Lattice::from_vectors(&cols).unwrap();
        assert_eq!(l.det(), BigInt::from(16));
        let smin = successive_minima(&l);
        assert_eq!(smin.lambda_sq, vec![BigInt::from(4); 5]);
        assert!(is_well_rounded(&l));
        assert!(!is_wr_prime(&l), "minimal vectors only span 2Z^5");
        assert_eq!(is_minkowskian(&l), Ok(false));
    }

    #[test]
    fn minkowski_sanity_examples() {
        assert!(minkowski_sanity(&Lattice::standard(2)));
        assert!(minkowski_sanity(&lat(&[&[4, 1], &[1, 4]])));
        assert!(minkowski_sanity(&lat(&[
            &[3, 0, 0],
            &[0, 3, 0],
            &[0, 0, 3]
        ])));
    }

    #[test]
    fn sivp_from_rotations() {
        let e1 = IntVec::std_basis(3, 0);
        let sol = sivp_via_rotations(&e1).unwrap();
        assert_eq!(sol.len(), 3);
        assert!(sol.contains(&IntVec::from_i64(&[1, 0, 0])));
        assert!(sol.contains(&IntVec::from_i64(&[0, 1, 0])));
        assert!(sol.contains(&IntVec::from_i64(&[0, 0, 1])));

        let a = IntVec::from_i64(&[21, 1]);
        let sol = sivp_via_rotations(&a).unwrap();
        assert_eq!(norms(&sol), vec![BigInt::from(442), BigInt::from(442)]);

        let b = IntVec::from_i64(&[31, 1, 1]);
        let sol = sivp_via_rotations(&b).unwrap();
        assert_eq!(sol.len(), 3);
        assert!(sol.iter().all(|v| v.norm_sq() == BigInt::from(963)));

        // (2,1) is not in R'_2: lambda_1^2 = 3 < 5
        let c = IntVec::from_i64(&[2, 1]);
        assert_eq!(sivp_via_rotations(&c), Err(Error::NotInRPrime));
    }

    #[test]
    fn lambda_one_is_basis_independent() {
        // apply unimodular column tweaks and check the minima agree
        let base = lat(&[&[3, 1, 0], &[1, 4, 1], &[0, 1, 5]]);
        let l1 = successive_minima(&base).lambda_sq;
        let b = base.basis();
        let c0 = b.col(0).add(&b.col(1).scale(&BigInt::from(3)));
        let c2 = b.col(2).sub(&b.col(0).scale(&BigInt::from(2)));
        let tweaked = Lattice::from_vectors(&[c0, b.col(1), c2]).unwrap();
        assert_eq!(tweaked, base, "unimodular ops keep the lattice");
        assert_eq!(successive_minima(&tweaked).lambda_sq, l1);
    }
}
