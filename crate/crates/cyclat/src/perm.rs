//! Permutation and signed-permutation actions on Z^N.
//!
//! Conventions, fixed once and used everywhere: permutations are stored
//! 0-indexed with `image[i] = tau(i)`; composition is the usual
//! `(sigma tau)(i) = sigma(tau(i))`; the matrix of tau puts column j's one
//! in row tau(j), so coordinate j is carried to slot tau(j). Under these
//! choices tau -> E_tau is a homomorphism (E_{sigma tau} = E_sigma E_tau)
//! and E_{(1 2 ... N)} is exactly the rotation matrix.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::matrix::IntMat;
use crate::svp::is_well_rounded;
use crate::vector::IntVec;

/// A permutation of {1, ..., N}, stored 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Build from the 0-indexed image table, validating bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        if n < 2 {
            return Err(Error::InvalidPermutation("need at least two points".into()));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "image {:?} is not a bijection",
                    image.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// The N-cycle (1 2 ... N): i -> i+1 mod N.
    pub fn rotation(n: usize) -> Permutation {
        Permutation {
            image: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// Parse products of cycles in 1-indexed notation, e.g. "(1 3 2)" or
    /// "(1 2)(3 4)". Whitespace-insensitive; cycles must be disjoint;
    /// missing points are fixed.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Permutation> {
        if n < 2 {
            return Err(Error::InvalidPermutation("need at least two points".into()));
        }
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::InvalidPermutation("expected '('".into()));
            }
            let Some(inner_end) = rest.find(')') else {
                return Err(Error::InvalidPermutation("unbalanced parentheses".into()));
            };
            let body = &rest[1..inner_end];
            rest = &rest[inner_end + 1..];
            let mut points = Vec::new();
            for tok in body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry '{tok}'")))?;
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range 1..={n}"
                    )));
                }
                points.push(p - 1);
            }
            for (k, &p) in points.iter().enumerate() {
                if touched[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated across cycles",
                        p + 1
                    )));
                }
                touched[p] = true;
                image[p] = points[(k + 1) % points.len()];
            }
        }
        Permutation::from_image(image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn map(&self, i: usize) -> usize {
        self.image[i]
    }

    /// Standard composition: (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            image: (0..self.n()).map(|i| self.image[other.image[i]]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0usize; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Whether the permutation is a single N-cycle on all points.
    pub fn is_ncycle(&self) -> bool {
        let n = self.n();
        let mut seen = 1usize;
        let mut p = self.image[0];
        while p != 0 {
            p = self.image[p];
            seen += 1;
            if seen > n {
                return false;
            }
        }
        seen == n
    }

    /// The matrix E with `E[tau(j)][j] = 1`: coordinate j goes to slot
    /// tau(j). Orthogonal, and a homomorphic image of the permutation.
    pub fn matrix(&self) -> IntMat {
        let n = self.n();
        let mut m = IntMat::zero(n, n);
        for j in 0..n {
            m[(self.image[j], j)] = BigInt::one();
        }
        m
    }

    /// Apply the matrix action to a vector.
    pub fn apply(&self, x: &IntVec) -> IntVec {
        assert_eq!(self.n(), x.dim());
        let mut coords = vec![BigInt::zero(); self.n()];
        for (j, c) in x.coords().iter().enumerate() {
            coords[self.image[j]] = c.clone();
        }
        IntVec::new(coords)
    }

    /// All permutations of {1..n}; intended for small n only.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        permute(&mut items, 0, &mut out);
        out
    }

    /// All N-cycles in S_n.
    pub fn all_ncycles(n: usize) -> Vec<Permutation> {
        Permutation::all(n)
            .into_iter()
            .filter(|p| p.is_ncycle())
            .collect()
    }
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == items.len() {
        out.push(Permutation {
            image: items.clone(),
        });
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let n = self.n();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                seen[p] = true;
                first = false;
                p = self.image[p];
                if p == start {
                    break;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A signed permutation: diagonal +/-1 matrix times a permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Permutation,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Permutation, signs: Vec<i8>) -> Result<SignedPermutation> {
        if signs.len() != perm.n() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidPermutation(
                "signs must be +/-1, one per point".into(),
            ));
        }
        Ok(SignedPermutation { perm, signs })
    }

    /// The signature used by negacyclic lattices: diag(-1, 1, ..., 1)
    /// together with the rotation N-cycle.
    pub fn negacyclic(n: usize) -> SignedPermutation {
        let mut signs = vec![1i8; n];
        signs[0] = -1;
        SignedPermutation {
            perm: Permutation::rotation(n),
            signs,
        }
    }

    /// g E_tau: one nonzero entry per row and column, each +/-1.
    pub fn matrix(&self) -> IntMat {
        let n = self.perm.n();
        let mut m = IntMat::zero(n, n);
        for j in 0..n {
            let i = self.perm.map(j);
            m[(i, j)] = BigInt::from(self.signs[i]);
        }
        m
    }

    pub fn apply(&self, x: &IntVec) -> IntVec {
        let mut coords = vec![BigInt::zero(); self.perm.n()];
        for (j, c) in x.coords().iter().enumerate() {
            let i = self.perm.map(j);
            coords[i] = if self.signs[i] == 1 { c.clone() } else { -c };
        }
        IntVec::new(coords)
    }
}

/// E_tau L = L, decided on canonical forms.
pub fn is_invariant(lattice: &Lattice, tau: &Permutation) -> bool {
    assert_eq!(lattice.ambient_dim(), tau.n());
    let transformed: Vec<IntVec> = (0..lattice.rank())
        .map(|j| tau.apply(&lattice.basis().col(j)))
        .collect();
    match Lattice::from_vectors(&transformed) {
        Ok(l) => l == *lattice,
        Err(_) => false,
    }
}

/// g E_tau L = L for a signed permutation.
pub fn is_signed_invariant(lattice: &Lattice, s: &SignedPermutation) -> bool {
    assert_eq!(lattice.ambient_dim(), s.perm.n());
    let transformed: Vec<IntVec> = (0..lattice.rank())
        .map(|j| s.apply(&lattice.basis().col(j)))
        .collect();
    match Lattice::from_vectors(&transformed) {
        Ok(l) => l == *lattice,
        Err(_) => false,
    }
}

/// A conjugator g with tau = g sigma g^{-1} for the rotation N-cycle
/// sigma, built by walking the orbit of the first point: g(i) = tau^i(0).
/// The matrix identity E_tau = E_g E_sigma E_g^{-1} is asserted.
pub fn conjugator_for_ncycle(tau: &Permutation) -> Result<Permutation> {
    if !tau.is_ncycle() {
        return Err(Error::NotNCycle);
    }
    let n = tau.n();
    let mut image = Vec::with_capacity(n);
    let mut p = 0usize;
    for _ in 0..n {
        image.push(p);
        p = tau.map(p);
    }
    let g = Permutation::from_image(image)?;
    let sigma = Permutation::rotation(n);
    let lhs = tau.matrix();
    let rhs = g.matrix().mul(&sigma.matrix()).mul(&g.inverse().matrix());
    assert_eq!(lhs, rhs, "conjugation identity must hold");
    Ok(g)
}

/// The lattice generated by a and its negacyclic shifts; invariant under
/// the negacyclic signed permutation by construction.
pub fn signed_circulant_lattice(a: &IntVec) -> Result<Lattice> {
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = a.dim();
    let mut cols = Vec::with_capacity(n);
    let mut cur = a.clone();
    for _ in 0..n {
        cols.push(cur.clone());
        cur = cur.srot();
    }
    let lat = Lattice::from_vectors(&cols)?;
    debug_assert!(is_signed_invariant(&lat, &SignedPermutation::negacyclic(n)));
    Ok(lat)
}

/// Planar negacyclic lattices have an orthogonal equal-norm basis
/// (a, b), (-b, a), so they are always well-rounded; this builds one and
/// runs the generic check.
pub fn dim2_signed_wr_check(a: &BigInt, b: &BigInt) -> Result<bool> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroVector);
    }
    let c1 = IntVec::new(vec![a.clone(), b.clone()]);
    let c2 = IntVec::new(vec![-b.clone(), a.clone()]);
    let lat = Lattice::from_vectors(&[c1, c2])?;
    Ok(is_well_rounded(&lat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::svp::successive_minima;
    use rand::rngs::StdRng;
    use rand::{seq::SliceRandom, Rng, SeedableRng};

    fn v(coords: &[i64]) -> IntVec {
        IntVec::from_i64(coords)
    }

    #[test]
    fn rotation_cycle_acts_as_rot() {
        let sigma = Permutation::rotation(4);
        let x = v(&[1, 2, 3, 4]);
        assert_eq!(sigma.apply(&x), x.rot());
        assert_eq!(sigma.matrix().mul_vec(&x), x.rot());
        assert_eq!(Permutation::identity(4).apply(&x), x);
        let swap = Permutation::parse_cycles("(1 2)", 3).unwrap();
        assert_eq!(swap.apply(&v(&[7, 8, 9])), v(&[8, 7, 9]));
    }

    #[test]
    fn representation_is_homomorphic() {
        let mut rng = StdRng::seed_from_u64(11);
        for n in 3..=5usize {
            for _ in 0..20 {
                let mut img: Vec<usize> = (0..n).collect();
                img.shuffle(&mut rng);
                let sigma = Permutation::from_image(img).unwrap();
                let mut img2: Vec<usize> = (0..n).collect();
                img2.shuffle(&mut rng);
                let tau = Permutation::from_image(img2).unwrap();
                let st = sigma.compose(&tau);
                assert_eq!(st.matrix(), sigma.matrix().mul(&tau.matrix()));
                // matrices are orthogonal: E^t E = I
                let e = tau.matrix();
                assert_eq!(e.transpose().mul(&e), IntMat::identity(n));
                let x =
                    IntVec::from_i64(&(0..n).map(|_| rng.gen_range(-9..=9)).collect::<Vec<_>>());
                assert_eq!(tau.apply(&x).norm_sq(), x.norm_sq());
            }
        }
    }

    #[test]
    fn parser_accepts_cycle_products() {
        let p = Permutation::parse_cycles("(1 3 2)", 3).unwrap();
        assert_eq!(p.map(0), 2);
        assert_eq!(p.map(2), 1);
        assert_eq!(p.map(1), 0);
        let q = Permutation::parse_cycles(" ( 1 2 ) ( 3 4 ) ", 4).unwrap();
        assert_eq!(q.map(0), 1);
        assert_eq!(q.map(2), 3);
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 5)", 3).is_err());
        assert_eq!(format!("{}", p), "(1 3 2)");
    }

    #[test]
    fn invariance_examples() {
        for tau in Permutation::all(3) {
            assert!(is_invariant(&Lattice::standard(3), &tau));
        }
        let stretched = Lattice::from_vectors(&[v(&[1, 0]), v(&[0, 2])]).unwrap();
        let swap = Permutation::parse_cycles("(1 2)", 2).unwrap();
        assert!(!is_invariant(&stretched, &swap));
        let skew = Lattice::from_vectors(&[v(&[1, 1]), v(&[1, -1])]).unwrap();
        assert!(is_invariant(&skew, &swap));
    }

    #[test]
    fn rotation_invariance_is_cyclicity() {
        let sigma = Permutation::rotation(2);
        for (cols, expect) in [
            (vec![v(&[1, 0]), v(&[0, 2])], false),
            (vec![v(&[1, 1]), v(&[1, -1])], true),
            (vec![v(&[1, 0]), v(&[0, 1])], true),
        ] {
            let l = Lattice::from_vectors(&cols).unwrap();
            assert_eq!(is_invariant(&l, &sigma), crate::cyclic::is_cyclic(&l));
            assert_eq!(is_invariant(&l, &sigma), expect);
        }
    }

    #[test]
    fn conjugator_examples() {
        let sigma3 = Permutation::rotation(3);
        assert!(conjugator_for_ncycle(&sigma3).unwrap().is_identity());

        // composing (2 3)(1 2 3)(2 3) gives (1 3 2)
        let tau = Permutation::parse_cycles("(1 3 2)", 3).unwrap();
        let g = conjugator_for_ncycle(&tau).unwrap();
        assert_eq!(g, Permutation::parse_cycles("(2 3)", 3).unwrap());
        assert_eq!(g.compose(&sigma3).compose(&g.inverse()), tau);

        // g sends 1,2,3,4 to 1,3,2,4
        let tau4 = Permutation::parse_cycles("(1 3 2 4)", 4).unwrap();
        let g4 = conjugator_for_ncycle(&tau4).unwrap();
        assert_eq!(g4, Permutation::parse_cycles("(2 3)", 4).unwrap());

        let not_cycle = Permutation::parse_cycles("(1 2)", 4).unwrap();
        assert_eq!(conjugator_for_ncycle(&not_cycle), Err(Error::NotNCycle));
    }

    #[test]
    fn conjugated_lattices_are_invariant() {
        // push a few cyclic lattices through E_g and check tau-invariance
        for n in [3usize, 4] {
            let gens: Vec<IntVec> = match n {
                3 => vec![v(&[1, 1, 0]), v(&[2, 1, 0]), v(&[31, 1, 1])],
                _ => vec![v(&[1, 1, 0, 0]), v(&[2, 1, 0, 0])],
            };
            for tau in Permutation::all_ncycles(n) {
                let g = conjugator_for_ncycle(&tau).unwrap();
                let eg = g.matrix();
                let mut keys = std::collections::BTreeSet::new();
                for a in &gens {
                    let cyc = crate::cyclic::circulant_lattice(a).unwrap();
                    let img = cyc.transform(&eg).unwrap();
                    assert!(is_invariant(&img, &tau), "image must be tau-invariant");
                    assert_eq!(
                        successive_minima(&img).lambda_sq,
                        successive_minima(&cyc).lambda_sq,
                        "conjugation is an isometry"
                    );
                    keys.insert(img.hnf_key());
                }
                assert_eq!(keys.len(), gens.len(), "distinct lattices stay distinct");
            }
        }
    }

    #[test]
    fn invariance_is_closed_under_composition() {
        // the permutation-orbit lattice of (2,1,1) is S_3-invariant
        let orbit: Vec<IntVec> = Permutation::all(3)
            .iter()
            .map(|p| p.apply(&v(&[2, 1, 1])))
            .collect();
        let l = Lattice::from_vectors(&orbit).unwrap();
        let swap = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let sigma = Permutation::rotation(3);
        assert!(is_invariant(&l, &swap));
        assert!(is_invariant(&l, &sigma));
        assert!(is_invariant(&l, &swap.compose(&sigma)));
        // (1 2) and (1 2 3) generate S_3
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let mut img: Vec<usize> = (0..3).collect();
            img.shuffle(&mut rng);
            let tau = Permutation::from_image(img).unwrap();
            assert!(is_invariant(&l, &tau));
        }
    }

    #[test]
    fn signed_circulant_examples() {
        // signed permutation matrices are orthogonal with +/-1 entries
        for n in 2..=5usize {
            let sp = SignedPermutation::negacyclic(n);
            let m = sp.matrix();
            assert_eq!(m.transpose().mul(&m), IntMat::identity(n));
            let x = IntVec::from_i64(&(1..=n as i64).collect::<Vec<_>>());
            assert_eq!(sp.apply(&x), m.mul_vec(&x));
            assert_eq!(sp.apply(&x).norm_sq(), x.norm_sq());
        }

        // columns (1,2) and (-2,1): determinant 5
        let l = signed_circulant_lattice(&v(&[1, 2])).unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.det(), BigInt::from(5));
        assert!(l.contains(&v(&[-2, 1])));

        for n in 2..=5usize {
            assert_eq!(
                signed_circulant_lattice(&IntVec::std_basis(n, 0)).unwrap(),
                Lattice::standard(n)
            );
        }

        // det = 2: evaluate 1 + x at the primitive 8th roots of unity via
        // the exact resultant
        let l4 = signed_circulant_lattice(&v(&[1, 1, 0, 0])).unwrap();
        assert_eq!(l4.rank(), 4);
        assert_eq!(l4.det(), BigInt::from(2));
        let res = crate::poly::resultant(
            &crate::poly::IntPoly::x_pow_plus_one(4),
            &crate::poly::IntPoly::from_i64(&[1, 1]),
        );
        assert_eq!(res, BigInt::from(2));

        assert_eq!(
            signed_circulant_lattice(&IntVec::zero(3)),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn planar_signed_lattices_are_wr() {
        assert!(dim2_signed_wr_check(&BigInt::from(1), &BigInt::from(2)).unwrap());
        assert!(dim2_signed_wr_check(&BigInt::from(1), &BigInt::from(0)).unwrap());
        assert!(dim2_signed_wr_check(&BigInt::from(2), &BigInt::from(2)).unwrap());
        // lambda^2 values confirm the equal-norm orthogonal basis
        let l = Lattice::from_vectors(&[v(&[1, 2]), v(&[-2, 1])]).unwrap();
        let smin = successive_minima(&l);
        assert_eq!(smin.lambda_sq, vec![BigInt::from(5), BigInt::from(5)]);
        assert!(matches!(
            dim2_signed_wr_check(&BigInt::zero(), &BigInt::zero()),
            Err(Error::ZeroVector)
        ));
    }
}
