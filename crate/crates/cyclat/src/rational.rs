//! Exact rational helpers: integer square roots, interval enclosures of
//! irrational quantities, and safe fixed-point formatting.
//!
//! Floors of expressions like sqrt(k) or (2+sqrt(3))a are always decided by
//! integer comparisons; intervals only appear where a genuinely irrational
//! value (sqrt enclosures, powers of pi) must be sandwiched.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative value");
    n.sqrt()
}

/// Floor of a rational as a BigInt.
pub fn floor_rat(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

/// Nearest integer, ties rounded up.
pub fn round_rat(r: &BigRational) -> BigInt {
    floor_rat(&(r + BigRational::new(BigInt::one(), BigInt::from(2))))
}

/// A closed rational interval [lo, hi] guaranteed to contain some real value.
#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(v: BigRational) -> Self {
        RatInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::point(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        RatInterval {
            lo: cands.iter().min().unwrap().clone(),
            hi: cands.iter().max().unwrap().clone(),
        }
    }

    /// Divide by an interval that does not contain zero.
    pub fn div(&self, other: &Self) -> Self {
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "division by interval containing zero"
        );
        let inv = RatInterval {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        self.mul(&inv)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul(&RatInterval::point(c.clone()))
    }

    /// Outward square-root enclosure with absolute precision about 1/scale.
    pub fn sqrt(&self, scale: &BigInt) -> Self {
        let lo = sqrt_lower(&self.lo, scale);
        let hi = sqrt_upper(&self.hi, scale);
        RatInterval { lo, hi }
    }

    /// Interval power with nonnegative integer exponent.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatInterval::from_int(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn contains_rat(&self, v: &BigRational) -> bool {
        self.lo <= *v && *v <= self.hi
    }
}

/// Rational lower bound for sqrt(q): t/scale with t = isqrt(floor(q scale^2)).
fn sqrt_lower(q: &BigRational, scale: &BigInt) -> BigRational {
    assert!(!q.is_negative());
    let scaled = q * BigRational::from_integer(scale * scale);
    let t = isqrt(&floor_rat(&scaled));
    BigRational::new(t, scale.clone())
}

/// Rational upper bound for sqrt(q): (t+1)/scale bounds sqrt(q) from above.
fn sqrt_upper(q: &BigRational, scale: &BigInt) -> BigRational {
    assert!(!q.is_negative());
    let scaled = q * BigRational::from_integer(scale * scale);
    let t = isqrt(&floor_rat(&scaled));
    BigRational::new(t + 1, scale.clone())
}

/// Enclosure of sqrt(q) for a nonnegative rational, width <= 2/scale.
pub fn sqrt_enclosure(q: &BigRational, scale: &BigInt) -> RatInterval {
    RatInterval {
        lo: sqrt_lower(q, scale),
        hi: sqrt_upper(q, scale),
    }
}

/// Default scale giving absolute enclosure width 2e-13.
pub fn default_scale() -> BigInt {
    BigInt::from(10u64).pow(13)
}

/// pi to 20 decimal digits, as a one-ulp rational interval.
pub fn pi_enclosure() -> RatInterval {
    let den = BigInt::from(10u64).pow(20);
    let lo: BigInt = "314159265358979323846".parse().unwrap();
    RatInterval {
        lo: BigRational::new(lo.clone(), den.clone()),
        hi: BigRational::new(lo + 1, den),
    }
}

/// Enclosure of V_N^2, the squared volume of the N-dimensional unit ball.
///
/// V_N = pi^{k}/k! for N = 2k and 2^N k! pi^k / N! for N = 2k+1, so the
/// square is always a rational multiple of pi^{2k}.
pub fn unit_ball_vol_sq(n: usize) -> RatInterval {
    assert!(n >= 1);
    let k = n / 2;
    let coeff = if n.is_multiple_of(2) {
        BigRational::new(BigInt::one(), factorial(k).pow(2u32))
    } else {
        let num = BigInt::from(4).pow(n as u32) * factorial(k).pow(2u32);
        BigRational::new(num, factorial(n).pow(2u32))
    };
    pi_enclosure().pow(2 * k as u32).scale(&coeff)
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// Fixed-point decimal rendering with an explicit rounding direction, so a
/// printed bound stays on the safe side of the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Floor,
    Ceil,
}

pub fn format_fixed(r: &BigRational, places: u32, rounding: Rounding) -> String {
    let scale = BigInt::from(10u64).pow(places);
    let scaled = r * BigRational::from_integer(scale.clone());
    let n = match rounding {
        Rounding::Floor => scaled.floor().to_integer(),
        Rounding::Ceil => scaled.ceil().to_integer(),
    };
    let neg = n.is_negative();
    let abs = n.abs();
    let (int_part, frac_part) = abs.div_rem(&scale);
    let frac_str = format!("{:0width$}", frac_part, width = places as usize);
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_str)
}
