use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Q = BigRational;

/// Coefficient field for tensors and subspaces.
///
/// Arithmetic goes through borrowing methods so that big rationals are not
/// cloned on every operation.
pub trait Field: Clone + Eq + Hash + Debug + Display + Send + Sync + 'static {
    /// 0 for the rationals, `p` for the prime field of order `p`.
    const CHARACTERISTIC: u64;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// Parses `"p/q"` or an integer.
    fn parse(text: &str) -> Option<Self>;
}

impl Field for Q {
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().ok()?;
                let q: BigInt = q.trim().parse().ok()?;
                if q.is_zero() {
                    return None;
                }
                Some(BigRational::new(p, q))
            }
            None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }
}

/// Formats a rational as `p` or `p/q`, the same syntax [`Field::parse`] reads.
pub fn format_q(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sign of a rational: -1, 0 or 1.
pub fn sign_q(q: &Q) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// The prime field of order `P`. `P` must be prime and below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            Some((p, q)) => {
                let p = Fp::new(p.trim().parse::<i64>().ok()?);
                let q = Fp::new(q.trim().parse::<i64>().ok()?);
                p.div(&q)
            }
            None => text.parse::<i64>().ok().map(Fp::new),
        }
    }
}
