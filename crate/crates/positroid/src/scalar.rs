//! Exact scalars: arbitrary-precision rationals, prime fields, and the ring
//! traits the rest of the crate is generic over.
//!
//! Every scalar carries a context (`Ctx`) so that constants such as `0` and
//! `1` can be built for a prime field whose modulus is only known at run time.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number.
pub type Q = BigRational;

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Data needed to build constants (the modulus for prime fields).
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn zero(ctx: &Self::Ctx) -> Self {
        Self::from_i64(ctx, 0)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_i64(ctx, 1)
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

/// An ordered field, needed for the total-positivity tests.
///
/// Prime fields deliberately do not implement this trait, so positivity
/// operations cannot be instantiated over `F_p`.
pub trait OrderedField: Field + PartialOrd {
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
}

impl Ring for BigRational {
    type Ctx = ();
    fn ctx(&self) {}
    fn from_i64(_: &(), v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl OrderedField for BigRational {
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Rational from a numerator/denominator pair of machine integers.
pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qi(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"a"` or `"a/b"`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
            let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Element of the prime field `F_p` with `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

/// A validated prime modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime, Error> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not a prime below 2^31")));
        }
        Ok(Prime(p))
    }
    pub fn get(self) -> u64 {
        self.0
    }
    /// All field elements `0, 1, ..., p-1`.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        (0..self.0).map(move |v| Fp { v, p: self.0 })
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(v: i64, p: Prime) -> Fp {
        Fp {
            v: v.rem_euclid(p.0 as i64) as u64,
            p: p.0,
        }
    }
    pub fn value(self) -> u64 {
        self.v
    }
    pub fn modulus(self) -> u64 {
        self.p
    }
    fn check(self, o: Fp) {
        assert_eq!(self.p, o.p, "mixed prime fields");
    }
    fn pow(self, mut e: u64) -> Fp {
        let mut base = self.v;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        Fp { v: acc, p: self.p }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        self.check(o);
        Fp {
            v: (self.v + o.v) % self.p,
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        self.check(o);
        Fp {
            v: (self.v + self.p - o.v) % self.p,
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        self.check(o);
        Fp {
            v: self.v * o.v % self.p,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
impl Div for Fp {
    type Output = Fp;
    fn div(self, o: Fp) -> Fp {
        self * o.inv().expect("division by zero in F_p")
    }
}

impl Ring for Fp {
    type Ctx = Prime;
    fn ctx(&self) -> Prime {
        Prime(self.p)
    }
    fn from_i64(ctx: &Prime, v: i64) -> Fp {
        Fp::new(v, *ctx)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Fp> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

/// Converts a rational to `F_p`; fails when `p` divides the denominator.
pub fn q_to_fp(x: &Q, p: Prime) -> Option<Fp> {
    let m = BigInt::from(p.get());
    let num = x.numer().mod_floor(&m).to_i64()?;
    let den = x.denom().mod_floor(&m).to_i64()?;
    Fp::new(num, p).checked_div(Fp::new(den, p))
}

impl Fp {
    fn checked_div(self, o: Fp) -> Option<Fp> {
        o.inv().map(|i| self * i)
    }
}
