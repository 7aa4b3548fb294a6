//! Multivariate polynomials with integer coefficients, used where a
//! computation has to be carried out symbolically in the parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Ring, Q};

/// Exponent vector with trailing zeros removed.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

impl Poly {
    pub fn constant(c: i64) -> Poly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), BigInt::from(c));
        }
        Poly { terms }
    }

    /// The variable `x_i` (0-based index).
    pub fn var(i: usize) -> Poly {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Poly { terms }
    }

    /// `c · x^e`.
    pub fn monomial(e: &[u32], c: i64) -> Poly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(trim(e.to_vec()), BigInt::from(c));
        }
        Poly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[u32]) -> BigInt {
        self.terms
            .get(&trim(m.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// True when every coefficient is `≥ 0`.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn eval(&self, xs: &[Q]) -> Q {
        let mut acc = <Q as Zero>::zero();
        for (m, c) in &self.terms {
            let mut t = Q::from_integer(c.clone());
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &xs[i];
                }
            }
            acc += t;
        }
        acc
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let e = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, o: Poly) -> Poly {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        self + (-o)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // exponents add under multiplication
impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let len = ma.len().max(mb.len());
                let m: Monomial = (0..len)
                    .map(|i| ma.get(i).copied().unwrap_or(0) + mb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Ring for Poly {
    type Ctx = ();
    fn ctx(&self) {}
    fn from_i64(_: &(), v: i64) -> Poly {
        Poly::constant(v)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Poly {
    /// Variables print as `t1, t2, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, e)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Univariate polynomial in `q` with machine-integer coefficients, lowest
/// degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly(Vec<i64>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<i64>) -> UniPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> UniPoly {
        UniPoly(Vec::new())
    }

    pub fn one() -> UniPoly {
        UniPoly(vec![1])
    }

    /// `(q - 1)^a q^b`.
    pub fn torus_times_affine(a: usize, b: usize) -> UniPoly {
        let mut c = vec![0i64; b];
        c.push(1);
        let mut p = UniPoly(c);
        for _ in 0..a {
            p = p.mul(&UniPoly(vec![-1, 1]));
        }
        p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let len = self.0.len().max(o.0.len());
        UniPoly::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * q + c)
    }

    /// Whether `P(q) = (-q)^d P(1/q)`.
    pub fn is_twisted_palindromic(&self, d: usize) -> bool {
        if self.0.len() > d + 1 {
            return false;
        }
        let sign = if d % 2 == 0 { 1 } else { -1 };
        (0..=d).all(|i| {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = self.0.get(d - i).copied().unwrap_or(0);
            a == sign * b
        })
    }
}

impl fmt::Display for UniPoly {
    /// Highest degree first, e.g. `q^3 - 3q^2 + 4q - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
