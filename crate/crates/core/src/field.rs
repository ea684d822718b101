//! Exact coefficient fields: the rationals and a single quadratic extension.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Exact field operations shared by every polynomial container.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero; callers check first.
    fn inv(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;
    /// The value as a rational, when it is one.
    fn to_rat(&self) -> Option<Rat>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rat(&rat(n))
    }
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

/// Split `n` into `k² · s` with `s` square-free (trial division; any cofactor
/// left after the trial bound is kept in `s` unless it is a perfect square).
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut k = BigInt::one();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= limit {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            k *= p.pow(e / 2);
            if e % 2 == 1 {
                s *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        k *= r;
    } else {
        s *= rest;
    }
    (k, s * sign)
}

/// a + b√δ with rational a, b. δ is stored as 0 whenever b = 0, so equal
/// values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    a: Rat,
    b: Rat,
    delta: BigInt,
}

impl Scalar {
    pub fn rational(a: Rat) -> Self {
        Scalar { a, b: Zero::zero(), delta: BigInt::zero() }
    }

    /// a + b√δ; δ must be square-free and different from 0 and 1.
    pub fn new(a: Rat, b: Rat, delta: BigInt) -> Self {
        assert!(!delta.is_zero() && !delta.is_one(), "invalid extension parameter");
        let mut s = Scalar { a, b, delta };
        s.tidy();
        s
    }

    /// √r as an element of Q(√s) where s is the square-free part of r.
    pub fn sqrt_of(r: &Rat) -> Self {
        if Zero::is_zero(r) {
            return Scalar::rational(Zero::zero());
        }
        // √(p/q) = √(pq)/q
        let pq = r.numer() * r.denom();
        let (k, s) = square_free_split(&pq);
        let coef = Rat::new(k, r.denom().clone());
        if s.is_one() {
            Scalar::rational(coef)
        } else {
            Scalar::new(Zero::zero(), coef, s)
        }
    }

    fn tidy(&mut self) {
        if Zero::is_zero(&self.b) {
            self.delta = BigInt::zero();
        }
    }

    pub fn re(&self) -> &Rat {
        &self.a
    }
    pub fn im(&self) -> &Rat {
        &self.b
    }
    pub fn delta(&self) -> &BigInt {
        &self.delta
    }
    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// a − b√δ.
    pub fn conj(&self) -> Self {
        Scalar { a: self.a.clone(), b: -&self.b, delta: self.delta.clone() }
    }

    fn merge_delta(&self, rhs: &Self) -> BigInt {
        match (self.delta.is_zero(), rhs.delta.is_zero()) {
            (true, _) => rhs.delta.clone(),
            (_, true) => self.delta.clone(),
            _ => {
                assert!(
                    self.delta == rhs.delta,
                    "{}",
                    Error::MixedExtension(self.delta.to_string(), rhs.delta.to_string())
                );
                self.delta.clone()
            }
        }
    }

    /// Checked combination for callers that cannot guarantee a single δ.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.delta.is_zero() && !rhs.delta.is_zero() && self.delta != rhs.delta {
            return Err(Error::MixedExtension(self.delta.to_string(), rhs.delta.to_string()));
        }
        Ok(Field::mul(self, rhs))
    }

    /// Exact sign for real values (δ > 0 or rational); None for non-real.
    pub fn signum(&self) -> Option<Ordering> {
        if self.is_rational() {
            return Some(self.a.cmp(&Zero::zero()));
        }
        if self.delta.is_negative() {
            return None;
        }
        let sa = self.a.cmp(&Zero::zero());
        let sb = self.b.cmp(&Zero::zero());
        if sa == Ordering::Equal {
            return Some(sb);
        }
        if sa == sb {
            return Some(sa);
        }
        // opposite signs: compare a² with b²δ
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rat::from_integer(self.delta.clone());
        Some(match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }

    /// Approximate value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.delta.to_f64().unwrap_or(0.0);
        if d >= 0.0 {
            (a + b * d.sqrt(), 0.0)
        } else {
            (a, b * (-d).sqrt())
        }
    }
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::rational(r)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::rational(Zero::zero())
    }
    fn one() -> Self {
        Scalar::rational(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        let delta = self.merge_delta(rhs);
        let mut s = Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b, delta };
        s.tidy();
        s
    }
    fn sub(&self, rhs: &Self) -> Self {
        let delta = self.merge_delta(rhs);
        let mut s = Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b, delta };
        s.tidy();
        s
    }
    fn mul(&self, rhs: &Self) -> Self {
        let delta = self.merge_delta(rhs);
        let d = Rat::from_integer(delta.clone());
        // (a + b√δ)(c + d√δ) = ac + bdδ + (ad + bc)√δ
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        let mut s = Scalar { a, b, delta };
        s.tidy();
        s
    }
    fn neg(&self) -> Self {
        Scalar { a: -&self.a, b: -&self.b, delta: self.delta.clone() }
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        if self.is_rational() {
            return Scalar::rational(self.a.recip());
        }
        // (a − b√δ)/(a² − b²δ)
        let n = &self.a * &self.a - &self.b * &self.b * Rat::from_integer(self.delta.clone());
        Scalar { a: &self.a / &n, b: -&self.b / &n, delta: self.delta.clone() }
    }
    fn from_rat(r: &Rat) -> Self {
        Scalar::rational(r.clone())
    }
    fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.a.clone())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let surd = if One::is_one(&self.b) {
            format!("sqrt({})", self.delta)
        } else if One::is_one(&-&self.b) {
            format!("-sqrt({})", self.delta)
        } else {
            format!("{}*sqrt({})", self.b, self.delta)
        };
        if Zero::is_zero(&self.a) {
            write!(f, "{surd}")
        } else if let Some(rest) = surd.strip_prefix('-') {
            write!(f, "({} - {})", self.a, rest)
        } else {
            write!(f, "({} + {})", self.a, surd)
        }
    }
}

/// Field in which roots and solution coordinates are sought.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum WorkingField {
    #[default]
    Rational,
    /// Q(√δ) with δ square-free, δ ∉ {0, 1}.
    Quadratic(BigInt),
}

impl WorkingField {
    /// Q(√d); d is reduced to its square-free part, and squares give Q.
    pub fn quadratic(d: i64) -> Self {
        let (_, s) = square_free_split(&BigInt::from(d));
        if s.is_one() || s.is_zero() {
            WorkingField::Rational
        } else {
            WorkingField::Quadratic(s)
        }
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match self {
            WorkingField::Rational => x.is_rational(),
            WorkingField::Quadratic(d) => x.is_rational() || x.delta() == d,
        }
    }
}

/// Whether a rational number is negative (sign helper used by printers).
pub fn is_negative(r: &Rat) -> bool {
    r.numer().sign() == Sign::Minus
}

/// Least common multiple of the denominators and gcd of the numerators.
pub fn lcm_gcd(values: &[Rat]) -> (BigInt, BigInt) {
    let mut l = BigInt::one();
    let mut g = BigInt::zero();
    for v in values {
        l = l.lcm(v.denom());
        g = g.gcd(v.numer());
    }
    (l, g)
}
