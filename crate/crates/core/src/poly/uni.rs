use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Field, Rat};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// x − a
    pub fn linear_root(a: &F) -> Self {
        Self::new(vec![a.neg(), F::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    pub fn eval(&self, a: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a).add(c);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = r[i - dd + j].sub(&c.mul(dc));
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Polynomial composition self(inner(x)).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Σ c_i · num^i · den^(n−i): the degree-n homogenization evaluated at (num, den).
    pub fn homogenize_at(&self, n: usize, num: &Self, den: &Self) -> Self {
        let mut acc = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &num.pow(i as u32) * &den.pow((n - i) as u32);
            acc = &acc + &term.scale(c);
        }
        acc
    }

    pub fn square_free(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Rational coefficients, if all are rational.
    pub fn to_rat(&self) -> Option<UniPoly<Rat>> {
        let cs: Option<Vec<Rat>> = self.coeffs.iter().map(|c| c.to_rat()).collect();
        cs.map(UniPoly::new)
    }

    pub fn from_rat(p: &UniPoly<Rat>) -> Self {
        p.map(|c| F::from_rat(c))
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: Self) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: Self) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: Self) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(v)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
}
