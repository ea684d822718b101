use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Field, Rat};
use crate::poly::UniPoly;

/// One of the two variables of a bivariate object.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Var {
    X1,
    X2,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X1 => Var::X2,
            Var::X2 => Var::X1,
        }
    }
}

/// Graded lex comparison of exponent pairs with x1 > x2.
pub fn grlex_cmp(a: &(u32, u32), b: &(u32, u32)) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

/// Sparse bivariate polynomial keyed by (e1, e2).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly<F: Field> {
    terms: BTreeMap<(u32, u32), F>,
}

impl<F: Field> Default for BiPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> BiPoly<F> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: F, e1: u32, e2: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e1, e2), c);
        }
        BiPoly { terms }
    }

    pub fn x1() -> Self {
        Self::monomial(F::one(), 1, 0)
    }

    pub fn x2() -> Self {
        Self::monomial(F::one(), 0, 1)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X1 => Self::x1(),
            Var::X2 => Self::x2(),
        }
    }

    /// Build from `(coefficient, e1, e2)` triples; repeated exponents add up.
    pub fn from_terms(ts: &[(i64, u32, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, e1, e2) in ts {
            p.add_term((e1, e2), &F::from_i64(c));
        }
        p
    }

    pub fn from_map(map: BTreeMap<(u32, u32), F>) -> Self {
        BiPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Embed a univariate polynomial as a polynomial in `v`.
    pub fn from_uni(p: &UniPoly<F>, v: Var) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let key = match v {
                    Var::X1 => (i as u32, 0),
                    Var::X2 => (0, i as u32),
                };
                terms.insert(key, c.clone());
            }
        }
        BiPoly { terms }
    }

    pub fn add_term(&mut self, e: (u32, u32), c: &F) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&e) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), F> {
        &self.terms
    }

    pub fn coeff(&self, e1: u32, e2: u32) -> F {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree in `v`; 0 for the zero polynomial.
    pub fn deg(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(a, b)| if v == Var::X1 { a } else { b })
            .max()
            .unwrap_or(0)
    }

    pub fn deg_x1(&self) -> u32 {
        self.deg(Var::X1)
    }

    pub fn deg_x2(&self) -> u32 {
        self.deg(Var::X2)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// Leading term under grlex with x1 > x2.
    pub fn grlex_lead(&self) -> Option<((u32, u32), F)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .map(|(e, c)| (*e, c.clone()))
    }

    /// Terms in grlex-descending order.
    pub fn grlex_terms(&self) -> Vec<((u32, u32), F)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(e, a)| (*e, a.mul(c))).collect() }
    }

    /// Make the grlex-leading coefficient 1.
    pub fn normalize_lead(&self) -> Self {
        match self.grlex_lead() {
            Some((_, c)) => self.scale(&c.inv()),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, a1: &F, a2: &F) -> F {
        self.as_poly_in(Var::X1)
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(a1).add(&c.eval(a2)))
    }

    /// Substitute `a` for `v`, leaving a polynomial in the other variable.
    pub fn specialize(&self, v: Var, a: &F) -> UniPoly<F> {
        let other = v.other();
        let coeffs = self.as_poly_in(other);
        UniPoly::new(coeffs.iter().map(|c| c.eval(a)).collect())
    }

    /// View as a polynomial in `v` with coefficients in F[other]; entry i multiplies v^i.
    pub fn as_poly_in(&self, v: Var) -> Vec<UniPoly<F>> {
        if self.is_zero() {
            return Vec::new();
        }
        let n = self.deg(v) as usize;
        let other_n = self.deg(v.other()) as usize;
        let mut raw = vec![vec![F::zero(); other_n + 1]; n + 1];
        for (&(a, b), c) in &self.terms {
            let (i, j) = if v == Var::X1 { (a, b) } else { (b, a) };
            raw[i as usize][j as usize] = c.clone();
        }
        raw.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_poly_in(v: Var, coeffs: &[UniPoly<F>]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (j, a) in c.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let key = if v == Var::X1 { (i as u32, j as u32) } else { (j as u32, i as u32) };
                terms.insert(key, a.clone());
            }
        }
        BiPoly { terms }
    }

    /// Exchange x1 and x2.
    pub fn swap(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    /// The univariate polynomial in `v` when the other variable does not occur.
    pub fn to_uni(&self, v: Var) -> Option<UniPoly<F>> {
        if self.deg(v.other()) > 0 {
            return None;
        }
        let cs = self.as_poly_in(v);
        Some(UniPoly::new(cs.iter().map(|c| c.coeff(0)).collect()))
    }

    /// Σ c_ij · x_other^j · num(x_v)^i · den(x_v)^(e−i), substituting num/den for `v`
    /// homogenized to degree `e` ≥ deg_v.
    pub fn homog_subst(&self, v: Var, num: &UniPoly<F>, den: &UniPoly<F>, e: u32) -> Self {
        let mut acc = Self::zero();
        for (i, c) in self.as_poly_in(v).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sub = &num.pow(i as u32) * &den.pow(e - i as u32);
            let left = BiPoly::from_uni(&sub, v);
            let right = BiPoly::from_uni(c, v.other());
            acc = &acc + &(&left * &right);
        }
        acc
    }

    /// Substitute x2 ↦ x2 + a.
    pub fn shift_x2(&self, a: &F) -> Self {
        let lin = UniPoly::new(vec![a.clone(), F::one()]);
        let e = self.deg_x2();
        self.homog_subst(Var::X2, &lin, &UniPoly::one(), e)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BiPoly<G> {
        BiPoly::from_map(self.terms.iter().map(|(e, c)| (*e, f(c))).collect())
    }

    pub fn from_rat(p: &BiPoly<Rat>) -> Self {
        p.map(|c| F::from_rat(c))
    }

    pub fn to_rat(&self) -> Option<BiPoly<Rat>> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(*e, c.to_rat()?);
        }
        Some(BiPoly { terms })
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.deg(v) > 0
    }
}

impl<F: Field> Add for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn add(self, rhs: Self) -> BiPoly<F> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<F: Field> Sub for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn sub(self, rhs: Self) -> BiPoly<F> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }
}

impl<F: Field> Mul for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn mul(self, rhs: Self) -> BiPoly<F> {
        let mut out = BiPoly::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), &a.mul(b));
            }
        }
        out
    }
}

impl<F: Field> Neg for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn neg(self) -> BiPoly<F> {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type B = BiPoly<Rat>;

    #[test]
    fn degrees_and_lead() {
        let p = B::from_terms(&[(2, 1, 2), (3, 2, 0), (1, 0, 0)]);
        assert_eq!(p.deg_x1(), 2);
        assert_eq!(p.deg_x2(), 2);
        assert_eq!(p.total_degree(), 3);
        assert_eq!(p.grlex_lead().unwrap().0, (1, 2));
        assert_eq!(p.eval(&rat(1), &rat(2)), rat(12));
        assert_eq!(p.specialize(Var::X2, &rat(1)), UniPoly::from_ints(&[1, 2, 3]));
    }

    #[test]
    fn shift_matches_eval() {
        let p = B::from_terms(&[(1, 1, 1), (2, 0, 2)]);
        let s = p.shift_x2(&rat(3));
        assert_eq!(s.eval(&rat(2), &rat(5)), p.eval(&rat(2), &rat(8)));
    }
}
