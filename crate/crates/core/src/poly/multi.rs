use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::field::{Field, Rat};

/// Sparse multivariate polynomial over Q with named variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], &c);
        p
    }

    pub fn var(vars: &Arc<Vec<String>>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Rat::one())
    }

    pub fn monomial(vars: &Arc<Vec<String>>, e: Vec<u32>, c: Rat) -> Self {
        assert_eq!(e.len(), vars.len(), "exponent arity");
        let mut p = Self::zero(vars);
        p.add_term(e, &c);
        p
    }

    pub fn from_terms(vars: &Arc<Vec<String>>, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity");
            p.add_term(e, &c);
        }
        p
    }

    /// Shared variable list from names.
    pub fn names(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, Rat::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval<F: Field>(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.arity(), "point arity");
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = F::from_rat(c);
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&x.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute a value for variable `i` (the variable stays in the list with exponent 0).
    pub fn substitute(&self, i: usize, value: &Rat) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] = 0;
            out.add_term(e2, &(c * value.pow(k as i32)));
        }
        out
    }

    /// Group terms by the exponents of `which`; the keys are those exponents, the values
    /// polynomials with `which` zeroed out.
    pub fn coefficients_in(&self, which: &[usize]) -> BTreeMap<Vec<u32>, MultiPoly> {
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = which.iter().map(|&i| e[i]).collect();
            let mut rest = e.clone();
            for &i in which {
                rest[i] = 0;
            }
            out.entry(key).or_insert_with(|| Self::zero(&self.vars)).add_term(rest, c);
        }
        out
    }

    /// Re-express over a new variable list; `map[i]` is the new index of old variable i.
    /// Panics if a used variable has no image.
    pub fn rebase(&self, vars: &Arc<Vec<String>>, map: &[Option<usize>]) -> Self {
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    ne[map[i].expect("variable dropped while in use")] += k;
                }
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Univariate view when only variable `i` occurs.
    pub fn to_uni(&self, i: usize) -> Option<crate::poly::UniPoly<Rat>> {
        let mut cs = vec![Rat::zero(); self.terms.keys().map(|e| e[i] as usize).max().unwrap_or(0) + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return None;
            }
            cs[e[i] as usize] = c.clone();
        }
        Some(crate::poly::UniPoly::new(cs))
    }

    fn check_vars(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &rhs.vars) || self.vars == rhs.vars,
            "variable lists differ"
        );
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, &(a * b));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            let neg = crate::field::is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn arithmetic_and_grouping() {
        let v = MultiPoly::names(&["a", "b", "x"]);
        let a = MultiPoly::var(&v, 0);
        let x = MultiPoly::var(&v, 2);
        let p = &(&a * &x) + &(&x * &x);
        let groups = p.coefficients_in(&[2]);
        assert_eq!(groups[&vec![1]], a);
        assert_eq!(groups[&vec![2]], MultiPoly::constant(&v, rat(1)));
        assert_eq!(p.eval(&[rat(2), rat(0), rat(3)]), rat(15));
        assert_eq!(p.to_string(), "a*x + x^2");
    }
}
