use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::poly::UniPoly;

/// Univariate rational function num/den with coprime parts and monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniRat<F: Field> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> UniRat<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let l = d.lc().inv();
        n = n.scale(&l);
        d = d.scale(&l);
        Ok(UniRat { num: n, den: d })
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        UniRat { num: p, den: UniPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    /// (a x + b)/(c x + d)
    pub fn mobius(a: F, b: F, c: F, d: F) -> Result<Self> {
        Self::new(UniPoly::new(vec![b, a]), UniPoly::new(vec![d, c]))
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    /// max(deg num, deg den); constants have degree 0.
    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at a point of the domain; None at poles.
    pub fn eval(&self, a: &F) -> Option<F> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a).div(&d))
    }

    /// Value at ∞ (None when the value is ∞).
    pub fn value_at_infinity(&self) -> Option<F> {
        let (dn, dd) = (self.num.degree(), self.den.deg0());
        match dn {
            None => Some(F::zero()),
            Some(n) if n > dd => None,
            Some(n) if n == dd => Some(self.num.lc().div(&self.den.lc())),
            _ => Some(F::zero()),
        }
    }

    /// Value at a projective point [u : v]; `None` input means ∞ and `None` output means ∞.
    pub fn eval_proj(&self, a: Option<&F>) -> Option<F> {
        match a {
            None => self.value_at_infinity(),
            Some(a) => self.eval(a),
        }
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &Self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let m = self.degree();
        let n = self.num.homogenize_at(m, &inner.num, &inner.den);
        let d = self.den.homogenize_at(m, &inner.num, &inner.den);
        Self::new(n, d).expect("composition of coprime parts has nonzero denominator")
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(n, &self.den * &rhs.den).unwrap()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> Self {
        UniRat { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, c: &F) -> Self {
        UniRat { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniRat<G> {
        UniRat::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }

    pub fn from_rat(r: &UniRat<Rat>) -> Self {
        UniRat { num: UniPoly::from_rat(&r.num), den: UniPoly::from_rat(&r.den) }
    }

    pub fn to_rat(&self) -> Option<UniRat<Rat>> {
        Some(UniRat { num: self.num.to_rat()?, den: self.den.to_rat()? })
    }

    /// Numerator and denominator coefficient vectors padded to length n + 1.
    pub fn coeff_vector(&self, n: usize) -> (Vec<F>, Vec<F>) {
        let pad = |p: &UniPoly<F>| (0..=n).map(|i| p.coeff(i)).collect();
        (pad(&self.num), pad(&self.den))
    }
}

/// g ∘ h.
pub fn compose_uni<F: Field>(g: &UniRat<F>, h: &UniRat<F>) -> UniRat<F> {
    g.compose(h)
}
