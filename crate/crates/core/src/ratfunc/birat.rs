use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::poly::{div_exact_bivariate, poly_gcd_bivariate, BiPoly, UniPoly, Var};
use crate::ratfunc::UniRat;

/// Bivariate rational function with coprime parts; the denominator's grlex-leading
/// coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiRat<F: Field> {
    num: BiPoly<F>,
    den: BiPoly<F>,
}

impl<F: Field> BiRat<F> {
    pub fn new(num: BiPoly<F>, den: BiPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd_bivariate(&num, &den)?;
        let (n, d) = if g.is_constant() {
            (num, den)
        } else {
            (div_exact_bivariate(&num, &g).expect("gcd divides"), div_exact_bivariate(&den, &g).expect("gcd divides"))
        };
        let (_, l) = d.grlex_lead().expect("nonzero");
        let l = l.inv();
        Ok(BiRat { num: n.scale(&l), den: d.scale(&l) })
    }

    pub fn from_poly(p: BiPoly<F>) -> Self {
        BiRat { num: p, den: BiPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn x1() -> Self {
        Self::from_poly(BiPoly::x1())
    }

    pub fn x2() -> Self {
        Self::from_poly(BiPoly::x2())
    }

    /// A univariate function placed in variable `v`.
    pub fn from_uni(f: &UniRat<F>, v: Var) -> Self {
        BiRat::new(BiPoly::from_uni(f.num(), v), BiPoly::from_uni(f.den(), v)).expect("nonzero denominator")
    }

    pub fn num(&self) -> &BiPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &BiPoly<F> {
        &self.den
    }

    pub fn deg(&self, v: Var) -> u32 {
        self.num.deg(v).max(self.den.deg(v))
    }

    pub fn deg_x1(&self) -> u32 {
        self.deg(Var::X1)
    }

    pub fn deg_x2(&self) -> u32 {
        self.deg(Var::X2)
    }

    /// max of the total degrees of numerator and denominator.
    pub fn total_degree(&self) -> u32 {
        self.num.total_degree().max(self.den.total_degree())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at (a1, a2); None outside the domain.
    pub fn eval(&self, a1: &F, a2: &F) -> Option<F> {
        let d = self.den.eval(a1, a2);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a1, a2).div(&d))
    }

    /// Substitute `a` for `v`; errors when the denominator vanishes identically.
    pub fn specialize(&self, v: Var, a: &F) -> Result<UniRat<F>> {
        let d = self.den.specialize(v, a);
        if d.is_zero() {
            return Err(Error::PoleLine(a.to_string()));
        }
        UniRat::new(self.num.specialize(v, a), d)
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
        BiRat { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(BiRat { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
        } else {
            Self::new(self.den.pow((-e) as u32), self.num.pow((-e) as u32))
        }
    }

    /// g ∘ self.
    pub fn compose_outer(&self, g: &UniRat<F>) -> Self {
        if g.is_constant() {
            return BiRat::from_poly(BiPoly::constant(g.num().coeff(0)));
        }
        let m = g.degree();
        let n = homog_bi(g.num(), m, &self.num, &self.den);
        let d = homog_bi(g.den(), m, &self.num, &self.den);
        Self::new(n, d).expect("composition of coprime parts has nonzero denominator")
    }

    /// self(l1(x1), l2(x2)).
    pub fn substitute(&self, l1: &UniRat<F>, l2: &UniRat<F>) -> Self {
        let e1 = self.deg_x1();
        let e2 = self.deg_x2();
        let sub = |p: &BiPoly<F>| {
            p.homog_subst(Var::X1, l1.num(), l1.den(), e1)
                .homog_subst(Var::X2, l2.num(), l2.den(), e2)
        };
        Self::new(sub(&self.num), sub(&self.den)).expect("substitution keeps the denominator nonzero")
    }

    /// self(x1, x2 + a).
    pub fn shift_x2(&self, a: &F) -> Self {
        BiRat { num: self.num.shift_x2(a), den: self.den.shift_x2(a) }.renormalized()
    }

    fn renormalized(self) -> Self {
        Self::new(self.num, self.den).unwrap()
    }

    /// Exchange x1 and x2.
    pub fn swap(&self) -> Self {
        BiRat { num: self.num.swap(), den: self.den.swap() }.renormalized()
    }

    /// The univariate function when only `v` occurs.
    pub fn to_uni(&self, v: Var) -> Option<UniRat<F>> {
        let n = self.num.to_uni(v)?;
        let d = self.den.to_uni(v)?;
        UniRat::new(n, d).ok()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BiRat<G> {
        BiRat::new(self.num.map(&f), self.den.map(&f)).expect("nonzero denominator")
    }

    pub fn from_rat(r: &BiRat<Rat>) -> Self {
        BiRat { num: BiPoly::from_rat(&r.num), den: BiPoly::from_rat(&r.den) }
    }

    pub fn to_rat(&self) -> Option<BiRat<Rat>> {
        Some(BiRat { num: self.num.to_rat()?, den: self.den.to_rat()? })
    }
}

/// Σ c_i · n^i · d^(m−i) for a univariate polynomial with coefficients c_i.
fn homog_bi<F: Field>(p: &UniPoly<F>, m: usize, n: &BiPoly<F>, d: &BiPoly<F>) -> BiPoly<F> {
    let mut npow = vec![BiPoly::one()];
    let mut dpow = vec![BiPoly::one()];
    for i in 1..=m {
        npow.push(&npow[i - 1] * n);
        dpow.push(&dpow[i - 1] * d);
    }
    let mut acc = BiPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&npow[i] * &dpow[m - i]).scale(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type B = BiPoly<Rat>;
    type R = BiRat<Rat>;

    fn tangent() -> R {
        R::new(B::from_terms(&[(1, 1, 0), (1, 0, 1)]), B::from_terms(&[(1, 0, 0), (-1, 1, 1)])).unwrap()
    }

    #[test]
    fn normalization() {
        let f = R::new(B::from_terms(&[(1, 2, 1), (-1, 0, 1)]), B::from_terms(&[(1, 1, 0), (-1, 0, 0)])).unwrap();
        assert_eq!(f, R::from_poly(B::from_terms(&[(1, 1, 1), (1, 0, 1)])));
        let t = tangent();
        assert_eq!(t.den().grlex_lead().unwrap(), ((1, 1), rat(1)));
    }

    #[test]
    fn specialization_examples() {
        let t = tangent();
        assert_eq!(t.specialize(Var::X2, &rat(0)).unwrap(), UniRat::x());
        let p = R::from_poly(B::from_terms(&[(1, 1, 1)]));
        assert_eq!(p.specialize(Var::X2, &rat(3)).unwrap(), UniRat::from_poly(UniPoly::from_ints(&[0, 3])));
        let f = R::new(B::from_terms(&[(1, 1, 1), (-1, 0, 0)]), B::from_terms(&[(1, 1, 0), (-1, 0, 1)])).unwrap();
        assert_eq!(f.specialize(Var::X2, &rat(1)).unwrap(), UniRat::constant(rat(1)));
        let pole = R::new(B::one(), B::x2()).unwrap();
        assert!(matches!(pole.specialize(Var::X2, &rat(0)), Err(Error::PoleLine(_))));
    }

    #[test]
    fn outer_and_inner_composition() {
        let h = R::from_poly(B::from_terms(&[(1, 1, 0), (1, 0, 1)]));
        let sq = UniRat::from_poly(UniPoly::from_ints(&[0, 0, 1]));
        let f = h.compose_outer(&sq);
        assert_eq!(f, R::from_poly(B::from_terms(&[(1, 2, 0), (2, 1, 1), (1, 0, 2)])));
        let g = R::from_poly(B::from_terms(&[(1, 1, 1)])).substitute(&sq, &sq);
        assert_eq!(g, R::from_poly(B::from_terms(&[(1, 2, 2)])));
    }
}
