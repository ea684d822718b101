use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::UniPoly;
use crate::ratfunc::UniRat;

/// A 2×2 matrix [[a1, a2], [a3, a4]] acting as g_X(x) = (a1 x + a2)/(a3 x + a4).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mobius<F: Field> {
    pub m: [[F; 2]; 2],
}

impl<F: Field> Mobius<F> {
    pub fn new(a1: F, a2: F, a3: F, a4: F) -> Self {
        Mobius { m: [[a1, a2], [a3, a4]] }
    }

    pub fn identity() -> Self {
        Self::new(F::one(), F::zero(), F::zero(), F::one())
    }

    pub fn from_ints(a1: i64, a2: i64, a3: i64, a4: i64) -> Self {
        Self::new(F::from_i64(a1), F::from_i64(a2), F::from_i64(a3), F::from_i64(a4))
    }

    pub fn det(&self) -> F {
        self.m[0][0].mul(&self.m[1][1]).sub(&self.m[0][1].mul(&self.m[1][0]))
    }

    pub fn trace(&self) -> F {
        self.m[0][0].add(&self.m[1][1])
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// Matrix product self · rhs, so that g_{XY} = g_X ∘ g_Y.
    pub fn compose(&self, rhs: &Self) -> Self {
        let a = &self.m;
        let b = &rhs.m;
        let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        Mobius { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn scale(&self, c: &F) -> Self {
        Mobius { m: [[self.m[0][0].mul(c), self.m[0][1].mul(c)], [self.m[1][0].mul(c), self.m[1][1].mul(c)]] }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].add(&rhs.m[i][j]);
        Mobius { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&F::one().neg()))
    }

    /// Exact inverse matrix.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Invalid("singular matrix".into()));
        }
        let di = d.inv();
        Ok(Mobius::new(
            self.m[1][1].mul(&di),
            self.m[0][1].neg().mul(&di),
            self.m[1][0].neg().mul(&di),
            self.m[0][0].mul(&di),
        ))
    }

    /// The rational function g_X; requires the bottom row to be nonzero.
    pub fn to_unirat(&self) -> Result<UniRat<F>> {
        UniRat::new(
            UniPoly::new(vec![self.m[0][1].clone(), self.m[0][0].clone()]),
            UniPoly::new(vec![self.m[1][1].clone(), self.m[1][0].clone()]),
        )
    }

    /// Matrix of a rational function of degree 1.
    pub fn from_unirat(f: &UniRat<F>) -> Option<Self> {
        if f.degree() != 1 {
            return None;
        }
        Some(Mobius::new(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0)))
    }

    /// compose_uni(g_X, f).
    pub fn apply(&self, f: &UniRat<F>) -> Result<UniRat<F>> {
        Ok(self.to_unirat()?.compose(f))
    }

    /// Action on a projective point; `None` is ∞.
    pub fn eval_proj(&self, x: Option<&F>) -> Option<F> {
        let (num, den) = match x {
            None => (self.m[0][0].clone(), self.m[1][0].clone()),
            Some(x) => (self.m[0][0].mul(x).add(&self.m[0][1]), self.m[1][0].mul(x).add(&self.m[1][1])),
        };
        if den.is_zero() {
            None
        } else {
            Some(num.div(&den))
        }
    }

    /// The Möbius map sending three distinct projective points x_i to y_i.
    pub fn from_three_points(xs: [Option<&F>; 3], ys: [Option<&F>; 3]) -> Option<Self> {
        let a = to_zero_inf_one(xs)?;
        let b = to_zero_inf_one(ys)?;
        Some(b.inverse().ok()?.compose(&a))
    }
}

/// Matrix sending P1, P2, P3 to 0, ∞, 1.
fn to_zero_inf_one<F: Field>(ps: [Option<&F>; 3]) -> Option<Mobius<F>> {
    let hom = |p: Option<&F>| match p {
        Some(x) => (x.clone(), F::one()),
        None => (F::one(), F::zero()),
    };
    let (a1, b1) = hom(ps[0]);
    let (a2, b2) = hom(ps[1]);
    let (a3, b3) = hom(ps[2]);
    let k2 = a3.mul(&b2).sub(&b3.mul(&a2));
    let k1 = a3.mul(&b1).sub(&b3.mul(&a1));
    let m = Mobius::new(k2.mul(&b1), k2.mul(&a1).neg(), k1.mul(&b2), k1.mul(&a2).neg());
    m.is_invertible().then_some(m)
}

pub fn mobius_compose<F: Field>(x: &Mobius<F>, y: &Mobius<F>) -> Mobius<F> {
    x.compose(y)
}

pub fn mobius_apply<F: Field>(x: &Mobius<F>, f: &UniRat<F>) -> Result<UniRat<F>> {
    x.apply(f)
}
