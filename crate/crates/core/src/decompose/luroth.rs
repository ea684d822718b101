use crate::error::{Error, Result};
use crate::field::Rat;
use crate::poly::{poly_gcd_bivariate, BiPoly, UniPoly, Var};
use crate::ratfunc::{cross_poly, UniRat};

use super::univariate::{are_equivalent_all, solve_left_component};

/// Read a generator from G(x, y) = p(x)q(y) − p(y)q(x): the ratio of two
/// non-proportional coefficients with respect to y.
fn generator_of(g: &BiPoly<Rat>) -> UniRat<Rat> {
    let cs: Vec<UniPoly<Rat>> = g.as_poly_in(Var::X2).into_iter().filter(|c| !c.is_zero()).collect();
    let a = &cs[0];
    let b = cs
        .iter()
        .skip(1)
        .find(|b| a.scale(&b.lc()) != b.scale(&a.lc()))
        .expect("cross polynomial of a nonconstant function");
    UniRat::new(a.clone(), b.clone()).expect("nonzero coefficient")
}

/// h with K(fs) = K(h).
pub fn luroth_generator(fs: &[UniRat<Rat>]) -> Result<UniRat<Rat>> {
    let nonconst: Vec<&UniRat<Rat>> = fs.iter().filter(|f| !f.is_constant()).collect();
    if nonconst.is_empty() {
        return Err(Error::Constant("all inputs"));
    }
    let mut acc = cross_poly(nonconst[0], nonconst[0]);
    for f in &nonconst[1..] {
        acc = poly_gcd_bivariate(&acc, &cross_poly(f, f))?;
    }
    let h = generator_of(&acc);
    let h = if h.degree() == 1 {
        UniRat::x()
    } else {
        match nonconst.iter().find(|f| f.degree() == h.degree()) {
            Some(f) => (*f).clone(),
            None => h,
        }
    };
    for f in &nonconst {
        assert!(solve_left_component(f, &h).is_some(), "inputs must factor through the generator");
    }
    Ok(h)
}

/// f11 = g1∘h1, f12 = g2∘h1, f21 = g1∘h2, f22 = g2∘h2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommonLeft {
    pub g1: UniRat<Rat>,
    pub g2: UniRat<Rat>,
    pub h1: UniRat<Rat>,
    pub h2: UniRat<Rat>,
}

/// Common left components for two pairs of functions whose cross polynomials share a factor.
pub fn common_left_pair(
    f11: &UniRat<Rat>,
    f12: &UniRat<Rat>,
    f21: &UniRat<Rat>,
    f22: &UniRat<Rat>,
) -> Option<CommonLeft> {
    if [f11, f12, f21, f22].iter().any(|f| f.is_constant()) {
        return None;
    }
    let g = poly_gcd_bivariate(&cross_poly(f11, f21), &cross_poly(f12, f22)).ok()?;
    if g.is_constant() {
        return None;
    }
    let h1 = luroth_generator(&[f11.clone(), f12.clone()]).ok()?;
    let g1 = solve_left_component(f11, &h1)?.left;
    let g2 = solve_left_component(f12, &h1)?.left;
    let k = luroth_generator(&[f21.clone(), f22.clone()]).ok()?;
    let g1k = solve_left_component(f21, &k)?.left;
    let g2k = solve_left_component(f22, &k)?.left;
    // g1k = g1 ∘ M and g2k = g2 ∘ M for one Möbius M; then h2 = M ∘ k
    for m in are_equivalent_all(&g1k, &g1) {
        let mr = m.to_unirat().expect("invertible");
        if g2.compose(&mr) == g2k {
            let h2 = mr.compose(&k);
            return Some(CommonLeft { g1, g2, h1, h2 });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn poly(cs: &[i64]) -> UniRat<Rat> {
        UniRat::from_poly(UniPoly::from_ints(cs))
    }

    #[test]
    fn generators() {
        let sq = poly(&[0, 0, 1]);
        assert_eq!(luroth_generator(&[sq.clone(), poly(&[0, 0, 0, 1])]).unwrap(), UniRat::x());
        assert_eq!(luroth_generator(std::slice::from_ref(&sq)).unwrap(), sq);
        let a = UniRat::new(UniPoly::from_ints(&[1, 0, 1]), UniPoly::from_ints(&[0, 0, 1])).unwrap();
        let b = UniRat::new(UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 0, 1])).unwrap();
        let h = luroth_generator(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(h.degree(), 2);
        assert!(solve_left_component(&sq, &h).is_some_and(|d| d.left.degree() == 1));
        assert!(luroth_generator(&[UniRat::constant(Rat::from_i64(2))]).is_err());
    }

    #[test]
    fn common_left() {
        let x = UniRat::x();
        let sq = poly(&[0, 0, 1]);
        let c = common_left_pair(&x, &sq, &x, &sq).unwrap();
        assert_eq!((c.h1.clone(), c.h2.clone(), c.g1.clone(), c.g2.clone()), (x.clone(), x.clone(), x.clone(), sq.clone()));
        assert!(common_left_pair(&x, &sq, &sq, &x).is_none());
        let c = common_left_pair(&sq, &sq, &sq, &sq).unwrap();
        assert_eq!((c.h1, c.h2, c.g1, c.g2), (sq.clone(), sq.clone(), x.clone(), x));
    }
}
