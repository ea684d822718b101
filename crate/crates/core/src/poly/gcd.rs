//! Content/primitive splitting and bivariate gcd via a primitive remainder sequence.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{BiPoly, UniPoly, Var};

type Coeffs<F> = Vec<UniPoly<F>>;

fn trim<F: Field>(mut v: Coeffs<F>) -> Coeffs<F> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content_of<F: Field>(cs: &[UniPoly<F>]) -> UniPoly<F> {
    let mut g = UniPoly::zero();
    for c in cs {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_constant() {
                break;
            }
        }
    }
    g
}

fn divide_all<F: Field>(cs: &[UniPoly<F>], d: &UniPoly<F>) -> Coeffs<F> {
    cs.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

/// Split `p = content · primitive` where `content` lies in F[other variable] and the
/// primitive part, viewed as a polynomial in `main_var`, has coprime coefficients and a
/// leading coefficient whose own leading coefficient is 1.
pub fn content_primitive<F: Field>(p: &BiPoly<F>, main_var: Var) -> Result<(UniPoly<F>, BiPoly<F>)> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let cs = p.as_poly_in(main_var);
    let g = content_of(&cs);
    let lead = cs.last().expect("nonzero").lc();
    let content = g.scale(&lead);
    let prim = divide_all(&cs, &content);
    Ok((content, BiPoly::from_poly_in(main_var, &prim)))
}

/// Pseudo-remainder of a by b as polynomials in the main variable over F[y].
fn prem<F: Field>(a: &[UniPoly<F>], b: &[UniPoly<F>]) -> Coeffs<F> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Coeffs<F> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Coeffs<F> = r.iter().map(|c| c * lb).collect();
        for (j, bc) in b.iter().enumerate() {
            next[shift + j] = &next[shift + j] - &(&lr * bc);
        }
        r = trim(next);
    }
    r
}

fn primitive<F: Field>(cs: &[UniPoly<F>]) -> Coeffs<F> {
    let g = content_of(cs);
    divide_all(cs, &g)
}

/// Greatest common divisor in F[x1, x2], normalized so the grlex-leading coefficient is 1.
pub fn poly_gcd_bivariate<F: Field>(p: &BiPoly<F>, q: &BiPoly<F>) -> Result<BiPoly<F>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdUndefined);
    }
    if p.is_zero() {
        return Ok(q.normalize_lead());
    }
    if q.is_zero() {
        return Ok(p.normalize_lead());
    }
    let (cp, pp) = content_primitive(p, Var::X1)?;
    let (cq, qq) = content_primitive(q, Var::X1)?;
    let c = cp.gcd(&cq);
    let mut a = pp.as_poly_in(Var::X1);
    let mut b = qq.as_poly_in(Var::X1);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            // primitive of degree 0 in x1: a unit
            a = vec![UniPoly::one()];
            break;
        }
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    let prim = primitive(&a);
    let g = &BiPoly::from_poly_in(Var::X1, &prim) * &BiPoly::from_uni(&c, Var::X2);
    Ok(g.normalize_lead())
}

/// Exact division of bivariate polynomials (None when d does not divide p).
pub fn div_exact_bivariate<F: Field>(p: &BiPoly<F>, d: &BiPoly<F>) -> Option<BiPoly<F>> {
    assert!(!d.is_zero(), "division by zero polynomial");
    if p.is_zero() {
        return Some(BiPoly::zero());
    }
    // long division in x1 over F(x2), with exact divisions in F[x2]
    let dcs = d.as_poly_in(Var::X1);
    let dd = dcs.len() - 1;
    let ld = &dcs[dd];
    let mut r = p.as_poly_in(Var::X1);
    if r.len() < dcs.len() {
        return None;
    }
    let mut q = vec![UniPoly::zero(); r.len() - dd];
    while !r.is_empty() && r.len() > dd {
        let dr = r.len() - 1;
        let c = r[dr].div_exact(ld)?;
        let shift = dr - dd;
        for (j, dc) in dcs.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&c * dc);
        }
        q[shift] = c;
        r = trim(r);
    }
    if !r.is_empty() {
        return None;
    }
    Some(BiPoly::from_poly_in(Var::X1, &q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    type B = BiPoly<Rat>;

    #[test]
    fn gcd_examples() {
        let a = B::from_terms(&[(1, 1, 0), (-1, 0, 1)]);
        let b = B::from_terms(&[(1, 2, 0), (-1, 0, 2)]);
        assert_eq!(poly_gcd_bivariate(&a, &b).unwrap(), a);
        let c = B::from_terms(&[(1, 1, 1), (1, 0, 0)]);
        let d = B::from_terms(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(poly_gcd_bivariate(&c, &d).unwrap(), B::one());
        assert_eq!(poly_gcd_bivariate(&B::zero(), &B::x1()).unwrap(), B::x1());
        assert_eq!(poly_gcd_bivariate(&B::zero(), &B::zero()), Err(Error::GcdUndefined));
    }

    #[test]
    fn content_examples() {
        let p = B::from_terms(&[(1, 1, 1), (1, 0, 1)]);
        let (c, pr) = content_primitive(&p, Var::X1).unwrap();
        assert_eq!(c, UniPoly::from_ints(&[0, 1]));
        assert_eq!(pr, B::from_terms(&[(1, 1, 0), (1, 0, 0)]));
        let p = B::from_terms(&[(2, 1, 2), (4, 0, 2)]);
        let (c, pr) = content_primitive(&p, Var::X1).unwrap();
        assert_eq!(c, UniPoly::from_ints(&[0, 0, 2]));
        assert_eq!(pr, B::from_terms(&[(1, 1, 0), (2, 0, 0)]));
        let p = B::from_terms(&[(1, 2, 0), (1, 1, 0)]);
        let (c, pr) = content_primitive(&p, Var::X1).unwrap();
        assert_eq!(c, UniPoly::one());
        assert_eq!(pr, p);
    }

    #[test]
    fn exact_division() {
        let a = B::from_terms(&[(1, 1, 0), (-1, 0, 1)]);
        let b = B::from_terms(&[(1, 1, 0), (1, 0, 1)]);
        let prod = &a * &b;
        assert_eq!(div_exact_bivariate(&prod, &a).unwrap(), b);
        assert!(div_exact_bivariate(&b, &a).is_none());
    }
}
