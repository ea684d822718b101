use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::poly::BiPoly;
use crate::ratfunc::{BiRat, Mobius};

/// h = (a1x1x2 + a2x2 + b1x1 + b2)/(a3x1x2 + a4x2 + b3x1 + b4) with
/// X = [[a1, a2], [a3, a4]] and Y = [[b1, b2], [b3, b4]], so h(·, x2) = g_{x2·X + Y}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearPencil {
    pub x: Mobius<Rat>,
    pub y: Mobius<Rat>,
}

impl BilinearPencil {
    pub fn to_birat(&self) -> BiRat<Rat> {
        let [[a1, a2], [a3, a4]] = &self.x.m;
        let [[b1, b2], [b3, b4]] = &self.y.m;
        let part = |c11: &Rat, c01: &Rat, c10: &Rat, c00: &Rat| {
            let mut p = BiPoly::zero();
            p.add_term((1, 1), c11);
            p.add_term((0, 1), c01);
            p.add_term((1, 0), c10);
            p.add_term((0, 0), c00);
            p
        };
        BiRat::new(part(a1, a2, b1, b2), part(a3, a4, b3, b4)).expect("pencil denominator is nonzero")
    }
}

/// The eight coefficients of a function of degree at most one in each variable, scaled so
/// that the first nonzero of (b4, a4, b3, a3) is 1.
pub fn extract_pencil(h: &BiRat<Rat>) -> Result<BilinearPencil> {
    if h.deg_x1() > 1 || h.deg_x2() > 1 {
        return Err(Error::NotBilinear);
    }
    let (n, d) = (h.num(), h.den());
    let lead = [d.coeff(0, 0), d.coeff(0, 1), d.coeff(1, 0), d.coeff(1, 1)]
        .into_iter()
        .find(|c| !c.is_zero())
        .expect("nonzero denominator");
    let s = lead.inv();
    let c = |p: &BiPoly<Rat>, e1, e2| p.coeff(e1, e2).mul(&s);
    let pencil = BilinearPencil {
        x: Mobius::new(c(n, 1, 1), c(n, 0, 1), c(d, 1, 1), c(d, 0, 1)),
        y: Mobius::new(c(n, 1, 0), c(n, 0, 0), c(d, 1, 0), c(d, 0, 0)),
    };
    debug_assert_eq!(&pencil.to_birat(), h);
    Ok(pencil)
}

/// Smallest a ∈ {0, 1, 2, …} for which h(x1, x2 + a) has an invertible Y.
pub fn shift_normalize(h: &BiRat<Rat>) -> Result<(Rat, BiRat<Rat>)> {
    if h.deg_x1() == 0 {
        return Err(Error::Domain("h does not depend on x1".into()));
    }
    extract_pencil(h)?;
    // det(aX + Y) is a nonzero polynomial of degree ≤ 2 in a
    for k in 0..3 {
        let a = Rat::from_i64(k);
        let ha = h.shift_x2(&a);
        if extract_pencil(&ha)?.y.is_invertible() {
            return Ok((a, ha));
        }
    }
    unreachable!("det(aX + Y) vanishes at three points only when h is constant in x1")
}
