use std::cmp::Ordering;

use crate::field::{Field, Rat, Scalar};
use crate::ratfunc::Mobius;

use super::Mode;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum JordanCase {
    /// J = [[a, 1], [0, a]].
    I,
    /// J = diag(a, b).
    II,
    /// J = [[a, −b], [b, a]], real mode only.
    III,
}

/// Z = H·J·H⁻¹.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JordanData {
    pub h: Mobius<Scalar>,
    pub j: Mobius<Scalar>,
    pub case: JordanCase,
    /// tr(Z)² − 4·det(Z).
    pub discriminant: Rat,
}

impl JordanData {
    /// The (a, b) parameters of J.
    pub fn params(&self) -> (Scalar, Scalar) {
        let j = &self.j.m;
        match self.case {
            JordanCase::I => (j[0][0].clone(), j[0][0].clone()),
            JordanCase::II => (j[0][0].clone(), j[1][1].clone()),
            JordanCase::III => (j[0][0].clone(), j[1][0].clone()),
        }
    }
}

pub(crate) fn to_scalar(m: &Mobius<Rat>) -> Mobius<Scalar> {
    let s = |r: &Rat| Scalar::rational(r.clone());
    Mobius::new(s(&m.m[0][0]), s(&m.m[0][1]), s(&m.m[1][0]), s(&m.m[1][1]))
}

/// Matrix with columns u and v.
fn columns(u: (Scalar, Scalar), v: (Scalar, Scalar)) -> Mobius<Scalar> {
    Mobius::new(u.0, v.0, u.1, v.1)
}

pub fn jordan_2x2(z: &Mobius<Rat>, mode: Mode) -> JordanData {
    let [[p, q], [r, s]] = &z.m;
    let tr = z.trace();
    let disc = tr.mul(&tr).sub(&Rat::from_i64(4).mul(&z.det()));
    let half = Scalar::rational(Rat::new(1.into(), 2.into()));
    let sc = |x: &Rat| Scalar::rational(x.clone());
    let (h, j, case) = match disc.cmp(&Rat::from_i64(0)) {
        Ordering::Equal => {
            let a = sc(&tr).mul(&half);
            if q.is_zero() && r.is_zero() {
                (Mobius::identity(), Mobius::new(a.clone(), Scalar::zero(), Scalar::zero(), a), JordanCase::II)
            } else {
                // N = Z − aI is nilpotent of rank one; v2 ∉ ker N and H = [N v2 | v2]
                let n = to_scalar(z).sub(&Mobius::identity().scale(&a));
                let v2 = if !q.is_zero() || !n.m[1][1].is_zero() {
                    (Scalar::zero(), Scalar::one())
                } else {
                    (Scalar::one(), Scalar::zero())
                };
                let v1 = (
                    n.m[0][0].mul(&v2.0).add(&n.m[0][1].mul(&v2.1)),
                    n.m[1][0].mul(&v2.0).add(&n.m[1][1].mul(&v2.1)),
                );
                (columns(v1, v2), Mobius::new(a.clone(), Scalar::one(), Scalar::zero(), a), JordanCase::I)
            }
        }
        Ordering::Less if mode == Mode::Real => {
            // eigenvalues a ± b·i with b = √(−Δ)/2 real
            let a = sc(&tr).mul(&half);
            let b = Scalar::sqrt_of(&disc.neg()).mul(&half);
            let binv = b.inv();
            let h = Mobius::new(Scalar::one(), sc(p).sub(&a).mul(&binv), Scalar::zero(), sc(r).mul(&binv));
            (h, Mobius::new(a.clone(), b.neg(), b, a), JordanCase::III)
        }
        _ => {
            let root = Scalar::sqrt_of(&disc);
            let l1 = sc(&tr).add(&root).mul(&half);
            let l2 = sc(&tr).sub(&root).mul(&half);
            let (h, l1, l2) = if !q.is_zero() {
                let v = |l: &Scalar| (sc(q), l.sub(&sc(p)));
                (columns(v(&l1), v(&l2)), l1, l2)
            } else if !r.is_zero() {
                let v = |l: &Scalar| (l.sub(&sc(s)), sc(r));
                (columns(v(&l1), v(&l2)), l1, l2)
            } else {
                (Mobius::identity(), sc(p), sc(s))
            };
            (h, Mobius::new(l1, Scalar::zero(), Scalar::zero(), l2), JordanCase::II)
        }
    };
    assert!(h.is_invertible(), "Jordan basis is singular");
    assert_eq!(to_scalar(z).compose(&h), h.compose(&j), "Z·H ≠ H·J");
    JordanData { h, j, case, discriminant: disc }
}
