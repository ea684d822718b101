use std::cmp::Ordering;

use crate::decompose::sample_points;
use crate::error::Result;
use crate::field::{Field, Rat, Scalar};
use crate::poly::Var;
use crate::ratfunc::{BiRat, UniRat};

use super::jordan::{jordan_2x2, to_scalar, JordanCase};
use super::pencil::{extract_pencil, shift_normalize};
use super::{Mode, SpecialForm, SpecialKind};

fn lift(f: &UniRat<Rat>) -> UniRat<Scalar> {
    UniRat::from_rat(f)
}

fn additive(g: UniRat<Scalar>, l1: UniRat<Scalar>, l2: UniRat<Scalar>) -> SpecialForm {
    SpecialForm { kind: SpecialKind::Additive, g, l1, l2 }
}

/// Special form of f = ġ(ḣ(l̇1(x1), l̇2(x2))) for ḣ of degree ≤ 1 in each variable.
pub fn classify_bilinear(
    g_dot: &UniRat<Rat>,
    h_dot: &BiRat<Rat>,
    l1_dot: &UniRat<Rat>,
    l2_dot: &UniRat<Rat>,
    mode: Mode,
) -> Result<SpecialForm> {
    extract_pencil(h_dot)?;
    let f = h_dot.substitute(l1_dot, l2_dot).compose_outer(g_dot);
    let form = if h_dot.deg_x1() == 0 || h_dot.deg_x2() == 0 {
        // f depends on one side only
        let (v, l, slot) = if h_dot.deg_x1() == 0 { (Var::X2, l2_dot, 2) } else { (Var::X1, l1_dot, 1) };
        let h = h_dot.to_uni(v).expect("h depends on one variable");
        let g = lift(&g_dot.compose(&h));
        let (l1, l2) = if slot == 1 { (lift(l), UniRat::zero()) } else { (UniRat::zero(), lift(l)) };
        additive(g, l1, l2)
    } else {
        let (a, ha) = shift_normalize(h_dot)?;
        let p = extract_pencil(&ha)?;
        let z = p.y.inverse()?.compose(&p.x);
        let jd = jordan_2x2(&z, mode);
        let yh = to_scalar(&p.y).compose(&jd.h);
        let g = lift(g_dot).compose(&yh.to_unirat()?);
        let l1 = jd.h.inverse()?.to_unirat()?.compose(&lift(l1_dot));
        let inner2 = lift(l2_dot).sub(&UniRat::constant(Scalar::rational(a)));
        let (one, zero) = (Scalar::one(), Scalar::zero());
        let (pa, pb) = jd.params();
        let (kind, hat) = match jd.case {
            JordanCase::I => (SpecialKind::Additive, UniRat::mobius(one.clone(), zero, pa, one)?),
            JordanCase::II => (SpecialKind::Multiplicative, UniRat::mobius(pa, one.clone(), pb, one)?),
            JordanCase::III => (SpecialKind::Tangent, UniRat::mobius(pb.neg(), zero, pa, one)?),
        };
        let l2 = hat.compose(&inner2);
        if l2.is_constant() {
            // scalar Z: f = g(l1·c) does not depend on x2
            let c = l2.num().coeff(0).div(&l2.den().coeff(0));
            additive(g.compose(&UniRat::x().scale(&c)), l1, UniRat::zero())
        } else if kind == SpecialKind::Tangent && l1.num().lc().signum() == Some(Ordering::Less) {
            let flip = UniRat::x().neg();
            SpecialForm { kind, g: g.compose(&flip), l1: l1.neg(), l2: l2.neg() }
        } else {
            SpecialForm { kind, g, l1, l2 }
        }
    };
    assert!(mode == Mode::Real || form.kind != SpecialKind::Tangent);
    assert!(verify_form(&f, &form), "special form fails recomposition");
    Ok(form)
}

/// The inner bivariate function l1 ⋆ l2; None when the tangent denominator vanishes.
fn inner(sf: &SpecialForm) -> Option<BiRat<Scalar>> {
    let l1 = BiRat::from_uni(&sf.l1, Var::X1);
    let l2 = BiRat::from_uni(&sf.l2, Var::X2);
    match sf.kind {
        SpecialKind::Additive => Some(l1.add(&l2)),
        SpecialKind::Multiplicative => Some(l1.mul(&l2)),
        SpecialKind::Tangent => l1.add(&l2).div(&BiRat::constant(Scalar::one()).sub(&l1.mul(&l2))).ok(),
    }
}

impl SpecialForm {
    /// g(l1 ⋆ l2) as a bivariate function.
    pub fn recompose(&self) -> Option<BiRat<Scalar>> {
        Some(inner(self)?.compose_outer(&self.g))
    }
}

/// Exact check of f = g(l1 ⋆ l2), rejecting early on specialized lines x2 = a.
pub fn verify_form(f: &BiRat<Rat>, sf: &SpecialForm) -> bool {
    let Some(inn) = inner(sf) else { return false };
    let fs = BiRat::<Scalar>::from_rat(f);
    let bound = 2 * fs.deg_x2().max(inn.deg_x2() * sf.g.degree() as u32) as usize + 1;
    for a in sample_points().take(bound) {
        let a = Scalar::rational(a);
        let (Ok(fa), Ok(ia)) = (fs.specialize(Var::X2, &a), inn.specialize(Var::X2, &a)) else { continue };
        if ia.is_constant() {
            continue;
        }
        if sf.g.compose(&ia) != fa {
            return false;
        }
    }
    inn.compose_outer(&sf.g) == fs
}
