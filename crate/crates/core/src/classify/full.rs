use rayon::prelude::*;

use crate::decompose::{gauged_right_components, sample_points, solve_bivariate_lift, solve_left_component, LiftSide};
use crate::error::{Error, Result};
use crate::field::{Rat, Scalar};
use crate::poly::Var;
use crate::ratfunc::{BiRat, UniRat};

use super::bilinear::{classify_bilinear, verify_form};
use super::{Mode, SpecialForm, SpecialKind};

/// Caps for the search f = ġ(ḣ(l̇1(x1), l̇2(x2))).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassifyBounds {
    /// Largest accepted deg_{x1} f and deg_{x2} f.
    pub max_degree: u32,
    /// Largest deg ġ.
    pub max_outer: usize,
    /// Largest deg l̇1 and deg l̇2.
    pub max_inner: usize,
}

impl Default for ClassifyBounds {
    fn default() -> Self {
        ClassifyBounds { max_degree: 6, max_outer: 2, max_inner: 2 }
    }
}

/// A specialization f(x1, b) of full x1-degree.
fn generic_slice(f: &BiRat<Rat>) -> UniRat<Rat> {
    let d1 = f.deg_x1() as usize;
    sample_points()
        .find_map(|b| f.specialize(Var::X2, &b).ok().filter(|fb| fb.degree() == d1))
        .expect("finitely many specializations drop degree")
}

/// Candidates for l̇ of degree n, one per Möbius class.
fn inner_candidates(f: &BiRat<Rat>, n: usize) -> Vec<UniRat<Rat>> {
    if n == 1 {
        return vec![UniRat::x()];
    }
    gauged_right_components(&generic_slice(f), n)
}

/// f = G(l(x1), x2).
fn lift_x1(f: &BiRat<Rat>, l: &UniRat<Rat>) -> Option<BiRat<Rat>> {
    if l.degree() == 1 {
        return Some(f.clone());
    }
    solve_bivariate_lift(f, l, LiftSide::Inner).ok().flatten()
}

fn try_shape(f: &BiRat<Rat>, m: usize, n1: usize, n2: usize, mode: Mode) -> Option<SpecialForm> {
    let c1 = inner_candidates(f, n1);
    let c2 = inner_candidates(&f.swap(), n2);
    for l1 in &c1 {
        let Some(g1) = lift_x1(f, l1) else { continue };
        for l2 in &c2 {
            let Some(big) = lift_x1(&g1.swap(), l2).map(|b| b.swap()) else { continue };
            if big.deg_x1() as usize != m || big.deg_x2() as usize != m {
                continue;
            }
            // any ġ is Möbius-equivalent to a slice F(·, b) of full degree
            let (g, h) = if m == 1 {
                (UniRat::x(), big)
            } else {
                let g = generic_slice(&big);
                match solve_bivariate_lift(&big, &g, LiftSide::Outer).ok().flatten() {
                    Some(h) => (g, h),
                    None => continue,
                }
            };
            if let Ok(sf) = classify_bilinear(&g, &h, l1, l2, mode) {
                return Some(sf);
            }
        }
    }
    None
}

/// f depends on one variable only: f = ġ∘l̇ with both degrees within bounds.
fn one_sided(f: &BiRat<Rat>, bounds: &ClassifyBounds) -> Option<SpecialForm> {
    let (v, fu) = match f.to_uni(Var::X2) {
        Some(u) if f.deg_x1() == 0 => (Var::X2, u),
        _ => (Var::X1, f.to_uni(Var::X1)?),
    };
    let d = fu.degree();
    let lift = |u: &UniRat<Rat>| UniRat::<Scalar>::from_rat(u);
    if d == 0 {
        return Some(SpecialForm {
            kind: SpecialKind::Additive,
            g: lift(&fu),
            l1: UniRat::zero(),
            l2: UniRat::zero(),
        });
    }
    for n in (1..=bounds.max_inner.min(d)).rev() {
        if d % n != 0 || d / n > bounds.max_outer {
            continue;
        }
        if let Some(l) = gauged_right_components(&fu, n).into_iter().next() {
            let g = solve_left_component(&fu, &l).expect("gauged components solve").left;
            let (l1, l2) = if v == Var::X1 { (lift(&l), UniRat::zero()) } else { (UniRat::zero(), lift(&l)) };
            let sf = SpecialForm { kind: SpecialKind::Additive, g: lift(&g), l1, l2 };
            debug_assert!(verify_form(f, &sf));
            return Some(sf);
        }
    }
    None
}

/// Search shapes (deg ġ, deg l̇1, deg l̇2) in ascending unknown count and return the first
/// verified special form; None means no form exists within the bounds.
pub fn classify_full(f: &BiRat<Rat>, bounds: &ClassifyBounds, mode: Mode) -> Result<Option<SpecialForm>> {
    let (d1, d2) = (f.deg_x1(), f.deg_x2());
    if d1.max(d2) > bounds.max_degree {
        return Err(Error::CapExceeded(format!("degree {} exceeds {}", d1.max(d2), bounds.max_degree)));
    }
    if d1 == 0 || d2 == 0 {
        return Ok(one_sided(f, bounds));
    }
    let (d1, d2) = (d1 as usize, d2 as usize);
    let mut shapes: Vec<(usize, usize, usize)> = (1..=bounds.max_outer)
        .filter(|m| d1 % m == 0 && d2 % m == 0)
        .map(|m| (m, d1 / m, d2 / m))
        .filter(|&(_, n1, n2)| n1 <= bounds.max_inner && n2 <= bounds.max_inner)
        .collect();
    shapes.sort_by_key(|&(m, n1, n2)| (2 * (m + 1) + 2 * (n1 + 1) + 2 * (n2 + 1) + 8, m));
    Ok(shapes.par_iter().find_map_first(|&(m, n1, n2)| try_shape(f, m, n1, n2, mode)))
}
