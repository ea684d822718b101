use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::linalg::nullspace;
use crate::poly::{monic_divisors, UniPoly};
use crate::ratfunc::{Mobius, UniRat};
use crate::roots::rational_roots;

/// Largest degree accepted by the decomposition searches.
pub const MAX_DECOMPOSE_DEGREE: usize = 8;

/// f = left ∘ right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Decomposition {
    pub left: UniRat<Rat>,
    pub right: UniRat<Rat>,
}

impl Decomposition {
    pub fn compose(&self) -> UniRat<Rat> {
        self.left.compose(&self.right)
    }

    /// The same decomposition with M∘right and left∘M⁻¹ for a Möbius M.
    pub fn twisted(&self, m: &Mobius<Rat>) -> Decomposition {
        let inv = m.inverse().expect("invertible").to_unirat().expect("degree one");
        Decomposition {
            left: self.left.compose(&inv),
            right: m.apply(&self.right).expect("degree one"),
        }
    }

    /// Rewrite with a monic polynomial right part vanishing at 0 when the class has one.
    pub fn prefer_polynomial(&self) -> Decomposition {
        match polynomial_gauge(&self.right) {
            Some(m) => self.twisted(&m),
            None => self.clone(),
        }
    }

    /// Same class: the right parts differ by a Möbius map on the left.
    pub fn equivalent(&self, other: &Decomposition) -> bool {
        self.right.degree() == other.right.degree()
            && solve_left_component(&self.right, &other.right).is_some_and(|d| d.left.degree() == 1)
    }
}

/// M with M∘h a monic polynomial vanishing at 0, if h has a value whose only
/// preimage is ∞.
pub fn polynomial_gauge(h: &UniRat<Rat>) -> Option<Mobius<Rat>> {
    let one = <Rat as Field>::one();
    let zero = <Rat as Field>::zero();
    let (poly, flip) = if h.is_polynomial() {
        (h.num().scale(&h.den().lc().inv()), Mobius::identity())
    } else {
        let w = h.value_at_infinity()?;
        let r = h.num() - &h.den().scale(&w);
        if r.degree() != Some(0) {
            return None;
        }
        // 1/(h − w) = den/r
        (h.den().scale(&r.lc().inv()), Mobius::new(zero.clone(), one.clone(), one.clone(), w.neg()))
    };
    let lead = poly.lc().inv();
    let shift = Mobius::new(lead.clone(), poly.coeff(0).neg().mul(&lead), zero, one);
    Some(shift.compose(&flip))
}

/// h with f = h ∘ g, from the linear system p_f·Q₂ = q_f·P₂ where P₂/Q₂ is the
/// homogenized h ∘ g.
pub fn solve_left_component(f: &UniRat<Rat>, g: &UniRat<Rat>) -> Option<Decomposition> {
    let (df, dg) = (f.degree(), g.degree());
    if dg == 0 || df % dg != 0 {
        return None;
    }
    let n = df / dg;
    // columns: z_0..z_n then w_0..w_n; rows: coefficients of x^j
    let basis: Vec<UniPoly<Rat>> = (0..=n).map(|i| &g.num().pow(i as u32) * &g.den().pow((n - i) as u32)).collect();
    let pz: Vec<UniPoly<Rat>> = basis.iter().map(|b| &(-f.den()) * b).collect();
    let qw: Vec<UniPoly<Rat>> = basis.iter().map(|b| f.num() * b).collect();
    let rows = pz.iter().chain(&qw).map(|p| p.deg0()).max().unwrap_or(0) + 1;
    let mut a = vec![vec![Rat::zero(); 2 * n + 2]; rows];
    for (i, p) in pz.iter().chain(&qw).enumerate() {
        for (j, c) in p.coeffs().iter().enumerate() {
            a[j][i] = c.clone();
        }
    }
    for v in nullspace(&a, 2 * n + 2) {
        let num = UniPoly::new(v[..=n].to_vec());
        let den = UniPoly::new(v[n + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        let h = UniRat::new(num, den).ok()?;
        if h.compose(g) == *f {
            return Some(Decomposition { left: h, right: g.clone() });
        }
    }
    None
}

/// Small test points 0, 1, −1, 2, −2, ...
pub(crate) fn sample_points() -> impl Iterator<Item = Rat> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(<Rat as Field>::from_i64)
}

/// Points y0, y1 with f(y0), f(y1) finite and f(y0), f(y1), f(∞) pairwise distinct.
fn gauge_points(f: &UniRat<Rat>) -> (Rat, Rat) {
    let at_inf = f.value_at_infinity();
    let mut chosen: Vec<(Rat, Rat)> = Vec::new();
    for y in sample_points() {
        let Some(v) = f.eval(&y) else { continue };
        if at_inf.as_ref() == Some(&v) || chosen.iter().any(|(_, w)| *w == v) {
            continue;
        }
        chosen.push((y, v));
        if chosen.len() == 2 {
            break;
        }
    }
    (chosen[0].0.clone(), chosen[1].0.clone())
}

/// p_f(x)·q_f(y) − p_f(y)·q_f(x), the numerator of f(x) − f(y).
fn level_poly(f: &UniRat<Rat>, y: &Rat) -> UniPoly<Rat> {
    &f.num().scale(&f.den().eval(y)) - &f.den().scale(&f.num().eval(y))
}

/// Right components h of degree n normalized by h(y0) = 0, h(y1) = ∞, h(∞) = 1.
/// Every right component of f of degree n is a Möbius image of exactly one of them.
pub fn gauged_right_components(f: &UniRat<Rat>, n: usize) -> Vec<UniRat<Rat>> {
    let d = f.degree();
    if n == 0 || d == 0 || d % n != 0 {
        return Vec::new();
    }
    let (y0, y1) = gauge_points(f);
    let u0 = level_poly(f, &y0);
    let u1 = level_poly(f, &y1);
    let l0 = UniPoly::linear_root(&y0);
    let l1 = UniPoly::linear_root(&y1);
    let c0: Vec<UniPoly<Rat>> =
        monic_divisors(&u0.div_exact(&l0).expect("y0 is a root"), n - 1).into_iter().map(|p| &p * &l0).collect();
    let c1: Vec<UniPoly<Rat>> =
        monic_divisors(&u1.div_exact(&l1).expect("y1 is a root"), n - 1).into_iter().map(|q| &q * &l1).collect();
    let mut out = Vec::new();
    for p in &c0 {
        for q in &c1 {
            if !p.gcd(q).is_constant() {
                continue;
            }
            let h = UniRat::new(p.clone(), q.clone()).expect("nonzero denominator");
            if solve_left_component(f, &h).is_some() {
                out.push(h);
            }
        }
    }
    out
}

fn check_degree(f: &UniRat<Rat>) -> Result<()> {
    if f.degree() > MAX_DECOMPOSE_DEGREE {
        return Err(Error::CapExceeded(format!("degree {} exceeds {}", f.degree(), MAX_DECOMPOSE_DEGREE)));
    }
    Ok(())
}

/// Some h with f = g ∘ h.
pub fn solve_right_component(f: &UniRat<Rat>, g: &UniRat<Rat>) -> Option<Decomposition> {
    let (df, dg) = (f.degree(), g.degree());
    if dg == 0 || df == 0 || df % dg != 0 {
        return None;
    }
    if dg == 1 {
        let inv = Mobius::from_unirat(g)?.inverse().ok()?.to_unirat().ok()?;
        return Some(Decomposition { left: g.clone(), right: inv.compose(f) });
    }
    for h in gauged_right_components(f, df / dg) {
        let left = solve_left_component(f, &h).expect("gauged components solve").left;
        if let Some(m) = are_equivalent(&left, g) {
            let right = m.to_unirat().expect("invertible").compose(&h);
            debug_assert_eq!(g.compose(&right), *f);
            return Some(Decomposition { left: g.clone(), right });
        }
    }
    None
}

/// One decomposition per equivalence class with both parts of degree ≥ 2.
pub fn enumerate_decompositions(f: &UniRat<Rat>) -> Result<Vec<Decomposition>> {
    check_degree(f)?;
    let d = f.degree();
    let sizes: Vec<usize> = (2..d).filter(|n| d % n == 0).collect();
    let found: Vec<Vec<Decomposition>> = sizes
        .par_iter()
        .map(|&n| {
            gauged_right_components(f, n)
                .into_iter()
                .map(|h| solve_left_component(f, &h).expect("gauged components solve").prefer_polynomial())
                .collect()
        })
        .collect();
    let out: Vec<Decomposition> = found.into_iter().flatten().collect();
    for dec in &out {
        assert_eq!(dec.compose(), *f, "decomposition must recompose");
    }
    assert!(d >= 64 || out.len() <= 1usize << d, "class count exceeds 2^deg");
    Ok(out)
}

/// Points x with g1(x) finite, pairwise distinct values, and few preimages under g2.
fn probe_points(g1: &UniRat<Rat>, count: usize) -> Vec<(Rat, Rat)> {
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    for x in sample_points().take(64) {
        if let Some(v) = g1.eval(&x) {
            if out.iter().all(|(_, w)| *w != v) {
                out.push((x, v));
                if out.len() == count {
                    break;
                }
            }
        }
    }
    out
}

/// Projective preimages of v under g (None is ∞).
fn preimages(g: &UniRat<Rat>, v: &Rat) -> Vec<Option<Rat>> {
    let p = &g.num().clone() - &g.den().scale(v);
    let mut out: Vec<Option<Rat>> = if p.is_zero() { Vec::new() } else { rational_roots(&p).into_iter().map(Some).collect() };
    if g.value_at_infinity().as_ref() == Some(v) {
        out.push(None);
    }
    out
}

/// Every Möbius M with g1 = g2 ∘ g_M, normalized so that the first nonzero entry is 1.
pub fn are_equivalent_all(g1: &UniRat<Rat>, g2: &UniRat<Rat>) -> Vec<Mobius<Rat>> {
    if g1.degree() != g2.degree() || g1.degree() == 0 {
        return Vec::new();
    }
    let probes = probe_points(g1, 3);
    if probes.len() < 3 {
        return Vec::new();
    }
    let pre: Vec<Vec<Option<Rat>>> = probes.iter().map(|(_, v)| preimages(g2, v)).collect();
    let xs = [Some(&probes[0].0), Some(&probes[1].0), Some(&probes[2].0)];
    let mut out: Vec<Mobius<Rat>> = Vec::new();
    for t0 in &pre[0] {
        for t1 in &pre[1] {
            for t2 in &pre[2] {
                let Some(m) = Mobius::from_three_points(xs, [t0.as_ref(), t1.as_ref(), t2.as_ref()]) else {
                    continue;
                };
                let m = normalize_mobius(&m);
                if out.contains(&m) {
                    continue;
                }
                if g2.compose(&m.to_unirat().expect("invertible")) == *g1 {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Scale so the first nonzero entry (row-major) is 1.
pub fn normalize_mobius<F: Field>(m: &Mobius<F>) -> Mobius<F> {
    let first = m.m.iter().flatten().find(|c| !c.is_zero()).expect("nonzero matrix").inv();
    m.scale(&first)
}

/// A Möbius M with g1 = g2 ∘ g_M.
pub fn are_equivalent(g1: &UniRat<Rat>, g2: &UniRat<Rat>) -> Option<Mobius<Rat>> {
    are_equivalent_all(g1, g2).into_iter().next()
}

/// A common left component g of maximal degree with f1 = g ∘ h1 and f2 = g ∘ h2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Domination {
    pub g: UniRat<Rat>,
    pub h1: UniRat<Rat>,
    pub h2: UniRat<Rat>,
}

/// Candidates are f1 itself, the left parts of f1's decompositions (by decreasing
/// degree, in enumeration order), and finally the identity.
pub fn dominating_function(f1: &UniRat<Rat>, f2: &UniRat<Rat>) -> Result<Domination> {
    check_degree(f1)?;
    check_degree(f2)?;
    let mut cands: Vec<Decomposition> = vec![Decomposition { left: f1.clone(), right: UniRat::x() }];
    let mut decs = enumerate_decompositions(f1)?;
    decs.sort_by_key(|d| std::cmp::Reverse(d.left.degree()));
    cands.extend(decs);
    cands.push(Decomposition { left: UniRat::x(), right: f1.clone() });
    for c in cands {
        if f2.degree() % c.left.degree() != 0 {
            continue;
        }
        if let Some(d2) = solve_right_component(f2, &c.left) {
            if let Some(m) = polynomial_gauge(&c.right) {
                let d1 = c.twisted(&m);
                let d2 = d2.twisted(&m);
                return Ok(Domination { g: d1.left, h1: d1.right, h2: d2.right });
            }
            return Ok(Domination { g: c.left, h1: c.right, h2: d2.right });
        }
    }
    unreachable!("the identity dominates every pair")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> UniRat<Rat> {
        UniRat::from_poly(UniPoly::from_ints(cs))
    }

    fn frac(n: &[i64], d: &[i64]) -> UniRat<Rat> {
        UniRat::new(UniPoly::from_ints(n), UniPoly::from_ints(d)).unwrap()
    }

    #[test]
    fn left_components() {
        let sq = poly(&[0, 0, 1]);
        assert_eq!(solve_left_component(&poly(&[1, 0, 0, 0, 1]), &sq).unwrap().left, poly(&[1, 0, 1]));
        assert_eq!(solve_left_component(&sq, &sq).unwrap().left, UniRat::x());
        assert!(solve_left_component(&poly(&[0, 1, 1]), &sq).is_none());
    }

    #[test]
    fn right_components() {
        let sq = poly(&[0, 0, 1]);
        let f = frac(&[1, 0, 2, 0, 1], &[0, 0, 1]);
        let d = solve_right_component(&f, &sq).unwrap();
        assert_eq!(sq.compose(&d.right), f);
        let x4 = poly(&[0, 0, 0, 0, 1]);
        let d = solve_right_component(&x4, &sq).unwrap();
        assert_eq!(sq.compose(&d.right), x4);
        assert!(solve_right_component(&poly(&[0, 0, 0, 1]), &sq).is_none());
    }

    #[test]
    fn enumerations() {
        let x4 = poly(&[0, 0, 0, 0, 1]);
        let decs = enumerate_decompositions(&x4).unwrap();
        let target = Decomposition { left: poly(&[0, 0, 1]), right: poly(&[0, 0, 1]) };
        assert!(decs.iter().any(|d| d.equivalent(&target)));
        assert!(decs.len() <= 16);
        let f = frac(&[1, 0, 2, 0, 1], &[0, 0, 1]);
        let decs = enumerate_decompositions(&f).unwrap();
        let target = Decomposition { left: poly(&[0, 0, 1]), right: frac(&[1, 0, 1], &[0, 1]) };
        assert!(decs.iter().any(|d| d.equivalent(&target)));
        assert!(enumerate_decompositions(&UniRat::x()).unwrap().is_empty());
        assert!(enumerate_decompositions(&poly(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn equivalence() {
        let m = are_equivalent(&poly(&[1, 2, 1]), &poly(&[0, 0, 1])).unwrap();
        let r = m.to_unirat().unwrap();
        assert!(r == poly(&[1, 1]) || r == poly(&[-1, -1]));
        assert!(are_equivalent(&poly(&[0, 0, 1]), &poly(&[0, 0, 0, 1])).is_none());
        let m = are_equivalent(&frac(&[1], &[0, 0, 1]), &poly(&[0, 0, 1])).unwrap();
        let r = m.to_unirat().unwrap();
        assert!(r == frac(&[1], &[0, 1]) || r == frac(&[-1], &[0, 1]));
    }

    #[test]
    fn domination() {
        let d = dominating_function(&poly(&[0, 0, 1]), &poly(&[1, 2, 1])).unwrap();
        assert_eq!(d.g, poly(&[0, 0, 1]));
        assert_eq!(d.g.compose(&d.h2), poly(&[1, 2, 1]));
        let d = dominating_function(&poly(&[0, 0, 1]), &poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(d.g.degree(), 1);
        let x4 = poly(&[0, 0, 0, 0, 1]);
        assert_eq!(dominating_function(&x4, &x4).unwrap().g, x4);
    }
}
