use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::linalg::nullspace;
use crate::poly::{BiPoly, Var};
use crate::ratfunc::{BiRat, Mobius, UniRat};

use super::univariate::{are_equivalent_all, gauged_right_components, sample_points, solve_left_component};

/// Bound on the coefficient unknowns of an outer lift.
pub const MAX_LIFT_UNKNOWNS: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LiftSide {
    /// f = g ∘ h.
    Outer,
    /// f = h(g(x1), x2); the returned h uses x1 for the inner slot.
    Inner,
}

/// Points b where f(x1, b) is defined and keeps full x1-degree.
fn generic_points(f: &BiRat<Rat>, count: usize) -> Vec<(Rat, UniRat<Rat>)> {
    let d1 = f.deg_x1() as usize;
    sample_points()
        .filter_map(|b| {
            let fb = f.specialize(Var::X2, &b).ok()?;
            (fb.degree() == d1).then_some((b, fb))
        })
        .take(count)
        .collect()
}

/// Linear conditions N(x1, b) = λ_b·num, D(x1, b) = λ_b·den for the unknown coefficients
/// N_{i,k}, D_{i,k} (x1^i x2^k, i ≤ n1, k ≤ n2) followed by λ's.
struct Interp {
    n1: usize,
    n2: usize,
    rows: Vec<Vec<Rat>>,
    lambdas: usize,
}

impl Interp {
    fn new(n1: usize, n2: usize) -> Self {
        Interp { n1, n2, rows: Vec::new(), lambdas: 0 }
    }

    fn block(&self) -> usize {
        (self.n1 + 1) * (self.n2 + 1)
    }

    fn push(&mut self, b: &Rat, h: &UniRat<Rat>) {
        self.lambdas += 1;
        let lam = self.lambdas - 1;
        let bpow: Vec<Rat> = (0..=self.n2).map(|k| Field::pow(b, k as u32)).collect();
        for (part, poly) in [(0usize, h.num()), (1, h.den())] {
            for i in 0..=self.n1 {
                let mut row = vec![Rat::zero(); 2 * self.block() + 1 + lam];
                for k in 0..=self.n2 {
                    row[part * self.block() + i * (self.n2 + 1) + k] = bpow[k].clone();
                }
                row[2 * self.block() + lam] = poly.coeff(i).neg();
                self.rows.push(row);
            }
        }
    }

    /// Candidate (N, D) from the null space; empty when no solution can have every λ ≠ 0.
    fn solutions(&self) -> Vec<(BiPoly<Rat>, BiPoly<Rat>)> {
        let ncols = 2 * self.block() + self.lambdas;
        let rows: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(ncols, Rat::zero());
                r
            })
            .collect();
        let basis = nullspace(&rows, ncols);
        let lam = 2 * self.block();
        if basis.is_empty() || (lam..ncols).any(|c| basis.iter().all(|v| v[c].is_zero())) {
            return Vec::new();
        }
        let mut vs = basis.clone();
        if basis.len() > 1 {
            // a combination with all λ nonzero exists; try a fixed one
            let mut comb = vec![Rat::zero(); ncols];
            for (k, v) in basis.iter().enumerate() {
                let c = Rat::from_i64(k as i64 + 1);
                for (x, y) in comb.iter_mut().zip(v) {
                    *x = x.add(&y.mul(&c));
                }
            }
            vs.push(comb);
        }
        vs.into_iter()
            .filter(|v| v[lam..].iter().all(|l| !l.is_zero()) && v[..lam].iter().any(|c| !c.is_zero()))
            .map(|v| {
                let mk = |off: usize| {
                    let mut p = BiPoly::zero();
                    for i in 0..=self.n1 {
                        for k in 0..=self.n2 {
                            p.add_term((i as u32, k as u32), &v[off + i * (self.n2 + 1) + k]);
                        }
                    }
                    p
                };
                (mk(0), mk(self.block()))
            })
            .collect()
    }

    fn is_feasible(&self) -> bool {
        let ncols = 2 * self.block() + self.lambdas;
        let rows: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(ncols, Rat::zero());
                r
            })
            .collect();
        let basis = nullspace(&rows, ncols);
        let lam = 2 * self.block();
        !basis.is_empty() && (lam..ncols).all(|c| basis.iter().any(|v| !v[c].is_zero()))
    }
}

/// Specializations needed so that the interpolated (N, D) is determined up to scale.
fn point_count(n2: usize) -> usize {
    2 * n2 + 3
}

/// Every h_b with g ∘ h_b = f_b.
fn all_right_components(fb: &UniRat<Rat>, g: &UniRat<Rat>) -> Vec<UniRat<Rat>> {
    let n = fb.degree() / g.degree();
    let mut out = Vec::new();
    for h in gauged_right_components(fb, n) {
        let left = solve_left_component(fb, &h).expect("gauged components solve").left;
        for m in are_equivalent_all(&left, g) {
            out.push(m.to_unirat().expect("invertible").compose(&h));
        }
    }
    out
}

/// Solve f = g ∘ h (outer) or f = h(g(x1), x2) (inner) for h.
pub fn solve_bivariate_lift(f: &BiRat<Rat>, g: &UniRat<Rat>, side: LiftSide) -> Result<Option<BiRat<Rat>>> {
    if g.is_constant() {
        return Err(Error::Constant("g"));
    }
    match side {
        LiftSide::Inner => Ok(inner_lift(f, g)),
        LiftSide::Outer => outer_lift(f, g),
    }
}

fn inner_lift(f: &BiRat<Rat>, g: &UniRat<Rat>) -> Option<BiRat<Rat>> {
    let m = g.degree();
    let d1 = f.deg_x1() as usize;
    if d1 % m != 0 {
        return None;
    }
    let n1 = d1 / m;
    let n2 = f.deg_x2() as usize;
    let mut interp = Interp::new(n1, n2);
    for (b, fb) in generic_points(f, point_count(n2)) {
        let hb = solve_left_component(&fb, g)?.left;
        interp.push(&b, &hb);
    }
    interp.solutions().into_iter().find_map(|(n, d)| {
        let h = BiRat::new(n, d).ok()?;
        (h.substitute(g, &UniRat::x()) == *f).then_some(h)
    })
}

fn outer_lift(f: &BiRat<Rat>, g: &UniRat<Rat>) -> Result<Option<BiRat<Rat>>> {
    let m = g.degree();
    if m == 1 {
        let inv = Mobius::from_unirat(g).expect("degree one").inverse()?.to_unirat()?;
        return Ok(Some(f.compose_outer(&inv)));
    }
    let (d1, d2) = (f.deg_x1() as usize, f.deg_x2() as usize);
    if d1 % m != 0 || d2 % m != 0 || f.is_constant() {
        return Ok(None);
    }
    if d1 == 0 {
        return Ok(outer_lift(&f.swap(), g)?.map(|h| h.swap()));
    }
    let (n1, n2) = (d1 / m, d2 / m);
    let unknowns = 2 * (n1 + 1) * (n2 + 1);
    if unknowns > MAX_LIFT_UNKNOWNS {
        return Err(Error::CapExceeded(format!("{unknowns} unknowns exceed {MAX_LIFT_UNKNOWNS}")));
    }
    let points = generic_points(f, point_count(n2));
    let mut cands = Vec::with_capacity(points.len());
    for (b, fb) in &points {
        let c = all_right_components(fb, g);
        if c.is_empty() {
            return Ok(None);
        }
        cands.push((b.clone(), c));
    }
    Ok(search(&cands, 0, Interp::new(n1, n2), f, g))
}

fn search(
    cands: &[(Rat, Vec<UniRat<Rat>>)],
    level: usize,
    interp: Interp,
    f: &BiRat<Rat>,
    g: &UniRat<Rat>,
) -> Option<BiRat<Rat>> {
    if !interp.is_feasible() {
        return None;
    }
    if level == cands.len() {
        return interp.solutions().into_iter().find_map(|(n, d)| {
            let h = BiRat::new(n, d).ok()?;
            (h.compose_outer(g) == *f).then_some(h)
        });
    }
    let (b, hs) = &cands[level];
    for h in hs {
        let mut next = Interp { n1: interp.n1, n2: interp.n2, rows: interp.rows.clone(), lambdas: interp.lambdas };
        next.push(b, h);
        if let Some(found) = search(cands, level + 1, next, f, g) {
            return Some(found);
        }
    }
    None
}
