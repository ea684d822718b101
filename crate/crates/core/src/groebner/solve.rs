use crate::error::{Error, Result};
use crate::field::{Field, Rat, Scalar, WorkingField};
use crate::groebner::{GroebnerBasis, OrderKind};
use crate::poly::{factor, MultiPoly, UniPoly};

/// Roots of p in the working field (distinct, rational ones first in ascending order),
/// and the monic product of the irreducible factors of p without such roots.
pub fn field_roots(p: &UniPoly<Rat>, field: &WorkingField) -> (Vec<Scalar>, UniPoly<Rat>) {
    let mut roots = Vec::new();
    let mut quad = Vec::new();
    let mut residual = UniPoly::one();
    for (g, _) in factor(p) {
        match (g.deg0(), field) {
            (1, _) => roots.push(Scalar::rational(-g.coeff(0))),
            (2, WorkingField::Quadratic(delta)) => {
                // x² + bx + c: roots (−b ± √(b² − 4c))/2
                let b = g.coeff(1);
                let disc = &b * &b - Rat::from_integer(4.into()) * g.coeff(0);
                let s = Scalar::sqrt_of(&disc);
                if s.delta() == delta {
                    let half = Scalar::rational(Rat::new(1.into(), 2.into()));
                    let mb = Scalar::rational(-b);
                    quad.push(mb.add(&s).mul(&half));
                    quad.push(mb.sub(&s).mul(&half));
                } else {
                    residual = &residual * &g;
                }
            }
            _ => residual = &residual * &g,
        }
    }
    roots.sort_by(|a, b| a.re().cmp(b.re()));
    roots.extend(quad);
    (roots, residual)
}

/// Roots in the working field of a polynomial with coefficients in that field.
pub fn scalar_roots(p: &UniPoly<Scalar>, field: &WorkingField) -> (Vec<Scalar>, UniPoly<Rat>) {
    if let Some(r) = p.to_rat() {
        return field_roots(&r, field);
    }
    // p·p̄ has rational coefficients and contains every root of p
    let conj = p.map(|c| c.conj());
    let norm = (p * &conj).to_rat().expect("norm is rational");
    let (cands, residual) = field_roots(&norm, field);
    let roots = cands.into_iter().filter(|a| p.eval(a).is_zero()).collect();
    (roots, residual)
}

/// Solution points of a zero-dimensional lex basis, with the eliminant factors that
/// have no roots in the working field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimSolution {
    /// Coordinates indexed like the variable list.
    pub points: Vec<Vec<Scalar>>,
    pub residues: Vec<UniPoly<Rat>>,
}

impl ZeroDimSolution {
    /// Whether some solutions may lie outside the working field.
    pub fn has_residue(&self) -> bool {
        !self.residues.is_empty()
    }
}

/// Whether every variable has a pure power among the leading monomials.
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    if gb.is_unit() {
        return true;
    }
    let n = gb.order.arity();
    let lms: Vec<Vec<u32>> = (0..gb.generators.len()).map(|i| gb.leading_monomial(i)).collect();
    (0..n).all(|v| lms.iter().any(|m| m[v] > 0 && m.iter().enumerate().all(|(j, &e)| j == v || e == 0)))
}

/// Univariate polynomial in `var` after substituting the known coordinates.
fn specialize(p: &MultiPoly, var: usize, known: &[Option<Scalar>]) -> UniPoly<Scalar> {
    let mut cs: Vec<Scalar> = Vec::new();
    for (e, c) in p.terms() {
        let mut t = Scalar::rational(c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k > 0 && i != var {
                t = t.mul(&known[i].as_ref().expect("coordinate known").pow(k));
            }
        }
        let d = e[var] as usize;
        if cs.len() <= d {
            cs.resize(d + 1, Scalar::zero());
        }
        cs[d] = cs[d].add(&t);
    }
    UniPoly::new(cs)
}

/// All points of V(gb) with coordinates in the working field, by back-substitution
/// from the lowest-priority variable.
pub fn solve_zero_dim(gb: &GroebnerBasis, field: &WorkingField) -> Result<ZeroDimSolution> {
    if gb.order.kind != OrderKind::Lex {
        return Err(Error::NotLex);
    }
    if gb.is_unit() {
        return Ok(ZeroDimSolution { points: Vec::new(), residues: Vec::new() });
    }
    if !is_zero_dimensional(gb) {
        return Err(Error::NotZeroDimensional);
    }
    let n = gb.order.arity();
    let prio = &gb.order.priority;
    let mut partial: Vec<Vec<Option<Scalar>>> = vec![vec![None; n]];
    let mut residues: Vec<UniPoly<Rat>> = Vec::new();
    for level in (0..n).rev() {
        let var = prio[level];
        let lower = &prio[level..];
        let relevant: Vec<&MultiPoly> = gb
            .generators
            .iter()
            .filter(|g| (0..n).all(|v| lower.contains(&v) || !g.uses_var(v)))
            .collect();
        let mut next = Vec::new();
        for pt in partial {
            let mut acc = UniPoly::<Scalar>::zero();
            for g in &relevant {
                acc = acc.gcd(&specialize(g, var, &pt));
                if acc.is_constant() && !acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                return Err(Error::NotZeroDimensional);
            }
            if acc.is_constant() {
                continue;
            }
            let (roots, residual) = scalar_roots(&acc, field);
            if !residual.is_constant() && !residues.contains(&residual) {
                residues.push(residual);
            }
            for r in roots {
                let mut q = pt.clone();
                q[var] = Some(r);
                next.push(q);
            }
        }
        partial = next;
    }
    let points: Vec<Vec<Scalar>> = partial.into_iter().map(|p| p.into_iter().map(|c| c.unwrap()).collect()).collect();
    for pt in &points {
        for g in &gb.generators {
            assert!(g.eval(pt).is_zero(), "back-substituted point fails a generator");
        }
    }
    Ok(ZeroDimSolution { points, residues })
}
