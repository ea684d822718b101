use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::poly::MultiPoly;
use crate::ratfunc::UniRat;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LiftVariant {
    /// Coefficients of g ∘ h, homogeneous of degree deg g in (z, w).
    Right,
    /// Coefficients of h ∘ g, linear in (z, w).
    Left,
}

/// Coefficient polynomials p_j, q_j (j = 0..=n·m) in z₀..z_n, w₀..w_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiftFamily {
    pub variant: LiftVariant,
    pub g: UniRat<Rat>,
    pub n: usize,
    pub p: Vec<MultiPoly>,
    pub q: Vec<MultiPoly>,
}

impl LiftFamily {
    pub fn vars(&self) -> &Arc<Vec<String>> {
        self.p[0].vars()
    }

    /// p_0..p_nm followed by q_0..q_nm.
    pub fn polys(&self) -> Vec<MultiPoly> {
        self.p.iter().chain(&self.q).cloned().collect()
    }

    /// Evaluate at the coefficient vector (a_p, a_q) of a function of degree ≤ n.
    pub fn evaluate(&self, h: &UniRat<Rat>) -> (Vec<Rat>, Vec<Rat>) {
        let (ap, aq) = h.coeff_vector(self.n);
        let point: Vec<Rat> = ap.into_iter().chain(aq).collect();
        (
            self.p.iter().map(|f| f.eval(&point)).collect(),
            self.q.iter().map(|f| f.eval(&point)).collect(),
        )
    }
}

/// Variables z₀..z_n, w₀..w_n.
pub fn lift_vars(n: usize) -> Arc<Vec<String>> {
    Arc::new((0..=n).map(|i| format!("z{i}")).chain((0..=n).map(|i| format!("w{i}"))).collect())
}

/// Polynomial in x with MultiPoly coefficients, lowest degree first.
type XPoly = Vec<MultiPoly>;

fn xmul(a: &XPoly, b: &XPoly, vars: &Arc<Vec<String>>) -> XPoly {
    let mut out = vec![MultiPoly::zero(vars); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn xpow(a: &XPoly, e: usize, vars: &Arc<Vec<String>>) -> XPoly {
    let mut acc = vec![MultiPoly::constant(vars, <Rat as Field>::one())];
    for _ in 0..e {
        acc = xmul(&acc, a, vars);
    }
    acc
}

fn xadd_scaled(acc: &mut XPoly, t: &XPoly, c: &Rat) {
    for (i, x) in t.iter().enumerate() {
        acc[i] = &acc[i] + &x.scale(c);
    }
}

/// Families F⁽¹⁾ (right) and F⁽²⁾ (left) for g and degree bound n.
pub fn lift_family(g: &UniRat<Rat>, n: usize) -> Result<(LiftFamily, LiftFamily)> {
    if g.is_constant() {
        return Err(Error::Constant("g"));
    }
    assert!(n >= 1, "degree parameter must be positive");
    let m = g.degree();
    let vars = lift_vars(n);
    let len = n * m + 1;

    // F⁽¹⁾: Σ b_i P^i Q^(m−i) with P = Σ z_i x^i, Q = Σ w_i x^i; both parts padded to degree m.
    let pz: XPoly = (0..=n).map(|i| MultiPoly::var(&vars, i)).collect();
    let qw: XPoly = (0..=n).map(|i| MultiPoly::var(&vars, n + 1 + i)).collect();
    let ppow: Vec<XPoly> = (0..=m).map(|e| xpow(&pz, e, &vars)).collect();
    let qpow: Vec<XPoly> = (0..=m).map(|e| xpow(&qw, e, &vars)).collect();
    let homog = |b: &[Rat]| -> Vec<MultiPoly> {
        let mut acc = vec![MultiPoly::zero(&vars); len];
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                xadd_scaled(&mut acc, &xmul(&ppow[i], &qpow[m - i], &vars), c);
            }
        }
        acc
    };
    let right = LiftFamily {
        variant: LiftVariant::Right,
        g: g.clone(),
        n,
        p: homog(g.num().coeffs()),
        q: homog(g.den().coeffs()),
    };

    // F⁽²⁾: Σ z_i p^i q^(n−i) and Σ w_i p^i q^(n−i), p/q = g.
    let mut p_side = vec![MultiPoly::zero(&vars); len];
    let mut q_side = vec![MultiPoly::zero(&vars); len];
    for i in 0..=n {
        let basis = &g.num().pow(i as u32) * &g.den().pow((n - i) as u32);
        for (j, c) in basis.coeffs().iter().enumerate() {
            p_side[j] = &p_side[j] + &MultiPoly::var(&vars, i).scale(c);
            q_side[j] = &q_side[j] + &MultiPoly::var(&vars, n + 1 + i).scale(c);
        }
    }
    let left = LiftFamily { variant: LiftVariant::Left, g: g.clone(), n, p: p_side, q: q_side };
    Ok((right, left))
}
