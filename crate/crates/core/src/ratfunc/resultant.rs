use crate::error::{Error, Result};
use crate::field::{Field, Rat, Scalar, WorkingField};
use crate::groebner::field_roots;
use crate::poly::{BiPoly, UniPoly, Var};
use crate::ratfunc::{BiRat, UniRat};

/// Determinant of the Sylvester matrix of p and q with respect to `var`, as a
/// polynomial in the other variable. Column j < n_q holds p's coefficients (leading
/// first) starting at row j; column n_q + j holds q's starting at row j.
pub fn resultant<F: Field>(p: &BiPoly<F>, q: &BiPoly<F>, var: Var) -> Result<UniPoly<F>> {
    let pc = p.as_poly_in(var);
    let qc = q.as_poly_in(var);
    if pc.len() < 2 || qc.len() < 2 {
        return Err(Error::DegreeZero);
    }
    let np = pc.len() - 1;
    let nq = qc.len() - 1;
    let n = np + nq;
    let mut m = vec![vec![UniPoly::<F>::zero(); n]; n];
    for j in 0..nq {
        for i in 0..=np {
            m[j + i][j] = pc[np - i].clone();
        }
    }
    for j in 0..np {
        for i in 0..=nq {
            m[j + i][nq + j] = qc[nq - i].clone();
        }
    }
    Ok(bareiss_det(m))
}

/// Fraction-free determinant over F[y].
fn bareiss_det<F: Field>(mut m: Vec<Vec<UniPoly<F>>>) -> UniPoly<F> {
    let n = m.len();
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// Values a of the `axis` variable at which the specialized numerator and denominator
/// share a nonconstant factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadSpecializations {
    pub values: Vec<Scalar>,
    /// Factor of the candidate polynomial with no roots in the working field.
    pub residual: UniPoly<Rat>,
}

pub fn bad_specializations(f: &BiRat<Rat>, axis: Var, field: &WorkingField) -> Result<BadSpecializations> {
    let main = axis.other();
    if f.deg(main) == 0 {
        return Err(Error::ConstantInMainVariable);
    }
    let (p, q) = (f.num(), f.den());
    let candidates = match (p.deg(main) > 0, q.deg(main) > 0) {
        (true, true) => resultant(p, q, main)?,
        (true, false) => q.to_uni(axis).expect("free of the main variable"),
        (false, _) => p.to_uni(axis).expect("free of the main variable"),
    };
    if candidates.is_zero() {
        return Err(Error::Invalid("numerator and denominator are not coprime".into()));
    }
    let (roots, residual) = field_roots(&candidates, field);
    let ps = p.map(Scalar::from_rat);
    let qs = q.map(Scalar::from_rat);
    let values: Vec<Scalar> = roots
        .into_iter()
        .filter(|a| {
            let g = ps.specialize(axis, a).gcd(&qs.specialize(axis, a));
            !g.is_constant()
        })
        .collect();
    let d = p.total_degree().max(q.total_degree());
    let bound = num_bigint::BigUint::from(d).pow(2 * d);
    assert!(num_bigint::BigUint::from(values.len()) <= bound, "bad specialization bound violated");
    Ok(BadSpecializations { values, residual })
}

/// p1(x1)·q2(x2) − p2(x2)·q1(x1).
pub fn cross_poly<F: Field>(f1: &UniRat<F>, f2: &UniRat<F>) -> BiPoly<F> {
    let p1 = BiPoly::from_uni(f1.num(), Var::X1);
    let q1 = BiPoly::from_uni(f1.den(), Var::X1);
    let p2 = BiPoly::from_uni(f2.num(), Var::X2);
    let q2 = BiPoly::from_uni(f2.den(), Var::X2);
    &(&p1 * &q2) - &(&p2 * &q1)
}

/// Irreducibility of a·x1x2 + b·x1 + c·x2 + d in F[x1, x2].
pub fn is_irreducible_bilinear<F: Field>(p: &BiPoly<F>) -> Result<bool> {
    if p.deg_x1() > 1 || p.deg_x2() > 1 {
        return Err(Error::NotBilinear);
    }
    if p.is_constant() {
        return Ok(false);
    }
    let a = p.coeff(1, 1);
    if a.is_zero() {
        return Ok(true);
    }
    let det = a.mul(&p.coeff(0, 0)).sub(&p.coeff(1, 0).mul(&p.coeff(0, 1)));
    Ok(!det.is_zero())
}
