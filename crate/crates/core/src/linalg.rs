//! Exact Gaussian elimination over a field.

use crate::field::Field;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = x.sub(&p.mul(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// One solution of A·x = b (free variables set to zero), or None if inconsistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Some(x)
}

/// Basis of the right null space {x : A·x = 0}.
pub fn nullspace<F: Field>(a: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = m[i][f].neg();
            }
            v
        })
        .collect()
}
