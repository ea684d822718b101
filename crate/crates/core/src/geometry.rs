//! Curve families from value coincidences, incidence and quadruple counts, Bezout and
//! component-sharing checks.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Rat, Scalar, WorkingField};
use crate::groebner::scalar_roots;
use crate::poly::{poly_gcd_bivariate, BiPoly, UniPoly, Var};
use crate::ratfunc::{cross_poly, resultant, BiRat};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CurveVariant {
    /// f(b1, a) = f(b2, a') for the pair (a, a') of x2-values.
    C1,
    /// f(a, b1) = f(a', b2) for the pair (a, a') of x1-values.
    C2,
}

/// A curve in the (b1, b2)-plane. The defining polynomial is zero when both
/// specializations are the same constant, in which case every point is on the curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveSpec {
    pub defining: BiPoly<Scalar>,
    pub f: BiRat<Rat>,
    pub pair: (Scalar, Scalar),
    pub variant: CurveVariant,
}

impl CurveSpec {
    pub fn contains(&self, b1: &Scalar, b2: &Scalar) -> bool {
        self.defining.eval(b1, b2).is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.defining.total_degree()
    }
}

pub fn curve(f: &BiRat<Rat>, variant: CurveVariant, pair: (Scalar, Scalar)) -> Result<CurveSpec> {
    let fs = BiRat::<Scalar>::from_rat(f);
    let axis = match variant {
        CurveVariant::C1 => Var::X2,
        CurveVariant::C2 => Var::X1,
    };
    let u = fs.specialize(axis, &pair.0)?;
    let v = fs.specialize(axis, &pair.1)?;
    Ok(CurveSpec { defining: cross_poly(&u, &v), f: f.clone(), pair, variant })
}

/// Curves for every ordered pair from `set`; pairs hitting a pole line are skipped with a warning.
pub fn curve_family(f: &BiRat<Rat>, variant: CurveVariant, set: &EvalSet) -> Vec<CurveSpec> {
    let mut out = Vec::with_capacity(set.len() * set.len());
    for a in set.elements() {
        for b in set.elements() {
            match curve(f, variant, (a.clone(), b.clone())) {
                Ok(c) => out.push(c),
                Err(e) => log::warn!("skipping curve at ({a}, {b}): {e}"),
            }
        }
    }
    out
}

/// Whether a1 ∈ C1(f, a2) agrees with a2 ∈ C2(f, a1).
pub fn duality_check(f: &BiRat<Rat>, a1: &(Scalar, Scalar), a2: &(Scalar, Scalar)) -> Result<bool> {
    let fs = BiRat::<Scalar>::from_rat(f);
    for (x, y) in [(&a1.0, &a2.0), (&a1.1, &a2.1)] {
        if fs.eval(x, y).is_none() {
            return Err(Error::Domain(format!("({x}, {y}) is a pole")));
        }
    }
    let m1 = curve(f, CurveVariant::C1, a2.clone())?.contains(&a1.0, &a1.1);
    let m2 = curve(f, CurveVariant::C2, a1.clone())?.contains(&a2.0, &a2.1);
    Ok(m1 == m2)
}

/// An ordered list of distinct scalars.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EvalSet {
    elements: Vec<Scalar>,
}

impl EvalSet {
    pub fn new(elements: Vec<Scalar>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(Error::Invalid(format!("repeated element {e}")));
            }
        }
        Ok(EvalSet { elements })
    }

    pub fn from_rats(rs: impl IntoIterator<Item = Rat>) -> Result<Self> {
        Self::new(rs.into_iter().map(Scalar::rational).collect())
    }

    pub fn from_ints(ns: &[i64]) -> Result<Self> {
        Self::from_rats(ns.iter().map(|&n| Rat::from_i64(n)))
    }

    pub fn elements(&self) -> &[Scalar] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Values along the row x1 = a; None at points outside the domain.
fn row_values<F: Field>(h: &BiRat<F>, a: &F, ys: &[F]) -> Vec<Option<F>> {
    let n = h.num().specialize(Var::X1, a);
    let d = h.den().specialize(Var::X1, a);
    if d.is_constant() {
        if d.is_zero() {
            return vec![None; ys.len()];
        }
        let inv = d.coeff(0).inv();
        return ys.iter().map(|y| Some(n.eval(y).mul(&inv))).collect();
    }
    ys.iter()
        .map(|y| {
            let dv = d.eval(y);
            (!dv.is_zero()).then(|| n.eval(y).div(&dv))
        })
        .collect()
}

/// Value counts over a grid, with the number of points outside the domain.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GridStats {
    /// |h(A1, A2)| over the points in the domain.
    pub image: usize,
    /// Σ m_b² over the value multiplicities.
    pub q: u64,
    pub skipped: u64,
}

impl GridStats {
    pub fn evaluated(&self, a1: &EvalSet, a2: &EvalSet) -> u64 {
        (a1.len() * a2.len()) as u64 - self.skipped
    }
}

fn tally<F: Field>(h: &BiRat<F>, xs: &[F], ys: &[F]) -> GridStats {
    let rows: Vec<Vec<Option<F>>> = xs.par_iter().map(|a| row_values(h, a, ys)).collect();
    let mut counts: HashMap<F, u64> = HashMap::new();
    let mut skipped = 0;
    for v in rows.into_iter().flatten() {
        match v {
            Some(v) => *counts.entry(v).or_insert(0) += 1,
            None => skipped += 1,
        }
    }
    GridStats { image: counts.len(), q: counts.values().map(|m| m * m).sum(), skipped }
}

/// Image size and quadruple count over A1 × A2, skipping poles.
pub fn grid_stats(h: &BiRat<Rat>, a1: &EvalSet, a2: &EvalSet) -> GridStats {
    let rational = |s: &EvalSet| s.elements().iter().map(|e| e.to_rat()).collect::<Option<Vec<Rat>>>();
    match (rational(a1), rational(a2)) {
        (Some(xs), Some(ys)) => tally(h, &xs, &ys),
        _ => tally(&BiRat::<Scalar>::from_rat(h), a1.elements(), a2.elements()),
    }
}

fn checked_stats(h: &BiRat<Rat>, a1: &EvalSet, a2: &EvalSet) -> Result<GridStats> {
    let st = grid_stats(h, a1, a2);
    if st.skipped > 0 {
        return Err(Error::Domain(format!("{} grid points are poles", st.skipped)));
    }
    Ok(st)
}

/// |h(A1, A2)|.
pub fn image_size(h: &BiRat<Rat>, a1: &EvalSet, a2: &EvalSet) -> Result<usize> {
    Ok(checked_stats(h, a1, a2)?.image)
}

/// Number of quadruples with h(a1, a2) = h(a1', a2'), as Σ m_b².
pub fn quadruple_count(h: &BiRat<Rat>, a1: &EvalSet, a2: &EvalSet) -> Result<u64> {
    Ok(checked_stats(h, a1, a2)?.q)
}

/// Direct enumeration of all quadruples.
pub fn quadruple_count_brute(h: &BiRat<Rat>, a1: &EvalSet, a2: &EvalSet) -> Result<u64> {
    let hs = BiRat::<Scalar>::from_rat(h);
    let mut vals = Vec::new();
    for x in a1.elements() {
        for y in a2.elements() {
            vals.push(hs.eval(x, y).ok_or_else(|| Error::Domain(format!("({x}, {y}) is a pole")))?);
        }
    }
    let n2 = a2.len();
    let mut q = 0;
    for i in 0..a1.len() {
        for j in 0..n2 {
            for k in 0..a1.len() {
                for l in 0..n2 {
                    if vals[i * n2 + j] == vals[k * n2 + l] {
                        q += 1;
                    }
                }
            }
        }
    }
    Ok(q)
}

/// (|A1|·|A2|)² / Q, a lower bound for |h(A1, A2)|.
pub fn cs_lower_bound(h: &BiRat<Rat>, a1: &EvalSet, a2: &EvalSet) -> Result<Rat> {
    let q = quadruple_count(h, a1, a2)?;
    if q == 0 {
        return Err(Error::Domain("empty grid".into()));
    }
    let n = (a1.len() * a2.len()) as i64;
    Ok(Rat::new((n * n).into(), q.into()))
}

/// Indexed count of pairs (point of A × A', curve) with the point on the curve.
pub fn incidences(a: &EvalSet, a_prime: &EvalSet, curves: &[CurveSpec]) -> u64 {
    curves
        .par_iter()
        .map(|c| {
            let mut n = 0;
            for x in a.elements() {
                for y in a_prime.elements() {
                    if c.contains(x, y) {
                        n += 1;
                    }
                }
            }
            n
        })
        .sum()
}

/// Undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, edges: BTreeSet::new() }
    }

    /// Adds {u, v}; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u != v {
            self.edges.insert((u.min(v), u.max(v)));
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Edge between two curves when their defining polynomials share a factor.
pub fn component_sharing_graph(curves: &[CurveSpec]) -> SimpleGraph {
    let n = curves.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let shared: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(i, j)| {
            poly_gcd_bivariate(&curves[i].defining, &curves[j].defining).map_or(true, |g| !g.is_constant())
        })
        .collect();
    let mut g = SimpleGraph::new(n);
    for (i, j) in shared {
        g.add_edge(i, j);
    }
    g
}

/// Independent classes, at most max degree + 1 of them: each vertex in order takes the
/// lowest class holding none of its neighbours.
pub fn greedy_partition(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for &(a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut class = vec![usize::MAX; g.vertex_count()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.vertex_count() {
        let used: HashSet<usize> = adj[v].iter().map(|&u| class[u]).collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        class[v] = c;
    }
    classes
}

/// Distinct common points with coordinates in `field`, when the curves share no component.
pub fn common_points(c1: &CurveSpec, c2: &CurveSpec, field: &WorkingField) -> Option<Vec<(Scalar, Scalar)>> {
    let (p, q) = (&c1.defining, &c2.defining);
    let g = poly_gcd_bivariate(p, q).ok()?;
    if !g.is_constant() {
        return None;
    }
    let xs: Vec<Scalar> = if p.deg_x2() == 0 || q.deg_x2() == 0 {
        let u = if p.deg_x2() == 0 { p } else { q };
        let u = u.to_uni(Var::X1).expect("free of x2");
        if u.is_constant() {
            return Some(Vec::new());
        }
        scalar_roots(&u, field).0
    } else {
        scalar_roots(&resultant(p, q, Var::X2).ok()?, field).0
    };
    let mut pts = Vec::new();
    for a in xs {
        let s: UniPoly<Scalar> = p.specialize(Var::X1, &a).gcd(&q.specialize(Var::X1, &a));
        if s.is_zero() {
            return None;
        }
        if s.is_constant() {
            continue;
        }
        for b in scalar_roots(&s, field).0 {
            pts.push((a.clone(), b));
        }
    }
    Some(pts)
}

/// |C1 ∩ C2| ≤ deg C1 · deg C2 over the working field, vacuously true with a shared component.
pub fn bezout_check_in(c1: &CurveSpec, c2: &CurveSpec, field: &WorkingField) -> bool {
    match common_points(c1, c2, field) {
        None => true,
        Some(pts) => pts.len() as u64 <= c1.degree() as u64 * c2.degree() as u64,
    }
}

/// Bezout check over the rationals.
pub fn bezout_check(c1: &CurveSpec, c2: &CurveSpec) -> bool {
    bezout_check_in(c1, c2, &WorkingField::Rational)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(num: &[(i64, u32, u32)], den: &[(i64, u32, u32)]) -> BiRat<Rat> {
        BiRat::new(BiPoly::from_terms(num), BiPoly::from_terms(den)).unwrap()
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    fn poly_curve(p: &[(i64, u32, u32)]) -> CurveSpec {
        CurveSpec {
            defining: BiPoly::from_rat(&BiPoly::from_terms(p)),
            f: BiRat::x1(),
            pair: (s(0), s(0)),
            variant: CurveVariant::C1,
        }
    }

    #[test]
    fn curves() {
        let one = [(1, 0, 0)];
        let sum = bi(&[(1, 1, 0), (1, 0, 1)], &one);
        let c = curve(&sum, CurveVariant::C1, (s(0), s(1))).unwrap();
        assert_eq!(c.defining, BiPoly::from_rat(&BiPoly::from_terms(&[(1, 1, 0), (-1, 0, 1), (-1, 0, 0)])));
        let diag = BiPoly::from_rat(&BiPoly::from_terms(&[(1, 1, 0), (-1, 0, 1)]));
        let prod = bi(&[(1, 1, 1)], &one);
        assert_eq!(curve(&prod, CurveVariant::C1, (s(1), s(1))).unwrap().defining, diag);
        let tan = bi(&[(1, 1, 0), (1, 0, 1)], &[(1, 0, 0), (-1, 1, 1)]);
        assert_eq!(curve(&tan, CurveVariant::C1, (s(0), s(0))).unwrap().defining, diag);
        let pole = bi(&[(1, 0, 0)], &[(1, 0, 1)]);
        assert!(curve(&pole, CurveVariant::C1, (s(0), s(1))).is_err());
    }

    #[test]
    fn duality() {
        let one = [(1, 0, 0)];
        let sum = bi(&[(1, 1, 0), (1, 0, 1)], &one);
        assert!(duality_check(&sum, &(s(0), s(1)), &(s(1), s(0))).unwrap());
        let prod = bi(&[(1, 1, 1)], &one);
        assert!(duality_check(&prod, &(s(2), s(3)), &(s(3), s(2))).unwrap());
        assert!(curve(&prod, CurveVariant::C1, (s(3), s(2))).unwrap().contains(&s(2), &s(3)));
    }

    #[test]
    fn counts() {
        let one = [(1, 0, 0)];
        let sum = bi(&[(1, 1, 0), (1, 0, 1)], &one);
        let a = EvalSet::from_ints(&[0, 1]).unwrap();
        assert_eq!(quadruple_count(&sum, &a, &a).unwrap(), 6);
        assert_eq!(quadruple_count_brute(&sum, &a, &a).unwrap(), 6);
        assert_eq!(cs_lower_bound(&sum, &a, &a).unwrap(), Rat::new(8.into(), 3.into()));
        assert_eq!(image_size(&sum, &a, &a).unwrap(), 3);
        let proj = BiRat::x1();
        assert_eq!(quadruple_count(&proj, &a, &a).unwrap(), 8);
        assert_eq!(cs_lower_bound(&proj, &a, &a).unwrap(), Rat::from_i64(2));
        let z = EvalSet::from_ints(&[0]).unwrap();
        assert_eq!(quadruple_count(&sum, &z, &z).unwrap(), 1);
        assert_eq!(cs_lower_bound(&sum, &z, &z).unwrap(), Rat::from_i64(1));
        assert!(EvalSet::from_ints(&[1, 1]).is_err());

        let diag = poly_curve(&[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(incidences(&a, &a, &[diag]), 2);
        assert_eq!(incidences(&a, &a, &[]), 0);
        let fam = curve_family(&sum, CurveVariant::C1, &a);
        assert_eq!(fam.len(), 4);
        assert_eq!(incidences(&a, &a, &fam), 6);
        let pole = bi(&[(1, 0, 0)], &[(1, 0, 1)]);
        assert_eq!(curve_family(&pole, CurveVariant::C1, &a).len(), 1);
    }

    #[test]
    fn sharing_and_partition() {
        let d = poly_curve(&[(1, 1, 0), (-1, 0, 1)]);
        let dd = poly_curve(&[(1, 2, 0), (-1, 0, 2)]);
        let e = poly_curve(&[(1, 1, 0), (1, 0, 1)]);
        let g = component_sharing_graph(&[d.clone(), dd.clone(), e.clone()]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));

        let mut tri = SimpleGraph::new(3);
        tri.add_edge(0, 1);
        tri.add_edge(1, 2);
        tri.add_edge(0, 2);
        assert_eq!(greedy_partition(&tri), vec![vec![0], vec![1], vec![2]]);
        let mut path = SimpleGraph::new(3);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        assert_eq!(greedy_partition(&path), vec![vec![0, 2], vec![1]]);
        assert_eq!(greedy_partition(&SimpleGraph::new(4)).len(), 1);

        assert!(bezout_check(&d, &e));
        assert_eq!(common_points(&d, &e, &WorkingField::Rational).unwrap(), vec![(s(0), s(0))]);
        let para = poly_curve(&[(1, 0, 1), (-1, 2, 0)]);
        let axis = poly_curve(&[(1, 0, 1)]);
        assert_eq!(common_points(&para, &axis, &WorkingField::Rational).unwrap().len(), 1);
        assert!(bezout_check(&para, &axis));
        assert!(common_points(&d, &dd, &WorkingField::Rational).is_none());
        assert!(bezout_check(&d, &dd));
    }
}
