use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::groebner::{MonomialOrder, OrderKind};
use crate::poly::MultiPoly;

type Mono = Vec<u32>;

/// Polynomial as terms sorted by decreasing monomial.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Mono, Rat)>,
}

impl Sorted {
    fn from_multi(p: &MultiPoly, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Mono, Rat)> = p.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sorted { terms }
    }

    fn to_multi(&self, vars: &Arc<Vec<String>>) -> MultiPoly {
        MultiPoly::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.first() {
            if !Field::is_one(c) {
                let inv = c.recip();
                for t in self.terms.iter_mut() {
                    t.1 = &t.1 * &inv;
                }
            }
        }
        self
    }

    /// self − c · x^shift · g[skip..], merging in order.
    fn sub_scaled(&self, c: &Rat, shift: &[u32], g: &Sorted, skip: usize, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = skip;
        let shifted = |j: usize| -> Mono { g.terms[j].0.iter().zip(shift).map(|(a, b)| a + b).collect() };
        let mut gm = if j < g.terms.len() { Some(shifted(j)) } else { None };
        while i < self.terms.len() || gm.is_some() {
            let ord = match (&gm, self.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(m), Some(t)) => order.cmp(&t.0, m),
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let m = gm.take().unwrap();
                    out.push((m, -(c * &g.terms[j].1)));
                    j += 1;
                    gm = if j < g.terms.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let v = &self.terms[i].1 - c * &g.terms[j].1;
                    if !Zero::is_zero(&v) {
                        out.push((self.terms[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    gm = if j < g.terms.len() { Some(shifted(j)) } else { None };
                }
            }
        }
        Sorted { terms: out }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn diff(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full normal form of f modulo `basis` (every term reduced).
fn normal_form(f: &Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut rem: Vec<(Mono, Rat)> = Vec::new();
    let mut f = f.clone();
    while !f.is_zero() {
        let (lm, lc) = f.terms[0].clone();
        match basis.iter().find(|g| divides(g.lm(), &lm)) {
            Some(g) => {
                let c = &lc / &g.terms[0].1;
                let shift = diff(&lm, g.lm());
                let rest = Sorted { terms: f.terms[1..].to_vec() };
                f = rest.sub_scaled(&c, &shift, g, 1, order);
            }
            None => {
                rem.push((lm, lc));
                f.terms.remove(0);
            }
        }
    }
    Sorted { terms: rem }
}

fn s_poly(a: &Sorted, b: &Sorted, order: &MonomialOrder) -> Sorted {
    let l = lcm(a.lm(), b.lm());
    let sa = diff(&l, a.lm());
    let sb = diff(&l, b.lm());
    // both monic: x^sa·a − x^sb·b
    let left = Sorted {
        terms: a.terms[1..]
            .iter()
            .map(|(m, c)| (m.iter().zip(&sa).map(|(x, y)| x + y).collect(), c.clone()))
            .collect(),
    };
    left.sub_scaled(&<Rat as One>::one(), &sb, b, 1, order)
}

/// A Gröbner basis together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn vars(&self) -> Option<&Arc<Vec<String>>> {
        self.generators.first().map(|g| g.vars())
    }

    /// Normal form of p.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        let basis: Vec<Sorted> = self.generators.iter().map(|g| Sorted::from_multi(g, &self.order).monic()).collect();
        normal_form(&Sorted::from_multi(p, &self.order), &basis, &self.order).to_multi(p.vars())
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Leading monomial of a generator.
    pub fn leading_monomial(&self, i: usize) -> Vec<u32> {
        Sorted::from_multi(&self.generators[i], &self.order).lm().clone()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MultiPoly], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let vars = gens.first().ok_or(Error::AllZero)?.vars().clone();
    assert_eq!(order.arity(), vars.len(), "order arity");
    let mut g: Vec<Sorted> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_multi(p, order).monic())
        .collect();
    if g.is_empty() {
        return Err(Error::AllZero);
    }
    let unit = |vars: &Arc<Vec<String>>| GroebnerBasis {
        generators: vec![MultiPoly::constant(vars, <Rat as One>::one())],
        order: order.clone(),
        reduced: true,
    };
    if g.iter().any(|p| p.lm().iter().all(|&e| e == 0)) {
        return Ok(unit(&vars));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let mut best = 0;
        let mut best_lcm = lcm(g[pairs[0].0].lm(), g[pairs[0].1].lm());
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lcm(g[i].lm(), g[j].lm());
            if order.cmp(&l, &best_lcm) == Ordering::Less {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.remove(best);
        if coprime(g[i].lm(), g[j].lm()) {
            continue;
        }
        let pending = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
        let chain = (0..g.len()).any(|k| k != i && k != j && divides(g[k].lm(), &best_lcm) && !pending(i, k) && !pending(j, k));
        if chain {
            continue;
        }
        let r = normal_form(&s_poly(&g[i], &g[j], order), &g, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.lm().iter().all(|&e| e == 0) {
            return Ok(unit(&vars));
        }
        let k = g.len();
        g.push(r);
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    Ok(GroebnerBasis { generators: reduce_basis(g, order, &vars), order: order.clone(), reduced: true })
}

fn reduce_basis(g: Vec<Sorted>, order: &MonomialOrder, vars: &Arc<Vec<String>>) -> Vec<MultiPoly> {
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Sorted> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, q)| {
            j != i && divides(q.lm(), p.lm()) && (q.lm() != p.lm() || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out: Vec<Sorted> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Sorted> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        let head = Sorted { terms: vec![keep[i].terms[0].clone()] };
        let tail = normal_form(&Sorted { terms: keep[i].terms[1..].to_vec() }, &others, order);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        out.push(Sorted { terms }.monic());
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out.iter().map(|p| p.to_multi(vars)).collect()
}

/// Generators free of the first `m` variables of a lex basis.
pub fn elimination_ideal(gb: &GroebnerBasis, m: usize) -> Result<Vec<MultiPoly>> {
    if gb.order.kind != OrderKind::Lex {
        return Err(Error::NotLex);
    }
    let elim = &gb.order.priority[..m];
    Ok(gb
        .generators
        .iter()
        .filter(|g| !g.is_zero() && elim.iter().all(|&v| !g.uses_var(v)))
        .cloned()
        .collect())
}

/// Whether every element's degree is within 2·(d²/2 + d)^(2^(n−1)).
pub fn dube_degree_check(gb: &GroebnerBasis, d: u32, n: u32) -> bool {
    let max_deg = gb.generators.iter().map(|g| g.total_degree()).max().unwrap_or(0);
    if n == 0 {
        return max_deg == 0;
    }
    // bound = 2·(d(d+2)/2)^(2^(n−1)) by repeated squaring; once the base is ≥ 1 the
    // bound only grows, so stop as soon as it covers max_deg.
    let base = BigUint::from(d) * BigUint::from(d + 2);
    let target = BigUint::from(max_deg);
    let mut num = base; // (d(d+2))^(2^k)
    let mut den = BigUint::from(2u32); // 2^(2^k)
    let two = BigUint::from(2u32);
    for _ in 0..n - 1 {
        if num >= den && &two * &num >= &target * &den {
            return true;
        }
        num = &num * &num;
        den = &den * &den;
    }
    // bound = 2·num/den
    &two * &num >= &target * &den
}

/// Generators of ⟨p_i − y_i⟩ ∩ K[y], the Zariski closure of the image of the map.
pub fn image_closure(polys: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let first = polys.first().ok_or(Error::AllZero)?;
    let deg = first.is_homogeneous().ok_or(Error::NotHomogeneous)?;
    if polys.iter().any(|p| p.is_homogeneous() != Some(deg)) {
        return Err(Error::NotHomogeneous);
    }
    let src = first.vars().clone();
    let n = src.len();
    let m = polys.len();
    let mut names: Vec<String> = src.iter().cloned().collect();
    let ynames: Vec<String> = (0..m).map(|i| format!("y{i}")).collect();
    names.extend(ynames.iter().cloned());
    let all = Arc::new(names);
    let embed: Vec<Option<usize>> = (0..n).map(Some).collect();
    let gens: Vec<MultiPoly> = polys
        .iter()
        .enumerate()
        .map(|(i, p)| &p.rebase(&all, &embed) - &MultiPoly::var(&all, n + i))
        .collect();
    let gb = buchberger(&gens, &MonomialOrder::lex(n + m))?;
    let elim = elimination_ideal(&gb, n)?;
    let yvars = Arc::new(ynames);
    let back: Vec<Option<usize>> = (0..n + m).map(|i| i.checked_sub(n)).collect();
    Ok(elim.iter().map(|p| p.rebase(&yvars, &back)).collect())
}
