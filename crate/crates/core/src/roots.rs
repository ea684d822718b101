//! Rational root extraction by Sturm isolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::Rat;
use crate::poly::UniPoly;

/// Integer coefficients with the same sign pattern and roots as `p`.
fn to_integer(p: &UniPoly<Rat>) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let lr = Rat::from_integer(l);
    let mut v: Vec<BigInt> = p.coeffs().iter().map(|c| (c * &lr).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

/// Sign of Σ c_i (n/d)^i for d > 0, via Σ c_i n^i d^(k−i).
fn sign_at(cs: &[BigInt], n: &BigInt, d: &BigInt) -> i8 {
    if cs.is_empty() {
        return 0;
    }
    let k = cs.len() - 1;
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    // Horner in homogeneous form: acc = acc·n + c_i·d^(k−i), iterating from the top
    let mut powers = Vec::with_capacity(k + 1);
    for _ in 0..=k {
        powers.push(dpow.clone());
        dpow *= d;
    }
    for (i, c) in cs.iter().enumerate().rev() {
        acc = acc * n + c * &powers[k - i];
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

struct Sturm {
    chain: Vec<Vec<BigInt>>,
}

impl Sturm {
    fn new(p: &UniPoly<Rat>) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        Sturm { chain: chain.iter().map(to_integer).collect() }
    }

    fn variations(&self, x: &Rat) -> usize {
        let (n, d) = (x.numer(), x.denom());
        let mut last = 0i8;
        let mut count = 0;
        for c in &self.chain {
            let s = sign_at(c, n, d);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }
}

/// All distinct rational roots of a nonzero polynomial, ascending.
pub fn rational_roots(p: &UniPoly<Rat>) -> Vec<Rat> {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut roots = Vec::new();
    let mut cs = p.coeffs().to_vec();
    if cs[0].is_zero() {
        roots.push(Rat::zero());
        let k = cs.iter().position(|c| !c.is_zero()).unwrap();
        cs.drain(0..k);
    }
    let s = UniPoly::new(cs).square_free();
    match s.degree() {
        None | Some(0) => {}
        Some(1) => roots.push(-s.coeff(0) / s.coeff(1)),
        Some(_) => {
            let ints = to_integer(&s);
            let lc = ints.last().unwrap().abs();
            let lcr = Rat::from_integer(lc.clone());
            let mut bound = BigInt::zero();
            for c in &ints[..ints.len() - 1] {
                let q = c.abs().div_ceil(&lc);
                if q > bound {
                    bound = q;
                }
            }
            let bound = Rat::from_integer(bound + 1);
            let sturm = Sturm::new(&s);
            let mut stack = vec![(-bound.clone(), bound)];
            while let Some((l, r)) = stack.pop() {
                let count = sturm.variations(&l) - sturm.variations(&r);
                if count == 0 {
                    continue;
                }
                if count == 1 && (&r - &l) * &lcr < Rat::one() {
                    let k = (&r * &lcr).floor();
                    let cand = k / &lcr;
                    if cand > l && s.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                    continue;
                }
                let m = (&l + &r) / Rat::from_integer(BigInt::from(2));
                stack.push((l, m.clone()));
                stack.push((m, r));
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Number of distinct real roots (Sturm count over the whole line).
pub fn real_root_count(p: &UniPoly<Rat>) -> usize {
    let s = p.square_free();
    if s.is_constant() {
        return 0;
    }
    let sturm = Sturm::new(&s);
    let ints = &sturm.chain;
    // signs at ±∞ come from leading coefficients and degrees
    let mut at_pos = Vec::new();
    let mut at_neg = Vec::new();
    for c in ints {
        let lcs = if c.last().unwrap().is_positive() { 1i8 } else { -1 };
        at_pos.push(lcs);
        at_neg.push(if (c.len() - 1) % 2 == 0 { lcs } else { -lcs });
    }
    let var = |v: &[i8]| v.windows(2).filter(|w| w[0] != w[1]).count();
    var(&at_neg) - var(&at_pos)
}
