//! Factorization in Q[x]: distinct/equal-degree splitting modulo a prime, Hensel
//! lifting, and recombination of lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Rat;
use crate::poly::UniPoly;

// ---- arithmetic in F_p[x]; coefficient vectors, lowest degree first, trimmed ----

type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn fp_add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let inv = inv_mod(b[db], p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i - db + j] = (r[i - db + j] + p - c * y % p) % p;
        }
        q[i - db] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// (g, s, t) with s·a + t·b = g monic.
fn fp_xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    let sc = |v: &Fp| trim(v.iter().map(|c| c * inv % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_powmod(base: &Fp, mut e: BigInt, m: &Fp, p: u64) -> Fp {
    let mut r: Fp = vec![1];
    let mut b = fp_divrem(base, m, p).1;
    let two = BigInt::from(2);
    while e.is_positive() {
        if e.is_odd() {
            r = fp_divrem(&fp_mul(&r, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e /= &two;
    }
    r
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            let deg = f.len() - 1;
            out.push((f, deg));
            break;
        }
        h = fp_powmod(&h, BigInt::from(p), &f, p);
        let g = fp_gcd(&f, &fp_sub(&h, &x, p), p);
        if g.len() > 1 {
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
            out.push((g, d));
        }
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of irreducibles of degree d (odd p).
fn equal_degree(f: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    let e: BigInt = (BigInt::from(p).pow(d as u32) - 1) / 2;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, e.clone(), f, p), &vec![1], p);
        let g = fp_gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let rest = fp_monic(&fp_divrem(f, &g, p).0, p);
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&rest, d, p, rng));
            return out;
        }
    }
}

// ---- integer polynomials ----

type Zx = Vec<BigInt>;

fn z_trim(mut a: Zx) -> Zx {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn z_mul(a: &Zx, b: &Zx) -> Zx {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_mod(a: &Zx, m: &BigInt) -> Zx {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Symmetric residues in (−m/2, m/2].
fn z_sym(a: &Zx, m: &BigInt) -> Zx {
    let half = m / 2;
    z_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_fp(a: &Zx, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_fp(a: &Fp) -> Zx {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn content(a: &Zx) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &Zx) -> Zx {
    let mut c = content(a);
    if a.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact quotient in Z[x], if b divides a.
fn z_div_exact(a: &Zx, b: &Zx) -> Option<Zx> {
    let db = b.len() - 1;
    if a.len() <= db {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (c, rem) = r[i].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            r[i - db + j] -= &c * y;
        }
        q[i - db] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| z_trim(q))
}

/// Lift f ≡ g·h (mod p), g monic, lc(h) = lc(f), to modulus p^k.
fn hensel_pair(f: &Zx, g: &Fp, h: &Fp, p: u64, k: u32) -> (Zx, Zx) {
    let (one, s, t) = fp_xgcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut g = from_fp(g);
    let mut h = from_fp(h);
    *h.last_mut().unwrap() = f.last().unwrap().clone();
    let mut pk = pb.clone();
    for _ in 1..k {
        let diff = z_trim(f.iter().enumerate().map(|(i, c)| c - z_mul(&g, &h).get(i).cloned().unwrap_or_default()).collect());
        let e: Zx = diff.iter().map(|c| c / &pk).collect();
        let e = to_fp(&e, p);
        let (q, r) = fp_divrem(&fp_mul(&t, &e, p), &to_fp(&g, p), p);
        let c = fp_add(&fp_mul(&s, &e, p), &fp_mul(&q, &to_fp(&h, p), p), p);
        let add = |a: &Zx, d: &Fp| -> Zx {
            let n = a.len().max(d.len());
            z_trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() + &pk * BigInt::from(d.get(i).copied().unwrap_or(0))).collect())
        };
        g = add(&g, &r);
        h = add(&h, &c);
        pk *= &pb;
    }
    let m = pb.pow(k);
    (z_mod(&g, &m), z_mod(&h, &m))
}

/// Lift monic factors of f mod p to monic factors mod p^k (leading coefficient kept apart).
fn hensel_multi(f: &Zx, factors: &[Fp], p: u64, k: u32) -> Vec<Zx> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(k);
        let lc_inv = f.last().unwrap().modpow(&(BigInt::from(p).pow(k - 1) * BigInt::from(p - 1) - 1), &m);
        return vec![z_mod(&f.iter().map(|c| c * &lc_inv).collect(), &m)];
    }
    let g = &factors[0];
    let mut h: Fp = vec![(f.last().unwrap().mod_floor(&BigInt::from(p))).to_u64().unwrap()];
    for q in &factors[1..] {
        h = fp_mul(&h, q, p);
    }
    let (gl, hl) = hensel_pair(f, g, &h, p, k);
    let mut out = vec![gl];
    out.extend(hensel_multi(&hl, &factors[1..], p, k));
    out
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Irreducible factors of a primitive square-free f ∈ Z[x] of positive degree.
fn factor_squarefree_z(f: &Zx) -> Vec<Zx> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    // prime not dividing lc, with f mod p square-free
    let mut p = (1u64 << 30) + 1;
    let fp = loop {
        if is_prime(p) && !(lc.mod_floor(&BigInt::from(p))).is_zero() {
            let fp = to_fp(f, p);
            if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() == 1 {
                break fp_monic(&fp, p);
            }
        }
        p += 2;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut modular: Vec<Fp> = Vec::new();
    for (g, d) in distinct_degree(&fp, p) {
        modular.extend(equal_degree(&g, d, p, &mut rng));
    }
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // coefficient bound for factors of lc·f: 2·|lc|·2^n·‖f‖₁
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * BigInt::from(2).pow(n as u32) * norm1;
    let mut k = 1u32;
    let pb = BigInt::from(p);
    while pb.pow(k) <= bound {
        k += 1;
    }
    let modulus = pb.pow(k);
    let lifted = hensel_multi(f, &modular, p, k);

    let mut remaining: Vec<Zx> = lifted;
    let mut f_rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        for subset in combinations(remaining.len(), size) {
            let lc_rest = f_rest.last().unwrap().clone();
            let mut cand: Zx = vec![lc_rest.clone()];
            for &i in &subset {
                cand = z_mod(&z_mul(&cand, &remaining[i]), &modulus);
            }
            let cand = primitive(&z_sym(&cand, &modulus));
            if let Some(q) = z_div_exact(&f_rest, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f_rest = q;
                remaining = remaining.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g).collect();
            }
            None => size += 1,
        }
    }
    found.push(primitive(&f_rest));
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn to_integer_primitive(p: &UniPoly<Rat>) -> Zx {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let lr = Rat::from_integer(l);
    primitive(&p.coeffs().iter().map(|c| (c * &lr).to_integer()).collect::<Vec<_>>())
}

fn to_monic_rat(z: &Zx) -> UniPoly<Rat> {
    UniPoly::new(z.iter().map(|c| Rat::from_integer(c.clone())).collect()).monic()
}

/// Monic irreducible factors of p over Q with multiplicities, sorted by degree then
/// coefficients. Panics on the zero polynomial; constants give an empty list.
pub fn factor(p: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, u32)> {
    assert!(!p.is_zero(), "factor of the zero polynomial");
    let mut out: Vec<(UniPoly<Rat>, u32)> = Vec::new();
    let mut rest = p.monic();
    while !rest.is_constant() {
        let s = rest.square_free();
        let z = to_integer_primitive(&s);
        for g in factor_squarefree_z(&z) {
            let g = to_monic_rat(&g);
            let mut e = 0;
            while let Some(q) = rest.div_exact(&g) {
                rest = q;
                e += 1;
            }
            match out.iter_mut().find(|(h, _)| *h == g) {
                Some(entry) => entry.1 += e,
                None => out.push((g, e)),
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

/// All monic divisors of p over Q of degree k, each listed once.
pub fn monic_divisors(p: &UniPoly<Rat>, k: usize) -> Vec<UniPoly<Rat>> {
    let fs = factor(p);
    let mut out = Vec::new();
    let mut choice = vec![0u32; fs.len()];
    fn rec(
        i: usize,
        deg: usize,
        k: usize,
        fs: &[(UniPoly<Rat>, u32)],
        choice: &mut Vec<u32>,
        out: &mut Vec<UniPoly<Rat>>,
    ) {
        if deg > k {
            return;
        }
        if i == fs.len() {
            if deg == k {
                let mut d = UniPoly::one();
                for (j, &e) in choice.iter().enumerate() {
                    d = &d * &fs[j].0.pow(e);
                }
                out.push(d);
            }
            return;
        }
        let dg = fs[i].0.deg0();
        for e in 0..=fs[i].1 {
            choice[i] = e;
            rec(i + 1, deg + dg * e as usize, k, fs, choice, out);
        }
        choice[i] = 0;
    }
    rec(0, 0, k, &fs, &mut choice, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(UniPoly<Rat>, u32)]) -> UniPoly<Rat> {
        fs.iter().fold(UniPoly::one(), |acc, (g, e)| &acc * &g.pow(*e))
    }

    #[test]
    fn small_factorizations() {
        let p = UniPoly::from_ints(&[-1, 0, 0, 0, 1]); // x⁴ − 1
        let fs = factor(&p);
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs), p);
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(factor(&p), vec![(p.clone(), 1)]);
        let p = &UniPoly::from_ints(&[1, 2, 1]) * &UniPoly::from_ints(&[3, 0, 2]);
        let fs = factor(&p);
        assert_eq!(fs[0], (UniPoly::from_ints(&[1, 1]), 2));
        assert_eq!(expand(&fs), p.monic());
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x⁴ − 10x² + 1 is irreducible over Q yet splits modulo every prime
        let p = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
        assert_eq!(factor(&p).len(), 1);
        let q = &p * &UniPoly::from_ints(&[5, -3, 7]);
        assert_eq!(factor(&q).len(), 2);
    }

    #[test]
    fn divisors() {
        let p = UniPoly::from_ints(&[0, -1, 0, 1]); // x³ − x
        assert_eq!(monic_divisors(&p, 2).len(), 3);
        let q = UniPoly::from_ints(&[0, 0, 1]);
        assert_eq!(monic_divisors(&q, 1), vec![UniPoly::x()]);
    }
}
