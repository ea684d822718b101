#![allow(dead_code)]

use proptest::prelude::*;
use ratgrowth_core::{ratio, BiPoly, BiRat, Mobius, Rat, UniPoly, UniRat};

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=6, 1i64..=4, any::<bool>()).prop_map(|(n, d, s)| ratio(if s { n } else { -n }, d))
}

pub fn int_coeff() -> impl Strategy<Value = i64> {
    -4i64..=4
}

/// Polynomials of degree ≤ d with small integer coefficients (possibly zero).
pub fn uni_poly(d: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(int_coeff(), d + 1).prop_map(|cs| UniPoly::from_ints(&cs))
}

/// Polynomials of exact degree d.
pub fn uni_poly_exact(d: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    (prop::collection::vec(int_coeff(), d), (1i64..=3, any::<bool>())).prop_map(|(mut cs, (l, s))| {
        cs.push(if s { l } else { -l });
        UniPoly::from_ints(&cs)
    })
}

/// Nonconstant rational functions of degree between 1 and d.
pub fn unirat(d: usize) -> impl Strategy<Value = UniRat<Rat>> {
    (uni_poly(d), uni_poly(d))
        .prop_filter_map("nonconstant", |(p, q)| UniRat::new(p, q).ok().filter(|f| !f.is_constant()))
}

/// Invertible Möbius maps with small integer entries.
pub fn mobius() -> impl Strategy<Value = Mobius<Rat>> {
    (int_coeff(), int_coeff(), int_coeff(), int_coeff())
        .prop_map(|(a, b, c, d)| Mobius::from_ints(a, b, c, d))
        .prop_filter("invertible", |m| m.is_invertible())
}

/// Bivariate polynomials with total degree ≤ d.
pub fn bi_poly(d: u32) -> impl Strategy<Value = BiPoly<Rat>> {
    let exps: Vec<(u32, u32)> = (0..=d).flat_map(|i| (0..=d - i).map(move |j| (i, j))).collect();
    let n = exps.len();
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => int_coeff()], n).prop_map(move |cs| {
        let ts: Vec<(i64, u32, u32)> = cs.iter().zip(&exps).map(|(&c, &(i, j))| (c, i, j)).collect();
        BiPoly::from_terms(&ts)
    })
}

/// Rational functions of total degree ≤ d depending on both variables.
pub fn birat(d: u32) -> impl Strategy<Value = BiRat<Rat>> {
    (bi_poly(d), bi_poly(d)).prop_filter_map("both variables", |(p, q)| {
        BiRat::new(p, q).ok().filter(|f| f.deg_x1() > 0 && f.deg_x2() > 0)
    })
}

/// Bilinear functions (a x1 x2 + b x1 + c x2 + d)/(e x1 x2 + f x1 + g x2 + h) in both variables.
pub fn bilinear() -> impl Strategy<Value = BiRat<Rat>> {
    (prop::collection::vec(int_coeff(), 4), prop::collection::vec(int_coeff(), 4)).prop_filter_map(
        "bilinear in both variables",
        |(n, d)| {
            let p = BiPoly::from_terms(&[(n[0], 1, 1), (n[1], 1, 0), (n[2], 0, 1), (n[3], 0, 0)]);
            let q = BiPoly::from_terms(&[(d[0], 1, 1), (d[1], 1, 0), (d[2], 0, 1), (d[3], 0, 0)]);
            BiRat::new(p, q).ok().filter(|f| f.deg_x1() == 1 && f.deg_x2() == 1)
        },
    )
}
