mod common;

use common::*;
use proptest::prelude::*;
use ratgrowth_core::classify::{
    classify_bilinear, classify_full, extract_pencil, jordan_2x2, shift_normalize, verify_form, ClassifyBounds,
    JordanCase, Mode, SpecialKind,
};
use ratgrowth_core::{BiRat, Mobius, Rat, Scalar, UniRat};

fn mode() -> impl Strategy<Value = Mode> {
    prop::sample::select(vec![Mode::Real, Mode::Complex])
}

fn inner() -> impl Strategy<Value = UniRat<Rat>> {
    unirat(2)
}

fn composite(g: &UniRat<Rat>, h: &BiRat<Rat>, l1: &UniRat<Rat>, l2: &UniRat<Rat>) -> BiRat<Rat> {
    h.substitute(l1, l2).compose_outer(g)
}

fn to_scalar(m: &Mobius<Rat>) -> Mobius<Scalar> {
    let s = |r: &Rat| Scalar::rational(r.clone());
    Mobius::new(s(&m.m[0][0]), s(&m.m[0][1]), s(&m.m[1][0]), s(&m.m[1][1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bilinear_round_trip(g in unirat(2), h in bilinear(), l1 in inner(), l2 in inner(), m in mode()) {
        let f = composite(&g, &h, &l1, &l2);
        let sf = classify_bilinear(&g, &h, &l1, &l2, m).unwrap();
        prop_assert!(verify_form(&f, &sf));
        if m == Mode::Complex {
            prop_assert_ne!(sf.kind, SpecialKind::Tangent);
        }
    }

    #[test]
    fn shift_coherence(g in unirat(2), h in bilinear(), l1 in inner(), l2 in inner()) {
        let f = composite(&g, &h, &l1, &l2);
        let (a, ha) = shift_normalize(&h).unwrap();
        prop_assert!(extract_pencil(&ha).unwrap().y.is_invertible());
        let l2a = l2.sub(&UniRat::constant(a));
        prop_assert_eq!(&composite(&g, &ha, &l1, &l2a), &f);
        let s1 = classify_bilinear(&g, &h, &l1, &l2, Mode::Real).unwrap();
        let s2 = classify_bilinear(&g, &ha, &l1, &l2a, Mode::Real).unwrap();
        prop_assert!(verify_form(&f, &s1));
        prop_assert!(verify_form(&f, &s2));
        prop_assert_eq!(s1.kind, s2.kind);
    }

    #[test]
    fn pencil_round_trip(h in bilinear()) {
        prop_assert_eq!(&extract_pencil(&h).unwrap().to_birat(), &h);
    }

    #[test]
    fn jordan_soundness(z in mobius(), m in mode()) {
        let jd = jordan_2x2(&z, m);
        let zs = to_scalar(&z);
        prop_assert!(jd.h.is_invertible());
        prop_assert_eq!(zs.compose(&jd.h), jd.h.compose(&jd.j));
        if m == Mode::Complex {
            prop_assert_ne!(jd.case, JordanCase::III);
        }
        if jd.case == JordanCase::III {
            prop_assert!(jd.discriminant < Rat::from_integer(0.into()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn kind_is_mobius_invariant(
        g in unirat(2), h in bilinear(), l1 in inner(), l2 in inner(),
        m0 in mobius(), m1 in mobius(), m2 in mobius(), mode in mode(),
    ) {
        let base = classify_bilinear(&g, &h, &l1, &l2, mode).unwrap();
        let g2 = m0.to_unirat().unwrap().compose(&g);
        let l1b = l1.compose(&m1.to_unirat().unwrap());
        let l2b = l2.compose(&m2.to_unirat().unwrap());
        let moved = classify_bilinear(&g2, &h, &l1b, &l2b, mode).unwrap();
        prop_assert_eq!(base.kind, moved.kind);
        prop_assert!(verify_form(&composite(&g2, &h, &l1b, &l2b), &moved));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn full_search_finds_planted_forms(g in unirat(2), h in bilinear(), l1 in inner(), l2 in inner()) {
        let f = composite(&g, &h, &l1, &l2);
        prop_assume!(f.deg_x1() > 0 && f.deg_x2() > 0);
        let sf = classify_full(&f, &ClassifyBounds::default(), Mode::Real).unwrap();
        let sf = sf.expect("a planted form lies within the default bounds");
        prop_assert!(verify_form(&f, &sf));
    }
}

#[test]
fn rotation_cases() {
    let z = Mobius::from_ints(0, 1, -1, 0);
    assert_eq!(jordan_2x2(&z, Mode::Real).case, JordanCase::III);
    assert_eq!(jordan_2x2(&z, Mode::Complex).case, JordanCase::II);
}
