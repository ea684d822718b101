//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see them.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratgrowth::{run_growth, GrowthConfig, GrowthReport};
use ratgrowth_core::classify::{
    classify_bilinear, classify_full, jordan_2x2, verify_form, ClassifyBounds, JordanCase, Mode, SpecialKind,
};
use ratgrowth_core::decompose::{enumerate_decompositions, lift_family};
use ratgrowth_core::geometry::{
    bezout_check, common_points, cs_lower_bound, curve, curve_family, duality_check, greedy_partition, grid_stats,
    image_size, incidences, quadruple_count, quadruple_count_brute, CurveVariant, EvalSet, SimpleGraph,
};
use ratgrowth_core::groebner::{buchberger, dube_degree_check, elimination_ideal, GroebnerBasis, MonomialOrder};
use ratgrowth_core::poly::poly_gcd_bivariate;
use ratgrowth_core::ratfunc::{bad_specializations, resultant};
use ratgrowth_core::roots::rational_roots;
use ratgrowth_core::text::parse_birat;
use ratgrowth_core::{
    rat, ratio, BiPoly, BiRat, Field, Mobius, MultiPoly, Rat, Scalar, UniPoly, UniRat, Var, WorkingField,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---- random inputs ----

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uni_poly(r: &mut ChaCha8Rng, d: usize) -> UniPoly<Rat> {
    let cs: Vec<i64> = (0..=d).map(|_| r.gen_range(-4..=4)).collect();
    UniPoly::from_ints(&cs)
}

fn unirat(r: &mut ChaCha8Rng, d: usize) -> UniRat<Rat> {
    loop {
        if let Ok(f) = UniRat::new(uni_poly(r, d), uni_poly(r, d)) {
            if !f.is_constant() {
                return f;
            }
        }
    }
}

fn unirat_exact(r: &mut ChaCha8Rng, d: usize) -> UniRat<Rat> {
    loop {
        let f = unirat(r, d);
        if f.degree() == d {
            return f;
        }
    }
}

fn bi_poly(r: &mut ChaCha8Rng, d: u32) -> BiPoly<Rat> {
    let mut ts = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            if r.gen_bool(0.5) {
                ts.push((r.gen_range(-4..=4), i, j));
            }
        }
    }
    BiPoly::from_terms(&ts)
}

/// Depends on both variables.
fn birat(r: &mut ChaCha8Rng, d: u32) -> BiRat<Rat> {
    loop {
        if let Ok(f) = BiRat::new(bi_poly(r, d), bi_poly(r, d)) {
            if f.deg_x1() > 0 && f.deg_x2() > 0 {
                return f;
            }
        }
    }
}

fn bilinear(r: &mut ChaCha8Rng) -> BiRat<Rat> {
    loop {
        let mut part = || {
            let c: Vec<i64> = (0..4).map(|_| r.gen_range(-4..=4)).collect();
            BiPoly::from_terms(&[(c[0], 1, 1), (c[1], 1, 0), (c[2], 0, 1), (c[3], 0, 0)])
        };
        let (p, q) = (part(), part());
        if let Ok(f) = BiRat::new(p, q) {
            if f.deg_x1() == 1 && f.deg_x2() == 1 {
                return f;
            }
        }
    }
}

fn eval_set(r: &mut ChaCha8Rng, max: usize) -> EvalSet {
    let n = r.gen_range(1..=max);
    let mut s = BTreeSet::new();
    while s.len() < n {
        s.insert(r.gen_range(-10i64..=10));
    }
    EvalSet::from_ints(&s.into_iter().collect::<Vec<_>>()).unwrap()
}

fn sc(n: i64) -> Scalar {
    Scalar::rational(rat(n))
}

fn growth(f: &str, fam: &str, sizes: &[usize], seed: u64) -> GrowthReport {
    let cfg = GrowthConfig {
        family1: fam.parse().unwrap(),
        family2: fam.parse().unwrap(),
        sizes: sizes.to_vec(),
        seed,
        workers: None,
    };
    run_growth(&parse_birat(f).unwrap(), &cfg).unwrap()
}

fn powers_of_two(lo: usize, hi: usize) -> Vec<usize> {
    (0..).map(|k| lo << k).take_while(|&n| n <= hi).collect()
}

// ---- criteria ----

fn ap_additive() -> Check {
    let start = Instant::now();
    let rep = growth("x1 + x2", "ap:0,1", &powers_of_two(4, 1024), 0);
    let took = start.elapsed();
    for row in &rep.rows {
        ensure!(row.skipped == 0, "n = {}: skipped points", row.n);
        ensure!(row.image == 2 * row.n - 1, "n = {}: image {} != {}", row.n, row.image, 2 * row.n - 1);
    }
    ensure!(took < Duration::from_secs(10), "took {took:?}");
    Ok(())
}

fn gp_multiplicative() -> Check {
    let rep = growth("x1*x2", "gp:1,2", &powers_of_two(4, 256), 0);
    for row in &rep.rows {
        ensure!(row.skipped == 0, "n = {}: skipped points", row.n);
        ensure!(row.image == 2 * row.n - 1, "n = {}: image {} != {}", row.n, row.image, 2 * row.n - 1);
    }
    Ok(())
}

fn tangent_collapse() -> Check {
    let rep = growth("(x1 + x2)/(1 - x1*x2)", "tan:1/2", &powers_of_two(4, 64), 0);
    for row in &rep.rows {
        ensure!(row.skipped == 0, "n = {}: skipped points", row.n);
        ensure!(row.image < 2 * row.n, "n = {}: image {} > {}", row.n, row.image, 2 * row.n - 1);
    }
    Ok(())
}

fn expansion_probe() -> Check {
    let start = Instant::now();
    for seed in 0..5 {
        let rep = growth("x1 + x2^2", "random", &[64, 256], seed);
        let slope = rep.slope.ok_or("no slope")?;
        ensure!(slope.ge(&1.5), "seed {seed}: slope {slope:.3} < 1.5");
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(120), "took {took:?}");
    Ok(())
}

fn quadruple_oracles() -> Check {
    let mut r = rng(5);
    let mut done = 0;
    while done < 50 {
        let h = birat(&mut r, 2);
        let (a1, a2) = (eval_set(&mut r, 12), eval_set(&mut r, 12));
        if grid_stats(&h, &a1, &a2).skipped > 0 {
            continue;
        }
        let q = quadruple_count(&h, &a1, &a2).map_err(|e| e.to_string())?;
        let brute = quadruple_count_brute(&h, &a1, &a2).map_err(|e| e.to_string())?;
        let inc = incidences(&a1, &a1, &curve_family(&h, CurveVariant::C1, &a2));
        ensure!(q == brute && q == inc, "h = {h}: Q {q}, brute {brute}, incidences {inc}");
        done += 1;
    }
    Ok(())
}

fn cauchy_schwarz() -> Check {
    let mut r = rng(6);
    let mut done = 0;
    while done < 100 {
        let h = birat(&mut r, 3);
        let (a1, a2) = (eval_set(&mut r, 10), eval_set(&mut r, 10));
        if grid_stats(&h, &a1, &a2).skipped > 0 {
            continue;
        }
        let bound = cs_lower_bound(&h, &a1, &a2).map_err(|e| e.to_string())?;
        let image = image_size(&h, &a1, &a2).map_err(|e| e.to_string())?;
        ensure!(rat(image as i64) >= bound, "h = {h}: image {image} < {bound}");
        done += 1;
    }
    Ok(())
}

fn duality() -> Check {
    let mut r = rng(7);
    let mut done = 0;
    while done < 200 {
        let f = birat(&mut r, 3);
        let v: Vec<i64> = (0..4).map(|_| r.gen_range(-6..=6)).collect();
        let (b, a) = ((sc(v[0]), sc(v[1])), (sc(v[2]), sc(v[3])));
        let (y1, y2) = (f.eval(&rat(v[0]), &rat(v[2])), f.eval(&rat(v[1]), &rat(v[3])));
        if y1.is_none() || y2.is_none() {
            continue;
        }
        ensure!(duality_check(&f, &b, &a).map_err(|e| e.to_string())?, "f = {f}, {v:?}");
        let on = curve(&f, CurveVariant::C1, a).map_err(|e| e.to_string())?.contains(&b.0, &b.1);
        ensure!(on == (y1 == y2), "f = {f}, {v:?}: membership disagrees with values");
        done += 1;
    }
    Ok(())
}

fn padded(p: &UniPoly<Rat>, n: usize) -> Vec<Rat> {
    (0..=n).map(|i| p.coeff(i)).collect()
}

/// Σ c_i P^i Q^(m−i).
fn homogenized(cs: &[Rat], m: usize, p: &UniPoly<Rat>, q: &UniPoly<Rat>) -> UniPoly<Rat> {
    let mut acc = UniPoly::zero();
    for (i, c) in cs.iter().enumerate().take(m + 1) {
        acc = &acc + &(&p.pow(i as u32) * &q.pow((m - i) as u32)).scale(c);
    }
    acc
}

fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else { return b.iter().all(|x| x.is_zero()) };
    !b[k].is_zero() && {
        let s = b[k].div(&a[k]);
        a.iter().zip(b).all(|(x, y)| x.mul(&s) == *y)
    }
}

fn lifting_identities() -> Check {
    let mut r = rng(8);
    for _ in 0..100 {
        let (g, h) = (unirat(&mut r, 3), unirat(&mut r, 3));
        let (n, m) = (h.degree(), g.degree());
        let (f1, f2) = lift_family(&g, n).map_err(|e| e.to_string())?;
        let (hp, hq) = (UniPoly::new(padded(h.num(), n)), UniPoly::new(padded(h.den(), n)));
        let (p, q) = f1.evaluate(&h);
        let got: Vec<Rat> = p.into_iter().chain(q).collect();
        let want: Vec<Rat> = padded(&homogenized(&padded(g.num(), m), m, &hp, &hq), n * m)
            .into_iter()
            .chain(padded(&homogenized(&padded(g.den(), m), m, &hp, &hq), n * m))
            .collect();
        ensure!(proportional(&got, &want), "g ∘ h mismatch for g = {g}, h = {h}");
        let (p, q) = f2.evaluate(&h);
        let got: Vec<Rat> = p.into_iter().chain(q).collect();
        let want: Vec<Rat> = padded(&homogenized(&padded(h.num(), n), n, g.num(), g.den()), n * m)
            .into_iter()
            .chain(padded(&homogenized(&padded(h.den(), n), n, g.num(), g.den()), n * m))
            .collect();
        ensure!(proportional(&got, &want), "h ∘ g mismatch for g = {g}, h = {h}");
    }
    Ok(())
}

fn decomposition_bound() -> Check {
    let mut r = rng(9);
    for i in 0..50 {
        // half planted composites, half generic functions
        let f = if i % 2 == 0 {
            let a = r.gen_range(2..=3);
            let g = unirat_exact(&mut r, a);
            let h = unirat_exact(&mut r, 2);
            g.compose(&h)
        } else {
            unirat(&mut r, 6)
        };
        let decs = enumerate_decompositions(&f).map_err(|e| e.to_string())?;
        ensure!(decs.len() <= 1 << f.degree(), "f = {f}: {} classes", decs.len());
        for d in &decs {
            ensure!(d.compose() == f, "f = {f}: ({}, {}) does not recompose", d.left, d.right);
        }
        for (k, d) in decs.iter().enumerate() {
            for e in &decs[k + 1..] {
                ensure!(!d.equivalent(e), "f = {f}: repeated class");
            }
        }
        if i % 2 == 0 {
            ensure!(!decs.is_empty(), "f = {f}: planted decomposition missed");
        }
    }
    Ok(())
}

fn bad_specialization_law() -> Check {
    let mut r = rng(10);
    for _ in 0..50 {
        let f = birat(&mut r, 3);
        let d = f.num().total_degree().max(f.den().total_degree());
        let bad = bad_specializations(&f, Var::X2, &WorkingField::Rational).map_err(|e| e.to_string())?;
        ensure!((bad.values.len() as u128) <= (d as u128).pow(2 * d), "f = {f}: bound exceeded");
        let got: BTreeSet<Rat> = bad.values.iter().map(|s| s.to_rat().unwrap()).collect();
        let (p, q) = (f.num(), f.den());
        let cand = match (p.deg_x1() > 0, q.deg_x1() > 0) {
            (true, true) => resultant(p, q, Var::X1).map_err(|e| e.to_string())?,
            (true, false) => q.to_uni(Var::X2).unwrap(),
            (false, _) => p.to_uni(Var::X2).unwrap(),
        };
        let want: BTreeSet<Rat> = rational_roots(&cand)
            .into_iter()
            .filter(|a| !p.specialize(Var::X2, a).gcd(&q.specialize(Var::X2, a)).is_constant())
            .collect();
        ensure!(got == want, "f = {f}: got {got:?}, want {want:?}");
    }
    Ok(())
}

fn specialization_degree_law() -> Check {
    let mut r = rng(11);
    for _ in 0..50 {
        let f = birat(&mut r, 3);
        let mut a = BTreeSet::new();
        while a.len() < 34 {
            a.insert(ratio(r.gen_range(-60..=60), r.gen_range(1..=3)));
        }
        for (axis, want) in [(Var::X2, f.deg_x1()), (Var::X1, f.deg_x2())] {
            let best = a.iter().filter_map(|x| f.specialize(axis, x).ok()).map(|u| u.degree() as u32).max();
            ensure!(best == Some(want), "f = {f}: max specialized degree {best:?} != {want}");
        }
    }
    Ok(())
}

fn classifier_round_trip() -> Check {
    let mut r = rng(12);
    let bounds = ClassifyBounds::default();
    let mut done = 0;
    while done < 100 {
        let (g, h) = (unirat(&mut r, 2), bilinear(&mut r));
        let (l1, l2) = (unirat(&mut r, 2), unirat(&mut r, 2));
        let f = h.substitute(&l1, &l2).compose_outer(&g);
        if f.deg_x1() == 0 || f.deg_x2() == 0 {
            continue;
        }
        let sf = classify_full(&f, &bounds, Mode::Real).map_err(|e| e.to_string())?;
        let sf = sf.ok_or_else(|| format!("no form found for f = {f}"))?;
        ensure!(verify_form(&f, &sf), "verify_form failed for f = {f}");
        done += 1;
    }
    for (text, kind) in [
        ("x1 + x2", SpecialKind::Additive),
        ("x1*x2", SpecialKind::Multiplicative),
        ("(x1 + x2)/(1 - x1*x2)", SpecialKind::Tangent),
    ] {
        let f = parse_birat(text).unwrap();
        let sf = classify_full(&f, &bounds, Mode::Real).map_err(|e| e.to_string())?.ok_or("kernel unclassified")?;
        ensure!(sf.kind == kind && verify_form(&f, &sf), "{text}: got {}", sf.kind);
    }
    Ok(())
}

fn mode_law() -> Check {
    let mut r = rng(13);
    for _ in 0..100 {
        let (g, h) = (unirat(&mut r, 2), bilinear(&mut r));
        let (l1, l2) = (unirat(&mut r, 2), unirat(&mut r, 2));
        let sf = classify_bilinear(&g, &h, &l1, &l2, Mode::Complex).map_err(|e| e.to_string())?;
        ensure!(sf.kind != SpecialKind::Tangent, "complex mode emitted a tangent form for h = {h}");
    }
    let f = parse_birat("(x1 + x2)/(1 - x1*x2)").unwrap();
    let sf = classify_full(&f, &ClassifyBounds::default(), Mode::Complex)
        .map_err(|e| e.to_string())?
        .ok_or("tangent kernel unclassified in complex mode")?;
    ensure!(sf.kind != SpecialKind::Tangent && verify_form(&f, &sf), "complex tangent kernel gave {}", sf.kind);
    let z = Mobius::from_ints(0, 1, -1, 0);
    ensure!(jordan_2x2(&z, Mode::Real).case == JordanCase::III, "rotation is not case III in real mode");
    let jc = jordan_2x2(&z, Mode::Complex);
    ensure!(jc.case == JordanCase::II, "rotation is not case II in complex mode");
    ensure!(
        jc.params().0.delta() == &(-1).into() || jc.params().0.is_rational(),
        "eigenvalues outside Q(√−1)"
    );
    Ok(())
}

fn random_ideal(r: &mut ChaCha8Rng, vars: &std::sync::Arc<Vec<String>>) -> Vec<MultiPoly> {
    let n = vars.len();
    loop {
        let k = r.gen_range(1..=3);
        let gens: Vec<MultiPoly> = (0..k)
            .map(|_| {
                let terms = r.gen_range(1..=3);
                let ts: Vec<(Vec<u32>, Rat)> = (0..terms)
                    .map(|_| {
                        let mut e = vec![0u32; n];
                        let deg = r.gen_range(0..=3);
                        for _ in 0..deg {
                            e[r.gen_range(0..n)] += 1;
                        }
                        (e, rat(r.gen_range(-3..=3)))
                    })
                    .collect();
                MultiPoly::from_terms(vars, ts)
            })
            .collect();
        if gens.iter().any(|g| !g.is_zero()) {
            return gens;
        }
    }
}

fn groebner_corpus() -> Check {
    let mut r = rng(14);
    let v = MultiPoly::names(&["x", "y", "z"]);
    let order = MonomialOrder::grlex(3);
    let rotations = |g: &[MultiPoly]| -> Vec<Vec<MultiPoly>> {
        let mut out = Vec::new();
        for i in 0..g.len() {
            let mut p = g.to_vec();
            p.rotate_left(i);
            out.push(p.clone());
            p.reverse();
            out.push(p);
        }
        out
    };
    for _ in 0..50 {
        let gens = random_ideal(&mut r, &v);
        let d = gens.iter().map(|g| g.total_degree()).max().unwrap();
        let first = buchberger(&gens, &order).map_err(|e| e.to_string())?;
        ensure!(dube_degree_check(&first, d, 3), "degree bound fails");
        for p in rotations(&gens) {
            let gb = buchberger(&p, &order).map_err(|e| e.to_string())?;
            ensure!(gb.generators == first.generators, "basis depends on generator order");
        }
        for g in &gens {
            ensure!(first.reduce(g).is_zero(), "generator {g} not in the basis ideal");
        }
    }
    let tv = MultiPoly::names(&["t", "x", "y", "z"]);
    let t = MultiPoly::var(&tv, 0);
    let gens =
        vec![&MultiPoly::var(&tv, 1) - &t, &MultiPoly::var(&tv, 2) - &t.pow(2), &MultiPoly::var(&tv, 3) - &t.pow(3)];
    let gb = buchberger(&gens, &MonomialOrder::lex(4)).map_err(|e| e.to_string())?;
    ensure!(dube_degree_check(&gb, 3, 4), "degree bound fails on the twisted cubic");
    let elim = elimination_ideal(&gb, 1).map_err(|e| e.to_string())?;
    let target = &MultiPoly::var(&tv, 2).pow(3) - &MultiPoly::var(&tv, 3).pow(2);
    let eb = GroebnerBasis { generators: elim, order: MonomialOrder::lex(4), reduced: false };
    ensure!(eb.reduce(&target).is_zero(), "y³ − z² is not in the elimination ideal");
    Ok(())
}

fn bezout_and_partition() -> Check {
    let mut r = rng(15);
    let mut done = 0;
    let mut attempts = 0;
    while done < 50 {
        attempts += 1;
        ensure!(attempts < 10_000, "could not draw 50 coprime curve pairs");
        let (f, g) = (birat(&mut r, 2), birat(&mut r, 2));
        let v: Vec<i64> = (0..4).map(|_| r.gen_range(-4..=4)).collect();
        let (Ok(c1), Ok(c2)) =
            (curve(&f, CurveVariant::C1, (sc(v[0]), sc(v[1]))), curve(&g, CurveVariant::C2, (sc(v[2]), sc(v[3]))))
        else {
            continue;
        };
        if c1.defining.is_zero() || c2.defining.is_zero() {
            continue;
        }
        if !poly_gcd_bivariate(&c1.defining, &c2.defining).map_err(|e| e.to_string())?.is_constant() {
            continue;
        }
        ensure!(bezout_check(&c1, &c2), "Bezout bound fails for {} and {}", c1.defining, c2.defining);
        let pts = common_points(&c1, &c2, &WorkingField::Rational).ok_or("shared component")?;
        ensure!(pts.iter().all(|(x, y)| c1.contains(x, y) && c2.contains(x, y)), "reported point off a curve");
        done += 1;
    }
    for _ in 0..100 {
        let n = r.gen_range(1..=40);
        let mut g = SimpleGraph::new(n);
        for _ in 0..r.gen_range(0..=3 * n) {
            g.add_edge(r.gen_range(0..n), r.gen_range(0..n));
        }
        let classes = greedy_partition(&g);
        ensure!(classes.len() <= g.max_degree() + 1, "too many classes");
        let mut seen = BTreeSet::new();
        for c in &classes {
            for (i, &u) in c.iter().enumerate() {
                ensure!(seen.insert(u), "vertex {u} in two classes");
                ensure!(c[i + 1..].iter().all(|&w| !g.has_edge(u, w)), "class is not independent");
            }
        }
        ensure!(seen.len() == n, "classes do not cover the graph");
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 15] = [
        ("AP additive collapse", ap_additive),
        ("GP multiplicative collapse", gp_multiplicative),
        ("tangent collapse", tangent_collapse),
        ("expansion probe", expansion_probe),
        ("quadruple-count oracles", quadruple_oracles),
        ("Cauchy-Schwarz bound", cauchy_schwarz),
        ("duality", duality),
        ("lifting identities", lifting_identities),
        ("decomposition class bound", decomposition_bound),
        ("bad specialization bound", bad_specialization_law),
        ("specialization degree law", specialization_degree_law),
        ("classifier round trip", classifier_round_trip),
        ("mode law", mode_law),
        ("Groebner corpus", groebner_corpus),
        ("Bezout and partition", bezout_and_partition),
    ];
    let total = Instant::now();
    println!();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.1}s)", i + 1),
            Err(msg) => {
                println!("FAIL {:>2} {name} ({secs:.1}s): {msg}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("total {:.1}s", total.elapsed().as_secs_f64());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
