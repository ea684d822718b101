//! Subcommand bodies; each returns the text printed on standard output.

use std::fmt::Write as _;
use std::sync::Arc;

use ratgrowth_core::classify::{classify_full, verify_form, ClassifyBounds, Mode};
use ratgrowth_core::decompose::{dominating_function, enumerate_decompositions, solve_bivariate_lift, LiftSide};
use ratgrowth_core::geometry::{curve, grid_stats, CurveVariant, EvalSet};
use ratgrowth_core::groebner::{buchberger, dube_degree_check, elimination_ideal, MonomialOrder, OrderKind};
use ratgrowth_core::text::{parse_birat, parse_multipoly, parse_unirat};
use ratgrowth_core::{MultiPoly, Rat, Scalar};

use crate::error::{HarnessError, Result};
use crate::family::{parse_rat, parse_rat_list};
use crate::growth::{run_growth, GrowthConfig};

pub fn classify(f: &str, mode: Mode, bounds: &ClassifyBounds) -> Result<String> {
    let f = parse_birat(f)?;
    let mut out = String::new();
    writeln!(out, "f = {f}").unwrap();
    writeln!(
        out,
        "bounds: deg f <= {}, deg g <= {}, deg l <= {}, mode {}",
        bounds.max_degree,
        bounds.max_outer,
        bounds.max_inner,
        if mode == Mode::Real { "real" } else { "complex" }
    )
    .unwrap();
    match classify_full(&f, bounds, mode)? {
        Some(sf) => {
            writeln!(out, "kind={}", sf.kind).unwrap();
            writeln!(out, "g  = {}", sf.g).unwrap();
            writeln!(out, "l1 = {}", sf.l1.format_in("x1")).unwrap();
            writeln!(out, "l2 = {}", sf.l2.format_in("x2")).unwrap();
            let ok = verify_form(&f, &sf);
            writeln!(out, "verify={}", if ok { "ok" } else { "FAILED" }).unwrap();
        }
        None => writeln!(out, "kind=none (no form within bounds; this is not a proof of expansion)").unwrap(),
    }
    Ok(out)
}

pub fn decompose(f: &str) -> Result<String> {
    let f = parse_unirat(f)?;
    let decs = enumerate_decompositions(&f)?;
    let mut out = format!("f = {f}\n");
    if decs.is_empty() {
        out.push_str("indecomposable\n");
    }
    for d in decs {
        writeln!(out, "({}, {})  degrees {} x {}", d.left, d.right, d.left.degree(), d.right.degree()).unwrap();
    }
    Ok(out)
}

pub fn dominate(f1: &str, f2: &str) -> Result<String> {
    let d = dominating_function(&parse_unirat(f1)?, &parse_unirat(f2)?)?;
    Ok(format!("g  = {}\nh1 = {}\nh2 = {}\n", d.g, d.h1, d.h2))
}

pub fn lift(f: &str, g: &str, side: LiftSide) -> Result<String> {
    let f = parse_birat(f)?;
    let g = parse_unirat(g)?;
    Ok(match solve_bivariate_lift(&f, &g, side)? {
        Some(h) => format!("h = {h}\n"),
        None => "no lift\n".to_string(),
    })
}

/// Pairs written "a,b", several separated by ';'.
pub fn parse_pairs(items: &[String]) -> Result<Vec<(Rat, Rat)>> {
    let mut out = Vec::new();
    for item in items {
        for p in item.split(';').filter(|p| !p.trim().is_empty()) {
            match parse_rat_list(p)?.as_slice() {
                [a, b] => out.push((a.clone(), b.clone())),
                _ => return Err(HarnessError::Input(format!("expected a pair a,b, got {p:?}"))),
            }
        }
    }
    Ok(out)
}

pub fn curves(f: &str, variant: CurveVariant, pairs: &[(Rat, Rat)]) -> Result<String> {
    let f = parse_birat(f)?;
    let mut out = String::new();
    for (a, b) in pairs {
        let c = curve(&f, variant, (Scalar::rational(a.clone()), Scalar::rational(b.clone())))?;
        writeln!(out, "({a}, {b}): {} = 0", c.defining).unwrap();
    }
    Ok(out)
}

pub fn count(h: &str, set1: &str, set2: &str) -> Result<String> {
    let h = parse_birat(h)?;
    let a1 = EvalSet::from_rats(parse_rat_list(set1)?)?;
    let a2 = EvalSet::from_rats(parse_rat_list(set2)?)?;
    let st = grid_stats(&h, &a1, &a2);
    let m = st.evaluated(&a1, &a2);
    let cs = if st.q == 0 { "undefined".to_string() } else { Rat::new((m * m).into(), st.q.into()).to_string() };
    Ok(format!("image = {}\nQ = {}\ncs_bound = {cs}\nskipped = {}\n", st.image, st.q, st.skipped))
}

pub fn grow(f: &str, cfg: &GrowthConfig, emit: Emit) -> Result<String> {
    let f = parse_birat(f)?;
    let report = run_growth(&f, cfg)?;
    match emit {
        Emit::Csv => report.to_csv(),
        Emit::Json => report.to_json(),
        Emit::Table => Ok(report.table()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Emit {
    Csv,
    Json,
    Table,
}

/// An ideal file: a `vars:` line, an optional `order: lex|grlex` line, then one
/// generator per line. Blank lines and lines starting with '#' are ignored.
pub struct IdealFile {
    pub vars: Arc<Vec<String>>,
    pub order: OrderKind,
    pub generators: Vec<MultiPoly>,
}

pub fn parse_ideal(text: &str) -> Result<IdealFile> {
    let mut vars: Option<Arc<Vec<String>>> = None;
    let mut order = OrderKind::Lex;
    let mut generators = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            let names: Vec<&str> = rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            vars = Some(MultiPoly::names(&names));
        } else if let Some(rest) = line.strip_prefix("order:") {
            order = match rest.trim() {
                "lex" => OrderKind::Lex,
                "grlex" => OrderKind::GrLex,
                o => return Err(HarnessError::Input(format!("line {}: unknown order {o:?}", i + 1))),
            };
        } else {
            let v = vars.as_ref().ok_or_else(|| HarnessError::Input("the vars: line must come first".into()))?;
            generators.push(parse_multipoly(line, v)?);
        }
    }
    let vars = vars.ok_or_else(|| HarnessError::Input("missing vars: line".into()))?;
    Ok(IdealFile { vars, order, generators })
}

pub fn groebner(text: &str, eliminate: Option<usize>) -> Result<String> {
    let ideal = parse_ideal(text)?;
    let n = ideal.vars.len();
    let order = match (eliminate, ideal.order) {
        (Some(_), _) | (None, OrderKind::Lex) => MonomialOrder::lex(n),
        (None, OrderKind::GrLex) => MonomialOrder::grlex(n),
    };
    let gb = buchberger(&ideal.generators, &order)?;
    let mut out = String::new();
    for g in &gb.generators {
        writeln!(out, "{g}").unwrap();
    }
    let d = ideal.generators.iter().map(|g| g.total_degree()).max().unwrap_or(0);
    writeln!(out, "# degree bound check: {}", if dube_degree_check(&gb, d, n as u32) { "ok" } else { "FAILED" })
        .unwrap();
    if let Some(m) = eliminate {
        writeln!(out, "# elimination ideal without the first {m} variables").unwrap();
        for g in elimination_ideal(&gb, m)? {
            writeln!(out, "{g}").unwrap();
        }
    }
    Ok(out)
}

pub fn parse_mode(s: &str) -> Result<Mode> {
    match s {
        "real" => Ok(Mode::Real),
        "complex" => Ok(Mode::Complex),
        _ => Err(HarnessError::Input(format!("mode must be real or complex, got {s:?}"))),
    }
}

/// "G,L" or "G,L,D": outer degree, inner degree, and optionally the cap on deg f.
pub fn parse_bounds(s: &str) -> Result<ClassifyBounds> {
    let nums: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| HarnessError::Input(format!("bad bound {t:?}"))))
        .collect::<Result<_>>()?;
    let mut b = ClassifyBounds::default();
    match nums.as_slice() {
        [g, l] => {
            b.max_outer = *g;
            b.max_inner = *l;
        }
        [g, l, d] => {
            b.max_outer = *g;
            b.max_inner = *l;
            b.max_degree = *d as u32;
        }
        _ => return Err(HarnessError::Input("bounds are G,L or G,L,D".into())),
    }
    Ok(b)
}

pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| HarnessError::Input(format!("bad size {t:?}"))))
        .collect()
}

/// A single rational from the command line.
pub fn rational(s: &str) -> Result<Rat> {
    parse_rat(s)
}
