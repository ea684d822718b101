use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratgrowth_core::geometry::EvalSet;
use ratgrowth_core::{Field, Rat};

use crate::error::{HarnessError, Result};

/// Structured or random evaluation sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// start, start + d, start + 2d, …
    Ap { start: Rat, diff: Rat },
    /// start, start·r, start·r², …
    Gp { start: Rat, ratio: Rat },
    /// n distinct integers from [0, bound); bound defaults to n³ and seed to the run seed.
    Random { bound: Option<u64>, seed: Option<u64> },
    /// t, t ⊕ t, t ⊕ t ⊕ t, … under a ⊕ b = (a + b)/(1 − ab).
    TanOrbit { t: Rat },
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || HarnessError::Input(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Comma-separated rationals.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rat).collect()
}

impl FromStr for Family {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args = parse_rat_list(args)?;
        let int = |r: &Rat| -> Result<u64> {
            if !r.is_integer() || r < &Rat::from_i64(0) {
                return Err(HarnessError::Input(format!("expected a nonnegative integer, got {r}")));
            }
            r.to_integer().try_into().map_err(|_| HarnessError::Input(format!("{r} is too large")))
        };
        match (name.trim(), args.as_slice()) {
            ("ap", [start, diff]) => Ok(Family::Ap { start: start.clone(), diff: diff.clone() }),
            ("gp", [start, ratio]) => Ok(Family::Gp { start: start.clone(), ratio: ratio.clone() }),
            ("random", []) => Ok(Family::Random { bound: None, seed: None }),
            // a zero bound selects the default n³
            ("random", [b]) => Ok(Family::Random { bound: Some(int(b)?).filter(|&b| b > 0), seed: None }),
            ("random", [b, s]) => Ok(Family::Random { bound: Some(int(b)?).filter(|&b| b > 0), seed: Some(int(s)?) }),
            ("tan" | "tan_orbit", [t]) => Ok(Family::TanOrbit { t: t.clone() }),
            _ => Err(HarnessError::Input(format!(
                "unknown family {s:?}; expected ap:START,DIFF, gp:START,RATIO, random[:BOUND[,SEED]] or tan:T"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ap { start, diff } => write!(f, "ap:{start},{diff}"),
            Family::Gp { start, ratio } => write!(f, "gp:{start},{ratio}"),
            Family::Random { bound: None, seed: None } => write!(f, "random"),
            Family::Random { bound, seed } => {
                write!(f, "random:{}", bound.unwrap_or(0))?;
                match seed {
                    Some(s) => write!(f, ",{s}"),
                    None => Ok(()),
                }
            }
            Family::TanOrbit { t } => write!(f, "tan:{t}"),
        }
    }
}

impl Family {
    /// Fill in the seed of a random family that has none.
    pub fn seeded(&self, seed: u64) -> Family {
        match self {
            Family::Random { bound, seed: None } => Family::Random { bound: *bound, seed: Some(seed) },
            other => other.clone(),
        }
    }
}

fn collect_distinct(n: usize, mut next: impl FnMut() -> Option<Rat>) -> Result<EvalSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0;
    while out.len() < n {
        if attempts >= 10 * n.max(1) {
            return Err(HarnessError::Input(format!("only {} distinct elements within {attempts} attempts", out.len())));
        }
        attempts += 1;
        if let Some(x) = next() {
            if seen.insert(x.clone()) {
                out.push(x);
            }
        }
    }
    Ok(EvalSet::from_rats(out)?)
}

/// n distinct elements of the family.
pub fn gen_set(family: &Family, n: usize) -> Result<EvalSet> {
    match family {
        Family::Ap { start, diff } => {
            if diff.is_zero() {
                return Err(HarnessError::Input("progression difference is zero".into()));
            }
            let mut x = start.clone();
            collect_distinct(n, || {
                let cur = x.clone();
                x = x.add(diff);
                Some(cur)
            })
        }
        Family::Gp { start, ratio } => {
            let one = Rat::from_i64(1);
            if start.is_zero() || ratio.is_zero() || ratio == &one || ratio == &one.neg() {
                return Err(HarnessError::Input("geometric ratio must avoid 0 and ±1, start must be nonzero".into()));
            }
            let mut x = start.clone();
            collect_distinct(n, || {
                let cur = x.clone();
                x = x.mul(ratio);
                Some(cur)
            })
        }
        Family::Random { bound, seed } => {
            let bound = bound.unwrap_or((n as u64).pow(3));
            if (bound as u128) < n as u128 {
                return Err(HarnessError::Input(format!("cannot draw {n} distinct integers below {bound}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            let mut picks: Vec<u64> =
                rand::seq::index::sample(&mut rng, bound as usize, n).into_iter().map(|i| i as u64).collect();
            picks.sort_unstable();
            Ok(EvalSet::from_rats(picks.into_iter().map(|k| Rat::from_integer(k.into())))?)
        }
        Family::TanOrbit { t } => {
            // None is the point at infinity, where the orbit passes through a pole
            let mut cur: Option<Rat> = None;
            let mut started = false;
            collect_distinct(n, || {
                cur = if !started {
                    started = true;
                    Some(t.clone())
                } else {
                    match &cur {
                        None if t.is_zero() => Some(Rat::from_i64(0)),
                        None => Some(t.inv().neg()),
                        Some(x) => {
                            let den = Rat::from_i64(1).sub(&x.mul(t));
                            (!den.is_zero()).then(|| x.add(t).div(&den))
                        }
                    }
                };
                cur.clone()
            })
        }
    }
}
