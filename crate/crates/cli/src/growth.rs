use std::io::Write;

use rayon::prelude::*;
use ratgrowth_core::geometry::grid_stats;
use ratgrowth_core::{BiRat, Rat};
use serde::Serialize;

use crate::error::{HarnessError, Result};
use crate::family::{gen_set, Family};

/// One size of a sweep. Column order is fixed for downstream tools.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GrowthRow {
    pub family1: String,
    pub family2: String,
    pub f: String,
    pub n: usize,
    pub image: usize,
    #[serde(rename = "Q")]
    pub q: u64,
    /// Exact (evaluated points)² / Q.
    pub cs_bound: String,
    pub skipped: u64,
    pub seed: u64,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    /// Approximate least-squares slope of log image against log n.
    pub slope: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct GrowthConfig {
    pub family1: Family,
    pub family2: Family,
    pub sizes: Vec<usize>,
    pub seed: u64,
    /// Worker threads; None uses the available parallelism.
    pub workers: Option<usize>,
}

/// Least-squares slope of log y against log x.
pub fn loglog_slope(points: &[(usize, usize)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|&&(x, y)| x > 0 && y > 0).map(|&(x, y)| ((x as f64).ln(), (y as f64).ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn row(f: &BiRat<Rat>, cfg: &GrowthConfig, n: usize) -> Result<GrowthRow> {
    // the second side draws with the next seed so that two random families differ
    let fam1 = cfg.family1.seeded(cfg.seed);
    let fam2 = cfg.family2.seeded(cfg.seed.wrapping_add(1));
    let a1 = gen_set(&fam1, n)?;
    let a2 = gen_set(&fam2, n)?;
    let st = grid_stats(f, &a1, &a2);
    let m = st.evaluated(&a1, &a2);
    let cs = if st.q == 0 { Rat::from_integer(0.into()) } else { Rat::new((m * m).into(), st.q.into()) };
    Ok(GrowthRow {
        family1: fam1.to_string(),
        family2: fam2.to_string(),
        f: f.to_string(),
        n,
        image: st.image,
        q: st.q,
        cs_bound: cs.to_string(),
        skipped: st.skipped,
        seed: cfg.seed,
    })
}

/// Exact image sizes over A1(n) × A2(n) for every n in the sweep.
pub fn run_growth(f: &BiRat<Rat>, cfg: &GrowthConfig) -> Result<GrowthReport> {
    if cfg.sizes.is_empty() {
        return Err(HarnessError::Input("empty size sweep".into()));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder.build().map_err(|e| HarnessError::Input(e.to_string()))?;
    let mut rows = pool.install(|| cfg.sizes.par_iter().map(|&n| row(f, cfg, n)).collect::<Result<Vec<_>>>())?;
    rows.sort_by_key(|r| r.n);
    let slope = loglog_slope(&rows.iter().map(|r| (r.n, r.image)).collect::<Vec<_>>());
    Ok(GrowthReport { rows, slope })
}

impl GrowthReport {
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        for r in &self.rows {
            wtr.serialize(r)?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn table(&self) -> String {
        let mut out = format!("{:>6} {:>10} {:>12} {:>14} {:>8}\n", "n", "image", "Q", "cs_bound", "skipped");
        for r in &self.rows {
            out.push_str(&format!("{:>6} {:>10} {:>12} {:>14} {:>8}\n", r.n, r.image, r.q, r.cs_bound, r.skipped));
        }
        match self.slope {
            Some(s) => out.push_str(&format!("log-log slope (approximate): {s:.4}\n")),
            None => out.push_str("log-log slope: needs two sizes\n"),
        }
        out
    }
}
