use std::process::{Command, Output};

use proptest::prelude::*;
use ratgrowth::{run_growth, GrowthConfig};
use ratgrowth_core::text::parse_birat;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratgrowth")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_tangent_kernel() {
    let o = run(&["classify", "(x1+x2)/(1 - x1*x2)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("kind=tangent"), "{out}");
    assert!(out.contains("verify=ok"), "{out}");
}

#[test]
fn classify_complex_mode_and_bounds() {
    let o = run(&["classify", "(x1+x2)/(1 - x1*x2)", "--mode", "complex", "--bounds", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("kind=multiplicative") && out.contains("verify=ok"), "{out}");
    let o = run(&["classify", "x1^2 + x1*x2 + x2^2"]);
    assert!(stdout(&o).contains("kind=none"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "x1^7 + x2"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "x1 + * x2"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "1/(x1 - x1)"]).status.code(), Some(1));
    assert_eq!(run(&["grow", "x1", "--family1", "ap:0,0", "--family2", "ap:0,1", "--sizes", "4"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "x1", "--mode", "p-adic"]).status.code(), Some(1));
}

#[test]
fn grow_csv() {
    let o = run(&["grow", "x1 + x2", "--family1", "ap:0,1", "--family2", "ap:0,1", "--sizes", "4,8,16"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["family1", "family2", "f", "n", "image", "Q", "cs_bound", "skipped", "seed"]);
    let images: Vec<(usize, usize)> =
        rdr.records().map(|r| r.unwrap()).map(|r| (r[3].parse().unwrap(), r[4].parse().unwrap())).collect();
    assert_eq!(images, vec![(4, 7), (8, 15), (16, 31)]);
}

#[test]
fn grow_json_and_out_file() {
    let o = run(&["grow", "x1*x2", "--family1", "gp:1,2", "--family2", "gp:1,2", "--sizes", "4,8", "--emit", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][1]["image"], 15);
    assert!(v["slope"].is_number());
    let dir = std::env::temp_dir().join(format!("ratgrowth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.csv");
    let o = run(&[
        "grow", "x1*x2", "--family1", "gp:1,2", "--family2", "gp:1,2", "--sizes", "4,8", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("slope"));
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("family1,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn decompose_and_dominate() {
    let out = stdout(&run(&["decompose", "x^4"]));
    assert!(out.contains("(x^2, x^2)"), "{out}");
    let out = stdout(&run(&["dominate", "x^4", "x^6"]));
    assert!(out.contains("g  = x^2"), "{out}");
}

#[test]
fn lift_both_sides() {
    // h is determined up to the sign symmetry of x²
    let out = stdout(&run(&["lift", "(x1 + x2)^2", "--outer-g", "x^2"]));
    assert!(out == "h = x1 + x2\n" || out == "h = -x1 - x2\n", "{out}");
    let out = stdout(&run(&["lift", "x1^2 + x2", "--inner-g", "x^2"]));
    assert!(out.contains("h = x1 + x2"), "{out}");
    assert_eq!(run(&["lift", "x1 + x2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn curves_and_count() {
    let out = stdout(&run(&["curves", "x1 + x2", "--variant", "c1", "--pairs", "1,2;3,4"]));
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("x1 - x2 - 1 = 0"), "{out}");
    let out = stdout(&run(&["count", "x1 + x2", "--set1", "0,1,2", "--set2", "0,1,2"]));
    assert!(out.contains("image = 5") && out.contains("Q = 19") && out.contains("cs_bound = 81/19"), "{out}");
}

#[test]
fn groebner_file() {
    let dir = std::env::temp_dir().join(format!("ratgrowth-gb-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cubic.txt");
    std::fs::write(&path, "# twisted cubic\nvars: t, x, y, z\norder: lex\nx - t\ny - t^2\nz - t^3\n").unwrap();
    let o = run(&["groebner", path.to_str().unwrap(), "--eliminate", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let elim = out.split("# elimination").nth(1).unwrap();
    assert!(elim.contains("y^3 - z^2") || elim.contains("-y^3 + z^2") || elim.contains("x*z - y^2"), "{out}");
    assert!(out.contains("degree bound check: ok"));
    std::fs::write(&path, "x - 1\n").unwrap();
    assert_eq!(run(&["groebner", path.to_str().unwrap()]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn growth_is_deterministic(seed in 0u64..1000, workers in 1usize..4) {
        let f = parse_birat("x1 + x2^2").unwrap();
        let cfg = |w| GrowthConfig {
            family1: "random".parse().unwrap(),
            family2: "random:500".parse().unwrap(),
            sizes: vec![8, 4, 16],
            seed,
            workers: Some(w),
        };
        let a = run_growth(&f, &cfg(workers)).unwrap().to_csv().unwrap();
        let b = run_growth(&f, &cfg(1)).unwrap().to_csv().unwrap();
        prop_assert_eq!(a, b);
    }
}
