use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::process::{Command, Output};

use quadrangle::dynamics::{CYCLE_ANGLES, TRAPEZOID_FIXED_POINT};
use quadrangle::{canonicalize, AngleTuple, EdgeTuple};
use quadrangle_cli::args::VerifyArgs;
use quadrangle_cli::commands::verify_with;
use serde_json::Value;

fn quad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn num(v: &Value, key: &str) -> f64 {
    v[key]
        .as_str()
        .unwrap_or_else(|| panic!("{key} missing"))
        .parse()
        .unwrap()
}

#[test]
fn iterate_square_is_constant() {
    let out = quad(&[
        "iterate",
        "--angles",
        "1.5707963,1.5707963,1.5707963,1.5707963",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("iter,alpha,beta,gamma,delta"));
    for line in lines {
        for v in line.split(',').skip(1) {
            assert!((v.parse::<f64>().unwrap() - FRAC_PI_2).abs() < 1e-12);
        }
    }
    assert!(String::from_utf8_lossy(&out.stderr).contains("class=square_fixed"));
}

#[test]
fn cycle_example_matches_general_cycle() {
    let out = quad(&["cycle", "--angles", "1.2,2.1,1.5,1.4831853"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["class"], "general_2cycle");
    assert_eq!(v["period"], "2");
    assert!(num(&v, "match_distance") < 1e-6);
}

#[test]
fn step_example_trapezoid() {
    let out = quad(&["step", "--angles", "1.0472,2.0944,2.0944,1.0472", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let got = ["alpha", "beta", "gamma", "delta"].map(|k| num(&v, k));
    let want = [5.0 * PI / 6.0, PI / 3.0, FRAC_PI_2, PI / 3.0];
    for (g, w) in got.iter().zip(want) {
        // Input is pi/3 to four decimals.
        assert!((g - w).abs() < 1e-4, "{got:?}");
    }
}

#[test]
fn curve_ends_on_the_diagonal_and_increases() {
    let out = quad(&["curve", "--from", "1.4", "--samples", "3"]);
    let text = stdout(&out);
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (a, c) = l.split_once(',').unwrap();
            (a.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    assert_eq!(text.lines().next(), Some("a,c"));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2], (FRAC_PI_2, FRAC_PI_2));

    let text = stdout(&quad(&["curve", "--from", "0.01", "--samples", "500"]));
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (a, c) = l.split_once(',').unwrap();
            (a.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    assert!(rows.windows(2).all(|w| w[1].1 > w[0].1));
    let step = (FRAC_PI_2 - 0.01) / 499.0;
    let nearest = rows
        .iter()
        .min_by(|x, y| {
            (x.0 - TRAPEZOID_FIXED_POINT)
                .abs()
                .total_cmp(&(y.0 - TRAPEZOID_FIXED_POINT).abs())
        })
        .unwrap();
    // |c - a| is at most (1 + max c') times the distance to a*.
    assert!((nearest.1 - nearest.0).abs() < 2.0 * step);
}

#[test]
fn bad_inputs_exit_two() {
    for args in [
        vec!["step", "--angles", "1,1,1"],
        vec!["step", "--angles", "1,1,1,1"],
        vec!["step", "--angles", "3.2,1,1,1.0831853"],
        vec!["curve", "--from", "1.5", "--to", "1.4"],
        vec!["curve", "--samples", "1"],
        vec!["basin", "--samples", "0"],
        vec![
            "stability",
            "--angles",
            "1.5707963,1.5707963,1.5707963,1.5707963",
            "--order",
            "3",
        ],
        vec!["solve", "trapezoid", "--lo", "0.1", "--hi", "1.0"],
        vec!["frobnicate"],
    ] {
        assert_eq!(quad(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn non_convergence_exits_three() {
    let out = quad(&[
        "cycle",
        "--angles",
        "1.2,2.1,1.5,1.4831853",
        "--max-iter",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["class"], "no_convergence");
    let out = quad(&["solve", "cycle", "--max-iter", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn basin_is_byte_identical_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<_> = ["a.csv", "b.csv", "c.csv"]
        .iter()
        .map(|f| dir.path().join(f))
        .collect();
    for (f, seed) in files.iter().zip(["7", "7", "8"]) {
        let out = quad(&[
            "basin",
            "--samples",
            "20",
            "--seed",
            seed,
            "--out",
            f.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let read = |p: &std::path::Path| std::fs::read(p).unwrap();
    assert_eq!(read(&files[0]), read(&files[1]));
    assert_ne!(read(&files[0]), read(&files[2]));

    let text = String::from_utf8(read(&files[0])).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "sample_id,alpha0,beta0,gamma0,delta0,class,iters,residual,match_distance"
    );
    assert_eq!(lines.len(), 22);
    for (i, line) in lines[1..21].iter().enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], i.to_string());
        let angles: Vec<f64> = fields[1..5].iter().map(|v| v.parse().unwrap()).collect();
        assert!(angles.iter().all(|&a| a > 0.05 && a < PI - 0.05));
        assert!((angles.iter().sum::<f64>() - TAU).abs() < 1e-9);
        assert_eq!(fields[5], "general_2cycle");
    }
    assert!(lines[21].starts_with("# samples=20 general_2cycle=20"));
}

#[test]
fn records_do_not_depend_on_sample_count() {
    let short = stdout(&quad(&["basin", "--samples", "3"]));
    let long = stdout(&quad(&["basin", "--samples", "6"]));
    let rows = |t: &str| t.lines().take(4).map(String::from).collect::<Vec<_>>();
    assert_eq!(rows(&short), rows(&long));
}

#[test]
fn trapezoid_family_basin() {
    let out = quad(&[
        "basin",
        "--samples",
        "25",
        "--family",
        "trapezoid",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["trapezoid_2cycle"], "25");
    for r in v["records"].as_array().unwrap() {
        let (a, d) = (num(r, "alpha"), num(r, "delta"));
        assert_eq!(a, d);
        assert!(a > 0.1 && a < 1.5);
    }
}

#[test]
fn solve_commands() {
    let v = json(&quad(&["solve", "trapezoid"]));
    assert!((num(&v, "a") - 1.483_421_587_693_779_5).abs() <= 1e-12);
    assert!((0.75..=0.85).contains(&num(&v, "slope")));

    let v = json(&quad(&["solve", "cycle"]));
    let got = ["alpha", "beta", "gamma", "delta"].map(|k| num(&v, k));
    for (g, w) in got.iter().zip(CYCLE_ANGLES) {
        assert!((g - w).abs() < 1e-9);
    }

    let start = format!(
        "{},{},{}",
        CYCLE_ANGLES[0] + 0.01,
        CYCLE_ANGLES[2],
        CYCLE_ANGLES[3]
    );
    let v = json(&quad(&["solve", "cycle", "--initial", &start]));
    assert!((num(&v, "alpha") - CYCLE_ANGLES[0]).abs() < 1e-9);
}

#[test]
fn stability_at_cycle_point() {
    let angles = CYCLE_ANGLES.map(|a| a.to_string()).join(",");
    let v = json(&quad(&["stability", "--angles", &angles, "--order", "2"]));
    assert!(num(&v, "spectral_radius") < 1.0);
    assert_eq!(v["attracting"], true);
    let v = json(&quad(&[
        "stability",
        "--angles",
        "1.5707963,1.5707963,1.5707963,1.5707963",
    ]));
    assert!(num(&v, "spectral_radius") > 1.0);
}

#[test]
fn verify_json_lists_every_check() {
    let out = quad(&["verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r["passed"] == true));
}

/// Balanced edges with the sign of `sin(α + δ)` flipped in the first
/// degenerate triangle.
fn sign_flipped_edges(q: &AngleTuple) -> quadrangle::Result<EdgeTuple> {
    let canon = canonicalize(q);
    let r = canon.rotated;
    let (a, g, d) = (r.alpha(), r.gamma(), r.delta());
    let s1 = a.sin() + d.sin() - (a + d).sin();
    let first = [-(a + d).sin(), d.sin(), 0.0, a.sin()].map(|x| x * TAU / s1);
    let s2 = g.sin() + d.sin() + (g + d).sin();
    let second = [g.sin(), 0.0, d.sin(), (g + d).sin()].map(|x| x * TAU / s2);
    let mid: [f64; 4] = std::array::from_fn(|i| 0.5 * (first[i] + second[i]));
    let e = EdgeTuple::new(mid)?;
    Ok(canon.restore_edges(&e))
}

#[test]
fn verify_catches_a_sign_error() {
    let mut buf = Vec::new();
    let code = verify_with(sign_flipped_edges, &VerifyArgs { json: false }, &mut buf).unwrap();
    assert_eq!(code, 1);
    let text = String::from_utf8(buf).unwrap();
    assert!(text.contains("[FAIL]"), "{text}");
}
