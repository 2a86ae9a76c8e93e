//! End-to-end checks of the binary: exit codes, artifact layout,
//! reproducibility, and the no-partial-outputs contract.

use std::path::Path;
use std::process::{Command, Output};

fn zonal(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zonal"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name))
        .unwrap_or_else(|e| panic!("missing artifact {name}: {e}"))
}

#[test]
fn gen_is_byte_identical_under_seed() {
    let dir = tempfile::tempdir().unwrap();
    for out in ["a", "b"] {
        let res = zonal(
            &[
                "gen", "--sphere", "--dim", "3", "--n", "1000", "--seed", "7", "--out", out,
            ],
            dir.path(),
        );
        assert!(
            res.status.success(),
            "{}",
            String::from_utf8_lossy(&res.stderr)
        );
    }
    assert_eq!(read(dir.path(), "a.csv"), read(dir.path(), "b.csv"));
    let manifest = read(dir.path(), "a.manifest.json");
    assert!(manifest.contains("\"seed\": 7"));
    // unit norms
    for line in read(dir.path(), "a.csv").lines().take(5) {
        let norm: f64 = line
            .split(',')
            .map(|v| v.parse::<f64>().unwrap().powi(2))
            .sum::<f64>()
            .sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}

#[test]
fn gen_disk_and_argument_conflicts() {
    let dir = tempfile::tempdir().unwrap();
    let res = zonal(
        &["gen", "--disk", "--n", "50", "--seed", "1", "--out", "d"],
        dir.path(),
    );
    assert!(res.status.success());
    assert_eq!(read(dir.path(), "d.csv").lines().count(), 50);

    // --sphere and --disk conflict -> usage error, exit 1
    let res = zonal(
        &[
            "gen", "--sphere", "--disk", "--n", "5", "--seed", "1", "--out", "x",
        ],
        dir.path(),
    );
    assert_eq!(res.status.code(), Some(1));
    // disk with a dim other than 2 -> domain/config error, exit 2
    let res = zonal(
        &[
            "gen", "--disk", "--dim", "5", "--n", "5", "--seed", "1", "--out", "x",
        ],
        dir.path(),
    );
    assert_eq!(res.status.code(), Some(2));
    assert!(dir.path().join("x.failed").exists());
    assert!(!dir.path().join("x.csv").exists());
}

#[test]
fn spectrum_reports_ntk_slope() {
    let dir = tempfile::tempdir().unwrap();
    let res = zonal(
        &[
            "spectrum",
            "--kernel",
            r#"{"family":"NtkFc","layers":6,"beta":0,"normalize":true}"#,
            "--dim",
            "2",
            "--kmax",
            "100",
            "--out",
            "ntk",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let summary: serde_json::Value = serde_json::from_str(&read(dir.path(), "ntk.json")).unwrap();
    let slope = summary["slope"].as_f64().unwrap();
    assert!((-2.25..=-1.65).contains(&slope), "slope {slope}");
    let csv = read(dir.path(), "ntk.csv");
    assert!(csv.starts_with("k,lambda,multiplicity\n"));
    assert_eq!(csv.lines().count(), 102);
    assert!(dir.path().join("ntk.manifest.json").exists());
}

#[test]
fn spectrum_constant_kernel_has_single_entry_and_no_slope() {
    let dir = tempfile::tempdir().unwrap();
    // a very wide Gaussian is numerically the constant kernel
    let res = zonal(
        &[
            "spectrum",
            "--kernel",
            r#"{"family":"Gaussian","c":1e-16}"#,
            "--dim",
            "3",
            "--kmax",
            "10",
            "--out",
            "const",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let summary: serde_json::Value = serde_json::from_str(&read(dir.path(), "const.json")).unwrap();
    assert!(summary["slope"].is_null());
    assert!(summary["slope_error"].is_string());
    let csv = read(dir.path(), "const.csv");
    let nonzero = csv
        .lines()
        .skip(1)
        .filter(|l| l.split(',').nth(1).unwrap().parse::<f64>().unwrap() != 0.0)
        .count();
    assert_eq!(nonzero, 1);
}

#[test]
fn spectrum_rejects_invalid_kernels() {
    let dir = tempfile::tempdir().unwrap();
    // syntactically valid JSON, semantically invalid width -> exit 2
    let res = zonal(
        &[
            "spectrum",
            "--kernel",
            r#"{"family":"Laplace","c":-1}"#,
            "--dim",
            "2",
            "--kmax",
            "10",
            "--out",
            "bad",
        ],
        dir.path(),
    );
    assert_eq!(res.status.code(), Some(2));
    assert!(dir.path().join("bad.failed").exists());
    assert!(!dir.path().join("bad.csv").exists());
    // Laplace d=3 slope ~ -3 sanity path also exercises harmonic route
    let res = zonal(
        &[
            "spectrum",
            "--kernel",
            r#"{"family":"Laplace","c":2}"#,
            "--dim",
            "3",
            "--kmax",
            "100",
            "--out",
            "lap3",
        ],
        dir.path(),
    );
    assert!(res.status.success());
    let summary: serde_json::Value = serde_json::from_str(&read(dir.path(), "lap3.json")).unwrap();
    let slope = summary["slope"].as_f64().unwrap();
    assert!((-3.5..=-2.4).contains(&slope), "slope {slope}");
}

#[test]
fn fit_single_and_depth_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let res = zonal(
        &[
            "fit",
            "--target-ntk",
            r#"{"layers":2,"beta":1.0}"#,
            "--family",
            "gamma-exp",
            "--affine",
            "--out",
            "gfit",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let fit: serde_json::Value = serde_json::from_str(&read(dir.path(), "gfit.json")).unwrap();
    let gamma = fit["gamma"].as_f64().unwrap();
    assert!((gamma - 1.888).abs() < 0.3, "gamma {gamma}");
    assert_eq!(fit["family"], "GammaExp");
    assert!(fit["objective"].as_f64().unwrap() >= 0.0);

    let res = zonal(
        &[
            "fit",
            "--target-ntk",
            r#"{"family":"NtkFc","layers":2,"beta":0,"normalize":true}"#,
            "--family",
            "laplace",
            "--affine",
            "--depths",
            "2..6",
            "--out",
            "sweep",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let csv = read(dir.path(), "sweep.csv");
    assert_eq!(csv.lines().count(), 6); // header + 5 depths
    let summary: serde_json::Value = serde_json::from_str(&read(dir.path(), "sweep.json")).unwrap();
    assert_eq!(summary["strictly_increasing"], true);
}

#[test]
fn krr_fits_and_reports_singularity() {
    let dir = tempfile::tempdir().unwrap();
    let mut csv = String::new();
    for j in 0..20 {
        let t = std::f64::consts::TAU * j as f64 / 20.0;
        csv.push_str(&format!("{},{},{}\n", t.cos(), t.sin(), (2.0 * t).cos()));
    }
    std::fs::write(dir.path().join("train.csv"), &csv).unwrap();
    let res = zonal(
        &[
            "krr",
            "--kernel",
            r#"{"family":"Laplace","c":1.0}"#,
            "--data",
            "train.csv",
            "--target-col",
            "2",
            "--ridge",
            "1e-8",
            "--out",
            "model",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let summary: serde_json::Value = serde_json::from_str(&read(dir.path(), "model.json")).unwrap();
    assert!(summary["max_training_residual"].as_f64().unwrap() < 1e-5);
    let model: serde_json::Value =
        serde_json::from_str(&read(dir.path(), "model.model.json")).unwrap();
    assert_eq!(model["alpha"].as_array().unwrap().len(), 20);

    // duplicated rows with inconsistent targets at ridge 0: singular, exit 2
    std::fs::write(dir.path().join("dup.csv"), "1,0,1\n1,0,2\n0,1,0.5\n").unwrap();
    let res = zonal(
        &[
            "krr",
            "--kernel",
            r#"{"family":"Laplace","c":1.0}"#,
            "--data",
            "dup.csv",
            "--target-col",
            "2",
            "--ridge",
            "0",
            "--out",
            "sing",
        ],
        dir.path(),
    );
    assert_eq!(res.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("ridge"), "advice missing: {stderr}");
    assert!(dir.path().join("sing.failed").exists());
}

#[test]
fn gdsim_contrasts_polynomial_and_exponential_kernels() {
    let dir = tempfile::tempdir().unwrap();
    let res = zonal(
        &[
            "gdsim",
            "--kernel",
            r#"{"family":"NtkFc","layers":6,"beta":0,"normalize":true}"#,
            "--dim",
            "2",
            "--freqs",
            "2,4,8",
            "--n",
            "128",
            "--out",
            "ntk",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let res = zonal(
        &[
            "gdsim",
            "--kernel",
            r#"{"family":"Gaussian","c":2.0}"#,
            "--dim",
            "2",
            "--freqs",
            "2,4,8",
            "--n",
            "128",
            "--max-iter",
            "50000",
            "--out",
            "gauss",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let ntk: serde_json::Value = serde_json::from_str(&read(dir.path(), "ntk.json")).unwrap();
    let gauss: serde_json::Value = serde_json::from_str(&read(dir.path(), "gauss.json")).unwrap();
    let ntk_last = ntk["ratios"][1].as_f64().unwrap();
    assert!(ntk_last < 8.0, "NTK t8/t4 {ntk_last}");
    // Gaussian: last ratio huge or censored (null)
    if let Some(r) = gauss["ratios"][1].as_f64() {
        assert!(r > 20.0, "Gaussian t8/t4 {r}");
    }
    let csv = read(dir.path(), "ntk.csv");
    assert!(csv.starts_with("k,iterations\n"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn cexp_gram_from_csv_images() {
    let dir = tempfile::tempdir().unwrap();
    // 6 random-ish 4x4x1 images
    let mut csv = String::new();
    let mut state = 1u64;
    for _ in 0..6 {
        let row: Vec<String> = (0..16)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                format!("{:.6}", (state >> 11) as f64 / (1u64 << 53) as f64)
            })
            .collect();
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    std::fs::write(dir.path().join("imgs.csv"), &csv).unwrap();
    std::fs::write(
        dir.path().join("imgs.csv.json"),
        r#"{"height":4,"width":4,"channels":1}"#,
    )
    .unwrap();
    let res = zonal(
        &[
            "cexp",
            "--config",
            r#"{"base":{"family":"Laplace","c":0.048},"a":-11.491,"b":12.606,"layers":2,"beta":3.0}"#,
            "--images",
            "imgs.csv",
            "--normalize-diagonal",
            "--out",
            "gram",
        ],
        dir.path(),
    );
    assert!(
        res.status.success(),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let summary: serde_json::Value = serde_json::from_str(&read(dir.path(), "gram.json")).unwrap();
    assert_eq!(summary["psd_within_1e8"], true);
    assert_eq!(summary["n_images"], 6);
    let gram_csv = read(dir.path(), "gram.csv");
    assert_eq!(gram_csv.lines().count(), 6);
    let first: f64 = gram_csv
        .lines()
        .next()
        .unwrap()
        .split(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(
        (first - 1.0).abs() < 1e-9,
        "normalized diagonal, got {first}"
    );

    // missing sidecar -> exit 2
    std::fs::write(dir.path().join("naked.csv"), "1,2,3,4\n").unwrap();
    let res = zonal(
        &[
            "cexp",
            "--config",
            r#"{"base":{"family":"Laplace","c":1.0},"layers":1,"beta":1.0}"#,
            "--images",
            "naked.csv",
            "--out",
            "nope",
        ],
        dir.path(),
    );
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn outputs_do_not_depend_on_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "spectrum",
        "--kernel",
        r#"{"family":"NtkFc","layers":4,"beta":0.5}"#,
        "--dim",
        "3",
        "--kmax",
        "40",
    ];
    for (threads, out) in [("1", "t1"), ("4", "t4")] {
        let res = Command::new(env!("CARGO_BIN_EXE_zonal"))
            .args(args)
            .args(["--out", out])
            .env("ZONAL_THREADS", threads)
            .current_dir(dir.path())
            .output()
            .expect("binary runs");
        assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    }
    assert_eq!(read(dir.path(), "t1.csv"), read(dir.path(), "t4.csv"));
    assert_eq!(read(dir.path(), "t1.json"), read(dir.path(), "t4.json"));
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let res = zonal(&["spectrum", "--dim", "2"], dir.path()); // missing required args
    assert_eq!(res.status.code(), Some(1));
    let res = zonal(&["no-such-command"], dir.path());
    assert_eq!(res.status.code(), Some(1));
    let res = zonal(&["--help"], dir.path());
    assert_eq!(res.status.code(), Some(0));
}
