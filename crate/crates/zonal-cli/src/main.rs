//! Command-line front end: reproducible spectral analyses, kernel fits,
//! regression runs, and sample generation, all emitting CSV/JSON artifacts
//! plus a run manifest.

mod output;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::{write_failed_marker, OutputSet};
use zonal::cexp::{
    angle_uniform_grid, cexp_gram, cosine_grid, fit_kernel_to_ntk, images_from_bytes,
    images_from_csv, laplace_width_vs_depth, CExpConfig, Image,
};
use zonal::data::{load_csv, sample_disk, sample_sphere};
use zonal::kernels::ExpFamily;
use zonal::ntk::NtkConfig;
use zonal::regression::{krr_fit, learn_time_table};
use zonal::spectral::{
    decay_slope, default_quad_points, fourier_coefficients_s1, harmonic_coefficients,
};
use zonal::{Error, KernelHandle, KernelSpec};

/// Thread-count override; defaults to all available cores.
const THREADS_ENV: &str = "ZONAL_THREADS";

#[derive(Parser)]
#[command(
    name = "zonal",
    version,
    about = "Kernel spectra, NTK fits, and regression experiments",
    after_help = "Set ZONAL_THREADS to bound the worker-thread count (default: all cores).\n\
                  Every command writes <out>.manifest.json next to its outputs; on failure a\n\
                  <out>.failed marker is written instead.\n\
                  Exit codes: 0 ok, 1 usage, 2 domain/data error, 3 numerical failure."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Laplace,
    Gaussian,
    GammaExp,
}

impl From<FamilyArg> for ExpFamily {
    fn from(f: FamilyArg) -> ExpFamily {
        match f {
            FamilyArg::Laplace => ExpFamily::Laplace,
            FamilyArg::Gaussian => ExpFamily::Gaussian,
            FamilyArg::GammaExp => ExpFamily::GammaExp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum GridArg {
    /// equispaced cosines on [-1, 1]
    #[default]
    Cosine,
    /// cosines of equispaced angles on [0, pi]
    Angle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Harmonic spectrum of a kernel on S^{d-1}, with its decay slope.
    Spectrum {
        /// kernel JSON, e.g. '{"family":"Laplace","c":1.0}' or
        /// '{"family":"NtkFc","layers":6,"beta":0,"normalize":true}'
        #[arg(long)]
        kernel: String,
        /// ambient dimension d >= 2 (d = 2 is the circle)
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        kmax: usize,
        /// quadrature points (default max(512, 8 kmax))
        #[arg(long)]
        quad: Option<usize>,
        /// slope fit window lower edge
        #[arg(long, default_value_t = 10)]
        slope_lo: usize,
        /// slope fit window upper edge (default min(100, kmax))
        #[arg(long)]
        slope_hi: Option<usize>,
        /// output prefix: writes <out>.csv, <out>.json, <out>.manifest.json
        #[arg(long)]
        out: String,
    },
    /// Fit an exponential-family kernel to a fully connected NTK.
    Fit {
        /// target NTK JSON: '{"layers":2,"beta":1.0}' (optionally "normalize")
        #[arg(long = "target-ntk")]
        target_ntk: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// also fit affine constants a + b k(t)
        #[arg(long)]
        affine: bool,
        /// depth sweep like '2..10' or '2,4,8'; fits the width per depth
        #[arg(long)]
        depths: Option<String>,
        /// number of sample cosines
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, value_enum, default_value_t)]
        grid: GridArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
    },
    /// Kernel ridge regression on a CSV dataset.
    Krr {
        #[arg(long)]
        kernel: String,
        /// CSV file; numeric columns are features, non-numeric columns are
        /// one-hot encoded
        #[arg(long)]
        data: PathBuf,
        /// 0-based index of the target column
        #[arg(long = "target-col")]
        target_col: Option<usize>,
        #[arg(long)]
        ridge: f64,
        #[arg(long)]
        out: String,
    },
    /// Gradient-descent learning times for harmonics on S^{d-1}.
    Gdsim {
        #[arg(long)]
        kernel: String,
        #[arg(long)]
        dim: usize,
        /// comma-separated harmonic frequencies, e.g. '2,4,8'
        #[arg(long)]
        freqs: String,
        #[arg(long, default_value_t = 256)]
        n: usize,
        /// step size; default n / lambda_max(K)
        #[arg(long)]
        step: Option<f64>,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 200_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
    },
    /// Gram matrix of the hierarchical convolutional kernel over images.
    Cexp {
        /// config JSON, e.g. '{"base":{"family":"Laplace","c":0.048},
        /// "a":-11.491,"b":12.606,"layers":3,"beta":3.0}'
        #[arg(long)]
        config: String,
        /// image tensor file (.csv: one flattened image per row; .bin: raw
        /// little-endian f64), with a JSON sidecar at '<path>.json' holding
        /// {"height":..,"width":..,"channels":..}
        #[arg(long)]
        images: PathBuf,
        /// rescale the Gram so the diagonal is all ones
        #[arg(long = "normalize-diagonal")]
        normalize_diagonal: bool,
        #[arg(long)]
        out: String,
    },
    /// Generate uniform samples on a sphere or the unit disk.
    #[command(group(ArgGroup::new("domain").required(true).args(["sphere", "disk"])))]
    Gen {
        #[arg(long)]
        sphere: bool,
        #[arg(long)]
        disk: bool,
        /// ambient dimension (sphere only; the disk is 2-dimensional)
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_thread_pool();
    let started = Instant::now();
    let argv: Vec<String> = std::env::args().collect();
    let out_prefix = cli.cmd.out_prefix().to_string();
    match run(cli.cmd, argv, started) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            write_failed_marker(&out_prefix, &err.to_string());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

impl Cmd {
    fn out_prefix(&self) -> &str {
        match self {
            Cmd::Spectrum { out, .. }
            | Cmd::Fit { out, .. }
            | Cmd::Krr { out, .. }
            | Cmd::Gdsim { out, .. }
            | Cmd::Cexp { out, .. }
            | Cmd::Gen { out, .. } => out,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Cmd::Spectrum { .. } => "spectrum",
            Cmd::Fit { .. } => "fit",
            Cmd::Krr { .. } => "krr",
            Cmd::Gdsim { .. } => "gdsim",
            Cmd::Cexp { .. } => "cexp",
            Cmd::Gen { .. } => "gen",
        }
    }
}

fn run(cmd: Cmd, argv: Vec<String>, started: Instant) -> Result<(), Error> {
    let name = cmd.name();
    match cmd {
        Cmd::Spectrum {
            kernel,
            dim,
            kmax,
            quad,
            slope_lo,
            slope_hi,
            out,
        } => {
            let spec = parse_kernel(&kernel)?;
            let handle = spec.handle()?;
            cmd_spectrum(
                spec, handle, dim, kmax, quad, slope_lo, slope_hi, &out, name, argv, started,
            )
        }
        Cmd::Fit {
            target_ntk,
            family,
            affine,
            depths,
            points,
            grid,
            seed,
            out,
        } => {
            let target = parse_ntk(&target_ntk)?;
            let u = match grid {
                GridArg::Cosine => cosine_grid(points.max(2)),
                GridArg::Angle => angle_uniform_grid(points.max(2)),
            };
            cmd_fit(
                target,
                family.into(),
                affine,
                depths,
                &u,
                seed,
                &out,
                name,
                argv,
                started,
            )
        }
        Cmd::Krr {
            kernel,
            data,
            target_col,
            ridge,
            out,
        } => {
            let spec = parse_kernel(&kernel)?;
            cmd_krr(spec, &data, target_col, ridge, &out, name, argv, started)
        }
        Cmd::Gdsim {
            kernel,
            dim,
            freqs,
            n,
            step,
            tol,
            max_iter,
            seed,
            out,
        } => {
            let spec = parse_kernel(&kernel)?;
            let freqs = parse_usize_list(&freqs)?;
            cmd_gdsim(
                spec, dim, &freqs, n, step, tol, max_iter, seed, &out, name, argv, started,
            )
        }
        Cmd::Cexp {
            config,
            images,
            normalize_diagonal,
            out,
        } => {
            let cfg: CExpConfig = serde_json::from_str(&config)
                .map_err(|e| Error::Config(format!("bad --config JSON: {e}")))?;
            cmd_cexp(cfg, &images, normalize_diagonal, &out, name, argv, started)
        }
        Cmd::Gen {
            sphere,
            disk,
            dim,
            n,
            seed,
            out,
        } => cmd_gen(sphere, disk, dim, n, seed, &out, name, argv, started),
    }
}

fn parse_kernel(json: &str) -> Result<KernelSpec, Error> {
    let spec: KernelSpec =
        serde_json::from_str(json).map_err(|e| Error::Config(format!("bad --kernel JSON: {e}")))?;
    spec.validate()?;
    Ok(spec)
}

/// Accept either plain `{"layers":..,"beta":..}` or the family-tagged form.
fn parse_ntk(json: &str) -> Result<NtkConfig, Error> {
    if let Ok(cfg) = serde_json::from_str::<NtkConfig>(json) {
        cfg.validate()?;
        return Ok(cfg);
    }
    match serde_json::from_str::<KernelSpec>(json) {
        Ok(KernelSpec::NtkFc {
            layers,
            beta,
            normalize,
        }) => {
            let cfg = NtkConfig {
                layers,
                beta,
                normalize,
            };
            cfg.validate()?;
            Ok(cfg)
        }
        Ok(other) => Err(Error::Config(format!(
            "--target-ntk must describe an NtkFc kernel, got {}",
            other.label()
        ))),
        Err(e) => Err(Error::Config(format!("bad --target-ntk JSON: {e}"))),
    }
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|f| {
            f.trim()
                .parse::<usize>()
                .map_err(|e| Error::Config(format!("bad list entry '{f}': {e}")))
        })
        .collect()
}

/// '2..10' (inclusive) or '2,4,8'.
fn parse_depths(text: &str) -> Result<Vec<usize>, Error> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo
            .trim()
            .parse()
            .map_err(|e| Error::Config(format!("bad range: {e}")))?;
        let hi: usize = hi
            .trim()
            .parse()
            .map_err(|e| Error::Config(format!("bad range: {e}")))?;
        if lo > hi {
            return Err(Error::Config(format!("empty depth range {lo}..{hi}")));
        }
        Ok((lo..=hi).collect())
    } else {
        parse_usize_list(text)
    }
}

#[derive(Serialize)]
struct SpectrumSummary {
    kernel: KernelSpec,
    dim: usize,
    k_max: usize,
    quad_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    slope: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r_squared: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slope_error: Option<String>,
    slope_window: [usize; 2],
    partial_trace: f64,
    kernel_at_one: f64,
}

#[allow(clippy::too_many_arguments)]
fn cmd_spectrum(
    spec: KernelSpec,
    handle: KernelHandle,
    dim: usize,
    kmax: usize,
    quad: Option<usize>,
    slope_lo: usize,
    slope_hi: Option<usize>,
    out: &str,
    name: &str,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), Error> {
    let quad_points = quad.unwrap_or_else(|| default_quad_points(kmax));
    let mut spectrum = if dim == 2 {
        fourier_coefficients_s1(&handle, kmax, quad_points)?
    } else {
        harmonic_coefficients(&handle, dim, kmax, quad_points)?
    };
    spectrum.kernel = Some(spec);
    let hi = slope_hi.unwrap_or(kmax.min(100));
    let (slope, r_squared, slope_error) = match decay_slope(&spectrum, slope_lo, hi) {
        Ok((s, r)) => (Some(s), Some(r), None),
        Err(e) => (None, None, Some(e.to_string())),
    };
    let summary = SpectrumSummary {
        kernel: spec,
        dim,
        k_max: kmax,
        quad_points,
        slope,
        r_squared,
        slope_error,
        slope_window: [slope_lo, hi],
        partial_trace: spectrum.partial_trace()?,
        kernel_at_one: zonal::ZonalKernel::eval_cos(&handle, 1.0)?,
    };
    let mut outputs = OutputSet::new(out);
    outputs.stage(".csv", spectrum.to_csv()?);
    outputs.stage(".json", pretty(&summary));
    outputs.commit(name, argv, None, started)?;
    Ok(())
}

#[derive(Serialize)]
struct FitExport {
    family: String,
    a: f64,
    b: f64,
    c: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<f64>,
    objective: f64,
}

#[allow(clippy::too_many_arguments)]
fn cmd_fit(
    target: NtkConfig,
    family: ExpFamily,
    affine: bool,
    depths: Option<String>,
    u: &[f64],
    seed: u64,
    out: &str,
    name: &str,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), Error> {
    let mut outputs = OutputSet::new(out);
    match depths {
        Some(text) => {
            if !matches!(family, ExpFamily::Laplace) {
                return Err(Error::Config(
                    "depth sweeps fit the Laplace width; use --family laplace".into(),
                ));
            }
            let depths = parse_depths(&text)?;
            let table = laplace_width_vs_depth(&depths, u, affine, seed)?;
            let mut csv = String::from("layers,c\n");
            for (layers, c) in &table {
                let _ = writeln!(csv, "{layers},{c:e}");
            }
            #[derive(Serialize)]
            struct SweepSummary {
                family: String,
                affine: bool,
                depths: Vec<usize>,
                widths: Vec<f64>,
                strictly_increasing: bool,
            }
            let summary = SweepSummary {
                family: "Laplace".into(),
                affine,
                depths: table.iter().map(|t| t.0).collect(),
                widths: table.iter().map(|t| t.1).collect(),
                strictly_increasing: table.windows(2).all(|w| w[1].1 > w[0].1),
            };
            outputs.stage(".csv", csv);
            outputs.stage(".json", pretty(&summary));
        }
        None => {
            let fit = fit_kernel_to_ntk(family, &target, u, affine, seed)?;
            let export = FitExport {
                family: fit.family.name().to_string(),
                a: fit.a,
                b: fit.b,
                c: fit.c,
                gamma: fit.gamma,
                objective: fit.objective,
            };
            outputs.stage(".json", pretty(&export));
        }
    }
    outputs.commit(name, argv, Some(seed), started)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_krr(
    spec: KernelSpec,
    data: &PathBuf,
    target_col: Option<usize>,
    ridge: f64,
    out: &str,
    name: &str,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), Error> {
    let ds = load_csv(data, target_col)?;
    let y = ds.y.as_ref().ok_or_else(|| {
        Error::Config("KRR needs targets; pass --target-col for the label column".into())
    })?;
    let handle = spec.handle()?;
    let model = krr_fit(handle, &ds.x, y, ridge)?;

    let mut max_residual = 0.0f64;
    let mut mse = 0.0f64;
    for (p, &yi) in ds.x.iter().zip(y) {
        let diff = model.predict(p)? - yi;
        max_residual = max_residual.max(diff.abs());
        mse += diff * diff;
    }
    mse /= ds.x.len() as f64;

    #[derive(Serialize)]
    struct ModelExport<'a> {
        kernel: KernelSpec,
        ridge: f64,
        alpha: &'a [f64],
        points: &'a [Vec<f64>],
        #[serde(skip_serializing_if = "Option::is_none")]
        jitter: Option<f64>,
        residual_norm: f64,
    }
    #[derive(Serialize)]
    struct KrrSummary {
        n: usize,
        dim: usize,
        ridge: f64,
        training_mse: f64,
        max_training_residual: f64,
        rejected_rows: usize,
    }
    let mut outputs = OutputSet::new(out);
    outputs.stage(
        ".model.json",
        pretty(&ModelExport {
            kernel: spec,
            ridge,
            alpha: &model.alpha,
            points: &model.train_points,
            jitter: model.jitter,
            residual_norm: model.residual_norm,
        }),
    );
    outputs.stage(
        ".json",
        pretty(&KrrSummary {
            n: ds.n(),
            dim: ds.dim(),
            ridge,
            training_mse: mse,
            max_training_residual: max_residual,
            rejected_rows: ds.meta.rejected_rows,
        }),
    );
    outputs.commit(name, argv, None, started)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_gdsim(
    spec: KernelSpec,
    dim: usize,
    freqs: &[usize],
    n: usize,
    step: Option<f64>,
    tol: f64,
    max_iter: usize,
    seed: u64,
    out: &str,
    name: &str,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), Error> {
    let handle = spec.handle()?;
    let table = learn_time_table(&handle, dim, freqs, n, step, tol, max_iter, seed)?;
    if !table.stable_step {
        eprintln!(
            "warning: step {} exceeds the descent bound 2n/lambda_max; iterations may not decrease",
            table.step
        );
    }
    #[derive(Serialize)]
    struct GdSummary {
        kernel: KernelSpec,
        dim: usize,
        n: usize,
        step: f64,
        stable_step: bool,
        tol: f64,
        max_iter: usize,
        frequencies: Vec<usize>,
        iterations: Vec<Option<usize>>,
        /// iteration ratios between consecutive frequencies (None if a leg
        /// was censored)
        ratios: Vec<Option<f64>>,
    }
    let ratios = table
        .entries
        .windows(2)
        .map(|w| match (w[0].iterations, w[1].iterations) {
            (Some(a), Some(b)) if a > 0 => Some(b as f64 / a as f64),
            _ => None,
        })
        .collect();
    let summary = GdSummary {
        kernel: spec,
        dim,
        n,
        step: table.step,
        stable_step: table.stable_step,
        tol,
        max_iter,
        frequencies: table.entries.iter().map(|t| t.frequency).collect(),
        iterations: table.entries.iter().map(|t| t.iterations).collect(),
        ratios,
    };
    let mut outputs = OutputSet::new(out);
    outputs.stage(".csv", table.to_csv());
    outputs.stage(".json", pretty(&summary));
    outputs.commit(name, argv, Some(seed), started)?;
    Ok(())
}

#[derive(serde::Deserialize)]
struct ImageSidecar {
    height: usize,
    width: usize,
    channels: usize,
}

fn load_images(path: &PathBuf) -> Result<Vec<Image>, Error> {
    let sidecar_path = format!("{}.json", path.display());
    let sidecar_text = std::fs::read_to_string(&sidecar_path)
        .map_err(|e| Error::Config(format!("cannot read image sidecar {sidecar_path}: {e}")))?;
    let sidecar: ImageSidecar = serde_json::from_str(&sidecar_text)
        .map_err(|e| Error::Config(format!("bad sidecar {sidecar_path}: {e}")))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext {
        "csv" => {
            let text = std::fs::read_to_string(path)?;
            images_from_csv(&text, sidecar.height, sidecar.width, sidecar.channels)
        }
        "bin" => {
            let bytes = std::fs::read(path)?;
            images_from_bytes(&bytes, sidecar.height, sidecar.width, sidecar.channels)
        }
        other => Err(Error::Config(format!(
            "unknown image container '.{other}' (expected .csv or .bin)"
        ))),
    }
}

fn cmd_cexp(
    cfg: CExpConfig,
    images: &PathBuf,
    normalize_diagonal: bool,
    out: &str,
    name: &str,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), Error> {
    cfg.validate()?;
    let imgs = load_images(images)?;
    let gram = cexp_gram(&cfg, &imgs, normalize_diagonal)?;
    let n = gram.n();
    let mut csv = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                csv.push(',');
            }
            let _ = write!(csv, "{:e}", gram.get(i, j));
        }
        csv.push('\n');
    }
    let (min_eig, max_eig) = gram.eigenvalue_range();
    #[derive(Serialize)]
    struct CexpSummary {
        config: CExpConfig,
        n_images: usize,
        normalize_diagonal: bool,
        min_eigenvalue: f64,
        max_eigenvalue: f64,
        psd_within_1e8: bool,
    }
    let summary = CexpSummary {
        config: cfg,
        n_images: n,
        normalize_diagonal,
        min_eigenvalue: min_eig,
        max_eigenvalue: max_eig,
        psd_within_1e8: min_eig >= -1e-8 * max_eig,
    };
    let mut outputs = OutputSet::new(out);
    outputs.stage(".csv", csv);
    outputs.stage(".json", pretty(&summary));
    outputs.commit(name, argv, None, started)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    sphere: bool,
    _disk: bool,
    dim: Option<usize>,
    n: usize,
    seed: u64,
    out: &str,
    name: &str,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), Error> {
    let points = if sphere {
        let d = dim.ok_or_else(|| Error::Config("--sphere needs --dim".into()))?;
        if d < 2 {
            return Err(Error::Config(format!(
                "sphere dimension must be >= 2, got {d}"
            )));
        }
        sample_sphere(d, n, seed)
    } else {
        if let Some(d) = dim {
            if d != 2 {
                return Err(Error::Config(format!(
                    "the disk is 2-dimensional, got --dim {d}"
                )));
            }
        }
        sample_disk(n, seed)
    };
    let mut csv = String::new();
    for p in &points {
        for (j, v) in p.iter().enumerate() {
            if j > 0 {
                csv.push(',');
            }
            let _ = write!(csv, "{v:e}");
        }
        csv.push('\n');
    }
    let mut outputs = OutputSet::new(out);
    outputs.stage(".csv", csv);
    outputs.commit(name, argv, Some(seed), started)?;
    Ok(())
}

fn pretty<T: Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("summary serializes");
    bytes.push(b'\n');
    bytes
}
