//! Kernel ridge regression / minimum-norm interpolation, and a kernel
//! gradient-descent simulator that measures how many steps each harmonic
//! frequency takes to learn.
//!
//! The GD iteration acts on function values at the training points,
//! f_{t+1} = f_t - (η/n) K (f_t - y) with f_0 = 0, so a target lying in a
//! single eigenspace of K decays geometrically at rate (1 - η λ / n). For
//! kernels whose spectrum decays as k^{-d} the convergence time of a
//! frequency-k target grows as k^d; for the Gaussian kernel it explodes
//! exponentially.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::kernels::{gram, AmbientKernel};
use crate::special::gegenbauer_normalized;

/// A fitted kernel ridge regression model: f(x) = Σ_i α_i k(x, x_i).
#[derive(Debug, Clone)]
pub struct KrrModel<K: AmbientKernel> {
    kernel: K,
    pub ridge: f64,
    pub alpha: Vec<f64>,
    pub train_points: Vec<Vec<f64>>,
    /// jitter added on the spectral fallback path (reported, never silent)
    pub jitter: Option<f64>,
    /// ‖(K + λI)α - y‖ at fit time
    pub residual_norm: f64,
}

/// Residual tolerance of the representer system, relative to ‖y‖.
pub const FIT_RESIDUAL_TOL: f64 = 1e-8;

/// Solve (K + λI) α = y and keep the training set for prediction.
pub fn krr_fit<K: AmbientKernel>(
    kernel: K,
    x: &[Vec<f64>],
    y: &[f64],
    ridge: f64,
) -> Result<KrrModel<K>> {
    if x.is_empty() {
        return Err(Error::Config(
            "KRR needs at least one training point".into(),
        ));
    }
    if x.len() != y.len() {
        return Err(Error::Config(format!(
            "{} points but {} targets",
            x.len(),
            y.len()
        )));
    }
    if ridge.is_nan() || ridge < 0.0 || !ridge.is_finite() {
        return Err(Error::Config(format!(
            "ridge must be finite and >= 0, got {ridge}"
        )));
    }
    let n = x.len();
    let k_mat = gram(&kernel, x)?.into_matrix();
    let mut system = k_mat.clone();
    for i in 0..n {
        system[(i, i)] += ridge;
    }
    let rhs = DVector::from_column_slice(y);

    let mut jitter = None;
    let alpha = match system.clone().cholesky() {
        Some(chol) => chol.solve(&rhs),
        None => {
            // spectral fallback; a tiny jitter regularizes the zero modes of
            // a numerically singular K when no ridge was requested
            let extra = if ridge == 0.0 {
                1e-12 * k_mat.trace() / n as f64
            } else {
                0.0
            };
            if extra > 0.0 {
                jitter = Some(extra);
            }
            let eig = system.clone().symmetric_eigen();
            let mut coeffs = eig.eigenvectors.transpose() * &rhs;
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c /= eig.eigenvalues[i] + extra;
            }
            &eig.eigenvectors * coeffs
        }
    };

    let residual = (&system * &alpha - &rhs).norm();
    let y_norm = rhs.norm();
    if residual > FIT_RESIDUAL_TOL * y_norm {
        return Err(Error::SingularSystem(format!(
            "normal equations solved to residual {residual:.3e} > {FIT_RESIDUAL_TOL:e}·‖y‖; \
             the Gram matrix is numerically singular — add a ridge term"
        )));
    }
    Ok(KrrModel {
        kernel,
        ridge,
        alpha: alpha.iter().copied().collect(),
        train_points: x.to_vec(),
        jitter,
        residual_norm: residual,
    })
}

impl<K: AmbientKernel> KrrModel<K> {
    /// f(x) = Σ_i α_i k(x, x_i).
    pub fn predict(&self, x: &[f64]) -> Result<f64> {
        self.kernel.validate_point(x)?;
        Ok(self
            .train_points
            .iter()
            .zip(&self.alpha)
            .map(|(p, a)| a * self.kernel.eval_prechecked(x, p))
            .sum())
    }

    /// Mean squared error over the training set.
    pub fn training_mse(&self, y: &[f64]) -> Result<f64> {
        let mut acc = 0.0;
        for (p, &yi) in self.train_points.iter().zip(y) {
            let d = self.predict(p)? - yi;
            acc += d * d;
        }
        Ok(acc / self.train_points.len() as f64)
    }
}

/// Prediction shorthand mirroring [`KrrModel::predict`].
pub fn krr_predict<K: AmbientKernel>(model: &KrrModel<K>, x: &[f64]) -> Result<f64> {
    model.predict(x)
}

/// Record of one gradient-descent run.
#[derive(Debug, Clone)]
pub struct GdTrace {
    pub step: f64,
    /// (iteration, training MSE) per iteration, including iteration 0
    pub iterations: Vec<(usize, f64)>,
    /// first iteration with MSE <= tol · MSE(0), if reached
    pub converged_at: Option<usize>,
    /// whether the step satisfied the descent bound η < 2n/λ_max(K)
    pub stable_step: bool,
}

impl GdTrace {
    /// CSV export with header `iter,error`.
    pub fn to_csv(&self) -> String {
        use std::fmt::Write;
        let mut out = String::from("iter,error\n");
        for (it, err) in &self.iterations {
            let _ = writeln!(out, "{it},{err:e}");
        }
        out
    }
}

/// Simulate f_{t+1} = f_t - (η/n) K (f_t - y) from f_0 = 0 and trace the
/// training error. Convergence is relative: MSE(t) <= `tol` · MSE(0).
pub fn gd_simulate<K: AmbientKernel>(
    kernel: &K,
    x: &[Vec<f64>],
    y: &[f64],
    step: f64,
    tol: f64,
    max_iter: usize,
) -> Result<GdTrace> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::Config(
            "need matching, nonempty points and targets".into(),
        ));
    }
    if step.is_nan() || step <= 0.0 || tol.is_nan() || tol <= 0.0 {
        return Err(Error::Config(format!(
            "need step > 0 and tol > 0, got {step}, {tol}"
        )));
    }
    let k_mat = gram(kernel, x)?.into_matrix();
    let lambda_max = k_mat
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::NEG_INFINITY, |m, &v| m.max(v));
    let n = x.len() as f64;
    let stable = step < 2.0 * n / lambda_max;
    run_gd(&k_mat, y, step, tol, max_iter, stable)
}

fn run_gd(
    k_mat: &DMatrix<f64>,
    y: &[f64],
    step: f64,
    tol: f64,
    max_iter: usize,
    stable: bool,
) -> Result<GdTrace> {
    let n = y.len();
    let target = DVector::from_column_slice(y);
    let mut f = DVector::zeros(n);
    let mse0 = target.norm_squared() / n as f64;
    let mut trace = GdTrace {
        step,
        iterations: Vec::new(),
        converged_at: None,
        stable_step: stable,
    };
    for it in 0..=max_iter {
        let err = &f - &target;
        let mse = err.norm_squared() / n as f64;
        trace.iterations.push((it, mse));
        if mse <= tol * mse0 {
            trace.converged_at = Some(it);
            break;
        }
        if mse0 > 0.0 && mse > 1e3 * mse0 {
            return Err(Error::Divergence(format!(
                "training error grew to {mse:.3e} (initial {mse0:.3e}) at iteration {it}; \
             reduce the step"
            )));
        }
        if it == max_iter {
            break;
        }
        f -= (step / n as f64) * (k_mat * err);
    }
    Ok(trace)
}

/// One row of a learning-time table.
#[derive(Debug, Clone, Copy)]
pub struct LearnTime {
    pub frequency: usize,
    /// iterations to relative tolerance; `None` when censored at max_iter
    pub iterations: Option<usize>,
}

/// Learning times per frequency, with the step the runs used.
#[derive(Debug, Clone)]
pub struct LearnTimeTable {
    pub entries: Vec<LearnTime>,
    /// step size η shared by all runs
    pub step: f64,
    /// whether η satisfied the descent bound 2n/λ_max(K)
    pub stable_step: bool,
}

impl LearnTimeTable {
    /// CSV export with header `k,iterations`; censored entries leave the
    /// iteration field empty.
    pub fn to_csv(&self) -> String {
        use std::fmt::Write;
        let mut out = String::from("k,iterations\n");
        for row in &self.entries {
            match row.iterations {
                Some(t) => {
                    let _ = writeln!(out, "{},{t}", row.frequency);
                }
                None => {
                    let _ = writeln!(out, "{},", row.frequency);
                }
            }
        }
        out
    }
}

/// Iterations gradient descent needs to learn a frequency-k harmonic on
/// S^{d-1}, for each requested frequency.
///
/// The training grid is equispaced on the circle (where zonal Gram matrices
/// are exactly diagonalized by the Fourier modes) and a seeded uniform
/// sphere sample for d >= 3. Targets are cos(kθ) on the circle and the
/// normalized Gegenbauer function G_k(x·e_1) for d >= 3. Pass `step: None`
/// to use η = n / λ_max(K), the midpoint of the stable range.
#[allow(clippy::too_many_arguments)]
pub fn learn_time_table<K: AmbientKernel>(
    kernel: &K,
    d: usize,
    frequencies: &[usize],
    n: usize,
    step: Option<f64>,
    tol: f64,
    max_iter: usize,
    seed: u64,
) -> Result<LearnTimeTable> {
    if d < 2 {
        return Err(Error::Config("learning-time table needs d >= 2".into()));
    }
    for &k in frequencies {
        if 4 * k > n {
            return Err(Error::Config(format!(
                "frequency {k} is not resolvable with {n} sample points (need k <= n/4)"
            )));
        }
    }
    let points: Vec<Vec<f64>> = if d == 2 {
        (0..n)
            .map(|j| {
                let theta = std::f64::consts::TAU * j as f64 / n as f64;
                vec![theta.cos(), theta.sin()]
            })
            .collect()
    } else {
        crate::data::sample_sphere(d, n, seed)
    };
    let k_mat = gram(kernel, &points)?.into_matrix();
    let lambda_max = k_mat
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::NEG_INFINITY, |m, &v| m.max(v));
    let eta = step.unwrap_or(n as f64 / lambda_max);
    let stable = eta < 2.0 * n as f64 / lambda_max;

    let mut entries = Vec::with_capacity(frequencies.len());
    for &k in frequencies {
        let y: Vec<f64> = if d == 2 {
            (0..n)
                .map(|j| (k as f64 * std::f64::consts::TAU * j as f64 / n as f64).cos())
                .collect()
        } else {
            points
                .iter()
                .map(|p| gegenbauer_normalized(d, k, p[0].clamp(-1.0, 1.0)))
                .collect()
        };
        let trace = run_gd(&k_mat, &y, eta, tol, max_iter, stable)?;
        entries.push(LearnTime {
            frequency: k,
            iterations: trace.converged_at,
        });
    }
    Ok(LearnTimeTable {
        entries,
        step: eta,
        stable_step: stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{AmbientKernelSpec, CustomKernel, ZonalKernelSpec};
    use approx::assert_abs_diff_eq;

    fn laplace() -> AmbientKernelSpec {
        AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), false)
    }

    fn circle_points(n: usize) -> Vec<Vec<f64>> {
        (0..n)
            .map(|j| {
                let t = std::f64::consts::TAU * j as f64 / n as f64;
                vec![t.cos(), t.sin()]
            })
            .collect()
    }

    #[test]
    fn single_point_fit_interpolates() {
        let model = krr_fit(laplace(), &[vec![0.3, 0.4]], &[2.5], 0.0).unwrap();
        assert_abs_diff_eq!(model.alpha[0], 2.5, epsilon = 1e-12); // k(x,x) = 1
        assert_abs_diff_eq!(model.predict(&[0.3, 0.4]).unwrap(), 2.5, epsilon = 1e-10);
    }

    #[test]
    fn zero_targets_give_zero_model() {
        let pts = circle_points(12);
        let y = vec![0.0; 12];
        let model = krr_fit(laplace(), &pts, &y, 0.0).unwrap();
        for a in &model.alpha {
            assert_abs_diff_eq!(*a, 0.0, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(model.predict(&[0.0, 1.0]).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn interpolation_on_the_circle() {
        let pts = circle_points(30);
        let y: Vec<f64> = (0..30)
            .map(|j| (3.0 * std::f64::consts::TAU * j as f64 / 30.0).cos())
            .collect();
        let model = krr_fit(laplace(), &pts, &y, 1e-8).unwrap();
        assert!(
            model.residual_norm <= FIT_RESIDUAL_TOL * y.iter().map(|v| v * v).sum::<f64>().sqrt()
        );
        let mut worst = 0.0f64;
        for (p, &yi) in pts.iter().zip(&y) {
            worst = worst.max((model.predict(p).unwrap() - yi).abs());
        }
        assert!(worst <= 1e-5, "interpolation residual {worst}");
    }

    #[test]
    fn singular_system_without_ridge_is_an_error() {
        // duplicated points with inconsistent targets: no solution exists
        let pts = vec![vec![1.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]];
        let err = krr_fit(laplace(), &pts, &[1.0, 2.0, 0.5], 0.0).unwrap_err();
        assert!(matches!(err, Error::SingularSystem(_)), "got {err}");
        // a ridge shrinks the system into solvability
        assert!(krr_fit(laplace(), &pts, &[1.0, 2.0, 0.5], 1e-3).is_ok());
        // duplicated points with consistent targets are fine (jitter path)
        let model = krr_fit(laplace(), &pts[..2], &[1.5, 1.5], 0.0).unwrap();
        assert!(model.jitter.is_some());
        assert_abs_diff_eq!(model.predict(&pts[0]).unwrap(), 1.5, epsilon = 1e-5);
    }

    #[test]
    fn dimension_mismatch_is_config_error() {
        let err = krr_fit(laplace(), &[vec![1.0, 0.0]], &[1.0, 2.0], 0.0).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        assert!(krr_fit(laplace(), &[vec![1.0, 0.0]], &[1.0], -0.5).is_err());
    }

    #[test]
    fn constant_kernel_predicts_alpha_sum() {
        let k = CustomKernel(|_: &[f64], _: &[f64]| 1.0);
        let pts = vec![vec![0.0], vec![1.0], vec![2.0]];
        let model = krr_fit(k, &pts, &[3.0, 3.0, 3.0], 1e-6).unwrap();
        let alpha_sum: f64 = model.alpha.iter().sum();
        assert_abs_diff_eq!(model.predict(&[9.9]).unwrap(), alpha_sum, epsilon = 1e-12);
    }

    #[test]
    fn mirrored_data_gives_mirrored_predictions() {
        // symmetric instance: points and targets invariant under y-flip
        let pts = vec![
            vec![0.9, 0.1],
            vec![0.9, -0.1],
            vec![-0.2, 0.7],
            vec![-0.2, -0.7],
            vec![1.0, 0.0],
        ];
        let y = vec![1.0, 1.0, -0.5, -0.5, 2.0];
        let model = krr_fit(laplace(), &pts, &y, 1e-6).unwrap();
        let probe = [0.4, 0.33];
        let mirrored = [0.4, -0.33];
        assert_abs_diff_eq!(
            model.predict(&probe).unwrap(),
            model.predict(&mirrored).unwrap(),
            epsilon = 1e-10
        );
    }

    #[test]
    fn ridge_monotonicity_of_training_error() {
        let pts = circle_points(24);
        let y: Vec<f64> = (0..24)
            .map(|j| (2.0 * std::f64::consts::TAU * j as f64 / 24.0).cos() + 0.1)
            .collect();
        let mut last = -1.0;
        for ridge in [0.0, 1e-6, 1e-4, 1e-2, 1.0, 10.0] {
            let model = krr_fit(laplace(), &pts, &y, ridge).unwrap();
            let mse = model.training_mse(&y).unwrap();
            assert!(
                mse >= last - 1e-12,
                "training error not monotone: {mse} after {last} at ridge {ridge}"
            );
            last = mse;
        }
    }

    #[test]
    fn gd_zero_target_converges_immediately() {
        let pts = circle_points(16);
        let y = vec![0.0; 16];
        let trace = gd_simulate(&laplace(), &pts, &y, 1.0, 1e-4, 100).unwrap();
        assert_eq!(trace.converged_at, Some(0));
    }

    #[test]
    fn gd_rank_one_decays_geometrically() {
        let pts = vec![vec![1.0, 0.0]; 8];
        let y = vec![2.0; 8];
        let eta = 0.05;
        let trace = gd_simulate(&laplace(), &pts, &y, eta, 1e-10, 2000).unwrap();
        // single eigenmode: lambda_1 = n k(1) = 8, rate (1 - eta*lambda/n)^2 per
        // step in MSE
        let rate = 1.0 - eta * 8.0 / 8.0;
        for w in trace.iterations.windows(2).take(20) {
            let measured = w[1].1 / w[0].1;
            assert_abs_diff_eq!(measured, rate * rate, epsilon = 1e-8);
        }
    }

    #[test]
    fn gd_error_is_nonincreasing_under_stable_steps() {
        let pts = circle_points(32);
        let y: Vec<f64> = (0..32)
            .map(|j| (3.0 * std::f64::consts::TAU * j as f64 / 32.0).cos() + 0.3)
            .collect();
        let trace = gd_simulate(&laplace(), &pts, &y, 1.0, 1e-8, 50_000).unwrap();
        assert!(trace.stable_step);
        for w in trace.iterations.windows(2) {
            assert!(w[1].1 <= w[0].1 * (1.0 + 1e-12), "error increased: {w:?}");
        }
        let csv = trace.to_csv();
        assert!(csv.starts_with("iter,error\n"));
        assert_eq!(csv.lines().count(), trace.iterations.len() + 1);
    }

    #[test]
    fn gd_divergence_is_detected() {
        let pts = circle_points(16);
        let y: Vec<f64> = (0..16).map(|j| (j as f64).sin() + 1.0).collect();
        // far beyond the stability threshold
        let err = gd_simulate(&laplace(), &pts, &y, 1e4, 1e-6, 10_000).unwrap_err();
        assert!(matches!(err, Error::Divergence(_)));
    }

    #[test]
    fn gd_matches_minimum_norm_interpolant() {
        let pts = circle_points(20);
        let y: Vec<f64> = (0..20)
            .map(|j| (2.0 * std::f64::consts::TAU * j as f64 / 20.0).cos())
            .collect();
        let model = krr_fit(laplace(), &pts, &y, 0.0).unwrap();
        let trace = gd_simulate(&laplace(), &pts, &y, 1.0, 1e-14, 200_000).unwrap();
        assert!(trace.converged_at.is_some());
        // after convergence the iterate's training predictions match the
        // interpolant's values, which are the targets themselves
        let mut worst = 0.0f64;
        for (p, &yi) in pts.iter().zip(&y) {
            worst = worst.max((model.predict(p).unwrap() - yi).abs());
        }
        assert!(worst <= 1e-4, "gd/krr disagreement {worst}");
    }

    #[test]
    fn learn_time_grows_with_frequency() {
        let lap = laplace();
        let table = learn_time_table(&lap, 2, &[0, 2, 4, 8], 64, None, 1e-4, 100_000, 0).unwrap();
        let times: Vec<usize> = table
            .entries
            .iter()
            .map(|t| t.iterations.unwrap())
            .collect();
        assert!(times.windows(2).all(|w| w[0] <= w[1]), "times {times:?}");
        assert_eq!(table.entries[0].frequency, 0);
        assert!(table.stable_step);
        // constant target is the largest eigenvalue mode: fastest
        assert!(times[0] < times[3]);
        let csv = table.to_csv();
        assert!(csv.starts_with("k,iterations\n"));
        assert_eq!(csv.lines().count(), 5);
    }

    #[test]
    fn learn_time_frequency_resolvability() {
        let lap = laplace();
        assert!(learn_time_table(&lap, 2, &[20], 64, None, 1e-4, 100, 0).is_err());
    }

    #[test]
    fn gaussian_learn_times_explode() {
        let gau = AmbientKernelSpec::new(ZonalKernelSpec::gaussian(2.0).unwrap(), false);
        let table = learn_time_table(&gau, 2, &[2, 4, 8], 128, None, 1e-4, 50_000, 0)
            .unwrap()
            .entries;
        let t2 = table[0].iterations.unwrap() as f64;
        let t4 = table[1].iterations.unwrap() as f64;
        // censored (None) means an even stronger explosion
        if let Some(t8) = table[2].iterations {
            assert!(t8 as f64 / t4 > 20.0, "t8/t4 = {}", t8 as f64 / t4);
        }
        assert!(t4 / t2 > 2.0);
    }
}
