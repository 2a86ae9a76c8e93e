//! Eigenvalue spectra of zonal kernels on S^{d-1}.
//!
//! A zonal kernel k(x·z) decomposes over the spherical harmonics as
//! k(t) = Σ_k λ_k N(d,k) G_k(t), where G_k is the Gegenbauer polynomial of
//! index (d-2)/2 normalized to G_k(1) = 1 and N(d,k) counts harmonics of
//! frequency k. All eigenvalues here are taken with respect to the uniform
//! *probability* measure, so the Mercer trace identity reads
//! Σ_k λ_k N(d,k) = k(1).
//!
//! Two independent routes to the Laplace kernel's eigenvalues are provided:
//! Funk–Hecke quadrature (any zonal kernel) and the Bessel-integral route
//! through the kernel's ambient Fourier transform (Laplace only), which is
//! how the Θ(k^{-d}) decay law can be cross-checked without trusting either
//! route alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel_spec::KernelSpec;
use crate::kernels::{AmbientKernel, GramMatrix, ZonalKernel};
use crate::quad::{compensated_sum, GaussLegendre};
use crate::special::{bessel_j, gamma_half, ln_gamma_half, sphere_surface_area, GegenbauerSeries};

/// The measure the eigenvalues refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Measure {
    UniformProbability,
}

/// Harmonic eigenvalues λ_0..λ_K of a zonal kernel on S^{d-1}.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// ambient dimension d (the sphere is S^{d-1})
    pub dim: usize,
    pub eigenvalues: Vec<f64>,
    pub measure: Measure,
    /// provenance, when the kernel has a serializable description
    pub kernel: Option<KernelSpec>,
}

impl Spectrum {
    pub fn k_max(&self) -> usize {
        self.eigenvalues.len().saturating_sub(1)
    }

    /// N(d, k) of this spectrum's sphere.
    pub fn multiplicity(&self, k: usize) -> Result<u64> {
        multiplicity(self.dim, k)
    }

    /// Σ_{k<=K} λ_k N(d,k); converges to k(1) from below for
    /// positive-definite kernels.
    pub fn partial_trace(&self) -> Result<f64> {
        let mut terms = Vec::with_capacity(self.eigenvalues.len());
        for (k, &l) in self.eigenvalues.iter().enumerate() {
            terms.push(l * multiplicity(self.dim, k)? as f64);
        }
        Ok(compensated_sum(terms))
    }

    /// Mercer reconstruction Σ λ_k N(d,k) G_k(t) at a cosine.
    pub fn reconstruct(&self, t: f64) -> Result<f64> {
        let pts = [t];
        let mut series = GegenbauerSeries::new(self.dim, &pts);
        let mut terms = Vec::with_capacity(self.eigenvalues.len());
        for (k, &l) in self.eigenvalues.iter().enumerate() {
            let g = series.next_order()[0];
            terms.push(l * multiplicity(self.dim, k)? as f64 * g);
        }
        Ok(compensated_sum(terms))
    }

    /// Log-log least-squares decay slope over `k_lo..=k_hi`; see
    /// [`decay_slope`].
    pub fn decay_slope(&self, k_lo: usize, k_hi: usize) -> Result<(f64, f64)> {
        decay_slope(self, k_lo, k_hi)
    }

    /// CSV export with header `k,lambda,multiplicity`.
    pub fn to_csv(&self) -> Result<String> {
        use std::fmt::Write;
        let mut out = String::from("k,lambda,multiplicity\n");
        for (k, &l) in self.eigenvalues.iter().enumerate() {
            let m = multiplicity(self.dim, k)?;
            let _ = writeln!(out, "{k},{l:e},{m}");
        }
        Ok(out)
    }
}

/// Number of spherical harmonics of frequency k on S^{d-1}:
/// N(d,k) = C(d+k-1, k) - C(d+k-3, k-2).
pub fn multiplicity(d: usize, k: usize) -> Result<u64> {
    if d < 2 {
        return Err(Error::Domain(format!("multiplicity needs d >= 2, got {d}")));
    }
    let first = binomial((d + k - 1) as u128, k as u128);
    let second = if k >= 2 {
        binomial((d + k - 3) as u128, (k - 2) as u128)
    } else {
        0
    };
    u64::try_from(first - second)
        .map_err(|_| Error::Numerical(format!("multiplicity N({d},{k}) overflows u64")))
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Default quadrature size for a requested frequency cutoff.
pub fn default_quad_points(k_max: usize) -> usize {
    (8 * k_max).max(512)
}

/// Coefficients below `max |λ|` times this are reported as exactly zero:
/// they sit beneath the quadrature noise floor.
pub const EIGENVALUE_FLOOR: f64 = 1e-14;

/// Funk–Hecke quadrature for the harmonic coefficients of a zonal kernel on
/// S^{d-1}, d >= 3:
///
/// λ_k = (ω_{d-2}/ω_{d-1}) ∫_{-1}^{1} k(t) G_k(t) (1-t²)^{(d-3)/2} dt
///
/// evaluated in the substituted variable θ = arccos t, where the common
/// kernels are smooth and Gauss–Legendre converges spectrally.
pub fn harmonic_coefficients<K: ZonalKernel + ?Sized>(
    kernel: &K,
    d: usize,
    k_max: usize,
    quad_points: usize,
) -> Result<Spectrum> {
    if d < 3 {
        return Err(Error::Domain(format!(
            "harmonic_coefficients needs d >= 3 (use fourier_coefficients_s1 for d = 2), got {d}"
        )));
    }
    zonal_spectrum(kernel, d, k_max, quad_points)
}

/// Fourier coefficients of a zonal kernel on the circle S^1 under the
/// uniform probability measure:
///
/// λ_0 = (1/2π) ∫_0^{2π} k(cos θ) dθ, and
/// λ_k = (1/π) ∫_0^{π} k(cos θ) cos(kθ) dθ for k >= 1.
///
/// A common alternative convention expands k(cos θ) = Σ (1/c_k) λ̃_k cos(kθ)
/// with c_0 = 4π² and c_k = π² for k >= 1; those coefficients relate to the
/// ones returned here by λ̃_0 = 4π² λ_0 and λ̃_k = 2π² λ_k.
pub fn fourier_coefficients_s1<K: ZonalKernel + ?Sized>(
    kernel: &K,
    k_max: usize,
    quad_points: usize,
) -> Result<Spectrum> {
    zonal_spectrum(kernel, 2, k_max, quad_points)
}

fn zonal_spectrum<K: ZonalKernel + ?Sized>(
    kernel: &K,
    d: usize,
    k_max: usize,
    quad_points: usize,
) -> Result<Spectrum> {
    let needed = (4 * k_max).max(8);
    if quad_points < needed {
        return Err(Error::Config(format!(
            "{quad_points} quadrature points cannot resolve k_max = {k_max}; need >= {needed}"
        )));
    }
    let rule = GaussLegendre::new(quad_points);
    let mut cosines = Vec::with_capacity(quad_points);
    let mut weighted = Vec::with_capacity(quad_points);
    let ratio = sphere_surface_area(d - 1) / sphere_surface_area(d);
    for (theta, w) in rule.mapped(0.0, std::f64::consts::PI) {
        let t = theta.cos();
        let f = kernel.eval_cos(t)?;
        if !f.is_finite() {
            return Err(Error::Numerical(format!(
                "kernel returned {f} at cosine {t}"
            )));
        }
        cosines.push(t);
        weighted.push(w * theta.sin().powi(d as i32 - 2) * ratio * f);
    }

    let mut series = GegenbauerSeries::new(d, &cosines);
    let mut eigenvalues = Vec::with_capacity(k_max + 1);
    for _k in 0..=k_max {
        let g = series.next_order();
        eigenvalues.push(compensated_sum(
            g.iter().zip(&weighted).map(|(gi, wi)| gi * wi),
        ));
    }

    let peak = eigenvalues.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    for v in &mut eigenvalues {
        if v.abs() < EIGENVALUE_FLOOR * peak {
            *v = 0.0;
        }
    }
    Ok(Spectrum {
        dim: d,
        eigenvalues,
        measure: Measure::UniformProbability,
        kernel: None,
    })
}

/// Least-squares fit of log λ_k against log k over k ∈ [k_lo, k_hi],
/// skipping non-positive eigenvalues (and k = 0). Returns (slope, r²).
pub fn decay_slope(spectrum: &Spectrum, k_lo: usize, k_hi: usize) -> Result<(f64, f64)> {
    if k_lo > k_hi || k_hi > spectrum.k_max() {
        return Err(Error::Config(format!(
            "slope range [{k_lo}, {k_hi}] outside spectrum with k_max {}",
            spectrum.k_max()
        )));
    }
    let mut log_k = Vec::new();
    let mut log_l = Vec::new();
    for k in k_lo.max(1)..=k_hi {
        let l = spectrum.eigenvalues[k];
        if l > 0.0 {
            log_k.push((k as f64).ln());
            log_l.push(l.ln());
        }
    }
    if log_k.len() < 5 {
        return Err(Error::InsufficientData(format!(
            "only {} positive eigenvalues in [{k_lo}, {k_hi}]; need 5",
            log_k.len()
        )));
    }
    let n = log_k.len() as f64;
    let mx = log_k.iter().sum::<f64>() / n;
    let my = log_l.iter().sum::<f64>() / n;
    let sxx: f64 = log_k.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = log_k
        .iter()
        .zip(&log_l)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum();
    let syy: f64 = log_l.iter().map(|y| (y - my) * (y - my)).sum();
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy) / (sxx * syy)
    };
    Ok((slope, r_squared))
}

/// The radial Fourier transform of exp(-c‖x‖) on R^d:
/// Φ(t) = C (1 + t²/c²)^{-(d+1)/2} with C = c_d / c^{d+1} and
/// c_d = Γ((d+1)/2) / π^{(d+1)/2}.
pub fn laplace_fourier_transform(d: usize, c: f64, t: f64) -> Result<f64> {
    if d < 1 {
        return Err(Error::Domain("dimension must be >= 1".into()));
    }
    if c.is_nan() || c <= 0.0 || t.is_nan() || t < 0.0 {
        return Err(Error::Domain(format!(
            "need c > 0 and t >= 0, got c={c}, t={t}"
        )));
    }
    let df = d as f64;
    let cd = gamma_half(d as u64 + 1) / std::f64::consts::PI.powf(0.5 * (df + 1.0));
    let big_c = cd / c.powf(df + 1.0);
    Ok(big_c * (1.0 + t * t / (c * c)).powf(-0.5 * (df + 1.0)))
}

/// Default truncation of the Bessel-route integral.
pub fn default_integration_cap(d: usize, k: usize) -> f64 {
    (50.0 * (k + d) as f64).max(1e3)
}

/// λ_k of the chord-width-c Laplace kernel on S^{d-1} via the
/// Bessel-integral identity
///
/// λ_k = ((2π)^d / ω_{d-1}) ∫_0^∞ t Φ(t) J²_{k+(d-2)/2}(t) dt,
///
/// which goes through the kernel's Fourier transform in R^d rather than any
/// spherical quadrature — an independent cross-check of
/// [`harmonic_coefficients`]. The leading constant places the result on the
/// uniform probability measure.
pub fn laplace_sphere_eig(d: usize, c: f64, k: usize, integration_cap: Option<f64>) -> Result<f64> {
    if d < 2 {
        return Err(Error::Domain("laplace_sphere_eig needs d >= 2".into()));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::Domain(format!("need c > 0, got {c}")));
    }
    let cap = integration_cap.unwrap_or_else(|| default_integration_cap(d, k));
    if cap.is_nan() || cap <= 1.0 {
        return Err(Error::Config(format!("integration cap {cap} too small")));
    }
    let nu = k as f64 + 0.5 * (d as f64 - 2.0);
    let scale = (2.0 * std::f64::consts::PI).powi(d as i32) / sphere_surface_area(d);

    // quarter-period panels resolve the J² oscillation
    let panel = std::f64::consts::FRAC_PI_2;
    let rule = GaussLegendre::new(12);
    let n_panels = (cap / panel).ceil() as usize;
    let mut total = Vec::with_capacity(n_panels);
    let mut lo = 0.0;
    for _ in 0..n_panels {
        let hi = (lo + panel).min(cap);
        let mut acc = 0.0;
        for (t, w) in rule.mapped(lo, hi) {
            let j = bessel_j(nu, t)?;
            acc += w * t * laplace_fourier_transform(d, c, t)? * j * j;
        }
        total.push(acc);
        lo = hi;
    }
    let value = scale * compensated_sum(total);

    // truncation control: J² <= 4/(π t) beyond the turning point and Φ
    // decays like (t/c)^{-(d+1)}, so the discarded tail is bounded by
    // (4/π) ∫_cap^∞ Φ <= (4/π) C c^{d+1} / (d cap^d)
    let df = d as f64;
    let cd = gamma_half(d as u64 + 1) / std::f64::consts::PI.powf(0.5 * (df + 1.0));
    let tail = scale * (4.0 / std::f64::consts::PI) * cd / (df * cap.powf(df));
    if tail > 1e-4 * value.abs() {
        return Err(Error::Numerical(format!(
            "truncated tail bound {tail:.3e} exceeds 1e-4 of the integral {value:.3e}; \
             raise integration_cap above {cap}"
        )));
    }
    Ok(value)
}

/// Closed form of A(k,d,c) = ∫_0^∞ x^{-d} J²_{k+(d-2)/2}(cx) dx:
///
/// A = (c/2)^{d-1} Γ(d) Γ(k - 1/2) / (2 Γ²((d+1)/2) Γ(k + d - 1/2)),
///
/// the quantity controlling the k^{-d} upper bound on the Laplace
/// eigenvalues. Requires k >= 1 (the Γ(k - 1/2) pole sits at k = 0... the
/// integral itself diverges there for d >= 2).
pub fn bessel_moment_closed_form(k: usize, d: usize, c: f64) -> Result<f64> {
    if k < 1 || d < 2 {
        return Err(Error::Domain(format!(
            "need k >= 1 and d >= 2, got k={k}, d={d}"
        )));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::Domain(format!("need c > 0, got {c}")));
    }
    let df = d as f64;
    let log =
        (df - 1.0) * (0.5 * c).ln() + ln_gamma_half(2 * d as u64) + ln_gamma_half(2 * k as u64 - 1)
            - std::f64::consts::LN_2
            - 2.0 * ln_gamma_half(d as u64 + 1)
            - ln_gamma_half(2 * (k + d) as u64 - 1);
    Ok(log.exp())
}

/// Cap on the sample count accepted by [`empirical_gram_spectrum`].
pub const DEFAULT_GRAM_SPECTRUM_CAP: usize = 4000;

/// Eigenvalues (sorted descending) of the kernel's Gram matrix over a data
/// sample.
pub fn empirical_gram_spectrum<K: AmbientKernel + ?Sized>(
    kernel: &K,
    points: &[Vec<f64>],
) -> Result<Vec<f64>> {
    empirical_gram_spectrum_capped(kernel, points, DEFAULT_GRAM_SPECTRUM_CAP)
}

pub fn empirical_gram_spectrum_capped<K: AmbientKernel + ?Sized>(
    kernel: &K,
    points: &[Vec<f64>],
    cap: usize,
) -> Result<Vec<f64>> {
    if points.len() < 2 || points.len() > cap {
        return Err(Error::Config(format!(
            "need between 2 and {cap} points, got {}",
            points.len()
        )));
    }
    let gram = GramMatrix::assemble(kernel, points)?;
    let ev = gram.eigenvalues_descending();
    if ev.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numerical(
            "eigendecomposition produced non-finite values".into(),
        ));
    }
    Ok(ev)
}

/// Angular frequencies examined by the disk eigenfunction analysis.
pub const MAX_ANGULAR_FREQUENCY: usize = 32;

/// Eigenvalues within this relative gap are treated as one degenerate
/// cluster whose eigenvectors may be freely rotated.
pub const CLUSTER_RELATIVE_GAP: f64 = 0.5;

/// Extra eigenvectors examined beyond the requested top set, so clusters
/// straddling the cutoff can be resolved.
pub const CLUSTER_WINDOW_EXTRA: usize = 8;

/// Radial profile of one analyzed eigenvector.
#[derive(Debug, Clone, Serialize)]
pub struct RadialFit {
    /// dominant angular frequency
    pub frequency: usize,
    /// energy fraction of the (unit) eigenvector captured by that
    /// frequency's regression subspace
    pub concentration: f64,
    /// slope a of the fitted radial profile a·r + b
    pub slope: f64,
    /// intercept b of the fitted radial profile
    pub intercept: f64,
    /// relative L2 residual of the frequency-locked fit
    pub residual: f64,
}

/// Result of the empirical eigenfunction analysis on the disk.
#[derive(Debug, Clone)]
pub struct EigenfunctionReport {
    /// Rayleigh quotients of the reported vectors, descending
    pub eigenvalues: Vec<f64>,
    /// unit-norm vectors over the sample points
    pub eigenvectors: Vec<Vec<f64>>,
    /// per-vector energy distribution over angular frequencies 0..=32;
    /// rows sum to one
    pub angular_projection: Vec<Vec<f64>>,
    pub radial_fit: Vec<RadialFit>,
}

/// JSON-facing summary of an [`EigenfunctionReport`]: the dominant angular
/// frequency and radial fit per eigenvector.
#[derive(Debug, Clone, Serialize)]
pub struct EigenfunctionSummary {
    pub eigenvalues: Vec<f64>,
    pub radial_fit: Vec<RadialFit>,
}

impl EigenfunctionReport {
    pub fn summary(&self) -> EigenfunctionSummary {
        EigenfunctionSummary {
            eigenvalues: self.eigenvalues.clone(),
            radial_fit: self.radial_fit.clone(),
        }
    }

    /// CSV export in three blocks separated by blank lines: the per-vector
    /// fits, the angular energy distributions, and the eigenvectors
    /// (one column per vector).
    pub fn to_csv(&self) -> String {
        use std::fmt::Write;
        let mut out =
            String::from("index,eigenvalue,frequency,concentration,slope,intercept,residual\n");
        for (i, fit) in self.radial_fit.iter().enumerate() {
            let _ = writeln!(
                out,
                "{i},{:e},{},{:e},{:e},{:e},{:e}",
                self.eigenvalues[i],
                fit.frequency,
                fit.concentration,
                fit.slope,
                fit.intercept,
                fit.residual
            );
        }
        out.push('\n');
        let freqs = self.angular_projection.first().map_or(0, Vec::len);
        out.push_str("index");
        for m in 0..freqs {
            let _ = write!(out, ",e{m}");
        }
        out.push('\n');
        for (i, row) in self.angular_projection.iter().enumerate() {
            let _ = write!(out, "{i}");
            for v in row {
                let _ = write!(out, ",{v:e}");
            }
            out.push('\n');
        }
        out.push('\n');
        out.push_str("sample");
        for i in 0..self.eigenvectors.len() {
            let _ = write!(out, ",v{i}");
        }
        out.push('\n');
        if let Some(n) = self.eigenvectors.first().map(Vec::len) {
            for s in 0..n {
                let _ = write!(out, "{s}");
                for v in &self.eigenvectors {
                    let _ = write!(out, ",{:e}", v[s]);
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Top eigenvectors of the Gram matrix over points in the unit disk,
/// decomposed into angular frequency content and a fitted a·r + b radial
/// profile.
///
/// Eigenvectors whose eigenvalues fall within [`CLUSTER_RELATIVE_GAP`] of
/// each other form numerically degenerate clusters; any orthonormal basis
/// of such a cluster is equally valid, so members are rotated to align with
/// single angular frequencies before analysis (finite-sample noise otherwise
/// mixes frequencies across near-ties).
pub fn empirical_eigenfunctions<K: AmbientKernel + ?Sized>(
    kernel: &K,
    samples: &[Vec<f64>],
    n_top: usize,
) -> Result<EigenfunctionReport> {
    let n = samples.len();
    if n < 200 {
        return Err(Error::Config(format!(
            "disk analysis needs >= 200 samples, got {n}"
        )));
    }
    if n_top == 0 {
        return Err(Error::Config("need at least one eigenvector".into()));
    }
    for (i, p) in samples.iter().enumerate() {
        if p.len() != 2 {
            return Err(Error::Domain(format!("sample {i} is not 2-dimensional")));
        }
        if !p.iter().all(|v| v.is_finite()) || p.iter().map(|v| v * v).sum::<f64>() > 1.0 + 1e-9 {
            return Err(Error::Domain(format!(
                "sample {i} lies outside the unit disk"
            )));
        }
    }

    let radii: Vec<f64> = samples
        .iter()
        .map(|p| (p[0] * p[0] + p[1] * p[1]).sqrt())
        .collect();
    let angles: Vec<f64> = samples.iter().map(|p| p[1].atan2(p[0])).collect();

    let gram = GramMatrix::assemble(kernel, samples)?;
    let eig = gram.matrix().clone().symmetric_eigen();
    if eig.eigenvalues.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numerical("eigendecomposition produced non-finite values".into()));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).expect("checked finite")
    });
    let window = (n_top + CLUSTER_WINDOW_EXTRA).min(n);
    let top_vals: Vec<f64> = order[..window]
        .iter()
        .map(|&i| eig.eigenvalues[i])
        .collect();
    let top_vecs: Vec<nalgebra::DVector<f64>> = order[..window]
        .iter()
        .map(|&i| eig.eigenvectors.column(i).into_owned())
        .collect();

    // orthonormal bases of the per-frequency regression subspaces
    let freq_bases: Vec<nalgebra::DMatrix<f64>> = (0..=MAX_ANGULAR_FREQUENCY)
        .map(|m| orthonormal_design(m, &radii, &angles))
        .collect();

    // partition the window into degenerate clusters by relative gap
    let mut clusters: Vec<Vec<usize>> = vec![vec![0]];
    for i in 1..window {
        if top_vals[i - 1] - top_vals[i] <= CLUSTER_RELATIVE_GAP * top_vals[i - 1].abs() {
            clusters.last_mut().expect("nonempty").push(i);
        } else {
            clusters.push(vec![i]);
        }
    }

    // rotate each cluster onto pure frequencies, then rank by Rayleigh
    // quotient
    let mut aligned: Vec<(nalgebra::DVector<f64>, f64)> = Vec::with_capacity(window);
    for cluster in &clusters {
        let mut basis = nalgebra::DMatrix::zeros(n, cluster.len());
        for (j, &idx) in cluster.iter().enumerate() {
            basis.set_column(j, &top_vecs[idx]);
        }
        for _ in 0..cluster.len() {
            let mut best: Option<(f64, nalgebra::DVector<f64>)> = None;
            for q in &freq_bases {
                let coords = q.transpose() * &basis;
                let small = coords.transpose() * &coords;
                let se = small.symmetric_eigen();
                let (mut top_e, mut top_i) = (f64::NEG_INFINITY, 0);
                for (i, &e) in se.eigenvalues.iter().enumerate() {
                    if e > top_e {
                        top_e = e;
                        top_i = i;
                    }
                }
                if best.as_ref().is_none_or(|(e, _)| top_e > *e) {
                    let dir = se.eigenvectors.column(top_i).into_owned();
                    best = Some((top_e, &basis * dir));
                }
            }
            let (_, mut v) = best.expect("at least one frequency basis");
            let norm = v.norm();
            if norm < 1e-12 {
                break;
            }
            v /= norm;
            let rq = v.dot(&(gram.matrix() * &v));
            aligned.push((v.clone(), rq));
            // deflate the cluster span
            let coeffs = v.transpose() * &basis;
            basis -= v * coeffs;
            let svd = basis.clone().svd(true, false);
            let u = svd.u.as_ref().expect("requested U");
            let keep: Vec<usize> = (0..svd.singular_values.len())
                .filter(|&i| svd.singular_values[i] > 1e-10)
                .collect();
            let mut reduced = nalgebra::DMatrix::zeros(n, keep.len());
            for (jj, &i) in keep.iter().enumerate() {
                reduced.set_column(jj, &u.column(i).into_owned());
            }
            basis = reduced;
            if basis.ncols() == 0 {
                break;
            }
        }
    }
    aligned.sort_by(|a, b| b.1.partial_cmp(&a.1).expect("finite Rayleigh quotients"));
    aligned.truncate(n_top);

    let mut report = EigenfunctionReport {
        eigenvalues: Vec::with_capacity(n_top),
        eigenvectors: Vec::with_capacity(n_top),
        angular_projection: Vec::with_capacity(n_top),
        radial_fit: Vec::with_capacity(n_top),
    };
    for (v, rq) in &aligned {
        let mut energies = Vec::with_capacity(MAX_ANGULAR_FREQUENCY + 1);
        for q in &freq_bases {
            let proj = q.transpose() * v;
            energies.push(proj.norm_squared());
        }
        let total: f64 = energies.iter().sum();
        let (mut m_star, mut e_star) = (0, f64::NEG_INFINITY);
        for (m, &e) in energies.iter().enumerate() {
            if e > e_star {
                e_star = e;
                m_star = m;
            }
        }
        let distribution: Vec<f64> = energies.iter().map(|e| e / total).collect();

        let design = design_matrix(m_star, &radii, &angles);
        let coeffs = design
            .clone()
            .svd(true, true)
            .solve(v, 1e-12)
            .map_err(|e| Error::Numerical(format!("radial fit failed: {e}")))?;
        let fitted = &design * &coeffs;
        let residual = (v - &fitted).norm() / v.norm();
        let (slope, intercept) = radial_pair(m_star, coeffs.as_slice());

        report.eigenvalues.push(*rq);
        report.eigenvectors.push(v.iter().copied().collect());
        report.angular_projection.push(distribution);
        report.radial_fit.push(RadialFit {
            frequency: m_star,
            concentration: e_star / v.norm_squared(),
            slope,
            intercept,
            residual,
        });
    }
    Ok(report)
}

/// Design matrix of the frequency-m subspace: {r, 1} for m = 0 and
/// {r cos(mφ), cos(mφ), r sin(mφ), sin(mφ)} for m >= 1.
fn design_matrix(m: usize, radii: &[f64], angles: &[f64]) -> nalgebra::DMatrix<f64> {
    let n = radii.len();
    if m == 0 {
        nalgebra::DMatrix::from_fn(n, 2, |i, j| if j == 0 { radii[i] } else { 1.0 })
    } else {
        nalgebra::DMatrix::from_fn(n, 4, |i, j| {
            let c = (m as f64 * angles[i]).cos();
            let s = (m as f64 * angles[i]).sin();
            match j {
                0 => radii[i] * c,
                1 => c,
                2 => radii[i] * s,
                _ => s,
            }
        })
    }
}

fn orthonormal_design(m: usize, radii: &[f64], angles: &[f64]) -> nalgebra::DMatrix<f64> {
    design_matrix(m, radii, angles).qr().q()
}

/// Collapse the 4-coefficient frequency-m fit onto a single (a, b) radial
/// pair along the dominant phase direction. The slope is reported as a
/// magnitude; the intercept keeps its sign relative to the slope's phase.
fn radial_pair(m: usize, coeffs: &[f64]) -> (f64, f64) {
    if m == 0 {
        return (coeffs[0], coeffs[1]);
    }
    let (ac, bc, as_, bs) = (coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
    let a_mag = (ac * ac + as_ * as_).sqrt();
    let b_mag = (bc * bc + bs * bs).sqrt();
    if a_mag >= b_mag {
        let (cos_p, sin_p) = if a_mag > 0.0 {
            (ac / a_mag, as_ / a_mag)
        } else {
            (1.0, 0.0)
        };
        (a_mag, bc * cos_p + bs * sin_p)
    } else {
        let (cos_p, sin_p) = if b_mag > 0.0 {
            (bc / b_mag, bs / b_mag)
        } else {
            (1.0, 0.0)
        };
        (ac * cos_p + as_ * sin_p, b_mag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::sample_disk;
    use crate::kernels::{CustomKernel, CustomZonal, ZonalKernelSpec};
    use crate::ntk::NtkConfig;
    use crate::quad::GaussLegendre;
    use approx::assert_abs_diff_eq;

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(3, 5).unwrap(), 11);
        assert_eq!(multiplicity(2, 0).unwrap(), 1);
        assert_eq!(multiplicity(5, 2).unwrap(), 14);
        assert_eq!(multiplicity(2, 9).unwrap(), 2);
        assert_eq!(multiplicity(4, 0).unwrap(), 1);
        assert!(multiplicity(1, 3).is_err());
        // agreement with the ratio formula ((2k+d-2)/k) C(k+d-3, k-1)
        for d in 3..=8usize {
            for k in 1..=40usize {
                let direct = multiplicity(d, k).unwrap() as f64;
                let ratio = (2 * k + d - 2) as f64 / k as f64
                    * binomial((k + d - 3) as u128, (k - 1) as u128) as f64;
                assert_abs_diff_eq!(direct, ratio, epsilon = 1e-6 * ratio);
            }
        }
    }

    #[test]
    fn constant_kernel_has_only_the_constant_harmonic() {
        let k = CustomZonal(|_t| 1.0);
        let s = harmonic_coefficients(&k, 3, 5, 512).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 1.0, epsilon = 1e-12);
        for k in 1..=5 {
            assert_eq!(
                s.eigenvalues[k], 0.0,
                "lambda_{k} should be floored to zero"
            );
        }
    }

    #[test]
    fn linear_kernel_puts_a_third_in_frequency_one() {
        let k = CustomZonal(|t| t);
        let s = harmonic_coefficients(&k, 3, 6, 512).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[1], 1.0 / 3.0, epsilon = 1e-12);
        for k in [0usize, 2, 3, 4, 5, 6] {
            assert_eq!(s.eigenvalues[k], 0.0);
        }
        // Mercer reconstruction returns the kernel itself
        assert_abs_diff_eq!(s.reconstruct(0.37).unwrap(), 0.37, epsilon = 1e-12);
    }

    #[test]
    fn cosine_kernel_on_the_circle() {
        let k = CustomZonal(|t| t);
        let s = fourier_coefficients_s1(&k, 5, 512).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[1], 0.5, epsilon = 1e-13);
        for k in [0usize, 2, 3, 4, 5] {
            assert_eq!(s.eigenvalues[k], 0.0);
        }
        let one = CustomZonal(|_t| 1.0);
        let s = fourier_coefficients_s1(&one, 3, 512).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 1.0, epsilon = 1e-13);
        assert_eq!(s.eigenvalues[1], 0.0);
    }

    #[test]
    fn quadrature_point_budget_is_enforced() {
        let k = CustomZonal(|t| t);
        assert!(matches!(
            harmonic_coefficients(&k, 3, 200, 512),
            Err(Error::Config(_))
        ));
        assert!(harmonic_coefficients(&k, 2, 5, 512).is_err());
    }

    #[test]
    fn laplace_spectrum_matches_frozen_quadrature_values() {
        // frozen from an independent quadrature implementation (scipy
        // scratchpad); chord width c = 1, d = 3
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        let s = harmonic_coefficients(&lap, 3, 30, 1600).unwrap();
        let expected = [
            (0usize, 2.96997075e-01),
            (1, 8.26822659e-02),
            (2, 2.67338382e-02),
            (5, 2.94010367e-03),
            (10, 4.29793839e-04),
            (20, 5.79668873e-05),
            (30, 1.76130541e-05),
        ];
        for (k, want) in expected {
            assert_abs_diff_eq!(s.eigenvalues[k], want, epsilon = 2e-8 * want);
        }
    }

    #[test]
    fn doubling_quadrature_points_is_stable() {
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        let a = harmonic_coefficients(&lap, 3, 64, default_quad_points(64)).unwrap();
        let b = harmonic_coefficients(&lap, 3, 64, 2 * default_quad_points(64)).unwrap();
        for k in 0..=64 {
            let (x, y) = (a.eigenvalues[k], b.eigenvalues[k]);
            assert!(
                (x - y).abs() <= 1e-8 * x.abs().max(1e-300),
                "k={k}: {x} vs {y}"
            );
        }
    }

    #[test]
    fn spectrum_type_invariants_hold_for_laplace_and_ntk() {
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        let ntk = NtkConfig::new(4, 0.8).unwrap();
        for s in [
            harmonic_coefficients(&lap, 3, 120, 1024).unwrap(),
            harmonic_coefficients(&ntk, 3, 120, 1024).unwrap(),
        ] {
            let l0 = s.eigenvalues[0];
            for &l in &s.eigenvalues {
                assert!(l >= -1e-10 * l0);
            }
            let trace = s.partial_trace().unwrap();
            assert!(trace.is_finite() && trace > 0.0);
        }
        // trace stays below k(1) (1 + 1e-6) and grows with K
        let s64 = harmonic_coefficients(&lap, 3, 64, 1024).unwrap();
        let s128 = harmonic_coefficients(&lap, 3, 128, 1024).unwrap();
        let t64 = s64.partial_trace().unwrap();
        let t128 = s128.partial_trace().unwrap();
        assert!(t64 <= 1.0 * (1.0 + 1e-6));
        assert!(t128 <= 1.0 * (1.0 + 1e-6));
        assert!(t128 >= t64);
    }

    #[test]
    fn mercer_reconstruction_for_biased_ntk() {
        let ntk = NtkConfig::new(2, 1.0).unwrap();
        let s = harmonic_coefficients(&ntk, 3, 200, 1600).unwrap();
        let k_one = ntk.eval_zonal(1.0).unwrap();
        let mut worst = 0.0f64;
        for i in 0..20 {
            let t = -0.95 + 1.9 * i as f64 / 19.0;
            let err = (s.reconstruct(t).unwrap() - ntk.eval_zonal(t).unwrap()).abs();
            worst = worst.max(err);
        }
        assert!(worst <= 1e-3 * k_one, "reconstruction error {worst}");
    }

    #[test]
    fn decay_slope_recovers_exact_power_law() {
        let s = Spectrum {
            dim: 2,
            eigenvalues: (0..=120)
                .map(|k| if k == 0 { 1.0 } else { (k as f64).powi(-3) })
                .collect(),
            measure: Measure::UniformProbability,
            kernel: None,
        };
        let (slope, r2) = decay_slope(&s, 10, 100).unwrap();
        assert_abs_diff_eq!(slope, -3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r2, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn decay_slope_needs_five_positive_entries() {
        let s = Spectrum {
            dim: 2,
            eigenvalues: vec![1.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.2, 0.05, 0.01],
            measure: Measure::UniformProbability,
            kernel: None,
        };
        assert!(matches!(
            decay_slope(&s, 1, 10),
            Err(Error::InsufficientData(_))
        ));
        assert!(decay_slope(&s, 1, 20).is_err());
    }

    #[test]
    fn gaussian_slope_is_steep_on_surviving_entries() {
        let gau = ZonalKernelSpec::gaussian(2.0).unwrap();
        let s = fourier_coefficients_s1(&gau, 70, 1000).unwrap();
        let (slope, _) = decay_slope(&s, 10, 60).unwrap();
        assert!(slope < -6.0, "Gaussian slope {slope}");
    }

    #[test]
    fn fourier_transform_spot_values() {
        assert_abs_diff_eq!(
            laplace_fourier_transform(1, 1.0, 0.0).unwrap(),
            std::f64::consts::FRAC_1_PI,
            epsilon = 1e-15
        );
        // d=3, c=2, t=2: 1 + 4/4 = 2 so Φ = C 2^{-2}
        let c_big = gamma_half(4) / std::f64::consts::PI.powi(2) / 16.0;
        assert_abs_diff_eq!(
            laplace_fourier_transform(3, 2.0, 2.0).unwrap(),
            c_big / 4.0,
            epsilon = 1e-15
        );
        // strictly decreasing in t
        let a = laplace_fourier_transform(3, 1.0, 1.0).unwrap();
        let b = laplace_fourier_transform(3, 1.0, 2.0).unwrap();
        assert!(a > b && b > 0.0);
        assert!(laplace_fourier_transform(3, -1.0, 0.0).is_err());
    }

    #[test]
    fn fourier_transform_against_radial_quadrature_oracle() {
        // independent oracle: in R^3 the radial transform reduces to
        // Φ(w) = (1/(2π² w)) ∫_0^∞ r sin(wr) e^{-cr} dr
        let (c, w) = (1.0, 5.0);
        let rule = GaussLegendre::new(64);
        let mut acc = 0.0;
        let mut lo = 0.0;
        while lo < 60.0 {
            let hi = lo + 1.0;
            acc += rule.integrate(lo, hi, |r| r * (w * r).sin() * (-c * r).exp());
            lo = hi;
        }
        let oracle = acc / (2.0 * std::f64::consts::PI.powi(2) * w);
        let direct = laplace_fourier_transform(3, c, w).unwrap();
        assert_abs_diff_eq!(direct, oracle, epsilon = 1e-9 * oracle);
    }

    #[test]
    fn bessel_route_matches_funk_hecke_at_low_frequency() {
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        let s = harmonic_coefficients(&lap, 3, 8, 512).unwrap();
        for k in [0usize, 1, 4, 8] {
            let via_bessel = laplace_sphere_eig(3, 1.0, k, None).unwrap();
            let rel = (via_bessel - s.eigenvalues[k]).abs() / s.eigenvalues[k];
            assert!(rel <= 1e-3, "k={k}: rel {rel}");
        }
    }

    #[test]
    fn bessel_route_decay_ratio() {
        let l10 = laplace_sphere_eig(3, 1.0, 10, None).unwrap();
        let l20 = laplace_sphere_eig(3, 1.0, 20, None).unwrap();
        let ratio = l20 / l10;
        assert!(
            (ratio - 0.125).abs() <= 0.25 * 0.125,
            "ratio {ratio} not within 25% of 2^-3"
        );
    }

    #[test]
    fn bessel_route_rejects_insufficient_cap() {
        assert!(matches!(
            laplace_sphere_eig(3, 1.0, 10, Some(30.0)),
            Err(Error::Numerical(_))
        ));
        assert!(laplace_sphere_eig(3, 1.0, 10, Some(0.5)).is_err());
    }

    #[test]
    fn closed_form_moment_spot_value() {
        // A(5,3,1) = (1/4) Γ(3) Γ(4.5) / (2 Γ(2)² Γ(7.5)) = 1/643.5
        let a = bessel_moment_closed_form(5, 3, 1.0).unwrap();
        assert_abs_diff_eq!(a, 1.0 / 643.5, epsilon = 1e-12 * a);
        assert!(bessel_moment_closed_form(0, 3, 1.0).is_err());
    }

    #[test]
    fn empirical_spectrum_trivial_cases() {
        // identical points: rank one, top eigenvalue n·k(1)
        let lap =
            crate::kernels::AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), false);
        let pts = vec![vec![1.0, 0.0]; 6];
        let ev = empirical_gram_spectrum(&lap, &pts).unwrap();
        assert_abs_diff_eq!(ev[0], 6.0, epsilon = 1e-10);
        for &v in &ev[1..] {
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-10);
        }
        // two-value kernel over orthonormal points: 1 + (n-1)a once, 1 - a
        // with multiplicity n-1
        let a = 0.3;
        let k = CustomKernel(move |x: &[f64], z: &[f64]| {
            let dot: f64 = x.iter().zip(z).map(|(p, q)| p * q).sum();
            if dot > 0.5 {
                1.0
            } else {
                a
            }
        });
        let mut basis = Vec::new();
        for i in 0..5 {
            let mut e = vec![0.0; 5];
            e[i] = 1.0;
            basis.push(e);
        }
        let ev = empirical_gram_spectrum(&k, &basis).unwrap();
        assert_abs_diff_eq!(ev[0], 1.0 + 4.0 * a, epsilon = 1e-12);
        for &v in &ev[1..] {
            assert_abs_diff_eq!(v, 1.0 - a, epsilon = 1e-12);
        }
        assert!(empirical_gram_spectrum(&k, &basis[..1]).is_err());
    }

    #[test]
    fn rank_one_disk_kernel_is_frequency_one_with_zero_intercept() {
        let k = CustomKernel(|x: &[f64], z: &[f64]| x[0] * z[0] + x[1] * z[1]);
        let pts = sample_disk(400, 5);
        let report = empirical_eigenfunctions(&k, &pts, 2).unwrap();
        for fit in &report.radial_fit {
            assert_eq!(fit.frequency, 1);
            assert!(
                fit.concentration > 0.95,
                "concentration {}",
                fit.concentration
            );
            assert!(
                fit.intercept.abs() <= 0.05 * fit.slope.abs(),
                "intercept {} vs slope {}",
                fit.intercept,
                fit.slope
            );
            assert!(fit.residual < 0.05);
        }
        for dist in &report.angular_projection {
            let total: f64 = dist.iter().sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-8);
        }
        for v in &report.eigenvectors {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn eigenfunction_report_exports() {
        let k = CustomKernel(|x: &[f64], z: &[f64]| x[0] * z[0] + x[1] * z[1] + 0.5);
        let pts = sample_disk(250, 9);
        let report = empirical_eigenfunctions(&k, &pts, 3).unwrap();
        let csv = report.to_csv();
        let blocks: Vec<&str> = csv.split("\n\n").collect();
        assert_eq!(blocks.len(), 3);
        assert!(blocks[0].starts_with("index,eigenvalue,frequency,"));
        assert_eq!(blocks[0].lines().count(), 4);
        assert!(blocks[1].starts_with("index,e0,e1"));
        assert!(blocks[2].starts_with("sample,v0,v1,v2"));
        let summary = report.summary();
        assert_eq!(summary.radial_fit.len(), 3);
    }

    #[test]
    fn disk_analysis_input_checks() {
        let k = CustomKernel(|x: &[f64], z: &[f64]| x[0] * z[0] + x[1] * z[1]);
        assert!(empirical_eigenfunctions(&k, &sample_disk(100, 1), 3).is_err());
        let mut pts = sample_disk(250, 1);
        pts[3] = vec![2.0, 0.0];
        assert!(empirical_eigenfunctions(&k, &pts, 3).is_err());
    }

    #[test]
    fn csv_export_shape() {
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        let s = fourier_coefficients_s1(&lap, 4, 512).unwrap();
        let csv = s.to_csv().unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "k,lambda,multiplicity");
        assert_eq!(lines.len(), 6);
        assert!(lines[1].starts_with("0,"));
        assert!(lines[2].ends_with(",2"));
    }
}
