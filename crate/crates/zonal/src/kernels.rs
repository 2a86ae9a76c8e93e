//! The exponential kernel family and its homogeneous variants, exposed both
//! as ambient kernels on pairs of vectors and as zonal functions of the
//! cosine t = x·z on the sphere.
//!
//! Width conventions: the chord parameterization is
//! k(t) = exp(-c (2-2t)^{γ/2}), i.e. exp(-c‖x-z‖^γ) restricted to the
//! sphere; the angular parameterization is k(t) = exp(-c (1-t)^{γ/2}).
//! Since √(2-2t) = √2 √(1-t) the two differ only by rescaling the width:
//! c_angular = 2^{γ/2} c_chord, which for the Laplace kernel (γ = 1) is
//! c_angular = √2 c_chord.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack allowed past [-1, 1] before a cosine is an error rather than
/// roundoff: dot products of normalized vectors routinely overshoot by a
/// few ulps.
pub const COSINE_CLAMP_TOL: f64 = 1e-9;

/// Validate and clamp a cosine to [-1, 1].
pub fn clamp_cosine(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("cosine must be finite, got {t}")));
    }
    if t.abs() > 1.0 + COSINE_CLAMP_TOL {
        return Err(Error::Domain(format!("cosine {t} outside [-1, 1]")));
    }
    Ok(t.clamp(-1.0, 1.0))
}

/// A kernel of the cosine alone. Implementations must be pure.
pub trait ZonalKernel: Sync {
    /// k(t) for t = x·z on the unit sphere. Inputs within
    /// [`COSINE_CLAMP_TOL`] of [-1, 1] are clamped.
    fn eval_cos(&self, t: f64) -> Result<f64>;

    /// k(1), the Mercer trace of the kernel under the uniform probability
    /// measure.
    fn at_one(&self) -> f64 {
        self.eval_cos(1.0).expect("k(1) must be defined")
    }
}

/// A kernel of a pair of ambient vectors. Implementations must be pure.
pub trait AmbientKernel: Sync {
    /// Check that a single point is acceptable (finite, and nonzero when the
    /// kernel needs a direction).
    fn validate_point(&self, x: &[f64]) -> Result<()>;

    /// Evaluate on points that have already passed [`validate_point`].
    fn eval_prechecked(&self, x: &[f64], z: &[f64]) -> f64;

    fn eval(&self, x: &[f64], z: &[f64]) -> Result<f64> {
        self.validate_point(x)?;
        self.validate_point(z)?;
        Ok(self.eval_prechecked(x, z))
    }
}

/// Exponential-family member: exp(-c ρ^γ) with γ fixed by the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpFamily {
    Laplace,
    Gaussian,
    GammaExp,
}

impl ExpFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ExpFamily::Laplace => "Laplace",
            ExpFamily::Gaussian => "Gaussian",
            ExpFamily::GammaExp => "GammaExp",
        }
    }
}

fn default_chord() -> bool {
    true
}

/// A zonal exponential kernel on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZonalKernelSpec {
    pub family: ExpFamily,
    /// inverse width; larger c is a sharper kernel
    pub c: f64,
    /// exponent for the GammaExp family, in (0, 2]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    /// chord (true) vs angular (false) distance parameterization
    #[serde(default = "default_chord")]
    pub chord_param: bool,
}

impl ZonalKernelSpec {
    pub fn laplace(c: f64) -> Result<Self> {
        Self::new(ExpFamily::Laplace, c, None, true)
    }

    pub fn gaussian(c: f64) -> Result<Self> {
        Self::new(ExpFamily::Gaussian, c, None, true)
    }

    pub fn gamma_exp(c: f64, gamma: f64) -> Result<Self> {
        Self::new(ExpFamily::GammaExp, c, Some(gamma), true)
    }

    pub fn new(family: ExpFamily, c: f64, gamma: Option<f64>, chord_param: bool) -> Result<Self> {
        let spec = ZonalKernelSpec {
            family,
            c,
            gamma,
            chord_param,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Switch to the angular parameterization, keeping c as given.
    pub fn angular(mut self) -> Self {
        self.chord_param = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.c.is_finite() || self.c <= 0.0 {
            return Err(Error::Config(format!(
                "kernel width c must be positive, got {}",
                self.c
            )));
        }
        match (self.family, self.gamma) {
            (ExpFamily::GammaExp, Some(g)) if g > 0.0 && g <= 2.0 => Ok(()),
            (ExpFamily::GammaExp, Some(g)) => {
                Err(Error::Config(format!("gamma must lie in (0, 2], got {g}")))
            }
            (ExpFamily::GammaExp, None) => {
                Err(Error::Config("GammaExp requires a gamma parameter".into()))
            }
            (_, Some(_)) => Err(Error::Config(
                "gamma is only meaningful for the GammaExp family".into(),
            )),
            (_, None) => Ok(()),
        }
    }

    /// The exponent γ: 1 for Laplace, 2 for Gaussian, free for GammaExp.
    pub fn exponent(&self) -> f64 {
        match self.family {
            ExpFamily::Laplace => 1.0,
            ExpFamily::Gaussian => 2.0,
            ExpFamily::GammaExp => self.gamma.expect("validated"),
        }
    }

    /// Width of the equivalent chord-parameterized kernel:
    /// c_chord = c_angular / 2^{γ/2}.
    pub fn chord_width(&self) -> f64 {
        if self.chord_param {
            self.c
        } else {
            self.c / 2f64.powf(0.5 * self.exponent())
        }
    }

    /// Shift-invariant ambient form exp(-c_chord ‖x-z‖^γ) at distance `r`.
    pub fn eval_distance(&self, r: f64) -> f64 {
        (-self.chord_width() * r.powf(self.exponent())).exp()
    }
}

impl ZonalKernel for ZonalKernelSpec {
    fn eval_cos(&self, t: f64) -> Result<f64> {
        let t = clamp_cosine(t)?;
        let gamma = self.exponent();
        let arg = if self.chord_param {
            2.0 - 2.0 * t
        } else {
            1.0 - t
        };
        Ok((-self.c * arg.max(0.0).powf(0.5 * gamma)).exp())
    }
}

/// An exponential kernel on ambient vectors, optionally with the order-1
/// radial prefactor ‖x‖‖z‖ that makes it homogeneous.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmbientKernelSpec {
    pub base: ZonalKernelSpec,
    #[serde(default)]
    pub homogeneous: bool,
}

impl AmbientKernelSpec {
    pub fn new(base: ZonalKernelSpec, homogeneous: bool) -> Self {
        AmbientKernelSpec { base, homogeneous }
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn dot(x: &[f64], z: &[f64]) -> f64 {
    x.iter().zip(z).map(|(a, b)| a * b).sum()
}

impl AmbientKernel for AmbientKernelSpec {
    fn validate_point(&self, x: &[f64]) -> Result<()> {
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("point has non-finite coordinates".into()));
        }
        if self.homogeneous && norm(x) < 1e-300 {
            return Err(Error::DegenerateInput(
                "homogeneous kernel needs nonzero points (cosine requires a direction)".into(),
            ));
        }
        Ok(())
    }

    fn eval_prechecked(&self, x: &[f64], z: &[f64]) -> f64 {
        if self.homogeneous {
            let (nx, nz) = (norm(x), norm(z));
            let t = (dot(x, z) / (nx * nz)).clamp(-1.0, 1.0);
            nx * nz * self.base.eval_cos(t).expect("cosine clamped")
        } else {
            let dist = x
                .iter()
                .zip(z)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            self.base.eval_distance(dist)
        }
    }
}

/// Wrap an arbitrary symmetric function as an ambient kernel (used in tests
/// and for quick experiments).
pub struct CustomKernel<F: Fn(&[f64], &[f64]) -> f64 + Sync>(pub F);

impl<F: Fn(&[f64], &[f64]) -> f64 + Sync> AmbientKernel for CustomKernel<F> {
    fn validate_point(&self, x: &[f64]) -> Result<()> {
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("point has non-finite coordinates".into()));
        }
        Ok(())
    }

    fn eval_prechecked(&self, x: &[f64], z: &[f64]) -> f64 {
        (self.0)(x, z)
    }
}

/// Wrap an arbitrary function of the cosine as a zonal kernel.
pub struct CustomZonal<F: Fn(f64) -> f64 + Sync>(pub F);

impl<F: Fn(f64) -> f64 + Sync> ZonalKernel for CustomZonal<F> {
    fn eval_cos(&self, t: f64) -> Result<f64> {
        Ok((self.0)(clamp_cosine(t)?))
    }
}

impl<K: ZonalKernel + ?Sized> ZonalKernel for &K {
    fn eval_cos(&self, t: f64) -> Result<f64> {
        (**self).eval_cos(t)
    }
}

impl<K: AmbientKernel + ?Sized> AmbientKernel for &K {
    fn validate_point(&self, x: &[f64]) -> Result<()> {
        (**self).validate_point(x)
    }

    fn eval_prechecked(&self, x: &[f64], z: &[f64]) -> f64 {
        (**self).eval_prechecked(x, z)
    }
}

/// A symmetric kernel matrix over a point set.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    mat: nalgebra::DMatrix<f64>,
}

impl GramMatrix {
    /// Assemble K_ij = k(x_i, x_j). Points are validated up front so a
    /// failure reports the offending index; assembly itself is parallel over
    /// rows and schedule-independent.
    pub fn assemble<K: AmbientKernel + ?Sized>(kernel: &K, points: &[Vec<f64>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Config("gram matrix needs at least one point".into()));
        }
        for (i, p) in points.iter().enumerate() {
            kernel
                .validate_point(p)
                .map_err(|e| Error::DegenerateInput(format!("point {i}: {e}")))?;
        }
        let n = points.len();
        let rows: Vec<Vec<f64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (i..n)
                    .map(|j| kernel.eval_prechecked(&points[i], &points[j]))
                    .collect()
            })
            .collect();
        let mut mat = nalgebra::DMatrix::zeros(n, n);
        for (i, row) in rows.iter().enumerate() {
            for (off, &v) in row.iter().enumerate() {
                mat[(i, i + off)] = v;
                mat[(i + off, i)] = v;
            }
        }
        Ok(GramMatrix { mat })
    }

    /// Assemble from an explicit upper-triangle entry function.
    pub fn from_symmetric_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<f64> + Sync,
    {
        let rows: Vec<Result<Vec<f64>>> = (0..n)
            .into_par_iter()
            .map(|i| (i..n).map(|j| f(i, j)).collect())
            .collect();
        let mut mat = nalgebra::DMatrix::zeros(n, n);
        for (i, row) in rows.into_iter().enumerate() {
            for (off, v) in row?.into_iter().enumerate() {
                mat[(i, i + off)] = v;
                mat[(i + off, i)] = v;
            }
        }
        Ok(GramMatrix { mat })
    }

    pub fn n(&self) -> usize {
        self.mat.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.mat[(i, j)]
    }

    pub fn matrix(&self) -> &nalgebra::DMatrix<f64> {
        &self.mat
    }

    pub fn into_matrix(self) -> nalgebra::DMatrix<f64> {
        self.mat
    }

    /// Eigenvalues sorted descending.
    pub fn eigenvalues_descending(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .mat
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        ev
    }

    /// (min, max) eigenvalue.
    pub fn eigenvalue_range(&self) -> (f64, f64) {
        let ev = self.eigenvalues_descending();
        (*ev.last().expect("nonempty"), ev[0])
    }

    /// Positive semidefinite up to `rel_tol` times the largest eigenvalue.
    pub fn is_psd(&self, rel_tol: f64) -> bool {
        let (min, max) = self.eigenvalue_range();
        min >= -rel_tol * max.abs()
    }

    /// Rescale so every diagonal entry is one. Fails on a non-positive
    /// diagonal entry.
    pub fn normalize_diagonal(&mut self) -> Result<()> {
        let n = self.n();
        let mut scale = Vec::with_capacity(n);
        for i in 0..n {
            let d = self.mat[(i, i)];
            if d <= 0.0 {
                return Err(Error::Numerical(format!(
                    "diagonal entry {i} is {d}; cannot normalize"
                )));
            }
            scale.push(d.sqrt());
        }
        for i in 0..n {
            for j in 0..n {
                self.mat[(i, j)] /= scale[i] * scale[j];
            }
        }
        Ok(())
    }
}

/// Gram matrix of a kernel over a point set (the module-level entry point).
pub fn gram<K: AmbientKernel + ?Sized>(kernel: &K, points: &[Vec<f64>]) -> Result<GramMatrix> {
    GramMatrix::assemble(kernel, points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::sample_sphere;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn zonal_values_at_the_poles() {
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        assert_abs_diff_eq!(lap.eval_cos(1.0).unwrap(), 1.0, epsilon = 1e-15);
        // antipodes are chord distance 2 apart
        assert_abs_diff_eq!(
            lap.eval_cos(-1.0).unwrap(),
            (-2.0f64).exp(),
            epsilon = 1e-15
        );
        let ge = ZonalKernelSpec::gamma_exp(1.0, 2.0).unwrap();
        let gau = ZonalKernelSpec::gaussian(1.0).unwrap();
        assert_abs_diff_eq!(
            ge.eval_cos(0.0).unwrap(),
            gau.eval_cos(0.0).unwrap(),
            epsilon = 0.0
        );
    }

    #[test]
    fn cosine_domain_checks() {
        let lap = ZonalKernelSpec::laplace(1.0).unwrap();
        assert!(lap.eval_cos(1.0 + 0.5e-9).is_ok()); // clamped
        assert!(lap.eval_cos(1.0 + 1e-6).is_err());
        assert!(lap.eval_cos(f64::NAN).is_err());
        assert!(lap.eval_cos(f64::INFINITY).is_err());
        assert_abs_diff_eq!(lap.eval_cos(1.0 + 0.5e-9).unwrap(), 1.0, epsilon = 0.0);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(ZonalKernelSpec::laplace(0.0).is_err());
        assert!(ZonalKernelSpec::laplace(-1.0).is_err());
        assert!(ZonalKernelSpec::gamma_exp(1.0, 0.0).is_err());
        assert!(ZonalKernelSpec::gamma_exp(1.0, 2.5).is_err());
        assert!(ZonalKernelSpec::new(ExpFamily::Laplace, 1.0, Some(1.0), true).is_err());
    }

    #[test]
    fn ambient_examples() {
        let hlap = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), true);
        let e = [1.0, 0.0, 0.0];
        assert_abs_diff_eq!(hlap.eval(&e, &e).unwrap(), 1.0, epsilon = 1e-15);
        // (2x, 3z) with orthogonal unit x, z: 6 e^{-c sqrt(2)} in chord form...
        // on the sphere cos=0 means chord sqrt(2), so k = exp(-sqrt(2)) and
        // the radial prefactor contributes 6
        let x = [2.0, 0.0, 0.0];
        let z = [0.0, 3.0, 0.0];
        assert_abs_diff_eq!(
            hlap.eval(&x, &z).unwrap(),
            6.0 * (-(2.0f64).sqrt()).exp(),
            epsilon = 1e-14
        );
        // the angular-width variant at the same points
        let hlap_ang =
            AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap().angular(), true);
        assert_abs_diff_eq!(
            hlap_ang.eval(&x, &z).unwrap(),
            6.0 * (-1.0f64).exp(),
            epsilon = 1e-14
        );

        let lap = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), false);
        assert_abs_diff_eq!(
            lap.eval(&[1.0, 0.0], &[0.0, 1.0]).unwrap(),
            (-(2.0f64).sqrt()).exp(),
            epsilon = 1e-15
        );
        assert!(hlap.eval(&[0.0, 0.0, 0.0], &e).is_err());
        assert!(lap.eval(&[f64::NAN, 0.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn homogeneous_and_plain_agree_on_unit_vectors() {
        let base = ZonalKernelSpec::gamma_exp(0.8, 1.3).unwrap();
        let hom = AmbientKernelSpec::new(base, true);
        let plain = AmbientKernelSpec::new(base, false);
        for &(a, b) in &[(0.0, 1.0), (0.6, 0.8), (-1.0, 0.0)] {
            let x = [1.0, 0.0];
            let z = [a, b];
            assert_abs_diff_eq!(
                hom.eval(&x, &z).unwrap(),
                plain.eval(&x, &z).unwrap(),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn gram_trivial_cases() {
        let lap = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), false);
        let e = vec![1.0, 0.0];
        let g = gram(&lap, &[e.clone(), e.clone(), e.clone()]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_abs_diff_eq!(g.get(i, j), 1.0, epsilon = 0.0);
            }
        }
        let g = gram(&lap, &[vec![1.0, 0.0], vec![-1.0, 0.0]]).unwrap();
        assert_abs_diff_eq!(g.get(0, 1), (-2.0f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(g.get(0, 0), 1.0, epsilon = 0.0);
        assert!(gram(&lap, &[]).is_err());
    }

    #[test]
    fn gram_reports_offending_point() {
        let hlap = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), true);
        let err = gram(&hlap, &[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap_err();
        assert!(err.to_string().contains("point 1"), "got: {err}");
    }

    #[test]
    fn gram_on_sphere_sample_is_psd() {
        let lap = AmbientKernelSpec::new(ZonalKernelSpec::laplace(1.0).unwrap(), false);
        let pts = sample_sphere(3, 50, 17);
        let g = gram(&lap, &pts).unwrap();
        let (min, _max) = g.eigenvalue_range();
        assert!(min >= -1e-10, "min eigenvalue {min}");
    }

    #[test]
    fn diagonal_normalization() {
        let hlap = AmbientKernelSpec::new(ZonalKernelSpec::laplace(0.5).unwrap(), true);
        let pts: Vec<Vec<f64>> = vec![vec![2.0, 0.0], vec![0.0, 0.5], vec![1.0, 1.0]];
        let mut g = gram(&hlap, &pts).unwrap();
        g.normalize_diagonal().unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(g.get(i, i), 1.0, epsilon = 1e-12);
        }
    }

    proptest! {
        #[test]
        fn symmetry(ax in -5.0f64..5.0, ay in -5.0f64..5.0,
                    bx in -5.0f64..5.0, by in -5.0f64..5.0,
                    c in 0.1f64..4.0, gamma in 0.2f64..2.0,
                    homogeneous in proptest::bool::ANY) {
            let base = ZonalKernelSpec::gamma_exp(c, gamma).unwrap();
            let k = AmbientKernelSpec::new(base, homogeneous);
            let x = [ax, ay + 0.1];
            let z = [bx + 0.1, by];
            if k.validate_point(&x).is_ok() && k.validate_point(&z).is_ok() {
                let kxz = k.eval(&x, &z).unwrap();
                let kzx = k.eval(&z, &x).unwrap();
                prop_assert!((kxz - kzx).abs() <= 1e-14 * (1.0 + kxz.abs()));
            }
        }

        #[test]
        fn family_identities(t in -1.0f64..1.0, c in 0.1f64..4.0) {
            let lap = ZonalKernelSpec::laplace(c).unwrap();
            let g1 = ZonalKernelSpec::gamma_exp(c, 1.0).unwrap();
            let gau = ZonalKernelSpec::gaussian(c).unwrap();
            let g2 = ZonalKernelSpec::gamma_exp(c, 2.0).unwrap();
            prop_assert!((lap.eval_cos(t).unwrap() - g1.eval_cos(t).unwrap()).abs() <= 1e-14);
            prop_assert!((gau.eval_cos(t).unwrap() - g2.eval_cos(t).unwrap()).abs() <= 1e-14);
        }

        #[test]
        fn chord_angular_width_mapping(t in -1.0f64..1.0, c in 0.1f64..4.0) {
            // chord width c equals angular width sqrt(2) c for Laplace
            let chord = ZonalKernelSpec::laplace(c).unwrap();
            let angular = ZonalKernelSpec::new(
                ExpFamily::Laplace, (2.0f64).sqrt() * c, None, false).unwrap();
            let a = chord.eval_cos(t).unwrap();
            let b = angular.eval_cos(t).unwrap();
            prop_assert!((a - b).abs() <= 1e-14 * (1.0 + a.abs()));
        }

        #[test]
        fn homogeneity_scaling(alpha in 0.1f64..10.0, gamma_scale in 0.1f64..10.0,
                               t in -0.99f64..0.99, c in 0.2f64..3.0) {
            let base = ZonalKernelSpec::laplace(c).unwrap();
            let k = AmbientKernelSpec::new(base, true);
            let x = [1.0, 0.0];
            let z = [t, (1.0 - t * t).sqrt()];
            let xs = [alpha * x[0], alpha * x[1]];
            let zs = [gamma_scale * z[0], gamma_scale * z[1]];
            let scaled = k.eval(&xs, &zs).unwrap();
            let reference = alpha * gamma_scale * k.eval(&x, &z).unwrap();
            prop_assert!((scaled - reference).abs() <= 1e-10 * reference.abs());
        }

        #[test]
        fn monotone_in_cosine(c in 0.1f64..4.0, gamma in 0.2f64..2.0,
                              t1 in -1.0f64..1.0, t2 in -1.0f64..1.0) {
            let k = ZonalKernelSpec::gamma_exp(c, gamma).unwrap();
            let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
            prop_assert!(k.eval_cos(lo).unwrap() <= k.eval_cos(hi).unwrap() + 1e-15);
            prop_assert!(k.eval_cos(lo).unwrap() > 0.0);
        }
    }

    #[test]
    fn psd_across_dimensions() {
        for (d, n, seed) in [(2usize, 120usize, 5u64), (3, 150, 6), (5, 200, 7)] {
            let pts = sample_sphere(d, n, seed);
            for spec in [
                ZonalKernelSpec::laplace(1.0).unwrap(),
                ZonalKernelSpec::gaussian(2.0).unwrap(),
                ZonalKernelSpec::gamma_exp(1.0, 1.5).unwrap(),
            ] {
                let k = AmbientKernelSpec::new(spec, false);
                let g = gram(&k, &pts).unwrap();
                let (min, max) = g.eigenvalue_range();
                assert!(
                    min >= -1e-8 * max,
                    "family {:?} d={d}: min {min} vs max {max}",
                    spec.family
                );
            }
        }
    }
}
