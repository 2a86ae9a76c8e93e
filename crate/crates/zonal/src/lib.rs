//! Kernel methods on and off the hypersphere: the fully connected ReLU
//! neural tangent kernel, the exponential kernel family (Laplace, Gaussian,
//! γ-exponential, and their homogeneous variants), spherical-harmonic
//! spectral analysis, kernel ridge regression, gradient-descent learning
//! curves, and hierarchical convolutional exponential kernels.
//!
//! The central quantitative fact the spectral tooling exposes: restricted to
//! S^{d-1}, the NTK and the Laplace kernel share the spherical harmonics as
//! eigenfunctions and their eigenvalues both decay as Θ(k^{-d}), while the
//! Gaussian kernel's spectrum decays exponentially. Everything needed to
//! measure that — Funk–Hecke quadrature, Fourier coefficients on the circle,
//! an independent Bessel-integral route for the Laplace eigenvalues, decay
//! slope fits, Gram spectra, and kernel-to-NTK least-squares fits — lives
//! here behind plain data types.
//!
//! ```
//! use zonal::kernels::{ZonalKernel, ZonalKernelSpec};
//! use zonal::ntk::NtkConfig;
//!
//! let laplace = ZonalKernelSpec::laplace(1.0)?;
//! let ntk = NtkConfig::new(2, 0.0)?;
//! // both are kernels of the cosine alone on the sphere
//! assert!((laplace.eval_cos(1.0)? - 1.0).abs() < 1e-15);
//! assert!((ntk.eval_zonal(1.0)? - 2.0).abs() < 1e-15);
//! # Ok::<(), zonal::Error>(())
//! ```

pub mod cexp;
pub mod data;
pub mod error;
pub mod kernel_spec;
pub mod kernels;
pub mod ntk;
pub mod quad;
pub mod regression;
pub mod special;
pub mod spectral;

pub use error::{Error, Result};
pub use kernel_spec::{KernelHandle, KernelSpec};
pub use kernels::{
    gram, AmbientKernel, AmbientKernelSpec, GramMatrix, ZonalKernel, ZonalKernelSpec,
};
pub use ntk::NtkConfig;
pub use spectral::Spectrum;

// The book's code snippets double as doc-tests so the guide can never drift
// from the library.
#[cfg(doctest)]
mod book {
    macro_rules! book_chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    book_chapter!(kernels, "../../../book/src/kernels.md");
    book_chapter!(ntk, "../../../book/src/ntk.md");
    book_chapter!(spectra, "../../../book/src/spectra.md");
    book_chapter!(regression, "../../../book/src/regression.md");
    book_chapter!(cexp, "../../../book/src/cexp.md");
}
