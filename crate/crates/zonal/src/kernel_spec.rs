//! A serializable description of any kernel the toolkit knows, used as the
//! common currency for CLIs and reports. Exponential kernels serialize as
//! `{"family": "Laplace", "c": 1.0, "chord_param": true, "homogeneous": false}`;
//! the fully connected NTK is tagged `family = "NtkFc"` with
//! `{layers, beta, normalize}`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::kernels::{AmbientKernel, AmbientKernelSpec, ExpFamily, ZonalKernel, ZonalKernelSpec};
use crate::ntk::NtkConfig;

fn default_chord() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum KernelSpec {
    Laplace {
        c: f64,
        #[serde(default = "default_chord")]
        chord_param: bool,
        #[serde(default)]
        homogeneous: bool,
    },
    Gaussian {
        c: f64,
        #[serde(default = "default_chord")]
        chord_param: bool,
        #[serde(default)]
        homogeneous: bool,
    },
    GammaExp {
        c: f64,
        gamma: f64,
        #[serde(default = "default_chord")]
        chord_param: bool,
        #[serde(default)]
        homogeneous: bool,
    },
    NtkFc {
        layers: usize,
        beta: f64,
        #[serde(default)]
        normalize: bool,
    },
}

/// A validated, evaluatable kernel; implements both the zonal and the
/// ambient kernel traits.
#[derive(Debug, Clone, Copy)]
pub enum KernelHandle {
    Exp(AmbientKernelSpec),
    Ntk(NtkConfig),
}

impl KernelSpec {
    pub fn laplace(c: f64) -> Self {
        KernelSpec::Laplace {
            c,
            chord_param: true,
            homogeneous: false,
        }
    }

    pub fn ntk(layers: usize, beta: f64) -> Self {
        KernelSpec::NtkFc {
            layers,
            beta,
            normalize: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.handle().map(|_| ())
    }

    /// Build the evaluatable form, validating all parameters.
    pub fn handle(&self) -> Result<KernelHandle> {
        match *self {
            KernelSpec::Laplace {
                c,
                chord_param,
                homogeneous,
            } => {
                let base = ZonalKernelSpec::new(ExpFamily::Laplace, c, None, chord_param)?;
                Ok(KernelHandle::Exp(AmbientKernelSpec::new(base, homogeneous)))
            }
            KernelSpec::Gaussian {
                c,
                chord_param,
                homogeneous,
            } => {
                let base = ZonalKernelSpec::new(ExpFamily::Gaussian, c, None, chord_param)?;
                Ok(KernelHandle::Exp(AmbientKernelSpec::new(base, homogeneous)))
            }
            KernelSpec::GammaExp {
                c,
                gamma,
                chord_param,
                homogeneous,
            } => {
                let base = ZonalKernelSpec::new(ExpFamily::GammaExp, c, Some(gamma), chord_param)?;
                Ok(KernelHandle::Exp(AmbientKernelSpec::new(base, homogeneous)))
            }
            KernelSpec::NtkFc {
                layers,
                beta,
                normalize,
            } => {
                let cfg = NtkConfig {
                    layers,
                    beta,
                    normalize,
                };
                cfg.validate()?;
                Ok(KernelHandle::Ntk(cfg))
            }
        }
    }

    /// Short human-readable label for summaries.
    pub fn label(&self) -> String {
        match self {
            KernelSpec::Laplace { c, .. } => format!("Laplace(c={c})"),
            KernelSpec::Gaussian { c, .. } => format!("Gaussian(c={c})"),
            KernelSpec::GammaExp { c, gamma, .. } => format!("GammaExp(c={c}, gamma={gamma})"),
            KernelSpec::NtkFc {
                layers,
                beta,
                normalize,
            } => {
                if *normalize {
                    format!("NtkFc(L={layers}, beta={beta}, normalized)")
                } else {
                    format!("NtkFc(L={layers}, beta={beta})")
                }
            }
        }
    }
}

impl KernelHandle {
    pub fn is_zonal_of_exponential_family(&self) -> bool {
        matches!(self, KernelHandle::Exp(_))
    }
}

impl ZonalKernel for KernelHandle {
    fn eval_cos(&self, t: f64) -> Result<f64> {
        match self {
            KernelHandle::Exp(spec) => spec.base.eval_cos(t),
            KernelHandle::Ntk(cfg) => cfg.eval_zonal(t),
        }
    }
}

impl AmbientKernel for KernelHandle {
    fn validate_point(&self, x: &[f64]) -> Result<()> {
        match self {
            KernelHandle::Exp(spec) => spec.validate_point(x),
            KernelHandle::Ntk(cfg) => cfg.validate_point(x),
        }
    }

    fn eval_prechecked(&self, x: &[f64], z: &[f64]) -> f64 {
        match self {
            KernelHandle::Exp(spec) => spec.eval_prechecked(x, z),
            KernelHandle::Ntk(cfg) => cfg.eval_prechecked(x, z),
        }
    }
}

impl From<ZonalKernelSpec> for KernelSpec {
    fn from(z: ZonalKernelSpec) -> Self {
        match z.family {
            ExpFamily::Laplace => KernelSpec::Laplace {
                c: z.c,
                chord_param: z.chord_param,
                homogeneous: false,
            },
            ExpFamily::Gaussian => KernelSpec::Gaussian {
                c: z.c,
                chord_param: z.chord_param,
                homogeneous: false,
            },
            ExpFamily::GammaExp => KernelSpec::GammaExp {
                c: z.c,
                gamma: z.gamma.unwrap_or(1.0),
                chord_param: z.chord_param,
                homogeneous: false,
            },
        }
    }
}

impl From<NtkConfig> for KernelSpec {
    fn from(cfg: NtkConfig) -> Self {
        KernelSpec::NtkFc {
            layers: cfg.layers,
            beta: cfg.beta,
            normalize: cfg.normalize,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn json_round_trip_and_defaults() {
        let spec: KernelSpec = serde_json::from_str(r#"{"family":"Laplace","c":1.5}"#).unwrap();
        assert_eq!(
            spec,
            KernelSpec::Laplace {
                c: 1.5,
                chord_param: true,
                homogeneous: false
            }
        );
        let spec: KernelSpec =
            serde_json::from_str(r#"{"family":"NtkFc","layers":6,"beta":0,"normalize":true}"#)
                .unwrap();
        assert_eq!(
            spec,
            KernelSpec::NtkFc {
                layers: 6,
                beta: 0.0,
                normalize: true
            }
        );
        let text = serde_json::to_string(&spec).unwrap();
        let back: KernelSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn handles_evaluate() {
        let spec: KernelSpec =
            serde_json::from_str(r#"{"family":"GammaExp","c":0.5,"gamma":1.5,"homogeneous":true}"#)
                .unwrap();
        let handle = spec.handle().unwrap();
        let v = handle.eval(&[2.0, 0.0], &[2.0, 0.0]).unwrap();
        assert_abs_diff_eq!(v, 4.0, epsilon = 1e-14);
        let z = handle.eval_cos(1.0).unwrap();
        assert_abs_diff_eq!(z, 1.0, epsilon = 0.0);

        let bad: KernelSpec = serde_json::from_str(r#"{"family":"Gaussian","c":-2}"#).unwrap();
        assert!(bad.handle().is_err());
        let bad: KernelSpec =
            serde_json::from_str(r#"{"family":"NtkFc","layers":6,"beta":1,"normalize":true}"#)
                .unwrap();
        assert!(bad.handle().is_err());
    }
}
