//! Dataset ingestion, normalization, and synthetic sampling.
//!
//! CSV ingestion is deliberately strict: every rejected row is counted and
//! reported in [`DatasetMeta`], nothing is dropped silently. Categorical
//! columns (every entry non-numeric, e.g. a sex column) are one-hot encoded
//! in place; a single non-numeric cell inside an otherwise numeric column is
//! a [`Error::Parse`] naming the line.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use rand::distributions::Distribution;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};

/// Provenance and bookkeeping for a [`Dataset`].
#[derive(Debug, Clone, Default, Serialize)]
pub struct DatasetMeta {
    pub source: Option<String>,
    /// rows rejected because they contained NaN/Inf after parsing
    pub rejected_rows: usize,
    /// 1-based line numbers of the rejected rows (ingestion) or row indices
    /// (projection)
    pub rejected_lines: Vec<usize>,
    /// indices of features dropped by `standardize` (zero variance)
    pub dropped_features: Vec<usize>,
    /// names of transforms applied, in order
    pub transforms: Vec<String>,
    /// original column index of each categorical column and its levels
    pub one_hot: Vec<(usize, Vec<String>)>,
}

/// An n x d feature matrix with optional targets.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub x: Vec<Vec<f64>>,
    pub y: Option<Vec<f64>>,
    pub meta: DatasetMeta,
}

impl Dataset {
    pub fn from_rows(x: Vec<Vec<f64>>, y: Option<Vec<f64>>) -> Self {
        Dataset {
            x,
            y,
            meta: DatasetMeta::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn dim(&self) -> usize {
        self.x.first().map_or(0, Vec::len)
    }

    /// Re-export as CSV (features, then target column if present).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.x.iter().enumerate() {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(',');
                }
                let _ = write!(out, "{v:e}");
                first = false;
            }
            if let Some(y) = &self.y {
                let _ = write!(out, ",{:e}", y[i]);
            }
            out.push('\n');
        }
        out
    }
}

/// Load a numeric CSV. `target_column` is a 0-based index into the
/// *original* columns; that column becomes `y` instead of a feature.
///
/// A header row is assumed when the first line is entirely non-numeric while
/// the second contains at least one numeric field. Fully non-numeric columns
/// are treated as categorical and one-hot encoded.
pub fn load_csv(path: impl AsRef<Path>, target_column: Option<usize>) -> Result<Dataset> {
    let text = std::fs::read_to_string(&path)?;
    let mut ds = parse_csv(&text, target_column)?;
    ds.meta.source = Some(path.as_ref().display().to_string());
    Ok(ds)
}

/// CSV parsing on an in-memory string; see [`load_csv`].
pub fn parse_csv(text: &str, target_column: Option<usize>) -> Result<Dataset> {
    let rows: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.split(',').map(str::trim).collect()))
        .collect();
    if rows.is_empty() {
        return Err(Error::EmptyData("no rows in CSV input".into()));
    }

    let is_num = |s: &str| parse_field(s).is_some();
    let header_present = rows.len() > 1
        && rows[0].1.iter().all(|f| !is_num(f))
        && rows[1].1.iter().any(|f| is_num(f));
    let data = &rows[if header_present { 1 } else { 0 }..];
    if data.is_empty() {
        return Err(Error::EmptyData("CSV contains only a header".into()));
    }

    let ncol = data[0].1.len();
    for (line, fields) in data {
        if fields.len() != ncol {
            return Err(Error::Parse {
                line: *line,
                message: format!("expected {ncol} columns, found {}", fields.len()),
            });
        }
    }
    if let Some(tc) = target_column {
        if tc >= ncol {
            return Err(Error::Config(format!(
                "target column {tc} out of range for {ncol} columns"
            )));
        }
    }

    // column typing: numeric if every row parses, categorical if none does
    let mut categorical: Vec<Option<Vec<String>>> = vec![None; ncol];
    for j in 0..ncol {
        let numeric_rows = data.iter().filter(|(_, f)| is_num(f[j])).count();
        if numeric_rows == data.len() {
            continue;
        }
        if numeric_rows == 0 {
            let levels: BTreeSet<String> = data.iter().map(|(_, f)| f[j].to_string()).collect();
            if levels.len() > 32 {
                return Err(Error::Parse {
                    line: data[0].0,
                    message: format!(
                        "column {j} looks categorical but has {} distinct values",
                        levels.len()
                    ),
                });
            }
            categorical[j] = Some(levels.into_iter().collect());
        } else {
            let (line, _) = data
                .iter()
                .find(|(_, f)| !is_num(f[j]))
                .expect("a non-numeric row exists");
            return Err(Error::Parse {
                line: *line,
                message: format!("non-numeric value in numeric column {j}"),
            });
        }
    }
    if let Some(tc) = target_column {
        if categorical[tc].is_some() {
            return Err(Error::Config(format!("target column {tc} is not numeric")));
        }
    }

    let mut x = Vec::with_capacity(data.len());
    let mut y = target_column.map(|_| Vec::with_capacity(data.len()));
    let mut rejected = Vec::new();
    'rows: for (line, fields) in data {
        let mut row = Vec::new();
        let mut target = 0.0;
        for (j, field) in fields.iter().enumerate() {
            match &categorical[j] {
                Some(levels) => {
                    for level in levels {
                        row.push(if field == level { 1.0 } else { 0.0 });
                    }
                }
                None => {
                    let v = parse_field(field).expect("column typed numeric");
                    if !v.is_finite() {
                        rejected.push(*line);
                        continue 'rows;
                    }
                    if Some(j) == target_column {
                        target = v;
                    } else {
                        row.push(v);
                    }
                }
            }
        }
        x.push(row);
        if let Some(y) = y.as_mut() {
            y.push(target);
        }
    }
    if x.is_empty() {
        return Err(Error::EmptyData(format!(
            "all {} rows rejected (non-finite values)",
            rejected.len()
        )));
    }

    let meta = DatasetMeta {
        source: None,
        rejected_rows: rejected.len(),
        rejected_lines: rejected,
        dropped_features: Vec::new(),
        transforms: Vec::new(),
        one_hot: categorical
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.as_ref().map(|l| (j, l.clone())))
            .collect(),
    };
    Ok(Dataset { x, y, meta })
}

fn parse_field(s: &str) -> Option<f64> {
    // reject empty; accept the usual float syntax including nan/inf (those
    // are caught later by the finiteness filter)
    if s.is_empty() {
        return None;
    }
    s.parse::<f64>().ok()
}

/// Per-feature mean-0 / variance-1 normalization. Zero-variance features are
/// dropped and recorded in the returned metadata.
pub fn standardize(ds: &Dataset) -> Dataset {
    let n = ds.n();
    let d = ds.dim();
    assert!(n > 0, "standardize needs at least one row");
    let mut means = vec![0.0; d];
    let mut vars = vec![0.0; d];
    for row in &ds.x {
        for (j, v) in row.iter().enumerate() {
            means[j] += v;
        }
    }
    for m in &mut means {
        *m /= n as f64;
    }
    for row in &ds.x {
        for (j, v) in row.iter().enumerate() {
            vars[j] += (v - means[j]).powi(2);
        }
    }
    for v in &mut vars {
        *v /= n as f64;
    }
    let keep: Vec<usize> = (0..d)
        .filter(|&j| vars[j] > 1e-24 * means[j].mul_add(means[j], 1.0))
        .collect();
    let dropped: Vec<usize> = (0..d).filter(|j| !keep.contains(j)).collect();

    let x =
        ds.x.iter()
            .map(|row| {
                keep.iter()
                    .map(|&j| (row[j] - means[j]) / vars[j].sqrt())
                    .collect()
            })
            .collect();
    let mut meta = ds.meta.clone();
    meta.dropped_features = dropped;
    meta.transforms.push("standardize".into());
    Dataset {
        x,
        y: ds.y.clone(),
        meta,
    }
}

/// Scale every row to unit Euclidean norm. Zero rows are rejected (dropped,
/// with their indices recorded); targets are filtered alongside.
pub fn project_to_sphere(ds: &Dataset) -> Dataset {
    let mut x = Vec::with_capacity(ds.n());
    let mut y = ds.y.as_ref().map(|_| Vec::with_capacity(ds.n()));
    let mut rejected = Vec::new();
    for (i, row) in ds.x.iter().enumerate() {
        let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-300 {
            rejected.push(i);
            continue;
        }
        x.push(row.iter().map(|v| v / norm).collect());
        if let (Some(y), Some(src)) = (y.as_mut(), ds.y.as_ref()) {
            y.push(src[i]);
        }
    }
    let mut meta = ds.meta.clone();
    meta.rejected_rows += rejected.len();
    meta.rejected_lines.extend(rejected);
    meta.transforms.push("project_to_sphere".into());
    Dataset { x, y, meta }
}

/// `n` points drawn uniformly on S^{d-1}: normalized standard normal vectors.
pub fn sample_sphere(d: usize, n: usize, seed: u64) -> Vec<Vec<f64>> {
    assert!(d >= 2, "sphere sampling needs ambient dimension >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(&mut rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue; // essentially impossible, but keeps the output exact
        }
        out.push(v.into_iter().map(|x| x / norm).collect());
    }
    out
}

/// `n` points drawn area-uniformly on the unit disk: uniform angle, radius
/// distributed as sqrt of a uniform variate.
pub fn sample_disk(n: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let r = rng.gen_range(0.0f64..1.0).sqrt();
            vec![r * angle.cos(), r * angle.sin()]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn loads_features_and_target() {
        let ds = parse_csv("1,2,10\n3,4,20\n5,6,30\n", Some(2)).unwrap();
        assert_eq!(ds.n(), 3);
        assert_eq!(ds.dim(), 2);
        assert_eq!(ds.y.as_deref(), Some(&[10.0, 20.0, 30.0][..]));
        assert_eq!(ds.x[1], vec![3.0, 4.0]);
    }

    #[test]
    fn non_numeric_cell_names_the_line() {
        let err = parse_csv("1,2\n3,oops\n5,6\n", None).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(parse_csv("", None), Err(Error::EmptyData(_))));
        assert!(matches!(
            parse_csv("\n  \n", None),
            Err(Error::EmptyData(_))
        ));
    }

    #[test]
    fn abalone_like_categorical_is_one_hot_encoded() {
        // sex column + 7 numerics + target rings = 8 numeric features after
        // encoding the 3-level category into 3 indicators (net 10 columns)
        let text = "M,0.455,0.365,0.095,0.514,0.2245,0.101,0.15,15\n\
                    F,0.53,0.42,0.135,0.677,0.2565,0.1415,0.21,9\n\
                    I,0.44,0.365,0.125,0.516,0.2155,0.114,0.155,10\n\
                    M,0.35,0.265,0.09,0.2255,0.0995,0.0485,0.07,7\n";
        let ds = parse_csv(text, Some(8)).unwrap();
        assert_eq!(ds.n(), 4);
        assert_eq!(ds.dim(), 3 + 7);
        assert_eq!(ds.meta.one_hot.len(), 1);
        // levels sorted: F, I, M
        assert_eq!(ds.x[0][..3], [0.0, 0.0, 1.0]);
        assert_eq!(ds.x[2][..3], [0.0, 1.0, 0.0]);
        assert_eq!(ds.y.as_deref().unwrap()[3], 7.0);
    }

    #[test]
    fn categorical_target_column_is_rejected() {
        let err = parse_csv("M,1\nF,2\n", Some(0)).unwrap_err();
        assert!(matches!(err, Error::Config(_)), "got {err}");
        assert!(parse_csv("1,2\n3,4\n", Some(5)).is_err());
    }

    #[test]
    fn header_detection() {
        let ds = parse_csv("alpha,beta\n1,2\n3,4\n", None).unwrap();
        assert_eq!(ds.n(), 2);
        assert_eq!(ds.x[0], vec![1.0, 2.0]);
    }

    #[test]
    fn non_finite_rows_are_rejected_and_counted() {
        let ds = parse_csv("1,2\nnan,4\n5,inf\n7,8\n", None).unwrap();
        assert_eq!(ds.n(), 2);
        assert_eq!(ds.meta.rejected_rows, 2);
        assert_eq!(ds.meta.rejected_lines, vec![2, 3]);
    }

    #[test]
    fn standardize_moments_and_constant_drop() {
        let mut rows = Vec::new();
        let mut rng_state = 12345u64;
        let mut next = || {
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (rng_state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            rows.push(vec![
                next() * 3.0 + 1.0,
                7.0,
                next() - 0.5,
                next() * 40.0,
                next(),
            ]);
        }
        let ds = Dataset::from_rows(rows, None);
        let out = standardize(&ds);
        assert_eq!(out.meta.dropped_features, vec![1]);
        assert_eq!(out.dim(), 4);
        let n = out.n() as f64;
        for j in 0..out.dim() {
            let mean: f64 = out.x.iter().map(|r| r[j]).sum::<f64>() / n;
            let var: f64 = out.x.iter().map(|r| (r[j] - mean).powi(2)).sum::<f64>() / n;
            assert_abs_diff_eq!(mean, 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(var, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn projection_unit_norms_and_zero_row_rejection() {
        let ds = Dataset::from_rows(
            vec![vec![3.0, 4.0], vec![0.0, 0.0], vec![1.0, 0.0]],
            Some(vec![1.0, 2.0, 3.0]),
        );
        let out = project_to_sphere(&ds);
        assert_eq!(out.n(), 2);
        assert_eq!(out.meta.rejected_lines, vec![1]);
        assert_eq!(out.y.as_deref(), Some(&[1.0, 3.0][..]));
        for row in &out.x {
            let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
        }
        // already-unit rows unchanged
        assert_abs_diff_eq!(out.x[1][0], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn sampling_is_deterministic_under_seed() {
        assert_eq!(sample_sphere(3, 10, 7), sample_sphere(3, 10, 7));
        assert_eq!(sample_disk(10, 7), sample_disk(10, 7));
        assert_ne!(sample_sphere(3, 10, 7), sample_sphere(3, 10, 8));
    }

    #[test]
    fn sphere_samples_have_unit_norm_and_concentrate() {
        let pts = sample_sphere(3, 10_000, 42);
        let mut mean = [0.0; 3];
        for p in &pts {
            let norm = p.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
            for (m, v) in mean.iter_mut().zip(p) {
                *m += v;
            }
        }
        let mean_norm = mean
            .iter()
            .map(|v| (v / 10_000.0).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(mean_norm <= 0.03, "mean vector norm {mean_norm} too large");
    }

    #[test]
    fn disk_samples_are_area_uniform() {
        let pts = sample_disk(10_000, 3);
        let inside_half = pts
            .iter()
            .filter(|p| p.iter().map(|v| v * v).sum::<f64>() <= 0.25)
            .count() as f64
            / 10_000.0;
        assert!(
            (inside_half - 0.25).abs() <= 0.02,
            "r<=1/2 fraction {inside_half}"
        );
        for p in &pts {
            assert!(p.iter().map(|v| v * v).sum::<f64>() <= 1.0 + 1e-12);
        }
    }
}
