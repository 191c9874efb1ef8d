//! Radial grid with a coordinate map adapted to the -1/x^4 interaction.
//!
//! The working coordinate is t(x) = x/x_c - 1/x, inverted analytically as
//! x(t) = (x_c t + sqrt(x_c^2 t^2 + 4 x_c))/2. Near the origin t ~ -1/x, so
//! the local WKB phase of the -1/x^4 potential advances uniformly in t; at
//! large x the spacing becomes uniform with step ~ x_c. A solution
//! psi(x) = sqrt(p) w(t) with p = dx/dt turns the radial equation into
//! w'' = [p^2 (V - eps) + m(x)] w, which Numerov integrates on the uniform
//! t lattice.

use crate::error::{Error, Result};

/// Dominance factor required of 1/x^4 over energy, centrifugal and trap terms
/// at the inner boundary.
pub const DEFAULT_REGIME_FACTOR: f64 = 1e3;
/// Default inner-boundary cap in R*.
pub const DEFAULT_X_MIN_CAP: f64 = 5e-3;
/// Uniform step of the mapped coordinate; roughly the local phase advance per
/// step where the motion is classically allowed.
pub const DEFAULT_PHASE_STEP: f64 = 8e-3;

#[derive(Clone, Debug)]
pub struct RadialGrid {
    pub x_min: f64,
    pub x_max: f64,
    /// Crossover scale of the map (uniform spacing ~x_c at large x).
    pub x_c: f64,
    /// Uniform step in t.
    pub h: f64,
    pub t0: f64,
    /// Node abscissas x_i, strictly increasing.
    pub x: Vec<f64>,
    /// p = dx/dt at the nodes.
    pub p: Vec<f64>,
}

fn map_t(x: f64, x_c: f64) -> f64 {
    x / x_c - 1.0 / x
}

fn unmap_x(t: f64, x_c: f64) -> f64 {
    0.5 * (x_c * t + (x_c * x_c * t * t + 4.0 * x_c).sqrt())
}

/// p = dx/dt and its x-derivatives for the map above.
fn p_of_x(x: f64, x_c: f64) -> f64 {
    x * x * x_c / (x_c + x * x)
}

/// Curvature correction m(x) = p'^2/4 - p'' p / 2 entering the mapped equation.
pub fn map_correction(x: f64, x_c: f64) -> f64 {
    let s = x_c + x * x;
    let p = x * x * x_c / s;
    let dp = 2.0 * x_c * x_c * x / (s * s);
    let ddp = 2.0 * x_c * x_c * (x_c - 3.0 * x * x) / (s * s * s);
    0.25 * dp * dp - 0.5 * ddp * p
}

impl RadialGrid {
    /// Build a grid covering [x_min, x_max].
    pub fn new(x_min: f64, x_max: f64, x_c: f64, phase_step: f64) -> Result<RadialGrid> {
        if !(x_min > 0.0 && x_max > x_min && x_c > 0.0 && phase_step > 0.0) {
            return Err(Error::InvalidInput(format!(
                "bad grid parameters: x_min={x_min}, x_max={x_max}, x_c={x_c}, h={phase_step}"
            )));
        }
        let t0 = map_t(x_min, x_c);
        let t1 = map_t(x_max, x_c);
        let n = ((t1 - t0) / phase_step).ceil() as usize + 1;
        if n < 16 {
            return Err(Error::InvalidInput("grid has fewer than 16 nodes".into()));
        }
        let h = (t1 - t0) / (n - 1) as f64;
        let mut x = Vec::with_capacity(n);
        let mut p = Vec::with_capacity(n);
        for i in 0..n {
            let xi = unmap_x(t0 + h * i as f64, x_c);
            x.push(xi);
            p.push(p_of_x(xi, x_c));
        }
        // guard against rounding at the ends
        x[0] = x_min;
        let last = n - 1;
        x[last] = x_max;
        Ok(RadialGrid { x_min, x_max, x_c, h, t0, x, p })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Index of the grid node closest to `x`.
    pub fn index_of(&self, x: f64) -> usize {
        let t = map_t(x.clamp(self.x_min, self.x_max), self.x_c);
        let i = ((t - self.t0) / self.h).round() as isize;
        i.clamp(0, self.len() as isize - 1) as usize
    }

    /// Composite-Simpson quadrature of f(x) dx given node samples of f.
    /// dx = p dt, so the integrand in t is f(x_i) p_i.
    pub fn integrate(&self, f: &[f64]) -> f64 {
        assert_eq!(f.len(), self.len(), "sample length mismatch");
        simpson(self.h, &mut (0..self.len()).map(|i| f[i] * self.p[i]))
    }

    /// Quadrature of f(x) g(x) dx.
    pub fn integrate_product(&self, f: &[f64], g: &[f64]) -> f64 {
        assert_eq!(f.len(), self.len());
        assert_eq!(g.len(), self.len());
        simpson(self.h, &mut (0..self.len()).map(|i| f[i] * g[i] * self.p[i]))
    }

    /// Quadrature of f(x) x g(x) dx (dipole-type integrals).
    pub fn integrate_weighted(&self, f: &[f64], g: &[f64]) -> f64 {
        assert_eq!(f.len(), self.len());
        assert_eq!(g.len(), self.len());
        simpson(self.h, &mut (0..self.len()).map(|i| f[i] * g[i] * self.x[i] * self.p[i]))
    }
}

/// Composite Simpson on a uniform lattice; falls back to a trapezoid for the
/// final interval when the sample count is even.
fn simpson(h: f64, values: &mut dyn Iterator<Item = f64>) -> f64 {
    let vals: Vec<f64> = values.collect();
    let n = vals.len();
    if n < 2 {
        return 0.0;
    }
    let odd_intervals = (n - 1) % 2 == 1;
    let m = if odd_intervals { n - 1 } else { n };
    let mut acc = 0.0;
    if m >= 3 {
        acc += vals[0] + vals[m - 1];
        let mut i = 1;
        while i < m - 1 {
            acc += 4.0 * vals[i];
            if i + 1 < m - 1 {
                acc += 2.0 * vals[i + 1];
            }
            i += 2;
        }
        acc *= h / 3.0;
    }
    if odd_intervals {
        acc += 0.5 * h * (vals[n - 2] + vals[n - 1]);
    }
    acc
}

/// Inner boundary required so that 1/x^4 dominates the energy, centrifugal
/// and trap terms by `factor`, capped at `cap`.
pub fn required_x_min(l: u32, eps_abs_max: f64, kappa: f64, factor: f64, cap: f64) -> f64 {
    let mut x = cap;
    if eps_abs_max > 0.0 {
        x = x.min((1.0 / (factor * eps_abs_max)).powf(0.25));
    }
    let ll1 = (l * (l + 1)) as f64;
    if ll1 > 0.0 {
        x = x.min((1.0 / (factor * ll1)).sqrt().sqrt().powi(2)); // (1/(f l(l+1)))^(1/2) for x^2
    }
    let k4 = kappa.powi(4);
    if k4 > 0.0 {
        x = x.min((1.0 / (factor * k4)).powf(1.0 / 6.0));
    }
    x.max(1e-4)
}

/// Outer boundary: past the outer turning point of the largest window energy
/// with a decay margin, and past any planned trap displacement.
pub fn required_x_max(eps_max: f64, l: u32, kappa: f64, d_max: f64) -> f64 {
    let k2 = kappa * kappa;
    let eps_eff = eps_max.max(0.0) + (l * (l + 1)) as f64;
    let x_turn = eps_eff.sqrt() / k2;
    (d_max + 6.0 / kappa).max(x_turn + 5.0 / kappa)
}
