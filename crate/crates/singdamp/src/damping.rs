//! Symbolic damping functions on the circle.
//!
//! A [`DampingSpec`] is a finite sum of power-singularity pieces and bounded
//! pieces. Power pieces vanish on a window `[θ−σ, θ+σ]` and blow up (or decay)
//! like `amplitude · ((d)^β + plus_one)` at distance `d` past the window edge.
//! Cell averages are computed from the exact antiderivative per piece, so a
//! `β ∈ (−1, 0)` singularity contributes finite, mass-preserving diagonal
//! damping entries to any discretization.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const TAU: f64 = 2.0 * PI;

/// Wrap an angle into `[−π, π)`.
pub fn wrap_angle(x: f64) -> f64 {
    let mut s = (x + PI).rem_euclid(TAU) - PI;
    if s >= PI {
        s = -PI;
    }
    s
}

/// One additive piece of the damping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DampingPiece {
    /// `amplitude · ((|wrap(x−θ)| − σ)^β + plus_one)` outside the window, 0 inside.
    Power {
        beta: f64,
        sigma: f64,
        theta: f64,
        amplitude: f64,
        plus_one: bool,
    },
    /// `level` on the angular interval `support = [a, b]`, 0 elsewhere.
    Bounded { support: [f64; 2], level: f64 },
}

/// A damping function `W ≥ 0` on the circle, as a finite sum of pieces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DampingSpec {
    pub pieces: Vec<DampingPiece>,
}

/// Rates predicted from the damping class alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatePrediction {
    /// `(β+2)/(β+3)`, the sharp torus energy decay exponent.
    pub decay_exponent: f64,
    /// `1/(2+β)`, the torus resolvent-norm growth exponent.
    pub resolvent_exponent: f64,
    /// Supremum `p*` of `p` with normally-`L^p` profile; open endpoint.
    pub normal_p: f64,
    /// `1/(2 + 1/p)`, the observability-route decay exponent.
    pub schrodinger_exponent: f64,
    /// Set when power pieces carry distinct `β` and the max was used.
    pub mixed_beta: bool,
}

/// Max/mean of the multiplier ratio over random trials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioStats {
    pub max: f64,
    pub mean: f64,
}

impl DampingPiece {
    fn validate(&self) -> Result<()> {
        match *self {
            DampingPiece::Power {
                beta,
                sigma,
                amplitude,
                ..
            } => {
                if !(beta > -1.0) {
                    return Err(Error::InvalidSpec(format!(
                        "power piece needs beta > -1 for integrability, got {beta}"
                    )));
                }
                if !(sigma > 0.0 && sigma < PI) {
                    return Err(Error::InvalidSpec(format!(
                        "power piece needs 0 < sigma < pi, got {sigma}"
                    )));
                }
                if !(amplitude > 0.0) {
                    return Err(Error::InvalidSpec(format!(
                        "power piece needs amplitude > 0, got {amplitude}"
                    )));
                }
            }
            DampingPiece::Bounded { support, level } => {
                if !(level >= 0.0) {
                    return Err(Error::InvalidSpec(format!(
                        "bounded piece needs level >= 0, got {level}"
                    )));
                }
                if !(support[0] < support[1]) || support[0] < -PI || support[1] > PI {
                    return Err(Error::InvalidSpec(format!(
                        "bounded piece support must satisfy -pi <= a < b <= pi, got {support:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Pointwise value at wrapped angle `x`; `+∞` exactly on a singular edge.
    fn eval(&self, x: f64) -> f64 {
        match *self {
            DampingPiece::Power {
                beta,
                sigma,
                theta,
                amplitude,
                plus_one,
            } => {
                let s = wrap_angle(x - theta).abs();
                if s < sigma {
                    0.0
                } else if s == sigma {
                    if beta < 0.0 {
                        f64::INFINITY
                    } else if beta == 0.0 {
                        amplitude * (1.0 + if plus_one { 1.0 } else { 0.0 })
                    } else {
                        amplitude * if plus_one { 1.0 } else { 0.0 }
                    }
                } else {
                    let d = s - sigma;
                    amplitude * (d.powf(beta) + if plus_one { 1.0 } else { 0.0 })
                }
            }
            DampingPiece::Bounded { support, level } => {
                let s = wrap_angle(x);
                if s >= support[0] && s <= support[1] {
                    level
                } else {
                    0.0
                }
            }
        }
    }

    /// Exact `∫_{s0}^{s1} piece(s) ds` for `[s0, s1] ⊆ [−π, π]` in the piece's
    /// own centered coordinate (power) or absolute coordinate (bounded).
    fn integral_on_base(&self, s0: f64, s1: f64) -> f64 {
        debug_assert!(s0 <= s1 && s0 >= -PI - 1e-12 && s1 <= PI + 1e-12);
        match *self {
            DampingPiece::Power {
                beta,
                sigma,
                amplitude,
                plus_one,
                ..
            } => {
                // antiderivative of the even profile on [0, π]
                let prim = |t: f64| -> f64 {
                    if t <= sigma {
                        0.0
                    } else {
                        let d = t - sigma;
                        amplitude
                            * (d.powf(beta + 1.0) / (beta + 1.0)
                                + if plus_one { d } else { 0.0 })
                    }
                };
                let even_int = |a: f64, b: f64| -> f64 { prim(b) - prim(a) };
                if s1 <= 0.0 {
                    even_int(-s1, -s0)
                } else if s0 >= 0.0 {
                    even_int(s0, s1)
                } else {
                    even_int(0.0, -s0) + even_int(0.0, s1)
                }
            }
            DampingPiece::Bounded { support, level } => {
                let lo = s0.max(support[0]);
                let hi = s1.min(support[1]);
                if hi > lo {
                    level * (hi - lo)
                } else {
                    0.0
                }
            }
        }
    }

    /// Exact integral over an arbitrary angular interval `[a, b]`,
    /// `b − a ≤ 2π`, interpreting the piece 2π-periodically.
    fn integral(&self, a: f64, b: f64) -> f64 {
        let shift = match *self {
            DampingPiece::Power { theta, .. } => theta,
            DampingPiece::Bounded { .. } => 0.0,
        };
        let mut s0 = a - shift;
        let mut s1 = b - shift;
        // translate so that s0 ∈ [−π, π)
        let k = ((s0 + PI) / TAU).floor();
        s0 -= k * TAU;
        s1 -= k * TAU;
        if s1 <= PI + 1e-15 {
            self.integral_on_base(s0, s1.min(PI))
        } else {
            self.integral_on_base(s0, PI) + self.integral_on_base(-PI, s1 - TAU)
        }
    }
}

impl DampingSpec {
    /// Build a validated spec. The represented `W` is ≥ 0 everywhere and not
    /// identically 0 unless `pieces` is empty.
    pub fn new(pieces: Vec<DampingPiece>) -> Result<Self> {
        for p in &pieces {
            p.validate()?;
        }
        Ok(DampingSpec { pieces })
    }

    /// The empty (undamped) spec, `W ≡ 0`.
    pub fn empty() -> Self {
        DampingSpec { pieces: Vec::new() }
    }

    /// The model damping `V^β` of the polynomially controlled class:
    /// zero on `[θ−σ, θ+σ]`, `(d)^β` at distance `d` past the edge.
    pub fn v_beta(beta: f64, sigma: f64, theta: f64) -> Result<Self> {
        Self::new(vec![DampingPiece::Power {
            beta,
            sigma,
            theta,
            amplitude: 1.0,
            plus_one: false,
        }])
    }

    /// The sharpness damping `1_{|x|≥π/2} ((|x|−π/2)^β + 1)`.
    pub fn sharpness(beta: f64) -> Result<Self> {
        Self::new(vec![DampingPiece::Power {
            beta,
            sigma: PI / 2.0,
            theta: 0.0,
            amplitude: 1.0,
            plus_one: true,
        }])
    }

    /// Constant damping `W ≡ level` on the whole circle.
    pub fn constant(level: f64) -> Result<Self> {
        Self::new(vec![DampingPiece::Bounded {
            support: [-PI, PI],
            level,
        }])
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Pointwise `W(x)`; total into the extended reals
    /// (`+∞` exactly at singular window edges when `β < 0`).
    pub fn eval_pointwise(&self, x: f64) -> f64 {
        self.pieces.iter().map(|p| p.eval(x)).sum()
    }

    /// Exact `(1/(b−a)) ∫_a^b W`, finite for all `β > −1` even when the cell
    /// touches a singular edge. `b − a` must be positive and at most 2π;
    /// intervals may wrap past ±π (the seam cell of a periodic grid).
    pub fn cell_average(&self, a: f64, b: f64) -> Result<f64> {
        if !(b > a) || b - a > TAU + 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "cell_average needs a < b with b - a <= 2*pi, got [{a}, {b}]"
            )));
        }
        let total: f64 = self.pieces.iter().map(|p| p.integral(a, b)).sum();
        Ok(total / (b - a))
    }

    /// Exact `∫_{S¹} W`.
    pub fn total_mass(&self) -> f64 {
        self.pieces.iter().map(|p| p.integral(-PI, PI)).sum()
    }

    /// Supremum `p*` such that the normal profile `w(ρ)` is `L^p` near every
    /// singular edge: `min(−1/β)` over power pieces with `β < 0`, `+∞` when
    /// every piece is bounded near its edges. The value `p*` itself is an
    /// open endpoint (the profile is `L^{p*−}` but not `L^{p*}`).
    pub fn classify_normal_p(&self) -> Result<f64> {
        if self.pieces.is_empty() {
            return Err(Error::InvalidSpec(
                "classify_normal_p needs a nonempty spec".into(),
            ));
        }
        let mut p_star = f64::INFINITY;
        for p in &self.pieces {
            if let DampingPiece::Power { beta, .. } = *p {
                if beta < 0.0 {
                    p_star = p_star.min(-1.0 / beta);
                }
            }
        }
        Ok(p_star)
    }

    /// Shared `β` of the power pieces: `None` for an all-bounded spec
    /// (equivalent to `β = 0` for rate purposes), the maximum with a flag
    /// when pieces disagree.
    fn effective_beta(&self) -> (f64, bool) {
        let betas: Vec<f64> = self
            .pieces
            .iter()
            .filter_map(|p| match *p {
                DampingPiece::Power { beta, .. } => Some(beta),
                _ => None,
            })
            .collect();
        if betas.is_empty() {
            return (0.0, false);
        }
        let max = betas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mixed = betas.iter().any(|&b| (b - max).abs() > 1e-12);
        (max, mixed)
    }

    /// Predicted rates from `(β, p)` by direct formula evaluation.
    pub fn predict_rates(&self) -> Result<RatePrediction> {
        if self.pieces.is_empty() {
            return Err(Error::InvalidSpec(
                "predict_rates is undefined for the empty spec".into(),
            ));
        }
        let (beta, mixed_beta) = self.effective_beta();
        let normal_p = self.classify_normal_p()?;
        let schrodinger_exponent = if normal_p.is_infinite() {
            0.5
        } else {
            1.0 / (2.0 + 1.0 / normal_p)
        };
        Ok(RatePrediction {
            decay_exponent: (beta + 2.0) / (beta + 3.0),
            resolvent_exponent: 1.0 / (2.0 + beta),
            normal_p,
            schrodinger_exponent,
            mixed_beta,
        })
    }

    /// Cell-averaged damping vector on the uniform periodic `n`-grid with
    /// nodes `x_i = −π + i·2π/n` (the seam cell wraps).
    pub fn cell_averages(&self, n: usize) -> Result<Vec<f64>> {
        let dx = TAU / n as f64;
        (0..n)
            .map(|i| {
                let x = -PI + i as f64 * dx;
                self.cell_average(x - 0.5 * dx, x + 0.5 * dx)
            })
            .collect()
    }

    /// Statistics of `‖√W u‖_{L²} / ‖u‖_{H^s}` over random band-limited
    /// trial functions (frequency cutoff `resolution/4`, coefficients drawn
    /// deterministically from `seed`), with cell-averaged `W` and discrete
    /// Fourier `H^s` norms.
    pub fn sobolev_multiplier_ratio(
        &self,
        resolution: usize,
        s: f64,
        trials: usize,
        seed: u64,
    ) -> Result<RatioStats> {
        if s < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "sobolev index must be >= 0, got {s}"
            )));
        }
        if resolution < 16 {
            return Err(Error::InvalidGrid(format!(
                "resolution must be >= 16, got {resolution}"
            )));
        }
        if trials < 1 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        let n = resolution;
        let dx = TAU / n as f64;
        let w_bar = self.cell_averages(n)?;
        let cutoff = (n / 4) as i64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for _ in 0..trials {
            let coeffs: Vec<(i64, Complex64)> = (-cutoff..=cutoff)
                .map(|k| {
                    let re: f64 = rng.gen_range(-1.0..1.0);
                    let im: f64 = rng.gen_range(-1.0..1.0);
                    (k, Complex64::new(re, im))
                })
                .collect();
            // synthesize on nodes
            let mut num2 = 0.0;
            for (i, &w) in w_bar.iter().enumerate() {
                let x = -PI + i as f64 * dx;
                let mut u = Complex64::new(0.0, 0.0);
                for &(k, c) in &coeffs {
                    u += c * Complex64::from_polar(1.0, k as f64 * x);
                }
                num2 += w * u.norm_sqr() * dx;
            }
            let den2: f64 = TAU
                * coeffs
                    .iter()
                    .map(|&(k, c)| (1.0 + (k * k) as f64).powf(s) * c.norm_sqr())
                    .sum::<f64>();
            let ratio = (num2 / den2).sqrt();
            max = max.max(ratio);
            sum += ratio;
        }
        Ok(RatioStats {
            max,
            mean: sum / trials as f64,
        })
    }

    /// SHA-256 of the canonical JSON encoding, hex, first 16 characters.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("spec serializes");
        let digest = Sha256::digest(json.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        hex[..16].to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn v_half() -> DampingSpec {
        DampingSpec::v_beta(-0.5, PI / 4.0, 0.0).unwrap()
    }

    /// Power piece whose right window edge sits at x = 0.
    fn edge_at_zero(beta: f64) -> DampingSpec {
        DampingSpec::new(vec![DampingPiece::Power {
            beta,
            sigma: PI / 4.0,
            theta: -PI / 4.0,
            amplitude: 1.0,
            plus_one: false,
        }])
        .unwrap()
    }

    #[test]
    fn eval_outside_window_unit_distance() {
        // (1)^(-1/2) = 1 one radian past the window edge
        let w = v_half();
        assert_abs_diff_eq!(w.eval_pointwise(PI / 4.0 + 1.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn eval_inside_window_is_zero() {
        let w = v_half();
        assert_eq!(w.eval_pointwise(0.0), 0.0);
        assert_eq!(w.eval_pointwise(0.3), 0.0);
    }

    #[test]
    fn eval_at_edge_diverges_for_negative_beta() {
        let w = v_half();
        assert!(w.eval_pointwise(PI / 4.0).is_infinite());
        assert!(w.eval_pointwise(-PI / 4.0).is_infinite());
    }

    #[test]
    fn eval_plus_one_adds_amplitude() {
        let w = DampingSpec::sharpness(-0.5).unwrap();
        // at distance 1 past pi/2: 1^beta + 1 = 2
        assert_abs_diff_eq!(w.eval_pointwise(PI / 2.0 + 1.0), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn cell_average_sqrt_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let w = edge_at_zero(-0.5);
        assert_relative_eq!(w.cell_average(0.0, 1.0).unwrap(), 2.0, epsilon = 1e-14);
    }

    #[test]
    fn cell_average_inside_window_is_zero() {
        let w = v_half();
        assert_eq!(w.cell_average(-0.1, 0.1).unwrap(), 0.0);
    }

    #[test]
    fn cell_average_linear_growth() {
        // (1/2)·∫_0^2 x dx = 1
        let w = edge_at_zero(1.0);
        assert_relative_eq!(w.cell_average(0.0, 2.0).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn cell_average_converges_to_pointwise() {
        let w = DampingSpec::sharpness(-0.5).unwrap();
        let x0 = PI / 2.0 + 0.4; // continuity point
        let target = w.eval_pointwise(x0);
        let h = 1e-6;
        let avg = w.cell_average(x0 - h / 2.0, x0 + h / 2.0).unwrap();
        assert_relative_eq!(avg, target, max_relative = 1e-4);
    }

    #[test]
    fn mass_telescopes_over_partition() {
        let w = DampingSpec::new(vec![
            DampingPiece::Power {
                beta: -0.5,
                sigma: 0.7,
                theta: 0.3,
                amplitude: 1.3,
                plus_one: true,
            },
            DampingPiece::Bounded {
                support: [1.0, 2.0],
                level: 3.0,
            },
        ])
        .unwrap();
        for &n in &[7usize, 64, 257] {
            let dx = TAU / n as f64;
            let sum: f64 = (0..n)
                .map(|i| {
                    let a = -PI + i as f64 * dx;
                    w.cell_average(a, a + dx).unwrap() * dx
                })
                .sum();
            assert_relative_eq!(sum, w.total_mass(), max_relative = 1e-12);
        }
    }

    #[test]
    fn seam_cell_wraps() {
        // piece supported near -pi; the seam cell [-pi - h, -pi + h] sees it
        let w = DampingSpec::new(vec![DampingPiece::Bounded {
            support: [-PI, -PI + 0.5],
            level: 2.0,
        }])
        .unwrap();
        let avg = w.cell_average(-PI - 0.1, -PI + 0.1).unwrap();
        assert_relative_eq!(avg, 1.0, epsilon = 1e-13); // half the cell is damped
    }

    #[test]
    fn classify_single_power() {
        assert_relative_eq!(v_half().classify_normal_p().unwrap(), 2.0);
    }

    #[test]
    fn classify_all_nonnegative_beta_is_infinite() {
        let w = DampingSpec::new(vec![DampingPiece::Power {
            beta: 1.0,
            sigma: 0.5,
            theta: 0.0,
            amplitude: 1.0,
            plus_one: false,
        }])
        .unwrap();
        assert!(w.classify_normal_p().unwrap().is_infinite());
    }

    #[test]
    fn classify_min_over_pieces() {
        // betas {-1/2, -3/4} -> min(2, 4/3) = 4/3
        let w = DampingSpec::new(vec![
            DampingPiece::Power {
                beta: -0.5,
                sigma: 0.5,
                theta: 0.0,
                amplitude: 1.0,
                plus_one: false,
            },
            DampingPiece::Power {
                beta: -0.75,
                sigma: 0.5,
                theta: 2.0,
                amplitude: 1.0,
                plus_one: false,
            },
        ])
        .unwrap();
        assert_relative_eq!(w.classify_normal_p().unwrap(), 4.0 / 3.0, epsilon = 1e-14);
    }

    /// Numerical L^p quadrature of the normal profile near the edge backs the
    /// closed-form p*: ∫ d^{βp} converges iff βp > −1, i.e. p < −1/β.
    #[test]
    fn classify_matches_lp_quadrature() {
        let beta: f64 = -0.75;
        let p_star = -1.0 / beta; // 4/3
        let quad = |p: f64| -> (f64, f64) {
            // ∫_eps^0.5 d^{beta p} dd at two cutoff levels
            let int = |eps: f64| {
                let m = 40_000;
                let h = (0.5 - eps) / m as f64;
                (0..m)
                    .map(|i| (eps + (i as f64 + 0.5) * h).powf(beta * p) * h)
                    .sum::<f64>()
            };
            (int(1e-6), int(1e-8))
        };
        let (a1, a2) = quad(p_star - 0.1); // integrable: cutoff-insensitive
        assert_relative_eq!(a1, a2, max_relative = 1e-2);
        let (b1, b2) = quad(p_star + 0.1); // divergent: grows with cutoff
        assert!(b2 > 1.5 * b1);
    }

    #[test]
    fn rates_beta_zero() {
        let w = DampingSpec::v_beta(0.5, 0.5, 0.0).unwrap();
        let _ = w; // silence
        let ind = DampingSpec::new(vec![DampingPiece::Power {
            beta: 0.0,
            sigma: 0.5,
            theta: 0.0,
            amplitude: 1.0,
            plus_one: false,
        }])
        .unwrap();
        let r = ind.predict_rates().unwrap();
        assert_relative_eq!(r.decay_exponent, 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn rates_beta_minus_half() {
        let r = v_half().predict_rates().unwrap();
        assert_relative_eq!(r.decay_exponent, 3.0 / 5.0, epsilon = 1e-15);
        assert_relative_eq!(r.resolvent_exponent, 2.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(r.normal_p, 2.0, epsilon = 1e-15);
    }

    #[test]
    fn rates_p_infinite_gives_half() {
        let w = DampingSpec::constant(1.0).unwrap();
        let r = w.predict_rates().unwrap();
        assert_relative_eq!(r.schrodinger_exponent, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn rates_empty_spec_errors() {
        assert!(DampingSpec::empty().predict_rates().is_err());
    }

    #[test]
    fn invalid_pieces_rejected() {
        assert!(DampingSpec::v_beta(-1.0, 0.5, 0.0).is_err());
        assert!(DampingSpec::v_beta(-0.5, 4.0, 0.0).is_err());
        assert!(DampingSpec::new(vec![DampingPiece::Bounded {
            support: [1.0, 0.5],
            level: 1.0,
        }])
        .is_err());
    }

    #[test]
    fn multiplier_ratio_identity_damping() {
        // W ≡ 1: √W is the identity multiplier, so the s = 0 ratio is 1
        let w = DampingSpec::constant(1.0).unwrap();
        let stats = w.sobolev_multiplier_ratio(64, 0.0, 8, 7).unwrap();
        assert_abs_diff_eq!(stats.max, 1.0, epsilon = 1e-8);
        assert_abs_diff_eq!(stats.mean, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn multiplier_ratio_rejects_bad_input() {
        let w = v_half();
        assert!(w.sobolev_multiplier_ratio(8, 0.0, 4, 1).is_err());
        assert!(w.sobolev_multiplier_ratio(64, -0.5, 4, 1).is_err());
    }

    #[test]
    fn multiplier_ratio_deterministic() {
        let w = v_half();
        let a = w.sobolev_multiplier_ratio(128, 0.25, 8, 42).unwrap();
        let b = w.sobolev_multiplier_ratio(128, 0.25, 8, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip_exact_field_names() {
        let spec = DampingSpec::new(vec![
            DampingPiece::Power {
                beta: -0.5,
                sigma: PI / 4.0,
                theta: 0.0,
                amplitude: 1.0,
                plus_one: false,
            },
            DampingPiece::Bounded {
                support: [1.0, 2.0],
                level: 3.0,
            },
        ])
        .unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"kind\":\"power\""));
        assert!(json.contains("\"beta\":-0.5"));
        assert!(json.contains("\"plus_one\":false"));
        assert!(json.contains("\"kind\":\"bounded\""));
        assert!(json.contains("\"support\":[1.0,2.0]"));
        let back: DampingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn hash_is_stable_and_spec_sensitive() {
        let a = v_half();
        let b = DampingSpec::v_beta(-0.5, PI / 4.0, 0.1).unwrap();
        assert_eq!(a.hash(), a.hash());
        assert_ne!(a.hash(), b.hash());
    }
}
