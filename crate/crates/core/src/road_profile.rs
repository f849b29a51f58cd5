//! Stochastic road elevation synthesis and conversion to time-domain input.
//!
//! Roads are realizations of a stationary random field with one-sided spatial
//! power spectral density `G(lambda) = G_lambda0 * (lambda/lambda0)^nu`.
//! A profile is a superposition of cosines on a fixed spatial frequency grid
//! with independent uniform phases; traversing it at constant speed gives the
//! elevation, velocity and acceleration time series seen at the tire.

use crate::error::{Error, Result};
use crate::seeding;
use crate::spline::CubicSpline;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Reference PSD amplitude per unit roughness factor, m^3/cycle.
pub const G_BASE: f64 = 6.0e-3;

/// Spectral description of a road surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoadPsdParams {
    /// PSD exponent.
    pub nu: f64,
    /// PSD amplitude at the reference frequency, m^3/cycle; always `gamma * G_BASE`.
    pub g_lambda0: f64,
    /// Roughness scale factor.
    pub gamma: f64,
    /// Reference spatial frequency, cycle/m.
    pub lambda0: f64,
    /// Lower edge of the synthesis band, cycle/m.
    pub lambda_min: f64,
    /// Upper edge of the synthesis band, cycle/m.
    pub lambda_max: f64,
    /// Number of spectral components.
    pub n_components: usize,
}

impl RoadPsdParams {
    /// Parameters with the given roughness factor and the standard band:
    /// `nu = -2`, `lambda0 = 0.1`, band `[0.01, 4]` cycle/m, 512 components.
    pub fn with_gamma(gamma: f64) -> Result<Self> {
        Self::new(-2.0, gamma, 0.1, 0.01, 4.0, 512)
    }

    pub fn new(
        nu: f64,
        gamma: f64,
        lambda0: f64,
        lambda_min: f64,
        lambda_max: f64,
        n_components: usize,
    ) -> Result<Self> {
        if !(gamma >= 0.0) {
            return Err(Error::Config(format!("gamma must be >= 0, got {gamma}")));
        }
        if !(lambda0 > 0.0) {
            return Err(Error::Config(format!("lambda0 must be > 0, got {lambda0}")));
        }
        if !(lambda_min > 0.0) {
            return Err(Error::Config(format!(
                "lambda_min must be > 0, got {lambda_min}"
            )));
        }
        if !(lambda_max > lambda_min) {
            return Err(Error::Config(format!(
                "lambda_max ({lambda_max}) must exceed lambda_min ({lambda_min})"
            )));
        }
        if n_components < 2 {
            return Err(Error::Config(format!(
                "n_components must be >= 2, got {n_components}"
            )));
        }
        Ok(Self {
            nu,
            g_lambda0: gamma * G_BASE,
            gamma,
            lambda0,
            lambda_min,
            lambda_max,
            n_components,
        })
    }

    /// Component grid spacing, cycle/m.
    pub fn delta_lambda(&self) -> f64 {
        (self.lambda_max - self.lambda_min) / (self.n_components - 1) as f64
    }
}

/// Sampled elevation of one road realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoadProfile {
    /// Elevation at `i * spacing`, in m.
    pub elevations: Vec<f64>,
    /// Spatial step, m.
    pub spacing: f64,
    /// Seed the phases were drawn from.
    pub seed: u64,
}

impl RoadProfile {
    /// Distance covered by the profile, m.
    pub fn extent(&self) -> f64 {
        (self.elevations.len() - 1) as f64 * self.spacing
    }
}

/// Road input as seen at the tire when traversing a profile at constant speed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoadInputSeries {
    /// Elevation r(ut), m.
    pub elevation: Vec<f64>,
    /// Velocity dr/dt, m/s.
    pub velocity: Vec<f64>,
    /// Acceleration d2r/dt2, m/s^2.
    pub acceleration: Vec<f64>,
    /// Temporal sampling rate, Hz.
    pub sample_rate: f64,
    /// Vehicle speed, m/s.
    pub speed: f64,
}

impl RoadInputSeries {
    pub fn len(&self) -> usize {
        self.elevation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elevation.is_empty()
    }
}

/// One-sided PSD magnitude at spatial frequency `lambda`.
pub fn psd_value(params: &RoadPsdParams, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!(
            "psd_value requires lambda > 0, got {lambda}"
        )));
    }
    Ok(params.g_lambda0 * (lambda / params.lambda0).powf(params.nu))
}

/// Synthesize a road elevation profile by spectral representation.
///
/// The profile holds `ceil(length/spacing) + 1` points. Component `k` sits at
/// `lambda_min + k * delta_lambda` and carries amplitude
/// `sqrt(2 G(lambda_k) delta_lambda)` with an independent phase uniform on
/// `[0, 2pi)` drawn from the seeded generator.
pub fn synthesize_profile(
    params: &RoadPsdParams,
    length: f64,
    spacing: f64,
    seed: u64,
) -> Result<RoadProfile> {
    if !(length > 0.0) {
        return Err(Error::Config(format!("length must be > 0, got {length}")));
    }
    if !(spacing > 0.0) {
        return Err(Error::Config(format!("spacing must be > 0, got {spacing}")));
    }
    let nyquist_limit = 1.0 / (2.0 * params.lambda_max);
    if spacing >= nyquist_limit {
        return Err(Error::Config(format!(
            "spacing {spacing} m violates spatial Nyquist: must be < {nyquist_limit} m \
             for lambda_max = {} cycle/m",
            params.lambda_max
        )));
    }

    let n_points = (length / spacing).ceil() as usize + 1;
    let dl = params.delta_lambda();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut components = Vec::with_capacity(params.n_components);
    for k in 0..params.n_components {
        let lambda = params.lambda_min + k as f64 * dl;
        let amp = (2.0 * psd_value(params, lambda)? * dl).sqrt();
        let phase: f64 = rng.random_range(0.0..TAU);
        components.push((TAU * lambda, amp, phase));
    }

    let elevations = (0..n_points)
        .map(|i| {
            let x = i as f64 * spacing;
            components
                .iter()
                .map(|&(w, a, p)| a * (w * x + p).cos())
                .sum()
        })
        .collect();

    Ok(RoadProfile {
        elevations,
        spacing,
        seed,
    })
}

/// Resample a profile along `x = u t` and differentiate analytically.
///
/// Elevation is interpolated with a natural cubic spline; velocity and
/// acceleration are the first and second derivatives of the interpolant
/// scaled by the chain rule.
pub fn road_input_series(
    profile: &RoadProfile,
    u: f64,
    sample_rate: f64,
    n_samples: usize,
) -> Result<RoadInputSeries> {
    if !(u > 0.0) {
        return Err(Error::Config(format!("speed must be > 0, got {u}")));
    }
    if !(sample_rate > 0.0) {
        return Err(Error::Config(format!(
            "sample_rate must be > 0, got {sample_rate}"
        )));
    }
    if n_samples == 0 {
        return Err(Error::Config("n_samples must be >= 1".into()));
    }
    let needed = u * (n_samples - 1) as f64 / sample_rate;
    if needed > profile.extent() + 1e-12 {
        return Err(Error::Range(format!(
            "requested duration covers {needed:.3} m but the profile extends {:.3} m",
            profile.extent()
        )));
    }

    let spline = CubicSpline::fit(0.0, profile.spacing, &profile.elevations)?;
    let mut elevation = Vec::with_capacity(n_samples);
    let mut velocity = Vec::with_capacity(n_samples);
    let mut acceleration = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let x = (u * i as f64 / sample_rate).min(profile.extent());
        elevation.push(spline.value(x));
        velocity.push(u * spline.deriv(x));
        acceleration.push(u * u * spline.second_deriv(x));
    }

    Ok(RoadInputSeries {
        elevation,
        velocity,
        acceleration,
        sample_rate,
        speed: u,
    })
}

/// Convenience used by dataset generation: draw a roughness factor uniformly
/// on `[0, 1)` and synthesize a profile long enough for `n_samples` at speed
/// `u`, all from one derived seed.
pub fn random_road_input(
    master_seed: u64,
    sample_index: u64,
    u: f64,
    sample_rate: f64,
    n_samples: usize,
    spacing: f64,
) -> Result<(RoadInputSeries, f64, u64)> {
    let mut gamma_rng = seeding::rng_for(master_seed, seeding::streams::GAMMA, sample_index);
    let gamma: f64 = gamma_rng.random_range(0.0..1.0);
    let params = RoadPsdParams::with_gamma(gamma)?;
    let seed = seeding::derive_seed(master_seed, seeding::streams::PROFILE, sample_index);
    let length = u * (n_samples - 1) as f64 / sample_rate + 2.0 * spacing;
    let profile = synthesize_profile(&params, length, spacing, seed)?;
    let series = road_input_series(&profile, u, sample_rate, n_samples)?;
    Ok((series, gamma, seed))
}
