//! The P-I-Q compartment model: parameters, state, vector field and basic
//! reproduction number.
//!
//! Compartments are P (susceptible), I (infected), Q (quarantined), with
//! the bilinear incidence `gamma * P * I`:
//!
//! ```text
//! P' = lambda - gamma*P*I - d0*P
//! I' = gamma*P*I - (d0 + h + eta)*I + sigma*Q
//! Q' = eta*I - (d0 + mu + sigma)*Q
//! ```
//!
//! where the left-hand sides carry the ABC derivative of order `theta`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("invalid parameter {name}: {value} (must be non-negative and finite)")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("degenerate model: reproduction-number denominator is zero")]
    DegenerateModel,
    #[error("fractional order must lie in (0, 1], got {0}")]
    InvalidOrder(f64),
}

/// The seven epidemiological rates. All in 1/day except `lambda`
/// (persons/day) and `gamma` (1/(persons*day)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Recruitment rate.
    pub lambda: f64,
    /// Disease transmission rate.
    pub gamma: f64,
    /// Natural death rate.
    pub d0: f64,
    /// Infected-to-quarantine transfer rate.
    pub eta: f64,
    /// Death rate inside quarantine.
    pub mu: f64,
    /// Quarantine-to-infected return rate.
    pub sigma: f64,
    /// Death rate of the infected compartment.
    pub h: f64,
}

impl ModelParams {
    pub fn new(
        lambda: f64,
        gamma: f64,
        d0: f64,
        eta: f64,
        mu: f64,
        sigma: f64,
        h: f64,
    ) -> Result<Self, ModelError> {
        let params = Self {
            lambda,
            gamma,
            d0,
            eta,
            mu,
            sigma,
            h,
        };
        params.validate()?;
        Ok(params)
    }

    /// Non-negativity of every rate.
    pub fn validate(&self) -> Result<(), ModelError> {
        for (name, value) in self.named_values() {
            if !(value >= 0.0) || !value.is_finite() {
                return Err(ModelError::InvalidParameter { name, value });
            }
        }
        Ok(())
    }

    /// Parameter values in the fixed order used across reports, config
    /// files and the calibration free-parameter lists.
    pub fn named_values(&self) -> [(&'static str, f64); 7] {
        [
            ("lambda", self.lambda),
            ("gamma", self.gamma),
            ("d0", self.d0),
            ("eta", self.eta),
            ("mu", self.mu),
            ("sigma", self.sigma),
            ("h", self.h),
        ]
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.named_values()
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }

    pub fn set(&mut self, name: &str, value: f64) -> bool {
        match name {
            "lambda" => self.lambda = value,
            "gamma" => self.gamma = value,
            "d0" => self.d0 = value,
            "eta" => self.eta = value,
            "mu" => self.mu = value,
            "sigma" => self.sigma = value,
            "h" => self.h = value,
            _ => return false,
        }
        true
    }
}

/// Compartment values at one instant; real-valued person counts.
/// Nothing beyond finiteness is enforced: trajectories are allowed to
/// cross zero numerically and the solver flags rather than clamps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub p: f64,
    pub i: f64,
    pub q: f64,
}

impl State {
    pub fn new(p: f64, i: f64, q: f64) -> Self {
        Self { p, i, q }
    }

    pub fn total(&self) -> f64 {
        self.p + self.i + self.q
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.p, self.i, self.q]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }
}

/// Validated fractional order `theta` in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(theta: f64) -> Result<Self, ModelError> {
        if theta > 0.0 && theta <= 1.0 {
            Ok(Self(theta))
        } else {
            Err(ModelError::InvalidOrder(theta))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Right-hand side `(f1, f2, f3)` of the model at state `s`.
pub fn vector_field(params: &ModelParams, s: &State) -> (f64, f64, f64) {
    let State { p, i, q } = *s;
    let f1 = params.lambda - params.gamma * p * i - params.d0 * p;
    let f2 = params.gamma * p * i - (params.d0 + params.h + params.eta) * i + params.sigma * q;
    let f3 = params.eta * i - (params.d0 + params.mu + params.sigma) * q;
    (f1, f2, f3)
}

/// Basic reproduction number
///
/// `R0 = gamma*lambda*(d0+mu+sigma) / [d0*(d0+mu+sigma)*(d0+h) + eta*(d0+mu)]`.
pub fn r0(params: &ModelParams) -> Result<f64, ModelError> {
    let a = params.d0 + params.mu + params.sigma;
    let denom = params.d0 * a * (params.d0 + params.h) + params.eta * (params.d0 + params.mu);
    if denom == 0.0 {
        return Err(ModelError::DegenerateModel);
    }
    Ok(params.gamma * params.lambda * a / denom)
}

/// Rate of change of the total population `N = P + I + Q`, computed as
/// the literal sum of the vector-field components so that it agrees with
/// them to the last bit.
pub fn total_population_rate(params: &ModelParams, s: &State) -> f64 {
    let (f1, f2, f3) = vector_field(params, s);
    f1 + f2 + f3
}
