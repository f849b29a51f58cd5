//! Tire-level road input estimation from cabin vibration.
//!
//! The pipeline in this crate:
//!
//! 1. [`road_profile`] synthesizes stochastic road elevation profiles from a
//!    power-law spatial PSD and turns them into time-domain input signals at
//!    vehicle speed.
//! 2. [`vehicle_dynamics`] integrates a nonlinear two-DOF quarter-car
//!    (bilinear suspension damping, quadratic tire stiffness) over a road
//!    input and provides linearized modal and transfer-function analysis.
//! 3. [`dataset`] generates, normalizes, splits and persists the multi-vehicle
//!    training corpus.
//! 4. [`neural`] is a small dense-layer network stack (forward, reverse-mode
//!    gradients, Adam) hosting the seven sub-networks of the model.
//! 5. [`training`] runs the joint reconstruction/classification objective with
//!    the alternating adversarial schedule that makes the road latent feature
//!    invariant to the sensing vehicle.
//! 6. [`inference_eval`] recovers the road input from a cabin signal by
//!    cross-inference, classifies the vehicle, and builds evaluation reports.

pub mod dataset;
pub mod error;
pub mod inference_eval;
pub mod neural;
pub mod road_profile;
pub mod seeding;
pub mod spline;
pub mod training;
pub mod vehicle_dynamics;

pub use error::{Error, Result};
