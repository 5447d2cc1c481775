//! Free rigid-body motion in the motor group.
//!
//! The pose `g` is a normalized motor mapping body to space coordinates and
//! `omega` the body-frame velocity bivector. A body-frame point moves with
//! `P' = 2 [omega, P]`; in space, `g P' reverse(g)`. The body angular
//! velocity vector is `-2 (omega_23, omega_31, omega_12)`.

mod inertia;
mod state;
mod trajectory;

pub use inertia::{inertia_from_point_masses, InertiaMap, RANK_TOL};
pub use state::{energy, euler_derivative, momentum_space, step_rk4, RigidBodyState, StateCoords};
pub use trajectory::{simulate, simulate_strided, Sample, Trajectory, CSV_HEADER};
