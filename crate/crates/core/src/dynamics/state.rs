use serde::{Deserialize, Serialize};

use super::InertiaMap;
use crate::error::{PgaError, Result};
use crate::kernel::{pga3, Multivector};
use crate::pga3d::{bivector, bivector_coords, even_coords, Motor3};

/// Pose `g` (body to space) and body-frame velocity bivector `omega`.
#[derive(Debug, Clone, PartialEq)]
pub struct RigidBodyState {
    pub g: Motor3,
    pub omega: Multivector,
}

/// Flat coordinates: `g` on the even basis, `omega` on the bivector basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateCoords {
    pub g: [f64; 8],
    pub omega: [f64; 6],
}

impl RigidBodyState {
    pub fn new(g: Motor3, omega: Multivector) -> Result<Self> {
        let omega_only = omega.grade_part(2)?;
        if !(&omega - &omega_only).is_zero(0.0) {
            return Err(PgaError::WrongGrade {
                what: "velocity",
                expected: 2,
                found: omega.grades(),
            });
        }
        Ok(Self { g, omega })
    }

    /// Identity pose with velocity coordinates `omega`.
    pub fn from_velocity(omega: [f64; 6]) -> Self {
        Self {
            g: Motor3::from_coords(&pga3(), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
            omega: bivector(omega),
        }
    }

    pub fn coords(&self) -> StateCoords {
        StateCoords {
            g: self.g.coords(),
            omega: bivector_coords(&self.omega),
        }
    }

    pub fn from_coords(c: &StateCoords) -> Self {
        Self {
            g: Motor3::from_coords(&pga3(), &c.g),
            omega: bivector(c.omega),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.g.mv().is_finite() && self.omega.is_finite()
    }
}

/// `g' = g Omega` and `Omega' = 2 A^{-1}([A(Omega), Omega])` with the half
/// commutator `[X, Y] = (XY - YX)/2`.
pub fn euler_derivative(
    state: &RigidBodyState,
    inertia: &InertiaMap,
) -> Result<(Multivector, Multivector)> {
    if !inertia.is_invertible() {
        return Err(PgaError::SingularInertia);
    }
    Ok(derivative_unchecked(state, inertia))
}

fn derivative_unchecked(state: &RigidBodyState, inertia: &InertiaMap) -> (Multivector, Multivector) {
    let g_dot = state.g.mv() * &state.omega;
    let m = inertia.apply(&state.omega);
    let comm = &(&m * &state.omega) - &(&state.omega * &m);
    // 2 * (XY - YX)/2
    let omega_dot = inertia.apply_inverse(&comm.grade_part_unchecked(2));
    (g_dot, omega_dot)
}

fn flat(g: &Multivector, w: &Multivector) -> [f64; 14] {
    let gc = even_coords(g);
    let wc = bivector_coords(w);
    let mut out = [0.0; 14];
    out[..8].copy_from_slice(&gc);
    out[8..].copy_from_slice(&wc);
    out
}

fn unflat(y: &[f64; 14]) -> RigidBodyState {
    let mut g = [0.0; 8];
    g.copy_from_slice(&y[..8]);
    let mut w = [0.0; 6];
    w.copy_from_slice(&y[8..]);
    RigidBodyState::from_coords(&StateCoords { g, omega: w })
}

fn axpy(y: &[f64; 14], h: f64, k: &[f64; 14]) -> [f64; 14] {
    std::array::from_fn(|i| y[i] + h * k[i])
}

/// One classical RK4 step on the 14 coordinates, followed by rescaling `g`
/// back onto `g reverse(g) = 1`.
pub fn step_rk4(state: &RigidBodyState, inertia: &InertiaMap, dt: f64) -> Result<RigidBodyState> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(PgaError::InvalidParameter(format!("time step {dt} must be positive")));
    }
    if !inertia.is_invertible() {
        return Err(PgaError::SingularInertia);
    }
    let f = |y: &[f64; 14]| {
        let s = unflat(y);
        let (gd, wd) = derivative_unchecked(&s, inertia);
        flat(&gd, &wd)
    };
    let c = state.coords();
    let mut y = [0.0; 14];
    y[..8].copy_from_slice(&c.g);
    y[8..].copy_from_slice(&c.omega);
    let k1 = f(&y);
    let k2 = f(&axpy(&y, 0.5 * dt, &k1));
    let k3 = f(&axpy(&y, 0.5 * dt, &k2));
    let k4 = f(&axpy(&y, dt, &k3));
    let next: [f64; 14] =
        std::array::from_fn(|i| y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
    let mut s = unflat(&next);
    if !s.is_finite() {
        return Err(PgaError::NonFinite { step: 1, t: dt });
    }
    s.g = s.g.normalize()?;
    Ok(s)
}

/// Kinetic energy `Omega^T K Omega / 2`.
pub fn energy(state: &RigidBodyState, inertia: &InertiaMap) -> f64 {
    inertia.energy_coords(&bivector_coords(&state.omega))
}

/// Space-frame momentum `g A(Omega) reverse(g)`; constant for a free body.
pub fn momentum_space(state: &RigidBodyState, inertia: &InertiaMap) -> Multivector {
    let m = inertia.apply(&state.omega);
    (&(state.g.mv() * &m) * &state.g.mv().reverse()).grade_part_unchecked(2)
}
