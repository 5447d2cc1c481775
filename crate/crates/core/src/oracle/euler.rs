//! Torque-free rigid body in angular-velocity space:
//! `I w' = (I w) x w`, integrated with classical RK4.

use nalgebra::{Matrix3, Vector3};

/// `sum m (|r|^2 Id - r r^T)`.
pub fn inertia_tensor(particles: &[(f64, [f64; 3])]) -> Matrix3<f64> {
    particles.iter().fold(Matrix3::zeros(), |acc, (m, r)| {
        let r = Vector3::from(*r);
        acc + (Matrix3::identity() * r.norm_squared() - r * r.transpose()) * *m
    })
}

pub fn derivative(i: &Matrix3<f64>, i_inv: &Matrix3<f64>, w: &Vector3<f64>) -> Vector3<f64> {
    i_inv * (i * w).cross(w)
}

/// Integrate `steps` RK4 steps of size `dt`.
pub fn integrate(i: &Matrix3<f64>, w0: Vector3<f64>, dt: f64, steps: usize) -> Vector3<f64> {
    let i_inv = i.try_inverse().expect("invertible inertia tensor");
    let f = |w: &Vector3<f64>| derivative(i, &i_inv, w);
    (0..steps).fold(w0, |w, _| {
        let k1 = f(&w);
        let k2 = f(&(w + k1 * (0.5 * dt)));
        let k3 = f(&(w + k2 * (0.5 * dt)));
        let k4 = f(&(w + k3 * dt));
        w + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0)
    })
}

/// `w^T I w / 2`.
pub fn kinetic_energy(i: &Matrix3<f64>, w: &Vector3<f64>) -> f64 {
    0.5 * w.dot(&(i * w))
}
