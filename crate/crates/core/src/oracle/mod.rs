//! Reference implementations in plain coordinates, used to validate the
//! algebraic layers. Nothing here touches [`crate::kernel`].
//!
//! Conventions match the algebra's embeddings: lines `ax + by + c = 0`,
//! planes `ax + by + cz + d = 0`, Plücker lines `(u, p x u)`. Rotations by a
//! positive angle are clockwise about their center or oriented axis, the
//! sense produced by `exp((angle/2) X)` in these embeddings.

pub mod euler;
pub mod geom2;
pub mod geom3;

use nalgebra::{Quaternion, Vector3};

/// Dual quaternion product from nalgebra's Hamilton product:
/// `(r1 + eps d1)(r2 + eps d2) = r1 r2 + eps (r1 d2 + d1 r2)`.
pub fn dual_quaternion_product(a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
    let q = |s: &[f64]| Quaternion::from_parts(s[0], Vector3::new(s[1], s[2], s[3]));
    let (r1, d1) = (q(&a[..4]), q(&a[4..]));
    let (r2, d2) = (q(&b[..4]), q(&b[4..]));
    let r = r1 * r2;
    let d = r1 * d2 + d1 * r2;
    [r.w, r.i, r.j, r.k, d.w, d.i, d.j, d.k]
}

/// Largest absolute difference between two equal-length slices.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// [`max_abs_diff`] minimized over the sign of `b`.
pub fn max_abs_diff_up_to_sign(a: &[f64], b: &[f64]) -> f64 {
    let neg: Vec<f64> = b.iter().map(|v| -v).collect();
    max_abs_diff(a, b).min(max_abs_diff(a, &neg))
}
