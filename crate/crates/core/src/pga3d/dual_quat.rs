//! Dual quaternions as the even subalgebra.
//!
//! `i, j, k = e32, e13, e21`, `eps = e0123`, and `eps i, eps j, eps k =
//! e01, e02, e03`.

use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::{Motor3, E01, E02, E03, E0123, E12, E13, E23};
use crate::kernel::{pga3, Multivector};

/// `real + eps dual`, each quaternion stored as `[w, x, y, z]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualQuaternion {
    pub real: [f64; 4],
    pub dual: [f64; 4],
}

fn hamilton(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    let [aw, ax, ay, az] = a;
    let [bw, bx, by, bz] = b;
    [
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ]
}

impl Mul for DualQuaternion {
    type Output = DualQuaternion;

    fn mul(self, rhs: DualQuaternion) -> DualQuaternion {
        let r = hamilton(self.real, rhs.real);
        let d1 = hamilton(self.real, rhs.dual);
        let d2 = hamilton(self.dual, rhs.real);
        DualQuaternion {
            real: r,
            dual: [d1[0] + d2[0], d1[1] + d2[1], d1[2] + d2[2], d1[3] + d2[3]],
        }
    }
}

impl DualQuaternion {
    pub fn max_diff(&self, other: &DualQuaternion) -> f64 {
        self.real
            .iter()
            .chain(&self.dual)
            .zip(other.real.iter().chain(&other.dual))
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Even part of `m` as a dual quaternion.
pub fn to_dual_quaternion(m: &Motor3) -> DualQuaternion {
    let mv = m.mv();
    DualQuaternion {
        real: [mv.scalar_part(), -mv.get(E23), mv.get(E13), -mv.get(E12)],
        dual: [mv.get(E0123), mv.get(E01), mv.get(E02), mv.get(E03)],
    }
}

/// Inverse of [`to_dual_quaternion`], in the standard Cl*(3,0,1).
pub fn from_dual_quaternion(q: &DualQuaternion) -> Motor3 {
    let [w, x, y, z] = q.real;
    let [dw, dx, dy, dz] = q.dual;
    let mv = Multivector::scalar(&pga3(), w)
        .with(E23, -x)
        .with(E13, y)
        .with(E12, -z)
        .with(E0123, dw)
        .with(E01, dx)
        .with(E02, dy)
        .with(E03, dz);
    Motor3(mv)
}
