//! Dihedral groups generated by two mirror planes.

use super::Plane;
use crate::error::{PgaError, Result};
use crate::kernel::Multivector;

/// Two versors are the same isometry when they agree up to sign.
const SAME_TOL: f64 = 1e-9;

/// Mirror planes through the z axis at dihedral angle `theta`: `x = 0` and
/// its image rotated by `theta` about z.
pub fn dihedral_mirrors(theta: f64) -> (Plane, Plane) {
    let a = super::plane(1.0, 0.0, 0.0, 0.0).expect("nonzero plane");
    let b = super::plane(theta.cos(), theta.sin(), 0.0, 0.0).expect("nonzero plane");
    (a, b)
}

/// Max-coefficient distance of `(ab)^k` from `1`.
pub fn closure_error(a: &Plane, b: &Plane, k: u32) -> f64 {
    let p = power(&(a.mv() * b.mv()), k);
    (p - Multivector::scalar(a.mv().algebra(), 1.0)).max_abs()
}

/// Distance of `(ab)^k` from `+-1`, i.e. from the identity isometry.
pub fn projective_closure_error(a: &Plane, b: &Plane, k: u32) -> f64 {
    let p = power(&(a.mv() * b.mv()), k);
    let one = Multivector::scalar(a.mv().algebra(), 1.0);
    (&p - &one).max_abs().min((&p + &one).max_abs())
}

fn power(m: &Multivector, k: u32) -> Multivector {
    let mut acc = Multivector::scalar(m.algebra(), 1.0);
    for _ in 0..k {
        acc = &acc * m;
    }
    acc
}

/// All distinct products of the two mirrors, up to sign, starting from the
/// identity. Fails if more than `max_elements` appear.
pub fn kaleidoscope_versors(a: &Plane, b: &Plane, max_elements: usize) -> Result<Vec<Multivector>> {
    a.require_normalized("kaleidoscope_versors")?;
    b.require_normalized("kaleidoscope_versors")?;
    let mut found = vec![Multivector::scalar(a.mv().algebra(), 1.0)];
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for m in [a.mv(), b.mv()] {
                let h = m * g;
                let known = found
                    .iter()
                    .any(|f| f.approx_eq(&h, SAME_TOL) || f.approx_eq(&-&h, SAME_TOL));
                if !known {
                    if found.len() == max_elements {
                        return Err(PgaError::InvalidParameter(format!(
                            "mirror group has more than {max_elements} elements"
                        )));
                    }
                    found.push(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(found)
}

/// Images `g X reverse(g)` of `x` under every element of the mirror group.
pub fn kaleidoscope_orbit(
    a: &Plane,
    b: &Plane,
    x: &Multivector,
    max_elements: usize,
) -> Result<Vec<Multivector>> {
    let versors = kaleidoscope_versors(a, b, max_elements)?;
    versors.iter().map(|g| g.sandwich(x)).collect()
}
