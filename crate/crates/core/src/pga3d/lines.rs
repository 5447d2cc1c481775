//! Simplicity test and the geometric product of two lines.

use super::{euclidean_bivector_part, split_bivector, Line3, E0123};
use crate::error::{PgaError, Result};
use crate::kernel::Multivector;

/// Relative tolerance of the simplicity test `B ^ B = 0`.
pub const SIMPLE_TOL: f64 = 1e-10;

/// Whether a bivector is a single line, `B ^ B = 0`, relative to `|B|^2`.
#[allow(clippy::eq_op)]
pub fn is_simple(b: &Multivector) -> bool {
    let scale = b.max_abs();
    if scale == 0.0 {
        return true;
    }
    let b2 = b.grade_part_unchecked(2);
    (&b2 ^ &b2).max_abs() <= SIMPLE_TOL * scale * scale
}

/// Invariants read off `Omega Sigma` for two normalized euclidean lines.
///
/// `cos(alpha) = -<Omega Sigma>_0`, `sin(alpha) = |euclidean part of
/// <Omega Sigma>_2|`, and `d` is signed so that `<Omega Sigma>_4 = d sin(alpha)`.
/// For parallel lines `alpha` is `0` or `pi` and `d` is their separation.
#[derive(Debug, Clone, PartialEq)]
pub struct LinePairProduct {
    pub alpha: f64,
    pub distance: f64,
    pub product: Multivector,
}

fn require_line(l: &Line3, what: &'static str) -> Result<()> {
    l.require_normalized(what)?;
    if !is_simple(l.mv()) {
        return Err(PgaError::NotSimple(what));
    }
    Ok(())
}

/// Angle and signed distance between two normalized lines.
pub fn product_of_lines(a: &Line3, b: &Line3) -> Result<LinePairProduct> {
    require_line(a, "product_of_lines")?;
    require_line(b, "product_of_lines")?;
    let product = a.mv() * b.mv();
    let g2 = product.grade_part_unchecked(2);
    let sin_a = euclidean_bivector_part(&g2).euclidean_weight();
    let cos_a = -product.scalar_part();
    let alpha = sin_a.atan2(cos_a);
    let ideal = g2.ideal_norm();
    let parallel = sin_a <= super::NORMALIZED_TOL;
    if parallel && ideal <= super::NORMALIZED_TOL {
        return Err(PgaError::DependentArguments("product_of_lines"));
    }
    let distance = if parallel {
        ideal / cos_a.abs()
    } else {
        product.get(E0123) / sin_a
    };
    Ok(LinePairProduct {
        alpha,
        distance,
        product,
    })
}

/// The normalized common perpendicular of two non-parallel lines: the axis
/// of `<Omega Sigma>_2`.
pub fn common_normal(a: &Line3, b: &Line3) -> Result<Line3> {
    let p = product_of_lines(a, b)?;
    let g2 = p.product.grade_part_unchecked(2);
    if euclidean_bivector_part(&g2).euclidean_weight() <= super::NORMALIZED_TOL {
        return Err(PgaError::DegeneratePencil);
    }
    Ok(split_bivector(&g2)?.axis)
}
