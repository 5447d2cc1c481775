//! Incidence, distance and projection constructions in space.

use super::{Line3, Plane, Point3, E0123, NORMALIZED_TOL};
use crate::construction::Construction;
use crate::error::{PgaError, Result};
use crate::kernel::{Multivector, TOL};

fn dependent_scale(a: &Multivector, b: &Multivector) -> f64 {
    TOL * a.max_abs().max(1e-300) * b.max_abs().max(1e-300)
}

/// Common line `a ^ b` of two planes.
pub fn line_meet(a: &Plane, b: &Plane) -> Construction<Line3> {
    let l = &a.0 ^ &b.0;
    Construction::from_product(l, dependent_scale(&a.0, &b.0), Line3)
}

/// Joining line `P v Q`; for normalized points its norm is their distance.
pub fn line_through(p: &Point3, q: &Point3) -> Construction<Line3> {
    let l = &p.0 & &q.0;
    Construction::from_product(l, dependent_scale(&p.0, &q.0), Line3)
}

/// Common point `a ^ b ^ c` of three planes.
pub fn meet3(a: &Plane, b: &Plane, c: &Plane) -> Construction<Point3> {
    let p = &(&a.0 ^ &b.0) ^ &c.0;
    let tol = dependent_scale(&a.0, &b.0) * c.0.max_abs().max(1e-300);
    Construction::from_product(p, tol, Point3)
}

/// Plane `P v Q v R` through three points.
pub fn join3(p: &Point3, q: &Point3, r: &Point3) -> Construction<Plane> {
    let a = &(&p.0 & &q.0) & &r.0;
    let tol = dependent_scale(&p.0, &q.0) * r.0.max_abs().max(1e-300);
    Construction::from_product(a, tol, Plane)
}

/// `acos(a . b)` for normalized euclidean planes, in `[0, pi]`.
pub fn angle_planes(a: &Plane, b: &Plane) -> Result<f64> {
    a.require_normalized("angle_planes")?;
    b.require_normalized("angle_planes")?;
    Ok((&a.0 | &b.0).scalar_part().clamp(-1.0, 1.0).acos())
}

/// `asin(||a ^ b||)`: the acute angle between two planes.
pub fn angle_planes_from_meet(a: &Plane, b: &Plane) -> Result<f64> {
    a.require_normalized("angle_planes_from_meet")?;
    b.require_normalized("angle_planes_from_meet")?;
    Ok((&a.0 ^ &b.0).norm().clamp(0.0, 1.0).asin())
}

/// Separation `||a ^ b||_inf` of two parallel normalized planes.
pub fn dist_parallel_planes(a: &Plane, b: &Plane) -> Result<f64> {
    a.require_normalized("dist_parallel_planes")?;
    b.require_normalized("dist_parallel_planes")?;
    let l = &a.0 ^ &b.0;
    if l.euclidean_weight() > NORMALIZED_TOL {
        return Err(PgaError::NotParallel("dist_parallel_planes"));
    }
    Ok(l.ideal_norm())
}

/// Oriented distance: the pseudoscalar weight of `a ^ P`, which is
/// `ax + by + cz + d` for a normalized plane and weight-1 point.
pub fn dist_point_plane(p: &Point3, a: &Plane) -> Result<f64> {
    p.require_normalized("dist_point_plane")?;
    a.require_normalized("dist_point_plane")?;
    Ok((&a.0 ^ &p.0).get(E0123))
}

/// `asin(||a ^ V||_inf)`: angle between a plane and a unit direction.
pub fn angle_ideal_point_plane(a: &Plane, v: &Point3) -> Result<f64> {
    a.require_normalized("angle_ideal_point_plane")?;
    v.require_ideal_unit("angle_ideal_point_plane")?;
    Ok((&a.0 ^ &v.0).max_abs().clamp(0.0, 1.0).asin())
}

/// `||P v Q||`, the distance between normalized points.
pub fn dist_point_point(p: &Point3, q: &Point3) -> Result<f64> {
    p.require_normalized("dist_point_point")?;
    q.require_normalized("dist_point_point")?;
    Ok((&p.0 & &q.0).norm())
}

/// `||P x Q||_inf`, the second route to the point distance.
pub fn dist_point_point_ideal(p: &Point3, q: &Point3) -> Result<f64> {
    p.require_normalized("dist_point_point_ideal")?;
    q.require_normalized("dist_point_point_ideal")?;
    Ok(perp_direction_join(p, q).ideal_norm())
}

/// `<P Q>_2`: the ideal line orthogonal to the join of `P` and `Q`.
pub fn perp_direction_join(p: &Point3, q: &Point3) -> Line3 {
    Line3((&p.0 * &q.0).grade_part_unchecked(2))
}

/// `P . a`: the line through `P` perpendicular to `a`.
pub fn perp_line_point_plane(p: &Point3, a: &Plane) -> Result<Line3> {
    p.require_normalized("perp_line_point_plane")?;
    a.require_normalized("perp_line_point_plane")?;
    Ok(Line3((&p.0 | &a.0).grade_part_unchecked(2)))
}

/// `(P . a) a`: foot of the perpendicular from `P` onto `a`.
pub fn nearest_point_on_plane(p: &Point3, a: &Plane) -> Result<Point3> {
    let l = perp_line_point_plane(p, a)?;
    Ok(Point3((&l.0 * &a.0).grade_part_unchecked(3)))
}

/// `(P . a) P`: the plane through `P` parallel to `a`.
pub fn parallel_plane_through_point(p: &Point3, a: &Plane) -> Result<Plane> {
    let l = perp_line_point_plane(p, a)?;
    Ok(Plane((&l.0 * &p.0).grade_part_unchecked(1)))
}

/// `Omega . a`: the plane through `Omega` perpendicular to `a`.
pub fn perp_plane_line_plane(l: &Line3, a: &Plane) -> Result<Plane> {
    l.require_normalized("perp_plane_line_plane")?;
    a.require_normalized("perp_plane_line_plane")?;
    Ok(Plane((&l.0 | &a.0).grade_part_unchecked(1)))
}

/// `Omega ^ a`: where a line pierces a plane.
pub fn meet_line_plane(l: &Line3, a: &Plane) -> Construction<Point3> {
    let p = &l.0 ^ &a.0;
    Construction::from_product(p, dependent_scale(&l.0, &a.0), Point3)
}

/// `P v Omega`: the plane through a point and a line.
pub fn join_point_line(p: &Point3, l: &Line3) -> Construction<Plane> {
    let a = &p.0 & &l.0;
    Construction::from_product(a, dependent_scale(&p.0, &l.0), Plane)
}

/// `P . Omega`: the plane through `P` perpendicular to `Omega`.
pub fn perp_plane_point_line(p: &Point3, l: &Line3) -> Result<Plane> {
    p.require_normalized("perp_plane_point_line")?;
    l.require_normalized("perp_plane_point_line")?;
    Ok(Plane((&p.0 | &l.0).grade_part_unchecked(1)))
}

/// `(P . Omega) Omega`: the point on `Omega` nearest to `P`.
pub fn nearest_point_on_line(p: &Point3, l: &Line3) -> Result<Point3> {
    let a = perp_plane_point_line(p, l)?;
    Ok(Point3((&a.0 * &l.0).grade_part_unchecked(3)))
}

/// `(P . Omega) P`: the line through `P` parallel to `Omega`.
pub fn parallel_line_through_point(p: &Point3, l: &Line3) -> Result<Line3> {
    let a = perp_plane_point_line(p, l)?;
    Ok(Line3((&a.0 * &p.0).grade_part_unchecked(2)))
}

/// `((P . Omega) Omega) v P`: the line through `P` meeting `Omega` at a right
/// angle. Dependent when `P` lies on `Omega`.
pub fn perp_line_through_point(p: &Point3, l: &Line3) -> Result<Construction<Line3>> {
    let foot = nearest_point_on_line(p, l)?;
    Ok(line_through(&foot, p))
}

/// `((Pi . P) ^ Pi) v P`: the same perpendicular built from the orthogonal
/// plane through `P` and its intersection with `Pi`.
pub fn perp_line_via_plane(p: &Point3, l: &Line3) -> Result<Construction<Line3>> {
    p.require_normalized("perp_line_via_plane")?;
    l.require_normalized("perp_line_via_plane")?;
    let plane = (&l.0 | &p.0).grade_part_unchecked(1);
    let foot = &plane ^ &l.0;
    let line = &foot & &p.0;
    Ok(Construction::from_product(
        line,
        dependent_scale(&foot, &p.0),
        Line3,
    ))
}

/// `|A v B v C v D| / 6` for normalized points.
pub fn tetra_volume(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> Result<f64> {
    for p in [a, b, c, d] {
        p.require_normalized("tetra_volume")?;
    }
    let s = &(&(&a.0 & &b.0) & &c.0) & &d.0;
    Ok(s.scalar_part().abs() / 6.0)
}

/// Reflection `a X a` in a normalized euclidean plane. Odd-grade elements
/// (planes, points) come back with their weight negated.
pub fn reflect3<X: super::Element3>(a: &Plane, x: &X) -> Result<X> {
    a.require_normalized("reflect3")?;
    let r = &(&a.0 * x.mv()) * &a.0;
    Ok(X::wrap(r.grade_part_unchecked(X::GRADE)))
}
