//! Plane geometry with 2-vectors. Lines are `(a, b, c)` for `ax + by + c = 0`.

use nalgebra::{Rotation2, Vector2};

pub type V2 = Vector2<f64>;

/// `(a, b, c)` scaled so that `a^2 + b^2 = 1`.
pub fn normalize_line(l: [f64; 3]) -> [f64; 3] {
    let n = l[0].hypot(l[1]);
    [l[0] / n, l[1] / n, l[2] / n]
}

pub fn normal(l: [f64; 3]) -> V2 {
    V2::new(l[0], l[1])
}

/// Intersection by Cramer's rule.
pub fn intersect(l: [f64; 3], m: [f64; 3]) -> Option<V2> {
    let det = l[0] * m[1] - l[1] * m[0];
    if det.abs() < 1e-14 {
        return None;
    }
    Some(V2::new(
        (l[1] * m[2] - l[2] * m[1]) / det,
        (l[2] * m[0] - l[0] * m[2]) / det,
    ))
}

/// Unit-normal line through two points.
pub fn line_through(p: V2, q: V2) -> [f64; 3] {
    let d = q - p;
    let n = V2::new(-d.y, d.x).normalize();
    [n.x, n.y, -n.dot(&p)]
}

/// Angle between the normals, in `[0, pi]`.
pub fn angle(l: [f64; 3], m: [f64; 3]) -> f64 {
    let (a, b) = (normal(l), normal(m));
    (a.x * b.y - a.y * b.x).abs().atan2(a.dot(&b))
}

/// Signed distance for a unit-normal line.
pub fn signed_distance(p: V2, l: [f64; 3]) -> f64 {
    normal(l).dot(&p) + l[2]
}

pub fn foot(p: V2, l: [f64; 3]) -> V2 {
    p - normal(l) * signed_distance(p, l)
}

pub fn mirror(p: V2, l: [f64; 3]) -> V2 {
    p - normal(l) * (2.0 * signed_distance(p, l))
}

/// Clockwise rotation by `angle` about `center`.
pub fn rotate_cw(p: V2, center: V2, angle: f64) -> V2 {
    center + Rotation2::new(-angle) * (p - center)
}

pub fn triangle_area(a: V2, b: V2, c: V2) -> f64 {
    let (u, v) = (b - a, c - a);
    0.5 * (u.x * v.y - u.y * v.x).abs()
}

/// Counterclockwise perpendicular.
pub fn perp(v: V2) -> V2 {
    V2::new(-v.y, v.x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let x_axis = [0.0, 1.0, 0.0];
        let y_axis = [1.0, 0.0, 0.0];
        assert_eq!(intersect(x_axis, y_axis), Some(V2::new(0.0, 0.0)));
        assert!(intersect(x_axis, [0.0, 1.0, 3.0]).is_none());
        let l = line_through(V2::new(0.0, 1.0), V2::new(1.0, 1.0));
        assert!((signed_distance(V2::new(5.0, 4.0), l).abs() - 3.0).abs() < 1e-15);
        let r = rotate_cw(V2::new(1.0, 0.0), V2::zeros(), std::f64::consts::FRAC_PI_2);
        assert!((r - V2::new(0.0, -1.0)).norm() < 1e-15);
    }
}
