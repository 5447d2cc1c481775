//! Space geometry with 3-vectors. Planes are `(a, b, c, d)` for
//! `ax + by + cz + d = 0`; lines are a point and a direction.

use nalgebra::{Matrix3, Rotation3, Unit, Vector3};

pub type V3 = Vector3<f64>;

#[derive(Debug, Clone, Copy)]
pub struct Line {
    pub point: V3,
    pub dir: V3,
}

impl Line {
    pub fn through(p: V3, q: V3) -> Self {
        Self { point: p, dir: q - p }
    }

    /// Plücker coordinates `(u, p x u)` with `|u| = 1`, as
    /// `[m1, m2, m3, u1, u2, u3]`.
    pub fn plucker_unit(&self) -> [f64; 6] {
        let u = self.dir.normalize();
        let m = self.point.cross(&u);
        [m.x, m.y, m.z, u.x, u.y, u.z]
    }

    /// Raw `(u, p x u)` without rescaling.
    pub fn plucker(&self) -> [f64; 6] {
        let m = self.point.cross(&self.dir);
        [m.x, m.y, m.z, self.dir.x, self.dir.y, self.dir.z]
    }
}

pub fn normalize_plane(a: [f64; 4]) -> [f64; 4] {
    let n = normal(a).norm();
    [a[0] / n, a[1] / n, a[2] / n, a[3] / n]
}

pub fn normal(a: [f64; 4]) -> V3 {
    V3::new(a[0], a[1], a[2])
}

/// Plane with normal `n` through `p`.
pub fn plane_from(n: V3, p: V3) -> [f64; 4] {
    [n.x, n.y, n.z, -n.dot(&p)]
}

pub fn plane_through(p: V3, q: V3, r: V3) -> [f64; 4] {
    plane_from((q - p).cross(&(r - p)), p)
}

/// Signed distance for a unit-normal plane.
pub fn signed_distance(p: V3, a: [f64; 4]) -> f64 {
    normal(a).dot(&p) + a[3]
}

pub fn foot_on_plane(p: V3, a: [f64; 4]) -> V3 {
    p - normal(a) * signed_distance(p, a)
}

pub fn mirror(p: V3, a: [f64; 4]) -> V3 {
    p - normal(a) * (2.0 * signed_distance(p, a))
}

/// Common point of three planes by LU solve.
pub fn intersect3(a: [f64; 4], b: [f64; 4], c: [f64; 4]) -> Option<V3> {
    let m = Matrix3::from_rows(&[
        normal(a).transpose(),
        normal(b).transpose(),
        normal(c).transpose(),
    ]);
    m.lu().solve(&V3::new(-a[3], -b[3], -c[3]))
}

/// Common line of two planes.
pub fn intersect2(a: [f64; 4], b: [f64; 4]) -> Option<Line> {
    let dir = normal(a).cross(&normal(b));
    if dir.norm() < 1e-14 {
        return None;
    }
    let point = intersect3(a, b, plane_from(dir, V3::zeros()))?;
    Some(Line { point, dir })
}

/// Angle between normals, in `[0, pi]`.
pub fn angle(a: [f64; 4], b: [f64; 4]) -> f64 {
    let (n, m) = (normal(a), normal(b));
    n.cross(&m).norm().atan2(n.dot(&m))
}

pub fn line_plane(l: &Line, a: [f64; 4]) -> Option<V3> {
    let den = normal(a).dot(&l.dir);
    if den.abs() < 1e-14 {
        return None;
    }
    let t = -signed_distance(l.point, a) / den;
    Some(l.point + l.dir * t)
}

pub fn foot_on_line(p: V3, l: &Line) -> V3 {
    let t = (p - l.point).dot(&l.dir) / l.dir.norm_squared();
    l.point + l.dir * t
}

pub fn point_line_distance(p: V3, l: &Line) -> f64 {
    (p - foot_on_line(p, l)).norm()
}

/// Angle between directions and the closest-approach distance, with the
/// distance signed by `-(q - p) . (u x v)`.
pub fn skew(l: &Line, m: &Line) -> (f64, f64) {
    let (u, v) = (l.dir.normalize(), m.dir.normalize());
    let c = u.cross(&v);
    let alpha = c.norm().atan2(u.dot(&v));
    let d = -(m.point - l.point).dot(&c) / c.norm();
    (alpha, d)
}

pub fn tetra_volume(a: V3, b: V3, c: V3, d: V3) -> f64 {
    (b - a).cross(&(c - a)).dot(&(d - a)).abs() / 6.0
}

/// Clockwise rotation by `angle` about the oriented line `l`.
pub fn rotate_cw(p: V3, l: &Line, angle: f64) -> V3 {
    let r = Rotation3::from_axis_angle(&Unit::new_normalize(l.dir), -angle);
    l.point + r * (p - l.point)
}
