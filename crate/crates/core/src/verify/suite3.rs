use std::f64::consts::PI;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Report, RowRunner};
use crate::error::{PgaError, Result};
use crate::kernel::{Algebra, Multivector};
use crate::oracle::geom3::{self as g3, Line, V3};
use crate::oracle::{dual_quaternion_product, max_abs_diff, max_abs_diff_up_to_sign};
use crate::pga3d::{self as p3, Line3, Motor3, Pga3, Plane, Point3};

const TOL: f64 = 1e-10;
const EXP_TOL: f64 = 1e-12;
const DQ_TOL: f64 = 1e-12;
const SPAN: f64 = 5.0;
const SERIES_TERMS: usize = 40;

struct Gen {
    ctx: Pga3,
}

impl Gen {
    fn v3(&self, rng: &mut ChaCha8Rng) -> V3 {
        V3::new(
            rng.gen_range(-SPAN..SPAN),
            rng.gen_range(-SPAN..SPAN),
            rng.gen_range(-SPAN..SPAN),
        )
    }

    fn unit(&self, rng: &mut ChaCha8Rng) -> V3 {
        loop {
            let v = V3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let n = v.norm();
            if (0.1..=1.0).contains(&n) {
                return v / n;
            }
        }
    }

    fn point(&self, p: V3) -> Point3 {
        self.ctx.point(p.x, p.y, p.z)
    }

    fn direction(&self, v: V3) -> Result<Point3> {
        self.ctx.direction(v.x, v.y, v.z)
    }

    /// Unit-normal plane with its oracle quadruple.
    fn plane(&self, rng: &mut ChaCha8Rng) -> Result<(Plane, [f64; 4])> {
        let n = self.unit(rng);
        let d = rng.gen_range(-SPAN..SPAN);
        let a = [n.x, n.y, n.z, d];
        Ok((self.ctx.plane(a[0], a[1], a[2], a[3])?, a))
    }

    /// Normalized line through two points, with its oracle line.
    fn line(&self, rng: &mut ChaCha8Rng) -> Result<(Line3, Line)> {
        loop {
            let (p, q) = (self.v3(rng), self.v3(rng));
            if (q - p).norm() < 0.5 {
                continue;
            }
            let l = p3::line_through(&self.point(p), &self.point(q)).require("line_through")?;
            return Ok((l.normalize()?, Line::through(p, q)));
        }
    }

    fn bivector(&self, rng: &mut ChaCha8Rng, scale: f64) -> Multivector {
        let c: [f64; 6] = std::array::from_fn(|_| rng.gen_range(-scale..scale));
        crate::pga3d::bivector_from_coords(self.ctx.algebra(), &c)
    }

    /// A random motor as the exponential of a random bivector.
    fn motor(&self, rng: &mut ChaCha8Rng) -> Result<Motor3> {
        let b = self.bivector(rng, 2.0);
        let m = p3::exp_bivector(&b)?;
        Ok(Motor3::from_coords(self.ctx.algebra(), &m.coords()))
    }
}

fn xyz(p: &Point3) -> Result<V3> {
    p.xyz()
        .map(V3::from)
        .ok_or(PgaError::IdealArgument("expected a euclidean point"))
}

fn point_err(p: &Point3, expected: V3) -> Result<f64> {
    Ok((xyz(p)? - expected).amax())
}

fn plane_err(a: &Plane, expected: [f64; 4]) -> Result<f64> {
    let (x, y, z, w) = a.normalize()?.coords();
    Ok(max_abs_diff_up_to_sign(&[x, y, z, w], &g3::normalize_plane(expected)))
}

fn line_err(l: &Line3, expected: &Line) -> Result<f64> {
    Ok(max_abs_diff_up_to_sign(&l.normalize()?.coords(), &expected.plucker_unit()))
}

/// Table rows of space geometry, motors and line products against
/// [`crate::oracle::geom3`].
pub fn run_suite_3d(alg: &Arc<Algebra>, trials: usize, seed: u64) -> Result<Report> {
    let g = Gen {
        ctx: Pga3::with_algebra(Arc::clone(alg))?,
    };
    let mut r = RowRunner::new(seed, trials);

    r.row("line_meet", TOL, |rng| {
        let ((a, _), (b, _), expected) = loop {
            let (a, b) = (g.plane(rng)?, g.plane(rng)?);
            if let Some(l) = g3::intersect2(a.1, b.1).filter(|l| l.dir.norm() > 0.05) {
                break (a, b, l);
            }
        };
        line_err(&p3::line_meet(&a, &b).require("line_meet")?, &expected)
    });
    r.row("meet3", TOL, |rng| {
        let ((a, la), (b, lb), (c, lc)) = loop {
            let (a, b, c) = (g.plane(rng)?, g.plane(rng)?, g.plane(rng)?);
            let vol = g3::normal(a.1).cross(&g3::normal(b.1)).dot(&g3::normal(c.1));
            if vol.abs() > 0.05 {
                break (a, b, c);
            }
        };
        let expected = g3::intersect3(la, lb, lc).expect("independent planes");
        point_err(&p3::meet3(&a, &b, &c).require("meet3")?, expected)
    });
    r.row("join3", TOL, |rng| {
        let (p, q, s) = (g.v3(rng), g.v3(rng), g.v3(rng));
        let a = p3::join3(&g.point(p), &g.point(q), &g.point(s)).require("join3")?;
        plane_err(&a, g3::plane_through(p, q, s))
    });
    r.row("line_through", TOL, |rng| {
        let (p, q) = (g.v3(rng), g.v3(rng));
        let l = p3::line_through(&g.point(p), &g.point(q)).require("line_through")?;
        line_err(&l, &Line::through(p, q))
    });
    r.row("angle_planes", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let (b, lb) = g.plane(rng)?;
        Ok((p3::angle_planes(&a, &b)? - g3::angle(la, lb)).abs())
    });
    r.row("angle_planes_from_meet", TOL, |rng| {
        // asin is ill-conditioned near a right angle
        let ((a, _), (b, _), t) = loop {
            let (a, b) = (g.plane(rng)?, g.plane(rng)?);
            let t = g3::angle(a.1, b.1);
            if t.sin() < 0.99 {
                break (a, b, t);
            }
        };
        Ok((p3::angle_planes_from_meet(&a, &b)? - t.min(PI - t)).abs())
    });
    r.row("dist_parallel_planes", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let d = rng.gen_range(-SPAN..SPAN);
        let b = g.ctx.plane(la[0], la[1], la[2], d)?;
        Ok((p3::dist_parallel_planes(&a, &b)? - (la[3] - d).abs()).abs())
    });
    r.row("dist_point_plane", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let p = g.v3(rng);
        Ok((p3::dist_point_plane(&g.point(p), &a)? - g3::signed_distance(p, la)).abs())
    });
    r.row("angle_ideal_point_plane", TOL, |rng| {
        let (a, v, s) = loop {
            let (a, la) = g.plane(rng)?;
            let v = g.unit(rng);
            let s = g3::normal(la).dot(&v).abs();
            if s < 0.99 {
                break (a, v, s);
            }
        };
        Ok((p3::angle_ideal_point_plane(&a, &g.direction(v)?)? - s.asin()).abs())
    });
    r.row("dist_point_point", TOL, |rng| {
        let (p, q) = (g.v3(rng), g.v3(rng));
        Ok((p3::dist_point_point(&g.point(p), &g.point(q))? - (q - p).norm()).abs())
    });
    r.row("dist_point_point_ideal", TOL, |rng| {
        let (p, q) = (g.v3(rng), g.v3(rng));
        Ok((p3::dist_point_point_ideal(&g.point(p), &g.point(q))? - (q - p).norm()).abs())
    });
    r.row("perp_direction_join", TOL, |rng| {
        let (p, q) = (g.v3(rng), g.v3(rng));
        let (dir, moment) = p3::perp_direction_join(&g.point(p), &g.point(q)).plucker();
        let d = q - p;
        let euclid = dir.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        Ok(max_abs_diff_up_to_sign(&moment, &[d.x, d.y, d.z]).max(euclid))
    });
    r.row("perp_line_point_plane", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let p = g.v3(rng);
        let l = p3::perp_line_point_plane(&g.point(p), &a)?;
        line_err(&l, &Line { point: p, dir: g3::normal(la) })
    });
    r.row("nearest_point_on_plane", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let p = g.v3(rng);
        point_err(&p3::nearest_point_on_plane(&g.point(p), &a)?, g3::foot_on_plane(p, la))
    });
    r.row("parallel_plane_through_point", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let p = g.v3(rng);
        let b = p3::parallel_plane_through_point(&g.point(p), &a)?;
        plane_err(&b, g3::plane_from(g3::normal(la), p))
    });
    r.row("perp_plane_line_plane", TOL, |rng| {
        let ((l, ll), (a, la)) = loop {
            let (l, a) = (g.line(rng)?, g.plane(rng)?);
            if l.1.dir.normalize().cross(&g3::normal(a.1)).norm() > 0.05 {
                break (l, a);
            }
        };
        let (x, y, z, w) = p3::perp_plane_line_plane(&l, &a)?.normalize()?.coords();
        let b = [x, y, z, w];
        let on_line = g3::signed_distance(ll.point, b)
            .abs()
            .max(g3::signed_distance(ll.point + ll.dir, b).abs());
        Ok(on_line.max(g3::normal(b).dot(&g3::normal(la)).abs()))
    });
    r.row("meet_line_plane", TOL, |rng| {
        let ((l, ll), (a, la)) = loop {
            let (l, a) = (g.line(rng)?, g.plane(rng)?);
            if l.1.dir.normalize().dot(&g3::normal(a.1)).abs() > 0.05 {
                break (l, a);
            }
        };
        let expected = g3::line_plane(&ll, la).expect("crossing");
        point_err(&p3::meet_line_plane(&l, &a).require("meet_line_plane")?, expected)
    });
    r.row("join_point_line", TOL, |rng| {
        let ((l, ll), p) = loop {
            let (l, p) = (g.line(rng)?, g.v3(rng));
            if g3::point_line_distance(p, &l.1) > 0.05 {
                break (l, p);
            }
        };
        let a = p3::join_point_line(&g.point(p), &l).require("join_point_line")?;
        plane_err(&a, g3::plane_through(p, ll.point, ll.point + ll.dir))
    });
    r.row("perp_plane_point_line", TOL, |rng| {
        let (l, ll) = g.line(rng)?;
        let p = g.v3(rng);
        plane_err(&p3::perp_plane_point_line(&g.point(p), &l)?, g3::plane_from(ll.dir, p))
    });
    r.row("nearest_point_on_line", TOL, |rng| {
        let (l, ll) = g.line(rng)?;
        let p = g.v3(rng);
        point_err(&p3::nearest_point_on_line(&g.point(p), &l)?, g3::foot_on_line(p, &ll))
    });
    r.row("parallel_line_through_point", TOL, |rng| {
        let (l, ll) = g.line(rng)?;
        let p = g.v3(rng);
        let m = p3::parallel_line_through_point(&g.point(p), &l)?;
        line_err(&m, &Line { point: p, dir: ll.dir })
    });
    r.row("perp_line_through_point", TOL, |rng| {
        let (l, ll) = g.line(rng)?;
        let p = g.v3(rng);
        let m = p3::perp_line_through_point(&g.point(p), &l)?.require("perp_line_through_point")?;
        line_err(&m, &Line::through(g3::foot_on_line(p, &ll), p))
    });
    r.row("composite_construction", TOL, |rng| {
        let (l, ll) = g.line(rng)?;
        let p = g.v3(rng);
        let m = p3::perp_line_via_plane(&g.point(p), &l)?.require("perp_line_via_plane")?;
        line_err(&m, &Line::through(g3::foot_on_line(p, &ll), p))
    });
    r.row("tetra_volume", TOL, |rng| {
        let v: [V3; 4] = std::array::from_fn(|_| g.v3(rng));
        let pts: Vec<Point3> = v.iter().map(|p| g.point(*p)).collect();
        let vol = p3::tetra_volume(&pts[0], &pts[1], &pts[2], &pts[3])?;
        Ok((vol - g3::tetra_volume(v[0], v[1], v[2], v[3])).abs())
    });
    r.row("reflect_point", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let p = g.v3(rng);
        point_err(&p3::reflect3(&a, &g.point(p))?, g3::mirror(p, la))
    });
    r.row("reflect_line", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let (l, ll) = g.line(rng)?;
        let img = p3::reflect3(&a, &l)?;
        let expected = Line::through(g3::mirror(ll.point, la), g3::mirror(ll.point + ll.dir, la));
        line_err(&img, &expected)
    });
    r.row("reflect_plane", TOL, |rng| {
        let (a, la) = g.plane(rng)?;
        let (b, lb) = g.plane(rng)?;
        let img = p3::reflect3(&a, &b)?;
        let expected = g3::plane_from(
            g3::mirror(g3::normal(lb), [la[0], la[1], la[2], 0.0]),
            g3::mirror(g3::foot_on_plane(V3::zeros(), lb), la),
        );
        plane_err(&img, expected)
    });
    r.row("rotation", TOL, |rng| {
        let (axis, la) = g.line(rng)?;
        let p = g.v3(rng);
        let angle = rng.gen_range(-PI..PI);
        let m = p3::rotor(&axis, angle)?;
        point_err(&m.apply(&g.point(p)), g3::rotate_cw(p, &la, angle))
    });
    r.row("translation", TOL, |rng| {
        let v = g.unit(rng);
        let d = rng.gen_range(-SPAN..SPAN);
        let p = g.v3(rng);
        let m = p3::translator(&g.direction(v)?, d)?;
        point_err(&m.apply(&g.point(p)), p + v * d)
    });
    r.row("translation_ideal_point", TOL, |rng| {
        let v = g.v3(rng) * 0.5;
        let p = g.v3(rng);
        let m = p3::translator_from_ideal_point(&g.direction(v)?)?;
        point_err(&m.apply(&g.point(p)), p + v * 2.0)
    });
    r.row("screw", TOL, |rng| {
        let (axis, la) = g.line(rng)?;
        let p = g.v3(rng);
        let angle = rng.gen_range(-PI..PI);
        let pitch = rng.gen_range(-2.0..2.0);
        let m = p3::motor_from_screw(&axis, angle, pitch)?;
        let expected = g3::rotate_cw(p, &la, angle) + la.dir.normalize() * (pitch * angle);
        point_err(&m.apply(&g.point(p)), expected)
    });
    r.row("skew_line_product", TOL, |rng| {
        let ((a, _), (b, _), (alpha, d)) = loop {
            let (a, b) = (g.line(rng)?, g.line(rng)?);
            let sd = g3::skew(&a.1, &b.1);
            if sd.0.sin() > 0.05 {
                break (a, b, sd);
            }
        };
        let lp = p3::product_of_lines(&a, &b)?;
        let quad = lp.product.pseudoscalar_part() - d * alpha.sin();
        Ok((lp.alpha - alpha)
            .abs()
            .max((lp.distance - d).abs())
            .max(quad.abs()))
    });
    r.row("exp_vs_series", EXP_TOL, |rng| {
        let b = g.bivector(rng, 1.0);
        let closed = p3::exp_bivector(&b)?;
        Ok(closed.mv().max_diff(&b.exp_series(SERIES_TERMS)?))
    });
    r.row("log_exp_roundtrip", TOL, |rng| {
        // keep the half-angle below the branch cut
        let b = loop {
            let b = g.bivector(rng, 1.5);
            if b.euclidean_weight() < 3.0 {
                break b;
            }
        };
        let m = p3::exp_bivector(&b)?;
        Ok(p3::log_motor(&m)?.max_diff(&b))
    });
    r.row("dual_quaternion_homomorphism", DQ_TOL, |rng| {
        let (m1, m2) = (g.motor(rng)?, g.motor(rng)?);
        let q = |m: &Motor3| {
            let d = p3::to_dual_quaternion(m);
            let mut out = [0.0; 8];
            out[..4].copy_from_slice(&d.real);
            out[4..].copy_from_slice(&d.dual);
            out
        };
        let lhs = q(&m1.compose(&m2));
        let rhs = dual_quaternion_product(&q(&m1), &q(&m2));
        Ok(max_abs_diff(&lhs, &rhs))
    });

    Ok(r.finish("3d", alg.label()))
}
