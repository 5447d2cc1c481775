use std::f64::consts::PI;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Report, RowRunner};
use crate::error::{PgaError, Result};
use crate::kernel::Algebra;
use crate::oracle::geom2::{self as g2, V2};
use crate::oracle::max_abs_diff_up_to_sign;
use crate::pga2d::{self as p2, Line2, Pga2, Point2};

const TOL: f64 = 1e-10;
const SPAN: f64 = 5.0;

struct Gen {
    ctx: Pga2,
}

/// A line and its oracle coefficients `[a, b, c]`.
type OracleLine = (Line2, [f64; 3]);

impl Gen {
    fn v2(&self, rng: &mut ChaCha8Rng) -> V2 {
        V2::new(rng.gen_range(-SPAN..SPAN), rng.gen_range(-SPAN..SPAN))
    }

    fn point(&self, p: V2) -> Point2 {
        self.ctx.point(p.x, p.y)
    }

    /// Unit-normal line; returns the algebra element and the oracle triple.
    fn line(&self, rng: &mut ChaCha8Rng) -> Result<OracleLine> {
        let t: f64 = rng.gen_range(0.0..2.0 * PI);
        let c = rng.gen_range(-SPAN..SPAN);
        let l = [t.cos(), t.sin(), c];
        Ok((self.ctx.line(l[0], l[1], l[2])?, l))
    }

    /// Two lines at least ~3 degrees from parallel.
    fn crossing_lines(&self, rng: &mut ChaCha8Rng) -> Result<(OracleLine, OracleLine)> {
        loop {
            let a = self.line(rng)?;
            let b = self.line(rng)?;
            if g2::angle(a.1, b.1).sin() > 0.05 {
                return Ok((a, b));
            }
        }
    }

    fn unit_direction(&self, rng: &mut ChaCha8Rng) -> Result<(Point2, V2)> {
        let t: f64 = rng.gen_range(0.0..2.0 * PI);
        let v = V2::new(t.cos(), t.sin());
        Ok((self.ctx.direction(v.x, v.y)?, v))
    }
}

fn xy(p: &Point2) -> Result<V2> {
    p.xy()
        .map(|(x, y)| V2::new(x, y))
        .ok_or(PgaError::IdealArgument("expected a euclidean point"))
}

fn point_err(p: &Point2, expected: V2) -> Result<f64> {
    Ok((xy(p)? - expected).amax())
}

fn line_err(l: &Line2, expected: [f64; 3]) -> Result<f64> {
    let (a, b, c) = l.normalize()?.coords();
    Ok(max_abs_diff_up_to_sign(&[a, b, c], &g2::normalize_line(expected)))
}

/// Table rows of plane geometry against [`crate::oracle::geom2`].
pub fn run_suite_2d(alg: &Arc<Algebra>, trials: usize, seed: u64) -> Result<Report> {
    let g = Gen {
        ctx: Pga2::with_algebra(Arc::clone(alg))?,
    };
    let mut r = RowRunner::new(seed, trials);

    r.row("meet", TOL, |rng| {
        let ((a, la), (b, lb)) = g.crossing_lines(rng)?;
        let p = p2::meet(&a, &b).require("meet")?;
        point_err(&p, g2::intersect(la, lb).expect("crossing lines"))
    });
    r.row("angle_acos", TOL, |rng| {
        let ((a, la), (b, lb)) = g.crossing_lines(rng)?;
        Ok((p2::angle(&a, &b)? - g2::angle(la, lb)).abs())
    });
    r.row("angle_asin", TOL, |rng| {
        let ((a, la), (b, lb)) = g.crossing_lines(rng)?;
        let t = g2::angle(la, lb);
        Ok((p2::angle_from_meet(&a, &b)? - t.min(PI - t)).abs())
    });
    r.row("angle_cos_identity", TOL, |rng| {
        let ((a, la), (b, lb)) = g.crossing_lines(rng)?;
        Ok((p2::angle(&a, &b)?.cos() - (la[0] * lb[0] + la[1] * lb[1])).abs())
    });
    r.row("dist_parallel_lines", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let c = rng.gen_range(-SPAN..SPAN);
        let b = g.ctx.line(la[0], la[1], c)?;
        Ok((p2::dist_parallel_lines(&a, &b)? - (la[2] - c).abs()).abs())
    });
    r.row("join", TOL, |rng| {
        let (p, q) = (g.v2(rng), g.v2(rng));
        let l = p2::join(&g.point(p), &g.point(q)).require("join")?;
        line_err(&l, g2::line_through(p, q))
    });
    r.row("perp_direction", TOL, |rng| {
        let (p, q) = (g.v2(rng), g.v2(rng));
        let v = p2::perp_direction(&g.point(p), &g.point(q));
        let (x, y) = v.direction_coords();
        let e = g2::perp(q - p);
        Ok(max_abs_diff_up_to_sign(&[x, y], &[e.x, e.y]) + v.weight().abs())
    });
    r.row("dist_point_point", TOL, |rng| {
        let (p, q) = (g.v2(rng), g.v2(rng));
        Ok((p2::dist_point_point(&g.point(p), &g.point(q))? - (q - p).norm()).abs())
    });
    r.row("dist_point_point_ideal", TOL, |rng| {
        let (p, q) = (g.v2(rng), g.v2(rng));
        Ok((p2::dist_point_point_ideal(&g.point(p), &g.point(q))? - (q - p).norm()).abs())
    });
    r.row("dist_point_line", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let p = g.v2(rng);
        Ok((p2::dist_point_line(&g.point(p), &a)? - g2::signed_distance(p, la)).abs())
    });
    r.row("angle_ideal_point_line", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let (v, vv) = g.unit_direction(rng)?;
        let expected = g2::normal(la).dot(&vv).abs().min(1.0).asin();
        Ok((p2::angle_ideal_point_line(&a, &v)? - expected).abs())
    });
    r.row("perp_through", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let p = g.v2(rng);
        let l = p2::perp_through(&g.point(p), &a)?.normalize()?;
        let (x, y, z) = l.coords();
        let on = (x * p.x + y * p.y + z).abs();
        let orth = (x * la[0] + y * la[1]).abs();
        Ok(on.max(orth))
    });
    r.row("nearest_point", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let p = g.v2(rng);
        point_err(&p2::nearest_point(&g.point(p), &a)?, g2::foot(p, la))
    });
    r.row("parallel_through", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let p = g.v2(rng);
        let l = p2::parallel_through(&g.point(p), &a)?;
        line_err(&l, [la[0], la[1], -(la[0] * p.x + la[1] * p.y)])
    });
    r.row("triangle_area", TOL, |rng| {
        let (a, b, c) = (g.v2(rng), g.v2(rng), g.v2(rng));
        let area = p2::triangle_area(&g.point(a), &g.point(b), &g.point(c))?;
        Ok((area - g2::triangle_area(a, b, c)).abs())
    });
    r.row("reflect_point", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let p = g.v2(rng);
        point_err(&p2::reflect(&a, &g.point(p))?, g2::mirror(p, la))
    });
    r.row("reflect_line", TOL, |rng| {
        let (a, la) = g.line(rng)?;
        let (p, q) = (g.v2(rng), g.v2(rng));
        let l = p2::join(&g.point(p), &g.point(q)).require("join")?;
        let img = p2::reflect(&a, &l)?;
        line_err(&img, g2::line_through(g2::mirror(p, la), g2::mirror(q, la)))
    });
    r.row("rotation", TOL, |rng| {
        let (c, p) = (g.v2(rng), g.v2(rng));
        let alpha = rng.gen_range(-PI..PI);
        let m = p2::rotor(&g.point(c), alpha)?;
        point_err(&m.apply(&g.point(p)), g2::rotate_cw(p, c, alpha))
    });
    r.row("translation", TOL, |rng| {
        let (v, vv) = g.unit_direction(rng)?;
        let d = rng.gen_range(-SPAN..SPAN);
        let p = g.v2(rng);
        let m = p2::translator(&v, d)?;
        point_err(&m.apply(&g.point(p)), p + g2::perp(vv) * d)
    });

    Ok(r.finish("2d", alg.label()))
}
