use std::f64::consts::PI;

use proptest::prelude::*;

use pga::pga2d::{self as p2, Element2, Line2, Motor2, Point2};

const TOL: f64 = 1e-12;

fn coord() -> impl Strategy<Value = f64> {
    -5.0..5.0f64
}

fn point() -> impl Strategy<Value = Point2> {
    (coord(), coord()).prop_map(|(x, y)| p2::point(x, y))
}

fn line() -> impl Strategy<Value = Line2> {
    (0.0..2.0 * PI, coord()).prop_map(|(t, c)| p2::line(t.cos(), t.sin(), c).unwrap())
}

fn motor() -> impl Strategy<Value = Motor2> {
    (point(), -PI..PI, 0.0..2.0 * PI, coord()).prop_map(|(c, a, t, d)| {
        let r = p2::rotor(&c, a).unwrap();
        let tr = p2::translator(&p2::direction(t.cos(), t.sin()).unwrap(), d).unwrap();
        tr.compose(&r)
    })
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #[test]
    fn meet_weight_is_sine_or_separation(a in line(), b in line(), c in coord()) {
        let w = (a.mv() * b.mv()).grade_part(2).unwrap();
        let ang = p2::angle(&a, &b).unwrap();
        prop_assert!(close(w.norm(), ang.sin().abs(), TOL));

        let (x, y, c0) = a.coords();
        let par = p2::line(x, y, c).unwrap();
        let w = (a.mv() * par.mv()).grade_part(2).unwrap();
        prop_assert!(close(w.ideal_norm(), (c0 - c).abs(), TOL));
    }

    #[test]
    fn point_pair_product(p in point(), q in point()) {
        let pq = p.mv() * q.mv();
        prop_assert!(close(pq.scalar_part(), -1.0, TOL));
        let d = p2::dist_point_point(&p, &q).unwrap();
        prop_assert!(close(pq.grade_part(2).unwrap().ideal_norm(), d, TOL));
    }

    #[test]
    fn point_line_product(p in point(), a in line()) {
        let ap = a.mv() * p.mv();
        let perp = ap.grade_part(1).unwrap();
        // incident with P and orthogonal to a
        prop_assert!((&perp ^ p.mv()).max_abs() < 1e-11);
        prop_assert!((&perp | a.mv()).scalar_part().abs() < 1e-11);
        let d = p2::dist_point_line(&p, &a).unwrap();
        prop_assert!(close(ap.pseudoscalar_part(), d, TOL));
    }

    #[test]
    fn projection_decompositions(m in line(), n in line(), p in point()) {
        let (m, n, p) = (m.mv(), n.mv(), p.mv());
        let recon = &(&(m | n) * n) + &(&(m ^ n) * n);
        prop_assert!(recon.max_diff(m) < 1e-11);
        let recon = -(&(&(m | p) * p) + &(&(m ^ p) * p));
        prop_assert!(recon.max_diff(m) < 1e-11);
    }

    #[test]
    fn motors_are_isometries(m in motor(), p in point(), q in point(), a in line(), b in line()) {
        let (p2_, q2, a2, b2) = (m.apply(&p), m.apply(&q), m.apply(&a), m.apply(&b));
        let tol = 1e-11;
        prop_assert!(close(p2::dist_point_point(&p2_, &q2).unwrap(), p2::dist_point_point(&p, &q).unwrap(), tol));
        prop_assert!(close(p2::dist_point_line(&p2_, &a2).unwrap(), p2::dist_point_line(&p, &a).unwrap(), tol));
        prop_assert!(close(p2::angle(&a2, &b2).unwrap(), p2::angle(&a, &b).unwrap(), 1e-7));
    }

    #[test]
    fn two_reflections_compose_to_motor(a in line(), b in line(), p in point(), l in line()) {
        let m = Motor2::from_lines(&a, &b);
        let via = p2::reflect(&a, &p2::reflect(&b, &p).unwrap()).unwrap();
        prop_assert!(m.apply(&p).mv().max_diff(via.mv()) < 1e-10);
        let via = p2::reflect(&a, &p2::reflect(&b, &l).unwrap()).unwrap();
        prop_assert!(m.apply(&l).mv().max_diff(via.mv()) < 1e-10);
    }

    #[test]
    fn two_reflection_turn_is_twice_the_angle(a in line(), b in line()) {
        prop_assume!(p2::angle_from_meet(&a, &b).unwrap() > 0.05);
        let center = p2::meet(&a, &b).proper().unwrap().normalize().unwrap();
        let probe = {
            let (x, y) = center.xy().unwrap();
            p2::point(x + 1.0, y)
        };
        let img = Motor2::from_lines(&a, &b).apply(&probe).normalize().unwrap();
        let turned = p2::dist_point_point(&probe, &img).unwrap();
        let ang = p2::angle(&a, &b).unwrap();
        prop_assert!(close(turned, 2.0 * (ang).sin().abs(), 1e-10));
    }
}

#[test]
fn normalized_elements_square_to_unit() {
    let l = p2::line(3.0, 4.0, 1.0).unwrap().normalize().unwrap();
    assert!(((l.mv() * l.mv()).scalar_part() - 1.0).abs() < TOL);
    let p = p2::point(2.0, -1.0);
    assert_eq!((p.mv() * p.mv()).scalar_part(), -1.0);
    let v = p2::direction(1.0, 2.0).unwrap();
    assert_eq!((v.mv() * v.mv()).scalar_part(), 0.0);
    let wrapped = Point2::from_mv(p.mv().clone()).unwrap();
    assert_eq!(wrapped, p);
}
