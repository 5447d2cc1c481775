//! The euclidean plane, Cl*(2,0,1).
//!
//! Embedding conventions (shared with [`crate::oracle`]):
//!
//! * line `ax + by + c = 0` is `c e0 + a e1 + b e2`;
//! * point `(x, y)` is `E0 + x E1 + y E2` with `E0 = e12`, `E1 = e20 = -e02`,
//!   `E2 = e01`; a direction has no `E0` part.
//!
//! With these, `line ^ point = (ax + by + c) I` and a weight-1 point squares
//! to `-1`. Rotors `e^{(alpha/2) P}` applied as `R X reverse(R)` turn by
//! `alpha` clockwise about `P`.

use std::sync::Arc;

use crate::construction::Construction;
use crate::error::{PgaError, Result};
use crate::kernel::{pga2, Algebra, AlgebraDescriptor, Blade, Multivector, TOL};

/// Tolerance on `X^2 = +-1` for arguments that must be normalized.
pub const NORMALIZED_TOL: f64 = 1e-9;

const E0: Blade = Blade(0b001);
const E1: Blade = Blade(0b010);
const E2: Blade = Blade(0b100);
const E01: Blade = Blade(0b011);
const E02: Blade = Blade(0b101);
const E12: Blade = Blade(0b110);
const E012: Blade = Blade(0b111);

/// Constructor context bound to one Cl*(2,0,1) instance.
#[derive(Debug, Clone)]
pub struct Pga2 {
    alg: Arc<Algebra>,
}

impl Default for Pga2 {
    fn default() -> Self {
        Self { alg: pga2() }
    }
}

impl Pga2 {
    pub fn new() -> Self {
        Self::default()
    }

    /// Use a specific algebra instance, e.g. a perturbed test fixture.
    pub fn with_algebra(alg: Arc<Algebra>) -> Result<Self> {
        if alg.descriptor() != AlgebraDescriptor::euclidean_pga(2)? {
            return Err(PgaError::InvalidSignature(format!(
                "Pga2 needs Cl(2,0,1), got {}",
                alg.label()
            )));
        }
        Ok(Self { alg })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// Line `ax + by + c = 0`.
    pub fn line(&self, a: f64, b: f64, c: f64) -> Result<Line2> {
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Err(PgaError::ZeroInput("line"));
        }
        let mv = Multivector::zero(&self.alg)
            .with(E0, c)
            .with(E1, a)
            .with(E2, b);
        Ok(Line2(mv))
    }

    /// The ideal line `e0`.
    pub fn ideal_line(&self) -> Line2 {
        Line2(Multivector::blade(&self.alg, E0, 1.0))
    }

    pub fn point(&self, x: f64, y: f64) -> Point2 {
        Point2(self.homogeneous(x, y, 1.0))
    }

    /// Ideal point in direction `(x, y)`.
    pub fn direction(&self, x: f64, y: f64) -> Result<Point2> {
        if x == 0.0 && y == 0.0 {
            return Err(PgaError::ZeroInput("direction"));
        }
        Ok(Point2(self.homogeneous(x, y, 0.0)))
    }

    fn homogeneous(&self, x: f64, y: f64, w: f64) -> Multivector {
        Multivector::zero(&self.alg)
            .with(E12, w)
            .with(E02, -x)
            .with(E01, y)
    }

    pub fn pseudoscalar(&self) -> Multivector {
        Multivector::blade(&self.alg, E012, 1.0)
    }

    pub fn identity_motor(&self) -> Motor2 {
        Motor2(Multivector::scalar(&self.alg, 1.0))
    }
}

/// Grade-1 element: a line.
#[derive(Debug, Clone, PartialEq)]
pub struct Line2(Multivector);

/// Grade-2 element: a point, or a direction when ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct Point2(Multivector);

/// Even element (scalar + bivector) acting by `M X reverse(M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Motor2(Multivector);

/// Grade-typed views shared by [`reflect`] and [`Motor2::apply`].
pub trait Element2: Sized {
    const GRADE: usize;
    fn mv(&self) -> &Multivector;
    fn wrap(mv: Multivector) -> Self;

    fn from_mv(mv: Multivector) -> Result<Self> {
        check_grade2(&mv, Self::GRADE, "element")?;
        Ok(Self::wrap(mv.grade_part_unchecked(Self::GRADE)))
    }
}

impl Element2 for Line2 {
    const GRADE: usize = 1;
    fn mv(&self) -> &Multivector {
        &self.0
    }
    fn wrap(mv: Multivector) -> Self {
        Line2(mv)
    }
}

impl Element2 for Point2 {
    const GRADE: usize = 2;
    fn mv(&self) -> &Multivector {
        &self.0
    }
    fn wrap(mv: Multivector) -> Self {
        Point2(mv)
    }
}

fn check_grade2(mv: &Multivector, grade: usize, what: &'static str) -> Result<()> {
    if mv.algebra().descriptor() != (AlgebraDescriptor { p: 2, m: 0, z: 1 }) {
        return Err(PgaError::InvalidSignature(mv.algebra().label()));
    }
    let stray = mv.grades_above(TOL * mv.max_abs().max(1.0));
    if stray.iter().any(|g| *g != grade) {
        return Err(PgaError::WrongGrade {
            what,
            expected: grade,
            found: stray,
        });
    }
    Ok(())
}

/// Square of a pure-grade element as a scalar.
fn square(mv: &Multivector) -> f64 {
    (mv * mv).scalar_part()
}

impl Line2 {
    pub fn mv(&self) -> &Multivector {
        &self.0
    }

    pub fn into_mv(self) -> Multivector {
        self.0
    }

    /// Coefficients `(a, b, c)` of `ax + by + c = 0`.
    pub fn coords(&self) -> (f64, f64, f64) {
        (self.0.get(E1), self.0.get(E2), self.0.get(E0))
    }

    /// Standard norm `sqrt(a^2 + b^2)`.
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// `|c|`, meaningful for the ideal line.
    pub fn ideal_norm(&self) -> f64 {
        self.0.ideal_norm()
    }

    pub fn is_ideal(&self) -> bool {
        self.norm() <= TOL * self.0.max_abs()
    }

    pub fn normalize(&self) -> Result<Line2> {
        let n = self.norm();
        if n > TOL * self.0.max_abs() {
            return Ok(Line2(&self.0 * (1.0 / n)));
        }
        let i = self.ideal_norm();
        if i == 0.0 {
            return Err(PgaError::ZeroInput("normalize line"));
        }
        Ok(Line2(&self.0 * (1.0 / i)))
    }

    pub fn is_normalized(&self) -> bool {
        (square(&self.0) - 1.0).abs() <= NORMALIZED_TOL
    }

    fn require_normalized(&self, what: &'static str) -> Result<()> {
        if self.is_ideal() {
            return Err(PgaError::IdealArgument(what));
        }
        let sq = square(&self.0);
        if (sq - 1.0).abs() > NORMALIZED_TOL {
            return Err(PgaError::NotNormalized { what, square: sq });
        }
        Ok(())
    }
}

impl Point2 {
    pub fn mv(&self) -> &Multivector {
        &self.0
    }

    pub fn into_mv(self) -> Multivector {
        self.0
    }

    /// `E0` coefficient.
    pub fn weight(&self) -> f64 {
        self.0.get(E12)
    }

    /// Raw `(E1, E2)` coefficients.
    pub fn direction_coords(&self) -> (f64, f64) {
        (-self.0.get(E02), self.0.get(E01))
    }

    /// Cartesian coordinates of a euclidean point.
    pub fn xy(&self) -> Option<(f64, f64)> {
        let w = self.weight();
        if self.is_ideal() {
            return None;
        }
        let (x, y) = self.direction_coords();
        Some((x / w, y / w))
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// `sqrt(x^2 + y^2)` of the `(E1, E2)` part.
    pub fn ideal_norm(&self) -> f64 {
        self.0.ideal_norm()
    }

    pub fn is_ideal(&self) -> bool {
        self.weight().abs() <= TOL * self.0.max_abs()
    }

    /// Euclidean points are scaled to weight `+1`; ideal points to ideal norm 1.
    pub fn normalize(&self) -> Result<Point2> {
        if !self.is_ideal() {
            return Ok(Point2(&self.0 * (1.0 / self.weight())));
        }
        let i = self.ideal_norm();
        if i == 0.0 {
            return Err(PgaError::ZeroInput("normalize point"));
        }
        Ok(Point2(&self.0 * (1.0 / i)))
    }

    pub fn is_normalized(&self) -> bool {
        (square(&self.0) + 1.0).abs() <= NORMALIZED_TOL
    }

    fn require_normalized(&self, what: &'static str) -> Result<()> {
        if self.is_ideal() {
            return Err(PgaError::IdealArgument(what));
        }
        let sq = square(&self.0);
        if (sq + 1.0).abs() > NORMALIZED_TOL {
            return Err(PgaError::NotNormalized { what, square: sq });
        }
        Ok(())
    }

    fn require_ideal_unit(&self, what: &'static str) -> Result<()> {
        if !self.is_ideal() {
            return Err(PgaError::EuclideanArgument(what));
        }
        let n = self.ideal_norm();
        if (n - 1.0).abs() > NORMALIZED_TOL {
            return Err(PgaError::NotNormalized { what, square: n * n });
        }
        Ok(())
    }
}

fn dependent_scale(a: &Multivector, b: &Multivector) -> f64 {
    TOL * a.max_abs().max(1e-300) * b.max_abs().max(1e-300)
}

/// Intersection point `a ^ b`. For normalized lines the weight is `sin` of
/// their angle; for parallel lines the result is ideal with ideal norm equal
/// to their separation.
pub fn meet(a: &Line2, b: &Line2) -> Construction<Point2> {
    let p = &a.0 ^ &b.0;
    Construction::from_product(p, dependent_scale(&a.0, &b.0), Point2)
}

/// Joining line `P v Q`; for normalized points its norm is their distance.
pub fn join(p: &Point2, q: &Point2) -> Construction<Line2> {
    let l = &p.0 & &q.0;
    Construction::from_product(l, dependent_scale(&p.0, &q.0), Line2)
}

/// `acos(a . b)` for normalized euclidean lines, in `[0, pi]`.
pub fn angle(a: &Line2, b: &Line2) -> Result<f64> {
    a.require_normalized("angle")?;
    b.require_normalized("angle")?;
    Ok((&a.0 | &b.0).scalar_part().clamp(-1.0, 1.0).acos())
}

/// `asin(||a ^ b||)`: the acute angle between two lines, in `[0, pi/2]`.
pub fn angle_from_meet(a: &Line2, b: &Line2) -> Result<f64> {
    a.require_normalized("angle_from_meet")?;
    b.require_normalized("angle_from_meet")?;
    Ok((&a.0 ^ &b.0).norm().clamp(0.0, 1.0).asin())
}

/// `asin(||a ^ V||_inf)` for a unit ideal point `V`.
pub fn angle_ideal_point_line(a: &Line2, v: &Point2) -> Result<f64> {
    a.require_normalized("angle_ideal_point_line")?;
    v.require_ideal_unit("angle_ideal_point_line")?;
    Ok((&a.0 ^ &v.0).ideal_norm().clamp(0.0, 1.0).asin())
}

/// `P x Q = <PQ>_2`: ideal point perpendicular to the joining line, with ideal
/// norm equal to the distance for normalized points.
pub fn perp_direction(p: &Point2, q: &Point2) -> Point2 {
    Point2((&p.0 * &q.0).grade_part_unchecked(2))
}

/// `||P v Q||`.
pub fn dist_point_point(p: &Point2, q: &Point2) -> Result<f64> {
    p.require_normalized("dist_point_point")?;
    q.require_normalized("dist_point_point")?;
    Ok((&p.0 & &q.0).norm())
}

/// `||P x Q||_inf`, the second route to the point distance.
pub fn dist_point_point_ideal(p: &Point2, q: &Point2) -> Result<f64> {
    p.require_normalized("dist_point_point_ideal")?;
    q.require_normalized("dist_point_point_ideal")?;
    Ok(perp_direction(p, q).ideal_norm())
}

/// Oriented distance: the pseudoscalar weight of `a ^ P`, which is
/// `ax + by + c` for a normalized line.
pub fn dist_point_line(p: &Point2, a: &Line2) -> Result<f64> {
    p.require_normalized("dist_point_line")?;
    a.require_normalized("dist_point_line")?;
    Ok((&a.0 ^ &p.0).pseudoscalar_part())
}

/// `||a ^ b||_inf` for parallel normalized lines.
pub fn dist_parallel_lines(a: &Line2, b: &Line2) -> Result<f64> {
    a.require_normalized("dist_parallel_lines")?;
    b.require_normalized("dist_parallel_lines")?;
    let p = &a.0 ^ &b.0;
    if p.get(E12).abs() > NORMALIZED_TOL {
        return Err(PgaError::NotParallel("dist_parallel_lines"));
    }
    Ok(p.ideal_norm())
}

/// `P . a`: the line through `P` perpendicular to `a`.
pub fn perp_through(p: &Point2, a: &Line2) -> Result<Line2> {
    p.require_normalized("perp_through")?;
    a.require_normalized("perp_through")?;
    Ok(Line2((&p.0 | &a.0).grade_part_unchecked(1)))
}

/// `(P . a) a`: the point on `a` nearest to `P`.
pub fn nearest_point(p: &Point2, a: &Line2) -> Result<Point2> {
    let perp = perp_through(p, a)?;
    Ok(Point2((&perp.0 * &a.0).grade_part_unchecked(2)))
}

/// `(P . a) P`: the line through `P` parallel to `a`.
pub fn parallel_through(p: &Point2, a: &Line2) -> Result<Line2> {
    let perp = perp_through(p, a)?;
    Ok(Line2((&perp.0 * &p.0).grade_part_unchecked(1)))
}

/// `1/2 ||A v B v C||`.
pub fn triangle_area(a: &Point2, b: &Point2, c: &Point2) -> Result<f64> {
    for p in [a, b, c] {
        p.require_normalized("triangle_area")?;
    }
    let s = &(&a.0 & &b.0) & &c.0;
    Ok(0.5 * s.scalar_part().abs())
}

/// Reflection `a X a` in a normalized euclidean line. Points come back with
/// their weight negated.
pub fn reflect<X: Element2>(a: &Line2, x: &X) -> Result<X> {
    a.require_normalized("reflect")?;
    let r = &(&a.0 * x.mv()) * &a.0;
    Ok(X::wrap(r.grade_part_unchecked(X::GRADE)))
}

/// `e^{(alpha/2) center} = cos(alpha/2) + sin(alpha/2) center`.
pub fn rotor(center: &Point2, alpha: f64) -> Result<Motor2> {
    center.require_normalized("rotor")?;
    let h = 0.5 * alpha;
    let s = Multivector::scalar(center.0.algebra(), h.cos());
    Ok(Motor2(s + &center.0 * h.sin()))
}

/// `1 + (d/2) dir`: translation by `d` along `dir` turned a quarter
/// counter-clockwise.
pub fn translator(dir: &Point2, d: f64) -> Result<Motor2> {
    dir.require_ideal_unit("translator")?;
    let one = Multivector::scalar(dir.0.algebra(), 1.0);
    Ok(Motor2(one + &dir.0 * (0.5 * d)))
}

impl Motor2 {
    pub fn from_mv(mv: Multivector) -> Result<Self> {
        if mv.grades_above(TOL * mv.max_abs()).iter().any(|g| g % 2 == 1) {
            return Err(PgaError::WrongGrade {
                what: "motor",
                expected: 0,
                found: mv.grades(),
            });
        }
        Ok(Motor2(mv))
    }

    /// The two-reflection motor `a b`; it acts as reflection in `b` followed
    /// by reflection in `a`.
    pub fn from_lines(a: &Line2, b: &Line2) -> Motor2 {
        Motor2(&a.0 * &b.0)
    }

    pub fn mv(&self) -> &Multivector {
        &self.0
    }

    pub fn reverse(&self) -> Motor2 {
        Motor2(self.0.reverse())
    }

    /// `self` applied after `other`.
    pub fn compose(&self, other: &Motor2) -> Motor2 {
        Motor2(&self.0 * &other.0)
    }

    pub fn normalize(&self) -> Result<Motor2> {
        let n = self.0.norm();
        if n == 0.0 {
            return Err(PgaError::ZeroInput("normalize motor"));
        }
        Ok(Motor2(&self.0 * (1.0 / n)))
    }

    /// `M X reverse(M)`.
    pub fn apply<X: Element2>(&self, x: &X) -> X {
        let r = &(&self.0 * x.mv()) * &self.0.reverse();
        X::wrap(r.grade_part_unchecked(X::GRADE))
    }
}

/// Standard-algebra shorthand for [`Pga2::line`].
pub fn line(a: f64, b: f64, c: f64) -> Result<Line2> {
    Pga2::new().line(a, b, c)
}

/// Standard-algebra shorthand for [`Pga2::point`].
pub fn point(x: f64, y: f64) -> Point2 {
    Pga2::new().point(x, y)
}

/// Standard-algebra shorthand for [`Pga2::direction`].
pub fn direction(x: f64, y: f64) -> Result<Point2> {
    Pga2::new().direction(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    fn close_xy(p: &Point2, x: f64, y: f64) {
        let (px, py) = p.xy().expect("euclidean point");
        close(px, x);
        close(py, y);
    }

    #[test]
    fn constructors_embed_basis() {
        let g = Pga2::new();
        assert_eq!(line(1.0, 0.0, 0.0).unwrap().mv(), &Multivector::blade(g.algebra(), E1, 1.0));
        assert_eq!(point(0.0, 0.0).mv(), &Multivector::blade(g.algebra(), E12, 1.0));
        // E1 = e20 = -e02
        assert_eq!(
            direction(1.0, 0.0).unwrap().mv(),
            &Multivector::blade(g.algebra(), E02, -1.0)
        );
        assert!(line(0.0, 0.0, 0.0).is_err());
        assert!(direction(0.0, 0.0).is_err());
    }

    #[test]
    fn normalization() {
        let l = Line2(line(1.0, 0.0, 0.0).unwrap().mv() * 2.0);
        assert_eq!(l.normalize().unwrap(), line(1.0, 0.0, 0.0).unwrap());
        let p = Point2(point(1.0, 2.0).mv() * -3.0);
        let n = p.normalize().unwrap();
        close(n.weight(), 1.0);
        close((n.mv() * n.mv()).scalar_part(), -1.0);
        close(direction(3.0, 4.0).unwrap().ideal_norm(), 5.0);
        let v = Point2(direction(1.0, 0.0).unwrap().mv() + direction(0.0, 1.0).unwrap().mv());
        close(v.ideal_norm(), 2f64.sqrt());
        close(Pga2::new().line(0.0, 0.0, -2.5).unwrap().ideal_norm(), 2.5);
        assert!(Line2(Multivector::zero(&pga2())).normalize().is_err());
    }

    #[test]
    fn meet_cases() {
        let o = meet(&line(1.0, 0.0, 0.0).unwrap(), &line(0.0, 1.0, 0.0).unwrap())
            .proper()
            .unwrap();
        assert_eq!(o, point(0.0, 0.0));
        // x = 0 and x = 1
        let v = meet(&line(1.0, 0.0, 0.0).unwrap(), &line(1.0, 0.0, -1.0).unwrap())
            .proper()
            .unwrap();
        assert!(v.is_ideal());
        close(v.ideal_norm(), 1.0);
        let a = line(1.0, 2.0, 3.0).unwrap();
        assert!(meet(&a, &a).is_dependent());
    }

    #[test]
    fn join_cases() {
        let l = join(&point(0.0, 0.0), &point(1.0, 0.0)).proper().unwrap();
        let (a, b, c) = l.coords();
        close(a, 0.0);
        close(c, 0.0);
        assert!(b != 0.0);
        let p = point(2.0, 3.0);
        assert!(join(&p, &p).is_dependent());
        close(join(&point(0.0, 0.0), &point(3.0, 4.0)).proper().unwrap().norm(), 5.0);
    }

    #[test]
    fn angles() {
        let e1 = line(1.0, 0.0, 0.0).unwrap();
        let e2 = line(0.0, 1.0, 0.0).unwrap();
        close(angle(&e1, &e2).unwrap(), FRAC_PI_2);
        close(angle(&e1, &e1).unwrap(), 0.0);
        let diag = line(1.0, -1.0, 0.0).unwrap().normalize().unwrap();
        close(angle(&e1, &diag).unwrap(), FRAC_PI_4);
        close(angle_from_meet(&e1, &diag).unwrap(), FRAC_PI_4);
        assert!(matches!(
            angle(&Pga2::new().ideal_line(), &e1),
            Err(PgaError::IdealArgument(_))
        ));
    }

    #[test]
    fn distances() {
        let o = point(0.0, 0.0);
        let q = point(3.0, 4.0);
        close(dist_point_point(&o, &q).unwrap(), 5.0);
        close(dist_point_point_ideal(&o, &q).unwrap(), 5.0);
        close(dist_point_line(&point(0.0, 1.0), &line(0.0, 1.0, 0.0).unwrap()).unwrap(), 1.0);
        close(dist_point_line(&point(0.0, -2.0), &line(0.0, 1.0, 0.0).unwrap()).unwrap(), -2.0);
        let x0 = line(1.0, 0.0, 0.0).unwrap();
        let x1 = line(1.0, 0.0, -1.0).unwrap();
        close(dist_parallel_lines(&x0, &x1).unwrap(), 1.0);
        assert!(matches!(
            dist_parallel_lines(&x0, &line(0.0, 1.0, 0.0).unwrap()),
            Err(PgaError::NotParallel(_))
        ));
        let unnormalized = Line2(x0.mv() * 2.0);
        assert!(matches!(
            dist_point_line(&o, &unnormalized),
            Err(PgaError::NotNormalized { .. })
        ));
    }

    #[test]
    fn projections() {
        let y0 = line(0.0, 1.0, 0.0).unwrap();
        close_xy(&nearest_point(&point(1.0, 1.0), &y0).unwrap(), 1.0, 0.0);
        let perp = perp_through(&point(0.0, 0.0), &line(1.0, 0.0, 0.0).unwrap()).unwrap();
        let (a, _, c) = perp.coords();
        close(a, 0.0);
        close(c, 0.0);
        let par = parallel_through(&point(0.0, 1.0), &y0).unwrap();
        let (a, b, c) = par.normalize().unwrap().coords();
        close(a, 0.0);
        // y = 1 up to orientation: b y + c = 0 with c = -b
        close(c, -b);
    }

    #[test]
    fn inner_product_is_antisymmetric_for_point_and_line() {
        let p = point(0.3, -1.2);
        let a = line(0.6, 0.8, 0.5).unwrap();
        let pa = p.mv() | a.mv();
        let ap = a.mv() | p.mv();
        assert!(pa.approx_eq(&-ap, 1e-15));
    }

    #[test]
    fn triangle_areas() {
        let o = point(0.0, 0.0);
        close(triangle_area(&o, &point(1.0, 0.0), &point(0.0, 1.0)).unwrap(), 0.5);
        close(triangle_area(&o, &point(2.0, 0.0), &point(0.0, 2.0)).unwrap(), 2.0);
        close(triangle_area(&o, &point(1.0, 1.0), &point(2.0, 2.0)).unwrap(), 0.0);
    }

    #[test]
    fn reflections() {
        let e1 = line(1.0, 0.0, 0.0).unwrap();
        let r = reflect(&e1, &point(1.0, 0.0)).unwrap();
        // weight comes back negated
        close(r.weight(), -1.0);
        close_xy(&r, -1.0, 0.0);
        assert_eq!(reflect(&e1, &e1).unwrap(), e1);
        let a = line(0.6, 0.8, -0.3).unwrap();
        let x = point(1.5, -0.25);
        let twice = reflect(&a, &reflect(&a, &x).unwrap()).unwrap();
        assert!(twice.mv().approx_eq(x.mv(), 1e-14));
    }

    #[test]
    fn rotor_orientation_is_clockwise() {
        let r = rotor(&point(0.0, 0.0), FRAC_PI_2).unwrap();
        close_xy(&r.apply(&point(1.0, 0.0)), 0.0, -1.0);
        assert_eq!(rotor(&point(0.0, 0.0), 0.0).unwrap(), Pga2::new().identity_motor());
        let c = point(0.4, -0.7);
        let closed = rotor(&c, 1.3).unwrap();
        let series = (c.mv() * 0.65).exp_series(40).unwrap();
        assert!(closed.mv().approx_eq(&series, 1e-12));
    }

    #[test]
    fn translator_direction() {
        let t = translator(&direction(1.0, 0.0).unwrap(), 1.0).unwrap();
        close_xy(&t.apply(&point(2.0, 3.0)), 2.0, 4.0);
        let series = (direction(1.0, 0.0).unwrap().mv() * 0.5).exp_series(40).unwrap();
        assert!(t.mv().approx_eq(&series, 1e-15));
        assert!(translator(&point(0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn two_reflections_rotate_by_twice_the_angle() {
        let a = line(1.0, 0.0, 0.0).unwrap();
        let b = line(1.0, 1.0, 0.0).unwrap().normalize().unwrap();
        let x = point(0.3, 0.9);
        let via_reflections = reflect(&a, &reflect(&b, &x).unwrap()).unwrap();
        let via_motor = Motor2::from_lines(&a, &b).apply(&x);
        assert!(via_reflections.mv().approx_eq(via_motor.mv(), 1e-14));
        // a, b meet at pi/4, so the motor turns by pi/2 about the origin
        let (x1, y1) = via_motor.xy().unwrap();
        let (x0, y0) = x.xy().unwrap();
        close((x0 * x1 + y0 * y1) / (x0 * x0 + y0 * y0), (2.0 * angle(&a, &b).unwrap()).cos());
    }
}
