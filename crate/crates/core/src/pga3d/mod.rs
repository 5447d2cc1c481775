//! Euclidean space, Cl*(3,0,1).
//!
//! Embedding conventions (shared with [`crate::oracle`]):
//!
//! * plane `ax + by + cz + d = 0` is `d e0 + a e1 + b e2 + c e3`;
//! * point `(x, y, z)` is `e123 + x e032 + y e013 + z e021`
//!   (`= e123 - x e023 + y e013 - z e012` on canonical blades);
//! * lines use the basis `e01, e02, e03, e23, e31, e12`. The join of points
//!   `p` and `p + u` has `(e23, e31, e12) = u` and `(e01, e02, e03) = p x u`.
//!
//! `plane ^ point = (ax + by + cz + d) I` and weight-1 points square to `-1`.

mod dual_quat;
mod kaleidoscope;
mod lines;
mod motor;
mod table;

use std::sync::Arc;

use crate::error::{PgaError, Result};
use crate::kernel::{pga3, Algebra, AlgebraDescriptor, Blade, Multivector, TOL};

pub use dual_quat::{from_dual_quaternion, to_dual_quaternion, DualQuaternion};
pub use kaleidoscope::{
    closure_error, dihedral_mirrors, kaleidoscope_orbit, kaleidoscope_versors,
    projective_closure_error,
};
pub use lines::{common_normal, is_simple, product_of_lines, LinePairProduct};
pub use motor::{
    exp_bivector, log_motor, motor_from_screw, rotor, split_bivector, translator,
    translator_from_ideal_point, ScrewDecomposition,
};
pub use table::*;

/// Tolerance on `X^2 = +-1` for arguments that must be normalized.
pub const NORMALIZED_TOL: f64 = 1e-9;

pub(crate) const E0: Blade = Blade(0b0001);
pub(crate) const E1: Blade = Blade(0b0010);
pub(crate) const E2: Blade = Blade(0b0100);
pub(crate) const E3: Blade = Blade(0b1000);
pub(crate) const E01: Blade = Blade(0b0011);
pub(crate) const E02: Blade = Blade(0b0101);
pub(crate) const E03: Blade = Blade(0b1001);
pub(crate) const E12: Blade = Blade(0b0110);
pub(crate) const E13: Blade = Blade(0b1010);
pub(crate) const E23: Blade = Blade(0b1100);
pub(crate) const E012: Blade = Blade(0b0111);
pub(crate) const E013: Blade = Blade(0b1011);
pub(crate) const E023: Blade = Blade(0b1101);
pub(crate) const E123: Blade = Blade(0b1110);
pub(crate) const E0123: Blade = Blade(0b1111);

/// Bivector basis in the order `e01, e02, e03, e23, e31, e12` with the sign of
/// each element relative to its canonical blade.
pub const BIVECTOR_BASIS: [(Blade, f64); 6] = [
    (E01, 1.0),
    (E02, 1.0),
    (E03, 1.0),
    (E23, 1.0),
    (E13, -1.0),
    (E12, 1.0),
];

/// Names for [`BIVECTOR_BASIS`].
pub const BIVECTOR_NAMES: [&str; 6] = ["01", "02", "03", "23", "31", "12"];

/// Even subalgebra basis `1, e01, e02, e03, e23, e31, e12, e0123`.
pub const EVEN_BASIS: [(Blade, f64); 8] = [
    (Blade::SCALAR, 1.0),
    (E01, 1.0),
    (E02, 1.0),
    (E03, 1.0),
    (E23, 1.0),
    (E13, -1.0),
    (E12, 1.0),
    (E0123, 1.0),
];

/// Constructor context bound to one Cl*(3,0,1) instance.
#[derive(Debug, Clone)]
pub struct Pga3 {
    alg: Arc<Algebra>,
}

impl Default for Pga3 {
    fn default() -> Self {
        Self { alg: pga3() }
    }
}

impl Pga3 {
    pub fn new() -> Self {
        Self::default()
    }

    /// Use a specific algebra instance, e.g. a perturbed test fixture.
    pub fn with_algebra(alg: Arc<Algebra>) -> Result<Self> {
        if alg.descriptor() != AlgebraDescriptor::euclidean_pga(3)? {
            return Err(PgaError::InvalidSignature(format!(
                "Pga3 needs Cl(3,0,1), got {}",
                alg.label()
            )));
        }
        Ok(Self { alg })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// Plane `ax + by + cz + d = 0`.
    pub fn plane(&self, a: f64, b: f64, c: f64, d: f64) -> Result<Plane> {
        if [a, b, c, d].iter().all(|v| *v == 0.0) {
            return Err(PgaError::ZeroInput("plane"));
        }
        Ok(Plane(
            Multivector::zero(&self.alg)
                .with(E0, d)
                .with(E1, a)
                .with(E2, b)
                .with(E3, c),
        ))
    }

    pub fn ideal_plane(&self) -> Plane {
        Plane(Multivector::blade(&self.alg, E0, 1.0))
    }

    pub fn point(&self, x: f64, y: f64, z: f64) -> Point3 {
        Point3(self.homogeneous(x, y, z, 1.0))
    }

    /// Ideal point in direction `(x, y, z)`.
    pub fn direction(&self, x: f64, y: f64, z: f64) -> Result<Point3> {
        if x == 0.0 && y == 0.0 && z == 0.0 {
            return Err(PgaError::ZeroInput("direction"));
        }
        Ok(Point3(self.homogeneous(x, y, z, 0.0)))
    }

    fn homogeneous(&self, x: f64, y: f64, z: f64, w: f64) -> Multivector {
        Multivector::zero(&self.alg)
            .with(E123, w)
            .with(E023, -x)
            .with(E013, y)
            .with(E012, -z)
    }

    /// Line from Plücker coordinates: direction `(e23, e31, e12)` and moment
    /// `(e01, e02, e03)`.
    pub fn line_from_plucker(&self, direction: [f64; 3], moment: [f64; 3]) -> Line3 {
        let coords = [moment[0], moment[1], moment[2], direction[0], direction[1], direction[2]];
        Line3(bivector_from_coords(&self.alg, &coords))
    }

    pub fn pseudoscalar(&self) -> Multivector {
        Multivector::blade(&self.alg, E0123, 1.0)
    }

    pub fn identity_motor(&self) -> Motor3 {
        Motor3(Multivector::scalar(&self.alg, 1.0))
    }
}

/// Grade-1 element: a plane.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane(Multivector);

/// Grade-2 element: a line when simple, otherwise a linear line complex.
#[derive(Debug, Clone, PartialEq)]
pub struct Line3(Multivector);

/// Grade-3 element: a point, or a direction when ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct Point3(Multivector);

/// Even element (grades 0, 2, 4) acting by `M X reverse(M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Motor3(Multivector);

/// Grade-typed views shared by reflections and motor application.
pub trait Element3: Sized {
    const GRADE: usize;
    fn mv(&self) -> &Multivector;
    fn wrap(mv: Multivector) -> Self;

    fn from_mv(mv: Multivector) -> Result<Self> {
        check_grade3(&mv, Self::GRADE)?;
        Ok(Self::wrap(mv.grade_part_unchecked(Self::GRADE)))
    }
}

macro_rules! element3 {
    ($t:ident, $g:expr) => {
        impl Element3 for $t {
            const GRADE: usize = $g;
            fn mv(&self) -> &Multivector {
                &self.0
            }
            fn wrap(mv: Multivector) -> Self {
                $t(mv)
            }
        }

        impl $t {
            pub fn mv(&self) -> &Multivector {
                &self.0
            }

            pub fn into_mv(self) -> Multivector {
                self.0
            }

            /// Standard norm `sqrt(|<X reverse(X)>_0|)`.
            pub fn norm(&self) -> f64 {
                self.0.norm()
            }

            /// Length of the coefficients carrying `e0`.
            pub fn ideal_norm(&self) -> f64 {
                self.0.ideal_norm()
            }

            pub fn is_ideal(&self) -> bool {
                self.0.euclidean_weight() <= TOL * self.0.max_abs()
            }
        }
    };
}

element3!(Plane, 1);
element3!(Line3, 2);
element3!(Point3, 3);

fn check_grade3(mv: &Multivector, grade: usize) -> Result<()> {
    if mv.algebra().descriptor() != (AlgebraDescriptor { p: 3, m: 0, z: 1 }) {
        return Err(PgaError::InvalidSignature(mv.algebra().label()));
    }
    let stray = mv.grades_above(TOL * mv.max_abs().max(1.0));
    if stray.iter().any(|g| *g != grade) {
        return Err(PgaError::WrongGrade {
            what: "element",
            expected: grade,
            found: stray,
        });
    }
    Ok(())
}

pub(crate) fn square_scalar(mv: &Multivector) -> f64 {
    (mv * mv).scalar_part()
}

pub(crate) fn bivector_from_coords(alg: &Arc<Algebra>, coords: &[f64; 6]) -> Multivector {
    let mut mv = Multivector::zero(alg);
    for ((blade, sign), c) in BIVECTOR_BASIS.iter().zip(coords) {
        mv = mv.with(*blade, sign * c);
    }
    mv
}

/// Coordinates of the grade-2 part on [`BIVECTOR_BASIS`].
pub fn bivector_coords(mv: &Multivector) -> [f64; 6] {
    let mut out = [0.0; 6];
    for (o, (blade, sign)) in out.iter_mut().zip(BIVECTOR_BASIS.iter()) {
        *o = sign * mv.get(*blade);
    }
    out
}

/// Coordinates of the even part on [`EVEN_BASIS`].
pub fn even_coords(mv: &Multivector) -> [f64; 8] {
    let mut out = [0.0; 8];
    for (o, (blade, sign)) in out.iter_mut().zip(EVEN_BASIS.iter()) {
        *o = sign * mv.get(*blade);
    }
    out
}

/// Grade-2 multivector from coordinates on [`BIVECTOR_BASIS`] in Cl*(3,0,1).
pub fn bivector(coords: [f64; 6]) -> Multivector {
    bivector_from_coords(&pga3(), &coords)
}

/// Euclidean part `(e23, e31, e12)` of a bivector, zeroing the rest.
pub(crate) fn euclidean_bivector_part(b: &Multivector) -> Multivector {
    let mut out = Multivector::zero(b.algebra());
    for blade in [E23, E13, E12] {
        out = out.with(blade, b.get(blade));
    }
    out
}

impl Plane {
    /// `(a, b, c, d)` of `ax + by + cz + d = 0`.
    pub fn coords(&self) -> (f64, f64, f64, f64) {
        (self.0.get(E1), self.0.get(E2), self.0.get(E3), self.0.get(E0))
    }

    pub fn normalize(&self) -> Result<Plane> {
        normalize_by_norms(&self.0, "normalize plane").map(Plane)
    }

    pub fn is_normalized(&self) -> bool {
        (square_scalar(&self.0) - 1.0).abs() <= NORMALIZED_TOL
    }

    pub(crate) fn require_normalized(&self, what: &'static str) -> Result<()> {
        if self.is_ideal() {
            return Err(PgaError::IdealArgument(what));
        }
        let sq = square_scalar(&self.0);
        if (sq - 1.0).abs() > NORMALIZED_TOL {
            return Err(PgaError::NotNormalized { what, square: sq });
        }
        Ok(())
    }
}

impl Line3 {
    /// Wrap a grade-2 multivector.
    pub fn from_bivector(b: Multivector) -> Result<Self> {
        <Self as Element3>::from_mv(b)
    }

    /// `(direction, moment)`: `(e23, e31, e12)` and `(e01, e02, e03)`.
    pub fn plucker(&self) -> ([f64; 3], [f64; 3]) {
        let c = bivector_coords(&self.0);
        ([c[3], c[4], c[5]], [c[0], c[1], c[2]])
    }

    pub fn coords(&self) -> [f64; 6] {
        bivector_coords(&self.0)
    }

    pub fn normalize(&self) -> Result<Line3> {
        normalize_by_norms(&self.0, "normalize line").map(Line3)
    }

    pub fn is_normalized(&self) -> bool {
        (square_scalar(&self.0) + 1.0).abs() <= NORMALIZED_TOL
    }

    pub(crate) fn require_normalized(&self, what: &'static str) -> Result<()> {
        if self.is_ideal() {
            return Err(PgaError::IdealArgument(what));
        }
        let sq = square_scalar(&self.0);
        if (sq + 1.0).abs() > NORMALIZED_TOL {
            return Err(PgaError::NotNormalized { what, square: sq });
        }
        Ok(())
    }

    /// `Omega I`, the ideal line polar to this one.
    pub fn polar(&self) -> Line3 {
        let i = Multivector::pseudoscalar(self.0.algebra());
        Line3(&self.0 * &i)
    }
}

impl Point3 {
    /// `e123` coefficient.
    pub fn weight(&self) -> f64 {
        self.0.get(E123)
    }

    /// Raw `(x, y, z)` coefficients, not divided by the weight.
    pub fn direction_coords(&self) -> [f64; 3] {
        [-self.0.get(E023), self.0.get(E013), -self.0.get(E012)]
    }

    pub fn xyz(&self) -> Option<[f64; 3]> {
        if self.is_ideal() {
            return None;
        }
        let w = self.weight();
        let [x, y, z] = self.direction_coords();
        Some([x / w, y / w, z / w])
    }

    /// Euclidean points are scaled to weight `+1`; ideal points to ideal norm 1.
    pub fn normalize(&self) -> Result<Point3> {
        if !self.is_ideal() {
            return Ok(Point3(&self.0 * (1.0 / self.weight())));
        }
        let i = self.ideal_norm();
        if i == 0.0 {
            return Err(PgaError::ZeroInput("normalize point"));
        }
        Ok(Point3(&self.0 * (1.0 / i)))
    }

    pub fn is_normalized(&self) -> bool {
        (square_scalar(&self.0) + 1.0).abs() <= NORMALIZED_TOL
    }

    pub(crate) fn require_normalized(&self, what: &'static str) -> Result<()> {
        if self.is_ideal() {
            return Err(PgaError::IdealArgument(what));
        }
        let sq = square_scalar(&self.0);
        if (sq + 1.0).abs() > NORMALIZED_TOL {
            return Err(PgaError::NotNormalized { what, square: sq });
        }
        Ok(())
    }

    pub(crate) fn require_ideal_unit(&self, what: &'static str) -> Result<()> {
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

fn normalize_by_norms(mv: &Multivector, what: &'static str) -> Result<Multivector> {
    let n = mv.norm();
    if n > TOL * mv.max_abs() {
        return Ok(mv * (1.0 / n));
    }
    let i = mv.ideal_norm();
    if i == 0.0 {
        return Err(PgaError::ZeroInput(what));
    }
    Ok(mv * (1.0 / i))
}

impl Motor3 {
    pub fn from_mv(mv: Multivector) -> Result<Self> {
        check_grade3(&mv, 0).or_else(|_| {
            let odd = mv
                .grades_above(TOL * mv.max_abs())
                .into_iter()
                .any(|g| g % 2 == 1);
            if odd {
                Err(PgaError::WrongGrade {
                    what: "motor",
                    expected: 0,
                    found: mv.grades(),
                })
            } else {
                Ok(())
            }
        })?;
        Ok(Motor3(mv))
    }

    pub fn mv(&self) -> &Multivector {
        &self.0
    }

    pub fn into_mv(self) -> Multivector {
        self.0
    }

    pub fn reverse(&self) -> Motor3 {
        Motor3(self.0.reverse())
    }

    /// `self` applied after `other`.
    pub fn compose(&self, other: &Motor3) -> Motor3 {
        Motor3(&self.0 * &other.0)
    }

    /// `M reverse(M) - 1`, measured as the max absolute coefficient.
    pub fn normalization_error(&self) -> f64 {
        let p = &self.0 * &self.0.reverse();
        (p - Multivector::scalar(self.0.algebra(), 1.0)).max_abs()
    }

    /// Scale so that `M reverse(M) = 1`.
    ///
    /// `M reverse(M) = s + t I` for any even `M`; the inverse square root of
    /// that dual number is `s^{-1/2} (1 - t/(2s) I)`.
    pub fn normalize(&self) -> Result<Motor3> {
        let p = &self.0 * &self.0.reverse();
        let s = p.scalar_part();
        let t = p.pseudoscalar_part();
        if s <= 0.0 || !s.is_finite() {
            return Err(PgaError::ZeroInput("normalize motor"));
        }
        let inv = 1.0 / s.sqrt();
        let factor = Multivector::scalar(self.0.algebra(), inv)
            .with(E0123, -0.5 * t / s * inv);
        Ok(Motor3(&self.0 * &factor))
    }

    /// `M X reverse(M)`.
    pub fn apply<X: Element3>(&self, x: &X) -> X {
        let r = &(&self.0 * x.mv()) * &self.0.reverse();
        X::wrap(r.grade_part_unchecked(X::GRADE))
    }

    /// Coordinates on [`EVEN_BASIS`].
    pub fn coords(&self) -> [f64; 8] {
        even_coords(&self.0)
    }

    pub fn from_coords(alg: &Arc<Algebra>, coords: &[f64; 8]) -> Motor3 {
        let mut mv = Multivector::zero(alg);
        for ((blade, sign), c) in EVEN_BASIS.iter().zip(coords) {
            mv = mv.with(*blade, sign * c);
        }
        Motor3(mv)
    }
}

/// Standard-algebra shorthand for [`Pga3::plane`].
pub fn plane(a: f64, b: f64, c: f64, d: f64) -> Result<Plane> {
    Pga3::new().plane(a, b, c, d)
}

/// Standard-algebra shorthand for [`Pga3::point`].
pub fn point3(x: f64, y: f64, z: f64) -> Point3 {
    Pga3::new().point(x, y, z)
}

/// Standard-algebra shorthand for [`Pga3::direction`].
pub fn direction3(x: f64, y: f64, z: f64) -> Result<Point3> {
    Pga3::new().direction(x, y, z)
}
