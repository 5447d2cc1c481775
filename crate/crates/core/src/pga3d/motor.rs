//! Bivector exponential and logarithm, screws and translators.
//!
//! Every bivector `B` with euclidean part `a` (`alpha = |a|`) satisfies
//! `B^2 = -alpha^2 - 2 gamma I` with `gamma = alpha beta`. For `alpha > 0`,
//! `B = (alpha + beta I) Omega` with `Omega` a normalized simple line, and
//!
//! `exp(B) = cos(alpha) - gamma sinc(alpha) I + sinc(alpha) B + gamma f(alpha) I B`
//!
//! with `f(alpha) = (cos(alpha) - sinc(alpha)) / alpha^2`. Written this way the
//! formula is smooth through `alpha = 0`, where it reduces to `1 + B`.

use super::{euclidean_bivector_part, Line3, Motor3, Point3, E0123, NORMALIZED_TOL};
use crate::error::{PgaError, Result};
use crate::kernel::{Multivector, TOL};

/// Half-angles closer than this to `pi` are treated as the branch cut of the
/// principal logarithm.
pub const BRANCH_TOL: f64 = 1e-9;

/// `B = (alpha + beta I) axis`, or `B = beta axis` with an ideal unit axis
/// for a pure translation.
#[derive(Debug, Clone, PartialEq)]
pub struct ScrewDecomposition {
    pub alpha: f64,
    pub beta: f64,
    pub axis: Line3,
    pub pure_translation: bool,
}

impl ScrewDecomposition {
    /// Recombine into the bivector.
    pub fn bivector(&self) -> Multivector {
        let ax = self.axis.mv();
        if self.pure_translation {
            return ax * self.beta;
        }
        let i = Multivector::pseudoscalar(ax.algebra());
        ax * self.alpha + &(&i * ax) * self.beta
    }

    /// Pitch `beta / alpha`; infinite for pure translations.
    pub fn pitch(&self) -> f64 {
        if self.pure_translation {
            f64::INFINITY
        } else {
            self.beta / self.alpha
        }
    }
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// `(cos x - sinc x) / x^2`.
fn cos_minus_sinc_over_sq(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        let x2 = x * x;
        -1.0 / 3.0 + x2 / 30.0 - x2 * x2 / 840.0
    } else {
        (x.cos() - x.sin() / x) / (x * x)
    }
}

fn require_bivector(b: &Multivector, what: &'static str) -> Result<Multivector> {
    let d = b.algebra().descriptor();
    if (d.p, d.m, d.z) != (3, 0, 1) {
        return Err(PgaError::InvalidSignature(b.algebra().label()));
    }
    let stray = b.grades_above(TOL * b.max_abs().max(1.0));
    if stray.iter().any(|g| *g != 2) {
        return Err(PgaError::WrongGrade {
            what,
            expected: 2,
            found: stray,
        });
    }
    Ok(b.grade_part_unchecked(2))
}

/// Split a bivector into `(alpha + beta I) Omega` with `Omega` normalized and
/// simple.
pub fn split_bivector(b: &Multivector) -> Result<ScrewDecomposition> {
    let b = require_bivector(b, "split_bivector")?;
    let alpha = b.euclidean_weight();
    if alpha <= TOL * b.max_abs() {
        let beta = b.ideal_norm();
        if beta == 0.0 {
            return Err(PgaError::ZeroInput("split_bivector"));
        }
        return Ok(ScrewDecomposition {
            alpha: 0.0,
            beta,
            axis: Line3(&b * (1.0 / beta)),
            pure_translation: true,
        });
    }
    let gamma = -0.5 * (&b * &b).get(E0123);
    let beta = gamma / alpha;
    let i = Multivector::pseudoscalar(b.algebra());
    let axis = &b * (1.0 / alpha) - &(&i * &b) * (beta / (alpha * alpha));
    Ok(ScrewDecomposition {
        alpha,
        beta,
        axis: Line3(axis),
        pure_translation: false,
    })
}

/// Closed-form `exp(B)` for a bivector.
pub fn exp_bivector(b: &Multivector) -> Result<Motor3> {
    let b = require_bivector(b, "exp_bivector")?;
    let alpha = b.euclidean_weight();
    let gamma = -0.5 * (&b * &b).get(E0123);
    let s = sinc(alpha);
    let i = Multivector::pseudoscalar(b.algebra());
    let scalar = Multivector::scalar(b.algebra(), alpha.cos()).with(E0123, -gamma * s);
    let ib = &i * &b;
    Ok(Motor3(scalar + &b * s + ib * (gamma * cos_minus_sinc_over_sq(alpha))))
}

/// Principal logarithm of a normalized motor: the bivector `B` with
/// `exp(B) = M` and rotation half-angle in `[0, pi)`.
pub fn log_motor(m: &Motor3) -> Result<Multivector> {
    let err = m.normalization_error();
    if err > NORMALIZED_TOL.sqrt() {
        return Err(PgaError::NotNormalized {
            what: "log_motor",
            square: (m.mv() * &m.mv().reverse()).scalar_part(),
        });
    }
    let mv = m.mv();
    let s = mv.scalar_part();
    let q = mv.get(E0123);
    let bm = mv.grade_part_unchecked(2);
    let am = euclidean_bivector_part(&bm);
    let sin_a = am.euclidean_weight();
    let alpha = sin_a.atan2(s);
    if std::f64::consts::PI - alpha < BRANCH_TOL {
        return Err(PgaError::BranchCut { half_angle: alpha });
    }
    let sc = sinc(alpha);
    let gamma = -q / sc;
    let i = Multivector::pseudoscalar(mv.algebra());
    let correction = (&i * &am) * (gamma * cos_minus_sinc_over_sq(alpha) / sc);
    Ok((bm - correction) * (1.0 / sc))
}

/// Screw motion about a normalized euclidean axis: rotation by `angle` and
/// translation by `pitch * angle` along the axis,
/// `exp((angle/2)(1 + pitch I) axis)`.
pub fn motor_from_screw(axis: &Line3, angle: f64, pitch: f64) -> Result<Motor3> {
    axis.require_normalized("motor_from_screw")?;
    if !super::is_simple(axis.mv()) {
        return Err(PgaError::NotSimple("motor_from_screw"));
    }
    let i = Multivector::pseudoscalar(axis.mv().algebra());
    let b = (axis.mv() + &(&i * axis.mv()) * pitch) * (0.5 * angle);
    exp_bivector(&b)
}

/// `exp((angle/2) axis)`: rotation by `angle` about a normalized axis,
/// clockwise when looking along the axis direction.
pub fn rotor(axis: &Line3, angle: f64) -> Result<Motor3> {
    motor_from_screw(axis, angle, 0.0)
}

/// Translation by `d` along the unit ideal point `dir`:
/// `exp((d/2) (E0 v dir) I)` with `E0` the origin.
pub fn translator(dir: &Point3, d: f64) -> Result<Motor3> {
    dir.require_ideal_unit("translator")?;
    exp_bivector(&translation_bivector(dir, 0.5 * d))
}

/// `1 + (E0 v V) I`: translation by `2|V|` along the ideal point `V`.
pub fn translator_from_ideal_point(v: &Point3) -> Result<Motor3> {
    if !v.is_ideal() {
        return Err(PgaError::EuclideanArgument("translator_from_ideal_point"));
    }
    let one = Multivector::scalar(v.mv().algebra(), 1.0);
    Ok(Motor3(one + translation_bivector(v, 1.0)))
}

fn translation_bivector(v: &Point3, scale: f64) -> Multivector {
    let alg = v.mv().algebra();
    let origin = Multivector::blade(alg, super::E123, 1.0);
    let i = Multivector::pseudoscalar(alg);
    &(&origin & v.mv()) * &i * scale
}

impl Motor3 {
    /// Principal logarithm; see [`log_motor`].
    pub fn log(&self) -> Result<Multivector> {
        log_motor(self)
    }

    /// Apply to a point and return its euclidean coordinates.
    pub fn transform_point(&self, p: &Point3) -> Option<[f64; 3]> {
        self.apply(p).xyz()
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    fn sample_bivectors() -> Vec<Multivector> {
        vec![
            bivector([0.3, -0.2, 0.5, 0.4, -0.1, 0.7]),
            bivector([1.0, 2.0, -1.0, 1.2, 0.8, -0.4]),
            bivector([0.0, 0.0, 0.0, 0.0, 0.0, 1e-5]),
            bivector([0.1, 0.0, 0.2, 0.0, 0.0, 0.0]),
            bivector([0.5, 0.5, 0.0, 1e-4, 0.0, 0.0]),
            bivector([0.0, 0.0, 0.0, 2.0, 1.0, -2.0]),
        ]
    }

    #[test]
    fn exp_matches_series() {
        for b in sample_bivectors() {
            let closed = exp_bivector(&b).unwrap();
            let series = b.exp_series(40).unwrap();
            assert!(closed.mv().approx_eq(&series, 1e-13), "{b}");
            assert!(closed.normalization_error() < 1e-14);
        }
    }

    #[test]
    fn log_inverts_exp() {
        for b in sample_bivectors() {
            let m = exp_bivector(&b).unwrap();
            let l = log_motor(&m).unwrap();
            assert!(l.approx_eq(&b, 1e-12), "{b} vs {l}");
        }
    }

    #[test]
    fn log_rejects_branch_cut() {
        let z = bivector([0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let m = exp_bivector(&(&z * PI)).unwrap();
        assert!(matches!(log_motor(&m), Err(PgaError::BranchCut { .. })));
        let bad = Motor3::from_mv(&z * 2.0).unwrap();
        assert!(matches!(log_motor(&bad), Err(PgaError::NotNormalized { .. })));
    }

    #[test]
    fn split_recombines() {
        for b in sample_bivectors() {
            let s = split_bivector(&b).unwrap();
            assert!(s.bivector().approx_eq(&b, 1e-12));
            assert!(is_simple(s.axis.mv()));
            if !s.pure_translation {
                close(square_scalar(s.axis.mv()), -1.0, 1e-12);
            }
        }
        let t = split_bivector(&bivector([0.0, 3.0, 4.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(t.pure_translation);
        close(t.beta, 5.0, 1e-15);
        assert!(split_bivector(&bivector([0.0; 6])).is_err());
    }

    #[test]
    fn quarter_turn_is_clockwise_about_z() {
        let z = line_through(&point3(0.0, 0.0, 0.0), &point3(0.0, 0.0, 1.0))
            .proper()
            .unwrap();
        let r = rotor(&z, FRAC_PI_2).unwrap();
        let p = r.transform_point(&point3(1.0, 0.0, 0.0)).unwrap();
        close(p[0], 0.0, 1e-15);
        close(p[1], -1.0, 1e-15);
        close(p[2], 0.0, 1e-15);
    }

    #[test]
    fn screw_advances_along_axis() {
        let z = line_through(&point3(0.0, 0.0, 0.0), &point3(0.0, 0.0, 1.0))
            .proper()
            .unwrap();
        let m = motor_from_screw(&z, FRAC_PI_2, 2.0).unwrap();
        let p = m.transform_point(&point3(0.0, 0.0, 0.0)).unwrap();
        close(p[0], 0.0, 1e-15);
        close(p[1], 0.0, 1e-15);
        close(p[2].abs(), PI, 1e-14);
    }

    #[test]
    fn translator_forms_agree() {
        let v = direction3(1.0, 0.0, 0.0).unwrap();
        let t = translator(&v, 2.0).unwrap();
        let p = t.transform_point(&point3(0.0, 0.0, 0.0)).unwrap();
        close(p[0], 2.0, 1e-15);
        close(p[1], 0.0, 1e-15);
        let table = translator_from_ideal_point(&v).unwrap();
        assert!(table.mv().approx_eq(t.mv(), 1e-15));
        let w = direction3(0.0, 3.0, 4.0).unwrap().normalize().unwrap();
        let p = translator(&w, 10.0)
            .unwrap()
            .transform_point(&point3(1.0, 1.0, 1.0))
            .unwrap();
        close(p[0], 1.0, 1e-14);
        close(p[1], 7.0, 1e-14);
        close(p[2], 9.0, 1e-14);
        assert!(translator_from_ideal_point(&point3(0.0, 0.0, 0.0)).is_err());
    }
}
