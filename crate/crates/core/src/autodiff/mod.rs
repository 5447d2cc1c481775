//! Forward-mode automatic differentiation with dual numbers.
//!
//! A dual number `a + a' eps` with `eps^2 = 0` carries a value and a
//! derivative. In PGA it is the scalar plus pseudoscalar subalgebra `{1, I}`.
//! Programs written against [`DualNumber`] run on [`DualScalar`] (one
//! direction) or [`MultiDualScalar`] (one nilpotent direction per variable,
//! all products of two directions truncated).

mod dual;
mod expr;
mod multi;

pub use dual::DualScalar;
pub use expr::{Expr, Func, Gradient};
pub use multi::MultiDualScalar;

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{PgaError, Result};

/// Operations shared by the dual-number types.
///
/// Analytic functions lift as `f(a) + f'(a) a' eps`. Functions with a
/// restricted domain return [`PgaError::Domain`] carrying the value part.
pub trait DualNumber:
    Sized + Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(c: f64) -> Self;

    /// Value part.
    fn re(&self) -> f64;

    /// `f + slope * (nilpotent part of self)`.
    fn chain(&self, f: f64, slope: f64) -> Self;

    /// Whether any nilpotent component is nonzero.
    fn has_payload(&self) -> bool;

    fn exp(&self) -> Self {
        let e = self.re().exp();
        self.chain(e, e)
    }

    fn sin(&self) -> Self {
        let a = self.re();
        self.chain(a.sin(), a.cos())
    }

    fn cos(&self) -> Self {
        let a = self.re();
        self.chain(a.cos(), -a.sin())
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)] // also rejects NaN
    fn try_ln(&self) -> Result<Self> {
        let a = self.re();
        if !(a > 0.0) {
            return Err(PgaError::Domain { op: "ln", value: a });
        }
        Ok(self.chain(a.ln(), 1.0 / a))
    }

    /// Square root; at `0` only constants are allowed since the slope is
    /// unbounded there.
    fn try_sqrt(&self) -> Result<Self> {
        let a = self.re();
        if a < 0.0 || a.is_nan() || (a == 0.0 && self.has_payload()) {
            return Err(PgaError::Domain { op: "sqrt", value: a });
        }
        let s = a.sqrt();
        Ok(self.chain(s, if s == 0.0 { 0.0 } else { 0.5 / s }))
    }

    fn try_recip(&self) -> Result<Self> {
        let a = self.re();
        if a == 0.0 || a.is_nan() {
            return Err(PgaError::Domain { op: "div", value: a });
        }
        Ok(self.chain(1.0 / a, -1.0 / (a * a)))
    }

    /// `self / rhs`, failing when the divisor's value part is zero.
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_recip()?)
    }

    /// `self^k` by repeated multiplication of the value, so polynomial
    /// derivatives stay exact wherever the powers are representable.
    fn powu(&self, k: u32) -> Self {
        let a = self.re();
        if k == 0 {
            return Self::constant(1.0);
        }
        let lower = ipow(a, k - 1);
        self.chain(lower * a, f64::from(k) * lower)
    }

    fn try_powi(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            return Ok(self.powu(k.unsigned_abs()));
        }
        self.powu(k.unsigned_abs()).try_recip()
    }

    /// Real exponent. Integer exponents go through [`DualNumber::try_powi`];
    /// otherwise the base must be positive.
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // also rejects NaN
    fn try_powf(&self, p: f64) -> Result<Self> {
        if p.fract() == 0.0 && p.abs() <= f64::from(i32::MAX) {
            return self.try_powi(p as i32);
        }
        let a = self.re();
        if !(a > 0.0) {
            return Err(PgaError::Domain { op: "pow", value: a });
        }
        Ok(self.chain(a.powf(p), p * a.powf(p - 1.0)))
    }

    /// `self^rhs` with a dual exponent: `exp(rhs ln self)` unless the
    /// exponent is a constant.
    fn try_pow(&self, rhs: &Self) -> Result<Self> {
        if !rhs.has_payload() {
            return self.try_powf(rhs.re());
        }
        Ok((rhs.clone() * self.try_ln()?).exp())
    }
}

fn ipow(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * a)
}

/// Derivative of `f` at `x`: evaluates `f(x + eps)` and reads the `eps` part.
pub fn derivative(f: impl Fn(DualScalar) -> DualScalar, x: f64) -> f64 {
    f(DualScalar::variable(x)).du
}

/// [`derivative`] for programs that can hit a domain error.
pub fn try_derivative(f: impl Fn(DualScalar) -> Result<DualScalar>, x: f64) -> Result<f64> {
    Ok(f(DualScalar::variable(x))?.du)
}

/// Gradient of `f` at `x`, seeding one nilpotent direction per variable.
pub fn gradient(f: impl Fn(&[MultiDualScalar]) -> MultiDualScalar, x: &[f64]) -> Vec<f64> {
    let vars = MultiDualScalar::variables(x);
    f(&vars).gradient(x.len())
}

/// [`gradient`] for programs that can hit a domain error.
pub fn try_gradient(
    f: impl Fn(&[MultiDualScalar]) -> Result<MultiDualScalar>,
    x: &[f64],
) -> Result<Vec<f64>> {
    let vars = MultiDualScalar::variables(x);
    Ok(f(&vars)?.gradient(x.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_at_two() {
        let c = DualScalar::variable(2.0).powu(3);
        assert_eq!((c.re, c.du), (8.0, 12.0));
        let m = DualScalar::variable(2.0);
        let c = m * m * m;
        assert_eq!((c.re, c.du), (8.0, 12.0));
    }

    #[test]
    fn simple_derivatives() {
        assert_eq!(derivative(|x| x, 1.7), 1.0);
        assert_eq!(derivative(|x| x * x, 3.0), 6.0);
        assert_eq!(derivative(|_| DualScalar::constant(4.0), 3.0), 0.0);
        let s = DualScalar::variable(0.0).sin();
        assert_eq!((s.re, s.du), (0.0, 1.0));
    }

    #[test]
    fn gradient_example() {
        let g = gradient(|v| v[0].clone() * v[1].clone() + v[0].sin(), &[0.0, 2.0]);
        assert_eq!(g, vec![3.0, 0.0]);
    }

    #[test]
    fn domain_errors_carry_value() {
        let x = DualScalar::variable(-1.0);
        assert_eq!(x.try_ln(), Err(PgaError::Domain { op: "ln", value: -1.0 }));
        assert!(x.try_sqrt().is_err());
        assert!(DualScalar::variable(0.0).try_sqrt().is_err());
        assert_eq!(DualScalar::constant(0.0).try_sqrt().unwrap().re, 0.0);
        let zero = DualScalar::constant(0.0);
        assert!(x.checked_div(&zero).is_err());
        assert!(x.try_powf(0.5).is_err());
        assert_eq!(x.try_powi(-2).unwrap().re, 1.0);
        assert!(try_derivative(|x| x.try_ln(), 0.0).is_err());
    }

    #[test]
    fn real_powers() {
        let x = DualScalar::variable(4.0);
        let r = x.try_powf(0.5).unwrap();
        assert_eq!((r.re, r.du), (2.0, 0.25));
        let y = DualScalar::variable(2.0);
        // d/dx x^x = x^x (ln x + 1)
        let r = y.try_pow(&y).unwrap();
        assert!((r.du - 4.0 * (2f64.ln() + 1.0)).abs() < 1e-14);
    }
}
