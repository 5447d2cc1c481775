use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::DualNumber;

/// `re + du eps` with `eps^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DualScalar {
    pub re: f64,
    pub du: f64,
}

impl DualScalar {
    pub const fn new(re: f64, du: f64) -> Self {
        Self { re, du }
    }

    /// `x + eps`: the seed for differentiating with respect to `x`.
    pub const fn variable(x: f64) -> Self {
        Self { re: x, du: 1.0 }
    }
}

impl DualNumber for DualScalar {
    fn constant(c: f64) -> Self {
        Self { re: c, du: 0.0 }
    }

    fn re(&self) -> f64 {
        self.re
    }

    fn chain(&self, f: f64, slope: f64) -> Self {
        Self {
            re: f,
            du: slope * self.du,
        }
    }

    fn has_payload(&self) -> bool {
        self.du != 0.0
    }
}

impl Add for DualScalar {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.re + r.re, self.du + r.du)
    }
}

impl Sub for DualScalar {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.re - r.re, self.du - r.du)
    }
}

impl Mul for DualScalar {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self::new(self.re * r.re, self.re * r.du + self.du * r.re)
    }
}

/// IEEE division; use [`DualNumber::checked_div`] to reject zero divisors.
impl Div for DualScalar {
    type Output = Self;
    fn div(self, r: Self) -> Self {
        let inv = 1.0 / r.re;
        Self::new(self.re * inv, (self.du * r.re - self.re * r.du) * inv * inv)
    }
}

impl Neg for DualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.du)
    }
}

impl Add<f64> for DualScalar {
    type Output = Self;
    fn add(self, r: f64) -> Self {
        Self::new(self.re + r, self.du)
    }
}

impl Mul<f64> for DualScalar {
    type Output = Self;
    fn mul(self, r: f64) -> Self {
        Self::new(self.re * r, self.du * r)
    }
}

impl From<f64> for DualScalar {
    fn from(c: f64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.re, self.du)
    }
}
