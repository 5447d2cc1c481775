use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::DualNumber;

/// `re + sum_i du[i] eps_i` with every `eps_i eps_j = 0`.
///
/// Payload vectors of different lengths are treated as zero-padded, so
/// constants can carry an empty payload.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct MultiDualScalar {
    pub re: f64,
    pub du: Vec<f64>,
}

impl MultiDualScalar {
    pub fn new(re: f64, du: Vec<f64>) -> Self {
        Self { re, du }
    }

    /// `x_i + eps_i` for each coordinate.
    pub fn variables(x: &[f64]) -> Vec<Self> {
        (0..x.len())
            .map(|i| {
                let mut du = vec![0.0; x.len()];
                du[i] = 1.0;
                Self { re: x[i], du }
            })
            .collect()
    }

    /// Payload padded or cut to `n` entries.
    pub fn gradient(&self, n: usize) -> Vec<f64> {
        let mut g = self.du.clone();
        g.resize(n, 0.0);
        g
    }

    fn zip(&self, r: &Self, f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        let n = self.du.len().max(r.du.len());
        (0..n)
            .map(|i| {
                let a = self.du.get(i).copied().unwrap_or(0.0);
                let b = r.du.get(i).copied().unwrap_or(0.0);
                f(a, b)
            })
            .collect()
    }
}

impl DualNumber for MultiDualScalar {
    fn constant(c: f64) -> Self {
        Self {
            re: c,
            du: Vec::new(),
        }
    }

    fn re(&self) -> f64 {
        self.re
    }

    fn chain(&self, f: f64, slope: f64) -> Self {
        Self {
            re: f,
            du: self.du.iter().map(|d| slope * d).collect(),
        }
    }

    fn has_payload(&self) -> bool {
        self.du.iter().any(|d| *d != 0.0)
    }
}

impl Add for MultiDualScalar {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        let du = self.zip(&r, |a, b| a + b);
        Self::new(self.re + r.re, du)
    }
}

impl Sub for MultiDualScalar {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        let du = self.zip(&r, |a, b| a - b);
        Self::new(self.re - r.re, du)
    }
}

impl Mul for MultiDualScalar {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)] // product rule
    fn mul(self, r: Self) -> Self {
        let (x, y) = (self.re, r.re);
        let du = self.zip(&r, |a, b| x * b + a * y);
        Self::new(x * y, du)
    }
}

/// IEEE division; use [`DualNumber::checked_div`] to reject zero divisors.
impl Div for MultiDualScalar {
    type Output = Self;
    fn div(self, r: Self) -> Self {
        let (x, y) = (self.re, r.re);
        let inv = 1.0 / y;
        let du = self.zip(&r, |a, b| (a * y - x * b) * inv * inv);
        Self::new(x * inv, du)
    }
}

impl Neg for MultiDualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, self.du.iter().map(|d| -d).collect())
    }
}

impl From<f64> for MultiDualScalar {
    fn from(c: f64) -> Self {
        Self::constant(c)
    }
}
