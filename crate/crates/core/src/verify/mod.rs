//! Randomized oracle suites for the formula tables and the Cayley table.
//!
//! Every row draws from its own ChaCha8 stream (`seed`, row index), so
//! results do not depend on row order and are reproducible bit for bit.

mod cayley;
mod suite2;
mod suite3;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use cayley::{cayley_table, reference_table_2d, REFERENCE_LABELS_2D, REFERENCE_TABLE_2D};
pub use suite2::run_suite_2d;
pub use suite3::run_suite_3d;

use crate::error::Result;

pub const DEFAULT_SEED: u64 = 20_190_101;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowResult {
    pub name: String,
    pub trials: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// First error raised by the code under test, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub algebra: String,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<RowResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failed_rows(&self) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.name.as_str())
            .collect()
    }

    pub fn row(&self, name: &str) -> Option<&RowResult> {
        self.rows.iter().find(|r| r.name == name)
    }
}

pub(crate) struct RowRunner {
    seed: u64,
    trials: usize,
    rows: Vec<RowResult>,
}

impl RowRunner {
    pub(crate) fn new(seed: u64, trials: usize) -> Self {
        Self {
            seed,
            trials,
            rows: Vec::new(),
        }
    }

    /// Run `trial` `trials` times; each returns the error of one case.
    pub(crate) fn row(
        &mut self,
        name: &str,
        tolerance: f64,
        mut trial: impl FnMut(&mut ChaCha8Rng) -> Result<f64>,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.rows.len() as u64);
        let mut max_error: f64 = 0.0;
        let mut failure = None;
        for _ in 0..self.trials {
            match trial(&mut rng) {
                Ok(e) if e.is_finite() => max_error = max_error.max(e),
                Ok(e) => {
                    max_error = f64::INFINITY;
                    failure.get_or_insert_with(|| format!("non-finite error {e}"));
                }
                Err(e) => {
                    max_error = f64::INFINITY;
                    failure.get_or_insert_with(|| e.to_string());
                }
            }
        }
        self.rows.push(RowResult {
            name: name.to_owned(),
            trials: self.trials,
            max_error,
            tolerance,
            passed: max_error < tolerance,
            failure,
        });
    }

    pub(crate) fn finish(self, suite: &str, algebra: String) -> Report {
        Report {
            suite: suite.to_owned(),
            algebra,
            seed: self.seed,
            trials: self.trials,
            rows: self.rows,
        }
    }
}
