use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{energy, momentum_space, step_rk4, InertiaMap, RigidBodyState, StateCoords};
use crate::error::{PgaError, Result};
use crate::pga3d::bivector_coords;

/// One recorded instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub g: [f64; 8],
    pub omega: [f64; 6],
    pub energy: f64,
    pub momentum: [f64; 6],
}

impl Sample {
    pub fn state(&self) -> RigidBodyState {
        RigidBodyState::from_coords(&StateCoords {
            g: self.g,
            omega: self.omega,
        })
    }
}

/// Samples in strictly increasing time.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
}

pub const CSV_HEADER: &str = "t,g0,g1,g2,g3,g4,g5,g6,g7,w01,w02,w03,w23,w31,w12,energy,m01,m02,m03,m23,m31,m12";

fn sample(t: f64, s: &RigidBodyState, a: &InertiaMap) -> Sample {
    let c = s.coords();
    Sample {
        t,
        g: c.g,
        omega: c.omega,
        energy: energy(s, a),
        momentum: bivector_coords(&momentum_space(s, a)),
    }
}

/// Integrate `n_steps` RK4 steps, recording every step.
pub fn simulate(state0: &RigidBodyState, a: &InertiaMap, dt: f64, n_steps: usize) -> Result<Trajectory> {
    simulate_strided(state0, a, dt, n_steps, 1)
}

/// Like [`simulate`] but recording only every `stride`-th step (and the last).
pub fn simulate_strided(
    state0: &RigidBodyState,
    a: &InertiaMap,
    dt: f64,
    n_steps: usize,
    stride: usize,
) -> Result<Trajectory> {
    if stride == 0 {
        return Err(PgaError::InvalidParameter("stride must be positive".into()));
    }
    let mut samples = Vec::with_capacity(n_steps / stride + 2);
    samples.push(sample(0.0, state0, a));
    let mut s = state0.clone();
    for step in 1..=n_steps {
        let t = step as f64 * dt;
        s = step_rk4(&s, a, dt).map_err(|e| match e {
            PgaError::NonFinite { .. } => PgaError::NonFinite { step, t },
            other => other,
        })?;
        if step % stride == 0 || step == n_steps {
            samples.push(sample(t, &s, a));
        }
    }
    Ok(Trajectory { samples })
}

impl Trajectory {
    pub fn last(&self) -> Option<&Sample> {
        self.samples.last()
    }

    /// `max |E(t) - E(0)| / |E(0)|` (absolute when `E(0) = 0`).
    pub fn max_energy_drift(&self) -> f64 {
        let Some(first) = self.samples.first() else {
            return 0.0;
        };
        let scale = if first.energy == 0.0 { 1.0 } else { first.energy.abs() };
        self.samples
            .iter()
            .map(|s| (s.energy - first.energy).abs() / scale)
            .fold(0.0, f64::max)
    }

    /// Largest coordinate change of the space momentum, relative to its
    /// initial largest coordinate (absolute when that is zero).
    pub fn max_momentum_drift(&self) -> f64 {
        let Some(first) = self.samples.first() else {
            return 0.0;
        };
        let m0 = first.momentum.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let scale = if m0 == 0.0 { 1.0 } else { m0 };
        self.samples
            .iter()
            .flat_map(|s| s.momentum.iter().zip(&first.momentum).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max)
            / scale
    }

    /// Shortest round-trip decimal form for every value.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 + self.samples.len() * 400);
        out.push_str(CSV_HEADER);
        out.push('\n');
        for s in &self.samples {
            let vals = std::iter::once(s.t)
                .chain(s.g)
                .chain(s.omega)
                .chain(std::iter::once(s.energy))
                .chain(s.momentum);
            for (i, v) in vals.enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v:?}");
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some(h) if h.trim() == CSV_HEADER => {}
            _ => {
                return Err(PgaError::Parse {
                    pos: 0,
                    msg: "missing trajectory CSV header".into(),
                })
            }
        }
        let mut samples = Vec::new();
        let mut pos = CSV_HEADER.len() + 1;
        for line in lines {
            let vals: Vec<f64> = line
                .split(',')
                .map(|v| v.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| PgaError::Parse {
                    pos,
                    msg: e.to_string(),
                })?;
            if vals.len() != 22 {
                return Err(PgaError::Parse {
                    pos,
                    msg: format!("expected 22 fields, found {}", vals.len()),
                });
            }
            samples.push(Sample {
                t: vals[0],
                g: std::array::from_fn(|i| vals[1 + i]),
                omega: std::array::from_fn(|i| vals[9 + i]),
                energy: vals[15],
                momentum: std::array::from_fn(|i| vals[16 + i]),
            });
            pos += line.len() + 1;
        }
        Ok(Self { samples })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trajectory serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| PgaError::Parse {
            pos: e.column(),
            msg: e.to_string(),
        })
    }
}
