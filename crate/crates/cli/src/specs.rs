//! JSON literals for axes, bodies, velocities and points.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use pga::dynamics::InertiaMap;
use pga::pga3d::{line_through, point3, Line3};

use crate::CliError;

/// Parse `text` as JSON, or the contents of a file when it starts with `@`.
pub fn json_arg<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, CliError> {
    let owned;
    let src = match text.strip_prefix('@') {
        Some(path) => {
            owned = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {what} file {path}: {e}")))?;
            owned.as_str()
        }
        None => text,
    };
    serde_json::from_str(src).map_err(|e| CliError::Usage(format!("invalid {what}: {e}")))
}

pub fn finite_xyz(what: &str, text: &str) -> Result<[f64; 3], CliError> {
    let v: [f64; 3] = json_arg(what, text)?;
    if v.iter().all(|c| c.is_finite()) {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("{what} must be finite")))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    pub point: [f64; 3],
    pub direction: [f64; 3],
}

impl AxisSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let unit = |i: usize| {
            let mut d = [0.0; 3];
            d[i] = 1.0;
            AxisSpec {
                point: [0.0; 3],
                direction: d,
            }
        };
        match text {
            "x" => Ok(unit(0)),
            "y" => Ok(unit(1)),
            "z" => Ok(unit(2)),
            _ => json_arg("axis", text),
        }
    }

    /// Normalized line through `point` running along `direction`.
    pub fn line(&self) -> Result<Line3, CliError> {
        let [x, y, z] = self.point;
        let [a, b, c] = self.direction;
        let bad = || CliError::Usage("axis needs a finite point and a nonzero direction".into());
        if !self.point.iter().chain(&self.direction).all(|v| v.is_finite()) {
            return Err(bad());
        }
        line_through(&point3(x, y, z), &point3(x + a, y + b, z + c))
            .proper()
            .ok_or_else(bad)?
            .normalize()
            .map_err(|_| bad())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointMass {
    pub mass: f64,
    pub position: [f64; 3],
}

/// Unit masses at the six unit axis points.
pub fn octahedron() -> Vec<PointMass> {
    let mut v = Vec::new();
    for i in 0..3 {
        for s in [1.0, -1.0] {
            let mut p = [0.0; 3];
            p[i] = s;
            v.push(PointMass {
                mass: 1.0,
                position: p,
            });
        }
    }
    v
}

pub fn parse_body(text: &str) -> Result<Vec<PointMass>, CliError> {
    let masses = if text == "octahedron" {
        octahedron()
    } else {
        json_arg::<Vec<PointMass>>("body", text)?
    };
    if masses.is_empty() {
        return Err(CliError::Usage("body has no masses".into()));
    }
    Ok(masses)
}

pub fn inertia(masses: &[PointMass]) -> Result<InertiaMap, CliError> {
    let particles: Vec<_> = masses
        .iter()
        .map(|m| (m.mass, point3(m.position[0], m.position[1], m.position[2])))
        .collect();
    InertiaMap::from_point_masses(&particles).map_err(|e| CliError::Usage(format!("invalid body: {e}")))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum VelocitySpec {
    Coords([f64; 6]),
    Angular { angular: [f64; 3] },
}

impl VelocitySpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        json_arg("omega", text)
    }

    /// Body velocity bivector coordinates [w01, w02, w03, w23, w31, w12].
    pub fn coords(&self) -> [f64; 6] {
        match *self {
            VelocitySpec::Coords(c) => c,
            // angular velocity w corresponds to -w/2 on the euclidean bivectors
            VelocitySpec::Angular { angular: [x, y, z] } => [0.0, 0.0, 0.0, -0.5 * x, -0.5 * y, -0.5 * z],
        }
    }
}

/// `x=1,y=2`, a JSON object, or a single number bound to the only variable.
pub fn parse_point(text: &str, variables: &[String]) -> Result<BTreeMap<String, f64>, CliError> {
    let text = text.trim();
    if text.starts_with('{') {
        return json_arg("point", text);
    }
    if let Ok(v) = text.parse::<f64>() {
        return match variables {
            [] => Ok(BTreeMap::new()),
            [name] => Ok(BTreeMap::from([(name.clone(), v)])),
            _ => Err(CliError::Usage(format!(
                "a bare number needs a single variable, the expression has {}",
                variables.join(", ")
            ))),
        };
    }
    let mut out = BTreeMap::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected name=value, got {part:?}")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("not a number: {:?}", v.trim())))?;
        out.insert(k.trim().to_owned(), v);
    }
    Ok(out)
}
