use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use pga::autodiff::Expr;
use pga::dynamics::{simulate_strided, RigidBodyState};
use pga::kernel::{pga2, pga3, Algebra, AlgebraDescriptor, Blade};
use pga::pga3d::{
    closure_error, dihedral_mirrors, kaleidoscope_orbit, motor_from_screw, point3, projective_closure_error,
    Element3, Point3,
};
use pga::verify::{cayley_table, reference_table_2d, run_suite_2d, run_suite_3d, REFERENCE_LABELS_2D};
use pga::PgaError;

use crate::args::{CayleyArgs, CheckArgs, Dim, DiffArgs, Format, Labels, OrbitArgs, ScrewArgs, TopArgs};
use crate::specs::{finite_xyz, inertia, parse_body, parse_point, AxisSpec, VelocitySpec};
use crate::CliError;

/// The orbit closes when `(ab)^k` is within this of `+-1`.
const CLOSURE_TOL: f64 = 1e-12;

fn meta(command: &str, params: Value) -> Value {
    json!({
        "tool": "pga",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "params": params,
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn write_stdout(text: &str) -> Result<(), CliError> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

/// The main artifact goes to `--out` when given, else to stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(CliError::from),
        None => write_stdout(text),
    }
}

/// A summary next to a streamed artifact: stdout when the artifact went to
/// a file, stderr otherwise so the two never interleave.
fn emit_summary(out: Option<&Path>, summary: &Value) -> Result<(), CliError> {
    let text = pretty(summary);
    match out {
        Some(_) => write_stdout(&text),
        None => {
            eprint!("{text}");
            Ok(())
        }
    }
}

fn algebra(dim: Dim, corrupt: bool) -> Arc<Algebra> {
    match (dim, corrupt) {
        (Dim::Two, false) => pga2(),
        (Dim::Three, false) => pga3(),
        (d, true) => {
            let n = if d == Dim::Two { 2 } else { 3 };
            let desc = AlgebraDescriptor::euclidean_pga(n).expect("valid signature");
            Arc::new(Algebra::with_flipped_sign(desc, Blade(0b010), Blade(0b100)))
        }
    }
}

pub fn cayley(a: &CayleyArgs) -> Result<(), CliError> {
    let alg = algebra(a.algebra, false);
    let labels = a.labels.unwrap_or(match a.algebra {
        Dim::Two => Labels::Reference,
        Dim::Three => Labels::Canonical,
    });
    let (names, table): (Vec<String>, _) = match labels {
        Labels::Reference if a.algebra == Dim::Three => {
            return Err(CliError::Usage("reference labels exist only for the 2d table".into()))
        }
        Labels::Reference => (REFERENCE_LABELS_2D.iter().map(|s| s.to_string()).collect(), reference_table_2d(&alg)),
        Labels::Canonical => (alg.blades().iter().map(|b| b.name()).collect(), cayley_table(&alg)),
    };
    let text = match a.format {
        Some(Format::Json) => pretty(&json!({
            "meta": meta("cayley", json!({
                "algebra": a.algebra.name(),
                "labels": if labels == Labels::Reference { "reference" } else { "canonical" },
            })),
            "labels": names,
            "table": table,
        })),
        Some(Format::Csv) => {
            let mut s = String::new();
            s.push_str(&format!(",{}\n", names.join(",")));
            for (n, row) in names.iter().zip(&table) {
                s.push_str(&format!("{n},{}\n", row.join(",")));
            }
            s
        }
        None => {
            let width = names.iter().chain(table.iter().flatten()).map(|s| s.len()).max().unwrap_or(1);
            let mut s = format!("{:>width$} |", "");
            for n in &names {
                s.push_str(&format!(" {n:>width$}"));
            }
            s.push('\n');
            s.push_str(&"-".repeat(width + 2 + names.len() * (width + 1)));
            s.push('\n');
            for (n, row) in names.iter().zip(&table) {
                s.push_str(&format!("{n:>width$} |"));
                for c in row {
                    s.push_str(&format!(" {c:>width$}"));
                }
                s.push('\n');
            }
            s
        }
    };
    emit(a.out.as_deref(), &text)
}

pub fn check(a: &CheckArgs) -> Result<(), CliError> {
    let trials = a.trial_count();
    let alg = algebra(a.dim, a.corrupt);
    let report = match a.dim {
        Dim::Two => run_suite_2d(&alg, trials, a.seed),
        Dim::Three => run_suite_3d(&alg, trials, a.seed),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut params = json!({ "dim": a.dim.name(), "trials": trials, "seed": a.seed });
    if a.corrupt {
        params["corrupted"] = json!(true);
    }
    let failed = report.failed_rows();
    let doc = json!({
        "meta": meta("check", params),
        "passed": report.passed(),
        "failed_rows": failed,
        "report": report,
    });
    emit(a.out.as_deref(), &pretty(&doc))?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("check {} failed rows: {}", a.dim.name(), failed.join(", "))))
    }
}

pub fn orbit(a: &OrbitArgs) -> Result<(), CliError> {
    let k = a.k;
    let [x, y, z] = finite_xyz("point", &a.point)?;
    let theta = std::f64::consts::PI / k as f64;
    let (m1, m2) = dihedral_mirrors(theta);
    let orbit = kaleidoscope_orbit(&m1, &m2, point3(x, y, z).mv(), 4 * k as usize + 4)
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let points: Vec<[f64; 3]> = orbit
        .into_iter()
        .filter_map(|mv| Point3::from_mv(mv).ok().and_then(|p| p.xyz()))
        .collect();
    let closure = projective_closure_error(&m1, &m2, k);
    let literal = closure_error(&m1, &m2, k);
    let size = points.len();
    let passed = size == 2 * k as usize && closure < CLOSURE_TOL;
    let doc = json!({
        "meta": meta("orbit", json!({ "k": k, "point": [x, y, z] })),
        "theta": theta,
        "size": size,
        "expected_size": 2 * k,
        "closure_error": closure,
        "literal_closure_error": literal,
        "closure_tolerance": CLOSURE_TOL,
        "passed": passed,
        "points": points,
    });
    emit(a.out.as_deref(), &pretty(&doc))?;
    if passed {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "orbit {k}: size {size}, closure error {closure:e}"
        )))
    }
}

pub fn screw(a: &ScrewArgs) -> Result<(), CliError> {
    if !a.angle.is_finite() || !a.pitch.is_finite() {
        return Err(CliError::Usage("angle and pitch must be finite".into()));
    }
    let spec = AxisSpec::parse(&a.axis)?;
    let axis = spec.line()?;
    let [x, y, z] = finite_xyz("point", &a.point)?;
    let p = point3(x, y, z);
    let n = a.samples as usize;
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let s = a.angle * i as f64 / n as f64;
        let m = motor_from_screw(&axis, s, a.pitch).map_err(|e| CliError::Failed(e.to_string()))?;
        let q = m
            .transform_point(&p)
            .ok_or_else(|| CliError::Failed("transported point became ideal".into()))?;
        rows.push((s, q));
    }
    let (dir, _) = axis.plucker();
    let (first, last) = (rows[0].1, rows[n].1);
    let advance: f64 = (0..3).map(|i| (last[i] - first[i]) * dir[i]).sum();
    let params = json!({
        "axis": spec,
        "angle": a.angle,
        "pitch": a.pitch,
        "samples": n,
        "point": [x, y, z],
    });
    let text = match a.format {
        Format::Csv => {
            let mut s = String::from("i,angle,x,y,z\n");
            for (i, (t, q)) in rows.iter().enumerate() {
                s.push_str(&format!("{i},{t:?},{:?},{:?},{:?}\n", q[0], q[1], q[2]));
            }
            s
        }
        Format::Json => pretty(&json!({
            "meta": meta("screw", params.clone()),
            "path": rows.iter().map(|(t, q)| json!({ "angle": t, "xyz": q })).collect::<Vec<_>>(),
        })),
    };
    emit(a.out.as_deref(), &text)?;
    emit_summary(
        a.out.as_deref(),
        &json!({
            "meta": meta("screw", params),
            "axial_advance": advance,
            "expected_advance": a.angle * a.pitch,
        }),
    )
}

pub fn top(a: &TopArgs) -> Result<(), CliError> {
    let body = parse_body(&a.body)?;
    let map = inertia(&body)?;
    let omega = VelocitySpec::parse(&a.omega)?.coords();
    if !omega.iter().all(|v| v.is_finite()) {
        return Err(CliError::Usage("omega must be finite".into()));
    }
    let s0 = RigidBodyState::from_velocity(omega);
    let tr = simulate_strided(&s0, &map, a.dt, a.steps as usize, a.stride as usize).map_err(|e| match e {
        PgaError::NonFinite { .. } => CliError::Failed(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    let text = match a.format {
        Format::Csv => tr.to_csv(),
        Format::Json => {
            let mut s = tr.to_json();
            s.push('\n');
            s
        }
    };
    emit(a.out.as_deref(), &text)?;
    let first = &tr.samples[0];
    let last = tr.last().expect("a trajectory has its initial sample");
    emit_summary(
        a.out.as_deref(),
        &json!({
            "meta": meta("top", json!({
                "body": body,
                "omega": omega,
                "dt": a.dt,
                "steps": a.steps,
                "stride": a.stride,
            })),
            "samples": tr.samples.len(),
            "t_final": last.t,
            "initial_energy": first.energy,
            "max_energy_drift": tr.max_energy_drift(),
            "max_momentum_drift": tr.max_momentum_drift(),
        }),
    )
}

pub fn diff(a: &DiffArgs) -> Result<(), CliError> {
    let expr = Expr::parse(&a.expression).map_err(|e| CliError::Usage(format!("expression: {e}")))?;
    let point = parse_point(&a.at, &expr.variables())?;
    let g = expr.gradient_at(&point).map_err(|e| CliError::Usage(e.to_string()))?;
    let doc = json!({
        "meta": meta("diff", json!({ "expression": a.expression, "point": point })),
        "value": g.value,
        "variables": g.variables,
        "gradient": g.gradient,
    });
    emit(a.out.as_deref(), &pretty(&doc))
}
