//! Check outcomes and the three output renderers.

use std::io::Write;

use serde_json::{json, Value};

use crate::settings::Settings;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: String,
    pub comparator: &'static str,
    pub measured: Value,
    pub expected: Value,
    pub tolerance: Option<f64>,
    pub pass: bool,
    pub witness: Option<Value>,
    pub error: Option<String>,
}

#[derive(Debug)]
pub struct ScenarioReport {
    pub id: &'static str,
    pub description: &'static str,
    pub claim: &'static str,
    pub checks: Vec<CheckOutcome>,
    pub runtime_ms: u128,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn errored(&self) -> bool {
        self.checks.iter().any(|c| c.error.is_some())
    }
}

pub fn complex_value(z: gft_core::Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn collision_value(w: &gft_core::CollisionWitness) -> Value {
    json!({
        "z1": complex_value(w.z1),
        "z2": complex_value(w.z2),
        "value": complex_value(w.value),
        "residual": w.residual,
        "separation": w.separation,
        "polished": w.polished,
    })
}

pub fn config_echo(s: &Settings) -> Value {
    json!({
        "degree": s.degree,
        "grid": {
            "r_max": s.grid.r_max,
            "radii": s.grid.radii,
            "angles": s.grid.angles,
            "refine": s.grid.refine,
        },
        "seed": s.seed,
    })
}

fn check_value(c: &CheckOutcome) -> Value {
    let mut v = json!({
        "id": c.id,
        "comparator": c.comparator,
        "measured": c.measured,
        "expected": c.expected,
        "tolerance": c.tolerance,
        "pass": c.pass,
    });
    let map = v.as_object_mut().expect("object literal");
    if let Some(w) = &c.witness {
        map.insert("witness".into(), w.clone());
    }
    if let Some(e) = &c.error {
        map.insert("error".into(), json!(e));
    }
    v
}

pub fn report_value(r: &ScenarioReport, config: &Value) -> Value {
    json!({
        "scenario": r.id,
        "description": r.description,
        "claim": r.claim,
        "config": config,
        "checks": r.checks.iter().map(check_value).collect::<Vec<_>>(),
        "passed": r.passed(),
        "errored": r.errored(),
        "runtime_ms": r.runtime_ms,
    })
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render_human(r: &ScenarioReport, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "== {} — {}", r.id, r.description)?;
    writeln!(out, "   claim: {}", r.claim)?;
    for c in &r.checks {
        if let Some(e) = &c.error {
            writeln!(out, "   ERR  {}: {e}", c.id)?;
            continue;
        }
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        let tol = c.tolerance.map(|t| format!(" (tol {t})")).unwrap_or_default();
        write!(
            out,
            "   {verdict} {}: {} {} {}{tol}",
            c.id,
            render_scalar(&c.measured),
            c.comparator,
            render_scalar(&c.expected)
        )?;
        match (&c.witness, c.pass) {
            (Some(w), false) => writeln!(out, " witness={w}")?,
            _ => writeln!(out)?,
        }
    }
    let (n, ok) = (r.checks.len(), r.checks.iter().filter(|c| c.pass).count());
    let verdict = if r.errored() {
        "ERROR"
    } else if r.passed() {
        "PASS"
    } else {
        "FAIL"
    };
    writeln!(out, "   result: {verdict} ({ok}/{n} checks, {} ms)", r.runtime_ms)?;
    Ok(())
}

pub fn write_checks_csv(reports: &[ScenarioReport], out: impl Write) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "scenario",
        "check",
        "comparator",
        "measured",
        "expected",
        "tolerance",
        "pass",
        "witness",
        "error",
    ])?;
    for r in reports {
        for c in &r.checks {
            w.write_record([
                r.id,
                &c.id,
                c.comparator,
                &render_scalar(&c.measured),
                &render_scalar(&c.expected),
                &c.tolerance.map(|t| t.to_string()).unwrap_or_default(),
                &c.pass.to_string(),
                &c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                c.error.as_deref().unwrap_or(""),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
