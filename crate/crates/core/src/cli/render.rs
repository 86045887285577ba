use std::fmt::Write;

use serde_json::{json, Value};

use super::{decomposition_json, pretty, Format};
use crate::extremal::ExtremalFamily;
use crate::forms;
use crate::identity::{reports_to_text, IdentityReport};
use crate::moonshine::Decomposition;
use crate::series::json::{int_to_json, series_to_json, JsonCoefficient};
use crate::series::{IntSeries, LaurentSeries, QInt};

fn exp_label(n: i64) -> String {
    format!("q^{}", 2 * n)
}

pub(super) fn series(s: &IntSeries, format: Format) -> String {
    match format {
        Format::Json => pretty(&series_to_json(s)),
        Format::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            for (e, c) in s.terms() {
                let _ = writeln!(out, "{},{c}", 2 * e);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (e, c) in s.terms() {
                let _ = writeln!(out, "{:>6}  {c}", exp_label(e));
            }
            let _ = writeln!(out, "  + O(q^{})", 2 * (s.order() + 1));
            out
        }
    }
}

fn polys_json<C: JsonCoefficient>(v: &[C]) -> Vec<Value> {
    v.iter().map(JsonCoefficient::to_json).collect()
}

pub(super) fn family_value(f: &ExtremalFamily) -> Value {
    json!({
        "k": f.k(),
        "order": 2 * f.order(),
        "g0_poly": f.g0_poly().to_json(),
        "symfuncs": polys_json(f.symfuncs()),
        "allowed_count": f.allowed_count().ok().as_ref().map(int_to_json),
        "series": series_to_json(f.series()),
    })
}

pub(super) fn family(f: &ExtremalFamily, format: Format) -> String {
    let allowed = f.allowed_count().ok();
    match format {
        Format::Json => pretty(&family_value(f)),
        Format::Csv => poly_series_csv(f.series()),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "k = {}", f.k());
            let _ = writeln!(out, "g0(x) = {}", f.g0_poly());
            for (m, e) in f.symfuncs().iter().enumerate() {
                let _ = writeln!(out, "e_{} = {e}", m + 1);
            }
            if let Some(a) = allowed {
                let _ = writeln!(out, "allowed q^0 values: {a}");
            }
            for (e, c) in f.series().terms() {
                let _ = writeln!(out, "{:>6}  {c}", exp_label(e));
            }
            let _ = writeln!(out, "  + O(q^{})", 2 * (f.order() + 1));
            out
        }
    }
}

fn poly_series_csv(s: &LaurentSeries<crate::series::IntPoly>) -> String {
    let mut out = String::from("exponent,degree,coefficient\n");
    for (e, p) in s.terms() {
        for (d, c) in p.coeffs().iter().enumerate() {
            let _ = writeln!(out, "{},{d},{c}", 2 * e);
        }
    }
    out
}

pub(super) fn roots(k: u32, target: &QInt, roots: &[QInt], format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "k": k,
            "target": int_to_json(target),
            "roots": roots.iter().map(int_to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("root\n");
            for r in roots {
                let _ = writeln!(out, "{r}");
            }
            out
        }
        Format::Text => {
            let list: Vec<String> = roots.iter().map(ToString::to_string).collect();
            format!("g0(x) = {target}: x in [{}]\n", list.join(", "))
        }
    }
}

pub(super) fn decompositions(items: &[(Option<i64>, Decomposition)], format: Format) -> String {
    match format {
        Format::Json => pretty(&Value::Array(items.iter().map(|(e, d)| decomposition_json(*e, d)).collect())),
        Format::Csv => {
            let mut out = String::from("exponent,coefficient,dimension,multiplicity\n");
            for (e, d) in items {
                let e = e.map(|e| e.to_string()).unwrap_or_default();
                for (dim, m) in &d.terms {
                    let _ = writeln!(out, "{e},{},{dim},{m}", d.target);
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (e, d) in items {
                match e {
                    Some(e) => {
                        let _ = writeln!(out, "q^{e}: {d}");
                    }
                    None => {
                        let _ = writeln!(out, "{d}");
                    }
                }
            }
            out
        }
    }
}

pub(super) fn reports(reps: &[IdentityReport], format: Format) -> String {
    let all_pass = reps.iter().all(|r| r.all_pass);
    match format {
        Format::Json => pretty(&json!({
            "all_pass": all_pass,
            "reports": reps.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("identity,i,lhs,rhs,pass\n");
            for r in reps {
                for row in &r.rows {
                    let _ = writeln!(out, "\"{}\",{},{},{},{}", r.identity, row.i, row.lhs, row.rhs, row.pass);
                }
            }
            out
        }
        Format::Text => {
            let mut out = reports_to_text(reps);
            let passed = reps.iter().filter(|r| r.all_pass).count();
            let _ = writeln!(out, "{passed}/{} identities pass", reps.len());
            out
        }
    }
}

pub(super) fn catalog(format: Format) -> String {
    match format {
        Format::Csv => forms::catalog_csv(),
        Format::Json => pretty(&Value::Array(
            forms::catalog()
                .iter()
                .map(|r| json!({"name": r.name, "coxeter_h": r.coxeter_h, "massless": r.massless}))
                .collect(),
        )),
        Format::Text => {
            let mut out = format!("{:<10} {:>3} {:>8}\n", "name", "h", "massless");
            for r in forms::catalog() {
                let _ = writeln!(out, "{:<10} {:>3} {:>8}", r.name, r.coxeter_h, r.massless);
            }
            out
        }
    }
}
