use serde_json::Value;
use vfpoly::verify::VerifyReport;
use vfpoly::Polyhedron;

use crate::Format;

pub fn polyhedron(poly: &Polyhedron, format: Format) {
    value(&serde_json::to_value(poly.record()).expect("serializable"), format);
}

/// JSON prints one line; table prints `key  value` pairs, one object per block.
pub fn value(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{v}"),
        Format::Table => match v {
            Value::Array(items) => {
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        println!();
                    }
                    pairs(item);
                }
            }
            other => pairs(other),
        },
    }
}

fn pairs(v: &Value) {
    let Value::Object(map) = v else {
        println!("{v}");
        return;
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (key, val) in map {
        let text = match val {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        println!("{key:<width$}  {text}");
    }
}

pub fn report(report: &VerifyReport) {
    for c in &report.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{mark} {}", c.name);
        } else {
            println!("{mark} {}: {}", c.name, c.detail);
        }
    }
    let failed = report.failures().count();
    println!("{}: {} checks, {} failed", report.suite, report.checks.len(), failed);
}
