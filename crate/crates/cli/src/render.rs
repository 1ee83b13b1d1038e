//! Plain-text rendering of a report as indented `key: value` lines.

use serde_json::Value;

use tanglekit_core::Report;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        Value::Array(a)
            if a.iter()
                .all(|x| matches!(x, Value::Number(_) | Value::Bool(_))) =>
        {
            Some(format!(
                "[{}]",
                a.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, x, indent + 2);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_value(out, x, indent + 2);
                    }
                }
            }
        }
        Value::String(s) => {
            for line in s.lines() {
                out.push_str(&format!("{pad}{line}\n"));
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

pub fn text(report: &Report) -> String {
    let mut out = format!("{}: {}", report.command, report.status);
    if let Some(r) = &report.reason {
        out.push_str(&format!(" ({r})"));
    }
    out.push('\n');
    if !report.results.is_null() {
        match scalar(&report.results) {
            Some(s) => out.push_str(&format!("{s}\n")),
            None => write_value(&mut out, &report.results, 0),
        }
    }
    if let Some(v) = &report.verification {
        out.push_str(&format!(
            "verification: {} instances, {} verified, {} failed, {} cap-exceeded, {} ambiguous, {} not requested\n",
            v.instances, v.verified, v.failed, v.cap_exceeded, v.ambiguous, v.not_requested
        ));
    }
    out
}
