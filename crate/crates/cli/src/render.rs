//! Human-readable rendering of a JSON report. There is no separate human
//! code path: every report is built as JSON first.

use std::fmt::Write;

use serde_json::Value;

pub fn human(v: &Value) -> String {
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("unknown".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::Array(r) if r.iter().all(|y| !y.is_object() && !y.is_array()))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn walk(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}[{i}]").unwrap();
                        walk(x, depth + 1, out);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_objects_indent() {
        let s = human(&json!({"a": 1, "b": {"c": [1, 2], "d": null}}));
        assert_eq!(s, "a: 1\nb:\n  c: [1, 2]\n  d: unknown\n");
    }

    #[test]
    fn arrays_of_objects_are_numbered() {
        let s = human(&json!([{"x": true}, {"x": false}]));
        assert_eq!(s, "[0]\n  x: true\n[1]\n  x: false\n");
    }
}
