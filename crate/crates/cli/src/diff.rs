//! Structural diffs of JSON reports. Volatile sections (manifests and
//! timings) are skipped so reruns of the same computation compare equal.

use serde_json::Value;

#[derive(Debug, PartialEq, Eq)]
pub struct DiffEntry {
    pub path: String,
    pub left: Option<String>,
    pub right: Option<String>,
}

const VOLATILE_KEYS: [&str; 2] = ["manifest", "timings"];

pub fn diff_reports(a: &Value, b: &Value) -> Vec<DiffEntry> {
    let mut out = Vec::new();
    walk("$", a, b, &mut out);
    out
}

fn walk(path: &str, a: &Value, b: &Value, out: &mut Vec<DiffEntry>) {
    match (a, b) {
        (Value::Object(ma), Value::Object(mb)) => {
            let keys: std::collections::BTreeSet<&String> =
                ma.keys().chain(mb.keys()).collect();
            for key in keys {
                if VOLATILE_KEYS.contains(&key.as_str()) {
                    continue;
                }
                let sub = format!("{path}.{key}");
                match (ma.get(key), mb.get(key)) {
                    (Some(x), Some(y)) => walk(&sub, x, y, out),
                    (Some(x), None) => out.push(DiffEntry {
                        path: sub,
                        left: Some(render(x)),
                        right: None,
                    }),
                    (None, Some(y)) => out.push(DiffEntry {
                        path: sub,
                        left: None,
                        right: Some(render(y)),
                    }),
                    (None, None) => unreachable!(),
                }
            }
        }
        (Value::Array(xa), Value::Array(xb)) => {
            let len = xa.len().max(xb.len());
            for i in 0..len {
                let sub = format!("{path}[{i}]");
                match (xa.get(i), xb.get(i)) {
                    (Some(x), Some(y)) => walk(&sub, x, y, out),
                    (Some(x), None) => out.push(DiffEntry {
                        path: sub,
                        left: Some(render(x)),
                        right: None,
                    }),
                    (None, Some(y)) => out.push(DiffEntry {
                        path: sub,
                        left: None,
                        right: Some(render(y)),
                    }),
                    (None, None) => unreachable!(),
                }
            }
        }
        _ => {
            if a != b {
                out.push(DiffEntry {
                    path: path.to_string(),
                    left: Some(render(a)),
                    right: Some(render(b)),
                });
            }
        }
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn identical_reports_diff_empty() {
        let a = json!({"x": 1, "rows": [{"k": "v"}], "timings": {"t": 0.5}});
        let b = json!({"x": 1, "rows": [{"k": "v"}], "timings": {"t": 9.9}});
        assert!(diff_reports(&a, &b).is_empty());
    }

    #[test]
    fn field_level_differences_are_reported() {
        let a = json!({"x": 1, "rows": [1, 2]});
        let b = json!({"x": 2, "rows": [1]});
        let d = diff_reports(&a, &b);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].path, "$.rows[1]");
        assert_eq!(d[1].path, "$.x");
    }
}
