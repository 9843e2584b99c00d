//! Output emission: compact JSON lines by default, aligned tables with
//! --pretty. Everything written to stdout is deterministic for a given
//! command line and seed.

use serde_json::Value;

use crate::Cli;

pub fn emit(cli: &Cli, value: &Value) {
    if cli.pretty {
        let mut buf = String::new();
        render(value, 0, &mut buf);
        print!("{buf}");
    } else {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    }
}

fn render(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (key, val) in map {
                match val {
                    Value::Array(items) if is_object_table(items) => {
                        out.push_str(&format!("{}{key}:\n", pad(indent)));
                        render_table(items, indent + 2, out);
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{}{key}:\n", pad(indent)));
                        render(val, indent + 2, out);
                    }
                    Value::Array(_) => {
                        out.push_str(&format!("{}{key}: {}\n", pad(indent), inline(val)));
                    }
                    other => {
                        out.push_str(&format!("{}{key}: {}\n", pad(indent), inline(other)));
                    }
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad(indent), inline(other))),
    }
}

/// Arrays of flat objects with shared keys render as aligned tables.
fn is_object_table(items: &[Value]) -> bool {
    !items.is_empty()
        && items.iter().all(|v| {
            v.as_object()
                .is_some_and(|o| o.values().all(|x| !matches!(x, Value::Object(_))))
        })
}

fn render_table(items: &[Value], indent: usize, out: &mut String) {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for key in item.as_object().expect("table row").keys() {
            if !columns.contains(key) {
                columns.push(key.clone());
            }
        }
    }
    let mut rows: Vec<Vec<String>> = vec![columns.clone()];
    for item in items {
        let obj = item.as_object().expect("table row");
        rows.push(
            columns
                .iter()
                .map(|c| obj.get(c).map(inline).unwrap_or_default())
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..columns.len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(&format!("{}{}\n", pad(indent), line.join("  ").trim_end()));
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn pad(indent: usize) -> String {
    " ".repeat(indent)
}
