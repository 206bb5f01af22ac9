//! The report envelope and its three renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commands::Payload;
use crate::request::{Format, Request};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub request: Request,
    /// How list entries in `result` are ordered.
    pub ordering: String,
    pub result: Payload,
}

pub fn ordering_for(command: &str) -> &'static str {
    match command {
        "roots" => "ranks ascending",
        "grade" => "grades ascending",
        "monge" => "ranks ascending; Σ lexicographic by 1-based index",
        "cohomology" => "W^q_Σ by reflection word",
        "realize" => "basis by degree then label; brackets by basis index pair",
        "mc" => "coordinates in exponential-coordinate order",
        "sym" => "basis by grade; grades ascending",
        "reproduce-tables" => "tables in fixed order: w2_a, w2_c, w2_b, w2_d, w2_exceptional, h2_final, symmetry_grades",
        _ => "",
    }
}

impl Report {
    pub fn new(request: Request, result: Payload) -> Self {
        Report {
            tool: "monge".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            ordering: ordering_for(&request.command).into(),
            request,
            result,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Markdown => {
                let v = serde_json::to_value(&self.result).expect("reports serialize");
                let mut out = format!("# monge {}\n\n", self.request.command);
                markdown(&v, 0, &mut out);
                if let Payload::Tables { tables } = &self.result {
                    for t in tables.iter().filter(|t| !t.passed) {
                        out.push_str(&format!("\n## diff: {}\n\n```diff\n{}\n```\n", t.name, t.diff.join("\n")));
                    }
                }
                out
            }
            Format::Text => {
                let v = serde_json::to_value(&self.result).expect("reports serialize");
                let mut out = String::new();
                text(&v, 0, &mut out);
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| scalar(y).is_some() && !y.is_array()))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Object(m) if m.values().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "{{{}}}",
            m.iter().map(|(k, x)| format!("{k}: {}", scalar(x).unwrap())).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

/// A scalar that fits on one line; longer arrays get their own section.
fn inline(v: &Value) -> Option<String> {
    scalar(v).filter(|s| !v.is_array() || s.chars().count() <= 100)
}

/// Objects whose fields are all scalars, as a table.
fn table(rows: &[Value], out: &mut String) -> bool {
    let Some(Value::Object(first)) = rows.first() else {
        return false;
    };
    let keys: Vec<&String> = first.keys().collect();
    let ok = rows.iter().all(|r| {
        r.as_object().is_some_and(|m| m.keys().collect::<Vec<_>>() == keys && m.values().all(|x| scalar(x).is_some()))
    });
    if !ok {
        return false;
    }
    out.push_str(&format!("| {} |\n", keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(keys.len())));
    for r in rows {
        let m = r.as_object().unwrap();
        let cells: Vec<String> = keys.iter().map(|k| scalar(&m[k.as_str()]).unwrap().replace('|', "\\|")).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out.push('\n');
    true
}

fn markdown(v: &Value, depth: usize, out: &mut String) {
    let Value::Object(m) = v else {
        out.push_str(&format!("{}\n", scalar(v).unwrap_or_default()));
        return;
    };
    let heading = "#".repeat((depth + 2).min(6));
    for (k, x) in m {
        if let Some(s) = inline(x) {
            out.push_str(&format!("- **{k}**: {s}\n"));
        }
    }
    for (k, x) in m {
        if inline(x).is_some() {
            continue;
        }
        out.push_str(&format!("\n{heading} {k}\n\n"));
        match x {
            Value::Array(a) if a.iter().all(|x| scalar(x).is_some() && !x.is_object()) => {
                for s in a {
                    out.push_str(&format!("- {}\n", scalar(s).unwrap()));
                }
            }
            Value::Array(a) => {
                if !table(a, out) {
                    for item in a {
                        markdown(item, depth + 1, out);
                        out.push('\n');
                    }
                }
            }
            _ => markdown(x, depth + 1, out),
        }
    }
}

fn text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for item in a {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text(item, indent + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}
