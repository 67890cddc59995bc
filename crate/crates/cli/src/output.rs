//! Output rendering: versioned JSON, CSV, and standalone LaTeX.

use casselman::symbolics::QLaurent;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            "latex" => Some(Format::Latex),
            _ => None,
        }
    }
}

/// Wraps a command payload in the versioned envelope.
pub fn envelope(command: &str, payload: Value) -> Value {
    json!({
        "schema": 1,
        "command": command,
        "report": payload,
    })
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&headers.join(","));
    out.push('\n');
    for row in rows {
        let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// `s3*s2` as math: `s_{3}s_{2}`.
pub fn latex_word(word: &str) -> String {
    if word == "e" {
        return "e".to_string();
    }
    word.split('*')
        .map(|part| format!("s_{{{}}}", part.trim_start_matches('s')))
        .collect()
}

pub fn latex_qlaurent(p: &QLaurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (&e, &c) in p.0.iter().rev() {
        if first {
            if c < 0 {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mag = c.unsigned_abs();
        match (e, mag) {
            (0, m) => out.push_str(&m.to_string()),
            (e, m) => {
                if m != 1 {
                    out.push_str(&format!("{m}"));
                }
                if e == 1 {
                    out.push('q');
                } else {
                    out.push_str(&format!("q^{{{e}}}"));
                }
            }
        }
    }
    out
}

/// A full standalone document around one tabular body.
pub fn latex_document(column_spec: &str, header: &str, body_rows: &[String]) -> String {
    let mut out = String::new();
    out.push_str("\\documentclass{article}\n");
    out.push_str("\\usepackage{amssymb}\n");
    out.push_str("\\pagestyle{empty}\n");
    out.push_str("\\begin{document}\n");
    out.push_str(&format!("\\begin{{tabular}}{{{column_spec}}}\n"));
    out.push_str("\\hline\n");
    out.push_str(&format!("{header} \\\\\n\\hline\n"));
    for row in body_rows {
        out.push_str(&format!("{row} \\\\\n\\hline\n"));
    }
    out.push_str("\\end{tabular}\n");
    out.push_str("\\end{document}\n");
    out
}

/// Plain text wrapped so underscores and carets survive LaTeX.
pub fn latex_verbatim(s: &str) -> String {
    format!("\\texttt{{\\detokenize{{{s}}}}}")
}
