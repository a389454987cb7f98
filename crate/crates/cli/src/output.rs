//! Rendering of command results as text, JSON, CSV or LaTeX.

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

/// Rows for CSV and LaTeX output. In LaTeX a table whose first column is
/// `k` is transposed: one row per quantity, one column per weight.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub caption: String,
}

impl Table {
    pub fn new(header: &[&str], caption: impl Into<String>) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            caption: caption.into(),
        }
    }

    pub fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }
}

pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub precision: Option<usize>,
    pub results: Value,
    pub stable: bool,
    pub text: String,
    pub table: Table,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "params": self.params,
                    "precision": self.precision,
                    "results": self.results,
                    "stable": self.stable,
                });
                serde_json::to_string_pretty(&v).expect("plain JSON values")
            }
            Format::Csv => csv_table(&self.table),
            Format::Latex => latex_table(&self.table),
        }
    }
}

fn csv_table(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.header).expect("in-memory write");
    for r in &t.rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_")
        .replace('^', "\\^{}")
        .replace('#', "\\#")
}

fn latex_table(t: &Table) -> String {
    let horizontal = t.header.first().is_some_and(|h| h == "k");
    let (head, body): (Vec<String>, Vec<Vec<String>>) = if horizontal {
        // transpose: first row lists k, the rest one quantity each
        let ks: Vec<String> = t.rows.iter().map(|r| r[0].clone()).collect();
        let body = (1..t.header.len())
            .map(|j| {
                std::iter::once(format!("${}$", t.header[j]))
                    .chain(t.rows.iter().map(|r| r[j].clone()))
                    .collect()
            })
            .collect();
        (std::iter::once("$k$".to_string()).chain(ks).collect(), body)
    } else {
        (
            t.header.iter().map(|h| latex_escape(h)).collect(),
            t.rows
                .iter()
                .map(|r| r.iter().map(|c| latex_escape(c)).collect())
                .collect(),
        )
    };
    let cols = head.len().max(1);
    let mut out = String::new();
    out.push_str("\\begin{table}[H]\\footnotesize\n\\begin{center}\n");
    out.push_str(&format!(
        "\\begin{{tabular}}{{|{}}}\\hline\n",
        "c|".repeat(cols)
    ));
    out.push_str(&head.join(" & "));
    out.push_str(" \\\\ \\hline\n");
    for r in body {
        out.push_str(&r.join(" & "));
        out.push_str(" \\\\ \\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out.push_str(&format!("\\caption{{{}}}\n", latex_escape(&t.caption)));
    out.push_str("\\end{center}\n\\end{table}\n");
    out
}
