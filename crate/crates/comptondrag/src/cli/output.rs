//! Deterministic CSV and JSON emission: fixed 12-significant-digit float
//! formatting, LF line endings, `#` metadata block with the tool version and
//! the full argument echo. Identical invocations produce byte-identical
//! output.

use std::io::Write;

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Text(String),
    Empty,
}

/// A result table plus the provenance needed to reproduce it.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn numeric(columns: Vec<&'static str>, rows: Vec<Vec<f64>>) -> Self {
        Table {
            columns,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(Cell::Num).collect())
                .collect(),
        }
    }
}

/// 12 significant digits, scientific, locale-free; -0 normalized to 0.
pub fn fmt_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

pub fn write_csv<W: Write>(w: &mut W, argv: &[String], table: &Table) -> std::io::Result<()> {
    writeln!(w, "# comptondrag {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(w, "# argv: {}", argv.join(" "))?;
    writeln!(w, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let fields: Vec<String> = row
            .iter()
            .map(|c| match c {
                Cell::Num(x) => fmt_float(*x),
                Cell::Text(s) => s.clone(),
                Cell::Empty => String::new(),
            })
            .collect();
        writeln!(w, "{}", fields.join(","))?;
    }
    Ok(())
}

pub fn write_json<W: Write>(w: &mut W, argv: &[String], table: &Table) -> std::io::Result<()> {
    let rows: Vec<Vec<serde_json::Value>> = table
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    Cell::Num(x) => serde_json::json!(x),
                    Cell::Text(s) => serde_json::json!(s),
                    Cell::Empty => serde_json::Value::Null,
                })
                .collect()
        })
        .collect();
    // serde_json's preserve_order feature keeps this insertion order stable.
    let doc = serde_json::json!({
        "tool": "comptondrag",
        "version": env!("CARGO_PKG_VERSION"),
        "argv": argv,
        "columns": table.columns,
        "rows": rows,
    });
    writeln!(w, "{doc}")?;
    Ok(())
}
