//! Text renderings of canonical basis matrices.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use fock_core::{CanonicalBasisMatrix, FockKind, LaurentPoly, Partition};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
    Tex,
}

/// The serialised form of a matrix. Labels are comma-separated parts and
/// entries use the Laurent polynomial text grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEmission {
    pub kind: String,
    pub modulus: usize,
    pub core: String,
    pub weight: usize,
    pub generator_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

fn kind_name(kind: FockKind) -> &'static str {
    match kind {
        FockKind::A1 => "a1",
        FockKind::A2 => "a2",
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("bad partition label `{s}`"))
}

impl MatrixEmission {
    pub fn new(matrix: &CanonicalBasisMatrix, note: Option<String>) -> Self {
        MatrixEmission {
            kind: kind_name(matrix.kind).to_string(),
            modulus: matrix.modulus,
            core: matrix.core.to_string(),
            weight: matrix.weight,
            generator_version: env!("CARGO_PKG_VERSION").to_string(),
            note,
            rows: matrix.rows.iter().map(Partition::to_string).collect(),
            cols: matrix.cols.iter().map(Partition::to_string).collect(),
            entries: matrix.entries.iter().map(|row| row.iter().map(LaurentPoly::to_string).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<CanonicalBasisMatrix> {
        let kind = match self.kind.as_str() {
            "a1" => FockKind::A1,
            "a2" => FockKind::A2,
            other => bail!("unknown matrix kind `{other}`"),
        };
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.parse().with_context(|| format!("bad entry `{e}`"))).collect())
            .collect::<Result<Vec<Vec<LaurentPoly>>>>()?;
        if entries.len() != self.rows.len() || entries.iter().any(|r| r.len() != self.cols.len()) {
            bail!("entry grid does not match the labels");
        }
        Ok(CanonicalBasisMatrix {
            kind,
            modulus: self.modulus,
            core: parse_partition(&self.core)?,
            weight: self.weight,
            rows: self.rows.iter().map(|s| parse_partition(s)).collect::<Result<_>>()?,
            cols: self.cols.iter().map(|s| parse_partition(s)).collect::<Result<_>>()?,
            entries,
        })
    }
}

fn pretty(matrix: &CanonicalBasisMatrix, note: Option<&str>) -> String {
    let modulus = match matrix.kind {
        FockKind::A1 => "m",
        FockKind::A2 => "h",
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} canonical basis, {modulus}={}, core {}, weight {}: {} rows, {} columns",
        kind_name(matrix.kind),
        matrix.modulus,
        matrix.core.compact(),
        matrix.weight,
        matrix.rows.len(),
        matrix.cols.len()
    );
    if let Some(note) = note {
        let _ = writeln!(out, "# {note}");
    }
    let cell = |e: &LaurentPoly| if e.is_zero() { ".".to_string() } else { e.to_string() };
    let row_labels: Vec<String> = matrix.rows.iter().map(Partition::compact).collect();
    let first = row_labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..matrix.cols.len())
        .map(|c| {
            let entries = matrix.entries.iter().map(|row| cell(&row[c]).chars().count());
            entries.chain([matrix.cols[c].compact().chars().count()]).max().unwrap_or(1)
        })
        .collect();
    let mut header = format!("{:first$}", "");
    for (c, col) in matrix.cols.iter().enumerate() {
        let _ = write!(header, "  {:>w$}", col.compact(), w = widths[c]);
    }
    let _ = writeln!(out, "{}", header.trim_end());
    for (r, row) in matrix.entries.iter().enumerate() {
        let mut line = format!("{:first$}", row_labels[r]);
        for (c, e) in row.iter().enumerate() {
            let _ = write!(line, "  {:>w$}", cell(e), w = widths[c]);
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

fn csv(matrix: &CanonicalBasisMatrix) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["row".to_string()];
    header.extend(matrix.cols.iter().map(Partition::to_string));
    writer.write_record(&header)?;
    for (p, row) in matrix.rows.iter().zip(&matrix.entries) {
        let mut record = vec![p.to_string()];
        record.extend(row.iter().map(LaurentPoly::to_string));
        writer.write_record(&record)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

fn tex_poly(e: &LaurentPoly) -> String {
    if e.is_zero() {
        return ".".to_string();
    }
    let mut s = String::new();
    let text = e.to_string();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        s.push(c);
        if c == '^' {
            s.push('{');
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() || (d == '-' && s.ends_with('{')) {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            s.push('}');
        }
    }
    format!("${s}$")
}

fn tex(matrix: &CanonicalBasisMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{tabular}}{{l{}}}", "c".repeat(matrix.cols.len()));
    let cols: Vec<String> = matrix.cols.iter().map(|p| format!("${}$", p.compact())).collect();
    let _ = writeln!(out, " & {} \\\\", cols.join(" & "));
    let _ = writeln!(out, "\\hline");
    for (p, row) in matrix.rows.iter().zip(&matrix.entries) {
        let cells: Vec<String> = row.iter().map(tex_poly).collect();
        let _ = writeln!(out, "${}$ & {} \\\\", p.compact(), cells.join(" & "));
    }
    let _ = writeln!(out, "\\end{{tabular}}");
    out
}

pub fn render(matrix: &CanonicalBasisMatrix, format: Format, note: Option<&str>) -> Result<String> {
    Ok(match format {
        Format::Pretty => pretty(matrix, note),
        Format::Csv => csv(matrix)?,
        Format::Json => {
            let emission = MatrixEmission::new(matrix, note.map(str::to_string));
            serde_json::to_string_pretty(&emission)? + "\n"
        }
        Format::Tex => tex(matrix),
    })
}
