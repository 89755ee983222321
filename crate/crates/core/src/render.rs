//! Text formats for matrices: JSON, CSV, LaTeX and an aligned plain-text
//! layout. JSON and CSV parse back to the identical exact values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{DenseMatrix, Scalar};
use crate::qfield::QRationalFunction;
use crate::scalar::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "latex" => Ok(Self::Latex),
            "pretty" => Ok(Self::Pretty),
            other => Err(format!(
                "unknown format {other:?} (json, csv, latex, pretty)"
            )),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Json => "json",
            Self::Csv => "csv",
            Self::Latex => "latex",
            Self::Pretty => "pretty",
        })
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("bad scalar {0:?}")]
    Scalar(String),
    #[error("bad json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("ragged or mis-sized matrix")]
    Shape,
}

/// Scalars that can be written in every output format and read back from
/// the lossless ones.
pub trait TextScalar: Scalar {
    fn latex(&self) -> String;
    fn parse_text(s: &str) -> Result<Self, RenderError>;
}

impl TextScalar for ExactRational {
    fn latex(&self) -> String {
        if self.is_integer() {
            return self.numer().to_string();
        }
        let (sign, num) = if self.numer() < &0.into() {
            ("-", -self.numer())
        } else {
            ("", self.numer().clone())
        };
        format!("{sign}\\frac{{{num}}}{{{}}}", self.denom())
    }

    fn parse_text(s: &str) -> Result<Self, RenderError> {
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p = p.parse().map_err(|_| RenderError::Scalar(s.to_string()))?;
            let q = q.parse().map_err(|_| RenderError::Scalar(s.to_string()))?;
            crate::scalar::rational(p, q).map_err(|_| RenderError::Scalar(s.to_string()))
        } else {
            t.parse().map_err(|_| RenderError::Scalar(s.to_string()))
        }
    }
}

impl TextScalar for QRationalFunction {
    fn latex(&self) -> String {
        self.render_latex()
    }

    fn parse_text(s: &str) -> Result<Self, RenderError> {
        QRationalFunction::parse(s).map_err(|_| RenderError::Scalar(s.to_string()))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

pub fn render<T: TextScalar>(m: &DenseMatrix<T>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(m),
        OutputFormat::Csv => to_csv(m),
        OutputFormat::Latex => to_latex(m),
        OutputFormat::Pretty => to_pretty(m),
    }
}

fn rendered_rows<T: Scalar>(m: &DenseMatrix<T>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::render).collect())
        .collect()
}

/// `{"rows":N,"cols":N,"entries":[["1","1"],["1","1/2"]]}`.
pub fn to_json<T: Scalar>(m: &DenseMatrix<T>) -> String {
    let doc = JsonMatrix {
        rows: m.rows(),
        cols: m.cols(),
        entries: rendered_rows(m),
    };
    serde_json::to_string(&doc).expect("string matrix serializes")
}

/// One line per row, comma separated, no trailing newline.
pub fn to_csv<T: Scalar>(m: &DenseMatrix<T>) -> String {
    rendered_rows(m)
        .into_iter()
        .map(|r| r.join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn to_latex<T: TextScalar>(m: &DenseMatrix<T>) -> String {
    let body: Vec<String> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(TextScalar::latex)
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
        body.join(" \\\\\n")
    )
}

/// Right-aligned columns separated by two spaces.
pub fn to_pretty<T: Scalar>(m: &DenseMatrix<T>) -> String {
    let rows = rendered_rows(m);
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// `[[1,0],[1,1]]`.
pub fn to_nested<T: Scalar>(m: &DenseMatrix<T>) -> String {
    let rows: Vec<String> = rendered_rows(m)
        .into_iter()
        .map(|r| format!("[{}]", r.join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn parse_json<T: TextScalar>(text: &str) -> Result<DenseMatrix<T>, RenderError> {
    let doc: JsonMatrix = serde_json::from_str(text)?;
    if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
        return Err(RenderError::Shape);
    }
    let entries = doc
        .entries
        .iter()
        .flatten()
        .map(|s| T::parse_text(s))
        .collect::<Result<Vec<_>, _>>()?;
    DenseMatrix::from_vec(doc.rows, doc.cols, entries).map_err(|_| RenderError::Shape)
}

pub fn parse_csv<T: TextScalar>(text: &str) -> Result<DenseMatrix<T>, RenderError> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(T::parse_text)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(RenderError::Shape);
    }
    DenseMatrix::from_rows(rows).map_err(|_| RenderError::Shape)
}
