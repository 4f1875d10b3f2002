//! JSON interchange format for Hopf algebras and matrices.
//!
//! Coefficients are exact strings: rationals as `a/b`, cyclotomic numbers as
//! polynomials in `z` = ζ_m, where m is `field.cyclotomic_order`. Structure
//! tensors are stored sparsely as `[i, j, k, "coeff"]` quads with
//! `mu: b_i·b_j = Σ_k c b_k` and `delta: Δ(b_i) = Σ c b_j⊗b_k`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::hopf::HopfError;
use crate::linalg::{CycNumber, Matrix};
use crate::{CycMatrix, HopfAlgebra};

pub const FORMAT_VERSION: &str = "hopfkit/1";

/// JSON Schema of [`AlgebraDocument`].
pub const ALGEBRA_SCHEMA: &str = include_str!("../schema/algebra-document.schema.json");
/// JSON Schema of [`MatrixDocument`].
pub const MATRIX_SCHEMA: &str = include_str!("../schema/matrix-document.schema.json");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterchangeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
}

/// (i, j, k, coefficient).
pub type Quad = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format_version: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub delta: Vec<Quad>,
    pub mu: Vec<Quad>,
    pub eps: Vec<String>,
    pub unit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

/// A square matrix over Q(ζ_m); for comatrix maps the size is d²×d² in the
/// basis e_{11}, e_{12}, …, e_{dd}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub format_version: String,
    pub field: FieldSpec,
    pub rows: Vec<Vec<String>>,
}

fn coeff(c: &CycNumber, m: u32) -> String {
    c.to_string_in(m)
}

fn parse_coeff(s: &str, m: u32) -> Result<CycNumber, InterchangeError> {
    CycNumber::parse_in(s, m).map_err(|_| InterchangeError::Parse(format!("bad coefficient `{s}`")))
}

fn sorted_quads(q: Vec<(usize, usize, usize, CycNumber)>, m: u32) -> Vec<Quad> {
    let mut out: Vec<Quad> = q.into_iter().filter(|(_, _, _, c)| !num_traits::Zero::is_zero(c)).map(|(i, j, k, c)| (i, j, k, coeff(&c, m))).collect();
    out.sort_by_key(|a| (a.0, a.1, a.2));
    out
}

fn check_version(v: &str) -> Result<(), InterchangeError> {
    if v != FORMAT_VERSION {
        return Err(InterchangeError::Parse(format!("unsupported format_version `{v}`")));
    }
    Ok(())
}

fn check_field(f: FieldSpec) -> Result<u32, InterchangeError> {
    if f.cyclotomic_order == 0 {
        return Err(InterchangeError::Parse("cyclotomic_order must be positive".into()));
    }
    Ok(f.cyclotomic_order)
}

impl AlgebraDocument {
    pub fn from_hopf(h: &HopfAlgebra) -> AlgebraDocument {
        let m = h.field_order();
        let s = h.antipode();
        AlgebraDocument {
            format_version: FORMAT_VERSION.into(),
            field: FieldSpec { cyclotomic_order: m },
            dim: h.dim(),
            labels: h.labels().to_vec(),
            delta: sorted_quads(h.coalgebra().delta_quads(), m),
            mu: sorted_quads(h.algebra().quads(), m),
            eps: h.eps().iter().map(|c| coeff(c, m)).collect(),
            unit: h.unit().iter().map(|c| coeff(c, m)).collect(),
            antipode: (0..s.rows()).map(|i| s.row(i).iter().map(|c| coeff(c, m)).collect()).collect(),
        }
    }

    pub fn parse(src: &str) -> Result<AlgebraDocument, InterchangeError> {
        let doc: AlgebraDocument = serde_json::from_str(src).map_err(|e| InterchangeError::Parse(e.to_string()))?;
        check_version(&doc.format_version)?;
        check_field(doc.field)?;
        Ok(doc)
    }

    /// Builds the structure without checking the axioms.
    pub fn to_hopf_unchecked(&self) -> Result<HopfAlgebra, InterchangeError> {
        check_version(&self.format_version)?;
        let m = check_field(self.field)?;
        let n = self.dim;
        let shape = |what: &str, len: usize| {
            if len != n {
                Err(InterchangeError::Parse(format!("{what} has length {len}, expected {n}")))
            } else {
                Ok(())
            }
        };
        shape("labels", self.labels.len())?;
        shape("eps", self.eps.len())?;
        shape("unit", self.unit.len())?;
        shape("antipode", self.antipode.len())?;
        for row in &self.antipode {
            shape("antipode row", row.len())?;
        }
        let quads = |q: &[Quad]| -> Result<Vec<(usize, usize, usize, CycNumber)>, InterchangeError> {
            q.iter()
                .map(|(i, j, k, c)| {
                    if *i >= n || *j >= n || *k >= n {
                        return Err(InterchangeError::Parse(format!("index ({i}, {j}, {k}) out of range for dim {n}")));
                    }
                    Ok((*i, *j, *k, parse_coeff(c, m)?))
                })
                .collect()
        };
        let vector = |v: &[String]| v.iter().map(|c| parse_coeff(c, m)).collect::<Result<Vec<_>, _>>();
        let rows = self.antipode.iter().map(|r| vector(r)).collect::<Result<Vec<_>, _>>()?;
        let antipode = if n == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows).map_err(|e| InterchangeError::Parse(e.to_string()))? };
        Ok(HopfAlgebra::new_unchecked(n, quads(&self.mu)?, vector(&self.unit)?, quads(&self.delta)?, vector(&self.eps)?, antipode, self.labels.clone(), m)?)
    }

    /// Builds the structure and checks every axiom.
    pub fn to_hopf(&self) -> Result<HopfAlgebra, InterchangeError> {
        let h = self.to_hopf_unchecked()?;
        h.validate()?;
        Ok(h)
    }

    /// Canonical text: one quad or row per line, LF endings, trailing newline.
    pub fn to_json(&self) -> String {
        let js = |s: &str| serde_json::to_string(s).expect("string serialization");
        let strings = |v: &[String]| v.iter().map(|s| js(s)).collect::<Vec<_>>().join(", ");
        let quads = |out: &mut String, name: &str, q: &[Quad]| {
            let _ = write!(out, "  \"{name}\": [");
            for (idx, (i, j, k, c)) in q.iter().enumerate() {
                let sep = if idx + 1 < q.len() { "," } else { "" };
                let _ = write!(out, "\n    [{i}, {j}, {k}, {}]{sep}", js(c));
            }
            out.push_str(if q.is_empty() { "],\n" } else { "\n  ],\n" });
        };
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"format_version\": {},", js(&self.format_version));
        let _ = writeln!(out, "  \"field\": {{\"cyclotomic_order\": {}}},", self.field.cyclotomic_order);
        let _ = writeln!(out, "  \"dim\": {},", self.dim);
        let _ = writeln!(out, "  \"labels\": [{}],", strings(&self.labels));
        quads(&mut out, "delta", &self.delta);
        quads(&mut out, "mu", &self.mu);
        let _ = writeln!(out, "  \"eps\": [{}],", strings(&self.eps));
        let _ = writeln!(out, "  \"unit\": [{}],", strings(&self.unit));
        out.push_str("  \"antipode\": [");
        for (idx, row) in self.antipode.iter().enumerate() {
            let sep = if idx + 1 < self.antipode.len() { "," } else { "" };
            let _ = write!(out, "\n    [{}]{sep}", strings(row));
        }
        out.push_str(if self.antipode.is_empty() { "]\n" } else { "\n  ]\n" });
        out.push_str("}\n");
        out
    }
}

impl MatrixDocument {
    pub fn from_matrix(a: &CycMatrix, m: u32) -> MatrixDocument {
        MatrixDocument {
            format_version: FORMAT_VERSION.into(),
            field: FieldSpec { cyclotomic_order: m },
            rows: (0..a.rows()).map(|i| a.row(i).iter().map(|c| coeff(c, m)).collect()).collect(),
        }
    }

    pub fn parse(src: &str) -> Result<MatrixDocument, InterchangeError> {
        let doc: MatrixDocument = serde_json::from_str(src).map_err(|e| InterchangeError::Parse(e.to_string()))?;
        check_version(&doc.format_version)?;
        check_field(doc.field)?;
        Ok(doc)
    }

    pub fn to_matrix(&self) -> Result<CycMatrix, InterchangeError> {
        let m = check_field(self.field)?;
        let n = self.rows.len();
        if n == 0 || self.rows.iter().any(|r| r.len() != n) {
            return Err(InterchangeError::Parse("matrix must be square and nonempty".into()));
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|c| parse_coeff(c, m)).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(rows).map_err(|e| InterchangeError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let js = |s: &str| serde_json::to_string(s).expect("string serialization");
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"format_version\": {},", js(&self.format_version));
        let _ = writeln!(out, "  \"field\": {{\"cyclotomic_order\": {}}},", self.field.cyclotomic_order);
        out.push_str("  \"rows\": [");
        for (idx, row) in self.rows.iter().enumerate() {
            let sep = if idx + 1 < self.rows.len() { "," } else { "" };
            let cells: Vec<String> = row.iter().map(|c| js(c)).collect();
            let _ = write!(out, "\n    [{}]{sep}", cells.join(", "));
        }
        out.push_str(if self.rows.is_empty() { "]\n" } else { "\n  ]\n" });
        out.push_str("}\n");
        out
    }
}
