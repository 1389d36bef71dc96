//! JSON algebra and operator documents.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{BiHomTrialgebra, LinearMap, MulTensor, Role};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Wire form of a trialgebra. Omitted products and maps are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub left: Vec<ProductEntry>,
    #[serde(default)]
    pub right: Vec<ProductEntry>,
    #[serde(default)]
    pub middle: Vec<ProductEntry>,
    #[serde(default)]
    pub alpha: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub beta: Option<Vec<Vec<String>>>,
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { at: format!("line {}, column {}", e.line(), e.column()), msg: e.to_string() }
}

pub(crate) fn parse_scalar_at(text: &str, at: impl Into<String>) -> Result<Scalar> {
    text.parse().map_err(|e: Error| Error::Parse { at: at.into(), msg: e.to_string() })
}

pub(crate) fn matrix_from_strings(rows: &[Vec<String>], dim: usize, field: &str) -> Result<Matrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Parse {
            at: field.to_string(),
            msg: format!("expected a {dim}x{dim} array"),
        });
    }
    let mut m = Matrix::zeros(dim, dim);
    for (r, row) in rows.iter().enumerate() {
        for (c, text) in row.iter().enumerate() {
            m[(r, c)] = parse_scalar_at(text, format!("{field}[{r}][{c}]"))?;
        }
    }
    Ok(m)
}

pub(crate) fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().into_iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
}

pub(crate) fn tensor_from_entries(entries: &[ProductEntry], dim: usize, role: Role) -> Result<MulTensor> {
    let field = role.name();
    let mut t = MulTensor::zero(dim, role);
    let mut seen = BTreeSet::new();
    for (at, e) in entries.iter().enumerate() {
        for (name, index) in [("i", e.i), ("j", e.j), ("k", e.k)] {
            if index == 0 || index > dim {
                return Err(Error::IndexOutOfRange { field: format!("{field}[{at}].{name}"), index, dim });
            }
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::Parse {
                at: format!("{field}[{at}]"),
                msg: format!("duplicate entry ({}, {}, {})", e.i, e.j, e.k),
            });
        }
        let c = parse_scalar_at(&e.c, format!("{field}[{at}].c"))?;
        t.set(e.i - 1, e.j - 1, e.k - 1, c);
    }
    Ok(t)
}

pub(crate) fn tensor_to_entries(t: &MulTensor) -> Vec<ProductEntry> {
    t.nonzero()
        .map(|(i, j, k, c)| ProductEntry { i: i + 1, j: j + 1, k: k + 1, c: c.to_string() })
        .collect()
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<BiHomTrialgebra> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::Parse { at: "dim".into(), msg: "dimension must be positive".into() });
        }
        let map = |rows: &Option<Vec<Vec<String>>>, field: &str| -> Result<LinearMap> {
            match rows {
                None => Ok(LinearMap::zero(n)),
                Some(rows) => LinearMap::new(matrix_from_strings(rows, n, field)?),
            }
        };
        BiHomTrialgebra::from_parts(
            self.name.clone(),
            [
                tensor_from_entries(&self.left, n, Role::Left)?,
                tensor_from_entries(&self.right, n, Role::Right)?,
                tensor_from_entries(&self.middle, n, Role::Middle)?,
            ],
            map(&self.alpha, "alpha")?,
            map(&self.beta, "beta")?,
        )
    }

    pub fn from_algebra(a: &BiHomTrialgebra) -> Self {
        AlgebraDoc {
            name: a.name.clone(),
            dim: a.dim,
            left: tensor_to_entries(&a.left),
            right: tensor_to_entries(&a.right),
            middle: tensor_to_entries(&a.middle),
            alpha: Some(matrix_to_strings(a.alpha.matrix())),
            beta: Some(matrix_to_strings(a.beta.matrix())),
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<BiHomTrialgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(json_error)?;
    doc.to_algebra()
}

/// Canonical form: nonzero constants in (i, j, k) order, full twist
/// matrices, two-space indentation, trailing newline.
pub fn serialize_algebra(a: &BiHomTrialgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraDoc::from_algebra(a)).expect("plain data");
    s.push('\n');
    s
}

/// A `dim × dim` array of scalar strings; `dim` is checked when given.
pub fn parse_operator(text: &str, dim: Option<usize>) -> Result<LinearMap> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(json_error)?;
    let n = dim.unwrap_or(rows.len());
    if n == 0 {
        return Err(Error::Parse { at: "operator".into(), msg: "empty matrix".into() });
    }
    if rows.len() != n {
        return Err(Error::DimensionMismatch(format!("operator has {} rows, expected {n}", rows.len())));
    }
    LinearMap::new(matrix_from_strings(&rows, n, "operator")?)
}

pub fn serialize_operator(m: &LinearMap) -> String {
    let mut s = serde_json::to_string(&matrix_to_strings(m.matrix())).expect("plain data");
    s.push('\n');
    s
}
