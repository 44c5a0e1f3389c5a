//! Module files (JSON or TOML).
//!
//! ```json
//! {"algebra_ref": "corpus:kleinfour", "dim": 2,
//!  "actions": {"x": [[0, 1], [0, 0]], "y": [[0, 0], [0, 0]]}}
//! ```
//!
//! Entries are integers (reduced mod p) or coefficient lists of field
//! elements. `algebra_ref` names a corpus algebra (`corpus:<name>`) or a
//! presentation file; it may be omitted when the algebra is given separately.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ModuleError, ModuleRep};
use crate::algebra::{AlgebraError, AlgebraTable};
use crate::linalg::{Field, FieldElem, Matrix};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Coeffs(Vec<u32>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default, alias = "algebra", skip_serializing_if = "Option::is_none")]
    pub algebra_ref: Option<String>,
    pub dim: usize,
    pub actions: BTreeMap<String, Vec<Vec<Entry>>>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> ModuleError {
    ModuleError::Algebra(AlgebraError::Parse { location: location.into(), message: message.into() })
}

impl ModuleFile {
    pub fn parse(text: &str) -> Result<ModuleFile, ModuleError> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text)
                .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| parse_err("module file", e.message().to_string()))
        }
    }

    pub fn from_module(m: &ModuleRep) -> ModuleFile {
        let f = m.field();
        let entry = |x: FieldElem| {
            if f.e() == 1 {
                Entry::Int(x.index() as i64)
            } else {
                Entry::Coeffs(f.coeffs(x))
            }
        };
        let actions = m
            .algebra()
            .generator_names()
            .into_iter()
            .zip(m.actions())
            .map(|(name, a)| (name, (0..a.rows()).map(|i| a.row(i).iter().map(|&x| entry(x)).collect()).collect()))
            .collect();
        ModuleFile { algebra_ref: Some(m.algebra().name().to_string()), dim: m.dim(), actions }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("module files serialise")
    }

    /// Builds the module over `algebra`, checking every relation.
    pub fn build(&self, algebra: &Arc<AlgebraTable>) -> Result<ModuleRep, ModuleError> {
        let f = algebra.field();
        let names = algebra.generator_names();
        if let Some(extra) = self.actions.keys().find(|k| !names.contains(k)) {
            return Err(parse_err(format!("actions.{extra}"), "not a generator of the algebra"));
        }
        let mut mats = Vec::with_capacity(names.len());
        for name in &names {
            let rows =
                self.actions.get(name).ok_or_else(|| parse_err(format!("actions.{name}"), "missing action matrix"))?;
            mats.push(matrix(f, self.dim, rows).map_err(|m| parse_err(format!("actions.{name}"), m))?);
        }
        ModuleRep::new(algebra.clone(), self.dim, mats)
    }
}

fn matrix(f: &Field, dim: usize, rows: &[Vec<Entry>]) -> Result<Matrix, String> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(format!("expected a {dim}×{dim} matrix"));
    }
    let mut data = Vec::with_capacity(dim * dim);
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            data.push(match e {
                Entry::Int(v) => f.from_int(*v),
                Entry::Coeffs(c) => f.from_coeffs(c).map_err(|err| format!("entry ({i}, {j}): {err}"))?,
            });
        }
    }
    Ok(Matrix::from_vec(f, dim, dim, data))
}

pub fn parse_module(text: &str, algebra: &Arc<AlgebraTable>) -> Result<ModuleRep, ModuleError> {
    ModuleFile::parse(text)?.build(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::truncated;

    #[test]
    fn round_trip() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let m = parse_module(r#"{"dim": 2, "actions": {"x": [[0, 1], [0, 0]], "y": [[0, 0], [0, 0]]}}"#, &a).unwrap();
        let again = parse_module(&ModuleFile::from_module(&m).to_json(), &a).unwrap();
        assert_eq!(m.actions(), again.actions());
    }

    #[test]
    fn rejects_bad_modules() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let missing = parse_module(r#"{"dim": 1, "actions": {"x": [[0]]}}"#, &a).unwrap_err();
        assert!(missing.to_string().contains("actions.y"), "{missing}");
        let violating = parse_module(r#"{"dim": 1, "actions": {"x": [[1]], "y": [[0]]}}"#, &a);
        assert!(matches!(violating, Err(ModuleError::RelationViolation(_))));
    }
}
