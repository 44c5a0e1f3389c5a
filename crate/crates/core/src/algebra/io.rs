//! Presentation files in JSON or TOML.
//!
//! ```toml
//! name = "dihedral8"
//! generators = ["x", "y"]
//! relations = ["x^2", "y^2", "xyxy - yxyx"]
//! central = []
//! degree_bound = 8
//!
//! [field]
//! p = 2
//! e = 1
//! ```
//!
//! A relation is either an expression string or an explicit term list
//! `[{coeff = 1, word = [0, 1]}, …]`; `coeff` is an integer or the
//! coefficient list of a field element, and `word` lists generator indices
//! or names.

use std::path::Path;

use serde::Deserialize;

use super::closure::Presentation;
use super::ncpoly::{parse_poly, NcPoly};
use super::AlgebraError;
use crate::linalg::{Field, FieldSpec};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    #[serde(default)]
    name: Option<String>,
    field: FieldSpec,
    generators: Vec<String>,
    #[serde(default)]
    relations: Vec<RelationSpec>,
    #[serde(default)]
    central: Vec<RelationSpec>,
    degree_bound: usize,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RelationSpec {
    Text(String),
    Terms(Vec<TermSpec>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermSpec {
    coeff: CoeffSpec,
    word: Vec<Letter>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum CoeffSpec {
    Int(i64),
    Poly(Vec<u32>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Letter {
    Index(usize),
    Name(String),
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { location: location.into(), message: message.into() }
}

/// Parses a presentation; the format is JSON when the text starts with `{`,
/// TOML otherwise.
pub fn parse_presentation(text: &str, default_name: &str) -> Result<Presentation, AlgebraError> {
    let file: PresentationFile = if text.trim_start().starts_with('{') {
        serde_json::from_str(text)
            .map_err(|e| parse_err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?
    } else {
        toml::from_str(text).map_err(|e| {
            let loc = e
                .span()
                .map(|s| format!("line {}", text[..s.start.min(text.len())].lines().count().max(1)))
                .unwrap_or_else(|| "document".into());
            parse_err(loc, e.message().to_string())
        })?
    };
    let field = Field::new(&file.field).map_err(|e| parse_err("field", e.to_string()))?;
    let gens = file.generators;
    let convert = |list: &[RelationSpec], key: &str| -> Result<Vec<NcPoly>, AlgebraError> {
        list.iter()
            .enumerate()
            .map(|(i, r)| relation(r, &gens, &field).map_err(|m| parse_err(format!("{key}[{i}]"), m)))
            .collect()
    };
    let relations = convert(&file.relations, "relations")?;
    let central = convert(&file.central, "central")?;
    let p = Presentation {
        name: file.name.unwrap_or_else(|| default_name.to_string()),
        field: field.clone(),
        generators: gens.clone(),
        relations,
        central,
        degree_bound: file.degree_bound,
    };
    p.validate().map_err(|e| parse_err("presentation", e.to_string()))?;
    Ok(p)
}

fn relation(r: &RelationSpec, gens: &[String], f: &Field) -> Result<NcPoly, String> {
    match r {
        RelationSpec::Text(s) => parse_poly(s, gens, f).map_err(|e| e.to_string()),
        RelationSpec::Terms(terms) => {
            let mut p = NcPoly::zero();
            for (k, t) in terms.iter().enumerate() {
                let c = match &t.coeff {
                    CoeffSpec::Int(v) => f.from_int(*v),
                    CoeffSpec::Poly(cs) => f.from_coeffs(cs).map_err(|e| format!("term {k}: {e}"))?,
                };
                let word = t
                    .word
                    .iter()
                    .map(|l| match l {
                        Letter::Index(i) if *i < gens.len() => Ok(*i),
                        Letter::Index(i) => Err(format!("term {k}: generator index {i} out of range")),
                        Letter::Name(n) => {
                            gens.iter().position(|g| g == n).ok_or_else(|| format!("term {k}: unknown generator {n:?}"))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                p.add_term(f, c, word);
            }
            Ok(p)
        }
    }
}

pub fn load_presentation(path: &Path) -> Result<Presentation, AlgebraError> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(path.display().to_string(), e.to_string()))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("algebra");
    parse_presentation(&text, stem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::close_presentation;

    #[test]
    fn toml_and_json_agree() {
        let t = r#"
generators = ["x", "y"]
relations = ["x^2", [{coeff = 1, word = ["y", "y"]}], "xy-yx"]
degree_bound = 4
[field]
p = 2
"#;
        let j = r#"{"field": {"p": 2}, "generators": ["x","y"],
                   "relations": ["x^2", [{"coeff": 1, "word": [1, 1]}], "xy-yx"], "degree_bound": 4}"#;
        let a = close_presentation(&parse_presentation(t, "k4").unwrap()).unwrap();
        let b = close_presentation(&parse_presentation(j, "k4").unwrap()).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.canonical_hash(), b.canonical_hash());
    }

    #[test]
    fn errors_cite_location() {
        let bad = "{\"field\": {\"p\": 2},\n \"generators\": [\"x\"], \"relations\": [\"x+q\"], \"degree_bound\": 3}";
        let e = parse_presentation(bad, "b").unwrap_err().to_string();
        assert!(e.contains("relations[0]"), "{e}");
        let broken = "generators = [\"x\"]\nrelations = [\n";
        let e = parse_presentation(broken, "b").unwrap_err().to_string();
        assert!(e.contains("line"), "{e}");
        let e = parse_presentation("{\"field\": {\"p\": 4}, \"generators\": [], \"degree_bound\": 1}", "b")
            .unwrap_err()
            .to_string();
        assert!(e.contains("field"), "{e}");
    }
}
