//! Bundled presentations, addressed as `corpus:<name>`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{close_presentation, parse_poly, AlgebraError, AlgebraTable, Presentation};
use crate::linalg::Field;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    p: u32,
    generators: &'static [&'static str],
    relations: &'static [&'static str],
    central: &'static [&'static str],
    degree_bound: usize,
}

const fn entry(
    name: &'static str,
    description: &'static str,
    p: u32,
    generators: &'static [&'static str],
    relations: &'static [&'static str],
    central: &'static [&'static str],
    degree_bound: usize,
) -> CorpusEntry {
    CorpusEntry { name, description, p, generators, relations, central, degree_bound }
}

const XY: &[&str] = &["x", "y"];

static ENTRIES: &[CorpusEntry] = &[
    entry("kleinfour", "F_2[x,y]/(x^2,y^2), the Klein four group algebra", 2, XY, &["x^2", "y^2", "xy-yx"], &[], 4),
    entry("elab_2_2", "k[x,y]/(x^2,y^2) over F_2", 2, XY, &["x^2", "y^2", "xy-yx"], &[], 4),
    entry("elab_3_2", "k[x,y]/(x^3,y^3) over F_3", 3, XY, &["x^3", "y^3", "xy-yx"], &[], 6),
    entry(
        "elab_2_3",
        "F_2[x,y,z]/(x^2,y^2,z^2), rank-3 elementary abelian",
        2,
        &["x", "y", "z"],
        &["x^2", "y^2", "z^2", "xy-yx", "xz-zx", "yz-zy"],
        &[],
        5,
    ),
    entry("dihedral8", "k<x,y>/(x^2,y^2,xyxy-yxyx) over F_2", 2, XY, &["x^2", "y^2", "xyxy-yxyx"], &[], 6),
    entry("c5_2", "restricted enveloping algebra C5 at p=2", 2, XY, &["x^2", "y^2", "(xy-yx)^2"], &["xy-yx"], 8),
    entry("c5_3", "restricted enveloping algebra C5 at p=3", 3, XY, &["x^3", "y^3", "(xy-yx)^3"], &["xy-yx"], 12),
    entry(
        "c6_2",
        "restricted enveloping algebra C6 at p=2",
        2,
        XY,
        &["y^2", "x^2-(xy-yx)", "(xy-yx)^2"],
        &["xy-yx"],
        8,
    ),
    entry(
        "c6_3",
        "restricted enveloping algebra C6 at p=3",
        3,
        XY,
        &["y^3", "x^3-(xy-yx)", "(xy-yx)^3"],
        &["xy-yx"],
        12,
    ),
    entry("nfam_host", "F_2[x,y]/(x^4,y^2)", 2, XY, &["x^4", "y^2", "xy-yx"], &[], 7),
    entry("poly_trunc_2", "F_2[x]/(x^2)", 2, &["x"], &["x^2"], &[], 3),
    entry("poly_trunc_3", "F_3[x]/(x^3)", 3, &["x"], &["x^3"], &[], 4),
    entry(
        "qci_7",
        "F_7<x,y>/(x^2,y^2,xy-3yx), a non-symmetric Frobenius algebra",
        7,
        XY,
        &["x^2", "y^2", "xy-3yx"],
        &[],
        4,
    ),
];

pub fn corpus_entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn corpus_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

impl CorpusEntry {
    pub fn presentation(&self) -> Presentation {
        let f = Field::prime(self.p).expect("corpus fields are prime");
        let gens: Vec<String> = self.generators.iter().map(|s| s.to_string()).collect();
        let parse =
            |list: &[&str]| list.iter().map(|r| parse_poly(r, &gens, &f).expect("corpus relations parse")).collect();
        Presentation {
            name: self.name.to_string(),
            relations: parse(self.relations),
            central: parse(self.central),
            generators: gens,
            field: f.clone(),
            degree_bound: self.degree_bound,
        }
    }
}

/// Every bundled presentation.
pub fn corpus() -> Vec<Presentation> {
    ENTRIES.iter().map(CorpusEntry::presentation).collect()
}

pub fn corpus_presentation(name: &str) -> Result<Presentation, AlgebraError> {
    ENTRIES.iter().find(|e| e.name == name).map(CorpusEntry::presentation).ok_or_else(|| AlgebraError::Parse {
        location: format!("corpus:{name}"),
        message: format!("unknown corpus algebra; available: {}", corpus_names().join(", ")),
    })
}

/// Closed corpus algebra, cached per process.
pub fn corpus_algebra(name: &str) -> Result<Arc<AlgebraTable>, AlgebraError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<AlgebraTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(name) {
        return Ok(a.clone());
    }
    let a = Arc::new(close_presentation(&corpus_presentation(name)?)?);
    cache.lock().unwrap().insert(name.to_string(), a.clone());
    Ok(a)
}

/// The algebra over an extension of its prime field (same basis and
/// generators).
pub fn over_field(a: &Arc<AlgebraTable>, field: &Field) -> Result<Arc<AlgebraTable>, AlgebraError> {
    if a.field().spec() == field.spec() {
        return Ok(a.clone());
    }
    Ok(Arc::new(a.extend_scalars(field)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let dims: Vec<(&str, usize)> = vec![
            ("kleinfour", 4),
            ("elab_3_2", 9),
            ("elab_2_3", 8),
            ("dihedral8", 8),
            ("c5_2", 8),
            ("c5_3", 27),
            ("c6_2", 8),
            ("c6_3", 27),
            ("nfam_host", 8),
            ("poly_trunc_3", 3),
            ("qci_7", 4),
        ];
        for (n, d) in dims {
            assert_eq!(corpus_algebra(n).unwrap().dim(), d, "{n}");
        }
        assert!(corpus_algebra("nope").is_err());
    }

    #[test]
    fn every_corpus_algebra_is_local() {
        for n in corpus_names() {
            assert!(corpus_algebra(n).unwrap().is_local(), "{n}");
        }
    }
}
