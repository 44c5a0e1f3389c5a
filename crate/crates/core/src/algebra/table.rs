//! Finite-dimensional associative unital algebras given by structure constants.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::ncpoly::{NcPoly, Word};
use super::AlgebraError;
use crate::linalg::poly;
use crate::linalg::{Field, FieldElem, FieldSpec, Matrix, Subspace};

/// Which radical computation applies to an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlgebraClass {
    /// Local with residue field equal to the base field; each generator is a
    /// scalar plus a radical element.
    LocalAugmented,
    /// Group algebra of a p-group in characteristic p.
    PGroup,
    /// Anything else; radical-dependent operations refuse it.
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub element: Vec<FieldElem>,
}

/// Node of the word basis: `word = generator · parent.word`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordNode {
    pub word: Word,
    pub parent: Option<usize>,
    pub generator: Option<usize>,
}

/// Raw ingredients of a table, validated by [`AlgebraTable::from_parts`].
#[derive(Debug, Clone)]
pub struct TableParts {
    pub name: String,
    pub field: Field,
    pub labels: Vec<String>,
    /// `structure[(i * d + j) * d + k]` = coefficient of `b_k` in `b_i · b_j`.
    pub structure: Vec<FieldElem>,
    pub unit: Vec<FieldElem>,
    pub generators: Vec<Generator>,
    pub relations: Vec<NcPoly>,
    pub group_algebra: bool,
}

#[derive(Debug)]
pub struct AlgebraTable {
    name: String,
    field: Field,
    dim: usize,
    labels: Vec<String>,
    structure: Vec<FieldElem>,
    unit: Vec<FieldElem>,
    generators: Vec<Generator>,
    relations: Vec<NcPoly>,
    group_algebra: bool,
    class: AlgebraClass,
    radical: Option<Subspace>,
    augmentation: Vec<FieldElem>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    words: Vec<WordNode>,
    word_values: Matrix,
    word_coords: Matrix,
}

/// Basis-free description used to compare algebras with distinguished generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    pub field: FieldSpec,
    pub dim: usize,
    pub generator_count: usize,
    pub words: Vec<Word>,
    /// `products[j][k]` = coordinates of `w_j · w_k` in the word basis.
    pub products: Vec<Vec<Vec<u32>>>,
}

impl CanonicalForm {
    pub fn hash(&self) -> String {
        sha256_json(self)
    }
}

pub(crate) fn sha256_json<T: Serialize>(v: &T) -> String {
    let bytes = serde_json::to_vec(v).expect("serializable");
    hex::encode(Sha256::digest(&bytes))
}

impl AlgebraTable {
    pub fn from_parts(parts: TableParts) -> Result<AlgebraTable, AlgebraError> {
        let TableParts { name, field, labels, structure, unit, generators, relations, group_algebra } = parts;
        let d = unit.len();
        if labels.len() != d || structure.len() != d * d * d {
            return Err(AlgebraError::Shape(format!(
                "dimension {d} needs {d} labels and {} structure constants",
                d * d * d
            )));
        }
        if generators.iter().any(|g| g.element.len() != d) {
            return Err(AlgebraError::Shape("generator vector has wrong length".into()));
        }
        let f = &field;
        let mut left = Vec::with_capacity(d);
        let mut right = Vec::with_capacity(d);
        for i in 0..d {
            let mut l = Matrix::zeros(f, d, d);
            let mut r = Matrix::zeros(f, d, d);
            for j in 0..d {
                for k in 0..d {
                    l.set(k, j, structure[(i * d + j) * d + k]);
                    r.set(k, j, structure[(j * d + i) * d + k]);
                }
            }
            left.push(l);
            right.push(r);
        }
        let mut table = AlgebraTable {
            name,
            field: field.clone(),
            dim: d,
            labels,
            structure,
            unit,
            generators,
            relations,
            group_algebra,
            class: AlgebraClass::Unsupported,
            radical: None,
            augmentation: Vec::new(),
            left,
            right,
            words: Vec::new(),
            word_values: Matrix::zeros(f, 0, d),
            word_coords: Matrix::zeros(f, 0, d),
        };
        table.check_unit()?;
        table.check_associativity()?;
        table.build_word_basis()?;
        for rel in &table.relations {
            if rel.max_generator().is_some_and(|g| g >= table.generators.len()) {
                return Err(AlgebraError::Shape("relation uses an unknown generator".into()));
            }
            if table.eval_poly(rel).iter().any(|c| !c.is_zero()) {
                return Err(AlgebraError::RelationViolated(rel.display(f, &table.generator_names())));
            }
        }
        table.detect_radical();
        Ok(table)
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        let u = self.left_matrix(&self.unit);
        let v = self.right_matrix(&self.unit);
        if !u.is_identity() || !v.is_identity() {
            return Err(AlgebraError::BadUnit);
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), AlgebraError> {
        // (b_i b_j) b_k = b_i (b_j b_k)  <=>  R_k L_i = L_i R_k as maps applied to b_j.
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.right[k].mul(&self.left[i]);
                let b = self.left[i].mul(&self.right[k]);
                if a != b {
                    let j = (0..self.dim).find(|&j| a.column(j) != b.column(j)).unwrap_or(0);
                    return Err(AlgebraError::NotAssociative { i, j, k });
                }
            }
        }
        Ok(())
    }

    fn build_word_basis(&mut self) -> Result<(), AlgebraError> {
        let f = self.field.clone();
        let d = self.dim;
        if d == 0 {
            return Ok(());
        }
        let mut span = Subspace::zero(&f, d);
        span.insert(&self.unit);
        let mut nodes = vec![WordNode { word: Vec::new(), parent: None, generator: None }];
        let mut values = vec![self.unit.clone()];
        let mut frontier = vec![0usize];
        let gen_left: Vec<Matrix> = self.generators.iter().map(|g| self.left_matrix(&g.element)).collect();
        while !frontier.is_empty() && span.dim() < d {
            let mut cands: Vec<(Word, usize, usize)> = Vec::new();
            for &n in &frontier {
                for g in 0..self.generators.len() {
                    let mut w = vec![g];
                    w.extend_from_slice(&nodes[n].word);
                    cands.push((w, n, g));
                }
            }
            cands.sort();
            let mut next = Vec::new();
            for (w, n, g) in cands {
                let v = gen_left[g].mul_vec(&values[n]);
                if span.insert(&v) {
                    next.push(nodes.len());
                    nodes.push(WordNode { word: w, parent: Some(n), generator: Some(g) });
                    values.push(v);
                }
            }
            frontier = next;
        }
        if span.dim() < d {
            return Err(AlgebraError::NotGenerated { reached: span.dim(), dim: d });
        }
        let wv = Matrix::from_rows(&f, d, &values);
        let inv = wv.inverse().expect("word basis is a basis");
        self.words = nodes;
        self.word_values = wv;
        self.word_coords = inv;
        Ok(())
    }

    fn detect_radical(&mut self) {
        let f = self.field.clone();
        let d = self.dim;
        if d == 0 {
            return;
        }
        let mut shifted = Vec::new();
        let mut eps = Vec::new();
        for g in &self.generators {
            let mu = poly::minimal_polynomial(&self.left_matrix(&g.element));
            let r = poly::squarefree_radical(&f, &mu);
            if poly::degree(&r) != Some(1) {
                return;
            }
            let c = f.neg(r[0]);
            let mut v = g.element.clone();
            f.axpy(&mut v, f.neg(c), &self.unit);
            shifted.push(v);
            eps.push(c);
        }
        let ideal = self.ideal_closure(&shifted);
        if ideal.dim() + 1 != d || !self.is_nilpotent(&ideal) {
            return;
        }
        // augmentation: linear functional vanishing on the radical with ε(1) = 1
        let mut aug = vec![f.zero(); d];
        let basis = ideal.basis_vectors();
        let mut m = Matrix::from_rows(&f, d, &basis);
        m = m.vstack(&Matrix::from_rows(&f, d, &[self.unit.clone()]));
        let mut rhs = vec![f.zero(); d];
        rhs[d - 1] = f.one();
        if let Ok(Some(sol)) = m.solve(&rhs) {
            aug = sol;
        }
        self.augmentation = aug;
        self.radical = Some(ideal);
        self.class = if self.group_algebra { AlgebraClass::PGroup } else { AlgebraClass::LocalAugmented };
    }

    /// Two-sided ideal generated by `gens`.
    pub fn ideal_closure(&self, gens: &[Vec<FieldElem>]) -> Subspace {
        let f = &self.field;
        let mut span = Subspace::zero(f, self.dim);
        let mut queue: Vec<Vec<FieldElem>> = Vec::new();
        for g in gens {
            if span.insert(g) {
                queue.push(g.clone());
            }
        }
        let gl: Vec<Matrix> = self.generators.iter().map(|g| self.left_matrix(&g.element)).collect();
        let gr: Vec<Matrix> = self.generators.iter().map(|g| self.right_matrix(&g.element)).collect();
        while let Some(v) = queue.pop() {
            for m in gl.iter().chain(gr.iter()) {
                let w = m.mul_vec(&v);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    }

    /// Whether the subspace `s` (assumed closed under multiplication) is nilpotent.
    pub fn is_nilpotent(&self, s: &Subspace) -> bool {
        let basis = s.basis_vectors();
        let mut power = s.clone();
        for _ in 0..=self.dim {
            if power.dim() == 0 {
                return true;
            }
            let mut next = Subspace::zero(&self.field, self.dim);
            for x in power.basis_vectors() {
                for y in &basis {
                    next.insert(&self.mul(&x, y));
                }
            }
            if next.dim() == power.dim() {
                return false;
            }
            power = next;
        }
        power.dim() == 0
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[FieldElem] {
        &self.unit
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn is_group_algebra(&self) -> bool {
        self.group_algebra
    }

    pub fn class(&self) -> AlgebraClass {
        self.class
    }

    pub fn is_local(&self) -> bool {
        self.radical.is_some()
    }

    /// Jacobson radical for the supported classes.
    pub fn radical(&self) -> Result<&Subspace, AlgebraError> {
        self.radical.as_ref().ok_or_else(|| {
            AlgebraError::UnsupportedClass(format!("{}: not local with residue field {}", self.name, self.field.spec()))
        })
    }

    /// The scalar `c` with `a − c·1 ∈ rad`, for local algebras.
    pub fn augmentation(&self, a: &[FieldElem]) -> Result<FieldElem, AlgebraError> {
        self.radical()?;
        Ok(self.field.dot(&self.augmentation, a))
    }

    pub fn structure(&self) -> &[FieldElem] {
        &self.structure
    }

    /// `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[FieldElem] {
        let d = self.dim;
        &self.structure[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<FieldElem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    f.axpy(&mut out, f.mul(ai, bj), self.product(i, j));
                }
            }
        }
        out
    }

    /// Left multiplication by a basis element.
    pub fn left_basis(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Right multiplication by a basis element.
    pub fn right_basis(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn left_matrix(&self, a: &[FieldElem]) -> Matrix {
        let terms: Vec<_> = a.iter().zip(&self.left).filter(|(c, _)| !c.is_zero()).map(|(&c, m)| (c, m)).collect();
        Matrix::combination(&self.field, self.dim, self.dim, &terms)
    }

    pub fn right_matrix(&self, a: &[FieldElem]) -> Matrix {
        let terms: Vec<_> = a.iter().zip(&self.right).filter(|(c, _)| !c.is_zero()).map(|(&c, m)| (c, m)).collect();
        Matrix::combination(&self.field, self.dim, self.dim, &terms)
    }

    pub fn eval_word(&self, w: &[usize]) -> Vec<FieldElem> {
        let mut acc = self.unit.clone();
        for &g in w {
            acc = self.mul(&acc, &self.generators[g].element);
        }
        acc
    }

    pub fn eval_poly(&self, p: &NcPoly) -> Vec<FieldElem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (w, c) in p.terms() {
            f.axpy(&mut out, c, &self.eval_word(w));
        }
        out
    }

    /// Word basis: products of generators reaching a basis, chosen greedily in
    /// length-then-lexicographic order.
    pub fn word_basis(&self) -> &[WordNode] {
        &self.words
    }

    /// Row `j` is the value of word `j`.
    pub fn word_values(&self) -> &Matrix {
        &self.word_values
    }

    /// Row `i` gives `b_i` in the word basis.
    pub fn word_coords(&self) -> &Matrix {
        &self.word_coords
    }

    /// Coordinates of an element in the word basis.
    pub fn to_word_coords(&self, a: &[FieldElem]) -> Vec<FieldElem> {
        self.word_coords.vec_mul(a)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let d = self.dim;
        let vals = self.word_values.row_vectors();
        let mut products = Vec::with_capacity(d);
        for a in &vals {
            let mut row = Vec::with_capacity(d);
            for b in &vals {
                let c = self.to_word_coords(&self.mul(a, b));
                row.push(c.iter().map(|x| x.index()).collect());
            }
            products.push(row);
        }
        CanonicalForm {
            field: self.field.spec(),
            dim: d,
            generator_count: self.generators.len(),
            words: self.words.iter().map(|n| n.word.clone()).collect(),
            products,
        }
    }

    pub fn canonical_hash(&self) -> String {
        self.canonical_form().hash()
    }

    /// Hash of the literal table (basis, constants, unit, generators).
    pub fn content_hash(&self) -> String {
        #[derive(Serialize)]
        struct Content<'a> {
            field: FieldSpec,
            labels: &'a [String],
            structure: Vec<u32>,
            unit: Vec<u32>,
            generators: Vec<(&'a str, Vec<u32>)>,
        }
        sha256_json(&Content {
            field: self.field.spec(),
            labels: &self.labels,
            structure: self.structure.iter().map(|x| x.index()).collect(),
            unit: self.unit.iter().map(|x| x.index()).collect(),
            generators: self
                .generators
                .iter()
                .map(|g| (g.name.as_str(), g.element.iter().map(|x| x.index()).collect()))
                .collect(),
        })
    }

    fn parts(&self) -> TableParts {
        TableParts {
            name: self.name.clone(),
            field: self.field.clone(),
            labels: self.labels.clone(),
            structure: self.structure.clone(),
            unit: self.unit.clone(),
            generators: self.generators.clone(),
            relations: self.relations.clone(),
            group_algebra: self.group_algebra,
        }
    }

    pub fn renamed(&self, name: &str) -> Result<AlgebraTable, AlgebraError> {
        let mut p = self.parts();
        p.name = name.to_string();
        AlgebraTable::from_parts(p)
    }

    /// Same multiplication, new distinguished generators. The source
    /// relations are dropped since they refer to the old generators.
    pub fn with_generators(&self, generators: Vec<Generator>) -> Result<AlgebraTable, AlgebraError> {
        let mut p = self.parts();
        p.generators = generators;
        p.relations = Vec::new();
        AlgebraTable::from_parts(p)
    }

    /// Substitutes generators by polynomials in the current ones, e.g. `x ↦ x+y`.
    pub fn change_generators(&self, images: &[NcPoly]) -> Result<AlgebraTable, AlgebraError> {
        if images.len() != self.generators.len() {
            return Err(AlgebraError::Shape("one image per generator required".into()));
        }
        let gens = self
            .generators
            .iter()
            .zip(images)
            .map(|(g, p)| Generator { name: g.name.clone(), element: self.eval_poly(p) })
            .collect();
        self.with_generators(gens)
    }

    /// Base change along `F_p^e ⊂ F_p^{e'}`; only tables defined over the
    /// prime field are supported.
    pub fn extend_scalars(&self, target: &Field) -> Result<AlgebraTable, AlgebraError> {
        if target.p() != self.field.p() {
            return Err(AlgebraError::FieldMismatch(format!(
                "cannot extend {} to {}",
                self.field.spec(),
                target.spec()
            )));
        }
        if self.field.e() == target.e() && self.field.modulus() == target.modulus() {
            return AlgebraTable::from_parts(self.parts());
        }
        let f = &self.field;
        let prime = |v: &[FieldElem]| v.iter().all(|&c| f.is_prime_subfield(c));
        if !prime(&self.structure)
            || !prime(&self.unit)
            || !self.generators.iter().all(|g| prime(&g.element))
            || !self.relations.iter().all(|r| r.in_prime_subfield(f))
        {
            return Err(AlgebraError::FieldMismatch(format!("{} has coefficients outside the prime field", self.name)));
        }
        // prime-field elements have the same encoding in every extension
        let mut p = self.parts();
        p.field = target.clone();
        AlgebraTable::from_parts(p)
    }

    /// Factor algebra by the two-sided ideal generated by `gens`.
    pub fn quotient_by_ideal(&self, gens: &[Vec<FieldElem>], name: &str) -> Result<Quotient, AlgebraError> {
        let f = &self.field;
        let ideal = self.ideal_closure(gens);
        let d = self.dim;
        let keep = ideal.complement_indices();
        let e = keep.len();
        let project = |v: &[FieldElem]| -> Vec<FieldElem> {
            let r = ideal.reduce(v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let lift = |k: usize| -> Vec<FieldElem> {
            let mut v = vec![f.zero(); d];
            v[keep[k]] = f.one();
            v
        };
        let mut structure = Vec::with_capacity(e * e * e);
        for i in 0..e {
            for j in 0..e {
                structure.extend(project(&self.mul(&lift(i), &lift(j))));
            }
        }
        let unit = project(&self.unit);
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let generators =
            self.generators.iter().map(|g| Generator { name: g.name.clone(), element: project(&g.element) }).collect();
        let degenerate = e == 0;
        let table = if degenerate {
            None
        } else {
            Some(Arc::new(AlgebraTable::from_parts(TableParts {
                name: name.to_string(),
                field: f.clone(),
                labels,
                structure,
                unit,
                generators,
                relations: self.relations.clone(),
                group_algebra: false,
            })?))
        };
        Ok(Quotient { ideal_dim: ideal.dim(), table })
    }
}

/// Result of [`AlgebraTable::quotient_by_ideal`]; `table` is `None` when the
/// ideal is everything.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ideal_dim: usize,
    pub table: Option<Arc<AlgebraTable>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers() -> AlgebraTable {
        // F_2[x]/(x²) on basis {1, x}
        let f = Field::prime(2).unwrap();
        let z = f.zero();
        let o = f.one();
        let structure = vec![o, z, z, o, z, o, z, z];
        AlgebraTable::from_parts(TableParts {
            name: "dual".into(),
            field: f,
            labels: vec!["1".into(), "x".into()],
            structure,
            unit: vec![o, z],
            generators: vec![Generator { name: "x".into(), element: vec![z, o] }],
            relations: vec![],
            group_algebra: false,
        })
        .unwrap()
    }

    #[test]
    fn dual_numbers_radical_and_words() {
        let a = dual_numbers();
        assert_eq!(a.class(), AlgebraClass::LocalAugmented);
        assert_eq!(a.radical().unwrap().dim(), 1);
        assert_eq!(a.word_basis().len(), 2);
        assert_eq!(a.word_basis()[1].word, vec![0]);
    }

    #[test]
    fn quotient_by_generator_is_field() {
        let a = dual_numbers();
        let x = a.generators()[0].element.clone();
        let q = a.quotient_by_ideal(&[x], "k").unwrap();
        assert_eq!(q.ideal_dim, 1);
        assert_eq!(q.table.unwrap().dim(), 1);
        let q0 = a.quotient_by_ideal(&[], "same").unwrap();
        assert_eq!(q0.table.unwrap().dim(), 2);
    }

    #[test]
    fn rejects_bad_unit() {
        let f = Field::prime(2).unwrap();
        let z = f.zero();
        let o = f.one();
        let err = AlgebraTable::from_parts(TableParts {
            name: "bad".into(),
            field: f,
            labels: vec!["1".into(), "x".into()],
            structure: vec![o, z, z, o, z, o, z, z],
            unit: vec![z, o],
            generators: vec![],
            relations: vec![],
            group_algebra: false,
        })
        .unwrap_err();
        assert!(matches!(err, AlgebraError::BadUnit));
    }
}
