//! Finite-dimensional left modules given by one action matrix per generator.

pub mod cover;
pub mod endo;
pub mod hom;
pub mod io;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraTable};
use crate::linalg::{Field, FieldElem, LinalgError, Matrix, Subspace};

pub use cover::{projective_cover, Cover};
pub use endo::{
    decompose, endo_radical, idempotent_witness, is_indecomposable, is_isomorphic, is_isomorphic_exact, EndoRadical,
    IndecVerdict, IsoVerdict, Summand,
};
pub use hom::{hom_space, hom_space_kronecker, HomSpace};

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("action violates a relation: {0}")]
    RelationViolation(String),
    #[error("endomorphism is not idempotent")]
    NotIdempotent,
    #[error("malformed module data: {0}")]
    Shape(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A left module: generator `g` acts by `actions[g]`.
#[derive(Clone)]
pub struct ModuleRep {
    algebra: Arc<AlgebraTable>,
    dim: usize,
    actions: Vec<Matrix>,
    basis_actions: OnceLock<Vec<Matrix>>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("algebra", &self.algebra.name())
            .field("dim", &self.dim)
            .field("actions", &self.actions)
            .finish()
    }
}

impl ModuleRep {
    /// Builds a module and checks every defining relation.
    pub fn new(algebra: Arc<AlgebraTable>, dim: usize, actions: Vec<Matrix>) -> Result<ModuleRep, ModuleError> {
        if actions.len() != algebra.generators().len() {
            return Err(ModuleError::Shape(format!(
                "{} action matrices for {} generators",
                actions.len(),
                algebra.generators().len()
            )));
        }
        if actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(ModuleError::Shape(format!("action matrices must be {dim}×{dim}")));
        }
        if actions.iter().any(|a| a.field().spec() != algebra.field().spec()) {
            return Err(ModuleError::Shape("action matrices are over a different field".into()));
        }
        let m = ModuleRep::from_actions(algebra, dim, actions);
        if let Some(bad) = m.violated_relation() {
            return Err(ModuleError::RelationViolation(bad));
        }
        Ok(m)
    }

    /// Trusted constructor for modules produced by exact constructions.
    pub(crate) fn from_actions(algebra: Arc<AlgebraTable>, dim: usize, actions: Vec<Matrix>) -> ModuleRep {
        ModuleRep { algebra, dim, actions, basis_actions: OnceLock::new() }
    }

    pub fn zero(algebra: &Arc<AlgebraTable>) -> ModuleRep {
        let f = algebra.field().clone();
        let actions = algebra.generators().iter().map(|_| Matrix::zeros(&f, 0, 0)).collect();
        ModuleRep::from_actions(algebra.clone(), 0, actions)
    }

    /// The left regular module `A`.
    pub fn regular(algebra: &Arc<AlgebraTable>) -> ModuleRep {
        let actions = algebra.generators().iter().map(|g| algebra.left_matrix(&g.element)).collect();
        ModuleRep::from_actions(algebra.clone(), algebra.dim(), actions)
    }

    /// The free module `A^b`, basis ordered block by block.
    pub fn free(algebra: &Arc<AlgebraTable>, b: usize) -> ModuleRep {
        let reg = ModuleRep::regular(algebra);
        let mut out = ModuleRep::zero(algebra);
        for _ in 0..b {
            out = out.direct_sum(&reg).expect("same algebra");
        }
        out
    }

    pub fn algebra(&self) -> &Arc<AlgebraTable> {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.actions[g]
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.content_hash() == other.algebra.content_hash()
    }

    pub(crate) fn check_same(&self, other: &ModuleRep) -> Result<(), ModuleError> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(ModuleError::AlgebraMismatch)
        }
    }

    /// Actions of the word basis, built along parent pointers.
    fn word_actions(&self) -> Vec<Matrix> {
        let f = self.field();
        let words = self.algebra.word_basis();
        let mut out: Vec<Matrix> = Vec::with_capacity(words.len());
        for node in words {
            let m = match (node.parent, node.generator) {
                (Some(p), Some(g)) => self.actions[g].mul(&out[p]),
                _ => Matrix::identity(f, self.dim),
            };
            out.push(m);
        }
        out
    }

    /// `ρ(b_i)` for every basis element of the algebra.
    pub fn basis_actions(&self) -> &[Matrix] {
        self.basis_actions.get_or_init(|| {
            let f = self.field();
            let d = self.algebra.dim();
            let words = self.word_actions();
            let coords = self.algebra.word_coords();
            (0..d)
                .map(|i| {
                    let terms: Vec<_> = (0..d)
                        .filter(|&j| !coords.get(i, j).is_zero())
                        .map(|j| (coords.get(i, j), &words[j]))
                        .collect();
                    Matrix::combination(f, self.dim, self.dim, &terms)
                })
                .collect()
        })
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, a: &[FieldElem]) -> Matrix {
        let terms: Vec<_> =
            a.iter().zip(self.basis_actions()).filter(|(c, _)| !c.is_zero()).map(|(&c, m)| (c, m)).collect();
        Matrix::combination(self.field(), self.dim, self.dim, &terms)
    }

    /// `ρ(b_i)·v` for every basis element `b_i`, without forming `ρ(b_i)`.
    pub fn orbit(&self, v: &[FieldElem]) -> Vec<Vec<FieldElem>> {
        let f = self.field();
        let words = self.algebra.word_basis();
        let mut wv: Vec<Vec<FieldElem>> = Vec::with_capacity(words.len());
        for node in words {
            let x = match (node.parent, node.generator) {
                (Some(p), Some(g)) => self.actions[g].mul_vec(&wv[p]),
                _ => v.to_vec(),
            };
            wv.push(x);
        }
        let coords = self.algebra.word_coords();
        (0..self.algebra.dim())
            .map(|i| {
                let mut out = vec![f.zero(); self.dim];
                for (j, w) in wv.iter().enumerate() {
                    let c = coords.get(i, j);
                    if !c.is_zero() {
                        f.axpy(&mut out, c, w);
                    }
                }
                out
            })
            .collect()
    }

    fn violated_relation(&self) -> Option<String> {
        let f = self.field();
        let names = self.algebra.generator_names();
        for rel in self.algebra.relations() {
            let mut acc = Matrix::zeros(f, self.dim, self.dim);
            for (w, c) in rel.terms() {
                let mut m = Matrix::identity(f, self.dim);
                for &g in w {
                    m = m.mul(&self.actions[g]);
                }
                acc.add_scaled(c, &m);
            }
            if !acc.is_zero() {
                return Some(rel.display(f, &names));
            }
        }
        // g·w_j must act as the combination of words it equals in the algebra.
        let words = self.word_actions();
        for (g, gen) in self.algebra.generators().iter().enumerate() {
            for (j, wj) in words.iter().enumerate() {
                let target = self.algebra.mul(&gen.element, self.algebra.word_values().row(j));
                let coeffs = self.algebra.to_word_coords(&target);
                let terms: Vec<_> =
                    coeffs.iter().zip(&words).filter(|(c, _)| !c.is_zero()).map(|(&c, m)| (c, m)).collect();
                let rhs = Matrix::combination(f, self.dim, self.dim, &terms);
                if self.actions[g].mul(wj) != rhs {
                    return Some(format!(
                        "{}·{} in the multiplication table",
                        gen.name,
                        self.algebra.word_basis()[j].word.len()
                    ));
                }
            }
        }
        None
    }

    /// True iff the actions define a module over the algebra.
    pub fn check_relations(&self) -> bool {
        self.violated_relation().is_none()
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep, ModuleError> {
        self.check_same(other)?;
        let actions = self.actions.iter().zip(&other.actions).map(|(a, b)| a.block_diag(b)).collect();
        Ok(ModuleRep::from_actions(self.algebra.clone(), self.dim + other.dim, actions))
    }

    /// Restriction to an invariant subspace, in its echelon basis.
    pub fn submodule(&self, s: &Subspace) -> Result<ModuleRep, ModuleError> {
        let f = self.field();
        let basis = s.basis_vectors();
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let mut cols = Vec::with_capacity(basis.len());
            for v in &basis {
                let w = a.mul_vec(v);
                let c = s.coords(&w).ok_or_else(|| ModuleError::Shape("subspace is not invariant".into()))?;
                cols.push(c);
            }
            actions.push(Matrix::from_columns(f, basis.len(), &cols));
        }
        Ok(ModuleRep::from_actions(self.algebra.clone(), basis.len(), actions))
    }

    /// `M / S` on the basis of standard vectors complementing `S`.
    pub fn quotient(&self, s: &Subspace) -> ModuleRep {
        let f = self.field();
        let keep = s.complement_indices();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<Vec<FieldElem>> = keep
                    .iter()
                    .map(|&c| {
                        let r = s.reduce(&a.column(c));
                        keep.iter().map(|&k| r[k]).collect()
                    })
                    .collect();
                Matrix::from_columns(f, keep.len(), &cols)
            })
            .collect();
        ModuleRep::from_actions(self.algebra.clone(), keep.len(), actions)
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<FieldElem>]) -> Subspace {
        let mut s = Subspace::zero(self.field(), self.dim);
        let mut queue = Vec::new();
        for v in vectors {
            if s.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for a in &self.actions {
                let w = a.mul_vec(&v);
                if s.insert(&w) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// `rad(A)·M`.
    pub fn radical_submodule(&self) -> Result<Subspace, ModuleError> {
        let f = self.field();
        let alg = &self.algebra;
        let mut vectors = Vec::new();
        for (g, gen) in alg.generators().iter().enumerate() {
            let c = alg.augmentation(&gen.element)?;
            let mut shifted = self.actions[g].clone();
            shifted.add_scaled(f.neg(c), &Matrix::identity(f, self.dim));
            vectors.extend(shifted.column_vectors());
        }
        // rad(A) = Σ (x − ε(x))·A by telescoping words, so rad·M = Σ im(x − ε(x))
        Ok(Subspace::span(f, self.dim, &vectors))
    }

    /// `M / rad(A)·M` and its dimension.
    pub fn top(&self) -> Result<(ModuleRep, usize), ModuleError> {
        let rad = self.radical_submodule()?;
        let t = self.quotient(&rad);
        let d = t.dim();
        Ok((t, d))
    }

    /// `(im e, ker e)` for an idempotent endomorphism `e`.
    pub fn split_by_idempotent(&self, e: &Matrix) -> Result<(ModuleRep, ModuleRep), ModuleError> {
        if e.rows() != self.dim || e.cols() != self.dim || e.mul(e) != *e {
            return Err(ModuleError::NotIdempotent);
        }
        if self.actions.iter().any(|a| a.mul(e) != e.mul(a)) {
            return Err(ModuleError::Shape("not an endomorphism".into()));
        }
        let f = self.field();
        let image = Subspace::span(f, self.dim, &e.column_vectors());
        let kernel = Subspace::span(f, self.dim, &e.null_space());
        Ok((self.submodule(&image)?, self.submodule(&kernel)?))
    }

    pub fn content_hash(&self) -> String {
        let actions: Vec<Vec<u32>> =
            self.actions.iter().map(|a| a.data().iter().map(|x| x.index()).collect()).collect();
        crate::algebra::table::sha256_json(&(self.algebra.content_hash(), self.dim, actions))
    }

    /// Same actions over another algebra table with the same generators
    /// (e.g. after a field extension).
    pub fn with_algebra(&self, algebra: Arc<AlgebraTable>) -> Result<ModuleRep, ModuleError> {
        let f = algebra.field().clone();
        let actions =
            self.actions.iter().map(|a| Matrix::from_vec(&f, a.rows(), a.cols(), a.data().to_vec())).collect();
        ModuleRep::new(algebra, self.dim, actions)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{close_presentation, parse_poly, Presentation};

    pub(crate) fn truncated(p: u32, gens: &[&str], rels: &[&str], bound: usize) -> Arc<AlgebraTable> {
        let f = Field::prime(p).unwrap();
        let g: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let pres = Presentation {
            name: "t".into(),
            relations: rels.iter().map(|r| parse_poly(r, &g, &f).unwrap()).collect(),
            central: vec![],
            generators: g,
            field: f,
            degree_bound: bound,
        };
        Arc::new(close_presentation(&pres).unwrap())
    }

    #[test]
    fn regular_module_checks() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xyxy-yxyx"], 8);
        let r = ModuleRep::regular(&a);
        assert!(r.check_relations());
        assert_eq!(r.dim(), 8);
        let x = r.action(0);
        assert!(x.mul(x).is_zero());
        let dual = truncated(2, &["x"], &["x^2"], 3);
        let reg = ModuleRep::regular(&dual);
        assert_eq!(reg.action(0), &Matrix::from_ints(dual.field(), &[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn identity_action_violates_nilpotency() {
        let a = truncated(2, &["x"], &["x^2"], 3);
        let f = a.field().clone();
        let e = ModuleRep::new(a, 2, vec![Matrix::identity(&f, 2)]);
        assert!(matches!(e, Err(ModuleError::RelationViolation(_))));
    }

    #[test]
    fn tops() {
        let a = truncated(3, &["x", "y"], &["x^3", "y^3", "xy-yx"], 6);
        let f = a.field().clone();
        let m = ModuleRep::new(
            a.clone(),
            2,
            vec![Matrix::from_ints(&f, &[&[0, 2], &[0, 0]]), Matrix::from_ints(&f, &[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        assert_eq!(m.top().unwrap().1, 1);
        assert_eq!(ModuleRep::regular(&a).top().unwrap().1, 1);
        assert_eq!(ModuleRep::zero(&a).top().unwrap().1, 0);
    }

    #[test]
    fn orbit_matches_basis_actions() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xyxy-yxyx"], 8);
        let r = ModuleRep::regular(&a);
        let v = a.unit().to_vec();
        let orbit = r.orbit(&v);
        for (i, o) in orbit.iter().enumerate() {
            assert_eq!(o, &r.basis_actions()[i].mul_vec(&v));
            assert_eq!(o, &a.basis_vector(i));
        }
    }

    #[test]
    fn split_by_identity() {
        let a = truncated(2, &["x"], &["x^2"], 3);
        let r = ModuleRep::regular(&a);
        let (im, ker) = r.split_by_idempotent(&Matrix::identity(a.field(), 2)).unwrap();
        assert_eq!((im.dim(), ker.dim()), (2, 0));
        let bad = Matrix::from_ints(a.field(), &[&[0, 1], &[0, 0]]);
        assert!(matches!(r.split_by_idempotent(&bad), Err(ModuleError::NotIdempotent)));
    }
}
