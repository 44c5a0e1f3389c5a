//! Projective covers over local algebras.

use std::sync::Arc;

use super::{ModuleError, ModuleRep};
use crate::algebra::AlgebraTable;
use crate::linalg::{FieldElem, Matrix, Subspace};

/// `π: A^b → M` with `b = dim top(M)`.
#[derive(Debug, Clone)]
pub struct Cover {
    pub rank: usize,
    pub algebra: Arc<AlgebraTable>,
    /// Vectors of `M` lifting a basis of the top; `π(1·e_j) = top_lifts[j]`.
    pub top_lifts: Vec<Vec<FieldElem>>,
    /// `dim M × (b·dim A)`; column `j·d + i` is `b_i · top_lifts[j]`.
    pub epi: Matrix,
    /// `ker π ⊆ A^b`, with coordinates read off its free columns.
    pub kernel: Subspace,
    section: Matrix,
    generator_left: Vec<Matrix>,
}

impl Cover {
    /// `A^b` as a module.
    pub fn free_module(&self) -> ModuleRep {
        ModuleRep::free(&self.algebra, self.rank)
    }

    /// Generator `g` acting on `A^b`, block by block.
    pub fn apply_free(&self, g: usize, v: &[FieldElem]) -> Vec<FieldElem> {
        let d = self.algebra.dim();
        let mut out = Vec::with_capacity(v.len());
        for block in v.chunks(d) {
            out.extend(self.generator_left[g].mul_vec(block));
        }
        out
    }

    /// `Ω(M) = ker π` in the kernel basis.
    pub fn syzygy(&self) -> ModuleRep {
        let f = self.algebra.field();
        let basis = self.kernel.basis_vectors();
        let actions = (0..self.generator_left.len())
            .map(|g| {
                let cols: Vec<Vec<FieldElem>> =
                    basis.iter().map(|v| self.kernel.coords_unchecked(&self.apply_free(g, v))).collect();
                Matrix::from_columns(f, basis.len(), &cols)
            })
            .collect();
        ModuleRep::from_actions(self.algebra.clone(), basis.len(), actions)
    }

    /// A linear right inverse of `π`.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Vectors of `ker π` lifting a basis of `top(Ω(M))`: a minimal
    /// generating set of the kernel.
    pub fn kernel_generators(&self) -> Result<Vec<Vec<FieldElem>>, ModuleError> {
        let omega = self.syzygy();
        let rad = omega.radical_submodule()?;
        Ok(rad.complement_indices().into_iter().map(|c| self.kernel.basis().row(c).to_vec()).collect())
    }

    /// Minimality: `ker π ⊆ rad(A)·A^b`.
    pub fn is_minimal(&self) -> bool {
        let d = self.algebra.dim();
        self.kernel
            .basis_vectors()
            .iter()
            .all(|v| v.chunks(d).all(|block| self.algebra.augmentation(block).map(|c| c.is_zero()).unwrap_or(false)))
    }
}

/// Projective cover of a module over a local algebra.
pub fn projective_cover(m: &ModuleRep) -> Result<Cover, ModuleError> {
    let alg = m.algebra();
    let f = m.field();
    let d = alg.dim();
    let rad = m.radical_submodule()?;
    let lifts: Vec<Vec<FieldElem>> = rad
        .complement_indices()
        .into_iter()
        .map(|c| {
            let mut v = vec![f.zero(); m.dim()];
            v[c] = f.one();
            v
        })
        .collect();
    let b = lifts.len();
    let mut columns = Vec::with_capacity(b * d);
    for v in &lifts {
        columns.extend(m.orbit(v));
    }
    let epi = Matrix::from_columns(f, m.dim(), &columns);
    let kernel = Subspace::kernel_of(&epi);
    let (_, pivots) = epi.rref();
    debug_assert_eq!(pivots.len(), m.dim(), "cover map must be onto");
    let square = Matrix::from_columns(f, m.dim(), &pivots.iter().map(|&p| epi.column(p)).collect::<Vec<_>>());
    let inv = square.inverse().expect("pivot columns are independent");
    let mut section = Matrix::zeros(f, b * d, m.dim());
    for (r, &p) in pivots.iter().enumerate() {
        section.row_mut(p).copy_from_slice(inv.row(r));
    }
    let generator_left = alg.generators().iter().map(|g| alg.left_matrix(&g.element)).collect();
    Ok(Cover { rank: b, algebra: alg.clone(), top_lifts: lifts, epi, kernel, section, generator_left })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::tests::truncated;

    #[test]
    fn cover_of_simple_is_augmentation() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let k = ModuleRep::new(a.clone(), 1, vec![Matrix::zeros(a.field(), 1, 1); 2]).unwrap();
        let c = projective_cover(&k).unwrap();
        assert_eq!(c.rank, 1);
        assert_eq!(c.kernel.dim(), 3);
        assert!(c.is_minimal());
        let omega = c.syzygy();
        assert!(omega.check_relations());
        assert_eq!(c.kernel_generators().unwrap().len(), 2);
        assert_eq!(c.epi.mul(c.section()), Matrix::identity(a.field(), 1));
    }

    #[test]
    fn cover_of_projective_has_zero_kernel() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xy-yx"], 4);
        let c = projective_cover(&ModuleRep::free(&a, 2)).unwrap();
        assert_eq!(c.rank, 2);
        assert_eq!(c.kernel.dim(), 0);
    }
}
