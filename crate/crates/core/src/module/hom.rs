//! Spaces of module homomorphisms.

use super::{projective_cover, ModuleError, ModuleRep};
use crate::linalg::Matrix;

/// Basis of `Hom_A(M, N)`; each map is a `dim N × dim M` matrix.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_i φ_i`.
    pub fn combination(&self, coeffs: &[crate::linalg::FieldElem], field: &crate::linalg::Field) -> Matrix {
        let terms: Vec<_> = coeffs.iter().copied().zip(self.basis.iter()).collect();
        Matrix::combination(field, self.target_dim, self.source_dim, &terms)
    }
}

/// `Hom(M, N)` from the linear system `φ ρ_M(g) = ρ_N(g) φ`.
pub fn hom_space_kronecker(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace, ModuleError> {
    m.check_same(n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let empty = HomSpace { source_dim: dm, target_dim: dn, basis: Vec::new() };
    if dm == 0 || dn == 0 {
        return Ok(empty);
    }
    let mut rows = Vec::new();
    for (a, b) in m.actions().iter().zip(n.actions()) {
        // row-major vec(φ): vec(φA) = (I ⊗ Aᵀ) vec φ, vec(Bφ) = (B ⊗ I) vec φ
        let block = Matrix::identity(f, dn).kronecker(&a.transpose()).sub(&b.kronecker(&Matrix::identity(f, dm)));
        rows.extend(block.row_vectors());
    }
    let system = Matrix::from_rows(f, dm * dn, &rows);
    let basis = if system.rows() == 0 {
        (0..dm * dn).map(|i| Matrix::unit(f, dn, dm, i / dm, i % dm)).collect()
    } else {
        system.null_space().into_iter().map(|v| Matrix::from_vec(f, dn, dm, v)).collect()
    };
    Ok(HomSpace { basis, ..empty })
}

/// `Hom(M, N)` via a projective presentation of `M` (local algebras): a map
/// is determined by images `n_j` of the cover generators, subject to
/// `Σ_j k_j·n_j = 0` for every `k` in the kernel of the cover.
fn hom_space_presented(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace, ModuleError> {
    let f = m.field();
    let cover = projective_cover(m)?;
    let (b, d, dn) = (cover.rank, m.algebra().dim(), n.dim());
    let gens = cover.kernel_generators()?;
    let mut system = Matrix::zeros(f, gens.len() * dn, b * dn);
    for (r, k) in gens.iter().enumerate() {
        for j in 0..b {
            let block = n.act(&k[j * d..(j + 1) * d]);
            for i in 0..dn {
                system.row_mut(r * dn + i)[j * dn..(j + 1) * dn].copy_from_slice(block.row(i));
            }
        }
    }
    let solutions: Vec<Vec<_>> = if system.rows() == 0 {
        (0..b * dn)
            .map(|i| {
                let mut v = vec![f.zero(); b * dn];
                v[i] = f.one();
                v
            })
            .collect()
    } else {
        system.null_space()
    };
    let basis = solutions
        .into_iter()
        .map(|sol| {
            let mut orbit_cols = Vec::with_capacity(b * d);
            for j in 0..b {
                orbit_cols.extend(n.orbit(&sol[j * dn..(j + 1) * dn]));
            }
            Matrix::from_columns(f, dn, &orbit_cols).mul(cover.section())
        })
        .collect();
    Ok(HomSpace { source_dim: m.dim(), target_dim: dn, basis })
}

/// Basis of `Hom_A(M, N)`. Uses a projective presentation of `M` for local
/// algebras and the Kronecker linearisation otherwise.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace, ModuleError> {
    m.check_same(n)?;
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(HomSpace { source_dim: m.dim(), target_dim: n.dim(), basis: Vec::new() });
    }
    if m.algebra().is_local() && m.dim() * n.dim() > 16 {
        hom_space_presented(m, n)
    } else {
        hom_space_kronecker(m, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::module::tests::truncated;

    fn m_lambda(a: &std::sync::Arc<crate::algebra::AlgebraTable>, lam: i64) -> ModuleRep {
        let f = a.field();
        ModuleRep::new(
            a.clone(),
            2,
            vec![Matrix::from_ints(f, &[&[0, lam], &[0, 0]]), Matrix::from_ints(f, &[&[0, 1], &[0, 0]])],
        )
        .unwrap()
    }

    fn span_of(h: &HomSpace) -> Subspace {
        let f = h.basis.first().map(|m| m.field().clone()).unwrap_or_else(|| crate::linalg::Field::prime(2).unwrap());
        let vs: Vec<_> = h.basis.iter().map(|m| m.data().to_vec()).collect();
        Subspace::span(&f, h.source_dim * h.target_dim, &vs)
    }

    #[test]
    fn family_hom_dimensions() {
        let a = truncated(3, &["x", "y"], &["x^3", "y^3", "xy-yx"], 6);
        let m1 = m_lambda(&a, 1);
        let m2 = m_lambda(&a, 2);
        assert_eq!(hom_space(&m1, &m1).unwrap().dim(), 2);
        assert_eq!(hom_space(&m1, &m2).unwrap().dim(), 1);
        assert_eq!(hom_space(&m1, &ModuleRep::zero(&a)).unwrap().dim(), 0);
    }

    #[test]
    fn both_routes_agree() {
        let a = truncated(2, &["x", "y"], &["x^2", "y^2", "xyxy-yxyx"], 8);
        let r = ModuleRep::regular(&a);
        let k = ModuleRep::new(a.clone(), 1, vec![Matrix::zeros(a.field(), 1, 1); 2]).unwrap();
        let s = r.direct_sum(&k).unwrap();
        for (x, y) in [(&r, &r), (&s, &r), (&r, &s), (&k, &s)] {
            let p = hom_space_presented(x, y).unwrap();
            let q = hom_space_kronecker(x, y).unwrap();
            assert_eq!(p.dim(), q.dim());
            assert_eq!(span_of(&p), span_of(&q));
        }
    }
}
