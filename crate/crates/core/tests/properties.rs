//! Randomised invariants.

use proptest::prelude::*;

use reptype::linalg::{Field, Matrix};
use reptype::module::{is_isomorphic_exact, ModuleRep};
use reptype::repcert::{corpus_algebra, corpus_names, family_member, trivial, FamilyKind};
use reptype::resolution::{complexity_estimate, minimal_resolution, periodicity_in, resolve, syzygy, IsoOptions};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)])
        .prop_map(|(p, e)| Field::extension(p, e).unwrap())
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (field_strategy(), 0usize..8, 0usize..8).prop_flat_map(|(f, r, c)| {
        let q = f.q();
        prop::collection::vec(0..q, r * c).prop_map(move |idx| {
            Matrix::from_vec(&f, r, c, idx.into_iter().map(|i| f.from_index(i).unwrap()).collect())
        })
    })
}

/// Small modules: trivial modules and family members on a few corpus algebras.
fn module_strategy() -> impl Strategy<Value = ModuleRep> {
    (prop::sample::select(vec!["kleinfour", "dihedral8", "elab_3_2", "nfam_host", "qci_7"]), 0u32..3, 0u32..7).prop_map(
        |(name, which, l)| {
            let a = corpus_algebra(name).unwrap();
            let l = a.field().from_index(l % a.field().q()).unwrap();
            let kind = if which == 1 { FamilyKind::M } else { FamilyKind::N };
            if which == 0 {
                return trivial(&a).unwrap();
            }
            family_member(&a, kind, l)
                .or_else(|_| family_member(&a, FamilyKind::M, l))
                .unwrap_or_else(|_| trivial(&a).unwrap())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(m in matrix_strategy()) {
        let k = m.null_space();
        prop_assert_eq!(m.rank() + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_round_trip(m in matrix_strategy()) {
        if m.is_square() {
            if let Some(inv) = m.inverse() {
                prop_assert!(m.mul(&inv).is_identity());
            } else {
                prop_assert!(m.rank() < m.rows());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn syzygy_recurrence(m in module_strategy()) {
        let t = minimal_resolution(&m, 8).unwrap();
        prop_assert!(t.check_recurrence());
    }

    #[test]
    fn omega_of_projective_vanishes(name in prop::sample::select(corpus_names()), b in 1usize..3) {
        let a = corpus_algebra(name).unwrap();
        prop_assume!(a.dim() * b <= 32);
        prop_assert_eq!(syzygy(&ModuleRep::free(&a, b)).unwrap().dim(), 0);
    }

    #[test]
    fn omega_additive(m in module_strategy(), n in module_strategy()) {
        prop_assume!(m.same_algebra(&n));
        let s = syzygy(&m.direct_sum(&n).unwrap()).unwrap();
        let t = syzygy(&m).unwrap().direct_sum(&syzygy(&n).unwrap()).unwrap();
        prop_assert!(is_isomorphic_exact(&s, &t).unwrap().is_yes());
    }

    #[test]
    fn c_hat_of_sum_is_max(m in module_strategy(), n in module_strategy()) {
        prop_assume!(m.same_algebra(&n));
        let c = |x: &ModuleRep| {
            let res = resolve(x, 12).unwrap();
            let p = periodicity_in(&res, 6, IsoOptions::default()).unwrap();
            complexity_estimate(&res.table, Some(&p)).unwrap().c_hat
        };
        prop_assert_eq!(c(&m.direct_sum(&n).unwrap()), c(&m).max(c(&n)));
    }
}

#[test]
fn corpus_algebras_are_associative() {
    for name in corpus_names() {
        let a = corpus_algebra(name).unwrap();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let l = a.mul(a.product(i, j), &a.basis_vector(k));
                    let r = a.mul(&a.basis_vector(i), a.product(j, k));
                    assert_eq!(l, r, "{name}: b{i} b{j} b{k}");
                }
            }
        }
    }
}
