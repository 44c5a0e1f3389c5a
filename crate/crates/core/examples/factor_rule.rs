//! Lifting wildness from a quotient, then re-verifying the trail.
use reptype::linalg::Field;
use reptype::repcert::{
    certify_factor_rule, certify_family, corpus_algebra, quotient_by, verify_trail, FamilyKind, ScanOptions,
};

fn main() {
    let known_alg = corpus_algebra("elab_3_2").unwrap();
    let fields = [Field::prime(3).unwrap(), Field::extension(3, 2).unwrap()];
    let (_, known) = certify_family(&known_alg, FamilyKind::M, &fields, &ScanOptions::default()).unwrap();
    let ideal = vec!["xy-yx".to_string()];
    for name in ["c5_3", "c6_3"] {
        let a = corpus_algebra(name).unwrap();
        let q = quotient_by(&a, &ideal).unwrap();
        println!("{name}: dim {}, quotient dim {}", a.dim(), q.dim());
        let cert = certify_factor_rule(&a, &ideal, &known).unwrap();
        let trail = verify_trail(&cert, &|n: &str| corpus_algebra(n));
        println!("  {:?}; trail {}/{} ok", cert.verdict, trail.iter().filter(|t| t.ok).count(), trail.len());
    }
}
