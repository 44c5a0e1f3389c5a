//! Modules from files, Hom, indecomposability and isomorphism.
use reptype::module::io::parse_module;
use reptype::module::{decompose, hom_space, is_indecomposable, is_isomorphic};
use reptype::repcert::{corpus_algebra, family_m};

fn main() {
    let a = corpus_algebra("elab_3_2").unwrap();
    let f = a.field().clone();
    let m1 = family_m(&a, f.from_int(1)).unwrap();
    let m2 = family_m(&a, f.from_int(2)).unwrap();
    println!("dim Hom(M_1, M_2) = {}", hom_space(&m1, &m2).unwrap().dim());
    println!("M_1 is {:?}", is_indecomposable(&m1).unwrap());
    println!("M_1 ≅ M_2: {:?}", is_isomorphic(&m1, &m2, 0, 16).unwrap().is_yes());

    let sum = m1.direct_sum(&m2).unwrap();
    let parts: Vec<usize> = decompose(&sum).unwrap().iter().map(|s| s.module.dim()).collect();
    println!("M_1 ⊕ M_2 splits into summands of dims {parts:?}");

    let file = r#"{"dim": 2, "actions": {"x": [[0, 1], [0, 0]], "y": [[0, 2], [0, 0]]}}"#;
    let m = parse_module(file, &a).unwrap();
    println!("module from JSON ≅ M_2: {}", is_isomorphic(&m, &m2, 0, 16).unwrap().is_yes());
}
