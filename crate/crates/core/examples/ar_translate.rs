//! Frobenius form, Nakayama automorphism and the two AR-translate routes.
use reptype::frobenius::{ar_translate_dtr, ar_translate_omega, find_frobenius_form};
use reptype::module::is_isomorphic_exact;
use reptype::repcert::{corpus_algebra, family_m};

fn main() {
    let a = corpus_algebra("qci_7").unwrap();
    let fd = find_frobenius_form(&a, 0, 64).unwrap();
    println!("{:?}", fd.summary());
    for l in 1..4 {
        let m = family_m(&a, a.field().from_int(l)).unwrap();
        let dtr = ar_translate_dtr(&m).unwrap();
        let om = ar_translate_omega(&m, &fd).unwrap();
        println!("λ={l}: dim τM = {}, DTr ≅ Ω²ν: {}", dtr.dim(), is_isomorphic_exact(&dtr, &om).unwrap().is_yes());
    }
}
